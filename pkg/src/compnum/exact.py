"""Exact competition numbers for small graphs by exhaustive search.

The search builds the acyclic digraph bottom-up.  The ``k`` added isolated
vertices sit at the bottom of the order and each receives a clique of the
graph as in-neighbourhood; every graph vertex, once all its edges are
covered, is placed next and receives a clique drawn from the vertices still
above it.  Only maximal cliques need to be tried, and a vertex whose edges
are already covered can always be placed immediately, which removes the
order enumeration from the branching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .errors import BudgetExhausted
from .graph import Digraph, Graph, fresh_vertex


@dataclass(frozen=True)
class SolveBudget:
    max_k: Optional[int] = None  # None: the number of edges, which always suffices
    node_limit: int = 5_000_000
    time_hint: float = 60.0

    def __post_init__(self):
        if self.max_k is not None and self.max_k < 0:
            raise ValueError("max_k must be >= 0")
        if self.node_limit <= 0:
            raise ValueError("node_limit must be > 0")


DEFAULT_BUDGET = SolveBudget()


def _fresh_names(g: Graph, k: int, avoid: Iterable[str] = ()) -> list[str]:
    taken = set(g.vertices) | set(avoid)
    names = []
    for _ in range(k):
        z = fresh_vertex(taken)
        names.append(z)
        taken.add(z)
    return names


def feasible(g: Graph, k: int, budget: SolveBudget = DEFAULT_BUDGET,
             avoid: Iterable[str] = ()) -> Optional[tuple[Digraph, tuple]]:
    """Witness ``(digraph, isolated)`` if ``g`` plus ``k`` isolated vertices is
    the competition graph of an acyclic digraph, else ``None``.

    Raises :class:`BudgetExhausted` when the node limit is hit first.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    order, adj = g.bitmask_adjacency()
    status, placements, free, _ = kernels.competition_search(adj, k, budget.node_limit)
    if status == kernels.EXHAUSTED:
        raise BudgetExhausted(f"node limit {budget.node_limit} reached at k={k}")
    if status == kernels.INFEASIBLE:
        return None
    isolated = _fresh_names(g, k, avoid)
    arcs = []
    for (x, clique) in placements:
        arcs.extend((order[i], order[x]) for i in _members(clique))
    for z, clique in zip(isolated, free):
        arcs.extend((order[i], z) for i in _members(clique))
    return Digraph(list(g.vertices) + isolated, arcs), tuple(isolated)


def _members(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def exact_k(g: Graph, budget: SolveBudget = DEFAULT_BUDGET,
            avoid: Iterable[str] = ()) -> tuple[int, Digraph, tuple]:
    """Least ``k`` with :func:`feasible` true, with its witness."""
    top = g.num_edges() if budget.max_k is None else budget.max_k
    for k in range(top + 1):
        hit = feasible(g, k, budget, avoid)
        if hit is not None:
            return k, hit[0], hit[1]
    raise BudgetExhausted(f"no witness with k <= {top}")

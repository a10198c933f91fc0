"""Explicit acyclic digraphs for graphs with at most two holes.

The driver :func:`certify` splits a graph into a part with fewer holes and a
chordal part glued along a clique, certifies the first part recursively,
builds a digraph for the chordal part in which the clique vertices are never
prey, and takes the union of the two digraphs.  Each union costs one extra
isolated vertex.  Every structural claim the decomposition relies on is
re-checked on the concrete graph; when one fails, that subproblem is handed
to the exact solver instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .certificate import Certificate, DerivationNode
from .errors import GraphError, NotChordalError, StructuralViolation
from .exact import DEFAULT_BUDGET, SolveBudget, exact_k
from .graph import Digraph, Edge, Graph, fresh_vertex
from .holes import (
    DEFAULT_CAP,
    Hole,
    c_avoiding_path,
    enumerate_holes,
    is_chordal,
    is_hole,
    is_peo,
    mcs_elimination_order,
    shared_edge_path,
    x_set,
)
from .verifier import verify_certificate

log = logging.getLogger(__name__)


# -- chordal pieces ------------------------------------------------------------

def chordal_witness(g: Graph, clique: Iterable[str] = (), avoid: Iterable[str] = ()):
    """Acyclic digraph whose competition graph is ``g`` plus one new vertex.

    The vertices of ``clique`` receive no arcs.  Returns ``(digraph, a)``
    where ``a`` is the added isolated vertex.
    """
    clique = frozenset(clique)
    if not clique <= g.vertices:
        raise GraphError(f"clique vertices not in graph: {sorted(clique - g.vertices)}")
    if not g.is_clique(clique):
        raise GraphError("given vertex set is not a clique")
    order = mcs_elimination_order(g, prefer=clique)
    if not is_peo(g, order):
        raise NotChordalError("graph is not chordal")
    n = len(order)
    first_x = n - len(clique)
    if set(order[first_x:]) != clique:
        raise AssertionError("clique did not land at the end of the elimination order")
    a = fresh_vertex(g.vertices, avoid)
    pos = {v: i for i, v in enumerate(order)}
    arcs = []
    for i, v in enumerate(order):
        later = [w for w in g.neighbors(v) if pos[w] > i]
        if i > 0 and (not later or (clique and i > first_x)):
            continue
        prey = a if i == 0 else order[i - 1]
        arcs.extend((w, prey) for w in [v] + later)
    return Digraph(list(g.vertices) + [a], arcs), a


def compose(d1: Digraph, isolated1: Iterable[str], d2: Digraph, a: str,
            cut: Iterable[str]) -> Digraph:
    """Union of a certificate digraph ``d1`` and a chordal witness ``d2``
    glued along ``cut``, whose vertices must have no in-arcs in ``d2``."""
    isolated1 = frozenset(isolated1)
    cut = frozenset(cut)
    if isolated1 & d2.vertices:
        raise GraphError("isolated vertices of the first digraph reappear in the second")
    if a in d1.vertices:
        raise GraphError(f"added vertex {a} already in the first digraph")
    overlap = (d1.vertices - isolated1) & (d2.vertices - {a})
    if overlap != cut:
        raise GraphError(f"digraphs overlap in {sorted(overlap)}, expected {sorted(cut)}")
    for x in cut:
        if d2.in_degree(x):
            raise GraphError(f"cut vertex {x} has in-arcs in the chordal witness")
    return d1.union(d2)


# -- decompositions ------------------------------------------------------------

def find_removable_edge(g: Graph, c) -> Optional[Edge]:
    """Least hole edge ``uv`` with no C-avoiding ``u``-``v`` path."""
    hole = c if isinstance(c, Hole) else Hole.from_sequence(c)
    for e in sorted(hole.edges()):
        if c_avoiding_path(g, hole, e.u, e.v) is None:
            return e
    return None


@dataclass
class CutSplit:
    g1: Graph
    g2: Graph
    cut: frozenset
    j: int
    ear: str
    component: frozenset
    labeling: tuple
    shared_len: int = 0
    g1_holes: int = -1


def _orient(c: Hole, start: str, second: str) -> tuple:
    seq = list(c.cycle)
    i = seq.index(start)
    seq = seq[i:] + seq[:i]
    if seq[1] != second:
        seq = [seq[0]] + seq[:0:-1]
    if seq[1] != second:
        raise StructuralViolation("labeling", f"{start}-{second} is not a hole edge")
    return tuple(seq)


def _cut_split(g: Graph, hole: Hole, seq: tuple, j: int) -> CutSplit:
    m = len(seq)
    vj, vj1 = seq[j % m], seq[(j + 1) % m]
    ear_path = c_avoiding_path(g, hole, vj, vj1)
    if ear_path is None:
        raise StructuralViolation("ear", f"no avoiding path for {vj}-{vj1}")
    if len(ear_path) != 3:
        raise StructuralViolation("ear_length", f"shortest avoiding path {ear_path}")
    ear = ear_path[1]
    cut = x_set(g, hole) | {vj, vj1}
    remaining = g.remove_vertices(cut)
    anchor = seq[(j + 2) % m]
    comp = next(set(cc) for cc in remaining.connected_components() if anchor in cc)
    if not (hole.vertices - {vj, vj1}) <= comp:
        raise StructuralViolation("cut_component", "hole remainder split by the cut")
    if ear in comp:
        raise StructuralViolation("vertex_cut", f"ear {ear} not separated by the cut")
    comp = frozenset(comp)
    g2 = g.induced_subgraph(g.vertices - comp)
    if not is_chordal(g2):
        raise StructuralViolation("g2_chordal", "chordal side has a hole")
    if not g2.is_clique(cut):
        raise StructuralViolation("cut_clique", "cut is not a clique")
    g1 = g.induced_subgraph(comp | cut).remove_edge(vj, vj1)
    if g1.vertices & g2.vertices != cut:
        raise StructuralViolation("intersection", "pieces overlap outside the cut")
    if g1.edge_set() | g2.edge_set() != g.edge_set():
        raise StructuralViolation("edge_union", "pieces do not cover every edge")
    return CutSplit(g1, g2, frozenset(cut), j % m, ear, comp, seq)


def avoid2_decompose(g: Graph, c1, c2) -> CutSplit:
    """Split a two-hole graph whose holes share edges and whose first hole
    has an avoiding path along every edge.

    ``g1`` keeps at most one hole, ``g2`` is chordal, and they meet in the
    X set of ``c1`` plus one hole edge.  Every such property is checked and
    a :class:`StructuralViolation` names the first one that fails.

    ``g1`` usually has exactly one hole, but when the holes share two or
    more edges the removed edge lies on both and ``g1`` can be chordal;
    ``split.g1_holes`` records which.
    """
    c1 = c1 if isinstance(c1, Hole) else Hole.from_sequence(c1)
    c2 = c2 if isinstance(c2, Hole) else Hole.from_sequence(c2)
    if not (is_hole(g, c1.cycle) and is_hole(g, c2.cycle)):
        raise StructuralViolation("precondition", "arguments are not holes of the graph")
    holes, capped = enumerate_holes(g, 2)
    if capped or set(holes) != {c1, c2}:
        raise StructuralViolation("precondition", "graph does not have exactly these two holes")
    path, shared_len = shared_edge_path(c1, c2, g)
    if path is None:
        raise StructuralViolation("precondition", "holes share no edge")
    seq = _orient(c1, path[0], path[1])
    if seq[:shared_len + 1] != path:
        raise StructuralViolation("labeling", "shared path is not an arc of the first hole")
    for i in range(len(seq)):
        if c_avoiding_path(g, c1, seq[i], seq[(i + 1) % len(seq)]) is None:
            raise StructuralViolation(
                "precondition", f"edge {seq[i]}-{seq[(i + 1) % len(seq)]} has no avoiding path")
    j = 2 if shared_len == 1 else 0
    split = _cut_split(g, c1, seq, j)
    split.shared_len = shared_len
    if split.ear in c2.vertices:
        raise StructuralViolation("ear_off_second_hole", f"ear {split.ear} lies on the second hole")
    h1, capped = enumerate_holes(split.g1, 2)
    if capped or len(h1) > 1:
        raise StructuralViolation("g1_one_hole", f"first piece has {len(h1)} holes")
    split.g1_holes = len(h1)
    return split


def one_hole_decompose(g: Graph, c, max_holes: int = 0) -> CutSplit:
    """Cut split around some edge of ``c`` leaving at most ``max_holes``
    holes in ``g1``; edges are tried in hole order."""
    hole = c if isinstance(c, Hole) else Hole.from_sequence(c)
    seq = hole.cycle
    last = None
    for j in range(len(seq)):
        try:
            split = _cut_split(g, hole, seq, j)
        except StructuralViolation as exc:
            last = exc
            continue
        h1, capped = enumerate_holes(split.g1, max(1, max_holes))
        if capped or len(h1) > max_holes:
            last = StructuralViolation("g1_holes", f"first piece has {len(h1)} holes")
            continue
        split.g1_holes = len(h1)
        return split
    raise last or StructuralViolation("cut", "no edge admits a cut split")


# -- driver -------------------------------------------------------------------

class _Names:
    """Fresh-vertex bookkeeping shared by one certification run."""

    def __init__(self, taken: Iterable[str]):
        self.taken = set(taken)


def _join(vs) -> str:
    return ",".join(sorted(vs))


def _chordal(g: Graph, names: _Names):
    if g.num_edges() == 0:
        return Digraph(g.vertices), (), DerivationNode("Chordal", {"edgeless": "1"}), False
    d, a = chordal_witness(g, (), avoid=names.taken)
    names.taken.add(a)
    return d, (a,), DerivationNode("Chordal", {"clique": "", "prey": a}), False


def _glue(sub, g2: Graph, cut, names: _Names):
    d1, iso1, node1, fb1 = sub
    d2, a = chordal_witness(g2, cut, avoid=names.taken | d1.vertices)
    names.taken.add(a)
    d = compose(d1, iso1, d2, a, cut)
    node = DerivationNode("Compose", {"cut": _join(cut), "prey": a},
                          [node1, DerivationNode("Chordal", {"clique": _join(cut), "prey": a})])
    return d, tuple(iso1) + (a,), node, fb1


def _edge_split(g, hole, e, names, budget, max_holes):
    g1 = g.remove_edge(e.u, e.v)
    h1, capped = enumerate_holes(g1, max(1, max_holes))
    if capped or len(h1) > max_holes:
        raise StructuralViolation("edge_split_holes", f"{len(h1)} holes remain after removing {e}")
    sub = _certify(g1, names, budget)
    d, iso, inner, fb = _glue(sub, Graph((), [e]), (e.u, e.v), names)
    node = DerivationNode("EdgeSplit", {"edge": str(e), "hole": ",".join(hole.cycle)}, [inner])
    return d, iso, node, fb


def _cut(g, hole, split: CutSplit, names, budget):
    sub = _certify(split.g1, names, budget)
    d, iso, inner, fb = _glue(sub, split.g2, split.cut, names)
    data = {
        "hole": ",".join(split.labeling),
        "j": str(split.j),
        "shared_len": str(split.shared_len),
        "ear": split.ear,
        "cut": _join(split.cut),
        "component": _join(split.component),
    }
    return d, iso, DerivationNode("CutSplit", data, [inner]), fb


def _fallback(g: Graph, names: _Names, budget: SolveBudget, reason: str):
    log.info("exact fallback on %r: %s", g, reason)
    k, d, iso = exact_k(g, budget, avoid=names.taken)
    names.taken.update(iso)
    return d, iso, DerivationNode("ExactFallback", {"k": str(k), "reason": reason}), True


def _one_hole(g, hole, names, budget):
    e = find_removable_edge(g, hole)
    if e is not None:
        return _edge_split(g, hole, e, names, budget, max_holes=0)
    return _cut(g, hole, one_hole_decompose(g, hole, max_holes=0), names, budget)


def _two_holes(g, holes, names, budget):
    c1, c2 = sorted(holes, key=len, reverse=True)
    path, _ = shared_edge_path(c1, c2, g)
    if path is None:
        for c in (c1, c2):
            e = find_removable_edge(g, c)
            if e is not None:
                return _edge_split(g, c, e, names, budget, max_holes=1)
        for c in (c1, c2):
            try:
                split = one_hole_decompose(g, c, max_holes=1)
            except StructuralViolation:
                continue
            return _cut(g, c, split, names, budget)
        raise StructuralViolation("disjoint_holes", "no removable edge or cut on either hole")
    e = find_removable_edge(g, c1)
    if e is not None:
        return _edge_split(g, c1, e, names, budget, max_holes=1)
    return _cut(g, c1, avoid2_decompose(g, c1, c2), names, budget)


def _certify(g: Graph, names: _Names, budget: SolveBudget):
    holes, capped = enumerate_holes(g, DEFAULT_CAP)
    if capped or len(holes) > 2:
        return _fallback(g, names, budget, "more_than_two_holes")
    snapshot = set(names.taken)
    try:
        if not holes:
            return _chordal(g, names)
        if len(holes) == 1:
            return _one_hole(g, holes[0], names, budget)
        return _two_holes(g, holes, names, budget)
    except StructuralViolation as exc:
        names.taken = snapshot
        return _fallback(g, names, budget, exc.clause)


def certify(g: Graph, budget: SolveBudget = DEFAULT_BUDGET) -> Certificate:
    """Certificate that the competition number of ``g`` is at most its ``k``.

    Raises :class:`~compnum.errors.BudgetExhausted` if an exact fallback
    runs out of budget.
    """
    names = _Names(g.vertices)
    d, iso, node, fallback = _certify(g, names, budget)
    cert = Certificate(target=g, k=len(iso), digraph=d, isolated=tuple(iso),
                       derivation=node, fallback_used=fallback)
    verdict = verify_certificate(g, cert)
    if not verdict:
        raise AssertionError(f"constructed certificate rejected: {verdict.message}")
    return cert

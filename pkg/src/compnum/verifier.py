"""Independent certificate checking.

Nothing here imports the construction code: the competition graph is
recomputed from the arcs, acyclicity is checked by Kahn's algorithm, and the
result is compared with the target as labelled graphs.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .certificate import Certificate
from .graph import Digraph, Graph


def competition_graph(d: Digraph) -> Graph:
    """Edge xy iff x and y share an out-neighbour (prey) in ``d``."""
    preds = defaultdict(list)
    for x, y in d.arcs:
        preds[y].append(x)
    edges = []
    for prey in preds.values():
        edges.extend(combinations(sorted(prey), 2))
    return Graph(d.vertices, edges)


def competition_graph_pairwise(d: Digraph) -> Graph:
    """Same as :func:`competition_graph` by scanning every pair and prey."""
    out = {v: set() for v in d.vertices}
    for x, y in d.arcs:
        out[x].add(y)
    vs = sorted(d.vertices)
    edges = []
    for i, x in enumerate(vs):
        for y in vs[i + 1:]:
            for v in vs:
                if v in out[x] and v in out[y]:
                    edges.append((x, y))
                    break
    return Graph(vs, edges)


def is_acyclic(d: Digraph) -> Optional[list]:
    """A topological order (least-identifier first among ready vertices),
    or ``None`` if ``d`` has a directed cycle."""
    order, _ = topological_order(d)
    return order


def topological_order(d: Digraph) -> tuple[Optional[list], Optional[list]]:
    """``(order, None)`` if acyclic, else ``(None, cycle)``."""
    indeg = {v: 0 for v in d.vertices}
    succ = defaultdict(list)
    for x, y in d.arcs:
        indeg[y] += 1
        succ[x].append(y)
    ready = [v for v, k in indeg.items() if k == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) == len(indeg):
        return order, None
    # every leftover vertex has a leftover predecessor; walk back until a repeat
    left = {v for v, k in indeg.items() if k > 0}
    pred = {}
    for x, y in d.arcs:
        if x in left and y in left:
            pred.setdefault(y, x)
    v = min(left)
    seen = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = pred[v]
    cycle = walk[seen[v]:]
    cycle.reverse()
    return None, cycle


@dataclass
class Verdict:
    accepted: bool
    clause: Optional[int] = None
    message: str = ""

    def __bool__(self):
        return self.accepted


def verify_certificate(g: Graph, cert: Certificate) -> Verdict:
    """Check that ``cert`` proves the competition number of ``g`` is at most ``cert.k``.

    Clauses: (1) vertex sets and isolated count, (2) acyclicity,
    (3) competition graph equals ``g`` plus the isolated vertices.
    """
    d = cert.digraph
    iso = set(cert.isolated)
    if len(iso) != len(cert.isolated):
        return Verdict(False, 1, "isolated vertices listed twice")
    if len(iso) != cert.k:
        return Verdict(False, 1, f"k={cert.k} but {len(iso)} isolated vertices listed")
    clash = iso & g.vertices
    if clash:
        return Verdict(False, 1, f"isolated vertex {min(clash)} is a graph vertex")
    want = g.vertices | iso
    if d.vertices != want:
        extra = d.vertices - want
        if extra:
            return Verdict(False, 1, f"digraph has unexpected vertex {min(extra)}")
        return Verdict(False, 1, f"digraph lacks vertex {min(want - d.vertices)}")
    order, cycle = topological_order(d)
    if order is None:
        return Verdict(False, 2, "directed cycle " + " > ".join(cycle + cycle[:1]))
    comp = competition_graph(d)
    target = g.with_isolated(iso)
    extra = comp.edge_set() - target.edge_set()
    if extra:
        e = min(extra)
        return Verdict(False, 3, f"extra edge {e.u} {e.v}")
    missing = target.edge_set() - comp.edge_set()
    if missing:
        e = min(missing)
        return Verdict(False, 3, f"missing edge {e.u} {e.v}")
    return Verdict(True)

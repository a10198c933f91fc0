"""Slow reference implementations used to pin expected values.

Nothing here calls the package's algorithms; graphs are read only through
their vertex and edge lists.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _adj(vertices, edges):
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def holes_by_subsets(vertices, edges):
    """Every vertex set of size >= 4 inducing a connected 2-regular graph,
    returned as a set of frozensets."""
    adj = _adj(vertices, edges)
    vs = sorted(vertices)
    found = set()
    for r in range(4, len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            s = set(sub)
            if any(len(adj[v] & s) != 2 for v in sub):
                continue
            # connected?
            seen, stack = {sub[0]}, [sub[0]]
            while stack:
                x = stack.pop()
                for y in adj[x] & s:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen == s:
                found.add(frozenset(sub))
    return found


def competition_edges_double_loop(vertices, arcs):
    """Edge set of the competition graph by checking every pair against every vertex."""
    vs = sorted(vertices)
    arcset = set(arcs)
    out = set()
    for x, y in itertools.combinations(vs, 2):
        if any((x, w) in arcset and (y, w) in arcset for w in vs):
            out.add(frozenset((x, y)))
    return out


def _cliques(adj, pool):
    """Maximal cliques of the subgraph induced by ``pool``, by subset scan."""
    pool = sorted(pool)
    cl = []
    for r in range(len(pool), 0, -1):
        for sub in itertools.combinations(pool, r):
            if all(b in adj[a] for a, b in itertools.combinations(sub, 2)):
                s = frozenset(sub)
                if not any(s < c for c in cl):
                    cl.append(s)
    return cl


def _pairs(clique):
    return frozenset(frozenset(p) for p in itertools.combinations(sorted(clique), 2))


def brute_competition_number(vertices, edges, k_max=6):
    """Least k such that the graph plus k isolated vertices is the competition
    graph of an acyclic digraph.

    Uses the order characterisation directly: for some ordering of the
    graph's vertices, every vertex takes as in-neighbours a clique of
    vertices later in the order, each added isolated vertex takes any
    clique, and together the cliques cover every edge.
    """
    adj = _adj(vertices, edges)
    target = frozenset(frozenset(e) for e in edges)
    if not target:
        return 0
    whole = [_pairs(c) & target for c in _cliques(adj, vertices)]

    @lru_cache(maxsize=None)
    def cover_number(left):
        # fewest cliques of the graph covering the edge set ``left``
        if not left:
            return 0
        e = min(left, key=sorted)
        return 1 + min(cover_number(left - c) for c in whole if e in c)

    choices_cache = {}

    def choices(above):
        key = frozenset(above)
        if key not in choices_cache:
            choices_cache[key] = [_pairs(c) for c in _cliques(adj, key)] or [frozenset()]
        return choices_cache[key]

    best = None
    for order in itertools.permutations(sorted(vertices)):
        def walk(t, left):
            if t == len(order):
                return cover_number(left)
            return min(walk(t + 1, left - c) for c in choices(order[t + 1:]))
        k = walk(0, target)
        if best is None or k < best:
            best = k
            if best == 0:
                break
    if best > k_max:
        raise ValueError(f"competition number above {k_max}")
    return best

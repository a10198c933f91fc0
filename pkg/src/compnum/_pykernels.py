"""Pure-Python bitmask kernels.

Vertices are ``0..n-1`` and ``adj[i]`` is the neighbourhood bitmask of ``i``.
The compiled module ``_ckernels`` exposes the same functions with the same
results; this module is used when it is unavailable or the input does not
fit in 64-bit masks.
"""

FEASIBLE = 1
INFEASIBLE = 0
EXHAUSTED = -1


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def chordless_cycles(adj, cap):
    """Up to ``cap + 1`` chordless cycles of length >= 4, lexicographically.

    Each cycle starts at its least vertex and continues towards the lesser
    of that vertex's two cycle neighbours.
    """
    n = len(adj)
    out = []
    limit = cap + 1

    def extend(s, path, blocked, higher):
        last = path[-1]
        cands = adj[last] & higher & ~blocked
        for w in _bits(cands):
            if (adj[w] >> s) & 1:
                if len(path) >= 3 and path[1] < w:
                    out.append(tuple(path) + (w,))
                    if len(out) >= limit:
                        return True
                continue
            # ``last`` becomes an interior vertex once ``w`` is appended
            nb = blocked | (1 << w) | adj[last]
            path.append(w)
            if extend(s, path, nb, higher):
                return True
            path.pop()
        return False

    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)
        for p1 in _bits(adj[s] & higher):
            blocked = (1 << s) | (1 << p1)
            if extend(s, [s, p1], blocked, higher):
                return out
    return out


def maximal_cliques(adj):
    """Maximal cliques as bitmasks (Bron-Kerbosch with pivoting), sorted."""
    n = len(adj)
    found = []

    def bk(r, p, x):
        if not p and not x:
            found.append(r)
            return
        pu = p | x
        # pivot with most neighbours in p
        best, pivot = -1, 0
        for u in _bits(pu):
            c = bin(adj[u] & p).count("1")
            if c > best:
                best, pivot = c, u
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            bk(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if n:
        bk(0, (1 << n) - 1, 0)
    return sorted(found)


def competition_search(adj, k, node_limit):
    """Decide whether the graph plus ``k`` isolated vertices is a competition
    graph of an acyclic digraph.

    Returns ``(status, placements, free, nodes)``.  On success ``placements``
    lists ``(vertex, clique_mask)`` from the bottom of the order upwards (the
    clique is the in-neighbourhood of that vertex) and ``free`` lists the
    clique masks assigned to the isolated vertices.
    """
    n = len(adj)
    eidx = [[-1] * n for _ in range(n)]
    inc = [0] * n
    m = 0
    for i in range(n):
        for j in _bits(adj[i] >> (i + 1) << (i + 1)):
            eidx[i][j] = eidx[j][i] = m
            inc[i] |= 1 << m
            inc[j] |= 1 << m
            m += 1
    full = (1 << m) - 1
    if m == 0:
        return FEASIBLE, [], [], 0

    cliques = maximal_cliques(adj)

    def edge_mask(c):
        em = 0
        vs = list(_bits(c))
        for a in range(len(vs)):
            row = eidx[vs[a]]
            for b in range(a + 1, len(vs)):
                em |= 1 << row[vs[b]]
        return em

    max_cover = max(bin(edge_mask(c)).count("1") for c in cliques)

    def options(avail, uncovered):
        seen = {}
        for c in cliques:
            sub = c & avail
            if sub & (sub - 1) == 0:
                continue
            cov = edge_mask(sub) & uncovered
            if cov and cov not in seen:
                seen[cov] = sub
        covs = list(seen)
        keep = [c for c in covs if not any(o != c and c & o == c for o in covs)]
        keep.sort(key=lambda c: (-bin(c).count("1"), c))
        return [(c, seen[c]) for c in keep]

    failed = set()
    placements = []
    free = []
    nodes = 0

    def solve(rest, uncovered, f):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise _Exhausted
        if not uncovered:
            return True
        key = (rest, uncovered, f)
        if key in failed:
            return False
        slots = f + max(0, bin(rest).count("1") - 2)
        if slots * max_cover < bin(uncovered).count("1"):
            failed.add(key)
            return False
        x = -1
        for v in _bits(rest):
            if not inc[v] & uncovered:
                x = v
                break
        if x >= 0:
            avail = rest & ~(1 << x)
            opts = options(avail, uncovered)
            if not opts:
                placements.append((x, 0))
                if solve(avail, uncovered, f):
                    return True
                placements.pop()
            for cov, clique in opts:
                placements.append((x, clique))
                if solve(avail, uncovered & ~cov, f):
                    return True
                placements.pop()
        elif f > 0:
            for cov, clique in options(rest, uncovered):
                free.append(clique)
                if solve(rest, uncovered & ~cov, f - 1):
                    return True
                free.pop()
        failed.add(key)
        return False

    try:
        ok = solve((1 << n) - 1, full, k)
    except _Exhausted:
        return EXHAUSTED, [], [], nodes
    if ok:
        return FEASIBLE, list(placements), list(free), nodes
    return INFEASIBLE, [], [], nodes


class _Exhausted(Exception):
    pass

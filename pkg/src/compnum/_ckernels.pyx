# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contract as ``compnum._pykernels``.

Limits: ``chordless_cycles`` needs n <= 64; ``competition_search`` needs
n <= MAX_SEARCH_VERTICES and at most 64 edges.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXV = 64

MAX_SEARCH_VERTICES = 24
MAX_SEARCH_EDGES = 64

FEASIBLE = 1
INFEASIBLE = 0
EXHAUSTED = -1


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


# -- chordless cycles ---------------------------------------------------------

cdef class _CycleState:
    cdef uint64_t adj[MAXV]
    cdef int path[MAXV]
    cdef int depth
    cdef int limit
    cdef list out


cdef bint _extend(_CycleState st, int s, uint64_t blocked, uint64_t higher):
    cdef int last = st.path[st.depth - 1]
    cdef uint64_t cands = st.adj[last] & higher & ~blocked
    cdef int w, i
    while cands:
        w = lowbit(cands)
        cands &= cands - 1
        if (st.adj[w] >> s) & 1:
            if st.depth >= 3 and st.path[1] < w:
                st.out.append(tuple([st.path[i] for i in range(st.depth)] + [w]))
                if len(st.out) >= st.limit:
                    return True
            continue
        st.path[st.depth] = w
        st.depth += 1
        if _extend(st, s, blocked | ((<uint64_t>1) << w) | st.adj[last], higher):
            return True
        st.depth -= 1
    return False


def chordless_cycles(adj, int cap):
    cdef int n = len(adj)
    if n > MAXV:
        raise ValueError("chordless_cycles: more than 64 vertices")
    cdef _CycleState st = _CycleState()
    cdef int s, p1
    cdef uint64_t higher, nb
    for s in range(n):
        st.adj[s] = <uint64_t>adj[s]
    st.out = []
    st.limit = cap + 1
    for s in range(n):
        if s == 63:
            break
        higher = ~(((<uint64_t>1) << (s + 1)) - 1)
        nb = st.adj[s] & higher
        while nb:
            p1 = lowbit(nb)
            nb &= nb - 1
            st.path[0] = s
            st.path[1] = p1
            st.depth = 2
            if _extend(st, s, ((<uint64_t>1) << s) | ((<uint64_t>1) << p1), higher):
                return st.out
    return st.out


# -- maximal cliques ----------------------------------------------------------

cdef void _bk(uint64_t* adj, uint64_t r, uint64_t p, uint64_t x, list found):
    if p == 0 and x == 0:
        found.append(r)
        return
    cdef uint64_t pu = p | x, cand, bit
    cdef int best = -1, pivot = 0, u, c, v
    while pu:
        u = lowbit(pu)
        pu &= pu - 1
        c = popcount(adj[u] & p)
        if c > best:
            best = c
            pivot = u
    cand = p & ~adj[pivot]
    while cand:
        v = lowbit(cand)
        cand &= cand - 1
        bit = (<uint64_t>1) << v
        _bk(adj, r | bit, p & adj[v], x & adj[v], found)
        p &= ~bit
        x |= bit


def maximal_cliques(adj):
    cdef int n = len(adj)
    if n > MAXV:
        raise ValueError("maximal_cliques: more than 64 vertices")
    cdef uint64_t a[MAXV]
    cdef int i
    for i in range(n):
        a[i] = <uint64_t>adj[i]
    found = []
    if n:
        _bk(a, 0, (<uint64_t>-1) if n == 64 else (((<uint64_t>1) << n) - 1), 0, found)
    return sorted(found)


# -- competition-number feasibility -------------------------------------------

cdef class _Search:
    cdef int n
    cdef int ncl
    cdef uint64_t* cliques
    cdef int eidx[24][24]
    cdef uint64_t inc[24]
    cdef int max_cover
    cdef int64_t nodes
    cdef int64_t node_limit
    cdef set failed
    cdef list placements
    cdef list free_cliques

    def __dealloc__(self):
        if self.cliques != NULL:
            free(self.cliques)

    cdef uint64_t edge_mask(self, uint64_t c):
        cdef uint64_t em = 0, rest
        cdef int a, b
        while c:
            a = lowbit(c)
            c &= c - 1
            rest = c
            while rest:
                b = lowbit(rest)
                rest &= rest - 1
                em |= (<uint64_t>1) << self.eidx[a][b]
        return em

    cdef int options(self, uint64_t avail, uint64_t uncovered,
                     uint64_t* covs, uint64_t* subs):
        """Fill non-dominated (coverage, clique) pairs; return their count."""
        cdef int cnt = 0, i, j, kept
        cdef uint64_t sub, cov, tc, ts
        cdef bint dup
        for i in range(self.ncl):
            sub = self.cliques[i] & avail
            if sub & (sub - 1) == 0:
                continue
            cov = self.edge_mask(sub) & uncovered
            if cov == 0:
                continue
            dup = False
            for j in range(cnt):
                if covs[j] == cov:
                    dup = True
                    break
            if not dup:
                covs[cnt] = cov
                subs[cnt] = sub
                cnt += 1
        kept = 0
        for i in range(cnt):
            dup = False
            for j in range(cnt):
                if j != i and covs[j] != covs[i] and (covs[i] & covs[j]) == covs[i]:
                    dup = True
                    break
            if not dup:
                covs[kept] = covs[i]
                subs[kept] = subs[i]
                kept += 1
        # insertion sort by (-popcount, cov)
        for i in range(1, kept):
            tc = covs[i]
            ts = subs[i]
            j = i - 1
            while j >= 0 and (popcount(covs[j]) < popcount(tc) or
                              (popcount(covs[j]) == popcount(tc) and covs[j] > tc)):
                covs[j + 1] = covs[j]
                subs[j + 1] = subs[j]
                j -= 1
            covs[j + 1] = tc
            subs[j + 1] = ts
        return kept

    cdef int solve(self, uint64_t rest, uint64_t uncovered, int f) except -2:
        self.nodes += 1
        if self.nodes > self.node_limit:
            return -1
        if uncovered == 0:
            return 1
        key = (rest, uncovered, f)
        if key in self.failed:
            return 0
        cdef int slots = f + (popcount(rest) - 2 if popcount(rest) > 2 else 0)
        if slots * self.max_cover < popcount(uncovered):
            self.failed.add(key)
            return 0
        cdef int x = -1, v, cnt, i, r
        cdef uint64_t scan = rest, avail
        while scan:
            v = lowbit(scan)
            scan &= scan - 1
            if (self.inc[v] & uncovered) == 0:
                x = v
                break
        cdef uint64_t* covs = <uint64_t*>malloc(2 * (self.ncl + 1) * sizeof(uint64_t))
        if covs == NULL:
            raise MemoryError()
        cdef uint64_t* subs = covs + self.ncl + 1
        try:
            if x >= 0:
                avail = rest & ~((<uint64_t>1) << x)
                cnt = self.options(avail, uncovered, covs, subs)
                if cnt == 0:
                    self.placements.append((x, 0))
                    r = self.solve(avail, uncovered, f)
                    if r != 0:
                        return r
                    self.placements.pop()
                for i in range(cnt):
                    self.placements.append((x, subs[i]))
                    r = self.solve(avail, uncovered & ~covs[i], f)
                    if r != 0:
                        return r
                    self.placements.pop()
            elif f > 0:
                cnt = self.options(rest, uncovered, covs, subs)
                for i in range(cnt):
                    self.free_cliques.append(subs[i])
                    r = self.solve(rest, uncovered & ~covs[i], f - 1)
                    if r != 0:
                        return r
                    self.free_cliques.pop()
        finally:
            free(covs)
        self.failed.add(key)
        return 0


def competition_search(adj, int k, long long node_limit):
    cdef int n = len(adj)
    if n > MAX_SEARCH_VERTICES:
        raise ValueError("competition_search: too many vertices for compiled kernel")
    cdef _Search st = _Search()
    cdef int i, j, m = 0, c
    cdef uint64_t a, em
    st.n = n
    for i in range(n):
        st.inc[i] = 0
    for i in range(n):
        a = <uint64_t>adj[i]
        for j in range(i + 1, n):
            if (a >> j) & 1:
                if m >= 64:
                    raise ValueError("competition_search: more than 64 edges")
                st.eidx[i][j] = m
                st.eidx[j][i] = m
                st.inc[i] |= (<uint64_t>1) << m
                st.inc[j] |= (<uint64_t>1) << m
                m += 1
    if m == 0:
        return FEASIBLE, [], [], 0
    cl = maximal_cliques(adj)
    st.ncl = len(cl)
    st.cliques = <uint64_t*>malloc(st.ncl * sizeof(uint64_t))
    if st.cliques == NULL:
        raise MemoryError()
    st.max_cover = 0
    for i in range(st.ncl):
        st.cliques[i] = <uint64_t>cl[i]
        c = popcount(st.edge_mask(st.cliques[i]))
        if c > st.max_cover:
            st.max_cover = c
    st.nodes = 0
    st.node_limit = node_limit
    st.failed = set()
    st.placements = []
    st.free_cliques = []
    cdef uint64_t full = (<uint64_t>-1) if m == 64 else (((<uint64_t>1) << m) - 1)
    cdef uint64_t everyone = ((<uint64_t>1) << n) - 1
    r = st.solve(everyone, full, k)
    if r < 0:
        return EXHAUSTED, [], [], st.nodes
    if r == 1:
        return FEASIBLE, [(int(x), int(s)) for x, s in st.placements], \
            [int(s) for s in st.free_cliques], st.nodes
    return INFEASIBLE, [], [], st.nodes

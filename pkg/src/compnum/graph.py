"""Immutable simple graphs and digraphs over string vertex identifiers.

Vertex identifiers are nonempty strings over ``[A-Za-z0-9_]``.  Their natural
string order is the tie-breaking order used throughout the package.

Text formats (line oriented, ``#`` starts a comment line)::

    v <id>            declare a vertex
    e <id> <id>       undirected edge
    a <id> > <id>     arc (digraphs only)
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, NamedTuple

from .errors import GraphError, ParseError

_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")


def check_vertex_id(token: str) -> str:
    if not isinstance(token, str) or not _ID_RE.match(token):
        raise GraphError(f"invalid vertex id {token!r}")
    return token


class Edge(NamedTuple):
    """Unordered pair of distinct vertices, stored with ``u < v``."""

    u: str
    v: str

    @classmethod
    def of(cls, a: str, b: str) -> "Edge":
        if a == b:
            raise GraphError(f"self-loop at {a}")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self):
        return f"{self.u}-{self.v}"


class Graph:
    """Finite simple undirected graph.  Instances are never mutated."""

    __slots__ = ("_adj", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable = ()):
        adj: dict[str, set] = {}
        for v in vertices:
            adj.setdefault(check_vertex_id(v), set())
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop at {a}")
            adj.setdefault(check_vertex_id(a), set()).add(b)
            adj.setdefault(check_vertex_id(b), set()).add(a)
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: dict) -> "Graph":
        g = cls.__new__(cls)
        g._adj = adj
        g._hash = None
        return g

    # -- queries --------------------------------------------------------
    @property
    def vertices(self) -> frozenset:
        return frozenset(self._adj)

    def sorted_vertices(self) -> list[str]:
        return sorted(self._adj)

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(sorted(self._adj))

    def neighbors(self, v: str) -> frozenset:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, a: str, b: str) -> bool:
        n = self._adj.get(a)
        return n is not None and b in n

    def edges(self) -> list[Edge]:
        """Edges sorted by ``(min, max)`` endpoint."""
        return sorted(Edge(u, w) for u, n in self._adj.items() for w in n if u < w)

    def edge_set(self) -> frozenset:
        return frozenset(Edge(u, w) for u, n in self._adj.items() for w in n if u < w)

    def num_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def is_clique(self, vs: Iterable[str]) -> bool:
        vs = list(vs)
        for i, a in enumerate(vs):
            na = self._adj[a]
            for b in vs[i + 1:]:
                if b not in na:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.edge_set()))
        return self._hash

    def __repr__(self):
        return f"Graph(n={len(self)}, m={self.num_edges()})"

    # -- derived graphs -------------------------------------------------
    def induced_subgraph(self, keep: Iterable[str]) -> "Graph":
        keep = frozenset(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise GraphError(f"vertices not in graph: {sorted(missing)}")
        return Graph._from_adj({v: self._adj[v] & keep for v in keep})

    def remove_edge(self, a: str, b: str) -> "Graph":
        if not self.has_edge(a, b):
            raise GraphError(f"edge {a}-{b} not in graph")
        adj = dict(self._adj)
        adj[a] = adj[a] - {b}
        adj[b] = adj[b] - {a}
        return Graph._from_adj(adj)

    def add_edge(self, a: str, b: str) -> "Graph":
        if a == b:
            raise GraphError(f"self-loop at {a}")
        adj = dict(self._adj)
        adj[check_vertex_id(a)] = adj.get(a, frozenset()) | {b}
        adj[check_vertex_id(b)] = adj.get(b, frozenset()) | {a}
        return Graph._from_adj(adj)

    def remove_vertices(self, drop: Iterable[str]) -> "Graph":
        return self.induced_subgraph(self._adj.keys() - set(drop))

    def union(self, other: "Graph") -> "Graph":
        adj = dict(self._adj)
        for v, n in other._adj.items():
            adj[v] = adj.get(v, frozenset()) | n
        return Graph._from_adj(adj)

    def with_isolated(self, extra: Iterable[str]) -> "Graph":
        adj = dict(self._adj)
        for v in extra:
            adj.setdefault(check_vertex_id(v), frozenset())
        return Graph._from_adj(adj)

    def connected_components(self) -> list[list[str]]:
        """Components as sorted vertex lists, ordered by least vertex."""
        seen: set = set()
        comps = []
        for s in sorted(self._adj):
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    # -- bitmask view ---------------------------------------------------
    def bitmask_adjacency(self) -> tuple[list[str], list[int]]:
        """Vertices in sorted order and their neighbourhoods as bitmasks."""
        order = sorted(self._adj)
        index = {v: i for i, v in enumerate(order)}
        masks = []
        for v in order:
            m = 0
            for w in self._adj[v]:
                m |= 1 << index[w]
            masks.append(m)
        return order, masks


class Digraph:
    """Finite simple digraph (no loops, no parallel arcs).

    Acyclicity is not enforced here; see :mod:`compnum.verifier`.
    """

    __slots__ = ("_vertices", "_arcs")

    def __init__(self, vertices: Iterable[str] = (), arcs: Iterable = ()):
        vs = {check_vertex_id(v) for v in vertices}
        arc_set = set()
        for x, y in arcs:
            if x == y:
                raise GraphError(f"loop arc at {x}")
            vs.add(check_vertex_id(x))
            vs.add(check_vertex_id(y))
            arc_set.add((x, y))
        self._vertices = frozenset(vs)
        self._arcs = frozenset(arc_set)

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def arcs(self) -> frozenset:
        return self._arcs

    def sorted_arcs(self) -> list[tuple[str, str]]:
        return sorted(self._arcs)

    def in_neighbors(self, v: str) -> set:
        return {x for x, y in self._arcs if y == v}

    def out_neighbors(self, v: str) -> set:
        return {y for x, y in self._arcs if x == v}

    def in_degree(self, v: str) -> int:
        return sum(1 for _, y in self._arcs if y == v)

    def union(self, other: "Digraph") -> "Digraph":
        return Digraph(self._vertices | other._vertices, self._arcs | other._arcs)

    def __len__(self):
        return len(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._vertices, self._arcs))

    def __repr__(self):
        return f"Digraph(n={len(self._vertices)}, arcs={len(self._arcs)})"


def fresh_vertex(*avoid: Iterable[str]) -> str:
    """Least token ``_z0, _z1, ...`` absent from every collection in ``avoid``."""
    taken = set()
    for coll in avoid:
        taken.update(coll)
    i = 0
    while f"_z{i}" in taken:
        i += 1
    return f"_z{i}"


# -- text formats ------------------------------------------------------------

def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _vertex_token(tok: str, lineno: int) -> str:
    if not _ID_RE.match(tok):
        raise ParseError(f"invalid vertex id {tok!r}", lineno)
    return tok


def parse_graph(text: str) -> Graph:
    vertices = []
    edges = []
    for lineno, parts in _lines(text):
        kind = parts[0]
        if kind == "v" and len(parts) == 2:
            vertices.append(_vertex_token(parts[1], lineno))
        elif kind == "e" and len(parts) == 3:
            a = _vertex_token(parts[1], lineno)
            b = _vertex_token(parts[2], lineno)
            if a == b:
                raise ParseError(f"self-loop edge {a} {b}", lineno)
            edges.append((a, b))
        else:
            raise ParseError(f"malformed line {' '.join(parts)!r}", lineno)
    return Graph(vertices, edges)


def parse_digraph(text: str) -> Digraph:
    vertices = []
    arcs = []
    for lineno, parts in _lines(text):
        kind = parts[0]
        if kind == "v" and len(parts) == 2:
            vertices.append(_vertex_token(parts[1], lineno))
        elif kind == "a" and len(parts) == 4 and parts[2] == ">":
            x = _vertex_token(parts[1], lineno)
            y = _vertex_token(parts[3], lineno)
            if x == y:
                raise ParseError(f"loop arc {x} > {y}", lineno)
            arcs.append((x, y))
        else:
            raise ParseError(f"malformed line {' '.join(parts)!r}", lineno)
    return Digraph(vertices, arcs)


def serialize_graph(g: Graph) -> str:
    out = [f"v {v}" for v in g.sorted_vertices() if g.degree(v) == 0]
    out.extend(f"e {e.u} {e.v}" for e in g.edges())
    return "".join(line + "\n" for line in out)


def serialize_digraph(d: Digraph) -> str:
    touched = {x for arc in d.arcs for x in arc}
    out = [f"v {v}" for v in sorted(d.vertices - touched)]
    out.extend(f"a {x} > {y}" for x, y in d.sorted_arcs())
    return "".join(line + "\n" for line in out)


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    return g.induced_subgraph(keep)


def remove_edge(g: Graph, e) -> Graph:
    return g.remove_edge(*e)


def connected_components(g: Graph) -> list[list[str]]:
    return g.connected_components()

"""Holes (induced cycles of length >= 4) and the structure around them.

Chordality is decided by maximum cardinality search followed by an explicit
check of the elimination order; a failed check is turned into a hole witness.
Full hole enumeration runs on the bitmask kernels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import kernels
from .errors import NotAHoleError, StructuralViolation
from .graph import Edge, Graph

DEFAULT_CAP = 3


@dataclass(frozen=True, order=True)
class Hole:
    """Induced cycle stored in canonical form.

    The least vertex comes first, followed by the lesser of its two cycle
    neighbours.  Two holes are equal iff their canonical forms are equal.
    """

    cycle: tuple

    @classmethod
    def from_sequence(cls, seq: Iterable[str]) -> "Hole":
        return cls(canonical_cycle(seq))

    def __len__(self):
        return len(self.cycle)

    def __iter__(self):
        return iter(self.cycle)

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.cycle)

    def edges(self) -> list[Edge]:
        c = self.cycle
        return [Edge.of(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def __str__(self):
        return " ".join(self.cycle)


def canonical_cycle(seq: Iterable[str]) -> tuple:
    seq = list(seq)
    n = len(seq)
    if n == 0:
        return ()
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if n > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def is_hole(g: Graph, seq) -> bool:
    """True iff ``seq`` is an induced cycle of length >= 4 in ``g``."""
    seq = list(seq)
    n = len(seq)
    if n < 4 or len(set(seq)) != n or any(v not in g for v in seq):
        return False
    pos = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        if not g.has_edge(v, seq[(i + 1) % n]):
            return False
        for w in g.neighbors(v):
            j = pos.get(w)
            if j is not None and (i - j) % n not in (1, n - 1):
                return False
    return True


def _require_hole(g: Graph, c) -> Hole:
    if not isinstance(c, Hole):
        c = Hole.from_sequence(c)
    if not is_hole(g, c.cycle):
        raise NotAHoleError(f"{' '.join(c.cycle)} is not a hole of the graph")
    return c


# -- chordality --------------------------------------------------------------

@dataclass(frozen=True)
class Peo:
    """Perfect elimination ordering: each vertex's later neighbours form a clique."""

    order: tuple


def mcs_elimination_order(g: Graph, prefer: Iterable[str] = ()) -> list[str]:
    """Reverse of a maximum cardinality search visit order.

    Ties go to ``prefer`` vertices, then to the least identifier, so a clique
    passed as ``prefer`` ends up at the tail of the returned order.
    """
    prefer = frozenset(prefer)
    weight = {v: 0 for v in g.vertices}
    visit = []
    while weight:
        best = max(weight.values())
        pick = min(
            (v for v, w in weight.items() if w == best),
            key=lambda v: (v not in prefer, v),
        )
        del weight[pick]
        visit.append(pick)
        for w in g.neighbors(pick):
            if w in weight:
                weight[w] += 1
    visit.reverse()
    return visit


def peo_violation(g: Graph, order) -> Optional[tuple]:
    """First ``(v, u, w)`` where ``u, w`` are non-adjacent later neighbours of ``v``."""
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = sorted((w for w in g.neighbors(v) if pos[w] > i), key=pos.__getitem__)
        if len(later) < 2:
            continue
        parent = later[0]
        for w in later[1:]:
            if not g.has_edge(parent, w):
                return v, parent, w
    return None


def is_peo(g: Graph, order) -> bool:
    return sorted(order) == g.sorted_vertices() and peo_violation(g, order) is None


def _shortest_path(g: Graph, src: str, dst: str, allowed: frozenset) -> Optional[list]:
    """Lexicographically least shortest ``src``-``dst`` path with interior in ``allowed``."""
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist and y in allowed:
                dist[y] = dist[x] + 1
                queue.append(y)
    best = None
    for y in g.neighbors(src):
        if y in dist and (y == dst or y in allowed):
            d = dist[y]
            if best is None or (d, y) < best:
                best = (d, y)
    if best is None:
        return None
    path = [src, best[1]]
    while path[-1] != dst:
        cur = path[-1]
        path.append(min(
            y for y in g.neighbors(cur)
            if y in dist and dist[y] == dist[cur] - 1 and (y == dst or y in allowed)
        ))
    return path


def _hole_through(g: Graph, v: str, u: str, w: str) -> Optional[Hole]:
    """Hole containing the path ``u v w`` (u, w non-adjacent), if any."""
    allowed = frozenset(g.vertices - g.neighbors(v) - {v})
    path = _shortest_path(g, u, w, allowed)
    if path is None:
        return None
    return Hole.from_sequence([v] + path)


def chordality(g: Graph):
    """Return a :class:`Peo` if ``g`` is chordal, else a witness :class:`Hole`."""
    order = mcs_elimination_order(g)
    bad = peo_violation(g, order)
    if bad is None:
        return Peo(tuple(order))
    hole = _hole_through(g, *bad)
    if hole is None:
        # MCS guarantees a hole through the violating triple; scan in case it did not
        for v in g.sorted_vertices():
            nb = sorted(g.neighbors(v))
            for i, a in enumerate(nb):
                for b in nb[i + 1:]:
                    if not g.has_edge(a, b):
                        hole = _hole_through(g, v, a, b)
                        if hole is not None:
                            break
                if hole is not None:
                    break
            if hole is not None:
                break
    if hole is None or not is_hole(g, hole.cycle):
        raise AssertionError("elimination order failed but no hole was extracted")
    return hole


def is_chordal(g: Graph) -> bool:
    return isinstance(chordality(g), Peo)


# -- enumeration -------------------------------------------------------------

def enumerate_holes(g: Graph, cap: int = DEFAULT_CAP) -> tuple[list[Hole], bool]:
    """All holes if there are at most ``cap`` of them, else ``cap + 1`` holes.

    Holes are returned in lexicographic order of canonical form; the flag is
    True when the list was cut short.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    order, adj = g.bitmask_adjacency()
    raw = kernels.chordless_cycles(adj, cap)
    holes = [Hole(tuple(order[i] for i in cyc)) for cyc in raw]
    return holes, len(holes) > cap


def count_holes(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Number of holes, or ``cap + 1`` meaning "more than cap"."""
    return len(enumerate_holes(g, cap)[0])


# -- X sets and avoiding paths ----------------------------------------------

def x_set(g: Graph, c) -> frozenset:
    """Vertices off the hole adjacent to every hole vertex."""
    c = _require_hole(g, c)
    return _x_set(g, c)


def _x_set(g: Graph, c: Hole) -> frozenset:
    cv = c.vertices
    common = None
    for v in c.cycle:
        common = set(g.neighbors(v)) if common is None else common & g.neighbors(v)
    return frozenset(common - cv)


def c_avoiding_path(g: Graph, c, u: str, v: str) -> Optional[tuple]:
    """Shortest (then lexicographically least) C-avoiding ``u``-``v`` path.

    Interior vertices must avoid the hole and its X set.  A single edge
    counts only when one endpoint lies outside the hole and its X set.
    """
    c = _require_hole(g, c)
    if u == v:
        raise ValueError("endpoints must differ")
    for w in (u, v):
        if w not in g:
            raise KeyError(w)
    guarded = c.vertices | _x_set(g, c)
    allowed = frozenset(g.vertices - guarded - {u, v})
    if g.has_edge(u, v) and (u not in guarded or v not in guarded):
        return (u, v)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist and y in allowed:
                dist[y] = dist[x] + 1
                queue.append(y)
    starts = [y for y in g.neighbors(u) if y in allowed and y in dist]
    if not starts:
        return None
    first = min(starts, key=lambda y: (dist[y], y))
    path = [u, first]
    while path[-1] != v:
        cur = path[-1]
        if dist[cur] == 1:
            path.append(v)
            break
        path.append(min(y for y in g.neighbors(cur)
                        if y in allowed and dist.get(y) == dist[cur] - 1))
    return tuple(path)


# -- two-hole structure ------------------------------------------------------

def shared_edge_path(c1, c2, g: Graph) -> tuple[Optional[tuple], int]:
    """Path formed by the edges common to two holes, and its edge count.

    The path is listed from its lesser endpoint.  Raises
    :class:`StructuralViolation` when the common edges do not form a path.
    """
    c1 = _require_hole(g, c1)
    c2 = _require_hole(g, c2)
    if c1 == c2:
        raise ValueError("holes must differ")
    common = c1.edge_set() & c2.edge_set()
    if not common:
        return None, 0
    nbrs: dict = {}
    for e in common:
        nbrs.setdefault(e.u, []).append(e.v)
        nbrs.setdefault(e.v, []).append(e.u)
    ends = sorted(v for v, n in nbrs.items() if len(n) == 1)
    if len(ends) != 2 or any(len(n) > 2 for n in nbrs.values()):
        raise StructuralViolation("shared_path", "common edges do not form a path")
    path = [ends[0]]
    prev = None
    while True:
        nxt = [w for w in nbrs[path[-1]] if w != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    if len(path) - 1 != len(common):
        raise StructuralViolation("shared_path", "common edges are disconnected")
    return tuple(path), len(common)


def _sections(c: Hole, x: str, y: str) -> tuple[frozenset, frozenset]:
    """Edge sets of the two x-y sections of the hole."""
    seq = c.cycle
    n = len(seq)
    i, j = seq.index(x), seq.index(y)
    first = frozenset(Edge.of(seq[(i + t) % n], seq[(i + t + 1) % n])
                      for t in range((j - i) % n))
    return first, c.edge_set() - first


def wheel_dichotomy_failures(g: Graph, holes: list[Hole]) -> list[tuple]:
    """Cases where a vertex adjacent to two non-adjacent hole vertices is
    neither universal to the hole nor on a second hole sharing >= 2 edges,
    all of them inside one section -- or is both.

    ``holes`` must be the complete hole list of ``g``.
    """
    bad = []
    for c in holes:
        xs = _x_set(g, c)
        cv = c.vertices
        for v in g.sorted_vertices():
            if v in cv:
                continue
            on_c = sorted(g.neighbors(v) & cv)
            for a_i, x in enumerate(on_c):
                for y in on_c[a_i + 1:]:
                    if g.has_edge(x, y):
                        continue
                    s1, s2 = _sections(c, x, y)
                    universal = v in xs
                    partner = any(
                        other != c and v in other.vertices
                        and len(c.edge_set() & other.edge_set()) >= 2
                        and ((c.edge_set() & other.edge_set()) <= s1
                             or (c.edge_set() & other.edge_set()) <= s2)
                        for other in holes
                    )
                    if universal == partner:
                        bad.append((c, v, x, y))
    return bad


def ear_length_failures(g: Graph, holes: list[Hole]) -> list[tuple]:
    """Cases where a vertex seeing two consecutive hole vertices, outside the
    X set and on no hole, reaches another hole vertex by a one-edge avoiding
    path.  ``holes`` must be complete.
    """
    on_some_hole = set()
    for c in holes:
        on_some_hole |= c.vertices
    bad = []
    for c in holes:
        xs = _x_set(g, c)
        seq = c.cycle
        n = len(seq)
        for v in g.sorted_vertices():
            if v in on_some_hole or v in xs:
                continue
            for i in range(n):
                a, b = seq[i], seq[(i + 1) % n]
                if not (g.has_edge(v, a) and g.has_edge(v, b)):
                    continue
                for w in seq:
                    if w in (a, b):
                        continue
                    p = c_avoiding_path(g, c, v, w)
                    if p is not None and len(p) == 2:
                        bad.append((c, v, (a, b), w))
    return bad


# -- report ------------------------------------------------------------------

STRUCTURE_FLAGS = ("x_clique", "shared_path", "x_equal", "wheel_dichotomy", "ear_length")


@dataclass
class HoleReport:
    holes: list
    capped: bool
    x_sets: dict = field(default_factory=dict)
    shared_path: Optional[tuple] = None
    shared_count: int = 0
    structure_flags: dict = field(default_factory=dict)

    @property
    def hole_count(self) -> Optional[int]:
        return None if self.capped else len(self.holes)


def validate_two_hole_structure(g: Graph, report: HoleReport) -> dict:
    """Evaluate the structural facts that hold for every graph with exactly
    two holes.  A False flag means the input or the implementation is wrong.
    """
    if report.capped or len(report.holes) != 2:
        raise ValueError("report must describe exactly two holes")
    c1, c2 = report.holes
    x1 = report.x_sets.get(c1, _x_set(g, c1))
    x2 = report.x_sets.get(c2, _x_set(g, c2))
    flags = {"x_clique": g.is_clique(x1) and g.is_clique(x2)}
    try:
        _, count = shared_edge_path(c1, c2, g)
        flags["shared_path"] = True
    except StructuralViolation:
        count = len(c1.edge_set() & c2.edge_set())
        flags["shared_path"] = False
    flags["x_equal"] = count < 2 or x1 == x2
    flags["wheel_dichotomy"] = not wheel_dichotomy_failures(g, report.holes)
    flags["ear_length"] = not ear_length_failures(g, report.holes)
    return flags


def analyze(g: Graph, cap: int = DEFAULT_CAP) -> HoleReport:
    holes, capped = enumerate_holes(g, cap)
    report = HoleReport(holes=holes, capped=capped)
    for c in holes:
        report.x_sets[c] = _x_set(g, c)
    if capped:
        return report
    if len(holes) == 2:
        try:
            report.shared_path, report.shared_count = shared_edge_path(holes[0], holes[1], g)
        except StructuralViolation:
            report.shared_count = len(holes[0].edge_set() & holes[1].edge_set())
        report.structure_flags = validate_two_hole_structure(g, report)
    else:
        report.structure_flags = {
            "wheel_dichotomy": not wheel_dichotomy_failures(g, holes),
            "ear_length": not ear_length_failures(g, holes),
        }
    return report


def render_report(report: HoleReport) -> str:
    lines = []
    if report.capped:
        lines.append(f"holes >{len(report.holes) - 1}")
    else:
        lines.append(f"holes {len(report.holes)}")
    if not report.capped and not report.holes:
        lines.append("chordal")
    for c in report.holes:
        lines.append("hole " + " ".join(c.cycle))
    for i, c in enumerate(report.holes):
        lines.append(" ".join(["xset", str(i)] + sorted(report.x_sets.get(c, ()))))
    if report.shared_path is not None:
        lines.append("shared " + " ".join(report.shared_path))
    for name in STRUCTURE_FLAGS:
        if name in report.structure_flags:
            lines.append(f"flag {name} {'true' if report.structure_flags[name] else 'false'}")
    return "".join(line + "\n" for line in lines)

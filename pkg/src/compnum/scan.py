"""Graph corpora and the bound scanner.

The scanner certifies every generated graph with at most two holes, solves
it exactly within a budget, and counts graphs whose competition number
exceeds the number of holes plus one.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, TextIO

from .constructions import certify
from .errors import BudgetExhausted
from .exact import SolveBudget, exact_k
from .graph import Graph
from .holes import DEFAULT_CAP, enumerate_holes

EXHAUSTIVE_MAX_N = 6


def _names(n: int) -> list[str]:
    width = len(str(max(n - 1, 0)))
    return [str(i).zfill(width) for i in range(n)]


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All labelled graphs on vertices ``0..n-1``, by edge-subset bitmask."""
    names = _names(n)
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(names, [(names[a], names[b]) for t, (a, b) in enumerate(pairs)
                            if mask >> t & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    names = _names(n)
    edges = [(names[a], names[b]) for a, b in itertools.combinations(range(n), 2)
             if rng.random() < p]
    return Graph(names, edges)


# -- named families ---------------------------------------------------------------

def cycle(m: int, prefix: str = "v") -> Graph:
    return Graph((), [(f"{prefix}{i}", f"{prefix}{(i + 1) % m}") for i in range(m)])


def wheel(m: int) -> Graph:
    rim = cycle(m, "r")
    return rim.union(Graph((), [("hub", f"r{i}") for i in range(m)]))


def domino() -> Graph:
    return Graph((), [tuple(e) for e in "ab bc de ef ad be cf".split()])


def housex() -> Graph:
    return Graph((), [("v0", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v0"),
                      ("v2", "x"), ("x", "v0"), ("v3", "x")])


def _strip_chords(top: list[str], bottom: list[str], pattern: int) -> list[tuple]:
    """Diagonals triangulating the strip between two chains.

    Bit ``t`` of ``pattern`` decides whether step ``t`` advances along the
    top chain or the bottom chain.
    """
    chords = []
    i = j = 0
    step = 0
    while i < len(top) and j < len(bottom):
        chords.append((top[i], bottom[j]))
        if i == len(top) - 1:
            j += 1
        elif j == len(bottom) - 1:
            i += 1
        elif pattern >> step & 1:
            j += 1
        else:
            i += 1
        step += 1
    return chords


def fused_cycles(m1: int, m2: int, shared: int, *, pattern: int = 0,
                 ears1: bool = False, ears2: bool = False, hubs: int = 0) -> Graph:
    """Two cycles glued along a path of ``shared`` edges.

    For ``shared >= 2`` the outer cycle is triangulated with chords between
    the two non-shared arcs.  ``ears1``/``ears2`` attach a triangle to every
    edge of the first/second cycle; ``hubs`` adds a clique of vertices
    adjacent to both cycles.  The result is not guaranteed to have exactly
    two holes; callers filter with :func:`enumerate_holes`.
    """
    if not (1 <= shared and shared + 2 <= m1 and shared + 2 <= m2):
        raise ValueError("need 1 <= shared <= min(m1, m2) - 2")
    c1 = [f"v{i}" for i in range(m1)]
    inner = [f"w{i}" for i in range(1, m2 - shared)]
    c2 = c1[:shared + 1] + inner
    edges = [(c1[i], c1[(i + 1) % m1]) for i in range(m1)]
    edges += [(c2[i], c2[(i + 1) % m2]) for i in range(m2)]
    if shared >= 2:
        top = c1[shared + 1:]
        edges += _strip_chords(top, inner, pattern)
    g = Graph((), edges)
    eared = []
    for flag, cyc in ((ears1, c1), (ears2, c2)):
        if flag:
            for i in range(len(cyc)):
                e = frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))
                if e not in eared:
                    eared.append(e)
    extra = []
    for i, e in enumerate(eared):
        extra += [(f"p{i}", v) for v in sorted(e)]
    hub_names = [f"h{i}" for i in range(hubs)]
    for h in hub_names:
        extra += [(h, v) for v in set(c1) | set(c2)]
    extra += list(itertools.combinations(hub_names, 2))
    return g.union(Graph((), extra))


def eared_cycle(m: int, hubs: int = 0) -> Graph:
    """Cycle with a triangle on every edge, optionally with universal hubs."""
    g = cycle(m)
    extra = []
    for i in range(m):
        extra += [(f"p{i}", f"v{i}"), (f"p{i}", f"v{(i + 1) % m}")]
    hub_names = [f"h{i}" for i in range(hubs)]
    for h in hub_names:
        extra += [(h, f"v{i}") for i in range(m)]
    extra += list(itertools.combinations(hub_names, 2))
    return g.union(Graph((), extra))


def families(max_vertices: int = 14) -> Iterator[tuple[str, Graph]]:
    """Named graphs with one or two holes, each checked by hole enumeration."""
    seen = set()

    def keep(name, g, want):
        if len(g) > max_vertices or g in seen:
            return None
        holes, capped = enumerate_holes(g, 3)
        if capped or len(holes) not in want:
            return None
        seen.add(g)
        return name, g

    cands = [("domino", domino(), (2,)), ("housex", housex(), (2,))]
    for m in range(4, 9):
        cands.append((f"cycle{m}", cycle(m), (1,)))
        cands.append((f"wheel{m}", wheel(m), (1,)))
        for hubs in (0, 1, 2):
            cands.append((f"eared{m}h{hubs}", eared_cycle(m, hubs), (1,)))
    for m1 in range(4, 8):
        for m2 in range(4, m1 + 1):
            for s in range(1, min(m1, m2) - 1):
                for pattern in range(4 if s >= 2 else 1):
                    for ears1, ears2 in ((False, False), (True, False), (True, True)):
                        for hubs in (0, 1):
                            name = f"fused{m1}_{m2}_s{s}p{pattern}e{int(ears1)}{int(ears2)}h{hubs}"
                            g = fused_cycles(m1, m2, s, pattern=pattern,
                                             ears1=ears1, ears2=ears2, hubs=hubs)
                            cands.append((name, g, (2,)))
    for name, g, want in cands:
        hit = keep(name, g, want)
        if hit:
            yield hit


def _relabel(g: Graph) -> Graph:
    """Rename vertices to ``0..n-1`` in sorted order."""
    order = g.sorted_vertices()
    names = dict(zip(order, _names(len(order))))
    return Graph(names.values(), [(names[e.u], names[e.v]) for e in g.edges()])


def random_corpus(seed: int, count: int, n_lo: int, n_hi: int,
                  max_holes: int = 2, min_holes: int = 0) -> list[Graph]:
    """``count`` seeded graphs on ``n_lo..n_hi`` vertices with a hole count in
    ``[min_holes, max_holes]``.

    Even positions come from G(n, p) with rejection; odd positions perturb a
    small named family by attaching random vertices, which is where graphs
    with two overlapping holes mostly come from.
    """
    rng = random.Random(seed)
    bases = [g for _, g in families(max_vertices=n_hi) if len(g) <= n_hi]
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 10_000 * count:
            raise RuntimeError("could not generate enough graphs")
        n = rng.randint(n_lo, n_hi)
        if len(out) % 2 == 0 or not bases:
            g = random_graph(rng, n, rng.uniform(0.15, 0.85))
        else:
            base = rng.choice(bases)
            if len(base) > n:
                continue
            g = _relabel(base)
            names = g.sorted_vertices()
            p = rng.uniform(0.2, 0.8)
            fresh = _names(n)[len(names):]
            edges = []
            for i, v in enumerate(fresh):
                for w in names + fresh[:i]:
                    if rng.random() < p:
                        edges.append((v, w))
            g = g.union(Graph(fresh, edges))
        holes, capped = enumerate_holes(g, max(max_holes, 1))
        if capped or not (min_holes <= len(holes) <= max_holes):
            continue
        out.append(g)
    return out


# -- scanner ----------------------------------------------------------------------

@dataclass
class ScanConfig:
    n_range: tuple = (1, 5)
    mode: str = "exhaustive"
    sample_count: int = 100
    edge_probability: float = 0.5
    seed: int = 0
    hole_cap: int = DEFAULT_CAP
    budget: SolveBudget = field(default_factory=SolveBudget)

    def validate(self):
        lo, hi = self.n_range
        if lo < 0 or hi < lo:
            raise ValueError(f"bad vertex range {lo}..{hi}")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and hi > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive mode supports n <= {EXHAUSTIVE_MAX_N}")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise ValueError("edge probability must lie in [0, 1]")
        if self.sample_count < 0:
            raise ValueError("sample count must be >= 0")
        if self.hole_cap < 2:
            raise ValueError("hole cap must be >= 2")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def scan_graphs(config: ScanConfig) -> Iterator[Graph]:
    lo, hi = config.n_range
    if config.mode == "exhaustive":
        for n in range(lo, hi + 1):
            yield from labeled_graphs(n)
    else:
        rng = random.Random(config.seed)
        for _ in range(config.sample_count):
            yield random_graph(rng, rng.randint(lo, hi), config.edge_probability)


@dataclass
class ScanRow:
    index: int
    graph: Graph
    holes: Optional[int]  # None when above the cap
    cert_k: Optional[int] = None
    fallback: bool = False
    exact_k: Optional[int] = None
    exhausted: bool = False
    violation: str = ""


def scan_one(index: int, g: Graph, config: ScanConfig) -> ScanRow:
    holes, capped = enumerate_holes(g, config.hole_cap)
    row = ScanRow(index, g, None if capped else len(holes))
    try:
        row.exact_k = exact_k(g, config.budget)[0]
    except BudgetExhausted:
        row.exhausted = True
    if row.holes is not None and row.holes <= 2:
        try:
            cert = certify(g, config.budget)
            row.cert_k, row.fallback = cert.k, cert.fallback_used
        except BudgetExhausted:
            row.exhausted = True
        except AssertionError as exc:
            row.violation = f"certificate:{exc}"
            return row
        bound = row.holes + 1
        if row.exact_k is not None and row.exact_k > bound:
            row.violation = "exact_above_bound"
        elif row.cert_k is not None and not row.fallback and row.cert_k > bound:
            row.violation = "certificate_above_bound"
        elif row.cert_k is not None and row.exact_k is not None and row.exact_k > row.cert_k:
            row.violation = "exact_above_certificate"
    return row


def _fmt(v):
    return "-" if v is None else str(v)


def format_row(row: ScanRow, cap: int) -> str:
    holes = f">{cap}" if row.holes is None else str(row.holes)
    exact = "?" if row.exhausted and row.exact_k is None else _fmt(row.exact_k)
    edges = ",".join(f"{e.u}-{e.v}" for e in row.graph.edges())
    return (f"{row.index} n={len(row.graph)} holes={holes} cert={_fmt(row.cert_k)} "
            f"fallback={int(row.fallback)} exact={exact} "
            f"{'VIOLATION=' + row.violation + ' ' if row.violation else ''}edges={edges or '-'}")


def _scan_task(args):
    return scan_one(*args)


def _scan_rows(config: ScanConfig, jobs: int) -> Iterator[ScanRow]:
    tasks = ((i, g, config) for i, g in enumerate(scan_graphs(config)))
    if jobs <= 1:
        yield from map(_scan_task, tasks)
        return
    # map() yields in submission order, so the table does not depend on scheduling
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_scan_task, tasks, chunksize=64)


def run_scan(config: ScanConfig, out: TextIO, rows: bool = True, jobs: int = 1) -> dict:
    """Scan the configured corpus, writing a table and summary to ``out``."""
    config.validate()
    violations = fallbacks = exhausted = total = 0
    dist: Counter = Counter()
    for row in _scan_rows(config, jobs):
        total += 1
        violations += bool(row.violation)
        fallbacks += row.fallback
        exhausted += row.exhausted
        dist[(row.holes, row.exact_k)] += 1
        if rows:
            out.write(format_row(row, config.hole_cap) + "\n")
    out.write(f"graphs={total}\n")
    for (h, k), c in sorted(dist.items(), key=lambda kv: (
            kv[0][0] is None, kv[0][0] or 0, kv[0][1] is None, kv[0][1] or 0)):
        hs = f">{config.hole_cap}" if h is None else str(h)
        out.write(f"dist holes={hs} exact={_fmt(k)} count={c}\n")
    out.write(f"violations={violations}\n")
    out.write(f"fallbacks={fallbacks}\n")
    out.write(f"budget_exhausted={exhausted}\n")
    return {"graphs": total, "violations": violations, "fallbacks": fallbacks,
            "budget_exhausted": exhausted, "distribution": dict(dist)}

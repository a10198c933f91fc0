"""Compare the compiled and pure-Python kernels on a fixed workload.

    python3 benchmarks/bench_kernels.py [--graphs 300] [--repeat 3]

Both backends get the same seeded graphs; results are checked for equality
before timings are reported.
"""

import argparse
import random
import time

from compnum import kernels
from compnum.scan import random_corpus, random_graph


def workload(seed, count):
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.randint(6, 11), rng.uniform(0.2, 0.8)) for _ in range(count)]
    graphs += random_corpus(seed, count // 3, 7, 9, min_holes=1)
    return [g.bitmask_adjacency()[1] for g in graphs]


def run(mod, adjs):
    out = []
    t0 = time.perf_counter()
    for adj in adjs:
        out.append(mod.chordless_cycles(adj, 3))
    t1 = time.perf_counter()
    for adj in adjs:
        out.append(mod.maximal_cliques(adj))
    t2 = time.perf_counter()
    for adj in adjs:
        k = 0
        while True:
            status, placements, free, nodes = mod.competition_search(adj, k, 10**7)
            if status == kernels.FEASIBLE:
                out.append((k, placements, free))
                break
            k += 1
    t3 = time.perf_counter()
    return out, (t1 - t0, t2 - t1, t3 - t2)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    adjs = workload(args.seed, args.graphs)
    mods = kernels.backends()
    if "cython" not in mods:
        print("compiled kernels not built; only the Python backend is timed")
    best = {}
    results = {}
    for name, mod in mods.items():
        times = []
        for _ in range(args.repeat):
            res, t = run(mod, adjs)
            times.append(t)
        results[name] = res
        best[name] = [min(col) for col in zip(*times)]
    if len(results) == 2 and results["python"] != results["cython"]:
        raise SystemExit("backends disagree")

    print(f"{len(adjs)} graphs, best of {args.repeat}")
    print(f"{'kernel':<20}" + "".join(f"{n:>12}" for n in best) + ("     speedup" if len(best) == 2 else ""))
    for i, kernel in enumerate(("chordless_cycles", "maximal_cliques", "competition_search")):
        row = f"{kernel:<20}" + "".join(f"{best[n][i]:>11.4f}s" for n in best)
        if len(best) == 2:
            row += f"{best['python'][i] / best['cython'][i]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()

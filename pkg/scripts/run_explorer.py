"""Run the reg F <= reg G explorer over several seeds and summarize.

    python3 scripts/run_explorer.py --seeds 0 1 2 --count 100 --workers 4 --out runs.json
"""
import argparse
import json
import time

from bwb.explorer import ExplorerShape, question_explorer


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[42])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--max-vars", type=int, default=3)
    ap.add_argument("--max-gens", type=int, default=4)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--out", metavar="PATH")
    ns = ap.parse_args()
    shape = ExplorerShape(ns.max_vars, ns.max_gens, ns.max_degree)
    runs = []
    print(f"{'seed':>6} {'computed':>9} {'skipped':>8} {'cm':>5} {'viol':>5} {'secs':>7}")
    for seed in ns.seeds:
        t0 = time.perf_counter()
        res = question_explorer(seed, ns.count, shape, workers=ns.workers)
        s = res["summary"]
        print(f"{seed:>6} {s['computed']:>9} {s['skipped']:>8} {s['cm_regime']:>5} {s['violations']:>5} "
              f"{time.perf_counter() - t0:>7.2f}")
        for inst in res["instances"]:
            if inst.get("violation"):
                print(f"  violation at index {inst['index']}: {inst['I']} reg F {inst['reg_F']} > r {inst['r']}")
        runs.append(res)
    if ns.out:
        with open(ns.out, "w") as fh:
            json.dump(runs, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()

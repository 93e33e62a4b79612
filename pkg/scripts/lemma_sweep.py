"""Run the codim J_c harness over the default configuration sweep and tabulate it."""

import argparse
import json
import time

from strengthlab.ci import lemma_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50, help="trials per configuration")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    summaries = lemma_sweep(args.trials, args.seed)
    if args.json:
        print(json.dumps([s.to_dict() for s in summaries], separators=(",", ":")))
        return
    print(f"{'config':<40} {'bound':>5} {'max':>4} {'eq':>4} {'viol':>4}")
    for s in summaries:
        d = s.to_dict()
        print(f"{s.params.to_text():<40} {d['bound']:>5} {d['max_codim']:>4} {d['equality_cases']:>4} {d['violation_count']:>4}")
    total = sum(s.trials for s in summaries)
    print(f"{total} trials in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python state-sum kernels.

Times ``state_histogram`` on closures of 2-braids of growing length (the
kernel walks all 2**n smoothings) and checks both backends return the
same histogram.

    python3 benchmarks/bench_state_sum.py --max-crossings 16 --repeat 3
"""

from __future__ import annotations

import argparse
import json
import sys
import timeit

import numpy as np

from chernsplit import _kernels
from chernsplit.linkmodel import BraidWord, braid_closure
from chernsplit.skein import state_histogram


def time_backend(pd, backend: str, repeat: int) -> float:
    timer = timeit.Timer(lambda: state_histogram(pd, backend))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-crossings", type=int, default=4)
    p.add_argument("--max-crossings", type=int, default=12)
    p.add_argument("--step", type=int, default=2)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", action="store_true", help="print rows as JSON")
    args = p.parse_args(argv)

    if _kernels.compiled_state_histogram is None:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    rows = []
    for n in range(args.min_crossings, args.max_crossings + 1, args.step):
        pd = braid_closure(BraidWord(2, (1,) * n))
        if not np.array_equal(state_histogram(pd, "cython"), state_histogram(pd, "python")):
            print(f"backends disagree at n = {n}", file=sys.stderr)
            return 2
        t_c = time_backend(pd, "cython", args.repeat)
        t_py = time_backend(pd, "python", args.repeat)
        rows.append({"crossings": n, "cython_s": t_c, "python_s": t_py, "speedup": t_py / t_c})

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'n':>4} {'cython [s]':>12} {'python [s]':>12} {'speedup':>9}")
    for r in rows:
        print(f"{r['crossings']:>4} {r['cython_s']:>12.3e} {r['python_s']:>12.3e} {r['speedup']:>9.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Compare the compiled multiplication search with the pure-Python fallback.

Each mode runs in its own interpreter because the flag is read at import.

    python3 benchmarks/bench_kernels.py --sizes 5 6 7
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
from reslat import _accel
from reslat.enumeration import enumerate_skeletons, raw_multiplications
out = {"jit": _accel.JIT_ENABLED}
for n in map(int, sys.argv[1:]):
    sks = enumerate_skeletons(n)
    raw_multiplications(sks[0])  # warm-up (compile or cache load)
    t = time.perf_counter()
    total = sum(len(raw_multiplications(sk)) for sk in sks)
    out[n] = {"seconds": time.perf_counter() - t, "tables": total}
print(json.dumps(out))
"""


def run(sizes, disable):
    env = dict(os.environ)
    if disable:
        env["RESLAT_DISABLE_JIT"] = "1"
    else:
        env.pop("RESLAT_DISABLE_JIT", None)
    res = subprocess.run([sys.executable, "-c", CHILD, *map(str, sizes)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7])
    args = ap.parse_args(argv)
    jit = run(args.sizes, disable=False)
    pure = run(args.sizes, disable=True)
    print(f"{'size':>4} {'tables':>8} {'numba s':>9} {'python s':>9} {'speedup':>8}")
    for n in args.sizes:
        a, b = jit[str(n)], pure[str(n)]
        if a["tables"] != b["tables"]:
            raise SystemExit(f"size {n}: table counts differ ({a['tables']} vs {b['tables']})")
        ratio = b["seconds"] / a["seconds"] if a["seconds"] else float("inf")
        print(f"{n:>4} {a['tables']:>8} {a['seconds']:>9.3f} {b['seconds']:>9.3f} {ratio:>7.1f}x")
    if not jit["jit"]:
        print("note: numba unavailable, both columns ran the fallback")


if __name__ == "__main__":
    main()

"""Benchmark the compiled polynomial kernel against the pure-Python twin.

Micro-benchmarks call both implementations in one process on identical
inputs; the end-to-end rows run a fresh interpreter per kernel (caches cold)
with QSK_PURE_KERNEL selecting the implementation.

Usage: python3 benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from qschub._kernels import pure  # noqa: E402

try:
    from qschub._kernels import cyk
except ImportError:
    cyk = None


def _dense_poly(nvars: int, deg: int) -> dict:
    """(x_1 + ... + x_nvars + q_1 + 1)^deg as a kernel dict."""
    base = {(): 1}
    for i in range(1, nvars + 1):
        base[(i, 1)] = 1
    base[((2 << 20) | 1, 1)] = 1
    out = {(): 1}
    for _ in range(deg):
        out = pure.pmul(out, base)
    return out


def _time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def micro_rows(repeat: int):
    small = _dense_poly(4, 4)
    big = _dense_poly(5, 6)
    cases = [
        (f"pmul  {len(small)}x{len(small)} terms", "pmul", (small, small)),
        (f"pmul  {len(big)}x{len(big)} terms", "pmul", (big, big)),
        (f"padd  {len(big)} terms", "padd", (big, big)),
        (f"pdivdiff  {len(big)} terms", "pdivdiff", (big, 1, 2)),
        (f"pswap  {len(big)} terms", "pswap", (big, 1, 2)),
    ]
    for label, name, args in cases:
        tp = _time(getattr(pure, name), *args, repeat=repeat)
        tc = _time(getattr(cyk, name), *args, repeat=repeat) if cyk else float("nan")
        yield label, tp, tc


END_TO_END = [
    (
        "top-cell double, rank 5",
        "import qschub; qschub.q_w0_double(5)",
    ),
    (
        "all quantum Schuberts, rank 5",
        "import qschub, qschub.perms as p;"
        "[qschub.q_schubert(w) for w in p.permutations(5)]",
    ),
    (
        "identity suites, rank 4",
        "import qschub; qschub.run_all(4)",
    ),
]


def end_to_end_rows(repeat: int):
    for label, code in END_TO_END:
        times = {}
        for kernel, env_val in (("pure", "1"), ("cyk", "0")):
            if kernel == "cyk" and cyk is None:
                times[kernel] = float("nan")
                continue
            env = dict(os.environ, QSK_PURE_KERNEL=env_val)
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                subprocess.run(
                    [sys.executable, "-c", code],
                    check=True,
                    env=env,
                    cwd=os.path.dirname(os.path.abspath(__file__)),
                )
                best = min(best, time.perf_counter() - t0)
            times[kernel] = best
        yield label, times["pure"], times["cyk"]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if cyk is None:
        print("note: compiled kernel not built; pure-Python numbers only\n")

    print(f"{'benchmark':42s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    print("-" * 74)
    for label, tp, tc in micro_rows(args.repeat):
        ratio = tp / tc if tc == tc and tc > 0 else float("nan")
        print(f"{label:42s} {tp * 1e3:9.2f}ms {tc * 1e3:9.2f}ms {ratio:7.1f}x")
    for label, tp, tc in end_to_end_rows(args.repeat):
        ratio = tp / tc if tc == tc and tc > 0 else float("nan")
        print(f"{label:42s} {tp:9.2f}s  {tc:9.2f}s  {ratio:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

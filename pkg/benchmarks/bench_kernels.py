"""Compare the compiled and Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Times the three kernels on inputs shaped like the ones the verifier produces
(polynomial gcds modulo a 31-bit prime and Morita products), then an end-to-end
check run under each backend in a fresh interpreter.
"""

import argparse
import os
import random
import subprocess
import sys
import time

from qsupercong import _kernels

P = 2147483647


def _poly(rng, deg):
    return [rng.randrange(P) for _ in range(deg)] + [1]


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_table(repeat):
    rng = random.Random(0)
    cases = []
    for deg in (100, 400, 1600):
        common = _poly(rng, deg // 4)
        a = _mul_mod(_poly(rng, deg), common)
        b = _mul_mod(_poly(rng, deg - 7), common)
        cases.append((f"gcd_mod deg {deg}", "gcd_mod", (a, b, P)))
        cases.append((f"rem_mod deg {2 * deg}/{deg}", "rem_mod", (_mul_mod(a, a), b, P)))
    for p, k, m in ((7, 5, 5000), (13, 4, 20000), (101, 3, 200000)):
        cases.append((f"morita_product p={p} m={m}", "morita_product", (m, p, p ** k)))
    backends = [("python", _kernels.python_backend)]
    if _kernels.compiled_backend is not None:
        backends.append(("cython", _kernels.compiled_backend))
    print(f"{'kernel':34}" + "".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for label, fname, args in cases:
        times = [_time(lambda m=mod: getattr(m, fname)(*args), repeat) for _, mod in backends]
        row = f"{label:34}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:6.1f}x"
        print(row)


def _mul_mod(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % P
    return out


END_TO_END = ("from qsupercong.hypersums import run_statement, ParamSampler\n"
              "import time\n"
              "t0 = time.perf_counter()\n"
              "for n in (17, 21, 25):\n"
              "    run_statement('thm_1_1', n, 'full', ParamSampler(42), 1)\n"
              "print(time.perf_counter() - t0)\n")


def end_to_end():
    print("\nthm_1_1, n = 17, 21, 25, full truncation, one trial each:")
    for name, env in (("python", {"QSUPERCONG_PURE_PYTHON": "1"}), ("cython", {})):
        if name == "cython" and _kernels.compiled_backend is None:
            print("  cython: extension not built")
            continue
        out = subprocess.run([sys.executable, "-c", END_TO_END], capture_output=True, text=True,
                             env={**os.environ, **env}, check=True)
        print(f"  {name:7} {float(out.stdout):.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    print(f"active backend: {_kernels.BACKEND}\n")
    kernel_table(args.repeat)
    if not args.skip_end_to_end:
        end_to_end()


if __name__ == "__main__":
    main()

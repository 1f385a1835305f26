"""Compare the compiled line kernel with the pure-Python fallback.

Times one splitting step on square grids and one full two-step inpainting
of a damaged 28x28 digit-like image, for each available backend.

    python3 benchmarks/bench_kernels.py [--sizes 28,64,128] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from chinpaint import kernels
from chinpaint.damage import DamageSpec, apply_damage
from chinpaint.field import InpaintMask, PhaseField, SolverParams
from chinpaint.inpaint import inpaint, preset_for
from chinpaint.solver import step_splitting


def backends():
    return ["compiled", "python"] if kernels.BACKEND == "compiled" else ["python"]


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def bench_step(n, repeat, backend):
    rng = np.random.default_rng(0)
    f = PhaseField(rng.uniform(-1, 1, (n, n)))
    mask = InpaintMask(rng.random((n, n)) < 0.3)
    p = SolverParams(epsilon=1.5, lambda0=1000.0, dt=0.1)
    return best_of(lambda: step_splitting(f, f, mask, p, backend=backend), repeat)


def bench_inpaint(repeat, backend):
    v = -np.ones((28, 28))
    v[5:23, 12:16] = 1.0
    v[12:16, 6:22] = 1.0
    damaged, mask = apply_damage(PhaseField(v), DamageSpec("random_rows", count=8, seed=1))
    cfg = preset_for("random_rows")
    return best_of(lambda: inpaint(damaged, mask, cfg, backend=backend), repeat)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="28,64,128")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    names = backends()
    print(f"{'case':>16}  " + "  ".join(f"{b:>10}" for b in names)
          + ("    speedup" if len(names) == 2 else ""))
    rows = [(f"step {n}x{n}", lambda b, n=n: bench_step(n, args.repeat, b)) for n in sizes]
    rows.append(("inpaint 28x28", lambda b: bench_inpaint(1, b)))
    for label, fn in rows:
        times = [fn(b) for b in names]
        line = f"{label:>16}  " + "  ".join(f"{t * 1e3:>8.2f}ms" for t in times)
        if len(times) == 2:
            line += f"  {times[1] / times[0]:>9.1f}x"
        print(line, flush=True)


if __name__ == "__main__":
    main()

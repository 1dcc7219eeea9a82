"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--number 20]

Shapes follow a 64x64 training batch of 8 through the first two encoder stages.
"""
import argparse
import timeit

import numpy as np

from ttmg._ext import fallback

try:
    from ttmg._ext import _kernels as compiled
except ImportError:
    compiled = None


def cases(rng):
    for n, cin, cout, hw in ((8, 3, 8, 64), (8, 8, 16, 32), (8, 16, 32, 16)):
        x = rng.normal(size=(n, cin, hw, hw))
        k = rng.normal(size=(cout, cin, 3, 3))
        b = rng.normal(size=cout)
        g = rng.normal(size=(n, cout, hw, hw))
        tag = f"{n}x{cin}x{hw}x{hw}->{cout}"
        yield f"im2col {tag}", lambda mod, x=x: mod.im2col(x)
        yield f"conv fwd {tag}", lambda mod, x=x, k=k, b=b: mod.conv2d_forward(x, k, b)
        cols = fallback.im2col(x).copy()
        yield f"conv bwd {tag}", lambda mod, c=cols, k=k, g=g, s=x.shape: mod.conv2d_backward(c, k, g, s)
    for size in (28, 496):
        v = rng.exponential(size=size)
        init = np.sort(rng.choice(v, 3, replace=False))
        yield f"lloyd n={size}", lambda mod, v=v, init=init: mod.lloyd_1d(v, init, 100)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args()
    backends = [("python", fallback)] + ([("compiled", compiled)] if compiled else [])
    if compiled is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'kernel':<34}" + "".join(f"{name:>14}" for name, _ in backends) + "   speedup")
    for name, fn in cases(np.random.default_rng(0)):
        times = [min(timeit.repeat(lambda: fn(mod), repeat=args.repeat, number=args.number)) / args.number
                 for _, mod in backends]
        ratio = f"{times[0] / times[1]:8.2f}x" if len(times) == 2 else ""
        print(f"{name:<34}" + "".join(f"{1e3 * t:12.3f}ms" for t in times) + "  " + ratio)


if __name__ == "__main__":
    main()

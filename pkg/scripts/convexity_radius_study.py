"""Compare the closed-form convexity radius with a bisection estimate as |b_1| grows.

For each |b_1| the test function is the hull member that puts weight on g_1 and
the rest on one extreme point h_k; the table lists the formula, the estimate and
their gap.
"""

import argparse

import numpy as np

from pqharmonic.bounds import convexity_radius
from pqharmonic.extremal import WeightVector, _g_coeff, combine
from pqharmonic.family import preset
from pqharmonic.verify import brute_convexity_radius


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--preset", default="starlike")
    ap.add_argument("--alpha", type=float, default=0.0)
    ap.add_argument("--k", type=int, default=2, help="index of the analytic extreme point")
    ap.add_argument("--steps", type=int, default=9)
    args = ap.parse_args(argv)

    spec = preset(args.preset, args.alpha, trunc=max(8, args.k))
    b1_max = abs(_g_coeff(spec)[1])
    print(f"{args.preset} alpha={args.alpha} k={args.k}")
    print(f"{'|b1|':>8}{'formula':>10}{'bisection':>11}{'gap':>9}")
    for b1 in np.linspace(0.0, 0.9 * min(1.0, b1_max), args.steps):
        y1 = b1 / b1_max
        x = np.zeros(args.k)
        x[args.k - 1] = 1.0 - y1
        f = combine(spec, WeightVector(x, [y1]))
        formula = convexity_radius(spec, b1)
        brute = brute_convexity_radius(f)
        print(f"{b1:>8.3f}{formula:>10.4f}{brute:>11.4f}{brute - formula:>9.4f}")


if __name__ == "__main__":
    main()

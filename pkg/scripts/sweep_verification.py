"""Grid-verify random hull members of every preset and print the worst margins.

    python3 scripts/sweep_verification.py --samples 50 --alphas 0 0.5 0.9
"""

import argparse

import numpy as np

from pqharmonic.extremal import random_t_member
from pqharmonic.family import preset
from pqharmonic.verify import GridSpec, check_re_condition, check_sense_preserving


def build_presets(alpha, q):
    return [
        preset("starlike", alpha), preset("convex", alpha),
        preset("starlike_q", alpha, q=q), preset("convex_q", alpha, q=q),
        preset("yalcin", alpha, m=3, n=1), preset("convolution", alpha),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=25)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.0, 0.3, 0.6, 0.9])
    ap.add_argument("--q", type=float, default=0.5)
    ap.add_argument("--radii", type=int, default=12)
    ap.add_argument("--angles", type=int, default=360)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    grid = GridSpec.uniform(args.radii, args.angles)
    print(f"{'preset':<28}{'alpha':>6}{'min Re margin':>16}{'min 1-|w|':>12}{'failures':>10}")
    for alpha in args.alphas:
        for spec in build_presets(alpha, args.q):
            re_min, sp_min, fails = np.inf, np.inf, 0
            for _ in range(args.samples):
                f = random_t_member(spec, rng)
                re = check_re_condition(f, spec, grid)
                sp = check_sense_preserving(f, grid)
                re_min, sp_min = min(re_min, re.min_margin), min(sp_min, sp.min_margin)
                fails += not (re.passed and sp.passed)
            print(f"{spec.name:<28}{alpha:>6.2f}{re_min:>16.3e}{sp_min:>12.3e}{fails:>10d}")


if __name__ == "__main__":
    main()

"""Render the grid images of the first few extreme points of a preset.

    python3 scripts/render_gallery.py --preset convex --out gallery/ --format svg
"""

import argparse
import warnings
from pathlib import Path

from pqharmonic.extremal import NonUnivalentWarning, extreme_g, extreme_h
from pqharmonic.family import preset
from pqharmonic.render import render


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--preset", default="starlike")
    ap.add_argument("--alpha", type=float, default=0.0)
    ap.add_argument("--k-max", type=int, default=4)
    ap.add_argument("--out", default="gallery")
    ap.add_argument("--format", choices=("ppm", "svg"), default="ppm")
    args = ap.parse_args(argv)

    spec = preset(args.preset, args.alpha)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonUnivalentWarning)
        for k in range(1, args.k_max + 1):
            for kind, make in (("h", extreme_h), ("g", extreme_g)):
                if kind == "h" and k == 1:
                    continue
                path = render(make(spec, k), out / f"{args.preset}_{kind}{k}.{args.format}")
                print(path)


if __name__ == "__main__":
    main()

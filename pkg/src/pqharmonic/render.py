"""Static pictures of f(D): images of a polar grid as binary PPM or SVG."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .series import HarmonicFunction, evaluate

CIRCLE_RGB = (31, 119, 180)
RAY_RGB = (214, 39, 40)
POINTS_PER_CURVE = 400


def grid_polylines(f: HarmonicFunction, circles: int = 8, rays: int = 8, r_max: float = 0.99):
    """Images of |z| = r_i and arg z = t_j; returns (circle_curves, ray_curves)."""
    if circles < 8 or rays < 8:
        raise ValueError("density must be at least 8 circles x 8 rays")
    t = 2 * np.pi * np.arange(POINTS_PER_CURVE + 1) / POINTS_PER_CURVE
    s = np.linspace(0.0, r_max, POINTS_PER_CURVE)
    circ = [evaluate(f, r_max * (i + 1) / circles * np.exp(1j * t)) for i in range(circles)]
    ray = [evaluate(f, s * np.exp(2j * np.pi * j / rays)) for j in range(rays)]
    return circ, ray


def _frame(curves, size: int, pad: int):
    pts = np.concatenate(curves)
    lo_x, hi_x = pts.real.min(), pts.real.max()
    lo_y, hi_y = pts.imag.min(), pts.imag.max()
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-12)
    scale = (size - 2 * pad) / span
    cx, cy = 0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)

    def to_px(w):
        return size / 2 + (w.real - cx) * scale, size / 2 - (w.imag - cy) * scale

    return to_px


def _draw_polyline(img: np.ndarray, xs: np.ndarray, ys: np.ndarray, rgb):
    h, w, _ = img.shape
    for x0, y0, x1, y1 in zip(xs[:-1], ys[:-1], xs[1:], ys[1:]):
        steps = int(max(abs(x1 - x0), abs(y1 - y0))) + 1
        px = np.rint(np.linspace(x0, x1, steps + 1)).astype(int)
        py = np.rint(np.linspace(y0, y1, steps + 1)).astype(int)
        keep = (px >= 0) & (px < w) & (py >= 0) & (py < h)
        img[py[keep], px[keep]] = rgb


def to_ppm(circ, ray, size: int = 512, pad: int = 16) -> bytes:
    to_px = _frame(circ + ray, size, pad)
    img = np.full((size, size, 3), 255, dtype=np.uint8)
    for curves, rgb in ((ray, RAY_RGB), (circ, CIRCLE_RGB)):
        for c in curves:
            _draw_polyline(img, *to_px(c), rgb)
    return f"P6\n{size} {size}\n255\n".encode("ascii") + img.tobytes()


def to_svg(circ, ray, size: int = 512, pad: int = 16) -> str:
    to_px = _frame(circ + ray, size, pad)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for curves, rgb in ((ray, RAY_RGB), (circ, CIRCLE_RGB)):
        color = "#%02x%02x%02x" % rgb
        for c in curves:
            xs, ys = to_px(c)
            d = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(xs, ys))
            out.append(f'<path d="M {d}" fill="none" stroke="{color}" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(f: HarmonicFunction, path, fmt: str | None = None, circles: int = 8, rays: int = 8,
           size: int = 512, r_max: float = 0.99) -> Path:
    """Write the image of a polar grid under f to ``path`` (format from suffix if not given)."""
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip(".") or "ppm").lower()
    if fmt not in ("ppm", "svg"):
        raise ValueError(f"unsupported format {fmt!r}")
    circ, ray = grid_polylines(f, circles, rays, r_max)
    if fmt == "ppm":
        data = to_ppm(circ, ray, size)
    else:
        data = to_svg(circ, ray, size).encode("utf-8")
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise IOError(f"cannot write {path}: {exc}") from exc
    return path

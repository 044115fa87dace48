"""Command-line entry point: one JSON-configured job per invocation.

Usage::

    pqharmonic --config job.json
    pqharmonic --action bounds --preset starlike --alpha 0.2
    pqharmonic --config job.json --out report.json

Exit status: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from pathlib import Path

import numpy as np

from . import bounds as bnd
from . import extremal, family, verify
from .config import ACTIONS, JobConfig, config_from_mapping
from .errors import PQHarmonicError
from .family import PRESETS
from .pq_core import bracket
from .render import render

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _coeffs_json(f):
    def enc(arr):
        return [c.real if c.imag == 0 else [c.real, c.imag] for c in arr]

    a, b = f.a[2:], f.b[1:]
    last_a = np.flatnonzero(a)
    last_b = np.flatnonzero(b)
    a = a[: last_a[-1] + 1] if last_a.size else a[:0]
    b = b[: last_b[-1] + 1] if last_b.size else b[:0]
    return {"a": enc(a), "b": enc(b)}


def _guard(fn, *args, warn_list, label, **kw):
    try:
        return fn(*args, **kw)
    except PQHarmonicError as exc:
        warn_list.append(f"{label}: {exc}")
        return None


def _do_check(cfg, f, warn):
    spec = cfg.family
    F = family.coefficient_functional(f, spec)
    tol = cfg.options.get("membership_tol", family.MEMBERSHIP_TOL)
    return {
        "functional": F,
        "member_sufficient": family.is_member_sufficient(f, spec, tol),
        "t_pattern": family.has_t_pattern(f, spec, tol),
        "member_T": family.is_member_T(f, spec, tol),
    }, True


def _do_bounds(cfg, f, warn):
    spec = cfg.family
    b1 = float(cfg.options.get("b1", abs(f.b[1])))
    k_max = int(cfg.options.get("k_max", 8))
    hyp = bnd.check_thm3_hypothesis(spec)
    coeff = []
    for k in range(1, k_max + 1):
        res = _guard(bnd.coeff_bounds, spec, k, warn_list=warn, label=f"coeff_bounds(k={k})")
        coeff.append({"k": k, "a_max": None if res is None else res[0],
                      "b_max": None if res is None else res[1]})
    radii = list(cfg.grid.radii)
    dist = _guard(bnd.distortion, spec, b1, np.array(radii), cfg.mode, warn_list=warn,
                  label="distortion")
    out = {
        "b1": b1,
        "mode": cfg.mode.value,
        "beta": bnd.beta(spec),
        "hypothesis_nondecreasing": hyp,
        "covering_radius": _guard(bnd.covering_radius, spec, b1, cfg.mode, warn_list=warn,
                                  label="covering_radius"),
        "convexity_radius": _guard(bnd.convexity_radius, spec, b1, warn_list=warn,
                                   label="convexity_radius"),
        "coefficient_bounds": coeff,
        "distortion": None if dist is None else [
            {"r": r, "lower": lo, "upper": hi} for r, lo, hi in zip(radii, *map(list, dist))
        ],
    }
    return out, True


def _do_extremal(cfg, f, warn):
    spec = cfg.family
    k_max = min(int(cfg.options.get("k_max", 8)), spec.trunc)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        points = []
        for k in range(1, k_max + 1):
            points.append({"kind": "h", "k": k, **_coeffs_json(extremal.extreme_h(spec, k))})
            g = extremal.extreme_g(spec, k)
            points.append({"kind": "g", "k": k, **_coeffs_json(g),
                           "degenerate": extremal.is_degenerate_extreme(spec, "g", k)})
    warn.extend(str(w.message) for w in caught)
    out = {"extreme_points": points, "decomposition": None}
    if family.is_member_T(f, spec):
        w = extremal.decompose(f, spec)
        out["decomposition"] = {
            "x": {str(k + 1): v for k, v in enumerate(w.x) if v != 0},
            "y": {str(k + 1): v for k, v in enumerate(w.y) if v != 0},
        }
    return out, True


def _do_verify(cfg, f, warn):
    spec = cfg.family
    re = verify.check_re_condition(f, spec, cfg.grid, cfg.tol)
    sp = verify.check_sense_preserving(f, cfg.grid, cfg.tol)
    out = {"re_condition": re.to_json(), "sense_preserving": sp.to_json(),
           "functional": family.coefficient_functional(f, spec)}
    ok = re.passed and sp.passed
    if family.is_member_T(f, spec) and bnd.check_thm3_hypothesis(spec):
        d = verify.check_distortion(f, spec, cfg.mode, tol=cfg.tol)
        out["distortion"] = d.to_json()
        ok = ok and d.passed
    if family.has_t_pattern(f, spec) and out["functional"] >= 1.05:
        out["necessity_probe"] = verify.necessity_probe(f, spec).to_json()
    return out, ok


def _do_render(cfg, f, warn):
    opts = cfg.options
    fmt = opts.get("format")
    path = cfg.output or f"render.{fmt or 'ppm'}"
    p = render(f, path, fmt, int(opts.get("circles", 8)), int(opts.get("rays", 8)),
               int(opts.get("size", 512)), float(opts.get("r_max", 0.99)))
    data = p.read_bytes()
    return {"path": str(p), "format": (fmt or p.suffix.lstrip(".")).lower(), "bytes": len(data),
            "sha256": hashlib.sha256(data).hexdigest()}, True


def _do_bracket(cfg, f, warn):
    ks = cfg.options.get("k", list(range(0, 11)))
    ks = [ks] if isinstance(ks, int) else ks
    pq = cfg.family.pq
    return {"p": pq.p, "q": pq.q, "brackets": {str(k): bracket(int(k), pq) for k in ks}}, True


_ACTIONS = {"check": _do_check, "bounds": _do_bounds, "extremal": _do_extremal,
            "verify": _do_verify, "render": _do_render, "bracket": _do_bracket}


def run(cfg: JobConfig) -> tuple[dict, int]:
    """Execute one job; returns (report, exit status)."""
    t0 = time.perf_counter()
    warn = list(cfg.warnings)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            f = cfg.harmonic()
        warn.extend(str(w.message) for w in caught)
        results, ok = _ACTIONS[cfg.action](cfg, f, warn)
        status, code = ("pass", EXIT_OK) if ok else ("fail", EXIT_FAIL)
    except (PQHarmonicError, ValueError, OSError) as exc:
        results, status, code = {"error": str(exc)}, "error", EXIT_INPUT
    report = {
        "action": cfg.action,
        "inputs": cfg.to_json(),
        "results": results,
        "warnings": warn,
        "timings": {"total_s": time.perf_counter() - t0},
        "status": status,
        "exit_code": code,
    }
    return report, code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pqharmonic", description=__doc__.split("\n")[0])
    ap.add_argument("--config", help="JSON job file ('-' for stdin)")
    ap.add_argument("--action", choices=ACTIONS)
    ap.add_argument("--preset", choices=PRESETS)
    ap.add_argument("--alpha", type=float)
    ap.add_argument("--p", type=float)
    ap.add_argument("--q", type=float)
    ap.add_argument("--m", type=int)
    ap.add_argument("--n", type=int)
    ap.add_argument("--trunc", type=int)
    ap.add_argument("--a", help="comma-separated a_2, a_3, ...")
    ap.add_argument("--b", help="comma-separated b_1, b_2, ...")
    ap.add_argument("--extreme", help="extreme point such as h2 or g1")
    ap.add_argument("--grid-radii", help="comma-separated radii")
    ap.add_argument("--tol", type=float)
    ap.add_argument("--mode", choices=[m.value for m in bnd.DistortionMode])
    ap.add_argument("--out", help="report path (image path for action=render)")
    ap.add_argument("--format", choices=("ppm", "svg"))
    return ap


def _floats(text):
    return [float(t) for t in text.split(",") if t.strip()]


def _merge(doc: dict, args, warn: list) -> dict:
    """Fold CLI flags into the JSON document; JSON values win on conflict."""

    def put(container, key, value, label):
        if value is None:
            return
        if key in container and container[key] != value:
            warn.append(f"--{label}={value} ignored: config sets {key}={container[key]!r}")
            return
        container[key] = value

    fam = doc.setdefault("family", {})
    if args.preset is None and not fam:
        fam["preset"] = "starlike"
    put(fam, "preset", args.preset, "preset")
    for key in ("alpha", "p", "q", "m", "n", "trunc"):
        put(fam, key, getattr(args, key), key)
    put(doc, "action", args.action, "action")
    put(doc, "tol", args.tol, "tol")
    put(doc, "mode", args.mode, "mode")
    put(doc, "output", args.out, "out")
    if args.grid_radii:
        put(doc.setdefault("grid", {}), "radii", _floats(args.grid_radii), "grid-radii")
    if args.format:
        put(doc.setdefault("options", {}), "format", args.format, "format")
    if args.a is not None or args.b is not None or args.extreme:
        if "function" in doc:
            warn.append("function flags ignored: config provides a function")
        elif args.extreme:
            doc["function"] = {"extreme": {"kind": args.extreme[0], "k": int(args.extreme[1:])}}
        else:
            doc["function"] = {"a": _floats(args.a or ""), "b": _floats(args.b or "")}
    return doc


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cli_warn: list[str] = []
    try:
        doc = {}
        if args.config:
            text = sys.stdin.read() if args.config == "-" else Path(args.config).read_text("utf-8")
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise PQHarmonicError(f"malformed JSON: {exc}") from exc
            if not isinstance(doc, dict):
                raise PQHarmonicError("top level must be an object")
        cfg = config_from_mapping(_merge(doc, args, cli_warn))
    except (PQHarmonicError, OSError, ValueError) as exc:
        print(json.dumps({"status": "error", "exit_code": EXIT_INPUT, "error": str(exc),
                          "warnings": cli_warn}, indent=2))
        return EXIT_INPUT
    report, code = run(cfg)
    report["warnings"] = cli_warn + report["warnings"]
    text = json.dumps(report, indent=2)
    if cfg.output and cfg.action != "render":
        Path(cfg.output).write_text(text + "\n", encoding="utf-8")
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""JSON job configuration: parsing, validation and canonical serialization."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
import json
from typing import Any, Mapping

from .bounds import DistortionMode
from .errors import ParseError, UnknownPreset, ValidationError
from .extremal import WeightVector, combine, extreme_g, extreme_h
from .family import PRESETS, FamilySpec, preset
from .pq_core import PQParams
from .series import HarmonicFunction
from .verify import GridSpec

ACTIONS = ("check", "bounds", "extremal", "verify", "render", "bracket")

_FAMILY_KEYS = {"preset", "name", "m", "n", "i", "j", "alpha", "p", "q",
                "lambda", "mu", "u", "v", "trunc"}


@dataclass(frozen=True)
class FunctionSource:
    """Exactly one of: coefficients, hull weights, or a named extreme point."""

    kind: str = "coeffs"
    a: tuple = ()
    b: tuple = ()
    x: tuple = ()
    y: tuple = ()
    extreme: tuple = ()

    def build(self, spec: FamilySpec) -> HarmonicFunction:
        if self.kind == "coeffs":
            return HarmonicFunction.from_coeffs(self.a, self.b, trunc=spec.trunc)
        if self.kind == "weights":
            return combine(spec, WeightVector(self.x, self.y))
        kind, k = self.extreme
        return extreme_h(spec, k) if kind == "h" else extreme_g(spec, k)

    def to_json(self) -> dict:
        if self.kind == "coeffs":
            return {"a": [_num_json(c) for c in self.a], "b": [_num_json(c) for c in self.b]}
        if self.kind == "weights":
            return {"weights": {"x": list(self.x), "y": list(self.y)}}
        return {"extreme": {"kind": self.extreme[0], "k": self.extreme[1]}}


@dataclass(frozen=True)
class JobConfig:
    family: FamilySpec
    function: FunctionSource = field(default_factory=FunctionSource)
    action: str = "check"
    grid: GridSpec = field(default_factory=GridSpec.uniform)
    tol: float = 1e-9
    mode: DistortionMode = DistortionMode.PROOF
    output: str | None = None
    options: Mapping[str, Any] = field(default_factory=dict)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def harmonic(self) -> HarmonicFunction:
        return self.function.build(self.family)

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "function": self.function.to_json(),
            "action": self.action,
            "grid": self.grid.to_json(),
            "tol": self.tol,
            "mode": self.mode.value,
            "output": self.output,
            "options": dict(self.options),
        }


def serialize(cfg: JobConfig) -> str:
    return json.dumps(cfg.to_json(), indent=2, sort_keys=True)


def _num_json(c):
    c = complex(c)
    return c.real if c.imag == 0 else [c.real, c.imag]


def _num(value, path):
    if isinstance(value, bool):
        raise ValidationError("expected a number", path)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(_num(value[0], path), _num(value[1], path))
    raise ValidationError(f"expected a number or [re, im], got {value!r}", path)


def _int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"expected an integer, got {value!r}", path)
    return value


def _parse_family(obj, path="family") -> FamilySpec:
    if not isinstance(obj, Mapping):
        raise ValidationError("expected an object", path)
    unknown = set(obj) - _FAMILY_KEYS
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)}", path)
    seq_keys = {"lambda": "lam", "mu": "mu", "u": "u", "v": "v"}
    try:
        if "preset" in obj:
            name = obj["preset"]
            kw: dict[str, Any] = {"alpha": float(obj.get("alpha", 0.0))}
            if "trunc" in obj:
                kw["trunc"] = _int(obj["trunc"], f"{path}.trunc")
            if name in ("starlike_q", "convex_q") and "q" in obj:
                kw["q"] = float(obj["q"])
            if name == "yalcin":
                kw.update({k: _int(obj[k], f"{path}.{k}") for k in ("m", "n") if k in obj})
            if name == "convolution":
                kw.update({k: _int(obj[k], f"{path}.{k}") for k in ("i", "j") if k in obj})
                kw.update({seq_keys[k]: obj[k] for k in seq_keys if k in obj})
            spec = preset(name, **kw)
            over = {}
            for k in ("m", "n", "i", "j"):
                if k in obj and k not in kw:
                    over[k] = _int(obj[k], f"{path}.{k}")
            for k, attr in seq_keys.items():
                if k in obj and attr not in kw:
                    over[attr] = obj[k]
            p = float(obj.get("p", spec.pq.p))
            q = float(obj["q"]) if "q" in obj else spec.pq.q
            if (p, q) != (spec.pq.p, spec.pq.q):
                over["pq"] = PQParams(p, q)
            if "name" in obj:
                over["name"] = obj["name"]
            return replace(spec, **over) if over else spec
        kw = {k: _int(obj[k], f"{path}.{k}") for k in ("m", "n", "i", "j") if k in obj}
        kw.update({seq_keys[k]: obj[k] for k in seq_keys if k in obj})
        kw["alpha"] = float(obj.get("alpha", 0.0))
        kw["pq"] = PQParams(float(obj.get("p", 1.0)), float(obj.get("q", 1.0)))
        if "trunc" in obj:
            kw["trunc"] = _int(obj["trunc"], f"{path}.trunc")
        kw["name"] = obj.get("name", "custom")
        return FamilySpec(**kw)
    except UnknownPreset as exc:
        raise ValidationError(str(exc), f"{path}.preset") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(str(exc), path) from exc


def _parse_function(obj, path="function") -> FunctionSource:
    if obj is None:
        return FunctionSource()
    if not isinstance(obj, Mapping):
        raise ValidationError("expected an object", path)
    sources = [k for k in ("coeffs", "weights", "extreme") if
               (k == "coeffs" and ("a" in obj or "b" in obj)) or (k != "coeffs" and k in obj)]
    if len(sources) != 1:
        raise ValidationError("give exactly one of {a, b}, weights, extreme", path)
    src = sources[0]
    if src == "coeffs":
        a = tuple(_num(c, f"{path}.a[{n}]") for n, c in enumerate(obj.get("a", [])))
        b = tuple(_num(c, f"{path}.b[{n}]") for n, c in enumerate(obj.get("b", [])))
        return FunctionSource("coeffs", a=a, b=b)
    if src == "weights":
        w = obj["weights"]
        if not isinstance(w, Mapping):
            raise ValidationError("expected {x: [...], y: [...]}", f"{path}.weights")
        x = tuple(float(_num(c, f"{path}.weights.x")) for c in w.get("x", []))
        y = tuple(float(_num(c, f"{path}.weights.y")) for c in w.get("y", []))
        return FunctionSource("weights", x=x, y=y)
    e = obj["extreme"]
    if not isinstance(e, Mapping) or e.get("kind") not in ("h", "g"):
        raise ValidationError("expected {kind: h|g, k: int}", f"{path}.extreme")
    k = _int(e.get("k"), f"{path}.extreme.k")
    return FunctionSource("extreme", extreme=(e["kind"], k))


def _parse_grid(obj, path="grid") -> GridSpec:
    if obj is None:
        return GridSpec.uniform()
    if not isinstance(obj, Mapping):
        raise ValidationError("expected an object", path)
    try:
        r_max = float(obj.get("r_max", 0.999))
        angles = _int(obj.get("angles_per_circle", 360), f"{path}.angles_per_circle")
        if "radii" in obj:
            return GridSpec(tuple(float(r) for r in obj["radii"]), angles, r_max)
        n = _int(obj.get("n_radii", 12), f"{path}.n_radii")
        return GridSpec.uniform(n, angles, r_max)
    except ValidationError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValidationError(str(exc), path) from exc


def config_from_mapping(doc: Mapping) -> JobConfig:
    if not isinstance(doc, Mapping):
        raise ValidationError("top level must be an object")
    if "family" not in doc:
        raise ValidationError("missing", "family")
    family = _parse_family(doc["family"])
    function = _parse_function(doc.get("function"))
    action = doc.get("action", "check")
    if action not in ACTIONS:
        raise ValidationError(f"unknown action {action!r}; choose from {', '.join(ACTIONS)}",
                              "action")
    tol = doc.get("tol", 1e-9)
    if isinstance(tol, bool) or not isinstance(tol, (int, float)) or not tol > 0:
        raise ValidationError("tol must be a positive number", "tol")
    try:
        mode = DistortionMode(doc.get("mode", "proof"))
    except ValueError as exc:
        raise ValidationError("mode must be 'statement' or 'proof'", "mode") from exc
    output = doc.get("output")
    if output is not None and not isinstance(output, str):
        raise ValidationError("output must be a path string", "output")
    options = doc.get("options", {})
    if not isinstance(options, Mapping):
        raise ValidationError("options must be an object", "options")
    cfg = JobConfig(family, function, action, _parse_grid(doc.get("grid")), float(tol), mode,
                    output, dict(options))
    try:
        cfg.harmonic()
    except ValueError as exc:
        raise ValidationError(str(exc), "function") from exc
    return replace(cfg, warnings=tuple(family.deviation_warnings()))


def parse_config(text: str) -> JobConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return config_from_mapping(doc)


__all__ = ["ACTIONS", "PRESETS", "FunctionSource", "JobConfig", "config_from_mapping",
           "parse_config", "serialize"]

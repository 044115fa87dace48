"""The harmonic family S_H(m, n, Phi_i, Psi_j, p, q, alpha) and its T-subfamily.

A family is pinned down by a :class:`FamilySpec`.  Membership of a truncated
function is decided through the weighted coefficient functional

    F(f) = sum_{k>=2} gamma_k |a_k| / (1 - alpha) + sum_{k>=1} phi_k |b_k| / (1 - alpha)

with gamma_k = lambda_k [k]^m - alpha u_k [k]^n and
phi_k = mu_k [k]^m - (-1)^E alpha v_k [k]^n, E = n + j - (m + i).
F(f) <= 1 is sufficient for membership, and for functions carrying the
T sign pattern it is also necessary.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .errors import UnknownPreset, ZeroDenominator
from .pq_core import PQParams, brackets
from .series import DEFAULT_TRUNC, HarmonicFunction, Kernel, evaluate, hadamard, salagean

MEMBERSHIP_TOL = 1e-12

SYMBOLIC_KINDS = ("1", "k", "k^2")


@dataclass(frozen=True)
class CoeffSeq:
    """A weight sequence, symbolic (1, k, k^2) or an explicit array.

    Explicit values are positional from ``start`` (2 for lambda/u, 1 for mu/v).
    """

    kind: str = "1"
    values: tuple[float, ...] | None = None
    start: int = 1

    def __post_init__(self):
        if self.kind == "explicit":
            if self.values is None:
                raise ValueError("explicit CoeffSeq needs values")
            vals = tuple(float(v) for v in self.values)
            if any(v < 0 or not np.isfinite(v) for v in vals):
                raise ValueError("explicit weights must be finite and non-negative")
            object.__setattr__(self, "values", vals)
        elif self.kind in SYMBOLIC_KINDS:
            if self.values is not None:
                raise ValueError("symbolic CoeffSeq takes no values")
        else:
            raise ValueError(f"unknown CoeffSeq kind {self.kind!r}")

    @classmethod
    def parse(cls, obj, start: int) -> "CoeffSeq":
        if isinstance(obj, CoeffSeq):
            return obj if obj.kind != "explicit" else replace(obj, start=start)
        if isinstance(obj, (int, float)) and obj == 1:
            obj = "1"
        if isinstance(obj, str):
            key = obj.replace(" ", "").replace("**", "^")
            if key not in SYMBOLIC_KINDS:
                raise ValueError(f"unknown symbolic sequence {obj!r}")
            return cls(key)
        return cls("explicit", tuple(obj), start)

    @property
    def max_index(self) -> float:
        if self.kind != "explicit":
            return np.inf
        return self.start + len(self.values) - 1

    def weights(self, n: int) -> np.ndarray:
        """Array w with w[k] the weight at index k, for k = 0..n."""
        k = np.arange(n + 1, dtype=float)
        if self.kind == "1":
            return np.ones(n + 1)
        if self.kind == "k":
            return k
        if self.kind == "k^2":
            return k**2
        if n > self.max_index:
            raise ValueError(f"explicit weights cover k <= {self.max_index}, need {n}")
        w = np.zeros(n + 1)
        vals = np.asarray(self.values[: n - self.start + 1])
        w[self.start : self.start + vals.size] = vals
        return w

    def to_json(self):
        return list(self.values) if self.kind == "explicit" else self.kind


@dataclass(frozen=True)
class FamilySpec:
    m: int = 1
    n: int = 0
    i: int = 1
    j: int = 0
    alpha: float = 0.0
    pq: PQParams = field(default_factory=PQParams)
    lam: CoeffSeq = field(default_factory=lambda: CoeffSeq("k"))
    mu: CoeffSeq = field(default_factory=lambda: CoeffSeq("k"))
    u: CoeffSeq = field(default_factory=CoeffSeq)
    v: CoeffSeq = field(default_factory=CoeffSeq)
    trunc: int = DEFAULT_TRUNC
    name: str = "custom"

    def __post_init__(self):
        for attr, start in (("lam", 2), ("u", 2), ("mu", 1), ("v", 1)):
            object.__setattr__(self, attr, CoeffSeq.parse(getattr(self, attr), start))
        object.__setattr__(self, "alpha", float(self.alpha))
        if not (0.0 <= self.alpha < 1.0):
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha}")
        if self.i not in (0, 1) or self.j not in (0, 1):
            raise ValueError("i and j must be 0 or 1")
        if self.m < 0 or self.n < 0 or self.m < self.n:
            raise ValueError(f"need m >= n >= 0, got m={self.m}, n={self.n}")
        if self.trunc < 2:
            raise ValueError("truncation must be at least 2")
        n = self.trunc
        lam, u = self.lam.weights(n), self.u.weights(n)
        mu, v = self.mu.weights(n), self.v.weights(n)
        if np.any(lam[2:] <= u[2:]):
            k = int(np.argmax(lam[2:] <= u[2:])) + 2
            raise ValueError(f"need lambda_k > u_k, fails at k={k}")
        if np.any(mu[1:] < v[1:]):
            k = int(np.argmax(mu[1:] < v[1:])) + 1
            raise ValueError(f"need mu_k >= v_k, fails at k={k}")

    @property
    def sign_exponent(self) -> int:
        return self.n + self.j - (self.m + self.i)

    @property
    def sign(self) -> int:
        """(-1)^E for E = n + j - (m + i)."""
        return -1 if self.sign_exponent % 2 else 1

    @property
    def t_sign(self) -> int:
        """Sign (-1)^(m+i-1) carried by the co-analytic part of T-family members."""
        return -1 if (self.m + self.i - 1) % 2 else 1

    def deviation_warnings(self) -> list[str]:
        out = []
        n = self.trunc
        mu, v = self.mu.weights(n), self.v.weights(n)
        eq = np.flatnonzero(mu[1:] == v[1:]) + 1
        if eq.size:
            out.append(f"mu_k == v_k at k={eq[:5].tolist()}: strict mu_k > v_k relaxed to >=")
        if self.m == 0:
            out.append("m = 0: the definition asks for m >= 1")
        if self.m == self.n:
            out.append(f"m == n == {self.m}: the definition asks for m > n")
        return out

    def weights(self, n: int | None = None):
        n = self.trunc if n is None else n
        return self.lam.weights(n), self.mu.weights(n), self.u.weights(n), self.v.weights(n)

    def gammas(self, n: int | None = None) -> np.ndarray:
        """gamma_k for k = 0..n (entries 0 and 1 are zero)."""
        n = self.trunc if n is None else n
        br = brackets(n, self.pq)
        lam, u = self.lam.weights(n), self.u.weights(n)
        g = lam * br**self.m - self.alpha * u * br**self.n
        g[:2] = 0.0
        return g

    def phis(self, n: int | None = None) -> np.ndarray:
        """phi_k for k = 0..n (entry 0 is zero)."""
        n = self.trunc if n is None else n
        br = brackets(n, self.pq)
        mu, v = self.mu.weights(n), self.v.weights(n)
        ph = mu * br**self.m - self.sign * self.alpha * v * br**self.n
        ph[0] = 0.0
        return ph

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "alpha": self.alpha,
            "p": self.pq.p,
            "q": self.pq.q,
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "u": self.u.to_json(),
            "v": self.v.to_json(),
            "trunc": self.trunc,
            "name": self.name,
        }


def gamma_k(spec: FamilySpec, k: int) -> float:
    if k < 2:
        raise ValueError("gamma_k is defined for k >= 2")
    return float(spec.gammas(max(k, 2))[k])


def phi_k(spec: FamilySpec, k: int) -> float:
    if k < 1:
        raise ValueError("phi_k is defined for k >= 1")
    return float(spec.phis(k)[k])


def kernels(spec: FamilySpec) -> tuple[Kernel, Kernel]:
    lam, mu, u, v = spec.weights()
    return Kernel(lam, mu, spec.i), Kernel(u, v, spec.j)


def fit_truncation(f: HarmonicFunction, spec: FamilySpec) -> HarmonicFunction:
    if f.N > spec.trunc:
        tail = np.concatenate([f.a[spec.trunc + 1 :], f.b[spec.trunc + 1 :]])
        if np.any(tail != 0):
            raise ValueError(f"function has nonzero coefficients beyond truncation {spec.trunc}")
        return HarmonicFunction(f.a[: spec.trunc + 1], f.b[: spec.trunc + 1], f.normalized)
    return f.padded(spec.trunc)


def coefficient_functional(f: HarmonicFunction, spec: FamilySpec) -> float:
    f = fit_truncation(f, spec)
    total = np.dot(spec.gammas()[2:], np.abs(f.a[2:])) + np.dot(spec.phis()[1:], np.abs(f.b[1:]))
    return float(total / (1.0 - spec.alpha))


def is_member_sufficient(f: HarmonicFunction, spec: FamilySpec, tol: float = MEMBERSHIP_TOL) -> bool:
    return coefficient_functional(f, spec) <= 1.0 + tol


def has_t_pattern(f: HarmonicFunction, spec: FamilySpec, tol: float = MEMBERSHIP_TOL) -> bool:
    """a_k = -|a_k| (k >= 2), b_k = (-1)^(m+i-1) |b_k|, and |b_1| < 1."""
    f = fit_truncation(f, spec)
    a, b = f.a[2:], f.b[1:]
    ok_a = np.all(np.abs(a + np.abs(a)) <= tol)
    ok_b = np.all(np.abs(b - spec.t_sign * np.abs(b)) <= tol)
    return bool(ok_a and ok_b and abs(f.b[1]) < 1.0)


def is_member_T(f: HarmonicFunction, spec: FamilySpec, tol: float = MEMBERSHIP_TOL) -> bool:
    return has_t_pattern(f, spec, tol) and is_member_sufficient(f, spec, tol)


def ratio_parts(f: HarmonicFunction, spec: FamilySpec, z):
    """Numerator (L^m f * Phi_i)(z) and denominator (L^n f * Psi_j)(z)."""
    f = fit_truncation(f, spec)
    phi, psi = kernels(spec)
    num = hadamard(salagean(f, spec.m, spec.pq), phi)
    den = hadamard(salagean(f, spec.n, spec.pq), psi)
    return evaluate(num, z), evaluate(den, z)


def ratio(f: HarmonicFunction, spec: FamilySpec, z) -> complex:
    """(L^m f * Phi_i)(z) / (L^n f * Psi_j)(z).

    At z = 0 both series start with z and the value is taken as 1.
    """
    if z == 0:
        return 1.0 + 0.0j
    num, den = ratio_parts(f, spec, z)
    if abs(den) < 1e-14:
        raise ZeroDenominator(f"denominator vanishes at z={z}", witness=complex(z))
    return complex(num / den)


# -- presets ------------------------------------------------------------------

def _starlike_like(name, m, n, alpha, pq, trunc):
    return FamilySpec(m=m, n=n, i=1, j=0, alpha=alpha, pq=pq, lam="k", mu="k", u="1", v="1",
                      trunc=trunc, name=name)


def _convex_like(name, alpha, pq, trunc):
    return FamilySpec(m=2, n=1, i=0, j=1, alpha=alpha, pq=pq, lam="k^2", mu="k^2", u="k", v="k",
                      trunc=trunc, name=name)


PRESETS = ("yalcin", "starlike", "convex", "starlike_q", "convex_q", "convolution")


def preset(
    name: str,
    alpha: float = 0.0,
    *,
    q: float = 0.5,
    m: int = 1,
    n: int = 0,
    lam: CoeffSeq | str | Sequence[float] = "k",
    mu: CoeffSeq | str | Sequence[float] = "k",
    u: CoeffSeq | str | Sequence[float] = "1",
    v: CoeffSeq | str | Sequence[float] = "1",
    i: int = 1,
    j: int = 0,
    trunc: int = DEFAULT_TRUNC,
) -> FamilySpec:
    """One of the listed special cases.

    ``q`` applies to starlike_q/convex_q, ``m, n`` to yalcin, and the kernel
    sequences with ``i, j`` to convolution (default Phi = z/(1-z)^2 - conj,
    Psi = z/(1-z) + conj).
    """
    one = PQParams(1.0, 1.0)
    if name == "yalcin":
        return _starlike_like(f"yalcin({m},{n})", m, n, alpha, one, trunc)
    if name == "starlike":
        return _starlike_like("starlike", 1, 0, alpha, one, trunc)
    if name == "convex":
        return _convex_like("convex", alpha, one, trunc)
    if name == "starlike_q":
        return _starlike_like(f"starlike_q({q})", 1, 0, alpha, PQParams(1.0, q), trunc)
    if name == "convex_q":
        return _convex_like(f"convex_q({q})", alpha, PQParams(1.0, q), trunc)
    if name == "convolution":
        return FamilySpec(m=0, n=0, i=i, j=j, alpha=alpha, pq=one, lam=lam, mu=mu, u=u, v=v,
                          trunc=trunc, name="convolution")
    raise UnknownPreset(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")

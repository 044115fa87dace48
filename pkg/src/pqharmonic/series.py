"""Truncated harmonic power series f = h + conj(g) on the unit disc.

Coefficients are kept in full-length arrays indexed by the power of z:
``a[k]`` multiplies z^k in h and ``b[k]`` multiplies z^k in g, for
k = 0..N, with ``a[0] = b[0] = 0``.  A normalized function has ``a[1] = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import OutsideDisc, VanishingDerivative
from .pq_core import PQParams, brackets, polyval, pq_derive_series

DEFAULT_TRUNC = 64


def _frozen(arr) -> np.ndarray:
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HarmonicFunction:
    a: np.ndarray
    b: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        a = _frozen(self.a)
        b = _frozen(self.b)
        if a.ndim != 1 or b.ndim != 1 or a.size != b.size or a.size < 2:
            raise ValueError("a and b must be 1-d arrays of equal length N+1 >= 2")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("coefficients must be finite")
        if a[0] != 0 or b[0] != 0:
            raise ValueError("constant terms must vanish")
        if self.normalized and a[1] != 1:
            raise ValueError("normalized function needs a_1 = 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_coeffs(cls, a_tail=(), b=(), trunc: int | None = None) -> "HarmonicFunction":
        """Build z + sum_{k>=2} a_k z^k + conj(sum_{k>=1} b_k z^k).

        ``a_tail`` starts at k=2 and ``b`` at k=1, matching the JSON layout.
        """
        a_tail = np.asarray(a_tail, dtype=complex).ravel()
        b = np.asarray(b, dtype=complex).ravel()
        needed = max(a_tail.size + 1, b.size, 1)
        n = needed if trunc is None else trunc
        if n < needed:
            raise ValueError(f"truncation {n} too small for {needed} coefficients")
        a_full = np.zeros(n + 1, dtype=complex)
        b_full = np.zeros(n + 1, dtype=complex)
        a_full[1] = 1.0
        a_full[2 : 2 + a_tail.size] = a_tail
        b_full[1 : 1 + b.size] = b
        return cls(a_full, b_full)

    @classmethod
    def identity(cls, trunc: int = DEFAULT_TRUNC) -> "HarmonicFunction":
        return cls.from_coeffs(trunc=trunc)

    @property
    def N(self) -> int:
        return self.a.size - 1

    @property
    def a_tail(self) -> np.ndarray:
        return self.a[2:]

    @property
    def b_tail(self) -> np.ndarray:
        return self.b[1:]

    def padded(self, n: int) -> "HarmonicFunction":
        if n < self.N:
            raise ValueError("cannot pad to a smaller truncation")
        a = np.zeros(n + 1, dtype=complex)
        b = np.zeros(n + 1, dtype=complex)
        a[: self.a.size] = self.a
        b[: self.b.size] = self.b
        return HarmonicFunction(a, b, self.normalized)

    def allclose(self, other: "HarmonicFunction", atol: float = 1e-12) -> bool:
        n = max(self.N, other.N)
        x, y = self.padded(n), other.padded(n)
        return bool(np.allclose(x.a, y.a, rtol=0, atol=atol) and np.allclose(x.b, y.b, rtol=0, atol=atol))

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        return f"HarmonicFunction(N={self.N}, a[2:5]={self.a[2:5]}, b[1:4]={self.b[1:4]})"


@dataclass(frozen=True, eq=False)
class Kernel:
    """Convolution kernel z + sum w_k z^k + (-1)^sign sum c_k conj(z)^k.

    ``analytic`` and ``coanalytic`` are the non-negative weights (lambda/u and
    mu/v), full-length like HarmonicFunction arrays.
    """

    analytic: np.ndarray
    coanalytic: np.ndarray
    sign: int = 0

    def __post_init__(self):
        if self.sign not in (0, 1):
            raise ValueError("kernel sign exponent must be 0 or 1")
        wa = np.array(self.analytic, dtype=float)
        wb = np.array(self.coanalytic, dtype=float)
        if np.any(wa[2:] < 0) or np.any(wb[1:] < 0):
            raise ValueError("kernel weights must be non-negative")
        wa[0], wa[1], wb[0] = 0.0, 1.0, 0.0
        wa.setflags(write=False)
        wb.setflags(write=False)
        object.__setattr__(self, "analytic", wa)
        object.__setattr__(self, "coanalytic", wb)

    def as_function(self) -> HarmonicFunction:
        return HarmonicFunction(self.analytic, (-1) ** self.sign * self.coanalytic)


HarmonicLike = Union[HarmonicFunction, Kernel]


def _as_function(f: HarmonicLike) -> HarmonicFunction:
    return f.as_function() if isinstance(f, Kernel) else f


def evaluate(f: HarmonicFunction, z):
    """f(z) for scalar or array z strictly inside the unit disc."""
    z_arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(z_arr) >= 1.0):
        raise OutsideDisc("evaluation requires |z| < 1")
    val = polyval(f.a, z_arr) + np.conj(polyval(f.b, z_arr))
    return complex(val) if np.ndim(val) == 0 else val


def hadamard(f1: HarmonicLike, f2: HarmonicLike) -> HarmonicFunction:
    """Coefficient-wise (Hadamard) product; the shorter series is zero-padded."""
    f1, f2 = _as_function(f1), _as_function(f2)
    n = max(f1.N, f2.N)
    f1, f2 = f1.padded(n), f2.padded(n)
    return HarmonicFunction(f1.a * f2.a, f1.b * f2.b, f1.normalized and f2.normalized)


def salagean_coeffs(a, b, m: int, pq: PQParams):
    """Raw-array form of the harmonic Salagean operator (linear in a, b)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    w = brackets(a.size - 1, pq) ** m
    return w * a, (-1) ** m * w * b


def salagean(f: HarmonicFunction, m: int, pq: PQParams) -> HarmonicFunction:
    """L^m f = L^m h + (-1)^m conj(L^m g), with [k]^m scaling each z^k term."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return f
    a, b = salagean_coeffs(f.a, f.b, m, pq)
    return HarmonicFunction(a, b, f.normalized)


def iterated_salagean_check(c, m: int, pq: PQParams) -> np.ndarray:
    """Apply h -> z D_{p,q} h literally m times to the analytic coefficients ``c``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    out = np.asarray(c, dtype=complex)
    for _ in range(m):
        d = pq_derive_series(out, pq)
        out = np.concatenate([[0.0], d])
    return out


def _derivative_coeffs(c: np.ndarray) -> np.ndarray:
    k = np.arange(c.size)
    return (k * c)[1:]


def dilatation(f: HarmonicFunction, z):
    """Second complex dilatation g'(z)/h'(z)."""
    z_arr = np.asarray(z, dtype=complex)
    hp = polyval(_derivative_coeffs(f.a), z_arr)
    if np.any(np.abs(hp) < 1e-14):
        raise VanishingDerivative("h'(z) vanishes; f is not sense-preserving there")
    w = polyval(_derivative_coeffs(f.b), z_arr) / hp
    return complex(w) if np.ndim(w) == 0 else w


def derivative_parts(f: HarmonicFunction, z):
    """(h'(z), g'(z)) without the vanishing check, for grid scans."""
    z_arr = np.asarray(z, dtype=complex)
    return polyval(_derivative_coeffs(f.a), z_arr), polyval(_derivative_coeffs(f.b), z_arr)

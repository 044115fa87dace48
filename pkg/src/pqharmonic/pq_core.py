"""Twin-basic numbers [k]_{p,q} and the (p,q)-derivative.

The bracket is evaluated as the running sum

    [k]_{p,q} = sum_{i=0}^{k-1} p^(k-1-i) q^i

(Horner form of the recurrence [k] = p [k-1] + q^(k-1)), which stays accurate
as q -> p where the quotient (p^k - q^k)/(p - q) cancels catastrophically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DegenerateQuotient

#: Relative closeness under which p and q are treated as equal.
PQ_EQUAL_RTOL = 1e-12


@dataclass(frozen=True)
class PQParams:
    p: float = 1.0
    q: float = 1.0

    def __post_init__(self):
        p, q = float(self.p), float(self.q)
        if not (0.0 < q <= p <= 1.0):
            raise ValueError(f"need 0 < q <= p <= 1, got p={p}, q={q}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def coincident(self) -> bool:
        return pq_coincident(self.p, self.q)


def pq_coincident(p: float, q: float) -> bool:
    return abs(p - q) < PQ_EQUAL_RTOL * max(abs(p), abs(q))


def twin_basic(k: int, p: float, q: float) -> float:
    """[k]_{p,q} for arbitrary positive p, q (no ordering required)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 0.0
    if pq_coincident(p, q):
        return k * p ** (k - 1)
    acc = 0.0
    qpow = 1.0
    for _ in range(k):
        acc = p * acc + qpow
        qpow *= q
    return acc


def bracket(k: int, pq: PQParams) -> float:
    return twin_basic(k, pq.p, pq.q)


def bracket_pow(k: int, m: int, pq: PQParams) -> float:
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return 1.0
    return bracket(k, pq) ** m


def brackets(n: int, pq: PQParams) -> np.ndarray:
    """Array ``[[0], [1], ..., [n]]`` of twin-basic numbers."""
    out = np.zeros(n + 1)
    if pq.coincident:
        k = np.arange(1, n + 1)
        out[1:] = k * pq.p ** (k - 1.0)
        return out
    qpow = 1.0
    for k in range(1, n + 1):
        out[k] = pq.p * out[k - 1] + qpow
        qpow *= pq.q
    return out


def pq_derive_series(c, pq: PQParams) -> np.ndarray:
    """Coefficients of D_{p,q} f where ``c[k]`` is the coefficient of z^k.

    The result ``d`` satisfies d[k-1] = [k]_{p,q} c[k]; it is one entry
    shorter than ``c``.
    """
    c = np.asarray(c)
    if c.size == 0:
        return c.copy()
    w = brackets(c.size - 1, pq)
    return (w * c)[1:]


def pq_derive_quotient(f: Callable[[complex], complex], z: complex, pq: PQParams) -> complex:
    """(f(pz) - f(qz)) / ((p - q) z), the difference-quotient form (scalar or array z)."""
    if pq.coincident:
        raise DegenerateQuotient("p == q: the quotient form is undefined, use the series form")
    if np.any(np.asarray(z) == 0):
        raise DegenerateQuotient("z == 0: the quotient form is undefined, D f(0) = c_1")
    return (f(pq.p * z) - f(pq.q * z)) / ((pq.p - pq.q) * z)


def polyval(c, z):
    """Evaluate sum_k c[k] z^k (ascending coefficients) at scalar or array z."""
    c = np.asarray(c)
    z = np.asarray(z)
    acc = np.zeros_like(z, dtype=complex)
    for ck in c[::-1]:
        acc = acc * z + ck
    return acc[()] if acc.ndim == 0 else acc

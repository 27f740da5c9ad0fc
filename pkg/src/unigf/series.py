"""Truncated formal power series in t.

Coefficients live either in :class:`MPoly` or in the rationals
(``int``/``Fraction``).  A series stores the plain coefficients
``c_0..c_order`` of ``sum c_n t^n``; exponential normalisation by ``n!``
is applied explicitly by callers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, List, Sequence, Tuple

from .polyring import MPoly, ONE, X, ZERO
from . import degenfun


def _zero_like(c):
    return ZERO if isinstance(c, MPoly) else 0


def _one_like(c):
    return ONE if isinstance(c, MPoly) else 1


@dataclass(frozen=True)
class FPSeries:
    coeffs: Tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_list(cls, coeffs: Sequence, order: int = None) -> "FPSeries":
        coeffs = list(coeffs)
        if order is not None:
            z = _zero_like(coeffs[0]) if coeffs else 0
            coeffs = (coeffs + [z] * (order + 1))[: order + 1]
        return cls(tuple(coeffs))

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> "FPSeries":
        return cls(tuple(f(n) for n in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "FPSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return FPSeries(self.coeffs[: order + 1])

    def _zero(self):
        return _zero_like(self.coeffs[0])

    def __add__(self, other: "FPSeries") -> "FPSeries":
        n = min(self.order, other.order)
        return FPSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> "FPSeries":
        return FPSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "FPSeries") -> "FPSeries":
        return self + (-other)

    def scale(self, s) -> "FPSeries":
        return FPSeries(tuple(c * s for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, FPSeries):
            return cauchy_product(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FPSeries):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_text(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = c.to_text() if isinstance(c, MPoly) else str(c)
            if n and (isinstance(c, MPoly) and len(c) > 1 or " " in s):
                s = f"({s})"
            tpow = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if tpow:
                s = tpow if s == "1" else f"{s}*{tpow}"
            parts.append(s)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out + f" + O(t^{self.order + 1})"

    def __str__(self) -> str:
        return self.to_text()


def cauchy_product(a: FPSeries, b: FPSeries) -> FPSeries:
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = a._zero() if isinstance(a.coeffs[0], MPoly) else b._zero()
        for i in range(k + 1):
            ai = a.coeffs[i]
            if ai == 0:
                continue
            bj = b.coeffs[k - i]
            if bj == 0:
                continue
            acc = acc + ai * bj
        out.append(acc)
    return FPSeries(tuple(out))


def compose(outer: FPSeries, inner: FPSeries) -> FPSeries:
    """``outer(inner(t))`` by Horner's rule; ``inner`` must vanish at t=0."""
    if inner.coeffs[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    zero = _zero_like(inner.coeffs[0]) if isinstance(inner.coeffs[0], MPoly) else _zero_like(outer.coeffs[0])
    acc = FPSeries((outer.coeffs[n],) + (zero,) * n)
    for k in range(n - 1, -1, -1):
        acc = cauchy_product(acc, inner)
        acc = FPSeries((acc.coeffs[0] + outer.coeffs[k],) + acc.coeffs[1:])
    return acc


def derivative_t(a: FPSeries) -> FPSeries:
    if a.order < 1:
        raise ValueError("derivative needs a series of order >= 1")
    return FPSeries(tuple(a.coeffs[n + 1] * (n + 1) for n in range(a.order)))


def nth_derivative_t(a: FPSeries, k: int) -> FPSeries:
    for _ in range(k):
        a = derivative_t(a)
    return a


def binomial_series(r, order: int) -> FPSeries:
    """Plain coefficients binom(r, k) of (1+u)^r, k = 0..order."""
    r = Fraction(r)
    coeffs: List[Fraction] = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * (r - (k - 1)) / k)
    return FPSeries(tuple(coeffs))


def binomial_pow(a: FPSeries, r) -> FPSeries:
    """``a**r`` for a rational series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("binomial_pow needs a series with constant term 1")
    u = FPSeries((0,) + tuple(a.coeffs[1:]))
    return compose(binomial_series(r, a.order), u)


def egf_to_plain(values: Sequence) -> FPSeries:
    """Series with plain coefficients ``values[n] / n!``."""
    return FPSeries(tuple(v / factorial(n) if isinstance(v, MPoly) else Fraction(v, factorial(n))
                          for n, v in enumerate(values)))


def plain_to_egf(s: FPSeries) -> list:
    return [c * factorial(n) for n, c in enumerate(s.coeffs)]


def unified_F_series(order: int) -> List[MPoly]:
    """U_1..U_order extracted from the composed generating function.

    The inner series is ``g(t) = sum_{n>=1} P_n(l, m) t^n / n!`` and the
    outer is ``sum_{k>=1} P_k(a, b) x^k u^k / k!`` where ``P_n`` is the
    rising product ``prod_{j=1}^{n-1} (first + j*second)``.  The constant
    term of the generating function is not a polynomial and is left out.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    inner = egf_to_plain([ZERO] + [degenfun.rising_product(n, "l", "m") for n in range(1, order + 1)])
    outer = egf_to_plain([ZERO] + [degenfun.rising_product(k, "a", "b") * X ** k
                                   for k in range(1, order + 1)])
    f = compose(outer, inner)
    out = []
    for n in range(1, order + 1):
        u = f.coeffs[n] * factorial(n)
        if not u.is_integral():
            raise ArithmeticError(f"U_{n} came out with non-integer coefficients")
        out.append(u)
    return out

"""Degenerate exponential and logarithm building blocks.

``W_n(b) = prod_{m=1}^{n-1} (m*b + 1)`` are the Taylor coefficients of
``e_b(t) = (1 - b t)^(-1/b)``, and ``rising_product(n, a, b) =
prod_{m=1}^{n-1} (a + m*b)`` is their homogenised form
``a^(n-1) W_n(b/a)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Union

from .polyring import BETA, MPoly, ONE

Operand = Union[str, MPoly, int, Fraction]


@lru_cache(maxsize=None)
def w_poly(n: int) -> MPoly:
    """W_n(beta) as a polynomial in the beta symbol."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = ONE
    for m in range(1, n):
        p = p * (BETA * m + 1)
    return p


def w_value(n: int, beta) -> Fraction:
    beta = Fraction(beta)
    v = Fraction(1)
    for m in range(1, n):
        v *= m * beta + 1
    return v


@lru_cache(maxsize=None)
def _rising_cached(n: int, a: Operand, b: Operand) -> MPoly:
    pa, pb = MPoly.coerce(a), MPoly.coerce(b)
    p = ONE
    for m in range(1, n):
        p = p * (pa + pb * m)
    return p


def rising_product(n: int, a: Operand, b: Operand) -> MPoly:
    """prod_{m=1}^{n-1} (a + m*b); the empty product 1 when n = 1."""
    if n < 1:
        raise ValueError("rising_product needs n >= 1; use w_poly for n = 0")
    return _rising_cached(n, a, b)


def degen_exp_series(order: int, beta):
    """Plain-coefficient series of e_beta(t) = sum W_n(beta) t^n/n!.

    ``beta = 0`` yields the ordinary exponential series directly.
    """
    from .series import FPSeries

    if order < 0:
        raise ValueError("order must be non-negative")
    return FPSeries(tuple(w_value(n, beta) / factorial(n) for n in range(order + 1)))


def neg_log_series(order: int):
    """-log(1 - t), the beta -> 0 limit of -log_beta(1 - t)."""
    from .series import FPSeries

    return FPSeries((Fraction(0),) + tuple(Fraction(1, n) for n in range(1, order + 1)))


def neg_degen_log_series(order: int, beta):
    """-log_beta(1-t) = ((1-t)^(-beta) - 1)/beta from the binomial expansion."""
    from .series import FPSeries, binomial_pow

    beta = Fraction(beta)
    if beta == 0:
        return neg_log_series(order)
    one_minus_t = FPSeries.from_list([Fraction(1), Fraction(-1)], order)
    p = binomial_pow(one_minus_t, -beta)
    return FPSeries((Fraction(0),) + tuple(c / beta for c in p.coeffs[1:]))


def check_log_exp_identity(beta, order: int) -> bool:
    """-log_beta(1-t) == (e_{1/beta}(beta t) - 1)/beta, exactly, up to ``order``."""
    from .series import FPSeries

    beta = Fraction(beta)
    if beta == 0:
        raise ValueError("beta = 0 is the limit case; use neg_log_series")
    lhs = neg_degen_log_series(order, beta)
    e = degen_exp_series(order, 1 / beta)
    scaled = [c * beta ** n for n, c in enumerate(e.coeffs)]
    rhs = FPSeries((Fraction(0),) + tuple(c / beta for c in scaled[1:]))
    return lhs == rhs


def check_derivative_identity(beta, order: int) -> bool:
    """d/dt e_beta(t) == e_beta(t) / (1 - beta t), to order ``order - 1``."""
    from .series import FPSeries, cauchy_product, derivative_t

    beta = Fraction(beta)
    e = degen_exp_series(order, beta)
    geom = FPSeries(tuple(beta ** n for n in range(order + 1)))
    return derivative_t(e) == cauchy_product(e, geom).truncate(order - 1)

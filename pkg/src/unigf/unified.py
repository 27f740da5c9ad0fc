"""The polynomial family U_n(x; a, b, l, m) and its coefficient triangle.

Three independent constructions live here: the convolution recurrence,
the first-order differential recurrence, and the closed form in Stirling
numbers.  A fourth, series composition, is in :mod:`unigf.series`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Mapping, Optional, Tuple

from .degenfun import rising_product
from .polyring import ALPHA, BETA, LAMBDA, MPoly, MU, ONE, X, ZERO
from .series import FPSeries, binomial_pow, cauchy_product, nth_derivative_t


def _lm(n: int) -> MPoly:
    # l^(n-1) W_n(m/l) written without division.
    return rising_product(n, "l", "m")


def _ab(n: int) -> MPoly:
    return rising_product(n, "a", "b")


# --- recurrences -------------------------------------------------------

@lru_cache(maxsize=None)
def _conv_upto(n: int) -> Tuple[MPoly, ...]:
    if n == 1:
        return (X,)
    prev = _conv_upto(n - 1)
    k = n - 1  # build U_{k+1} from U_1..U_k
    acc = _lm(k + 1)
    for m in range(1, k + 1):
        w = ALPHA * comb(k, m) + BETA * comb(k, m - 1)
        acc = acc + w * _lm(k - m + 1) * prev[m - 1]
    return prev + (X * acc,)


def u_poly_conv(n: int) -> MPoly:
    """U_n from the convolution recurrence seeded by U_1 = x."""
    if n < 1:
        raise ValueError("U_n is a polynomial only for n >= 1")
    return _conv_upto(n)[-1]


@lru_cache(maxsize=None)
def u_poly_main(n: int) -> MPoly:
    """U_{n+1} = (a x + m n) U_n + x (b x + l) dU_n/dx, U_1 = x."""
    if n < 1:
        raise ValueError("U_n is a polynomial only for n >= 1")
    if n == 1:
        return X
    k = n - 1
    u = u_poly_main(k)
    return (ALPHA * X + MU * k) * u + X * (BETA * X + LAMBDA) * u.partial_derivative("x")


def u0_value(alpha) -> Fraction:
    """U_0 = delta_{alpha,1} / alpha at a numeric alpha."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("U_0 is undefined at alpha = 0")
    return Fraction(1) if alpha == 1 else Fraction(0)


# --- coefficient triangle ----------------------------------------------

@dataclass
class UTriangle:
    """Entries S(n, m) = [x^m] U_n for 1 <= m <= n <= n_max."""

    n_max: int
    entries: Dict[Tuple[int, int], MPoly] = field(default_factory=dict)

    def entry(self, n: int, m: int) -> MPoly:
        if n < 1 or n > self.n_max:
            raise IndexError(f"row {n} outside 1..{self.n_max}")
        return self.entries.get((n, m), ZERO)

    def row(self, n: int) -> List[MPoly]:
        return [self.entry(n, m) for m in range(1, n + 1)]

    def poly(self, n: int) -> MPoly:
        p = ZERO
        for m in range(1, n + 1):
            p = p + self.entry(n, m) * X ** m
        return p


@lru_cache(maxsize=None)
def _triangle_rows(n_max: int) -> Tuple[Tuple[MPoly, ...], ...]:
    if n_max == 1:
        return ((ONE,),)
    rows = _triangle_rows(n_max - 1)
    n = n_max - 1
    last = rows[-1]

    def s(m):
        return last[m - 1] if 1 <= m <= n else ZERO

    new = tuple((ALPHA + BETA * (m - 1)) * s(m - 1) + (LAMBDA * m + MU * n) * s(m)
                for m in range(1, n_max + 1))
    return rows + (new,)


def coeff_triangle(n_max: int) -> UTriangle:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = _triangle_rows(n_max)
    entries = {(n, m): rows[n - 1][m - 1]
               for n in range(1, n_max + 1) for m in range(1, n + 1)}
    return UTriangle(n_max, entries)


# --- Stirling numbers and the closed form ------------------------------

@lru_cache(maxsize=None)
def _stirling_rows(n: int, kind: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((1,),)
    rows = _stirling_rows(n - 1, kind)
    prev = rows[-1] + (0,)
    mult = (lambda k: n - 1) if kind == 1 else (lambda k: k)
    row = tuple((prev[k - 1] if k else 0) + mult(k) * prev[k] for k in range(n + 1))
    return rows + (row,)


def stirling1_unsigned(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("negative argument")
    if k > n:
        return 0
    return _stirling_rows(n, 1)[n][k]


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("negative argument")
    if k > n:
        return 0
    return _stirling_rows(n, 2)[n][k]


def explicit_coeff(n: int, k: int, i: int, j: int) -> int:
    """Coefficient of a^(k-1-i) b^i l^(n-k-j) m^j in S(n, k)."""
    if not (1 <= k <= n and 0 <= i <= k - 1 and 0 <= j <= n - k):
        return 0
    return stirling1_unsigned(n, n - j) * stirling2(n - j, k) * stirling1_unsigned(k, k - i)


def s_poly_explicit(n: int, k: int) -> MPoly:
    terms = {}
    for i in range(k):
        for j in range(n - k + 1):
            c = explicit_coeff(n, k, i, j)
            if c:
                terms[(0, k - 1 - i, i, n - k - j, j)] = c
    return MPoly(terms)


def u_poly_explicit(n: int) -> MPoly:
    if n < 1:
        raise ValueError("U_n is a polynomial only for n >= 1")
    terms = {}
    for k in range(1, n + 1):
        for e, c in s_poly_explicit(n, k).items():
            terms[(k,) + e[1:]] = c
    return MPoly(terms)


# --- derivative lemmas -------------------------------------------------

@dataclass
class LemmaReport:
    n_max: int
    derx1_failures: List[int] = field(default_factory=list)
    derx2_failures: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.derx1_failures or self.derx2_failures)


def derx1_sides(n: int, U=u_poly_main) -> Tuple[MPoly, MPoly]:
    dU = lambda m: U(m).partial_derivative("x")
    lhs = dU(n)
    s_u = ZERO
    s_du = ZERO
    for m in range(1, n):
        w = _lm(n - m) * comb(n, m)
        s_u = s_u + w * U(m)
        s_du = s_du + w * dU(m)
    rhs = ALPHA * s_u + _lm(n) + BETA * X * s_du
    return lhs, rhs


def derx2_sides(n: int, U=u_poly_main) -> Tuple[MPoly, MPoly]:
    lhs = ZERO
    for m in range(0, n):
        lhs = lhs + _lm(n - m) * comb(n, m) * U(m + 1)
    rhs = ZERO
    for m in range(1, n + 1):
        rhs = rhs + _lm(n - m + 1) * comb(n, m) * U(m).partial_derivative("x")
    return lhs, X * rhs


def verify_derivative_lemmas(n_max: int, U=u_poly_main) -> LemmaReport:
    report = LemmaReport(n_max)
    for n in range(1, n_max + 1):
        a, b = derx1_sides(n, U)
        if a != b:
            report.derx1_failures.append(n)
        a, b = derx2_sides(n, U)
        if a != b:
            report.derx2_failures.append(n)
    return report


# --- differential equation ---------------------------------------------

@dataclass(frozen=True)
class ParamPoint:
    alpha: Fraction
    beta: Fraction
    lam: Fraction
    mu: Fraction
    x: Optional[Fraction] = None

    def __post_init__(self):
        for name in ("alpha", "beta", "lam", "mu"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))

    def bindings(self, with_x: bool = True) -> Dict[str, Fraction]:
        b = {"a": self.alpha, "b": self.beta, "l": self.lam, "m": self.mu}
        if with_x and self.x is not None:
            b["x"] = self.x
        return b


def f_series_at(params: ParamPoint, order: int) -> FPSeries:
    """Rational series of F(x, t) at a numeric point, U_0 included."""
    if params.x is None:
        raise ValueError("x must be bound")
    values = [u0_value(params.alpha)]
    b = params.bindings()
    values += [u_poly_main(n).evaluate(b) for n in range(1, order + 1)]
    return FPSeries(tuple(Fraction(v) / factorial(n) for n, v in enumerate(values)))


def verify_ode(n: int, params: ParamPoint, order: int,
               coeffs: Optional[Mapping[int, Fraction]] = None) -> bool:
    """Check the n-th t-derivative of F against the closed form at alpha = 1.

    ``coeffs`` overrides the evaluated triangle entries S(n, m) on the
    right-hand side, which is how a perturbation is injected.
    """
    if params.alpha != 1:
        raise ValueError("verify_ode requires alpha = 1 exactly")
    if params.mu == 0:
        raise ValueError("verify_ode requires mu != 0")
    if n < 1 or order < n + 2:
        raise ValueError("need n >= 1 and order >= n + 2")
    F = f_series_at(params, order)
    lhs = nth_derivative_t(F, n)
    N = order - n
    b = params.bindings(with_x=False)
    one_minus_mu_t = FPSeries.from_list([Fraction(1), -params.mu], N)
    Ft = F.truncate(N)
    rhs = FPSeries((Fraction(0),) * (N + 1))
    tri = coeff_triangle(n)
    for m in range(1, n + 1):
        s = Fraction(tri.entry(n, m).evaluate(b)) if coeffs is None else Fraction(coeffs.get(m, 0))
        if s == 0:
            continue
        left = binomial_pow(one_minus_mu_t, -m * params.lam / params.mu - n)
        right = binomial_pow(Ft, 1 + m * params.beta)
        rhs = rhs + cauchy_product(left, right).scale(s * params.x ** m)
    return lhs == rhs

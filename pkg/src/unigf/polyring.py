"""Sparse multivariate polynomials in x, alpha, beta, lambda, mu.

A polynomial is a mapping from 5-tuples of exponents to non-zero
coefficients. Coefficients are Python ints in the symbolic pipeline and
may become :class:`fractions.Fraction` after :meth:`MPoly.substitute`.
Integral fractions are stored as ints so that the two kinds compare and
hash identically.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

SYMBOLS = ("x", "a", "b", "l", "m")
ALIASES = {
    "x": 0,
    "a": 1, "alpha": 1, "α": 1,
    "b": 2, "beta": 2, "β": 2,
    "l": 3, "lambda": 3, "lam": 3, "λ": 3,
    "m": 4, "mu": 4, "μ": 4,
}
NVARS = len(SYMBOLS)

Exponents = Tuple[int, int, int, int, int]
Coeff = Union[int, Fraction]


def var_index(var: Union[str, int]) -> int:
    if isinstance(var, int) and 0 <= var < NVARS:
        return var
    try:
        return ALIASES[var]
    except (KeyError, TypeError):
        raise ValueError(f"unknown symbol {var!r}; expected one of {SYMBOLS}") from None


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _grlex_key(e: Exponents):
    # Sort ascending with this key gives descending graded-lex order.
    return (-sum(e), tuple(-k for k in e))


class MPoly:
    """Immutable sparse polynomial over the five fixed symbols."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponents, Coeff]] = None):
        clean: Dict[Exponents, Coeff] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != NVARS or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent vector {e!r}")
                if c:
                    clean[tuple(e)] = _norm(c)
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[Exponents, Coeff]) -> "MPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coeff) -> "MPoly":
        return cls({(0, 0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: Union[str, int], power: int = 1) -> "MPoly":
        e = [0] * NVARS
        e[var_index(name)] = power
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Coeff = 1) -> "MPoly":
        return cls({tuple(exps): coeff})

    @staticmethod
    def coerce(value) -> "MPoly":
        if isinstance(value, MPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MPoly.const(value)
        if isinstance(value, str):
            return MPoly.var(value)
        raise TypeError(f"cannot convert {type(value).__name__} to MPoly")

    # basic protocol -----------------------------------------------------
    @property
    def terms(self) -> Dict[Exponents, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, Coeff]]:
        """Terms in canonical (descending graded-lex) order."""
        for e in sorted(self._terms, key=_grlex_key):
            yield e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "MPoly":
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly._raw({})
            return MPoly._raw({e: _norm(c * other) for e, c in self._terms.items()})
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Exponents, Coeff] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                     e1[3] + e2[3], e1[4] + e2[4])
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        # Scalar division only; polynomial division is out of scope.
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division of polynomial by zero")
        return MPoly._raw({e: _norm(Fraction(c) / other) for e, c in self._terms.items()})

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # calculus and queries -----------------------------------------------
    def partial_derivative(self, var: Union[str, int]) -> "MPoly":
        i = var_index(var)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = c * k
        return MPoly._raw(out)

    def degree_in(self, var: Union[str, int]) -> Optional[int]:
        """Largest exponent of ``var``; ``None`` for the zero polynomial."""
        i = var_index(var)
        if not self._terms:
            return None
        return max(e[i] for e in self._terms)

    def total_degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def coeff_of_x_power(self, m: int) -> "MPoly":
        if m < 0:
            raise ValueError("power of x must be non-negative")
        return MPoly._raw({(0,) + e[1:]: c for e, c in self._terms.items() if e[0] == m})

    def coefficient(self, exps: Iterable[int]) -> Coeff:
        return self._terms.get(tuple(exps), 0)

    def substitute(self, bindings: Mapping[Union[str, int], Coeff]) -> "MPoly":
        """Evaluate the bound symbols exactly; unbound symbols stay formal."""
        idx = {var_index(k): Fraction(v) for k, v in bindings.items()}
        if not idx:
            return self
        out: Dict[Exponents, Coeff] = {}
        for e, c in self._terms.items():
            ne = list(e)
            val = Fraction(c)
            for i, v in idx.items():
                if ne[i]:
                    val *= v ** ne[i]
                    ne[i] = 0
            if val:
                key = tuple(ne)
                out[key] = out.get(key, 0) + val
        return MPoly({e: c for e, c in out.items()})

    def evaluate(self, values: Mapping[Union[str, int], Coeff]) -> Coeff:
        """Fully evaluate; every symbol occurring in the polynomial must be bound."""
        p = self.substitute(values)
        if any(any(e) for e in p._terms):
            raise ValueError("unbound symbols remain after evaluation")
        return p._terms.get((0, 0, 0, 0, 0), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def coefficient_sum(self) -> Coeff:
        return _norm(sum(self._terms.values(), 0))

    # serialization ------------------------------------------------------
    def to_text(self) -> str:
        """Render grouped by descending powers of x.

        Each x-coefficient is a polynomial in (a, b, l, m) printed in
        graded-lex order and parenthesised when it has several terms.
        """
        if not self._terms:
            return "0"
        by_x: Dict[int, Dict[Exponents, Coeff]] = {}
        for e, c in self._terms.items():
            by_x.setdefault(e[0], {})[(0,) + e[1:]] = c
        pieces = []
        for k in sorted(by_x, reverse=True):
            inner = MPoly._raw(by_x[k])
            xpart = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not xpart:
                flat = _render_flat(inner)
                pieces.append(f"({flat})" if pieces and len(inner) > 1 else flat)
            elif len(inner) == 1:
                ((e, c),) = inner._terms.items()
                mono = _render_monomial(e, c, trailing=xpart)
                pieces.append(mono)
            else:
                pieces.append(f"({_render_flat(inner)})*{xpart}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def to_records(self) -> list:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "MPoly":
        terms: Dict[Exponents, Coeff] = {}
        for r in records:
            e = tuple(int(k) for k in r["exponents"])
            terms[e] = terms.get(e, 0) + Fraction(r["coeff"])
        return cls(terms)


def _render_monomial(e: Exponents, c: Coeff, trailing: str = "") -> str:
    factors = []
    for name, k in zip(SYMBOLS, e):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    if trailing:
        factors.append(trailing)
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def _render_flat(p: MPoly) -> str:
    parts = [_render_monomial(e, c) for e, c in p.items()]
    out = parts[0]
    for s in parts[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


ZERO = MPoly()
ONE = MPoly.const(1)
X = MPoly.var("x")
ALPHA = MPoly.var("a")
BETA = MPoly.var("b")
LAMBDA = MPoly.var("l")
MU = MPoly.var("m")


def add(a: MPoly, b: MPoly) -> MPoly:
    return a + b


def mul(a: MPoly, b: MPoly) -> MPoly:
    return a * b


def partial_derivative(p: MPoly, var: Union[str, int]) -> MPoly:
    return p.partial_derivative(var)


def substitute(p: MPoly, bindings: Mapping[Union[str, int], Coeff]) -> MPoly:
    return p.substitute(bindings)


def coeff_of_x_power(p: MPoly, m: int) -> MPoly:
    return p.coeff_of_x_power(m)


def degree_in(p: MPoly, var: Union[str, int]) -> Optional[int]:
    return p.degree_in(var)

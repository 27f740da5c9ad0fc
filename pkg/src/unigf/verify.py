"""Named identity checks, grouped into suites for the CLI and the acceptance run."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from . import enumeration as en
from .degenfun import check_derivative_identity, check_log_exp_identity, rising_product
from .polyring import MPoly, X
from .series import unified_F_series
from .unified import (ParamPoint, coeff_triangle, u_poly_conv, u_poly_explicit, u_poly_main,
                      verify_derivative_lemmas, verify_ode)

SUITES = ("recurrences", "lemmas", "ode", "enumeration", "degenfun")

# (beta, lambda, mu, x) samples at alpha = 1, mu != 0
ODE_SAMPLES = (
    (Fraction(2), Fraction(1, 2), Fraction(1), Fraction(2, 3)),
    (Fraction(-1, 3), Fraction(5, 2), Fraction(3, 7), Fraction(-4, 5)),
    (Fraction(0), Fraction(1), Fraction(-2), Fraction(3)),
    (Fraction(1, 2), Fraction(0), Fraction(1, 5), Fraction(1, 7)),
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _mutated(U: Callable[[int], MPoly]) -> Callable[[int], MPoly]:
    # Deliberate fault: add x to U_2.
    return lambda n: U(n) + X if n == 2 else U(n)


def check_recurrences(n_max: int, mutate: bool = False) -> List[CheckResult]:
    main = _mutated(u_poly_main) if mutate else u_poly_main
    series = unified_F_series(n_max)
    bad = [n for n in range(1, n_max + 1)
           if not (u_poly_conv(n) == main(n) == series[n - 1] == u_poly_explicit(n))]
    out = [CheckResult(f"four-way equality conv=main=series=explicit, n<={n_max}", not bad,
                       f"fails at n={bad}" if bad else "")]
    tri = coeff_triangle(n_max)
    bad = [n for n in range(1, n_max + 1) if tri.poly(n) != main(n)]
    out.append(CheckResult(f"coefficient-triangle recurrence matches U_n, n<={n_max}", not bad,
                           f"fails at n={bad}" if bad else ""))
    bad = [(n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)
           if en.s_poly_rec(n, k) != main(n).coeff_of_x_power(k)]
    out.append(CheckResult(f"S(n,k) recurrence equals [x^k]U_n, n<={n_max}", not bad,
                           f"fails at {bad[:3]}" if bad else ""))
    return out


def check_lemmas(n_max: int, mutate: bool = False) -> List[CheckResult]:
    U = _mutated(u_poly_main) if mutate else u_poly_main
    out = []
    bad = []
    for n in range(1, n_max + 1):
        u = U(n)
        want = (n, n - 1, n - 1, n - 1, n - 1)
        got = tuple(u.degree_in(v) for v in "xablm")
        if got != want:
            bad.append(n)
    out.append(CheckResult(f"degrees deg_x=n, deg_a=deg_b=deg_l=deg_m=n-1, n<={n_max}", not bad,
                           f"fails at n={bad}" if bad else ""))
    bad = [n for n in range(1, n_max + 1) if not U(n).coeff_of_x_power(0).is_zero()]
    out.append(CheckResult(f"zero constant term [x^0]U_n=0, n<={n_max}", not bad,
                           f"fails at n={bad}" if bad else ""))
    bad = [n for n in range(1, n_max + 1)
           if U(n).coeff_of_x_power(n) != rising_product(n, "a", "b")
           or U(n).coeff_of_x_power(1) != rising_product(n, "l", "m")]
    out.append(CheckResult(f"boundary coefficients [x^n]U_n, [x^1]U_n are rising products, n<={n_max}",
                           not bad, f"fails at n={bad}" if bad else ""))
    bad = [n for n in range(1, n_max + 1)
           if any(not isinstance(c, int) or c < 0 for _, c in U(n).items())]
    out.append(CheckResult(f"S(n,m) coefficients are non-negative integers, n<={n_max}", not bad,
                           f"fails at n={bad}" if bad else ""))
    rep = verify_derivative_lemmas(min(n_max, 10), U)
    out.append(CheckResult(f"x-derivative identity (first lemma), n<={rep.n_max}",
                           not rep.derx1_failures,
                           f"fails at n={rep.derx1_failures}" if rep.derx1_failures else ""))
    out.append(CheckResult(f"x-derivative identity (second lemma), n<={rep.n_max}",
                           not rep.derx2_failures,
                           f"fails at n={rep.derx2_failures}" if rep.derx2_failures else ""))
    return out


def check_ode(n_max: int, extra_order: int = 7, mutate: bool = False) -> List[CheckResult]:
    out = []
    for n in range(1, min(n_max, 5) + 1):
        bad = []
        for beta, lam, mu, x in ODE_SAMPLES:
            p = ParamPoint(1, beta, lam, mu, x)
            coeffs = None
            if mutate:
                b = p.bindings(with_x=False)
                tri = coeff_triangle(n)
                coeffs = {m: tri.entry(n, m).evaluate(b) for m in range(1, n + 1)}
                coeffs[1] = coeffs[1] + 1
            if not verify_ode(n, p, n + extra_order, coeffs):
                bad.append((beta, lam, mu, x))
        out.append(CheckResult(f"differential equation for F, derivative order {n}, "
                               f"{len(ODE_SAMPLES)} samples", not bad,
                               f"fails at {[tuple(map(str, s)) for s in bad]}" if bad else ""))
    return out


@lru_cache(maxsize=None)
def naive_rlb(openers: Tuple[int, ...]) -> int:
    k = len(openers)
    return sum(1 for j in range(k)
               if openers[j] > 1 and all(openers[j] < openers[m] for m in range(j + 1, k)))


@lru_cache(maxsize=1 << 16)
def naive_block_rle(block: Tuple[int, ...]) -> int:
    lo = min(block)
    L = len(block)
    return sum(1 for j in range(L)
               if block[j] > lo and all(block[j] < block[m] for m in range(j + 1, L)))


def scan_partitions(n: int, k: int, with_moves: bool) -> Tuple[Dict[str, int], Counter]:
    """Walk LLP(n,k) once: count identity violations and tally StatVectors."""
    bad = {"complement": 0, "definition": 0, "nsb_moves": 0, "nse_moves": 0, "count": 0}
    tally: Counter = Counter()
    moves = en.min_right_moves
    for p in en.enumerate_llp(n, k):
        bad["count"] += 1
        s = en.stats(p)
        tally[s] += 1
        ops = p.openers()
        if s.nsb + s.rlb != k - 1 or s.nse + s.rle != n - k:
            bad["complement"] += 1
        if s.rlb != naive_rlb(ops) or s.rle != sum(naive_block_rle(b) for b in p.blocks):
            bad["definition"] += 1
        if with_moves:
            if s.nsb != moves(ops):
                bad["nsb_moves"] += 1
            if s.nse != sum(moves(b) for b in p.blocks):
                bad["nse_moves"] += 1
    return bad, tally


def check_enumeration(n_max: int, moves_max: int = 7, force: bool = False) -> List[CheckResult]:
    if n_max > en.DEFAULT_MAX_N and not force:
        n_max = en.DEFAULT_MAX_N
    out = []
    bad_poly = []
    totals = {"complement": 0, "definition": 0, "nsb_moves": 0, "nse_moves": 0, "count": 0}
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            viol, tally = scan_partitions(n, k, with_moves=n <= moves_max)
            for key in totals:
                totals[key] += viol[key]
            if en.poly_from_counts(tally) != en.s_poly_rec(n, k):
                bad_poly.append((n, k))
    out.append(CheckResult(f"brute-force S(n,k) equals recurrence, n<={n_max}", not bad_poly,
                           f"fails at {bad_poly[:3]}" if bad_poly else ""))
    out.append(CheckResult(f"nsb+rlb=k-1 and nse+rle=n-k on {totals['count']} partitions, n<={n_max}",
                           totals["complement"] == 0, f"{totals['complement']} violations"
                           if totals["complement"] else ""))
    out.append(CheckResult(f"rlb and rle agree with their set-builder definitions, n<={n_max}",
                           totals["definition"] == 0, f"{totals['definition']} violations"
                           if totals["definition"] else ""))
    m = min(n_max, moves_max)
    ok = totals["nsb_moves"] == 0 and totals["nse_moves"] == 0
    out.append(CheckResult(f"nsb and nse equal the fewest rightward moves (search oracle), n<={m}",
                           ok, "" if ok else f"nsb:{totals['nsb_moves']} nse:{totals['nse_moves']}"))
    return out


def check_degenfun(order: int = 10) -> List[CheckResult]:
    out = []
    for beta in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(1, 3)):
        out.append(CheckResult(f"degenerate exp derivative identity, beta={beta}, order {order}",
                               check_derivative_identity(beta, order)))
        out.append(CheckResult(f"degenerate log/exp identity, beta={beta}, order {order}",
                               check_log_exp_identity(beta, order)))
    return out


def run_suites(n_max: int, suites, mutate: bool = False, force: bool = False) -> List[CheckResult]:
    if "all" in suites:
        suites = SUITES
    results: List[CheckResult] = []
    for s in suites:
        if s == "recurrences":
            results += check_recurrences(n_max, mutate)
        elif s == "lemmas":
            results += check_lemmas(n_max, mutate)
        elif s == "ode":
            results += check_ode(n_max, mutate=mutate)
        elif s == "enumeration":
            results += check_enumeration(n_max, force=force)
        elif s == "degenfun":
            results += check_degenfun()
        else:
            raise ValueError(f"unknown suite {s!r}; choose from all, {', '.join(SUITES)}")
    return results

"""The thirteen parameter specialisations and OEIS b-file comparison."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .polyring import MPoly
from .unified import coeff_triangle, u_poly_main

TRIANGLE = "triangle-by-rows"
ROW_SUMS = "row-sums"
MODES = (TRIANGLE, ROW_SUMS)


@dataclass(frozen=True)
class SpecialCase:
    id: int
    bindings: Dict[str, Fraction]
    description: str
    oeis_id: Optional[str] = None
    comparison_mode: str = TRIANGLE

    @property
    def free_symbols(self) -> Tuple[str, ...]:
        return tuple(s for s in "ablm" if s not in self.bindings)


def _b(a, b, l, m) -> Dict[str, Fraction]:
    return {k: Fraction(v) for k, v in zip("ablm", (a, b, l, m)) if v is not None}


CASES: Dict[int, SpecialCase] = {c.id: c for c in [
    SpecialCase(1, _b(1, None, 1, None), "set partitions by nsb and nse"),
    SpecialCase(2, _b(1, 0, 1, 0), "sets of sets", "A008277"),
    SpecialCase(3, _b(1, 0, 1, 1), "lists of sets"),
    SpecialCase(4, _b(1, 1, 1, 0), "sets of lists", "A019538"),
    SpecialCase(5, _b(1, 1, 1, 1), "lists of lists"),
    SpecialCase(6, _b(None, 1, None, 1),
                "cyclically ordered blocks and elements, by rlb and rle"),
    SpecialCase(7, _b(0, 1, 0, 1), "cyclically ordered blocks and elements", "A188881"),
    SpecialCase(8, _b(0, 1, 1, 1), "cyclically ordered blocks, ordered elements"),
    SpecialCase(9, _b(1, 1, 0, 1), "ordered blocks, cyclically ordered elements"),
    SpecialCase(10, _b(None, 1, 1, None),
                "cyclically ordered blocks, ordered elements, by rlb and nse"),
    SpecialCase(11, _b(0, 1, 1, 0), "cyclically ordered blocks, unordered elements"),
    SpecialCase(12, _b(1, None, None, 1),
                "ordered blocks, cyclically ordered elements, by nsb and rle"),
    SpecialCase(13, _b(1, 0, 0, 1),
                "unordered blocks, cyclically ordered elements (permutations by cycles)",
                "A130534"),
]}


def get_case(case_id: int) -> SpecialCase:
    try:
        return CASES[int(case_id)]
    except (KeyError, ValueError):
        raise KeyError(f"unknown case {case_id!r}; valid ids are 1..13") from None


def parse_bindings(text: str) -> Dict[str, Fraction]:
    """``"b=1,m=1/2"`` -> {'b': 1, 'm': 1/2}."""
    from .polyring import SYMBOLS, var_index

    out: Dict[str, Fraction] = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise ValueError(f"binding {item!r} is not of the form sym=value")
        k, v = (s.strip() for s in item.split("=", 1))
        out[SYMBOLS[var_index(k)]] = Fraction(v)
    return out


def _resolve(case: Union[SpecialCase, int, Mapping, None],
             extra: Optional[Mapping] = None) -> Dict[str, Fraction]:
    if isinstance(case, SpecialCase):
        b = dict(case.bindings)
    elif isinstance(case, int):
        b = dict(get_case(case).bindings)
    elif case is None:
        b = {}
    else:
        b = {k: Fraction(v) for k, v in case.items()}
    if extra:
        b.update({k: Fraction(v) for k, v in extra.items()})
    return b


def specialize_poly(n: int, case, extra: Optional[Mapping] = None) -> MPoly:
    """U_n with the case bindings substituted; unbound symbols stay free."""
    return u_poly_main(n).substitute(_resolve(case, extra))


@dataclass
class IntTriangle:
    rows: List[List[int]] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> List[int]:
        return self.rows[n - 1]

    def flatten(self) -> List[int]:
        return [v for r in self.rows for v in r]

    def row_sums(self) -> List[int]:
        return [sum(r) for r in self.rows]


class NonIntegerEntry(ValueError):
    pass


def specialize_triangle(case, n_max: int, extra: Optional[Mapping] = None,
                        allow_rational: bool = False) -> IntTriangle:
    bindings = _resolve(case, extra)
    missing = [s for s in "ablm" if s not in bindings]
    if missing:
        raise ValueError(f"symbols {', '.join(missing)} must be bound to build a triangle")
    tri = coeff_triangle(n_max)
    rows = []
    for n in range(1, n_max + 1):
        row = []
        for m in range(1, n + 1):
            v = tri.entry(n, m).evaluate(bindings)
            if isinstance(v, Fraction) and not allow_rational:
                raise NonIntegerEntry(f"entry ({n},{m}) = {v} is not an integer")
            row.append(v)
        rows.append(row)
    return IntTriangle(rows)


# --- b-files -----------------------------------------------------------

class BFileError(ValueError):
    def __init__(self, line_no: int, line: str, reason: str):
        super().__init__(f"line {line_no}: {reason}: {line!r}")
        self.line_no = line_no


def parse_bfile(text: str) -> List[Tuple[int, int]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(i, raw, "expected 'index value'")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise BFileError(i, raw, "non-integer field") from None
    return out


def read_bfile(path) -> List[Tuple[int, int]]:
    with open(path, encoding="utf-8") as fh:
        return parse_bfile(fh.read())


@dataclass
class ComparisonReport:
    case: Optional[int]
    mode: str
    needed_terms: int
    matched_terms: int
    first_mismatch: Optional[Dict] = None
    insufficient: bool = False

    @property
    def agree(self) -> bool:
        return self.first_mismatch is None and not self.insufficient

    def to_record(self) -> Dict:
        return {
            "case": self.case,
            "mode": self.mode,
            "matched_terms": self.matched_terms,
            "needed_terms": self.needed_terms,
            "first_mismatch": self.first_mismatch,
            "insufficient_terms": self.insufficient,
            "agree": self.agree,
        }

    def to_text(self) -> str:
        head = f"case {self.case} [{self.mode}]: "
        if self.first_mismatch is not None:
            mm = self.first_mismatch
            return head + (f"MISMATCH at term {mm['position']} (b-file index {mm['index']}): "
                           f"expected {mm['expected']}, computed {mm['computed']}; "
                           f"{self.matched_terms} terms matched before it")
        if self.insufficient:
            return head + (f"insufficient terms: b-file has {self.matched_terms} "
                           f"of the {self.needed_terms} needed, all matching")
        return head + f"agree on all {self.matched_terms} terms"


def compare_with_sequence(tri: IntTriangle, seq: Sequence[Tuple[int, int]],
                          mode: str = TRIANGLE, case: Optional[int] = None) -> ComparisonReport:
    """Match the triangle against a b-file prefix, honouring the file's own indices."""
    if mode == TRIANGLE:
        computed = tri.flatten()
    elif mode == ROW_SUMS:
        computed = tri.row_sums()
    else:
        raise ValueError(f"unknown mode {mode!r}")
    matched = 0
    for pos, value in enumerate(computed):
        if pos >= len(seq):
            return ComparisonReport(case, mode, len(computed), matched, insufficient=True)
        idx, expected = seq[pos]
        if expected != value:
            return ComparisonReport(case, mode, len(computed), matched, first_mismatch={
                "position": pos, "index": idx, "expected": expected, "computed": value})
        matched += 1
    return ComparisonReport(case, mode, len(computed), matched)


def compare_any_mode(tri: IntTriangle, seq, case: Optional[int] = None,
                     modes: Sequence[str] = (TRIANGLE, ROW_SUMS)) -> ComparisonReport:
    """Try the modes in order; return the first agreeing report, else the first one."""
    reports = [compare_with_sequence(tri, seq, m, case) for m in modes]
    for r in reports:
        if r.agree:
            return r
    return reports[0]

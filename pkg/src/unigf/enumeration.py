"""List-of-lists partitions of [n] and the statistics rlb, nsb, rle, nse.

A list-of-lists partition orders both its blocks and the elements inside
each block.  The opener of a block is its minimum, whatever the order of
the elements.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from .polyring import MPoly

DEFAULT_MAX_N = 8


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class LLPartition:
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def _trusted(cls, blocks: Tuple[Tuple[int, ...], ...]) -> "LLPartition":
        # Skips validation; only for blocks produced by the enumerator.
        p = object.__new__(cls)
        object.__setattr__(p, "blocks", blocks)
        return p

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise ValueError("empty block")
        elems = sorted(e for b in blocks for e in b)
        if elems != list(range(1, len(elems) + 1)):
            raise ValueError(f"blocks do not cover 1..{len(elems)} exactly once")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def openers(self) -> Tuple[int, ...]:
        return tuple(min(b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "LLPartition":
        """Parse ``3,8,2/1,4,7/9,6/5`` or the comma-free ``382/147/96/5``."""
        blocks = []
        for chunk in text.strip().split("/"):
            chunk = chunk.strip()
            if "," in chunk:
                blocks.append(tuple(int(s) for s in chunk.split(",")))
            else:
                blocks.append(tuple(int(ch) for ch in chunk))
        p = cls(tuple(blocks))
        if p.n > 9 and "," not in text:
            raise ValueError("comma-free shorthand is only valid for n <= 9")
        return p

    def format(self) -> str:
        return "/".join(",".join(str(e) for e in b) for b in self.blocks)

    def __str__(self) -> str:
        return self.format()


class StatVector(NamedTuple):
    rlb: int
    nsb: int
    rle: int
    nse: int


# --- statistics --------------------------------------------------------

def right_to_left_minima(seq: Sequence[int]) -> List[int]:
    """Entries smaller than everything to their right, left to right."""
    out = []
    cur = None
    for v in reversed(seq):
        if cur is None or v < cur:
            out.append(v)
            cur = v
    out.reverse()
    return out


@lru_cache(maxsize=1 << 16)
def _block_info(block: Tuple[int, ...]) -> Tuple[int, int]:
    lo = min(block)
    return lo, sum(1 for v in right_to_left_minima(block) if v > lo)


def block_rle(block: Sequence[int]) -> int:
    return _block_info(tuple(block))[1]


def stat_rlb(p: LLPartition) -> int:
    return sum(1 for v in right_to_left_minima(p.openers()) if v > 1)


def stat_nsb(p: LLPartition) -> int:
    return p.k - len(right_to_left_minima(p.openers()))


def stat_rle(p: LLPartition) -> int:
    return sum(block_rle(b) for b in p.blocks)


def stat_nse(p: LLPartition) -> int:
    return sum(len(b) - 1 - block_rle(b) for b in p.blocks)


def stats(p: LLPartition) -> StatVector:
    """All four statistics in one pass over the blocks."""
    blocks = p.blocks
    k = len(blocks)
    rle = 0
    n = 0
    openers = []
    for b in blocks:
        lo, r = _block_info(b)
        openers.append(lo)
        rle += r
        n += len(b)
    n_rl = 0
    cur = n + 1
    for v in reversed(openers):
        if v < cur:
            n_rl += 1
            cur = v
    # the opener 1 is always a right-to-left minimum
    return StatVector(n_rl - 1, k - n_rl, rle, n - k - rle)


# --- independent oracle for the "moves" ---------------------------------

MAX_MOVES_LEN = 8


@lru_cache(maxsize=None)
def _move_distances(length: int) -> Dict[Tuple[int, ...], int]:
    # BFS from the identity under the inverse move (take an entry, reinsert
    # it further left); distance = fewest rightward moves that sort.
    start = tuple(range(length))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        d = dist[cur] + 1
        for i in range(1, length):
            v = cur[i]
            rest = cur[:i] + cur[i + 1:]
            for j in range(i):
                nxt = rest[:j] + (v,) + rest[j:]
                if nxt not in dist:
                    dist[nxt] = d
                    queue.append(nxt)
    return dist


def min_right_moves(seq: Sequence[int]) -> int:
    """Fewest entries that must each move rightward to sort ``seq``.

    Found by breadth-first search over actual move sequences, so it does
    not rely on the right-to-left-minimum characterisation.
    """
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise ValueError("entries must be distinct")
    if len(seq) > MAX_MOVES_LEN:
        raise ValueError(f"oracle limited to length <= {MAX_MOVES_LEN}")
    ranks = {v: i for i, v in enumerate(sorted(seq))}
    return _move_distances(len(seq))[tuple(ranks[v] for v in seq)]


# --- enumeration -------------------------------------------------------

def restricted_growth_strings(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """RGS of length n using exactly the labels 0..k-1, in lex order."""
    if n == 0:
        if k == 0:
            yield ()
        return
    a = [0] * n

    def rec(i: int, mx: int):
        remaining = n - i
        if mx + 1 + remaining < k:
            return
        if i == n:
            if mx + 1 == k:
                yield tuple(a)
            return
        for v in range(min(mx + 2, k)):
            a[i] = v
            yield from rec(i + 1, max(mx, v))

    a[0] = 0
    yield from rec(1, 0)


def set_partitions(n: int, k: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Set partitions of [n] into k blocks, blocks sorted by opener."""
    for rgs in restricted_growth_strings(n, k):
        blocks: List[List[int]] = [[] for _ in range(k)]
        for i, label in enumerate(rgs):
            blocks[label].append(i + 1)
        yield tuple(tuple(b) for b in blocks)


def _guard(n: int, force: bool) -> None:
    if n > DEFAULT_MAX_N and not force:
        raise EnumerationTooLarge(
            f"n = {n} exceeds the enumeration guard {DEFAULT_MAX_N}; pass force=True")


def enumerate_llp(n: int, k: int) -> Iterator[LLPartition]:
    """Every list-of-lists partition of [n] into k blocks, exactly once.

    Order: base set partitions by restricted growth string, then block
    orders in lexicographic permutation order, then the within-block
    orders lexicographically, block by block.
    """
    if n < 1 or k < 1 or k > n:
        return
    for base in set_partitions(n, k):
        inner = [list(permutations(b)) for b in base]
        for order in permutations(range(k)):
            for choice in product(*(inner[i] for i in order)):
                yield LLPartition._trusted(choice)


def count_llp(n: int, k: int) -> int:
    return sum(1 for _ in enumerate_llp(n, k))


def stat_counts(n: int, k: int, force: bool = False) -> Counter:
    """Counter of StatVector over all of LLP(n, k), by explicit enumeration."""
    _guard(n, force)
    counts: Counter = Counter()
    for p in enumerate_llp(n, k):
        counts[stats(p)] += 1
    return counts


def poly_from_counts(counts: Counter) -> MPoly:
    return MPoly({(0, s.rlb, s.nsb, s.rle, s.nse): c for s, c in counts.items()})


def s_poly_bruteforce(n: int, k: int, force: bool = False) -> MPoly:
    """Sum over LLP(n, k) of a^rlb b^nsb l^rle m^nse by full enumeration."""
    if not (1 <= k <= n):
        return MPoly()
    return poly_from_counts(stat_counts(n, k, force))


@lru_cache(maxsize=None)
def s_poly_rec(n: int, k: int) -> MPoly:
    """S(n,k) = (a + (k-1) b) S(n-1,k-1) + (k l + (n-1) m) S(n-1,k)."""
    if n < 1 or k < 1 or k > n:
        return MPoly()
    if n == 1:
        return MPoly.const(1)
    a, b, l, m = (MPoly.var(s) for s in "ablm")
    return (a + b * (k - 1)) * s_poly_rec(n - 1, k - 1) + (l * k + m * (n - 1)) * s_poly_rec(n - 1, k)

"""Regenerate the offline b-file fixtures in data/bfiles/.

The sandbox this project was built in had no route to oeis.org, so the
fixtures are rebuilt from each sequence's defining formula using sympy's
Stirling numbers, which share no code with the package.  Replace them with
the downloaded b-files when network access is available; the comparison
code reads either.

    python scripts/make_bfiles.py [--rows 15]
"""
import argparse
from math import factorial
from pathlib import Path

from sympy.functions.combinatorial.numbers import stirling

OUT = Path(__file__).resolve().parent.parent / "data" / "bfiles"

SEQUENCES = {
    # name: (offset of the first row, first row n, entry(n, k), k range)
    "A008277": ("Triangle of Stirling numbers of the second kind, S2(n,k), n >= 1, 1 <= k <= n.",
                1, lambda n, k: stirling(n, k, kind=2), lambda n: range(1, n + 1)),
    "A019538": ("Triangle T(n,k) = k!*Stirling2(n,k), n >= 1, 1 <= k <= n.",
                1, lambda n, k: factorial(k) * stirling(n, k, kind=2), lambda n: range(1, n + 1)),
    "A130534": ("Triangle T(n,k), 0 <= k <= n: coefficients of (x+1)(x+2)...(x+n) = |s(n+1,k+1)|.",
                0, lambda n, k: stirling(n + 1, k + 1, kind=1, signed=False), lambda n: range(0, n + 1)),
    "A188881": ("Triangle T(n,k) = (k-1)!*|s(n,k)|, n >= 1, 1 <= k <= n (EGF -log(1+x*log(1-t))).",
                1, lambda n, k: factorial(k - 1) * stirling(n, k, kind=1, signed=False),
                lambda n: range(1, n + 1)),
}


def write(name: str, rows: int) -> Path:
    title, first, entry, krange = SEQUENCES[name]
    lines = [f"# {name}: {title}",
             "# Offline reconstruction from the defining formula (sympy); not downloaded."]
    idx = first
    for n in range(first, first + rows):
        for k in krange(n):
            lines.append(f"{idx} {int(entry(n, k))}")
            idx += 1
    path = OUT / f"b{name[1:]}.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=15)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    for name in SEQUENCES:
        print(write(name, args.rows))


if __name__ == "__main__":
    main()

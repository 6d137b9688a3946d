#!/usr/bin/env python3
"""Regenerates the committed PBM goldens without touching the C++ engine.

rule30_single1.pbm: Rule 30 from a single 1 at column 0, by direct table lookup
on a finite zero-padded strip.
mul32_config6_1.pbm: row t is the base-6 expansion of (3/2)^t, digit of 6^k at
column -k-1.
Both: 32 rows, columns -32..32.
"""
from fractions import Fraction
from pathlib import Path

ROWS = 32
LO, HI = -32, 32
HERE = Path(__file__).resolve().parent


def pbm(rows):
    width = HI - LO + 1
    out = [f"P1\n{width} {len(rows)}\n"]
    for row in rows:
        out.append(" ".join("1" if s else "0" for s in row) + "\n")
    return "".join(out)


def rule30_rows():
    pad = ROWS + 2
    lo, hi = LO - pad, HI + pad
    cells = {i: 0 for i in range(lo, hi + 1)}
    cells[0] = 1
    rows = []
    for _ in range(ROWS):
        rows.append([cells[i] for i in range(LO, HI + 1)])
        nxt = {}
        for i in range(lo, hi + 1):
            a, b, c = cells.get(i - 1, 0), cells[i], cells.get(i + 1, 0)
            nxt[i] = (30 >> (4 * a + 2 * b + c)) & 1
        cells = nxt
    return rows


def base_digits(value, base, lo, hi):
    # digit of base^k sits at column -k-1
    digits = {}
    whole = value.numerator // value.denominator
    frac = value - whole
    k = 0
    while whole:
        digits[-k - 1] = whole % base
        whole //= base
        k += 1
    col = 0
    while frac and col <= hi:
        frac *= base
        d = frac.numerator // frac.denominator
        digits[col] = d
        frac -= d
        col += 1
    return [digits.get(i, 0) for i in range(lo, hi + 1)]


def mul_rows():
    return [base_digits(Fraction(3, 2) ** t, 6, LO, HI) for t in range(ROWS)]


def main():
    (HERE / "rule30_single1.pbm").write_text(pbm(rule30_rows()))
    (HERE / "mul32_config6_1.pbm").write_text(pbm(mul_rows()))


if __name__ == "__main__":
    main()

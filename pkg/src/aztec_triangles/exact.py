"""Exact integer/rational arithmetic: extended binomials, shifted factorials,
double factorials, and fraction-free determinants.

Every value is an ``int`` or a ``fractions.Fraction``; nothing here ever
rounds.  Results with denominator 1 are normalized back to ``int`` so that
counts print and compare as plain integers.
"""

from fractions import Fraction
from math import factorial

Exact = int | Fraction


def normalize(x: Exact) -> Exact:
    """Collapse integral Fractions to int; leave everything else alone."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def as_fraction(x: Exact) -> Fraction:
    """Coerce to Fraction, refusing floats (exactness would be lost)."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"exact rational required, got {type(x).__name__}")


def binomial(x: Exact, l: int) -> Exact:
    """Extended binomial coefficient x(x-1)...(x-l+1)/l!, and 0 for l < 0.

    ``x`` may be any rational; the falling product keeps everything exact.
    """
    if l < 0:
        return 0
    num = Fraction(1)
    for m in range(l):
        num *= x - m
    return normalize(num / factorial(l))


def pochhammer(x: Exact, i: int) -> Exact:
    """Shifted (rising) factorial (x)_i = x(x+1)...(x+i-1), with (x)_0 = 1."""
    if i < 0:
        raise ValueError(f"pochhammer index must be non-negative, got {i}")
    prod = Fraction(1)
    for a in range(i):
        prod *= x + a
    return normalize(prod)


def double_factorial(i: int) -> int:
    """Product of the integers in [1, i] with the parity of i; 0!! = 1."""
    if i < 0:
        raise ValueError(f"double factorial needs i >= 0, got {i}")
    prod = 1
    while i > 1:
        prod *= i
        i -= 2
    return prod


class Matrix:
    """Immutable rectangular matrix of exact rationals."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, rows):
        entries = tuple(tuple(row) for row in rows)
        if entries and any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("matrix rows have unequal lengths")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "nrows", len(entries))
        object.__setattr__(self, "ncols", len(entries[0]) if entries else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]!r})"

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def determinant(self) -> Exact:
        """Exact determinant by fraction-free (Bareiss) elimination.

        Pivots on the first nonzero entry of each column, swapping rows with
        sign tracking; an all-zero column short-circuits to 0.  The 0x0
        determinant is 1.
        """
        if self.nrows != self.ncols:
            raise ValueError(f"determinant of {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        if n == 0:
            return 1
        a = [[Fraction(x) for x in row] for row in self.entries]
        sign = 1
        prev = Fraction(1)
        for r in range(n - 1):
            pivot_row = next((i for i in range(r, n) if a[i][r] != 0), None)
            if pivot_row is None:
                return 0
            if pivot_row != r:
                a[r], a[pivot_row] = a[pivot_row], a[r]
                sign = -sign
            for i in range(r + 1, n):
                for j in range(r + 1, n):
                    a[i][j] = (a[i][j] * a[r][r] - a[i][r] * a[r][j]) / prev
                a[i][r] = Fraction(0)
            prev = a[r][r]
        return normalize(sign * a[n - 1][n - 1])

"""Delannoy numbers D(i,j), their H variant, and the half-integer expansion.

``delannoy_D`` is the binomial-sum form, which extends D to any rational
second argument (it is a polynomial in j of degree i).  ``delannoy_H`` is
D(i,j) + D(i-1,j) computed from that extension; on j >= -1 this agrees with
the combinatorial definition (0 for j < 0 except H(0,-1) = 1), while for
j <= -2 it continues H as a polynomial, which the determinant relation
between the two matrix families needs.

The brute-force counters walk the step set directly and serve as
independent oracles for the closed forms.
"""

from fractions import Fraction
from functools import cache

from .errors import IdentityError
from .exact import Exact, as_fraction, binomial, normalize


def delannoy_D(i: int, j: Exact) -> Exact:
    """Sum over l of C(i,l) C(j,l) 2^l; counts N/NE/E paths to (i,j) when
    i, j are non-negative integers.  Returns 0 for i < 0."""
    # guard and canonicalize before the cache so float keys never coalesce
    # with exact ones
    return _delannoy_D(i, normalize(as_fraction(j)))


@cache
def _delannoy_D(i: int, j: Exact) -> Exact:
    if i < 0:
        return 0
    total = Fraction(0)
    for l in range(i + 1):
        total += binomial(i, l) * binomial(j, l) * 2**l
    return normalize(total)


@cache
def delannoy_H(i: int, j: int) -> int:
    """H(i,j) = D(i,j) + D(i-1,j)."""
    return delannoy_D(i, j) + delannoy_D(i - 1, j)


def count_D_paths_bruteforce(i: int, j: int) -> int:
    """Count N/NE/E lattice paths from (0,0) to (i,j) by walking the steps."""
    if i < 0 or j < 0:
        raise ValueError("path endpoints must be non-negative")
    return _count_paths(i, j, forbidden=None)


def count_H_paths_bruteforce(i: int, j: int) -> int:
    """Count N/NE/E paths from (0,0) to (i,j+1) avoiding (i-1,j+1)."""
    if i < 0 or j < -1:
        raise ValueError("need i >= 0 and j >= -1")
    return _count_paths(i, j + 1, forbidden=(i - 1, j + 1))


def _count_paths(x: int, y: int, forbidden: tuple[int, int] | None) -> int:
    # Reaches (a,b) from (a-1,b), (a,b-1), (a-1,b-1); the table entry is the
    # number of partial paths ending there.
    table = [[0] * (y + 1) for _ in range(x + 1)]
    for a in range(x + 1):
        for b in range(y + 1):
            if (a, b) == forbidden:
                continue
            if a == 0 and b == 0:
                table[a][b] = 1
                continue
            total = 0
            if a > 0:
                total += table[a - 1][b]
            if b > 0:
                total += table[a][b - 1]
            if a > 0 and b > 0:
                total += table[a - 1][b - 1]
            table[a][b] = total
    return table[x][y]


def half_shift_expansion(i: int, j: int) -> Exact:
    """Expand D(i, j+1/2) as an alternating binomial combination of H values.

    Returns the sum over l of (-1)^l C(-1/2,l) H(i-2l, j) and checks it
    against the direct evaluation of D(i, j+1/2), raising IdentityError on
    any mismatch.
    """
    if i < -1 or j < -1:
        raise ValueError("need i >= -1 and j >= -1")
    total = Fraction(0)
    for l in range((i + 1) // 2 + 1):
        total += (-1) ** l * binomial(Fraction(-1, 2), l) * delannoy_H(i - 2 * l, j)
    total = normalize(total)
    direct = delannoy_D(i, j + Fraction(1, 2))
    if total != direct:
        raise IdentityError(
            f"half-shift expansion failed at ({i},{j}): {total} != {direct}"
        )
    return total

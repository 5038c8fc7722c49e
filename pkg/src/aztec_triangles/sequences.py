"""Interlacing partition chains (Case 1 and Case 2) and their enumeration.

A Case 1 chain for mu of declared length n has 2n partitions, a Case 2
chain 2n+1.  The chain starts empty, ends at mu, alternates horizontal and
vertical strip growth, and its i-th entry has at most ceil(i/2) nonzero
parts.
"""

from dataclasses import dataclass

from .errors import SearchBudget
from .partitions import (
    Partition,
    is_horizontal_strip,
    is_partition,
    is_vertical_strip,
    normalize,
    pad,
    part,
)


@dataclass(frozen=True)
class PartitionSequence:
    case: int
    mu: Partition
    chain: tuple[Partition, ...]

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def ell(self) -> int:
        return len(self.chain)

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "case": self.case,
            "chain": [list(lam) for lam in self.chain],
        }


def chain_length(mu: Partition, case: int) -> int:
    if case not in (1, 2):
        raise ValueError(f"case must be 1 or 2, got {case}")
    return 2 * len(mu) + (1 if case == 2 else 0)


def validate_sequence(seq: PartitionSequence) -> bool:
    """Check all five chain conditions for the declared case."""
    if seq.case not in (1, 2):
        return False
    if not is_partition(seq.mu):
        return False
    if len(seq.chain) != chain_length(seq.mu, seq.case):
        return False
    if len(seq.chain) == 0:
        return True
    if normalize(seq.chain[0]) != ():
        return False
    if normalize(seq.chain[-1]) != normalize(seq.mu):
        return False
    for i, lam in enumerate(seq.chain):
        if not is_partition(lam):
            return False
        if len(normalize(lam)) > (i + 1) // 2:
            return False
        if i == 0:
            continue
        prev = seq.chain[i - 1]
        if i % 2 == 1:
            if not is_horizontal_strip(lam, prev):
                return False
        else:
            if not is_vertical_strip(lam, prev):
                return False
    return True


def _horizontal_extensions(lam, bound, max_parts, value_cap=None):
    """All nu >= lam with nu/lam a horizontal strip, nu inside bound, at most
    max_parts nonzero parts, and parts <= value_cap; ascending order."""
    rows = min(max_parts, len(bound))
    results = []

    def grow(prefix, r):
        if r == rows:
            results.append(normalize(tuple(prefix)))
            return
        lo = part(lam, r)
        hi = min(bound[r], part(lam, r - 1) if r > 0 else bound[r])
        if value_cap is not None:
            hi = min(hi, value_cap)
        for v in range(lo, hi + 1):
            grow(prefix + [v], r + 1)

    grow([], 0)
    return sorted(set(results))


def _vertical_extensions(lam, bound, max_parts, value_cap=None):
    """Same but nu/lam a vertical strip (each part grows by at most 1)."""
    rows = min(max_parts, len(bound))
    results = []

    def grow(prefix, r):
        if r == rows:
            results.append(normalize(tuple(prefix)))
            return
        lo = part(lam, r)
        hi = min(bound[r], lo + 1, prefix[r - 1] if r > 0 else bound[r])
        if value_cap is not None:
            hi = min(hi, value_cap)
        for v in range(lo, hi + 1):
            grow(prefix + [v], r + 1)

    grow([], 0)
    return sorted(set(results))


def enumerate_sequences(
    mu: Partition,
    case: int,
    cap: int | None = None,
    value_caps=None,
) -> list[PartitionSequence]:
    """Exhaustively list the chains ending at mu, in lexicographic order.

    ``value_caps`` optionally bounds the part values per chain index (used
    by the restricted variant below).
    """
    mu = tuple(mu)
    if not is_partition(mu):
        raise ValueError(f"not a partition: {mu}")
    ell = chain_length(mu, case)
    n = len(mu)
    target = normalize(mu)
    bound = pad(target, n) if n else ()
    budget = SearchBudget(cap)
    out = []

    if ell == 0:
        return [PartitionSequence(case, mu, ())]

    def extend(chain, i):
        budget.spend()
        if i == ell:
            out.append(PartitionSequence(case, mu, tuple(chain)))
            return
        lam = chain[-1]
        max_parts = (i + 1) // 2
        value_cap = value_caps[i] if value_caps is not None else None
        if i % 2 == 1:
            options = _horizontal_extensions(lam, bound, max_parts, value_cap)
        else:
            options = _vertical_extensions(lam, bound, max_parts, value_cap)
        if i == ell - 1:
            options = [nu for nu in options if nu == target]
        for nu in options:
            chain.append(nu)
            extend(chain, i + 1)
            chain.pop()

    extend([()], 1)
    return out


def count_sequences(mu: Partition, case: int) -> int:
    """Chain count via the non-intersecting-path determinant."""
    # Deferred import: paths depends on tableaux, which enumerates through
    # this module.
    from .paths import lgv_matrix

    return lgv_matrix(mu, case).determinant()


def enumerate_restricted(n: int, k: int, cap: int | None = None):
    """Case 1 chains for mu = (n,...,1) whose i-th entry has parts at most
    n - (k-1) + floor(i/2); k = 1 reproduces the unrestricted enumeration."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    mu = tuple(range(n, 0, -1))
    caps = [n - (k - 1) + i // 2 for i in range(2 * n)]
    return enumerate_sequences(mu, 1, cap=cap, value_caps=caps)

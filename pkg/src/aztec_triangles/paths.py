"""Non-intersecting Delannoy path families and their determinant counts.

Family j (1-based) runs from u_j = (-j, j) to v_j = (mu_j - j, n) in Case 1
and to (mu_j - j, n+1) in Case 2, where Case 2 paths must not end with an
east step.  Counting vertex-disjoint families is a determinant of single
path counts, which is where the D and H matrices come from.

Steps are recorded as a word over N (north), D (northeast diagonal) and
E (east).
"""

from dataclasses import dataclass
from fractions import Fraction

from .delannoy import delannoy_D, delannoy_H
from .errors import SearchBudget
from .exact import Exact, Matrix
from .partitions import Partition, check_partition, pad
from .tableaux import Entry, SuperSymplecticTableau, validate_tableau

_MOVES = {"N": (0, 1), "D": (1, 1), "E": (1, 0)}


@dataclass(frozen=True)
class LatticePath:
    start: tuple[int, int]
    steps: str

    def points(self) -> list[tuple[int, int]]:
        x, y = self.start
        pts = [(x, y)]
        for ch in self.steps:
            dx, dy = _MOVES[ch]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return pts

    @property
    def end(self) -> tuple[int, int]:
        return self.points()[-1]


@dataclass(frozen=True)
class PathFamily:
    case: int
    mu: Partition
    paths: tuple[LatticePath, ...]  # paths[j-1] starts at (-j, j)

    @property
    def n(self) -> int:
        return len(self.mu)

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "case": self.case,
            "paths": [
                {"j": j, "start": list(p.start), "end": list(p.end), "steps": p.steps}
                for j, p in enumerate(self.paths, start=1)
            ],
        }


def start_point(j: int) -> tuple[int, int]:
    return (-j, j)


def end_point(mu: Partition, case: int, j: int) -> tuple[int, int]:
    n = len(mu)
    return (mu[j - 1] - j, n + (1 if case == 2 else 0))


def is_vertex_disjoint(family: PathFamily) -> bool:
    seen = set()
    for path in family.paths:
        for pt in path.points():
            if pt in seen:
                return False
            seen.add(pt)
    return True


def validate_family(family: PathFamily) -> bool:
    if family.case not in (1, 2):
        return False
    mu = pad(family.mu, family.n)
    if len(family.paths) != family.n:
        return False
    for j, path in enumerate(family.paths, start=1):
        if path.start != start_point(j) or path.end != end_point(mu, family.case, j):
            return False
        if family.case == 2 and path.steps.endswith("E"):
            return False
    return is_vertex_disjoint(family)


def tableau_to_paths(t: SuperSymplecticTableau) -> PathFamily:
    """Row j's unbarred i becomes an east step on y = i, barred i a
    northeast step leaving y = i; north steps fill the gaps."""
    if not validate_tableau(t):
        raise ValueError("invalid tableau")
    n = t.n
    top = n + (1 if t.case == 2 else 0)
    paths = []
    for j in range(1, n + 1):
        y = j
        steps = []
        for e in t.rows[j - 1]:
            if e.value < y:
                raise ValueError("entries incompatible with path heights")
            steps.append("N" * (e.value - y))
            y = e.value
            if e.barred:
                steps.append("D")
                y += 1
            else:
                steps.append("E")
        steps.append("N" * (top - y))
        paths.append(LatticePath(start_point(j), "".join(steps)))
    return PathFamily(t.case, t.shape, tuple(paths))


def paths_to_tableau(f: PathFamily) -> SuperSymplecticTableau:
    """Read row j's entries off the east and northeast steps of path j."""
    if not validate_family(f):
        raise ValueError("invalid path family")
    rows = []
    for path in f.paths:
        y = path.start[1]
        row = []
        for ch in path.steps:
            if ch == "E":
                row.append(Entry(y, False))
            elif ch == "D":
                row.append(Entry(y, True))
                y += 1
            else:
                y += 1
        rows.append(tuple(row))
    shape = pad(f.mu, f.n)
    if tuple(len(r) for r in rows) != shape:
        raise ValueError("family does not match its partition")
    t = SuperSymplecticTableau(f.case, shape, tuple(rows))
    if not validate_tableau(t):
        raise ValueError("family does not decode to a valid tableau")
    return t


def _single_paths(start, end, ban_final_east, budget):
    """All N/D/E step words from start to end, ascending lexicographic."""
    out = []
    dx0, dy0 = end[0] - start[0], end[1] - start[1]
    if dx0 < 0 or dy0 < 0:
        return out

    def walk(prefix, dx, dy):
        budget.spend()
        if dx == 0 and dy == 0:
            out.append("".join(prefix))
            return
        # ascending step order: D < E < N
        if dx >= 1 and dy >= 1:
            prefix.append("D")
            walk(prefix, dx - 1, dy - 1)
            prefix.pop()
        if dx >= 1 and not (ban_final_east and dx == 1 and dy == 0):
            prefix.append("E")
            walk(prefix, dx - 1, dy)
            prefix.pop()
        if dy >= 1:
            prefix.append("N")
            walk(prefix, dx, dy - 1)
            prefix.pop()

    walk([], dx0, dy0)
    return out


def enumerate_path_families(
    mu: Partition, case: int, cap: int | None = None
) -> list[PathFamily]:
    """Brute-force the vertex-disjoint families with the prescribed
    endpoints, in lexicographic order of their step words."""
    mu = check_partition(tuple(mu))
    n = len(mu)
    budget = SearchBudget(cap)
    mu_full = pad(mu, n)
    candidates = [
        _single_paths(
            start_point(j), end_point(mu_full, case, j), case == 2, budget
        )
        for j in range(1, n + 1)
    ]
    families = []

    def assemble(chosen, used, j):
        budget.spend()
        if j > n:
            families.append(PathFamily(case, mu, tuple(chosen)))
            return
        for steps in candidates[j - 1]:
            path = LatticePath(start_point(j), steps)
            pts = path.points()
            if any(pt in used for pt in pts):
                continue
            chosen.append(path)
            used.update(pts)
            assemble(chosen, used, j + 1)
            chosen.pop()
            used.difference_update(pts)

    assemble([], set(), 1)
    return families


def lgv_matrix(mu: Partition, case: int) -> Matrix:
    """n x n matrix of single-path counts whose determinant counts the
    vertex-disjoint families (and hence the chains)."""
    if case not in (1, 2):
        raise ValueError(f"case must be 1 or 2, got {case}")
    mu = pad(check_partition(tuple(mu)), len(mu))
    n = len(mu)
    count = delannoy_D if case == 1 else delannoy_H
    return Matrix(
        [[count(mu[a] - a + b, n - b - 1) for b in range(n)] for a in range(n)]
    )


def d_submatrix(k: int, n: Exact, case: int) -> Matrix:
    """The k x k matrix governing staircase shapes mu = (k,...,1,0^(n-k)).

    Case 1 uses entries D(k-2i+j, n-j-1) for 0 <= i,j <= k-1 with the
    polynomial extension of D, so n may be any rational.  Case 2 uses
    H(2j-i, i+n-k-1) for 1 <= i,j <= k and needs integer n.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if case == 1:
        if isinstance(n, Fraction) and n.denominator == 1:
            n = int(n)
        return Matrix(
            [[delannoy_D(k - 2 * i + j, n - j - 1) for j in range(k)] for i in range(k)]
        )
    if case == 2:
        if isinstance(n, Fraction):
            if n.denominator != 1:
                raise ValueError("the H matrix is defined for integer n only")
            n = int(n)
        return Matrix(
            [
                [delannoy_H(2 * j - i, i + n - k - 1) for j in range(1, k + 1)]
                for i in range(1, k + 1)
            ]
        )
    raise ValueError(f"case must be 1 or 2, got {case}")


def d1_bottom_right_view(k: int, n: Exact) -> Matrix:
    """The Case 1 matrix in its other indexing, D(2j-i, i+n-k-1) for
    1 <= i,j <= k; an anti-transpose of d_submatrix(k, n, 1) with the same
    determinant."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return Matrix(
        [
            [delannoy_D(2 * j - i, i + n - k - 1) for j in range(1, k + 1)]
            for i in range(1, k + 1)
        ]
    )

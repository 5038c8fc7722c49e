"""Generalized Aztec triangles: construction, tiling search, the chain
bijection, and ASCII/SVG rendering.

Cells are addressed as (d, p): diagonal d (numbered northwest to southeast
from 0) and position p along the diagonal from its southwestern-most cell.
Every diagonal's first cell sits directly below the previous one's, so p is
also the Cartesian x coordinate; Cartesian placement is derived only when
rendering.

Diagonal lengths follow the construction rules: diagonal 0 has length mu_1,
odd diagonals grow by one cell, even diagonals repeat the previous length,
so diagonal d has mu_1 + ceil(d/2) cells.  The final diagonal is masked by
mu's hole/particle word: holes are cells of the Case 1 domain, particles
cells of the Case 2 domain.

A domino always starts (north or west cell) on some diagonal d and covers
(d, p) plus (d+1, p) when vertical or (d+1, p+1) when horizontal.  Dominoes
starting on even diagonals are "even" and get filled with holes, odd ones
with particles; reading each diagonal's hole/particle word through the Maya
correspondence produces the partition chain.
"""

import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .errors import SearchBudget
from .partitions import (
    HOLE,
    PARTICLE,
    Partition,
    check_partition,
    from_maya,
    normalize,
    pad,
    to_maya,
)
from .sequences import PartitionSequence, chain_length, validate_sequence

VERTICAL = "V"
HORIZONTAL = "H"


@dataclass(frozen=True)
class Domain:
    case: int
    mu: Partition
    lengths: tuple[int, ...]  # unmasked length of each diagonal
    cells: frozenset

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def num_diagonals(self) -> int:
        return len(self.lengths)

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)


@dataclass(frozen=True, order=True)
class Domino:
    d: int
    p: int
    orient: str  # "V" or "H"

    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        dp = 1 if self.orient == HORIZONTAL else 0
        return ((self.d, self.p), (self.d + 1, self.p + dp))

    @property
    def even(self) -> bool:
        return self.d % 2 == 0

    def to_json(self) -> dict:
        return {"d": self.d, "p": self.p, "orient": self.orient}


@dataclass(frozen=True)
class Tiling:
    domain: Domain
    dominoes: tuple[Domino, ...]

    def to_json(self) -> dict:
        return {
            "mu": list(self.domain.mu),
            "case": self.domain.case,
            "dominoes": [d.to_json() for d in self.dominoes],
        }


def build_domain(mu: Partition, case: int) -> Domain:
    """Construct the type 1 or type 2 domain for mu of declared length n."""
    if case not in (1, 2):
        raise ValueError(f"case must be 1 or 2, got {case}")
    mu = check_partition(tuple(mu))
    n = len(mu)
    ell = chain_length(mu, case)
    mu1 = mu[0] if mu else 0
    lengths = tuple(mu1 + (d + 1) // 2 for d in range(ell))
    cells = set()
    for d in range(ell - 1):
        cells.update((d, p) for p in range(lengths[d]))
    if ell > 0:
        word = to_maya(pad(mu, n), lengths[-1])
        keep = HOLE if case == 1 else PARTICLE
        cells.update((ell - 1, p) for p, ch in enumerate(word) if ch == keep)
    return Domain(case, mu, lengths, frozenset(cells))


def validate_tiling(tiling: Tiling) -> bool:
    """Dominoes are mutually disjoint and cover the domain exactly."""
    covered = [cell for domino in tiling.dominoes for cell in domino.cells()]
    return len(covered) == len(set(covered)) and set(covered) == set(
        tiling.domain.cells
    )


def enumerate_tilings(domain: Domain, cap: int | None = None) -> list[Tiling]:
    """Backtracking exact cover over the first uncovered cell in (d, p)
    order; that cell is always the start of some domino."""
    cells = domain.sorted_cells()
    in_domain = domain.cells
    budget = SearchBudget(cap)
    covered = set()
    chosen = []
    tilings = []

    def place(index):
        budget.spend()
        while index < len(cells) and cells[index] in covered:
            index += 1
        if index == len(cells):
            tilings.append(Tiling(domain, tuple(sorted(chosen))))
            return
        d, p = cells[index]
        for orient in (VERTICAL, HORIZONTAL):
            domino = Domino(d, p, orient)
            other = domino.cells()[1]
            if other not in in_domain or other in covered:
                continue
            covered.add((d, p))
            covered.add(other)
            chosen.append(domino)
            place(index + 1)
            chosen.pop()
            covered.discard((d, p))
            covered.discard(other)

    place(0)
    tilings.sort(key=lambda t: t.dominoes)
    return tilings


def _mark_cells(tiling: Tiling) -> dict:
    """Hole/particle mark for every physical cell, by start-diagonal parity."""
    marks = {}
    for domino in tiling.dominoes:
        fill = HOLE if domino.even else PARTICLE
        for cell in domino.cells():
            marks[cell] = fill
    return marks


def _diagonal_word(domain: Domain, marks: dict, d: int) -> str:
    # Off-domain squares of the final diagonal count as virtual domino
    # starts, so they carry that diagonal's own parity.
    virtual = HOLE if (domain.num_diagonals - 1) % 2 == 0 else PARTICLE
    chars = []
    for p in range(domain.lengths[d]):
        if (d, p) in domain.cells:
            chars.append(marks[(d, p)])
        else:
            chars.append(virtual)
    return "".join(chars)


def tiling_to_sequence(tiling: Tiling) -> PartitionSequence:
    """Decode diagonal d's hole/particle word into the d-th chain entry."""
    if not validate_tiling(tiling):
        raise ValueError("invalid tiling")
    domain = tiling.domain
    marks = _mark_cells(tiling)
    chain = tuple(
        normalize(from_maya(_diagonal_word(domain, marks, d)))
        for d in range(domain.num_diagonals)
    )
    return PartitionSequence(domain.case, domain.mu, chain)


def sequence_to_tiling(seq: PartitionSequence) -> Tiling:
    """Rebuild the tiling whose diagonal words spell out the chain.

    On each even diagonal the holes are domino starts and advance by 0
    (vertical) or 1 (horizontal) position into the next diagonal; on odd
    diagonals the particles do.
    """
    if not validate_sequence(seq):
        raise ValueError("invalid partition sequence")
    domain = build_domain(seq.mu, seq.case)
    ell = domain.num_diagonals
    words = [
        to_maya(pad(seq.chain[d], (d + 1) // 2), domain.lengths[d])
        for d in range(ell)
    ]
    dominoes = []
    for d in range(ell - 1):
        moving = HOLE if d % 2 == 0 else PARTICLE
        sources = [p for p, ch in enumerate(words[d]) if ch == moving]
        targets = [p for p, ch in enumerate(words[d + 1]) if ch == moving]
        if len(sources) != len(targets):
            raise ValueError("chain does not define a tiling")
        for a, b in zip(sources, targets):
            if b - a not in (0, 1):
                raise ValueError("chain does not define a tiling")
            dominoes.append(Domino(d, a, VERTICAL if b == a else HORIZONTAL))
    return Tiling(domain, tuple(sorted(dominoes)))


# ---------------------------------------------------------------------------
# Rendering
#
# Cartesian placement: cell (d, p) sits at x = p, y = (ell - 1) - d + p, so
# the last diagonal starts at height 0.  ASCII glyphs:
#   domain:  '.' cell on an even diagonal, ':' on an odd one,
#            '~' final-diagonal square not in the domain
#   tiling:  'O'/'o' start/second cell of an even domino (holes),
#            'X'/'x' start/second cell of an odd domino (particles)
# ---------------------------------------------------------------------------

_SVG_UNIT = 24
_LIGHT = "#ffffff"
_DARK = "#cccccc"


def _cell_xy(domain: Domain, d: int, p: int) -> tuple[int, int]:
    return p, (domain.num_diagonals - 1) - d + p


def _ghost_cells(domain: Domain):
    ell = domain.num_diagonals
    if ell == 0:
        return
    for p in range(domain.lengths[ell - 1]):
        if (ell - 1, p) not in domain.cells:
            yield ell - 1, p


def _ascii_canvas(domain: Domain, glyphs: dict) -> str:
    spots = {}
    for (d, p), ch in glyphs.items():
        spots[_cell_xy(domain, d, p)] = ch
    if not spots:
        return ""
    xs = [x for x, _ in spots]
    ys = [y for _, y in spots]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        line = "".join(spots.get((x, y), " ") for x in range(0, max(xs) + 1))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def _domain_ascii(domain: Domain) -> str:
    glyphs = {(d, p): "." if d % 2 == 0 else ":" for d, p in domain.cells}
    for d, p in _ghost_cells(domain):
        glyphs[(d, p)] = "~"
    return _ascii_canvas(domain, glyphs)


def _tiling_ascii(tiling: Tiling) -> str:
    glyphs = {}
    for domino in tiling.dominoes:
        start, second = domino.cells()
        glyphs[start] = "O" if domino.even else "X"
        glyphs[second] = "o" if domino.even else "x"
    for d, p in _ghost_cells(tiling.domain):
        glyphs[(d, p)] = "~"
    return _ascii_canvas(tiling.domain, glyphs)


def _svg_root(domain: Domain):
    ell = domain.num_diagonals
    width = max((domain.lengths[d] for d in range(ell)), default=0)
    height = ell - 1 + width if ell else 0
    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str((width + 2) * _SVG_UNIT),
        height=str((height + 2) * _SVG_UNIT),
    )
    return root, height


def _svg_cell_rect(parent, domain, height, d, p, fill, dashed=False):
    x, y = _cell_xy(domain, d, p)
    attrs = {
        "x": str((x + 1) * _SVG_UNIT),
        "y": str((height - y) * _SVG_UNIT),
        "width": str(_SVG_UNIT),
        "height": str(_SVG_UNIT),
        "fill": fill,
        "stroke": "#888888",
        "stroke-width": "1",
    }
    if dashed:
        attrs["stroke-dasharray"] = "4 3"
    ET.SubElement(parent, "rect", attrs)


def _svg_cells(root, domain, height):
    for d, p in domain.sorted_cells():
        _svg_cell_rect(root, domain, height, d, p, _LIGHT if d % 2 == 0 else _DARK)
    for d, p in _ghost_cells(domain):
        _svg_cell_rect(root, domain, height, d, p, "none", dashed=True)


def _domain_svg(domain: Domain) -> str:
    root, height = _svg_root(domain)
    _svg_cells(root, domain, height)
    return ET.tostring(root, encoding="unicode") + "\n"


def _tiling_svg(tiling: Tiling) -> str:
    domain = tiling.domain
    root, height = _svg_root(domain)
    _svg_cells(root, domain, height)
    for domino in tiling.dominoes:
        (d, p), (d2, p2) = domino.cells()
        x1, y1 = _cell_xy(domain, d, p)
        x2, y2 = _cell_xy(domain, d2, p2)
        x, y = min(x1, x2), max(y1, y2)
        ET.SubElement(
            root,
            "rect",
            x=str((x + 1) * _SVG_UNIT),
            y=str((height - y) * _SVG_UNIT),
            width=str((abs(x2 - x1) + 1) * _SVG_UNIT),
            height=str((abs(y2 - y1) + 1) * _SVG_UNIT),
            fill="none",
            stroke="#1f4e9c",
            **{"stroke-width": "3"},
        )
        for cx, cy in ((x1, y1), (x2, y2)):
            ET.SubElement(
                root,
                "circle",
                cx=str((cx + 1) * _SVG_UNIT + _SVG_UNIT // 2),
                cy=str((height - cy) * _SVG_UNIT + _SVG_UNIT // 2),
                r=str(_SVG_UNIT // 6),
                fill=_LIGHT if domino.even else "#000000",
                stroke="#000000",
            )
    return ET.tostring(root, encoding="unicode") + "\n"


def render(obj, fmt: str) -> str:
    """Deterministic ASCII or SVG picture of a Domain or Tiling."""
    if fmt == "ascii":
        return _tiling_ascii(obj) if isinstance(obj, Tiling) else _domain_ascii(obj)
    if fmt == "svg":
        return _tiling_svg(obj) if isinstance(obj, Tiling) else _domain_svg(obj)
    raise ValueError(f"unknown format {fmt!r}")

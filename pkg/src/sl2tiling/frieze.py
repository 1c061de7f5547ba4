"""Quiddities, Coxeter-Conway frieze patterns and their bijections.

Index convention.  Entries are ``c(i, j)``; row ``i`` runs from the bounding
``1`` at ``j = i - 1`` to the bounding ``1`` at ``j = i + n - 3``, with zeros at
``j = i - 2`` and ``j = i + n - 2``.  Rows 1 and 2 solve the recurrence
``c(i, j+1) = q[j] c(i, j) - c(i, j-1)``, so the quiddity sits on the main
diagonal shifted by one: ``c(i, i) = q[i-1]`` (equivalently ``c(k+1, k+1) = q[k]``).
With this choice the Farey polygon ``v[k] = c(1, k) / c(2, k)`` has
quiddity exactly ``q`` and ``c(i, j) = d(v[i-2], v[j])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import Inconsistent, IndexOutOfDomain, NotAQuiddity, ParseError
from .farey import ExtendedRational, FareyPolygon, Triangulation, farey_distance
from .hill import is_antiperiodic

if TYPE_CHECKING:
    from .tiling import SL2Tiling

__all__ = [
    "FriezePattern",
    "is_quiddity",
    "frieze_from_quiddity",
    "quiddity_from_triangulation",
    "triangulation_from_quiddity",
    "polygon_from_quiddity",
    "frieze_entry_by_distance",
    "frieze_to_square_tiling",
    "parse_quiddity",
    "format_quiddity",
]


def parse_quiddity(text: str) -> tuple[int, ...]:
    """Parse ``"1,3,2,2,1,4,2"``.  Only checks syntax, not the quiddity property."""
    parts = [p.strip() for p in text.strip().split(",")]
    try:
        q = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"not a comma-separated integer list: {text!r}") from None
    if len(q) < 2:
        raise ParseError("a quiddity has at least two entries")
    return q


def format_quiddity(q: Sequence[int]) -> str:
    return ",".join(str(x) for x in q)


@dataclass(frozen=True)
class FriezePattern:
    """Positive integer frieze of width ``n - 3``.

    ``rows[i - 1]`` holds ``c(i, i-1), ..., c(i, i+n-3)`` for ``i = 1..n``; all
    other entries follow from diagonal periodicity and row antiperiodicity.
    """

    quiddity: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.quiddity)

    @property
    def width(self) -> int:
        return self.n - 3

    def entry(self, i: int, j: int) -> int:
        """``c(i, j)`` of the antiperiodic extension, for any integers ``i, j``."""
        n = self.n
        base = (i - 1) % n + 1
        j -= i - base
        k, r = divmod(j - (base - 1), n)
        value = self.rows[base - 1][r] if r <= n - 2 else 0
        return -value if k % 2 else value

    def row(self, i: int) -> tuple[int, ...]:
        """Nontrivial row ``i`` with its bounding ones."""
        return tuple(self.entry(i, j) for j in range(i - 1, i + self.n - 2))

    def window(self, i0: int, j0: int, nrows: int, ncols: int) -> list[list[int]]:
        return [[self.entry(i0 + r, j0 + s) for s in range(ncols)] for r in range(nrows)]

    def render(self, first_row: int = 1, nrows: int | None = None) -> str:
        """Staircase layout: each row shifted one column right of the previous."""
        if nrows is None:
            nrows = self.n
        rows = [self.row(i) for i in range(first_row, first_row + nrows)]
        w = max(len(str(x)) for r in rows for x in r)
        lines = []
        for k, r in enumerate(rows):
            cells = " ".join(str(x).rjust(w) for x in r)
            lines.append(" " * ((w + 1) * k) + cells)
        return "\n".join(lines)


def _homogeneous_rows(q: Sequence[int], upto: int) -> tuple[dict[int, int], dict[int, int]]:
    """Rows 1 and 2 of the frieze, ``x[k] = c(1, k)`` and ``y[k] = c(2, k)``, for ``k`` in ``-1..upto``."""
    n = len(q)
    x = {-1: 0, 0: 1}
    y = {-1: -1, 0: 0}
    for k in range(0, upto):
        c = q[k % n]
        x[k + 1] = c * x[k] - x[k - 1]
        y[k + 1] = c * y[k] - y[k - 1]
    return x, y


def frieze_from_quiddity(q: Sequence[int]) -> FriezePattern:
    """Build the frieze whose rows obey the recurrence with coefficients ``q``.

    Rows 1 and 2 come from the recurrence; row ``i`` is then
    ``c(i, j) = c(1, i-2) c(2, j) - c(1, j) c(2, i-2)``.
    """
    q = tuple(q)
    n = len(q)
    if n < 3:
        raise NotAQuiddity(f"friezes need order at least 3, got {n}")
    if not is_antiperiodic(q):
        raise NotAQuiddity(f"{format_quiddity(q)}: monodromy is not minus the identity")
    x, y = _homogeneous_rows(q, 2 * n)
    rows = []
    for i in range(1, n + 1):
        row = tuple(x[i - 2] * y[j] - x[j] * y[i - 2] for j in range(i - 1, i + n - 2))
        if row[0] != 1 or row[-1] != 1:
            raise NotAQuiddity(f"{format_quiddity(q)}: row {i} is not bounded by ones")
        if any(v <= 0 for v in row):
            raise NotAQuiddity(f"{format_quiddity(q)}: row {i} has a non-positive entry")
        if x[i - 2] * y[i - 2 + n] - x[i - 2 + n] * y[i - 2] != 0:
            raise NotAQuiddity(f"{format_quiddity(q)}: row {i} misses its closing zero")
        rows.append(row)
    return FriezePattern(q, tuple(rows))


def is_quiddity(seq: Sequence[int]) -> bool:
    """True for ``(0, 0)`` and for sequences of order >= 3 that yield a positive frieze."""
    q = tuple(seq)
    if len(q) == 2:
        return q == (0, 0)
    if len(q) < 2:
        return False
    try:
        frieze_from_quiddity(q)
    except NotAQuiddity:
        return False
    return True


def quiddity_from_triangulation(t: Triangulation) -> tuple[int, ...]:
    return t.incidence()


def triangulation_from_quiddity(q: Sequence[int]) -> Triangulation:
    """Ear-cutting: repeatedly remove the lowest-labelled vertex of value 1."""
    q = tuple(q)
    n = len(q)
    if n < 3:
        raise NotAQuiddity(f"no triangulation of a {n}-gon")
    labels = list(range(n))
    vals = list(q)
    diags = []
    while len(labels) > 3:
        pos = next((k for k, v in enumerate(vals) if v == 1), None)
        if pos is None:
            raise NotAQuiddity(f"{format_quiddity(q)}: no ear left to cut")
        size = len(labels)
        prev, nxt = (pos - 1) % size, (pos + 1) % size
        diags.append((labels[prev], labels[nxt]))
        vals[prev] -= 1
        vals[nxt] -= 1
        if vals[prev] < 1 or vals[nxt] < 1:
            raise NotAQuiddity(f"{format_quiddity(q)}: ear-cutting drove a count to zero")
        del labels[pos], vals[pos]
    if vals != [1, 1, 1]:
        raise NotAQuiddity(f"{format_quiddity(q)}: final triangle has counts {vals}")
    try:
        t = Triangulation(n, diags)
    except Inconsistent as exc:
        raise NotAQuiddity(str(exc)) from None
    if t.incidence() != q:
        raise NotAQuiddity(f"{format_quiddity(q)}: reconstruction does not reproduce the counts")
    return t


def polygon_from_quiddity(q: Sequence[int]) -> FareyPolygon:
    """Normalized Farey polygon ``v[k] = c(1, k) / c(2, k)``, from ``1/0`` down to ``0/1``."""
    f = frieze_from_quiddity(q)
    return FareyPolygon(ExtendedRational.of(f.entry(1, k), f.entry(2, k)) for k in range(f.n))


def frieze_entry_by_distance(q: Sequence[int], i: int, j: int) -> int:
    """``c(i, j)`` as the Farey distance ``d(v[i-2], v[j])``; needs ``1 <= i <= n``."""
    n = len(q)
    if not (1 <= i <= n and i - 1 <= j <= i + n - 3):
        raise IndexOutOfDomain(f"({i}, {j}) is outside the fundamental triangle for n={n}")
    v = polygon_from_quiddity(q)
    return farey_distance(v[(i - 2) % n], v[j % n])


def frieze_to_square_tiling(f: FriezePattern) -> SL2Tiling:
    """Extend by the zero diagonals and antiperiodicity to an ``(n, n)`` tiling.

    The fundamental domain is ``c(i, j)`` for ``0 <= i, j < n`` in frieze labels.
    """
    from .tiling import SL2Tiling

    n = f.n
    return SL2Tiling([[f.entry(i, j) for j in range(n)] for i in range(n)])

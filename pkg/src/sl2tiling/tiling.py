"""Doubly antiperiodic SL2-tilings and their classification by triples.

A tiling is stored as its ``m x n`` fundamental domain ``P``; the bi-infinite
array is ``a(i, j) = (-1)**(i // m + j // n) * P[i % m][j % n]``.  A triple
``(q, q', M)`` generates the tiling through the recurrences

    a(i, j+1) = q[j]  a(i, j) - a(i, j-1)
    a(i+1, j) = q'[i] a(i, j) - a(i-1, j)

started from ``M`` in the top-left corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidTriple, NotAQuiddity, NotTame, ParseError
from .farey import Mat2
from .frieze import format_quiddity, is_quiddity, parse_quiddity
from .hill import is_antiperiodic

__all__ = [
    "SL2Tiling",
    "Triple",
    "Check",
    "TilingReport",
    "TripleCheck",
    "validate_tiling",
    "tiling_from_triple",
    "triple_from_tiling",
    "check_triple",
    "in_semigroup_S",
    "ratio_monotonicity",
    "shift_window",
]


class SL2Tiling:
    """``(n, m)``-antiperiodic array given by its fundamental domain (``m`` rows, ``n`` columns)."""

    __slots__ = ("_P",)

    def __init__(self, P: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in P)
        if not rows or not rows[0]:
            raise ValueError("empty fundamental domain")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("fundamental domain is not rectangular")
        self._P = rows

    @property
    def P(self) -> tuple[tuple[int, ...], ...]:
        return self._P

    @property
    def m(self) -> int:
        return len(self._P)

    @property
    def n(self) -> int:
        return len(self._P[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        m, n = self.m, self.n
        v = self._P[i % m][j % n]
        return -v if (i // m + j // n) % 2 else v

    def window(self, i0: int, j0: int, nrows: int, ncols: int) -> list[list[int]]:
        return [[self[i0 + r, j0 + s] for s in range(ncols)] for r in range(nrows)]

    def render(self) -> str:
        """The ``2m x 2n`` signed window starting at the origin."""
        w = self.window(0, 0, 2 * self.m, 2 * self.n)
        width = max(len(str(x)) for r in w for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in w)

    @classmethod
    def parse(cls, text: str) -> SL2Tiling:
        """Read ``"m n"`` followed by ``m`` rows of ``n`` integers."""
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        try:
            m, n = (int(t) for t in lines[0])
            rows = [[int(t) for t in ln] for ln in lines[1:]]
        except (ValueError, IndexError):
            raise ParseError("tiling file must start with 'm n' followed by integer rows") from None
        if m < 1 or n < 1 or len(rows) != m or any(len(r) != n for r in rows):
            raise ParseError(f"expected {m} rows of {n} integers")
        return cls(rows)

    def __str__(self) -> str:
        body = "\n".join(" ".join(str(x) for x in r) for r in self._P)
        return f"{self.m} {self.n}\n{body}\n"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SL2Tiling):
            return self._P == other._P
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._P)

    def __repr__(self) -> str:
        return f"SL2Tiling({[list(r) for r in self._P]})"


@dataclass(frozen=True)
class Triple:
    """Pair of quiddities (orders ``n`` and ``m``) plus the corner matrix ``M``."""

    q: tuple[int, ...]
    qprime: tuple[int, ...]
    M: Mat2

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", tuple(self.q))
        object.__setattr__(self, "qprime", tuple(self.qprime))

    @property
    def n(self) -> int:
        return len(self.q)

    @property
    def m(self) -> int:
        return len(self.qprime)

    @classmethod
    def parse(cls, text: str) -> Triple:
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) != 3:
            raise ParseError("triple file needs 3 lines: q, q', and 'a b c d'")
        q = parse_quiddity(lines[0])
        qp = parse_quiddity(lines[1])
        try:
            a, b, c, d = (int(t) for t in lines[2].split())
        except ValueError:
            raise ParseError(f"matrix line must be four integers: {lines[2]!r}") from None
        return cls(q, qp, Mat2(a, b, c, d))

    def __str__(self) -> str:
        return f"{format_quiddity(self.q)}\n{format_quiddity(self.qprime)}\n{self.M}\n"


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    where: tuple[int, int] | None = None
    detail: str = ""

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: pass"
        return f"{self.name}: FAIL at {self.where}: {self.detail}"


@dataclass(frozen=True)
class TilingReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)


@dataclass(frozen=True)
class TripleCheck:
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "valid" if self.ok else "; ".join(self.failures)


def _det3(A: Sequence[Sequence[int]]) -> int:
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def validate_tiling(t: SL2Tiling) -> TilingReport:
    """Check positivity, the unimodular rule, antiperiodicity and tameness.

    Minors are checked with top-left corners in ``[-1, m) x [-1, n)``; by
    antiperiodicity this covers every adjacent minor of the infinite array.
    """
    m, n = t.m, t.n
    # band of rows -1..m+1, columns -1..n+1; E[i+1][j+1] = a(i, j)
    E = t.window(-1, -1, m + 3, n + 3)

    positive = Check("positive", True)
    for i in range(m):
        for j in range(n):
            if t.P[i][j] <= 0:
                positive = Check("positive", False, (i, j), f"entry {t.P[i][j]}")
                break
        if not positive.ok:
            break

    unimodular = Check("unimodular", True)
    tame = Check("tame", True)
    for i in range(m + 1):
        for j in range(n + 1):
            if unimodular.ok:
                minor = E[i][j] * E[i + 1][j + 1] - E[i][j + 1] * E[i + 1][j]
                if minor != 1:
                    unimodular = Check("unimodular", False, (i - 1, j - 1), f"2x2 minor = {minor}")
            if tame.ok:
                minor = _det3([row[j : j + 3] for row in E[i : i + 3]])
                if minor != 0:
                    tame = Check("tame", False, (i - 1, j - 1), f"3x3 minor = {minor}")

    antiperiodic = Check("antiperiodic", True)
    for i in range(-1, m + 1):
        for j in range(-1, n + 1):
            if t[i + m, j] != -t[i, j] or t[i, j + n] != -t[i, j]:
                antiperiodic = Check("antiperiodic", False, (i, j), "sign rule broken")
                break
        if not antiperiodic.ok:
            break

    return TilingReport((positive, unimodular, antiperiodic, tame))


def check_triple(tr: Triple) -> TripleCheck:
    """Diagnose every condition a classifying triple must meet."""
    M = tr.M
    a, b, c, d = M.a, M.b, M.c, M.d
    failures = []
    if M.det != 1:
        failures.append(f"det M = {M.det}, expected 1")
    if min(a, b, c, d) < 1:
        failures.append(f"M = [[{a}, {b}], [{c}, {d}]] has a non-positive entry")
    if not is_quiddity(tr.q):
        failures.append(f"q = ({format_quiddity(tr.q)}) is not a quiddity")
    if not is_quiddity(tr.qprime):
        failures.append(f"q' = ({format_quiddity(tr.qprime)}) is not a quiddity")
    if tr.n >= 3 and not tr.q[0] * a < b:
        failures.append(f"inequality q_0 < b/a fails: {tr.q[0]} * {a} >= {b}")
    if tr.m >= 3 and not tr.qprime[0] * a < c:
        failures.append(f"inequality q'_0 < c/a fails: {tr.qprime[0]} * {a} >= {c}")
    if not failures:
        # consequences of the two inequalities once ad - bc = 1 with positive entries
        if tr.n >= 3:
            assert tr.q[0] * c < d, "derived inequality q_0 < d/c fails"
        if tr.m >= 3:
            assert tr.qprime[0] * b < d, "derived inequality q'_0 < d/b fails"
    return TripleCheck(tuple(failures))


def _extend(seed0: Sequence[int], seed1: Sequence[int], coeffs: Sequence[int], length: int) -> list[list[int]]:
    """Run ``s[k+1] = coeffs[k] s[k] - s[k-1]`` along each component pair."""
    out = []
    for u, v in zip(seed0, seed1):
        s = [u, v]
        for k in range(1, length - 1):
            s.append(coeffs[k] * s[k] - s[k - 1])
        out.append(s[:length])
    return out


def tiling_from_triple(tr: Triple, *, strict: bool = True) -> SL2Tiling:
    """Build the tiling generated by ``tr``.

    With ``strict=False`` the classification inequalities and positivity are
    not required (used for tilings with zeros, such as friezes); the sequences
    must still have antiperiodic monodromy and ``det M = 1``.
    """
    if strict:
        verdict = check_triple(tr)
        if not verdict.ok:
            raise InvalidTriple(verdict.failures[0])
    else:
        if tr.M.det != 1:
            raise InvalidTriple(f"det M = {tr.M.det}, expected 1")
        for name, seq in (("q", tr.q), ("q'", tr.qprime)):
            if len(seq) < 2 or not is_antiperiodic(seq):
                raise InvalidTriple(f"{name} = ({format_quiddity(seq)}) is not antiperiodic")
    n, m = tr.n, tr.m
    M = tr.M
    # rows 0 and 1 first, then every column
    rows01 = _extend((M.a, M.c), (M.b, M.d), tr.q, n)
    by_columns = _extend(rows01[0], rows01[1], tr.qprime, m)
    P = [[by_columns[j][i] for j in range(n)] for i in range(m)]
    # columns 0 and 1 first, then every row
    cols01 = _extend((M.a, M.b), (M.c, M.d), tr.qprime, m)
    by_rows = _extend(cols01[0], cols01[1], tr.q, n)
    if by_rows != P:
        raise AssertionError("row and column recurrences do not commute")
    t = SL2Tiling(P)
    report = validate_tiling(t)
    bad = [c for c in report.checks if not c.ok and (strict or c.name != "positive")]
    if bad:
        raise InvalidTriple(f"generated array fails validation: {bad[0]}")
    return t


def triple_from_tiling(t: SL2Tiling, *, strict: bool = True) -> Triple:
    """Recover ``(q, q', M)`` from a tiling.

    ``q[j] = a(i, j-1) a(i+1, j+1) - a(i, j+1) a(i+1, j-1)`` must not depend on
    ``i`` (and symmetrically for ``q'``), otherwise :class:`NotTame` is raised.
    """
    m, n = t.m, t.n
    if m < 2 or n < 2:
        raise InvalidTriple(f"a {m}x{n} domain cannot carry a unimodular tiling")
    q = []
    for j in range(n):
        vals = [t[i, j - 1] * t[i + 1, j + 1] - t[i, j + 1] * t[i + 1, j - 1] for i in range(m)]
        if len(set(vals)) != 1:
            raise NotTame(f"column coefficient q_{j} varies with the row: {vals}")
        q.append(vals[0])
    qp = []
    for i in range(m):
        vals = [t[i - 1, j] * t[i + 1, j + 1] - t[i + 1, j] * t[i - 1, j + 1] for j in range(n)]
        if len(set(vals)) != 1:
            raise NotTame(f"row coefficient q'_{i} varies with the column: {vals}")
        qp.append(vals[0])
    M = Mat2(t.P[0][0], t.P[0][1], t.P[1][0], t.P[1][1])
    tr = Triple(tuple(q), tuple(qp), M)
    if strict:
        for name, seq in (("q", tr.q), ("q'", tr.qprime)):
            if not is_quiddity(seq):
                raise NotAQuiddity(f"extracted {name} = ({format_quiddity(seq)}) is not a quiddity")
        verdict = check_triple(tr)
        if not verdict.ok:
            raise InvalidTriple(verdict.failures[0])
    return tr


def in_semigroup_S(M: Mat2) -> bool:
    """Unimodular with ``0 < a < b`` and ``a < c`` (hence ``b < d`` and ``c < d``)."""
    ok = M.det == 1 and 0 < M.a < M.b and M.a < M.c
    if ok:
        assert M.b < M.d and M.c < M.d
    return ok


def ratio_monotonicity(t: SL2Tiling) -> bool:
    """``a(0,j)/a(1,j)`` decreases in ``j`` and ``a(i,0)/a(i,1)`` decreases in ``i``.

    Both follow from positivity and the unimodular rule.  Note the column
    ratio is first-over-second: ``a(i,1)/a(i,0)`` increases.
    """
    P = t.P
    for j in range(t.n - 1):
        # a0j/a1j > a0,j+1/a1,j+1
        if not P[0][j] * P[1][j + 1] > P[0][j + 1] * P[1][j]:
            return False
    for i in range(t.m - 1):
        if not P[i][0] * P[i + 1][1] > P[i + 1][0] * P[i][1]:
            return False
    return True


def shift_window(t: SL2Tiling, di: int, dj: int) -> SL2Tiling:
    """Same infinite array with the fundamental window moved to ``(di, dj)``.

    The triple of the shifted window is ``triple_from_tiling(result, strict=False)``;
    no closed-form transformation law is asserted.
    """
    return SL2Tiling(t.window(di, dj, t.m, t.n))

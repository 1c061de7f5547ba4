"""Extended rationals, the Farey graph and Farey polygons.

Vertices of the Farey graph are the rationals together with infinity, stored
as irreducible pairs ``num/den`` with ``den >= 0`` and infinity as ``1/0``.
Two vertices are joined by an edge when their Farey distance
``|num1*den2 - num2*den1|`` equals one.  All arithmetic is on Python ints.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    Inconsistent,
    InvalidPolygon,
    NonCanonicalRational,
    NormalizationFailed,
    NotAnEdge,
    ParseError,
)

__all__ = [
    "ExtendedRational",
    "INF",
    "ZERO",
    "ONE",
    "Mat2",
    "FareyPolygon",
    "Triangulation",
    "farey_distance",
    "is_farey_edge",
    "mediant",
    "farey_series",
    "triangulate_farey_polygon",
    "polygon_quiddity",
    "apply_moebius",
    "cyclic_rotate_normalized",
]


@functools.total_ordering
@dataclass(frozen=True)
class ExtendedRational:
    """Irreducible fraction ``num/den``; ``1/0`` is infinity.

    The constructor only accepts canonical pairs.  Use :meth:`of` to reduce
    an arbitrary pair.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 0:
            raise ValueError(f"negative denominator in {self.num}/{self.den}")
        if self.den == 0 and self.num != 1:
            raise ValueError(f"infinity must be written 1/0, got {self.num}/0")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not irreducible")

    @classmethod
    def of(cls, num: int, den: int = 1) -> ExtendedRational:
        """Reduce ``num/den`` to canonical form (``(k, 0)`` becomes ``1/0``)."""
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a point of the projective line")
        if den == 0:
            return cls(1, 0)
        g = math.gcd(num, den)
        if den < 0:
            g = -g
        return cls(num // g, den // g)

    @classmethod
    def parse(cls, text: str) -> ExtendedRational:
        """Parse ``"p/q"`` (or a bare integer ``"p"``), rejecting reducible input."""
        s = text.strip()
        if "/" in s:
            p_str, q_str = s.split("/", 1)
        else:
            p_str, q_str = s, "1"
        try:
            p, q = int(p_str), int(q_str)
        except ValueError:
            raise ParseError(f"not a rational: {text!r}") from None
        if q_str.strip().startswith(("-", "+")):
            raise NonCanonicalRational(f"denominator must be unsigned: {text!r}")
        if p == 0 and q == 0:
            raise ParseError("0/0 is not a rational")
        try:
            return cls(p, q)
        except ValueError as exc:
            raise NonCanonicalRational(f"non-canonical rational {text!r}: {exc}") from None

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        if self.den == 0:
            return False
        if other.den == 0:
            return True
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtendedRational({self.num}/{self.den})"


INF = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)
ONE = ExtendedRational(1, 1)


def farey_distance(v1: ExtendedRational, v2: ExtendedRational) -> int:
    return abs(v1.num * v2.den - v2.num * v1.den)


def is_farey_edge(v1: ExtendedRational, v2: ExtendedRational) -> bool:
    return farey_distance(v1, v2) == 1


def mediant(v1: ExtendedRational, v2: ExtendedRational) -> ExtendedRational:
    """Third vertex of the Farey triangle on the edge ``(v1, v2)``."""
    if not is_farey_edge(v1, v2):
        raise NotAnEdge(f"{v1} and {v2} are at Farey distance {farey_distance(v1, v2)}")
    return ExtendedRational(v1.num + v2.num, v1.den + v2.den)


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def is_unimodular(self) -> bool:
        return self.det == 1

    def adjugate(self) -> Mat2:
        return Mat2(self.d, -self.b, -self.c, self.a)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __str__(self) -> str:
        return f"{self.a} {self.b} {self.c} {self.d}"


def apply_moebius(g: Mat2, v: ExtendedRational) -> ExtendedRational:
    """Act on ``v`` through homogeneous coordinates, then re-canonicalize."""
    if g.det not in (1, -1):
        raise ValueError(f"matrix {g} is not invertible over the integers")
    return ExtendedRational.of(g.a * v.num + g.b * v.den, g.c * v.num + g.d * v.den)


class FareyPolygon(Sequence[ExtendedRational]):
    """Decreasing cycle ``inf >= v0 > v1 > ... > v_{n-1} >= 0`` of Farey edges."""

    __slots__ = ("_vertices",)

    def __init__(self, vertices: Iterable[ExtendedRational]):
        vs = tuple(vertices)
        n = len(vs)
        if n < 3:
            raise InvalidPolygon(f"a Farey polygon needs at least 3 vertices, got {n}")
        if vs[-1] < ZERO:
            raise InvalidPolygon(f"last vertex {vs[-1]} is negative")
        for i in range(n):
            u, w = vs[i], vs[(i + 1) % n]
            if i < n - 1 and not u > w:
                raise InvalidPolygon(f"vertices {i} and {i + 1} are not decreasing: {u}, {w}")
            if farey_distance(u, w) != 1:
                raise InvalidPolygon(f"{u} and {w} are not joined by a Farey edge")
        self._vertices = vs

    @classmethod
    def parse(cls, text: str) -> FareyPolygon:
        parts = [p for p in text.replace(" ", "").split(",") if p]
        try:
            return cls(ExtendedRational.parse(p) for p in parts)
        except InvalidPolygon as exc:
            raise ParseError(str(exc)) from None

    @property
    def vertices(self) -> tuple[ExtendedRational, ...]:
        return self._vertices

    @property
    def normalized(self) -> bool:
        return self._vertices[0] == INF and self._vertices[-1] == ZERO

    def __getitem__(self, i):  # type: ignore[override]
        return self._vertices[i]

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[ExtendedRational]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FareyPolygon):
            return self._vertices == other._vertices
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self._vertices)

    def __repr__(self) -> str:
        return f"FareyPolygon({self})"


def farey_series(order: int) -> tuple[ExtendedRational, ...]:
    """Irreducible fractions in ``[0, 1]`` with denominator at most ``order``, decreasing."""
    if order < 1:
        raise ValueError("order must be positive")
    terms = [
        ExtendedRational(p, q)
        for q in range(1, order + 1)
        for p in range(0, q + 1)
        if math.gcd(p, q) == 1
    ]
    terms.sort(reverse=True)
    return tuple(terms)


def _crosses(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    (i, j), (k, l) = d1, d2
    return i < k < j < l or k < i < l < j


@dataclass(frozen=True)
class Triangulation:
    """Triangulation of a convex polygon with vertices labelled ``0..n-1``.

    ``diagonals`` holds pairs ``(i, j)`` with ``i < j``.
    """

    n: int
    diagonals: frozenset[tuple[int, int]]

    def __init__(self, n: int, diagonals: Iterable[tuple[int, int]] = ()):
        diags = frozenset((min(i, j), max(i, j)) for i, j in diagonals)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diagonals", diags)
        self._check()

    def _check(self) -> None:
        n = self.n
        if n < 3:
            raise Inconsistent(f"polygon must have at least 3 vertices, got {n}")
        for i, j in self.diagonals:
            if not (0 <= i and j < n) or j - i < 2 or (i == 0 and j == n - 1):
                raise Inconsistent(f"({i}, {j}) is not a diagonal of a {n}-gon")
        if len(self.diagonals) != n - 3:
            raise Inconsistent(f"{len(self.diagonals)} diagonals, expected {n - 3}")
        ds = sorted(self.diagonals)
        for a in range(len(ds)):
            for b in range(a + 1, len(ds)):
                if ds[b][0] >= ds[a][1]:
                    break
                if _crosses(ds[a], ds[b]):
                    raise Inconsistent(f"diagonals {ds[a]} and {ds[b]} cross")
        if len(self.triangles()) != n - 2:
            raise Inconsistent("diagonals do not cut the polygon into n-2 triangles")

    def triangles(self) -> list[tuple[int, int, int]]:
        """Triangles as sorted vertex triples, found by peeling from edge ``(0, n-1)``."""
        n = self.n
        adj: list[set[int]] = [set() for _ in range(n)]
        for i in range(n):
            adj[i].add((i + 1) % n)
            adj[(i + 1) % n].add(i)
        for i, j in self.diagonals:
            adj[i].add(j)
            adj[j].add(i)
        out = []
        stack = [(0, n - 1)]
        while stack:
            i, j = stack.pop()
            if j - i < 2:
                continue
            apex = [k for k in adj[i] if i < k < j and k in adj[j]]
            if len(apex) != 1:
                raise Inconsistent(f"edge ({i}, {j}) has {len(apex)} candidate apexes")
            k = apex[0]
            out.append((i, k, j))
            stack.append((i, k))
            stack.append((k, j))
        return sorted(out)

    def incidence(self) -> tuple[int, ...]:
        """Number of triangles at each vertex."""
        counts = [1] * self.n
        for i, j in self.diagonals:
            counts[i] += 1
            counts[j] += 1
        return tuple(counts)

    @classmethod
    def parse(cls, text: str) -> Triangulation:
        """Parse ``"n i-j i-j ..."``."""
        tokens = text.split()
        if not tokens:
            raise ParseError("empty triangulation")
        try:
            n = int(tokens[0])
            diags = []
            for tok in tokens[1:]:
                i, j = tok.split("-")
                diags.append((int(i), int(j)))
        except ValueError:
            raise ParseError(f"malformed triangulation: {text!r}") from None
        try:
            return cls(n, diags)
        except Inconsistent as exc:
            raise ParseError(str(exc)) from None

    def __str__(self) -> str:
        return " ".join([str(self.n)] + [f"{i}-{j}" for i, j in sorted(self.diagonals)])


def triangulate_farey_polygon(p: FareyPolygon) -> Triangulation:
    """Triangulation whose diagonals are the Farey edges between non-adjacent vertices."""
    n = len(p)
    diags = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1) and farey_distance(p[i], p[j]) == 1
    ]
    return Triangulation(n, diags)


def polygon_quiddity(p: FareyPolygon) -> tuple[int, ...]:
    n = len(p)
    return tuple(farey_distance(p[i - 1], p[(i + 1) % n]) for i in range(n))


def cyclic_rotate_normalized(p: FareyPolygon) -> FareyPolygon:
    """Rotate ``(v0, ..., v_{n-1})`` to ``(v1, ..., v_{n-1}, v0)`` and renormalize.

    The renormalizing map sends ``v1`` to infinity and ``v0`` to zero.  Its
    candidate is the adjugate of the matrix with columns ``v1, v0``; negating
    one row gives the orientation-reversed alternative, and whichever keeps the
    polygon decreasing is used.
    """
    if not p.normalized:
        raise NormalizationFailed("cyclic rotation is defined for normalized polygons only")
    v0, v1 = p[0], p[1]
    g = Mat2(v1.num, v0.num, v1.den, v0.den).adjugate()
    rotated = list(p[1:]) + [v0]
    for cand in (g, Mat2(-g.a, -g.b, g.c, g.d)):
        image = [apply_moebius(cand, v) for v in rotated]
        try:
            out = FareyPolygon(image)
        except InvalidPolygon:
            continue
        if out.normalized:
            return out
    raise NormalizationFailed(f"no orientation of the normalizing map works for {p}")

"""Farey polygons attached to a tiling and the distance formula for its entries.

For a triple ``(q, q', M)`` with ``M = [[a, b], [c, d]]`` the ``n``-gon ``v`` is
the sequence of ratios of the first two tiling rows, and the ``m``-gon ``v'``
is the normalized polygon of ``q'`` rotated by one.  Every domain entry is then
``a(i, j) = d(v'[i-1], v[j])``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfDomain, InvalidTriple, ParseError, SeparationViolated
from .farey import INF, ExtendedRational, FareyPolygon, farey_distance
from .frieze import polygon_from_quiddity
from .tiling import Triple, check_triple

__all__ = [
    "PolygonPair",
    "polygons_from_triple",
    "entry_by_distance",
    "descent_chain",
    "merge_into_common_polygon",
]


@dataclass(frozen=True)
class PolygonPair:
    v: FareyPolygon
    vprime: FareyPolygon

    def __str__(self) -> str:
        return f"v: {self.v}\nv': {self.vprime}\n"

    @classmethod
    def parse(cls, text: str) -> PolygonPair:
        found = {}
        for line in text.strip().splitlines():
            key, _, rest = line.partition(":")
            found[key.strip()] = rest
        if set(found) != {"v", "v'"}:
            raise ParseError("polygon pair needs exactly a 'v:' line and a \"v':\" line")
        return cls(FareyPolygon.parse(found["v"]), FareyPolygon.parse(found["v'"]))


def polygons_from_triple(tr: Triple) -> PolygonPair:
    if tr.n < 3 or tr.m < 3:
        raise InvalidTriple("polygons need orders n, m >= 3")
    verdict = check_triple(tr)
    if not verdict.ok:
        raise InvalidTriple(verdict.failures[0])
    M, q = tr.M, tr.q
    # homogeneous points w[j] = (a(0, j), a(1, j))
    w = [(M.a, M.c), (M.b, M.d)]
    for j in range(1, tr.n - 1):
        (x0, y0), (x1, y1) = w[j - 1], w[j]
        w.append((q[j] * x1 - x0, q[j] * y1 - y0))
    v = FareyPolygon(ExtendedRational.of(x, y) for x, y in w[: tr.n])
    shifted = tr.qprime[1:] + tr.qprime[:1]
    vprime = polygon_from_quiddity(shifted)
    m = tr.m
    if vprime[m - 2] != ExtendedRational(1, tr.qprime[0]):
        raise SeparationViolated(f"v'[m-2] = {vprime[m - 2]}, expected 1/{tr.qprime[0]}")
    if not (vprime[m - 2] > v[0] and v[-1] > vprime[m - 1]):
        raise SeparationViolated(f"{v} does not fit between {vprime[m - 2]} and {vprime[m - 1]}")
    return PolygonPair(v, vprime)


def entry_by_distance(pp: PolygonPair, i: int, j: int) -> int:
    """``d(v'[i-1], v[j])`` with ``i = 0`` reading ``v'[m-1]``."""
    m, n = len(pp.vprime), len(pp.v)
    if not (0 <= i < m and 0 <= j < n):
        raise IndexOutOfDomain(f"({i}, {j}) is outside the {m}x{n} domain")
    return farey_distance(pp.vprime[(i - 1) % m], pp.v[j])


def _lowest_neighbor(u: ExtendedRational, y: ExtendedRational) -> ExtendedRational:
    """Smallest Farey neighbour ``t`` of ``u`` with ``y <= t < u``."""
    if u.is_infinite:
        return ExtendedRational(-((-y.num) // y.den), 1)
    p, q = u.num, u.den
    # neighbours below u are (a0 + k p) / (b0 + k q), k >= 0, increasing towards u
    b0 = pow(p, -1, q) if q > 1 else 1
    a0 = (p * b0 - 1) // q
    gap = p * y.den - q * y.num
    need = y.num * b0 - a0 * y.den
    k = max(0, -((-need) // gap))
    return ExtendedRational(a0 + k * p, b0 + k * q)


def descent_chain(x: ExtendedRational, y: ExtendedRational) -> list[ExtendedRational]:
    """Vertices strictly between ``x > y`` on a shortest decreasing Farey path.

    Greedy: from each vertex jump to its lowest neighbour not below ``y``.
    Because Farey edges do not cross, no decreasing path reaches ``y`` in
    fewer steps.
    """
    if not x > y:
        raise ValueError(f"need x > y, got {x} and {y}")
    chain = []
    u = x
    while u != y:
        u = _lowest_neighbor(u, y)
        if u != y:
            chain.append(u)
    return chain


def merge_into_common_polygon(pp: PolygonPair) -> FareyPolygon:
    """Smallest Farey polygon containing both ``v'`` and ``v`` as vertex subsets."""
    vp, v = pp.vprime, pp.v
    m = len(vp)
    vertices = list(vp[: m - 1])
    vertices += descent_chain(vp[m - 2], v[0])
    vertices += list(v)
    vertices += descent_chain(v[-1], vp[m - 1])
    vertices.append(vp[m - 1])
    assert vertices[0] == INF
    return FareyPolygon(vertices)

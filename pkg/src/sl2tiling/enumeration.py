"""Exhaustive generation of triangulations, quiddities, matrices and triples.

All bounds are hard limits: asking for more raises :class:`BoundExceeded`
instead of truncating.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BoundExceeded
from .farey import Mat2, Triangulation
from .frieze import quiddity_from_triangulation
from .tiling import Triple

__all__ = [
    "MAX_POLYGON",
    "MAX_S_BOUND",
    "MAX_TRIPLE_ORDER",
    "MAX_TRIPLE_ENTRY",
    "enumerate_triangulations",
    "enumerate_quiddities",
    "canonical_rotation",
    "quiddity_classes",
    "positive_unimodular",
    "enumerate_S",
    "enumerate_triples",
]

MAX_POLYGON = 12
MAX_S_BOUND = 500
MAX_TRIPLE_ORDER = 8
MAX_TRIPLE_ENTRY = 200


@lru_cache(maxsize=None)
def _diagonal_sets(lo: int, hi: int) -> tuple[frozenset[tuple[int, int]], ...]:
    """Triangulations of the sub-polygon ``lo..hi`` (its base edge is ``(lo, hi)``)."""
    if hi - lo < 2:
        return (frozenset(),)
    out = []
    for apex in range(lo + 1, hi):
        here = set()
        if apex - lo >= 2:
            here.add((lo, apex))
        if hi - apex >= 2:
            here.add((apex, hi))
        for left in _diagonal_sets(lo, apex):
            for right in _diagonal_sets(apex, hi):
                out.append(frozenset(here) | left | right)
    return tuple(out)


def _check_polygon_order(n: int) -> None:
    if not 3 <= n <= MAX_POLYGON:
        raise BoundExceeded(f"polygon order must be in 3..{MAX_POLYGON}, got {n}")


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """All triangulations of the labelled convex ``n``-gon, sorted by diagonal list."""
    _check_polygon_order(n)
    sets = sorted(_diagonal_sets(0, n - 1), key=sorted)
    return [Triangulation(n, d) for d in sets]


def enumerate_quiddities(n: int) -> list[tuple[int, ...]]:
    """Quiddities of order ``n`` in lexicographic order (``(0, 0)`` for ``n = 2``)."""
    if n == 2:
        return [(0, 0)]
    qs = [quiddity_from_triangulation(t) for t in enumerate_triangulations(n)]
    if len(set(qs)) != len(qs):
        raise AssertionError(f"two triangulations of the {n}-gon share a quiddity")
    return sorted(qs)


def canonical_rotation(q: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest cyclic rotation (reflections are not identified)."""
    q = tuple(q)
    return min(q[k:] + q[:k] for k in range(len(q)))


def quiddity_classes(n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Cyclic classes keyed by canonical rotation, both keys and members sorted."""
    classes: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for q in enumerate_quiddities(n):
        classes[canonical_rotation(q)].append(q)
    return {k: classes[k] for k in sorted(classes)}


def _matrix_key(M: Mat2) -> tuple[int, int, int, int]:
    return (M.d, M.c, M.b, M.a)


@lru_cache(maxsize=8)
def _positive_unimodular(bound: int) -> tuple[Mat2, ...]:
    out = []
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            # need b c = -1 (mod a)
            if a == 1:
                c0 = 1
            else:
                try:
                    c0 = (-pow(b, -1, a)) % a
                except ValueError:
                    continue
                if c0 == 0:
                    c0 = a
            for c in range(c0, bound + 1, a):
                d = (b * c + 1) // a
                if d > bound:
                    break
                out.append(Mat2(a, b, c, d))
    out.sort(key=_matrix_key)
    return tuple(out)


def positive_unimodular(bound: int) -> list[Mat2]:
    """All ``[[a, b], [c, d]]`` with ``ad - bc = 1`` and entries in ``1..bound``."""
    if not 0 <= bound <= MAX_TRIPLE_ENTRY:
        raise BoundExceeded(f"entry bound must be in 0..{MAX_TRIPLE_ENTRY}, got {bound}")
    return list(_positive_unimodular(bound))


def enumerate_S(bound: int) -> list[Mat2]:
    """Members of the semigroup ``0 < a < b < d, 0 < a < c < d`` with ``d <= bound``."""
    if not 0 <= bound <= MAX_S_BOUND:
        raise BoundExceeded(f"S bound must be in 0..{MAX_S_BOUND}, got {bound}")
    # d is the largest entry of any member, so the positive-unimodular scan is exhaustive
    return [M for M in _positive_unimodular(bound) if M.a < M.b and M.a < M.c]


def enumerate_triples(n: int, m: int, entry_bound: int) -> Iterator[Triple]:
    """Every valid triple of orders ``(n, m)`` with matrix entries at most ``entry_bound``.

    Order: ``q`` and ``q'`` lexicographic, then ``M`` by ``(d, c, b, a)``.
    """
    for k in (n, m):
        if not 2 <= k <= MAX_TRIPLE_ORDER:
            raise BoundExceeded(f"orders must be in 2..{MAX_TRIPLE_ORDER}, got {k}")
    if not 0 <= entry_bound <= MAX_TRIPLE_ENTRY:
        raise BoundExceeded(f"entry bound must be in 0..{MAX_TRIPLE_ENTRY}, got {entry_bound}")
    mats = _positive_unimodular(entry_bound)
    for q in enumerate_quiddities(n):
        for qp in enumerate_quiddities(m):
            for M in mats:
                if n >= 3 and not q[0] * M.a < M.b:
                    continue
                if m >= 3 and not qp[0] * M.a < M.c:
                    continue
                yield Triple(q, qp, M)

"""Discrete Hill equations ``V[i+1] = c[i] * V[i] - V[i-1]`` with periodic coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .farey import Mat2

__all__ = [
    "HillSolution",
    "solve",
    "monodromy",
    "is_antiperiodic",
    "is_non_oscillating",
    "sign_changes",
]

MINUS_ONE = Mat2(-1, 0, 0, -1)


@dataclass(frozen=True)
class HillSolution:
    """Window ``V[origin], ..., V[origin + len(values) - 1]`` of a solution."""

    origin: int
    values: tuple[int, ...]

    def __getitem__(self, index: int) -> int:
        k = index - self.origin
        if not 0 <= k < len(self.values):
            raise IndexError(f"index {index} outside window starting at {self.origin}")
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def solve(
    coeffs: Sequence[int],
    v0: int,
    v1: int,
    start: int = 0,
    length: int = 2,
    *,
    seed_index: int = 0,
) -> HillSolution:
    """Solution with ``V[seed_index] = v0`` and ``V[seed_index + 1] = v1``.

    Returns the window of ``length`` values starting at ``start``; the
    recurrence is run forward and backward from the seed as needed.
    """
    if length < 2:
        raise ValueError("length must be at least 2")
    n = len(coeffs)
    if n == 0:
        raise ValueError("empty coefficient sequence")
    lo = min(start, seed_index)
    hi = max(start + length - 1, seed_index + 1)
    vals = {seed_index: v0, seed_index + 1: v1}
    for i in range(seed_index + 1, hi):
        vals[i + 1] = coeffs[i % n] * vals[i] - vals[i - 1]
    for i in range(seed_index, lo, -1):
        # V[i-1] = c[i] V[i] - V[i+1]
        vals[i - 1] = coeffs[i % n] * vals[i] - vals[i + 1]
    return HillSolution(start, tuple(vals[k] for k in range(start, start + length)))


def monodromy(coeffs: Sequence[int]) -> Mat2:
    """Product ``C[n-1] ... C[1] C[0]`` of the companion matrices ``[[c, -1], [1, 0]]``."""
    m = Mat2.identity()
    for c in coeffs:
        m = Mat2(c, -1, 1, 0) @ m
    return m


def is_antiperiodic(coeffs: Sequence[int]) -> bool:
    """True iff every solution satisfies ``V[i+n] = -V[i]``."""
    return monodromy(coeffs) == MINUS_ONE


def is_non_oscillating(coeffs: Sequence[int]) -> bool:
    """Antiperiodic, and every solution changes sign exactly once per period.

    Checked on the basis solutions seeded with ``V[k] = 0, V[k+1] = 1``: each
    must be positive on ``V[k+1], ..., V[k+n-1]``.
    """
    n = len(coeffs)
    if n < 2 or not is_antiperiodic(coeffs):
        return False
    for k in range(n):
        prev, cur = 0, 1
        for i in range(k + 1, k + n - 1):
            prev, cur = cur, coeffs[i % n] * cur - prev
            if cur <= 0:
                return False
    return True


def sign_changes(values: Sequence[int]) -> int:
    """Sign changes between consecutive nonzero entries (zeros are skipped)."""
    nz = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))

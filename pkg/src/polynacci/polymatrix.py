"""The order-m Polynacci companion matrix and its exact inverse.

A_m has an all-ones first column and an all-ones first superdiagonal; it
generalizes the 2x2 Fibonacci matrix [[1,1],[1,0]]. Its inverse B_m is again
a 0/±1 matrix: ones on the first subdiagonal, a last column of (1, -1, ..., -1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedOrderError
from .exactcore import IntMatrix

__all__ = [
    "Polymatrix",
    "InversePolymatrix",
    "build_polymatrix",
    "build_inverse",
    "corner_scalar",
]

MIN_ORDER = 2  # the family generalizes Lucas, which starts at order 2


def _check_order(m: int) -> None:
    if m < MIN_ORDER:
        raise UnsupportedOrderError(f"order must be >= {MIN_ORDER}, got {m}")


@dataclass(frozen=True)
class Polymatrix:
    m: int
    matrix: IntMatrix


@dataclass(frozen=True)
class InversePolymatrix:
    m: int
    matrix: IntMatrix


def build_polymatrix(m: int) -> Polymatrix:
    """A_m: entries a_{i1} = 1, a_{i,i+1} = 1, all others 0 (1-based)."""
    _check_order(m)
    rows = [
        [1 if j == 0 or j == i + 1 else 0 for j in range(m)]
        for i in range(m)
    ]
    return Polymatrix(m, IntMatrix(rows))


def build_inverse(m: int) -> InversePolymatrix:
    """B_m = A_m^{-1}: b_{1m} = 1, b_{im} = -1 for i >= 2, b_{i,i-1} = 1."""
    _check_order(m)
    rows = [[0] * m for _ in range(m)]
    rows[0][m - 1] = 1
    for i in range(1, m):
        rows[i][m - 1] = -1
        rows[i][i - 1] = 1
    return InversePolymatrix(m, IntMatrix(rows))


def corner_scalar(m: int, i: int) -> int:
    """Entry (1, m) of A_m^i; zero for every i <= m - 2.

    This is the scalar that makes the trace-collapse argument work: the
    top-right corner of a power of A_m only becomes nonzero once the power
    reaches m - 1.
    """
    _check_order(m)
    if i < 0:
        raise ValueError("power must be nonnegative")
    power = build_polymatrix(m).matrix ** i
    return power[0][m - 1]

"""Symbols of the four-element type-D families and their Fourier signs.

For ``n >= 4`` and ``2 <= k <= n-2`` (``m = n - k``), the characters labelled
``((1), (k, 1^(m-1)))`` and ``(-, (k, 2, 1^(n-k-2)))`` lie in a family of
size four whose symbols X1..X4 are built here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Symbol",
    "DFamily",
    "FOURIER_MATRIX",
    "x1_symbol",
    "d_family_symbols",
    "z_set",
    "is_special",
    "family_size",
    "d_epsilon_via_fourier",
    "cohomology_degrees",
]

_H = Fraction(1, 2)

# rows and columns ordered X1, X2, X3, X4
FOURIER_MATRIX: tuple[tuple[Fraction, ...], ...] = (
    (_H, _H, _H, _H),
    (_H, _H, -_H, -_H),
    (_H, -_H, _H, -_H),
    (_H, -_H, -_H, _H),
)


@dataclass(frozen=True)
class Symbol:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        for row in (self.top, self.bottom):
            if any(x < 0 for x in row) or any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"symbol rows must be strictly increasing and non-negative: {self}")

    def entries(self) -> Counter:
        return Counter(self.top) + Counter(self.bottom)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.top))};{','.join(map(str, self.bottom))})"


@dataclass(frozen=True)
class DFamily:
    n: int
    k: int
    m: int
    symbols: tuple[Symbol, Symbol, Symbol, Symbol]
    fourier: tuple[tuple[Fraction, ...], ...] = FOURIER_MATRIX


def x1_symbol(n: int, k: int) -> Symbol:
    """Symbol of ``((1), (k, 1^(n-k-1)))``; also valid in the degenerate case k = 1."""
    if n < 4 or not 1 <= k <= n - 2:
        raise ValueError(f"need n >= 4 and 1 <= k <= n-2, got n={n}, k={k}")
    m = n - k
    return Symbol(tuple(range(m - 1)) + (m,), tuple(range(1, m)) + (n - 1,))


def d_family_symbols(n: int, k: int) -> DFamily:
    if n < 4 or not 2 <= k <= n - 2:
        raise ValueError(f"need n >= 4 and 2 <= k <= n-2, got n={n}, k={k}")
    m = n - k
    head_top = tuple(range(m - 1))  # 0 .. m-2
    x1 = x1_symbol(n, k)
    x2 = Symbol(head_top + (m - 1,), tuple(range(1, m - 1)) + (m, n - 1))
    x3 = Symbol(head_top + (n - 1,), tuple(range(1, m)) + (m,))
    x4 = Symbol(head_top + (m - 1, m, n - 1), tuple(range(1, m - 1)))
    return DFamily(n, k, m, (x1, x2, x3, x4))


def z_set(x: Symbol) -> frozenset[int]:
    """Entries occurring in exactly one row."""
    return frozenset(set(x.top) ^ set(x.bottom))


def is_special(x: Symbol) -> bool:
    """``a1 <= b1 <= a2 <= b2 <= ...``; False for rows of unequal length."""
    if len(x.top) != len(x.bottom):
        return False
    merged = [c for pair in zip(x.top, x.bottom) for c in pair]
    return all(a <= b for a, b in zip(merged, merged[1:]))


def family_size(x: Symbol) -> int:
    if not is_special(x):
        raise ValueError(f"{x} is not a special symbol")
    z = len(z_set(x))
    if z < 2:
        raise ValueError(f"|Z| = {z} < 2 for {x}")
    return 2 ** (z - 2)


def cohomology_degrees(n: int, k: int) -> tuple[int, int]:
    """Degrees in which the X3 and X4 constituents of R_w^1 occur."""
    return n + k, n + k - 2


def d_epsilon_via_fourier(n: int, k: int, which: str) -> int:
    """Sign of the X1- or X2-labelled character from the family Fourier matrix.

    Only X3 and X4 label constituents of R_w^1, so the sign is the
    parity-weighted sum of the two Fourier entries in those columns.
    """
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n-2, got k={k}")
    row = {"X1": 0, "X2": 1}[which]
    i3, i4 = cohomology_degrees(n, k)
    eps = (-1) ** i3 * FOURIER_MATRIX[row][2] + (-1) ** i4 * FOURIER_MATRIX[row][3]
    if eps.denominator != 1:
        raise ArithmeticError(f"non-integral epsilon {eps}")
    return int(eps)

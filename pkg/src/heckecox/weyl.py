"""Irreducible Weyl groups realised by their action on the root system.

Group elements are permutations of the full root list (positive and
negative roots), stored as tuples: ``perm[i]`` is the index of ``w(root_i)``.
Simple roots follow Bourbaki numbering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

__all__ = [
    "WeylType",
    "RootSystemData",
    "ScaleExceeded",
    "parse_type",
    "cartan_matrix",
    "build_root_system",
    "word_length",
    "coxeter_element",
    "element_order",
    "coxeter_number",
    "coxeter_matrix",
    "group_order",
    "coxeter_conjugacy_check",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 2000

_FIXED_RANK = {"G": (2,), "F": (4,), "E": (6, 7, 8)}
_MIN_RANK = {"A": 1, "B": 2, "D": 4}


class ScaleExceeded(RuntimeError):
    """Raised when a request would enumerate a group beyond desk scale."""


@dataclass(frozen=True, order=True)
class WeylType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family in _MIN_RANK:
            if self.rank < _MIN_RANK[self.family]:
                raise ValueError(
                    f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
                )
        elif self.family in _FIXED_RANK:
            if self.rank not in _FIXED_RANK[self.family]:
                raise ValueError(f"no Weyl group of type {self.family}{self.rank}")
        else:
            raise ValueError(f"unknown Weyl family {self.family!r}")

    @property
    def is_classical(self) -> bool:
        return self.family in _MIN_RANK

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type(spec: str) -> WeylType:
    """``"E8"`` -> ``WeylType("E", 8)``; raises ValueError on bad input."""
    m = re.fullmatch(r"\s*([A-Za-z])\s*_?(\d+)\s*", spec)
    if m is None:
        raise ValueError(f"bad Weyl type {spec!r}")
    return WeylType(m[1].upper(), int(m[2]))


def cartan_matrix(t: WeylType) -> tuple[tuple[int, ...], ...]:
    """Entry ``[i][j]`` is <alpha_i^vee, alpha_j> (0-based, Bourbaki order)."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j], a[j][i] = aij, aji

    f = t.family
    if f in "AB":
        for i in range(n - 1):
            bond(i, i + 1)
        if f == "B":
            # alpha_n short
            bond(n - 2, n - 1, -1, -2)
    elif f == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif f == "G":
        # alpha_1 short
        bond(0, 1, -3, -1)
    elif f == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif f == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    return tuple(tuple(r) for r in a)


@dataclass(frozen=True)
class RootSystemData:
    type: WeylType
    roots: tuple[tuple[int, ...], ...]
    simple_reflection_action: tuple[tuple[int, ...], ...]
    positive_root_count: int
    index: dict[tuple[int, ...], int] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def identity(self) -> tuple[int, ...]:
        return tuple(range(len(self.roots)))

    def is_positive(self, i: int) -> bool:
        return any(c > 0 for c in self.roots[i])

    def element(self, word) -> tuple[int, ...]:
        """Root permutation of ``s_{w1} s_{w2} ... s_{wk}`` (letters 1-based)."""
        perm = self.identity
        for letter in reversed(tuple(word)):
            if not 1 <= letter <= self.rank:
                raise ValueError(f"generator {letter} out of range for {self.type}")
            s = self.simple_reflection_action[letter - 1]
            perm = tuple(s[p] for p in perm)
        return perm


def _reflect(root: tuple[int, ...], i: int, cartan) -> tuple[int, ...]:
    pairing = sum(cartan[i][j] * root[j] for j in range(len(root)))
    out = list(root)
    out[i] -= pairing
    return tuple(out)


@lru_cache(maxsize=None)
def build_root_system(t: WeylType) -> RootSystemData:
    """Close the simple roots under the simple reflections."""
    n = t.rank
    cartan = cartan_matrix(t)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = _reflect(r, i, cartan)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    positive = sorted((r for r in found if any(c > 0 for c in r)), key=lambda r: (sum(r), r))
    roots = tuple(positive) + tuple(tuple(-c for c in r) for r in positive)
    index = {r: k for k, r in enumerate(roots)}
    actions = tuple(
        tuple(index[_reflect(r, i, cartan)] for r in roots) for i in range(n)
    )
    return RootSystemData(t, roots, actions, len(positive), index)


def word_length(sys: RootSystemData, w) -> int:
    perm = sys.element(w)
    n = sys.positive_root_count
    return sum(1 for i in range(n) if perm[i] >= n)


def coxeter_element(t: WeylType, ordering=None) -> tuple[int, ...]:
    """Word listing each generator once, in the given order."""
    if ordering is None:
        return tuple(range(1, t.rank + 1))
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(1, t.rank + 1)):
        raise ValueError(f"{ordering} is not a permutation of 1..{t.rank}")
    return ordering


def _order_of_perm(perm: tuple[int, ...]) -> int:
    ident = tuple(range(len(perm)))
    k, cur = 1, perm
    while cur != ident:
        cur = tuple(perm[c] for c in cur)
        k += 1
    return k


def element_order(sys: RootSystemData, w) -> int:
    return _order_of_perm(sys.element(w))


_H_EXCEPTIONAL = {"G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30}


def coxeter_number(t: WeylType) -> int:
    n = t.rank
    if t.family == "A":
        return n + 1
    if t.family == "B":
        return 2 * n
    if t.family == "D":
        return 2 * n - 2
    return _H_EXCEPTIONAL[str(t)]


_DEGREES = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


def group_order(t: WeylType) -> int:
    n = t.rank
    if t.family == "A":
        return factorial(n + 1)
    if t.family == "B":
        return 2**n * factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return prod(_DEGREES[str(t)])


def coxeter_matrix(t: WeylType) -> tuple[tuple[int, ...], ...]:
    """Orders m_ij of s_i s_j, read off the Cartan products."""
    a = cartan_matrix(t)
    by_product = {0: 2, 1: 3, 2: 4, 3: 6}
    n = t.rank
    return tuple(
        tuple(1 if i == j else by_product[a[i][j] * a[j][i]] for j in range(n))
        for i in range(n)
    )


def enumerate_group(sys: RootSystemData, limit: int = ENUMERATION_LIMIT) -> set[tuple[int, ...]]:
    expected = group_order(sys.type)
    if expected > limit:
        raise ScaleExceeded(f"|W({sys.type})| = {expected} exceeds the enumeration limit {limit}")
    seen = {sys.identity}
    frontier = [sys.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in sys.simple_reflection_action:
                h = tuple(s[x] for x in g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def coxeter_conjugacy_check(t: WeylType, limit: int = ENUMERATION_LIMIT) -> bool:
    """Brute force: are all rank! Coxeter elements conjugate in W?"""
    sys = build_root_system(t)
    group = enumerate_group(sys, limit)
    base = sys.element(coxeter_element(t))
    cls = set()
    for g in group:
        ginv = [0] * len(g)
        for i, gi in enumerate(g):
            ginv[gi] = i
        # g c g^-1 as root permutations
        cls.add(tuple(g[base[ginv[i]]] for i in range(len(g))))
    return all(
        sys.element(coxeter_element(t, order)) in cls
        for order in permutations(range(1, t.rank + 1))
    )

"""Labels of the irreducible characters of each Weyl type.

Classical labels are partitions (type A), ordered bipartitions (type B) and
unordered bipartitions with a split tag when both halves agree (type D).
Exceptional labels are ``(degree, b-value)`` pairs with an optional prime
mark; they are opaque tokens matched against the embedded lists below.

Type-B orientation: the index character is ``(-, (n))`` and the sign
character is ``((1^n), -)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .weyl import WeylType

__all__ = [
    "Partition",
    "TypeA",
    "TypeB",
    "TypeD",
    "Exc",
    "CharLabel",
    "LabelError",
    "partition",
    "partitions",
    "transpose",
    "hook_decompose",
    "enumerate_labels",
    "label_count",
    "validate_label",
    "parse_label",
    "format_label",
    "EXCEPTIONAL_LABELS",
]

Partition = tuple[int, ...]


class LabelError(ValueError):
    """A label that is well formed but does not belong to the requested type."""


def partition(parts) -> Partition:
    """Normalise to a weakly decreasing tuple of positive integers."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_decompose(lam: Partition) -> int | None:
    """``k`` if ``lam == (k, 1, ..., 1)``, else None."""
    if not lam or any(p != 1 for p in lam[1:]):
        return None
    return lam[0]


@dataclass(frozen=True)
class TypeA:
    lam: Partition


@dataclass(frozen=True)
class TypeB:
    alpha: Partition
    beta: Partition


@dataclass(frozen=True)
class TypeD:
    alpha: Partition
    beta: Partition
    split: str = ""

    def __post_init__(self) -> None:
        a, b = self.alpha, self.beta
        if b < a:
            object.__setattr__(self, "alpha", b)
            object.__setattr__(self, "beta", a)
        if self.split not in ("", "+", "-"):
            raise ValueError(f"bad split tag {self.split!r}")
        if (self.split != "") != (a == b):
            raise ValueError("split tag is required exactly when alpha == beta")


@dataclass(frozen=True)
class Exc:
    d: int
    e: int
    prime: str = ""

    def __post_init__(self) -> None:
        if self.prime not in ("", "'", "''"):
            raise ValueError(f"bad prime mark {self.prime!r}")


CharLabel = Union[TypeA, TypeB, TypeD, Exc]


def _exc(text: str) -> tuple[Exc, ...]:
    out = []
    for tok in text.split():
        body = tok.rstrip("'")
        d, e = body.split(",")
        out.append(Exc(int(d), int(e), tok[len(body):]))
    return tuple(out)


EXCEPTIONAL_LABELS: dict[str, tuple[Exc, ...]] = {
    "G2": _exc("1,0 1,6 1,3' 1,3'' 2,1 2,2"),
    "F4": _exc(
        "1,0 1,12'' 1,12' 1,24 2,4'' 2,16' 2,4' 2,16'' 4,8 9,2 9,6'' 9,6' 9,10 "
        "6,6' 6,6'' 12,4 4,1 4,7'' 4,7' 4,13 8,3'' 8,9' 8,3' 8,9'' 16,5"
    ),
    "E6": _exc(
        "1,0 1,36 10,9 6,1 6,25 20,10 15,5 15,17 15,4 15,16 20,2 20,20 24,6 24,12 "
        "30,3 30,15 60,8 80,7 90,8 60,5 60,11 64,4 64,13 81,6 81,10"
    ),
    "E7": _exc(
        "1,0 1,63 7,46 7,1 15,28 15,7 21,6 21,33 21,36 21,3 27,2 27,37 35,22 35,13 "
        "35,31 35,4 56,30 56,3 70,18 70,9 84,12 84,15 105,26 105,5 105,6 105,21 "
        "105,12 105,15 120,4 120,25 168,6 168,21 189,10 189,17 189,22 189,5 189,20 "
        "189,7 210,6 210,21 210,10 210,13 216,16 216,9 280,18 280,9 280,8 280,17 "
        "315,16 315,7 336,14 336,11 378,14 378,9 405,8 405,15 420,10 420,13 "
        "512,12 512,11"
    ),
    "E8": _exc(
        "1,0 1,120 28,8 28,68 35,2 35,74 70,32 50,8 50,56 84,4 84,64 168,24 175,12 "
        "175,36 210,4 210,52 420,20 300,8 300,44 350,14 350,38 525,12 525,36 567,6 "
        "567,46 1134,20 700,16 700,28 700,6 700,42 1400,20 840,14 840,26 1680,22 "
        "972,12 972,32 1050,10 1050,34 2100,20 1344,8 1344,38 2688,20 1400,8 1400,32 "
        "1575,10 1575,34 3150,18 2100,16 2100,28 4200,18 2240,10 2240,28 4480,16 "
        "2268,10 2268,30 4536,18 2835,14 2835,22 5670,18 3200,16 3200,22 4096,12 "
        "4096,26 4200,12 4200,24 6075,14 6075,22 8,1 8,91 56,19 56,49 112,3 112,63 "
        "160,7 160,55 448,9 448,39 400,7 400,43 448,25 560,5 560,47 1344,19 840,13 "
        "840,31 1008,9 1008,39 2016,19 1296,13 1296,33 1400,11 1400,29 1400,7 "
        "1400,37 2400,17 2400,23 2800,13 2800,25 5600,19 3240,9 3240,31 3360,13 "
        "3360,25 7168,17 4096,11 4096,27 4200,15 4200,21 4536,13 4536,23 5600,15 "
        "5600,21"
    ),
}


def _bipartitions(n: int) -> Iterator[tuple[Partition, Partition]]:
    for size in range(n, -1, -1):
        for a in partitions(size):
            for b in partitions(n - size):
                yield a, b


@lru_cache(maxsize=None)
def enumerate_labels(t: WeylType) -> tuple[CharLabel, ...]:
    n = t.rank
    if t.family == "A":
        return tuple(TypeA(lam) for lam in partitions(n + 1))
    if t.family == "B":
        return tuple(TypeB(a, b) for a, b in _bipartitions(n))
    if t.family == "D":
        out: list[TypeD] = []
        seen = set()
        for a, b in _bipartitions(n):
            key = (min(a, b), max(a, b))
            if key in seen:
                continue
            seen.add(key)
            if a == b:
                out += [TypeD(a, b, "+"), TypeD(a, b, "-")]
            else:
                out.append(TypeD(a, b))
        return tuple(out)
    return EXCEPTIONAL_LABELS[str(t)]


def label_count(t: WeylType) -> int:
    return len(enumerate_labels(t))


def validate_label(t: WeylType, label: CharLabel) -> CharLabel:
    """Return ``label`` if it names a character of W(t), else raise LabelError."""
    n = t.rank
    f = t.family
    ok = False
    if f == "A" and isinstance(label, TypeA):
        ok = sum(label.lam) == n + 1
    elif f == "B" and isinstance(label, TypeB):
        ok = sum(label.alpha) + sum(label.beta) == n
    elif f == "D" and isinstance(label, TypeD):
        ok = sum(label.alpha) + sum(label.beta) == n
    elif isinstance(label, Exc) and not t.is_classical:
        ok = label in EXCEPTIONAL_LABELS[str(t)]
    if not ok:
        raise LabelError(f"{format_label(label)} is not a character label of {t}")
    return label


# -- string grammar --------------------------------------------------------

_PART = re.compile(r"-|\d+(,\d+)*")


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if not _PART.fullmatch(text):
        raise ValueError(f"bad partition {text!r}")
    if text == "-":
        return ()
    return partition(int(p) for p in text.split(","))


def _format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def parse_label(t: WeylType, text: str) -> CharLabel:
    """Parse a label string for type ``t`` (syntax only; see validate_label).

    Grammar: partitions ``4,1,1`` with ``-`` for the empty partition,
    bipartitions ``alpha|beta``, type-D split suffix ``+``/``-``, and
    exceptional labels ``d,e`` with an optional ``'`` or ``''``.
    """
    s = text.strip().replace("−", "-").replace("″", "''").replace("′", "'")
    if t.family == "A":
        return TypeA(_parse_partition(s))
    if t.family in "BD":
        split = ""
        if t.family == "D" and len(s) >= 2 and s[-1] in "+-" and s[-2].isdigit():
            split, s = s[-1], s[:-1]
        halves = s.split("|")
        if len(halves) != 2:
            raise ValueError(f"bipartition label needs exactly one '|': {text!r}")
        a, b = (_parse_partition(h) for h in halves)
        if t.family == "B":
            return TypeB(a, b)
        try:
            return TypeD(a, b, split)
        except ValueError as exc:
            raise LabelError(str(exc)) from exc
    m = re.fullmatch(r"\(?(\d+),(\d+)\)?('{0,2})", s)
    if m is None:
        raise ValueError(f"bad exceptional label {text!r}")
    return Exc(int(m[1]), int(m[2]), m[3])


def format_label(label: CharLabel) -> str:
    if isinstance(label, TypeA):
        return _format_partition(label.lam)
    if isinstance(label, TypeB):
        return f"{_format_partition(label.alpha)}|{_format_partition(label.beta)}"
    if isinstance(label, TypeD):
        return f"{_format_partition(label.alpha)}|{_format_partition(label.beta)}{label.split}"
    return f"{label.d},{label.e}{label.prime}"

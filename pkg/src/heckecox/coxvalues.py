"""Character values on T_w for w a Coxeter element.

Every value has the shape ``eps * v**vexp`` with ``eps`` in {-1, 0, 1}.
Classical types use closed formulas; exceptional types use embedded tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .labels import (
    CharLabel,
    EXCEPTIONAL_LABELS,
    Exc,
    TypeA,
    TypeB,
    TypeD,
    enumerate_labels,
    hook_decompose,
    validate_label,
)
from .laurent import LaurentHalf, lh_format, lh_parse
from .weyl import WeylType, coxeter_number

__all__ = [
    "CoxValue",
    "NoEigenvalueStratum",
    "cox_value",
    "cox_table",
    "exponent_table",
    "m_from_a",
    "epsilon_sum_check",
    "EXCEPTIONAL_VALUES",
]


@dataclass(frozen=True)
class CoxValue:
    epsilon: int
    vexp: int = 0

    def __post_init__(self) -> None:
        if self.epsilon not in (-1, 0, 1):
            raise ValueError(f"epsilon must be -1, 0 or 1, got {self.epsilon}")
        if self.epsilon == 0 and self.vexp != 0:
            object.__setattr__(self, "vexp", 0)
        if self.vexp < 0:
            raise ValueError("vexp must be non-negative")

    @classmethod
    def from_laurent(cls, p: LaurentHalf) -> CoxValue:
        if p.is_zero():
            return cls(0)
        if not p.is_monomial():
            raise ValueError(f"{p} is not a signed power of v")
        (e, c), = p.terms()
        return cls(c, e)

    def to_laurent(self) -> LaurentHalf:
        return LaurentHalf.monomial(self.epsilon, self.vexp)

    def __str__(self) -> str:
        return lh_format(self.to_laurent())


ZERO = CoxValue(0)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _u(eps: int, k: int) -> CoxValue:
    """``eps * u**k``."""
    return CoxValue(eps, 2 * k)


def _value_a(n: int, lam) -> CoxValue:
    k = hook_decompose(lam)
    if k is None:
        return ZERO
    return _u(_sign(n + 1 + k), k - 1)


def _value_b(n: int, alpha, beta) -> CoxValue:
    if not beta:
        k = hook_decompose(alpha)
        if k is not None:
            return _u(_sign(n + k + 1), k - 1)
    elif not alpha:
        k = hook_decompose(beta)
        if k is not None:
            return _u(_sign(n + k), k)
    return ZERO


def _value_d(n: int, alpha, beta, split: str) -> CoxValue:
    if split:
        return ZERO
    if alpha == (1,):
        k = hook_decompose(beta)
        if k is not None and 1 <= k <= n - 1:
            return _u(_sign(n + k), k)
        return ZERO
    if alpha:
        return ZERO
    if beta == (1,) * n:
        return _u(_sign(n), 0)
    if beta == (n,):
        return _u(1, n)
    # beta = (k, 2, 1^(n-k-2)) with k >= 2
    if len(beta) >= 2 and beta[1] == 2 and all(p == 1 for p in beta[2:]):
        k = beta[0]
        if 2 <= k <= n - 2:
            return _u(_sign(n + k + 1), k)
    return ZERO


def _table(text: str) -> dict[Exc, CoxValue]:
    out = {}
    for entry in text.split(";"):
        entry = entry.strip()
        if not entry:
            continue
        lab, val = entry.split(":")
        body = lab.strip().rstrip("'")
        d, e = body.split(",")
        out[Exc(int(d), int(e), lab.strip()[len(body):])] = CoxValue.from_laurent(lh_parse(val))
    return out


# labels with non-zero value; every other exceptional label has value 0
EXCEPTIONAL_VALUES: dict[str, dict[Exc, CoxValue]] = {
    "G2": _table("1,0: u^2; 1,6: 1; 1,3': -u; 1,3'': -u; 2,1: u; 2,2: -u"),
    "F4": _table(
        "1,0: u^4; 1,12'': u^2; 1,12': u^2; 1,24: 1; 2,4'': -u^3; 2,16': -u;"
        "2,4': -u^3; 2,16'': -u; 4,8: u^2; 6,6': -u^2; 6,6'': -u^2; 12,4: u^2"
    ),
    "E6": _table(
        "1,0: u^6; 1,36: 1; 10,9: -u^3; 6,1: -u^5; 6,25: -u; 20,10: u^3;"
        "15,4: -u^4; 15,16: -u^2; 30,3: u^4; 30,15: u^2; 60,8: u^3; 90,8: -u^3"
    ),
    "E7": _table(
        "1,0: u^7; 1,63: -1; 7,46: u; 7,1: -u^6; 35,22: -u^3; 35,13: u^4;"
        "35,4: -u^5; 35,31: u^2; 56,30: -u^2; 56,3: u^5; 70,18: u^3; 70,9: -u^4;"
        "280,18: u^3; 280,9: -u^4; 280,8: u^4; 280,17: -u^3;"
        "512,12: -u^(7/2); 512,11: u^(7/2)"
    ),
    "E8": _table(
        "1,0: u^8; 1,120: 1; 70,32: -u^4; 84,4: -u^6; 84,64: -u^2; 420,20: -u^4;"
        "1134,20: u^4; 1680,22: u^4; 1344,8: u^5; 1344,38: u^3; 4480,16: u^4;"
        "4536,18: u^4; 5670,18: -u^4; 4096,12: -u^(9/2); 4096,26: -u^(7/2);"
        "8,1: -u^7; 8,91: -u; 56,19: u^5; 56,49: u^3; 112,3: u^6; 112,63: u^2;"
        "448,25: -u^4; 448,9: -u^5; 448,39: -u^3; 1008,9: -u^5; 1008,39: -u^3;"
        "2016,19: u^4; 7168,17: -u^4; 4096,11: u^(9/2); 4096,27: u^(7/2)"
    ),
}

for _name, _vals in EXCEPTIONAL_VALUES.items():
    _missing = set(_vals) - set(EXCEPTIONAL_LABELS[_name])
    assert not _missing, f"{_name}: table labels {_missing} not in label list"


def cox_value(t: WeylType, label: CharLabel) -> CoxValue:
    """Value of the character ``label`` on T_w, w a Coxeter element of W(t)."""
    validate_label(t, label)
    n = t.rank
    if isinstance(label, TypeA):
        return _value_a(n, label.lam)
    if isinstance(label, TypeB):
        return _value_b(n, label.alpha, label.beta)
    if isinstance(label, TypeD):
        return _value_d(n, label.alpha, label.beta, label.split)
    return EXCEPTIONAL_VALUES[str(t)].get(label, ZERO)


def cox_table(t: WeylType) -> list[tuple[CharLabel, CoxValue]]:
    return [(lab, cox_value(t, lab)) for lab in enumerate_labels(t)]


# (vexp, a) pairs: |eigenvalue| = (q^(1/2))^vexp carries a-value a
_EXPONENTS = {
    "G2": ((0, 6), (2, 1), (4, 0)),
    "F4": ((0, 24), (2, 13), (4, 4), (6, 1), (8, 0)),
    "E6": ((0, 36), (2, 25), (4, 15), (6, 7), (8, 3), (10, 1), (12, 0)),
    "E7": ((0, 63), (2, 46), (4, 30), (6, 16), (7, 11), (8, 7), (10, 3), (12, 1), (14, 0)),
    "E8": (
        (0, 120), (2, 91), (4, 63), (6, 37), (7, 26), (8, 16),
        (9, 11), (10, 7), (12, 3), (14, 1), (16, 0),
    ),
}


def exponent_table(t: WeylType) -> tuple[tuple[int, int], ...]:
    n = t.rank
    if t.family == "A":
        return tuple((2 * i, (n - i) * (n - i + 1) // 2) for i in range(n + 1))
    if t.family == "B":
        return tuple((2 * i, (n - i) ** 2) for i in range(n + 1))
    if t.family == "D":
        middle = tuple((2 * i, (n - i) * (n - i - 1) + 1) for i in range(1, n))
        return ((0, n * (n - 1)),) + middle + ((2 * n, 0),)
    return _EXPONENTS[str(t)]


class NoEigenvalueStratum(LookupError):
    pass


def m_from_a(t: WeylType, a: int) -> int:
    """The v-exponent whose eigenvalue stratum carries a-value ``a``."""
    for vexp, a_j in exponent_table(t):
        if a_j == a:
            return vexp
    raise NoEigenvalueStratum(f"no eigenvalue stratum of {t} has a-value {a}")


def epsilon_sum_check(t: WeylType) -> tuple[int, int, bool]:
    total = sum(v.epsilon**2 for _, v in cox_table(t))
    h = coxeter_number(t)
    return total, h, total == h

"""Minimal exact arithmetic in cyclotomic fields Q(zeta_N).

Enough for character values of small fixture groups: ring operations,
complex conjugation and exact equality. Values are written GAP-style,
``E(n)`` being exp(2 pi i / n).
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from math import gcd

from .laurent import cyclotomic_poly

__all__ = ["Cyclotomic", "E", "parse_cyclotomic"]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _reduce(n: int, coeffs: dict[int, Fraction]) -> tuple[Fraction, ...]:
    """Remainder modulo Phi_n of sum c_k zeta^k, as a dense tuple."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    dense = [Fraction(0)] * max(n, 1)
    for k, c in coeffs.items():
        dense[k % n] += c
    for top in range(len(dense) - 1, deg - 1, -1):
        c = dense[top]
        if c:
            shift = top - deg
            for i, p in enumerate(phi):
                dense[i + shift] -= c * p
    return tuple(dense[:deg])


class Cyclotomic:
    __slots__ = ("n", "coeffs")
    __hash__ = None  # equality spans different conductors

    def __init__(self, n: int, coeffs: dict[int, Fraction] | None = None):
        self.n = n
        self.coeffs = _reduce(n, {k: Fraction(c) for k, c in (coeffs or {}).items()})

    @classmethod
    def coerce(cls, x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(1, {0: Fraction(x)})
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    def _lift(self, m: int) -> dict[int, Fraction]:
        step = m // self.n
        return {k * step: c for k, c in enumerate(self.coeffs) if c}

    def _binop(self, other, combine) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        m = _lcm(self.n, other.n)
        return combine(m, self._lift(m), other._lift(m))

    def __add__(self, other) -> Cyclotomic:
        def combine(m, a, b):
            out = dict(a)
            for k, c in b.items():
                out[k] = out.get(k, 0) + c
            return Cyclotomic(m, out)

        return self._binop(other, combine)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.n, {k: -c for k, c in enumerate(self.coeffs)})

    def __sub__(self, other) -> Cyclotomic:
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other) -> Cyclotomic:
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other) -> Cyclotomic:
        def combine(m, a, b):
            out: dict[int, Fraction] = {}
            for k1, c1 in a.items():
                for k2, c2 in b.items():
                    out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
            return Cyclotomic(m, out)

        return self._binop(other, combine)

    __rmul__ = __mul__

    def conjugate(self) -> Cyclotomic:
        return Cyclotomic(self.n, {-k: c for k, c in enumerate(self.coeffs)})

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum((float(c) * z**k for k, c in enumerate(self.coeffs)), 0j)

    def __eq__(self, other) -> bool:
        try:
            diff = self - Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return diff.is_zero()

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.as_fraction())
        for k in range(1, self.n):
            for sign in (1, -1):
                if self == E(self.n, k) * sign:
                    return ("-" if sign < 0 else "") + f"E({self.n})" + (f"^{k}" if k > 1 else "")
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                root = f"E({self.n})" + (f"^{k}" if k > 1 else "")
                body = root if abs(c) == 1 else f"{abs(c)}*{root}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += sign + body
        return text


def E(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic(n, {k: Fraction(1)})


_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*?E\((\d+)\)(?:\^(\d+))?)?")


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Parse ``1/2``, ``-E(3)^2``, ``-1-E(4)`` and similar sums."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty value")
    total = Cyclotomic.coerce(0)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m[2] is None and m[3] is None):
            raise ValueError(f"cannot parse cyclotomic value {text!r}")
        if m[3] is not None and m[3].startswith("*") and m[2] is None:
            raise ValueError(f"cannot parse cyclotomic value {text!r}")
        coef = Fraction(m[2]) if m[2] is not None else Fraction(1)
        if m[1] == "-":
            coef = -coef
        term = Cyclotomic.coerce(coef)
        if m[4] is not None:
            term = term * E(int(m[4]), int(m[5]) if m[5] else 1)
        total = total + term
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse cyclotomic value {text!r}")
    return total

"""Exact arithmetic in Z[v, 1/v] with v = u^(1/2), and its fraction field.

Exponents are always stored in units of v, so half-integral powers of u
(the E7/E8 values ``u^(7/2)``, ``u^(9/2)``) are plain integers here.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentHalf",
    "RatFun",
    "V",
    "U",
    "lh_arith",
    "lh_specialize",
    "lh_format",
    "lh_parse",
    "rf_arith",
    "cyclotomic_poly",
    "divisible_by_cyclotomic",
]

Scalar = Union[int, Fraction]


class LaurentHalf:
    """Integer Laurent polynomial in ``v``; immutable and hashable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(c, int) or not isinstance(e, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = hash(self._terms)

    @classmethod
    def monomial(cls, coeff: int, vexp: int) -> LaurentHalf:
        return cls({vexp: coeff})

    @classmethod
    def const(cls, c: int) -> LaurentHalf:
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> LaurentHalf:
        if isinstance(x, LaurentHalf):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentHalf")

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return self._terms[0][0]

    def leading_coefficient(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def content(self) -> int:
        g = 0
        for _, c in self._terms:
            g = gcd(g, c)
        return g

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> LaurentHalf:
        try:
            other = LaurentHalf.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentHalf(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentHalf:
        return LaurentHalf((e, -c) for e, c in self._terms)

    def __sub__(self, other) -> LaurentHalf:
        try:
            other = LaurentHalf.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentHalf:
        return LaurentHalf.coerce(other) - self

    def __mul__(self, other) -> LaurentHalf:
        try:
            other = LaurentHalf.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentHalf(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentHalf:
        if k < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, c), = self._terms
            return LaurentHalf({e * k: c ** (-k)})
        result = LaurentHalf.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentHalf:
        """Multiply by ``v**k``."""
        return LaurentHalf((e + k, c) for e, c in self._terms)

    def scale_down(self, c: int) -> LaurentHalf:
        """Exact division of every coefficient by the integer ``c``."""
        out = []
        for e, a in self._terms:
            q, r = divmod(a, c)
            if r:
                raise ArithmeticError(f"{c} does not divide {self}")
            out.append((e, q))
        return LaurentHalf(out)

    def specialize(self, val: Scalar) -> Fraction:
        """Substitute ``v := val`` exactly."""
        val = Fraction(val)
        if val == 0:
            raise ZeroDivisionError("cannot specialize v at 0")
        return sum((c * val**e for e, c in self._terms), Fraction(0))

    # -- comparison / display --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentHalf.const(other)
        if not isinstance(other, LaurentHalf):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentHalf({dict(self._terms)!r})"

    def __str__(self) -> str:
        return lh_format(self)


V = LaurentHalf({1: 1})
U = LaurentHalf({2: 1})


def _u_power(vexp: int) -> str:
    if vexp == 2:
        return "u"
    if vexp % 2 == 0:
        return f"u^{vexp // 2}"
    return f"u^({vexp}/2)"


def lh_format(p: LaurentHalf) -> str:
    """Render in powers of ``u``: ``v^4 -> "u^2"``, ``-v^7 -> "-u^(7/2)"``."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (e, c) in enumerate(reversed(p.terms())):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            body = (str(mag) if mag != 1 else "") + _u_power(e)
        if i == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_TERM = re.compile(
    r"""^(?P<coef>\d+)?
        (?:(?P<u>u)
           (?:\^(?:\((?P<half>-?\d+)/2\)|(?P<whole>-?\d+)))?
        )?$""",
    re.VERBOSE,
)


def lh_parse(text: str) -> LaurentHalf:
    """Inverse of :func:`lh_format`."""
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty polynomial string")
    tokens = re.split(r"\s+([+-])\s+", s)
    first = tokens[0]
    sign = 1
    if first.startswith("-"):
        sign, first = -1, first[1:]
    parts = [(sign, first)]
    for i in range(1, len(tokens), 2):
        parts.append((1 if tokens[i] == "+" else -1, tokens[i + 1]))
    acc: dict[int, int] = {}
    for sgn, body in parts:
        m = _TERM.match(body)
        if m is None or (m["coef"] is None and m["u"] is None):
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        coef = int(m["coef"]) if m["coef"] is not None else 1
        if m["u"] is None:
            e = 0
        elif m["half"] is not None:
            e = int(m["half"])
        elif m["whole"] is not None:
            e = 2 * int(m["whole"])
        else:
            e = 2
        acc[e] = acc.get(e, 0) + sgn * coef
    return LaurentHalf(acc)


def lh_arith(a: LaurentHalf, b: LaurentHalf, op: str) -> LaurentHalf:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def lh_specialize(p: LaurentHalf, val: Scalar) -> Fraction:
    return p.specialize(val)


# -- polynomial gcd over Z, used to keep RatFun reduced ------------------


def _to_dense(p: LaurentHalf) -> list[int]:
    """Coefficients low-to-high of ``p / v**valuation(p)``."""
    lo = p.valuation()
    out = [0] * (p.degree() - lo + 1)
    for e, c in p.terms():
        out[e - lo] = c
    return out


def _from_dense(coeffs: list[int], shift: int = 0) -> LaurentHalf:
    return LaurentHalf((i + shift, c) for i, c in enumerate(coeffs) if c)


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: list[int]) -> list[int]:
    g = 0
    for c in p:
        g = gcd(g, c)
    if g == 0:
        return p
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _prem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    lb, db = b[-1], len(b) - 1
    while len(a) - 1 >= db and a:
        la, shift = a[-1], len(a) - 1 - db
        a = [lb * c for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        _trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two nonzero integer polynomials (positive lead)."""
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else r)
    return _primitive(a)


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c, r = divmod(a[shift + len(b) - 1], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = c
        if c:
            for i, bc in enumerate(b):
                a[i + shift] -= c * bc
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


class RatFun:
    """Element of the fraction field of Z[v, 1/v], kept in lowest terms.

    Canonical form: the denominator is an ordinary polynomial with nonzero
    constant term and positive leading coefficient, and numerator and
    denominator share no nonunit common factor.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _reduced: bool = False):
        num = LaurentHalf.coerce(num)
        den = LaurentHalf.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFun with zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num: LaurentHalf, den: LaurentHalf) -> tuple[LaurentHalf, LaurentHalf]:
        if num.is_zero():
            return num, LaurentHalf.const(1)
        shift = den.valuation()
        num, den = num.shift(-shift), den.shift(-shift)
        if den.is_monomial():
            c = den.leading_coefficient()
            g = gcd(num.content(), c)
            if c < 0:
                g = -g
            return num.scale_down(g), LaurentHalf.const(c // g)
        nval = num.valuation()
        n_dense, d_dense = _to_dense(num), _to_dense(den)
        g = _poly_gcd(n_dense, d_dense)
        if len(g) > 1:
            n_dense, d_dense = _exact_div(n_dense, g), _exact_div(d_dense, g)
        c = 0
        for x in n_dense + d_dense:
            c = gcd(c, x)
        if d_dense[-1] < 0:
            c = -c
        n_dense = [x // c for x in n_dense]
        d_dense = [x // c for x in d_dense]
        return _from_dense(n_dense, nval), _from_dense(d_dense)

    @classmethod
    def coerce(cls, x) -> RatFun:
        if isinstance(x, RatFun):
            return x
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> LaurentHalf:
        if not self.is_laurent():
            raise ArithmeticError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other) -> RatFun:
        try:
            other = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> RatFun:
        try:
            other = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFun:
        return RatFun.coerce(other) - self

    def __mul__(self, other) -> RatFun:
        try:
            other = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatFun(0)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> RatFun:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFun(self.den, self.num)

    def __truediv__(self, other) -> RatFun:
        return self * RatFun.coerce(other).inv()

    def __rtruediv__(self, other) -> RatFun:
        return RatFun.coerce(other) * self.inv()

    def specialize(self, val: Scalar) -> Fraction:
        d = self.den.specialize(val)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at v = {val}")
        return self.num.specialize(val) / d

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentHalf)):
            other = RatFun.coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_laurent():
            return lh_format(self.num)
        return f"({lh_format(self.num)})/({lh_format(self.den)})"


def rf_arith(a: RatFun, b: RatFun | None, op: str) -> RatFun:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _exact_div(p, list(cyclotomic_poly(d)))
    return tuple(p)


def divisible_by_cyclotomic(degree: LaurentHalf, h: int) -> bool:
    """Whether Phi_h(u) divides ``degree``, read as a polynomial in ``u = v^2``.

    Used to decide membership in R_w^1 from a caller-supplied unipotent
    degree: the character is a constituent iff Phi_h(q) does not divide it.
    """
    if degree.is_zero():
        return True
    if any(e % 2 for e, _ in degree.terms()):
        raise ValueError("degree must be a polynomial in u (even v-exponents)")
    lo = degree.valuation() // 2
    dense = [0] * (degree.degree() // 2 - lo + 1)
    for e, c in degree.terms():
        dense[e // 2 - lo] = c
    phi = list(cyclotomic_poly(h))
    return not _prem(dense, phi)

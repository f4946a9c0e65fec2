"""Explicit Hecke algebra representations used as an independent oracle.

Type A uses the seminormal form on standard tableaux; type B uses the
extension of a type-A_{n-1} representation by a scalar ``T_t`` (``u`` or
``-1``). Every constructed representation is checked against the quadratic
and braid relations before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .coxvalues import CoxValue, cox_value
from .labels import CharLabel, Partition, TypeA, TypeB, format_label, partitions
from .laurent import LaurentHalf, RatFun, U
from .weyl import ScaleExceeded, WeylType, coxeter_matrix, coxeter_number

__all__ = [
    "SparseMatrix",
    "HeckeRep",
    "RelationError",
    "standard_tableaux",
    "seminormal_rep",
    "trace_word",
    "bn_extend",
    "OracleRow",
    "OracleReport",
    "oracle_compare",
]

ORACLE_MAX_RANK = 5


class RelationError(AssertionError):
    """A constructed representation violates a defining relation."""


class SparseMatrix:
    """Square matrix stored as one ``{column: entry}`` dict per row."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: Sequence[dict] | None = None):
        self.dim = dim
        if rows is None:
            rows = [{} for _ in range(dim)]
        self.rows = tuple({c: x for c, x in r.items() if not _is_zero(x)} for r in rows)

    @classmethod
    def identity(cls, dim: int, scalar=1) -> SparseMatrix:
        return cls(dim, [{i: RatFun.coerce(scalar)} for i in range(dim)])

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        out = []
        for row in self.rows:
            acc: dict = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    acc[j] = acc[j] + a * b if j in acc else a * b
            out.append(acc)
        return SparseMatrix(self.dim, out)

    def __add__(self, other: SparseMatrix) -> SparseMatrix:
        out = []
        for r1, r2 in zip(self.rows, other.rows):
            acc = dict(r1)
            for j, b in r2.items():
                acc[j] = acc[j] + b if j in acc else b
            out.append(acc)
        return SparseMatrix(self.dim, out)

    def scale(self, c) -> SparseMatrix:
        return SparseMatrix(self.dim, [{j: c * x for j, x in r.items()} for r in self.rows])

    def map(self, fn) -> SparseMatrix:
        return SparseMatrix(self.dim, [{j: fn(x) for j, x in r.items()} for r in self.rows])

    def trace(self):
        total = RatFun(0)
        for i, row in enumerate(self.rows):
            if i in row:
                total = total + row[i]
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix) or other.dim != self.dim:
            return NotImplemented
        return all(r1.keys() == r2.keys() and all(r1[k] == r2[k] for k in r1)
                   for r1, r2 in zip(self.rows, other.rows))

    __hash__ = None

    def dense(self) -> list[list]:
        return [[r.get(j, 0) for j in range(self.dim)] for r in self.rows]


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, RatFun) else x == 0


def _alternating(a: SparseMatrix, b: SparseMatrix, length: int) -> SparseMatrix:
    out = a
    for k in range(1, length):
        out = out @ (b if k % 2 else a)
    return out


def _check_relations(gens, coxeter, u, where: str) -> None:
    dim = gens[0].dim if gens else 0
    one = SparseMatrix.identity(dim)
    for i, g in enumerate(gens):
        if g @ g != one.scale(u) + g.scale(u - 1):
            raise RelationError(f"{where}: quadratic relation fails for generator {i + 1}")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            m = coxeter[i][j]
            if _alternating(gens[i], gens[j], m) != _alternating(gens[j], gens[i], m):
                raise RelationError(f"{where}: braid relation of order {m} fails for ({i + 1}, {j + 1})")


@dataclass(frozen=True, eq=False)
class HeckeRep:
    rank: int
    dim: int
    gens: tuple[SparseMatrix, ...]
    coxeter: tuple[tuple[int, ...], ...] = field(repr=False)
    name: str = ""

    def verify(self) -> None:
        """Check the defining relations over Q(v) and, at v = 1, over Q."""
        _check_relations(self.gens, self.coxeter, RatFun(U), self.name)
        at_one = [g.map(lambda x: RatFun.coerce(x.specialize(1))) for g in self.gens]
        _check_relations(at_one, self.coxeter, RatFun(1), f"{self.name} at v=1")

    def specialize(self, val) -> list[list[list[Fraction]]]:
        return [[[RatFun.coerce(x).specialize(val) if x != 0 else Fraction(0) for x in r]
                 for r in g.dense()] for g in self.gens]


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Standard tableaux of shape ``lam``; entry k-1 of each is the cell of k."""
    total = sum(lam)
    if total == 0:
        return ((),)
    out = []
    for r, length in enumerate(lam):
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if length > below:  # removable corner holds the largest entry
            smaller = list(lam)
            smaller[r] -= 1
            smaller = tuple(p for p in smaller if p)
            for t in standard_tableaux(smaller):
                out.append(t + ((r, length - 1),))
    return tuple(sorted(out))


def _diag(rho: int) -> RatFun:
    """Eigen-coordinate of T_i on a tableau with axial distance ``rho``."""
    u = RatFun(U)
    return (u - 1) / (1 - RatFun(LaurentHalf.monomial(1, -2 * rho)))


@lru_cache(maxsize=None)
def seminormal_rep(lam: Partition, n: int) -> HeckeRep:
    """Seminormal representation of H(A_n) for a partition of n+1."""
    if sum(lam) != n + 1:
        raise ValueError(f"{lam} is not a partition of {n + 1}")
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    dim = len(tabs)
    u = RatFun(U)
    gens = []
    for i in range(1, n + 1):
        rows: list[dict] = [{} for _ in range(dim)]
        for t in tabs:
            col = index[t]
            (r1, c1), (r2, c2) = t[i - 1], t[i]
            if r1 == r2:
                rows[col][col] = u
                continue
            if c1 == c2:
                rows[col][col] = RatFun(-1)
                continue
            rho = (c2 - r2) - (c1 - r1)
            swapped = list(t)
            swapped[i - 1], swapped[i] = t[i], t[i - 1]
            other = index[tuple(swapped)]
            a, a_other = _diag(rho), _diag(-rho)
            rows[col][col] = a
            # T_i v_t = a v_t + (off-diagonal) v_{s_i t}
            rows[other][col] = RatFun(1) if r1 < r2 else a * a_other + u
        gens.append(SparseMatrix(dim, rows))
    rep = HeckeRep(n, dim, tuple(gens), coxeter_matrix(WeylType("A", n)), f"seminormal{lam}")
    rep.verify()
    return rep


def trace_word(rep: HeckeRep, word: Sequence[int]) -> LaurentHalf:
    """Trace of T_{w1} ... T_{wk}; must be a Laurent polynomial."""
    prod = SparseMatrix.identity(rep.dim)
    for letter in word:
        if not 1 <= letter <= rep.rank:
            raise ValueError(f"generator {letter} out of range for rank {rep.rank}")
        prod = prod @ rep.gens[letter - 1]
    tr = prod.trace()
    if not tr.is_laurent():
        raise ArithmeticError(f"trace {tr} of {rep.name} did not clear its denominator")
    return tr.to_laurent()


def bn_extend(rep_a: HeckeRep, t_scalar) -> HeckeRep:
    """Extend a representation of H(A_{n-1}) to H(B_n) with T_t scalar.

    The new generator is appended last (Bourbaki alpha_n), adjacent to the
    last generator of the type-A chain.
    """
    if isinstance(t_scalar, str):
        t_scalar = {"u": U, "-1": LaurentHalf.const(-1)}[t_scalar]
    scalar = RatFun.coerce(LaurentHalf.coerce(t_scalar))
    if scalar not in (RatFun(U), RatFun(-1)):
        raise ValueError("T_t must act as u or -1")
    n = rep_a.rank + 1
    gens = rep_a.gens + (SparseMatrix.identity(rep_a.dim, scalar),)
    tag = "u" if scalar == RatFun(U) else "-1"
    rep = HeckeRep(n, rep_a.dim, gens, coxeter_matrix(WeylType("B", n)), f"{rep_a.name}+t:{tag}")
    rep.verify()
    return rep


@dataclass(frozen=True)
class OracleRow:
    label: CharLabel
    oracle: LaurentHalf
    closed_form: CoxValue

    @property
    def equal(self) -> bool:
        return self.oracle == self.closed_form.to_laurent()


@dataclass(frozen=True)
class OracleReport:
    type: WeylType
    rows: tuple[OracleRow, ...]
    epsilon_sum: int
    coxeter_number: int

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.rows) and self.epsilon_sum == self.coxeter_number

    def checks(self) -> list[tuple[bool, str]]:
        out = [
            (r.equal, f"{self.type} {format_label(r.label)}: oracle={r.oracle} closed={r.closed_form}")
            for r in self.rows
        ]
        out.append((
            self.epsilon_sum == self.coxeter_number,
            f"{self.type} sum eps^2 over covered labels = {self.epsilon_sum}, h = {self.coxeter_number}",
        ))
        return out

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'} {msg}" for ok, msg in self.checks()]


def oracle_compare(t: WeylType) -> OracleReport:
    """Compare representation traces with the closed forms on a Coxeter word.

    Type A covers every partition; type B covers the labels (alpha, -) and
    (-, alpha). The remaining type-B labels are forced to zero because the
    covered squares already sum to h.
    """
    if t.family not in "AB" or t.rank > ORACLE_MAX_RANK:
        raise ScaleExceeded(f"oracle covers A and B up to rank {ORACLE_MAX_RANK}, not {t}")
    n = t.rank
    word = tuple(range(1, n + 1))
    rows = []
    if t.family == "A":
        for lam in partitions(n + 1):
            rows.append(OracleRow(TypeA(lam), trace_word(seminormal_rep(lam, n), word), cox_value(t, TypeA(lam))))
    else:
        for alpha in partitions(n):
            base = seminormal_rep(alpha, n - 1)
            for label, scalar in ((TypeB((), alpha), "u"), (TypeB(alpha, ()), "-1")):
                tr = trace_word(bn_extend(base, scalar), word)
                rows.append(OracleRow(label, tr, cox_value(t, label)))
    eps_sum = sum(int(r.oracle.specialize(1)) ** 2 for r in rows)
    return OracleReport(t, tuple(rows), eps_sum, coxeter_number(t))

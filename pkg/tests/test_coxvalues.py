from collections import Counter

import pytest

from heckecox.coxvalues import (
    EXCEPTIONAL_VALUES,
    CoxValue,
    NoEigenvalueStratum,
    cox_table,
    cox_value,
    epsilon_sum_check,
    exponent_table,
    m_from_a,
)
from heckecox.labels import Exc, TypeA, TypeB, TypeD, enumerate_labels, parse_label, partitions
from heckecox.laurent import LaurentHalf
from heckecox.weyl import WeylType, coxeter_number, parse_type

CLASSICAL = (
    [WeylType("A", n) for n in range(1, 13)]
    + [WeylType("B", n) for n in range(2, 13)]
    + [WeylType("D", n) for n in range(4, 13)]
)
EXCEPTIONAL = [parse_type(s) for s in EXCEPTIONAL_VALUES]


def _value(spec: str, text: str) -> str:
    t = parse_type(spec)
    return str(cox_value(t, parse_label(t, text)))


@pytest.mark.parametrize(
    "spec, label, expected",
    [
        ("A3", "4", "u^3"),
        ("A3", "1,1,1,1", "-1"),
        ("A3", "2,1,1", "u"),
        ("A3", "3,1", "-u^2"),
        ("A3", "2,2", "0"),
        ("B4", "-|4", "u^4"),
        ("B4", "1,1,1,1|-", "1"),
        ("B4", "-|1,1,2", "u^2"),
        ("B4", "2,1,1|-", "-u"),
        ("B2", "1|1", "0"),
        ("D4", "-|4", "u^4"),
        ("D4", "-|1,1,1,1", "1"),
        ("D4", "1|3", "-u^3"),
        ("D4", "1|1,1,1", "-u"),
        ("D4", "-|2,2", "-u^2"),
        ("D4", "1,1|1,1+", "0"),
        ("D5", "-|2,2,1", "u^2"),
        ("D5", "-|3,2", "-u^3"),
        ("G2", "1,3'", "-u"),
        ("E7", "512,12", "-u^(7/2)"),
        ("E8", "4096,12", "-u^(9/2)"),
        ("E8", "4096,11", "u^(9/2)"),
        ("E8", "7168,17", "-u^4"),
        ("E8", "35,2", "0"),
    ],
)
def test_values(spec, label, expected):
    assert _value(spec, label) == expected


def _mn_sign_on_full_cycle(lam) -> int:
    """Murnaghan-Nakayama: chi^lam on an (n+1)-cycle is (-1)^leg for a hook, else 0."""
    n1 = sum(lam)
    # a single rim hook of size n1 exists iff lam is a hook
    if lam[0] + len(lam) - 1 != n1:
        return 0
    return (-1) ** (len(lam) - 1)


def _a_value_type_a(lam) -> int:
    return sum(i * p for i, p in enumerate(lam))


@pytest.mark.parametrize("n", range(1, 11))
def test_type_a_against_symmetric_group_and_a_values(n):
    t = WeylType("A", n)
    for lam in partitions(n + 1):
        v = cox_value(t, TypeA(lam))
        assert v.epsilon == _mn_sign_on_full_cycle(lam)
        if v.epsilon:
            assert v.vexp == m_from_a(t, _a_value_type_a(lam))


def test_type_b_index_and_sign_anchors():
    for n in range(2, 13):
        t = WeylType("B", n)
        assert cox_value(t, TypeB((), (n,))) == CoxValue(1, 2 * n)
        assert cox_value(t, TypeB((1,) * n, ())) == CoxValue((-1) ** n, 0)


@pytest.mark.parametrize("t", CLASSICAL + EXCEPTIONAL, ids=str)
def test_orthogonality(t):
    total, h, ok = epsilon_sum_check(t)
    assert ok and total == h == coxeter_number(t)


@pytest.mark.parametrize("t", CLASSICAL + EXCEPTIONAL, ids=str)
def test_sign_twist_symmetry(t):
    # tensoring with the sign character acts on nonzero values as
    # (eps, m) -> ((-1)^n eps, 2n - m)
    n = t.rank
    nonzero = Counter((v.epsilon, v.vexp) for _, v in cox_table(t) if v.epsilon)
    twisted = Counter(((-1) ** n * e, 2 * n - m) for e, m in nonzero.elements())
    assert twisted == nonzero


@pytest.mark.parametrize("t", CLASSICAL + EXCEPTIONAL, ids=str)
def test_values_are_signed_monomials_in_strata(t):
    strata = {m for m, _ in exponent_table(t)}
    for _, v in cox_table(t):
        p = v.to_laurent()
        assert p.is_zero() or p.is_monomial()
        if v.epsilon:
            assert v.vexp in strata
            assert CoxValue.from_laurent(p) == v


@pytest.mark.parametrize("t", CLASSICAL + EXCEPTIONAL, ids=str)
def test_exponent_table_shape(t):
    table = exponent_table(t)
    assert table[0][0] == 0 and table[-1] == (2 * t.rank, 0)
    vexps = [m for m, _ in table]
    avals = [a for _, a in table]
    assert vexps == sorted(vexps) and avals == sorted(avals, reverse=True)


@pytest.mark.parametrize(
    "spec, a, m",
    [("E8", 11, 9), ("E8", 0, 16), ("E7", 11, 7), ("B4", 4, 4), ("A3", 0, 6), ("D4", 12, 0), ("G2", 1, 2)],
)
def test_m_from_a(spec, a, m):
    assert m_from_a(parse_type(spec), a) == m


def test_m_from_a_missing_stratum():
    with pytest.raises(NoEigenvalueStratum):
        m_from_a(parse_type("E8"), 5)


def test_exceptional_tables_sizes():
    sizes = {k: sum(1 for v in tab.values() if v.epsilon) for k, tab in EXCEPTIONAL_VALUES.items()}
    assert sizes == {"G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30}


def test_split_labels_are_zero():
    for n in (4, 6, 8):
        t = WeylType("D", n)
        for lab in enumerate_labels(t):
            if lab.split:
                assert cox_value(t, lab).epsilon == 0


def test_coxvalue_validation():
    with pytest.raises(ValueError):
        CoxValue(2, 0)
    with pytest.raises(ValueError):
        CoxValue.from_laurent(LaurentHalf({0: 1, 2: 1}))
    assert CoxValue(0, 5) == CoxValue(0)
    assert str(CoxValue(-1, 7)) == "-u^(7/2)"


def test_rejects_wrong_type():
    with pytest.raises(ValueError):
        cox_value(parse_type("E6"), Exc(7, 1))
    with pytest.raises(ValueError):
        cox_value(WeylType("D", 4), TypeD((1,), (2,)))

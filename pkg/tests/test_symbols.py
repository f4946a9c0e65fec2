from fractions import Fraction

import pytest

from heckecox.coxvalues import cox_value
from heckecox.labels import TypeD
from heckecox.symbols import (
    FOURIER_MATRIX,
    Symbol,
    cohomology_degrees,
    d_epsilon_via_fourier,
    d_family_symbols,
    family_size,
    is_special,
    x1_symbol,
    z_set,
)
from heckecox.weyl import WeylType

PAIRS = [(n, k) for n in range(4, 13) for k in range(2, n - 1)]


def _symbol_of(alpha, beta, length) -> Symbol:
    """Standard symbol of a bipartition with both rows padded to ``length``."""
    def row(lam):
        padded = tuple(reversed(lam)) if len(lam) == length else (0,) * (length - len(lam)) + tuple(reversed(lam))
        return tuple(p + i for i, p in enumerate(padded))

    return Symbol(row(alpha), row(beta))


def test_example_n5_k2():
    fam = d_family_symbols(5, 2)
    assert [str(x) for x in fam.symbols] == [
        "(0,1,3;1,2,4)",
        "(0,1,2;1,3,4)",
        "(0,1,4;1,2,3)",
        "(0,1,2,3,4;1)",
    ]
    assert z_set(fam.symbols[0]) == {0, 2, 3, 4}
    assert family_size(fam.symbols[0]) == 4


@pytest.mark.parametrize("n, k", PAIRS)
def test_symbols_match_bipartitions(n, k):
    m = n - k
    x1, x2, x3, x4 = d_family_symbols(n, k).symbols
    assert x1 == _symbol_of((1,), (k,) + (1,) * (m - 1), m)
    assert x2 == _symbol_of((), (k, 2) + (1,) * (n - k - 2), m)
    assert x3 == _symbol_of((k,), (1,) * m, m)
    # X4 has defect 4, so it labels no character of W
    assert len(x4.top) - len(x4.bottom) == 4


@pytest.mark.parametrize("n, k", PAIRS)
def test_family_structure(n, k):
    syms = d_family_symbols(n, k).symbols
    assert len({frozenset(x.entries().items()) for x in syms}) == 1
    assert [is_special(x) for x in syms] == [True, False, False, False]
    assert all(z_set(x) == z_set(syms[0]) for x in syms)
    assert family_size(syms[0]) == 4


@pytest.mark.parametrize("n, k", PAIRS)
def test_fourier_epsilon_matches_closed_form(n, k):
    t = WeylType("D", n)
    assert d_epsilon_via_fourier(n, k, "X1") == cox_value(t, TypeD((1,), (k,) + (1,) * (n - k - 1))).epsilon
    assert d_epsilon_via_fourier(n, k, "X2") == cox_value(t, TypeD((), (k, 2) + (1,) * (n - k - 2))).epsilon
    i3, i4 = cohomology_degrees(n, k)
    assert i3 - i4 == 2


def test_fourier_matrix_is_involution():
    m = FOURIER_MATRIX
    for i in range(4):
        for j in range(4):
            assert sum(m[i][r] * m[r][j] for r in range(4)) == (1 if i == j else 0)
            assert m[i][j] == m[j][i] and abs(m[i][j]) == Fraction(1, 2)


def test_degenerate_x1():
    # k = 1 is the label ((1), (1^(n-1))), alone in its family
    x = x1_symbol(6, 1)
    assert x == _symbol_of((1,), (1,) * 5, 5)
    assert z_set(x) == {0, 4}
    assert family_size(x) == 1
    with pytest.raises(ValueError):
        family_size(Symbol((0, 2), (1, 3, 4)))


@pytest.mark.parametrize("n, k", [(3, 1), (4, 3), (6, 0)])
def test_range_errors(n, k):
    with pytest.raises(ValueError):
        d_family_symbols(n, k)
    with pytest.raises(ValueError):
        d_epsilon_via_fourier(n, k, "X1")


def test_symbol_validation():
    with pytest.raises(ValueError):
        Symbol((0, 0), (1,))
    assert not is_special(Symbol((0, 1), (1,)))

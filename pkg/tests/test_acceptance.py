"""Acceptance criteria, each checked at its stated tolerance and time budget.

Each test records one PASS/FAIL line, printed in the terminal summary.
"""

import csv
import io
import random
import re
import time
from contextlib import contextmanager
from itertools import permutations

import pytest

from conftest import ACCEPTANCE_LINES
from heckecox.cli import main
from heckecox.coxvalues import cox_value, epsilon_sum_check
from heckecox.fourier import fourier_matrix, load_fixture
from heckecox.heckerep import bn_extend, seminormal_rep, trace_word
from heckecox.labels import TypeA, TypeB, TypeD, enumerate_labels, partitions
from heckecox.laurent import LaurentHalf
from heckecox.symbols import d_epsilon_via_fourier
from heckecox.weyl import (
    WeylType,
    build_root_system,
    coxeter_conjugacy_check,
    coxeter_element,
    coxeter_number,
    element_order,
    parse_type,
)


@contextmanager
def criterion(number: int, title: str, budget: float):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < budget
        detail = f"{elapsed:.2f}s < {budget:g}s" if ok else f"{elapsed:.2f}s exceeds {budget:g}s"
        assert ok, f"criterion {number} over time budget: {detail}"
    except AssertionError as exc:
        if not detail:
            detail = str(exc).splitlines()[0]
        raise
    finally:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} [{number}] {title} ({detail})")


# Transcribed verbatim from the published exceptional tables (labels row, values row).
PUBLISHED = {
    "G2": [
        (r"(1,0)&(1,6)&(1,3)'& (1,3)''& (2,1)& (2,2)", r"u^2&1&-u&-u&u&-u"),
    ],
    "F4": [
        (r"(1,0)& (1,12)''&(1,12)'&(1,24)& (2,4)''&(2,16)'", r"u^4&u^2&u^2&1&-u^3&-u"),
        (r"(2,4)'&(2,16)''& (4,8)&(6,6)'&(6,6)''&(12,4)", r"-u^3&-u&u^2&-u^2&-u^2&u^2"),
    ],
    "E6": [
        (r"(1,0)&(1,36)&(10,9)& (6,1)&(6,25)&(20,10)", r"u^6&1&-u^3&-u^5&-u&u^3"),
        (r"(15,4)&(15,16)&(30,3)& (30,15)&(60,8)&(90,8)", r"-u^4&-u^2&u^4&u^2&u^3&-u^3"),
    ],
    "E7": [
        (r"(1,0)&(1,63)&(7,46)&(7,1)&(35,22)&(35,13)&(35,4)&(35,31)", r"u^7&-1&u&-u^6&-u^3&u^4&-u^5&u^2"),
        (r"(56,30)&(56,3)&(70,18)&(70,9)&(280,18)&(280,9)", r"-u^2&u^5&u^3&-u^4&u^3&-u^4"),
        (r"(280,8)&(280,17)&(512,12)&(512,11)", r"u^4&-u^3&-u^{7/2}&u^{7/2}"),
    ],
    "E8": [
        (r"(1,0)&(1,120)&(70,32)&(84,4)&(84,64)&(420,20)&(1134,20)", r"u^8&1&-u^4&-u^6&-u^2&-u^4&u^4"),
        (r"(1680,22)&(1344,8)&(1344,38)&(4480,16)&(4536,18)&(5670,18)", r"u^4&u^5&u^3&u^4&u^4&-u^4"),
        (r"(4096,12)&(4096,26)&(8,1)&(8,91)&(56,19)&(56,49)&(112,3)", r"-u^{9/2}&-u^{7/2}&-u^7&-u&u^5&u^3&u^6"),
        (r"(112,63)&(448,25)&(448,9)&(448,39)&(1008,9)&(1008,39)", r"u^2&-u^4&-u^5&-u^3&-u^5&-u^3"),
        (r"(2016,19)&(7168,17)&(4096,11)&(4096,27)", r"u^4&-u^4&u^{9/2}&u^{7/2}"),
    ],
}
PUBLISHED_SIZES = {"G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30}


def _normalize_published(spec: str) -> dict[str, str]:
    out = {}
    for labels, values in PUBLISHED[spec]:
        labs = [re.sub(r"[()\s]", "", x) for x in labels.split("&")]
        vals = [re.sub(r"\^\{(\d+/\d+)\}", r"^(\1)", x.strip()) for x in values.split("&")]
        assert len(labs) == len(vals)
        out.update(zip(labs, vals))
    return out


def _cli_table(capsys, spec: str) -> dict[str, str]:
    assert main(["table", spec, "--format", "csv", "--nonzero"]) == 0
    reader = csv.DictReader(io.StringIO(capsys.readouterr().out))
    assert reader.fieldnames == ["label", "epsilon", "vexp", "value"]
    return {row["label"]: row["value"] for row in reader}


def test_criterion_1_exceptional_tables(capsys):
    with criterion(1, "exceptional tables reproduce the published values", 1.0):
        for spec, size in PUBLISHED_SIZES.items():
            published = _normalize_published(spec)
            assert len(published) == size, spec
            assert _cli_table(capsys, spec) == published, spec


CLASSICAL_12 = (
    [WeylType("A", n) for n in range(1, 13)]
    + [WeylType("B", n) for n in range(2, 13)]
    + [WeylType("D", n) for n in range(4, 13)]
)
EXCEPTIONAL = [parse_type(s) for s in ("G2", "F4", "E6", "E7", "E8")]


def test_criterion_2_orthogonality():
    with criterion(2, "sum of eps^2 equals h, all types to rank 12", 1.0):
        for t in CLASSICAL_12 + EXCEPTIONAL:
            total, h, _ = epsilon_sum_check(t)
            assert total == h == coxeter_number(t), str(t)


def test_criterion_3_type_a_oracle():
    with criterion(3, "seminormal traces equal closed forms, A_n n <= 5", 30.0):
        count = 0
        for n in range(1, 6):
            t = WeylType("A", n)
            w = tuple(range(1, n + 1))
            for lam in partitions(n + 1):
                rep = seminormal_rep(lam, n)
                assert trace_word(rep, w) == cox_value(t, TypeA(lam)).to_laurent(), (n, lam)
                count += 1
        # p(2) + ... + p(6); the largest dimension is 16, for (3,2,1)
        assert count == 28


def test_criterion_4_type_b_oracle():
    with criterion(4, "B_n extension traces equal closed forms, n <= 5", 30.0):
        for n in range(2, 6):
            t = WeylType("B", n)
            w = tuple(range(1, n + 1))
            for alpha in partitions(n):
                base = seminormal_rep(alpha, n - 1)
                assert trace_word(bn_extend(base, "u"), w) == cox_value(t, TypeB((), alpha)).to_laurent()
                assert trace_word(bn_extend(base, "-1"), w) == cox_value(t, TypeB(alpha, ())).to_laurent()
            assert cox_value(t, TypeB((), (n,))).to_laurent() == LaurentHalf.monomial(1, 2 * n)
            assert cox_value(t, TypeB((1,) * n, ())).to_laurent() == LaurentHalf.const((-1) ** n)


def test_criterion_5_conjugacy_invariance():
    with criterion(5, "Coxeter-word trace independent of ordering, n <= 4", 60.0):
        for n in range(1, 5):
            for lam in partitions(n + 1):
                rep = seminormal_rep(lam, n)
                traces = {trace_word(rep, p) for p in permutations(range(1, n + 1))}
                assert len(traces) == 1, (n, lam)


def test_criterion_6_dfamily():
    with criterion(6, "Fourier signs agree with type-D closed forms, 4 <= n <= 10", 1.0):
        for n in range(4, 11):
            t = WeylType("D", n)
            for k in range(2, n - 1):
                x1 = TypeD((1,), (k,) + (1,) * (n - k - 1))
                x2 = TypeD((), (k, 2) + (1,) * (n - k - 2))
                assert d_epsilon_via_fourier(n, k, "X1") == cox_value(t, x1).epsilon == (-1) ** (n + k)
                assert d_epsilon_via_fourier(n, k, "X2") == cox_value(t, x2).epsilon == (-1) ** (n + k + 1)


def test_criterion_7_fourier_fixture():
    from fractions import Fraction

    h = Fraction(1, 2)
    printed = [[h, h, h, h], [h, h, -h, -h], [h, -h, h, -h], [h, -h, -h, h]]
    with criterion(7, "Z/2 Fourier matrix equals the printed one and squares to 1", 1.0):
        m = fourier_matrix(load_fixture("z2"))
        rat = [[x.as_fraction() for x in row] for row in m]
        assert rat == printed
        for i in range(4):
            for j in range(4):
                assert sum(rat[i][k] * rat[k][j] for k in range(4)) == (1 if i == j else 0)


def test_criterion_8_monomial_values():
    with criterion(8, "10,000 random values are zero or signed monomials", 5.0):
        types = CLASSICAL_12 + EXCEPTIONAL
        rng = random.Random(20261018)
        for _ in range(10_000):
            t = rng.choice(types)
            label = rng.choice(enumerate_labels(t))
            v = cox_value(t, label)
            assert v.epsilon in (-1, 0, 1)
            p = v.to_laurent()
            if v.epsilon:
                assert p.is_monomial() and len(p.terms()) == 1
            else:
                assert p.is_zero()


def test_criterion_9_coxeter_number():
    with criterion(9, "order of Coxeter elements is h; conjugacy for small types", 60.0):
        types = (
            [WeylType("A", n) for n in range(1, 9)]
            + [WeylType("B", n) for n in range(2, 9)]
            + [WeylType("D", n) for n in range(4, 9)]
            + EXCEPTIONAL
        )
        for t in types:
            sys = build_root_system(t)
            assert element_order(sys, coxeter_element(t)) == coxeter_number(t), str(t)
        small = [WeylType("A", n) for n in range(1, 5)] + [WeylType("B", n) for n in range(2, 5)]
        for t in small + [WeylType("D", 4), parse_type("G2")]:
            assert coxeter_conjugacy_check(t), str(t)

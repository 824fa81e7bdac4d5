from dataclasses import replace
from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from conftest import hbars, typed_tuples
from yangbraid.baxter import (
    audit,
    baxter_extremal,
    baxter_poly,
    extremal_factors,
    fundamental_poles,
    pole_set,
    pole_set_union,
    qcartan_inverse,
    verify_factorization,
)
from yangbraid.braid import ones
from yangbraid.cartan import all_types, cartan_data
from yangbraid.errors import NotReduced
from yangbraid.exact import ONE, GlobalParams, RootMultiset, TruncSeries

A = Fraction(3, 5)


def sympy_inverse_series(cd, order):
    """Inverse quantized Cartan matrix via sympy rational functions, then Taylor coefficients."""
    z = sympy.symbols("z")

    def qn(m, p):
        return (z ** (m * p) - z ** (-m * p)) / (z**p - z ** (-p))

    m = sympy.Matrix(cd.n, cd.n, lambda i, j: qn(cd.a[i][j], cd.d[i]))
    inv = m.inv()
    out = {}
    for i in range(cd.n):
        for j in range(cd.n):
            expr = sympy.cancel(inv[i, j])
            poly = sympy.series(expr, z, 0, order).removeO()
            out[(i, j)] = [Fraction(str(poly.coeff(z, k))) for k in range(order)]
    return out


@pytest.mark.parametrize("name", ["A1", "A3", "B2", "C3", "G2"])
def test_inverse_against_sympy(name):
    cd = cartan_data(name)
    qci = qcartan_inverse(cd)
    oracle = sympy_inverse_series(cd, qci.N)
    for (i, j), coeffs in oracle.items():
        assert [qci.coeff(i + 1, j + 1, r) for r in range(qci.N)] == coeffs


def test_v_coefficients_small():
    a1 = qcartan_inverse(cartan_data("A1"))
    assert a1.coeff(1, 1, 1) == 1
    assert list(a1.window(1)) == [1]
    a2 = qcartan_inverse(cartan_data("A2"))
    assert [a2.coeff(1, 1, 1), a2.coeff(1, 1, 2), a2.coeff(1, 2, 1), a2.coeff(1, 2, 2)] == [1, 0, 0, 1]


@pytest.mark.parametrize("t", list(all_types(8)), ids=str)
def test_audit(t):
    report = audit(qcartan_inverse(cartan_data(t)))
    assert report.valuation_ok and report.window_ok and report.inverse_ok, report.violations


@pytest.mark.parametrize("h", [Fraction(1), Fraction(-1, 2)])
def test_fundamental_poles_small(h):
    gp = GlobalParams(h)
    assert fundamental_poles(qcartan_inverse(cartan_data("A1")), gp, 1, 1) == {0}
    a2 = qcartan_inverse(cartan_data("A2"))
    assert fundamental_poles(a2, gp, 1, 1) == {0}
    assert fundamental_poles(a2, gp, 1, 2) == {h / 2}


def test_zeroed_coefficients_give_no_poles():
    qci = qcartan_inverse(cartan_data("B2"))
    zeroed = replace(qci, v=tuple(tuple(TruncSeries(s.order) for s in row) for row in qci.v))
    for i in (1, 2):
        for j in (1, 2):
            assert fundamental_poles(zeroed, GlobalParams(), i, j) == frozenset()


@pytest.mark.parametrize("h", [Fraction(1), Fraction(2), Fraction(-1, 2)])
def test_baxter_examples(h):
    gp = GlobalParams(h)
    a1, a2 = cartan_data("A1"), cartan_data("A2")
    q1, q2 = qcartan_inverse(a1), qcartan_inverse(a2)
    P = (RootMultiset({A: 1}),)
    assert baxter_poly(q1, gp, P, 1) == RootMultiset({A: 1})
    assert pole_set(q1, gp, P, 1) == {A}
    assert baxter_poly(q1, gp, ones(a1), 1) == ONE
    assert pole_set(q1, gp, ones(a1), 1) == frozenset()
    P2 = (RootMultiset({A: 1}), ONE)
    assert baxter_poly(q2, gp, P2, 1) == RootMultiset({A: 1})
    assert baxter_poly(q2, gp, P2, 2) == RootMultiset({A + h / 2: 1})
    assert baxter_extremal(a1, gp, P, (), 1) == ONE
    assert baxter_extremal(a1, gp, P, (1,), 1) == RootMultiset({A: 1})
    assert baxter_extremal(a2, gp, P2, (1, 2, 1), 1) == RootMultiset({A: 1})
    assert baxter_extremal(a2, gp, P2, (1, 2, 1), 2) == RootMultiset({A + h / 2: 1})
    assert verify_factorization(a1, gp, q1, P).ok
    assert verify_factorization(a2, gp, q2, P2).ok
    assert verify_factorization(a2, gp, q2, ones(a2)).ok


def test_extremal_requires_reduced_word():
    with pytest.raises(NotReduced):
        extremal_factors(cartan_data("A2"), GlobalParams(), (RootMultiset({0: 1}), ONE), (1, 1))


@given(typed_tuples(positive=True), hbars)
def test_factorization_and_pole_routes(cd_P, h):
    cd, P = cd_P
    gp = GlobalParams(h)
    qci = qcartan_inverse(cd)
    report = verify_factorization(cd, gp, qci, P)
    assert report.ok, report.mismatches
    for i in cd.nodes:
        assert pole_set(qci, gp, P, i) == pole_set_union(qci, gp, P, i)
        assert baxter_poly(qci, gp, P, i).is_polynomial()

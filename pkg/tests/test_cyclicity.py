from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import hbars, multisets, typed_tuples
from yangbraid.baxter import qcartan_inverse
from yangbraid.braid import ones
from yangbraid.cartan import cartan_data, longest_words
from yangbraid.cyclicity import condition_braid, condition_poles, verdict
from yangbraid.errors import NotLongestElement
from yangbraid.exact import ONE, GlobalParams, RootMultiset

A = Fraction(1, 3)
B_GRID = [A + Fraction(k, 2) for k in range(-6, 7)]


@pytest.mark.parametrize("h", [Fraction(1), Fraction(-1, 2)])
@pytest.mark.parametrize("b", B_GRID)
def test_a1_conditions(h, b):
    cd, gp = cartan_data("A1"), GlobalParams(h)
    qci = qcartan_inverse(cd)
    P, Q = (RootMultiset({A: 1}),), (RootMultiset({b: 1}),)
    expected = b != A + h
    assert condition_poles(cd, gp, qci, P, Q).holds == expected
    assert condition_braid(cd, gp, P, Q).holds == expected


@pytest.mark.parametrize("b", B_GRID)
def test_a2_condition(b):
    cd, gp = cartan_data("A2"), GlobalParams(1)
    qci = qcartan_inverse(cd)
    P, Q = (RootMultiset({A: 1}), ONE), (ONE, RootMultiset({b: 1}))
    assert condition_poles(cd, gp, qci, P, Q).holds == (b - 1 != A + Fraction(1, 2))


def test_trivial_inputs():
    for name in ("A1", "B2", "G2"):
        cd, gp = cartan_data(name), GlobalParams()
        qci = qcartan_inverse(cd)
        v = verdict(cd, gp, qci, ones(cd), ones(cd))
        assert v.cyclic_sufficient and v.irreducible_sufficient
        P = tuple(RootMultiset({0: 1}) for _ in cd.nodes)
        assert condition_poles(cd, gp, qci, P, ones(cd)).holds
        assert condition_braid(cd, gp, P, ones(cd)).holds


def test_sl2_pair_and_asymmetry():
    cd, gp = cartan_data("A1"), GlobalParams(1)
    qci = qcartan_inverse(cd)
    P = (RootMultiset({A: 1}),)
    Q = (RootMultiset({A + 1: 1}),)
    v = verdict(cd, gp, qci, P, Q)
    assert not v.cyclic_sufficient
    assert v.witnesses["poles"] == [{"node": 1, "roots": [A]}]
    assert v.witnesses["braid"] == [{"position": 1, "node": 1, "roots": [A]}]
    Q = (RootMultiset({A - 1: 1}),)
    v = verdict(cd, gp, qci, P, Q)
    assert v.condition_poles and v.cyclic_sufficient
    assert not v.irreducible_sufficient
    assert not verdict(cd, gp, qci, Q, P).cyclic_sufficient


def test_rejects_non_longest_word():
    cd = cartan_data("A2")
    with pytest.raises(NotLongestElement):
        condition_braid(cd, GlobalParams(), ones(cd), ones(cd), (1, 2))


@given(typed_tuples(positive=True), hbars, st.data())
def test_equivalence_and_word_independence(cd_P, h, data):
    cd, P = cd_P
    Q = tuple(data.draw(multisets(positive=True)) for _ in cd.nodes)
    gp = GlobalParams(h)
    qci = qcartan_inverse(cd)
    poles = condition_poles(cd, gp, qci, P, Q).holds
    for w in longest_words(cd):
        assert condition_braid(cd, gp, P, Q, w).holds == poles
    v = verdict(cd, gp, qci, P, Q)
    assert v.condition_poles == v.condition_braid == v.cyclic_sufficient
    assert not v.irreducible_sufficient or v.cyclic_sufficient


generic_roots = st.integers(10**6, 10**9).map(lambda k: Fraction(k, 7919))


@given(typed_tuples(positive=True), st.data())
def test_generic_roots_pass(cd_P, data):
    cd, _ = cd_P
    P = tuple(data.draw(multisets(roots=generic_roots, positive=True, max_size=2)) for _ in cd.nodes)
    Q = tuple(data.draw(multisets(roots=generic_roots, positive=True, max_size=2)) for _ in cd.nodes)
    roots = [a for f in P + Q for a in f.roots()]
    # every pole and shifted zero lies in root + (hbar/2)Z, so generic means no such coincidences
    assume(all((x - y) * 2 % 1 != 0 for k, x in enumerate(roots) for y in roots[k + 1 :]))
    gp = GlobalParams(1)
    v = verdict(cd, gp, qcartan_inverse(cd), P, Q)
    assert v.condition_poles and v.condition_braid and v.irreducible_sufficient

from fractions import Fraction

import pytest

from yangbraid.cartan import cartan_data
from yangbraid.errors import TruncationTooSmall
from yangbraid.exact import GlobalParams, TruncSeries
from yangbraid.hecke import build_model
from yangbraid.qloop import LoopEmbedding, _exp_series, intertwine_check, embed_h, embedding_prefactor


@pytest.mark.parametrize("h", [Fraction(1), Fraction(-1, 2), Fraction(3)])
@pytest.mark.parametrize("r", [1, -1, 2, -3])
def test_leading_term(h, r):
    cd = cartan_data("B2")
    for i in cd.nodes:
        phi = embed_h(LoopEmbedding(cd, GlobalParams(h), 5), i, r)
        assert phi[0] == {(i, 0): h / (r * cd.d[i - 1])}
        assert embed_h(LoopEmbedding(cd, GlobalParams(h), 1), i, r) == [phi[0]]


def test_prefactor_by_hand():
    # v / (e^(v/2) - e^(-v/2)) = 1 - v^2/24 + 7 v^4 / 5760 + ...
    assert embedding_prefactor(1, 1, 5) == TruncSeries(5, [1, 0, Fraction(-1, 24), 0, Fraction(7, 5760)])


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sign_flip(r):
    ctx = LoopEmbedding(cartan_data("G2"), GlobalParams(Fraction(2, 3)), 6)
    for i in (1, 2):
        plus, minus = embed_h(ctx, i, r), embed_h(ctx, i, -r)
        for a, b in zip(plus, minus):
            assert b == {key: -((-1) ** key[1]) * c for key, c in a.items()}


@pytest.mark.parametrize("r", [1, -1, 2, -2])
def test_shift_scales_by_q_power(r):
    # the shift matrix acts on the image of h_{i,r} as multiplication by q^-r
    cd, gp, N = cartan_data("A2"), GlobalParams(Fraction(1, 2)), 6
    ctx = LoopEmbedding(cd, gp, N)
    model = build_model(cd, gp, N - 1)
    index = {b: k for k, b in enumerate(model.basis)}
    phi = embed_h(ctx, 1, r)
    scale = _exp_series(Fraction(-r, 2), N)
    for n in range(N):
        image = {}
        for b, c in phi[n].items():
            for row in range(model.dim):
                if model.Z[row][index[b]]:
                    key = model.basis[row]
                    image[key] = image.get(key, 0) + model.Z[row][index[b]] * c
        expected = {}
        for m in range(n + 1):
            for b, c in phi[n - m].items():
                expected[b] = expected.get(b, 0) + scale[m] * c
        assert {k: v for k, v in image.items() if v} == {k: v for k, v in expected.items() if v}


def test_named_cases():
    gp = GlobalParams(1)
    assert intertwine_check(LoopEmbedding(cartan_data("A1"), gp, 6), 1, 1, 1).ok
    a2 = LoopEmbedding(cartan_data("A2"), gp, 6)
    assert intertwine_check(a2, 1, 2, 1).ok and intertwine_check(a2, 1, 2, 2).ok
    b2 = LoopEmbedding(cartan_data("B2"), gp, 6)
    assert intertwine_check(b2, 1, 2, 1).ok and intertwine_check(b2, 2, 1, 1).ok


@pytest.mark.parametrize("name", ["A1", "A2", "B2"])
def test_every_truncation(name):
    cd = cartan_data(name)
    for N in range(1, 8):
        ctx = LoopEmbedding(cd, GlobalParams(Fraction(-1, 2)), N)
        for i in cd.nodes:
            for j in cd.nodes:
                for r in (1, -2):
                    assert intertwine_check(ctx, i, j, r).ok


def test_truncation_too_small():
    with pytest.raises(TruncationTooSmall):
        LoopEmbedding(cartan_data("A1"), GlobalParams(), 0)


@pytest.mark.parametrize("r", [1, -1, 2])
def test_a1_eigenvalue_sign(r):
    # in rank one the operator multiplies the image of h_{1,r} by -q^(2r) = -e^(r v)
    cd, gp, N = cartan_data("A1"), GlobalParams(1), 6
    ctx = LoopEmbedding(cd, gp, N)
    tau = build_model(cd, gp, N - 1).Tau[0]
    phi = embed_h(ctx, 1, r)
    scale = _exp_series(Fraction(r), N)
    for n in range(N):
        image = {}
        for (_, k), c in phi[n].items():
            for row in range(N):
                if tau[row][k]:
                    image[(1, row)] = image.get((1, row), 0) + tau[row][k] * c
        expected = {}
        for m in range(n + 1):
            for b, c in phi[n - m].items():
                expected[b] = expected.get(b, 0) - scale[m] * c
        assert {k: v for k, v in image.items() if v} == {k: v for k, v in expected.items() if v}

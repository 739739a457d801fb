import random

import pytest
from hypothesis import given, settings, strategies as st

from supersingular.errors import LevelMismatch, RingMismatch
from supersingular.field import FFElement, UPoly, UPolyRing, build_tower
from supersingular.twisted import TwistedPoly, tp_eval_linearized, twisted_to_json

T = build_tower(3, (1, 0, 1))
F = T.top


def rand_tp(rng, ring=F, deg=4):
    return TwistedPoly(ring, [FFElement(ring, rng.randrange(ring.order)) for _ in range(deg + 1)])


def test_tau_commutation_rule():
    x = FFElement(F, 17)
    tau = TwistedPoly.tau(F)
    assert tau * TwistedPoly.constant(F, x) == TwistedPoly(F, [0, x ** 3])
    assert tau * x == TwistedPoly(F, [0, x ** 3])
    assert x * tau == TwistedPoly(F, [0, x])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    f, g, h = rand_tp(rng), rand_tp(rng, deg=3), rand_tp(rng, deg=2)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert (f * g).degree == f.degree + g.degree


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_linearized_evaluation_is_composition(seed):
    rng = random.Random(seed)
    f, g = rand_tp(rng, deg=3), rand_tp(rng, deg=3)
    x, y = (FFElement(F, rng.randrange(F.order)) for _ in range(2))
    assert tp_eval_linearized(f * g, x) == tp_eval_linearized(f, tp_eval_linearized(g, x))
    assert tp_eval_linearized(f, x + y) == tp_eval_linearized(f, x) + tp_eval_linearized(f, y)


def test_polynomial_coefficients():
    R = UPolyRing(T.mid)
    lam = R.gen()
    f = TwistedPoly(R, [lam, R.one])
    g = TwistedPoly(R, [lam + 1])
    assert (f * g)[1] == (lam + 1) ** 3
    assert (f * g)[0] == lam * (lam + 1)
    with pytest.raises(LevelMismatch):
        tp_eval_linearized(f, FFElement(F, 1))


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        TwistedPoly(F, [1]) + TwistedPoly(T.mid, [1])


def test_zero_and_pow():
    assert not TwistedPoly(F, [0, 0])
    tau = TwistedPoly.tau(F)
    assert tau ** 3 == TwistedPoly.tau(F, 3)


def test_json():
    obj = twisted_to_json(T, TwistedPoly(T.mid, [FFElement(T.mid, 3), 1]))
    assert [c["level"] for c in obj["tau_coeffs"]] == ["mid", "mid"]
    obj = twisted_to_json(T, TwistedPoly(UPolyRing(T.mid), [UPoly.gen(T.mid)]))
    assert obj["tau_coeffs"][0]["coeffs"] == [[[0], [0]], [[1], [0]]]

import random

import pytest
from hypothesis import given, settings, strategies as st

from supersingular.errors import (FieldTooLarge, IdealIsT, LevelMismatch, NotIrreducible,
                                  NotMonic, NotPrimePower, SearchSpaceTooLarge)
from supersingular.field import (FFElement, UPoly, auto_ideal, bracket, build_tower,
                                 element_from_json, element_to_json, is_irreducible,
                                 upoly_from_json, upoly_gcd, upoly_roots_exhaustive, upoly_to_json)
from supersingular.field.gf import extension_field, prime_field

CONFIGS = [(2, (1, 1)), (3, (1, 0, 1)), (4, None), (5, (2, 1)), (2, (1, 1, 0, 1)), (9, None)]


def _tower(q, p):
    return build_tower(q, p if p else auto_ideal(q, 2))


TOWERS = {cfg: _tower(*cfg) for cfg in CONFIGS}


def test_q3_p_T2_plus_1():
    t = TOWERS[(3, (1, 0, 1))]
    a = t.alpha
    assert a * a == -1
    assert bracket(t, 1) == a.frob(1) - a
    assert t.top.order == 81
    assert t.mid.order == 9


def test_alpha_is_root_of_p():
    for t in TOWERS.values():
        assert not t.p_of_T()(t.alpha)
        assert not bracket(t, t.d)
        assert all(bracket(t, n) for n in range(1, t.d))


def test_auto_ideal_examples():
    assert auto_ideal(2, 1) == (1, 1)
    assert auto_ideal(3, 2) == (1, 0, 1)
    assert auto_ideal(2, 2) == (1, 1, 1)


@pytest.mark.parametrize("bad, exc", [((0, 1), IdealIsT), ((1, 0, 2), NotMonic),
                                      ((1, 0, 1), NotIrreducible)])
def test_build_tower_rejects(bad, exc):
    with pytest.raises(exc):
        build_tower(2 if exc is not NotMonic else 3, bad)


def test_not_prime_power():
    with pytest.raises(NotPrimePower):
        build_tower(6, (1, 1))


def test_field_too_large():
    with pytest.raises(FieldTooLarge):
        build_tower(2, auto_ideal(2, 8), table_cap=1 << 10)


def test_subfield_embedding_is_identity_on_codes():
    t = TOWERS[(3, (1, 0, 1))]
    for c in range(t.mid.order):
        x = FFElement(t.mid, c)
        assert x.embed(t.top).code == c
        assert (x * x).embed(t.top) == x.embed(t.top) * x.embed(t.top)
    with pytest.raises(LevelMismatch):
        FFElement(t.top, 10).embed(t.mid)


def test_frobenius_fixes_exactly_the_base():
    for t in TOWERS.values():
        fixed = [c for c in range(t.top.order) if t.top.frob(c) == c]
        assert fixed == list(range(t.q))
        for c in range(0, t.top.order, max(1, t.top.order // 50)):
            assert t.top.frob(c, 2 * t.d) == c


@settings(max_examples=200, deadline=None)
@given(cfg=st.sampled_from(CONFIGS), data=st.data())
def test_field_axioms(cfg, data):
    F = TOWERS[cfg].top
    x, y, z = (FFElement(F, data.draw(st.integers(0, F.order - 1))) for _ in range(3))
    assert x + y == y + x and x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0 and x + (-x) == 0
    if x:
        assert x * x.inverse() == 1
        assert (x ** (F.order - 1)) == 1
    assert (x + y) ** F.p == x ** F.p + y ** F.p


def test_pow_negative_and_large():
    F = TOWERS[(5, (2, 1))].top
    x = FFElement(F, 7)
    assert x ** -1 == x.inverse()
    assert x ** (10 ** 30) == x ** (10 ** 30 % (F.order - 1))


def test_element_json_roundtrip():
    rng = random.Random(1)
    for t in TOWERS.values():
        for level in ("base", "mid", "top"):
            F = t.level(level)
            for _ in range(20):
                x = F.random(rng)
                obj = element_to_json(t, x)
                assert obj["level"] == level
                assert len(obj["coeffs"]) == {"base": 1, "mid": t.d, "top": 2 * t.d}[level]
                assert element_from_json(t, obj) == x


def test_upoly_json_roundtrip():
    t = TOWERS[(9, None)]
    f = UPoly(t.mid, [3, 0, 5, 1])
    assert upoly_from_json(t, upoly_to_json(t, f)) == f


def test_upoly_division_and_gcd():
    F = prime_field(7)
    rng = random.Random(3)
    for _ in range(30):
        a = UPoly(F, [rng.randrange(7) for _ in range(rng.randrange(1, 8))])
        b = UPoly(F, [rng.randrange(7) for _ in range(rng.randrange(1, 6))] + [1])
        qt, r = divmod(a, b)
        assert qt * b + r == a
        assert r.degree < b.degree
        g = upoly_gcd(a * b, b)
        assert g == b.monic()


def test_roots_and_irreducibility():
    F = prime_field(5)
    x = UPoly.gen(F)
    f = (x - 1) * (x - 3) * (x * x + 2)
    assert {r.code for r in upoly_roots_exhaustive(f)} == {1, 3}
    assert is_irreducible(x * x + 2)
    assert not is_irreducible(f)
    with pytest.raises(SearchSpaceTooLarge):
        upoly_roots_exhaustive(f, cap=4)


def test_frob_on_polynomials():
    t = TOWERS[(3, (1, 0, 1))]
    lam = UPoly.gen(t.mid)
    f = lam * t.alpha + 1
    assert f.frob(1) == f ** 3


def test_extension_over_extension():
    F4 = extension_field(prime_field(2), [1, 1, 1], name="F4", q=2)
    # y^2 + y + w with w a root of x^2 + x + 1
    F16 = extension_field(F4, [2, 1, 1], name="F16", q=2)
    assert F16.order == 16
    assert all(F16.pow(c, 15) == 1 for c in range(1, 16))

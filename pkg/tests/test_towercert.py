from fractions import Fraction

import pytest

from supersingular.errors import NotInOmega, SearchSpaceTooLarge
from supersingular.field import FFElement
from supersingular.mpoly import MPolyZ
from supersingular.ssformula import H_lambda, SsPolynomial
from supersingular.towercert import (covering_consistency_check, drinfeld_vladut_bound,
                                     gap_decreasing, genus_X0Tn, minimal_relation,
                                     modular_relation_check, modular_relation_sides,
                                     omega_compute, prop41b_check, ratio_table, ratio_table_csv,
                                     splitting_step, tower_report, tower_rhs)


def _omega(tower_cache, q, p=None, d=None):
    t = tower_cache(q, p, d)
    ss = H_lambda(t)
    return t, ss, omega_compute(t, ss)


def test_omega_q2_d1(tower_cache):
    t, ss, om = _omega(tower_cache, 2, (1, 1))
    assert sorted(om.codes) == [2, 3]
    for s in om.elements:
        assert s * s + s + 1 == 0


@pytest.mark.parametrize("q,p,size", [(3, (2, 1), 3), (3, (1, 0, 1), 12), (4, (1, 1), 4)])
def test_omega_sizes(q, p, size, tower_cache):
    _, _, om = _omega(tower_cache, q, p)
    assert len(om) == size == om.expected_size
    assert om.size_ok and om.minus_one_absent


def test_omega_cap(tower_cache):
    t = tower_cache(3, (1, 0, 1))
    with pytest.raises(SearchSpaceTooLarge):
        omega_compute(t, H_lambda(t), cap=10)


def test_splitting_q2_d1(tower_cache):
    t, ss, om = _omega(tower_cache, 2, (1, 1))
    w = FFElement(t.top, 2)
    assert tower_rhs(t, w) == 1
    assert {b.code for b in splitting_step(t, om, w)} == {2, 3}
    with pytest.raises(NotInOmega):
        splitting_step(t, om, FFElement(t.top, 1))


@pytest.mark.parametrize("q,d", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 1), (2, 3)])
def test_splitting_closure(q, d, tower_cache):
    t, ss, om = _omega(tower_cache, q, d=d)
    for a in om.elements:
        succ = splitting_step(t, om, a)
        assert len({b.code for b in succ}) == q
        assert all(b in om for b in succ)


@pytest.mark.parametrize("q,d", [(2, 1), (3, 2), (4, 1), (2, 3), (5, 1)])
def test_functional_equation(q, d, tower_cache):
    t = tower_cache(q, d=d)
    ss = H_lambda(t)
    assert prop41b_check(t, ss)
    # at s = 0 both sides reduce to H(0)
    assert ss.H(t.alpha * 0) == ss.H[0]


def test_functional_equation_detects_a_wrong_polynomial(tower_cache):
    t = tower_cache(3, (1, 0, 1))
    ss = H_lambda(t)
    broken = SsPolynomial(ss.H + 1, 3, 2, "broken")
    assert not prop41b_check(t, broken)


def test_genus_values():
    assert [genus_X0Tn(2, n) for n in (0, 1, 2, 3, 4)] == [0, 0, 0, 1, 3]
    for q in (2, 3, 4, 5, 7):
        assert all(genus_X0Tn(q, n) == 0 for n in (0, 1, 2))
        assert all(genus_X0Tn(q, n) >= 1 for n in range(3, 20))
    with pytest.raises(ValueError):
        genus_X0Tn(2, -1)


def test_ratio_table_q2_d1():
    rows = {r.n: r for r in ratio_table(2, 1, 2, 12)}
    assert (rows[8].N_lower, rows[8].genus, rows[8].ratio) == (512, 465, Fraction(512, 465))
    assert rows[10].ratio == Fraction(2048, 1953)
    assert rows[12].ratio == Fraction(8192, 8001)
    assert abs(rows[12].ratio - 1) < Fraction(5, 100)
    assert gap_decreasing(list(rows.values()))
    assert rows[12].target == drinfeld_vladut_bound(2, 1) == 1


def test_ratio_csv():
    text = ratio_table_csv(ratio_table(2, 1, 2, 2))
    assert text.splitlines() == [
        "n,N_lower,genus,ratio_num,ratio_den,ratio_decimal,target",
        "1,4,1,4,1,4.0,1",
        "2,8,3,8,3,2.666666666667,1",
    ]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_modular_relation(q):
    assert modular_relation_check(q)


def test_modular_relation_is_not_vacuous():
    lhs, rhs = modular_relation_sides(3)
    assert lhs != rhs  # equal only after reduction mod 3
    assert (lhs - rhs + MPolyZ.var("T")).reduce_mod(3) != MPolyZ()
    assert minimal_relation(2).total_degree() == 4


@pytest.mark.parametrize("q,d", [(2, 1), (3, 1), (3, 2), (2, 2)])
def test_covering(q, d, tower_cache):
    t, ss, om = _omega(tower_cache, q, d=d)
    assert covering_consistency_check(t, ss, om)["ok"]


def test_covering_q2_example(tower_cache):
    t, ss, om = _omega(tower_cache, 2, (1, 1))
    w = FFElement(t.top, 2)
    lam0 = -(t.alpha ** 2) * w * (w + 1)
    assert lam0 == 1 and not ss.H(lam0)


def test_tower_report(tower_cache):
    t = tower_cache(3, (1, 0, 1))
    rep = tower_report(t, H_lambda(t), 12)
    assert rep["ok"] and rep["omega"]["size"] == 12 and rep["target"] == 8
    assert len(rep["split_witnesses"]) == 12

from collections import Counter

import pytest

from lrsnake.lr import LRQuery, lr_coeff, lr_family, lr_via_R, margin_box, sweep_main, verify_main_theorem
from lrsnake.oracles import lr_skew_tableaux
from lrsnake.tropical import PhiParams
from lrsnake.tuples import partitions_in_box, partitions_of, snakes_in_box
from lrsnake.verify import check_R_formula

GOLDEN = PhiParams(4, 1, 4, (2, 1, 0, 0))


def test_golden_coefficients():
    assert lr_coeff(LRQuery((5, 1, 1, 0), (2, 1, 0, 0), (5, 3, 2, 0))) == 1
    assert lr_coeff(LRQuery((5, 4, 4, 0), (2, 1, 0, 0), (5, 5, 5, 1))) == 1
    assert lr_via_R(GOLDEN, (5, 3, 2, 0)) == 1


def test_golden_families_same_multiset():
    fa = lr_family((5, 1, 1, 0), (2, 1, 0, 0))
    fb = lr_family((5, 4, 4, 0), (2, 1, 0, 0))
    assert Counter(fa.values()) == Counter(fb.values())


def test_small_families():
    assert lr_family((1, 0), (1, 0)) == {(2, 0): 1, (1, 1): 1}
    assert lr_family((3, 1, 0), (0, 0, 0)) == {(3, 1, 0): 1}
    assert lr_coeff(LRQuery((1, 0), (1, 0), (0, 2))) == 0
    assert lr_coeff(LRQuery((1, 0), (1, 0), (3, -1))) == 0


def test_two_oracles_agree_on_21_21():
    c = lr_coeff(LRQuery((2, 1, 0, 0), (2, 1, 0, 0), (2, 2, 1, 1)))
    assert c == lr_skew_tableaux((2, 2, 1, 1), (2, 1), (2, 1)) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_methods_agree_and_commute(n):
    shapes = [p for s in range(4) for p in partitions_of(s, n)]
    for mu in shapes:
        for nu in shapes:
            fam = lr_family(mu, nu)
            assert fam == lr_family(mu, nu, "expand") == lr_family(nu, mu)
            assert all(sum(k) == sum(mu) + sum(nu) and v > 0 for k, v in fam.items())


def test_query_validation():
    with pytest.raises(ValueError):
        LRQuery((1, -1), (0, 0), (0, 0))
    with pytest.raises(ValueError):
        LRQuery((1, 0), (0, 0), (1,))
    with pytest.raises(ValueError):
        lr_family((1, 0), (1, 0), "guess")


def test_lr_via_R_non_snake_is_zero():
    assert lr_via_R(GOLDEN, (0, 5, 3, 2)) == 0


def test_lr_via_R_n3_sweep():
    for a in range(3):
        for b in range(3):
            for mu in partitions_in_box(3, 2):
                p = PhiParams(3, a, b, mu)
                fam = lr_family(p.alpha, mu)
                total = sum(p.alpha) + sum(mu)
                for lam in partitions_of(total, 3):
                    assert lr_via_R(p, lam) == fam.get(lam, 0)


def test_verify_main_golden():
    rep = verify_main_theorem(GOLDEN, check_R=True)
    assert rep["pass"] and rep["R_failures"] == []
    assert rep["instances"] > rep["stratum_size"]


def test_symmetric_case_is_identity_matching():
    p = PhiParams(3, 2, 2, (2, 1, 0))
    assert p.alpha == p.beta
    assert verify_main_theorem(p)["pass"]


def test_margin_box():
    box = margin_box([(1, 0)], 1)
    assert len(box) == 9 and (1, 0) in box and (2, -1) in box


def test_sweep_small():
    res = sweep_main(ns=(2,), max_ab=2, max_mu1=3, check_R=True)
    assert res["failures"] == []


def test_R_formula_n2():
    for mu in snakes_in_box(2, -1, 2):
        for a in range(3):
            for b in range(3):
                assert all(r["pass"] for r in check_R_formula(mu, a, b))

import pytest

from knotband.alexander import (burau_alexander, normalize_alexander, torus_closed_forms,
                                wirtinger_alexander, wirtinger_determinant)
from knotband.braid import BraidError, BraidWord, closure, torus_braid
from knotband.bracket import jones
from knotband.diagram import orient
from knotband.laurent import LaurentPoly
from knotband.profile import alexander_from_seifert
from knotband.seifert import seifert_matrix
from gen import random_braid
from oracles import coprime_pairs

TREFOIL = LaurentPoly.parse("t^-1 - 1 + t^1", "t")


def test_burau_examples():
    assert burau_alexander(torus_braid(3, 2)) == TREFOIL
    assert burau_alexander(BraidWord(1)) == LaurentPoly.const(1)


def test_burau_rejects_links():
    with pytest.raises(BraidError):
        burau_alexander(BraidWord(2, (1, 1)))


def test_closed_forms_trefoil():
    alex, v, genus = torus_closed_forms(3, 2)
    assert alex == TREFOIL
    assert v == LaurentPoly.parse("-t^4 + t^3 + t^1", "sqrt_t")
    assert genus == 1


def test_closed_forms_9_4():
    alex, _, genus = torus_closed_forms(9, 4)
    assert abs(alex.evaluate(-1)) == 9
    assert genus == 12


def test_closed_forms_reject_non_coprime():
    with pytest.raises(ValueError, match="gcd"):
        torus_closed_forms(6, 4)


def test_normalization_fixes_sign_and_shift():
    p = LaurentPoly({3: 2, 4: -5, 5: 2})
    n = normalize_alexander(p)
    assert n == LaurentPoly({-1: -2, 0: 5, 1: -2})
    assert n.evaluate(1) == 1 and n.is_palindromic()
    assert normalize_alexander(-n) == n


@pytest.mark.parametrize("p,q", coprime_pairs(60))
def test_three_way_alexander_agreement(p, q):
    closed, _, _ = torus_closed_forms(p, q)
    for b in (torus_braid(p, q), torus_braid(q, p)):
        od = orient(closure(b))
        assert burau_alexander(b) == closed
        assert alexander_from_seifert(seifert_matrix(od)) == closed
        assert wirtinger_alexander(od) == closed


@pytest.mark.parametrize("p,q", coprime_pairs(60))
def test_jones_matches_closed_form(p, q):
    _, closed, _ = torus_closed_forms(p, q)
    for b in (torus_braid(p, q), torus_braid(q, p)):
        assert jones(orient(closure(b))) == closed


def test_torus_9_4_determinant():
    assert wirtinger_determinant(orient(closure(torus_braid(9, 4)))) == 9


def test_random_knots_agree_and_are_normalized(rng):
    seen = 0
    while seen < 40:
        b = random_braid(rng, max_strands=4, max_len=12)
        od = orient(closure(b))
        if od.component_count != 1:
            continue
        seen += 1
        delta = burau_alexander(b)
        assert delta.evaluate(1) == 1 and delta.is_palindromic()
        assert wirtinger_alexander(od) == delta
        assert alexander_from_seifert(seifert_matrix(od)) == delta
        assert wirtinger_determinant(od) == abs(delta.evaluate(-1))

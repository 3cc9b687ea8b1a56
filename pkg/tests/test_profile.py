import pytest

from knotband import profile as profile_mod
from knotband.alexander import torus_closed_forms
from knotband.braid import BraidWord, closure, torus_braid
from knotband.bracket import ResourceError
from knotband.diagram import DiagramError, mirror, orient, parse_pd
from knotband.knot_table import get
from knotband.laurent import LaurentPoly
from knotband.profile import (ConsistencyError, InvariantProfile, fox_milnor_test,
                              invariant_profile, symmetrized_invariants)
from gen import random_braid

T = "t"


def test_symmetrized_examples():
    assert symmetrized_invariants(orient(parse_pd(""))) == (1, 0, 0)
    assert symmetrized_invariants(orient(closure(torus_braid(3, 2)))) == (3, -2, 1)
    assert symmetrized_invariants(orient(get("6_1").diagram())) == (9, 0, 0)


@pytest.mark.parametrize("text,expect", [
    ("1", True),
    ("2*t^-1 - 5 + 2*t^1", True),
    ("-2*t^-1 + 5 - 2*t^1", True),
    ("t^-1 - 1 + t^1", False),
    ("-t^-1 + 3 - t^1", False),
    # square of the trefoil polynomial: f = t^2 - t + 1 is self-reciprocal,
    # so f * f* = (t - 1 + t^-1)^2 up to units
    ("t^-2 - 2*t^-1 + 3 - 2*t^1 + t^2", True),
    # t^4 - t^2 + 1 is irreducible and self-reciprocal with multiplicity one,
    # so the test fails although the determinant 1 is a square
    ("t^-2 - 1 + t^2", False),
])
def test_fox_milnor_examples(text, expect):
    assert fox_milnor_test(LaurentPoly.parse(text, T)) is expect


def test_fox_milnor_degree_cap():
    big = LaurentPoly({k: 1 for k in range(-21, 22)}, T)
    with pytest.raises(ResourceError):
        fox_milnor_test(big)


def test_unknot_profile():
    prof = invariant_profile(orient(parse_pd("")))
    assert prof.render().splitlines()[:4] == [
        "determinant: 1", "signature: 0", "arf: 0", "alexander: 1"]
    assert prof.jones == LaurentPoly.const(1, "sqrt_t") and prof.fox_milnor


def test_trefoil_profile_signature_line():
    prof = invariant_profile(orient(closure(torus_braid(3, 2))))
    assert "signature: -2" in prof.render().splitlines()


def test_6_1_alexander_line():
    lines = get("6_1").profile.render().splitlines()
    assert "alexander: -2*t^-1 + 5 - 2*t^1" in lines


def test_torus_9_4_profile_matches_closed_forms():
    prof = invariant_profile(orient(closure(torus_braid(9, 4))))
    alex, v, _ = torus_closed_forms(9, 4)
    assert prof.determinant == 9
    assert prof.alexander == alex and prof.jones == v
    assert prof.signature == -16 and not prof.fox_milnor


def test_render_parse_round_trip():
    for name in ("unknot", "3_1", "4_1", "5_1", "5_2", "6_1"):
        prof = get(name).profile
        assert InvariantProfile.parse(prof.render()) == prof
        assert InvariantProfile.parse(prof.render()).render() == prof.render()


def test_links_are_rejected():
    with pytest.raises(DiagramError):
        invariant_profile(orient(closure(BraidWord(2, (1, 1)))))


def test_consistency_failure_is_raised(monkeypatch):
    monkeypatch.setattr(profile_mod, "symmetrized_invariants", lambda od, v=None: (5, 0, 1))
    with pytest.raises(ConsistencyError, match="determinant"):
        invariant_profile(orient(closure(torus_braid(3, 2))))


def test_mirror_behaviour(rng):
    done = 0
    while done < 25:
        b = random_braid(rng, max_strands=4, max_len=9, min_len=1)
        d = closure(b)
        if orient(d).component_count != 1:
            continue
        p = invariant_profile(orient(d))
        m = invariant_profile(orient(mirror(d)))
        assert m.signature == -p.signature
        assert m.determinant == p.determinant and m.arf == p.arf
        assert m.alexander == p.alexander
        assert m.jones == p.jones.invert()
        assert m.knot_fields() == p.mirror().knot_fields()
        done += 1


def test_bundled_3_1_is_mirror_of_torus_trefoil():
    torus = invariant_profile(orient(closure(torus_braid(3, 2))))
    assert get("3_1").profile.matches(torus.mirror())

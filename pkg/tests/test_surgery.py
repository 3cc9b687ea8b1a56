import pytest

from knotband.braid import BraidWord, closure, torus_braid
from knotband.diagram import orient, parse_pd
from knotband.knot_table import get
from knotband.profile import invariant_profile
from knotband.surgery import BandError, BandSpec, attach_band, pinch_band_spec
from gen import random_band, random_braid


def test_band_text_round_trip():
    text = "band attach=(e3,0.5) attach=(e7,0.25,R) path=[e4:over,e5:under] twists=-2"
    b = BandSpec.parse(text)
    assert b.attach1 == (3, 0.5, None) and b.attach2 == (7, 0.25, "R")
    assert b.path == ((4, "over"), (5, "under")) and b.twists == -2
    assert BandSpec.parse(b.render()) == b


@pytest.mark.parametrize("text", [
    "bond attach=(e1,0.5) attach=(e2,0.5)",
    "band attach=(e1,0.5)",
    "band attach=(e1,0.5) attach=(e2,0.5) path=[e3:sideways]",
    "band attach=(e1,1.5) attach=(e2,0.5)",
    "band attach=(e1,0.5) attach=(e1,0.5)",
])
def test_bad_band_text(text):
    with pytest.raises(BandError):
        BandSpec.parse(text)


def test_unknown_edge_is_rejected():
    od = orient(closure(torus_braid(3, 2)))
    with pytest.raises(BandError, match="edge 99"):
        attach_band(od, BandSpec((99, 0.5), (1, 0.5)))


def test_path_must_follow_faces():
    od = orient(closure(torus_braid(9, 4)))
    edges = od.all_edges()
    e1 = edges[0]
    face = od.face_of(e1, "L")
    far = next(e for e in edges if face not in (od.left_face(e), od.right_face(e)))
    with pytest.raises(BandError, match="inconsistent"):
        attach_band(od, BandSpec((e1, 0.5, "L"), (edges[1], 0.5), ((far, "over"),)))


def test_pinch_band_spec_examples():
    od = orient(closure(torus_braid(9, 4)))
    b = pinch_band_spec(od, 1)
    assert b.twists == 0 and b.path == ()
    with pytest.raises(BandError, match="out of range"):
        pinch_band_spec(od, 4)
    with pytest.raises(BandError, match="braid closure"):
        pinch_band_spec(orient(get("6_1").diagram()), 1)


def test_pinch_on_trefoil_gives_unknot_profile():
    od = orient(closure(torus_braid(3, 2)))
    d, coherence = attach_band(od, pinch_band_spec(od, 1))
    assert coherence == "non-coherent"
    assert invariant_profile(orient(d)).matches(get("unknot").profile)


def test_coherent_band_on_antiparallel_strands():
    # the two strands of a clasp region of 4_1 run in opposite directions
    od = orient(closure(BraidWord(3, (1, -2, 1, -2))))
    found = False
    for e1 in od.all_edges():
        for e2 in od.all_edges():
            if e1 >= e2:
                continue
            for s in "LR":
                if od.face_of(e1, s) not in (od.left_face(e2), od.right_face(e2)):
                    continue
                d, coherence = attach_band(od, BandSpec((e1, 0.5, s), (e2, 0.5)))
                if coherence == "coherent":
                    assert orient(d).component_count == 2
                    found = True
    assert found


def test_untwisted_empty_band_keeps_crossings():
    od = orient(closure(torus_braid(5, 3)))
    d, _ = attach_band(od, pinch_band_spec(od, 2))
    assert d.crossing_count == od.base.crossing_count


def _random_knot(rng):
    while True:
        od = orient(closure(random_braid(rng, max_strands=4, max_len=9, min_len=1)))
        if od.component_count == 1:
            return od


def test_band_parity_and_crossing_arithmetic(rng):
    """Component count is 1 for non-coherent and 2 for coherent bands, and
    each path entry adds two crossings, each half twist one."""
    checked = 0
    while checked < 600:
        od = _random_knot(rng)
        band = random_band(rng, od, max_path=2, max_twists=3)
        if band is None:
            continue
        try:
            d, coherence = attach_band(od, band)
        except BandError:
            continue
        comps = orient(d).component_count
        assert comps == (2 if coherence == "coherent" else 1)
        assert d.crossing_count == od.base.crossing_count + 2 * len(band.path) + abs(band.twists)
        checked += 1


def test_band_on_unknot():
    od = orient(parse_pd(""))
    e = od.all_edges()[0]
    d, coherence = attach_band(od, BandSpec((e, 1 / 3, "L"), (e, 2 / 3, "L")))
    assert d.crossing_count == 0
    comps = orient(d).component_count
    assert comps == (2 if coherence == "coherent" else 1)

import pytest
from hypothesis import given, settings, strategies as st

from knotband.braid import BraidWord, closure, torus_braid
from knotband.diagram import DiagramError, PlanarDiagram, canonical_code, mirror, orient, parse_pd
from knotband.knot_table import get
from gen import random_braid


def test_empty_input_is_unknot():
    d = parse_pd("")
    assert d.crossing_count == 0 and d.loops == 1
    od = orient(d)
    assert od.writhe == 0 and od.component_count == 1


def test_hopf_link_code():
    d = parse_pd("X 1 2 3 4 / X 4 3 2 1")
    od = orient(d)
    assert od.component_count == 2
    assert len(d.faces) == 4


def test_hopf_shaped_code_with_torus_embedding_is_rejected():
    # each edge appears twice, but V - E + F = 2 - 4 + 2 = 0: not a sphere
    with pytest.raises(DiagramError, match="Euler"):
        parse_pd("X 1 2 3 4 / X 3 4 1 2")


def test_edge_multiplicity_violation_names_edge():
    with pytest.raises(DiagramError, match="edge 2 appears 3 times"):
        parse_pd("X 1 2 2 2 / X 1 3 3 4 / X 4 5 5 6")
    with pytest.raises(DiagramError, match="edge 1 appears 1 times"):
        parse_pd("X 1 2 3 7")


def test_malformed_lines():
    with pytest.raises(DiagramError):
        parse_pd("Y 1 2 3 4")
    with pytest.raises(DiagramError):
        parse_pd("X 1 2 3")
    with pytest.raises(DiagramError):
        parse_pd("X 1 2 a 4")


def test_comments_newlines_and_loops():
    text = "# trefoil\nX 1 4 2 5\nX 3 6 4 1 / X 5 2 6 3\n# loops 2"
    d = parse_pd(text)
    assert d.crossing_count == 3 and d.loops == 2
    assert orient(d).component_count == 3
    assert parse_pd(d.render()) == d


def test_multi_loop_unlink_round_trips():
    d = PlanarDiagram((), 2)
    assert parse_pd(d.render()) == d


@given(st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_render_parse_round_trip(r):
    d = closure(random_braid(r))
    assert parse_pd(d.render()) == d


def test_orientation_examples():
    od = orient(closure(torus_braid(3, 2)))
    assert od.writhe == 3 and od.component_count == 1
    od = orient(closure(torus_braid(9, 4)))
    assert od.writhe == 27 and od.component_count == 1


@given(st.randoms(use_true_random=False))
@settings(max_examples=80)
def test_orientation_is_consistent(r):
    d = closure(random_braid(r))
    od = orient(d)
    assert od.writhe == sum(od.signs)
    for ci, c in enumerate(d.crossings):
        # under strand runs slot 0 -> slot 2
        assert od.head[c[0]] == (ci, 0)
        assert od.tail[c[2]] == (ci, 2)
    assert sum(len(c) for c in od.components) == len(d.edges)


@given(st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_mirror_negates_signs(r):
    d = closure(random_braid(r))
    m = mirror(d)
    om, od = orient(m), orient(d)
    assert om.component_count == od.component_count
    assert om.writhe == -od.writhe
    assert mirror(m) == d


def test_faces_satisfy_euler_formula():
    for name in ("3_1", "4_1", "6_1"):
        d = get(name).diagram()
        assert d.crossing_count - len(d.edges) + len(d.faces) == 2


def test_canonical_code_ignores_labels_and_order(rng):
    for _ in range(80):
        d = closure(random_braid(rng, max_len=9))
        if d.piece_count > 1:
            continue
        labels = list(d.edges)
        new = dict(zip(labels, rng.sample(range(1, 500), len(labels))))
        rows = [tuple(new[e] for e in c) for c in d.crossings]
        rng.shuffle(rows)
        assert canonical_code(PlanarDiagram(tuple(rows), d.loops)) == canonical_code(d)


def test_canonical_code_separates_trefoil_from_mirror():
    d = closure(torus_braid(3, 2))
    assert canonical_code(d) != canonical_code(mirror(d))
    assert canonical_code(get("4_1").diagram()) != canonical_code(d)


def test_braid_orientation_hint_does_not_leak_through_cache():
    b = BraidWord(2, (-1, 1))
    d = closure(b)
    plain = PlanarDiagram(d.crossings, d.loops)
    assert orient(plain).base.closure_arcs is None
    assert orient(d).base.closure_arcs is not None
    assert list(orient(d).signs) == [-1, 1]

import pytest

from knotband.braid import BraidWord, closure, torus_braid
from knotband.bracket import (DELTA, ResourceError, bracket_state_sum, elimination_order,
                              frontier_width, jones, kauffman_bracket)
from knotband.diagram import mirror, orient, parse_pd
from knotband.laurent import LaurentPoly
from gen import random_braid, random_diagram
from moves import random_r1, random_r2, random_r3
from oracles import state_sum_bracket


def A(m):
    return LaurentPoly(m, "A")


def test_unknot_bracket_is_one():
    assert kauffman_bracket(parse_pd("")) == A({0: 1})


def test_loop_value():
    assert DELTA == A({2: -1, -2: -1})
    assert kauffman_bracket(parse_pd("# loops 2")) == DELTA


def test_positive_kink():
    d = closure(BraidWord(2, (1,)))
    assert orient(d).writhe == 1
    assert kauffman_bracket(d) == A({3: -1})


def test_positive_trefoil_bracket():
    assert kauffman_bracket(closure(torus_braid(3, 2))) == A({5: -1, -3: -1, -7: 1})


def test_positive_trefoil_jones():
    v = jones(orient(closure(torus_braid(3, 2))))
    assert v == LaurentPoly.parse("-t^4 + t^3 + t^1", "sqrt_t")


def test_unknot_jones():
    assert jones(orient(parse_pd(""))) == LaurentPoly.const(1, "sqrt_t")


def test_contraction_matches_independent_state_sum(rng):
    for _ in range(60):
        d = random_diagram(rng, max_crossings=11)
        expect = A(state_sum_bracket(d.crossings, d.loops))
        assert kauffman_bracket(d) == expect
        assert bracket_state_sum(d) == expect


def test_result_independent_of_elimination_order(rng):
    for _ in range(25):
        d = random_diagram(rng, max_crossings=10)
        order = list(range(d.crossing_count))
        base = kauffman_bracket(d)
        for _ in range(3):
            rng.shuffle(order)
            assert kauffman_bracket(d, order=list(order)) == base


def test_braid_sweep_order_keeps_width_small():
    d = closure(torus_braid(9, 4))
    assert elimination_order(d) == list(range(27))
    assert frontier_width(d) <= 10


def test_width_budget_is_a_resource_error():
    d = closure(torus_braid(4, 9))
    with pytest.raises(ResourceError):
        kauffman_bracket(d, max_width=4)


def test_knot_jones_has_integer_exponents(rng):
    for _ in range(30):
        d = random_diagram(rng)
        od = orient(d)
        v = jones(od)
        if od.component_count % 2 == 1:
            assert all(e % 2 == 0 for e, _ in v.terms())
        else:
            assert all(e % 2 == 1 for e, _ in v.terms())


def test_r1_multiplies_by_minus_a_cubed(rng):
    for _ in range(40):
        d = random_diagram(rng)
        if not d.crossing_count:
            continue
        nd, sign = random_r1(rng, d)
        assert kauffman_bracket(nd) == kauffman_bracket(d) * A({3 * sign: -1})
        assert jones(orient(nd)) == jones(orient(d))


def test_r2_invariance(rng):
    done = 0
    while done < 40:
        d = random_diagram(rng)
        if not d.crossing_count:
            continue
        nd = random_r2(rng, d)
        if nd is None:
            continue
        assert nd.crossing_count == d.crossing_count + 2
        assert kauffman_bracket(nd) == kauffman_bracket(d)
        done += 1


def test_r3_invariance(rng):
    done = 0
    while done < 40:
        d = closure(random_braid(rng, max_strands=4, max_len=12, min_len=3))
        nd = random_r3(rng, d)
        if nd is None:
            continue
        assert nd.crossing_count == d.crossing_count
        assert nd != d
        assert kauffman_bracket(nd) == kauffman_bracket(d)
        done += 1


def test_mirror_inverts_jones(rng):
    for _ in range(30):
        d = random_diagram(rng)
        assert jones(orient(mirror(d))) == jones(orient(d)).invert()
        assert kauffman_bracket(mirror(d)) == kauffman_bracket(d).invert()

"""Random Reidemeister moves that add or rearrange crossings (test helpers)."""

from knotband.diagram import orient
from knotband.simplify import add_kink, r3_sites, reidemeister_3
from knotband.surgery import BandError, finger_move


def random_r2(rng, d):
    """Push a finger from one edge over or under a neighbouring edge."""
    od = orient(d)
    edges = od.all_edges()
    for _ in range(20):
        e = rng.choice(edges)
        side = rng.choice("LR")
        face = od.face_of(e, side)
        others = [x for x in edges if x != e and face in (od.left_face(x), od.right_face(x))
                  and od.left_face(x) != od.right_face(x)]
        if not others:
            continue
        try:
            return finger_move(od, e, side, [(rng.choice(others), rng.choice(("over", "under")))])
        except BandError:
            continue
    return None


def random_r3(rng, d):
    sites = r3_sites(d)
    rng.shuffle(sites)
    for fi in sites:
        nd = reidemeister_3(d, fi)
        if nd is not None:
            return nd
    return None


def random_r1(rng, d):
    e = rng.choice(sorted(d.edges))
    sign = rng.choice((1, -1))
    return add_kink(d, e, sign, rng.random() < 0.5), sign

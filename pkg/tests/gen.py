"""Seeded generators of random braids, bands and diagrams for property tests."""

from knotband.braid import BraidWord, closure
from knotband.diagram import orient
from knotband.surgery import BandError, BandSpec, attach_band


def random_braid(rng, max_strands=4, max_len=10, min_len=0):
    n = rng.randint(2, max_strands)
    length = rng.randint(min_len, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_band(rng, od, max_path=2, max_twists=2):
    """A face-consistent band on ``od`` or None if the walk got stuck."""
    edges = od.all_edges()
    e1 = rng.choice(edges)
    s1 = rng.choice("LR")
    face = od.face_of(e1, s1)
    path = []
    for _ in range(rng.randint(0, max_path)):
        cands = [e for e in edges if e != e1 and od.left_face(e) != od.right_face(e)
                 and face in (od.left_face(e), od.right_face(e))
                 and e not in [c for c, _ in path]]
        if not cands:
            break
        c = rng.choice(cands)
        path.append((c, rng.choice(("over", "under"))))
        face = od.right_face(c) if od.left_face(c) == face else od.left_face(c)
    crossed = [c for c, _ in path]
    ends = [e for e in edges if e != e1 and e not in crossed
            and face in (od.left_face(e), od.right_face(e))]
    if not ends:
        return None
    e2 = rng.choice(ends)
    s2 = "L" if od.face_of(e2, "L") == face else "R"
    return BandSpec((e1, 0.5, s1), (e2, 0.5, s2), tuple(path), rng.randint(-max_twists, max_twists))


def random_diagram(rng, max_crossings=12):
    """Braid closure, optionally modified by one random band, within the bound."""
    while True:
        d = closure(random_braid(rng, max_len=max_crossings - 2))
        if d.crossing_count and rng.random() < 0.5:
            od = orient(d)
            band = random_band(rng, od, max_path=1, max_twists=1)
            if band is not None:
                try:
                    d, _ = attach_band(od, band)
                except BandError:
                    pass
        if d.crossing_count <= max_crossings:
            return d

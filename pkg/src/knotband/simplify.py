"""Greedy Reidemeister simplification (R1, R2; R3 only when it unlocks them)."""

from __future__ import annotations

from .diagram import DiagramError, Rewiring, orient


def _r1_site(d):
    for ci, c in enumerate(d.crossings):
        for s in range(4):
            if c[s] == c[(s + 1) % 4]:
                return ci
    return None


def _r2_site(d):
    for face in d.faces:
        if len(face) != 2:
            continue
        (c1, s1), (c2, s2) = face
        if c1 == c2:
            continue
        e = d.crossings[c1][s1]
        # e's slot parity at both ends decides whether one strand is on top
        (a, sa), (b, sb) = d.occurrences[e]
        if a == b:
            continue
        if sa % 2 == sb % 2:
            return c1, c2
    return None


def _rebuild(d, rw):
    prefer = [("x", ci, 2) for ci in range(d.crossing_count)]
    return rw.assemble(prefer)


def reidemeister_1(d, ci):
    rw = Rewiring(d)
    rw.remove_node(ci)
    return _rebuild(d, rw)


def reidemeister_2(d, c1, c2):
    rw = Rewiring(d)
    rw.remove_node(c1)
    rw.remove_node(c2)
    return _rebuild(d, rw)


def add_kink(d, e, sign, over_first=False):
    """Insert a Reidemeister I kink of the given sign on edge ``e``.

    ``over_first`` picks which side of the edge the kink's loop lies on.
    """
    if not d.crossing_count:
        raise DiagramError("add_kink needs a diagram with at least one crossing")
    od = orient(d)
    rw = Rewiring(d)
    u = ("x",) + od.tail[e]
    v = rw.disconnect(u)
    n = rw.new_node()
    x = lambda s: ("x", n, s)
    # the over-strand runs 3 -> 1 at a positive crossing and 1 -> 3 otherwise
    o_in, o_out = (3, 1) if sign > 0 else (1, 3)
    if over_first:
        rw.connect(u, x(o_in))
        rw.connect(x(o_out), x(0))
        rw.connect(x(2), v)
    else:
        rw.connect(u, x(0))
        rw.connect(x(2), x(o_in))
        rw.connect(x(o_out), v)
    return _rebuild(d, rw)


def r3_sites(d):
    """Triangular faces admitting a Reidemeister III move."""
    sites = []
    for fi, face in enumerate(d.faces):
        if len(face) != 3:
            continue
        nodes = {ci for ci, _ in face}
        if len(nodes) != 3:
            continue
        status = []
        for ci, s in face:
            e = d.crossings[ci][s]
            (a, sa), (b, sb) = d.occurrences[e]
            if a == b:
                break
            status.append((sa % 2, sb % 2))
        else:
            if (1, 1) in status and (0, 0) in status:
                sites.append(fi)
    return sites


def reidemeister_3(d, fi):
    """Slide across the triangle ``fi``: every strand meets its two triangle
    crossings in the opposite order afterwards."""
    face = d.faces[fi]
    rw = Rewiring(d)
    tri_ports = set()
    strands = []
    for ci, s in face:
        c2, s2 = d.other_end(ci, s)
        tri_ports.update({("x", ci, s), ("x", c2, s2)})
        # strand runs ext_before -> P(opposite s) .. P(s) -> Q(s2) .. Q(opp s2) -> ext_after
        p_a, p_b = ("x", ci, (s + 2) % 4), ("x", ci, s)
        q_a, q_b = ("x", c2, s2), ("x", c2, (s2 + 2) % 4)
        strands.append((p_a, p_b, q_a, q_b))
    node_ports = {("x", ci, k) for ci, _ in face for k in range(4)}
    ext = []
    for p_a, p_b, q_a, q_b in strands:
        eb, ea = rw.wire[p_a], rw.wire[q_b]
        # external edges must leave the triangle's crossings
        if eb in node_ports or ea in node_ports or p_a in tri_ports or q_b in tri_ports:
            return None
        ext.append((eb, ea))
    flat = [t for pair in ext for t in pair]
    if len(set(flat)) != len(flat):
        return None
    for (p_a, p_b, q_a, q_b), (eb, ea) in zip(strands, ext):
        rw.disconnect(p_a)
        rw.disconnect(q_b)
        rw.disconnect(p_b)
    for (p_a, p_b, q_a, q_b), (eb, ea) in zip(strands, ext):
        rw.connect(eb, q_a)
        rw.connect(q_b, p_a)
        rw.connect(p_b, ea)
    try:
        return _rebuild(d, rw)
    except DiagramError:
        return None


def _reduce_once(d):
    ci = _r1_site(d)
    if ci is not None:
        return reidemeister_1(d, ci)
    site = _r2_site(d)
    if site is not None:
        return reidemeister_2(d, *site)
    return None


def _r3_unlock(d, depth):
    if depth == 0:
        return None
    for fi in r3_sites(d):
        nd = reidemeister_3(d, fi)
        if nd is None:
            continue
        red = _reduce_once(nd)
        if red is not None:
            return red
        deeper = _r3_unlock(nd, depth - 1)
        if deeper is not None:
            return deeper
    return None


def simplify(d, r3_depth=2):
    """Greedy crossing reduction; returns ``d`` itself if nothing applies."""
    cur = d
    while cur.crossing_count:
        nxt = _reduce_once(cur)
        if nxt is None:
            nxt = _r3_unlock(cur, r3_depth)
        if nxt is None:
            break
        cur = nxt
    return cur

"""Band (1-handle) attachment and finger moves on oriented diagrams.

A band leaves edge ``attach1`` into the face on the given side, crosses
the strands listed in ``path`` (entirely over or under each), and lands on
``attach2``.  Its two boundary curves are tracked as the left (L) and right
(R) curve relative to the band core running from attach1 to attach2.  Half
twists sit at the end of the core; a positive half twist passes the left
curve over the right one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagram import DiagramError, Rewiring, orient


class BandError(ValueError):
    pass


@dataclass(frozen=True)
class BandSpec:
    attach1: tuple              # (edge, position in (0,1), side "L"/"R"/None)
    attach2: tuple
    path: tuple = ()            # ((edge, "over"|"under"), ...)
    twists: int = 0

    def __post_init__(self):
        object.__setattr__(self, "attach1", _norm_attach(self.attach1))
        object.__setattr__(self, "attach2", _norm_attach(self.attach2))
        object.__setattr__(self, "path", tuple((int(e), str(f)) for e, f in self.path))
        for e, flag in self.path:
            if flag not in ("over", "under"):
                raise BandError(f"path flag must be over/under, got {flag!r}")
        if self.attach1[:2] == self.attach2[:2]:
            raise BandError("attach points must lie at distinct edge positions")

    def render(self):
        def site(a):
            e, pos, side = a
            return f"(e{e},{pos:g}" + (f",{side})" if side else ")")

        path = ",".join(f"e{e}:{flag}" for e, flag in self.path)
        return (f"band attach={site(self.attach1)} attach={site(self.attach2)} "
                f"path=[{path}] twists={self.twists}")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text.startswith("band"):
            raise BandError("band text must start with 'band'")
        sites = re.findall(r"attach=\(e(\d+),([0-9.]+)(?:,([LR]))?\)", text)
        if len(sites) != 2:
            raise BandError("band text needs exactly two attach=(e<id>,<pos>) sites")
        m = re.search(r"path=\[([^\]]*)\]", text)
        path = []
        if m and m.group(1).strip():
            for item in m.group(1).split(","):
                pm = re.fullmatch(r"\s*e(\d+):(over|under)\s*", item)
                if not pm:
                    raise BandError(f"bad path entry {item!r}")
                path.append((int(pm.group(1)), pm.group(2)))
        tm = re.search(r"twists=(-?\d+)", text)
        twists = int(tm.group(1)) if tm else 0
        a1, a2 = ((int(e), float(p), s or None) for e, p, s in sites)
        return cls(a1, a2, tuple(path), twists)


def _norm_attach(a):
    if len(a) == 2:
        e, pos = a
        side = None
    else:
        e, pos, side = a
    pos = float(pos)
    if not 0 < pos < 1:
        raise BandError(f"attach position must lie in (0,1), got {pos}")
    if side not in (None, "L", "R"):
        raise BandError(f"attach side must be L or R, got {side!r}")
    return (int(e), pos, side)


@dataclass
class BandGeometry:
    side1: str
    side2: str
    crossings: list = field(default_factory=list)  # per path entry: "LR" or "RL"
    faces: list = field(default_factory=list)


def _borders(od, face, e):
    return od.left_face(e) == face or od.right_face(e) == face


def trace_band(od, band):
    """Resolve attach sides and the face chain of ``band`` on ``od``."""
    edges = set(od.all_edges())
    e1, _, s1 = band.attach1
    e2, _, s2 = band.attach2
    for e in (e1, e2, *(c for c, _ in band.path)):
        if e not in edges:
            raise BandError(f"edge {e} is not an edge of the diagram")
    first_target = band.path[0][0] if band.path else e2
    if s1 is None:
        for cand in ("L", "R"):
            if _borders(od, od.face_of(e1, cand), first_target):
                s1 = cand
                break
        else:
            raise BandError(f"no face of edge {e1} borders edge {first_target}")
    face = od.face_of(e1, s1)
    geo = BandGeometry(s1, None, faces=[face])
    for c, _ in band.path:
        if od.left_face(c) == face:
            geo.crossings.append("LR")
            face = od.right_face(c)
        elif od.right_face(c) == face:
            geo.crossings.append("RL")
            face = od.left_face(c)
        else:
            raise BandError(f"path inconsistent with faces: edge {c} does not border face {face}")
        geo.faces.append(face)
    if s2 is None:
        for cand in ("L", "R"):
            if od.face_of(e2, cand) == face:
                s2 = cand
                break
        else:
            raise BandError(f"path inconsistent with faces: edge {e2} does not border the final face")
    elif od.face_of(e2, s2) != face:
        raise BandError(f"path inconsistent with faces: side {s2} of edge {e2} is not the final face")
    geo.side2 = s2
    return geo


def _roles_node(rw, roles, under_first):
    """Create a node from roles listed counterclockwise; rotate by one unless
    the first role's strand is the under-strand."""
    if not under_first:
        roles = roles[1:] + roles[:1]
    n = rw.new_node()
    return {role: ("x", n, s) for s, role in enumerate(roles)}


def _path_node(rw, direction, band_over):
    if direction == "LR":
        roles = ["c_in", "k_out", "c_out", "k_in"]
    else:
        roles = ["c_in", "k_in", "c_out", "k_out"]
    return _roles_node(rw, roles, under_first=band_over)


def _build(od, attaches, path, geo, twists, tip=False):
    """Shared construction for bands (two attach points) and fingers (one)."""
    d = od.base
    rw = Rewiring(d)
    events = {}

    def add_event(e, pos, ev):
        events.setdefault(e, []).append((pos, len(events.get(e, [])), ev))

    joints = {}
    for k, (e, pos, _) in enumerate(attaches):
        jin, jout = rw.joint(), rw.joint()
        joints[k] = (jin, jout)
        add_event(e, pos, ("attach", jin, jout))

    # path crossings: two nodes per entry, ordered along the crossed edge
    curve_nodes = []
    for (c, flag), direction in zip(path, geo.crossings):
        over = flag == "over"
        node_l = _path_node(rw, direction, over)
        node_r = _path_node(rw, direction, over)
        curve_nodes.append((node_l, node_r))
        first, second = (node_r, node_l) if direction == "LR" else (node_l, node_r)
        add_event(c, 0.5, ("node", first))
        add_event(c, 0.5, ("node", second))

    for e, evs in events.items():
        evs.sort(key=lambda x: (x[0], x[1]))
        ports = []
        for _, _, ev in evs:
            if ev[0] == "attach":
                _, jin, jout = ev
                ports.append((jin[0], jout[0]))
            else:
                node = ev[1]
                ports.append((node["c_in"], node["c_out"]))
        if e in d.loop_labels:
            rw.free_loops -= 1
            for (_, out_tok), (in_tok, _) in zip(ports, ports[1:] + ports[:1]):
                rw.connect(out_tok, in_tok)
        else:
            start = ("x",) + od.tail[e]
            end = ("x",) + od.head[e]
            rw.disconnect(start)
            rw.connect(start, ports[0][0])
            for (_, out_tok), (in_tok, _) in zip(ports, ports[1:]):
                rw.connect(out_tok, in_tok)
            rw.connect(ports[-1][1], end)

    # curves leave the first attach point
    jin, jout = joints[0]
    h_in, h_out = jin[1], jout[1]
    if geo.side1 == "L":
        pend = {"L": h_in, "R": h_out}
    else:
        pend = {"L": h_out, "R": h_in}
    a_pos = "L" if geo.side1 == "L" else "R"  # curve A carries h_in
    for node_l, node_r in curve_nodes:
        rw.connect(pend["L"], node_l["k_in"])
        rw.connect(pend["R"], node_r["k_in"])
        pend = {"L": node_l["k_out"], "R": node_r["k_out"]}
    for _ in range(abs(twists)):
        node = _roles_node(rw, ["L_in", "R_in", "L_out", "R_out"], under_first=twists < 0)
        rw.connect(pend["L"], node["L_in"])
        rw.connect(pend["R"], node["R_in"])
        pend = {"L": node["R_out"], "R": node["L_out"]}
        a_pos = "R" if a_pos == "L" else "L"
    coherent = None
    if tip:
        rw.connect(pend["L"], pend["R"])
    else:
        jin2, jout2 = joints[1]
        h2_in, h2_out = jin2[1], jout2[1]
        if geo.side2 == "L":
            land = {"L": h2_out, "R": h2_in}
        else:
            land = {"L": h2_in, "R": h2_out}
        rw.connect(pend["L"], land["L"])
        rw.connect(pend["R"], land["R"])
        coherent = land[a_pos] == h2_out
    prefer = [("x", ci, 2) for ci in range(d.crossing_count)]
    try:
        result = rw.assemble(prefer)
    except DiagramError as exc:
        raise BandError(f"band is not planar on this diagram: {exc}") from None
    return result, coherent


def attach_band(od, band):
    """Band surgery.  Returns (diagram, "coherent" | "non-coherent")."""
    if not hasattr(od, "base"):
        od = orient(od)
    geo = trace_band(od, band)
    attaches = [band.attach1, band.attach2]
    result, coherent = _build(od, attaches, band.path, geo, band.twists)
    return result, ("coherent" if coherent else "non-coherent")


def finger_move(od, e, side, path):
    """Push a finger from edge ``e`` (leaving on ``side``) across the strands
    in ``path``; an isotopy adding two crossings per entry (Reidemeister II)."""
    if not hasattr(od, "base"):
        od = orient(od)
    if not path:
        raise BandError("finger move needs a non-empty path")
    fake = BandSpec((e, 0.5, side), (path[-1][0], 0.75, None), tuple(path))
    geo = BandGeometry(side, None, faces=[])
    face = od.face_of(e, side)
    for c, _ in fake.path:
        if od.left_face(c) == face:
            geo.crossings.append("LR")
            face = od.right_face(c)
        elif od.right_face(c) == face:
            geo.crossings.append("RL")
            face = od.left_face(c)
        else:
            raise BandError(f"finger path inconsistent with faces at edge {c}")
    result, _ = _build(od, [(e, 0.5, side)], fake.path, geo, 0, tip=True)
    return result


def pinch_band_spec(od, i):
    """Untwisted empty-path band joining closure arcs i and i+1 of a braid closure."""
    if not hasattr(od, "base"):
        od = orient(od)
    d = od.base
    arcs = d.closure_arcs
    if arcs is None:
        raise BandError("diagram is not a recognized braid closure")
    n = len(arcs)
    if not 1 <= i <= n - 1:
        raise BandError(f"pinch strand index {i} out of range 1..{n - 1}")
    e1, e2 = arcs[i - 1], arcs[i]
    if e1 is None or e2 is None:
        raise BandError("closure strand has no crossings")
    side = "L" if _borders(od, od.left_face(e1), e2) else "R"
    return BandSpec((e1, 0.5, side), (e2, 0.5, None), (), 0)

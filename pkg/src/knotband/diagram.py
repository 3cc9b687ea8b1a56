"""Planar diagrams (PD codes), orientation and face structure.

Crossings are 4-tuples of edge labels listed counterclockwise starting with
the incoming under-strand.  A crossing is positive when the over-strand
enters at slot 3 and leaves at slot 1.

Crossingless unknotted components are counted in ``loops``; for band
operations the k-th such loop is addressed by the pseudo edge label
``max_label + k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    loops: int = 0
    # provenance for braid closures; ignored by equality
    closure_arcs: tuple | None = field(default=None, compare=False, repr=False)
    braid: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        if self.loops < 0:
            raise DiagramError("negative loop count")
        if not self.crossings and self.loops == 0:
            object.__setattr__(self, "loops", 1)
        self._validate()

    # -- validation -------------------------------------------------------

    def _validate(self):
        counts = {}
        for ci, c in enumerate(self.crossings):
            if len(c) != 4:
                raise DiagramError(f"crossing {ci} does not have 4 entries: {c}")
            for e in c:
                if e <= 0:
                    raise DiagramError(f"edge label {e} is not a positive integer")
                counts[e] = counts.get(e, 0) + 1
        for e, n in sorted(counts.items()):
            if n != 2:
                raise DiagramError(f"edge {e} appears {n} times (expected exactly 2)")
        # orientation must be consistent with the under-strand convention
        self._orientation
        v, ed, f = len(self.crossings), len(counts), len(self.faces)
        pieces = self.piece_count
        if v - ed + f != 2 * pieces:
            raise DiagramError(
                f"Euler check failed: V-E+F = {v}-{ed}+{f} = {v - ed + f}, "
                f"expected {2 * pieces} for {pieces} connected piece(s)")

    # -- combinatorics ----------------------------------------------------

    @property
    def crossing_count(self):
        return len(self.crossings)

    @cached_property
    def occurrences(self):
        """edge label -> [(crossing, slot), (crossing, slot)] in scan order."""
        occ = {}
        for ci, c in enumerate(self.crossings):
            for s, e in enumerate(c):
                occ.setdefault(e, []).append((ci, s))
        return occ

    @cached_property
    def edges(self):
        return tuple(sorted(self.occurrences))

    @cached_property
    def loop_labels(self):
        top = max(self.edges, default=0)
        return tuple(top + k for k in range(1, self.loops + 1))

    def other_end(self, ci, s):
        a, b = self.occurrences[self.crossings[ci][s]]
        return b if a == (ci, s) else a

    @cached_property
    def piece_count(self):
        """Connected pieces of the 4-valent graph (ignoring free loops)."""
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (a, _), (b, _) in self.occurrences.values():
            parent[find(a)] = find(b)
        return len({find(i) for i in range(len(self.crossings))})

    @cached_property
    def faces(self):
        """Faces as tuples of darts; dart (c, s) leaves crossing c through slot s.

        Each face is the region on the left of its darts.
        """
        seen = set()
        faces = []
        for ci in range(len(self.crossings)):
            for s in range(4):
                if (ci, s) in seen:
                    continue
                face = []
                d = (ci, s)
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    c2, s2 = self.other_end(*d)
                    d = (c2, (s2 - 1) % 4)
                faces.append(tuple(face))
        return tuple(faces)

    @cached_property
    def dart_face(self):
        return {d: fi for fi, face in enumerate(self.faces) for d in face}

    @cached_property
    def _orientation(self):
        """(tail, head) occurrence per edge, and component edge cycles."""
        tail, head = {}, {}
        components = []
        done = set()
        for e in self.edges:
            if e in done:
                continue
            first = self.occurrences[e][0]
            cycle = []  # darts in traversal order
            d = first
            while True:
                cycle.append(d)
                done.add(self.crossings[d[0]][d[1]])
                c2, s2 = self.other_end(*d)
                d = (c2, (s2 + 2) % 4)
                if d == first:
                    break
            # dart d leaves via slot s: forward if slot 2 ever appears as a
            # tail, reversed if slot 0 appears as a tail
            fwd = rev = False
            for ci, s in cycle:
                c2, s2 = self.other_end(ci, s)
                if s == 2 or s2 == 0:
                    fwd = True
                if s == 0 or s2 == 2:
                    rev = True
            if fwd and rev:
                raise DiagramError(
                    f"inconsistent under-strand directions on component of edge {e}")
            if not fwd and not rev and self.braid is not None:
                # over-only component of a braid closure: follow the braid,
                # whose letters leave through slots 1, 2 (positive) or 2, 3
                ci, s = cycle[0]
                outs = (1, 2) if self.braid.letters[ci] > 0 else (2, 3)
                rev = s not in outs
            if rev:
                cycle = [self.other_end(ci, s) for ci, s in reversed(cycle)]
            # any other unforced (over-only) component keeps its lowest edge
            # leaving its first slot
            comp = []
            for ci, s in cycle:
                lab = self.crossings[ci][s]
                tail[lab] = (ci, s)
                head[lab] = self.other_end(ci, s)
                comp.append(lab)
            components.append(tuple(comp))
        return tail, head, tuple(components)

    def render(self):
        lines = [f"X {a} {b} {c} {d}" for a, b, c, d in self.crossings]
        if self.loops and (self.crossings or self.loops > 1):
            lines.append(f"# loops {self.loops}")
        return "\n".join(lines)

    def canonical_code(self):
        """Relabeling-invariant code: equal codes mean the same labelled
        planar diagram up to renaming edges, reordering crossings and
        reversing strands."""
        return canonical_code(self)

    def mirror(self):
        return mirror(self)


def parse_pd(text):
    """Parse ``X a b c d`` crossings separated by newlines or ``/``.

    ``#`` starts a comment; the comment ``# loops k`` records k extra
    crossingless components.  Empty input is the 0-crossing unknot.
    """
    crossings = []
    loops = 0
    for raw_line in text.splitlines():
        line, _, comment = raw_line.partition("#")
        ctoks = comment.split()
        if len(ctoks) == 2 and ctoks[0] == "loops":
            loops += int(ctoks[1])
        for chunk in line.split("/"):
            toks = chunk.replace(",", " ").replace("[", " ").replace("]", " ").split()
            if not toks:
                continue
            if toks[0].upper() != "X":
                raise DiagramError(f"expected 'X a b c d', got {chunk.strip()!r}")
            if len(toks) != 5:
                raise DiagramError(f"crossing needs 4 edge labels: {chunk.strip()!r}")
            try:
                crossings.append(tuple(int(t) for t in toks[1:]))
            except ValueError:
                raise DiagramError(f"non-integer edge label in {chunk.strip()!r}") from None
    return PlanarDiagram(tuple(crossings), loops)


def _coded_from(d, start):
    """Relabel edges along strands from port ``start`` (leaving its crossing).

    Components after the first start at the counterclockwise neighbour port
    of the earliest labelled edge that still touches an unlabelled edge.
    """
    label = {}
    entry = []  # port through which each labelled edge enters its head
    port = start
    while True:
        ci, s = port
        e = d.crossings[ci][s]
        if e in label:
            # component closed; look for the next untouched strand
            port = None
            for ent in entry:
                cj, sj = ent
                for k in (1, 3):
                    cand = (cj, (sj + k) % 4)
                    if d.crossings[cj][cand[1]] not in label:
                        port = cand
                        break
                if port:
                    break
            if port is None:
                break
            continue
        label[e] = len(label) + 1
        nxt = d.other_end(ci, s)
        entry.append(nxt)
        port = (nxt[0], (nxt[1] + 2) % 4)
    if len(label) != len(d.edges):
        return None
    rows = []
    for c in d.crossings:
        t = tuple(label[e] for e in c)
        rows.append(min(t, t[2:] + t[:2]))
    return tuple(sorted(rows))


def canonical_code(d):
    if not d.crossings:
        return (d.loops, ())
    if d.piece_count > 1:
        # split diagrams are only identified when literally equal
        return (d.loops, "split", d.crossings)
    best = None
    # under/over is preserved by isomorphisms, so under ports suffice as starts
    for ci in range(len(d.crossings)):
        for s in (0, 2):
            code = _coded_from(d, (ci, s))
            if best is None or code < best:
                best = code
    return (d.loops, best)


def mirror(d):
    """Reverse every crossing."""
    od = orient(d)
    out = []
    for ci, (a, b, c, dd) in enumerate(d.crossings):
        out.append((dd, a, b, c) if od.signs[ci] > 0 else (b, c, dd, a))
    braid = d.braid.mirror() if d.braid is not None else None
    return PlanarDiagram(tuple(out), d.loops, closure_arcs=d.closure_arcs, braid=braid)


@dataclass(frozen=True)
class OrientedDiagram:
    base: PlanarDiagram
    tail: dict
    head: dict
    signs: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def writhe(self):
        return sum(self.signs)

    @property
    def component_count(self):
        return len(self.components) + self.base.loops

    @cached_property
    def edge_component(self):
        return {e: k for k, comp in enumerate(self.components) for e in comp}

    @cached_property
    def loop_edges(self):
        return self.base.loop_labels

    def all_edges(self):
        return self.base.edges + self.base.loop_labels

    def left_face(self, e):
        if e in self.base.loop_labels:
            return ("loopL", e)
        return self.base.dart_face[self.tail[e]]

    def right_face(self, e):
        if e in self.base.loop_labels:
            return ("loopR", e)
        return self.base.dart_face[self.head[e]]

    def face_of(self, e, side):
        return self.left_face(e) if side == "L" else self.right_face(e)

    @cached_property
    def face_boundary(self):
        """face id -> sorted list of (edge, side) pairs bounding it."""
        out = {}
        for e in self.all_edges():
            out.setdefault(self.left_face(e), []).append((e, "L"))
            out.setdefault(self.right_face(e), []).append((e, "R"))
        return {f: sorted(v) for f, v in out.items()}

    def is_over(self, ci, slot):
        return slot % 2 == 1


def orient(d):
    # braid metadata is ignored by equality but steers orientation and
    # pinch sites, so it is part of the cache key
    return _orient(d, d.braid, d.closure_arcs)


@lru_cache(maxsize=4096)
def _orient(d, braid, arcs):
    tail, head, comps = d._orientation
    signs = []
    for ci, c in enumerate(d.crossings):
        signs.append(1 if head[c[3]] == (ci, 3) else -1)
    return OrientedDiagram(d, tail, head, tuple(signs), comps)


# -- rewiring / reassembly ----------------------------------------------------


class Rewiring:
    """Mutable port graph used to rebuild PD codes after local surgery.

    Real crossing ports are tokens ``("x", node, slot)``; slots 0 and 2 of
    every node carry the under-strand (in either direction).  Pseudo tokens
    pass straight through their partner in ``through``.
    """

    def __init__(self, d=None):
        self.nodes = {}      # node id -> True (insertion order = priority)
        self.wire = {}
        self.through = {}
        self.free_loops = 0
        self._fresh = 0
        if d is not None:
            for ci in range(d.crossing_count):
                self.nodes[ci] = True
            for e, ((a, sa), (b, sb)) in d.occurrences.items():
                self.connect(("x", a, sa), ("x", b, sb))
            self.free_loops = d.loops

    def fresh(self, tag="j"):
        self._fresh += 1
        return (tag, self._fresh)

    def new_node(self):
        nid = ("n", self._fresh + 1)
        self._fresh += 1
        self.nodes[nid] = True
        return nid

    def joint(self):
        """A pass-through pseudo node; returns its two port tokens."""
        j = self.fresh()
        a, b = ("p", j, 0), ("p", j, 1)
        self.through[a] = b
        self.through[b] = a
        return a, b

    def connect(self, a, b):
        if a in self.wire or b in self.wire:
            raise DiagramError(f"port already wired: {a if a in self.wire else b}")
        self.wire[a] = b
        self.wire[b] = a

    def disconnect(self, a):
        b = self.wire.pop(a)
        del self.wire[b]
        return b

    def remove_node(self, n):
        """Replace a crossing by two straight pass-throughs."""
        del self.nodes[n]
        for s in range(4):
            self.through[("x", n, s)] = ("x", n, (s + 2) % 4)

    def _is_real(self, tok):
        return tok[0] == "x" and tok[1] in self.nodes

    def _walk(self, tok):
        """Follow wires from real port ``tok`` to the next real port."""
        w = self.wire[tok]
        steps = 0
        while not self._is_real(w):
            w = self.wire[self.through[w]]
            steps += 1
            if steps > len(self.wire) + 2:
                raise DiagramError("unterminated wire chain")
        return w

    def assemble(self, prefer=()):
        """Build the PD code.

        ``prefer`` lists real ports to be used as outgoing darts when choosing
        component orientations; edges are labelled consecutively along each
        component in traversal order.
        """
        order = list(self.nodes)
        starts = [p for p in prefer if self._is_real(p)]
        starts += [("x", n, s) for n in order for s in (2, 0, 1, 3)]
        label = {}
        incoming = {}
        next_label = 1
        for st in starts:
            if st in label:
                continue
            tok = st
            while tok not in label:
                end = self._walk(tok)
                label[tok] = label[end] = next_label
                incoming[tok] = False
                incoming[end] = True
                next_label += 1
                tok = ("x", end[1], (end[2] + 2) % 4)
        loops = self.free_loops + self._pseudo_cycles()
        out = []
        for n in order:
            labs = [label[("x", n, s)] for s in range(4)]
            if incoming[("x", n, 0)]:
                out.append(tuple(labs))
            else:
                out.append((labs[2], labs[3], labs[0], labs[1]))
        return PlanarDiagram(tuple(out), loops)

    def _pseudo_cycles(self):
        visited = set()
        count = 0
        for tok in list(self.wire):
            if self._is_real(tok) or tok in visited:
                continue
            # walk in the direction of wire first; cycles never reach a real port
            cur = tok
            closed = True
            while True:
                visited.add(cur)
                w = self.wire[cur]
                visited.add(w)
                if self._is_real(w):
                    closed = False
                    break
                cur = self.through[w]
                if cur == tok:
                    break
                if self._is_real(cur):
                    closed = False
                    break
            if closed:
                count += 1
        return count

"""Seifert circles, Vogel moves, braid reading and Seifert matrices.

A general diagram is first brought to closed-braid form by Vogel moves
(Reidemeister II moves between incoherent edges of distinct Seifert circles
sharing a face).  Seifert's algorithm on the closed braid gives a surface of
stacked disks joined by half-twisted bands, whose first homology has one
generator per pair of consecutive letters on the same generator.
"""

from __future__ import annotations

from .braid import BraidWord
from .diagram import DiagramError, orient
from .matrices import IntMatrix
from .surgery import finger_move


def _smooth_out(sign, slot):
    """Outgoing slot joined to incoming ``slot`` by the oriented smoothing."""
    if sign > 0:
        return {0: 1, 3: 2}[slot]
    return {0: 3, 1: 2}[slot]


def seifert_circles(od):
    """Seifert circles as tuples of edges in orientation order."""
    d = od.base
    seen = set()
    circles = []
    for e in d.edges:
        if e in seen:
            continue
        circ = []
        cur = e
        while cur not in seen:
            seen.add(cur)
            circ.append(cur)
            ci, s = od.head[cur]
            out = _smooth_out(od.signs[ci], s)
            cur = d.crossings[ci][out]
        circles.append(tuple(circ))
    return circles


def _circle_index(circles):
    return {e: k for k, c in enumerate(circles) for e in c}


def find_defect(od):
    """First face containing edges of two different Seifert circles that run
    the same way around it.  Returns (edge1, side1, edge2) or None."""
    d = od.base
    circ = _circle_index(seifert_circles(od))
    for face in d.faces:
        entries = []
        for ci, s in face:
            e = d.crossings[ci][s]
            entries.append((e, od.tail[e] == (ci, s)))
        for x in range(len(entries)):
            e1, agree1 = entries[x]
            for y in range(x + 1, len(entries)):
                e2, agree2 = entries[y]
                if agree1 == agree2 and circ[e1] != circ[e2]:
                    return e1, ("L" if agree1 else "R"), e2
    return None


def vogel_braid_form(d, max_moves=None):
    """Apply Vogel moves until the diagram is a closed braid."""
    od = orient(d)
    n_circ = len(seifert_circles(od))
    limit = max_moves if max_moves is not None else 4 * (d.crossing_count + 4) + 16
    for _ in range(limit):
        defect = find_defect(od)
        if defect is None:
            return od
        e1, side, e2 = defect
        nd = finger_move(od, e1, side, [(e2, "over")])
        od = orient(nd)
        if len(seifert_circles(od)) != n_circ:
            raise DiagramError("Vogel move changed the Seifert circle count")
    raise DiagramError("Vogel algorithm did not terminate within its move budget")


def read_braid(od):
    """Braid word of a diagram in closed-braid form (no Vogel defects)."""
    d = od.base
    if d.crossing_count == 0:
        return BraidWord(max(d.loops, 1))
    if d.loops:
        raise DiagramError("braid reading needs a diagram without free loops")
    circles = seifert_circles(od)
    cidx = _circle_index(circles)
    n = len(circles)
    adj = {k: set() for k in range(n)}
    for ci, c in enumerate(d.crossings):
        a, b = cidx[c[0]], cidx[c[2]]
        # the two under-strand ends lie on different circles at every crossing
        ka = {cidx[e] for e in c}
        if len(ka) != 2:
            raise DiagramError("crossing does not join two Seifert circles")
        x, y = sorted(ka)
        adj[x].add(y)
        adj[y].add(x)
    ends = [k for k in range(n) if len(adj[k]) <= 1]
    if any(len(v) > 2 for v in adj.values()) or (n > 1 and len(ends) != 2):
        raise DiagramError("Seifert circles are not coherently nested")
    level = [min(ends)]
    while len(level) < n:
        nxt = [k for k in adj[level[-1]] if k not in level]
        if len(nxt) != 1:
            raise DiagramError("Seifert graph is not a path")
        level.append(nxt[0])
    lev = {k: i for i, k in enumerate(level)}
    # cut ray: pick an edge on each circle, moving outward face by face
    pure = None
    inner = set(circles[level[0]])
    for fi, face in enumerate(d.faces):
        if all(d.crossings[ci][s] in inner for ci, s in face):
            pure = fi
            break
    if pure is None:
        raise DiagramError("innermost Seifert circle bounds no empty face")
    cut = []
    e = circles[level[0]][0]
    prev_face = pure
    for k in range(n):
        if k > 0:
            boundary = [d.crossings[ci][s] for ci, s in d.faces[prev_face]]
            cands = [x for x in boundary if lev[cidx[x]] == k]
            if not cands:
                raise DiagramError("cut ray cannot reach the next Seifert circle")
            e = cands[0]
        cut.append(e)
        lf, rf = od.left_face(e), od.right_face(e)
        prev_face = rf if lf == prev_face else lf
    # crossing sequence on each circle starting after its cut edge
    seqs = []
    for k in range(n):
        circ = circles[level[k]]
        start = circ.index(cut[k])
        order = circ[start:] + circ[:start]
        seqs.append([od.head[x][0] for x in order])
    ptr = [0] * n
    letters = []
    remaining = d.crossing_count
    while remaining:
        for k in range(n - 1):
            if ptr[k] < len(seqs[k]) and ptr[k + 1] < len(seqs[k + 1]) \
                    and seqs[k][ptr[k]] == seqs[k + 1][ptr[k + 1]]:
                ci = seqs[k][ptr[k]]
                letters.append((k + 1) * od.signs[ci])
                ptr[k] += 1
                ptr[k + 1] += 1
                remaining -= 1
                break
        else:
            raise DiagramError("inconsistent crossing order while reading braid")
    return BraidWord(n, tuple(letters))


def diagram_to_braid(d):
    if d.braid is not None:
        return d.braid
    return read_braid(vogel_braid_form(d))


def braid_seifert_matrix(b):
    """Seifert matrix of the closed braid surface (disks + twisted bands)."""
    x = list(b.letters)
    m = len(x)
    nxt = [None] * m
    for i in range(m):
        for j in range(i + 1, m):
            if abs(x[j]) == abs(x[i]):
                nxt[i] = j
                break
    gens = [i for i in range(m) if nxt[i] is not None]
    size = len(gens)
    v = [[0] * size for _ in range(size)]

    def sgn(z):
        return (z > 0) - (z < 0)

    for a, i in enumerate(gens):
        hi = nxt[i]
        for bidx in range(a, size):
            j = gens[bidx]
            hj = nxt[j]
            if i == j:
                v[a][a] = -sgn(x[i] + x[hi])
                continue
            if hi > hj or hi < j:
                continue
            if hi == j:
                if x[j] > 0:
                    v[a][bidx] = 1
                else:
                    v[bidx][a] = -1
                continue
            gi, gj = abs(x[i]), abs(x[j])
            if abs(gi - gj) > 1:
                continue
            if gi - gj == 1:
                v[bidx][a] = -1
            elif gj - gi == 1:
                v[a][bidx] = 1
            else:
                raise AssertionError("interleaved generators on the same strand pair")
    return IntMatrix(v)


def seifert_matrix(od):
    """Seifert matrix of a knot diagram via its closed-braid form."""
    if not hasattr(od, "base"):
        od = orient(od)
    if od.component_count != 1:
        raise DiagramError("Seifert matrix requires a knot diagram")
    if od.base.piece_count > 1:
        raise DiagramError("disconnected diagram: split into pieces first")
    return braid_seifert_matrix(diagram_to_braid(od.base))

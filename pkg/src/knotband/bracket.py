"""Kauffman bracket and Jones polynomial by frontier contraction.

Crossings are absorbed one at a time.  A state is the non-crossing
matching induced on the dangling edge labels by the smoothings chosen so
far; closed loops are folded into the coefficient immediately.  The cost
is governed by the frontier width, not the crossing count.
"""

from __future__ import annotations

from .diagram import orient
from .laurent import LaurentPoly


class ResourceError(RuntimeError):
    """A configured budget (width, crossings, degree, time) was exceeded."""


DELTA = LaurentPoly({2: -1, -2: -1}, "A")


def elimination_order(d):
    """Narrowest of a few sweeps: by braid position, by generator index
    (for closures) and greedy minimal frontier."""
    cands = [_greedy_order(d)]
    if d.braid is not None:
        letters = d.braid.letters
        cands.insert(0, list(range(len(letters))))
        cands.insert(1, sorted(range(len(letters)), key=lambda k: (abs(letters[k]), k)))
    return min(cands, key=lambda o: frontier_width(d, o))


def _greedy_order(d):
    n = d.crossing_count
    occ = d.occurrences
    frontier = set()
    order = []
    remaining = set(range(n))
    while remaining:
        best = None
        for ci in sorted(remaining):
            labels = d.crossings[ci]
            new_front = set(frontier)
            for e in labels:
                if e in new_front:
                    new_front.discard(e)
                else:
                    (a, _), (b, _) = occ[e]
                    if a == b:
                        continue
                    new_front.add(e)
            # tie-break on crossings touching the current frontier
            touch = -sum(1 for e in labels if e in frontier)
            key = (len(new_front), touch, ci)
            if best is None or key < best[0]:
                best = (key, ci, new_front)
        _, ci, frontier = best
        remaining.discard(ci)
        order.append(ci)
    return order


def frontier_width(d, order=None):
    order = elimination_order(d) if order is None else order
    occ = d.occurrences
    frontier = set()
    width = 0
    for ci in order:
        for e in d.crossings[ci]:
            (a, _), (b, _) = occ[e]
            if a == b:
                continue
            if e in frontier:
                frontier.discard(e)
            else:
                frontier.add(e)
        width = max(width, len(frontier))
    return width


def _absorb(matching, pairs):
    """Join a matching (dict label->label over dangling labels) with the two
    smoothing arcs of a crossing.  Returns (new matching, loops closed)."""
    arcs = [(a, b) for a, b in matching.items() if a < b]
    arcs.extend(pairs)
    inc = {}
    for k, (x, y) in enumerate(arcs):
        inc.setdefault(x, []).append(k)
        inc.setdefault(y, []).append(k)
    used = [False] * len(arcs)
    new = {}

    def walk(label, k):
        # follow arcs from label starting along arc k; return the final label
        while True:
            used[k] = True
            x, y = arcs[k]
            label = y if x == label else x
            nxt = [j for j in inc[label] if not used[j]]
            if not nxt:
                return label
            k = nxt[0]

    for label, ks in inc.items():
        if len(ks) == 1 and not used[ks[0]]:
            end = walk(label, ks[0])
            new[label] = end
            new[end] = label
    loops = 0
    for k in range(len(arcs)):
        if not used[k]:
            walk(arcs[k][0], k)
            loops += 1
    return new, loops


def kauffman_bracket(d, max_width=24, order=None):
    """Normalized bracket <D> with the 0-crossing unknot mapping to 1."""
    order = elimination_order(d) if order is None else list(order)
    width = frontier_width(d, order)
    if width > max_width:
        raise ResourceError(f"bracket frontier width {width} exceeds budget {max_width}")
    states = {(): LaurentPoly.const(1, "A")}
    loop_powers = {0: LaurentPoly.const(1, "A")}

    def delta_pow(k):
        if k not in loop_powers:
            loop_powers[k] = DELTA ** k
        return loop_powers[k]

    for ci in order:
        a, b, c, dd = d.crossings[ci]
        smoothings = (
            (LaurentPoly.monomial(1, 1, "A"), ((a, b), (c, dd))),
            (LaurentPoly.monomial(-1, 1, "A"), ((a, dd), (b, c))),
        )
        nxt = {}
        for key, coeff in states.items():
            matching = dict(key)
            for weight, pairs in smoothings:
                new, loops = _absorb(matching, pairs)
                nkey = tuple(sorted(new.items()))
                term = coeff * weight
                if loops:
                    term = term * delta_pow(loops)
                nxt[nkey] = nxt[nkey] + term if nkey in nxt else term
        states = {k: v for k, v in nxt.items() if not v.is_zero()}
    total = LaurentPoly({}, "A")
    for key, coeff in states.items():
        if key:
            raise AssertionError("bracket contraction left dangling edges")
        total = total + coeff
    # each closed loop contributed delta; normalize unknot -> 1
    total = total * delta_pow(d.loops) if d.loops else total
    return total.exact_div(DELTA)


def bracket_state_sum(d):
    """Brute-force bracket over all 2^n smoothings (oracle, small n only)."""
    n = d.crossing_count
    if n > 16:
        raise ResourceError("state-sum oracle limited to 16 crossings")
    total = LaurentPoly({}, "A")
    for mask in range(1 << n):
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        a_count = 0
        for ci, (a, b, c, dd) in enumerate(d.crossings):
            if mask >> ci & 1:
                a_count += 1
                union(a, b)
                union(c, dd)
            else:
                union(a, dd)
                union(b, c)
        loops = len({find(e) for e in d.edges}) + d.loops
        total = total + LaurentPoly.monomial(2 * a_count - n, 1, "A") * DELTA ** (loops - 1)
    return total


def jones(od, max_width=24):
    """Jones polynomial in powers of t^(1/2), via V = (-A^3)^(-w) <D>, t = A^-4."""
    if not hasattr(od, "base"):
        od = orient(od)
    br = kauffman_bracket(od.base, max_width=max_width)
    w = od.writhe
    f = LaurentPoly.monomial(-3 * w, (-1) ** (w % 2), "A") * br
    coeffs = {}
    for e, c in f.terms():
        # A^e = t^(-e/4) = sqrt_t^(-e/2)
        if e % 2:
            raise AssertionError("odd power of A in writhe-normalized bracket")
        coeffs[-e // 2] = c
    out = LaurentPoly(coeffs, "sqrt_t")
    if od.component_count == 1 and any(e % 2 for e in coeffs):
        raise AssertionError("half-integer exponent in Jones polynomial of a knot")
    return out

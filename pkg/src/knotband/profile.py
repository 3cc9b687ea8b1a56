"""Invariant profiles: the pruning and certification record of a knot."""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .alexander import normalize_alexander
from .bracket import ResourceError, jones
from .diagram import DiagramError, orient
from .laurent import LaurentPoly
from .matrices import bareiss_det, linear_pencil_det, signature
from .seifert import seifert_matrix
from .simplify import simplify

FOX_MILNOR_MAX_DEGREE = 40


class ConsistencyError(AssertionError):
    """Internal cross-check failed; indicates an implementation bug."""


def alexander_from_seifert(v):
    """det(V - t V^T), normalized."""
    vt = v.transpose().rows
    a = [list(r) for r in v.rows]
    b = [[-x for x in r] for r in vt]
    return normalize_alexander(linear_pencil_det(a, b))


def arf_from_determinant(det):
    return 0 if det % 8 in (1, 7) else 1


def symmetrized_invariants(od, v=None):
    """(determinant, signature, Arf) from V + V^T."""
    if v is None:
        v = seifert_matrix(od)
    sym = v.symmetrized()
    det = abs(bareiss_det(sym.rows))
    return det, signature(sym.rows), arf_from_determinant(det)


def _reciprocal(coeffs):
    return list(reversed(coeffs))


def fox_milnor_test(delta):
    """True iff delta = +-t^k f(t) f(1/t) for some integer polynomial f.

    Factors over Z; self-reciprocal irreducible factors must pair with
    themselves (even multiplicity), others with their reciprocals, and the
    content must be a square.  The assembled f is verified by multiplication.
    """
    coeffs = delta.to_poly_coeffs()
    if not coeffs:
        return False
    if len(coeffs) - 1 > FOX_MILNOR_MAX_DEGREE:
        raise ResourceError(f"Fox-Milnor factorization limited to degree {FOX_MILNOR_MAX_DEGREE}")
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="ZZ")
    content, factors = poly.factor_list()
    content = abs(int(content))
    root = sympy.integer_nthroot(content, 2)
    if not root[1]:
        return False
    pool = {}
    for fac, mult in factors:
        c = [int(a) for a in reversed(fac.all_coeffs())]  # ascending
        if c[-1] < 0:
            c = [-a for a in c]
        pool[tuple(c)] = pool.get(tuple(c), 0) + mult

    def canon(c):
        c = list(c)
        while c and c[0] == 0:
            c.pop(0)
        if c[-1] < 0:
            c = [-a for a in c]
        return tuple(c)

    half = LaurentPoly.const(root[0], "t")
    for c in sorted(pool):
        mult = pool[c]
        if mult == 0:
            continue
        rc = canon(_reciprocal(c))
        fpoly = LaurentPoly.from_list(list(c), 0, "t")
        if rc == c:
            if mult % 2:
                return False
            half = half * fpoly ** (mult // 2)
            pool[c] = 0
        else:
            partner = pool.get(rc, 0)
            if partner != mult:
                return False
            half = half * fpoly ** mult
            pool[c] = 0
            pool[rc] = 0
    prod = half * half.invert()
    return normalize_alexander(prod) == normalize_alexander(delta)


@dataclass(frozen=True)
class InvariantProfile:
    determinant: int
    signature: int
    arf: int
    alexander: LaurentPoly
    jones: LaurentPoly
    fox_milnor: bool
    crossings: int = 0

    FIELDS = ("determinant", "signature", "arf", "alexander", "jones", "fox_milnor", "crossings")

    def render(self):
        return "\n".join([
            f"determinant: {self.determinant}",
            f"signature: {self.signature}",
            f"arf: {self.arf}",
            f"alexander: {self.alexander.render()}",
            f"jones: {self.jones.render()}",
            f"fox_milnor: {'true' if self.fox_milnor else 'false'}",
            f"crossings: {self.crossings}",
        ])

    @classmethod
    def parse(cls, text):
        vals = {}
        for line in text.splitlines():
            if ":" not in line:
                continue
            k, _, v = line.partition(":")
            vals[k.strip()] = v.strip()
        return cls(
            determinant=int(vals["determinant"]),
            signature=int(vals["signature"]),
            arf=int(vals["arf"]),
            alexander=LaurentPoly.parse(vals["alexander"], "t"),
            jones=LaurentPoly.parse(vals["jones"], "sqrt_t"),
            fox_milnor=vals["fox_milnor"] == "true",
            crossings=int(vals.get("crossings", 0)),
        )

    def mirror(self):
        return InvariantProfile(self.determinant, -self.signature, self.arf,
                                self.alexander, self.jones.invert(), self.fox_milnor,
                                self.crossings)

    def knot_fields(self):
        """Everything except the source crossing count."""
        return (self.determinant, self.signature, self.arf, self.alexander,
                self.jones, self.fox_milnor)

    def matches(self, other):
        return self.knot_fields() == other.knot_fields()


def invariant_profile(od, max_width=24):
    if not hasattr(od, "base"):
        od = orient(od)
    if od.component_count != 1:
        raise DiagramError("invariant profiles are defined for knots only")
    src = od.base.crossing_count
    small = simplify(od.base)
    sod = orient(small)
    v = seifert_matrix(sod)
    det, sig, arf = symmetrized_invariants(sod, v)
    alex = alexander_from_seifert(v)
    jon = jones(sod, max_width=max_width)
    if det != abs(alex.evaluate(-1)):
        raise ConsistencyError(f"determinant {det} != |Delta(-1)| = {abs(alex.evaluate(-1))}")
    if det % 2 != 1:
        raise ConsistencyError(f"knot determinant {det} is even")
    if sig % 2:
        raise ConsistencyError(f"knot signature {sig} is odd")
    if alex.evaluate(1) != 1 or not alex.is_palindromic():
        raise ConsistencyError(f"Alexander polynomial {alex} is not normalized")
    if jon.evaluate(1) != 1:
        raise ConsistencyError(f"Jones polynomial {jon} does not evaluate to 1 at t = 1")
    fm = fox_milnor_test(alex)
    return InvariantProfile(det, sig, arf, alex, jon, fm, src)

"""Alexander polynomials: normalization, reduced Burau, Wirtinger, torus closed forms."""

from __future__ import annotations

from math import gcd

from .braid import BraidError, braid_permutation
from .laurent import LaurentPoly
from .matrices import bareiss_det, linear_pencil_det, poly_det

T = LaurentPoly.monomial(1, 1, "t")
ONE = LaurentPoly.const(1, "t")
ZERO = LaurentPoly({}, "t")


def normalize_alexander(p):
    """Multiply by +-t^k so that p(t) = p(1/t) and p(1) = 1.

    Polynomials with odd span (links) are shifted to a symmetric half-range
    as closely as possible and made positive at 1 or in the leading term.
    """
    if p.is_zero():
        return p
    p = p.with_var("t")
    lo, hi = p.min_exp(), p.max_exp()
    p = p.shift(-((lo + hi) // 2) if (lo + hi) % 2 == 0 else -((lo + hi + 1) // 2))
    v = p.evaluate(1)
    if v < 0 or (v == 0 and p[p.max_exp()] < 0):
        p = -p
    return p


def _burau_generator(n, i, inverse=False):
    """Reduced Burau matrix of sigma_i^(+-1) on n strands, size n-1."""
    m = n - 1
    mat = [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]
    tinv = LaurentPoly.monomial(-1, 1, "t")
    if m == 1:
        mat[0][0] = -tinv if inverse else -T
        return mat
    k = i - 1  # row of sigma_i
    if not inverse:
        mat[k][k] = -T
        if k > 0:
            mat[k][k - 1] = T
        if k < m - 1:
            mat[k][k + 1] = ONE
    else:
        mat[k][k] = -tinv
        if k > 0:
            mat[k][k - 1] = ONE
        if k < m - 1:
            mat[k][k + 1] = tinv
    return mat


def _matmul(a, b):
    n = len(a)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = ZERO
            for k in range(n):
                if a[r][k] and b[k][c]:
                    acc = acc + a[r][k] * b[k][c]
            row.append(acc)
        out.append(row)
    return out


def burau_matrix(b):
    n = b.strands
    m = n - 1
    acc = [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]
    for x in b.letters:
        acc = _matmul(acc, _burau_generator(n, abs(x), x < 0))
    return acc


def burau_alexander(b):
    """Alexander polynomial of the closure: det(I - B(b)) / (1 + t + ... + t^(n-1))."""
    if braid_permutation(b).cycle_count() != 1:
        raise BraidError("closure of the braid is not a knot")
    n = b.strands
    if n == 1:
        return ONE
    bm = burau_matrix(b)
    m = n - 1
    diff = [[(ONE if r == c else ZERO) - bm[r][c] for c in range(m)] for r in range(m)]
    det = poly_det(diff)
    denom = LaurentPoly({k: 1 for k in range(n)}, "t")
    return normalize_alexander(det.exact_div(denom))


def wirtinger_matrix(od):
    """Integer coefficient pair (A0, A1) with Alexander matrix A0 + t*A1.

    Generators are over-arcs; each crossing gives the Fox-derivative row.
    """
    d = od.base
    parent = {e: e for e in d.edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        parent[find(c[1])] = find(c[3])
    arcs = sorted({find(e) for e in d.edges})
    index = {a: k for k, a in enumerate(arcs)}
    n = d.crossing_count
    if len(arcs) != n:
        raise ValueError("Wirtinger presentation needs every component to pass under")
    a0 = [[0] * n for _ in range(n)]
    a1 = [[0] * n for _ in range(n)]
    for r, c in enumerate(d.crossings):
        k = index[find(c[1])]
        i = index[find(c[0])]
        j = index[find(c[2])]
        a0[r][k] += 1
        a1[r][k] -= 1
        if od.signs[r] > 0:
            a1[r][i] += 1
            a0[r][j] -= 1
        else:
            a0[r][i] -= 1
            a1[r][j] += 1
    return a0, a1


def wirtinger_alexander(od):
    """Alexander polynomial from a first minor of the Wirtinger matrix."""
    if od.base.crossing_count == 0:
        return ONE
    a0, a1 = wirtinger_matrix(od)
    n = len(a0)
    m0 = [row[: n - 1] for row in a0[: n - 1]]
    m1 = [row[: n - 1] for row in a1[: n - 1]]
    return normalize_alexander(linear_pencil_det(m0, m1))


def wirtinger_determinant(od):
    """|Delta(-1)| from the Wirtinger minor evaluated at t = -1 (cheap)."""
    if od.base.crossing_count == 0:
        return 1
    a0, a1 = wirtinger_matrix(od)
    n = len(a0)
    return abs(bareiss_det([[a0[i][j] - a1[i][j] for j in range(n - 1)] for i in range(n - 1)]))


def _check_torus(p, q):
    if p < 2 or q < 2:
        raise ValueError(f"torus parameters must be >= 2, got ({p},{q})")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) = {gcd(p, q)} != 1: not a knot")


def torus_closed_forms(p, q):
    """(Alexander, Jones, genus) of the positive torus knot T(p,q)."""
    _check_torus(p, q)

    def tpow(k):
        return LaurentPoly.monomial(k, 1, "t")

    num = (tpow(p * q) - 1) * (T - 1)
    den = (tpow(p) - 1) * (tpow(q) - 1)
    alex = normalize_alexander(num.exact_div(den))
    genus = (p - 1) * (q - 1) // 2
    vnum = (ONE - tpow(p + 1) - tpow(q + 1) + tpow(p + q)).shift(genus)
    vjones = vnum.exact_div(ONE - tpow(2))
    jones = vjones.substitute_power(2, "sqrt_t")
    return alex, jones, genus

"""Exact integer and polynomial matrix routines."""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly


class IntMatrix:
    """Square arbitrary-precision integer matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [list(map(int, r)) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("IntMatrix must be square")
        self.rows = rows

    @classmethod
    def zeros(cls, n):
        return cls([[0] * n for _ in range(n)])

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self):
        n = self.size
        return IntMatrix([[self.rows[j][i] for j in range(n)] for i in range(n)])

    def __add__(self, other):
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"IntMatrix({self.rows})"

    def symmetrized(self):
        return self + self.transpose()


def bareiss_det(rows):
    """Fraction-free determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def signature(rows):
    """Signature of a symmetric integer matrix by exact congruence reduction."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("signature requires a symmetric matrix")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active
                         if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes the diagonal entry 2*m[i][j]
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            piv = i
        p = m[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = m[i][piv] / p
            if f:
                for k in active:
                    m[i][k] -= f * m[piv][k]
        for i in active:
            m[i][piv] = m[piv][i] = Fraction(0)
    return pos - neg


def linear_pencil_det(a, b, var="t"):
    """det(a + t*b) for integer matrices a, b, as a polynomial in t.

    Kronecker substitution: one Bareiss determinant at t = B, where B exceeds
    twice the Hadamard-type bound on every coefficient, then the balanced
    base-B digits of the value are the coefficients.
    """
    n = len(a)
    if n == 0:
        return LaurentPoly.const(1, var)
    bound = 1
    for i in range(n):
        bound *= sum(abs(x) + abs(y) for x, y in zip(a[i], b[i])) or 1
    base = 2 * bound + 1
    value = bareiss_det([[a[i][j] + base * b[i][j] for j in range(n)] for i in range(n)])
    coeffs = []
    while value:
        r = value % base
        if r > bound:
            r -= base
        coeffs.append(r)
        value = (value - r) // base
    return LaurentPoly.from_list(coeffs, 0, var)


def poly_det(rows):
    """Fraction-free determinant of a matrix of LaurentPoly entries."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return LaurentPoly.const(1)
    var = m[0][0].var
    sign = 1
    prev = LaurentPoly.const(1, var)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly({}, var)
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - mik * m[k][j]).exact_div(prev)
            m[i][k] = LaurentPoly({}, var)
        prev = piv
    return m[n - 1][n - 1] * sign

"""Exact integer Laurent polynomials in a single variable.

The variable tag is one of ``"A"`` (Kauffman bracket), ``"t"`` (Alexander)
or ``"sqrt_t"`` (Jones; exponents count powers of t^(1/2)).
"""

from __future__ import annotations

from fractions import Fraction

VARIABLES = ("A", "t", "sqrt_t")


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs=None, var="t"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        clean = {}
        for exp, c in (coeffs or {}).items():
            if c:
                clean[int(exp)] = int(c)
        self._coeffs = clean
        self.var = var

    @classmethod
    def const(cls, c, var="t"):
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exp, c=1, var="t"):
        return cls({exp: c}, var)

    @classmethod
    def from_list(cls, coeffs, low=0, var="t"):
        """Coefficients listed in ascending degree order starting at ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def terms(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def is_zero(self):
        return not self._coeffs

    def min_exp(self):
        return min(self._coeffs) if self._coeffs else 0

    def max_exp(self):
        return max(self._coeffs) if self._coeffs else 0

    def span(self):
        return self.max_exp() - self.min_exp()

    def __getitem__(self, exp):
        return self._coeffs.get(exp, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.var == other.var and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.var, tuple(self.terms())))

    def __bool__(self):
        return bool(self._coeffs)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.var != self.var and not (other.is_zero() or self.is_zero()):
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._coeffs) != 1:
                raise ValueError("negative powers only for monomials")
            (e, c), = self._coeffs.items()
            if c not in (1, -1):
                raise ValueError("negative powers only for unit monomials")
            return LaurentPoly({e * n: c ** (-n)}, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by var^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()}, self.var)

    def divmod(self, divisor):
        """Long division treating both as polynomials after shifting.

        Returns (quotient, remainder) with self = quotient*divisor + remainder.
        Raises ValueError if a non-integral quotient coefficient appears.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._coeffs)
        quot = {}
        dlead = divisor.max_exp()
        dlow = divisor.min_exp()
        lc = divisor[dlead]
        while rem:
            top = max(rem)
            if top - dlead < self.min_exp() - dlow:
                break
            c = rem[top]
            q, r = divmod(c, lc)
            if r:
                raise ValueError("non-integral quotient in Laurent division")
            shift = top - dlead
            quot[shift] = q
            for e, dc in divisor._coeffs.items():
                v = rem.get(e + shift, 0) - q * dc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return LaurentPoly(quot, self.var), LaurentPoly(rem, self.var)

    def exact_div(self, divisor):
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {divisor}")
        return q

    def __floordiv__(self, other):
        return self.exact_div(other)

    # -- transformations --------------------------------------------------

    def substitute_power(self, k, var=None):
        """Replace var by var^k (k may be negative)."""
        return LaurentPoly({e * k: c for e, c in self._coeffs.items()}, var or self.var)

    def invert(self):
        """p(x) -> p(1/x)."""
        return self.substitute_power(-1)

    def with_var(self, var):
        return LaurentPoly(self._coeffs, var)

    def evaluate(self, x):
        """Exact value at a rational or integer point."""
        total = Fraction(0)
        x = Fraction(x)
        for e, c in self._coeffs.items():
            total += c * x ** e
        return total.numerator if total.denominator == 1 else total

    def is_palindromic(self):
        """Symmetric under var -> 1/var."""
        return self == self.invert()

    def to_poly_coeffs(self):
        """Ascending coefficient list of the polynomial var^(-min_exp) * self."""
        if self.is_zero():
            return []
        low = self.min_exp()
        return [self[low + i] for i in range(self.span() + 1)]

    # -- rendering --------------------------------------------------------

    def _var_power(self, e):
        if self.var == "sqrt_t":
            if e % 2 == 0:
                return f"t^{e // 2}"
            return f"t^{e}/2"
        return f"{self.var}^{e}"

    def render(self):
        """Canonical text: ascending exponents, explicit signs, e.g. ``2*t^-1 - 5 + 2*t^1``."""
        if not self._coeffs:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = self._var_power(e)
            else:
                body = f"{mag}*{self._var_power(e)}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"LaurentPoly({self.render()!r}, var={self.var!r})"

    @classmethod
    def parse(cls, text, var=None):
        """Inverse of :meth:`render`. Pass ``var="sqrt_t"`` for Jones polynomials."""
        text = text.strip()
        if var is None:
            var = "sqrt_t" if "/2" in text else ("A" if "A^" in text else "t")
        if text == "0":
            return cls({}, var)
        doubled = var == "sqrt_t"
        coeffs = {}
        for tok in text.replace("- ", "-").replace("+ ", "+").split():
            sign = -1 if tok[0] == "-" else 1
            tok = tok.lstrip("+-")
            if not tok:
                raise ValueError(f"malformed polynomial term in {text!r}")
            if not any(ch.isalpha() for ch in tok):
                coeffs[0] = coeffs.get(0, 0) + sign * int(tok)
                continue
            mag, _, power = tok.rpartition("*")
            mag = int(mag) if mag else 1
            exp = power.split("^", 1)[1] if "^" in power else "1"
            if exp.endswith("/2"):
                e = int(exp[:-2])
            else:
                e = int(exp) * (2 if doubled else 1)
            coeffs[e] = coeffs.get(e, 0) + sign * mag
        return cls(coeffs, var)


def lagrange_integer_poly(points, values):
    """Interpolate an integer polynomial through (x, y) samples exactly.

    Returns ascending coefficients; raises if the interpolant is not integral.
    """
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                nxt[k] -= b * xj
                nxt[k + 1] += b
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            coeffs[k] += b * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("interpolated polynomial is not integral")
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return out

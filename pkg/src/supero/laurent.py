"""Sparse Laurent polynomials in one variable q with exact integer coefficients.

All Kazhdan-Lusztig style data in this package lives in Z[q, q^-1].  The
decomposition polynomials d and the Ext polynomials p end up in Z[q] with
nonnegative exponents, but intermediate bar-involution arithmetic needs
negative powers, so the representation is a dict {exponent: coefficient}
with no zero coefficients stored.
"""

from __future__ import annotations


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial over Z."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, LaurentPolynomial):
            c = dict(coeffs.c)
        elif isinstance(coeffs, int):
            c = {0: coeffs} if coeffs else {}
        else:
            c = {int(e): int(v) for e, v in dict(coeffs).items() if v}
        object.__setattr__(self, "c", c)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def q_power(e, coeff=1):
        return LaurentPolynomial({e: coeff})

    @staticmethod
    def zero():
        return LaurentPolynomial()

    @staticmethod
    def one():
        return LaurentPolynomial(1)

    # -- ring ops ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    del c[e]
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    # -- queries -----------------------------------------------------------

    def coeff(self, e):
        return self.c.get(e, 0)

    def degree(self):
        """Largest exponent (None for the zero polynomial)."""
        return max(self.c) if self.c else None

    def valuation(self):
        """Smallest exponent (None for the zero polynomial)."""
        return min(self.c) if self.c else None

    def is_polynomial(self):
        return all(e >= 0 for e in self.c)

    def is_nonnegative(self):
        return all(v > 0 for v in self.c.values())

    # -- substitutions -----------------------------------------------------

    def bar(self):
        """q -> q^-1."""
        return LaurentPolynomial({-e: v for e, v in self.c.items()})

    def eval_int(self, x):
        """Evaluate at an integer (exponents must be >= 0 unless |x| == 1)."""
        if x in (1, -1):
            return sum(v * (x ** (e % 2)) for e, v in self.c.items())
        total = 0
        for e, v in self.c.items():
            if e < 0:
                raise ValueError("negative exponent at non-unit point")
            total += v * x**e
        return total

    def subs_minus_q(self):
        """q -> -q."""
        return LaurentPolynomial({e: (v if e % 2 == 0 else -v) for e, v in self.c.items()})

    def positive_part(self):
        """Truncation to strictly positive exponents."""
        return LaurentPolynomial({e: v for e, v in self.c.items() if e > 0})

    # -- serialization -----------------------------------------------------

    def pairs(self):
        """Sorted (exponent, coefficient) list, the wire format for tables."""
        return sorted(self.c.items())

    @staticmethod
    def from_pairs(pairs):
        return LaurentPolynomial({int(e): int(v) for e, v in pairs})

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for e, v in sorted(self.c.items()):
            if e == 0:
                terms.append(f"{v}")
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if v == 1:
                    terms.append(mono)
                elif v == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{v}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f"+{t}" if not t.startswith("-") else t
        return out


ZERO = LaurentPolynomial.zero()
ONE = LaurentPolynomial.one()
Q = LaurentPolynomial.q_power(1)

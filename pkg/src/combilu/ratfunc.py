"""Exact rational functions: quotients of MultiPoly values.

Canonical form: any monomial factor common to numerator and
denominator is cancelled, the denominator is primitive (integer
coefficients with gcd 1) with a positive graded-lex leading
coefficient, and zero is 0/1.  When at most one variable actually
occurs, numerator and denominator are additionally reduced by their
polynomial gcd, so equal univariate values have identical
representations.  In the genuinely multivariate case equality is
decided by cross-multiplication instead of full gcd reduction.
"""

from __future__ import annotations

from fractions import Fraction

from combilu.poly import MultiPoly, poly_gcd_univariate


class RatFunc:
    """Immutable element of the rational-function field."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("cannot give a denominator with a RatFunc numerator")
            object.__setattr__(self, "num", num.num)
            object.__setattr__(self, "den", num.den)
            return
        if not isinstance(num, MultiPoly):
            raise TypeError("numerator must be a MultiPoly (or RatFunc)")
        if den is None:
            den = MultiPoly.one(num.vars)
        elif isinstance(den, (int, Fraction)):
            den = MultiPoly.const(num.vars, den)
        num, den = _canonical(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def const(cls, vars, value):
        return cls(MultiPoly.const(vars, value))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.vars != self.vars:
                raise ValueError(f"mixed rings {self.vars} and {other.vars}")
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.vars, other)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.vars != other.vars:
            return False
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def reciprocal(self):
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.den, self.num)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.reciprocal() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def substitute(self, assignments):
        """Specialize variables to exact rationals; the result is re-canonicalized."""
        den = self.den.substitute(assignments)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator vanishes under {assignments}")
        return RatFunc(self.num.substitute(assignments), den)

    def as_fraction(self):
        return self.num.as_fraction() / self.den.as_fraction()

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"{_wrap(self.num)}/{_wrap(self.den)}"

    def latex(self):
        if self.den == 1:
            return self.num.latex()
        return f"\\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def __repr__(self):
        return f"RatFunc({self})"


def _wrap(poly):
    s = str(poly)
    return f"({s})" if len(poly.terms) > 1 else s


def _canonical(num, den):
    if num.vars != den.vars:
        raise ValueError(f"mixed rings {num.vars} and {den.vars}")
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return MultiPoly.zero(num.vars), MultiPoly.one(num.vars)

    # cancel the common monomial factor
    nvars = len(num.vars)
    shift = [min(min(e[i] for e in num.terms), min(e[i] for e in den.terms))
             for i in range(nvars)]
    if any(shift):
        drop = lambda exps: tuple(e - s for e, s in zip(exps, shift))
        num = num.map_exponents(drop)
        den = den.map_exponents(drop)

    # full gcd reduction is affordable and unambiguous only univariately;
    # a single-term side shares at most a monomial, which is already gone
    used = num.effective_vars() | den.effective_vars()
    if len(used) == 1 and len(num.terms) > 1 and len(den.terms) > 1:
        vi = next(iter(used))
        g = poly_gcd_univariate(num, den, vi)
        if g.total_degree() > 0:
            num = num.divexact(g)
            den = den.divexact(g)

    c = den.content()
    if den.leading()[1] < 0:
        c = -c
    if c != 1:
        inv = 1 / c
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den

"""Sparse multivariate polynomials over exact rationals.

A polynomial lives in a ring fixed by an ordered tuple of variable
names.  Terms are stored as a dict mapping exponent tuples (one
nonnegative integer per variable) to nonzero Fraction coefficients, so
equal polynomials always have equal term dicts.  The term order used
for leading terms and printing is graded lexicographic: higher total
degree first, ties broken by the exponent tuple itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact is not."""


def grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial in a fixed variable tuple.

    >>> q = MultiPoly.var(("q",), "q")
    >>> print((1 - q) * (1 + q))
    -q^2 + 1
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=()):
        vars = tuple(vars)
        nvars = len(vars)
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not match variables {vars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = clean.get(exps, Fraction(0)) + Fraction(coeff)
            if coeff:
                clean[exps] = coeff
            else:
                clean.pop(exps, None)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, ())

    @classmethod
    def const(cls, vars, value):
        value = Fraction(value)
        if not value:
            return cls.zero(vars)
        return cls(vars, {(0,) * len(tuple(vars)): value})

    @classmethod
    def one(cls, vars):
        return cls.const(vars, 1)

    @classmethod
    def var(cls, vars, name, power=1):
        return cls.monomial(vars, 1, {name: power})

    @classmethod
    def monomial(cls, vars, coeff, powers):
        """Build coeff * prod(name**e) from a {name: e} mapping."""
        vars = tuple(vars)
        exps = [0] * len(vars)
        for name, e in powers.items():
            try:
                exps[vars.index(name)] = e
            except ValueError:
                raise ValueError(f"unknown variable {name!r} for ring {vars}") from None
        return cls(vars, {tuple(exps): Fraction(coeff)})

    # -- predicates and accessors -------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def as_fraction(self):
        """The value of a constant polynomial as a Fraction."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        vi = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[vi] for e in self.terms)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def effective_vars(self):
        """Indices of variables that actually occur."""
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        return used

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"mixed rings {self.vars} and {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.vars, other)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = merged.get(exps, Fraction(0)) + coeff
            if new:
                merged[exps] = new
            else:
                merged.pop(exps, None)
        return MultiPoly(self.vars, merged)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

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
        prod = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = prod.get(e, Fraction(0)) + c1 * c2
                if new:
                    prod[e] = new
                else:
                    prod.pop(e, None)
        return MultiPoly(self.vars, prod)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        """Multiply every coefficient by the nonzero rational c."""
        c = Fraction(c)
        if not c:
            return MultiPoly.zero(self.vars)
        return MultiPoly(self.vars, {e: k * c for e, k in self.terms.items()})

    def divexact(self, other):
        """Exact quotient self / other; raises ExactDivisionError otherwise.

        Repeatedly cancels the graded-lex leading term, which succeeds
        whenever other divides self in the polynomial ring.
        """
        other = self._coerce(other)
        if other is None or other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        oexps, ocoeff = other.leading()
        rem = dict(self.terms)
        quot = {}
        while rem:
            exps = max(rem, key=grlex_key)
            qe = tuple(a - b for a, b in zip(exps, oexps))
            if any(e < 0 for e in qe):
                raise ExactDivisionError(f"{other} does not divide {self}")
            qc = rem[exps] / ocoeff
            quot[qe] = quot.get(qe, Fraction(0)) + qc
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(qe, e2))
                new = rem.get(e, Fraction(0)) - qc * c2
                if new:
                    rem[e] = new
                else:
                    rem.pop(e, None)
        return MultiPoly(self.vars, quot)

    # -- structure -----------------------------------------------------

    def content(self):
        """Positive rational c with self/c integral and primitive; 0 for 0."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def substitute(self, assignments):
        """Replace variables by exact rational values ({name: value})."""
        vis = {self.vars.index(name): Fraction(value) for name, value in assignments.items()}
        out = {}
        for exps, coeff in self.terms.items():
            for vi, value in vis.items():
                coeff = coeff * value ** exps[vi]
            e = tuple(0 if i in vis else x for i, x in enumerate(exps))
            new = out.get(e, Fraction(0)) + coeff
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        return MultiPoly(self.vars, out)

    def lift(self, new_vars):
        """Reinterpret in a larger ring containing all current variables."""
        new_vars = tuple(new_vars)
        pos = [new_vars.index(v) for v in self.vars]
        out = {}
        for exps, coeff in self.terms.items():
            e = [0] * len(new_vars)
            for p, x in zip(pos, exps):
                e[p] = x
            out[tuple(e)] = coeff
        return MultiPoly(new_vars, out)

    def coeff_of(self, name, power):
        """Coefficient of name**power, a polynomial in the remaining variables."""
        vi = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        out = {}
        for exps, coeff in self.terms.items():
            if exps[vi] == power:
                e = tuple(x for i, x in enumerate(exps) if i != vi)
                out[e] = coeff
        return MultiPoly(rest, out)

    def map_exponents(self, fn):
        """Apply fn to every exponent tuple (used for square-root encodings)."""
        out = {}
        for exps, coeff in self.terms.items():
            e = tuple(fn(exps))
            if e in out:
                raise ValueError("exponent map is not injective on terms")
            out[e] = coeff
        return MultiPoly(self.vars, out)

    # -- printing --------------------------------------------------------

    def _monomial_str(self, exps, coeff, mul="*", pow_fmt="^{}"):
        parts = []
        if coeff != 1 or not any(exps):
            parts.append(str(coeff))
        for name, e in zip(self.vars, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(name + pow_fmt.format(e))
        return mul.join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self.sorted_terms():
            sign = " - " if coeff < 0 else " + "
            body = self._monomial_str(exps, abs(coeff))
            if not chunks:
                chunks.append(("-" if coeff < 0 else "") + body)
            else:
                chunks.append(sign + body)
        return "".join(chunks)

    def latex(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self.sorted_terms():
            c = abs(coeff)
            if c.denominator == 1:
                body = self._monomial_str(exps, c, mul=" ", pow_fmt="^{{{}}}")
            else:
                frac = f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
                mono = self._monomial_str(exps, 1, mul=" ", pow_fmt="^{{{}}}")
                body = frac if mono == "1" else f"{frac} {mono}"
            if not chunks:
                chunks.append(("-" if coeff < 0 else "") + body)
            else:
                chunks.append((" - " if coeff < 0 else " + ") + body)
        return "".join(chunks)

    def __repr__(self):
        return f"MultiPoly({self.vars!r}, {self})"


def poly_gcd_univariate(a, b, vi):
    """gcd of two polynomials that only use variable index vi.

    Implemented as a primitive pseudo-remainder sequence over the
    integers, which keeps coefficient growth polynomial (plain Euclid
    over Fractions explodes already around degree 100).  The result is
    primitive with positive leading coefficient.
    """
    za = _primitive_int(_dense(a, vi))
    zb = _primitive_int(_dense(b, vi))
    g = _zz_gcd(za, zb)
    exps = [0] * len(a.vars)
    terms = {}
    for i, c in enumerate(g):
        if c:
            exps[vi] = i
            terms[tuple(exps)] = Fraction(c)
    return MultiPoly(a.vars, terms)


def _dense(p, vi):
    if not p.terms:
        return []
    out = [Fraction(0)] * (max(e[vi] for e in p.terms) + 1)
    for exps, coeff in p.terms.items():
        out[exps[vi]] += coeff
    while out and not out[-1]:
        out.pop()
    return out


def _primitive_int(coeffs):
    """Scale a Fraction list to a primitive int list with positive lead."""
    if not coeffs:
        return []
    scale = 1
    for c in coeffs:
        scale = lcm(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _zz_prem(a, b):
    """Pseudo-remainder of integer lists, scaling only when needed."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lead = r[-1]
        if lead % lb:
            r = [c * lb for c in r]
            lead = r[-1]
        q = lead // lb
        off = len(r) - 1 - db
        for i, c in enumerate(b):
            r[off + i] -= q * c
        while r and not r[-1]:
            r.pop()
    return r


def _zz_gcd(a, b):
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zz_prem(a, b)
        if r:
            g = 0
            for c in r:
                g = gcd(g, c)
            if r[-1] < 0:
                g = -g
            r = [c // g for c in r]
        a, b = b, r
    return a

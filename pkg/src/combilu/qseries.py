"""q-Pochhammer symbols, Gaussian q-binomials, and related series.

Everything here is exact: q-binomials are produced by exact division
of q-Pochhammer products, lambda polynomials are built from their
defining sum, and truncated power series carry Fraction coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from combilu.poly import MultiPoly
from combilu.ratfunc import RatFunc

Q_VARS = ("q",)
QZ_VARS = ("q", "z")


class DenominatorVanishesAtZeroError(ArithmeticError):
    """Series expansion needs a denominator with nonzero constant term."""


@cache
def q_pochhammer(k):
    """(q;q)_k = (1-q)(1-q^2)...(1-q^k) as a polynomial in q."""
    if k < 0:
        raise ValueError("q_pochhammer needs k >= 0")
    if k == 0:
        return MultiPoly.one(Q_VARS)
    factor = MultiPoly.one(Q_VARS) - MultiPoly.var(Q_VARS, "q", k)
    return q_pochhammer(k - 1) * factor


@cache
def gauss_binomial(n, k):
    """Gaussian q-binomial: (q;q)_n / ((q;q)_k (q;q)_{n-k}); 0 out of range.

    Computed by exact polynomial division, never by the Pascal-type
    recursion, so the recursion stays available as an independent check.
    """
    if k < 0 or k > n:
        return MultiPoly.zero(Q_VARS)
    return q_pochhammer(n).divexact(q_pochhammer(k) * q_pochhammer(n - k))


@cache
def lambda_poly(j):
    """sum over 0 <= k <= j/2 of gauss(j-k, k) (-1)^k q^(k(k-1)) z^k."""
    if j < 0:
        raise ValueError("lambda_poly needs j >= 0")
    total = MultiPoly.zero(QZ_VARS)
    for k in range(j // 2 + 1):
        sign = -1 if k % 2 else 1
        mono = MultiPoly.monomial(QZ_VARS, sign, {"q": k * (k - 1), "z": k})
        total = total + gauss_binomial(j - k, k).lift(QZ_VARS) * mono
    return total


def schur_coeff(n, m):
    """q^(n^2 + m n) / (q;q)_n, the n-th series coefficient of Schur's determinant."""
    if n < 0 or m < 0:
        raise ValueError("schur_coeff needs n, m >= 0")
    num = MultiPoly.var(Q_VARS, "q", n * n + m * n) if n else MultiPoly.one(Q_VARS)
    return RatFunc(num, q_pochhammer(n))


@dataclass(frozen=True)
class TruncatedQSeries:
    """Coefficients of q^0..q^order of a formal power series in q."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def coeff(self, m):
        if not 0 <= m <= self.order:
            raise IndexError(f"q^{m} is beyond truncation order {self.order}")
        return self.coeffs[m]


def series_expand(f, order):
    """Truncated power-series expansion of a rational function of q.

    The denominator must not vanish at q = 0.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    num = _dense_q(f.num, order)
    den = _dense_q(f.den, order)
    if not den[0]:
        raise DenominatorVanishesAtZeroError(f"denominator {f.den} vanishes at q = 0")
    inv0 = 1 / den[0]
    out = []
    for n in range(order + 1):
        acc = num[n]
        for i in range(1, n + 1):
            if den[i]:
                acc -= den[i] * out[n - i]
        out.append(acc * inv0)
    return TruncatedQSeries(order, tuple(out))


def _dense_q(p, order):
    out = [Fraction(0)] * (order + 1)
    qi = p.vars.index("q")
    for exps, coeff in p.terms.items():
        if any(e for i, e in enumerate(exps) if i != qi):
            raise ValueError(f"{p} is not a polynomial in q alone")
        if exps[qi] <= order:
            out[exps[qi]] += coeff
    return out


def lehmer_limit_term(k, order):
    """Truncated expansion of (-1)^k q^(k(k-1)) / (q;q)_k.

    This is the coefficient of z^k in the determinant of the infinite
    tridiagonal matrix.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    sign = -1 if k % 2 else 1
    num = MultiPoly.monomial(Q_VARS, sign, {"q": k * (k - 1)})
    return series_expand(RatFunc(num, q_pochhammer(k)), order)

"""The reciprocal-quadratic matrix family M[i,l] = 1/((2l)^2 - t^2 (2i-1)^2).

Only even powers of t occur anywhere, so the whole family lives in the
univariate ring in T = t^2.  Closed-form factors follow the reciprocal
factorial convention 1/n! = 0 for n < 0, which makes L unit lower
triangular and U upper triangular without case splits.  Indices below
are 1-based to match the defining formulas; storage stays 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from combilu.matrix import ClosedFormLU, FieldMatrix
from combilu.poly import MultiPoly
from combilu.ratfunc import RatFunc

T_VARS = ("T",)


class PoleError(ValueError):
    """A rational t hits a pole of the matrix or of its closed-form factors."""


@dataclass(frozen=True)
class KTConfig:
    """Size s plus an optional exact rational specialization of t.

    With t=None every object is symbolic in T = t^2.  A rational t must
    avoid |t| = 2l/(2i-1) for 1 <= i, l <= s (matrix poles, which also
    cover every denominator in the closed forms) and t = 0, where the
    rows coincide and the factorization degenerates.
    """

    s: int
    t: Fraction | None = None

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("matrix size s must be >= 1")
        if self.t is not None:
            t = Fraction(self.t)
            object.__setattr__(self, "t", t)
            if t == 0:
                raise PoleError("t = 0 collapses every row to the same value")
            for i in range(1, self.s + 1):
                for l in range(1, self.s + 1):
                    if abs(t) == Fraction(2 * l, 2 * i - 1):
                        raise PoleError(
                            f"t = {t} is a pole: entry ({i}, {l}) divides by zero")

    @property
    def symbolic(self):
        return self.t is None


def _spec(cfg, value):
    """Specialize T = t^2 when the config carries a rational t."""
    if cfg.symbolic:
        return value
    return value.substitute({"T": cfg.t * cfg.t})


def _quad(odd, even):
    """The polynomial odd^2 * T - even^2."""
    return MultiPoly(T_VARS, {(1,): Fraction(odd * odd), (0,): Fraction(-even * even)})


def _prod(factors):
    out = MultiPoly.one(T_VARS)
    for f in factors:
        out = out * f
    return out


def _zero():
    return RatFunc.const(T_VARS, 0)


def kt_matrix(cfg):
    """Entry (i, l) = 1 / ((2l)^2 - T (2i-1)^2), 1-based."""
    def entry(i0, l0):
        i, l = i0 + 1, l0 + 1
        den = MultiPoly(T_VARS, {(0,): Fraction(4 * l * l), (1,): Fraction(-(2 * i - 1) ** 2)})
        return _spec(cfg, RatFunc(MultiPoly.one(T_VARS), den))
    return FieldMatrix.build(cfg.s, cfg.s, T_VARS, entry)


def kt_L_entry(i, j):
    if j > i:
        return _zero()
    scale = Fraction(factorial(i + j - 2), factorial(i - j) * factorial(2 * j - 2))
    num = _prod(_quad(2 * j - 1, 2 * k) for k in range(1, j + 1)).scale(scale)
    den = _prod(_quad(2 * i - 1, 2 * k) for k in range(1, j + 1))
    return RatFunc(num, den)


def kt_U_entry(j, l):
    if l < j:
        return _zero()
    sign = -1 if j % 2 else 1
    scale = Fraction(sign * 16 ** (j - 1) * factorial(2 * j - 2) * factorial(j + l - 1),
                     l * factorial(l - j))
    num = MultiPoly.var(T_VARS, "T", j - 1).scale(scale)
    den = (_prod(_quad(2 * k - 1, 2 * l) for k in range(1, j + 1))
           * _prod(_quad(2 * j - 1, 2 * k) for k in range(1, j)))
    return RatFunc(num, den)


def kt_Linv_entry(i, j):
    if j > i:
        return _zero()
    sign = -1 if (i + j) % 2 else 1
    scale = Fraction(sign * factorial(2 * i - 2) * (2 * j - 1),
                     factorial(i + j - 1) * factorial(i - j))
    num = _prod(_quad(2 * j - 1, 2 * k) for k in range(1, i)).scale(scale)
    den = _prod(_quad(2 * i - 1, 2 * k) for k in range(1, i))
    return RatFunc(num, den)


def kt_Uinv_entry(j, l):
    if l < j:
        return _zero()
    sign = -1 if j % 2 else 1
    num = (_prod(_quad(2 * k - 1, 2 * j) for k in range(1, l))
           * _prod(_quad(2 * l - 1, 2 * k) for k in range(1, l + 1))
           ).scale(Fraction(sign * 2 * j * j))
    den = MultiPoly.var(T_VARS, "T", l - 1).scale(
        Fraction(factorial(2 * l - 2) * factorial(j + l) * factorial(l - j) * 16 ** (l - 1)))
    return RatFunc(num, den)


def kt_L(cfg):
    return FieldMatrix.build(cfg.s, cfg.s, T_VARS,
                             lambda i, j: _spec(cfg, kt_L_entry(i + 1, j + 1)))


def kt_U(cfg):
    return FieldMatrix.build(cfg.s, cfg.s, T_VARS,
                             lambda j, l: _spec(cfg, kt_U_entry(j + 1, l + 1)))


def kt_Linv(cfg):
    return FieldMatrix.build(cfg.s, cfg.s, T_VARS,
                             lambda i, j: _spec(cfg, kt_Linv_entry(i + 1, j + 1)))


def kt_Uinv(cfg):
    return FieldMatrix.build(cfg.s, cfg.s, T_VARS,
                             lambda j, l: _spec(cfg, kt_Uinv_entry(j + 1, l + 1)))


def kt_factorization(cfg):
    """Matrix plus all four closed-form factors."""
    return ClosedFormLU(M=kt_matrix(cfg), L=kt_L(cfg), U=kt_U(cfg),
                        Linv=kt_Linv(cfg), Uinv=kt_Uinv(cfg))


# -- transposed family -------------------------------------------------

def kt_t_matrix(cfg):
    return kt_matrix(cfg).transpose()


def kt_t_L_entry(i, j):
    if j > i:
        return _zero()
    scale = Fraction(factorial(i + j - 1) * j, factorial(i - j) * factorial(2 * j - 1) * i)
    num = _prod(_quad(2 * k - 1, 2 * j) for k in range(1, j + 1)).scale(scale)
    den = _prod(_quad(2 * k - 1, 2 * i) for k in range(1, j + 1))
    return RatFunc(num, den)


def kt_t_U_entry(j, l):
    if l < j:
        return _zero()
    sign = -1 if j % 2 else 1
    scale = Fraction(sign * 16 ** (j - 1) * factorial(2 * j - 1) * factorial(j + l - 2),
                     j * factorial(l - j))
    num = MultiPoly.var(T_VARS, "T", j - 1).scale(scale)
    den = (_prod(_quad(2 * k - 1, 2 * l) for k in range(1, j + 1))
           * _prod(_quad(2 * k - 1, 2 * j) for k in range(1, j)))
    return RatFunc(num, den)


def kt_t_Linv_entry(i, j):
    if j > i:
        return _zero()
    sign = -1 if (i + j) % 2 else 1
    scale = Fraction(sign * factorial(2 * i) * j * j,
                     factorial(i - j) * factorial(i + j) * i * i)
    num = _prod(_quad(2 * k - 1, 2 * j) for k in range(1, i)).scale(scale)
    den = _prod(_quad(2 * k - 1, 2 * i) for k in range(1, i))
    return RatFunc(num, den)


def kt_t_Uinv_entry(j, l):
    if l < j:
        return _zero()
    sign = -1 if j % 2 else 1
    num = (_prod(_quad(2 * k - 1, 2 * l) for k in range(1, l + 1))
           * _prod(_quad(2 * j - 1, 2 * k) for k in range(1, l))
           ).scale(Fraction(sign * factorial(2 * j - 1) * factorial(l)))
    den = MultiPoly.var(T_VARS, "T", l - 1).scale(
        Fraction(16 ** (l - 1) * factorial(2 * l - 1) * factorial(l + j - 1)
                 * factorial(l - j) * factorial(l - 1)))
    return RatFunc(num, den)


def kt_transposed(cfg):
    """Transposed matrix plus its own closed-form factors."""
    build = FieldMatrix.build
    s = cfg.s
    return ClosedFormLU(
        M=kt_t_matrix(cfg),
        L=build(s, s, T_VARS, lambda i, j: _spec(cfg, kt_t_L_entry(i + 1, j + 1))),
        U=build(s, s, T_VARS, lambda j, l: _spec(cfg, kt_t_U_entry(j + 1, l + 1))),
        Linv=build(s, s, T_VARS, lambda i, j: _spec(cfg, kt_t_Linv_entry(i + 1, j + 1))),
        Uinv=build(s, s, T_VARS, lambda j, l: _spec(cfg, kt_t_Uinv_entry(j + 1, l + 1))),
    )


def kt_det(cfg):
    """Closed-form determinant: the product of the diagonal U entries."""
    det = RatFunc.const(T_VARS, 1)
    for j in range(1, cfg.s + 1):
        det = det * kt_U_entry(j, j)
    return _spec(cfg, det)


# -- the t = 1 determinant chain ---------------------------------------

def odd_double_factorial(m):
    """(2n-1)!! for odd m = 2n-1: the product 1*3*5*...*m ((-1)!! = 1)."""
    if m % 2 == 0:
        raise ValueError("argument must be odd")
    out = 1
    for v in range(1, m + 1, 2):
        out *= v
    return out


DET_CHAIN_LABELS = (
    "pivot_product",
    "double_factorial_form",
    "factorial_power_form",
    "paired_binomial_form",
    "central_binomial_form",
    "binomial_ratio_form",
)


@dataclass(frozen=True)
class DetChain:
    """Every displayed form of the t = 1 determinant, evaluated exactly."""

    s: int
    values: tuple
    labels: tuple = DET_CHAIN_LABELS

    def all_equal(self):
        return all(v == self.values[0] for v in self.values)


def kt_det_chain(s):
    """Evaluate all six equivalent t = 1 determinant expressions at size s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    e1 = Fraction(1, factorial(s))
    for j in range(1, s + 1):
        num = (-1) ** j * 16 ** (j - 1) * factorial(2 * j - 2) * factorial(2 * j - 1)
        den = 1
        for k in range(1, j + 1):
            den *= (2 * k - 2 * j - 1) * (2 * k + 2 * j - 1)
        for k in range(1, j):
            den *= (2 * j - 2 * k - 1) * (2 * j + 2 * k - 1)
        e1 *= Fraction(num, den)

    e2 = Fraction(1, factorial(s))
    for j in range(1, s + 1):
        e2 *= Fraction(16 ** (j - 1) * factorial(2 * j - 1) ** 2,
                       odd_double_factorial(4 * j - 1) * odd_double_factorial(4 * j - 3))

    e3 = Fraction(4 ** s, factorial(s))
    for j in range(1, s + 1):
        e3 *= Fraction(32 ** (j - 1) * factorial(2 * j - 1) ** 4,
                       factorial(4 * j - 1) * factorial(4 * j - 2))

    top = Fraction(4 ** s * 16 ** (s * (s - 1)), factorial(s) ** 2)
    prod4 = 1
    for j in range(1, s + 1):
        prod4 *= comb(4 * j, 2 * j) * comb(4 * j - 2, 2 * j - 1)
    e4 = top / prod4

    prod5 = 1
    for j in range(1, 2 * s + 1):
        prod5 *= comb(2 * j, j)
    e5 = top / prod5

    prod6 = 1
    for j in range(0, 2 * s):
        prod6 *= comb(2 * j + 1, j)
    e6 = Fraction(16 ** (s * (s - 1)), factorial(s) ** 2) / prod6

    return DetChain(s=s, values=(e1, e2, e3, e4, e5, e6))

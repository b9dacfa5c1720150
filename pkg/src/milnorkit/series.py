"""Truncated power series over k = Q(x1,...,xr).

A Series carries its own precision M >= 1 and exactly M coefficients;
it represents an element of k[t]/(t^M).  Binary operations require
equal precision, deliberately: silently mixing precisions is how
truncation bugs hide.  Use pad_to / ser_truncate to move between
precisions explicitly.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NotAUnit, PrecisionMismatch, PreconditionError, VariableCountMismatch
from .field import RationalFunction

INF = math.inf


class Series:
    """Element of k[t]/(t^M): coefficient tuple (c_0, ..., c_{M-1})."""

    __slots__ = ("M", "coeffs")

    def __init__(self, M: int, coeffs):
        if M < 1:
            raise PreconditionError(f"precision must be >= 1, got {M}")
        coeffs = tuple(coeffs)
        if len(coeffs) != M:
            raise PreconditionError(
                f"expected {M} coefficients, got {len(coeffs)}"
            )
        r = None
        for c in coeffs:
            if not isinstance(c, RationalFunction):
                raise PreconditionError(f"coefficient {c!r} is not a field element")
            if r is None:
                r = c.r
            elif c.r != r:
                raise VariableCountMismatch(
                    f"coefficients declare {r} and {c.r} variables"
                )
        self.M = M
        self.coeffs = coeffs

    @property
    def r(self) -> int:
        return self.coeffs[0].r

    @classmethod
    def zero(cls, r: int, M: int) -> "Series":
        return cls(M, (RationalFunction.zero(r),) * M)

    @classmethod
    def const(cls, r: int, M: int, c) -> "Series":
        if isinstance(c, RationalFunction):
            c0 = c
        else:
            c0 = RationalFunction.const(r, c)
        return cls(M, (c0,) + (RationalFunction.zero(r),) * (M - 1))

    @classmethod
    def t(cls, r: int, M: int) -> "Series":
        if M < 2:
            return cls.zero(r, M)
        tail = (RationalFunction.zero(r),) * (M - 2)
        return cls(M, (RationalFunction.zero(r), RationalFunction.one(r)) + tail)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_unit(self) -> bool:
        return not self.coeffs[0].is_zero()

    def _check(self, other: "Series") -> None:
        if self.M != other.M:
            raise PrecisionMismatch(
                f"operands carry precision {self.M} and {other.M}"
            )
        if self.r != other.r:
            raise VariableCountMismatch(
                f"operands declare {self.r} and {other.r} variables"
            )

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(self.M, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(self.M, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Series":
        return Series(self.M, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        zero = RationalFunction.zero(self.r)
        out = [zero] * self.M
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= self.M:
                    break
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return Series(self.M, out)

    def scale(self, c: RationalFunction) -> "Series":
        return Series(self.M, tuple(a * c for a in self.coeffs))

    def eq(self, other: "Series") -> bool:
        self._check(other)
        return all(a.eq(b) for a, b in zip(self.coeffs, other.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.M == other.M and self.eq(other)

    def __hash__(self):
        raise TypeError("Series is unhashable; compare with ser_eq")

    def inv(self) -> "Series":
        if not self.is_unit():
            raise NotAUnit("inverse needs a unit (nonzero constant term)")
        a0inv = self.coeffs[0].inv()
        out = [a0inv]
        for k in range(1, self.M):
            acc = RationalFunction.zero(self.r)
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[k - j]
            out.append(-(a0inv * acc))
        return Series(self.M, out)

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.inv()

    def pad_to(self, M: int) -> "Series":
        """Canonical lift: append zero coefficients up to precision M."""
        if M < self.M:
            raise PreconditionError(
                f"pad target {M} below current precision {self.M}"
            )
        zero = RationalFunction.zero(self.r)
        return Series(M, self.coeffs + (zero,) * (M - self.M))

    def truncate(self, m: int) -> "Series":
        if not 1 <= m <= self.M:
            raise PreconditionError(
                f"truncation order {m} out of range 1..{self.M}"
            )
        return Series(m, self.coeffs[:m])

    def valuation(self):
        """t-adic order of vanishing; +inf sentinel for the zero series."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return INF

    def partial(self, j: int) -> "Series":
        """Coefficientwise d/dx_j."""
        return Series(self.M, tuple(c.partial(j) for c in self.coeffs))

    def dt(self) -> "Series":
        """d/dt at the same precision; the top coefficient is re-padded zero."""
        out = [self.coeffs[j].scale(j) for j in range(1, self.M)]
        out.append(RationalFunction.zero(self.r))
        return Series(self.M, out)

    def eval_t0(self) -> RationalFunction:
        return self.coeffs[0]

    def __str__(self) -> str:
        pieces = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            pieces.append(_coeff_t_str(c, j))
        if not pieces:
            return "0"
        out = pieces[0]
        for p in pieces[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self) -> str:
        return f"Series(M={self.M}, {self})"


def _coeff_t_str(c: RationalFunction, j: int) -> str:
    if j == 0:
        return str(c)
    t_part = "t" if j == 1 else f"t^{j}"
    if c == RationalFunction.one(c.r):
        return t_part
    if c == RationalFunction.const(c.r, -1):
        return "-" + t_part
    c_s = str(c)
    if c.is_sum_str():
        c_s = f"({c_s})"
    return f"{c_s}*{t_part}"


def ser_add(a: Series, b: Series) -> Series:
    return a + b


def ser_mul(a: Series, b: Series) -> Series:
    return a * b


def ser_neg(a: Series) -> Series:
    return -a


def ser_inv(a: Series) -> Series:
    return a.inv()


def ser_eq(a: Series, b: Series) -> bool:
    return a.eq(b)


def ser_log(a: Series) -> Series:
    """log of a series with constant term exactly 1.

    Computed as sum_{j>=1} (-1)^{j+1} (a-1)^j / j; the sum is finite
    because a-1 has positive valuation.
    """
    one = Series.const(a.r, a.M, 1)
    if not a.coeffs[0].eq(RationalFunction.one(a.r)):
        raise PreconditionError("log needs constant term 1")
    u = a - one
    out = Series.zero(a.r, a.M)
    power = Series.const(a.r, a.M, 1)
    for j in range(1, a.M):
        power = power * u
        if power.is_zero():
            break
        sign = Fraction(1, j) if j % 2 == 1 else Fraction(-1, j)
        out = out + power.scale(RationalFunction.const(a.r, sign))
    return out

def ser_exp(a: Series) -> Series:
    """exp of a series with constant term exactly 0."""
    if not a.coeffs[0].is_zero():
        raise PreconditionError("exp needs constant term 0")
    out = Series.const(a.r, a.M, 1)
    power = Series.const(a.r, a.M, 1)
    fact = 1
    for j in range(1, a.M):
        power = power * a
        if power.is_zero():
            break
        fact *= j
        out = out + power.scale(RationalFunction.const(a.r, Fraction(1, fact)))
    return out


def ser_eval_t0(a: Series) -> RationalFunction:
    return a.eval_t0()


def ser_valuation(a: Series):
    return a.valuation()


def ser_norm(a: Series):
    """The norm is recorded by its exponent: the t-adic valuation.

    Returned as the integer v (or the +inf sentinel), never as a float
    2^-v; exactness is the whole point.
    """
    return a.valuation()


def ser_dt(a: Series) -> Series:
    return a.dt()


def ser_truncate(a: Series, m: int) -> Series:
    return a.truncate(m)


def ser_congruent_mod(a: Series, b: Series, m: int) -> bool:
    """a == b mod t^m; precisions may differ but both must be >= m."""
    if a.M < m or b.M < m:
        raise PreconditionError(
            f"congruence mod t^{m} needs precision >= {m} on both sides"
        )
    if a.r != b.r:
        raise VariableCountMismatch(
            f"operands declare {a.r} and {b.r} variables"
        )
    return all(a.coeffs[j].eq(b.coeffs[j]) for j in range(m))

"""Exact arithmetic in k = Q(x1,...,xr).

Poly is a sparse multivariate polynomial with rational coefficients;
RationalFunction is a fraction of two Polys.  Equality is decided by
cross-multiplication, so fractions need not be fully reduced: the
canonical form removes content, cancels common monomial factors, and
fixes the sign of the denominator's lex-leading coefficient.  On top
of that, common polynomial factors are cancelled when the evaluation
heuristic in _gcd finds one; that step only bounds expression swell
and no result depends on it succeeding.

Internally a Poly is stored as a primitive integer-coefficient dict
times one rational scale, with the integer part's lex-leading
coefficient positive.  That representation is unique, makes negation
and scalar multiplication O(1), and keeps the kernel arithmetic in
plain integers (products of primitive parts are primitive, so
multiplication needs no renormalization at all).

Exponent vectors are packed into a single integer key per term, one
fixed-width bit field per variable with variable 1 most significant,
so multiplying monomials is integer addition and lexicographic order
is plain integer order.  Input exponents must stay below 2^19; the
spare top bit of each field catches degree overflow in products.

The monomial order is lexicographic on exponent vectors; printing
lists terms in descending lex order.

The arithmetic kernel is swappable: the compiled extension is used
when importable, the pure-Python twin otherwise.  Set MILNORKIT_PURE=1
to force the fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd, lcm

from ._gcd import (
    _EXP_BITS,
    _EXP_MASK,
    divexact_int as _divexact_int,
    geometry as _geometry,
    poly_gcd_int as _poly_gcd_int,
)
from .errors import DivisionByZero, PreconditionError, VariableCountMismatch

if os.environ.get("MILNORKIT_PURE"):
    from . import _poly_py as _kernel

    BACKEND = "pure"
else:
    try:
        from . import _poly_cy as _kernel  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _poly_py as _kernel

        BACKEND = "pure"

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Largest accepted input exponent; one spare bit per packed field stays
# in reserve so products can be overflow-checked with a single mask.
_EXP_LIMIT = 1 << (_EXP_BITS - 1)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise PreconditionError(f"not an exact rational coefficient: {c!r}")


def _norm_ints(ints: dict) -> tuple:
    """(primitive dict with positive lex-lead, signed content) of a raw
    integer dict."""
    if not ints:
        return {}, _ZERO
    g = 0
    for c in ints.values():
        g = gcd(g, c)
        if g == 1:
            break
    if ints[max(ints)] < 0:
        g = -g
    if g != 1:
        ints = {e: c // g for e, c in ints.items()}
    return ints, Fraction(g)


class Poly:
    """Sparse polynomial in r variables over Q.

    Stored as _scale * _ints with _ints primitive over Z and its
    lex-leading coefficient positive; the zero polynomial is the empty
    dict with scale 0.  The raw constructor trusts its arguments;
    build through the classmethods.
    """

    __slots__ = ("r", "_ints", "_scale", "_fs", "_facs")

    def __init__(self, r: int, ints: dict, scale: Fraction):
        self.r = r
        self._ints = ints
        self._scale = scale
        self._fs = None
        self._facs = None

    @classmethod
    def from_terms(cls, r: int, terms) -> "Poly":
        """Build from any {exponents: coefficient} mapping, validating shape."""
        shifts = _geometry(r)[0]
        acc: dict = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != r:
                raise VariableCountMismatch(
                    f"exponent vector {e} has length {len(e)}, expected {r}"
                )
            key = 0
            for x, s in zip(e, shifts):
                if not 0 <= x < _EXP_LIMIT:
                    raise PreconditionError(
                        f"exponent {x} outside 0..{_EXP_LIMIT - 1} in {e}"
                    )
                key |= x << s
            c = _as_fraction(c)
            if c:
                cur = acc.get(key)
                s = c if cur is None else cur + c
                if s:
                    acc[key] = s
                elif cur is not None:
                    del acc[key]
        return cls._from_fractions(r, acc)

    @classmethod
    def _from_fractions(cls, r: int, fracs: dict) -> "Poly":
        if not fracs:
            return cls(r, {}, _ZERO)
        den = 1
        for c in fracs.values():
            den = lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in fracs.items()}
        ints, g = _norm_ints(ints)
        return cls(r, ints, g / den)

    @classmethod
    def zero(cls, r: int) -> "Poly":
        return cls(r, {}, _ZERO)

    @classmethod
    def const(cls, r: int, c) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return cls(r, {}, _ZERO)
        return cls(r, {0: 1}, c)

    @classmethod
    def variable(cls, r: int, j: int) -> "Poly":
        """The variable x_j, 1-based index."""
        if not 1 <= j <= r:
            raise PreconditionError(f"variable index {j} out of range 1..{r}")
        return cls(r, {1 << _geometry(r)[0][j - 1]: 1}, _ONE)

    def is_zero(self) -> bool:
        return not self._ints

    def _check(self, other: "Poly") -> None:
        if self.r != other.r:
            raise VariableCountMismatch(
                f"operands declare {self.r} and {other.r} variables"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self._ints:
            return other
        if not other._ints:
            return self
        if self._facs is not None or other._facs is not None:
            # u*a + u*b = u*(a + b): pull construction-shared factors
            # out front so they survive the sum.
            split = _split_shared(self, other)
            if split is not None:
                a_red, b_red, shared = split
                s = a_red + b_red
                if not s._ints:
                    return Poly.zero(self.r)
                return _product_with_scale(self.r, shared, _ONE) * s
        sa, sb = self._scale, other._scale
        den = lcm(sa.denominator, sb.denominator)
        raw = _kernel.int_lin(self._ints, int(sa * den),
                              other._ints, int(sb * den))
        ints, g = _norm_ints(raw)
        return Poly(self.r, ints, g / den)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        if not self._ints:
            return self
        out = Poly(self.r, self._ints, -self._scale)
        out._fs = self._fs
        out._facs = self._facs
        return out

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        # primitive * primitive is primitive (Gauss), and lex-leading
        # coefficients multiply without collision, so no renormalizing.
        out = Poly(
            self.r,
            _kernel.int_mul(self._ints, other._ints, _geometry(self.r)[1]),
            self._scale * other._scale,
        )
        if out._ints:
            facs = _atoms(self) + _atoms(other)
            if len(facs) <= _FAC_LIMIT:
                out._facs = facs
        return out

    def scale(self, c) -> "Poly":
        c = _as_fraction(c)
        if not c or not self._ints:
            return Poly.zero(self.r)
        out = Poly(self.r, self._ints, self._scale * c)
        out._fs = self._fs
        out._facs = self._facs
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.r == other.r
            and self._scale == other._scale
            and self._ints == other._ints
        )

    def __hash__(self):
        return hash((self.r, self._scale, frozenset(self._ints.items())))

    def partial(self, j: int) -> "Poly":
        """d/dx_j, 1-based index."""
        if not 1 <= j <= self.r:
            raise PreconditionError(f"variable index {j} out of range 1..{self.r}")
        sh = _geometry(self.r)[0][j - 1]
        raw: dict = {}
        for e, c in self._ints.items():
            k = (e >> sh) & _EXP_MASK
            if k:
                raw[e - (1 << sh)] = c * k
        ints, g = _norm_ints(raw)
        return Poly(self.r, ints, self._scale * g)

    def leading_exponents(self) -> tuple:
        """Lex-greatest exponent vector; the zero tuple for the zero poly."""
        if not self._ints:
            return (0,) * self.r
        e = max(self._ints)
        return tuple((e >> s) & _EXP_MASK for s in _geometry(self.r)[0])

    def content(self) -> Fraction:
        """gcd of coefficient numerators over lcm of denominators (positive).

        Zero for the zero polynomial.
        """
        return abs(self._scale)

    def coefficient(self, e: tuple) -> Fraction:
        """Coefficient of the given exponent vector."""
        e = tuple(int(x) for x in e)
        if len(e) != self.r:
            raise VariableCountMismatch(
                f"exponent vector {e} has length {len(e)}, expected {self.r}"
            )
        if any(x < 0 or x >= _EXP_LIMIT for x in e):
            return _ZERO
        key = 0
        for x, s in zip(e, _geometry(self.r)[0]):
            key |= x << s
        c = self._ints.get(key)
        return self._scale * c if c is not None else _ZERO

    def __str__(self) -> str:
        if not self._ints:
            return "0"
        s = self._scale
        shifts = _geometry(self.r)[0]
        pieces = []
        for e in sorted(self._ints, reverse=True):
            pieces.append(_term_str(
                s * self._ints[e],
                [(e >> sh) & _EXP_MASK for sh in shifts],
            ))
        out = pieces[0]
        for p in pieces[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self) -> str:
        return f"Poly({self.r}, {self})"


def _term_str(c: Fraction, e) -> str:
    factors = []
    for j, k in enumerate(e):
        if k == 1:
            factors.append(f"x{j + 1}")
        elif k > 1:
            factors.append(f"x{j + 1}^{k}")
    if not factors:
        return str(c)
    var_part = "*".join(factors)
    if c == 1:
        return var_part
    if c == -1:
        return "-" + var_part
    return f"{c}*{var_part}"


class RationalFunction:
    """Element of Q(x1,...,xr): numerator/denominator pair of Polys.

    Canonically the denominator is its own primitive part (scale 1
    with positive lex-leading coefficient); all rational content lives
    in the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        num._check(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            den = Poly.const(num.r, 1)
        else:
            num, den = _cancel_common(num, den)
            num, den = _reduce_gcd(num, den)
            s = den._scale
            if s != 1:
                num2 = Poly(num.r, num._ints, num._scale / s)
                num2._fs, num2._facs = num._fs, num._facs
                den2 = Poly(den.r, den._ints, _ONE)
                den2._fs, den2._facs = den._fs, den._facs
                num, den = num2, den2
        self.num = num
        self.den = den

    @property
    def r(self) -> int:
        return self.num.r

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p, Poly.const(p.r, 1))

    @classmethod
    def const(cls, r: int, c) -> "RationalFunction":
        return cls(Poly.const(r, c), Poly.const(r, 1))

    @classmethod
    def zero(cls, r: int) -> "RationalFunction":
        return cls.const(r, 0)

    @classmethod
    def one(cls, r: int) -> "RationalFunction":
        return cls.const(r, 1)

    @classmethod
    def variable(cls, r: int, j: int) -> "RationalFunction":
        return cls.from_poly(Poly.variable(r, j))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _check(self, other: "RationalFunction") -> None:
        if self.r != other.r:
            raise VariableCountMismatch(
                f"operands declare {self.r} and {other.r} variables"
            )

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        d1, d2 = self.den, other.den
        # Common-denominator paths keep the products small; literal
        # factor sharing is checked before the gcd heuristic, and plain
        # cross-multiplication is the last resort.
        if d1._ints == d2._ints:
            return RationalFunction(self.num + other.num, d1)
        split = _split_shared(d1, d2)
        if split is not None:
            d1r, d2r, _ = split
        else:
            g = _try_gcd(d1, d2) if _probe_ok(d1, d2) else None
            if g is None:
                return RationalFunction(self.num * d2 + other.num * d1,
                                        d1 * d2)
            d1r = _divide_exact(d1, g)
            d2r = _divide_exact(d2, g)
        return RationalFunction(self.num * d2r + other.num * d1r, d1 * d2r)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        n1, d2 = _cross_cancel(n1, d2)
        n2, d1 = _cross_cancel(n2, d1)
        return RationalFunction(n1 * n2, d1 * d2)

    def inv(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inv()

    def scale(self, c) -> "RationalFunction":
        out = object.__new__(RationalFunction)
        num = self.num.scale(c)
        out.num = num
        out.den = self.den if not num.is_zero() else Poly.const(self.r, 1)
        return out

    def eq(self, other: "RationalFunction") -> bool:
        self._check(other)
        if self.num == other.num and self.den == other.den:
            return True
        return (self.num * other.den) == (other.num * self.den)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunction) and self.eq(other)

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable; compare with eq")

    def partial(self, j: int) -> "RationalFunction":
        """d/dx_j by the quotient rule."""
        return RationalFunction(
            self.num.partial(j) * self.den - self.num * self.den.partial(j),
            self.den * self.den,
        )

    def is_sum_str(self) -> bool:
        """True when the canonical printing has a top-level + or -."""
        return _is_one(self.den) and len(self.num._ints) > 1

    def __str__(self) -> str:
        if _is_one(self.den):
            return str(self.num)
        num_s = str(self.num)
        if len(self.num._ints) > 1:
            num_s = f"({num_s})"
        den_s = str(self.den)
        if not _is_atomic_divisor(self.den):
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _is_one(p: Poly) -> bool:
    return p._scale == 1 and p._ints == {0: 1}


def _is_atomic_divisor(p: Poly) -> bool:
    """True when p may appear after '/' unparenthesized: a bare integer,
    a bare variable, or a bare variable power."""
    if len(p._ints) != 1:
        return False
    ((e, c),) = p._ints.items()
    c = p._scale * c
    if e == 0:
        return c.denominator == 1 and c > 0
    nvars = sum(1 for s in _geometry(p.r)[0] if (e >> s) & _EXP_MASK)
    return nvars == 1 and c == 1


def _cancel_common(num: Poly, den: Poly) -> tuple:
    """Cancel the common monomial factor of all terms of num and den."""
    # a constant term on either side blocks any common monomial
    if 0 in num._ints or 0 in den._ints:
        return num, den
    shifts = _geometry(num.r)[0]
    low = None
    for ints in (num._ints, den._ints):
        for e in ints:
            if low is None:
                low = [(e >> s) & _EXP_MASK for s in shifts]
            else:
                for idx, s in enumerate(shifts):
                    k = (e >> s) & _EXP_MASK
                    if k < low[idx]:
                        low[idx] = k
    if not any(low):
        return num, den
    shift = 0
    for k, s in zip(low, shifts):
        shift |= k << s

    def unshift(p: Poly) -> Poly:
        # every field of every key is at least its field in shift
        return Poly(p.r, {e - shift: c for e, c in p._ints.items()},
                    p._scale)

    return unshift(num), unshift(den)


def _frozen(p: Poly) -> frozenset:
    fs = p._fs
    if fs is None:
        fs = p._fs = frozenset(p._ints.items())
    return fs


# Products remember the atoms they were multiplied from (up to a length
# cap), so fractions whose parts were built multiplicatively cancel
# shared factors by value identity, with no gcd work at all.  The atom
# lists describe the primitive integer parts only; scales are tracked
# globally on each Poly.
_FAC_LIMIT = 32


def _atoms(p: Poly) -> tuple:
    facs = p._facs
    return facs if facs is not None else (p,)


def _product_with_scale(r: int, atoms: list, scale: Fraction) -> Poly:
    guards = _geometry(r)[1]
    ints = {0: 1}
    for a in atoms:
        ints = _kernel.int_mul(ints, a._ints, guards)
    out = Poly(r, ints, scale)
    if atoms and len(atoms) <= _FAC_LIMIT:
        out._facs = tuple(atoms)
    return out


def _split_shared(p: Poly, q: Poly):
    """Cancel construction-shared factors of p and q.

    Atoms match on their primitive parts; the reduced polynomials keep
    the original scales, so p = G*p_red and q = G*q_red for the scale-1
    product G of the cancelled atoms.  Returns (p_red, q_red, cancelled
    atoms), or None when the factor lists share nothing.
    """
    if p._facs is None and q._facs is None:
        return None
    ap, aq = _atoms(p), _atoms(q)
    count: dict = {}
    for a in ap:
        k = _frozen(a)
        count[k] = count.get(k, 0) + 1
    shared: list = []
    keep_q = []
    for b in aq:
        k = _frozen(b)
        c = count.get(k, 0)
        if c:
            count[k] = c - 1
            shared.append(b)
        else:
            keep_q.append(b)
    if not shared:
        return None
    keep_p = []
    for a in ap:
        k = _frozen(a)
        c = count.get(k, 0)
        if c:
            count[k] = c - 1
            keep_p.append(a)
    return (_product_with_scale(p.r, keep_p, p._scale),
            _product_with_scale(q.r, keep_q, q._scale),
            shared)


# Value-keyed gcd memo.  Series convolutions rebuild equal denominators
# as fresh objects over and over, so keys are the primitive term sets,
# not object ids.  gcd is symmetric; keys are ordered by hash so both
# orientations share an entry.
_GCD_CACHE: dict = {}
_CACHE_LIMIT = 8192
_MISS = object()

# Safety valve for the heuristic probes: pairs beyond this combined
# term count are left unreduced.  The modular screen makes trivial
# probes cheap at any size, so the limit only fences off pathological
# swell.
_PROBE_LIMIT = 4000


def _probe_ok(a: Poly, b: Poly) -> bool:
    return len(a._ints) + len(b._ints) <= _PROBE_LIMIT


def _try_gcd(p: Poly, q: Poly):
    """Common polynomial factor of p and q, or None when trivial/unfound."""
    if not p._ints or not q._ints:
        return None
    ka, kb = _frozen(p), _frozen(q)
    if hash(ka) > hash(kb):
        ka, kb = kb, ka
    key = (ka, kb)
    hit = _GCD_CACHE.get(key, _MISS)
    if hit is not _MISS:
        return hit
    g = _poly_gcd_int(p._ints, q._ints, p.r)
    if g is None or (len(g) == 1 and 0 in g):
        out = None
    else:
        out = Poly(p.r, g, _ONE)
    if len(_GCD_CACHE) >= _CACHE_LIMIT:
        _GCD_CACHE.clear()
    _GCD_CACHE[key] = out
    return out


def _divide_exact(p: Poly, g: Poly) -> Poly:
    """p / g for a known divisor g in primitive form (scale 1)."""
    q = _divexact_int(p._ints, g._ints, _geometry(p.r)[1])
    if q is None:
        raise PreconditionError("not an exact polynomial divisor")
    # primitive / primitive leaves a primitive, positive-lead quotient
    return Poly(p.r, q, p._scale)


def _cross_cancel(n: Poly, d: Poly) -> tuple:
    """Cancel factors between a numerator and the opposite denominator."""
    split = _split_shared(n, d)
    if split is not None:
        return split[0], split[1]
    if not _probe_ok(n, d):
        return n, d
    g = _try_gcd(n, d)
    if g is None:
        return n, d
    return _divide_exact(n, g), _divide_exact(d, g)


def _reduce_gcd(num: Poly, den: Poly) -> tuple:
    """Cancel a common polynomial factor of num and den.

    Literal construction-shared factors go first; the evaluation
    heuristic covers the rest.  Purely an anti-swell measure: equality
    never relies on reduced fractions, so a missed gcd is harmless.
    """
    split = _split_shared(num, den)
    if split is not None:
        num, den = split[0], split[1]
    if len(den._ints) == 1 or len(num._ints) == 1:
        return num, den
    if not _probe_ok(num, den):
        return num, den
    g = _try_gcd(num, den)
    if g is None:
        return num, den
    return _divide_exact(num, g), _divide_exact(den, g)


# Contract-level function aliases.

def fld_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def fld_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def fld_neg(a: RationalFunction) -> RationalFunction:
    return -a


def fld_inv(a: RationalFunction) -> RationalFunction:
    return a.inv()


def fld_eq(a: RationalFunction, b: RationalFunction) -> bool:
    return a.eq(b)


def fld_partial(a: RationalFunction, j: int) -> RationalFunction:
    return a.partial(j)

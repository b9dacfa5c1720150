"""Milnor symbols over the truncated ring, their relative classes, and
the explicit inverse pair of maps between relative classes and form
vectors.

A symbol {a1,...,an} holds unit series; a chain is an integer
combination of symbols.  Chains are keyed syntactically (canonical
printed entries), so chain equality is a fast pre-check; semantic
equality of relative parts goes through rel_class, which is a complete
invariant.  Equality on the full Milnor ring (constant part included)
is out of scope by design.
"""

from __future__ import annotations

from .errors import PreconditionError, VariableCountMismatch
from .field import RationalFunction, fld_eq
from .forms import RelClass, SeriesForm, form_dlog, form_normalize_relative
from .series import Series, ser_exp, ser_log


class MilnorSymbol:
    """{a1,...,an}: a tuple of unit Series at common precision."""

    __slots__ = ("entries", "_key")

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise PreconditionError("symbol needs at least one entry")
        M = entries[0].M
        r = entries[0].r
        for a in entries:
            if not isinstance(a, Series):
                raise PreconditionError(f"entry {a!r} is not a Series")
            if a.M != M:
                raise PreconditionError(
                    f"entry precision {a.M} differs from {M}"
                )
            if a.r != r:
                raise VariableCountMismatch(
                    f"entry declares {a.r} variables, symbol declares {r}"
                )
            if not a.is_unit():
                raise PreconditionError(f"entry {a} is not a unit")
        self.entries = entries
        self._key = (M,) + tuple(str(a) for a in entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def M(self) -> int:
        return self.entries[0].M

    @property
    def r(self) -> int:
        return self.entries[0].r

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, MilnorSymbol) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.entries) + "}"

    def __repr__(self) -> str:
        return f"MilnorSymbol({self})"


class MilnorChain:
    """Sparse integer combination of symbols with common shape."""

    __slots__ = ("n", "M", "r", "terms")

    def __init__(self, n: int, M: int, r: int, terms: dict | None = None):
        if n < 1:
            raise PreconditionError(f"symbol length must be >= 1, got {n}")
        out: dict = {}
        for sym, mult in (terms or {}).items():
            if not isinstance(sym, MilnorSymbol):
                raise PreconditionError(f"{sym!r} is not a symbol")
            if sym.n != n or sym.M != M or sym.r != r:
                raise PreconditionError(
                    f"symbol shape (n={sym.n}, M={sym.M}, r={sym.r}) does not "
                    f"match chain shape (n={n}, M={M}, r={r})"
                )
            mult = int(mult)
            if mult:
                out[sym] = mult
        self.n = n
        self.M = M
        self.r = r
        self.terms = out

    @classmethod
    def empty(cls, n: int, M: int, r: int) -> "MilnorChain":
        return cls(n, M, r, {})

    @classmethod
    def single(cls, sym: MilnorSymbol, mult: int = 1) -> "MilnorChain":
        return cls(sym.n, sym.M, sym.r, {sym: mult})

    def is_empty(self) -> bool:
        return not self.terms

    def items(self):
        """Terms in canonical order (sorted by printed entries)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].key())

    def _check(self, other: "MilnorChain") -> None:
        if (self.n, self.M, self.r) != (other.n, other.M, other.r):
            raise PreconditionError(
                f"chain shapes (n={self.n}, M={self.M}, r={self.r}) and "
                f"(n={other.n}, M={other.M}, r={other.r}) differ"
            )

    def __add__(self, other: "MilnorChain") -> "MilnorChain":
        self._check(other)
        out = dict(self.terms)
        for sym, mult in other.terms.items():
            out[sym] = out.get(sym, 0) + mult
        return MilnorChain(self.n, self.M, self.r, out)

    def __neg__(self) -> "MilnorChain":
        return MilnorChain(self.n, self.M, self.r,
                           {s: -m for s, m in self.terms.items()})

    def __sub__(self, other: "MilnorChain") -> "MilnorChain":
        return self + (-other)

    def scale(self, c: int) -> "MilnorChain":
        return MilnorChain(self.n, self.M, self.r,
                           {s: m * c for s, m in self.terms.items()})

    def __eq__(self, other) -> bool:
        """Syntactic equality of stored terms, not equality of classes."""
        return (isinstance(other, MilnorChain)
                and (self.n, self.M, self.r) == (other.n, other.M, other.r)
                and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("MilnorChain is unhashable")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for sym, mult in self.items():
            if mult == 1:
                pieces.append(str(sym))
            elif mult == -1:
                pieces.append("-" + str(sym))
            else:
                pieces.append(f"{mult}*{sym}")
        out = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self) -> str:
        return f"MilnorChain({self})"


def mil_ev_t0(chain: MilnorChain) -> MilnorChain:
    """Evaluate every entry at t = 0, re-embedded as constant Series."""
    out = MilnorChain.empty(chain.n, chain.M, chain.r)
    for sym, mult in chain.terms.items():
        const = MilnorSymbol(
            Series.const(chain.r, chain.M, a.eval_t0()) for a in sym.entries
        )
        out = out + MilnorChain.single(const, mult)
    return out


def mil_rel_expand(sym: MilnorSymbol) -> MilnorChain:
    """Split off the relative part of a symbol.

    Each entry factors as a(0) times a principal unit; expanding by
    multilinearity gives one term per subset of entries where the
    principal-unit factor is kept.  The all-constant term is the
    image from k and is discarded; terms with an entry equal to 1
    vanish.  Each survivor is rotated so a principal unit sits in
    slot 1, with the transposition sign.
    """
    n = sym.n
    M = sym.M
    r = sym.r
    one = Series.const(r, M, 1)
    consts = []
    units = []
    for a in sym.entries:
        c = a.eval_t0()
        consts.append(Series.const(r, M, c))
        units.append(a.scale(c.inv()))
    out = MilnorChain.empty(n, M, r)
    for mask in range(1, 1 << n):
        picked = [(units[j] if mask >> j & 1 else consts[j]) for j in range(n)]
        if any(p.eq(one) for p in picked):
            continue
        j0 = (mask & -mask).bit_length() - 1  # lowest principal-unit slot
        rotated = [picked[j0]] + picked[:j0] + picked[j0 + 1:]
        sign = -1 if j0 % 2 else 1
        out = out + MilnorChain.single(MilnorSymbol(rotated), sign)
    return out


def phi(chain: MilnorChain, m: int) -> RelClass:
    """Relative class of a chain of symbols whose first entries are
    principal units: log of the first entry times the dlog product of
    the rest, reduced mod t^m and normalized."""
    degree = chain.n - 1
    out = RelClass.zero(chain.r, degree, m)
    one = RationalFunction.one(chain.r)
    for sym, mult in chain.items():
        a1 = sym.entries[0]
        if not fld_eq(a1.eval_t0(), one):
            raise PreconditionError(
                f"first entry {a1} is not congruent to 1 mod t"
            )
        # Everything above t^(m-1) dies in the quotient; truncating
        # before log/dlog is exact and shortens every convolution.
        entries = [a.truncate(m) if a.M > m else a for a in sym.entries]
        w = SeriesForm.scalar(ser_log(entries[0]))
        for a in entries[1:]:
            w = w.wedge(form_dlog(a))
        cls = form_normalize_relative(w.reduce_mod_km(m))
        out = out + cls.scale(mult)
    return out


def _check_monomial(rs, r: int):
    rs = tuple(rs)
    if not rs:
        raise PreconditionError("monomial needs at least one factor")
    for v in rs:
        if not isinstance(v, RationalFunction):
            raise PreconditionError(f"{v!r} is not a field element")
        if v.r != r:
            raise VariableCountMismatch(
                f"factor declares {v.r} variables, expected {r}"
            )
    for v in rs[1:]:
        if v.is_zero():
            raise PreconditionError("zero factor in a dlog slot")
    return rs


def psi_slot(i: int, monomials, m: int, r: int) -> MilnorChain:
    """Slotwise section at index i.

    Each monomial (r1,...,rn) contributes the symbol whose first entry
    is exp((r1 ... rn) t^i) truncated at m, followed by r2,...,rn.
    """
    if not 1 <= i <= m - 1:
        raise PreconditionError(f"slot index {i} out of range 1..{m - 1}")
    monomials = [_check_monomial(rs, r) for rs in monomials]
    if not monomials:
        raise PreconditionError("empty monomial list (length is undetermined)")
    n = len(monomials[0])
    for rs in monomials:
        if len(rs) != n:
            raise PreconditionError("monomials have mixed lengths")
    out = MilnorChain.empty(n, m, r)
    for rs in monomials:
        if rs[0].is_zero():
            continue
        prod = rs[0]
        for v in rs[1:]:
            prod = prod * v
        coeffs = [RationalFunction.zero(r)] * m
        coeffs[i] = prod
        entries = [ser_exp(Series(m, coeffs))]
        entries.extend(Series.const(r, m, v) for v in rs[1:])
        out = out + MilnorChain.single(MilnorSymbol(entries))
    return out


def psi_general(rs, m: int) -> MilnorChain:
    """Section for a monomial r1 dr2 ∧ ... ∧ drn with series factors.

    The factors split as a maximal leading block with zero constant
    term followed by units; the output symbol is
    {exp(r1 r_{l+1} ... r_n), exp(r2), ..., exp(r_l), r_{l+1}, ..., r_n}.
    """
    rs = tuple(rs)
    if not rs:
        raise PreconditionError("monomial needs at least one factor")
    r = rs[0].r
    for v in rs:
        if not isinstance(v, Series):
            raise PreconditionError(f"{v!r} is not a Series")
        if v.M != m:
            raise PreconditionError(
                f"factor precision {v.M} differs from modulus {m}"
            )
        if v.r != r:
            raise VariableCountMismatch(
                f"factor declares {v.r} variables, expected {r}"
            )
    n = len(rs)
    ell = 0
    while ell < n and rs[ell].eval_t0().is_zero():
        ell += 1
    if ell == 0:
        raise PreconditionError(
            "first factor must have zero constant term"
        )
    for v in rs[ell:]:
        if not v.is_unit():
            raise PreconditionError(
                f"factor {v} after the vanishing block is not a unit"
            )
    head = rs[0]
    for v in rs[ell:]:
        head = head * v
    entries = [ser_exp(head)]
    entries.extend(ser_exp(v) for v in rs[1:ell])
    entries.extend(rs[ell:])
    return MilnorChain.single(MilnorSymbol(entries))


def rel_class(chain: MilnorChain) -> RelClass:
    """Complete invariant of the relative part: expand each symbol into
    its principal-unit terms, then apply phi at the chain's precision."""
    m = chain.M
    expanded = MilnorChain.empty(chain.n, chain.M, chain.r)
    for sym, mult in chain.items():
        expanded = expanded + mil_rel_expand(sym).scale(mult)
    return phi(expanded, m)


def rel_eq(a: MilnorChain, b: MilnorChain) -> bool:
    """Equality of relative classes (constant parts are not compared)."""
    ca = rel_class(a)
    cb = rel_class(b)
    return ca.eq(cb)

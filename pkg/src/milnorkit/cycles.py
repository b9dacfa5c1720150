"""Graph cycles and their residue regulators.

A graph cycle is the locus {y1 = a1, ..., yn = an} for unit series
entries; the regulator at index i is the residue at t = 0 of the
dlog product divided by t^i.  Only graph cycles carry regulators
here: they generate everything relevant, and they are the locus where
the residue needs no curve normalization.

Also here: mod-t^m equivalence with both characterizations
cross-checked, the two reciprocity checks (Steinberg and
multiplicativity), triangular defining systems, coefficient
perturbation with slot bookkeeping, and t-adic polynomial
approximation.
"""

from __future__ import annotations

from .errors import MilnorkitError, PreconditionError, VariableCountMismatch
from .field import RationalFunction
from .forms import KForm, LaurentForm, form_residue, form_wedge_dlog_product
from .milnor import MilnorChain
from .series import Series, ser_congruent_mod


class GraphCycle:
    """{y1 = a1, ..., yn = an} with unit Series entries; modulus m."""

    __slots__ = ("entries", "m")

    def __init__(self, entries, m: int):
        entries = tuple(entries)
        if not entries:
            raise PreconditionError("cycle needs at least one entry")
        if m < 1:
            raise PreconditionError(f"modulus must be >= 1, got {m}")
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
                    f"entry declares {a.r} variables, cycle declares {r}"
                )
            if not a.is_unit():
                raise PreconditionError(
                    f"entry {a} is not a unit (the graph meets a face)"
                )
        if M < m:
            raise PreconditionError(
                f"precision {M} below modulus {m}"
            )
        self.entries = entries
        self.m = m

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def M(self) -> int:
        return self.entries[0].M

    @property
    def r(self) -> int:
        return self.entries[0].r

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.entries) + ")"

    def __repr__(self) -> str:
        return f"GraphCycle(m={self.m}, {self})"


def cyc_regulator(cycle: GraphCycle, i: int) -> KForm:
    """Residue at t = 0 of t^(-i) dlog(a1)∧...∧dlog(an): a form of
    degree n-1 over k."""
    if not 1 <= i <= cycle.m - 1:
        raise PreconditionError(
            f"regulator index {i} out of range 1..{cycle.m - 1}"
        )
    if cycle.M < i + 1:
        raise PreconditionError(
            f"precision {cycle.M} cannot resolve the residue at index {i}"
        )
    # The t^(i-1) coefficient of the dlog product only draws on entry
    # coefficients up to index i, so truncating first is exact and
    # keeps the convolutions short.
    entries = [a.truncate(i + 1) for a in cycle.entries]
    w = form_wedge_dlog_product(entries)
    return form_residue(LaurentForm(i, w))


def chain_regulator(chain: MilnorChain, m: int, i: int) -> KForm:
    """Regulator extended additively over a chain of symbols, each read
    as a graph cycle."""
    out = KForm.zero(chain.r, max(chain.n - 1, 0))
    for sym, mult in chain.items():
        out = out + cyc_regulator(GraphCycle(sym.entries, m), i).scale(mult)
    return out


def cyc_mod_tm_equal(c1: GraphCycle, c2: GraphCycle) -> bool:
    """Entrywise congruence mod t^m, computed two ways and cross-checked:
    coefficient agreement below t^m, and a·inv(b) = 1 + (t^m)."""
    if c1.n != c2.n:
        raise PreconditionError(f"cycle lengths {c1.n} and {c2.n} differ")
    if c1.m != c2.m:
        raise PreconditionError(f"moduli {c1.m} and {c2.m} differ")
    if c1.r != c2.r:
        raise VariableCountMismatch(
            f"cycles declare {c1.r} and {c2.r} variables"
        )
    m = c1.m
    one = Series.const(c1.r, m, 1)
    by_coeffs = all(
        ser_congruent_mod(a, b, m) for a, b in zip(c1.entries, c2.entries)
    )
    by_ratio = all(
        (a.truncate(m) * b.truncate(m).inv()).eq(one)
        for a, b in zip(c1.entries, c2.entries)
    )
    if by_coeffs != by_ratio:
        raise MilnorkitError(
            "internal: the two mod-t^m characterizations disagree"
        )
    return by_coeffs


def cyc_check_steinberg(a: Series, tail, i: int, m: int) -> KForm:
    """Regulator of (a, 1-a, tail): the contract is the zero form.

    Refuses when a(0) is 0 or 1; the pair (a, 1-a) is only a symbol
    when both are units.
    """
    a0 = a.eval_t0()
    if a0.is_zero():
        raise PreconditionError("a is not a unit at t = 0")
    if a0.eq(RationalFunction.one(a.r)):
        raise PreconditionError("1-a is not a unit at t = 0")
    one_minus = Series.const(a.r, a.M, 1) - a
    return cyc_regulator(GraphCycle((a, one_minus) + tuple(tail), m), i)


def cyc_check_multiplicativity(a: Series, b: Series, tail, i: int,
                               m: int) -> KForm:
    """Regulator of (ab, tail) minus those of (a, tail) and (b, tail):
    the contract is the zero form."""
    # Each regulator reads entry coefficients below t^m only, and those
    # coefficients of ab depend only on a and b below t^m, so the
    # product may be formed at precision m.
    if a.M > m:
        a = a.truncate(m)
        b = b.truncate(m)
        tail = tuple(v.truncate(m) for v in tail)
    else:
        tail = tuple(tail)
    top = cyc_regulator(GraphCycle((a * b,) + tail, m), i)
    left = cyc_regulator(GraphCycle((a,) + tail, m), i)
    right = cyc_regulator(GraphCycle((b,) + tail, m), i)
    return top - left - right


def cyc_graph_move(cycle: GraphCycle) -> GraphCycle:
    """Replace entries by their truncations below t^m: a polynomial
    representative of the same mod-t^m class, at the same precision."""
    m = cycle.m
    zero = RationalFunction.zero(cycle.r)
    moved = []
    for a in cycle.entries:
        moved.append(Series(a.M, a.coeffs[:m] + (zero,) * (a.M - m)))
    return GraphCycle(moved, m)


# ---------------------------------------------------------------------------
# Triangular defining systems and coefficient perturbation


def _ymono_key(e) -> tuple:
    e = tuple(int(k) for k in e)
    if any(k < 0 for k in e):
        raise PreconditionError(f"negative exponent in y-monomial {e}")
    return e


class TriangularSystem:
    """Defining equations f1,...,fn: sparse polynomials in y1..yn with
    Series coefficients.  The constructor checks shape only; conformance
    to the triangular conditions is the job of cyc_validate_triangular.
    """

    __slots__ = ("n", "M", "r", "polys")

    def __init__(self, n: int, M: int, r: int, polys):
        polys = [dict(p) for p in polys]
        if len(polys) != n:
            raise PreconditionError(
                f"expected {n} equations, got {len(polys)}"
            )
        clean = []
        for p in polys:
            out = {}
            for e, c in p.items():
                e = _ymono_key(e)
                if len(e) != n:
                    raise PreconditionError(
                        f"y-exponent {e} has length {len(e)}, expected {n}"
                    )
                if not isinstance(c, Series):
                    raise PreconditionError(f"coefficient {c!r} is not a Series")
                if c.M != M or c.r != r:
                    raise PreconditionError(
                        f"coefficient shape (M={c.M}, r={c.r}) does not match "
                        f"system shape (M={M}, r={r})"
                    )
                if not c.is_zero():
                    out[e] = c
            clean.append(out)
        self.n = n
        self.M = M
        self.r = r
        self.polys = clean

    def eq(self, other: "TriangularSystem") -> bool:
        if (self.n, self.M, self.r) != (other.n, other.M, other.r):
            return False
        for p, q in zip(self.polys, other.polys):
            if set(p) != set(q):
                return False
            if not all(p[e].eq(q[e]) for e in p):
                return False
        return True

    def __str__(self) -> str:
        return "{" + ", ".join(_ypoly_str(p, lambda c: str(c))
                               for p in self.polys) + "}"

    def __repr__(self) -> str:
        return f"TriangularSystem({self})"


def _ymono_str(e: tuple) -> str:
    parts = []
    for j, k in enumerate(e):
        if k == 1:
            parts.append(f"y{j + 1}")
        elif k > 1:
            parts.append(f"y{j + 1}^{k}")
    return "*".join(parts)


def _ypoly_str(p: dict, coeff_str) -> str:
    if not p:
        return "0"
    pieces = []
    for e in sorted(p, reverse=True):
        mono = _ymono_str(e)
        c_s = coeff_str(p[e])
        if not mono:
            piece = c_s if _is_plain(c_s) else f"({c_s})"
        elif c_s == "1":
            piece = mono
        elif c_s == "-1":
            piece = "-" + mono
        elif _is_plain(c_s):
            piece = f"{c_s}*{mono}"
        else:
            piece = f"({c_s})*{mono}"
        pieces.append(piece)
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


def _is_plain(s: str) -> bool:
    """A coefficient string safe to splice in front of '*' unparenthesized."""
    core = s[1:] if s.startswith("-") else s
    return core.isalnum()


class PerturbedFamily:
    """The source system with each nonzero coefficient replaced by a
    slot indeterminate x1..xM, plus the original coefficient vector and
    the slot table."""

    __slots__ = ("n", "M", "r", "polys", "alpha0", "slots")

    def __init__(self, n: int, M: int, r: int, polys, alpha0, slots):
        self.n = n
        self.M = M
        self.r = r
        self.polys = [dict(p) for p in polys]  # y-exponent -> slot index
        self.alpha0 = tuple(alpha0)
        self.slots = tuple(slots)  # slot order: (equation index, y-exponent)
        if len(self.alpha0) != len(self.slots):
            raise PreconditionError(
                "slot table and coefficient vector lengths differ"
            )

    def __str__(self) -> str:
        return "{" + ", ".join(
            _ypoly_str(p, lambda s: f"x{s}") for p in self.polys
        ) + "}"

    def slot_table(self) -> str:
        lines = []
        for idx, (eq, e) in enumerate(self.slots, start=1):
            mono = _ymono_str(e) or "1"
            lines.append(f"x{idx}: eq {eq}, monomial {mono}, value {self.alpha0[idx - 1]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"PerturbedFamily({self})"


def cyc_validate_triangular(system: TriangularSystem):
    """Check the triangular variable restriction and the three shape
    conditions; report the first violation."""
    for idx, p in enumerate(system.polys, start=1):
        for e in p:
            if any(e[j] for j in range(idx, system.n)):
                return TriangularDiagnostics(
                    False, "triangular",
                    f"f{idx} involves y{_first_late_var(e, idx) + 1}"
                )
        deg = max((e[idx - 1] for e in p), default=0)
        if deg < 1:
            return TriangularDiagnostics(
                False, "degree", f"f{idx} has y{idx}-degree 0"
            )
        for e in p:
            if e[idx - 1] == deg and any(e[j] for j in range(idx - 1)):
                return TriangularDiagnostics(
                    False, "leading",
                    f"leading y{idx}-coefficient of f{idx} involves other variables"
                )
        const = p.get((0,) * system.n)
        one = Series.const(system.r, system.M, 1)
        if const is None or not const.eq(one):
            return TriangularDiagnostics(
                False, "constant", f"constant term of f{idx} is not 1"
            )
    return TriangularDiagnostics(True, None, "valid")


def _first_late_var(e: tuple, idx: int) -> int:
    for j in range(idx, len(e)):
        if e[j]:
            return j
    return idx


class TriangularDiagnostics:
    __slots__ = ("ok", "condition", "message")

    def __init__(self, ok: bool, condition, message: str):
        self.ok = ok
        self.condition = condition
        self.message = message

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"TriangularDiagnostics(ok={self.ok}, {self.condition}: {self.message})"


def graph_to_triangular(cycle: GraphCycle) -> TriangularSystem:
    """The normalized presentation f_i = 1 - inv(a_i) y_i of a graph."""
    n = cycle.n
    polys = []
    for idx, a in enumerate(cycle.entries):
        e = tuple(1 if j == idx else 0 for j in range(n))
        polys.append({
            (0,) * n: Series.const(cycle.r, cycle.M, 1),
            e: -a.inv(),
        })
    return TriangularSystem(n, cycle.M, cycle.r, polys)


def cyc_perturb(system: TriangularSystem) -> PerturbedFamily:
    """One slot per nonzero monomial, numbered by equation then by
    descending monomial order; records the original coefficients."""
    polys = []
    alpha0 = []
    slots = []
    next_slot = 1
    for eq_idx, p in enumerate(system.polys, start=1):
        out = {}
        for e in sorted(p, reverse=True):
            out[e] = next_slot
            alpha0.append(p[e])
            slots.append((eq_idx, e))
            next_slot += 1
        polys.append(out)
    return PerturbedFamily(system.n, system.M, system.r, polys, alpha0, slots)


def cyc_specialize(family: PerturbedFamily, alpha) -> TriangularSystem:
    """Substitute slot values; zero values drop their monomials."""
    alpha = tuple(alpha)
    if len(alpha) != len(family.slots):
        raise PreconditionError(
            f"expected {len(family.slots)} slot values, got {len(alpha)}"
        )
    for v in alpha:
        if not isinstance(v, Series):
            raise PreconditionError(f"slot value {v!r} is not a Series")
    M = alpha[0].M if alpha else family.M
    polys = []
    for p in family.polys:
        polys.append({e: alpha[s - 1] for e, s in p.items()})
    return TriangularSystem(family.n, M, family.r, polys)


def cyc_ball_member(alpha0, alpha, N: int) -> bool:
    """Sup-norm ball membership: every component difference has
    valuation >= N."""
    alpha0 = tuple(alpha0)
    alpha = tuple(alpha)
    if len(alpha0) != len(alpha):
        raise PreconditionError(
            f"vector lengths {len(alpha0)} and {len(alpha)} differ"
        )
    for a0, a in zip(alpha0, alpha):
        P = min(a0.M, a.M)
        if P < N:
            raise PreconditionError(
                f"precision {P} cannot certify radius exponent {N}"
            )
        diff = a0.truncate(P) - a.truncate(P)
        if diff.valuation() < N:
            return False
    return True


def cyc_approximate_polynomial(alpha0, N: int):
    """Truncate each component below t^N: a polynomial vector inside
    the radius-N ball around the input."""
    alpha0 = tuple(alpha0)
    out = []
    for a in alpha0:
        if N > a.M:
            raise PreconditionError(
                f"target exponent {N} above precision {a.M}"
            )
        zero = RationalFunction.zero(a.r)
        out.append(Series(a.M, a.coeffs[:N] + (zero,) * (a.M - N)))
    return tuple(out)

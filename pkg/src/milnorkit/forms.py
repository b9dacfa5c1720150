"""Exterior differential forms.

Four layers:

  KForm        forms over k, dx-basis only
  SeriesForm   forms over the truncated series ring, dx and dt parts;
               the over_km flag imposes the torsion relation that kills
               the top t-power of every dt coefficient
  LaurentForm  t^(-i) times a SeriesForm body
  RelClass     a vector of m-1 KForms, the normal form of a relative
               class with the dt-terms rewritten away

dt is always stored in the leftmost wedge slot; permutation signs are
applied when terms are built.  Subset keys are strictly increasing
tuples of variable indices (1-based).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError, VariableCountMismatch
from .field import RationalFunction
from .series import Series


def _subset_key(S, r: int) -> tuple:
    S = tuple(int(j) for j in S)
    if list(S) != sorted(set(S)):
        raise PreconditionError(f"subset {S} is not strictly increasing")
    if S and (S[0] < 1 or S[-1] > r):
        raise PreconditionError(f"subset {S} out of variable range 1..{r}")
    return S


def _wedge_subsets(S: tuple, T: tuple):
    """Sign and merged key for dx_S ∧ dx_T; sign 0 when they overlap."""
    if set(S) & set(T):
        return 0, ()
    inversions = sum(1 for s in S for t in T if s > t)
    sign = -1 if inversions % 2 else 1
    return sign, tuple(sorted(S + T))


def _insert_sign(j: int, S: tuple) -> int:
    """Sign of dx_j ∧ dx_S relative to the sorted merge."""
    return -1 if sum(1 for s in S if s < j) % 2 else 1


class KForm:
    """Differential form over k: sparse map from sorted subsets to coefficients."""

    __slots__ = ("r", "degree", "terms")

    def __init__(self, r: int, degree: int, terms: dict):
        if degree < 0:
            raise PreconditionError(f"negative form degree {degree}")
        out = {}
        for S, c in terms.items():
            S = _subset_key(S, r)
            if len(S) != degree:
                raise PreconditionError(
                    f"subset {S} has size {len(S)}, expected degree {degree}"
                )
            if not isinstance(c, RationalFunction):
                raise PreconditionError(f"coefficient {c!r} is not a field element")
            if c.r != r:
                raise VariableCountMismatch(
                    f"coefficient declares {c.r} variables, form declares {r}"
                )
            if not c.is_zero():
                out[S] = c
        self.r = r
        self.degree = degree
        self.terms = out

    @classmethod
    def zero(cls, r: int, degree: int) -> "KForm":
        return cls(r, degree, {})

    @classmethod
    def scalar(cls, c: RationalFunction) -> "KForm":
        return cls(c.r, 0, {(): c})

    @classmethod
    def dx(cls, r: int, j: int) -> "KForm":
        if not 1 <= j <= r:
            raise PreconditionError(f"variable index {j} out of range 1..{r}")
        return cls(r, 1, {(j,): RationalFunction.one(r)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "KForm") -> None:
        if self.r != other.r:
            raise VariableCountMismatch(
                f"operands declare {self.r} and {other.r} variables"
            )

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        if self.degree != other.degree:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise PreconditionError(
                f"cannot add forms of degree {self.degree} and {other.degree}"
            )
        out = dict(self.terms)
        for S, c in other.terms.items():
            out[S] = out[S] + c if S in out else c
        return KForm(self.r, self.degree, out)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.r, self.degree, {S: -c for S, c in self.terms.items()})

    def scale(self, c) -> "KForm":
        if not isinstance(c, RationalFunction):
            c = RationalFunction.const(self.r, c)
        return KForm(self.r, self.degree, {S: v * c for S, v in self.terms.items()})

    def wedge(self, other: "KForm") -> "KForm":
        self._check(other)
        out: dict = {}
        for S, a in self.terms.items():
            for T, b in other.terms.items():
                sign, key = _wedge_subsets(S, T)
                if sign == 0:
                    continue
                c = a * b if sign > 0 else -(a * b)
                out[key] = out[key] + c if key in out else c
        return KForm(self.r, self.degree + other.degree, out)

    def d(self) -> "KForm":
        out: dict = {}
        for S, c in self.terms.items():
            for j in range(1, self.r + 1):
                if j in S:
                    continue
                dc = c.partial(j)
                if dc.is_zero():
                    continue
                sign = _insert_sign(j, S)
                key = tuple(sorted(S + (j,)))
                v = dc if sign > 0 else -dc
                out[key] = out[key] + v if key in out else v
        return KForm(self.r, self.degree + 1, out)

    def eq(self, other: "KForm") -> bool:
        self._check(other)
        if self.degree != other.degree:
            # distinct graded pieces only agree at zero
            return self.is_zero() and other.is_zero()
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[S].eq(other.terms[S]) for S in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, KForm) and self.eq(other)

    def __hash__(self):
        raise TypeError("KForm is unhashable; compare with eq")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        if self.degree == 0:
            return str(self.terms[()])
        pieces = []
        for S in sorted(self.terms):
            pieces.append(_kterm_str(self.terms[S], S))
        out = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self) -> str:
        return f"KForm(deg={self.degree}, {self})"


def _dx_label(S: tuple) -> str:
    return "^".join(f"dx{j}" for j in S)


def _kterm_str(c: RationalFunction, S: tuple) -> str:
    label = _dx_label(S)
    if c == RationalFunction.one(c.r):
        return label
    if c == RationalFunction.const(c.r, -1):
        return "-" + label
    c_s = str(c)
    if c.is_sum_str() or "/" in c_s:
        c_s = f"({c_s})"
    return f"{c_s} {label}"


class SeriesForm:
    """Form over k[t]/(t^M): dx-part plus dt∧(dx-part), dt leftmost.

    over_km imposes the quotient relation that zeroes index M-1 of
    every dt coefficient; the constructor applies it, so arithmetic on
    reduced forms stays reduced.
    """

    __slots__ = ("r", "degree", "M", "over_km", "dx", "dt")

    def __init__(self, r: int, degree: int, M: int, dx: dict, dt: dict,
                 over_km: bool = False):
        if degree < 0:
            raise PreconditionError(f"negative form degree {degree}")
        if M < 1:
            raise PreconditionError(f"precision must be >= 1, got {M}")
        self.r = r
        self.degree = degree
        self.M = M
        self.over_km = over_km
        self.dx = self._clean(dx, degree, clip=False)
        if degree == 0:
            if dt:
                raise PreconditionError("degree-0 form cannot carry dt-terms")
            self.dt = {}
        else:
            self.dt = self._clean(dt, degree - 1, clip=over_km)

    def _clean(self, part: dict, size: int, clip: bool) -> dict:
        out = {}
        for S, s in part.items():
            S = _subset_key(S, self.r)
            if len(S) != size:
                raise PreconditionError(
                    f"subset {S} has size {len(S)}, expected {size}"
                )
            if not isinstance(s, Series):
                raise PreconditionError(f"coefficient {s!r} is not a Series")
            if s.M != self.M:
                raise PreconditionError(
                    f"coefficient precision {s.M} differs from form precision {self.M}"
                )
            if s.r != self.r:
                raise VariableCountMismatch(
                    f"coefficient declares {s.r} variables, form declares {self.r}"
                )
            if clip and not s.coeffs[self.M - 1].is_zero():
                s = Series(
                    self.M,
                    s.coeffs[: self.M - 1] + (RationalFunction.zero(self.r),),
                )
            if not s.is_zero():
                out[S] = s
        return out

    @classmethod
    def zero(cls, r: int, degree: int, M: int, over_km: bool = False) -> "SeriesForm":
        return cls(r, degree, M, {}, {}, over_km)

    @classmethod
    def scalar(cls, s: Series, over_km: bool = False) -> "SeriesForm":
        return cls(s.r, 0, s.M, {(): s}, {}, over_km)

    @classmethod
    def dt_form(cls, r: int, M: int, over_km: bool = False) -> "SeriesForm":
        return cls(r, 1, M, {}, {(): Series.const(r, M, 1)}, over_km)

    def is_zero(self) -> bool:
        return not self.dx and not self.dt

    def _check(self, other: "SeriesForm") -> None:
        if self.r != other.r:
            raise VariableCountMismatch(
                f"operands declare {self.r} and {other.r} variables"
            )
        if self.M != other.M:
            raise PreconditionError(
                f"operands carry precision {self.M} and {other.M}"
            )
        if self.over_km != other.over_km:
            raise PreconditionError("cannot mix reduced and unreduced forms")

    def __add__(self, other: "SeriesForm") -> "SeriesForm":
        self._check(other)
        if self.degree != other.degree:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise PreconditionError(
                f"cannot add forms of degree {self.degree} and {other.degree}"
            )

        def merge(a: dict, b: dict) -> dict:
            out = dict(a)
            for S, s in b.items():
                out[S] = out[S] + s if S in out else s
            return out

        return SeriesForm(self.r, self.degree, self.M,
                          merge(self.dx, other.dx), merge(self.dt, other.dt),
                          self.over_km)

    def __sub__(self, other: "SeriesForm") -> "SeriesForm":
        return self + (-other)

    def __neg__(self) -> "SeriesForm":
        return SeriesForm(self.r, self.degree, self.M,
                          {S: -s for S, s in self.dx.items()},
                          {S: -s for S, s in self.dt.items()},
                          self.over_km)

    def scale_series(self, c: Series) -> "SeriesForm":
        if c.M != self.M:
            raise PreconditionError(
                f"scalar precision {c.M} differs from form precision {self.M}"
            )
        return SeriesForm(self.r, self.degree, self.M,
                          {S: s * c for S, s in self.dx.items()},
                          {S: s * c for S, s in self.dt.items()},
                          self.over_km)

    def wedge(self, other: "SeriesForm") -> "SeriesForm":
        self._check(other)
        p = self.degree

        def acc(out: dict, S: tuple, T: tuple, v: Series, flip: bool) -> None:
            sign, key = _wedge_subsets(S, T)
            if sign == 0:
                return
            if flip:
                sign = -sign
            w = v if sign > 0 else -v
            out[key] = out[key] + w if key in out else w

        dx_out: dict = {}
        for S, a in self.dx.items():
            for T, b in other.dx.items():
                acc(dx_out, S, T, a * b, False)
        dt_out: dict = {}
        # dt∧(self_dt)∧(other_dx), plus (-1)^p (self_dx)∧dt∧(other_dt)
        for S, a in self.dt.items():
            for T, b in other.dx.items():
                acc(dt_out, S, T, a * b, False)
        flip = p % 2 == 1
        for S, a in self.dx.items():
            for T, b in other.dt.items():
                acc(dt_out, S, T, a * b, flip)
        return SeriesForm(self.r, p + other.degree, self.M, dx_out, dt_out,
                          self.over_km)

    def d(self) -> "SeriesForm":
        dx_out: dict = {}
        dt_out: dict = {}

        def acc(out: dict, key: tuple, v: Series, sign: int) -> None:
            w = v if sign > 0 else -v
            out[key] = out[key] + w if key in out else w

        for S, s in self.dx.items():
            for j in range(1, self.r + 1):
                if j in S:
                    continue
                ds = s.partial(j)
                if ds.is_zero():
                    continue
                acc(dx_out, tuple(sorted(S + (j,))), ds, _insert_sign(j, S))
            st = s.dt()
            if not st.is_zero():
                acc(dt_out, S, st, 1)
        for S, s in self.dt.items():
            # d(b dt∧dx_S) = -dt∧(db_x∧dx_S)
            for j in range(1, self.r + 1):
                if j in S:
                    continue
                ds = s.partial(j)
                if ds.is_zero():
                    continue
                acc(dt_out, tuple(sorted(S + (j,))), ds, -_insert_sign(j, S))
        return SeriesForm(self.r, self.degree + 1, self.M, dx_out, dt_out,
                          self.over_km)

    def eval_t0(self) -> KForm:
        return KForm(self.r, self.degree,
                     {S: s.coeffs[0] for S, s in self.dx.items()})

    def reduce_mod_km(self, m: int) -> "SeriesForm":
        if self.M < m:
            raise PreconditionError(
                f"cannot reduce precision-{self.M} form mod t^{m}"
            )
        return SeriesForm(self.r, self.degree, m,
                          {S: s.truncate(m) for S, s in self.dx.items()},
                          {S: s.truncate(m) for S, s in self.dt.items()},
                          over_km=True)

    def eq(self, other: "SeriesForm") -> bool:
        self._check(other)
        if self.degree != other.degree:
            return self.is_zero() and other.is_zero()
        if set(self.dx) != set(other.dx) or set(self.dt) != set(other.dt):
            return False
        return (all(self.dx[S].eq(other.dx[S]) for S in self.dx)
                and all(self.dt[S].eq(other.dt[S]) for S in self.dt))

    def __str__(self) -> str:
        pieces = []
        for S in sorted(self.dt):
            label = "dt" if not S else "dt^" + _dx_label(S)
            pieces.append(_sterm_str(self.dt[S], label))
        for S in sorted(self.dx):
            label = _dx_label(S) if S else ""
            pieces.append(_sterm_str(self.dx[S], label))
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        flag = ", over_km" if self.over_km else ""
        return f"SeriesForm(deg={self.degree}, M={self.M}{flag}, {self})"


def _sterm_str(s: Series, label: str) -> str:
    body = str(s)
    if not label:
        return body
    if body == "1":
        return label
    return f"({body}) {label}"


class LaurentForm:
    """t^(-pole_order) times a SeriesForm body (not reduced)."""

    __slots__ = ("pole_order", "body")

    def __init__(self, pole_order: int, body: SeriesForm):
        if pole_order < 0:
            raise PreconditionError(f"negative pole order {pole_order}")
        if body.over_km:
            raise PreconditionError("Laurent body must not be reduced mod t^m")
        self.pole_order = pole_order
        self.body = body

    def __repr__(self) -> str:
        return f"LaurentForm(pole={self.pole_order}, {self.body})"


class RelClass:
    """Vector (α₁, ..., α_{m-1}) of KForms: coefficient of t^i at index i."""

    __slots__ = ("r", "degree", "m", "components")

    def __init__(self, r: int, degree: int, m: int, components):
        components = tuple(components)
        if m < 1:
            raise PreconditionError(f"modulus must be >= 1, got {m}")
        if len(components) != m - 1:
            raise PreconditionError(
                f"expected {m - 1} components, got {len(components)}"
            )
        for a in components:
            if not isinstance(a, KForm):
                raise PreconditionError(f"component {a!r} is not a KForm")
            if a.r != r:
                raise VariableCountMismatch(
                    f"component declares {a.r} variables, class declares {r}"
                )
            if a.degree != degree and not a.is_zero():
                raise PreconditionError(
                    f"component degree {a.degree} differs from class degree {degree}"
                )
        self.r = r
        self.degree = degree
        self.m = m
        self.components = components

    @classmethod
    def zero(cls, r: int, degree: int, m: int) -> "RelClass":
        return cls(r, degree, m, tuple(KForm.zero(r, degree) for _ in range(m - 1)))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.components)

    def _check(self, other: "RelClass") -> None:
        if self.r != other.r:
            raise VariableCountMismatch(
                f"operands declare {self.r} and {other.r} variables"
            )
        if self.m != other.m:
            raise PreconditionError(
                f"operands carry modulus {self.m} and {other.m}"
            )

    def __add__(self, other: "RelClass") -> "RelClass":
        self._check(other)
        if self.degree != other.degree:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise PreconditionError(
                f"cannot add classes of degree {self.degree} and {other.degree}"
            )
        return RelClass(self.r, self.degree, self.m,
                        tuple(a + b for a, b in
                              zip(self.components, other.components)))

    def __neg__(self) -> "RelClass":
        return RelClass(self.r, self.degree, self.m,
                        tuple(-a for a in self.components))

    def __sub__(self, other: "RelClass") -> "RelClass":
        return self + (-other)

    def scale(self, c: int) -> "RelClass":
        return RelClass(self.r, self.degree, self.m,
                        tuple(a.scale(c) for a in self.components))

    def eq(self, other: "RelClass") -> bool:
        self._check(other)
        return all(a.eq(b) for a, b in zip(self.components, other.components))

    def __eq__(self, other) -> bool:
        return isinstance(other, RelClass) and self.eq(other)

    def __hash__(self):
        raise TypeError("RelClass is unhashable; compare with eq")

    def __str__(self) -> str:
        if self.m == 1:
            return "0"
        return "\n".join(f"[i={i + 1}] {a}"
                         for i, a in enumerate(self.components))

    def __repr__(self) -> str:
        return f"RelClass(m={self.m}, deg={self.degree}, {list(map(str, self.components))})"


def form_wedge(a, b):
    if isinstance(a, KForm) and isinstance(b, KForm):
        return a.wedge(b)
    if isinstance(a, SeriesForm) and isinstance(b, SeriesForm):
        return a.wedge(b)
    raise PreconditionError("wedge needs two forms of the same kind")


def form_d(a):
    return a.d()


def form_dlog(a: Series) -> SeriesForm:
    """da/a as a degree-1 SeriesForm at the precision of a."""
    ainv = a.inv()
    dx = {}
    for j in range(1, a.r + 1):
        s = a.partial(j) * ainv
        if not s.is_zero():
            dx[(j,)] = s
    dt = {}
    s = a.dt() * ainv
    if not s.is_zero():
        dt[()] = s
    return SeriesForm(a.r, 1, a.M, dx, dt)


def form_residue(w: LaurentForm) -> KForm:
    """Coefficient of dt/t: for pole order i, read index i-1 of each
    dt-part coefficient."""
    i = w.pole_order
    if i < 1:
        raise PreconditionError(f"residue needs pole order >= 1, got {i}")
    body = w.body
    if body.M < i:
        raise PreconditionError(
            f"precision {body.M} cannot resolve index {i - 1}"
        )
    return KForm(body.r, max(body.degree - 1, 0),
                 {S: s.coeffs[i - 1] for S, s in body.dt.items()})


def form_eval_t0(w: SeriesForm) -> KForm:
    return w.eval_t0()


def form_reduce_mod_km(w: SeriesForm, m: int) -> SeriesForm:
    return w.reduce_mod_km(m)


def form_normalize_relative(w: SeriesForm) -> RelClass:
    """Dt-elimination normal form of a relative form over k_m.

    Scans t-powers upward; the term at t^j dt rewrites to a dt-free
    term at t^(j+1) (subtracting an exact form), so a single ascending
    pass clears every dt-term.
    """
    if not w.over_km:
        raise PreconditionError("normalization needs a form reduced mod t^m")
    if not w.eval_t0().is_zero():
        raise PreconditionError("normalization needs a relative form (zero at t=0)")
    m = w.M
    r = w.r
    p = w.degree
    dx_grid: list = [dict() for _ in range(m)]
    for S, s in w.dx.items():
        for j, c in enumerate(s.coeffs):
            if not c.is_zero():
                dx_grid[j][S] = c
    dt_grid: list = [dict() for _ in range(m)]
    for S, s in w.dt.items():
        for j, c in enumerate(s.coeffs):
            if not c.is_zero():
                dt_grid[j][S] = c
    for j in range(m - 1):
        if not dt_grid[j]:
            continue
        beta = KForm(r, p - 1, dt_grid[j])
        dbeta = beta.d().scale(Fraction(-1, j + 1))
        for S, c in dbeta.terms.items():
            tgt = dx_grid[j + 1]
            tgt[S] = tgt[S] + c if S in tgt else c
        dt_grid[j] = {}
    components = []
    for i in range(1, m):
        components.append(KForm(r, p, dx_grid[i]))
    return RelClass(r, p, m, components)


def rel_embed(c: RelClass) -> SeriesForm:
    """The section sending (α₁,...,α_{m-1}) to Σ t^i α_i over k_m."""
    r = c.r
    m = c.m
    dx: dict = {}
    zero = RationalFunction.zero(r)
    for i, a in enumerate(c.components, start=1):
        for S, v in a.terms.items():
            if S not in dx:
                dx[S] = [zero] * m
            dx[S][i] = dx[S][i] + v
    return SeriesForm(r, c.degree, m,
                      {S: Series(m, tuple(cs)) for S, cs in dx.items()},
                      {}, over_km=True)


def form_wedge_dlog_product(entries) -> SeriesForm:
    """⋀ⱼ dlog(aⱼ) for unit Series of equal precision."""
    entries = list(entries)
    if not entries:
        raise PreconditionError("empty dlog product")
    out = form_dlog(entries[0])
    for a in entries[1:]:
        out = out.wedge(form_dlog(a))
    return out


def laurent_d(w: LaurentForm) -> LaurentForm:
    """Exterior derivative carried across the pole:
    d(t^-i ω) = t^-(i+1) (t·dω - i·dt∧ω)."""
    body = w.body
    i = w.pole_order
    t = Series.t(body.r, body.M)
    term1 = body.d().scale_series(t)
    dt = SeriesForm.dt_form(body.r, body.M)
    term2 = dt.wedge(body).scale_series(Series.const(body.r, body.M, i))
    return LaurentForm(i + 1, term1 - term2)

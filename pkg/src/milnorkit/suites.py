"""Seeded verification suites.

Each suite runs an identity check over derived-seed trials and
produces a deterministic plain-text report: same inputs, same bytes.
Failures carry the first counterexample only; counts carry the rest.

The six named suites back the cli's verify command; the algebra suites
at the bottom check the ring/complex axioms and are exercised by the
test battery directly.
"""

from __future__ import annotations

from .cycles import (
    GraphCycle,
    chain_regulator,
    cyc_check_multiplicativity,
    cyc_check_steinberg,
    cyc_mod_tm_equal,
    cyc_regulator,
)
from .errors import PreconditionError
from .field import RationalFunction
from .forms import (
    KForm,
    RelClass,
    SeriesForm,
    form_dlog,
    form_normalize_relative,
    rel_embed,
)
from .milnor import phi, psi_general, psi_slot
from .randgen import (
    rand_kform,
    rand_monomial,
    rand_principal_unit,
    rand_relative_form,
    rand_series,
    rand_series_form,
    rand_tpart_series,
    rand_unit_series,
    trial_rng,
)
from .series import Series, ser_exp, ser_log


class SuiteReport:
    __slots__ = ("name", "params", "trials", "seed", "passed", "failed",
                 "first_trial", "first_message")

    def __init__(self, name: str, params, trials: int, seed: int):
        self.name = name
        self.params = tuple(params)
        self.trials = trials
        self.seed = seed
        self.passed = 0
        self.failed = 0
        self.first_trial = None
        self.first_message = None

    def record(self, trial: int, ok: bool, message: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_trial is None:
                self.first_trial = trial
                self.first_message = message

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def render(self) -> str:
        ctx = " ".join(f"{k}={v}" for k, v in self.params)
        line = (f"suite {self.name}: {ctx} trials={self.trials} "
                f"seed={self.seed} pass={self.passed} fail={self.failed}")
        if self.first_trial is not None:
            line += f"\n  trial {self.first_trial}: {self.first_message}"
        return line

    def to_json(self) -> dict:
        out = {
            "suite": self.name,
            "params": {k: v for k, v in self.params},
            "trials": self.trials,
            "seed": self.seed,
            "pass": self.passed,
            "fail": self.failed,
        }
        if self.first_trial is not None:
            out["first_failure"] = {
                "trial": self.first_trial,
                "message": self.first_message,
            }
        return out


def monomial_kform(rs) -> KForm:
    """r1 dr2 ∧ ... ∧ drn as a form over k (the slot-map oracle side)."""
    out = KForm.scalar(rs[0])
    for v in rs[1:]:
        out = out.wedge(KForm.scalar(v).d())
    return out


def run_steinberg(r: int, m: int, n: int, M: int, seed: int,
                  trials: int) -> SuiteReport:
    if n < 2:
        raise PreconditionError("the Steinberg pair needs n >= 2")
    rep = SuiteReport("steinberg", [("r", r), ("m", m), ("n", n)], trials, seed)
    one = RationalFunction.one(r)
    for k in range(trials):
        rng = trial_rng(seed, "steinberg", k)
        while True:
            a = rand_unit_series(rng, r, M)
            a0 = a.eval_t0()
            if not a0.eq(one):
                break
        tail = tuple(rand_unit_series(rng, r, M) for _ in range(n - 2))
        bad = None
        for i in range(1, m):
            got = cyc_check_steinberg(a, tail, i, m)
            if not got.is_zero():
                bad = f"i={i} a={a} tail={list(map(str, tail))} gave {got}"
                break
        rep.record(k, bad is None, bad or "")
    return rep


def run_multiplicativity(r: int, m: int, n: int, M: int, seed: int,
                         trials: int) -> SuiteReport:
    rep = SuiteReport("multiplicativity", [("r", r), ("m", m), ("n", n)],
                      trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "multiplicativity", k)
        a = rand_unit_series(rng, r, M)
        b = rand_unit_series(rng, r, M)
        tail = tuple(rand_unit_series(rng, r, M) for _ in range(n - 1))
        bad = None
        for i in range(1, m):
            got = cyc_check_multiplicativity(a, b, tail, i, m)
            if not got.is_zero():
                bad = f"i={i} a={a} b={b} gave {got}"
                break
        rep.record(k, bad is None, bad or "")
    return rep


def run_modtm(r: int, m: int, n: int, M: int, seed: int,
              trials: int) -> SuiteReport:
    rep = SuiteReport("modtm", [("r", r), ("m", m), ("n", n)], trials, seed)
    one = Series.const(r, M, 1)
    zero = RationalFunction.zero(r)
    for k in range(trials):
        rng = trial_rng(seed, "modtm", k)
        entries = [rand_unit_series(rng, r, M) for _ in range(n)]
        moved = []
        for a in entries:
            junk = rand_series(rng, r, M)
            shifted = Series(M, (zero,) * m + junk.coeffs[: M - m])
            if rng.random() < 0.5:
                moved.append(a * (one + shifted))
            else:
                moved.append(a + shifted)
        c1 = GraphCycle(entries, m)
        c2 = GraphCycle(moved, m)
        bad = None
        if not cyc_mod_tm_equal(c1, c2):
            bad = "perturbed cycle not congruent mod t^m"
        else:
            for i in range(1, m):
                u = cyc_regulator(c1, i)
                v = cyc_regulator(c2, i)
                if not u.eq(v):
                    bad = f"i={i}: {u} versus {v}"
                    break
        rep.record(k, bad is None, bad or "")
    return rep


def run_roundtrip(r: int, m: int, n: int, M: int, seed: int,
                  trials: int) -> SuiteReport:
    rep = SuiteReport("roundtrip", [("r", r), ("m", m), ("n", n)], trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "roundtrip", k)
        bad = None

        # slot route: the class lands at index i and nowhere else
        rs = rand_monomial(rng, r, n)
        i = rng.randint(1, m - 1) if m > 1 else None
        if i is not None:
            chain = psi_slot(i, [rs], m, r)
            got = phi(chain, m)
            expected_parts = [KForm.zero(r, n - 1)] * (m - 1)
            expected_parts[i - 1] = monomial_kform(rs)
            expected = RelClass(r, n - 1, m, expected_parts)
            if not got.eq(expected):
                bad = f"slot i={i} monomial {list(map(str, rs))}"

        # general route against direct normalization of the same form
        if bad is None:
            ell = rng.randint(1, n)
            factors = [rand_tpart_series(rng, r, m)]
            factors.extend(rand_tpart_series(rng, r, m) for _ in range(ell - 1))
            factors.extend(rand_unit_series(rng, r, m) for _ in range(n - ell))
            got2 = phi(psi_general(factors, m), m)
            w = SeriesForm.scalar(factors[0])
            for v in factors[1:]:
                w = w.wedge(SeriesForm.scalar(v).d())
            expected2 = form_normalize_relative(w.reduce_mod_km(m))
            if not got2.eq(expected2):
                bad = f"general l={ell} factors {list(map(str, factors))}"
        rep.record(k, bad is None, bad or "")
    return rep


def run_orthogonality(r: int, m: int, n: int, M: int, seed: int,
                      trials: int) -> SuiteReport:
    rep = SuiteReport("orthogonality", [("r", r), ("m", m), ("n", n)],
                      trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "orthogonality", k)
        rs = rand_monomial(rng, r, n)
        base = monomial_kform(rs)
        bad = None
        for j in range(1, m):
            chain = psi_slot(j, [rs], m, r)
            for i in range(1, m):
                got = chain_regulator(chain, m, i)
                expected = base.scale(i) if i == j else KForm.zero(r, n - 1)
                if not got.eq(expected):
                    bad = (f"i={i} j={j} monomial {list(map(str, rs))} "
                           f"gave {got}, expected {expected}")
                    break
            if bad:
                break
        rep.record(k, bad is None, bad or "")
    return rep


def run_ikw(r: int, m: int, n: int, M: int, seed: int,
            trials: int) -> SuiteReport:
    """Exact forms normalize to zero; normalization undoes the embedding."""
    rep = SuiteReport("ikw", [("r", r), ("m", m), ("n", n)], trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "ikw", k)
        bad = None
        p = rng.randint(0, min(r, 2))
        eta = rand_relative_form(rng, r, p, m)
        got = form_normalize_relative(eta.d())
        if not got.is_zero():
            bad = f"d of degree-{p} relative form normalized to {got}"
        if bad is None and m > 1:
            comps = [rand_kform(rng, r, p) for _ in range(m - 1)]
            cls = RelClass(r, p, m, comps)
            back = form_normalize_relative(rel_embed(cls))
            if not back.eq(cls):
                bad = "normalize did not invert the embedding"
        rep.record(k, bad is None, bad or "")
    return rep


SUITES = {
    "steinberg": run_steinberg,
    "multiplicativity": run_multiplicativity,
    "modtm": run_modtm,
    "roundtrip": run_roundtrip,
    "orthogonality": run_orthogonality,
    "ikw": run_ikw,
}

SUITE_ORDER = ("steinberg", "multiplicativity", "modtm", "roundtrip",
               "orthogonality", "ikw")


# Algebra-axiom suites (not cli-addressable; the test battery runs them).


def run_algebra_ddzero(r: int, M: int, seed: int, trials: int) -> SuiteReport:
    rep = SuiteReport("algebra-ddzero", [("r", r), ("M", M)], trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "algebra-ddzero", k)
        p = rng.randint(0, r)
        f = rand_kform(rng, r, p)
        w = rand_series_form(rng, r, rng.randint(0, r), M)
        ok = f.d().d().is_zero() and w.d().d().is_zero()
        rep.record(k, ok, "" if ok else f"d(d(.)) nonzero on {f} or {w}")
    return rep


def run_algebra_leibniz(r: int, M: int, seed: int, trials: int) -> SuiteReport:
    rep = SuiteReport("algebra-leibniz", [("r", r), ("M", M)], trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "algebra-leibniz", k)
        p = rng.randint(0, min(r, 2))
        q = rng.randint(0, min(r, 2))
        w = rand_series_form(rng, r, p, M)
        e = rand_series_form(rng, r, q, M)
        lhs = w.wedge(e).d()
        rhs = w.d().wedge(e)
        other = w.wedge(e.d())
        rhs = rhs + (other if p % 2 == 0 else -other)
        ok = lhs.eq(rhs)
        if ok:
            f = rand_kform(rng, r, p)
            g = rand_kform(rng, r, q)
            klhs = f.wedge(g).d()
            krhs = f.d().wedge(g)
            kother = f.wedge(g.d())
            krhs = krhs + (kother if p % 2 == 0 else -kother)
            ok = klhs.eq(krhs)
        rep.record(k, ok, "" if ok else f"Leibniz failed at degrees {p},{q}")
    return rep


def run_algebra_graded_comm(r: int, M: int, seed: int,
                            trials: int) -> SuiteReport:
    rep = SuiteReport("algebra-graded-comm", [("r", r), ("M", M)], trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "algebra-graded-comm", k)
        p = rng.randint(0, min(r + 1, 2))
        q = rng.randint(0, min(r + 1, 2))
        w = rand_series_form(rng, r, p, M)
        e = rand_series_form(rng, r, q, M)
        lhs = w.wedge(e)
        rhs = e.wedge(w)
        if (p * q) % 2 == 1:
            rhs = -rhs
        ok = lhs.eq(rhs)
        rep.record(k, ok, "" if ok else f"graded commutativity failed at {p},{q}")
    return rep


def run_algebra_explog(r: int, M: int, seed: int, trials: int) -> SuiteReport:
    rep = SuiteReport("algebra-explog", [("r", r), ("M", M)], trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "algebra-explog", k)
        s = rand_tpart_series(rng, r, M)
        u = rand_principal_unit(rng, r, M)
        ok = ser_log(ser_exp(s)).eq(s) and ser_exp(ser_log(u)).eq(u)
        rep.record(k, ok, "" if ok else f"exp/log failed on {s} or {u}")
    return rep


def run_algebra_dlogmul(r: int, M: int, seed: int, trials: int) -> SuiteReport:
    rep = SuiteReport("algebra-dlogmul", [("r", r), ("M", M)], trials, seed)
    for k in range(trials):
        rng = trial_rng(seed, "algebra-dlogmul", k)
        a = rand_unit_series(rng, r, M)
        b = rand_unit_series(rng, r, M)
        lhs = form_dlog(a * b)
        rhs = form_dlog(a) + form_dlog(b)
        ok = lhs.eq(rhs)
        rep.record(k, ok, "" if ok else f"dlog multiplicativity failed on {a}, {b}")
    return rep


ALGEBRA_SUITES = (
    run_algebra_ddzero,
    run_algebra_leibniz,
    run_algebra_graded_comm,
    run_algebra_explog,
    run_algebra_dlogmul,
)

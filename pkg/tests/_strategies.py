"""Hypothesis strategies and parse shorthands shared by the battery.

Generated coefficients stay tiny on purpose: every checked law is
exact, so an example's value is its shape, and rational growth is the
only thing that makes a trial slow.
"""

from hypothesis import strategies as st

from milnorkit.field import Poly, RationalFunction
from milnorkit.forms import KForm, SeriesForm
from milnorkit.parser import parse_field, parse_series
from milnorkit.series import Series


def F(text, r):
    return parse_field(text, r)


def S(text, r, M):
    return parse_series(text, r, M)


fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def exponents(r, max_deg):
    return st.tuples(*(st.integers(0, max_deg) for _ in range(r)))


def polys(r, max_deg=3, max_terms=3):
    return st.dictionaries(
        exponents(r, max_deg), fractions, max_size=max_terms
    ).map(lambda d: Poly.from_terms(r, d))


def nonzero_polys(r, max_deg=3, max_terms=3):
    return polys(r, max_deg, max_terms).filter(lambda p: not p.is_zero())


def rationals(r):
    return st.tuples(
        polys(r), nonzero_polys(r, max_deg=2, max_terms=2)
    ).map(lambda nd: RationalFunction(nd[0], nd[1]))


def nonzero_rationals(r):
    return rationals(r).filter(lambda a: not a.is_zero())


def series(r, M):
    return st.lists(rationals(r), min_size=M, max_size=M).map(
        lambda cs: Series(M, cs)
    )


def unit_series(r, M):
    return st.tuples(
        nonzero_rationals(r),
        st.lists(rationals(r), min_size=M - 1, max_size=M - 1),
    ).map(lambda cu: Series(M, (cu[0],) + tuple(cu[1])))


def principal_units(r, M):
    one = RationalFunction.one(r)
    return st.lists(rationals(r), min_size=M - 1, max_size=M - 1).map(
        lambda cs: Series(M, (one,) + tuple(cs))
    )


def tpart_series(r, M):
    zero = RationalFunction.zero(r)
    return st.lists(rationals(r), min_size=M - 1, max_size=M - 1).map(
        lambda cs: Series(M, (zero,) + tuple(cs))
    )


def subsets(r, p):
    if p == 0:
        return st.just(())
    return st.sets(st.integers(1, r), min_size=p, max_size=p).map(
        lambda s: tuple(sorted(s))
    )


def kforms(r, p, max_terms=2):
    if p > r:
        return st.just(KForm.zero(r, p))
    return st.dictionaries(subsets(r, p), rationals(r), max_size=max_terms).map(
        lambda d: KForm(r, p, d)
    )


def series_forms(r, p, M, over_km=False, max_terms=2):
    dx = (
        st.dictionaries(subsets(r, p), series(r, M), max_size=max_terms)
        if p <= r
        else st.just({})
    )
    dt = (
        st.dictionaries(subsets(r, p - 1), series(r, M), max_size=max_terms)
        if 1 <= p <= r + 1
        else st.just({})
    )
    return st.tuples(dx, dt).map(
        lambda dd: SeriesForm(r, p, M, dd[0], dd[1], over_km=over_km)
    )


def relative_forms(r, p, m, max_terms=2):
    """Forms over k_m that vanish at t = 0 (dx coefficients in (t))."""
    dx = (
        st.dictionaries(subsets(r, p), tpart_series(r, m), max_size=max_terms)
        if p <= r
        else st.just({})
    )
    dt = (
        st.dictionaries(subsets(r, p - 1), series(r, m), max_size=max_terms)
        if 1 <= p <= r + 1
        else st.just({})
    )
    return st.tuples(dx, dt).map(
        lambda dd: SeriesForm(r, p, m, dd[0], dd[1], over_km=True)
    )

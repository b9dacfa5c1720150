"""Seeded generators for the verification suites.

Every trial derives its own Random from (seed, suite tag, trial index)
through a splitmix64-style mixer, so results are reproducible across
platforms and independent of trial order.  Python's salted hash() is
never used for seeding.

Generated values are kept deliberately small: the suites multiply many
of them together and exact rational growth is what dominates runtime.
"""

from __future__ import annotations

import random
import zlib
from fractions import Fraction

from .field import Poly, RationalFunction
from .forms import KForm, SeriesForm
from .series import Series

_MASK = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def mix(*parts) -> int:
    """Fold integers (or strings, via crc32) into one 64-bit value."""
    state = 0x243F6A8885A308D3
    for p in parts:
        if isinstance(p, str):
            p = zlib.crc32(p.encode("utf-8"))
        state = _splitmix64(state ^ (int(p) & _MASK))
    return state


def trial_rng(seed: int, tag, trial: int) -> random.Random:
    return random.Random(mix(seed, tag, trial))


def rand_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if c or not nonzero:
            return c


def rand_poly(rng: random.Random, r: int, max_terms: int = 2,
              max_deg: int = 2, nonzero: bool = False) -> Poly:
    while True:
        terms: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            e = tuple(rng.randint(0, max_deg) for _ in range(r))
            c = rand_fraction(rng)
            if c:
                terms[e] = terms.get(e, 0) + c
        p = Poly.from_terms(r, terms)
        if not (nonzero and p.is_zero()):
            return p


def rand_rf(rng: random.Random, r: int, nonzero: bool = False) -> RationalFunction:
    num = rand_poly(rng, r, nonzero=nonzero)
    # denominators stay tiny: 1 most of the time, else a short polynomial
    roll = rng.random()
    if roll < 0.7:
        den = Poly.const(r, 1)
    else:
        den = rand_poly(rng, r, max_terms=2, max_deg=1, nonzero=True)
    return RationalFunction(num, den)


def rand_monomial(rng: random.Random, r: int, n: int):
    """Factors (r1,...,rn), all nonzero."""
    return tuple(rand_rf(rng, r, nonzero=True) for _ in range(n))


def rand_series(rng: random.Random, r: int, M: int) -> Series:
    return Series(M, tuple(rand_rf(rng, r) for _ in range(M)))


def rand_unit_series(rng: random.Random, r: int, M: int) -> Series:
    coeffs = [rand_rf(rng, r, nonzero=True)]
    coeffs.extend(rand_rf(rng, r) for _ in range(M - 1))
    return Series(M, coeffs)


def rand_principal_unit(rng: random.Random, r: int, M: int) -> Series:
    coeffs = [RationalFunction.one(r)]
    coeffs.extend(rand_rf(rng, r) for _ in range(M - 1))
    return Series(M, coeffs)


def rand_tpart_series(rng: random.Random, r: int, M: int,
                      nonzero: bool = False) -> Series:
    while True:
        coeffs = [RationalFunction.zero(r)]
        coeffs.extend(rand_rf(rng, r) for _ in range(M - 1))
        s = Series(M, coeffs)
        if not (nonzero and s.is_zero()):
            return s


def rand_subset(rng: random.Random, r: int, p: int) -> tuple:
    return tuple(sorted(rng.sample(range(1, r + 1), p)))


def rand_kform(rng: random.Random, r: int, p: int,
               max_terms: int = 2) -> KForm:
    if p > r:
        return KForm.zero(r, p)
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        S = rand_subset(rng, r, p)
        c = rand_rf(rng, r)
        terms[S] = terms[S] + c if S in terms else c
    return KForm(r, p, terms)


def rand_series_form(rng: random.Random, r: int, p: int, M: int,
                     max_terms: int = 2) -> SeriesForm:
    dx: dict = {}
    dt: dict = {}
    if p <= r:
        for _ in range(rng.randint(1, max_terms)):
            S = rand_subset(rng, r, p)
            s = rand_series(rng, r, M)
            dx[S] = dx[S] + s if S in dx else s
    if 1 <= p <= r + 1:
        for _ in range(rng.randint(0, max_terms)):
            S = rand_subset(rng, r, p - 1)
            s = rand_series(rng, r, M)
            dt[S] = dt[S] + s if S in dt else s
    return SeriesForm(r, p, M, dx, dt)


def rand_relative_form(rng: random.Random, r: int, p: int, m: int,
                       max_terms: int = 2) -> SeriesForm:
    """Form over k_m vanishing at t = 0: dx coefficients have zero
    constant term, dt coefficients are unconstrained."""
    dx: dict = {}
    dt: dict = {}
    if p <= r:
        for _ in range(rng.randint(1, max_terms)):
            S = rand_subset(rng, r, p)
            s = rand_tpart_series(rng, r, m)
            dx[S] = dx[S] + s if S in dx else s
    if 1 <= p <= r + 1:
        for _ in range(rng.randint(0, max_terms)):
            S = rand_subset(rng, r, p - 1)
            s = rand_series(rng, r, m)
            dt[S] = dt[S] + s if S in dt else s
    return SeriesForm(r, p, m, dx, dt, over_km=True)

# cython: language_level=3
"""Compiled polynomial kernels.

Same contract and algorithms as _poly_py.py: dicts from packed
exponent keys to nonzero integer coefficients.  Keys and coefficients
stay Python objects (arbitrary-precision ints); the win is C-level
loop and dict traffic.
"""


def int_lin(dict a, ca, dict b, cb):
    cdef dict out = {}
    if ca:
        if ca == 1:
            out = dict(a)
        else:
            for e, c in a.items():
                out[e] = c * ca
    if cb:
        for e, c in b.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c * cb
            else:
                s = cur + c * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def int_mul(dict a, dict b, guards):
    """a*b; monomials multiply by key addition.  A product exponent
    reaching a guard bit means a variable's degree left its field."""
    cdef dict out = {}
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e & guards:
                raise OverflowError(
                    "polynomial degree exceeds the packed exponent bound"
                )
            cur = out.get(e)
            if cur is None:
                out[e] = ca * cb
            else:
                s = cur + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def int_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    if c == 1:
        return dict(a)
    for e, v in a.items():
        out[e] = v * c
    return out

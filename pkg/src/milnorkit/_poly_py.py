"""Pure-Python polynomial kernels.

Polynomials live here as plain dicts mapping packed exponent keys (one
bit field per variable, produced by the field layer) to nonzero
INTEGER coefficients; the rational content is tracked one level up as
a scalar.  These three functions are the arithmetic inner loop of the
whole package; the compiled twin in _poly_cy.pyx implements the
identical algorithms and is preferred at import time when available.
"""


def int_lin(a, ca, b, cb):
    """ca*a + cb*b for integer scalars ca, cb."""
    out = {}
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


def int_mul(a, b, guards):
    """a*b; monomials multiply by key addition.  A product exponent
    reaching a guard bit means a variable's degree left its field."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
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


def int_scale(a, c):
    if not c:
        return {}
    if c == 1:
        return dict(a)
    return {e: v * c for e, v in a.items()}

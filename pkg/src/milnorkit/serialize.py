"""JSON encoding of domain objects.

Documents carry "schema": 1.  Coefficients are canonical printed
strings, so fixtures stay human-diffable; decoding needs the variable
count r supplied from outside (the schema does not embed it).
"""

from __future__ import annotations

from .cycles import GraphCycle, PerturbedFamily, TriangularSystem
from .errors import PreconditionError
from .forms import KForm, RelClass
from .milnor import MilnorChain, MilnorSymbol
from .parser import parse_field
from .series import Series

SCHEMA = 1


def _need(obj: dict, key: str):
    if not isinstance(obj, dict):
        raise PreconditionError(f"expected a JSON object, got {type(obj).__name__}")
    if key not in obj:
        raise PreconditionError(f"missing field {key!r}")
    return obj[key]


def _check_schema(obj: dict) -> None:
    if _need(obj, "schema") != SCHEMA:
        raise PreconditionError(f"unsupported schema {obj.get('schema')!r}")


def encode_series(s: Series, top: bool = True) -> dict:
    out = {"precision": s.M, "coeffs": [str(c) for c in s.coeffs]}
    if top:
        out = {"schema": SCHEMA, **out}
    return out


def decode_series(obj: dict, r: int, top: bool = True) -> Series:
    if top:
        _check_schema(obj)
    M = _need(obj, "precision")
    coeffs = _need(obj, "coeffs")
    if not isinstance(M, int) or not isinstance(coeffs, list):
        raise PreconditionError("malformed series document")
    if len(coeffs) != M:
        raise PreconditionError(
            f"series document lists {len(coeffs)} coefficients for precision {M}"
        )
    return Series(M, tuple(parse_field(c, r) for c in coeffs))


def encode_kform(f: KForm, top: bool = True) -> dict:
    terms = [{"subset": list(S), "coeff": str(f.terms[S])}
             for S in sorted(f.terms)]
    out = {"degree": f.degree, "terms": terms}
    if top:
        out = {"schema": SCHEMA, **out}
    return out


def decode_kform(obj: dict, r: int, top: bool = True) -> KForm:
    if top:
        _check_schema(obj)
    degree = _need(obj, "degree")
    raw = _need(obj, "terms")
    if not isinstance(degree, int) or not isinstance(raw, list):
        raise PreconditionError("malformed form document")
    terms = {}
    for entry in raw:
        subset = tuple(_need(entry, "subset"))
        coeff = parse_field(_need(entry, "coeff"), r)
        terms[subset] = terms[subset] + coeff if subset in terms else coeff
    return KForm(r, degree, terms)


def encode_symbol(sym: MilnorSymbol, top: bool = True) -> dict:
    out = {"entries": [encode_series(a, top=False) for a in sym.entries]}
    if top:
        out = {"schema": SCHEMA, **out}
    return out


def decode_symbol(obj: dict, r: int, top: bool = True) -> MilnorSymbol:
    if top:
        _check_schema(obj)
    entries = _need(obj, "entries")
    if not isinstance(entries, list) or not entries:
        raise PreconditionError("malformed symbol document")
    return MilnorSymbol(decode_series(e, r, top=False) for e in entries)


def encode_chain(chain: MilnorChain) -> dict:
    return {
        "schema": SCHEMA,
        "n": chain.n,
        "precision": chain.M,
        "terms": [{"symbol": encode_symbol(sym, top=False), "mult": mult}
                  for sym, mult in chain.items()],
    }


def decode_chain(obj: dict, r: int) -> MilnorChain:
    _check_schema(obj)
    n = _need(obj, "n")
    M = _need(obj, "precision")
    out = MilnorChain.empty(n, M, r)
    for entry in _need(obj, "terms"):
        sym = decode_symbol(_need(entry, "symbol"), r, top=False)
        out = out + MilnorChain.single(sym, int(_need(entry, "mult")))
    return out


def encode_relclass(c: RelClass) -> dict:
    return {
        "schema": SCHEMA,
        "modulus": c.m,
        "degree": c.degree,
        "components": [encode_kform(a, top=False) for a in c.components],
    }


def decode_relclass(obj: dict, r: int) -> RelClass:
    _check_schema(obj)
    m = _need(obj, "modulus")
    degree = _need(obj, "degree")
    comps = [decode_kform(a, r, top=False) for a in _need(obj, "components")]
    return RelClass(r, degree, m, comps)


def encode_cycle(c: GraphCycle) -> dict:
    return {
        "schema": SCHEMA,
        "modulus": c.m,
        "entries": [encode_series(a, top=False) for a in c.entries],
    }


def decode_cycle(obj: dict, r: int) -> GraphCycle:
    _check_schema(obj)
    m = _need(obj, "modulus")
    entries = [decode_series(e, r, top=False) for e in _need(obj, "entries")]
    return GraphCycle(entries, m)


def encode_system(s: TriangularSystem) -> dict:
    eqs = []
    for p in s.polys:
        eqs.append({
            "monomials": [
                {"exponents": list(e), "coeff": str(p[e])}
                for e in sorted(p, reverse=True)
            ]
        })
    return {
        "schema": SCHEMA,
        "n": s.n,
        "precision": s.M,
        "equations": eqs,
    }


def decode_system(obj: dict, r: int) -> TriangularSystem:
    """Triangular-system documents; coefficients are series expressions
    evaluated at the document's precision."""
    from .parser import parse_series

    _check_schema(obj)
    n = _need(obj, "n")
    M = _need(obj, "precision")
    eqs = _need(obj, "equations")
    if not isinstance(eqs, list):
        raise PreconditionError("malformed system document")
    polys = []
    for eq in eqs:
        p = {}
        for mono in _need(eq, "monomials"):
            e = tuple(_need(mono, "exponents"))
            c = parse_series(_need(mono, "coeff"), r, M)
            p[e] = p[e] + c if e in p else c
        polys.append(p)
    return TriangularSystem(n, M, r, polys)


def encode_family(f: PerturbedFamily) -> dict:
    return {
        "schema": SCHEMA,
        "n": f.n,
        "precision": f.M,
        "equations": [
            {"monomials": [{"exponents": list(e), "slot": s}
                           for e, s in sorted(p.items(), reverse=True)]}
            for p in f.polys
        ],
        "alpha0": [str(a) for a in f.alpha0],
        "slots": [{"equation": eq, "exponents": list(e)} for eq, e in f.slots],
    }

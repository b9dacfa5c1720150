"""Command-line front end.

Subcommands expose the public operations; expression inputs go through
the parser module, machine output through --json.  Exit codes: 0 on
success, 1 when a verification or equality check fails, 2 on usage or
parse errors, 3 on precondition violations.

The variable count r is taken from --r when given and otherwise
inferred as the highest x-index mentioned in the inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cycles import (
    GraphCycle,
    cyc_approximate_polynomial,
    cyc_ball_member,
    cyc_graph_move,
    cyc_mod_tm_equal,
    cyc_perturb,
    cyc_regulator,
)
from .errors import MilnorkitError, ParseError, PreconditionError
from .forms import KForm, RelClass
from .milnor import MilnorChain, MilnorSymbol, phi, psi_general, psi_slot, rel_class, rel_eq
from .parser import infer_var_count, parse_field, parse_series
from .serialize import (
    decode_system,
    encode_chain,
    encode_cycle,
    encode_family,
    encode_kform,
    encode_relclass,
)
from .suites import SUITE_ORDER, SUITES, monomial_kform


class JobConfig:
    """Validated run parameters shared by the subcommands."""

    __slots__ = ("r", "m", "n", "M", "i", "seed", "trials")

    def __init__(self, r: int, m: int, n: int, M=None, i=None,
                 seed: int = 0, trials: int = 50):
        if m < 1:
            raise PreconditionError(f"modulus m must be >= 1, got {m}")
        if n < 1:
            raise PreconditionError(f"length n must be >= 1, got {n}")
        if r < 1:
            raise PreconditionError(f"variable count r must be >= 1, got {r}")
        if M is None:
            M = m + 2
        if M < m:
            raise PreconditionError(f"precision M={M} below modulus m={m}")
        if i is not None and not 1 <= i <= m - 1:
            raise PreconditionError(
                f"index i={i} out of range 1..{m - 1}"
            )
        if seed < 0:
            raise PreconditionError(f"seed must be non-negative, got {seed}")
        if trials < 1:
            raise PreconditionError(f"trials must be >= 1, got {trials}")
        self.r = r
        self.m = m
        self.n = n
        self.M = M
        self.i = i
        self.seed = seed
        self.trials = trials


def _default_seed() -> int:
    raw = os.environ.get("MILNORKIT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"MILNORKIT_SEED is not an integer: {raw!r}")


def _resolve_r(args, texts) -> int:
    if args.r is not None:
        return args.r
    return infer_var_count(texts)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _split_groups(entries):
    """Split a positional list on the ';' token."""
    groups = [[]]
    for e in entries:
        if e.strip() == ";":
            groups.append([])
        else:
            groups[-1].append(e)
    return groups


def cmd_regulator(args) -> int:
    texts = list(args.entries)
    if not texts:
        raise ParseError("regulator needs at least one entry")
    r = _resolve_r(args, texts)
    cfg = JobConfig(r=r, m=args.m, n=len(texts), M=args.precision, i=args.i,
                    seed=args.seed, trials=args.trials)
    if args.n is not None and args.n != len(texts):
        raise ParseError(
            f"--n {args.n} disagrees with {len(texts)} entries"
        )
    entries = [parse_series(t, cfg.r, cfg.M) for t in texts]
    form = cyc_regulator(GraphCycle(entries, cfg.m), cfg.i)
    if args.json:
        _print_json(encode_kform(form))
    else:
        print(form)
    return 0


def _symbol_chain(texts, r: int, m: int) -> MilnorChain:
    entries = [parse_series(t, r, m) for t in texts]
    return MilnorChain.single(MilnorSymbol(entries))


def cmd_phi(args) -> int:
    texts = list(args.entries)
    if not texts:
        raise ParseError("phi needs symbol entries")
    r = _resolve_r(args, texts)
    cfg = JobConfig(r=r, m=args.m, n=len(texts), M=args.precision,
                    seed=args.seed, trials=args.trials)
    chain = _symbol_chain(texts, cfg.r, cfg.m)
    cls = phi(chain, cfg.m)
    if args.json:
        _print_json(encode_relclass(cls))
    else:
        print(cls)
    return 0


def cmd_relclass(args) -> int:
    texts = list(args.entries)
    if not texts:
        raise ParseError("relclass needs symbol entries")
    r = _resolve_r(args, texts)
    cfg = JobConfig(r=r, m=args.m, n=len(texts), M=args.precision,
                    seed=args.seed, trials=args.trials)
    chain = _symbol_chain(texts, cfg.r, cfg.m)
    cls = rel_class(chain)
    if args.json:
        _print_json(encode_relclass(cls))
    else:
        print(cls)
    return 0


def _parse_monomials(raw, r: int):
    out = []
    for text in raw:
        factors = [piece.strip() for piece in text.split(";")]
        if any(not piece for piece in factors):
            raise ParseError(f"empty factor in monomial {text!r}")
        out.append(tuple(parse_field(piece, r) for piece in factors))
    return out


def cmd_psi(args) -> int:
    if args.i is not None:
        if not args.monomial:
            raise ParseError("slot mode needs at least one --monomial")
        factor_texts = [p for mono in args.monomial for p in mono.split(";")]
        r = _resolve_r(args, factor_texts)
        cfg = JobConfig(r=r, m=args.m, n=1, M=args.precision, i=args.i,
                        seed=args.seed, trials=args.trials)
        monomials = _parse_monomials(args.monomial, cfg.r)
        chain = psi_slot(cfg.i, monomials, cfg.m, cfg.r)
    else:
        texts = list(args.entries)
        if not texts:
            raise ParseError(
                "general mode takes series factors as positional entries"
            )
        r = _resolve_r(args, texts)
        cfg = JobConfig(r=r, m=args.m, n=len(texts), M=args.precision,
                        seed=args.seed, trials=args.trials)
        factors = [parse_series(t, cfg.r, cfg.m) for t in texts]
        chain = psi_general(factors, cfg.m)
    if args.json:
        _print_json(encode_chain(chain))
    else:
        print(chain)
    return 0


def cmd_releq(args) -> int:
    groups = _split_groups(args.entries)
    if args.monomial:
        if len(groups) != 1 or not groups[0]:
            raise ParseError(
                "--monomial mode compares one symbol against a class"
            )
        if args.i is None:
            raise ParseError("--monomial mode needs --i for the class index")
        factor_texts = [p for mono in args.monomial for p in mono.split(";")]
        r = _resolve_r(args, list(groups[0]) + factor_texts)
        cfg = JobConfig(r=r, m=args.m, n=len(groups[0]), M=args.precision,
                        i=args.i, seed=args.seed, trials=args.trials)
        chain = _symbol_chain(groups[0], cfg.r, cfg.m)
        monomials = _parse_monomials(args.monomial, cfg.r)
        degree = len(monomials[0]) - 1
        ref = KForm.zero(cfg.r, degree)
        for rs in monomials:
            ref = ref + monomial_kform(rs)
        parts = [KForm.zero(cfg.r, degree) for _ in range(cfg.m - 1)]
        parts[cfg.i - 1] = ref
        reference = RelClass(cfg.r, degree, cfg.m, parts)
        equal = rel_class(chain).eq(reference)
    else:
        if len(groups) != 2 or not groups[0] or not groups[1]:
            raise ParseError(
                "releq compares two symbols separated by ';' "
                "(or one symbol against --monomial with --i)"
            )
        r = _resolve_r(args, [t for g in groups for t in g])
        cfg = JobConfig(r=r, m=args.m, n=len(groups[0]), M=args.precision,
                        seed=args.seed, trials=args.trials)
        left = _symbol_chain(groups[0], cfg.r, cfg.m)
        right = _symbol_chain(groups[1], cfg.r, cfg.m)
        equal = rel_eq(left, right)
    if args.json:
        _print_json({"equal": equal})
    else:
        print("equal" if equal else "not equal")
    return 0 if equal else 1


def cmd_verify(args) -> int:
    r = args.r if args.r is not None else 2
    cfg = JobConfig(r=r, m=args.m, n=args.n, M=args.precision,
                    seed=args.seed, trials=args.trials)
    names = SUITE_ORDER if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        runner = SUITES[name]
        reports.append(runner(cfg.r, cfg.m, cfg.n, cfg.M, cfg.seed,
                              cfg.trials))
    if args.json:
        _print_json([rep.to_json() for rep in reports])
    else:
        for rep in reports:
            print(rep.render())
    return 0 if all(rep.ok for rep in reports) else 1


def cmd_perturb(args) -> int:
    r = args.r if args.r is not None else 1
    with open(args.file, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as e:
            raise ParseError(f"system file is not valid JSON: {e}")
    system = decode_system(doc, r)
    family = cyc_perturb(system)
    if args.json:
        _print_json(encode_family(family))
    else:
        print(family)
        print("alpha0 = (" + ", ".join(str(a) for a in family.alpha0) + ")")
        print(family.slot_table())
    return 0


def cmd_approx(args) -> int:
    texts = list(args.entries)
    if not texts:
        raise ParseError("approx needs at least one entry")
    N = args.N
    if N is None:
        raise ParseError("approx needs --N")
    if N < 0:
        raise PreconditionError(f"--N must be non-negative, got {N}")
    r = _resolve_r(args, texts)
    M = args.precision if args.precision is not None else max(args.m + 2, N + 1)
    cfg = JobConfig(r=r, m=args.m, n=len(texts), M=M,
                    seed=args.seed, trials=args.trials)
    alpha0 = tuple(parse_series(t, cfg.r, cfg.M) for t in texts)
    approx = cyc_approximate_polynomial(alpha0, N)
    member = cyc_ball_member(alpha0, approx, N)
    if args.json:
        _print_json({
            "entries": [str(a) for a in approx],
            "ball_exponent": N,
            "member": member,
        })
    else:
        for a in approx:
            print(a)
        print(f"certificate: v(difference) >= {N}: {'true' if member else 'false'}")
    return 0 if member else 1


def cmd_modtm_check(args) -> int:
    groups = _split_groups(args.entries)
    if len(groups) != 2 or not groups[0] or not groups[1]:
        raise ParseError("modtm-check compares two cycles separated by ';'")
    r = _resolve_r(args, [t for g in groups for t in g])
    cfg = JobConfig(r=r, m=args.m, n=len(groups[0]), M=args.precision,
                    seed=args.seed, trials=args.trials)
    left = GraphCycle([parse_series(t, cfg.r, cfg.M) for t in groups[0]],
                      cfg.m)
    right = GraphCycle([parse_series(t, cfg.r, cfg.M) for t in groups[1]],
                       cfg.m)
    equal = cyc_mod_tm_equal(left, right)
    if args.json:
        _print_json({"equal": equal})
    else:
        print("equal" if equal else "not equal")
    return 0 if equal else 1


def cmd_graph_move(args) -> int:
    texts = list(args.entries)
    if not texts:
        raise ParseError("graph-move needs at least one entry")
    r = _resolve_r(args, texts)
    cfg = JobConfig(r=r, m=args.m, n=len(texts), M=args.precision,
                    seed=args.seed, trials=args.trials)
    cycle = GraphCycle([parse_series(t, cfg.r, cfg.M) for t in texts], cfg.m)
    moved = cyc_graph_move(cycle)
    if args.json:
        _print_json(encode_cycle(moved))
    else:
        print(moved)
    return 0


def _add_common(p: argparse.ArgumentParser, default_m: int = 2) -> None:
    p.add_argument("--r", type=int, default=None,
                   help="variable count (default: inferred from inputs)")
    p.add_argument("--m", type=int, default=default_m, help="modulus exponent")
    p.add_argument("--n", type=int, default=None, help="symbol/cycle length")
    p.add_argument("--precision", type=int, default=None,
                   help="working precision M (default m+2)")
    p.add_argument("--seed", type=int, default=None, help="suite seed")
    p.add_argument("--trials", type=int, default=50, help="suite size")
    p.add_argument("--json", action="store_true", help="machine output")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="milnorkit",
        description="Exact symbol and residue calculus over truncated "
                    "polynomial rings.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("regulator", help="residue regulator of a graph cycle")
    _add_common(p)
    p.add_argument("--i", type=int, required=True, help="regulator index")
    p.add_argument("entries", nargs="*", help="cycle entries (series)")
    p.set_defaults(handler=cmd_regulator)

    p = sub.add_parser("phi", help="relative class of a principal-unit symbol")
    _add_common(p)
    p.add_argument("entries", nargs="*", help="symbol entries (series)")
    p.set_defaults(handler=cmd_phi)

    p = sub.add_parser("psi", help="section from forms to symbols")
    _add_common(p)
    p.add_argument("--i", type=int, default=None, help="slot index")
    p.add_argument("--monomial", action="append", default=[],
                   help="';'-separated field factors r1;r2;...")
    p.add_argument("entries", nargs="*",
                   help="series factors (general mode, without --i)")
    p.set_defaults(handler=cmd_psi)

    p = sub.add_parser("relclass", help="relative class of any unit symbol")
    _add_common(p)
    p.add_argument("entries", nargs="*", help="symbol entries (series)")
    p.set_defaults(handler=cmd_relclass)

    p = sub.add_parser("releq", help="equality of relative classes")
    _add_common(p)
    p.add_argument("--i", type=int, default=None,
                   help="class index for --monomial mode")
    p.add_argument("--monomial", action="append", default=[],
                   help="reference class monomial r1;r2;...")
    p.add_argument("entries", nargs="*",
                   help="symbol entries; ';' separates two symbols")
    p.set_defaults(handler=cmd_releq)

    p = sub.add_parser("verify", help="seeded verification suites")
    _add_common(p, default_m=3)
    p.add_argument("--suite", required=True,
                   choices=sorted(SUITES) + ["all"])
    p.set_defaults(handler=cmd_verify, n_default=2)

    p = sub.add_parser("perturb", help="coefficient perturbation of a system")
    _add_common(p)
    p.add_argument("--file", required=True, help="triangular system (JSON)")
    p.set_defaults(handler=cmd_perturb)

    p = sub.add_parser("approx", help="polynomial approximation with ball certificate")
    _add_common(p)
    p.add_argument("--N", type=int, default=None, help="ball radius exponent")
    p.add_argument("entries", nargs="*", help="series entries")
    p.set_defaults(handler=cmd_approx)

    p = sub.add_parser("modtm-check", help="mod t^m equivalence of two cycles")
    _add_common(p)
    p.add_argument("entries", nargs="*",
                   help="cycle entries; ';' separates the cycles")
    p.set_defaults(handler=cmd_modtm_check)

    p = sub.add_parser("graph-move", help="polynomial representative of a cycle")
    _add_common(p)
    p.add_argument("entries", nargs="*", help="cycle entries (series)")
    p.set_defaults(handler=cmd_graph_move)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    if getattr(args, "seed", None) is None:
        try:
            args.seed = _default_seed()
        except PreconditionError as e:
            print(f"error: {e}", file=sys.stderr)
            return 3
    if getattr(args, "n", None) is None and hasattr(args, "n_default"):
        args.n = args.n_default
    try:
        return args.handler(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except MilnorkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 when the computation ran (whatever the verdict), 2 when an
input file cannot be parsed, 3 when a precondition or parameter range is
violated.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import families
from .errors import ParseError, PreconditionError, RHError
from .lattice import LatticePair, balance, deligne_line
from .matrix import Matrix
from .report import analysis_report
from .scalars import UnityRoot
from .serialize import canonical_json, dumps, load, unity_to_dict
from .surface import DirectSumRepresentation

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION = 0, 2, 3


def parse_unity(token: str) -> UnityRoot:
    """'1', '-1', 'i', '-i', 'k/n' or 'e(k/n)', the last two meaning e^{2 pi i k/n}."""
    t = token.strip()
    named = {"1": UnityRoot(0, 1), "-1": UnityRoot(1, 2), "i": UnityRoot(1, 4), "-i": UnityRoot(3, 4)}
    if t in named:
        return named[t]
    if t.startswith("e(") and t.endswith(")"):
        t = t[2:-1]
    if "/" not in t:
        raise ParseError(f"cannot read root of unity {token!r}")
    try:
        return UnityRoot.from_angle(Fraction(t))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot read root of unity {token!r}") from None


def _unity_list(text: str) -> list[UnityRoot]:
    return [parse_unity(t) for t in text.split(",") if t.strip()]


def _matrix_text(m: Matrix) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in m.rows) + "]"


def cmd_verify(args) -> int:
    rep = load(args.path)
    if isinstance(rep, DirectSumRepresentation):
        defect = rep.relation_defect()
        valid = rep.is_valid()
        defect_text = _matrix_text(defect)
    else:
        d = rep.relation_defect()
        valid = d.is_identity()
        defect_text = _matrix_text(d.body) if d.twist.is_one() else f"{d.twist} * {_matrix_text(d.body)}"
    if args.json:
        sys.stdout.write(canonical_json({"valid": valid, "defect": defect_text}))
    else:
        print(f"defect: {defect_text}")
        print(f"valid: {str(valid).lower()}")
    return EXIT_OK


def _print_report(report: dict, indent: str = "") -> None:
    print(f"{indent}valid: {str(report['valid']).lower()}")
    for i, p in enumerate(report["punctures"], 1):
        if p["error"]:
            print(f"{indent}puncture {i}: {p['error']}")
            continue
        evs = ", ".join(
            f"{_eigen_text(e['value'])} x{e['multiplicity']} jordan {e['jordan']}" for e in p["eigenvalues"]
        )
        print(f"{indent}puncture {i}: {evs}; single block: {str(p['single_block']).lower()}")
    print(f"{indent}reducible: {str(report['reducible']).lower()}")
    v = report["verdict"]
    if v is not None:
        print(f"{indent}verdict: {v['kind']}")
        if "slope_class" in v:
            print(f"{indent}slope class: {v['slope_class']} (mod 1)")
        if v["degrees"] is not None:
            print(f"{indent}admissible degrees: {v['degrees']['start']} mod {v['degrees']['step']}")
        elif "slope_class" in v:
            print(f"{indent}admissible degrees: none")
        if report["reasons"]:
            print(f"{indent}reasons: {', '.join(report['reasons'])}")
    for j, s in enumerate(report.get("summands", []), 1):
        print(f"{indent}summand {j}:")
        _print_report(s, indent + "  ")


def _eigen_text(value: dict) -> str:
    k, n = value["twist"]["k"], value["twist"]["n"]
    scale = value["scale"]
    if n == 1:
        return scale
    root = str(UnityRoot(k, n))
    return root if scale == "1" else f"{scale}*{root}"


def cmd_analyze(args) -> int:
    report = analysis_report(load(args.path))
    if args.json:
        sys.stdout.write(canonical_json(report))
    else:
        _print_report(report)
    return EXIT_OK


def cmd_obstruct(args) -> int:
    report = analysis_report(load(args.path), with_verdict=True)
    if args.json:
        sys.stdout.write(canonical_json(report))
    else:
        _print_report(report)
    return EXIT_OK


def _generate(args):
    fam = args.family
    g, m, n = args.genus, args.punctures, args.rank
    if fam == "f1":
        nu = [Fraction(x) for x in args.nu.split(",")] if args.nu else None
        m = m if m is not None else (len(nu) if nu else 2)
        return families.family1(n if n is not None else 2, m, nu, g if g is not None else 0)
    if fam == "f2":
        return families.family2()
    if fam == "f3":
        return families.family3(m if m is not None else 3, g if g is not None else 0)
    if fam == "f4":
        return families.family4(m if m is not None else 1, g if g is not None else 1)
    if fam == "f5":
        return families.family5(n if n is not None else 4, m if m is not None else 1, g if g is not None else 1)
    if fam == "main":
        if None in (g, m, n):
            raise PreconditionError("--family main needs --genus, --punctures and --rank")
        return families.mainthm_witness(g, m, n)
    if fam == "r52":
        if args.input:
            rho2 = load(args.input)
        else:
            rho2 = families.family4(m if m is not None else 2, g if g is not None else 1)
        return families.remark52_build(rho2, seed=args.seed)
    raise PreconditionError(f"unknown family {fam!r}")


def cmd_generate(args) -> int:
    text = dumps(_generate(args))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_balance(args) -> int:
    sub = _unity_list(args.lambdas_sub)
    quot = _unity_list(args.lambdas_quot)
    if len(sub) != len(quot) or not sub:
        raise PreconditionError("sub and quotient need the same nonzero number of eigenvalues")
    start = LatticePair(deligne_line(sub), deligne_line(quot))
    final, moves = balance(start)
    result = {
        "lambdas": {"sub": [unity_to_dict(x) for x in sub], "quot": [unity_to_dict(x) for x in quot]},
        "initial": {"sub": str(start.sub.degree), "quot": str(start.quot.degree)},
        "moves": [{"puncture": mv.puncture + 1, "side": mv.side} for mv in moves],
        "final": {"sub": str(final.sub.degree), "quot": str(final.quot.degree)},
        "final_betas": {"sub": [str(b) for b in final.sub.betas], "quot": [str(b) for b in final.quot.betas]},
        "total_degree": str(final.total_degree),
        "total_degree_even": final.total_degree % 2 == 0,
    }
    if args.json:
        sys.stdout.write(canonical_json(result))
    else:
        print(f"initial degrees: sub {result['initial']['sub']}, quot {result['initial']['quot']}")
        for i, mv in enumerate(result["moves"], 1):
            print(f"move {i}: modify {mv['side']} at puncture {mv['puncture']}")
        print(f"moves: {len(moves)}")
        print(f"final degrees: sub {result['final']['sub']}, quot {result['final']['quot']}")
        print(f"total degree: {result['total_degree']} (even: {str(result['total_degree_even']).lower()})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rhobstruct",
        description="Exact checks of monodromy representations of punctured curves and their "
        "semistable realizability obstructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("verify", cmd_verify, "check the surface-group relation"),
        ("analyze", cmd_analyze, "local eigenvalues, Jordan types and reducibility"),
        ("obstruct", cmd_obstruct, "decide the semistable realizability obstructions"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)

    p = sub.add_parser("generate", help="write a representation from one of the built-in families")
    p.add_argument("--family", required=True, choices=sorted(families.FAMILIES))
    p.add_argument("--genus", type=int)
    p.add_argument("--punctures", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--nu", help="comma-separated rationals for f1, e.g. 1,-1/2,-1/2")
    p.add_argument("--seed", type=int, default=0, help="seed for r52 (default 0)")
    p.add_argument("--input", help="rank-2 representation file for r52 (default: f4)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("balance", help="balance sub and quotient line degrees by lattice moves")
    p.add_argument("--lambdas-sub", required=True, help="e.g. 1,1 or 1/3,2/3 (k/n means e^{2 pi i k/n})")
    p.add_argument("--lambdas-quot", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_balance)
    return parser


def _join_signed_values(argv: list[str]) -> list[str]:
    # "--lambdas-quot -1,-1" would otherwise be read as an unknown flag
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--lambdas-sub", "--lambdas-quot", "--nu"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_signed_values(argv))
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, RHError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

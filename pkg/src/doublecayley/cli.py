"""Command-line front end.

    doublecayley verify <suite> [--kmax N] [--seed S] [--json] [--quiet]
    doublecayley eval spinor "<expr>" [--as vector]
    doublecayley eval chow "<expr>"
    doublecayley annihilator "<expr>"
    doublecayley member "<expr>"
    doublecayley orbit-type "<expr>"

Exit status: 0 success, 1 a verification check failed, 2 usage or input error.
"""

import argparse
import json
import sys

from .errors import DoubleCayleyError

SUITE_NAMES = ("clifford-table", "membership", "fixed-points", "orbit-types", "hilbert",
               "degree", "rigidity", "betti", "schubert", "oracle-calibration", "all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="only print failures and the summary")
    common.add_argument("--kmax", type=int, default=30, help="largest k for the hilbert suite")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled checks")

    parser = _Parser(prog="doublecayley", description="Exact checks for the double Cayley Grassmannian.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)

    p = sub.add_parser("eval", help="parse and normalize an expression")
    ev = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    q = ev.add_parser("spinor", parents=[common])
    q.add_argument("expr")
    q.add_argument("--as", dest="as_", choices=("spinor", "vector"), default="spinor")
    q = ev.add_parser("chow", parents=[common])
    q.add_argument("expr")

    for name, text in (("annihilator", "Clifford annihilator of an even spinor"),
                       ("member", "is the spinor a point of DG"),
                       ("orbit-type", "orbit type (k, k') of a point of DG")):
        q = sub.add_parser(name, parents=[common], help=text)
        q.add_argument("expr")
    return parser


def _emit(args, payload, text):
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_verify(args):
    from .suites import DEFAULT_SEED, run_suite

    if args.kmax < 0:
        raise SystemExit(_usage(f"--kmax must be nonnegative, got {args.kmax}"))
    seed = DEFAULT_SEED if args.seed is None else args.seed
    report = run_suite(args.suite, {"kmax": args.kmax, "seed": seed})
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        if not args.quiet:
            print(f"seed {seed}")
        sys.stdout.write(report.to_text(quiet=args.quiet))
    return 0 if report.passed else 1


def cmd_eval(args):
    from .parsing import format_chow, format_spinor, format_vector, parse_chow, parse_spinor

    if args.kind == "chow":
        c = parse_chow(args.expr)
        text = format_chow(c)
        _emit(args, {"kind": "chow", "grade": c.grade, "value": text}, text)
        return 0
    if args.as_ == "vector":
        v = parse_spinor(args.expr, as_vector=True)
        text = format_vector(v)
        _emit(args, {"kind": "vector", "value": text}, text)
        return 0
    x = parse_spinor(args.expr)
    text = format_spinor(x)
    parity = {0: "even", 1: "odd", None: "mixed"}[x.parity] if not x.is_zero() else "zero"
    _emit(args, {"kind": "spinor", "parity": parity, "value": text}, text)
    return 0


def _even_spinor(expr):
    from .parsing import parse_spinor

    return parse_spinor(expr, require_parity=0)


def cmd_annihilator(args):
    from .clifford import annihilator
    from .parsing import format_vector
    from .clifford import subspace_vectors

    ann = annihilator(_even_spinor(args.expr))
    basis = [format_vector(v) for v in subspace_vectors(ann)]
    lines = [f"dim {ann.dim}"] + basis
    _emit(args, {"dim": ann.dim, "basis": basis}, "\n".join(lines))
    return 0


def cmd_member(args):
    from .dg import in_DG

    ok = in_DG(_even_spinor(args.expr))
    _emit(args, {"member": ok}, "true" if ok else "false")
    return 0


def cmd_orbit_type(args):
    from .dg import orbit_type

    k, kp = orbit_type(_even_spinor(args.expr))
    _emit(args, {"orbit_type": [k, kp]}, f"({k}, {kp})")
    return 0


def _usage(message):
    print(f"doublecayley: error: {message}", file=sys.stderr)
    return 2


COMMANDS = {
    "verify": cmd_verify,
    "eval": cmd_eval,
    "annihilator": cmd_annihilator,
    "member": cmd_member,
    "orbit-type": cmd_orbit_type,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DoubleCayleyError as exc:
        return _usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())

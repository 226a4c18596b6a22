"""Command-line interface.

Exit codes: 0 on success, 1 when a verification entry mismatches, 2 on bad
configuration or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report as rpt
from . import lfunctions as lf
from . import singularities as sg
from . import dimension as dim
from . import classifier as cl


def _cmd_volume(args) -> int:
    cfg = rpt.load_config(args.config)
    local = {k: Fraction(v) for k, v in cfg["local_factors"].items()}
    chi = lf.DirichletCharacter.kronecker(-7)
    vol = lf.covolume(lf.VolumeInput(7, 1, 1, lf.riemann_zeta(2),
                                     lf.dirichlet_L_value(3, chi), local))
    print(vol)
    return 0


def _cmd_lvalue(args) -> int:
    chi = lf.DirichletCharacter.kronecker(-7)
    val = lf.dirichlet_L_value(args.weight, chi)
    print(val)
    if args.numeric:
        series, tail = lf.l_series_oracle(args.weight, chi, args.terms)
        print(f"closed form = {float(val.to_float()):.15f}")
        print(f"series      = {series:.15f} (tail bound {float(tail):.2e})")
    return 0


def _cmd_resolve(args) -> int:
    chain = sg.hj_expand(sg.CyclicSingularity(args.n, args.q))
    print("".join(f"({b})" for b in chain.self_intersections))
    return 0


def _cmd_heights(args) -> int:
    with open(args.file) as f:
        data = json.load(f)
    pts = tuple(sg.CyclicSingularity(n, q) for n, q in data["points"])
    x = sg.OrbifoldSurface(Fraction(data["euler"]), Fraction(data["signature"]), pts)
    print(f"euler_height     {sg.euler_height(x)}")
    print(f"signature_height {sg.signature_height(x)}")
    e, s, blow = sg.resolve_invariants(x)
    print(f"resolution       ({e}, {s}, {blow})")
    return 0


def _cmd_dims(args) -> int:
    builders = {"gamma": dim.build_gamma_dataset,
                "gamma_tilde": dim.build_gamma_tilde_dataset}
    if args.group not in builders:
        raise rpt.ConfigError(f"unknown group '{args.group}' "
                              f"(choose from {sorted(builders)})")
    print(dim.dimension(builders[args.group](), args.weight))
    return 0


def _cmd_classify(args) -> int:
    with open(args.file) as f:
        data = json.load(f)
    plur = {int(k): int(v) for k, v in data.get("plurigenera", {}).items()}
    if "signature" in data:
        s = cl.invariants_from_resolution(
            Fraction(data["c2"]), Fraction(data["signature"]),
            Fraction(data.get("q", 0)), plur, minimal=data.get("minimal", True))
    else:
        s = cl.ball_quotient_invariants(Fraction(data["c2"]),
                                        Fraction(data.get("q", 0)), plur)
    kod, trace = cl.kodaira_classify(s)
    print(f"kodaira_dimension     {'-infinity' if kod == -1 else kod}")
    print(f"chi                   {s.chi}")
    print(f"c1_squared            {s.c1_sq}")
    print(f"fake_projective_plane {cl.is_fake_projective_plane(s, kod)}")
    for k, reason in sorted(trace.items()):
        print(f"  excluded {'-infinity' if k == -1 else k}: {reason}")
    return 0


def _cmd_report(args) -> int:
    r = rpt.run_all(args.config)
    if args.format == "md":
        print(r.to_markdown())
    else:
        print(r.to_json(with_timestamp=args.timestamp))
    return r.exit_code()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ballquot",
                                description="exact verification of arithmetic "
                                            "ball-quotient surface invariants")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("volume", help="covolume of the principal arithmetic group")
    sp.add_argument("--config", default=None)
    sp.set_defaults(func=_cmd_volume)

    sp = sub.add_parser("lvalue", help="special L-value in closed form")
    sp.add_argument("--weight", type=int, default=3)
    sp.add_argument("--numeric", action="store_true",
                    help="also compare against the direct series")
    sp.add_argument("--terms", type=int, default=100000)
    sp.set_defaults(func=_cmd_lvalue)

    sp = sub.add_parser("resolve", help="resolution chain of a cyclic quotient point")
    sp.add_argument("n", type=int)
    sp.add_argument("q", type=int)
    sp.set_defaults(func=_cmd_resolve)

    sp = sub.add_parser("heights", help="orbifold heights from a JSON description")
    sp.add_argument("file")
    sp.set_defaults(func=_cmd_heights)

    sp = sub.add_parser("dims", help="dimension of the weight-k form space")
    sp.add_argument("--group", required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.set_defaults(func=_cmd_dims)

    sp = sub.add_parser("classify", help="classify a surface from a JSON description")
    sp.add_argument("file")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("report", help="run every verification and print the report")
    sp.add_argument("--format", choices=("json", "md"), default="json")
    sp.add_argument("--config", default=None)
    sp.add_argument("--timestamp", action="store_true",
                    help="include a generation timestamp (outside the hashed body)")
    sp.set_defaults(func=_cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except rpt.ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

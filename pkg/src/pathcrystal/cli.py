"""Command-line entry point.

Subcommands: ``verify`` (run a named relation suite), ``act`` (apply a
crystal operation to a point file), ``map`` (chart changes, the array
bijection, the degree probe), ``conjecture`` (the proportionality
experiment) and ``graph`` (DOT export of an array-crystal neighborhood).

Exit codes: 0 all checks pass, 1 verification or domain failure, 2 bad
usage or malformed input.  Reports are deterministic given the seed; the
wall-time field is the only exception.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import bkinf, tropical
from .birational import sigma_map, xi_map
from .errors import CrystalFault, ValidationError
from .geom import act_e, weyl_s
from .iso import omega, omega_inv
from .lattice import (
    PRNG_ID,
    make_shape,
    parse_rational,
    point_from_json,
    point_to_json,
)
from .reporting import all_ok
from .suites import SUITES, conjecture_outcomes, run_suite, suite_bound

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    """One verification run: suite, shape, seeds and per-relation results."""

    suite: str
    n: int
    k: int
    seed: int
    trials: int
    bound: int
    checks: list = field(default_factory=list)
    elapsed_s: float = 0.0
    prng: str = PRNG_ID

    @property
    def ok(self):
        return all_ok(self.checks)

    def to_json(self):
        return {
            "suite": self.suite,
            "n": self.n,
            "k": self.k,
            "seed": self.seed,
            "prng": self.prng,
            "trials": self.trials,
            "bound": self.bound,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "elapsed_s": self.elapsed_s,
        }

    def render_text(self):
        lines = [
            "suite=%s shape=(%d,%d) seed=%d trials=%d bound=%d prng=%s"
            % (self.suite, self.n, self.k, self.seed, self.trials, self.bound, self.prng)
        ]
        for c in self.checks:
            status = "pass" if c.ok else "FAIL"
            lines.append("  [%s] %-28s passes=%d fails=%d" % (status, c.name, c.passes, c.fails))
            for w in c.witnesses:
                lines.append("    witness: %s" % json.dumps(w, sort_keys=True))
        lines.append("result: %s (%.3fs)" % ("ok" if self.ok else "FAILED", self.elapsed_s))
        return "\n".join(lines)


def _load_point(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise ValidationError("malformed JSON in %s: %s" % (path, exc))
    if isinstance(data, dict) and data.get("kind") == "b":
        return bkinf.from_json(data, make_shape)
    return point_from_json(data)


def _emit(obj, as_json):
    if as_json:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_verify(args):
    shape = make_shape(args.n, args.k)
    suites = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in suites:
        start = time.monotonic()
        bound = suite_bound(name, args.bound)
        checks = run_suite(name, shape, args.trials, args.seed, bound)
        report = RunReport(
            suite=name,
            n=shape.n,
            k=shape.k,
            seed=args.seed,
            trials=args.trials,
            bound=bound,
            checks=checks,
        )
        report.elapsed_s = round(time.monotonic() - start, 6)
        reports.append(report)
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True))
    else:
        for r in reports:
            print(r.render_text())
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_act(args):
    point = _load_point(args.point)
    if args.side == "geom":
        if point.kind != "x":
            raise ValidationError("side geom expects a point of kind 'x'")
        if args.op == "e":
            if args.c is None:
                raise ValidationError("op e needs --c P/Q")
            result = act_e(point, args.i, parse_rational(args.c))
        elif args.op == "s":
            result = weyl_s(point, args.i)
        else:
            raise ValidationError("side geom supports ops e and s")
        _emit(point_to_json(result), args.json)
    elif args.side == "trop":
        if point.kind != "trop":
            raise ValidationError("side trop expects a point of kind 'trop'")
        if args.op == "e":
            result = tropical.trop_e(point, args.i, args.d)
        elif args.op == "s":
            result = tropical.trop_weyl(point, args.i)
        else:
            raise ValidationError("side trop supports ops e and s")
        _emit(point_to_json(result), args.json)
    elif args.side == "bkinf":
        if not isinstance(point, bkinf.BElement):
            raise ValidationError("side bkinf expects an element of kind 'b'")
        if args.op == "e":
            result = bkinf.bk_e(point, args.i, args.d)
        elif args.op == "f":
            result = bkinf.bk_e(point, args.i, -args.d)
        elif args.op == "s":
            result = bkinf.weyl_s_tilde(point, args.i)
        else:
            raise ValidationError("side bkinf supports ops e, f and s")
        _emit(bkinf.to_json(result), args.json)
    else:
        raise ValidationError("unknown side %r" % (args.side,))
    return EXIT_OK


def cmd_map(args):
    point = _load_point(args.point)
    if args.map == "sigma":
        if point.kind != "x":
            raise ValidationError("map sigma expects kind 'x'")
        _emit(point_to_json(sigma_map(point)), args.json)
    elif args.map == "xi":
        if point.kind != "y":
            raise ValidationError("map xi expects kind 'y'")
        _emit(point_to_json(xi_map(point)), args.json)
    elif args.map == "omega":
        if point.kind != "trop":
            raise ValidationError("map omega expects kind 'trop'")
        _emit(bkinf.to_json(omega(point)), args.json)
    elif args.map == "omega-inv":
        if not isinstance(point, bkinf.BElement):
            raise ValidationError("map omega-inv expects kind 'b'")
        _emit(point_to_json(omega_inv(point)), args.json)
    elif args.map == "ud-probe":
        if point.kind != "trop":
            raise ValidationError("map ud-probe expects integer exponents (kind 'trop')")
        return _probe_report(point, args)
    else:
        raise ValidationError("unknown map %r" % (args.map,))
    return EXIT_OK


def _probe_report(exponents, args):
    i = args.i
    if i is None:
        raise ValidationError("ud-probe needs --i")
    moved = tropical.trop_e(exponents, i, args.d)
    report = {
        "i": i,
        "d": args.d,
        "gamma": {
            "probe": tropical.ud_degree_probe("gamma", exponents, i),
            "tropical": tropical.trop_wt(exponents, i),
        },
        "epsilon": {
            "probe": tropical.ud_degree_probe("epsilon", exponents, i),
            "tropical": tropical.trop_eps(exponents, i),
        },
        "action": {},
    }
    for (l, m) in exponents.shape.l1_indices:
        report["action"]["%d,%d" % (l, m)] = {
            "probe": tropical.ud_degree_probe("e", exponents, i, d=args.d, coord=(l, m)),
            "tropical": moved.get(l, m),
        }
    matches = (
        report["gamma"]["probe"] == report["gamma"]["tropical"]
        and report["epsilon"]["probe"] == report["epsilon"]["tropical"]
        and all(v["probe"] == v["tropical"] for v in report["action"].values())
    )
    report["match"] = matches
    _emit(report, args.json)
    return EXIT_OK if matches else EXIT_FAIL


def cmd_conjecture(args):
    shape = make_shape(args.n, args.k)
    outcomes = conjecture_outcomes(shape, args.trials, args.seed, args.bound or 16)
    ratio_ok = None
    if shape.k == 1:
        ratio_ok = all(
            o["proportional"] and o["ratio"] == o["expected_k1_ratio"] for o in outcomes
        )
    report = {
        "n": shape.n,
        "k": shape.k,
        "seed": args.seed,
        "prng": PRNG_ID,
        "trials": args.trials,
        "proportional_count": sum(1 for o in outcomes if o["proportional"]),
        "outcomes": outcomes,
        "k1_ratio_ok": ratio_ok,
    }
    _emit(report, args.json)
    return EXIT_OK if ratio_ok in (None, True) else EXIT_FAIL


def cmd_graph(args):
    shape = make_shape(args.n, args.k)
    if args.center == "b_inf":
        center = bkinf.b_infinity(shape)
    else:
        center = _load_point(args.center)
        if not isinstance(center, bkinf.BElement):
            raise ValidationError("graph center must be 'b_inf' or a kind-'b' file")
        if center.shape != shape:
            raise ValidationError("center shape does not match --n/--k")
    print(bkinf.crystal_graph_dot(center, args.radius))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pathcrystal",
        description="Exact verification of the lattice-path crystal construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.add_argument("--trials", type=int, default=20)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--bound", type=int, default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_act = sub.add_parser("act", help="apply a crystal operation to a point file")
    p_act.add_argument("--side", required=True, choices=["geom", "trop", "bkinf"])
    p_act.add_argument("--op", required=True, choices=["e", "f", "s"])
    p_act.add_argument("--i", type=int, required=True)
    p_act.add_argument("--c", type=str, default=None, help="rational parameter P/Q")
    p_act.add_argument("--d", type=int, default=1, help="integer step count")
    p_act.add_argument("--point", required=True)
    p_act.add_argument("--json", action="store_true")
    p_act.set_defaults(func=cmd_act)

    p_map = sub.add_parser("map", help="apply a chart change or probe")
    p_map.add_argument(
        "--map", required=True, choices=["sigma", "xi", "omega", "omega-inv", "ud-probe"]
    )
    p_map.add_argument("--point", required=True)
    p_map.add_argument("--i", type=int, default=None)
    p_map.add_argument("--d", type=int, default=0)
    p_map.add_argument("--json", action="store_true")
    p_map.set_defaults(func=cmd_map)

    p_conj = sub.add_parser("conjecture", help="run the proportionality experiment")
    p_conj.add_argument("--n", type=int, required=True)
    p_conj.add_argument("--k", type=int, required=True)
    p_conj.add_argument("--trials", type=int, default=25)
    p_conj.add_argument("--seed", type=int, default=0)
    p_conj.add_argument("--bound", type=int, default=16)
    p_conj.add_argument("--json", action="store_true")
    p_conj.set_defaults(func=cmd_conjecture)

    p_graph = sub.add_parser("graph", help="DOT export of an array-crystal ball")
    p_graph.add_argument("--n", type=int, required=True)
    p_graph.add_argument("--k", type=int, required=True)
    p_graph.add_argument("--center", default="b_inf")
    p_graph.add_argument("--radius", type=int, default=1)
    p_graph.set_defaults(func=cmd_graph)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValidationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except CrystalFault as exc:
        print("fault: %s" % exc, file=sys.stderr)
        if exc.witness is not None:
            print("witness: %s" % json.dumps(exc.witness, sort_keys=True, default=str), file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

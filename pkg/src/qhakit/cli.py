"""Command-line driver: verification suites, operator computations, twisting.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on parse errors, load-time verification failures, or inapplicable
requests.  Reports are deterministic for a fixed (input, seed): timing
goes to stderr, never into the report payload.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from .antipode import antipode_from_v
from .catalog import CatalogEntry, builtin
from .drinfeld import compute_drinfeld_data
from .errors import CatalogError, QhaError, SchemaError, StructureError
from .qtriangular import altschuler_coste_operator, compute_u
from .randgen import random_invertible_element, random_twist
from .serial import parse_structure, parse_twist, serialize_structure
from .structures import QuasiTriangularQHA
from .suites import DEFAULT_TRIALS, SUITE_NAMES, run_suites
from .twists import quadratic_invariants, twist_structure

PROG = "qhakit"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact verification and computation for finite-dimensional "
                    "quasi-Hopf algebra structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="builtin name (trivial, group_z<n>, z2_triangular, "
                                      "sweedler_h4, semion) or a structure file path")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized checks (default: $QHAKIT_SEED or 0)")
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="report format (structured = canonical JSON)")
    common.add_argument("--output", default=None, help="write the report to a file")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run verification suites")
    p_verify.add_argument("--suite", default="all",
                          choices=SUITE_NAMES + ("all",),
                          help="which suite to run (default: all)")
    p_verify.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                          help="random trials per seeded check")

    p_compute = sub.add_parser("compute", parents=[common],
                               help="compute a derived operator")
    p_compute.add_argument("what", choices=(
        "drinfeld", "second-drinfeld", "u", "v", "gamma", "gammabar",
        "invariants", "ac-operator"))
    p_compute.add_argument("m", nargs="?", type=int, default=None,
                           help="power for 'invariants'")

    p_twist = sub.add_parser("twist", parents=[common],
                             help="twist a structure and write the result")
    group = p_twist.add_mutually_exclusive_group(required=True)
    group.add_argument("--twist", dest="twist_file", default=None,
                       help="twist file (JSON with a sparse 'twist' table)")
    group.add_argument("--generate-seed", type=int, default=None,
                       help="generate a seeded random twist instead")
    return parser


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("QHAKIT_SEED")
    return int(env) if env else 0


def _load_input(spec: str) -> CatalogEntry:
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_structure(fh.read())
    return builtin(spec)


def _emit(text: str, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _enc_element(field, elt) -> list:
    return [field.format_scalar(v) for v in elt.coeffs]


def _enc_tensor(field, t) -> list:
    return [{"key": list(k), "scalar": field.format_scalar(v)}
            for k, v in sorted(t.entries.items())]


def cmd_verify(args) -> int:
    entry = _load_input(args.input)
    seed = _resolve_seed(args)
    reports = run_suites(entry, args.suite, seed=seed, trials=args.trials)
    ok = all(r.ok for r in reports)
    if args.format == "structured":
        payload = {
            "command": "verify",
            "input": entry.name,
            "seed": seed,
            "suite": args.suite,
            "ok": ok,
            "suites": [r.to_dict() for r in reports],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"input: {entry.name}   suite: {args.suite}   seed: {seed}"]
        for r in reports:
            lines.append(r.format_text())
        n = sum(len(r.checks) for r in reports)
        nf = sum(len(r.failures()) for r in reports)
        lines.append(f"{'OK' if ok else 'FAILED'}: {n - nf}/{n} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if ok else 1


def cmd_compute(args) -> int:
    entry = _load_input(args.input)
    seed = _resolve_seed(args)
    s = entry.structure
    h = s.qha if isinstance(s, QuasiTriangularQHA) else s
    field = h.algebra.field
    what = args.what
    needs_r = what in ("u", "invariants", "ac-operator")
    if needs_r and not isinstance(s, QuasiTriangularQHA):
        print(f"error: '{what}' needs an R-matrix and {entry.name} has none",
              file=sys.stderr)
        return 2
    if what == "invariants" and args.m is None:
        print("error: 'invariants' needs the power m", file=sys.stderr)
        return 2

    values = {}
    post = "all postconditions verified"
    if what == "drinfeld":
        data = compute_drinfeld_data(h)
        values["f_delta"] = _enc_tensor(field, data.f_delta.f)
    elif what == "second-drinfeld":
        data = compute_drinfeld_data(h)
        values["f_zero"] = _enc_tensor(field, data.f_zero.f)
    elif what == "gamma":
        data = compute_drinfeld_data(h)
        values["gamma"] = _enc_tensor(field, data.gamma)
    elif what == "gammabar":
        data = compute_drinfeld_data(h)
        values["gamma_bar"] = _enc_tensor(field, data.gamma_bar)
    elif what == "u":
        ops = compute_u(s, check=True)
        values["u"] = _enc_element(field, ops.u)
        values["u_tilde"] = _enc_element(field, ops.u_tilde)
    elif what == "v":
        rng = random.Random(f"{seed}:compute-v:{entry.name}")
        w = random_invertible_element(rng, h.algebra)
        antipode_from_v(h, w)  # verifies the triple and the round trip
        values["v"] = _enc_element(field, w)
        post = "antipode round trip recovered the generator exactly"
    elif what == "invariants":
        z = quadratic_invariants(s, args.m)
        values[f"z_{args.m}"] = _enc_element(field, z)
    elif what == "ac-operator":
        a = altschuler_coste_operator(s)
        values["a"] = _enc_tensor(field, a)

    if args.format == "structured":
        payload = {"command": "compute", "input": entry.name, "what": what,
                   "seed": seed, "values": values, "postconditions": post}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"input: {entry.name}   compute: {what}"]
        for key, val in values.items():
            lines.append(f"{key} = {json.dumps(val)}")
        lines.append(post)
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def cmd_twist(args) -> int:
    entry = _load_input(args.input)
    s = entry.structure
    if args.twist_file:
        with open(args.twist_file, "r", encoding="utf-8") as fh:
            tw = parse_twist(fh.read(), s)
    else:
        rng = random.Random(f"{args.generate_seed}:twist:{entry.name}")
        tw = random_twist(rng, s.qba())
    twisted = twist_structure(s, tw, verify=True)
    text = serialize_structure(twisted, name=f"{entry.name}-twisted")
    _emit(text, args.output)
    if not args.output:
        sys.stderr.write(f"twisted structure verified ({entry.name})\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        if args.command == "verify":
            code = cmd_verify(args)
        elif args.command == "compute":
            code = cmd_compute(args)
        else:
            code = cmd_twist(args)
    except (SchemaError, StructureError, CatalogError, OSError, QhaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, StructureError) and exc.report is not None:
            for c in exc.report.failures():
                print(f"  failed check: {c.check_id}"
                      + (f" [{c.witness}]" if c.witness else ""), file=sys.stderr)
        return 2
    print(f"elapsed: {time.monotonic() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

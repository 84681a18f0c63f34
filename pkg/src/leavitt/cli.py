"""Command-line front door.

Subcommands: profile, construct, verify, classify, reproduce.  The
coefficient field is chosen by the LEAVITT_FIELD environment variable
("rational", the default, or "fp<p>" for a prime field).  JSON output uses
lower_snake_case keys throughout; fixed seeds give byte-identical output.

Exit codes: 0 success/verified, 1 relation failure, 2 inconclusive,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .certify import (
    check_relations,
    evaluate_certificate,
    generation_certificate,
    span_closure_verify,
)
from .classify import (
    K0Class,
    classification_report,
    graded_iso_exists,
    is_isomorphic,
    k0_data,
    module_type,
)
from .construct import (
    build_generators,
    build_graded_generators,
    leavitt_lexicographic_generators,
    make_placement,
)
from .fields import QQ, field_from_name
from .fixtures import fixture_from_json, fixture_names, load_fixture
from .matrices import matrix_unit
from .profiles import NotCoprime, make_profile, reduce_large_d

USAGE_ERROR = 64


class _CliParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the CLI contract says 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.prog + ": error: " + message) from None

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(status if status == 0 else USAGE_ERROR)


def _field_from_env():
    name = os.environ.get("LEAVITT_FIELD", "rational")
    try:
        return field_from_name(name)
    except ValueError as exc:
        raise SystemExit("LEAVITT_FIELD: %s" % exc)


def _emit(doc, as_json, pretty_lines):
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in pretty_lines:
            print(line)


def _cmd_profile(args) -> int:
    p = make_profile(args.n, args.d)
    doc = p.to_json()
    pretty = [
        "profile for M_%d(L_%d): q=%d r=%d s=%d" % (p.d, p.n, p.q, p.r, p.s),
        "h-sequence: " + ", ".join(str(h) for h in p.hseq),
        "u-sequence: " + ", ".join(str(u) for u in p.useq),
        "S1^ = {%s}  S2^ = {%s}" % (
            ", ".join(str(i) for i in sorted(p.S1hat)),
            ", ".join(str(i) for i in sorted(p.S2hat)),
        ),
        "d1=%d d2=%d e1=%d e2=%d f1=%d f2=%d b=%d t=%d"
        % (p.d1, p.d2, p.e1, p.e2, p.f1, p.f2, p.b, p.t),
    ]
    _emit(doc, args.json, pretty)
    return 0


def _build_set(args, field):
    if args.graded:
        return build_graded_generators(args.n, args.d, field)
    if args.lex:
        return leavitt_lexicographic_generators(args.n, args.d, field)
    profile = make_profile(args.n, args.d)
    placement = make_placement(profile, args.placement, args.seed)
    return build_generators(profile, placement, field)


def _cmd_construct(args) -> int:
    field = _field_from_env()
    gens = _build_set(args, field)
    if args.json:
        print(json.dumps(gens.to_json(), indent=2, sort_keys=True))
    else:
        for i, x in enumerate(gens.X, start=1):
            print("X_%d =" % i)
            print(x.render())
        print("(Y_i = X_i*)")
    return 0


def _cmd_verify(args) -> int:
    field = _field_from_env()
    if args.set:
        with open(args.set, "r", encoding="utf-8") as fh:
            gens = fixture_from_json(json.load(fh), field)
    elif args.fixture:
        gens = load_fixture(args.fixture, field)
    else:
        if args.n is None or args.d is None:
            print("verify: need --n and --d (or --set / --fixture)", file=sys.stderr)
            return USAGE_ERROR
        gens = _build_set(args, field)

    doc = {"n": gens.n, "d": gens.d, "provenance": gens.provenance}
    rel = check_relations(gens)
    doc["relations_ok"] = rel.ok
    if not rel.ok:
        doc["failed_pairs"] = [[i, j] for i, j in rel.failed_pairs]
        doc["sum_ok"] = rel.sum_ok
        _emit(doc, args.json, ["relations: FAIL"])
        return 1

    if args.closure or gens.provenance != "main-construction":
        result = span_closure_verify(
            gens,
            degree_bound=args.degree_bound,
            iteration_bound=args.iteration_bound,
        )
        doc["generation"] = result.status
        doc["closure_depth"] = result.depth
        doc["basis_size"] = result.basis_size
        status = 0 if result.status == "verified" else 2
        _emit(
            doc,
            args.json,
            [
                "relations: ok",
                "closure: %s (depth %d, basis %d)"
                % (result.status, result.depth, result.basis_size),
            ],
        )
        return status

    profile = make_profile(gens.n, gens.d)
    cert = generation_certificate(profile, gens)
    report = evaluate_certificate(cert, gens)
    doc["generation"] = "certified" if report.ok else "certificate-failure"
    doc["certificate_nodes"] = report.node_count
    doc["checked_nodes"] = report.checked
    if args.export_certificate:
        with open(args.export_certificate, "w", encoding="utf-8") as fh:
            json.dump(cert.to_json(), fh, indent=2, sort_keys=True)
    if not report.ok:
        doc["failures"] = report.failures[:5]
        _emit(doc, args.json, ["relations: ok", "certificate: FAIL"])
        return 1
    _emit(
        doc,
        args.json,
        [
            "relations: ok",
            "certificate: all %d named nodes check (%d nodes total)"
            % (report.checked, report.node_count),
        ],
    )
    return 0


def _cmd_classify(args) -> int:
    doc = k0_data(args.n, args.d).to_json()
    doc["module_type"] = list(module_type(args.n, args.d))
    doc["graded_iso_exists"] = graded_iso_exists(args.n, args.d)
    pretty = [
        "K0 data of M_%d(L_%d): (Z/%dZ, [%d])"
        % (args.d, args.n, doc["modulus"], doc["unit_class"]),
        "module type: (1, %d)" % doc["module_type"][1],
        "graded isomorphism with L_%d exists: %s"
        % (args.n, doc["graded_iso_exists"]),
    ]
    if args.m is not None:
        k = 1 if args.k is None else args.k
        same, reason = is_isomorphic(args.n, args.d, args.m, k)
        doc["other"] = {"m": args.m, "k": k}
        doc["isomorphic"] = same
        doc["reason"] = reason
        verdict = "isomorphic" if same else "not isomorphic"
        pretty.append(
            "M_%d(L_%d) and M_%d(L_%d): %s  [%s]"
            % (args.d, args.n, k, args.m, verdict, reason)
        )
    _emit(doc, args.json, pretty)
    return 0


def _cmd_reproduce(args) -> int:
    field = _field_from_env()
    table = []

    def record(name, ok, detail):
        table.append({"check": name, "ok": bool(ok), "detail": detail})

    # arithmetic profile of the running (35,13) example
    p = make_profile(35, 13)
    record(
        "profile-35-13",
        list(p.hseq) == [1, 6, 11, 3, 8, 13, 5, 10, 2, 7, 12, 4, 9]
        and sorted(p.S1hat) == [1, 3, 6, 8, 11]
        and p.stats() == (5, 8, 2, 4, 4, 5, 3, 1),
        "h-sequence, S1^, and the eight statistics",
    )

    # relation + closure verification for every bundled fixture
    closure_bounds = {"M3L5-lex": (6, 3)}
    for name in fixture_names():
        gens = load_fixture(name, field)
        rel = check_relations(gens)
        record("relations-" + name, rel.ok, "X_i Y_j = delta_ij I and sum Y_j X_j = I")
        if not rel.ok:
            continue
        db, ib = closure_bounds.get(name, (6, 8))
        result = span_closure_verify(gens, degree_bound=db, iteration_bound=ib)
        if name == "M3L5-lex":
            record(
                "closure-" + name,
                result.status == "inconclusive",
                "inconclusive as expected (e_{1,3} not reached at degree bound %d)" % db,
            )
        else:
            record(
                "closure-" + name,
                result.status == "verified",
                "verified at depth %d, basis %d" % (result.depth, result.basis_size),
            )

    # certificate verification for constructed sets on a grid
    from math import gcd

    grid_ok = True
    grid_pairs = 0
    for n in range(2, 9):
        for d in range(2, n):
            if gcd(d, n - 1) != 1:
                continue
            grid_pairs += 1
            profile = make_profile(n, d)
            gens = build_generators(profile, make_placement(profile), field)
            if not check_relations(gens).ok:
                grid_ok = False
                record("grid-%d-%d" % (n, d), False, "relation failure")
                continue
            report = evaluate_certificate(generation_certificate(profile, gens), gens)
            if not report.ok:
                grid_ok = False
                record("grid-%d-%d" % (n, d), False, "certificate failure")
    record("certificate-grid", grid_ok, "all %d coprime pairs with n <= 8 certified" % grid_pairs)

    # classifier cross-checks
    record(
        "classifier-main-diagonal",
        all(
            is_isomorphic(n, d, n, 1)[0] == (gcd(d, n - 1) == 1)
            for n in range(2, 13)
            for d in range(1, 31)
        ),
        "is_isomorphic(n,d,n,1) iff gcd(d,n-1)=1",
    )
    record(
        "classifier-graded",
        graded_iso_exists(6, 3) and graded_iso_exists(6, 4) and not graded_iso_exists(5, 3),
        "d | n^alpha criterion on (6,3), (6,4), (5,3)",
    )

    ok = all(row["ok"] for row in table)
    if args.json:
        print(json.dumps({"ok": ok, "checks": table}, indent=2, sort_keys=True))
    else:
        width = max(len(row["check"]) for row in table)
        for row in table:
            print(
                "%-*s  %s  %s"
                % (width, row["check"], "pass" if row["ok"] else "FAIL", row["detail"])
            )
        print("overall:", "pass" if ok else "FAIL")
    if not ok:
        first = next(row for row in table if not row["ok"])
        print("failed:", first["check"], file=sys.stderr)
        return 1
    return 0


def _add_nd(parser, d_default=None):
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--d", type=int, required=d_default is None, default=d_default)


def build_parser() -> _CliParser:
    parser = _CliParser(prog="leavitt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="arithmetic profile of the pair (n, d)")
    _add_nd(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_profile)

    c = sub.add_parser("construct", help="build a generator set for M_d(L_n)")
    _add_nd(c)
    c.add_argument("--placement", choices=["canonical", "random"], default="canonical")
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--graded", action="store_true", help="lexicographic degree-1 set (needs d | n)")
    c.add_argument("--lex", action="store_true", help="Leavitt's lexicographic set")
    out = c.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--pretty", dest="json", action="store_false")
    c.set_defaults(func=_cmd_construct, json=False)

    v = sub.add_parser("verify", help="verify relations and generation")
    v.add_argument("--n", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--set", help="JSON file with a generator set")
    v.add_argument("--fixture", help="name of a bundled fixture")
    v.add_argument("--placement", choices=["canonical", "random"], default="canonical")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--graded", action="store_true")
    v.add_argument("--lex", action="store_true")
    v.add_argument("--closure", action="store_true", help="force span closure instead of a certificate")
    v.add_argument("--degree-bound", type=int, default=6)
    v.add_argument("--iteration-bound", type=int, default=8)
    v.add_argument("--export-certificate", metavar="PATH")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    k = sub.add_parser("classify", help="K0 data and isomorphism decisions")
    _add_nd(k)
    k.add_argument("--m", type=int, help="compare against M_k(L_m)")
    k.add_argument("--k", type=int)
    k.add_argument("--graded", action="store_true")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=_cmd_classify)

    r = sub.add_parser("reproduce", help="re-run every bundled worked example")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return USAGE_ERROR
        return exc.code if exc.code else 0
    try:
        return args.func(args)
    except NotCoprime as exc:
        print("error:", exc, file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError, OSError) as exc:
        print("error:", exc, file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 all checks passed, 1 a mathematical check failed (the report
carries a witness), 2 unreadable or malformed input / bad usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import double as dbl
from . import esn, fixtures, inverse, presheaf, search, tables
from .errors import (
    EsnlabError,
    NotDoubleInverseError,
    OrderTooLargeError,
    ParseError,
)

SCHEMA_VERSION = 1


class _InputError(Exception):
    pass


def _read(path):
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise _InputError(str(exc)) from exc


def _input_entry(path, data):
    return {"path": str(path), "sha256": hashlib.sha256(data).hexdigest()}


def _load_single(args, doc):
    data = _read(args.path)
    doc["inputs"].append(_input_entry(args.path, data))
    return tables.parse_table(data.decode())


def _load_pair(args, doc):
    if args.hop or args.vop:
        if not (args.hop and args.vop):
            raise _InputError("--hop and --vop must be given together")
        hdata = _read(args.hop)
        vdata = _read(args.vop)
        doc["inputs"] += [_input_entry(args.hop, hdata), _input_entry(args.vop, vdata)]
        return dbl.DoubleSemigroup(
            tables.parse_table(hdata.decode()), tables.parse_table(vdata.decode())
        )
    if not args.path:
        raise _InputError("need a pair file or --hop/--vop")
    data = _read(args.path)
    doc["inputs"].append(_input_entry(args.path, data))
    hop, vop = tables.parse_double(data.decode())
    return dbl.DoubleSemigroup(hop, vop)


def _load_json(path, doc):
    data = _read(path)
    doc["inputs"].append(_input_entry(path, data))
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _check_entry(doc, name, ok, witness=None, info=None):
    entry = {"name": name, "ok": bool(ok)}
    if witness is not None:
        entry["witness"] = list(witness)
    if info is not None:
        entry["info"] = info
    doc["checks"].append(entry)
    return bool(ok)


def cmd_check(args, doc):
    wants_pair = args.double or args.double_inverse
    if wants_pair and (args.semigroup or args.inverse or args.clifford):
        raise _InputError("cannot mix single-table and pair checks in one run")
    selected = [
        flag
        for flag, on in (
            ("semigroup", args.semigroup),
            ("inverse", args.inverse),
            ("clifford", args.clifford),
            ("double", args.double),
            ("double-inverse", args.double_inverse),
        )
        if on
    ] or ["semigroup"]
    analysis = None
    if wants_pair:
        d = _load_pair(args, doc)
    else:
        t = _load_single(args, doc)
    for kind in selected:
        if kind == "semigroup":
            verdict = tables.is_associative(t)
            _check_entry(doc, "associative", verdict, verdict.witness)
        elif kind in ("inverse", "clifford"):
            try:
                analysis = inverse.analyze_inverse(t)
            except EsnlabError as exc:
                _check_entry(doc, kind, False, getattr(exc, "witness", None), str(exc))
                continue
            if kind == "inverse":
                rep = inverse.characterize_inverse(t)
                _check_entry(
                    doc,
                    "inverse",
                    True,
                    info={
                        "idempotents": list(analysis.idempotent_set),
                        "inverse_map": list(analysis.inverse_map),
                        "regular": rep.is_regular,
                        "idempotents_commute": rep.idempotents_commute,
                        "equivalence_holds": rep.equivalence_holds,
                    },
                )
            else:
                verdict = inverse.is_clifford(analysis)
                _check_entry(doc, "clifford", verdict, verdict.witness)
        elif kind == "double":
            cls = dbl.classify_double(d.hop, d.vop)
            _check_entry(
                doc, "double-semigroup", cls.is_double_semigroup,
                info=cls.as_json(),
            )
        elif kind == "double-inverse":
            cls = dbl.classify_double(d.hop, d.vop)
            ok = _check_entry(
                doc, "double-inverse-semigroup", cls.is_double_inverse_semigroup,
                info=cls.as_json(),
            )
            if ok:
                proper = dbl.is_proper(d)
                _check_entry(doc, "improper", not proper, proper.witness)
    if args.format == "dot":
        if analysis is None:
            raise _InputError("dot output needs --inverse or --clifford")
        doc["dot"] = inverse.hasse_dot(analysis)
    if analysis is not None:
        doc["analysis"] = inverse.analysis_to_json(analysis)
    return 0 if all(c["ok"] for c in doc["checks"]) else 1


def cmd_esn(args, doc):
    if args.direction == "to-groupoid":
        t = _load_single(args, doc)
        analysis = inverse.analyze_inverse(t)  # input error if not inverse
        g = esn.ig_from_is(analysis)
        doc["artifact"] = esn.groupoid_to_json(g)
        if args.format == "dot":
            doc["dot"] = esn.groupoid_dot(g)
        if args.roundtrip:
            verdict = esn.semigroup_roundtrip(t)
            _check_entry(doc, "roundtrip", verdict, verdict.witness)
    else:
        g = esn.groupoid_from_json(_load_json(args.path, doc))
        rep = esn.validate_ig(g)
        if not rep:
            raise _InputError(f"invalid groupoid: {rep.summary()}")
        t = esn.is_from_ig(g)
        doc["artifact"] = {"kind": "cayley-table", "cay": tables.format_table(t)}
        if args.roundtrip:
            verdict = esn.groupoid_roundtrip(g)
            _check_entry(doc, "roundtrip", verdict, verdict.witness)
    return 0 if all(c["ok"] for c in doc["checks"]) else 1


def cmd_double(args, doc):
    sub = args.subcommand
    if sub in ("to-dig", "roundtrip"):
        d = _load_pair(args, doc)
        try:
            g = dbl.dig_from_dis(d)
        except NotDoubleInverseError as exc:
            raise _InputError(str(exc)) from exc
        if sub == "to-dig":
            doc["artifact"] = dbl.dig_to_json(g)
        else:
            v1 = dbl.roundtrip_double(d)
            _check_entry(doc, "semigroup-roundtrip", v1, v1.witness)
            v2 = dbl.roundtrip_dig(g)
            _check_entry(doc, "groupoid-roundtrip", v2, v2.witness)
    else:
        g = dbl.dig_from_json(_load_json(args.path, doc))
        if sub == "to-dis":
            d = dbl.dis_from_dig(g)
            doc["artifact"] = {
                "kind": "double-semigroup",
                "cay": tables.format_double(d.hop, d.vop),
            }
        elif sub == "validate-axioms":
            rep = dbl.validate_dig(g, strict_ix=args.strict_axiom_ix)
            doc["report"] = rep.as_json()
            doc["substantive_by_family"] = rep.substantive_by_family()
            _check_entry(
                doc, "axioms", rep.ok,
                rep.violations[0].witness if rep.violations else None,
                info=rep.violations[0].axiom if rep.violations else None,
            )
        elif sub == "verify-interchange":
            rep = dbl.verify_interchange_identities(g)
            doc["report"] = rep.as_json()
            _check_entry(
                doc, "interchange-identities", rep.ok,
                rep.violations[0].witness if rep.violations else None,
                info=rep.violations[0].axiom if rep.violations else None,
            )
    return 0 if all(c["ok"] for c in doc["checks"]) else 1


def cmd_decompose(args, doc):
    d = _load_pair(args, doc)
    try:
        p, report = presheaf.decompose(d)
    except NotDoubleInverseError as exc:
        _check_entry(doc, "double-inverse-semigroup", False, info=str(exc))
        doc["main_theorem"] = dbl.classify_double(d.hop, d.vop).as_json()
        return 1
    doc["main_theorem"] = report.as_json()
    doc["artifact"] = presheaf.presheaf_to_json(p)
    _check_entry(doc, "double-inverse-semigroup", True)
    _check_entry(doc, "improper", report.improper)
    _check_entry(doc, "commutative", report.hop_commutative and report.vop_commutative)
    _check_entry(doc, "clifford", report.clifford)
    return 0 if all(c["ok"] for c in doc["checks"]) else 1


def cmd_compose(args, doc):
    p = presheaf.presheaf_from_json(_load_json(args.path, doc))
    rep = presheaf.validate_presheaf(p)
    if not rep:
        raise _InputError(f"invalid presheaf: {rep.summary()}")
    d = presheaf.compose(p)
    doc["artifact"] = {
        "kind": "double-semigroup",
        "cay": tables.format_double(d.hop, d.vop),
    }
    return 0


def cmd_search(args, doc):
    if args.pairs:
        report = search.search_double(args.order, args.klass, jobs=args.jobs)
    else:
        filt = "all"
        if args.klass == "inverse":
            filt = "inverse"
            if args.noncommutative:
                filt = "noncommutative-inverse"
            elif args.commutative:
                filt = "commutative-inverse"
        report = search.enumerate_semigroups(args.order, filt, jobs=args.jobs)
    doc["report"] = report.as_json()
    for name, value in sorted(report.claims.items()):
        _check_entry(doc, f"claim.{name}", value if isinstance(value, bool) else True)
    if args.expect_none:
        if not args.pairs:
            raise _InputError("--expect-none only applies to --pairs searches")
        _check_entry(
            doc, "no-proper-pairs", report.proper_pair_count == 0,
            info={"proper_pair_count": report.proper_pair_count},
        )
    return 0 if all(c["ok"] for c in doc["checks"]) else 1


def cmd_golden(args, doc):
    for name, verdict in fixtures.golden_suite(jobs=args.jobs):
        _check_entry(doc, name, verdict.holds, verdict.witness)
    return 0 if all(c["ok"] for c in doc["checks"]) else 1


def _render(doc, fmt, stream):
    if fmt == "json":
        json.dump(doc, stream, indent=2, sort_keys=True)
        stream.write("\n")
        return
    if fmt == "dot":
        stream.write(doc.get("dot", ""))
        return
    for entry in doc["checks"]:
        status = "PASS" if entry["ok"] else "FAIL"
        line = f"{status} {entry['name']}"
        if not entry["ok"] and "witness" in entry:
            line += f"  witness={tuple(entry['witness'])}"
        stream.write(line + "\n")
    if "report" in doc and "claims" in doc.get("report", {}):
        rep = doc["report"]
        for key in ("labeled_count", "class_count", "pair_count", "proper_pair_count"):
            if key in rep:
                stream.write(f"{key}: {rep[key]}\n")
    if "main_theorem" in doc and doc["main_theorem"].get("double_inverse"):
        mt = doc["main_theorem"]
        stream.write(
            f"improper: {str(mt['improper']).lower()}, "
            f"commutative: {str(mt['commutative']).lower()}, "
            f"clifford: {str(mt['clifford']).lower()}\n"
        )
    if "artifact" in doc:
        artifact = doc["artifact"]
        if isinstance(artifact, dict) and "cay" in artifact:
            stream.write(artifact["cay"])
        else:
            json.dump(artifact, stream, indent=2, sort_keys=True)
            stream.write("\n")
    if "analysis" in doc:
        a = doc["analysis"]
        stream.write(f"idempotents: {a['idempotents']}\n")
        stream.write(f"inverse_map: {a['inverse_map']}\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="esnlab",
        description="Finite inverse semigroups, their groupoids, and the double-"
        "structure checks, all by exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, path_optional=False):
        if path_optional:
            p.add_argument("path", nargs="?", help="input file")
        else:
            p.add_argument("path", help="input file")
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("check", help="run predicate checks on a table or pair")
    add_common(p, path_optional=True)
    p.add_argument("--hop", help="horizontal-operation file")
    p.add_argument("--vop", help="vertical-operation file")
    for flag in ("semigroup", "inverse", "double", "double-inverse", "clifford"):
        p.add_argument(f"--{flag}", action="store_true", dest=flag.replace("-", "_"))
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("esn", help="inverse semigroup <-> inductive groupoid")
    p.add_argument("direction", choices=("to-groupoid", "to-semigroup"))
    add_common(p)
    p.add_argument("--roundtrip", action="store_true")
    p.set_defaults(handler=cmd_esn)

    p = sub.add_parser("double", help="double semigroup <-> double groupoid")
    p.add_argument(
        "subcommand",
        choices=("to-dig", "to-dis", "validate-axioms", "verify-interchange", "roundtrip"),
    )
    add_common(p, path_optional=True)
    p.add_argument("--hop")
    p.add_argument("--vop")
    p.add_argument("--strict-axiom-ix", action="store_true")
    p.set_defaults(handler=cmd_double)

    p = sub.add_parser("decompose", help="double inverse semigroup -> presheaf")
    add_common(p, path_optional=True)
    p.add_argument("--hop")
    p.add_argument("--vop")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("compose", help="presheaf -> double semigroup")
    add_common(p)
    p.set_defaults(handler=cmd_compose)

    p = sub.add_parser("search", help="enumerate semigroups or pairs")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="klass", choices=("semigroup", "inverse"),
                   default="semigroup")
    p.add_argument("--pairs", action="store_true")
    p.add_argument("--noncommutative", action="store_true")
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--expect-none", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("golden-suite", help="replay every bundled fixture")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_golden)

    return parser


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": [],
        "checks": [],
    }
    start = time.monotonic()
    try:
        code = args.handler(args, doc)
    except (
        _InputError,
        ParseError,
        OrderTooLargeError,
        ValueError,
        KeyError,
        TypeError,
        IndexError,
        AttributeError,
    ) as exc:
        print(f"esnlab: error: {exc}", file=sys.stderr)
        return 2
    except EsnlabError as exc:
        print(f"esnlab: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "dot" and "dot" not in doc:
        print("esnlab: error: dot output is not available for this command", file=sys.stderr)
        return 2
    doc["ok"] = all(c["ok"] for c in doc["checks"])
    doc["timing_ms"] = int((time.monotonic() - start) * 1000)
    _render(doc, args.format, stream)
    return code


if __name__ == "__main__":
    sys.exit(main())

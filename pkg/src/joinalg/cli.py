"""Command-line surface.

Subcommands: parse, classify, verify, enumerate, quotient, factorize,
suite.  Output is a JSON report on stdout, deterministic for fixed flags
and seed; human-oriented progress lines go to stderr.  Exit codes: 0 pass,
1 fail verdict, 2 parse error, 3 precondition violation, 4 size limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify
from .gallery import cyclic, klein_group
from .enumeration import EnumerationQuery, enumerate_odot
from .errors import (
    JoinalgError,
    NotAssociativeError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .factorize import projection_decomposition_check
from .formats import MagmaFile, parse_path, to_json, to_text
from .joined import JoinedStructure, verify_join_law
from .quotient import quotient_isomorphism
from .report import Report, Verdict, content_hash
from .suite import run_suite

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_SIZE = 4

VERIFY_MODES = {
    "left": ("left", "plain"),
    "right": ("right", "plain"),
    "two-sided": ("both", "plain"),
    "identical": ("both", "identical"),
    "identical-left": ("left", "identical"),
    "identical-right": ("right", "identical"),
}


def _emit(data: dict) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")


def _emit_report(report: Report, timing: bool = False) -> int:
    _emit(report.to_dict(include_timing=timing))
    return EXIT_PASS if report.verdict is not Verdict.FAIL else EXIT_FAIL


def _error_record(kind: str, exc: Exception) -> dict:
    record: dict = {"error": {"kind": kind, "message": str(exc)}}
    if isinstance(exc, ParseError):
        record["error"]["line"] = exc.line
        record["error"]["column"] = exc.column
    if isinstance(exc, NotAssociativeError):
        record["error"]["witness"] = list(exc.triple)
    return record


def _load(path: str) -> MagmaFile:
    return parse_path(path)


def _joined_from(mf: MagmaFile, e_label: str | None) -> JoinedStructure:
    e = mf.e
    if e_label is not None:
        if e_label not in mf.elements:
            raise ParseError(f"unknown label {e_label!r} for e")
        e = mf.elements.index(e_label)
    if len(mf.ops) != 2:
        raise PreconditionError("this command needs a file with two operation tables")
    if e is None:
        raise PreconditionError("no distinguished element: add an e line or pass --e")
    return JoinedStructure(mf.elements, mf.ops[0][1], mf.ops[1][1], e)


def cmd_parse(args) -> int:
    mf = _load(args.path)
    if args.emit == "json":
        sys.stdout.write(to_json(mf))
    else:
        sys.stdout.write(to_text(mf))
    return EXIT_PASS


def cmd_classify(args) -> int:
    mf = _load(args.path)
    sg = mf.semigroup(0)
    rep = classify(sg)
    report = Report(
        name=f"classify {args.path}",
        structure_hash=content_hash(sg.table),
        verdict=Verdict.PROVED_PASS,
        flags=rep.flags(),
        details={
            "idempotents": rep.idempotents.labels(sg.names),
            "center": rep.center.labels(sg.names),
            "central_idempotents": rep.central_idempotents.labels(sg.names),
            "kernel": rep.kernel.labels(sg.names),
            "grouplike_witness": None if rep.grouplike_witness is None
            else sg.names[rep.grouplike_witness],
            "bi_identity_witness": None if rep.bi_identity_witness is None
            else sg.names[rep.bi_identity_witness],
            "bi_identity_count": rep.bi_identity_count,
        },
    )
    return _emit_report(report, args.timing)


def cmd_verify(args) -> int:
    mf = _load(args.path)
    j = _joined_from(mf, args.e)
    side, mode = VERIFY_MODES[args.mode]
    law = verify_join_law(j, side, mode)
    report = Report(
        name=f"verify {args.mode} {args.path}",
        structure_hash=content_hash([j.dot, j.odot, j.e]),
        verdict=Verdict.PROVED_PASS if law.holds else Verdict.FAIL,
        details={"side": side, "mode": mode, "holds": law.holds},
        witnesses={} if law.counterexample is None
        else {"pair": list(law.counterexample)},
    )
    return _emit_report(report, args.timing)


def _group_from_spec(spec: str):
    s = spec.strip().lower()
    if s == "klein":
        return klein_group()
    if s.startswith("cyclic:"):
        return cyclic(int(s.split(":", 1)[1]))
    if s.startswith("z") and s[1:].isdigit():
        return cyclic(int(s[1:]))
    raise ParseError(f"unknown group spec {spec!r}; use klein, zN or cyclic:N")


def cmd_enumerate(args) -> int:
    g = _group_from_spec(args.group)
    e = g.identity if args.e is None else g.names.index(args.e)
    query = EnumerationQuery(g, e, args.mode, args.method,
                             raw_limit=args.raw_limit, workers=args.workers)
    tables = enumerate_odot(query)
    dump = [[" ".join(g.names[v] for v in row) for row in t] for t in tables]
    report = Report(
        name=f"enumerate {args.group} {args.mode} {args.method}",
        structure_hash=content_hash([g.table, e, args.mode]),
        verdict=Verdict.PROVED_PASS,
        details={"count": len(tables), "tables": dump},
    )
    return _emit_report(report, args.timing)


def cmd_quotient(args) -> int:
    mf = _load(args.path)
    j = _joined_from(mf, args.e)
    rep = quotient_isomorphism(j)
    d = rep.diagram
    ok = rep.all_hold
    report = Report(
        name=f"quotient {args.path}",
        structure_hash=content_hash([j.dot, j.odot, j.e]),
        verdict=Verdict.PROVED_PASS if ok else Verdict.FAIL,
        details={
            "classes": [list(c.labels(j.names)) for c in d.classes],
            "quotient_order": d.order,
            "identities": d.identities,
            "lam_homomorphism": rep.lam_homomorphism,
            "lagrange_consistent": rep.lagrange_consistent,
        },
        witnesses={} if ok else {"failed": [
            k for k, v in d.identities.items() if not v
        ] or ["isomorphism"]},
    )
    return _emit_report(report, args.timing)


def cmd_factorize(args) -> int:
    mf = _load(args.path)
    j = _joined_from(mf, args.e)
    rep = projection_decomposition_check(j)
    report = Report(
        name=f"factorize {args.path}",
        structure_hash=content_hash([j.dot, j.odot, j.e]),
        verdict=Verdict.PROVED_PASS if rep.all_hold else Verdict.FAIL,
        details={
            "delta": list(rep.delta.labels(j.names)),
            "omega": list(rep.omega.labels(j.names)),
            "delta_is_normal": rep.delta_is_normal,
            "direct_delta_omega": rep.direct_delta_omega,
            "direct_omega_delta": rep.direct_omega_delta,
            "joiner_equals_projection": rep.joiner_equals_projection,
            "joiner_is_strong_decomposer": rep.joiner_is_strong_decomposer,
        },
        witnesses={} if rep.all_hold else {"failed": [
            k for k, v in (
                ("delta_is_normal", rep.delta_is_normal),
                ("direct_delta_omega", rep.direct_delta_omega),
                ("joiner_equals_projection", rep.joiner_equals_projection),
                ("joiner_is_strong_decomposer", rep.joiner_is_strong_decomposer),
            ) if not v
        ]},
    )
    return _emit_report(report, args.timing)


def cmd_suite(args) -> int:
    report = run_suite(
        order_max=args.order_max,
        budget=args.budget,
        seed=args.seed,
        raw_limit=args.raw_limit,
        workers=args.workers,
        long_run=args.long_run,
    )
    for line in report.summary_lines():
        sys.stderr.write(line + "\n")
    sys.stdout.write(report.to_json(include_timing=args.timing))
    return EXIT_PASS if report.verdict is not Verdict.FAIL else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="joinalg",
        description="finite joined-structure toolkit: classify, verify, enumerate",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_e=True):
        if with_e:
            p.add_argument("--e", default=None, help="label of the distinguished element")
        p.add_argument("--timing", action="store_true", help="include timing in output")

    p = sub.add_parser("parse", help="parse a structure file and echo its canonical form")
    p.add_argument("path")
    p.add_argument("--emit", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_parse)

    p = sub.add_parser("classify", help="classification report for the first table")
    p.add_argument("path")
    common(p, with_e=False)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="check a joiner law on a two-operation file")
    p.add_argument("path")
    p.add_argument("--mode", choices=sorted(VERIFY_MODES), default="two-sided")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate second operations over a named group")
    p.add_argument("--group", required=True, help="klein, zN or cyclic:N")
    p.add_argument("--mode", choices=("left", "right", "two-sided", "identical", "josemig"),
                   default="identical")
    p.add_argument("--method", choices=("raw", "via-f", "both"), default="both")
    p.add_argument("--raw-limit", type=int, default=3, dest="raw_limit")
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("quotient", help="quotient diagram and isomorphism checks")
    p.add_argument("path")
    common(p)
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("factorize", help="joiner projection decomposition checks")
    p.add_argument("path")
    common(p)
    p.set_defaults(fn=cmd_factorize)

    p = sub.add_parser("suite", help="run the full verification suite")
    p.add_argument("--order-max", type=int, default=3, dest="order_max")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--raw-limit", type=int, default=3, dest="raw_limit")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--long-run", action="store_true", dest="long_run")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        _emit(_error_record("parse", exc))
        return EXIT_PARSE
    except SizeLimitError as exc:
        _emit(_error_record("size-limit", exc))
        return EXIT_SIZE
    except (PreconditionError, NotAssociativeError) as exc:
        _emit(_error_record("precondition", exc))
        return EXIT_PRECONDITION
    except (FileNotFoundError, IsADirectoryError) as exc:
        _emit(_error_record("parse", exc))
        return EXIT_PARSE
    except JoinalgError as exc:
        _emit(_error_record("error", exc))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

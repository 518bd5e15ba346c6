"""Command-line interface: table, check, survey, dump.

Exit codes: 0 success / PASS verdict, 1 usage or input error, 2 theorem
FAIL verdict, 3 internal error (partial survey results are still written).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .algebras import (
    dual_group_algebra,
    dual_quotient_subalgebra,
    group_algebra,
    subgroup_subalgebra,
)
from .characters import character_table_dict, irreducible_characters
from .depth import theorem_check
from .errors import HopfDepthError
from .groups import (
    enumerate_subgroups,
    parse_permutation,
    resolve_group,
    subgroup_from_permutations,
    trivial_subgroup,
)
from .hopf import algebra_from_dict, algebra_to_dict
from .survey import CorpusSpec, run_survey


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser():
    parser = _Parser(prog="hopfdepth", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print the exact character table of k[G] (or k^G)")
    table.add_argument("group", help="built-in group name or group file path")
    table.add_argument("--dual", action="store_true", help="use the dual algebra k^G")
    table.add_argument("--out", help="also write the table as JSON to this path")

    check = sub.add_parser("check", help="run the depth-two / normality check on one pair")
    check.add_argument("group", help="built-in group name or group file path")
    check.add_argument(
        "--subgroup",
        required=True,
        help="subgroup generators in cycle notation (comma separated), the empty "
        "string for the trivial subgroup, or an index into the subgroup list",
    )
    check.add_argument(
        "--dual",
        action="store_true",
        help="check the coset-functional subalgebra of k^G for a normal subgroup",
    )

    survey = sub.add_parser("survey", help="run the theorem check over a whole corpus")
    survey.add_argument("--corpus", help="JSON corpus spec file")
    survey.add_argument("--out", help="write the TSV report here")
    survey.add_argument("--figures", help="render summary figures into this directory")
    survey.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    dump = sub.add_parser("dump", help="write the structure constants of an algebra")
    dump.add_argument("group", help="built-in group name or group file path")
    dump.add_argument("kind", choices=["group-algebra", "dual"])
    dump.add_argument("--out", help="output path (default stdout)")

    verify = sub.add_parser("verify-dump", help="reload a dump and verify the axioms")
    verify.add_argument("path", help="algebra dump file")

    return parser


def resolve_subgroup(G, selector):
    selector = selector.strip()
    if selector == "":
        return trivial_subgroup(G)
    if re.fullmatch(r"\d+", selector):
        subs = enumerate_subgroups(G)
        idx = int(selector)
        if idx >= len(subs):
            raise HopfDepthError(f"subgroup index {idx} out of range (0..{len(subs) - 1})")
        return subs[idx]
    if G.perms is None:
        raise HopfDepthError("cycle selectors need a permutation group; use an index")
    degree = len(G.perms[0])
    parts = re.split(r",(?![^()]*\))", selector)
    perms = [parse_permutation(part, degree) for part in parts if part.strip()]
    return subgroup_from_permutations(G, perms)


def cmd_table(args):
    G = resolve_group(args.group)
    algebra = dual_group_algebra(G) if args.dual else group_algebra(G)
    irr = irreducible_characters(algebra)
    print(f"# {algebra.name}: {len(irr)} irreducible characters, degrees "
          + ",".join(str(d) for d in irr.degrees))
    print("degree\t" + "\t".join(algebra.labels))
    for deg, chi in zip(irr.degrees, irr.characters):
        print(str(deg) + "\t" + "\t".join(str(v) for v in chi.values))
    if args.out:
        payload = character_table_dict(irr)
        Path(args.out).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    return 0


def cmd_check(args):
    G = resolve_group(args.group)
    sub = resolve_subgroup(G, args.subgroup)
    if args.dual:
        K = dual_quotient_subalgebra(G, sub)
    else:
        K = subgroup_subalgebra(G, sub)
    verdict = theorem_check(K)
    print(f"pair: {verdict.pair}  (dim {verdict.dim_k} in {verdict.dim_h}, index {verdict.index})")
    print(f"depth_two={str(verdict.depth_two).lower()} lemma={str(verdict.lemma).lower()} "
          f"integral_central={str(verdict.integral_central).lower()} "
          f"adjoint_stable={str(verdict.adjoint_stable).lower()} "
          f"ideal_normal={str(verdict.ideal_normal).lower()}")
    if verdict.minimal_n is not None:
        print(f"minimal_N={verdict.minimal_n}")
    if verdict.witnesses:
        ws = " ".join(f"(a{a},x{c})" for a, c in verdict.witnesses)
        print(f"witnesses: {ws}")
    print(f"classes: parent={list(map(list, verdict.classes_h))} "
          f"sub={list(map(list, verdict.classes_k))} "
          f"sizes={list(verdict.class_sizes_h)}/{list(verdict.class_sizes_k)}")
    if verdict.formulas_ok is not None:
        print(f"class_formulas={str(verdict.formulas_ok).lower()}")
    print(f"verdict: {verdict.verdict}")
    return 0 if verdict.verdict == "PASS" else 2


def cmd_survey(args):
    spec = CorpusSpec.from_file(args.corpus) if args.corpus else CorpusSpec()
    report = run_survey(spec, jobs=args.jobs)
    for line in report.summary_lines():
        print(line)
    if args.out:
        Path(args.out).write_text(report.to_tsv(), encoding="utf-8")
        print(f"report written to {args.out}")
    if args.figures:
        from .figures import render_survey_figures

        for p in render_survey_figures(report, args.figures):
            print(f"figure written to {p}")
    if report.errors:
        for pair, msg in report.errors:
            print(f"internal error on {pair}: {msg}", file=sys.stderr)
        return 3
    return 0 if not report.failures else 2


def cmd_dump(args):
    G = resolve_group(args.group)
    algebra = dual_group_algebra(G) if args.kind == "dual" else group_algebra(G)
    payload = json.dumps(algebra_to_dict(algebra), indent=None, separators=(",", ":")) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return 0


def cmd_verify_dump(args):
    with open(args.path, encoding="utf-8") as fh:
        data = json.load(fh)
    algebra = algebra_from_dict(data, verify=True)
    print(f"{algebra.name}: all Hopf axioms pass (dim {algebra.dim})")
    return 0


_HANDLERS = {
    "table": cmd_table,
    "check": cmd_check,
    "survey": cmd_survey,
    "dump": cmd_dump,
    "verify-dump": cmd_verify_dump,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _HANDLERS[args.command](args)
    except HopfDepthError as exc:
        print(f"hopfdepth: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"hopfdepth: {exc}", file=sys.stderr)
        return 1
    except Exception:
        import traceback

        traceback.print_exc()
        return 3


if __name__ == "__main__":
    sys.exit(main())

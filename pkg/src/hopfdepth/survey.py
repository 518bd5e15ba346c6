"""Corpus survey: run the theorem check over every inclusion of a group list.

The machine-readable output is a tab-separated table with a frozen column
order; two runs over the same corpus produce byte-identical bytes no matter
how many worker processes evaluate the groups.
"""

from __future__ import annotations

import json
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebras import (
    dual_group_algebra,
    dual_quotient_subalgebra,
    group_algebra,
    subgroup_subalgebra,
)
from .depth import theorem_check
from .errors import HopfDepthError
from .groups import enumerate_subgroups, resolve_group

DEFAULT_GROUPS = ("C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "S4")

TSV_COLUMNS = (
    "pair",
    "family",
    "group",
    "subalgebra",
    "dim_h",
    "dim_k",
    "index",
    "depth_two",
    "lemma",
    "integral_central",
    "adjoint_stable",
    "ideal_normal",
    "verdict",
    "minimal_n",
    "witnesses",
    "vanishing_zero",
    "integral_values",
    "regular_induction",
    "class_sizes_h",
    "class_sizes_k",
    "formulas_ok",
    "error",
)


@dataclass(frozen=True)
class CorpusSpec:
    groups: tuple = DEFAULT_GROUPS
    include_duals: bool = True
    subgroup_cap: int = 24

    @staticmethod
    def from_dict(data):
        groups = tuple(data.get("groups", DEFAULT_GROUPS))
        if not groups:
            raise HopfDepthError("corpus spec lists no groups")
        return CorpusSpec(
            groups=groups,
            include_duals=bool(data.get("include_duals", True)),
            subgroup_cap=int(data.get("subgroup_cap", 24)),
        )

    @staticmethod
    def from_file(path):
        with open(path, encoding="utf-8") as fh:
            return CorpusSpec.from_dict(json.load(fh))


@dataclass(frozen=True)
class PairRecord:
    pair: str
    family: str  # "group" or "dual"
    group: str
    subalgebra: str
    verdict: object  # PairVerdict, or None when errored
    error: str | None = None

    @property
    def ok(self):
        v = self.verdict
        if v is None:
            return False
        if v.verdict != "PASS" or not v.regular_induction_ok:
            return False
        if v.vanishing_zero is False or v.integral_values_ok is False:
            return False
        if v.formulas_ok is False:
            return False
        return True

    def tsv_row(self):
        v = self.verdict

        def b(x):
            if x is None:
                return "-"
            if isinstance(x, bool):
                return "true" if x else "false"
            return str(x)

        if v is None:
            cells = dict.fromkeys(TSV_COLUMNS, "-")
            cells.update(
                pair=self.pair,
                family=self.family,
                group=self.group,
                subalgebra=self.subalgebra,
                verdict="ERROR",
                error=self.error or "unknown",
            )
            return "\t".join(cells[c] for c in TSV_COLUMNS)
        witnesses = ";".join(f"a{a}~x{c}" for a, c in v.witnesses) or "-"
        cells = {
            "pair": self.pair,
            "family": self.family,
            "group": self.group,
            "subalgebra": self.subalgebra,
            "dim_h": str(v.dim_h),
            "dim_k": str(v.dim_k),
            "index": str(v.index),
            "depth_two": b(v.depth_two),
            "lemma": b(v.lemma),
            "integral_central": b(v.integral_central),
            "adjoint_stable": b(v.adjoint_stable),
            "ideal_normal": b(v.ideal_normal),
            "verdict": v.verdict,
            "minimal_n": b(v.minimal_n),
            "witnesses": witnesses,
            "vanishing_zero": b(v.vanishing_zero),
            "integral_values": b(v.integral_values_ok),
            "regular_induction": b(v.regular_induction_ok),
            "class_sizes_h": ",".join(str(s) for s in v.class_sizes_h),
            "class_sizes_k": ",".join(str(s) for s in v.class_sizes_k),
            "formulas_ok": b(v.formulas_ok),
            "error": "-",
        }
        return "\t".join(cells[c] for c in TSV_COLUMNS)


@dataclass(frozen=True)
class SurveyReport:
    spec: CorpusSpec
    records: tuple

    @property
    def pairs(self):
        return len(self.records)

    @property
    def group_pairs(self):
        return sum(1 for r in self.records if r.family == "group")

    @property
    def dual_pairs(self):
        return sum(1 for r in self.records if r.family == "dual")

    @property
    def normal_count(self):
        return sum(
            1 for r in self.records if r.verdict is not None and all(r.verdict.booleans)
        )

    @property
    def depth_two_count(self):
        return sum(1 for r in self.records if r.verdict is not None and r.verdict.depth_two)

    @property
    def agreements(self):
        return sum(1 for r in self.records if r.verdict is not None and r.verdict.verdict == "PASS")

    @property
    def failures(self):
        return tuple(r.pair for r in self.records if not r.ok)

    @property
    def errors(self):
        return tuple((r.pair, r.error) for r in self.records if r.error)

    def to_tsv(self):
        lines = ["\t".join(TSV_COLUMNS)]
        lines.extend(r.tsv_row() for r in self.records)
        return "\n".join(lines) + "\n"

    def summary_lines(self):
        lines = []
        for name in self.spec.groups:
            recs = [r for r in self.records if r.group == name]
            if not recs:
                continue
            normal = sum(1 for r in recs if r.verdict is not None and all(r.verdict.booleans))
            d2 = sum(1 for r in recs if r.verdict is not None and r.verdict.depth_two)
            bad = sum(1 for r in recs if not r.ok)
            lines.append(
                f"group {name}: pairs={len(recs)} normal={normal} depth_two={d2} failures={bad}"
            )
        lines.append(
            "total: pairs={} group_pairs={} dual_pairs={} normal={} depth_two={} "
            "agreements={} failures={}".format(
                self.pairs,
                self.group_pairs,
                self.dual_pairs,
                self.normal_count,
                self.depth_two_count,
                self.agreements,
                len(self.failures),
            )
        )
        return lines


def survey_group(ref, include_duals=True, subgroup_cap=24):
    """All pair records for one group: subgroup inclusions, then dual quotients."""
    G = resolve_group(ref)
    records = []
    H = group_algebra(G)
    subs = enumerate_subgroups(G, cap=subgroup_cap)
    for i, sub in enumerate(subs):
        pair_id = f"{G.name}/grp{i:02d}"
        desc = f"k[{sub.describe()}]"
        try:
            K = subgroup_subalgebra(G, sub, algebra=H)
            verdict = theorem_check(K, pair_id=pair_id)
            records.append(PairRecord(pair_id, "group", G.name, desc, verdict))
        except Exception as exc:  # pragma: no cover - defensive: flushed as partial result
            records.append(
                PairRecord(pair_id, "group", G.name, desc, None, error=_short_error(exc))
            )
    if include_duals:
        dual = dual_group_algebra(G)
        normal_subs = [s for s in subs if s.is_normal()]
        for i, sub in enumerate(normal_subs):
            pair_id = f"{G.name}/quo{i:02d}"
            desc = f"k^({G.name}/{sub.describe()})"
            try:
                K = dual_quotient_subalgebra(G, sub, algebra=dual)
                verdict = theorem_check(K, pair_id=pair_id)
                records.append(PairRecord(pair_id, "dual", G.name, desc, verdict))
            except Exception as exc:  # pragma: no cover - defensive
                records.append(
                    PairRecord(pair_id, "dual", G.name, desc, None, error=_short_error(exc))
                )
    return records


def _short_error(exc):
    tb = traceback.format_exception_only(type(exc), exc)
    return tb[-1].strip().replace("\t", " ").replace("\n", " ")


def _survey_group_task(args):
    return survey_group(*args)


def run_survey(spec=None, jobs=1):
    """Evaluate the whole corpus; results are merged in corpus order."""
    spec = spec or CorpusSpec()
    tasks = [(ref, spec.include_duals, spec.subgroup_cap) for ref in spec.groups]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_group = list(pool.map(_survey_group_task, tasks))
    else:
        per_group = [_survey_group_task(t) for t in tasks]
    records = []
    for recs in per_group:
        records.extend(recs)
    return SurveyReport(spec, tuple(records))

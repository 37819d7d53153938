"""JSON and CSV encodings of invariants, bound checks, covers and scan reports.

Rationals are always written as ``{"num": n, "den": d}`` in lowest terms,
optionally with a display-only ``"approx"`` string. They are never written as floats.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .bounds import BoundCheck, BoundId, PropABranch
from .enumeration import (BoundStats, Counterexample, CoverStats, DensityStats,
                          ScanReport)
from .invariants import InvariantSet
from .lemma import LemmaChainCheck, WitnessCover

SCHEMA_VERSION = "1.0"


def rational(x: Fraction | int) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator, "approx": f"{float(x):.6g}"}


def parse_rational(obj: dict) -> Fraction:
    if obj["den"] <= 0:
        raise ValueError(f"bad denominator in {obj}")
    x = Fraction(obj["num"], obj["den"])
    if (x.numerator, x.denominator) != (obj["num"], obj["den"]):
        raise ValueError(f"rational {obj} is not in lowest terms")
    return x


def _maybe_rational(x):
    return None if x is None else rational(x)


def _maybe_parse(obj):
    return None if obj is None else parse_rational(obj)


def _label(atoms) -> str:
    return "<" + ",".join(map(str, atoms)) + ">"


def invariants_to_dict(inv: InvariantSet) -> dict:
    return {
        "frobenius": inv.frobenius,
        "genus": inv.genus,
        "multiplicity": inv.multiplicity,
        "embedding_dim": inv.embedding_dim,
        "atoms": list(inv.atoms),
        "sporadic_count": inv.sporadic_count,
        "wilf_density": rational(inv.wilf_density),
    }


def invariants_from_dict(obj: dict) -> InvariantSet:
    return InvariantSet(
        frobenius=obj["frobenius"], genus=obj["genus"], multiplicity=obj["multiplicity"],
        embedding_dim=obj["embedding_dim"], atoms=tuple(obj["atoms"]),
        sporadic_count=obj["sporadic_count"],
        wilf_density=parse_rational(obj["wilf_density"]),
    )


def bound_check_to_dict(chk: BoundCheck) -> dict:
    return {
        "bound_id": chk.bound_id.value,
        "lhs": rational(chk.lhs),
        "rhs": rational(chk.rhs),
        "relation": chk.relation,
        "holds": chk.holds,
        "is_equality": chk.is_equality,
        "slack": rational(chk.slack),
        "strict": chk.strict,
        "branch": chk.branch.value if chk.branch else None,
    }


def bound_check_from_dict(obj: dict) -> BoundCheck:
    return BoundCheck(
        bound_id=BoundId(obj["bound_id"]),
        lhs=parse_rational(obj["lhs"]), rhs=parse_rational(obj["rhs"]),
        relation=obj["relation"], holds=obj["holds"], is_equality=obj["is_equality"],
        slack=parse_rational(obj["slack"]), strict=obj["strict"],
        branch=PropABranch(obj["branch"]) if obj["branch"] else None,
    )


def witness_cover_to_dict(cover: WitnessCover) -> dict:
    return {
        "window": list(cover.window),
        "excluded_multiple": cover.excluded,
        "assignments": [
            {"x": x, "atom": a, "sporadic": ell}
            for x, (a, ell) in sorted(cover.assignments.items())
        ],
        "cover_set": list(cover.cover_set),
        "cover_size": cover.cover_size,
    }


def lemma_chain_to_dict(chk: LemmaChainCheck) -> dict:
    return {
        "lower": chk.lower, "cover_size": chk.cover_size, "upper": chk.upper,
        "lower_holds": chk.lower_holds, "upper_holds": chk.upper_holds, "holds": chk.holds,
    }


def scan_report_to_dict(report: ScanReport) -> dict:
    return {
        "kind": "scan",
        "genus_bound": report.genus_bound,
        "bounds": [b.value for b in report.bounds],
        "counts_per_genus": list(report.counts_per_genus),
        "semigroups_visited": report.semigroups_visited,
        "semigroups_checked": report.semigroups_checked,
        "per_bound": {
            b.value: {
                "checked": st.checked,
                "equality_count": st.equality_count,
                "violation_count": st.violation_count,
                "min_slack": _maybe_rational(st.min_slack),
                "argmin": None if st.argmin is None else _label(st.argmin),
            }
            for b, st in report.per_bound.items()
        },
        "density_by_embedding_dim": {
            str(e): {
                "count": d.count,
                "min": rational(d.min_density), "argmin": _label(d.argmin),
                "max": rational(d.max_density), "argmax": _label(d.argmax),
            }
            for e, d in report.density_by_e.items()
        },
        "lemma_cover": None if report.cover is None else {
            "checked": report.cover.checked,
            "failures": report.cover.failures,
            "lower_tight": report.cover.lower_tight,
            "upper_tight": report.cover.upper_tight,
        },
        "counterexamples": [
            {"genus": cx.genus, "semigroup": cx.label, "bound": cx.bound,
             "slack": rational(cx.slack)}
            for cx in report.counterexamples
        ],
        "passed": report.passed,
        "wall_time": round(report.wall_time, 3),
    }


def _atoms_of(label: str | None):
    if label is None:
        return None
    return tuple(int(t) for t in label.strip("<>").split(","))


def scan_report_from_dict(obj: dict) -> ScanReport:
    bounds = tuple(BoundId(b) for b in obj["bounds"])
    cover = obj["lemma_cover"]
    return ScanReport(
        genus_bound=obj["genus_bound"],
        bounds=bounds,
        counts_per_genus=list(obj["counts_per_genus"]),
        per_bound={
            BoundId(k): BoundStats(BoundId(k), v["checked"], v["equality_count"],
                                   v["violation_count"], _maybe_parse(v["min_slack"]),
                                   _atoms_of(v["argmin"]))
            for k, v in obj["per_bound"].items()
        },
        density_by_e={
            int(k): DensityStats(int(k), v["count"], parse_rational(v["min"]),
                                 _atoms_of(v["argmin"]), parse_rational(v["max"]),
                                 _atoms_of(v["argmax"]))
            for k, v in obj["density_by_embedding_dim"].items()
        },
        cover=None if cover is None else CoverStats(
            cover["checked"], cover["failures"], cover["lower_tight"], cover["upper_tight"]),
        counterexamples=[
            Counterexample(cx["genus"], _atoms_of(cx["semigroup"]), cx["bound"],
                           parse_rational(cx["slack"]))
            for cx in obj["counterexamples"]
        ],
        wall_time=obj["wall_time"],
    )


@dataclass
class ReportDocument:
    schema_version: str
    command: str
    payload: dict[str, Any]

    def to_json(self) -> str:
        return json.dumps(
            {"schema_version": self.schema_version, "command": self.command,
             "payload": self.payload},
            indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        obj = json.loads(text)
        return cls(obj["schema_version"], obj["command"], obj["payload"])


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _csv_bool(x: bool) -> str:
    return "true" if x else "false"


def bound_checks_csv(checks: list[BoundCheck]) -> str:
    header = ["bound_id", "relation", "lhs_num", "lhs_den", "rhs_num", "rhs_den",
              "slack_num", "slack_den", "holds", "is_equality", "strict", "branch"]
    rows = [[c.bound_id.value, c.relation, c.lhs.numerator, c.lhs.denominator,
             c.rhs.numerator, c.rhs.denominator, c.slack.numerator, c.slack.denominator,
             _csv_bool(c.holds), _csv_bool(c.is_equality), _csv_bool(c.strict),
             c.branch.value if c.branch else ""]
            for c in checks]
    return to_csv(header, rows)


def scan_rows_csv(report: ScanReport) -> str:
    """One line per semigroup; empty cells where a bound does not apply."""
    if report.rows is None:
        raise ValueError("scan was run without collect_rows")
    header = ["genus", "atom_list", "f", "g", "e", "m", "d_num", "d_den"]
    for b in report.bounds:
        key = b.value.lower()
        header += [f"{key}_slack_num", f"{key}_slack_den", f"{key}_holds"]
    rows = []
    for genus, atoms, f, g, e, m, d, slacks in report.rows:
        row = [genus, _label(atoms), f, g, e, m, d.numerator, d.denominator]
        for entry in slacks:
            if entry is None:
                row += ["", "", ""]
            else:
                slack, holds = entry
                row += [slack.numerator, slack.denominator, _csv_bool(holds)]
        rows.append(row)
    return to_csv(header, rows)

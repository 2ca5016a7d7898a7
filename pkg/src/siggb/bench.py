"""Benchmark harness: run the signature variants on a system, optionally
verify each result against the classical Buchberger computation, and emit
JSON / CSV / aligned-text reports."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .classic import buchberger
from .engine import VARIANTS, PairLimitExceeded, sig_gb, stat_report


@dataclass(frozen=True)
class BenchReport:
    """One (system, variant) run: counters plus the optional oracle verdict.

    ``verified`` is None when verification was not requested (or the run
    aborted before producing a basis), otherwise the result of the monic
    set comparison against the classical basis.
    """

    system: str
    variant: str
    stats: object
    basis_size: int
    verified: bool | None = None
    aborted: bool = False


def run_bench(spec, variants, verify=False, pair_limit=None):
    """Run each named variant on ``spec`` and return reports sorted by
    variant name.  With ``verify`` the classical basis is computed once and
    compared (as a set of monic polynomials) against every variant's output.
    A run that exceeds ``pair_limit`` yields a report flagged ``aborted``."""
    names = sorted(variants)
    for name in names:
        if name not in VARIANTS:
            raise ValueError(f"unknown variant {name!r}")
    oracle = None
    if verify and names:
        oracle = frozenset(buchberger(spec.generators))
    reports = []
    for name in names:
        aborted = False
        basis = None
        try:
            basis, stats = sig_gb(spec.generators, name, pair_limit=pair_limit)
        except PairLimitExceeded as exc:
            stats = exc.stats
            aborted = True
        verified = None
        if oracle is not None and not aborted:
            verified = frozenset(basis) == oracle
        reports.append(BenchReport(spec.name, name, stats,
                                   stats.basis_size_final, verified, aborted))
    return reports


def _report_row(report, char):
    row = {"system": report.system, "variant": report.variant, "char": char}
    row.update(stat_report(report.stats))
    if report.verified is not None:
        row["verified"] = report.verified
    if report.aborted:
        row["aborted"] = True
    return row


def report_json(reports, char):
    """Machine-readable report: a JSON array with one object per run."""
    return json.dumps([_report_row(r, char) for r in reports], indent=2)


_CSV_FIELDS = ["system", "variant", "char", "reduction_steps", "zero_reductions",
               "pairs_generated", "rejected_nm", "rejected_rw", "basis_size",
               "elapsed_ms", "verified", "aborted"]


def report_csv(reports, char):
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=_CSV_FIELDS)
    writer.writeheader()
    for r in reports:
        writer.writerow(_report_row(r, char))
    return out.getvalue()


def report_text(reports, char):
    """Human-readable aligned table, one row per variant."""
    headers = ["variant", "red.steps", "zero.red", "pairs", "rej.NM",
               "rej.RW", "basis", "ms", "status"]
    rows = []
    for r in reports:
        s = stat_report(r.stats)
        if r.aborted:
            status = "aborted"
        elif r.verified is None:
            status = "-"
        else:
            status = "ok" if r.verified else "MISMATCH"
        rows.append([r.variant, str(s["reduction_steps"]), str(s["zero_reductions"]),
                     str(s["pairs_generated"]), str(s["rejected_nm"]),
                     str(s["rejected_rw"]), str(s["basis_size"]),
                     f"{s['elapsed_ms']:.1f}", status])
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = []
    if reports:
        lines.append(f"system: {reports[0].system}   char: {char}")
    lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines) + "\n"

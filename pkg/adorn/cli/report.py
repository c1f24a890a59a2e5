"""Rendering of command results as text lines or a JSON envelope."""

from __future__ import annotations

import json
from typing import Any, Sequence

from adorn import __version__
from adorn.catalog import CatalogEntry
from adorn.config import OutputFormat, RunConfig
from adorn.engine import Adorable, DerivedStep, NotAdorable, ProbeReport, Unknown, Verdict
from adorn.verify import SuiteReport


def envelope(cfg: RunConfig, result: dict[str, Any]) -> dict[str, Any]:
    return {
        "command": cfg.command,
        "input": cfg.source.to_dict() if cfg.source is not None else None,
        "budgets": cfg.budgets.to_dict(),
        "result": result,
        "version": __version__,
    }


def emit(cfg: RunConfig, result: dict[str, Any], lines: Sequence[str]) -> None:
    if cfg.output is OutputFormat.JSON:
        print(json.dumps(envelope(cfg, result), sort_keys=True, indent=2))
        return
    for line in lines:
        print(line)


def _or_inf(value: int | None) -> str:
    return "inf" if value is None else str(value)


def trace_lines(trace: Sequence[DerivedStep]) -> list[str]:
    return [
        f"depth {s.depth}: {s.abelianization} "
        f"({s.presentation.ngens} generators, {s.presentation.nrels} relators), "
        f"index {_or_inf(s.index)}, quotient order {_or_inf(s.quotient_order)}"
        for s in trace
    ]


def verdict_lines(verdict: Verdict) -> list[str]:
    lines = [f"verdict: {verdict.label}"]
    match verdict:
        case Adorable(doa=doa, certificate=certificate):
            lines.append(f"doa: {doa}")
            if certificate:
                lines.append(f"certificate: {certificate}")
        case NotAdorable(reason=reason, evidence=evidence):
            lines.append(f"reason: {reason.value}")
            lines += [f"{key}: {value}" for key, value in sorted(evidence.items())]
        case Unknown(depth=depth, stall=stall):
            lines.append(f"stalled at depth {depth}: {stall.value}")
    return lines + trace_lines(verdict.trace)


def probe_lines(report: ProbeReport) -> list[str]:
    lines = [f"samples: {report.samples}"]
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    lines += [f"{label}: {count}" for label, count in report.verdicts.items()]
    lines += [f"stall {reason}: {count}" for reason, count in report.stalls.items()]
    lines.append("depths: " + " ".join(str(n) for n in report.depth_histogram))
    lines.append(f"largest abelian layer: {report.max_quotient_order}")
    return lines


def suite_lines(report: SuiteReport) -> list[str]:
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in report.results
    ]
    passed = sum(r.passed for r in report.results)
    lines.append(f"{passed}/{len(report.results)} checks passed")
    return lines


def entry_lines(entry: CatalogEntry) -> list[str]:
    data = entry.to_dict()
    lines = [f"{entry.name}: {entry.description}"]
    if data["model"]:
        lines.append("model: " + ", ".join(data["model"]))
    if data["presentation"]:
        lines.append(f"presentation: {data['presentation']}")
    if entry.pair:
        lines.append(f"pair: {entry.pair}")
    for key, fact in sorted(entry.facts.items()):
        lines.append(f"{key}: {fact.value} ({fact.provenance.value})")
    return lines

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from adorn.alexander import (
    AlexanderPreconditionError,
    alexander_polynomial,
    check_knot_presentation,
    double_cover_order,
    knot_adorability_verdict,
)
from adorn.catalog import get, names, presentation_of
from adorn.config import (
    Budgets,
    ConfigError,
    FileConfig,
    InputSource,
    OutputFormat,
    ProbeParams,
    RunConfig,
    SourceKind,
    load_config,
)
from adorn.engine import (
    Stall,
    Unknown,
    Verdict,
    abelianization,
    explore_derived_series,
    probe_presentations,
    random_probe,
)
from adorn.errors import AdornError
from adorn.finite import Element, derived_series, doa_finite, enumerate_group, parse_elements
from adorn.fpcore import Presentation, parse_presentation
from adorn.intlin import abelian_invariants, certify, h2_rank_abelian, parse_matrix_literal, smith_normal_form
from adorn.log import configure, get_logger
from adorn.verify import run_suite

from .args import build_parser
from .report import emit, entry_lines, probe_lines, suite_lines, trace_lines, verdict_lines

log = get_logger("cli")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2
EXIT_INTERRUPTED = 130


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help and --version exit 0; usage errors become input errors
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR

    try:
        _configure_logging(args.log_level if "log_level" in args else "WARNING")

        match args.command:
            case "doa":
                return cmd_doa(args)
            case "abelianize":
                return cmd_abelianize(args)
            case "snf":
                return cmd_snf(args)
            case "alexander":
                return cmd_alexander(args)
            case "series":
                return cmd_series(args)
            case "explore":
                return cmd_explore(args)
            case "verify":
                return cmd_verify(args)
            case "catalog":
                return cmd_catalog(args)
            case _:
                return EXIT_ERROR

    except AdornError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR

    except KeyboardInterrupt:
        return EXIT_INTERRUPTED


def _configure_logging(level: str) -> None:
    try:
        configure(level)
    except ValueError:
        raise ConfigError(f"Unknown log level '{level}'") from None


# -- run configuration


def _file_config(args: argparse.Namespace) -> FileConfig:
    return load_config(args.config) if args.config else FileConfig()


def _budgets(args: argparse.Namespace, base: Budgets) -> Budgets:
    return base.merge(
        max_depth=getattr(args, "max_depth", None),
        max_cosets=getattr(args, "max_cosets", None),
        max_order=getattr(args, "max_order", None),
    )


def _probe(args: argparse.Namespace, base: ProbeParams) -> ProbeParams:
    return base.merge(
        count=getattr(args, "count", None),
        seed=getattr(args, "seed", None),
        n_gens=getattr(args, "gens", None),
        n_rels=getattr(args, "rels", None),
        max_len=getattr(args, "max_len", None),
        workers=getattr(args, "workers", None),
    )


def _source(args: argparse.Namespace) -> InputSource:
    given = [
        (SourceKind.INLINE, getattr(args, "text", None)),
        (SourceKind.CATALOG, getattr(args, "catalog", None)),
        (SourceKind.FILE, getattr(args, "file", None)),
    ]
    present = [(kind, value) for kind, value in given if value is not None]
    if len(present) != 1:
        raise ConfigError("Exactly one input is required: inline text, --catalog NAME or --file PATH")
    kind, value = present[0]
    return InputSource(kind, value)


def _run_config(args: argparse.Namespace, source: InputSource | None) -> RunConfig:
    file_cfg = _file_config(args)
    command = args.command if args.command != "catalog" else f"catalog {args.action}"
    return RunConfig(
        command=command,
        source=source,
        budgets=_budgets(args, file_cfg.budgets),
        output=OutputFormat(args.format),
        probe=_probe(args, file_cfg.probe),
    )


# -- inputs


@dataclass(frozen=True)
class Subject:
    """What an input source names: a presentation, a finite generating set, or both."""

    presentation: Presentation | None
    generators: tuple[Element, ...]


def _read_text(source: InputSource) -> str:
    if source.kind is SourceKind.INLINE:
        return source.value
    path = Path(source.value)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"Cannot read input file {path}: {exc.strerror or exc}") from None


def load_subject(source: InputSource) -> Subject:
    if source.kind is SourceKind.CATALOG:
        entry = get(source.value)
        return Subject(entry.presentation, entry.generators)
    text = _read_text(source)
    if text.lstrip().startswith("<"):
        return Subject(parse_presentation(text), ())
    return Subject(None, tuple(parse_elements(text)))


def _require_presentation(subject: Subject, source: InputSource) -> Presentation:
    if subject.presentation is None:
        raise ConfigError(f"{source.value!r} is not a presentation")
    return subject.presentation


def presented_verdict(p: Presentation, budgets: Budgets) -> Verdict:
    """Derived-series verdict, settled by the Alexander polynomial when the
    walk stalls on a knot group at depth 0."""
    _, verdict = explore_derived_series(p, budgets)
    if not (
        isinstance(verdict, Unknown)
        and verdict.depth == 0
        and verdict.stall is Stall.INFINITE_ABELIANIZATION
    ):
        return verdict
    try:
        check_knot_presentation(p)
        knot = knot_adorability_verdict(p)
    except AlexanderPreconditionError:
        return verdict
    log.info("depth 0 stall settled by the Alexander polynomial: %s", knot.label)
    return replace(knot, trace=verdict.trace)


def _exit_for(verdict: Verdict) -> int:
    return EXIT_UNKNOWN if isinstance(verdict, Unknown) else EXIT_OK


# -- commands


def cmd_doa(args: argparse.Namespace) -> int:
    cfg = _run_config(args, _source(args))
    assert cfg.source is not None
    subject = load_subject(cfg.source)

    if subject.generators:
        G = enumerate_group(subject.generators, cfg.budgets.max_order)
        res = doa_finite(G)
        result = {"kind": "finite", "order": G.order, "verdict": "adorable", **res.to_dict()}
        emit(
            cfg,
            result,
            [f"order: {G.order}", "verdict: adorable", f"doa: {res.doa}", f"terminal: {res.terminal.value}"],
        )
        return EXIT_OK

    p = _require_presentation(subject, cfg.source)
    verdict = presented_verdict(p, cfg.budgets)
    emit(cfg, {"kind": "presented", **verdict.to_dict()}, verdict_lines(verdict))
    return _exit_for(verdict)


def cmd_abelianize(args: argparse.Namespace) -> int:
    cfg = _run_config(args, _source(args))
    assert cfg.source is not None
    p = _require_presentation(load_subject(cfg.source), cfg.source)
    abel = abelianization(p)
    h2 = h2_rank_abelian(abel)
    result = {"abelianization": str(abel), "invariants": abel.to_dict(), "h2_rank": h2}
    emit(cfg, result, [str(abel), f"H2 rank of free part: {h2}"])
    return EXIT_OK


def cmd_snf(args: argparse.Namespace) -> int:
    cfg = _run_config(args, _source(args))
    assert cfg.source is not None
    M = parse_matrix_literal(_read_text(cfg.source))
    form = smith_normal_form(M)
    cokernel = abelian_invariants(M)
    result = {
        "shape": [M.rows, M.cols],
        "diagonal": list(form.diag),
        "left": form.left.to_rows(),
        "right": form.right.to_rows(),
        "cokernel": str(cokernel),
        "certified": certify(M, form),
    }
    emit(cfg, result, [f"diagonal: {list(form.diag)}", f"cokernel: {cokernel}"])
    return EXIT_OK


def cmd_alexander(args: argparse.Namespace) -> int:
    cfg = _run_config(args, _source(args))
    assert cfg.source is not None
    p = _require_presentation(load_subject(cfg.source), cfg.source)
    data = alexander_polynomial(p)
    verdict = None if data.degenerate else knot_adorability_verdict(p)
    result = {
        **data.to_dict(),
        "double_cover_order": double_cover_order(p),
        "verdict": verdict.to_dict() if verdict is not None else None,
    }
    lines = [
        f"polynomial: {data.polynomial}",
        f"degree: {data.degree}",
        f"double cover order: {result['double_cover_order']}",
    ]
    lines += verdict_lines(verdict) if verdict is not None else ["verdict: degenerate polynomial"]
    emit(cfg, result, lines)
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    cfg = _run_config(args, _source(args))
    assert cfg.source is not None
    subject = load_subject(cfg.source)

    if subject.generators:
        G = enumerate_group(subject.generators, cfg.budgets.max_order)
        orders = [H.order for H in derived_series(G)]
        result = {"kind": "finite", "orders": orders}
        emit(cfg, result, [f"G^{i}: order {n}" for i, n in enumerate(orders)])
        return EXIT_OK

    p = _require_presentation(subject, cfg.source)
    trace, verdict = explore_derived_series(p, cfg.budgets)
    result = {"kind": "presented", "verdict": verdict.label, "trace": [s.to_dict() for s in trace]}
    emit(cfg, result, trace_lines(trace) + [f"verdict: {verdict.label}"])
    return _exit_for(verdict)


def cmd_explore(args: argparse.Namespace) -> int:
    batch: list[str] | None = args.catalog
    source = InputSource(SourceKind.CATALOG, ",".join(batch)) if batch else None
    cfg = _run_config(args, source)

    if batch:
        presentations = [presentation_of(name) for name in batch]
        report = probe_presentations(presentations, cfg.budgets, cfg.probe.workers)
        result = report.to_dict()
    else:
        report = random_probe(cfg.probe, cfg.budgets)
        result = {**report.to_dict(), "params": cfg.probe.to_dict()}
    emit(cfg, result, probe_lines(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _run_config(args, None)
    report = run_suite(cfg.budgets, only=args.check, seed=cfg.probe.seed)
    emit(cfg, report.to_dict(), suite_lines(report))
    return EXIT_OK if report.passed else EXIT_ERROR


def cmd_catalog(args: argparse.Namespace) -> int:
    cfg = _run_config(args, None)
    match args.action:
        case "list":
            listing = names()
            emit(cfg, {"names": listing}, listing)
        case "show":
            entry = get(args.name)
            emit(cfg, entry.to_dict(), entry_lines(entry))
    return EXIT_OK

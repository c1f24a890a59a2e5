from __future__ import annotations

import argparse

from adorn import __version__


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="Report format",
    )
    parser.add_argument(
        "--config",
        default=None,
        help="Budget file (.yml, .yaml, .toml or .json)",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        help="Log level for messages on stderr",
    )


def _budgets(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-depth", type=int, default=None, help="Derived series depth budget")
    parser.add_argument("--max-cosets", type=int, default=None, help="Coset enumeration budget")
    parser.add_argument("--max-order", type=int, default=None, help="Finite enumeration budget")


def _input(parser: argparse.ArgumentParser, what: str = "presentation or generator list") -> None:
    parser.add_argument("text", nargs="?", default=None, help=f"Inline {what}")
    parser.add_argument("--catalog", default=None, help="Catalog entry name")
    parser.add_argument("--file", default=None, help=f"File holding a {what}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adorn",
        description="Derived series and degree of adorability of finite and presented groups",
    )
    parser.add_argument("--version", action="version", version=f"adorn {__version__}")

    subparsers = parser.add_subparsers(
        dest="command",
        required=True,
    )

    # doa
    doa = subparsers.add_parser("doa", help="Degree of adorability of a group")
    _input(doa)
    _budgets(doa)
    _common(doa)

    # abelianize
    abelianize = subparsers.add_parser("abelianize", help="Abelian invariants of G/G'")
    _input(abelianize, "presentation")
    _common(abelianize)

    # snf
    snf = subparsers.add_parser("snf", help="Smith normal form of an integer matrix")
    snf.add_argument("text", nargs="?", default=None, help="JSON matrix literal")
    snf.add_argument("--file", default=None, help="File holding a JSON matrix literal")
    _common(snf)

    # alexander
    alexander = subparsers.add_parser("alexander", help="Alexander polynomial of a knot group")
    _input(alexander, "presentation")
    _common(alexander)

    # series
    series = subparsers.add_parser("series", help="Derived series trace")
    _input(series)
    _budgets(series)
    _common(series)

    # explore
    explore = subparsers.add_parser("explore", help="Probe many presentations for adorability")
    explore.add_argument("--count", type=int, default=None, help="Number of random samples")
    explore.add_argument("--seed", type=int, default=None, help="Master seed for sampling")
    explore.add_argument("--gens", type=int, default=None, help="Generators per sample")
    explore.add_argument("--rels", type=int, default=None, help="Relators per sample")
    explore.add_argument("--max-len", type=int, default=None, help="Maximum relator length")
    explore.add_argument("--workers", type=int, default=None, help="Worker processes")
    explore.add_argument(
        "--catalog",
        action="append",
        default=None,
        help="Probe these catalog presentations instead of random ones (repeatable)",
    )
    _budgets(explore)
    _common(explore)

    # verify
    verify = subparsers.add_parser("verify", help="Replay the adorability checks")
    verify.add_argument(
        "--check",
        action="append",
        default=None,
        help="Run only the named check (repeatable)",
    )
    verify.add_argument("--seed", type=int, default=None, help="Seed for sampled groups")
    _budgets(verify)
    _common(verify)

    # catalog
    catalog = subparsers.add_parser("catalog", help="Browse the group catalog")
    actions = catalog.add_subparsers(dest="action", required=True)
    _common(actions.add_parser("list", help="List entry names"))
    show = actions.add_parser("show", help="Show one entry with its facts")
    show.add_argument("name", help="Catalog entry name")
    _common(show)

    return parser

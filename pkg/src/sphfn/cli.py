"""Command-line front end: single queries, verification sweeps, trace sums.

Exit codes: 0 success, 1 an exact comparison failed, 2 invalid input,
3 a brute-force enumeration was refused by the size bound. Values are always
rendered as "p/q" in lowest terms, never as decimals.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional

import click

from .characters import multiplicity
from .closed_form import SphericalQuery, phi_closed_form
from .core import BlockTriple, embed_cycle
from .eigsum import DegreeTriple, eigenvalue_sum, kappa_zero_diagnostic
from .oracle import (
    DEFAULT_BOUND,
    OracleBoundExceeded,
    phi_character_oracle,
    phi_module_oracle,
)
from .verify import SUITES, run_suites

METHOD_NAMES = {
    "closed": "closed_form",
    "oracle": "character_oracle",
    "module": "module_oracle",
}


def render(value: Fraction) -> str:
    """Always "p/q", including "p/1"; lowest terms come from Fraction itself."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_blocks(text: str) -> BlockTriple:
    try:
        parts = [int(x) for x in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"need three comma-separated sizes, got {text!r}")
        return BlockTriple(*parts)
    except ValueError as exc:
        _fail(str(exc), 2)


def _parse_cycle(text: str) -> tuple[int, ...]:
    try:
        blocks = tuple(sorted({int(x) for x in text.split(",")}))
        if not blocks or any(b not in (1, 2, 3) for b in blocks):
            raise ValueError(f"cycle must be a nonempty subset of 1,2,3, got {text!r}")
        return blocks
    except ValueError as exc:
        _fail(str(exc), 2)


def _emit_record(record: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(record))
        return
    fields = ["n1", "n2", "n3", "k", "cycle", "method", "value", "multiplicity", "agreement"]
    flat = {
        "n1": record["n"][0],
        "n2": record["n"][1],
        "n3": record["n"][2],
        "k": record["k"],
        "cycle": ",".join(str(b) for b in record["cycle"]),
        "method": record["method"],
        "value": record["value"],
        "multiplicity": record["multiplicity"],
        "agreement": "" if "agreement" not in record else str(record["agreement"]).lower(),
    }
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerow(flat)
    click.echo(buffer.getvalue().rstrip("\n"))


@click.group()
def main():
    """Exact averaged two-row characters of block subgroups at short cycles."""


@main.command()
@click.option("--n", "n_text", required=True, help="Block sizes n1,n2,n3.")
@click.option("--k", type=int, required=True, help="Shape parameter, 2k <= N.")
@click.option("--cycle", "cycle_text", required=True, help="Blocks the cycle runs through, e.g. 1,2,3.")
@click.option(
    "--method",
    type=click.Choice(["closed", "oracle", "module", "all"]),
    default="closed",
    show_default=True,
)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--oracle-bound", type=int, default=DEFAULT_BOUND, show_default=True)
def compute(n_text: str, k: int, cycle_text: str, method: str, fmt: str, oracle_bound: int):
    """Evaluate one averaged character value."""
    n = _parse_blocks(n_text)
    cycle = _parse_cycle(cycle_text)
    try:
        query = SphericalQuery(n, k, cycle)
    except ValueError as exc:
        _fail(str(exc), 2)

    def by_oracle() -> Fraction:
        return phi_character_oracle(n, k, embed_cycle(cycle, n), oracle_bound)

    def by_module() -> Fraction:
        return phi_module_oracle(n, k, embed_cycle(cycle, n), oracle_bound)

    record = {
        "n": list(n.sizes),
        "k": k,
        "cycle": list(cycle),
        "multiplicity": multiplicity(n, k),
    }
    disagreement = False
    try:
        if method == "all":
            values = {"closed_form": phi_closed_form(query)}
            for name, fn in (("character_oracle", by_oracle), ("module_oracle", by_module)):
                try:
                    values[name] = fn()
                except OracleBoundExceeded:
                    pass
            record["method"] = "closed_form"
            record["value"] = render(values["closed_form"])
            if len(values) >= 2:
                agreement = len(set(values.values())) == 1
                record["agreement"] = agreement
                disagreement = not agreement
        else:
            name = METHOD_NAMES[method]
            value = {
                "closed": lambda: phi_closed_form(query),
                "oracle": by_oracle,
                "module": by_module,
            }[method]()
            record["method"] = name
            record["value"] = render(value)
    except OracleBoundExceeded as exc:
        _fail(str(exc), 3)
    record = {
        key: record[key]
        for key in ("n", "k", "cycle", "method", "value", "multiplicity", "agreement")
        if key in record
    }
    _emit_record(record, fmt)
    if disagreement:
        sys.exit(1)


@main.command()
@click.option("--max-block", type=int, default=3, show_default=True)
@click.option(
    "--suite",
    type=click.Choice(sorted(SUITES) + ["all"]),
    default="all",
    show_default=True,
)
@click.option("--oracle-bound", type=int, default=DEFAULT_BOUND, show_default=True)
@click.option("--threads", type=int, default=None, help="Worker threads; default: all cores.")
def verify(max_block: int, suite: str, oracle_bound: int, threads: Optional[int]):
    """Run exhaustive exact sweeps of the closed forms against the oracles."""
    if max_block < 1:
        _fail(f"--max-block must be >= 1, got {max_block}", 2)
    names = sorted(SUITES) if suite == "all" else [suite]
    try:
        reports = run_suites(names, max_block, oracle_bound, threads)
    except OracleBoundExceeded as exc:
        _fail(str(exc), 3)
    for report in reports:
        click.echo(report.summary())
    if not all(report.passed for report in reports):
        sys.exit(1)


@main.command()
@click.option("--n", "n_text", required=True, help="Block sizes n1,n2,n3.")
@click.option("--k", type=int, required=True, help="Shape parameter, 2k <= N.")
@click.option("--d", "d_text", required=True, help="Degrees d1,d2,d3, strictly decreasing.")
@click.option("--kappa", "kappa_text", default="0", show_default=True, help='Coupling, e.g. "1/2".')
@click.option("--order", "p", type=int, required=True, help="Operator power p >= 1.")
@click.option("--diagnose", is_flag=True, help="Also emit the kappa = 0 consistency diagnostic.")
def eigsum(n_text: str, k: int, d_text: str, kappa_text: str, p: int, diagnose: bool):
    """Evaluate the cycle-expansion trace for one degree triple."""
    n = _parse_blocks(n_text)
    try:
        kappa = Fraction(kappa_text)
    except (ValueError, ZeroDivisionError):
        _fail(f"cannot parse rational {kappa_text!r}", 2)
    try:
        parts = [int(x) for x in d_text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"need three comma-separated degrees, got {d_text!r}")
        degrees = DegreeTriple(*parts, kappa=kappa)
        value = eigenvalue_sum(n, degrees, k, p)
    except ValueError as exc:
        _fail(str(exc), 2)
    record = {
        "n": list(n.sizes),
        "k": k,
        "d": list(degrees.degrees),
        "kappa": render(kappa),
        "order": p,
        "value": render(value),
    }
    if diagnose:
        diagnostic = kappa_zero_diagnostic(n, degrees, k, p)
        record["diagnostic"] = {
            "formula": render(diagnostic.formula),
            "reference": render(diagnostic.reference),
            "agree": diagnostic.agree,
        }
    click.echo(json.dumps(record))


if __name__ == "__main__":
    main()

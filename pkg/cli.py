"""
Command line front end
Four commands:
1. color <file>              - certified (11,3)-coloring of L(G), or the H1/H2 exception
2. exact <file>              - exact circular chromatic index of a small graph
3. verify <file> <coloring>  - check a coloring file against a graph
4. gapcheck                  - census of small graphs, nothing strictly between 11/3 and 4

Result records go to stdout, progress banners to stderr.
"""

import random
import sys
from fractions import Fraction
from typing import NoReturn, Optional

import click

from census import GAP_HIGH, GAP_LOW, MAX_CENSUS_VERTICES, MAX_MULTIPLICITY, gapcheck as run_gapcheck
from circular import CircularColoring, verify as verify_coloring
from errors import ColorOutOfRange, InvalidParameters, MaxDegreeExceeded, MissingColor, TooLarge
from exact import chi_c_index
from graph_io import (
    FORMATS,
    GraphDocument,
    format_coloring,
    format_result_record,
    parse_coloring,
    read_graph,
    save_run_output,
    serialize_edge_list,
)
from multigraph import line_graph
from reduce import color_subcubic

# ============================================================================
# HELPERS
# ============================================================================

def _banner(title: str) -> None:
    click.echo("=" * 60, err=True)
    click.echo(title, err=True)
    click.echo("=" * 60, err=True)


def _fail(message: str, code: int) -> NoReturn:
    click.echo(f"✗ {message}", err=True)
    sys.exit(code)


def _ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _load(graph_file: str, fmt: str) -> GraphDocument:
    try:
        doc = read_graph(graph_file, fmt)
    except ValueError as e:
        _fail(f"cannot parse {graph_file}: {e}", 1)
    click.echo(f"📄 {doc.format}: {doc.graph.n} vertices, {doc.graph.m} edges", err=True)
    return doc


def _save(command: str, data: dict) -> None:
    path = save_run_output(command, data)
    click.echo(f"✓ Run output saved to: {path}", err=True)


def _coloring_data(coloring: CircularColoring) -> dict:
    return {
        "p": coloring.p,
        "q": coloring.q,
        "colors": {str(e): coloring.assignment[e] for e in sorted(coloring.assignment)},
    }


graph_argument = click.argument('graph_file', type=click.Path(exists=True, dir_okay=False))
format_option = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='auto',
                             show_default=True, help='Input graph format')
save_option = click.option('--save-json', is_flag=True,
                           help='Also dump the run to <command>_output_<timestamp>.json')


@click.group()
def main():
    """Certified circular edge colorings of subcubic multigraphs."""


# ============================================================================
# COMMANDS
# ============================================================================

@main.command()
@graph_argument
@format_option
@click.option('--seed', type=int, default=None, help='Randomize matching and cycle tie-breaks')
@click.option('--trace', is_flag=True, help='Write descent and reduction steps into the record')
@click.option('--plain', is_flag=True, help='Print a bare "p q" coloring file instead of the record')
@save_option
def color(graph_file: str, fmt: str, seed: Optional[int], trace: bool, plain: bool, save_json: bool):
    """Color L(G) with 11 colors at distance 3, or report H1/H2."""
    _banner(f"🎨 Coloring {graph_file}")
    doc = _load(graph_file, fmt)
    rng = random.Random(seed) if seed is not None else None

    try:
        result = color_subcubic(doc.graph, rng)
    except MaxDegreeExceeded as e:
        _fail(str(e), 2)
    except ValueError as e:
        _fail(str(e), 1)

    if plain:
        click.echo(format_coloring(result.coloring), nl=False)
    else:
        steps = result.trace if trace else ()
        click.echo(format_result_record(result.coloring, result.outcome.value, steps=steps), nl=False)
    marker = "⚠️ " if result.is_exceptional else "✓"
    click.echo(f"{marker} {result.outcome.value} at ({result.coloring.p},{result.coloring.q}), "
               f"{len(result.trace)} steps", err=True)

    if save_json:
        _save('color', {
            "graph": serialize_edge_list(doc.graph),
            "outcome": result.outcome.value,
            **_coloring_data(result.coloring),
            "steps": [f"{event.stage}: {event.message}" for event in result.trace],
        })


@main.command()
@graph_argument
@format_option
@click.option('--limit', type=int, default=None, help='Largest edge count the oracle accepts')
@save_option
def exact(graph_file: str, fmt: str, limit: Optional[int], save_json: bool):
    """Exact circular chromatic index with a witness."""
    _banner(f"🔍 Exact index of {graph_file}")
    doc = _load(graph_file, fmt)

    try:
        value, witness = chi_c_index(doc.graph, limit)
    except TooLarge as e:
        _fail(str(e), 2)

    click.echo(format_result_record(witness, fields={"value": _ratio(value)}), nl=False)
    click.echo(f"✓ circular chromatic index {_ratio(value)}", err=True)

    if save_json:
        _save('exact', {"graph": serialize_edge_list(doc.graph), "value": _ratio(value), **_coloring_data(witness)})


@main.command()
@graph_argument
@click.argument('coloring_file', type=click.Path(exists=True, dir_okay=False))
@format_option
def verify(graph_file: str, coloring_file: str, fmt: str):
    """Check a coloring file (or a color record) against a graph."""
    _banner(f"🧪 Verifying {coloring_file} on {graph_file}")
    doc = _load(graph_file, fmt)
    try:
        with open(coloring_file, 'r', encoding='utf-8') as f:
            coloring = parse_coloring(f.read())
    except (ValueError, OSError) as e:
        _fail(f"cannot parse {coloring_file}: {e}", 1)

    expected, found = set(doc.graph.edge_ids), set(coloring.assignment)
    if expected != found:
        missing, extra = sorted(expected - found), sorted(found - expected)
        _fail(f"edge identities differ: missing {missing}, unknown {extra}", 1)

    try:
        ok = verify_coloring(line_graph(doc.graph), coloring)
    except (MissingColor, ColorOutOfRange) as e:
        click.echo("fail")
        _fail(str(e), 2)

    if not ok:
        click.echo("fail")
        _fail(f"not a ({coloring.p},{coloring.q})-coloring of L(G)", 2)
    click.echo("pass")
    click.echo(f"✓ valid ({coloring.p},{coloring.q})-coloring", err=True)


@main.command()
@click.option('--max-vertices', type=int, default=MAX_CENSUS_VERTICES, show_default=True)
@click.option('--max-mult', type=int, default=MAX_MULTIPLICITY, show_default=True)
@click.option('--workers', type=int, default=None, help='Worker processes (default: CCI_WORKERS)')
@click.option('--dedupe', is_flag=True, help='Drop isomorphic duplicates before solving')
@save_option
def gapcheck(max_vertices: int, max_mult: int, workers: Optional[int], dedupe: bool, save_json: bool):
    """Look for an index strictly between 11/3 and 4."""
    _banner(f"📊 Gap check: up to {max_vertices} vertices, multiplicity {max_mult}")
    try:
        report = run_gapcheck(max_vertices, max_mult, workers=workers, dedupe=dedupe, progress=True)
    except InvalidParameters as e:
        _fail(str(e), 1)

    click.echo(f"checked: {report.checked}")
    click.echo("values:")
    for value in sorted(report.values):
        click.echo(f"  {_ratio(value)} {report.values[value]}")
    click.echo(f"violations: {len(report.violations)}")
    for g, value in report.violations:
        click.echo(f"  {_ratio(value)} {serialize_edge_list(g).strip().replace(chr(10), ' | ')}")

    if save_json:
        _save('gapcheck', {
            "max_vertices": max_vertices,
            "max_multiplicity": max_mult,
            "checked": report.checked,
            "values": {_ratio(v): c for v, c in sorted(report.values.items())},
            "violations": [{"value": _ratio(v), "graph": serialize_edge_list(g)} for g, v in report.violations],
        })

    if not report.ok:
        _fail(f"{len(report.violations)} indices inside ({_ratio(GAP_LOW)}, {_ratio(GAP_HIGH)})", 1)
    click.echo(f"✓ no index inside ({_ratio(GAP_LOW)}, {_ratio(GAP_HIGH)})", err=True)


if __name__ == '__main__':
    main()

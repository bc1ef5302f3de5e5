import click
import os
import sys
import json
import platform
import yaml
from typing import Any, Dict, FrozenSet, Optional

# Add src/ to path so the CLI also runs from a source checkout
src_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if src_dir not in sys.path:
    sys.path.append(src_dir)

from fullcycle import config
from fullcycle.corpus.store import read_graphs, write_graphs
from fullcycle.exceptions import FullCycleError
from fullcycle.graphs.generators import generate_buckyball, generate_nanotube
from fullcycle.graphs.validation import validate_fullerene
from fullcycle.proof.classify import pattern_catalogue
from fullcycle.proof.datamodel import SearchBudget
from fullcycle.proof.engine import oracle_check, verify_corpus
from fullcycle.proof.search import longest_cycle_exact

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2


def parse_forbid(_ctx, _param, value) -> Optional[FrozenSet[int]]:
    """'u,v,...' -> frozenset of vertex ids."""
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        items = value
    else:
        items = [x for x in str(value).split(",") if x.strip()]
    try:
        return frozenset(int(x) for x in items)
    except ValueError:
        raise click.BadParameter(f"expected comma-separated vertex ids, got {value!r}")


def _input_error(message: str):
    click.secho(f"✗ Input error: {message}", fg="red", err=True)
    sys.exit(EXIT_INPUT_ERROR)


def _load(path: str, validate: bool = True):
    try:
        return read_graphs(path, validate=validate)
    except FullCycleError as e:
        _input_error(str(e))


def _resolve(explicit: Dict[str, Any], config_path: Optional[str]) -> Dict[str, Any]:
    """Explicit flags win over the run file, which wins over the defaults."""
    defaults = {
        "budget_nodes": config.DEFAULT_NODE_LIMIT,
        "budget_secs": config.DEFAULT_TIME_LIMIT,
        "forbid": frozenset(),
        "radius": config.DEFAULT_REROUTE_RADIUS,
        "seed": config.DEFAULT_SEED,
        "workers": config.DEFAULT_WORKERS,
    }
    from_file: Dict[str, Any] = {}
    if config_path:
        try:
            from_file = config.load_run_config(config_path)
        except (OSError, ValueError, yaml.YAMLError) as e:
            _input_error(f"cannot read run file {config_path}: {e}")
        if "forbid" in from_file:
            from_file["forbid"] = parse_forbid(None, None, from_file["forbid"])
    resolved = dict(defaults)
    resolved.update(from_file)
    resolved.update({k: v for k, v in explicit.items() if v is not None})
    return resolved


def _budget(settings: Dict[str, Any]) -> SearchBudget:
    try:
        return SearchBudget(node_limit=int(settings["budget_nodes"]), time_limit=float(settings["budget_secs"]))
    except FullCycleError as e:
        raise click.UsageError(str(e))


budget_options = [
    click.option('--budget-nodes', type=int, default=None, help="Search-tree node limit per instance."),
    click.option('--budget-secs', type=float, default=None, help="Wall-clock seconds per instance."),
    click.option('--forbid', callback=parse_forbid, default=None, help="Comma-separated vertices the cycle must avoid."),
    click.option('--seed', '-s', type=int, default=None, help="Heuristic seed."),
    click.option('--workers', type=click.IntRange(min=1), default=None, help="Worker processes."),
]


def with_budget_options(fn):
    for option in reversed(budget_options):
        fn = option(fn)
    return fn


@click.group()
@click.version_option(version=config.VERSION)
@click.option('--verbose', '-v', is_flag=True, help="Enable verbose logging.")
@click.option('--log-file', type=click.Path(dir_okay=False), help="Also write logs to this file.")
def cli(verbose, log_file):
    """fullcycle - longest cycles and discharging audits on fullerene graphs"""
    if verbose or log_file:
        config.set_log_level("DEBUG" if verbose else config.LOG_LEVEL, log_file)


@cli.command()
@click.argument('family', type=click.Choice(['nanotube', 'buckyball'], case_sensitive=False))
@click.option('--k', type=click.IntRange(min=0), default=0, help="Hexagon rings of the nanotube.")
@click.option('--out', '-o', type=click.Path(dir_okay=False), required=True, help="Output graph file.")
@click.option('--format', 'fmt', type=click.Choice(config.GRAPH_FORMATS_SUPPORTED), default='planar_code', help="Output format.")
def generate(family, k, out, fmt):
    """Generate a fullerene and write it to a graph file."""
    try:
        graph = generate_nanotube(k) if family.lower() == 'nanotube' else generate_buckyball()
        write_graphs(out, [graph], fmt)
        reread = read_graphs(out, validate=True)
    except FullCycleError as e:
        _input_error(str(e))
    except OSError as e:
        _input_error(f"cannot write {out}: {e}")
    click.secho(f"✓ {graph.name}: n={graph.n}, f={graph.f} -> {out} ({fmt}, {len(reread)} graph)", fg="green")


@cli.command()
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
def validate(input_path):
    """Report every structural check for each graph in a file."""
    graphs = _load(input_path, validate=False)
    all_ok = True
    for graph in graphs:
        report = validate_fullerene(graph)
        all_ok = all_ok and report.ok
        mark, colour = ("✓", "green") if report.ok else ("✗", "red")
        click.secho(f"{mark} {graph.name} (n={graph.n}, f={graph.f})", fg=colour)
        for check in report.checks:
            status = "pass" if check.passed else "FAIL"
            click.echo(f"    {check.name:<17} {status}  {check.detail}")
    sys.exit(EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED)


@cli.command()
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
@with_budget_options
@click.option('--target', type=click.IntRange(min=1), default=None, help="Stop once a cycle this long is found.")
@click.option('--out', '-o', type=click.Path(dir_okay=False), help="Write cycles as JSON.")
def solve(input_path, budget_nodes, budget_secs, forbid, seed, workers, target, out):
    """Find a longest cycle in each graph."""
    settings = _resolve(dict(budget_nodes=budget_nodes, budget_secs=budget_secs, forbid=forbid,
                             seed=seed, workers=workers), None)
    budget = _budget(settings)
    if target is not None:
        budget = SearchBudget(budget.node_limit, budget.time_limit, target)
    graphs = _load(input_path)
    results = []
    for graph in graphs:
        res = longest_cycle_exact(graph, settings["forbid"], budget, workers=settings["workers"], seed=settings["seed"])
        verdict = "optimal" if res.optimal else "best found"
        click.echo(f"{graph.name}: length {res.length}/{graph.n} ({verdict}, {res.nodes} nodes, {res.elapsed_ms:.0f} ms)")
        results.append({"graph_id": graph.name, "optimal": res.optimal, "upper_bound": res.upper_bound,
                        **res.cycle.to_dict()})
    if out:
        with open(out, 'w') as f:
            json.dump(results, f, indent=2)


@cli.command()
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
@with_budget_options
@click.option('--radius', type=click.IntRange(min=0, max=3), default=None, help="Local reroute radius for witness moves.")
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), help="YAML/JSON run file.")
@click.option('--out', '-o', 'out_prefix', type=click.Path(), help="Write PREFIX.json and PREFIX.csv.")
def verify(input_path, budget_nodes, budget_secs, forbid, seed, workers, radius, config_path, out_prefix):
    """Run the full pipeline: solve, check, discharge, audit and bound."""
    settings = _resolve(dict(budget_nodes=budget_nodes, budget_secs=budget_secs, forbid=forbid,
                             seed=seed, workers=workers, radius=radius), config_path)
    budget = _budget(settings)
    graphs = _load(input_path)
    try:
        report = verify_corpus(graphs, workers=settings["workers"], forbidden=settings["forbid"], budget=budget,
                               radius=int(settings["radius"]), seed=int(settings["seed"]))
    except FullCycleError as e:
        _input_error(str(e))

    for row in report.rows:
        mark, colour = ("✓", "green") if row.graph_id not in report.failures else ("✗", "red")
        proof = "optimal" if row.optimal else "not proven optimal"
        click.secho(f"{mark} {row.graph_id}: length {row.length} ({proof}), w={row.w}, "
                    f"max charge {row.max_charge_halfunits} half-units, bound {row.bound} "
                    f"{'satisfied' if row.bound_ok else 'VIOLATED'}", fg=colour)
    if out_prefix:
        json_path, csv_path = report.write(out_prefix)
        click.echo(f"Report: {json_path}, {csv_path}")
    sys.exit(EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED)


@cli.command(name='oracle-check')
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--n-limit', type=click.IntRange(min=1), default=config.ORACLE_MAX_ORDER, help="Largest order to enumerate.")
@click.option('--each-vertex', is_flag=True, help="Also compare every single-forbidden-vertex subinstance.")
@click.option('--inject-fault', is_flag=True, hidden=True)
def oracle_check_cmd(input_path, n_limit, each_vertex, inject_fault):
    """Compare the exact search against exhaustive cycle enumeration."""
    graphs = _load(input_path)
    try:
        report = oracle_check(graphs, n_limit, each_vertex=each_vertex, inject_fault=inject_fault)
    except FullCycleError as e:
        _input_error(str(e))
    if report.passed:
        click.secho(f"✓ {report.comparisons} comparisons, no discrepancies", fg="green")
        sys.exit(EXIT_OK)
    click.secho(f"✗ {len(report.discrepancies)} of {report.comparisons} comparisons disagree", fg="red")
    for d in report.discrepancies:
        click.echo(json.dumps(d.to_dict()))
    sys.exit(EXIT_VERIFICATION_FAILED)


@cli.command()
def version():
    """Display version info."""
    click.echo(f"fullcycle v{config.VERSION}")
    click.echo(f"Traversal patterns: {len(pattern_catalogue())} (with facial: {len(pattern_catalogue(True))})")
    click.echo(f"Platform: {platform.system()}")


if __name__ == '__main__':
    cli()

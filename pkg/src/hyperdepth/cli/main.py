"""Command-line interface for hyperdepth."""

import functools
import json
import sys
import time
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click
from rich.console import Console

from .. import __version__
from ..core.errors import CharacteristicMismatch, HyperdepthError
from .commands import GENERATORS, HyperdepthCLI

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2

console = Console(stderr=True)


def handle_errors(func):
    """Report library errors on stderr and exit 2 (1 for a failed cross-check)."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        verbose = bool(ctx.obj and ctx.obj.config.verbose)
        try:
            return func(*args, **kwargs)
        except CharacteristicMismatch as e:
            console.print(f"[red]Cross-check failed: {e}[/red]")
            sys.exit(EXIT_VIOLATION)
        except (HyperdepthError, OSError) as e:
            console.print(f"[red]Error: {e}[/red]")
            if verbose:
                console.print_exception()
            sys.exit(EXIT_INPUT_ERROR)

    return wrapper


def emit(data) -> None:
    click.echo(json.dumps(data, indent=2))


def invocation() -> Dict[str, Any]:
    """Group and subcommand parameters as given, for the report header."""
    ctx = click.get_current_context()
    params: Dict[str, Any] = {}
    for scope in (ctx.parent.params if ctx.parent else {}, ctx.params):
        params.update({k: v for k, v in scope.items() if v is not None})
    return {k: str(v) if isinstance(v, Path) else v for k, v in params.items()}


def engine_options(func):
    """--field and --jobs on a subcommand; they override the group-level values."""
    func = click.option("--jobs", "-j", type=int, help="Worker processes for the Betti map")(func)
    return click.option("--field", help="Coefficient field: q or p:<prime>")(func)


@click.group()
@click.version_option(__version__, prog_name="hyperdepth")
@click.option("--config", "-c", "config_path", type=click.Path(exists=True, path_type=Path),
              help="Configuration file path")
@click.option("--field", help="Coefficient field: q or p:<prime>")
@click.option("--jobs", "-j", type=int, help="Worker processes for the Betti map")
@click.option("--cross-check", is_flag=True, default=None,
              help="Also compute ranks modulo the check prime and compare")
@click.option("--verbose", "-v", is_flag=True, default=None, help="Verbose output")
@click.pass_context
def cli(ctx, config_path: Optional[Path], field: Optional[str], jobs: Optional[int],
        cross_check: Optional[bool], verbose: Optional[bool]):
    """Depth of powers of edge ideals of hyperforests.

    \b
    Examples:
        hyperdepth forest-check graph.txt
        hyperdepth invariants tree12_flat
        hyperdepth depth-function tree12_deep --max-power 3 --csv
        hyperdepth certificate tree12_flat --power 3 --invariant alpha2 --out cert.json
    """
    try:
        app = HyperdepthCLI.from_options(
            config_path, console, field=field, jobs=jobs, cross_check=cross_check, verbose=verbose
        )
    except HyperdepthError as e:
        console.print(f"[red]Error: {e}[/red]")
        sys.exit(EXIT_INPUT_ERROR)
    app.setup_logging()
    ctx.obj = app


@cli.command("forest-check")
@click.argument("source")
@click.pass_obj
@handle_errors
def forest_check(app: HyperdepthCLI, source: str):
    """Recognize hyperforests by good leaf elimination."""
    started = time.perf_counter()
    G = app.load_graph(source)
    emit(app.report("forest-check", G, app.forest_check(G), started, invocation()))


@cli.command()
@click.argument("source")
@click.pass_obj
@handle_errors
def invariants(app: HyperdepthCLI, source: str):
    """Edgewise domination number and star packing number, with witnesses."""
    started = time.perf_counter()
    G = app.load_graph(source)
    emit(app.report("invariants", G, app.invariants(G), started, invocation()))


@cli.command()
@click.argument("source")
@click.option("--power", "-s", type=click.IntRange(min=1), default=1, help="Power s of the edge ideal")
@click.option("--betti", "show_betti", is_flag=True, help="Print the Betti table to stderr")
@engine_options
@click.pass_obj
@handle_errors
def depth(app: HyperdepthCLI, source: str, power: int, show_betti: bool,
          field: Optional[str], jobs: Optional[int]):
    """depth R/I(G)^s."""
    started = time.perf_counter()
    app = app.with_overrides(field=field, jobs=jobs)
    G = app.load_graph(source)
    emit(app.report("depth", G, app.depth(G, power, show_betti), started, invocation()))


@cli.command("depth-function")
@click.argument("source")
@click.option("--max-power", "-N", type=click.IntRange(min=1), help="Largest power (default from config)")
@click.option("--csv", "as_csv", is_flag=True, help="Print rows s,depth instead of JSON")
@click.option("--header", is_flag=True, help="With --csv, start with a header row")
@engine_options
@click.pass_obj
@handle_errors
def depth_function(app: HyperdepthCLI, source: str, max_power: Optional[int], as_csv: bool, header: bool,
                   field: Optional[str], jobs: Optional[int]):
    """depth R/I(G)^s for s = 1..N."""
    started = time.perf_counter()
    app = app.with_overrides(field=field, jobs=jobs)
    G = app.load_graph(source)
    payload = app.depth_function(G, max_power or app.config.max_power)
    if as_csv:
        if header:
            click.echo("s,depth")
        for s, d in enumerate(payload["depths"], start=1):
            click.echo(f"{s},{d}")
        return
    emit(app.report("depth-function", G, payload, started, invocation()))


@cli.command("verify-bound")
@click.argument("source")
@click.option("--invariant", type=click.Choice(["epsilon", "alpha2"]), default="epsilon",
              help="Which bound to check")
@click.option("--max-power", "-N", type=click.IntRange(min=1), help="Largest power (default from config)")
@engine_options
@click.pass_obj
@handle_errors
def verify_bound(app: HyperdepthCLI, source: str, invariant: str, max_power: Optional[int],
                 field: Optional[str], jobs: Optional[int]):
    """Check depth R/I^s >= max(inv - s + 1, 1); exit 1 on a violation."""
    started = time.perf_counter()
    app = app.with_overrides(field=field, jobs=jobs)
    G = app.load_graph(source)
    payload, ok = app.verify_bound(G, invariant, max_power or app.config.max_power)
    emit(app.report("verify-bound", G, payload, started, invocation()))
    if not ok:
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.argument("source")
@click.option("--power", "-s", type=click.IntRange(min=1), default=2, help="Power s")
@click.option("--invariant", type=click.Choice(["epsilon", "alpha2"]), default="epsilon")
@click.option("--h-edge", "held_out", multiple=True,
              help="Edge of H, e.g. 'x1 x2' (repeatable); T is the rest")
@click.option("--seed", type=int, help="Choose good leaves at random with this seed")
@click.option("--out", "-o", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the certificate JSON here")
@engine_options
@click.pass_obj
@handle_errors
def certificate(app: HyperdepthCLI, source: str, power: int, invariant: str,
                held_out: Tuple[str, ...], seed: Optional[int], out: Optional[Path],
                field: Optional[str], jobs: Optional[int]):
    """Build a certificate for depth R/(I(H) + I(T)^s); exit 1 if a check fails."""
    started = time.perf_counter()
    app = app.with_overrides(field=field, jobs=jobs)
    G = app.load_graph(source)
    h_edges = [edge.replace(",", " ").split() for edge in held_out]
    cert = app.certificate(G, power, invariant, h_edges, seed)
    payload = {"nodes": len(cert), "all_hold": cert.all_hold}
    if out:
        out.write_text(cert.to_json(), encoding="utf-8")
        payload["out"] = str(out)
    else:
        payload["certificate"] = cert.to_dict()
    emit(app.report("certificate", G, payload, started, invocation()))
    if not cert.all_hold:
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--kind", type=click.Choice(sorted(GENERATORS)), default="forest")
@click.option("--n", "n", type=int, help="Vertex budget")
@click.option("--edges", type=int, help="Number of edges")
@click.option("--max-edge-size", type=int, help="Largest edge size")
@click.option("--seed", type=int, help="RNG seed")
@click.option("--connected", is_flag=True, default=None, help="Generate a single tree")
@click.option("--out", "-o", type=click.Path(dir_okay=False, path_type=Path), help="Output file")
@click.pass_obj
@handle_errors
def gen(app: HyperdepthCLI, kind: str, n: Optional[int], edges: Optional[int],
        max_edge_size: Optional[int], seed: Optional[int], connected: Optional[bool],
        out: Optional[Path]):
    """Write a seeded random forest or hyperforest in the text format."""
    text = app.generate(kind, n=n, edges=edges, max_edge_size=max_edge_size, seed=seed,
                        connected=connected)
    if out:
        out.write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@cli.command()
@click.option("--trees", type=click.IntRange(min=1), default=20, help="Number of random hypertrees")
@click.option("--n", "n", type=int, default=20, help="Vertex budget per tree")
@click.option("--edges", type=int, default=4, help="Edges per tree")
@click.option("--max-edge-size", type=int, default=3, help="Largest edge size")
@click.option("--seed", type=int, default=0, help="Seed of the first tree; the rest follow")
@click.option("--max-power", "-N", type=click.IntRange(min=1), help="Largest power (default from config)")
@engine_options
@click.pass_obj
@handle_errors
def experiment(app: HyperdepthCLI, trees: int, n: int, edges: int, max_edge_size: int, seed: int,
               max_power: Optional[int], field: Optional[str], jobs: Optional[int]):
    """Depth functions of seeded random hypertrees next to the epsilon bound; exit 1 on a violation."""
    started = time.perf_counter()
    app = app.with_overrides(field=field, jobs=jobs)
    payload, ok = app.experiment(trees, max_power or app.config.max_power, n=n, edges=edges,
                                 max_edge_size=max_edge_size, seed=seed)
    emit(app.report("experiment", None, payload, started, invocation()))
    if not ok:
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--full", is_flag=True, help="Depth functions up to s = 4 (slow)")
@click.pass_obj
@handle_errors
def selftest(app: HyperdepthCLI, full: bool):
    """Reproduce the bundled examples; exit 1 on any mismatch."""
    started = time.perf_counter()
    payload, ok = app.selftest(full)
    emit(app.report("selftest", None, payload, started, invocation()))
    for check in payload["checks"]:
        mark = "[green]ok[/green]" if check["passed"] else "[red]FAIL[/red]"
        console.print(f"{mark} {check['name']}")
    if not ok:
        sys.exit(EXIT_VIOLATION)


if __name__ == "__main__":
    cli()

# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Main CLI entry point"""

from dataclasses import dataclass, field
import sys
from typing import Optional, Tuple, Union

import click

from . import log, profiler, utils
from .bundles import parse_bundle, restriction_table
from .exceptions import FlagPositivityError, NefHypothesisError, UsageError
from .flag_variety import DEFAULT_MAX_COSETS, Parabolic, gkm_graph, gkm_to_dict, gkm_to_dot
from .positivity import positivity, seshadri, seshadri_all
from .root_system import CartanType
from .version import __version__

COMMANDS = ("describe", "curves", "restrict", "nef", "ample", "seshadri", "export-gkm")
_BUNDLE_COMMANDS = ("restrict", "nef", "ample", "seshadri")


@dataclass
class Options:
    """Run-time options which have defaults"""

    max_cosets: int = DEFAULT_MAX_COSETS
    parallel: bool = False
    splits: int = 1
    executor_args: Tuple[str, ...] = ()
    profile: bool = False

    @property
    def table_kwargs(self):
        """Keyword arguments for restriction_table"""
        return {
            "parallel": self.parallel,
            "splits": self.splits,
            "executor_args": self.executor_args,
        }


@dataclass
class Query:
    """A validated command line request"""

    cartan: CartanType
    parabolic: Parabolic
    command: str
    bundle_text: Optional[str] = None
    bundle: object = None
    point: Union[int, str, None] = None
    output: str = "table"
    options: Options = field(default_factory=Options)


class _CartanTypeParam(click.ParamType):
    name = "TYPE"

    def convert(self, value, param, ctx):
        if isinstance(value, CartanType):
            return value
        try:
            return CartanType.from_string(value)
        except FlagPositivityError as e:
            self.fail(str(e), param, ctx)


class _NodeListParam(click.ParamType):
    name = "CSV"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(v) for v in value.split(",") if v.strip())
        except ValueError:
            self.fail(f'"{value}" is not a comma separated list of node numbers', param, ctx)


class _PointParam(click.ParamType):
    name = "ID|all"

    def convert(self, value, param, ctx):
        if isinstance(value, int) or value == "all":
            return value
        try:
            point = int(value)
        except ValueError:
            self.fail(f'"{value}" is neither a fixed point id nor "all"', param, ctx)
        if point < 0:
            self.fail(f"fixed point id must be >= 0, got {point}", param, ctx)
        return point


def _make_query(ctx, command, bundle=None, point=None, as_json=False, as_dot=False):
    """Check command/argument compatibility and build the Query"""
    settings = ctx.obj
    if as_json and as_dot:
        raise click.UsageError("--json and --dot are mutually exclusive", ctx)
    if as_dot and command not in ("curves", "export-gkm"):
        raise click.UsageError("--dot is only available for curves and export-gkm", ctx)
    if command in _BUNDLE_COMMANDS and bundle is None:
        raise click.UsageError(f"{command} requires --bundle", ctx)
    if command == "seshadri" and point is None:
        raise click.UsageError("seshadri requires --point <id|all>", ctx)

    parsed = None
    if bundle is not None:
        try:
            parsed = parse_bundle(bundle, settings["cartan"])
        except UsageError as e:
            raise click.BadParameter(str(e), ctx, param_hint="--bundle") from e

    return Query(
        cartan=settings["cartan"],
        parabolic=settings["parabolic"],
        command=command,
        bundle_text=bundle,
        bundle=parsed,
        point=point,
        output="json" if as_json else ("dot" if as_dot else "table"),
        options=settings["options"],
    )


_json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
_bundle_option = click.option(
    "--bundle",
    required=True,
    type=str,
    help="Bundle expression, e.g. 'Q', 'dual(S)*det(Q)', 'sym(2,T)+L[1,0,0]'.",
)


@click.group(context_settings={"show_default": True})
@click.version_option(version=__version__, prog_name="flag-positivity")
@click.option("-v", "--verbose", count=True, default=0, help="-v for INFO, -vv for DEBUG")
@click.option(
    "--type", "cartan", required=True, type=_CartanTypeParam(), help="Cartan type, e.g. A3, E6."
)
@click.option(
    "--omit",
    type=_NodeListParam(),
    default=None,
    help="Omitted nodes of P (Bourbaki numbering); all nodes (P = B) if not given.",
)
@click.option(
    "--max-cosets",
    type=click.IntRange(min=1),
    default=DEFAULT_MAX_COSETS,
    help="Refuse to enumerate more fixed points than this.",
)
@click.option(
    "--profile", is_flag=True, help="Enable profiling; stats are logged at INFO (implies -v)."
)
@click.option("--parallel", is_flag=True, help="Restrict to curves using a Dask job scheduler.")
@click.option(
    "--splits", type=click.IntRange(min=1), default=1, help="Number of curve chunks (jobs)."
)
@click.option(
    "--parallel-arg",
    "-a",
    multiple=True,
    type=str,
    help="Overwrite the arguments for the Dask Client with key=value",
)
@click.pass_context
def app(ctx, verbose, cartan, omit, max_cosets, profile, parallel, splits, parallel_arg):
    """Nef/ample certification and Seshadri constants of T-equivariant bundles on G/P.

    Omitting node d of A(n-1) gives the Grassmannian Gr(d,n); --type A1 --omit 1 is P^1.

    \b
    Exit codes:
      0  success
      1  precondition failed (e.g. seshadri on a bundle that is not nef)
      2  usage error (bad flag, type, parabolic, bundle expression or point id)
      3  |W/W_P| exceeds --max-cosets
    """
    if profile:
        verbose = max(verbose, log.LogLevel.DEFAULT)
    log.setup_logging(log_level=min(verbose, 2))
    omitted = range(1, cartan.rank + 1) if omit is None else omit
    try:
        parabolic = Parabolic.from_omitted(cartan, omitted)
    except UsageError as e:
        raise click.BadParameter(str(e), ctx, param_hint="--omit") from e
    ctx.obj = {
        "cartan": cartan,
        "parabolic": parabolic,
        "options": Options(
            max_cosets=max_cosets,
            parallel=parallel,
            splits=splits,
            executor_args=tuple(parallel_arg),
            profile=profile,
        ),
    }


@app.command()
@_json_option
@click.pass_context
def describe(ctx, as_json):
    """Count fixed points and invariant curves of G/P."""
    return _make_query(ctx, "describe", as_json=as_json)


@app.command()
@_json_option
@click.option("--dot", "as_dot", is_flag=True, help="Emit Graphviz DOT.")
@click.pass_context
def curves(ctx, as_json, as_dot):
    """List the T-invariant curves (edges of the GKM graph)."""
    return _make_query(ctx, "curves", as_json=as_json, as_dot=as_dot)


@app.command()
@_bundle_option
@_json_option
@click.pass_context
def restrict(ctx, bundle, as_json):
    """Splitting type of a bundle on every invariant curve."""
    return _make_query(ctx, "restrict", bundle=bundle, as_json=as_json)


@app.command()
@_bundle_option
@_json_option
@click.pass_context
def nef(ctx, bundle, as_json):
    """Decide whether a bundle is nef."""
    return _make_query(ctx, "nef", bundle=bundle, as_json=as_json)


@app.command()
@_bundle_option
@_json_option
@click.pass_context
def ample(ctx, bundle, as_json):
    """Decide whether a bundle is ample."""
    return _make_query(ctx, "ample", bundle=bundle, as_json=as_json)


@app.command(name="seshadri")
@_bundle_option
@click.option("--point", required=True, type=_PointParam(), help="Fixed point id or 'all'.")
@_json_option
@click.pass_context
def seshadri_command(ctx, bundle, point, as_json):
    """Seshadri constant of a nef bundle at T-fixed points."""
    return _make_query(ctx, "seshadri", bundle=bundle, point=point, as_json=as_json)


@app.command(name="export-gkm")
@click.option("--dot", "as_dot", is_flag=True, help="Emit Graphviz DOT instead of JSON.")
@click.pass_context
def export_gkm(ctx, as_dot):
    """Export the GKM graph (JSON by default)."""
    return _make_query(ctx, "export-gkm", as_json=not as_dot, as_dot=as_dot)


def parse_args(argv):
    """Parse a command line into a Query.

    Raises click.exceptions.ClickException (exit code 2) on usage errors; returns an
    int exit code when click handled the request itself (--help, --version).
    """
    return app.main(args=list(argv), prog_name="flag-positivity", standalone_mode=False)


def _emit(text):
    click.echo(text, nl=not text.endswith("\n"))


def _header(query, graph):
    return (
        f"{query.parabolic}: {len(graph.fixed_points)} fixed points, "
        f"{len(graph.curves)} invariant curves"
    )


def _describe(query, graph):
    rs = graph.root_system
    data = {
        "cartan_type": str(query.cartan),
        "omitted": list(query.parabolic.omitted),
        "dimension": query.parabolic.dimension,
        "weyl_order": rs.weyl_group_order(),
        "levi_weyl_order": rs.weyl_group_order(query.parabolic.levi_set),
        "fixed_points": len(graph.fixed_points),
        "invariant_curves": len(graph.curves),
    }
    if query.output == "json":
        return utils.dump_json(data)
    return "\n".join(
        [
            f"{len(graph.fixed_points)} fixed points, {len(graph.curves)} invariant curves",
            f"G/P = {query.parabolic}, dim {data['dimension']}",
            f"|W| = {data['weyl_order']}, |W_P| = {data['levi_weyl_order']}",
        ]
    )


def _curves(query, graph):
    if query.output == "dot":
        return gkm_to_dot(graph)
    data = gkm_to_dict(graph)
    if query.output == "json":
        return utils.dump_json(data["edges"])
    lines = [_header(query, graph)]
    for c in graph.curves:
        lines.append(
            f"curve {c.index}: x{c.source.index} ({c.source.rep!r}) -- "
            f"x{c.target.index} ({c.target.rep!r}), root {c.root}"
        )
    return "\n".join(lines)


def _verdict_text(query, verdict):
    witness = verdict.witness
    return "\n".join(
        [
            f"{query.bundle} on {query.parabolic}: {verdict.status.value}",
            f"global min {verdict.global_min} "
            f"(witness: curve {witness.curve}, entry {witness.entry})",
            f"table digest {verdict.table_digest}",
        ]
    )


def _verdict(query, graph):
    verdict = positivity(query.bundle, graph, **query.options.table_kwargs)
    if query.output == "json":
        return utils.dump_json(verdict.to_dict())
    answer = verdict.is_nef if query.command == "nef" else verdict.is_ample
    return _verdict_text(query, verdict) + f"\n{query.command}: {'yes' if answer else 'no'}"


def _restrict(query, graph):
    table = restriction_table(query.bundle, graph, **query.options.table_kwargs)
    if query.output == "json":
        return utils.dump_json(table.to_dict())
    return f"{_header(query, graph)}\n{table.to_frame().to_string()}"


def _seshadri(query, graph):
    table = restriction_table(query.bundle, graph, **query.options.table_kwargs)
    if query.point == "all":
        results = seshadri_all(query.bundle, graph, table)
    else:
        results = [seshadri(query.bundle, graph, query.point, table)]
    minimum = min(r.value for r in results)
    if query.output == "json":
        if query.point != "all":
            return utils.dump_json(results[0].to_dict())
        return utils.dump_json(
            {
                "points": [r.to_dict() for r in results],
                "minimum": utils.fraction_to_dict(minimum),
            }
        )
    lines = []
    for r in results:
        curves_str = ", ".join(str(w.curve) for w in r.attaining)
        lines.append(f"x{r.point}: epsilon = {r.value} (curves {curves_str})")
    if query.point == "all":
        lines.append(f"min over fixed points: {minimum}")
    return "\n".join(lines)


def _export_gkm(query, graph):
    if query.output == "dot":
        return gkm_to_dot(graph)
    return utils.dump_json(gkm_to_dict(graph))


_RUNNERS = {
    "describe": _describe,
    "curves": _curves,
    "restrict": _restrict,
    "nef": _verdict,
    "ample": _verdict,
    "seshadri": _seshadri,
    "export-gkm": _export_gkm,
}


def run(query):
    """Execute a Query, writing its output to stdout; returns the exit code"""
    profiler.ProfilerManager.set_enabled(query.options.profile)
    try:
        graph = gkm_graph(query.parabolic, query.options.max_cosets)
        if query.bundle is not None:
            query.bundle.rank(query.parabolic)
        output = _RUNNERS[query.command](query, graph)
    except NefHypothesisError as e:
        click.echo(f"Error: {e}", err=True)
        click.echo(_verdict_text(query, e.verdict), err=True)
        return e.exit_code
    except FlagPositivityError as e:
        click.echo(f"Error: {e}", err=True)
        return e.exit_code
    _emit(output)
    profiler.ProfilerManager.show_stats()
    return 0


def main(argv=None):
    """Console entry point: parse, run, exit with the documented code"""
    argv = sys.argv[1:] if argv is None else argv
    try:
        query = parse_args(argv)
    except click.exceptions.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    if isinstance(query, int):
        return query
    if query is None:
        return 0
    return run(query)


if __name__ == "__main__":
    sys.exit(main())

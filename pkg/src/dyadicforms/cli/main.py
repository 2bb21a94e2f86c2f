"""
Command-line interface for dyadicforms.

Every subcommand prints one payload (JSON by default, ``--output text`` for
people) on stdout; logging goes to stderr. Exit codes:

    0   the question was answered (whatever the answer)
    2   bad input: malformed JSON, not a good BONG, wrong parity for a method...
    1   an internal self-check failed

Examples:
  # Invariants of H ⊥ H over Q_2
  dyadicforms invariants '{"kind": "concat", "blocks": [{"kind": "H"}, {"kind": "H"}]}'

  # Is H^3 3-universal over the ramified quadratic extension?
  dyadicforms --field '{"e": 2, "f": 1}' universal h3.json --n 3 --method odd51

  # Reproducible cross-validation run
  dyadicforms --seed 42 crosscheck --n 2 --count 500
"""

from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

import click

from ..enums import LatticeKind, Method, OutputFormat
from ..errors import InputError, InternalFault, RejectedBong
from ..field import FieldContext, FieldElement, defect_order, sharp
from ..forms import hilbert
from ..io import CliConfig, load_field_spec, load_lattice, load_lattice_spec, parse_element
from ..io.schema import Payload
from ..lattice import check_bong, represents
from ..output import (
    classes_payload,
    crosscheck_payload,
    defect_payload,
    hilbert_payload,
    invariants_payload,
    rejected_bong_payload,
    minimality_payload,
    representation_payload,
    sharp_payload,
    testing_set_payload,
    to_json,
    to_text,
    universality_payload,
)
from ..universality import crosscheck, is_n_universal, representation_matrix, testing_set

logger = logging.getLogger(__name__)

DEFAULT_FIELD = '{"e": 1, "f": 1}'


@dataclass
class CliState:
    """Parsed global options, shared with every subcommand."""

    config: CliConfig
    ctx: FieldContext


def get_version_string() -> str:
    from importlib.metadata import PackageNotFoundError, version as pkg_version

    try:
        return pkg_version("dyadicforms")
    except PackageNotFoundError:
        return "0.0.0"


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def _emit(state: CliState, payload: Payload) -> None:
    if state.config.output is OutputFormat.TEXT:
        click.echo(to_text(payload))
    else:
        click.echo(to_json(payload))


def _element(ctx: FieldContext, text: str) -> FieldElement:
    """An element from a literal JSON object or a rational string."""
    if text.lstrip().startswith('{'):
        return parse_element(ctx, json.loads(text))
    return parse_element(ctx, text)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--field", "field_source", default=DEFAULT_FIELD, show_default=True,
              help="Field spec: path to a JSON file or inline JSON")
@click.option("--output", type=click.Choice([f.value for f in OutputFormat]), default="json",
              show_default=True, help="Output format")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized commands")
@click.option("--prec", type=int, default=None, help="Override the pi-adic working precision")
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for debug logging")
@click.version_option(version=get_version_string(), prog_name="dyadicforms")
@click.pass_context
def cli(click_ctx: click.Context, field_source: str, output: str, seed: int, prec: Optional[int], verbose: int):
    """Exact n-universality decisions for lattices over dyadic local fields."""
    _configure_logging(verbose)
    config = CliConfig(
        field_spec=load_field_spec(field_source),
        output=output,
        seed=seed,
        prec_override=prec,
        verbose=verbose,
    )
    click_ctx.obj = CliState(config, config.context())


@cli.command()
@click.argument("lattice")
@click.pass_obj
def invariants(state: CliState, lattice: str):
    """R_i, alpha_i and the space invariants of LATTICE."""
    spec = load_lattice_spec(lattice)
    if spec.kind is LatticeKind.BONG_LITERAL and spec.bong is not None:
        # report every problem, not just the first one validate_bong hits
        result = check_bong([parse_element(state.ctx, x) for x in spec.bong])
        if not result.valid:
            _emit(state, rejected_bong_payload(state.ctx, result))
            raise RejectedBong([m.code for m in result.errors])
    built = spec.build(state.ctx)
    _emit(state, invariants_payload(built, check_bong(built.a)))


@cli.command()
@click.argument("lattice")
@click.option("--n", "n", type=int, required=True, help="Rank n")
@click.option("--method", type=click.Choice([m.value for m in Method]), default=Method.THM11.value,
              show_default=True, help="Decision procedure")
@click.pass_obj
def universal(state: CliState, lattice: str, n: int, method: str):
    """Decide whether LATTICE is n-universal."""
    built = load_lattice(lattice, state.ctx)
    verdict = is_n_universal(built, n, Method(method))
    _emit(state, universality_payload(state.ctx, n, verdict))


@cli.command(name="represents")
@click.argument("sub")
@click.argument("target")
@click.option("--skip-inessential", is_flag=True, help="Skip condition (ii) at inessential indices")
@click.pass_obj
def represents_cmd(state: CliState, sub: str, target: str, skip_inessential: bool):
    """Decide whether TARGET represents SUB."""
    n_lat = load_lattice(sub, state.ctx)
    m_lat = load_lattice(target, state.ctx)
    verdict = represents(n_lat, m_lat, skip_inessential=skip_inessential)
    _emit(state, representation_payload(state.ctx, verdict))


@cli.command(name="testing-set")
@click.option("--n", "n", type=int, required=True, help="Rank n")
@click.pass_obj
def testing_set_cmd(state: CliState, n: int):
    """The minimal testing set for n-universality."""
    _emit(state, testing_set_payload(state.ctx, n, testing_set(state.ctx, n)))


@cli.command(name="crosscheck")
@click.option("--n", "n", type=int, required=True, help="Rank n")
@click.option("--count", type=int, default=100, show_default=True, help="Number of samples")
@click.option("--no-oracle", is_flag=True, help="Skip the testing-set oracle")
@click.pass_obj
def crosscheck_cmd(state: CliState, n: int, count: int, no_oracle: bool):
    """Compare all deciders on random lattices seeded by the global --seed."""
    report = crosscheck(state.ctx, n, count, state.config.seed, oracle=not no_oracle)
    _emit(state, crosscheck_payload(state.ctx, report))


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Rank n")
@click.pass_obj
def minimality(state: CliState, n: int):
    """Check that no member of the testing set can be dropped."""
    _emit(state, minimality_payload(state.ctx, representation_matrix(state.ctx, n)))


@cli.command()
@click.pass_obj
def classes(state: CliState):
    """The square-class table F^x / F^x2."""
    _emit(state, classes_payload(state.ctx))


@cli.command()
@click.argument("element")
@click.pass_obj
def defect(state: CliState, element: str):
    """Quadratic defect order d(ELEMENT)."""
    x = _element(state.ctx, element)
    _emit(state, defect_payload(x, defect_order(x)))


@cli.command(name="hilbert")
@click.argument("a")
@click.argument("b")
@click.pass_obj
def hilbert_cmd(state: CliState, a: str, b: str):
    """Hilbert symbol (A, B)."""
    x, y = _element(state.ctx, a), _element(state.ctx, b)
    _emit(state, hilbert_payload(x, y, hilbert(x, y)))


@cli.command(name="sharp")
@click.argument("c")
@click.pass_obj
def sharp_cmd(state: CliState, c: str):
    """The companion unit c# with d(c#) = 2e - d(c) and (c#, c) = -1."""
    x = _element(state.ctx, c)
    x_sharp = sharp(x)
    d_c = defect_order(x)
    _emit(state, sharp_payload(x, x_sharp, d_c, defect_order(x_sharp)))


def main(argv: Optional[list[str]] = None) -> int:
    """Main CLI entry point."""
    try:
        rv = cli.main(args=argv, prog_name="dyadicforms", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted", err=True)
        return 1
    except InternalFault as exc:
        click.echo(f"Internal error: {exc}", err=True)
        return 1
    except InputError as exc:
        click.echo(f"Error: {exc}", err=True)
        return 2
    except (FileNotFoundError, ValueError) as exc:
        # pydantic ValidationError and json.JSONDecodeError are ValueErrors
        click.echo(f"Error: {exc}", err=True)
        return 2
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())

"""reductlab command line

Every command loads configuration (base.yaml, the REDUCTLAB_ENV overlay,
then explicit flags), binds a run id for log correlation, and writes its
result to stdout or ``--out``. Diagnostics go to stderr.

Exit codes: 0 verdict true or lattice valid, 1 verdict false, 2 invalid
lattice, 3 I/O or parse error, 4 budget exceeded, 5 unknown labels.
"""

import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from rich.console import Console
from rich.table import Table

from reductlab import __version__
from reductlab.context import LContext, SubcontextSelector, load_context, load_lattice, negate_context
from reductlab.derivation import ConceptLattice, Method, Mode, Strategy, enumerate_concepts
from reductlab.errors import EXIT_FALSE, EXIT_INPUT, LatticeAxiomError, ReductLabError, SpecFormatError
from reductlab.infrastructure.config import load_config
from reductlab.infrastructure.logging import CorrelationContext, configure_logging, get_logger
from reductlab.infrastructure.monitoring import metrics
from reductlab.infrastructure.serialization import DocumentKind, dumps_document, envelope
from reductlab.lattice import Lattice, parse_builtin
from reductlab.reduct import SamplerConfig, is_reduct, search_reducts, verify_interdefinability

logger = get_logger(__name__)

# A command returns its document kind, JSON body, text rendering and exit code
Outcome = Tuple[DocumentKind, Dict[str, Any], Any, int]

# RunConfig field -> configuration key
_CONFIG_KEYS = {
    "budget": "engine.budget",
    "method": "engine.method",
    "strategy": "engine.strategy",
    "seed": "sampler.seed",
    "samples": "sampler.samples",
    "max_objects": "sampler.max_objects",
    "max_attributes": "sampler.max_attributes",
    "format": "output.format",
    "log_level": "logging.level",
    "log_format": "logging.format",
}


class RunConfig(BaseModel):
    """Settings for one command invocation"""

    model_config = ConfigDict(extra="forbid")

    lattice: Optional[Path] = None
    builtin: Optional[str] = None
    context: Optional[Path] = None
    objects: Optional[List[str]] = None
    attributes: Optional[List[str]] = None
    mode: Mode = Mode.FCA
    method: Method = Method.AUTO
    strategy: Strategy = Strategy.GENERATORS
    budget: int = Field(1_000_000, gt=0)
    seed: int = 7
    samples: int = Field(200, ge=1)
    max_objects: int = Field(3, ge=1)
    max_attributes: int = Field(3, ge=1)
    exhaustive: bool = False
    negate: bool = False
    all_reducts: bool = False
    format: Literal["text", "json"] = "text"
    out: Optional[Path] = None
    log_level: str = "WARNING"
    log_format: Literal["text", "json"] = "json"

    @model_validator(mode="after")
    def _one_lattice_source(self) -> "RunConfig":
        if self.lattice is not None and self.builtin is not None:
            raise ValueError("give either --lattice or --builtin, not both")
        return self

    @classmethod
    def from_sources(cls, flags: Dict[str, Any]) -> "RunConfig":
        """Merge loaded configuration with the flags actually given"""
        config = load_config()
        values: Dict[str, Any] = {
            name: config.get(key) for name, key in _CONFIG_KEYS.items()
        }
        values = {k: v for k, v in values.items() if v is not None}
        values.update({k: v for k, v in flags.items() if v is not None})
        return cls(**values)

    def sampler(self) -> SamplerConfig:
        return SamplerConfig(
            seed=self.seed,
            samples=self.samples,
            max_objects=self.max_objects,
            max_attributes=self.max_attributes,
            exhaustive=self.exhaustive,
            method=self.method,
            budget=self.budget,
        )


# ===== Shared plumbing =====


def _labels(value: Optional[str]) -> Optional[List[str]]:
    """Comma list; an empty string is the empty set, absence keeps everything"""
    if value is None:
        return None
    return [label.strip() for label in value.split(",") if label.strip()]


def _output_options(func: Callable) -> Callable:
    func = click.option("--log-level", default=None, help="Logging level for stderr diagnostics.")(func)
    func = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                        help="Write the result here instead of stdout.")(func)
    func = click.option("--format", "format_", type=click.Choice(["text", "json"]), default=None,
                        help="Human-readable text or canonical JSON.")(func)
    func = click.option("--budget", type=int, default=None, help="Cap on enumerated candidates.")(func)
    return func


def _lattice_options(func: Callable) -> Callable:
    func = click.option("--builtin", default=None, help="Builtin chain, e.g. lukasiewicz(3) or godel(4).")(func)
    func = click.option("--lattice", type=click.Path(dir_okay=False, path_type=Path), default=None,
                        help="Lattice specification file.")(func)
    return func


def _context_options(func: Callable) -> Callable:
    func = click.option("--negate", is_flag=True, default=None, help="Use the context ¬φ instead of φ.")(func)
    func = click.option("--mode", type=click.Choice([m.value for m in Mode]), default=None)(func)
    func = click.option("--context", "context_path", type=click.Path(dir_okay=False, path_type=Path),
                        required=True, help="Context file.")(func)
    return func


def _emit(settings: RunConfig, kind: DocumentKind, body: Dict[str, Any], rendering: Any) -> None:
    if settings.format == "json":
        text = dumps_document(envelope(kind, body))
        if settings.out is not None:
            settings.out.write_text(text, encoding="utf-8")
        else:
            click.echo(text, nl=False)
        return
    if settings.out is not None:
        with settings.out.open("w", encoding="utf-8") as handle:
            Console(file=handle, width=120, color_system=None).print(rendering)
    else:
        Console(file=sys.stdout, width=120).print(rendering)


def _run(command: str, flags: Dict[str, Any], body: Callable[[RunConfig], Outcome]) -> None:
    """Resolve settings, run ``body`` inside a correlation scope and exit"""
    try:
        settings = RunConfig.from_sources(flags)
    except ValidationError as e:
        click.echo(f"error: {e.errors()[0]['msg']}", err=True)
        sys.exit(EXIT_INPUT)

    configure_logging(settings.log_level, format_json=settings.log_format == "json")
    metrics.reset()
    with CorrelationContext.scope() as run_id:
        logger.info({"message": "command started", "command": command, "run_id": run_id})
        try:
            kind, document, rendering, code = body(settings)
            _emit(settings, kind, document, rendering)
        except ReductLabError as e:
            logger.error({"message": "command failed", "command": command, "error": type(e).__name__})
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)
        except OSError as e:
            logger.error({"message": "output failed", "command": command, "error": type(e).__name__})
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_INPUT)
        logger.debug({"message": "command finished", "command": command, "metrics": metrics.snapshot()})
    sys.exit(code)


def _resolve_lattice(settings: RunConfig) -> Lattice:
    if settings.lattice is not None:
        return load_lattice(settings.lattice)
    if settings.builtin is not None:
        return parse_builtin(settings.builtin)
    raise SpecFormatError("one of --lattice or --builtin is required")


def _resolve_context(settings: RunConfig) -> LContext:
    ctx = load_context(settings.context)
    return negate_context(ctx) if settings.negate else ctx


def _concept_tables(concepts: ConceptLattice) -> Table:
    ctx = concepts.context
    names = ctx.lattice.names
    table = Table(title=f"{concepts.mode.value.upper()} concepts of {ctx.lattice.label} ({len(concepts)})")
    table.add_column("#", justify="right")
    for label in ctx.objects:
        table.add_column(label, justify="center")
    table.add_column("≤ (row-wise L-order)")
    for n, (concept, row) in enumerate(zip(concepts, concepts.order)):
        table.add_row(str(n), *concept.names(ctx.lattice), " ".join(names[v] for v in row))
    table.caption = f"strategy {concepts.strategy.value}, {concepts.examined} examined"
    return table


# ===== Commands =====


@click.group(name="reductlab")
@click.version_option(__version__, prog_name="reductlab")
def main() -> None:
    """Reducts of formal contexts over residuated lattices."""


@main.command("lattice-validate")
@_lattice_options
@_output_options
def lattice_validate(lattice: Optional[Path], builtin: Optional[str], budget: Optional[int],
                     format_: Optional[str], out: Optional[Path], log_level: Optional[str]) -> None:
    """Check the residuated lattice axioms and the law of double negation."""

    def body(settings: RunConfig) -> Outcome:
        table = Table(title="lattice validation")
        table.add_column("check")
        table.add_column("result")
        try:
            validated = _resolve_lattice(settings)
        except LatticeAxiomError as e:
            document = {
                "valid": False,
                "violation": {"code": e.code.value, "witness": list(e.witness), "detail": e.detail},
            }
            table.add_row("axioms", f"[red]violated[/red]: {e.code.value}")
            table.add_row("witness", ", ".join(e.witness))
            table.add_row("detail", e.detail)
            return DocumentKind.LATTICE_REPORT, document, table, e.exit_code

        dne, witness = validated.satisfies_dne()
        document = {
            "valid": True,
            "lattice": validated.label,
            "elements": list(validated.names),
            "chain": validated.is_chain,
            "bottom": validated.names[validated.bottom],
            "top": validated.names[validated.top],
            "dne": dne,
            "dne_witness": None if witness is None else validated.names[witness],
        }
        table.title = f"lattice validation: {validated.label}"
        table.add_row("axioms", "[green]valid[/green]")
        table.add_row("elements", ", ".join(validated.names))
        table.add_row("chain", "yes" if validated.is_chain else "no")
        table.add_row("double negation", "holds" if dne else f"fails at {validated.names[witness]}")
        return DocumentKind.LATTICE_REPORT, document, table, 0

    _run("lattice-validate", {"lattice": lattice, "builtin": builtin, "budget": budget,
                              "format": format_, "out": out, "log_level": log_level}, body)


@main.command("concepts")
@_context_options
@click.option("--strategy", type=click.Choice([s.value for s in Strategy]), default=None)
@_output_options
def concepts(context_path: Path, mode: Optional[str], negate: Optional[bool], strategy: Optional[str],
             budget: Optional[int], format_: Optional[str], out: Optional[Path], log_level: Optional[str]) -> None:
    """Enumerate the concept lattice of a context."""

    def body(settings: RunConfig) -> Outcome:
        ctx = _resolve_context(settings)
        found = enumerate_concepts(ctx, settings.mode, settings.strategy, settings.budget)
        return DocumentKind.CONCEPT_LATTICE, found.to_document(), _concept_tables(found), 0

    _run("concepts", {"context": context_path, "mode": mode, "negate": negate, "strategy": strategy,
                      "budget": budget, "format": format_, "out": out, "log_level": log_level}, body)


@main.command("reduct-check")
@_context_options
@click.option("--objects", default=None, help="Kept objects, comma separated; omit to keep all.")
@click.option("--attributes", default=None, help="Kept attributes, comma separated; omit to keep all.")
@click.option("--method", type=click.Choice([m.value for m in Method]), default=None)
@_output_options
def reduct_check(context_path: Path, mode: Optional[str], negate: Optional[bool], objects: Optional[str],
                 attributes: Optional[str], method: Optional[str], budget: Optional[int],
                 format_: Optional[str], out: Optional[Path], log_level: Optional[str]) -> None:
    """Decide whether the kept objects and attributes form a reduct."""

    def body(settings: RunConfig) -> Outcome:
        ctx = _resolve_context(settings)
        sel = SubcontextSelector.from_labels(ctx, settings.objects, settings.attributes)
        report = is_reduct(ctx, sel, settings.mode, settings.method, settings.budget)
        return DocumentKind.REDUCT_REPORT, report.to_document(), report.render(), 0 if report else EXIT_FALSE

    _run("reduct-check", {"context": context_path, "mode": mode, "negate": negate,
                          "objects": _labels(objects), "attributes": _labels(attributes), "method": method,
                          "budget": budget, "format": format_, "out": out, "log_level": log_level}, body)


@main.command("reduct-search")
@_context_options
@click.option("--all", "all_reducts", is_flag=True, default=None, help="List every reduct, not only minimal ones.")
@click.option("--method", type=click.Choice([m.value for m in Method]), default=None)
@_output_options
def reduct_search(context_path: Path, mode: Optional[str], negate: Optional[bool], all_reducts: Optional[bool],
                  method: Optional[str], budget: Optional[int], format_: Optional[str], out: Optional[Path],
                  log_level: Optional[str]) -> None:
    """List the (minimal) reducts of a context."""

    def body(settings: RunConfig) -> Outcome:
        ctx = _resolve_context(settings)
        result = search_reducts(ctx, settings.mode, not settings.all_reducts, settings.method, settings.budget)
        return DocumentKind.REDUCT_SEARCH, result.to_document(), result.render(), 0

    _run("reduct-search", {"context": context_path, "mode": mode, "negate": negate, "all_reducts": all_reducts,
                           "method": method, "budget": budget, "format": format_, "out": out,
                           "log_level": log_level}, body)


@main.command("verify-theorem")
@_lattice_options
@click.option("--samples", type=int, default=None, help="Random contexts to check.")
@click.option("--seed", type=int, default=None, help="Seed for the context sampler.")
@click.option("--exhaustive", is_flag=True, default=None, help="Sweep every context up to the size bounds.")
@click.option("--max-objects", type=int, default=None)
@click.option("--max-attributes", type=int, default=None)
@_output_options
def verify_theorem(lattice: Optional[Path], builtin: Optional[str], samples: Optional[int], seed: Optional[int],
                   exhaustive: Optional[bool], max_objects: Optional[int], max_attributes: Optional[int],
                   budget: Optional[int], format_: Optional[str], out: Optional[Path],
                   log_level: Optional[str]) -> None:
    """Compare FCA reducts of φ with RST reducts of ¬φ."""

    def body(settings: RunConfig) -> Outcome:
        report = verify_interdefinability(_resolve_lattice(settings), settings.sampler())
        code = 0 if report.consistent else EXIT_FALSE
        return DocumentKind.INTERDEFINABILITY, report.to_document(), report.render(), code

    _run("verify-theorem", {"lattice": lattice, "builtin": builtin, "samples": samples, "seed": seed,
                            "exhaustive": exhaustive, "max_objects": max_objects, "max_attributes": max_attributes,
                            "budget": budget, "format": format_, "out": out, "log_level": log_level}, body)


if __name__ == "__main__":
    main()

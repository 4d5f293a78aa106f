"""Controlador de línea de comandos: un subcomando por estudio."""
import argparse
import math
import sys
from typing import List, Optional, Sequence, TextIO

from pydantic import ValidationError

from ...domain.exceptions import ConfigurationError, DomainException
from ...infrastructure.config import STUDY_NAMES, get_settings
from ...infrastructure.logging import configure_structlog
from ...shared.logging import LoggerFactory, log_error_message
from ..use_cases import ExperimentResult, RunExperimentUseCase

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_BOX_WIDTH = 61


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lab.py",
        description="Laboratorio numérico de espacios de Hardy para operadores elípticos de orden 2m en el toro.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "Ejemplos:\n"
            "  python lab.py validate-operator --config config/experiment.yaml\n"
            "  python lab.py equivalence --a S_L --b N_hL --p 1\n"
            "  python lab.py gaffney --set operator.m=2 --set grid.N=64\n"
        ),
    )
    subparsers = parser.add_subparsers(dest="study", required=True, metavar="STUDY")
    for name in STUDY_NAMES:
        sub = subparsers.add_parser(name, help=f"run the {name} study")
        sub.add_argument("--config", "-c", type=str, default=None, help="experiment YAML file")
        sub.add_argument(
            "--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
            help="override a config leaf, e.g. --set time_grid.levels=48 (repeatable)",
        )
        sub.add_argument("--seed", type=int, help="study.seed")
        sub.add_argument("--N", type=int, help="grid.N")
        sub.add_argument("--p", type=float, nargs="+", help="study.p")
        sub.add_argument("--output", type=str, help="output.directory")
        if name == "equivalence":
            sub.add_argument("--a", type=str, help="study.a (functional name)")
            sub.add_argument("--b", type=str, help="study.b (functional name)")
        if name == "semigroup-bench":
            sub.add_argument("--oracle", action="store_true", help="compare against the expm oracle")
        if name == "report-merge":
            sub.add_argument("inputs", nargs="*", help="JSON reports to merge (study.inputs)")
    return parser


def overrides_from_args(args: argparse.Namespace) -> List[str]:
    """Las banderas de conveniencia se traducen a asignaciones a.b=valor antes de --set."""
    overrides: List[str] = []
    if args.seed is not None:
        overrides.append(f"study.seed={args.seed}")
    if args.N is not None:
        overrides.append(f"grid.N={args.N}")
    if args.p:
        overrides.append(f"study.p=[{', '.join(repr(p) for p in args.p)}]")
    if args.output:
        overrides.append(f"output.directory={args.output}")
    if getattr(args, "a", None):
        overrides.append(f"study.a={args.a}")
    if getattr(args, "b", None):
        overrides.append(f"study.b={args.b}")
    if getattr(args, "oracle", False):
        overrides.append("study.oracle=true")
    inputs = getattr(args, "inputs", None)
    if inputs:
        overrides.append(f"study.inputs=[{', '.join(repr(i) for i in inputs)}]")
    return overrides + list(args.overrides)


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6g}" if math.isfinite(value) else str(value)
    return str(value)


def format_summary(result: ExperimentResult) -> str:
    """Tabla de una página con el resumen del estudio."""
    report = result.report
    inner = _BOX_WIDTH - 2
    title = f"RESUMEN: {report.study}"
    lines = [
        "╔" + "═" * inner + "╗",
        "║ " + title.ljust(inner - 1) + "║",
        "╠" + "═" * inner + "╣",
    ]
    for key, value in report.summary:
        text = f"{key[:32]:<32} {_format_value(value)}"
        lines.append("║ " + text[:inner - 1].ljust(inner - 1) + "║")
    status = "✓ PASSED" if report.passed else "✗ FAILED"
    lines.append("╠" + "═" * inner + "╣")
    lines.append("║ " + f"{'status':<32} {status}".ljust(inner - 1) + "║")
    for failure in report.failures:
        lines.append("║ " + f"  ✗ {failure}"[:inner - 1].ljust(inner - 1) + "║")
    lines.append("║ " + f"{'reports':<32} {result.output_dir}"[:inner - 1].ljust(inner - 1) + "║")
    lines.append("╚" + "═" * inner + "╝")
    return "\n".join(lines)


class LabController:
    """
    Punto de entrada de la CLI.

    Códigos de salida:
    - 0: estudio completado y todos los invariantes cumplidos
    - 1: algún invariante falló o el estudio lanzó un error de dominio
    - 2: configuración inválida (el mensaje nombra el campo)
    """

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        args = build_parser().parse_args(argv)
        try:
            settings = get_settings()
        except ValidationError as e:
            print(f"configuration error: environment settings: {e}", file=self.stderr)
            return EXIT_USAGE

        configure_structlog(settings.LOG_LEVEL, settings.use_json_logs, settings.LOG_FILE)
        LoggerFactory.set_global_context(environment=settings.ENVIRONMENT)
        logger = LoggerFactory.get_application_logger("lab_controller")

        try:
            result = RunExperimentUseCase(settings).execute(args.config, overrides_from_args(args), study=args.study)
        except ConfigurationError as e:
            print(f"configuration error: {e.field_path}: {e.message}", file=self.stderr)
            return EXIT_USAGE
        except DomainException as e:
            log_error_message(logger, "study_aborted", error=e, study=args.study)
            print(f"{args.study} failed: {e}", file=self.stderr)
            return EXIT_FAILED

        print(format_summary(result), file=self.stdout)
        return EXIT_OK if result.passed else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    return LabController().run(argv)

"""Command-line front end.

    python main.py sweep [--steps N --p-min X --p-max Y --rate R --duration T
                          --seed S --analytic-only --source analytic|patchwork
                          --workers W --out FILE]
    python main.py witness STATE_FILE [--simulate --rate R --duration T --seed S]
    python main.py state werner P | patchwork F [--phase PHI] | singlet | bell PHI [--out FILE]
"""

import argparse
import math
import sys
from pathlib import Path
from typing import List, Optional

from app.config import Settings, get_settings
from app.models import SweepConfig, make_grid, simulation_from_settings
from app.state_document import read_state, serialize_state
from app.sweep import format_number, run_sweep
from core.errors import WitnessToolkitError
from core.polarimeter import measure_witness
from core.qmat import projector
from core.states import SectorPartition, bell_phi, patchwork_pipeline, singlet, werner
from core.witness import concurrence, is_witnessed_entangled
from utils.logging import configure_logging, get_logger

logger = get_logger("cli")

EXIT_INVALID_INPUT = 2


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info("✅ Wrote %s", out)
    else:
        sys.stdout.write(text)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    p_min = settings.p_min if args.p_min is None else args.p_min
    p_max = settings.p_max if args.p_max is None else args.p_max
    steps = settings.steps if args.steps is None else args.steps

    cfg = SweepConfig(
        p_values=make_grid(p_min, p_max, steps),
        simulation=simulation_from_settings(
            settings, rate=args.rate, duration=args.duration, seed=args.seed
        ),
        analytic_only=args.analytic_only,
        source=args.source,
        workers=settings.workers if args.workers is None else args.workers,
    )
    _emit(run_sweep(cfg).to_csv(), args.out)
    return 0


def cmd_witness(args: argparse.Namespace, settings: Settings) -> int:
    rho = read_state(args.state_file)
    verdict = is_witnessed_entangled(rho)

    lines = [
        f"witness_value: {format_number(verdict.witness_value)}",
        f"ppt_min_eigenvalue: {format_number(verdict.ppt_min_eigenvalue)}",
        f"concurrence: {format_number(concurrence(rho))}",
        f"witnessed: {_flag(verdict.witnessed)}",
        f"ppt_entangled: {_flag(verdict.ppt_entangled)}",
    ]

    if args.simulate:
        cfg = simulation_from_settings(
            settings, rate=args.rate, duration=args.duration, seed=args.seed
        )
        records, estimate = measure_witness(rho, cfg)
        for record in records:
            counts = " ".join(str(c) for c in record.counts)
            lines.append(f"counts_{record.setting.basis_a.value}: {counts}")
        lines.append(f"witness_estimate: {format_number(estimate.value)}")
        lines.append(f"witness_std_error: {format_number(estimate.std_error)}")

    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_state(args: argparse.Namespace, settings: Settings) -> int:
    if args.kind == "werner":
        rho = werner(args.p)
    elif args.kind == "patchwork":
        rho = patchwork_pipeline(SectorPartition.for_singlet_weight(args.f), args.phase)
    elif args.kind == "bell":
        rho = projector(bell_phi(args.phi))
    else:
        rho = projector(singlet())
    _emit(serialize_state(rho), args.out)
    return 0


def _add_statistics_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rate", type=float, help="coincidences per second")
    parser.add_argument("--duration", type=float, help="seconds per setting")
    parser.add_argument("--seed", type=int, help="master seed (unsigned 64-bit)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="witness",
        description="Entanglement witness for Werner states of polarized photon pairs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sweep = commands.add_parser("sweep", help="witness versus singlet weight p, as CSV")
    sweep.add_argument("--steps", type=int, help="number of grid points")
    sweep.add_argument("--p-min", type=float, dest="p_min")
    sweep.add_argument("--p-max", type=float, dest="p_max")
    _add_statistics_flags(sweep)
    sweep.add_argument(
        "--analytic-only",
        action="store_true",
        dest="analytic_only",
        help="skip sampling and report the exact line",
    )
    sweep.add_argument("--source", choices=("analytic", "patchwork"), default="analytic")
    sweep.add_argument("--workers", type=int, help="points evaluated concurrently")
    sweep.add_argument("--out", help="write CSV here instead of stdout")
    sweep.set_defaults(handler=cmd_sweep)

    witness = commands.add_parser("witness", help="analyze a state document")
    witness.add_argument("state_file")
    witness.add_argument(
        "--simulate", action="store_true", help="also run the three-setting measurement"
    )
    _add_statistics_flags(witness)
    witness.set_defaults(handler=cmd_witness)

    state = commands.add_parser("state", help="emit a state document")
    kinds = state.add_subparsers(dest="kind", required=True)
    werner_cmd = kinds.add_parser("werner", help="analytic Werner state")
    werner_cmd.add_argument("p", type=float)
    patchwork_cmd = kinds.add_parser("patchwork", help="Werner state from the patchwork source")
    patchwork_cmd.add_argument("f", type=float, help="singlet sector fraction")
    patchwork_cmd.add_argument("--phase", type=float, default=math.pi)
    kinds.add_parser("singlet", help="pure singlet")
    bell_cmd = kinds.add_parser("bell", help="(|HH> + e^{i phi}|VV>)/sqrt(2)")
    bell_cmd.add_argument("phi", type=float)
    for sub in kinds.choices.values():
        sub.add_argument("--out", help="write the document here instead of stdout")
    state.set_defaults(handler=cmd_state)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
        configure_logging(settings.log_level)
        return args.handler(args, settings)
    except WitnessToolkitError as exc:
        configure_logging()
        logger.error("❌ %s", exc)
        return exc.code
    except ValueError as exc:  # includes pydantic ValidationError
        configure_logging()
        logger.error("❌ invalid input: %s", exc)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        configure_logging()
        logger.error("❌ %s", exc)
        return 1

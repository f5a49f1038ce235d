"""Witness-versus-singlet-weight sweep over the Werner family.

For each p: build the state, simulate the three correlated settings,
estimate the witness and compute the partial-transpose spectrum. Points run
concurrently on worker threads, each with its own seed derived from
(seed, point index); rows always come back in input order.
"""

import asyncio
import csv
import io
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from app.models import SweepConfig, SweepRow
from core.errors import SweepPointError, WitnessToolkitError
from core.polarimeter import derive_seed, measure_witness
from core.qmat import DensityMatrix
from core.states import SectorPartition, patchwork_pipeline, werner
from core.witness import ppt_check, witness_analytic_werner
from utils.logging import get_logger

logger = get_logger("sweep")

SWEEP_HEADER = ("p", "w_est", "w_err", "w_analytic", "ppt_min_eig", "entangled_ppt")


def format_number(value: float) -> str:
    return f"{value:.12g}"


class SweepResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[SweepRow]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        for row in self.rows:
            writer.writerow(
                [
                    format_number(row.p),
                    format_number(row.w_est),
                    format_number(row.w_err),
                    format_number(row.w_analytic),
                    format_number(row.ppt_min_eig),
                    "true" if row.entangled_ppt else "false",
                ]
            )
        return buffer.getvalue()

    def transition_interval(self) -> Optional[Tuple[float, float]]:
        """First pair of adjacent points where the analytic witness changes sign."""
        for left, right in zip(self.rows, self.rows[1:]):
            if (left.w_analytic > 0) != (right.w_analytic > 0):
                return left.p, right.p
        return None


def build_state(p: float, source: str) -> DensityMatrix:
    if source == "patchwork":
        return patchwork_pipeline(SectorPartition.for_singlet_weight(p))
    return werner(p)


def evaluate_point(index: int, p: float, cfg: SweepConfig) -> SweepRow:
    try:
        rho = build_state(p, cfg.source)
        w_analytic = witness_analytic_werner(p)
        ppt = ppt_check(rho)

        if cfg.analytic_only:
            w_est, w_err = w_analytic, 0.0
        else:
            seed = derive_seed(cfg.simulation.seed, index)
            point_cfg = cfg.simulation.model_copy(update={"seed": seed})
            _, estimate = measure_witness(rho, point_cfg)
            w_est, w_err = estimate.value, estimate.std_error
    except (WitnessToolkitError, ValueError) as exc:
        raise SweepPointError(p, exc) from exc

    logger.debug("point %d p=%.4f w_est=%.6f ± %.6f", index, p, w_est, w_err)
    return SweepRow(
        p=p,
        w_est=w_est,
        w_err=w_err,
        w_analytic=w_analytic,
        ppt_min_eig=ppt.min_eigenvalue,
        entangled_ppt=ppt.entangled,
    )


async def evaluate_sweep(cfg: SweepConfig) -> List[SweepRow]:
    semaphore = asyncio.Semaphore(cfg.workers)

    async def run_point(index: int, p: float) -> SweepRow:
        async with semaphore:
            return await asyncio.to_thread(evaluate_point, index, p, cfg)

    rows = await asyncio.gather(*(run_point(i, p) for i, p in enumerate(cfg.p_values)))
    return list(rows)


def run_sweep(cfg: SweepConfig) -> SweepResult:
    mode = "analytic line" if cfg.analytic_only else f"seed {cfg.simulation.seed}"
    logger.info("🔍 Sweeping %d points (%s, %s source)", len(cfg.p_values), mode, cfg.source)

    result = SweepResult(rows=asyncio.run(evaluate_sweep(cfg)))

    interval = result.transition_interval()
    if interval:
        logger.info("✅ Sweep done; witness changes sign between p=%.4g and p=%.4g", *interval)
    else:
        logger.info("✅ Sweep done; no sign change of the witness on this grid")
    return result

"""
Growth functions of finitely generated groups and their classification.
"""
import math
from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field

import config
from groups.ball import ShellTable, ball_enumerate
from groups.elements import GeneratingSet
from groups.kinds import GroupSpec
from utils.logger import get_logger

logger = get_logger("growth")

MIN_SHELLS = 6


class GrowthModel(str, Enum):
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"
    UNDETERMINED = "undetermined"


class GrowthReport(BaseModel):
    """
    Shell and ball sizes up to a radius, with the fitted growth model.

    The model fields stay at their defaults until growth_classify fills them.
    Residuals are root mean square deviations in log space and are always
    reported, also for the model that lost.
    """
    group: str
    generators: int
    radius: int
    requested_radius: int
    truncated: bool = False
    sphere_sizes: List[int]
    ball_sizes: List[int]
    model: GrowthModel = GrowthModel.UNDETERMINED
    degree: Optional[int] = None
    leading_coefficient: Optional[float] = None
    rate: Optional[float] = None
    polynomial_slope: Optional[float] = None
    polynomial_residual: Optional[float] = None
    exponential_residual: Optional[float] = None
    fit_window: List[int] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    def rows(self) -> List[dict]:
        """One row per shell: n, |S_n|, |B_n|."""
        return [{"n": n, "shell_size": s, "ball_size": b}
                for n, (s, b) in enumerate(zip(self.sphere_sizes, self.ball_sizes))]


def growth_report(table: ShellTable) -> GrowthReport:
    """Sizes of an existing ball enumeration as a GrowthReport."""
    return GrowthReport(
        group=table.group.spec,
        generators=len(table.generators),
        radius=table.radius,
        requested_radius=table.requested_radius,
        truncated=table.truncated,
        sphere_sizes=table.sphere_sizes,
        ball_sizes=table.ball_sizes,
    )


def growth_table(group: GroupSpec, generators: Optional[GeneratingSet], radius: int,
                 cap: Optional[int] = None) -> GrowthReport:
    """
    Exact |S_n| and |B_n| for n = 0..R.

    Args:
        group (GroupSpec): A discrete group
        generators (GeneratingSet): Generating set, the standard one when None
        radius (int): R
        cap (int): Ball size cap, config.BALL_CAP by default

    Returns:
        GrowthReport: Sizes only; truncation is flagged
    """
    report = growth_report(ball_enumerate(group, generators, radius, cap))
    if report.truncated:
        report.notes.append(f"ball cap reached, sizes complete up to radius {report.radius}")
    return report


def _rms(residuals: np.ndarray) -> float:
    return float(np.sqrt(np.mean(residuals ** 2)))


def growth_classify(report: GrowthReport, threshold: Optional[float] = None) -> GrowthReport:
    """
    Fit polynomial and exponential growth to the ball sizes.

    Both fits use the shells n in [R/2, R]: log|B_n| against log n for
    polynomial growth, against n for exponential growth. The model with the
    smaller residual wins; the polynomial degree is the fitted slope rounded
    to the nearest integer. When both residuals exceed the threshold the
    model is undetermined.

    Args:
        report (GrowthReport): Output of growth_table
        threshold (float): Largest accepted residual, config.GROWTH_RESIDUAL by default

    Returns:
        GrowthReport: A copy with the model fields filled in
    """
    threshold = config.GROWTH_RESIDUAL if threshold is None else threshold
    if len(report.ball_sizes) < MIN_SHELLS:
        logger.warning(f"Only {len(report.ball_sizes)} shells for {report.group}; growth undetermined")
        return report.model_copy(update={
            "model": GrowthModel.UNDETERMINED,
            "notes": report.notes + [f"need at least {MIN_SHELLS} shells, got {len(report.ball_sizes)}"],
        })

    radius = report.radius
    n = np.arange(max(1, radius // 2), radius + 1, dtype=float)
    log_ball = np.log(np.asarray(report.ball_sizes, dtype=float)[n.astype(int)])
    log_n = np.log(n)

    slope, intercept = np.polyfit(log_n, log_ball, 1)
    poly_residual = _rms(log_ball - (slope * log_n + intercept))
    rate, offset = np.polyfit(n, log_ball, 1)
    exp_residual = _rms(log_ball - (rate * n + offset))

    update = {
        "polynomial_slope": float(slope),
        "polynomial_residual": poly_residual,
        "exponential_residual": exp_residual,
        "rate": float(rate),
        "fit_window": [int(n[0]), int(n[-1])],
    }
    if min(poly_residual, exp_residual) > threshold:
        logger.warning(f"Neither growth model fits {report.group} (residuals {poly_residual:.3g}, {exp_residual:.3g})")
        update["model"] = GrowthModel.UNDETERMINED
        update["notes"] = report.notes + [f"both residuals exceed {threshold}"]
        return report.model_copy(update=update)

    if poly_residual <= exp_residual:
        degree = int(round(slope))
        update["model"] = GrowthModel.POLYNOMIAL
        update["degree"] = degree
        update["leading_coefficient"] = float(math.exp(np.mean(log_ball - degree * log_n)))
    else:
        update["model"] = GrowthModel.EXPONENTIAL
    logger.info(f"{report.group}: {update['model'].value} growth "
                f"(degree {update.get('degree')}, rate {rate:.6g})")
    return report.model_copy(update=update)

"""Parameter estimation and the unit transformation that fixes critical values.

Two estimators are provided: maximum likelihood and an adjusted
moment-matching estimator (first moment plus expected sample minimum; with a
known scale only the first moment is matched).  For maximum likelihood the
power transform y = (x / sigma_hat)^beta_hat pins the refitted parameters at
(1, 1) exactly, which is what makes Monte-Carlo critical values independent
of the true parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distributions import ParetoParams
from .errors import (
    ContractViolationError,
    DegenerateSampleError,
    SupportViolationError,
)

__all__ = [
    "Sample",
    "FitResult",
    "as_sample",
    "fit_mle",
    "fit_mme",
    "transform_unit",
    "transform_half",
    "clamp_minimum",
]

MLE = "mle"
MME = "mme"

# below this, sum(log(x/sigma)) is treated as a degenerate (all-equal) sample
_DEGENERATE_TOL = 1e-12


class Sample:
    """A nonempty batch of positive observations with cached order statistics."""

    __slots__ = ("values", "sorted")

    def __init__(self, values):
        arr = np.atleast_1d(np.asarray(values, dtype=float))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a sample must be a nonempty 1-d collection")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
            raise ValueError("all observations must be finite and positive")
        self.values = arr
        self.sorted = np.sort(arr)

    def __len__(self):
        return self.values.size

    def __repr__(self):
        return f"Sample(n={len(self)}, min={self.sorted[0]:g}, max={self.sorted[-1]:g})"


def as_sample(values) -> Sample:
    return values if isinstance(values, Sample) else Sample(values)


@dataclass(frozen=True)
class FitResult:
    """Fitted Pareto parameters plus how they were obtained."""

    params: ParetoParams
    estimator: str
    sigma_known: bool

    @property
    def beta(self) -> float:
        return self.params.beta

    @property
    def sigma(self) -> float:
        return self.params.sigma


def fit_mle(sample, known_sigma: float | None = None) -> FitResult:
    """Maximum likelihood fit: sigma_hat = X_(1) (or the known value),
    beta_hat = n / sum(log(X_j / sigma_hat))."""
    s = as_sample(sample)
    beta, sigma = _mle_arrays(s.sorted[None, :], known_sigma)
    return FitResult(ParetoParams(float(beta[0]), float(sigma[0])), MLE, known_sigma is not None)


def fit_mme(sample, known_sigma: float | None = None) -> FitResult:
    """Adjusted moment-matching fit.

    With both parameters free, the first sample moment and the observed
    minimum are matched, giving beta = (n*xbar - x_min) / (n*(xbar - x_min))
    and sigma = xbar*(beta - 1)/beta.  With a known sigma only the mean
    equation remains and beta = xbar / (xbar - sigma).
    """
    s = as_sample(sample)
    if len(s) < 2:
        raise DegenerateSampleError("moment fit needs at least two observations")
    beta, sigma = _mme_arrays(s.sorted[None, :], known_sigma)
    if not np.isfinite(beta[0]):
        raise DegenerateSampleError("sample mean equals the sample minimum")
    return FitResult(ParetoParams(float(beta[0]), float(sigma[0])), MME, known_sigma is not None)


def transform_unit(sample, fit: FitResult) -> Sample:
    """Map x -> (x / sigma_hat)^beta_hat; refitting by MLE then yields (1, 1)."""
    s = as_sample(sample)
    _require_mle(fit)
    return Sample((s.values / fit.sigma) ** fit.beta)


def transform_half(sample, fit: FitResult) -> Sample:
    """Map x -> (x / sigma_hat)^(beta_hat / 2), so the refitted shape is 2 and
    the fitted law has a finite mean."""
    s = as_sample(sample)
    _require_mle(fit)
    return Sample((s.values / fit.sigma) ** (0.5 * fit.beta))


def clamp_minimum(sample, floor: float = 1.0001) -> Sample:
    """Replace the unit-transform minimum (the single entry equal to 1) by
    `floor`, leaving every other entry untouched.

    Samples without an exact 1 are returned unchanged, so the operation is
    idempotent.
    """
    s = as_sample(sample)
    hits = np.flatnonzero(s.values == 1.0)
    if hits.size == 0:
        return s
    out = s.values.copy()
    out[hits[0]] = floor
    return Sample(out)


def _require_mle(fit: FitResult) -> None:
    if fit.estimator != MLE:
        raise ContractViolationError(
            "the unit transformation is only valid for maximum likelihood fits"
        )


# ---------------------------------------------------------------------------
# Row-wise fitting on (R, n) matrices of sorted samples.  These back both the
# scalar API above and the Monte-Carlo engines; degenerate rows come back as
# NaN so replication loops can redraw instead of aborting.
# ---------------------------------------------------------------------------


def _mle_arrays(x_sorted, known_sigma=None, raise_on_error=True):
    n = x_sorted.shape[1]
    if known_sigma is not None:
        sigma = np.full(x_sorted.shape[0], float(known_sigma))
        if np.any(x_sorted[:, 0] < known_sigma):
            if raise_on_error:
                raise SupportViolationError(
                    f"observations below the known scale {known_sigma}"
                )
            sigma = np.where(x_sorted[:, 0] < known_sigma, np.nan, sigma)
    else:
        if n < 2 and raise_on_error:
            raise DegenerateSampleError(
                "estimating sigma consumes the minimum; need n >= 2"
            )
        sigma = x_sorted[:, 0]
    logsum = np.sum(np.log(x_sorted), axis=1) - n * np.log(sigma)
    bad = ~(logsum > _DEGENERATE_TOL)
    if np.any(bad) and raise_on_error:
        raise DegenerateSampleError("all observations are (numerically) equal")
    with np.errstate(divide="ignore", invalid="ignore"):
        beta = np.where(bad, np.nan, n / logsum)
    return beta, sigma


def _mme_arrays(x_sorted, known_sigma=None):
    n = x_sorted.shape[1]
    xbar = np.mean(x_sorted, axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        if known_sigma is not None:
            denom = xbar - known_sigma
            beta = np.where(denom > 0, xbar / denom, np.nan)
            sigma = np.full_like(beta, float(known_sigma))
        else:
            xmin = x_sorted[:, 0]
            denom = xbar - xmin
            beta = np.where(denom > 0, (n * xbar - xmin) / (n * denom), np.nan)
            sigma = xbar * (beta - 1.0) / beta
    return beta, sigma

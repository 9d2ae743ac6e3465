"""Critical values: fixed Monte-Carlo quantiles under maximum likelihood,
parametric bootstrap under moment matching, and the warp-speed shortcut for
power studies.

The replication engine is chunked: chunk i always draws from the
counter-based stream (seed, tag, i), so results are bit-identical no matter
how many worker threads execute the chunks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .distributions import AlternativeSpec, ParetoParams, pareto_sample, rng_from_seed
from .errors import DegenerateSampleError, InsufficientResolutionError
from .estimation import MLE, MME, _mle_arrays, _mme_arrays, as_sample
from .statistics import TestId, batch_evaluate, parse_tests

__all__ = [
    "CriticalValueTable",
    "simulate_null",
    "mc_fixed_cv",
    "fixed_cv_table",
    "bootstrap_cv",
    "bootstrap_statistics",
    "warp_speed_power",
    "warp_speed_powers",
    "empirical_quantile",
]

_CHUNK = 4096
_MAX_REDRAWS = 10

# stream tags keep the independent randomness sources of one run disjoint
_TAG_NULL = 1
_TAG_BOOT = 2
_TAG_WARP = 3


def empirical_quantile(values: np.ndarray, alpha: float) -> float:
    """Upper-tail critical value: the ceil(R*(1-alpha))-th order statistic."""
    v = np.sort(np.asarray(values))
    k = math.ceil(v.size * (1.0 - alpha))
    return float(v[max(k, 1) - 1])


def scenario_tag(estimator: str, n_params: int) -> str:
    return f"{estimator}{n_params}"


@dataclass
class CriticalValueTable:
    """Critical values keyed by (test id, n, alpha, estimator scenario)."""

    entries: dict = field(default_factory=dict)
    reps: int = 0
    seed: int = 0

    def put(self, test, n, alpha, scenario, cv):
        self.entries[(str(test), int(n), float(alpha), scenario)] = float(cv)

    def get(self, test, n, alpha, scenario) -> float:
        return self.entries[(str(test), int(n), float(alpha), scenario)]

    def to_csv(self, path):
        with open(path, "w") as fh:
            fh.write("# paretogof cv-table v1\n")
            fh.write("test,n,alpha,estimator,cv,reps,seed\n")
            for (test, n, alpha, scen), cv in sorted(self.entries.items()):
                fh.write(f"{test},{n},{alpha:g},{scen},{cv!r},{self.reps},{self.seed}\n")

    @classmethod
    def from_csv(cls, path) -> "CriticalValueTable":
        table = cls()
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#") or line.startswith("test,"):
                    continue
                test, n, alpha, scen, cv, reps, seed = line.split(",")
                table.put(test, int(n), float(alpha), scen, float(cv))
                table.reps, table.seed = int(reps), int(seed)
        return table


def _run_chunks(reps: int, seed: int, tag: int, worker, threads: int = 1) -> np.ndarray:
    """Evaluate `worker(rng, count) -> (count, k)` over fixed-size chunks."""
    bounds = [(i, min(_CHUNK, reps - i * _CHUNK)) for i in range((reps + _CHUNK - 1) // _CHUNK)]

    def run(item):
        idx, count = item
        return worker(rng_from_seed(seed, tag, idx), count)

    if threads and threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(b) for b in bounds]
    return np.vstack(parts)


def _redraw_until_finite(draw, evaluate, rng, count):
    """Draw a chunk, re-drawing rows whose statistics come out nonfinite."""
    x = draw(rng, count)
    vals = evaluate(x)
    bad = ~np.all(np.isfinite(vals), axis=1)
    redraws = 0
    attempts = 0
    while np.any(bad):
        attempts += 1
        if attempts > _MAX_REDRAWS:
            raise DegenerateSampleError("replications kept producing degenerate samples")
        redraws += int(bad.sum())
        x[bad] = draw(rng, int(bad.sum()))
        vals[bad] = evaluate(x[bad])
        bad = ~np.all(np.isfinite(vals), axis=1)
    return x, vals, redraws


def simulate_null(tests, n: int, reps: int, seed: int, n_params: int = 2,
                  threads: int = 1) -> np.ndarray:
    """Null statistic values under the maximum-likelihood pipeline.

    Unit-Pareto samples are enough: the transformed statistics have the same
    law under every (beta, sigma).
    """
    tests = parse_tests(tests)
    known = 1.0 if n_params == 1 else None
    null = ParetoParams(1.0, 1.0)

    def worker(rng, count):
        _, vals, _ = _redraw_until_finite(
            lambda r, c: pareto_sample(null, (c, n), r),
            lambda x: batch_evaluate(tests, x, MLE, known, on_error="nan"),
            rng, count,
        )
        return vals

    return _run_chunks(reps, seed, _TAG_NULL, worker, threads)


def mc_fixed_cv(test, n: int, alpha: float, reps: int, seed: int,
                n_params: int = 2, threads: int = 1) -> float:
    """Fixed critical value for one test from a fresh null simulation."""
    _check_resolution(reps, alpha)
    stats = simulate_null([test], n, reps, seed, n_params, threads)
    return empirical_quantile(stats[:, 0], alpha)


def fixed_cv_table(tests, n: int, alphas, reps: int, seed: int, n_params: int = 2,
                   threads: int = 1) -> CriticalValueTable:
    """One null simulation shared across tests and levels."""
    tests = parse_tests(tests)
    alphas = [alphas] if np.isscalar(alphas) else list(alphas)
    for alpha in alphas:
        _check_resolution(reps, alpha)
    stats = simulate_null(tests, n, reps, seed, n_params, threads)
    table = CriticalValueTable(reps=reps, seed=seed)
    scen = scenario_tag(MLE, n_params)
    for col, test in enumerate(tests):
        for alpha in alphas:
            table.put(test.id, n, alpha, scen, empirical_quantile(stats[:, col], alpha))
    return table


def _check_resolution(reps: int, alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    if reps * min(alpha, 1.0 - alpha) < 5:
        raise InsufficientResolutionError(
            f"{reps} replications cannot resolve the {alpha:g} tail"
        )


def _fit_arrays(x_sorted, estimator, known_sigma):
    if estimator == MLE:
        return _mle_arrays(x_sorted, known_sigma, raise_on_error=False)
    if estimator == MME:
        return _mme_arrays(x_sorted, known_sigma)
    raise ValueError(f"unknown estimator {estimator!r}")


def _resample(beta, sigma, n, rng):
    u = rng.random((beta.size, n))
    return sigma[:, None] * (1.0 - u) ** (-1.0 / beta[:, None])


def bootstrap_statistics(tests, sample, estimator: str, B: int, seed: int,
                         known_sigma: float | None = None, threads: int = 1) -> np.ndarray:
    """Parametric-bootstrap statistic values: fit the sample, resample from
    the fitted law B times, refit and re-evaluate each resample."""
    tests = parse_tests(tests)
    s = as_sample(sample)
    n = len(s)
    beta, sigma = _fit_arrays(s.sorted[None, :], estimator, known_sigma)
    if not np.isfinite(beta[0]):
        raise DegenerateSampleError("cannot fit the observed sample")
    b0, s0 = np.array([beta[0]]), np.array([sigma[0]])

    def worker(rng, count):
        _, vals, _ = _redraw_until_finite(
            lambda r, c: _resample(np.repeat(b0, c), np.repeat(s0, c), n, r),
            lambda x: batch_evaluate(tests, x, estimator, known_sigma, on_error="nan"),
            rng, count,
        )
        return vals

    return _run_chunks(B, seed, _TAG_BOOT, worker, threads)


def bootstrap_cv(test, sample, estimator: str, alpha: float, B: int, seed: int,
                 known_sigma: float | None = None, threads: int = 1) -> float:
    """Five-step parametric bootstrap critical value, S*_(floor(B(1-alpha)))."""
    if B < 1:
        raise ValueError("B must be >= 1")
    stats = np.sort(bootstrap_statistics([test], sample, estimator, B, seed,
                                         known_sigma, threads)[:, 0])
    k = math.floor(B * (1.0 - alpha))
    return float(stats[max(k, 1) - 1])


def warp_speed_powers(tests, alt: AlternativeSpec, n: int, alpha: float,
                      estimator: str, reps: int, seed: int,
                      known_sigma: float | None = None, threads: int = 1):
    """Warp-speed rejection fractions for several tests sharing replications.

    Each replication draws one sample from the alternative and a single
    parametric bootstrap resample from the fitted null; the critical value is
    the upper quantile of the pooled resample statistics.

    Returns (powers, redraw_count).
    """
    tests = parse_tests(tests)
    _check_resolution(reps, alpha)
    k = len(tests)
    redraws = np.zeros(1, dtype=np.int64)

    def worker(rng, count):
        x, vals, nred = _redraw_until_finite(
            lambda r, c: alt.sample((c, n), r),
            lambda d: batch_evaluate(tests, d, estimator, known_sigma, on_error="nan"),
            rng, count,
        )
        beta, sigma = _fit_arrays(np.sort(x, axis=1), estimator, known_sigma)
        star = batch_evaluate(tests, _resample(beta, sigma, n, rng), estimator,
                              known_sigma, on_error="nan")
        bad = ~np.all(np.isfinite(star), axis=1)
        attempts = 0
        while np.any(bad):
            attempts += 1
            if attempts > _MAX_REDRAWS:
                raise DegenerateSampleError("bootstrap resamples kept degenerating")
            redraws[0] += int(bad.sum())
            fresh = _resample(beta[bad], sigma[bad], n, rng)
            star[bad] = batch_evaluate(tests, fresh, estimator, known_sigma, on_error="nan")
            bad = ~np.all(np.isfinite(star), axis=1)
        redraws[0] += nred
        return np.hstack([vals, star])

    both = _run_chunks(reps, seed, _TAG_WARP, worker, threads)
    vals, star = both[:, :k], both[:, k:]
    cvs = np.array([empirical_quantile(star[:, j], alpha) for j in range(k)])
    powers = np.mean(vals > cvs[None, :], axis=0)
    return powers, int(redraws[0])


def warp_speed_power(test, alt: AlternativeSpec, n: int, alpha: float,
                     estimator: str, reps: int, seed: int,
                     known_sigma: float | None = None, threads: int = 1) -> float:
    """Warp-speed rejection fraction for a single test."""
    powers, _ = warp_speed_powers([test], alt, n, alpha, estimator, reps, seed,
                                  known_sigma, threads)
    return float(powers[0])

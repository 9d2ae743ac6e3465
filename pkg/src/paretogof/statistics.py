"""Goodness-of-fit statistics for the Pareto type I null hypothesis.

Every statistic follows the convention "larger value => stronger evidence
against the null"; the inequality-curve slope works through its absolute
value and is returned as such.

Two evaluation pipelines are exposed through :func:`evaluate_test` /
:func:`batch_evaluate`:

* maximum likelihood: the data are power-transformed so the refitted
  parameters are exactly (1, 1); the boundary-sensitive statistics (ad, za,
  zb, zc) see the transformed minimum nudged from 1 to 1.0001.  All
  statistics evaluated this way have parameter-free null distributions.
* moment matching: statistics are computed on the raw data with the fitted
  parameters plugged in; critical values then require a bootstrap.

Statistics that use no fitted parameters (the characterization family) are
always routed through the maximum-likelihood transform.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .distributions import pareto_pdf
from .errors import (
    BandwidthError,
    DegenerateSpacingError,
    NonfiniteStatisticError,
    WeightSingularityError,
)
from .estimation import (
    MLE,
    MME,
    FitResult,
    _mle_arrays,
    _mme_arrays,
    as_sample,
)

__all__ = [
    "TestKind",
    "TestId",
    "RejectionSide",
    "StatisticValue",
    "suite_19",
    "parse_tests",
    "evaluate_test",
    "batch_evaluate",
    "edf_statistic",
    "zhang_statistic",
    "entropy_statistic",
    "phi_divergence_statistic",
    "ecf_statistic",
    "mellin_statistic",
    "inequality_slope_statistic",
    "char_ratio_statistics",
    "char_min_statistics",
    "char_rossberg_statistics",
    "char_order_statistics",
]

CLAMP_FLOOR = 1.0001
_F_EPS = 1e-15  # fitted-cdf values are clipped into [eps, 1 - eps] for logs


class TestKind(Enum):
    KS = "ks"
    CM = "cm"
    AD = "ad"
    MA = "ma"
    ZA = "za"
    ZB = "zb"
    ZC = "zc"
    KL = "kl"
    HD = "hd"
    DK = "dk"
    DH = "dh"
    DJ = "dj"
    DT = "dt"
    ECF = "s"
    MELLIN = "g"
    SLOPE = "tslope"
    RATIO_T = "t"
    RATIO_V = "v"
    MIN_I = "i"
    MIN_K = "k"
    MIN_M = "m"
    ROSSBERG_I = "i1char"
    ROSSBERG_D = "d1char"
    ORDER_I = "i2char"
    ORDER_D = "d2char"


class RejectionSide(Enum):
    UPPER = "upper"
    ABS_UPPER = "abs_upper"


_WINDOWED = {TestKind.KL, TestKind.HD}
_MIN_FAMILY = {TestKind.MIN_I, TestKind.MIN_K, TestKind.MIN_M}
_TUNED = {TestKind.ECF, TestKind.MELLIN}
_NO_FIT = {
    TestKind.RATIO_T,
    TestKind.RATIO_V,
    TestKind.MIN_I,
    TestKind.MIN_K,
    TestKind.MIN_M,
    TestKind.ROSSBERG_I,
    TestKind.ROSSBERG_D,
    TestKind.ORDER_I,
    TestKind.ORDER_D,
}
# statistics whose logs blow up at a transformed minimum of exactly 1
_CLAMPED = {TestKind.AD, TestKind.ZA, TestKind.ZB, TestKind.ZC}


@dataclass(frozen=True)
class TestId:
    """One concrete test: a statistic kind plus its tuning parameters."""

    kind: TestKind
    m: int | None = None
    a: float | None = None

    def __post_init__(self):
        if self.kind in _WINDOWED:
            if self.m is None or self.m < 1:
                raise ValueError(f"{self.kind.value} needs a window m >= 1")
        elif self.kind in _MIN_FAMILY:
            if self.m is None or self.m < 2:
                raise ValueError(f"{self.kind.value} needs an order m >= 2")
        elif self.m is not None:
            raise ValueError(f"{self.kind.value} takes no window parameter")
        if self.kind in _TUNED:
            if self.a is None or not self.a > 0:
                raise ValueError(f"{self.kind.value} needs a tuning a > 0")
        elif self.a is not None:
            raise ValueError(f"{self.kind.value} takes no tuning parameter")

    @property
    def needs_fit(self) -> bool:
        return self.kind not in _NO_FIT

    @property
    def rejection_side(self) -> RejectionSide:
        return RejectionSide.ABS_UPPER if self.kind is TestKind.SLOPE else RejectionSide.UPPER

    @property
    def id(self) -> str:
        if self.kind in _WINDOWED or self.kind in _MIN_FAMILY:
            return f"{self.kind.value}{self.m}"
        if self.kind in _TUNED:
            return f"{self.kind.value}{_format_tuning(self.a)}"
        return self.kind.value

    def __str__(self):
        return self.id

    @classmethod
    def parse(cls, text: str) -> "TestId":
        token = text.strip().lower()
        fixed = {k.value: k for k in TestKind if k not in _WINDOWED | _MIN_FAMILY | _TUNED}
        if token in fixed:
            return cls(fixed[token])
        mt = re.fullmatch(r"(kl|hd|i|k|m)(\d+)", token)
        if mt:
            kind = {"kl": TestKind.KL, "hd": TestKind.HD, "i": TestKind.MIN_I,
                    "k": TestKind.MIN_K, "m": TestKind.MIN_M}[mt.group(1)]
            return cls(kind, m=int(mt.group(2)))
        at = re.fullmatch(r"(s|g)([0-9.]+)", token)
        if at:
            kind = TestKind.ECF if at.group(1) == "s" else TestKind.MELLIN
            return cls(kind, a=_parse_tuning(at.group(2)))
        raise ValueError(f"unknown test identifier {text!r}")


def _format_tuning(a: float) -> str:
    if a < 1:  # 0.5 -> "05": sub-unit tunings keep their leading zero
        return "0" + f"{a:g}"[2:]
    return f"{a:g}".replace(".", "")


def _parse_tuning(token: str) -> float:
    if token.startswith("0") and len(token) > 1 and "." not in token:
        return float("0." + token[1:])
    return float(token)


def suite_19() -> list[TestId]:
    """The nineteen-test battery reported in the power tables, in column order."""
    return parse_tests("ks,cm,ad,ma,za,zb,zc,kl1,kl10,dk,s05,s1,g05,g2,t,i2,i3,i1char,i2char")


def parse_tests(text) -> list[TestId]:
    """Parse a comma-separated id list; 'all' expands to the 19-test suite."""
    if isinstance(text, str):
        if text.strip().lower() == "all":
            return suite_19()
        items = [p for p in text.split(",") if p.strip()]
    else:
        items = list(text)
    return [t if isinstance(t, TestId) else TestId.parse(t) for t in items]


@dataclass(frozen=True)
class StatisticValue:
    value: float
    rejection_side: RejectionSide = RejectionSide.UPPER


# ---------------------------------------------------------------------------
# Statistic cores on (R, n) matrices.  `u` always means fitted-cdf values at
# the sorted observations; `x` means sorted observations.
# ---------------------------------------------------------------------------


def _ranks(n):
    return np.arange(1, n + 1, dtype=float)


def _clip_u(u):
    return np.clip(u, _F_EPS, 1.0 - _F_EPS)


def _stat_ks(u):
    j = _ranks(u.shape[1])
    n = u.shape[1]
    return np.maximum((j / n - u).max(axis=1), (u - (j - 1) / n).max(axis=1))


def _stat_cm(u):
    n = u.shape[1]
    j = _ranks(n)
    return 1.0 / (12.0 * n) + np.sum((u - (2 * j - 1) / (2 * n)) ** 2, axis=1)


def _stat_ad(u):
    n = u.shape[1]
    j = _ranks(n)
    uc = _clip_u(u)
    inner = (2 * j - 1) * (np.log(uc) + np.log1p(-uc[:, ::-1]))
    return -n - np.sum(inner, axis=1) / n


def _stat_ma(u):
    n = u.shape[1]
    j = _ranks(n)
    uc = _clip_u(u)
    return n / 2.0 - 2.0 * np.sum(u, axis=1) - np.sum((2.0 - (2 * j - 1) / n) * np.log1p(-uc), axis=1)


def _stat_za(u):
    n = u.shape[1]
    j = _ranks(n)
    uc = _clip_u(u)
    return -np.sum(np.log(uc) / (n - j + 0.5) + np.log1p(-uc) / (j - 0.5), axis=1)


def _stat_zb(u):
    n = u.shape[1]
    j = _ranks(n)
    uc = _clip_u(u)
    return np.sum(np.log((1.0 / uc - 1.0) / ((n - 0.5) / (j - 0.75) - 1.0)) ** 2, axis=1)


def _stat_zc(u):
    n = u.shape[1]
    j = _ranks(n)
    uc = _clip_u(u)
    t1 = n * (j - 0.5) / (n - j + 0.5) ** 2 * np.log((j - 0.5) / (n * uc))
    t2 = n / (n - j + 0.5) * np.log((n - j + 0.5) / (n * (1.0 - uc)))
    return 2.0 * np.sum(t1 + t2, axis=1)


def _spacings(x, m):
    n = x.shape[1]
    hi = np.minimum(np.arange(n) + m, n - 1)
    lo = np.maximum(np.arange(n) - m, 0)
    return x[:, hi] - x[:, lo]


def _vasicek_entropy(x, m, raise_on_ties=True):
    n = x.shape[1]
    d = _spacings(x, m)
    bad = d <= 0.0
    if np.any(bad):
        if raise_on_ties:
            raise DegenerateSpacingError("tied order statistics give a zero spacing")
        d = np.where(bad, np.nan, d)
    return np.mean(np.log(n / (2.0 * m) * d), axis=1)


def _stat_kl(x, beta, sigma, m, raise_on_ties=True):
    h = _vasicek_entropy(x, m, raise_on_ties)
    return -h - np.log(beta) - beta * np.log(sigma) + (beta + 1.0) * np.mean(np.log(x), axis=1)


def _stat_hd(x, beta, sigma, m, raise_on_ties=True):
    n = x.shape[1]
    slope = n / (2.0 * m) * _spacings(x, m)
    bad = slope <= 0.0
    if np.any(bad):
        if raise_on_ties:
            raise DegenerateSpacingError("tied order statistics give a zero spacing")
        slope = np.where(bad, np.nan, slope)
    dens = _pdf_rows(x, beta, sigma)
    num = (slope**-0.5 - np.sqrt(dens)) ** 2
    return np.sum(num / (1.0 / slope), axis=1) / (2.0 * n)


def _pdf_rows(x, beta, sigma):
    b = beta[:, None]
    s = sigma[:, None]
    return np.where(x >= s, b * (s / x) ** b / x, 0.0)


def _silverman_bandwidth(x, raise_on_error=True):
    n = x.shape[1]
    s = np.std(x, axis=1, ddof=1)
    if np.any(s <= 0.0) and raise_on_error:
        raise BandwidthError("zero sample variance; no kernel bandwidth")
    with np.errstate(invalid="ignore"):
        return np.where(s > 0, 1.06 * s * n ** (-0.2), np.nan)


def _kde_at_points(x, h):
    z = (x[:, :, None] - x[:, None, :]) / h[:, None, None]
    return np.mean(np.exp(-0.5 * z * z), axis=2) / (h[:, None] * math.sqrt(2.0 * math.pi))


def _phi_ratio(x, beta, sigma, bandwidth=None, raise_on_error=True):
    if bandwidth is None:
        h = _silverman_bandwidth(x, raise_on_error)
    else:
        h = np.full(x.shape[0], float(bandwidth))
    return _kde_at_points(x, h) / _pdf_rows(x, beta, sigma)


def _phi_stat(kind, r):
    with np.errstate(invalid="ignore", divide="ignore"):
        if kind is TestKind.DK:
            return np.mean(np.log(r), axis=1)
        if kind is TestKind.DH:
            return np.mean((1.0 - np.sqrt(r)) ** 2 / r, axis=1) / 2.0
        if kind is TestKind.DJ:
            return np.mean((1.0 - 1.0 / r) * np.log(r), axis=1)
        if kind is TestKind.DT:
            return np.mean(np.abs(r - 1.0) / r, axis=1)
    raise ValueError(f"not a phi-divergence kind: {kind}")


def _stat_ecf(u, a):
    n = u.shape[1]
    du = u[:, :, None] - u[:, None, :]
    t1 = np.sum(2.0 * a / (du * du + a * a), axis=(1, 2)) / n
    t2 = 2.0 * n * (2.0 * math.atan(1.0 / a) - a * math.log1p(1.0 / (a * a)))
    t3 = -4.0 * np.sum(np.arctan(u / a) + np.arctan((1.0 - u) / a), axis=1)
    return t1 + t2 + t3


def _stat_mellin(x, beta, sigma, a, raise_on_error=True):
    n = x.shape[1]
    logw = np.log(x) - np.log(sigma)[:, None]
    cpair = a + logw[:, :, None] + logw[:, None, :]
    if np.any(cpair <= 0.0):
        if raise_on_error:
            raise WeightSingularityError(
                "weight integral diverges: a + log(x_j x_k) <= 0 for some pair"
            )
        cpair = np.where(cpair <= 0.0, np.nan, cpair)
    s0 = np.sum(1.0 / cpair, axis=(1, 2))
    s1 = np.sum((1.0 - cpair) / cpair**2, axis=(1, 2))
    s2 = np.sum((2.0 - 2.0 * cpair + cpair**2) / cpair**3, axis=(1, 2))
    c1 = a + logw
    t0 = np.sum(1.0 / c1, axis=1)
    t1 = np.sum((1.0 - c1) / c1**2, axis=1)
    b = beta
    quad = ((b + 1.0) ** 2 * s0 + s2 + 2.0 * (b + 1.0) * s1) / n
    return quad + b * (n * b / a - 2.0 * (b + 1.0) * t0 - 2.0 * t1)


def _stat_slope(x):
    n = x.shape[1]
    m = n - math.isqrt(n)
    if m < 2:
        raise ValueError("inequality-curve slope needs n >= 4")
    total = np.sum(x, axis=1, keepdims=True)
    lorenz = np.cumsum(x, axis=1)[:, :m] / total
    p = _ranks(m) / n
    lam = 1.0 - np.log1p(-lorenz) / np.log1p(-p)
    pbar = (m + 1.0) / (2.0 * n)
    sp2 = m * (m**2 - 1.0) / (12.0 * n**2)
    return np.abs(np.sum(lam * (p - pbar), axis=1) / sp2)


def _char_rows(kind_key, x, m=None):
    out = np.empty((x.shape[0], {"tv": 2, "ikm": 3, "ross": 2, "order": 2}[kind_key]))
    for r in range(x.shape[0]):
        row = x[r]
        if not np.all(np.isfinite(row)):
            out[r] = np.nan
            continue
        if kind_key == "tv":
            out[r] = kernels.ratio_tv(row)
        elif kind_key == "ikm":
            out[r] = kernels.min_ikm(row, m)
        elif kind_key == "ross":
            out[r] = kernels.rossberg_i1d1(row)
        else:
            out[r] = kernels.order_i2d2(row)
    return out


# ---------------------------------------------------------------------------
# Pipelines
# ---------------------------------------------------------------------------


class _MlePipeline:
    """Unit-transformed view of a batch of sorted samples under an MLE fit."""

    def __init__(self, x, known_sigma, raise_on_error):
        self.n = x.shape[1]
        beta, sigma = _mle_arrays(x, known_sigma, raise_on_error)
        self.beta_hat, self.sigma_hat = beta, sigma
        with np.errstate(invalid="ignore"):
            self.y = (x / sigma[:, None]) ** beta[:, None]
        self.ones = np.ones(x.shape[0])
        self._cache = {}
        self.raise_on_error = raise_on_error

    def y_half(self):
        # same as transforming with exponent beta/2: the square root of y
        return np.sqrt(self.y)

    def y_clamped(self):
        if "y_clamped" not in self._cache:
            yc = self.y.copy()
            yc[yc[:, 0] == 1.0, 0] = CLAMP_FLOOR
            self._cache["y_clamped"] = yc
        return self._cache["y_clamped"]

    def u(self, clamped):
        key = ("u", clamped)
        if key not in self._cache:
            y = self.y_clamped() if clamped else self.y
            self._cache[key] = 1.0 - 1.0 / y
        return self._cache[key]

    def compute(self, test: TestId):
        k = test.kind
        if k in _CLAMPED:
            u = self.u(clamped=True)
            return {TestKind.AD: _stat_ad, TestKind.ZA: _stat_za,
                    TestKind.ZB: _stat_zb, TestKind.ZC: _stat_zc}[k](u)
        if k is TestKind.KS:
            return _stat_ks(self.u(False))
        if k is TestKind.CM:
            return _stat_cm(self.u(False))
        if k is TestKind.MA:
            return _stat_ma(self.u(False))
        if k is TestKind.KL:
            return _stat_kl(self.y, self.ones, self.ones, test.m, self.raise_on_error)
        if k is TestKind.HD:
            return _stat_hd(self.y, self.ones, self.ones, test.m, self.raise_on_error)
        if k in (TestKind.DK, TestKind.DH, TestKind.DJ, TestKind.DT):
            if "phi_ratio" not in self._cache:
                self._cache["phi_ratio"] = _phi_ratio(
                    self.y, self.ones, self.ones, raise_on_error=self.raise_on_error
                )
            return _phi_stat(k, self._cache["phi_ratio"])
        if k is TestKind.ECF:
            return _stat_ecf(self.u(False), test.a)
        if k is TestKind.MELLIN:
            return _stat_mellin(self.y, self.ones, self.ones, test.a, self.raise_on_error)
        if k is TestKind.SLOPE:
            return _stat_slope(self.y_half())
        return self._char(test)

    def _char(self, test: TestId):
        k = test.kind
        if k in (TestKind.RATIO_T, TestKind.RATIO_V):
            vals = self._cache.setdefault("tv", _char_rows("tv", self.y))
            return vals[:, 0] if k is TestKind.RATIO_T else vals[:, 1]
        if k in _MIN_FAMILY:
            vals = self._cache.setdefault(("ikm", test.m), _char_rows("ikm", self.y, test.m))
            col = {TestKind.MIN_I: 0, TestKind.MIN_K: 1, TestKind.MIN_M: 2}[k]
            return vals[:, col]
        if k in (TestKind.ROSSBERG_I, TestKind.ROSSBERG_D):
            vals = self._cache.setdefault("ross", _char_rows("ross", self.y))
            return vals[:, 0] if k is TestKind.ROSSBERG_I else vals[:, 1]
        vals = self._cache.setdefault("order", _char_rows("order", self.y))
        return vals[:, 0] if k is TestKind.ORDER_I else vals[:, 1]


class _MmePipeline:
    """Raw-data view of a batch of sorted samples under a moment fit."""

    def __init__(self, x, known_sigma):
        self.x = x
        self.beta, self.sigma = _mme_arrays(x, known_sigma)
        self._cache = {}

    def u(self):
        if "u" not in self._cache:
            with np.errstate(invalid="ignore"):
                self._cache["u"] = 1.0 - (self.x / self.sigma[:, None]) ** (-self.beta[:, None])
        return self._cache["u"]

    def compute(self, test: TestId):
        k = test.kind
        table = {TestKind.KS: _stat_ks, TestKind.CM: _stat_cm, TestKind.AD: _stat_ad,
                 TestKind.MA: _stat_ma, TestKind.ZA: _stat_za, TestKind.ZB: _stat_zb,
                 TestKind.ZC: _stat_zc}
        if k in table:
            return table[k](self.u())
        if k is TestKind.KL:
            return _stat_kl(self.x, self.beta, self.sigma, test.m, raise_on_ties=False)
        if k is TestKind.HD:
            return _stat_hd(self.x, self.beta, self.sigma, test.m, raise_on_ties=False)
        if k in (TestKind.DK, TestKind.DH, TestKind.DJ, TestKind.DT):
            if "phi_ratio" not in self._cache:
                self._cache["phi_ratio"] = _phi_ratio(
                    self.x, self.beta, self.sigma, raise_on_error=False
                )
            return _phi_stat(k, self._cache["phi_ratio"])
        if k is TestKind.ECF:
            return _stat_ecf(self.u(), test.a)
        if k is TestKind.MELLIN:
            return _stat_mellin(self.x, self.beta, self.sigma, test.a, raise_on_error=False)
        if k is TestKind.SLOPE:
            return _stat_slope(self.x)
        raise ValueError(f"{test.id} does not use fitted parameters; use the MLE pipeline")


def batch_evaluate(tests, x, estimator: str = MLE, known_sigma: float | None = None,
                   *, on_error: str = "raise") -> np.ndarray:
    """Evaluate several tests on a batch of samples.

    Parameters
    ----------
    tests : sequence of TestId
    x : (R, n) array, one sample per row (any order; rows are sorted here)
    estimator : "mle" or "mme" for the statistics that need a fit
    known_sigma : fixes the scale instead of estimating it
    on_error : "raise" propagates degenerate-sample errors, "nan" marks the
        affected rows so replication loops can redraw them

    Returns
    -------
    (R, len(tests)) array of statistic values.
    """
    tests = parse_tests(tests)
    x = np.sort(np.asarray(x, dtype=float), axis=1)
    if x.ndim != 2:
        raise ValueError("x must be a 2-d batch of samples")
    raise_on_error = on_error == "raise"

    out = np.empty((x.shape[0], len(tests)))
    mle_pipe = mme_pipe = None
    for col, test in enumerate(tests):
        if test.kind in _WINDOWED and test.m > x.shape[1] / 2:
            raise ValueError(f"{test.id}: window m must satisfy m <= n/2")
        if estimator == MLE or not test.needs_fit:
            if mle_pipe is None:
                mle_pipe = _MlePipeline(x, known_sigma, raise_on_error)
            out[:, col] = mle_pipe.compute(test)
        elif estimator == MME:
            if mme_pipe is None:
                mme_pipe = _MmePipeline(x, known_sigma)
            out[:, col] = mme_pipe.compute(test)
        else:
            raise ValueError(f"unknown estimator {estimator!r}")
    if raise_on_error and not np.all(np.isfinite(out)):
        raise NonfiniteStatisticError("a statistic came out nonfinite")
    return out


def evaluate_test(test, data, estimator: str = MLE, known_sigma: float | None = None) -> StatisticValue:
    """Full pipeline for a single sample: fit, transform where applicable,
    and evaluate one statistic."""
    test = test if isinstance(test, TestId) else TestId.parse(test)
    s = as_sample(data)
    value = batch_evaluate([test], s.values[None, :], estimator, known_sigma)[0, 0]
    return StatisticValue(float(value), test.rejection_side)


# ---------------------------------------------------------------------------
# Single-sample statistic API
# ---------------------------------------------------------------------------


def _single(core, *args):
    return float(core(*args)[0])


def edf_statistic(kind, sample, fitted_cdf) -> StatisticValue:
    """Classical distance between the empirical and a fitted distribution
    function: kind is one of ks, cm, ad, ma."""
    kind = TestKind(kind) if not isinstance(kind, TestKind) else kind
    s = as_sample(sample)
    u = np.asarray(fitted_cdf(s.sorted), dtype=float)[None, :]
    if np.any(u < 0.0) or np.any(u > 1.0):
        raise NonfiniteStatisticError("fitted cdf values must lie in [0, 1]")
    if kind is TestKind.AD and (np.any(u == 0.0) or np.any(u == 1.0)):
        raise NonfiniteStatisticError("ad is undefined at cdf values of exactly 0 or 1")
    if kind is TestKind.MA and np.any(u == 1.0):
        raise NonfiniteStatisticError("ma is undefined at cdf values of exactly 1")
    table = {TestKind.KS: _stat_ks, TestKind.CM: _stat_cm,
             TestKind.AD: _stat_ad, TestKind.MA: _stat_ma}
    if kind not in table:
        raise ValueError(f"not an edf statistic: {kind}")
    return StatisticValue(_single(table[kind], u))


def zhang_statistic(kind, sample, fitted_cdf) -> StatisticValue:
    """Likelihood-ratio statistics za, zb, zc; needs cdf values strictly
    inside (0, 1)."""
    kind = TestKind(kind) if not isinstance(kind, TestKind) else kind
    s = as_sample(sample)
    u = np.asarray(fitted_cdf(s.sorted), dtype=float)[None, :]
    if np.any(u <= 0.0) or np.any(u >= 1.0):
        raise NonfiniteStatisticError("zhang statistics need cdf values strictly in (0, 1)")
    table = {TestKind.ZA: _stat_za, TestKind.ZB: _stat_zb, TestKind.ZC: _stat_zc}
    if kind not in table:
        raise ValueError(f"not a likelihood-ratio statistic: {kind}")
    return StatisticValue(_single(table[kind], u))


def entropy_statistic(kind, m: int, sample, fit: FitResult) -> StatisticValue:
    """Spacing-entropy statistics: kl (divergence) or hd (Hellinger)."""
    kind = TestKind(kind) if not isinstance(kind, TestKind) else kind
    s = as_sample(sample)
    if not 1 <= m <= len(s) / 2:
        raise ValueError("window must satisfy 1 <= m <= n/2")
    x = s.sorted[None, :]
    b = np.array([fit.beta])
    sg = np.array([fit.sigma])
    if kind is TestKind.KL:
        return StatisticValue(_single(_stat_kl, x, b, sg, m))
    if kind is TestKind.HD:
        return StatisticValue(_single(_stat_hd, x, b, sg, m))
    raise ValueError(f"not an entropy statistic: {kind}")


def phi_divergence_statistic(kind, sample, fit: FitResult,
                             bandwidth: float | None = None) -> StatisticValue:
    """Phi-divergence between a Gaussian kernel density estimate and the
    fitted density: dk, dh, dj or dt.  The default bandwidth is
    1.06 * s * n^(-1/5) with s the unbiased standard deviation."""
    kind = TestKind(kind) if not isinstance(kind, TestKind) else kind
    s = as_sample(sample)
    if bandwidth is None and len(s) < 2:
        raise BandwidthError("automatic bandwidth needs at least two observations")
    if bandwidth is not None and bandwidth <= 0:
        raise BandwidthError("bandwidth must be positive")
    r = _phi_ratio(s.sorted[None, :], np.array([fit.beta]), np.array([fit.sigma]), bandwidth)
    return StatisticValue(_single(_phi_stat, kind, r))


def ecf_statistic(sample, fit: FitResult, a: float) -> StatisticValue:
    """Weighted L2 distance between the empirical characteristic function of
    the fitted-cdf-transformed data and the uniform characteristic function,
    with weight exp(-a|t|)."""
    if not a > 0:
        raise ValueError("a must be positive")
    s = as_sample(sample)
    u = _fit_cdf(fit, s.values)[None, :]
    return StatisticValue(_single(_stat_ecf, u, a))


def mellin_statistic(sample, fit: FitResult, a: float) -> StatisticValue:
    """Weighted L2 distance built from the empirical Mellin transform of the
    scale-normalized data, with weight exp(-a t)."""
    if not a > 0:
        raise ValueError("a must be positive")
    s = as_sample(sample)
    return StatisticValue(_single(
        _stat_mellin, s.sorted[None, :], np.array([fit.beta]), np.array([fit.sigma]), a
    ))


def inequality_slope_statistic(sample) -> StatisticValue:
    """Absolute least-squares slope of the empirical inequality curve
    regressed on p_j = j/n over j = 1..n - floor(sqrt(n))."""
    s = as_sample(sample)
    if len(s) < 4:
        raise ValueError("inequality-curve slope needs n >= 4")
    return StatisticValue(_single(_stat_slope, s.sorted[None, :]), RejectionSide.ABS_UPPER)


def char_ratio_statistics(sample) -> tuple[StatisticValue, StatisticValue]:
    """Max-ratio characterization pair (integral statistic, supremum statistic)."""
    s = as_sample(sample)
    if len(s) < 2:
        raise ValueError("need at least two observations")
    t, v = kernels.ratio_tv(s.sorted)
    return StatisticValue(t), StatisticValue(v)


def char_min_statistics(m: int, sample) -> tuple[StatisticValue, StatisticValue, StatisticValue]:
    """Root-vs-minimum characterization triple for order m >= 2."""
    if m < 2:
        raise ValueError("order m must be >= 2")
    s = as_sample(sample)
    i, k, msq = kernels.min_ikm(s.sorted, m)
    return StatisticValue(i), StatisticValue(k), StatisticValue(msq)


def char_rossberg_statistics(sample) -> tuple[StatisticValue, StatisticValue]:
    """Median/min-ratio vs pairwise-minimum characterization pair."""
    s = as_sample(sample)
    if len(s) < 2:
        raise ValueError("need at least two observations")
    i1, d1 = kernels.rossberg_i1d1(s.sorted)
    return StatisticValue(i1), StatisticValue(d1)


def char_order_statistics(sample) -> tuple[StatisticValue, StatisticValue]:
    """Max/median vs median/min^2 characterization pair."""
    s = as_sample(sample)
    if len(s) < 2:
        raise ValueError("need at least two observations")
    i2, d2 = kernels.order_i2d2(s.sorted)
    return StatisticValue(i2), StatisticValue(d2)


def _fit_cdf(fit: FitResult, x):
    return 1.0 - np.maximum(np.asarray(x, dtype=float) / fit.sigma, 1.0) ** (-fit.beta)

"""NumPy implementations of the characterization-statistic kernels.

These are the import-time fallback for the compiled extension.  Each function
takes one ascending-sorted 1-d float array and returns plain floats.  The
cubic-cost triple sums are evaluated through sorted-pair decompositions: for
sorted values, every ordered index triple contributes a ratio determined by
at most two distinct positions, so the full V-statistic reduces to weighted
pair counts.  Equality with direct tuple enumeration is pinned in the tests.
"""

from __future__ import annotations

import numpy as np


def _edf_counts(sorted_vals, points):
    return np.searchsorted(sorted_vals, points, side="right")


def _sup_points(*jump_sets):
    pts = np.concatenate([np.asarray(j, dtype=float).ravel() for j in jump_sets])
    pts = pts[pts >= 1.0]
    return np.append(pts, 1.0)


class _WeightedStep:
    """Right-continuous step function t -> sum of weights at values <= t."""

    def __init__(self, values, weights):
        order = np.argsort(values, kind="stable")
        self.values = values[order]
        self.cum = np.cumsum(weights[order])

    def __call__(self, points):
        idx = np.searchsorted(self.values, points, side="right")
        return np.where(idx > 0, self.cum[np.maximum(idx - 1, 0)], 0.0)


def ratio_tv(xs):
    """Max-ratio characterization statistics (integral and supremum form).

    Compares the U-empirical distribution of max(X_i/X_k, X_k/X_i) over all
    pairs with the empirical distribution of the data itself.
    """
    xs = np.asarray(xs, dtype=float)
    n = xs.size
    npairs = n * (n - 1) // 2
    i, k = np.triu_indices(n, k=1)
    ratios = np.sort(xs[k] / xs[i])

    m_at_x = _edf_counts(ratios, xs) / npairs
    f_at_x = _edf_counts(xs, xs) / n
    t = float(np.mean(m_at_x - f_at_x))

    pts = _sup_points(ratios, xs)
    v = np.abs(_edf_counts(ratios, pts) / npairs - _edf_counts(xs, pts) / n)
    return t, float(v.max())


def min_ikm(xs, m):
    """Root-vs-minimum characterization statistics for window m.

    The m-fold minimum V-statistic is evaluated through the survival-count
    identity n^-m * #{tuples with min <= x} = 1 - (1 - F_n(x))^m.
    """
    xs = np.asarray(xs, dtype=float)
    n = xs.size
    roots = np.sort(xs ** (1.0 / m))

    def delta(points):
        a = _edf_counts(roots, points) / n
        b = 1.0 - (1.0 - _edf_counts(xs, points) / n) ** m
        return a - b

    d_at_x = delta(xs)
    i_stat = float(np.mean(d_at_x))
    m_stat = float(np.mean(d_at_x**2))
    k_stat = float(np.abs(delta(_sup_points(roots, xs))).max())
    return i_stat, k_stat, m_stat


def rossberg_i1d1(xs):
    """Median/min-ratio vs pairwise-minimum characterization statistics.

    Triple decomposition for sorted y_1 <= ... <= y_n: median/min equals
    y_q/y_p for value positions p < q in 6*(n - q) + 3 ordered triples,
    while n + 3*C(n,2) triples yield ratio 1; the weights sum to n^3.
    """
    xs = np.asarray(xs, dtype=float)
    n = xs.size
    n3 = float(n) ** 3

    vals = [np.array([1.0])]
    weights = [np.array([n + 3.0 * (n * (n - 1) // 2)])]
    for q in range(1, n):
        vals.append(xs[q] / xs[:q])
        weights.append(np.full(q, 3.0 + 6.0 * (n - (q + 1))))
    g_step = _WeightedStep(np.concatenate(vals), np.concatenate(weights))

    def g(points):
        return g_step(points) / n3

    def h(points):
        return 1.0 - (1.0 - _edf_counts(xs, points) / n) ** 2

    i1 = float(np.mean(g(xs) - h(xs)))
    pts = _sup_points(g_step.values, xs)
    d1 = float(np.abs(g(pts) - h(pts)).max())
    return i1, d1


def order_i2d2(xs):
    """Max/median vs median/min^2 characterization statistics.

    Both triple sums decompose over sorted value-position pairs: max/median
    equals y_r/y_q with weight 6*(q - 1) + 3 for q < r (ratio 1 otherwise),
    and median/min^2 equals y_q/y_p^2 with weight 6*(n - q) + 3 for p < q,
    plus the degenerate points 1/y_p with weight 3*(n - p) + 1.
    """
    xs = np.asarray(xs, dtype=float)
    n = xs.size
    n3 = float(n) ** 3
    npairs = n * (n - 1) // 2

    jv = [np.array([1.0])]
    jw = [np.array([n + 3.0 * npairs])]
    for r in range(1, n):
        jv.append(xs[r] / xs[:r])
        jw.append(3.0 + 6.0 * np.arange(r))
    j_step = _WeightedStep(np.concatenate(jv), np.concatenate(jw))

    kv = [1.0 / xs]
    kw = [1.0 + 3.0 * (n - 1.0 - np.arange(n))]
    for q in range(1, n):
        kv.append(xs[q] / xs[:q] ** 2)
        kw.append(np.full(q, 3.0 + 6.0 * (n - (q + 1))))
    k_step = _WeightedStep(np.concatenate(kv), np.concatenate(kw))

    i2 = float(np.mean((j_step(xs) - k_step(xs)) / n3))
    pts = _sup_points(j_step.values, k_step.values, xs)
    d2 = float(np.abs(j_step(pts) - k_step(pts)).max() / n3)
    return i2, d2

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the characterization statistics.

Same contracts as ``_kernels_py``: ascending-sorted 1-d float64 input, plain
float outputs, triple sums folded into weighted pair counts.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef Py_ssize_t _bisect_right(double[::1] a, double t) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = a.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if t < a[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


cdef double _step_at(double[::1] vals, double[::1] cum, double t) noexcept nogil:
    cdef Py_ssize_t idx = _bisect_right(vals, t)
    if idx == 0:
        return 0.0
    return cum[idx - 1]


def ratio_tv(xs):
    """Max-ratio characterization statistics (integral and supremum form)."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t npairs = n * (n - 1) // 2
    cdef cnp.ndarray r_arr = np.empty(npairs, dtype=np.float64)
    cdef double[::1] r = r_arr
    cdef Py_ssize_t i, k, pos = 0
    for i in range(n - 1):
        for k in range(i + 1, n):
            r[pos] = x[k] / x[i]
            pos += 1
    r_arr.sort()

    cdef double t_acc = 0.0, v_max = 0.0, diff, pt
    cdef double inv_pairs = 1.0 / npairs, inv_n = 1.0 / n
    with nogil:
        for i in range(n):
            t_acc += _bisect_right(r, x[i]) * inv_pairs - _bisect_right(x, x[i]) * inv_n
        for i in range(npairs):
            pt = r[i]
            if pt < 1.0:
                continue
            diff = _bisect_right(r, pt) * inv_pairs - _bisect_right(x, pt) * inv_n
            if diff < 0:
                diff = -diff
            if diff > v_max:
                v_max = diff
        for i in range(n + 1):
            pt = x[i] if i < n else 1.0
            if pt < 1.0:
                continue
            diff = _bisect_right(r, pt) * inv_pairs - _bisect_right(x, pt) * inv_n
            if diff < 0:
                diff = -diff
            if diff > v_max:
                v_max = diff
    return t_acc / n, v_max


def min_ikm(xs, Py_ssize_t m):
    """Root-vs-minimum characterization statistics for window m."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    cdef cnp.ndarray roots_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] roots = roots_arr
    cdef Py_ssize_t i
    cdef double inv_m = 1.0 / m
    for i in range(n):
        roots[i] = x[i] ** inv_m
    roots_arr.sort()

    cdef double i_acc = 0.0, m_acc = 0.0, k_max = 0.0, d, pt
    cdef double inv_n = 1.0 / n
    with nogil:
        for i in range(n):
            d = _delta(roots, x, x[i], m, inv_n)
            i_acc += d
            m_acc += d * d
        for i in range(2 * n + 1):
            if i < n:
                pt = roots[i]
            elif i < 2 * n:
                pt = x[i - n]
            else:
                pt = 1.0
            if pt < 1.0:
                continue
            d = _delta(roots, x, pt, m, inv_n)
            if d < 0:
                d = -d
            if d > k_max:
                k_max = d
    return i_acc / n, k_max, m_acc / n


cdef double _delta(double[::1] roots, double[::1] x, double t,
                   Py_ssize_t m, double inv_n) noexcept nogil:
    cdef double a = _bisect_right(roots, t) * inv_n
    cdef double surv = 1.0 - _bisect_right(x, t) * inv_n
    cdef double b = 1.0, pw = surv
    cdef Py_ssize_t i
    for i in range(m - 1):
        pw *= surv
    return a - (1.0 - pw)


cdef _sorted_weighted(cnp.ndarray vals, cnp.ndarray weights):
    cdef cnp.ndarray order = np.argsort(vals, kind="stable")
    return np.ascontiguousarray(vals[order]), np.ascontiguousarray(np.cumsum(weights[order]))


def rossberg_i1d1(xs):
    """Median/min-ratio vs pairwise-minimum characterization statistics."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    cdef double n3 = (<double> n) ** 3
    cdef Py_ssize_t total = 1 + n * (n - 1) // 2
    cdef cnp.ndarray vals_arr = np.empty(total, dtype=np.float64)
    cdef cnp.ndarray w_arr = np.empty(total, dtype=np.float64)
    cdef double[::1] vals = vals_arr, w = w_arr
    cdef Py_ssize_t p, q, pos = 0
    vals[0] = 1.0
    w[0] = n + 3.0 * (n * (n - 1) // 2)
    pos = 1
    for q in range(1, n):
        for p in range(q):
            vals[pos] = x[q] / x[p]
            w[pos] = 3.0 + 6.0 * (n - (q + 1))
            pos += 1
    gv_arr, gc_arr = _sorted_weighted(vals_arr, w_arr)
    cdef double[::1] gv = gv_arr, gc = gc_arr

    cdef double i_acc = 0.0, d_max = 0.0, diff, pt
    cdef double inv_n = 1.0 / n
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            i_acc += _gh_diff(gv, gc, x, x[i], n3, inv_n)
        for i in range(total + n + 1):
            if i < total:
                pt = gv[i]
            elif i < total + n:
                pt = x[i - total]
            else:
                pt = 1.0
            if pt < 1.0:
                continue
            diff = _gh_diff(gv, gc, x, pt, n3, inv_n)
            if diff < 0:
                diff = -diff
            if diff > d_max:
                d_max = diff
    return i_acc / n, d_max


cdef double _gh_diff(double[::1] gv, double[::1] gc, double[::1] x,
                     double t, double n3, double inv_n) noexcept nogil:
    cdef double g = _step_at(gv, gc, t) / n3
    cdef double surv = 1.0 - _bisect_right(x, t) * inv_n
    return g - (1.0 - surv * surv)


def order_i2d2(xs):
    """Max/median vs median/min^2 characterization statistics."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    cdef double n3 = (<double> n) ** 3
    cdef Py_ssize_t npairs = n * (n - 1) // 2
    cdef cnp.ndarray jv_arr = np.empty(1 + npairs, dtype=np.float64)
    cdef cnp.ndarray jw_arr = np.empty(1 + npairs, dtype=np.float64)
    cdef cnp.ndarray kv_arr = np.empty(n + npairs, dtype=np.float64)
    cdef cnp.ndarray kw_arr = np.empty(n + npairs, dtype=np.float64)
    cdef double[::1] jv = jv_arr, jw = jw_arr, kv = kv_arr, kw = kw_arr
    cdef Py_ssize_t p, q, r, pos
    jv[0] = 1.0
    jw[0] = n + 3.0 * npairs
    pos = 1
    for r in range(1, n):
        for q in range(r):
            jv[pos] = x[r] / x[q]
            jw[pos] = 3.0 + 6.0 * q
            pos += 1
    for p in range(n):
        kv[p] = 1.0 / x[p]
        kw[p] = 1.0 + 3.0 * (n - 1 - p)
    pos = n
    for q in range(1, n):
        for p in range(q):
            kv[pos] = x[q] / (x[p] * x[p])
            kw[pos] = 3.0 + 6.0 * (n - (q + 1))
            pos += 1
    jv_s, jc_s = _sorted_weighted(jv_arr, jw_arr)
    kv_s, kc_s = _sorted_weighted(kv_arr, kw_arr)
    cdef double[::1] jvs = jv_s, jcs = jc_s, kvs = kv_s, kcs = kc_s

    cdef double i_acc = 0.0, d_max = 0.0, diff, pt
    cdef Py_ssize_t i, nj = jv_s.shape[0], nk = kv_s.shape[0]
    with nogil:
        for i in range(n):
            i_acc += (_step_at(jvs, jcs, x[i]) - _step_at(kvs, kcs, x[i])) / n3
        for i in range(nj + nk + n + 1):
            if i < nj:
                pt = jvs[i]
            elif i < nj + nk:
                pt = kvs[i - nj]
            elif i < nj + nk + n:
                pt = x[i - nj - nk]
            else:
                pt = 1.0
            if pt < 1.0:
                continue
            diff = (_step_at(jvs, jcs, pt) - _step_at(kvs, kcs, pt)) / n3
            if diff < 0:
                diff = -diff
            if diff > d_max:
                d_max = diff
    return i_acc / n, d_max

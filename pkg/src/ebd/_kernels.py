"""Hot candidate-scan loops, JIT-compiled.

All kernels return op tallies as (adds_finite, adds_inf, cmps_finite,
cmps_inf). Scans are strictly ascending in the decomposition value so the
first minimum wins every tie; entries are empty iff penalty is +inf.
"""

from __future__ import annotations

import numpy as np
from numba import njit

INF = np.inf


@njit(cache=True)
def combine_all_full(pa, pb):
    """Full scan, every target v in [0, 2^q): pen[v] = min pa[vi] + pb[vi^v]."""
    n = pa.shape[0]
    pen = np.full(n, INF)
    ref = np.full(n, -1, dtype=np.int64)
    af = ai = cf = ci = 0
    for v in range(n):
        best = INF
        bi = -1
        nf = 0
        for vi in range(n):
            a = pa[vi]
            b = pb[vi ^ v]
            if np.isfinite(a) and np.isfinite(b):
                c = a + b
                nf += 1
                if c < best:
                    best = c
                    bi = vi
        pen[v] = best
        ref[v] = bi
        fin_c = nf - 1 if nf > 1 else 0
        af += nf
        ai += n - nf
        cf += fin_c
        ci += (n - 1) - fin_c
    return pen, ref, af, ai, cf, ci


@njit(cache=True)
def combine_all_sym(pa):
    """Halved scan for all targets v != 0 over unordered pairs {vi, vi^v}.

    Target 0 is left empty; the caller handles it with a full scan.
    """
    n = pa.shape[0]
    pen = np.full(n, INF)
    ref = np.full(n, -1, dtype=np.int64)
    af = ai = cf = ci = 0
    npairs = n // 2
    for v in range(1, n):
        best = INF
        bi = -1
        nf = 0
        for vi in range(n):
            u = vi ^ v
            if vi >= u:
                continue
            a = pa[vi]
            b = pa[u]
            if np.isfinite(a) and np.isfinite(b):
                c = a + b
                nf += 1
                if c < best:
                    best = c
                    bi = vi
        pen[v] = best
        ref[v] = bi
        fin_c = nf - 1 if nf > 1 else 0
        af += nf
        ai += npairs - nf
        cf += fin_c
        ci += (npairs - 1) - fin_c
    return pen, ref, af, ai, cf, ci


@njit(cache=True)
def combine_single_full(pa, pb, v):
    n = pa.shape[0]
    best = INF
    bi = -1
    nf = 0
    for vi in range(n):
        a = pa[vi]
        b = pb[vi ^ v]
        if np.isfinite(a) and np.isfinite(b):
            c = a + b
            nf += 1
            if c < best:
                best = c
                bi = vi
    fin_c = nf - 1 if nf > 1 else 0
    return best, bi, nf, n - nf, fin_c, (n - 1) - fin_c


@njit(cache=True)
def combine_single_sym(pa, v):
    n = pa.shape[0]
    best = INF
    bi = -1
    nf = 0
    for vi in range(n):
        u = vi ^ v
        if vi >= u:
            continue
        a = pa[vi]
        b = pa[u]
        if np.isfinite(a) and np.isfinite(b):
            c = a + b
            nf += 1
            if c < best:
                best = c
                bi = vi
    npairs = n // 2
    fin_c = nf - 1 if nf > 1 else 0
    return best, bi, nf, npairs - nf, fin_c, (npairs - 1) - fin_c


@njit(cache=True)
def combine_targets(pa, pb, cands, targets, symmetric):
    """Scoped scan for the exclusion-optimized decoders.

    cands holds the ascending indices vi with pa[vi] finite; empty entries of
    pb are skipped without being counted. With symmetric=True (pa is pb) each
    unordered pair {vi, vi^v} is scanned once at its smaller member.
    """
    n = pa.shape[0]
    pen = np.full(n, INF)
    ref = np.full(n, -1, dtype=np.int64)
    af = cf = 0
    for ti in range(targets.shape[0]):
        v = targets[ti]
        best = INF
        bi = -1
        nf = 0
        for ci in range(cands.shape[0]):
            vi = cands[ci]
            u = vi ^ v
            if symmetric and vi >= u:
                continue
            b = pb[u]
            if np.isfinite(b):
                c = pa[vi] + b
                nf += 1
                if c < best:
                    best = c
                    bi = vi
        pen[v] = best
        ref[v] = bi
        af += nf
        if nf > 1:
            cf += nf - 1
    return pen, ref, af, cf


@njit(cache=True)
def filter_finite(pen, threshold):
    """Empty every finite entry with penalty >= threshold (strict survival).

    Returns the number of finite entries examined (one comparison each).
    """
    examined = 0
    for i in range(pen.shape[0]):
        if np.isfinite(pen[i]):
            examined += 1
            if pen[i] >= threshold:
                pen[i] = INF
    return examined

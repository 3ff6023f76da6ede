"""Hot mod-p kernels: numba-jitted with a pure-numpy fallback.

Set FPVCODES_NO_NUMBA=1 in the environment to force the fallback path.
The fallback is also selected automatically when numba is not installed.
Both implementations of each kernel share one contract; see
benchmarks/bench_kernels.py for a head-to-head timing.
"""

import os

import numpy as np

_flag = os.environ.get("FPVCODES_NO_NUMBA", "").strip().lower()
NUMBA_DISABLED = _flag in ("1", "true", "yes", "on")

try:
    if NUMBA_DISABLED:
        raise ImportError("numba disabled via FPVCODES_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    njit = None
    HAVE_NUMBA = False


def _rref_mod_py(mat, p, invt, pivots):
    """Reduce mat to row-reduced echelon form over Z/p, in place.

    invt[x] must hold the inverse of x mod p for 1 <= x < p.
    Returns the rank; pivot columns are written to pivots[:rank].
    """
    rows, cols = mat.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = tmp
        f = invt[mat[r, c]]
        if f != 1:
            for j in range(c, cols):
                mat[r, j] = (mat[r, j] * f) % p
        for i in range(rows):
            if i != r and mat[i, c] != 0:
                g = mat[i, c]
                for j in range(c, cols):
                    mat[i, j] = (mat[i, j] - g * mat[r, j]) % p
        pivots[r] = c
        r += 1
    return r


def _rref_mod_numpy(mat, p, invt, pivots):
    """Same contract as _rref_mod_py, with vectorised row operations."""
    rows, cols = mat.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        f = int(invt[mat[r, c]])
        if f != 1:
            mat[r] = (mat[r] * f) % p
        coef = mat[:, c].copy()
        coef[r] = 0
        hit = np.nonzero(coef)[0]
        if hit.size:
            mat[hit] = (mat[hit] - np.outer(coef[hit], mat[r])) % p
        pivots[r] = c
        r += 1
    return r


def _batch_self_gram_zero_py(gens, p):
    """gens: (m, k, n) stack of generator matrices over Z/p.

    out[t] is True iff gens[t] @ gens[t].T == 0 mod p.  Bails out of a
    matrix at the first nonzero inner product.
    """
    m, k, n = gens.shape
    out = np.ones(m, np.bool_)
    for t in range(m):
        ok = True
        for i in range(k):
            if not ok:
                break
            for j in range(i, k):
                s = 0
                for l in range(n):
                    s += gens[t, i, l] * gens[t, j, l]
                if s % p != 0:
                    ok = False
                    break
        out[t] = ok
    return out


def _batch_self_gram_zero_numpy(gens, p):
    """Same contract as _batch_self_gram_zero_py via one einsum."""
    if gens.shape[0] == 0 or gens.shape[1] == 0:
        return np.ones(gens.shape[0], np.bool_)
    gram = np.einsum("til,tjl->tij", gens, gens) % p
    return ~gram.any(axis=(1, 2))


rref_mod_numpy = _rref_mod_numpy
batch_self_gram_zero_numpy = _batch_self_gram_zero_numpy

if HAVE_NUMBA:
    rref_mod_numba = njit(cache=True)(_rref_mod_py)
    batch_self_gram_zero_numba = njit(cache=True)(_batch_self_gram_zero_py)
    rref_mod = rref_mod_numba
    batch_self_gram_zero = batch_self_gram_zero_numba
else:
    rref_mod_numba = None
    batch_self_gram_zero_numba = None
    rref_mod = rref_mod_numpy
    batch_self_gram_zero = batch_self_gram_zero_numpy

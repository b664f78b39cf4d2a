"""Census hot loop: modular screening of Racah sums over all squares of a shard.

For every magic square whose first row is one of the given rows, the Racah
single sum is reduced modulo a few primes near 2^31 using inverse-factorial
tables. A non-zero residue proves the 3j symbol non-zero; squares whose
residues all vanish are returned as candidates for exact verification.

Two implementations share one interface: a numba kernel and a vectorized
numpy fallback. Setting ``THREEJ_ZEROS_DISABLE_NUMBA=1`` (or a missing numba)
selects the fallback.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "PRIMES",
    "BACKEND",
    "inverse_factorial_tables",
    "screen_rows",
    "screen_rows_numpy",
    "screen_rows_numba",
    "numba_available",
]

PRIMES = np.array([2147483647, 2147483629, 2147483587], dtype=np.int64)


def inverse_factorial_tables(n_max: int, primes: np.ndarray = PRIMES) -> np.ndarray:
    """``out[i, k] = (k!)^-1 mod primes[i]`` for k = 0 .. n_max."""
    out = np.empty((len(primes), n_max + 1), dtype=np.int64)
    for i, p in enumerate(int(q) for q in primes):
        f = 1
        facts = [1]
        for k in range(1, n_max + 1):
            f = f * k % p
            facts.append(f)
        inv = pow(facts[-1], p - 2, p)
        row = [0] * (n_max + 1)
        for k in range(n_max, -1, -1):
            row[k] = inv
            inv = inv * k % p
        out[i] = row
    return out


def _rows_array(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    return a.reshape(-1, 3)


# ---------------------------------------------------------------------------
# numpy fallback
# ---------------------------------------------------------------------------


def _expand_numpy(rows: np.ndarray) -> np.ndarray:
    """All squares over the given first rows, shape (n, 9)."""
    blocks = []
    for r11, r12, r13 in rows:
        J = r11 + r12 + r13
        r21 = np.arange(J - r11 + 1, dtype=np.int64)
        r22 = np.arange(J + 1, dtype=np.int64)
        A, B = np.meshgrid(r21, r22, indexing="ij")
        A, B = A.ravel(), B.ravel()
        r23 = J - A - B
        r31 = J - r11 - A
        r32 = J - r12 - B
        r33 = r11 + r12 + A + B - J
        ok = (r23 >= 0) & (r31 >= 0) & (r32 >= 0) & (r33 >= 0)
        n = int(ok.sum())
        sq = np.empty((n, 9), dtype=np.int64)
        sq[:, 0], sq[:, 1], sq[:, 2] = r11, r12, r13
        sq[:, 3], sq[:, 4], sq[:, 5] = A[ok], B[ok], r23[ok]
        sq[:, 6], sq[:, 7], sq[:, 8] = r31[ok], r32[ok], r33[ok]
        blocks.append(sq)
    if not blocks:
        return np.empty((0, 9), dtype=np.int64)
    return np.concatenate(blocks)


def screen_rows_numpy(rows, invfact: np.ndarray, primes: np.ndarray = PRIMES) -> tuple[int, np.ndarray]:
    sq = _expand_numpy(_rows_array(rows))
    n = len(sq)
    if n == 0:
        return 0, sq
    eta1 = sq[:, 3] - sq[:, 8]
    eta2 = sq[:, 7] - sq[:, 5]
    x1, x2, x3 = sq[:, 3], sq[:, 7], sq[:, 2]
    tmin = np.maximum(0, np.maximum(eta1, eta2))
    tmax = np.minimum(x1, np.minimum(x2, x3))
    alive = np.ones(n, dtype=bool)
    top = int(tmax.max())
    for i, p in enumerate(primes):
        p = np.int64(p)
        inv = invfact[i]
        acc = np.zeros(n, dtype=np.int64)
        for t in range(top + 1):
            m = alive & (tmin <= t) & (t <= tmax)
            if not m.any():
                continue
            idx = np.nonzero(m)[0]
            term = inv[t] * inv[t - eta1[idx]] % p
            term = term * inv[t - eta2[idx]] % p
            term = term * inv[x1[idx] - t] % p
            term = term * inv[x2[idx] - t] % p
            term = term * inv[x3[idx] - t] % p
            if t % 2:
                acc[idx] = (acc[idx] + p - term) % p
            else:
                acc[idx] = (acc[idx] + term) % p
        alive &= acc == 0
    return n, sq[alive]


# ---------------------------------------------------------------------------
# numba kernel
# ---------------------------------------------------------------------------

_numba_kernel = None


def numba_available() -> bool:
    return _get_numba_kernel() is not None


def _get_numba_kernel():
    global _numba_kernel
    if _numba_kernel is not None:
        return _numba_kernel
    if os.environ.get("THREEJ_ZEROS_DISABLE_NUMBA", "") not in ("", "0"):
        return None
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        return None

    @njit(cache=True)
    def kernel(rows, invfact, primes):  # pragma: no cover - compiled
        cap = 0
        for k in range(rows.shape[0]):
            J = rows[k, 0] + rows[k, 1] + rows[k, 2]
            cap += (J + 1) * (J + 1)
        out = np.empty((cap, 9), dtype=np.int64)
        n_out = 0
        n_scanned = 0
        for k in range(rows.shape[0]):
            r11, r12, r13 = rows[k, 0], rows[k, 1], rows[k, 2]
            J = r11 + r12 + r13
            for r21 in range(J - r11 + 1):
                r31 = J - r11 - r21
                lo = J - r11 - r12 - r21
                if lo < 0:
                    lo = 0
                hi = J - r21
                if J - r12 < hi:
                    hi = J - r12
                for r22 in range(lo, hi + 1):
                    r23 = J - r21 - r22
                    r32 = J - r12 - r22
                    r33 = r11 + r12 + r21 + r22 - J
                    n_scanned += 1
                    eta1 = r21 - r33
                    eta2 = r32 - r23
                    tmin = 0
                    if eta1 > tmin:
                        tmin = eta1
                    if eta2 > tmin:
                        tmin = eta2
                    tmax = r21
                    if r32 < tmax:
                        tmax = r32
                    if r13 < tmax:
                        tmax = r13
                    zero = True
                    for i in range(primes.shape[0]):
                        p = primes[i]
                        acc = 0
                        for t in range(tmin, tmax + 1):
                            term = invfact[i, t] * invfact[i, t - eta1] % p
                            term = term * invfact[i, t - eta2] % p
                            term = term * invfact[i, r21 - t] % p
                            term = term * invfact[i, r32 - t] % p
                            term = term * invfact[i, r13 - t] % p
                            if t % 2 == 1:
                                acc = (acc + p - term) % p
                            else:
                                acc = (acc + term) % p
                        if acc != 0:
                            zero = False
                            break
                    if zero:
                        out[n_out, 0] = r11
                        out[n_out, 1] = r12
                        out[n_out, 2] = r13
                        out[n_out, 3] = r21
                        out[n_out, 4] = r22
                        out[n_out, 5] = r23
                        out[n_out, 6] = r31
                        out[n_out, 7] = r32
                        out[n_out, 8] = r33
                        n_out += 1
        return n_scanned, out[:n_out].copy()

    _numba_kernel = kernel
    return kernel


def screen_rows_numba(rows, invfact: np.ndarray, primes: np.ndarray = PRIMES) -> tuple[int, np.ndarray]:
    kernel = _get_numba_kernel()
    if kernel is None:
        raise RuntimeError("numba backend disabled or unavailable")
    n, out = kernel(_rows_array(rows), invfact, primes)
    return int(n), out


def screen_rows(rows, invfact: np.ndarray, primes: np.ndarray = PRIMES) -> tuple[int, np.ndarray]:
    """(number of squares scanned, candidate squares whose residues all vanish)."""
    if _get_numba_kernel() is not None:
        return screen_rows_numba(rows, invfact, primes)
    return screen_rows_numpy(rows, invfact, primes)


BACKEND = "numba" if os.environ.get("THREEJ_ZEROS_DISABLE_NUMBA", "") in ("", "0") else "numpy"

"""Batch residue-classification kernels.

The compiled kernel classifies every residue of [0, n) in one pass:
a smallest-prime-factor sieve turns w**d mod n into one modular multiply
per composite w (w = p * m gives w^d = p^d * m^d), so a full scan costs
O(n) multiplies plus O(pi(n) log d) for the prime entries.  A pure-numpy
implementation of the same contract is kept both as a fallback and as an
independent cross-check for the test suite.

Class codes: 0 witness, 1 shares a factor with n, 2 d-th root of unity,
3 reaches -1 at some squaring stage.  The two membership predicates for
codes 2 and 3 are evaluated independently for every unit and the kernel
counts co-occurrences (`overlap`), which must always be zero.
"""

from __future__ import annotations

import threading

import numpy as np

CODE_WITNESS = 0
CODE_NON_COPRIME = 1
CODE_DTH_ROOT = 2
CODE_MINUS_ONE = 3

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


_spf_lock = threading.Lock()
_spf_cache = np.zeros(0, np.int32)


@njit(cache=True)
def _spf_sieve(limit):
    spf = np.zeros(limit, np.int32)
    i = 2
    while i * i < limit:
        if spf[i] == 0:
            for j in range(i * i, limit, i):
                if spf[j] == 0:
                    spf[j] = i
        i += 1
    return spf


def smallest_prime_factor(limit: int) -> np.ndarray:
    """Shared sieve: entry w holds the least prime factor of composite w, else 0."""
    global _spf_cache
    if len(_spf_cache) >= limit:
        return _spf_cache
    with _spf_lock:
        if len(_spf_cache) < limit:
            _spf_cache = _spf_sieve(max(limit, 2 * len(_spf_cache)))
    return _spf_cache


@njit(cache=True)
def _scan_kernel(n, d, s, n_prime_factors, spf):
    codes = np.zeros(n, np.uint8)
    stages = np.full(n, -1, np.int8)
    powd = np.zeros(n, np.int64)

    codes[0] = CODE_NON_COPRIME
    for p in n_prime_factors:
        for w in range(p, n, p):
            codes[w] = CODE_NON_COPRIME

    powd[1] = 1
    for w in range(2, n):
        p = spf[w]
        if p == 0:  # prime: direct square-and-multiply
            b = np.int64(w)
            e = d
            r = np.int64(1)
            while e > 0:
                if e & 1:
                    r = r * b % n
                b = b * b % n
                e >>= 1
            powd[w] = r
        else:
            powd[w] = powd[p] * powd[w // p] % n

    overlap = 0
    counts = np.zeros(4, np.int64)
    for w in range(n):
        if codes[w] == CODE_NON_COPRIME:
            counts[CODE_NON_COPRIME] += 1
            continue
        x = powd[w]
        is_root = x == 1
        hit = -1
        cur = x
        for j in range(s):
            if cur == n - 1:
                hit = j
                break
            cur = cur * cur % n
            if cur == 1:  # once 1, never -1 again (n > 2)
                break
        if is_root and hit >= 0:
            overlap += 1
        if is_root:
            codes[w] = CODE_DTH_ROOT
            counts[CODE_DTH_ROOT] += 1
        elif hit >= 0:
            codes[w] = CODE_MINUS_ONE
            stages[w] = hit
            counts[CODE_MINUS_ONE] += 1
        else:
            counts[CODE_WITNESS] += 1
    return codes, stages, powd, counts, overlap


def scan_compiled(n: int, d: int, s: int, prime_factors) -> tuple:
    spf = smallest_prime_factor(n)
    pf = np.asarray(prime_factors, np.int64)
    return _scan_kernel(n, d, s, pf, spf)


def pow_all_numpy(n: int, exponent: int) -> np.ndarray:
    """w**exponent mod n for every w in [0, n), by vectorized square-and-multiply."""
    base = np.arange(n, dtype=np.int64)
    out = np.ones(n, np.int64)
    out %= n
    e = exponent
    while e > 0:
        if e & 1:
            out *= base
            out %= n
        e >>= 1
        if e:
            base *= base
            base %= n
    return out


def scan_numpy(n: int, d: int, s: int, prime_factors) -> tuple:
    """Same contract as the compiled kernel, written against numpy only."""
    codes = np.zeros(n, np.uint8)
    coprime = np.ones(n, bool)
    coprime[0] = False
    for p in prime_factors:
        coprime[::p] = False
    codes[~coprime] = CODE_NON_COPRIME

    powd = pow_all_numpy(n, d)
    is_root = coprime & (powd == 1)
    stages = np.full(n, -1, np.int8)
    cur = powd.copy()
    alive = coprime.copy()
    overlap = 0
    for j in range(s):
        hit = alive & (cur == n - 1)
        stages[hit] = j
        overlap += int(np.count_nonzero(hit & is_root))
        alive &= ~hit
        if j + 1 < s and alive.any():
            idx = np.nonzero(alive)[0]
            sq = cur[idx] * cur[idx] % n
            cur[idx] = sq
            alive[idx[sq == 1]] = False

    hit_any = stages >= 0
    codes[is_root] = CODE_DTH_ROOT
    codes[coprime & hit_any & ~is_root] = CODE_MINUS_ONE
    stages[codes != CODE_MINUS_ONE] = -1
    counts = np.bincount(codes, minlength=4).astype(np.int64)
    return codes, stages, powd, counts, overlap

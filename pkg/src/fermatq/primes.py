"""Primality testing, prime enumeration, and primitive roots."""

import math

import numpy as np

# Witness set proven sufficient for every n < 3.317e24, which covers the
# full 64-bit range used anywhere in this package.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 1 << 64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64."""
    if n >= _MR_LIMIT:
        raise ValueError("deterministic witness set only proven below 2**64")
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n, by a plain sieve."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def primes_in_range(lo: int, hi: int) -> np.ndarray:
    """Primes in the closed interval [lo, hi], by a segmented sieve."""
    if hi < lo or hi < 2:
        return np.empty(0, dtype=np.int64)
    lo = max(lo, 2)
    base = primes_upto(math.isqrt(hi))
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in base:
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= hi:
            seg[start - lo :: p] = False
    out = np.nonzero(seg)[0] + lo
    return out.astype(np.int64)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; intended for n < 2**31."""
    if n <= 0:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for d in (2, 3):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    d = 5
    while d * d <= n:
        for step in (d, d + 2):
            while n % step == 0:
                out[step] = out.get(step, 0) + 1
                n //= step
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def smallest_primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group modulo an odd prime."""
    if p == 3:
        return 2
    n = p - 1
    prime_factors = list(factorize(n))
    g = 2
    while True:
        if all(pow(g, n // q, p) != 1 for q in prime_factors):
            return g
        g += 1

"""Exact evaluation of the quotient map q_p and its modular arithmetic helpers.

For an odd prime p and gcd(u, p) = 1, q_p(u) is the unique residue in [0, p)
with q_p(u) = ((u**(p-1) - 1) / p) mod p; multiples of p map to 0.  The value
depends only on u mod p**2.  Two identities drive everything else in this
package and are enforced by the test suite:

    q_p(u*v)    = q_p(u) + q_p(v)          (mod p)   for gcd(uv, p) = 1
    q_p(u+k*p)  = q_p(u) - k * u**-1       (mod p)   for gcd(u, p) = 1
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotPrimeError
from .primes import is_prime, smallest_primitive_root

# Keeps p*p < 2**62 so that mod-p products fit comfortably in int64 arrays.
MAX_PRIME = 1 << 31

# Largest p for which (p*p - 1)**2 still fits in int64, i.e. the vectorized
# mod-p**2 power ladder is exact.
_VEC_EVAL_MAX_P = 46340


@dataclass(frozen=True)
class FqContext:
    """An odd prime with its square and an optional primitive root."""

    p: int
    p_squared: int
    g: int | None = None


def make_context(p: int, want_g: bool = False) -> FqContext:
    """Validate p and build the context all operations hang off.

    Raises NotPrimeError unless p is an odd prime with 3 <= p < 2**31.
    With want_g, the smallest primitive root modulo p is attached.
    """
    p = int(p)
    if p < 3 or p >= MAX_PRIME or p % 2 == 0 or not is_prime(p):
        raise NotPrimeError(f"p must be an odd prime in [3, 2**31); got {p}")
    g = smallest_primitive_root(p) if want_g else None
    return FqContext(p=p, p_squared=p * p, g=g)


def qp_eval(ctx: FqContext, u: int) -> int:
    """q_p(u) for any integer u, via one power ladder modulo p**2.

    Total function: u is first reduced into [0, p**2) and multiples of p
    return 0.  The division by p is exact by Fermat's little theorem.
    """
    p = ctx.p
    w = u % ctx.p_squared
    if w % p == 0:
        return 0
    return (pow(w, p - 1, ctx.p_squared) - 1) // p


def qp_eval_block(ctx: FqContext, us) -> np.ndarray:
    """Vectorized qp_eval over an array of integers.

    Same direct power-ladder formula as qp_eval; used as the bulk oracle when
    checking table generators.  Falls back to scalar evaluation when p**2 is
    too large for exact int64 products.
    """
    us = np.asarray(us, dtype=np.int64)
    p = ctx.p
    if p > _VEC_EVAL_MAX_P:
        return np.array([qp_eval(ctx, int(u)) for u in us.ravel()], dtype=np.int64).reshape(us.shape)
    m = ctx.p_squared
    w = us % m
    result = np.ones_like(w)
    base = w.copy()
    e = p - 1
    while e:
        if e & 1:
            result = result * base % m
        base = base * base % m
        e >>= 1
    out = (result - 1) // p
    out[w % p == 0] = 0
    return out


def lp_smallest_nonzero(ctx: FqContext) -> int:
    """Least u >= 1 with q_p(u) != 0.

    Always exists: q_p(p-1) = 1.  Equals 2 unless p is a Wieferich prime.
    """
    u = 1
    while True:
        if qp_eval(ctx, u) != 0:
            return u
        u += 1


def inverse_table(p: int) -> np.ndarray:
    """Array inv with inv[v] = v**-1 mod p for v in [1, p), and inv[0] = 0.

    Computed by a vectorized Fermat power ladder; O(p log p) word operations
    but only ~log p numpy passes.
    """
    v = np.arange(p, dtype=np.int64)
    result = np.ones(p, dtype=np.int64)
    base = v.copy()
    e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    result[0] = 0
    return result


def batch_inverse(values, m: int) -> list[int]:
    """Inverses of `values` modulo m with one modular inversion total.

    Montgomery's prefix-product trick; every value must be coprime to m.
    """
    values = [int(v) for v in values]
    prefix = []
    acc = 1
    for v in values:
        acc = acc * v % m
        prefix.append(acc)
    inv_acc = pow(acc, -1, m)
    out = [0] * len(values)
    for i in range(len(values) - 1, -1, -1):
        before = prefix[i - 1] if i else 1
        out[i] = inv_acc * before % m
        inv_acc = inv_acc * values[i] % m
    return out

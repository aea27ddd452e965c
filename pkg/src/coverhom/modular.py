"""Exact modular arithmetic helpers.

Elements of F_r and Z/d are plain Python ints reduced into [0, m); the
helpers below never use floating point.  CRT coefficients are arbitrary
precision, since the combined exponent e = sum q_i * r_i^k exceeds machine
width already for moderate moduli.
"""

import math

from .errors import DivisionByZero, InvalidConfig


def is_prime(n: int) -> bool:
    """Trial-division primality check for configuration values (small n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(r: int, allow_two: bool = False) -> int:
    if not is_prime(r):
        raise InvalidConfig(f"{r} is not prime")
    if r == 2 and not allow_two:
        raise InvalidConfig("r = 2 is only supported by the free-group constructions")
    return r


def ff_inv(a: int, r: int) -> int:
    """Inverse of a in F_r.  Raises DivisionByZero on a = 0."""
    if a % r == 0:
        raise DivisionByZero(f"0 has no inverse in F_{r}")
    return pow(a, -1, r)


def crt_coefficients(primes, k: int):
    """CRT weights for lifting per-prime data to Z/d, d = prod(primes).

    Returns (qs, e) with q_i = 1 mod r_i^(k+1), q_i = 0 mod r_j^(k+1) for
    j != i, and e = sum_i q_i * r_i^k.
    """
    primes = list(primes)
    if not primes:
        raise InvalidConfig("need at least one prime")
    if len(set(primes)) != len(primes):
        raise InvalidConfig(f"primes must be distinct: {primes}")
    for r in primes:
        if not is_prime(r):
            raise InvalidConfig(f"{r} is not prime")
    if k < 1:
        raise InvalidConfig(f"k must be >= 1, got {k}")
    mods = [r ** (k + 1) for r in primes]
    total = math.prod(mods)
    qs = []
    for m in mods:
        rest = total // m
        qs.append(rest * pow(rest, -1, m))
    e = sum(q * r ** k for q, r in zip(qs, primes))
    return qs, e


def binomial_mod(n: int, e: int, r: int) -> int:
    """Binomial coefficient C(n, e) reduced mod r, computed exactly."""
    if e < 0 or e > n:
        raise InvalidConfig(f"binomial index out of range: C({n}, {e})")
    return math.comb(n, e) % r


def catalan_mod(m: int, r: int) -> int:
    """m-th Catalan number mod r, via the exact formula C(2m,m) - C(2m,m+1)."""
    if m < 0:
        raise InvalidConfig(f"Catalan index must be >= 0, got {m}")
    return (math.comb(2 * m, m) - math.comb(2 * m, m + 1)) % r

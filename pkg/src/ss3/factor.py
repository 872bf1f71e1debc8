"""Integer factorization for group orders: trial division, then Pollard rho.

Everything here is deterministic so that repeated context construction
yields identical results.
"""

from __future__ import annotations

from math import gcd

from .errors import FactorizationFailure

TRIAL_DIVISION_BOUND = 10**6

# Deterministic Miller-Rabin witness set, valid for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the integer sizes this library needs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, max_rounds: int = 64) -> int | None:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant).

    The polynomial offset c is swept deterministically; returns None only
    if every round fails, which does not happen for the sizes we factor.
    """
    for c in range(1, max_rounds + 1):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
            if r > 1 << 24:
                break
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(n: int) -> list[int]:
    """Prime factors of n >= 1 with multiplicity, sorted ascending."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors: list[int] = []
    for p in (2, 3):
        while n % p == 0:
            factors.append(p)
            n //= p
    f = 5
    while f <= TRIAL_DIVISION_BOUND and f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                factors.append(p)
                n //= p
        f += 6
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_probable_prime(m):
                factors.append(m)
                continue
            g = _pollard_rho(m)
            if g is None or g in (1, m):
                raise FactorizationFailure(f"could not split composite {m}")
            stack.extend((g, m // g))
    factors.sort()
    return factors

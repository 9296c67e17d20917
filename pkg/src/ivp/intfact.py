"""Integer primality and budgeted factorization.

Trial division by primes up to ``trial_bound`` (default 10**6), then Brent's
variant of Pollard rho with a per-call iteration cap.  Cofactors that resist
the budget are returned unfactored instead of being guessed at.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

TRIAL_BOUND = 10**6
RHO_ITERATIONS = 200_000


@lru_cache(maxsize=4)
def primes_up_to(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i, b in enumerate(sieve) if b)


_SMALL = primes_up_to(1000)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x):
        return (x + n) // 2 % n if x % 2 else x // 2 % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Baillie-PSW test (no known counterexamples; exact below 2**64)."""
    if n < 2:
        return False
    for p in _SMALL:
        if n == p:
            return True
        if n % p == 0:
            return False
    return _strong_probable_prime(n, 2) and _strong_lucas(n)


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_probable_prime(p):
        raise ValueError(f"{p!r} is not prime")
    return p


def pollard_rho(n: int, max_iterations: int = RHO_ITERATIONS, seed: int = 1) -> int | None:
    """Return a nontrivial factor of composite ``n`` or None when the budget runs out."""
    if n % 2 == 0:
        return 2
    spent = 0
    c = seed
    while spent < max_iterations:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1 and spent < max_iterations:
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
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
        c += 1
    return None


@dataclass
class Factorization:
    """``n = sign * prod(p**e) * unfactored``; ``unfactored`` is 1 or a composite left over."""

    n: int
    factors: dict[int, int] = field(default_factory=dict)
    unfactored: int = 1

    @property
    def complete(self) -> bool:
        return self.unfactored == 1


def factor_integer(
    n: int, trial_bound: int = TRIAL_BOUND, rho_iterations: int = RHO_ITERATIONS
) -> Factorization:
    if n == 0:
        raise ValueError("cannot factor 0")
    result = Factorization(n)
    m = abs(n)
    for p in primes_up_to(trial_bound):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result.factors[p] = e
    if m == 1:
        return result
    stack = [m]
    leftover = 1
    while stack:
        k = stack.pop()
        if k == 1:
            continue
        if is_probable_prime(k):
            result.factors[k] = result.factors.get(k, 0) + 1
            continue
        r = isqrt(k)
        if r * r == k:
            stack += [r, r]
            continue
        d = pollard_rho(k, rho_iterations)
        if d is None:
            leftover *= k
        else:
            stack += [d, k // d]
    result.factors = dict(sorted(result.factors.items()))
    result.unfactored = leftover
    return result


def v_p(n, p: int):
    """p-adic valuation of a nonzero integer or Fraction (None for zero)."""
    if isinstance(n, Fraction):
        if n == 0:
            return None
        return v_p(n.numerator, p) - v_p(n.denominator, p)
    if n == 0:
        return None
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e

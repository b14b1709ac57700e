"""Exact integer arithmetic over arbitrary-precision values.

Factorization against known prime hints, divisor tests, multiplicative
orders, and prime-power / perfect-power detection.  Everything here is a
pure function; values at corpus scale are small enough for trial division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class OrderUndefinedError(ValueError):
    """Raised when a multiplicative order is requested for gcd(r, f) > 1."""


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its prime factorization.

    ``factors`` maps prime -> exponent (>= 1), keys strictly increasing.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"value must be positive, got {self.value}")
        prod = 1
        last = 0
        for p, e in self.factors:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponent for {p} must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(
                f"factorization recomposes to {prod}, expected {self.value}"
            )

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p)
                          for p, e in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; fine at corpus scale."""
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


def factorize(n: int, hint_primes: tuple[int, ...] = ()) -> FactoredInt:
    """Factor ``n`` completely, dividing by the hints first.

    Character degrees divide the group order, so the order's primes always
    suffice as hints; the unbounded trial-division fallback only runs for
    hint-free inputs such as demo records.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    factors: list[tuple[int, int]] = []
    rest = n
    for p in hint_primes:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    if rest > 1:
        for p, e in _trial_division(rest):
            factors.append((p, e))
    factors.sort()
    return FactoredInt(n, tuple(factors))


def _trial_division(n: int):
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        yield 2, e
    f = 3
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e:
            yield f, e
        f += 2
    if n > 1:
        yield n, 1


def multiplicative_order(r: int, f: int) -> int:
    """Smallest a >= 1 with r^a = 1 (mod f).  Requires gcd(r, f) = 1."""
    if f < 2:
        raise ValueError(f"modulus must be >= 2, got {f}")
    if math.gcd(r, f) != 1:
        raise OrderUndefinedError(f"order undefined: gcd({r}, {f}) > 1")
    a = 1
    x = r % f
    while x != 1:
        x = (x * r) % f
        a += 1
    return a


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, e) with n = p^e and p prime, else None."""
    if n < 2:
        return None
    for p, e in _trial_division(n):
        return (p, e) if p**e == n else None
    return None


def perfect_power(n: int) -> tuple[int, int] | None:
    """Return (b, k) with n = b^k and k >= 2 maximal, else None.

    Maximality means the base is never itself a perfect power.
    """
    if n < 2:
        return None
    best = None
    for k in range(2, n.bit_length() + 1):
        b = _iroot(n, k)
        if b**k == n:
            best = (b, k)
    return best


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n."""
    if n < 0:
        raise ValueError("negative input")
    if k == 1 or n in (0, 1):
        return n
    hi = 1 << ((n.bit_length() + k - 1) // k + 1)
    lo = 0
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def divides(a: int, b: int) -> bool:
    """True iff a divides b (a > 0)."""
    return b % a == 0

"""Degree-set analytics.

Isolated degrees, divisibility-maximal degrees, consecutive pairs,
prime-power / perfect-power inventories, and inter-group coverage tests.
Degree 1 is excluded everywhere: only nontrivial degrees matter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import perfect_power, prime_power
from .corpus import DegreeMultiset


@dataclass(frozen=True)
class DegreeAnalysis:
    isolated: frozenset[int]
    divisibility_maximal: frozenset[int]
    consecutive_pairs: frozenset[tuple[int, int]]
    prime_power_degrees: frozenset[int]
    perfect_power_degrees: frozenset[tuple[int, int, int]]


def isolated_degrees(ms: DegreeMultiset) -> set[int]:
    """Degrees > 1 divisible by no other nontrivial degree and with no
    proper multiple in the set."""
    degs = ms.nontrivial()
    out = set()
    for d in degs:
        if any(e != d and d % e == 0 for e in degs):
            continue
        if any(e != d and e % d == 0 for e in degs):
            continue
        out.add(d)
    return out


def divisibility_maximal_degrees(ms: DegreeMultiset) -> set[int]:
    """Degrees > 1 with no proper multiple in the set."""
    degs = ms.nontrivial()
    return {d for d in degs if not any(e != d and e % d == 0 for e in degs)}


def consecutive_pairs(ms: DegreeMultiset) -> set[tuple[int, int]]:
    """All (d, d+1) with d > 1 and both degrees present."""
    s = ms.degree_set()
    return {(d, d + 1) for d in s if d > 1 and d + 1 in s}


def prime_power_degrees(ms: DegreeMultiset) -> set[int]:
    """Nontrivial degrees of the form p^e (e >= 1)."""
    return {d for d in ms.nontrivial() if prime_power(d) is not None}


def perfect_power_degrees(ms: DegreeMultiset) -> set[tuple[int, int, int]]:
    """Nontrivial degrees b^k with k >= 2 maximal, as (degree, b, k)."""
    out = set()
    for d in ms.nontrivial():
        pp = perfect_power(d)
        if pp is not None:
            out.add((d, pp[0], pp[1]))
    return out


def analyze(ms: DegreeMultiset) -> DegreeAnalysis:
    return DegreeAnalysis(
        isolated=frozenset(isolated_degrees(ms)),
        divisibility_maximal=frozenset(divisibility_maximal_degrees(ms)),
        consecutive_pairs=frozenset(consecutive_pairs(ms)),
        prime_power_degrees=frozenset(prime_power_degrees(ms)),
        perfect_power_degrees=frozenset(perfect_power_degrees(ms)),
    )


def covers_divisibility(src: DegreeMultiset,
                        dst: DegreeMultiset) -> tuple[bool, list[int]]:
    """Does every degree of ``src`` divide some degree of ``dst``?

    Returns (verdict, non-covered witnesses).
    """
    dst_degs = dst.degrees
    missing = [d for d in src.degrees
               if not any(e % d == 0 for e in dst_degs)]
    return (not missing, missing)


def degree_sets_equal(a: DegreeMultiset, b: DegreeMultiset) -> bool:
    """Equality of the underlying degree sets; multiplicities ignored."""
    return a.degree_set() == b.degree_set()

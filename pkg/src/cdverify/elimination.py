"""Step-1 engines.

``frobenius_search`` eliminates the solvable-factor Frobenius case: a
minimal non-abelian solvable quotient G/N that is Frobenius with elementary
abelian kernel of order r^a and complement index f forces, for every
divisibility-maximal degree x, f | x or r^a | x^2, and for every isolated
degree x, f = x or r^a | x^2.  The search enumerates all (f, r) candidates
and reports the survivors; elimination means no survivor.

``chief_factor_filter`` narrows the non-abelian chief factor G'/M to the
expected socle via power/consecutive/prime-power degree tests and the
degree-coverage sieve over the sporadic groups and the Tits group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import is_prime, multiplicative_order
from .corpus import Corpus, DegreeMultiset, GroupRecord
from .degrees import (consecutive_pairs, covers_divisibility,
                      divisibility_maximal_degrees, isolated_degrees,
                      perfect_power_degrees, prime_power_degrees)

#: The 26 sporadic simple groups plus the Tits group, ATLAS names.
SPORADIC_AND_TITS = (
    "M11", "M12", "M22", "M23", "M24",
    "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'",
    "HS", "McL", "He", "Ru", "Suz", "O'N",
    "HN", "Ly", "Th", "B", "M",
    "2F4(2)'",
)


@dataclass(frozen=True)
class FrobeniusCertificate:
    """A feasible (f, r, a) triple surviving the kernel constraints.

    ``no_r_needed`` marks certificates feasible through the f-branch alone
    (every constraint met by divisibility of f); r is then instantiated as
    the smallest prime coprime to f so the triple stays concrete.
    """

    f: int
    r: int
    a: int
    kernel_order: int
    no_r_needed: bool = False

    def __post_init__(self):
        if self.f <= 1:
            raise ValueError("f must exceed 1")
        if gcd(self.r, self.f) != 1:
            raise ValueError("gcd(r, f) must be 1")
        if pow(self.r, self.a, self.f) != 1:
            raise ValueError("r^a must be 1 mod f")
        if self.kernel_order != self.r**self.a:
            raise ValueError("kernel order must equal r^a")


@dataclass(frozen=True)
class EliminationReport:
    prime_power_case_ruled_out: bool
    prime_power_witnesses: tuple[int, ...]
    certificates: tuple[FrobeniusCertificate, ...]
    trace: tuple[tuple[int, int, str], ...]  # (f, r, rejection reason)

    @property
    def eliminated(self) -> bool:
        return self.prime_power_case_ruled_out and not self.certificates


def _smallest_coprime_prime(f: int) -> int:
    p = 2
    while True:
        if is_prime(p) and gcd(p, f) == 1:
            return p
        p += 1


def frobenius_search(ms: DegreeMultiset) -> EliminationReport:
    """Run the Frobenius-kernel elimination over one degree set."""
    degs = ms.nontrivial()
    if not degs:
        raise ValueError("need at least one nontrivial degree")
    iso = sorted(isolated_degrees(ms))
    divmax = sorted(divisibility_maximal_degrees(ms))

    pp = sorted(prime_power_degrees(ms))
    ruled_out = not pp

    # candidate kernel primes: r^a | x^2 forces r | x for some
    # divisibility-maximal x, so primes dividing members of X are complete
    primes: set[int] = set()
    for x in divmax:
        n = x
        p = 2
        while p * p <= n:
            if n % p == 0:
                primes.add(p)
                while n % p == 0:
                    n //= p
            p += 1
        if n > 1:
            primes.add(n)

    certs: list[FrobeniusCertificate] = []
    trace: list[tuple[int, int, str]] = []

    for f in degs:
        # f-branch only: every divmax degree divisible, every isolated equal
        if (all(x % f == 0 for x in divmax)
                and all(x == f for x in iso)):
            r = _smallest_coprime_prime(f)
            a = multiplicative_order(r, f)
            certs.append(FrobeniusCertificate(f, r, a, r**a,
                                              no_r_needed=True))
        for r in sorted(primes):
            if gcd(r, f) != 1:
                trace.append((f, r, f"gcd(r, f) = {gcd(r, f)} > 1"))
                continue
            a = multiplicative_order(r, f)
            ra = r**a
            reason = None
            for x in divmax:
                if x % f != 0 and (x * x) % ra != 0:
                    reason = (f"divisibility-maximal degree {x}: "
                              f"f does not divide it and r^a = {ra} "
                              f"does not divide {x}^2")
                    break
            if reason is None:
                for x in iso:
                    if x != f and (x * x) % ra != 0:
                        reason = (f"isolated degree {x}: f != {x} and "
                                  f"r^a = {ra} does not divide {x}^2")
                        break
            if reason is None:
                certs.append(FrobeniusCertificate(f, r, a, ra))
            else:
                trace.append((f, r, reason))

    certs.sort(key=lambda c: (c.f, c.r))
    return EliminationReport(
        prime_power_case_ruled_out=ruled_out,
        prime_power_witnesses=tuple(pp),
        certificates=tuple(certs),
        trace=tuple(trace),
    )


@dataclass(frozen=True)
class ChiefFactorReport:
    """Outcome of narrowing the chief factor G'/M for one target group.

    ``coverage`` holds every sporadic/Tits S whose degrees all divide some
    degree of the target (a Table-2 row); ``kills`` the extendible-degree
    witnesses eliminating the non-socle ones; ``survivors`` what remains.
    """

    target: str
    expected_socle: str
    power_findings: tuple[tuple[int, int, int], ...]  # advisory (d, b, k)
    alternating_ruled_out: bool
    consecutive_witnesses: tuple[tuple[int, int], ...]
    lie_type_ruled_out: bool
    prime_power_witnesses: tuple[int, ...]
    coverage: tuple[str, ...]
    kills: tuple[tuple[str, int], ...]  # (candidate, extendible witness)
    survivors: tuple[str, ...]
    unique_survivor: str | None

    @property
    def socle_identified(self) -> bool:
        return (self.alternating_ruled_out and self.lie_type_ruled_out
                and self.unique_survivor == self.expected_socle)


def coverage_row(h: GroupRecord, corpus: Corpus) -> tuple[str, ...]:
    """All sporadic/Tits S whose degrees each divide some degree of h."""
    out = []
    for name in SPORADIC_AND_TITS:
        s = corpus.get(name)
        if s is None:
            raise KeyError(
                f"degree-coverage sieve needs a corpus record for {name}")
        ok, _ = covers_divisibility(s.degrees, h.degrees)
        if ok:
            out.append(name)
    return tuple(out)


def chief_factor_filter(h: GroupRecord, h0: GroupRecord,
                        corpus: Corpus) -> ChiefFactorReport:
    """Identify the unique simple chief factor candidate for cd(h)."""
    ms = h.degrees
    power_findings = tuple(sorted(perfect_power_degrees(ms)))
    consec = tuple(sorted(consecutive_pairs(ms)))
    pp = tuple(sorted(prime_power_degrees(ms)))

    coverage = coverage_row(h, corpus)
    kills: list[tuple[str, int]] = []
    survivors: list[str] = []
    h_set = ms.degree_set()
    for name in coverage:
        if name == h0.name:
            survivors.append(name)
            continue
        s = corpus[name]
        witness = next((d for d in s.extendible_degrees if d not in h_set),
                       None)
        if witness is None:
            survivors.append(name)
        else:
            kills.append((name, witness))

    unique = survivors[0] if len(survivors) == 1 else None
    return ChiefFactorReport(
        target=h.name,
        expected_socle=h0.name,
        power_findings=power_findings,
        alternating_ruled_out=not consec,
        consecutive_witnesses=consec,
        lie_type_ruled_out=not pp,
        prime_power_witnesses=pp,
        coverage=coverage,
        kills=tuple(sorted(kills)),
        survivors=tuple(survivors),
        unique_survivor=unique,
    )

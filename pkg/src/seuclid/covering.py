"""Positive certification by interval covering.

Builds the interval family I_j^k = ((j - sqrt(3/D))/k, (j + sqrt(3/D))/k)
for S-smooth k, checks exact coverage of the closed unit interval by a
greedy sweep, applies the discriminant sufficiency bound, and computes
the uncovered residual gaps used in the exceptional-case analysis.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .exact import QuadSurd, SSet, SurdValue, surd_cmp
from .field import QuadField

__all__ = [
    "Interval",
    "CoverCertificate",
    "FailureAt",
    "Inconclusive",
    "Residual",
    "intervals",
    "covers_unit",
    "certify_euclidean",
    "theorem2_bound",
    "residual",
    "replay_chain",
]


@dataclass(frozen=True)
class Interval:
    """Open interval I_j^k, the projection of the strip of radius-1/k disks
    centered at the points (i + j*w)/k."""

    j: int
    k: int
    lo: SurdValue
    hi: SurdValue

    @classmethod
    def make(cls, j: int, k: int, D: int) -> "Interval":
        return cls(j=j, k=k, lo=SurdValue(j, -1, k, D), hi=SurdValue(j, +1, k, D))


@dataclass(frozen=True)
class CoverCertificate:
    """A replayable proof that the intervals cover [0, 1].

    The chain lists (j, k) pairs in sweep order: the first interval
    strictly contains 0, each next interval starts strictly below the
    reach so far, and the final reach exceeds 1.
    """

    d: int
    s: SSet
    k_max: int
    chain: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FailureAt:
    """Greedy sweep failure: `at` is the supremum reached, the first
    uncovered point."""

    at: SurdValue


@dataclass(frozen=True)
class Inconclusive:
    reason: str


@dataclass(frozen=True)
class Residual:
    """Maximal closed gaps of [0, 1] not covered by any interval."""

    gaps: tuple[tuple[SurdValue, SurdValue], ...]

    def total_length(self) -> QuadSurd:
        total = QuadSurd(Fraction(0))
        for lo, hi in self.gaps:
            total = total + (hi.to_quadsurd() - lo.to_quadsurd())
        return total


def intervals(fld: QuadField, s: SSet, k_max: int) -> list[Interval]:
    """All I_j^k with S-smooth k <= k_max, 0 <= j <= k, gcd(j, k) = 1,
    sorted by left endpoint."""
    if k_max < 1:
        raise ValueError("k_max must be positive")
    result = []
    for k in s.smooth_upto(k_max):
        for j in range(k + 1):
            if math.gcd(j, k) == 1:
                result.append(Interval.make(j, k, fld.D))
    result.sort(key=functools.cmp_to_key(lambda u, v: surd_cmp(u.lo, v.lo)))
    return result


def covers_unit(ivs: list[Interval], *, d: int = 0, s: SSet = SSet()) -> CoverCertificate | FailureAt:
    """Greedy sweep with exact surd comparisons.

    The reach starts at 0, which must lie strictly inside some interval;
    each step extends by the interval with lo < reach maximizing hi;
    success once the reach exceeds 1.  Success covers the full closed
    interval [0, 1].
    """
    if not ivs:
        return FailureAt(SurdValue(0, 0, 1, 3))
    D = ivs[0].lo.D
    reach = SurdValue.from_rational(0, D)
    one = SurdValue.from_rational(1, D)
    chain: list[Interval] = []
    active: list[Interval] = []
    i = 0
    while surd_cmp(reach, one) <= 0:
        while i < len(ivs) and surd_cmp(ivs[i].lo, reach) < 0:
            active.append(ivs[i])
            i += 1
        active = [iv for iv in active if surd_cmp(iv.hi, reach) > 0]
        if not active:
            return FailureAt(reach)
        best = active[0]
        for iv in active[1:]:
            if surd_cmp(iv.hi, best.hi) > 0:
                best = iv
        chain.append(best)
        reach = best.hi
    k_max = max(iv.k for iv in chain)
    return CoverCertificate(d=d, s=s, k_max=k_max, chain=tuple((iv.j, iv.k) for iv in chain))


def replay_chain(d: int, D: int, chain: list[tuple[int, int]]) -> bool:
    """Independently re-check a certificate chain with surd comparisons only."""
    if not chain:
        return False
    zero = SurdValue.from_rational(0, D)
    one = SurdValue.from_rational(1, D)
    j0, k0 = chain[0]
    first = Interval.make(j0, k0, D)
    if not (surd_cmp(first.lo, zero) < 0 < surd_cmp(first.hi, zero)):
        return False
    reach = first.hi
    for j, k in chain[1:]:
        iv = Interval.make(j, k, D)
        if surd_cmp(iv.lo, reach) >= 0:
            return False
        if surd_cmp(iv.hi, reach) > 0:
            reach = iv.hi
    return surd_cmp(reach, one) > 0


def theorem2_bound(fld: QuadField) -> int:
    """Smallest integer strictly greater than sqrt(D/3).

    Any S containing all primes below this bound admits a cover
    certificate.
    """
    b = 1
    while 3 * b * b <= fld.D:
        b += 1
    return b


def certify_euclidean(
    fld: QuadField, s: SSet, k_max: int | None = None
) -> CoverCertificate | Inconclusive:
    """Run the covering procedure: enumerate intervals up to X = 3*q^2
    (q = smallest prime not in S) and sweep.

    Returns a certificate whose k_max is the minimal sufficient one, or
    Inconclusive when D > 3*q^2 (no cover can exist) or no cover is
    found up to X.
    """
    q = s.smallest_missing_prime()
    x = 3 * q * q if k_max is None else k_max
    if fld.D > 3 * q * q:
        return Inconclusive(f"D = {fld.D} exceeds 3*q^2 = {3 * q * q} for q = {q}")
    for cand in s.smooth_upto(x):
        result = covers_unit(intervals(fld, s, cand), d=fld.d, s=s)
        if isinstance(result, CoverCertificate):
            return result
    return Inconclusive(f"no cover found with S-smooth k <= {x}")


def residual(fld: QuadField, s: SSet, k_max: int) -> Residual:
    """Exact maximal closed gaps of [0, 1] left uncovered by the open
    intervals with S-smooth k <= k_max, sorted left to right."""
    D = fld.D
    zero = SurdValue.from_rational(0, D)
    one = SurdValue.from_rational(1, D)
    ivs = [
        iv
        for iv in intervals(fld, s, k_max)
        if surd_cmp(iv.hi, zero) > 0 and surd_cmp(iv.lo, one) < 0
    ]
    gaps: list[tuple[SurdValue, SurdValue]] = []
    pos = zero
    while surd_cmp(pos, one) <= 0:
        containing = [iv for iv in ivs if surd_cmp(iv.lo, pos) < 0 < surd_cmp(iv.hi, pos)]
        if containing:
            best = containing[0].hi
            for iv in containing[1:]:
                if surd_cmp(iv.hi, best) > 0:
                    best = iv.hi
            pos = best
            continue
        starts = [iv for iv in ivs if surd_cmp(iv.lo, pos) >= 0]
        if not starts:
            gaps.append((pos, one))
            break
        nlo = starts[0].lo
        for iv in starts[1:]:
            if surd_cmp(iv.lo, nlo) < 0:
                nlo = iv.lo
        if surd_cmp(nlo, one) >= 0:
            gaps.append((pos, one))
            break
        gaps.append((pos, nlo))
        ext = [iv for iv in ivs if surd_cmp(iv.lo, nlo) <= 0 < surd_cmp(iv.hi, nlo)]
        if not ext:
            # isolated touching point; resume just past it via intervals
            # opening at nlo (lo == nlo)
            ext = [iv for iv in ivs if surd_cmp(iv.lo, nlo) == 0]
            if not ext:
                gaps[-1] = (gaps[-1][0], one)
                break
        best = ext[0].hi
        for iv in ext[1:]:
            if surd_cmp(iv.hi, best) > 0:
                best = iv.hi
        pos = best
    return Residual(tuple(gaps))

"""One-dimensional continuous domains with exact rational arithmetic.

Domains are finite unions of open intervals with rational endpoints,
symmetric about 0. Upper bounds come from integer lattices cZ whose
nonzero points avoid the domain (certifying the value c) and from the
measure halving m/2. Lower bounds come from tent trains: convolving the
triangle of half-width c with a finite pulse pattern D and its mirror
gives a positive definite function supported in (D - D) + (-c, c), whose
height and integral are exact rationals.

Everything in this module is computed in fractions; no floats enter any
decision.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import BoundReport
from .errors import (CertificateInvalidError, DomainNotSymmetricError,
                     WitnessRejectedError)

Q = Fraction


def _rat(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError(f"rational required, got float {x!r}")
    return Fraction(x)


@dataclass(frozen=True)
class IntervalUnion:
    """Disjoint open intervals, sorted, symmetric about 0, covering a
    neighborhood of 0 (the constant is degenerate without one)."""

    pieces: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.pieces:
            raise DomainNotSymmetricError("domain is empty", offender=None)
        for lo, hi in self.pieces:
            if lo >= hi:
                raise ValueError(f"empty or inverted interval ({lo}, {hi})")
        for (l1, h1), (l2, h2) in zip(self.pieces, self.pieces[1:]):
            if l2 < h1:
                raise ValueError(
                    f"intervals ({l1}, {h1}) and ({l2}, {h2}) overlap")
        neg = tuple(sorted((-hi, -lo) for lo, hi in self.pieces))
        if neg != self.pieces:
            raise DomainNotSymmetricError(
                "domain is not symmetric about 0", offender=neg[0])
        if not any(lo < 0 < hi for lo, hi in self.pieces):
            raise DomainNotSymmetricError(
                "domain must contain a neighborhood of 0", offender=Q(0))

    @property
    def measure(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.pieces), Q(0))

    @property
    def sup(self) -> Fraction:
        return self.pieces[-1][1]

    def __contains__(self, x) -> bool:
        v = _rat(x)
        return any(lo < v < hi for lo, hi in self.pieces)


def interval_union(pieces: Sequence) -> IntervalUnion:
    rat = tuple(sorted((_rat(lo), _rat(hi)) for lo, hi in pieces))
    return IntervalUnion(rat)


def punctured_interval(a, b) -> IntervalUnion:
    """(-a, a) with the two points +-b removed."""
    a, b = _rat(a), _rat(b)
    if not 0 < b < a:
        raise ValueError("need 0 < b < a")
    return interval_union([(-a, -b), (-b, b), (b, a)])


def lattice_certificate(domain: IntervalUnion, c) -> BoundReport:
    """Upper bound c from the lattice cZ, all checks exact.

    If no nonzero multiple of c lies in the domain, cZ is a packing set
    of density 1/c, which caps the constant at c.
    """
    c = _rat(c)
    if c <= 0:
        raise ValueError("lattice step must be positive")
    k = 1
    while k * c < domain.sup:
        if k * c in domain:
            raise CertificateInvalidError(
                f"lattice point {k * c} lies inside the domain")
        k += 1
    return BoundReport(c, "lattice", "upper", {"c": c})


def halving_bound(domain: IntervalUnion) -> BoundReport:
    """Upper bound: half the measure, exact."""
    return BoundReport(domain.measure / 2, "halving", "upper",
                       {"measure": domain.measure})


def _tent(c: Fraction, x: Fraction) -> Fraction:
    return max(c - abs(x), Q(0))


@dataclass(frozen=True)
class TentTrain:
    """f = tent_c * delta_D * delta_{-D}, positive definite by construction."""

    c: Fraction
    D: tuple[Fraction, ...]

    @property
    def f0(self) -> Fraction:
        return sum(_tent(self.c, d1 - d2) for d1 in self.D for d2 in self.D)

    @property
    def integral(self) -> Fraction:
        return self.c ** 2 * len(self.D) ** 2

    @property
    def ratio(self) -> Fraction:
        return self.integral / self.f0

    @property
    def support(self) -> IntervalUnion:
        diffs = sorted({d1 - d2 for d1 in self.D for d2 in self.D})
        merged: list[tuple[Fraction, Fraction]] = []
        for s in diffs:
            lo, hi = s - self.c, s + self.c
            if merged and lo < merged[-1][1]:
                # strict overlap only: tents touching end-to-end vanish at
                # the junction, which therefore stays outside the support
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        return IntervalUnion(tuple(merged))

    def transform_value(self, xi: float) -> float:
        """Float spot check of the transform; nonnegative up to roundoff."""
        if xi == 0.0:
            return float(self.c) ** 2 * len(self.D) ** 2
        base = 2.0 * math.sin(float(self.c) * xi / 2.0) / xi
        pulse = sum(cmath.exp(-1j * float(d) * xi) for d in self.D)
        return base * base * abs(pulse) ** 2


def tent_train(c, D) -> TentTrain:
    c = _rat(c)
    if c <= 0:
        raise ValueError("tent half-width must be positive")
    shifts = tuple(sorted(_rat(d) for d in D))
    if not shifts:
        raise ValueError("shift multiset must be nonempty")
    return TentTrain(c, shifts)


def _uncovered_part(piece: tuple[Fraction, Fraction],
                    domain: IntervalUnion) -> tuple[Fraction, Fraction] | None:
    """First open subinterval of `piece` missed by the domain, if any.

    The domain's pieces are disjoint, so a connected open interval is
    covered exactly when one piece swallows it whole.
    """
    lo, hi = piece
    for dlo, dhi in domain.pieces:
        if dlo <= lo and hi <= dhi:
            return None
    # not inside any single piece, so something is missing; name it
    overl = [(dlo, dhi) for dlo, dhi in domain.pieces if dhi > lo and dlo < hi]
    if not overl:
        return (lo, hi)
    dlo, dhi = overl[0]
    if dlo > lo:
        return (lo, min(dlo, hi))
    # left end covered; the first piece must stop short of hi
    nxt = overl[1][0] if len(overl) > 1 else hi
    if nxt == dhi:
        return (dhi, dhi)  # two domain pieces touch: the seam point leaks
    return (dhi, min(nxt, hi))


def witness_in_domain(train: TentTrain, domain: IntervalUnion) -> BoundReport:
    """Certified lower bound integral/f(0) once the support fits."""
    for piece in train.support.pieces:
        gap = _uncovered_part(piece, domain)
        if gap is not None:
            raise WitnessRejectedError(
                f"support piece ({piece[0]}, {piece[1]}) is not covered: "
                f"domain misses ({gap[0]}, {gap[1]})", offender=gap)
    return BoundReport(train.ratio, "tent-train", "lower", {"train": train})

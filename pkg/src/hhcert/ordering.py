"""Convex-order comparison of two functionals.

``compare(lhs, rhs)`` decides whether ``lhs(f) <= rhs(f)`` for every
continuous convex ``f``.  With ``G_l`` and ``G_r`` the BV transforms, the
inequality holds exactly when both sides agree on constants and on the
identity and the prefix integral ``H(t) = ∫_0^t (G_r - G_l)`` never goes
negative.  H is piecewise quadratic, so the decision is exact.

When the inequality fails an explicit convex witness is produced: a
constant or ``±u`` when the sides disagree on affine functions, otherwise
the hinge ``(u - t*)_+`` at the minimizer of H.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .functional import Functional, evaluate_exact
from .pwfun import (
    ONE,
    ZERO,
    PwFun,
    integral,
    min_prefix_integral,
    prefix_integrals,
    sign_profile,
    subtract,
)


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_COMPARABLE = "not_comparable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CrossingProfile:
    """Sign decomposition of ``g1 - g2`` after absorbing zero stretches.

    ``areas[i]`` is the (positive) integral of ``|g1 - g2|`` between
    consecutive crossings and ``signs[i]`` the sign of ``g1 - g2`` there.
    """

    crossings: tuple[Fraction, ...]
    areas: tuple[Fraction, ...]
    signs: tuple[int, ...]
    zero_intervals: tuple[tuple[Fraction, Fraction], ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    def partial_sums(self) -> list[Fraction]:
        """Running values of ``∫_0^x (g2 - g1)`` at each crossing and at 1.

        When ``g1 <= g2`` on the first interval these are the alternating
        sums ``A_0``, ``A_0 - A_1``, ``A_0 - A_1 + A_2``, ...
        """
        out, acc = [], ZERO
        for a, s in zip(self.areas, self.signs):
            acc -= s * a
            out.append(acc)
        return out


@dataclass(frozen=True)
class ConvexWitness:
    kind: str  # "hinge", "affine" or "constant"
    violation: Fraction
    t: Optional[Fraction] = None
    sign: int = 1

    def f(self, u):
        if self.kind == "hinge":
            return max(u - self.t, ZERO)
        if self.kind == "affine":
            return self.sign * u
        return Fraction(self.sign)

    def F(self, u):
        if self.kind == "hinge":
            return max(u - self.t, ZERO) ** 2 / 2
        if self.kind == "affine":
            return self.sign * u * u / 2
        return self.sign * u


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    mass_lhs: Fraction
    mass_rhs: Fraction
    mean_lhs: Fraction
    mean_rhs: Fraction
    profile: Optional[CrossingProfile] = None
    partial_sums: tuple[Fraction, ...] = ()
    min_prefix: Optional[tuple[Fraction, Fraction]] = None
    witness: Optional[ConvexWitness] = None


class ProfileError(ValueError):
    pass


def crossing_profile(g1: PwFun, g2: PwFun) -> CrossingProfile:
    """Crossing points and areas of the pair ``(g1, g2)``.

    Intervals where the difference vanishes are recorded but do not count
    as crossings; they are absorbed into the neighbouring areas.  A sign
    change across a zero stretch is located at the stretch's left end.
    """
    return _profile_of(subtract(g1, g2))


def _profile_of(d: PwFun) -> CrossingProfile:
    ivs = sign_profile(d)
    zeros = tuple((iv.lo, iv.hi) for iv in ivs if iv.sign == 0)
    blocks: list[list] = []  # [start, sign]
    for iv in ivs:
        if iv.sign == 0:
            continue
        if blocks and blocks[-1][1] == iv.sign:
            continue
        blocks.append([iv.lo, iv.sign])
    if not blocks:
        return CrossingProfile((), (), (), zeros)
    # crossing = end of the last nonzero interval before the sign flips
    crossings = []
    last_end = None
    cur_sign = None
    for iv in ivs:
        if iv.sign == 0:
            continue
        if cur_sign is not None and iv.sign != cur_sign:
            crossings.append(last_end)
        cur_sign, last_end = iv.sign, iv.hi
    cuts = [ZERO, *crossings, ONE]
    signs = tuple(b[1] for b in blocks)
    h = prefix_integrals(d, cuts)
    areas = tuple(abs(b - a) for a, b in zip(h, h[1:]))
    return CrossingProfile(tuple(crossings), areas, signs, zeros)


def check_necessary(lhs: Functional, rhs: Functional) -> tuple[bool, bool, dict]:
    """Equal mass and equal mean integral; both are needed for either direction."""
    values = {
        "mass_lhs": lhs.mass,
        "mass_rhs": rhs.mass,
        "mean_lhs": lhs.mean,
        "mean_rhs": rhs.mean,
    }
    return lhs.mass == rhs.mass, lhs.mean == rhs.mean, values


def check_levin_steckin(g1: PwFun, g2: PwFun) -> tuple[bool, tuple[Fraction, Fraction]]:
    """Decide ``∫ f dg1 <= ∫ f dg2`` for all convex f via prefix integrals.

    Returns the verdict and ``(t, H(t))`` at the minimum of
    ``H(t) = ∫_0^t (g2 - g1)``.  The inequality holds iff the end values
    match, H stays nonnegative and ``H(1) = 0``.
    """
    d = subtract(g2, g1)
    t, h = min_prefix_integral(d)
    holds = g1.final == g2.final and h >= 0 and integral(d, ZERO, ONE) == 0
    return holds, (t, h)


def check_alternating(profile: CrossingProfile, masses_equal: bool, means_equal: bool) -> Verdict:
    """Verdict from crossing parity and the alternating area sums.

    An even number of crossings never works; with an odd number the
    inequality holds iff ``A_0 >= A_1``, ``A_0 - A_1 + A_2 >= A_3`` and so on
    up to index ``n - 2``.  If ``g1`` starts above ``g2`` it fails outright.
    """
    if not (masses_equal and means_equal):
        return Verdict.NOT_COMPARABLE
    if not profile.areas:
        return Verdict.HOLDS
    if profile.n == 0:
        raise ProfileError("nonzero difference without crossings cannot have equal means")
    if profile.signs[0] > 0 or profile.n % 2 == 0:
        return Verdict.FAILS
    sums = profile.partial_sums()
    # minima of H sit right after each interval where g1 > g2
    if all(sums[k] >= 0 for k in range(1, profile.n - 1, 2)):
        return Verdict.HOLDS
    return Verdict.FAILS


def check_ohlin(g1: PwFun, g2: PwFun) -> Optional[Verdict]:
    """Single-crossing shortcut for genuine distribution functions.

    Only applies when both functions are nondecreasing with equal total
    mass and equal integrals; returns None otherwise, or when the pair
    does not cross exactly once in the right direction.
    """
    if not (g1.is_nondecreasing() and g2.is_nondecreasing()):
        return None
    if g1.final != g2.final or integral(g1, ZERO, ONE) != integral(g2, ZERO, ONE):
        return None
    profile = crossing_profile(g1, g2)
    if profile.n == 1 and profile.signs[0] < 0:
        return Verdict.HOLDS
    return None


def witness_violation(lhs: Functional, rhs: Functional, w: ConvexWitness) -> Fraction:
    """``lhs(g) - rhs(g)`` for the witness g, from closed-form antiderivatives."""
    return evaluate_exact(lhs, w.f, w.F) - evaluate_exact(rhs, w.f, w.F)


def _sgn(x) -> int:
    return 1 if x > 0 else -1


def compare(lhs: Functional, rhs: Functional) -> Certificate:
    """Decide ``lhs(f) <= rhs(f)`` for every continuous convex f."""
    ml, mr, el, er = lhs.mass, rhs.mass, lhs.mean, rhs.mean
    if ml != mr:
        gap = ml - mr
        w = ConvexWitness("constant", abs(gap), sign=_sgn(gap))
        return Certificate(Verdict.NOT_COMPARABLE, ml, mr, el, er, witness=w)
    if el != er:
        # lhs(u) - rhs(u) = er - el once masses agree
        gap = er - el
        w = ConvexWitness("affine", abs(gap), sign=_sgn(gap))
        return Certificate(Verdict.NOT_COMPARABLE, ml, mr, el, er, witness=w)
    d = subtract(lhs.transform, rhs.transform)
    t, h = min_prefix_integral(-d)
    profile = _profile_of(d)
    if h >= 0:
        return Certificate(
            Verdict.HOLDS, ml, mr, el, er, profile, tuple(profile.partial_sums()), (t, h)
        )
    w = ConvexWitness("hinge", -h, t=t)
    return Certificate(
        Verdict.FAILS, ml, mr, el, er, profile, tuple(profile.partial_sums()), (t, h), w
    )

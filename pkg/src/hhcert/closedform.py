"""Closed-form criteria for four-point differentiation formulas.

Printed conditions are evaluated literally and compared against the exact
verdicts from :mod:`hhcert.ordering`; nothing here is silently corrected.
Coefficients ``a_i`` and nodes ``alpha_i`` use the descending convention
(node ``alpha x + (1 - alpha) y``, so ``alpha = 1`` is the left endpoint).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .functional import Functional, from_alpha, make, reference
from .ordering import Verdict, compare
from .pwfun import ONE, ZERO, as_rational

HALF = Fraction(1, 2)


class ConstraintError(ValueError):
    """The formula violates the equal-mass / equal-mean preconditions."""

    def __init__(self, message: str, mass: Fraction, mean: Fraction):
        super().__init__(f"{message} (mass={mass}, mean={mean})")
        self.mass = mass
        self.mean = mean


def m1_lhs(coefs: Sequence, alphas: Sequence) -> Fraction:
    """``a_1(α_2-α_1) + (a_1+a_2)(α_3-α_2) + ...`` with descending α."""
    total, run = ZERO, ZERO
    for i in range(len(coefs) - 1):
        run += as_rational(coefs[i])
        total += run * (as_rational(alphas[i + 1]) - as_rational(alphas[i]))
    return total


def e1_lhs(coefs: Sequence, alphas: Sequence) -> Fraction:
    """Same as :func:`m1_lhs` with squared nodes."""
    return m1_lhs(coefs, [as_rational(a) ** 2 for a in alphas])


@dataclass(frozen=True)
class FourPointFormula:
    a: tuple[Fraction, Fraction, Fraction, Fraction]
    alpha2: Fraction
    alpha3: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(as_rational(v) for v in self.a))
        object.__setattr__(self, "alpha2", as_rational(self.alpha2))
        object.__setattr__(self, "alpha3", as_rational(self.alpha3))
        if len(self.a) != 4 or sum(self.a) != 0:
            raise ValueError(f"coefficients {self.a} must be four numbers summing to 0")
        if not 1 > self.alpha2 > self.alpha3 > 0:
            raise ValueError("need 1 > alpha2 > alpha3 > 0")

    @property
    def alphas(self) -> tuple[Fraction, ...]:
        return (ONE, self.alpha2, self.alpha3, ZERO)

    def functional(self) -> Functional:
        return from_alpha(self.a, self.alphas)


CASE_LINKS = {
    "i": [("formula", "integral_mean"), ("integral_mean", "trapezoid")],
    "ii": [("midpoint", "integral_mean"), ("integral_mean", "formula")],
    "iii": [("midpoint", "formula"), ("formula", "integral_mean")],
    "iv": [("integral_mean", "formula"), ("formula", "trapezoid")],
}


@dataclass(frozen=True)
class CaseReport:
    case: str
    applicable: tuple[str, ...]
    claimed: tuple[tuple[str, str], ...]
    verified: tuple[tuple[str, str, Verdict], ...]

    @property
    def all_hold(self) -> bool:
        return all(v is Verdict.HOLDS for _, _, v in self.verified)


def classify_four_point(f4: FourPointFormula) -> CaseReport:
    """Pick the printed case(s) for ``f4`` and verify every claimed link.

    Cases overlap as printed ((iii) inside (i), (iv) inside (ii)); the most
    specific one is reported as ``case`` and the links of every applicable
    case are checked.

    Raises:
        ConstraintError: if mass is not 1 or the mean integral is not 1/2.
    """
    fn = f4.functional()
    if fn.mass != 1 or fn.mean != HALF:
        raise ConstraintError("formula violates the mass/first-moment conditions", fn.mass, fn.mean)
    a1, a2 = f4.a[0], f4.a[1]
    applicable = []
    if a1 > -1:
        applicable.append("i")
    if a1 < -1:
        applicable.append("ii")
    if -1 < a1 <= 0:
        applicable.append("iii")
    if a1 < -1 and a1 + a2 <= 0:
        applicable.append("iv")
    case = applicable[-1] if applicable else "none"
    named = {
        "formula": fn,
        "midpoint": reference("midpoint"),
        "trapezoid": reference("trapezoid"),
        "integral_mean": reference("integral_mean"),
    }
    links: list[tuple[str, str]] = []
    for c in applicable:
        for link in CASE_LINKS[c]:
            if link not in links:
                links.append(link)
    verified = tuple((l, r, compare(named[l], named[r]).verdict) for l, r in links)
    return CaseReport(case, tuple(applicable), tuple(links), verified)


@dataclass(frozen=True)
class SymmetricFamilyPoint:
    """``a F(x) + b F(αx+(1-α)y) - b F((1-α)x+αy) - a F(y)`` with mass 1.

    ``b`` is tied to ``a`` and ``α`` by ``b = a + (1 + 2aα)/(1 - 2α)``;
    the induced density is symmetric, so the mean integral is 1/2 as well.
    """

    a: Fraction
    b: Fraction
    alpha: Fraction
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        for name in ("a", "b", "alpha"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if not 0 < self.alpha < HALF:
            raise ValueError(f"alpha={self.alpha} outside (0, 1/2)")
        expected = family_b(self.a, self.alpha)
        if self.strict and self.b != expected:
            raise ValueError(f"b={self.b} breaks the mass constraint (expected {expected})")

    @classmethod
    def of(cls, a, alpha) -> "SymmetricFamilyPoint":
        a, alpha = as_rational(a), as_rational(alpha)
        if not 0 < alpha < HALF:
            raise ValueError(f"alpha={alpha} outside (0, 1/2)")
        return cls(a, family_b(a, alpha), alpha)

    @classmethod
    def unchecked(cls, a, b, alpha) -> "SymmetricFamilyPoint":
        """A point that may break the mass constraint, for literal evaluation only."""
        return cls(a, b, alpha, strict=False)


def family_b(a, alpha) -> Fraction:
    a, alpha = as_rational(a), as_rational(alpha)
    return a + (1 + 2 * a * alpha) / (1 - 2 * alpha)


def symmetric_functional(p: SymmetricFamilyPoint) -> Functional:
    """F-terms ``a, -b, b, -a`` at positions ``0, α, 1-α, 1``."""
    return make(F_terms=[(ZERO, p.a), (p.alpha, -p.b), (1 - p.alpha, p.b), (ONE, -p.a)])


def condition_i(p: SymmetricFamilyPoint) -> bool:
    """Literal ``(1-α)² ab/(a+b) > 1/2 - (1-α) b/(a+b)``."""
    if p.a <= 0:
        raise ValueError("condition (i) needs a > 0")
    s = p.a + p.b
    if s == 0:
        raise ZeroDivisionError("a + b = 0: printed condition undefined")
    one_minus = 1 - p.alpha
    return one_minus**2 * p.a * p.b / s > HALF - one_minus * p.b / s


def condition_ii(p: SymmetricFamilyPoint, swapped: bool = False) -> bool:
    """Literal ``-1/(4a) > (-a(1-α) - 1/2)(1/2 + 1/(2a))``.

    With ``swapped`` the node parameter is replaced by ``1 - α``.
    """
    if p.a == 0:
        raise ZeroDivisionError("a = 0")
    if p.a >= -1:
        raise ValueError("condition (ii) needs a < -1")
    al = 1 - p.alpha if swapped else p.alpha
    return -1 / (4 * p.a) > (-p.a * (1 - al) - HALF) * (HALF + 1 / (2 * p.a))


def printed_crossings(p: SymmetricFamilyPoint) -> tuple[Fraction, Fraction, Fraction]:
    """The three crossing points as printed, unsorted and unchecked."""
    s = p.a + p.b
    if s == 0:
        raise ZeroDivisionError("a + b = 0")
    return ((1 - p.alpha) * p.b / s, HALF, (p.a + p.alpha * p.b) / s)


@dataclass(frozen=True)
class ThreePointReport:
    mass: Fraction
    mean: Fraction
    violated: str  # "mass" or "mean"
    vs_midpoint: Verdict
    vs_trapezoid: Verdict


def three_point_check(fn: Functional) -> ThreePointReport:
    """Show a ``{0, λ, 1}`` formula cannot be compared with midpoint or trapezoid.

    Both references have mass 1 and mean integral 1/2; for a three-node
    endpoint formula these two linear conditions force the uniform density
    and hence a zero middle coefficient.
    """
    nodes = [n for n, _ in fn.F_terms]
    if fn.f_atoms or len(nodes) != 3 or nodes[0] != 0 or nodes[-1] != 1:
        raise ValueError("expected exactly three F-nodes 0 < λ < 1 and no f-atoms")
    violated = "mass" if fn.mass != 1 else "mean"
    if fn.mass == 1 and fn.mean == HALF:
        raise AssertionError("three-point formula matched both moments")  # impossible
    vm = compare(reference("midpoint"), fn).verdict
    vt = compare(fn, reference("trapezoid")).verdict
    return ThreePointReport(fn.mass, fn.mean, violated, vm, vt)


@dataclass(frozen=True)
class CalibrationRow:
    a: Fraction
    alpha: Fraction
    b: Fraction
    verdict: Optional[Verdict]
    cond_i: Optional[bool]
    cond_ii: Optional[bool]
    cond_ii_swapped: Optional[bool]

    def _agree(self, cond):
        if cond is None or self.verdict is None:
            return None
        return cond == (self.verdict is Verdict.HOLDS)

    @property
    def agree_i(self):
        return self._agree(self.cond_i)

    @property
    def agree_ii(self):
        return self._agree(self.cond_ii)

    @property
    def agree_ii_swapped(self):
        return self._agree(self.cond_ii_swapped)


def calibrate_point(a, alpha) -> CalibrationRow:
    """Ground truth vs printed conditions at one family point.

    For ``a > 0`` the formula is compared with the midpoint (formula on the
    left); for ``a < -1`` with the trapezoid.  Other points get no verdict.
    """
    p = SymmetricFamilyPoint.of(a, alpha)
    fn = symmetric_functional(p)
    verdict = cond_i = cond_ii = cond_ii_sw = None
    if p.a > 0:
        verdict = compare(fn, reference("midpoint")).verdict
        cond_i = condition_i(p)
    elif p.a < -1:
        verdict = compare(fn, reference("trapezoid")).verdict
        cond_ii = condition_ii(p)
        cond_ii_sw = condition_ii(p, swapped=True)
    return CalibrationRow(p.a, p.alpha, p.b, verdict, cond_i, cond_ii, cond_ii_sw)


def calibration_report(grid: Iterable[tuple]) -> list[CalibrationRow]:
    """One row per ``(a, alpha)`` grid point, in the order given."""
    return [calibrate_point(a, alpha) for a, alpha in grid]

"""Independent cross-checks of the ordering verdicts.

Everything here evaluates functionals *directly* on explicit convex test
functions with closed-form antiderivatives, without going through the
prefix-integral machinery of :mod:`hhcert.ordering`.  The one exception is
:func:`hinge_exact`, which deliberately uses the BV transform so it can be
checked against :func:`hinge_direct`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .functional import UNIT, Functional, IntervalSpec, evaluate_exact, evaluate_numeric, make
from .pwfun import ONE, ZERO, as_rational, integral

CONSTRAINTS = ("none", "mass1", "mass1mean_half")


@dataclass(frozen=True)
class TestFunction:
    """A convex function on [0, 1] with a closed-form antiderivative."""

    kind: str  # "hinge", "power", "exponential", "absdev"
    param: Fraction | int | float

    __test__ = False  # not a pytest class

    def __post_init__(self):
        if self.kind == "power" and (int(self.param) != self.param or self.param < 1):
            raise ValueError("power needs an integer exponent >= 1")
        if self.kind == "exponential" and self.param == 0:
            raise ValueError("exponential rate must be nonzero")
        if self.kind not in ("hinge", "power", "exponential", "absdev"):
            raise ValueError(f"unknown test function kind {self.kind!r}")

    @property
    def name(self) -> str:
        return f"{self.kind}({self.param})"

    @property
    def exact(self) -> bool:
        return self.kind != "exponential"

    def f(self, u):
        k, p = self.kind, self.param
        if k == "hinge":
            return max(u - p, 0 * u)
        if k == "power":
            return u ** int(p)
        if k == "absdev":
            return abs(u - p)
        return math.exp(p * u)

    def F(self, u):
        k, p = self.kind, self.param
        if k == "hinge":
            return max(u - p, 0 * u) ** 2 / 2
        if k == "power":
            return u ** (int(p) + 1) / (int(p) + 1)
        if k == "absdev":
            d = u - p
            return d * abs(d) / 2
        return math.exp(p * u) / p


def default_family(hinges: int = 50) -> list[TestFunction]:
    fam = [TestFunction("power", p) for p in (1, 2, 3, 4)]
    fam += [TestFunction("exponential", k) for k in (1.0, -1.0)]
    fam += [TestFunction("absdev", Fraction(1, 2)), TestFunction("absdev", Fraction(1, 3))]
    fam += [TestFunction("hinge", Fraction(i, hinges)) for i in range(hinges + 1)]
    return fam


def hinge_exact(fn: Functional, t) -> Fraction:
    """``T((u - t)_+)`` from the BV transform: ``(1 - t) G(1) - ∫_t^1 G``."""
    t = as_rational(t)
    if not 0 <= t <= 1:
        raise ValueError(f"t={t} outside [0, 1]")
    g = fn.transform
    return (1 - t) * g.final - integral(g, t, ONE)


def hinge_direct(fn: Functional, t) -> Fraction:
    """``T((u - t)_+)`` term by term with the antiderivative ``(u - t)_+² / 2``."""
    t = as_rational(t)
    total = ZERO
    for n, w in fn.f_atoms:
        if n > t:
            total += w * (n - t)
    for n, c in fn.F_terms:
        if n > t:
            total += c * (n - t) ** 2 / 2
    return total


def hinge_sweep(lhs: Functional, rhs: Functional) -> tuple[Fraction, Fraction]:
    """Exact ``max_t lhs(h_t) - rhs(h_t)`` over hinges ``h_t = (u - t)_+``.

    Between consecutive nodes of either functional the difference is a
    quadratic in t; it is recovered from three direct evaluations and
    maximized in closed form.  Returns ``(max_violation, argmax)`` with
    ties going to the smallest t.

    Raises:
        ValueError: if the functionals disagree on constants or on ``u``.
    """
    one = TestFunction("power", 1)
    if evaluate_exact(lhs, lambda u: ONE, lambda u: u) != evaluate_exact(rhs, lambda u: ONE, lambda u: u):
        raise ValueError("mass mismatch: hinge sweep needs equal masses")
    if evaluate_exact(lhs, one.f, one.F) != evaluate_exact(rhs, one.f, one.F):
        raise ValueError("mean mismatch: hinge sweep needs equal first moments")

    def diff(t):
        return hinge_direct(lhs, t) - hinge_direct(rhs, t)

    knots = sorted({ZERO, ONE, *lhs.nodes(), *rhs.nodes()})
    best_t, best = ZERO, diff(ZERO)
    dq = best
    for p, q in zip(knots, knots[1:]):
        w = q - p
        dp, dm, dq = dq, diff(p + w / 2), diff(q)
        c = 2 * (dq - 2 * dm + dp) / (w * w)
        b = (dq - dp) / w - c * w
        if c < 0:
            s = -b / (2 * c)
            if 0 < s < w:
                v = dp + b * s + c * s * s
                if v > best:
                    best_t, best = p + s, v
        if dq > best:
            best_t, best = q, dq
    return best, best_t


@dataclass
class CrossCheckReport:
    interval: IntervalSpec
    diffs: list[tuple[str, float]]

    @property
    def max_diff(self) -> float:
        return max(d for _, d in self.diffs)

    @property
    def argmax(self) -> str:
        return max(self.diffs, key=lambda nd: nd[1])[0]

    def signs(self, tol: float = 1e-9) -> list[int]:
        return [0 if abs(d) <= tol else (1 if d > 0 else -1) for _, d in self.diffs]


def numeric_cross_check(
    lhs: Functional,
    rhs: Functional,
    family: Sequence[TestFunction],
    iv: Optional[IntervalSpec] = None,
) -> CrossCheckReport:
    """Floating ``lhs(f) - rhs(f)`` on ``iv`` for every family member.

    Test functions live on [0, 1] and are pulled back affinely onto the
    interval, so convexity is preserved and the differences should not
    depend on the interval.
    """
    iv = iv or UNIT
    x, h = float(iv.x), float(iv.y - iv.x)
    diffs = []
    for tf in family:
        f = _pullback_f(tf, x, h)
        F = _pullback_F(tf, x, h)
        diffs.append((tf.name, evaluate_numeric(lhs, f, F, iv) - evaluate_numeric(rhs, f, F, iv)))
    return CrossCheckReport(iv, diffs)


def _pullback_f(tf: TestFunction, x: float, h: float) -> Callable[[float], float]:
    p = float(tf.param)
    ftf = TestFunction(tf.kind, p)
    return lambda s: ftf.f((s - x) / h)


def _pullback_F(tf: TestFunction, x: float, h: float) -> Callable[[float], float]:
    p = float(tf.param)
    ftf = TestFunction(tf.kind, p)
    return lambda s: h * ftf.F((s - x) / h)


@dataclass(frozen=True)
class RandomInstanceSpec:
    node_count: int = 4
    denom_bound: int = 12
    coef_bound: int = 5
    constraints: str = "mass1mean_half"
    seed: int = 0
    endpoints: bool = False

    def __post_init__(self):
        if not 2 <= self.node_count <= 8:
            raise ValueError("node_count must be between 2 and 8")
        if self.constraints not in CONSTRAINTS:
            raise ValueError(f"constraints must be one of {CONSTRAINTS}")
        solved = CONSTRAINTS.index(self.constraints) + 1
        if self.node_count < solved:
            raise ValueError(f"{self.constraints} needs at least {solved} nodes")
        if self.denom_bound < 2 or self.coef_bound < 1:
            raise ValueError("bounds too small")


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    # Gauss-Jordan elimination over the rationals; None if singular
    n = len(rows)
    m = [row[:] + [r] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                k = m[r][col] / m[col][col]
                m[r] = [a - k * b for a, b in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def _sample_nodes(rng: random.Random, spec: RandomInstanceSpec) -> list[Fraction]:
    nodes = {ZERO, ONE} if spec.endpoints else set()
    while len(nodes) < spec.node_count:
        q = rng.randint(2, spec.denom_bound)
        lo, hi = (1, q - 1) if spec.endpoints else (0, q)
        nodes.add(Fraction(rng.randint(lo, hi), q))
    return sorted(nodes)


def random_functional(spec: RandomInstanceSpec, max_tries: int = 100) -> Functional:
    """Random F-term functional, deterministic for a given spec.

    The first coefficients are drawn at random; the last one, two or three
    are solved exactly so that the coefficients sum to zero and, as
    requested, the mass is 1 and the mean integral is 1/2.  Draws that
    leave a coefficient at zero are redrawn.
    """
    rng = random.Random(spec.seed)
    solved = CONSTRAINTS.index(spec.constraints) + 1
    # moments: sum c = 0, sum c*l = mass = 1, sum c*l^2 = 1 (mean 1/2 given mass 1)
    targets = [ZERO, ONE, ONE][:solved]
    for _ in range(max_tries):
        nodes = _sample_nodes(rng, spec)
        free = [
            Fraction(rng.randint(-spec.coef_bound, spec.coef_bound), rng.randint(1, spec.coef_bound))
            for _ in range(len(nodes) - solved)
        ]
        rhs = [
            tgt - sum((c * n**k for c, n in zip(free, nodes)), ZERO)
            for k, tgt in enumerate(targets)
        ]
        tail = nodes[len(free):]
        sol = _solve([[n**k for n in tail] for k in range(solved)], rhs)
        if sol is None:
            continue
        coefs = free + sol
        if any(c == 0 for c in coefs):
            continue
        return make(F_terms=list(zip(nodes, coefs)))
    raise RuntimeError(f"no admissible instance after {max_tries} draws (seed {spec.seed})")

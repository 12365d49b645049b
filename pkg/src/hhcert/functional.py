"""One side of a Hermite-Hadamard-type inequality.

A :class:`Functional` on an interval ``[x, y]`` acts on a function ``f`` with
antiderivative ``F`` as::

    T(f) = sum_i w_i f(x + l_i (y - x)) + 1/(y - x) sum_j c_j F(x + l_j (y - x))

where the ``(l_i, w_i)`` are *f-atoms* and the ``(l_j, c_j)`` are *F-terms*
whose coefficients sum to zero.  Nodes are positions in [0, 1]; a node
written as ``a x + (1 - a) y`` has position ``1 - a``.

Every functional equals ``∫ f dG`` on the normalized interval for a
piecewise-linear ``G`` with jumps (its BV transform), which is what the
ordering checks work with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .pwfun import ONE, ZERO, PwFun, as_rational, build, prefix_integrals

Term = tuple[Fraction, Fraction]


class FunctionalError(ValueError):
    """Raised for malformed functionals."""


@dataclass(frozen=True)
class IntervalSpec:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))
        if self.y <= self.x:
            raise FunctionalError(f"empty interval [{self.x}, {self.y}]")


UNIT = IntervalSpec(ZERO, ONE)


def _merge(terms: Iterable[Sequence], what: str) -> tuple[Term, ...]:
    acc: dict[Fraction, Fraction] = {}
    for node, value in terms:
        node, value = as_rational(node), as_rational(value)
        if not 0 <= node <= 1:
            raise FunctionalError(f"{what} node {node} outside [0, 1]")
        acc[node] = acc.get(node, ZERO) + value
    return tuple((n, acc[n]) for n in sorted(acc) if acc[n] != 0)


@dataclass(frozen=True)
class Functional:
    f_atoms: tuple[Term, ...] = ()
    F_terms: tuple[Term, ...] = ()

    @cached_property
    def transform(self) -> PwFun:
        return bv_transform(self)

    @cached_property
    def mass(self) -> Fraction:
        return mass(self)

    @cached_property
    def mean(self) -> Fraction:
        return mean_integral(self)

    def nodes(self) -> list[Fraction]:
        return sorted({n for n, _ in self.f_atoms} | {n for n, _ in self.F_terms})


def make(f_atoms: Iterable[Sequence] = (), F_terms: Iterable[Sequence] = ()) -> Functional:
    """Validate, merge duplicate nodes and sort.

    Raises:
        FunctionalError: if a node lies outside [0, 1] or the F-term
            coefficients do not sum to zero.
    """
    atoms = _merge(f_atoms, "f-atom")
    terms = _merge(F_terms, "F-term")
    total = sum((c for _, c in terms), ZERO)
    if total != 0:
        raise FunctionalError(f"F-term coefficients sum to {total}, expected 0")
    return Functional(atoms, terms)


def bv_transform(fn: Functional) -> PwFun:
    """The function G with ``T(f) = ∫ f dG`` on [0, 1] and ``G(0-) = 0``.

    Atoms contribute jumps; between consecutive F-nodes ``l_j < l_{j+1}``
    the density is minus the running sum ``c_1 + ... + c_j``.
    """
    atoms = dict(fn.f_atoms)
    density: dict[Fraction, Fraction] = {}
    run = ZERO
    for node, c in fn.F_terms:
        run += c
        density[node] = -run
    cuts = sorted({ZERO, ONE} | set(atoms) | set(density))
    pieces = []
    value = ZERO
    slope = ZERO
    prev = ZERO
    for node in cuts[:-1]:
        value += slope * (node - prev)
        value += atoms.get(node, ZERO)
        slope = density.get(node, slope)
        pieces.append((node, slope, value))
        prev = node
    final = value + slope * (ONE - prev) + atoms.get(ONE, ZERO)
    return build(pieces, final)


def mass(fn: Functional) -> Fraction:
    """Total mass ``G(1)``: the value the functional assigns to ``f ≡ 1``."""
    return fn.transform.final


def mean_integral(fn: Functional) -> Fraction:
    """``∫_0^1 G(t) dt`` of the BV transform."""
    return prefix_integrals(fn.transform, (ONE,))[0]


def reference(kind: str, at=None) -> Functional:
    """The classical functionals: midpoint, trapezoid, integral mean, point evaluation."""
    if kind == "midpoint":
        return make([(Fraction(1, 2), 1)])
    if kind == "trapezoid":
        return make([(0, Fraction(1, 2)), (1, Fraction(1, 2))])
    if kind == "integral_mean":
        return make(F_terms=[(0, -1), (1, 1)])
    if kind == "point_eval":
        if at is None:
            raise FunctionalError("point_eval needs a position")
        return make([(at, 1)])
    raise FunctionalError(f"unknown reference functional {kind!r}")


def from_alpha(coefs: Sequence, alphas: Sequence) -> Functional:
    """F-term functional from coefficients at nodes ``alpha x + (1 - alpha) y``."""
    return make(F_terms=[(1 - as_rational(a), c) for c, a in zip(coefs, alphas, strict=True)])


def evaluate_exact(fn: Functional, f: Callable, F: Callable) -> Fraction:
    """Exact value of T on [0, 1] for rational-valued ``f`` and antiderivative ``F``."""
    return sum((w * f(n) for n, w in fn.f_atoms), ZERO) + sum(
        (c * F(n) for n, c in fn.F_terms), ZERO
    )


def evaluate_numeric(fn: Functional, f: Callable, F: Callable, iv: IntervalSpec | None = None) -> float:
    """Floating-point value of T on the interval; ``F`` must satisfy ``F' = f``."""
    iv = iv or UNIT
    x, h = float(iv.x), float(iv.y - iv.x)
    atoms = math.fsum(float(w) * f(x + float(n) * h) for n, w in fn.f_atoms)
    terms = math.fsum(float(c) * F(x + float(n) * h) for n, c in fn.F_terms)
    return atoms + terms / h

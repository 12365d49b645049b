"""Regression corpus of published Hermite-Hadamard-type inequalities.

Each item pairs the printed claim with the ground truth computed by hand
(``expected``).  The suite passes when the engine reproduces ``expected``;
disagreements between ``expected`` and the printed claim are reported as
errata rather than treated as failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Optional

from .closedform import calibrate_point
from .functional import Functional, from_alpha, make, reference
from .ordering import Certificate, Verdict, compare

MID = reference("midpoint")
TRAP = reference("trapezoid")
MEAN = reference("integral_mean")

# three-point formula with the left-endpoint value as its companion
THREE_POINT = make(F_terms=[(0, -3), (Q(1, 2), 4), (1, -1)])
SKEWED = make(F_terms=[(Q(1, 4), -3), (Q(9, 20), Q(25, 11)), (1, Q(8, 11))])
CENTRAL4 = from_alpha([Q(1, 3), Q(-8, 3), Q(8, 3), Q(-1, 3)], [1, Q(3, 4), Q(1, 4), 0])
THIRDS_WIDE = from_alpha([-2, 3, -3, 2], [1, Q(2, 3), Q(1, 3), 0])
THIRDS_NARROW = from_alpha([Q(-1, 2), Q(-3, 2), Q(3, 2), Q(1, 2)], [1, Q(2, 3), Q(1, 3), 0])
QUARTERS_PRINTED = from_alpha([Q(-3, 2), 2, -2, Q(3, 2)], [1, Q(3, 4), Q(1, 4), 0])
QUARTERS_CONSTRUCTED = from_alpha([Q(-3, 2), 1, -1, Q(3, 2)], [1, Q(3, 4), Q(1, 4), 0])
QUARTERS_SYM_PRINTED = from_alpha([2, -3, 3, -2], [1, Q(3, 4), Q(1, 4), 0])
FAMILY_SAMPLE = make(F_terms=[(0, 1), (Q(1, 4), -4), (Q(3, 4), 4), (1, -1)])


@dataclass(frozen=True)
class CorpusItem:
    id: str
    lhs: Functional
    rhs: Functional
    claim: Optional[str]  # "holds", "fails" or None
    expected: Verdict
    source: str


CORPUS: tuple[CorpusItem, ...] = (
    CorpusItem("hh-classic-left", MID, MEAN, "holds", Verdict.HOLDS, "midpoint <= integral mean"),
    CorpusItem("hh-classic-right", MEAN, TRAP, "holds", Verdict.HOLDS, "integral mean <= trapezoid"),
    CorpusItem("skewed-left", MID, SKEWED, "holds", Verdict.HOLDS, "midpoint <= skewed three-node formula"),
    CorpusItem("skewed-right", SKEWED, MEAN, "holds", Verdict.HOLDS, "skewed three-node formula <= integral mean"),
    CorpusItem(
        "endpoint3-printed", reference("point_eval", 0), THREE_POINT, "holds", Verdict.FAILS,
        "f(x) <= (-3F(x) + 4F(mid) - F(y))/(y-x) as printed",
    ),
    CorpusItem(
        "endpoint3-reversed", THREE_POINT, reference("point_eval", 0), None, Verdict.HOLDS,
        "(-3F(x) + 4F(mid) - F(y))/(y-x) <= f(x)",
    ),
    CorpusItem(
        "midpoint-vs-3pt", MID, THREE_POINT, "fails", Verdict.NOT_COMPARABLE,
        "no endpoint three-node formula dominates the midpoint",
    ),
    CorpusItem("central4-mean", CENTRAL4, MEAN, "holds", Verdict.HOLDS, "central four-node formula <= integral mean"),
    CorpusItem("mean-thirds-wide", MEAN, THIRDS_WIDE, "holds", Verdict.HOLDS, "integral mean <= (-2, 3, -3, 2) thirds formula"),
    CorpusItem("thirds-narrow-left", MID, THIRDS_NARROW, "holds", Verdict.HOLDS, "midpoint <= (-1/2, -3/2, 3/2, 1/2) thirds formula"),
    CorpusItem("thirds-narrow-right", THIRDS_NARROW, MEAN, "holds", Verdict.HOLDS, "(-1/2, -3/2, 3/2, 1/2) thirds formula <= integral mean"),
    CorpusItem(
        "quarters-printed", MEAN, QUARTERS_PRINTED, "holds", Verdict.NOT_COMPARABLE,
        "integral mean <= (-3/2, 2, -2, 3/2) quarters formula as printed",
    ),
    CorpusItem(
        "quarters-constructed-left", MEAN, QUARTERS_CONSTRUCTED, None, Verdict.HOLDS,
        "integral mean <= (-3/2, 1, -1, 3/2) quarters formula (constructed)",
    ),
    CorpusItem(
        "quarters-constructed-right", QUARTERS_CONSTRUCTED, TRAP, None, Verdict.HOLDS,
        "(-3/2, 1, -1, 3/2) quarters formula (constructed) <= trapezoid",
    ),
    CorpusItem("midpoint-central4", MID, CENTRAL4, "fails", Verdict.FAILS, "midpoint <= central four-node formula"),
    CorpusItem("central4-midpoint", CENTRAL4, MID, "fails", Verdict.FAILS, "central four-node formula <= midpoint"),
    CorpusItem(
        "quarters-sym-printed", QUARTERS_SYM_PRINTED, MID, "holds", Verdict.NOT_COMPARABLE,
        "(2, -3, 3, -2) quarters formula <= midpoint as printed",
    ),
    CorpusItem("thirds-wide-trap", THIRDS_WIDE, TRAP, "holds", Verdict.HOLDS, "(-2, 3, -3, 2) thirds formula <= trapezoid"),
    CorpusItem("family-sample", FAMILY_SAMPLE, MID, "holds", Verdict.HOLDS, "symmetric family a=1, alpha=1/4 <= midpoint"),
)

# (id, a, alpha, condition): printed closed-form conditions checked at family points
CONDITION_CHECKS = (
    ("family-sample-cond-i", Q(1), Q(1, 4), "i"),
    ("thirds-wide-cond-ii", Q(-2), Q(1, 3), "ii"),
)


def agrees(claim: Optional[str], verdict: Verdict) -> Optional[bool]:
    """A printed "fails" is matched by any verdict other than holds."""
    if claim is None:
        return None
    return (claim == "holds") == (verdict is Verdict.HOLDS)


@dataclass(frozen=True)
class SuiteRow:
    item: CorpusItem
    certificate: Certificate

    @property
    def verdict(self) -> Verdict:
        return self.certificate.verdict

    @property
    def matches_expected(self) -> bool:
        return self.verdict is self.item.expected

    @property
    def agrees_with_claim(self) -> Optional[bool]:
        return agrees(self.item.claim, self.verdict)


@dataclass(frozen=True)
class SuiteResult:
    rows: tuple[SuiteRow, ...]
    errata: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return all(r.matches_expected for r in self.rows)


def run_suite() -> SuiteResult:
    rows = tuple(SuiteRow(item, compare(item.lhs, item.rhs)) for item in CORPUS)
    errata = []
    for r in rows:
        if r.agrees_with_claim is False:
            errata.append(
                f"{r.item.id}: printed claim {r.item.claim}, computed {r.verdict.value}"
                + _detail(r.certificate)
            )
    for cid, a, alpha, cond in CONDITION_CHECKS:
        row = calibrate_point(a, alpha)
        if cond == "i":
            printed, agree = row.cond_i, row.agree_i
        else:
            printed, agree = row.cond_ii, row.agree_ii
        if not agree:
            errata.append(
                f"{cid}: printed condition ({cond}) evaluates {str(printed).lower()} at a={a}, alpha={alpha}, "
                f"computed {row.verdict.value}"
                + (f"; with alpha -> 1-alpha it evaluates {str(row.cond_ii_swapped).lower()}" if cond == "ii" else "")
            )
    return SuiteResult(rows, tuple(errata))


def _detail(cert: Certificate) -> str:
    w = cert.witness
    if w is None:
        return ""
    if w.kind == "hinge":
        return f" (hinge witness t={w.t}, violation {w.violation})"
    if w.kind == "constant":
        return f" (masses {cert.mass_lhs} vs {cert.mass_rhs})"
    return f" (mean integrals {cert.mean_lhs} vs {cert.mean_rhs})"

"""Print the regression corpus table, the errata, and the four-node case report.

    python scripts/regression_corpus.py
"""

from __future__ import annotations

from fractions import Fraction as Q

from hhcert.cli import main as hhcert
from hhcert.closedform import ConstraintError, FourPointFormula, classify_four_point

FOUR_POINT = {
    "central quarters": ((Q(1, 3), Q(-8, 3), Q(8, 3), Q(-1, 3)), Q(3, 4), Q(1, 4)),
    "wide thirds": ((-2, 3, -3, 2), Q(2, 3), Q(1, 3)),
    "narrow thirds": ((Q(-1, 2), Q(-3, 2), Q(3, 2), Q(1, 2)), Q(2, 3), Q(1, 3)),
    "constructed quarters": ((Q(-3, 2), 1, -1, Q(3, 2)), Q(3, 4), Q(1, 4)),
    "printed quarters": ((Q(-3, 2), 2, -2, Q(3, 2)), Q(3, 4), Q(1, 4)),
    "printed symmetric quarters": ((2, -3, 3, -2), Q(3, 4), Q(1, 4)),
}


def main():
    code = hhcert(["suite"])
    print("\nfour-node case report:")
    for name, (a, al2, al3) in FOUR_POINT.items():
        try:
            rep = classify_four_point(FourPointFormula(a, al2, al3))
        except ConstraintError as exc:
            print(f"  {name}: rejected, {exc}")
            continue
        links = ", ".join(f"{l} <= {r}: {v.value}" for l, r, v in rep.verified)
        print(f"  {name}: case {rep.case} ({links})")
    return code


if __name__ == "__main__":
    raise SystemExit(main())

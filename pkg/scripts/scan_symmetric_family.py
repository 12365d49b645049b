"""Scan the symmetric four-node family and summarize how often the literal
closed-form conditions agree with the exact verdicts.

    python scripts/scan_symmetric_family.py --out scan.csv
"""

from __future__ import annotations

import argparse
import csv
import io
import time
from collections import Counter
from dataclasses import dataclass

from hhcert.cli import main as hhcert


@dataclass
class Config:
    a_range: str = "-5:24/5"
    a_step: str = "1/5"
    alpha_range: str = "1/104:50/104"
    alpha_step: str = "1/104"
    out: str | None = None


def scan(cfg: Config) -> str:
    buf = io.StringIO()
    argv = [
        "scan", "--a-range", cfg.a_range, "--a-step", cfg.a_step,
        "--alpha-range", cfg.alpha_range, "--alpha-step", cfg.alpha_step,
    ]
    if hhcert(argv, buf) != 0:
        raise SystemExit("scan failed")
    return buf.getvalue()


def summarize(text: str) -> dict[str, Counter]:
    summary = {col: Counter() for col in ("verdict", "agree_i", "agree_ii", "agree_ii_swapped")}
    for row in csv.DictReader(io.StringIO(text)):
        for col, counts in summary.items():
            if row[col]:
                counts[row[col]] += 1
    return summary


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a-range", default=Config.a_range)
    ap.add_argument("--a-step", default=Config.a_step)
    ap.add_argument("--alpha-range", default=Config.alpha_range)
    ap.add_argument("--alpha-step", default=Config.alpha_step)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = Config(args.a_range, args.a_step, args.alpha_range, args.alpha_step, args.out)
    t0 = time.perf_counter()
    text = scan(cfg)
    print(f"{len(text.splitlines()) - 1} cells in {time.perf_counter() - t0:.2f} s")
    for col, counts in summarize(text).items():
        print(f"{col}: {dict(counts)}")
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()

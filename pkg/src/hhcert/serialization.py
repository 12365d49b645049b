"""JSON (de)serialization of comparison specs and certificates.

Rationals always travel as strings (``"25/11"``, ``"-3"``), never floats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .functional import UNIT, Functional, FunctionalError, IntervalSpec, make, reference
from .ordering import Certificate, ConvexWitness, CrossingProfile, Verdict

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class SpecError(ValueError):
    """Malformed input; the message names the offending location."""


@dataclass(frozen=True)
class ComparisonSpec:
    lhs: Functional
    rhs: Functional
    interval: IntervalSpec = UNIT
    relation: str = "leq"


def parse_rational(text: Any, where: str) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise SpecError(f"{where}: expected a rational string like '3/4', got {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise SpecError(f"{where}: zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def fmt(q: Fraction) -> str:
    return str(q)


def _terms(obj: Any, key: str, value_key: str, where: str) -> list[tuple[Fraction, Fraction]]:
    items = obj.get(key, [])
    if not isinstance(items, list):
        raise SpecError(f"{where}.{key}: expected a list")
    out = []
    for i, item in enumerate(items):
        loc = f"{where}.{key}[{i}]"
        if not isinstance(item, dict) or "node" not in item or value_key not in item:
            raise SpecError(f"{loc}: expected an object with 'node' and '{value_key}'")
        out.append((parse_rational(item["node"], f"{loc}.node"), parse_rational(item[value_key], f"{loc}.{value_key}")))
    return out


def parse_functional(obj: Any, where: str) -> Functional:
    if isinstance(obj, str):
        try:
            return reference(obj)
        except FunctionalError as exc:
            raise SpecError(f"{where}: {exc}") from None
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected an object or a reference name")
    unknown = set(obj) - {"f_terms", "F_terms"}
    if unknown:
        raise SpecError(f"{where}: unknown keys {sorted(unknown)}")
    atoms = _terms(obj, "f_terms", "weight", where)
    terms = _terms(obj, "F_terms", "coef", where)
    try:
        return make(atoms, terms)
    except FunctionalError as exc:
        raise SpecError(f"{where}: {exc}") from None


def parse_spec(obj: Any) -> ComparisonSpec:
    if not isinstance(obj, dict):
        raise SpecError("$: expected a JSON object")
    for key in ("lhs", "rhs"):
        if key not in obj:
            raise SpecError(f"$: missing '{key}'")
    relation = obj.get("relation", "leq")
    if relation != "leq":
        raise SpecError(f"relation: only 'leq' is supported, got {relation!r}")
    iv = UNIT
    if obj.get("interval") is not None:
        ivo = obj["interval"]
        if not isinstance(ivo, dict):
            raise SpecError("interval: expected an object with 'x' and 'y'")
        x = parse_rational(ivo.get("x", "0"), "interval.x")
        y = parse_rational(ivo.get("y", "1"), "interval.y")
        try:
            iv = IntervalSpec(x, y)
        except FunctionalError as exc:
            raise SpecError(f"interval: {exc}") from None
    return ComparisonSpec(parse_functional(obj["lhs"], "lhs"), parse_functional(obj["rhs"], "rhs"), iv, relation)


def load_spec(source: str) -> ComparisonSpec:
    """Parse a spec given inline (JSON text) or as a path to a JSON file."""
    text = source
    if not source.lstrip().startswith("{"):
        path = Path(source)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise SpecError(f"{source}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_spec(obj)


def functional_to_json(fn: Functional) -> dict:
    return {
        "f_terms": [{"node": fmt(n), "weight": fmt(w)} for n, w in fn.f_atoms],
        "F_terms": [{"node": fmt(n), "coef": fmt(c)} for n, c in fn.F_terms],
    }


def spec_to_json(spec: ComparisonSpec) -> dict:
    return {
        "interval": {"x": fmt(spec.interval.x), "y": fmt(spec.interval.y)},
        "lhs": functional_to_json(spec.lhs),
        "rhs": functional_to_json(spec.rhs),
        "relation": spec.relation,
    }


def certificate_to_json(cert: Certificate) -> dict:
    prof = cert.profile
    w = cert.witness
    return {
        "verdict": cert.verdict.value,
        "mass": {"lhs": fmt(cert.mass_lhs), "rhs": fmt(cert.mass_rhs)},
        "mean": {"lhs": fmt(cert.mean_lhs), "rhs": fmt(cert.mean_rhs)},
        "crossings": [fmt(x) for x in prof.crossings] if prof else [],
        "areas": [fmt(a) for a in prof.areas] if prof else [],
        "signs": list(prof.signs) if prof else [],
        "zero_intervals": [[fmt(a), fmt(b)] for a, b in prof.zero_intervals] if prof else [],
        "partial_sums": [fmt(s) for s in cert.partial_sums],
        "min_prefix": (
            {"t": fmt(cert.min_prefix[0]), "value": fmt(cert.min_prefix[1])} if cert.min_prefix else None
        ),
        "witness": (
            {
                "kind": w.kind,
                "t": fmt(w.t) if w.t is not None else None,
                "sign": w.sign,
                "violation": fmt(w.violation),
            }
            if w
            else None
        ),
    }


def certificate_from_json(obj: dict) -> Certificate:
    q = Fraction
    profile = None
    if obj["min_prefix"] is not None:
        profile = CrossingProfile(
            tuple(q(x) for x in obj["crossings"]),
            tuple(q(a) for a in obj["areas"]),
            tuple(obj["signs"]),
            tuple((q(a), q(b)) for a, b in obj["zero_intervals"]),
        )
    w = obj["witness"]
    witness = None
    if w is not None:
        witness = ConvexWitness(
            w["kind"], q(w["violation"]), q(w["t"]) if w["t"] is not None else None, w["sign"]
        )
    mp = obj["min_prefix"]
    return Certificate(
        Verdict(obj["verdict"]),
        q(obj["mass"]["lhs"]),
        q(obj["mass"]["rhs"]),
        q(obj["mean"]["lhs"]),
        q(obj["mean"]["rhs"]),
        profile,
        tuple(q(s) for s in obj["partial_sums"]),
        (q(mp["t"]), q(mp["value"])) if mp else None,
        witness,
    )

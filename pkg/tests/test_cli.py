import csv
import io
import json

import pytest
from hypothesis import given, settings

from hhcert.cli import SCAN_HEADER, main
from hhcert.functional import IntervalSpec
from hhcert.ordering import compare
from hhcert.serialization import (
    ComparisonSpec,
    SpecError,
    certificate_from_json,
    certificate_to_json,
    load_spec,
    parse_rational,
    spec_to_json,
)

from .conftest import functionals

CLASSIC = '{"lhs": "midpoint", "rhs": "integral_mean"}'
QUARTERS_SYM = json.dumps(
    {
        "lhs": {
            "F_terms": [
                {"node": "0", "coef": "2"},
                {"node": "1/4", "coef": "-3"},
                {"node": "3/4", "coef": "3"},
                {"node": "1", "coef": "-2"},
            ]
        },
        "rhs": "midpoint",
    }
)
CENTRAL4 = json.dumps(
    {
        "lhs": "midpoint",
        "rhs": {
            "F_terms": [
                {"node": "0", "coef": "1/3"},
                {"node": "1/4", "coef": "-8/3"},
                {"node": "3/4", "coef": "8/3"},
                {"node": "1", "coef": "-1/3"},
            ]
        },
    }
)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


class TestCheck:
    def test_holds(self):
        code, text = run("check", CLASSIC)
        assert code == 0
        assert "verdict: holds" in text
        assert "crossings: 1/2" in text

    def test_fails(self):
        code, text = run("check", CENTRAL4)
        assert code == 1
        assert "witness: hinge (u - 2/7)_+, violation 1/84" in text

    def test_not_comparable_json(self):
        code, text = run("check", QUARTERS_SYM, "--json")
        assert code == 2
        obj = json.loads(text)
        assert obj["witness"] == {"kind": "constant", "t": None, "sign": -1, "violation": "3/2"}
        assert obj["mass"] == {"lhs": "-1/2", "rhs": "1"}

    def test_spec_from_file(self, tmp_path):
        p = tmp_path / "spec.json"
        p.write_text(CLASSIC)
        assert run("check", str(p))[0] == 0

    @pytest.mark.parametrize(
        "spec",
        [
            '{"lhs": {"f_terms": [{"node": 0.5, "weight": "1"}]}, "rhs": "midpoint"}',
            '{"lhs": "simpson", "rhs": "midpoint"}',
            '{"lhs": "midpoint"}',
            '{"lhs": "midpoint", "rhs": "midpoint", "relation": "geq"}',
            '{"lhs": {"F_terms": [{"node": "0", "coef": "1"}]}, "rhs": "midpoint"}',
            '{"lhs": "midpoint", "rhs": "midpoint", "interval": {"x": "1", "y": "0"}}',
            "{not json",
            "/nonexistent/spec.json",
        ],
    )
    def test_input_errors(self, spec, capsys):
        code, _ = run("check", spec)
        assert code == 3
        assert "input error" in capsys.readouterr().err

    def test_bad_arguments(self):
        assert run("frobnicate")[0] == 3


class TestCrossings:
    def test_central4(self):
        code, text = run("crossings", CENTRAL4)
        assert code == 0
        assert text == "crossings: 2/7 1/2 5/7; areas: 1/84 3/56 3/56 1/84\n"

    def test_none(self):
        code, text = run("crossings", '{"lhs": "midpoint", "rhs": "midpoint"}')
        assert text == "no crossings\nzero interval: [0, 1]\n"


class TestSuite:
    def test_table_and_errata(self):
        code, text = run("suite")
        assert code == 0
        errata = text.split("errata:\n")[1].strip().splitlines()
        assert len(errata) == 4
        assert errata[0].startswith("endpoint3-printed:")
        assert "violation 1/6" in errata[0]

    def test_json(self):
        code, text = run("suite", "--json")
        obj = json.loads(text)
        assert obj["ok"] and code == 0
        assert len(obj["rows"]) == 19


class TestScan:
    def test_single_cell(self):
        code, text = run("scan", "--a-range", "1:1", "--alpha-range", "1/4:1/4", "--step", "1")
        rows = list(csv.reader(io.StringIO(text)))
        assert code == 0
        assert rows[0] == SCAN_HEADER
        assert rows[1] == ["1", "1/4", "4", "holds", "true", "", "", "true", "", ""]

    def test_empty_range_gives_header_only(self):
        code, text = run("scan", "--a-range", "2:1", "--alpha-range", "1/4:1/4")
        assert code == 0
        assert text.strip() == ",".join(SCAN_HEADER)

    def test_grid_size_and_file_output(self, tmp_path):
        out = tmp_path / "scan.csv"
        code, _ = run(
            "scan", "--a-range", "-3:3", "--alpha-range", "1/10:2/5", "--a-step", "1", "--alpha-step", "1/10", "-o", str(out)
        )
        rows = out.read_text().splitlines()
        assert code == 0
        assert len(rows) == 1 + 7 * 4

    @pytest.mark.parametrize(
        "argv",
        [
            ["--a-range", "1", "--alpha-range", "1/4:1/4"],
            ["--a-range", "1:2", "--alpha-range", "0:1/4"],
            ["--a-range", "1:2", "--alpha-range", "1/4:1/4", "--step", "0"],
            ["--a-range", "1:2", "--alpha-range", "1/4:1/4", "--family", "general"],
        ],
    )
    def test_bad_ranges(self, argv):
        assert run("scan", *argv)[0] == 3


class TestOracle:
    def test_fails_with_sweep(self):
        code, text = run("oracle", CENTRAL4, "--grid", "28")
        assert code == 1
        assert "exact max hinge violation: 1/84 at t=2/7" in text

    def test_interval_override(self):
        code, text = run("oracle", CLASSIC, "--interval", "-3,7")
        assert code == 0
        assert "[-3, 7]" in text

    def test_bad_interval(self):
        assert run("oracle", CLASSIC, "--interval", "7,-3")[0] == 3


class TestSerialization:
    @pytest.mark.parametrize("text, value", [("3/4", "3/4"), ("-2", "-2"), (5, "5"), ("+1/3", "1/3")])
    def test_parse_rational(self, text, value):
        assert str(parse_rational(text, "x")) == value

    @pytest.mark.parametrize("text", ["0.5", 0.5, "1/0", "a/b", True, None])
    def test_parse_rational_rejects(self, text):
        with pytest.raises(SpecError):
            parse_rational(text, "x")

    @settings(deadline=None)
    @given(functionals(), functionals())
    def test_certificate_roundtrip(self, lhs, rhs):
        cert = compare(lhs, rhs)
        obj = certificate_to_json(cert)
        assert certificate_from_json(json.loads(json.dumps(obj))) == cert

    @given(functionals(), functionals())
    def test_spec_roundtrip(self, lhs, rhs):
        spec = ComparisonSpec(lhs, rhs, IntervalSpec(-3, 7))
        assert load_spec(json.dumps(spec_to_json(spec))) == spec

    def test_reference_names_expand(self):
        spec = load_spec('{"lhs": "trapezoid", "rhs": "midpoint"}')
        obj = spec_to_json(spec)
        assert obj["lhs"]["f_terms"] == [{"node": "0", "weight": "1/2"}, {"node": "1", "weight": "1/2"}]
        assert obj["interval"] == {"x": "0", "y": "1"}

import json
import random

import pytest

from evalcodes import Polynomial, PrimeField, format_polynomial
from evalcodes.cli import (
    ResultReport,
    fixture_names,
    load_problem,
    main,
    parse_polynomial,
    polynomial_from_pairs,
)

SEED = 20260823
F3 = PrimeField(3)
F5 = PrimeField(5)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPolynomialParsing:
    def test_text_form(self):
        f = parse_polynomial("t1^2*t2 + 2*t2 - 1", F3, 2)
        assert f == Polynomial(F3, 2, {(2, 1): 1, (0, 1): 2, (0, 0): -1})

    def test_plain_tokens(self):
        assert parse_polynomial("1", F3, 2) == Polynomial.constant(F3, 2, 1)
        assert parse_polynomial("t2", F3, 2) == Polynomial.monomial(F3, (0, 1))
        assert parse_polynomial("-t1", F3, 2) == Polynomial(F3, 2, {(1, 0): -1})
        assert parse_polynomial("0", F3, 2).is_zero()
        assert parse_polynomial("t1 - t1", F3, 2).is_zero()
        assert parse_polynomial("2*3*t1", F5, 1) == Polynomial(F5, 1, {(1,): 6})
        assert parse_polynomial("t1*t1", F3, 2) == Polynomial.monomial(F3, (2, 0))

    def test_rejects_malformed_input(self):
        for text in ("", "t3", "x1", "t1^", "t1t2", "t1 +", "^2", "t0"):
            with pytest.raises(ValueError):
                parse_polynomial(text, F3, 2)

    def test_pair_form(self):
        f = polynomial_from_pairs([[[2, 1], 1], [[0, 0], 2]], F3, 2)
        assert f == Polynomial(F3, 2, {(2, 1): 1, (0, 0): 2})

    def test_pair_form_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            polynomial_from_pairs([[1, 2]], F3, 2)
        with pytest.raises(ValueError):
            polynomial_from_pairs([[[1], 2]], F3, 2)

    def test_round_trip_with_formatter(self):
        rng = random.Random(SEED)
        for _ in range(40):
            terms = {
                (rng.randint(0, 3), rng.randint(0, 3)): rng.randrange(5)
                for _ in range(rng.randint(1, 4))
            }
            f = Polynomial(F5, 2, terms)
            assert parse_polynomial(format_polynomial(f), F5, 2) == f


class TestProblemLoading:
    def test_fixture_names_listed(self):
        assert fixture_names() == [
            "five-points-f3",
            "hypersimplex-f3-s4",
            "torus-f5-sharp-gap",
        ]

    def test_fixture_loads_by_name(self):
        data = load_problem("five-points-f3")
        assert data["q"] == 3
        assert data["r"] == [1, 2]

    def test_missing_schema_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"q": 3}))
        with pytest.raises(ValueError):
            load_problem(str(path))

    def test_invalid_json_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ValueError):
            load_problem(str(path))

    def test_unknown_source_rejected(self):
        with pytest.raises(ValueError):
            load_problem("no-such-fixture")


class TestVanishingIdealCommand:
    def test_five_point_fixture(self, capsys):
        code, out, _ = run(capsys, "vanishing-ideal", "five-points-f3")
        assert code == 0
        assert "t1^2 - t1" in out
        assert "t2^3 - t2" in out
        assert "t1*t2^2 - t1*t2" in out
        assert "footprint size: 5" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "vanishing-ideal", "five-points-f3", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["generators"] == [
            "t1^2 - t1",
            "t2^3 - t2",
            "t1*t2^2 - t1*t2",
        ]
        assert payload["footprint_size"] == 5
        assert len(payload["standard_monomials"]) == 5

    def test_single_point_file(self, capsys, tmp_path):
        path = tmp_path / "single.json"
        path.write_text(
            json.dumps(
                {"schema": 1, "q": 5, "s": 2, "points": [[2, 3]]}
            )
        )
        code, out, _ = run(capsys, "vanishing-ideal", str(path))
        assert code == 0
        assert "t1 - 2" in out
        assert "t2 - 3" in out or "t2 + 2" in out

    def test_duplicate_points_rejected(self, capsys, tmp_path):
        path = tmp_path / "dup.json"
        path.write_text(
            json.dumps(
                {"schema": 1, "q": 3, "s": 1, "points": [[0], [3]]}
            )
        )
        code, _, err = run(capsys, "vanishing-ideal", str(path))
        assert code == 1
        assert "duplicate" in err


class TestRghwCommand:
    def test_five_point_fixture(self, capsys):
        code, out, _ = run(capsys, "rghw", "five-points-f3", "--validate")
        assert code == 0
        assert "M_1 = 1" in out
        assert "M_2 = 2" in out

    def test_torus_gap_fixture(self, capsys):
        code, out, _ = run(capsys, "rghw", "torus-f5-sharp-gap", "--validate")
        assert code == 0
        assert "M_1 = 8" in out
        assert "RFP_1 = 4" in out

    def test_json_report_round_trip(self, capsys):
        code, out, _ = run(capsys, "rghw", "five-points-f3", "--json")
        assert code == 0
        report = ResultReport.from_dict(json.loads(out))
        again = ResultReport.from_dict(json.loads(json.dumps(report.to_dict())))
        assert again == report
        assert report.k1 == 5
        assert report.k2 == 3
        assert report.results == [
            {"r": 1, "rghw": 1, "relative_footprint": 1, "refusal": None},
            {"r": 2, "rghw": 2, "relative_footprint": 2, "refusal": None},
        ]

    def test_order_override_keeps_values(self, capsys):
        for order in ("lex", "grlex", "grevlex"):
            code, out, _ = run(
                capsys, "rghw", "five-points-f3", "--order", order, "--json"
            )
            assert code == 0
            payload = json.loads(out)
            assert payload["order"] == order
            assert [e["rghw"] for e in payload["results"]] == [1, 2]

    def test_validation_does_not_change_numbers(self, capsys):
        _, plain, _ = run(capsys, "rghw", "five-points-f3", "--json")
        _, checked, _ = run(capsys, "rghw", "five-points-f3", "--validate", "--json")
        assert json.loads(plain)["results"] == json.loads(checked)["results"]

    def test_budget_refusal_keeps_partial_report(self, capsys):
        code, out, _ = run(
            capsys, "rghw", "five-points-f3", "--budget", "10", "--json"
        )
        assert code == 2
        payload = json.loads(out)
        for entry in payload["results"]:
            assert entry["rghw"] is None
            assert entry["refusal"] is not None
            assert isinstance(entry["relative_footprint"], int)

    def test_equal_spaces_rejected(self, capsys, tmp_path):
        path = tmp_path / "equal.json"
        path.write_text(
            json.dumps(
                {
                    "schema": 1,
                    "q": 3,
                    "s": 2,
                    "points": [[0, 0], [1, 0], [0, 1]],
                    "L1": {"total_degree": 1},
                    "L2": {"total_degree": 1},
                    "r": [1],
                }
            )
        )
        code, _, err = run(capsys, "rghw", str(path))
        assert code == 1
        assert err.startswith("error:")

    def test_pair_form_and_shorthands(self, capsys, tmp_path):
        path = tmp_path / "pairs.json"
        path.write_text(
            json.dumps(
                {
                    "schema": 1,
                    "q": 3,
                    "s": 2,
                    "points": {"family": "cartesian", "subsets": [[0, 1], [0, 1]]},
                    "L1": ["1", "t1", "t2", [[[1, 1], 1]]],
                    "L2": {"total_degree": 1},
                    "r": [1],
                }
            )
        )
        code, out, _ = run(capsys, "rghw", str(path), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["k1"] == 4
        assert payload["k2"] == 3
        assert payload["results"][0]["rghw"] == 1

    def test_unknown_fixture_exits_one(self, capsys):
        code, _, err = run(capsys, "rghw", "no-such-problem")
        assert code == 1
        assert "fixtures" in err


class TestWeightsCommand:
    def test_hypersimplex_fixture(self, capsys):
        code, out, _ = run(capsys, "weights", "hypersimplex-f3-s4", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["weights"]["distribution"] == [
            [0, 1],
            [8, 24],
            [10, 16],
            [12, 32],
            [16, 8],
        ]
        assert payload["weights"]["distinct_weights"] == [8, 10, 12, 16]
        assert sum(c for _, c in payload["weights"]["distribution"]) == 81

    def test_budget_refusal(self, capsys):
        code, out, _ = run(
            capsys, "weights", "torus-f5-sharp-gap", "--budget", "3", "--json"
        )
        assert code == 2
        payload = json.loads(out)
        assert payload["weights"] is None
        assert payload["refusal"] is not None


class TestToricTableCommand:
    def test_reference_table(self, capsys):
        code, out, _ = run(capsys, "toric-table", "3", "4", "--json")
        assert code == 0
        payload = json.loads(out)
        rows = payload["rows"]
        assert [row["n"] for row in rows] == [16, 16, 16, 16]
        assert [row["k"] for row in rows] == [4, 6, 4, 1]
        assert [row["min_distance"] for row in rows] == [8, 4, 8, 16]
        assert [row["min_distance_formula"] for row in rows] == [8, 4, 8, 16]
        assert [row["next_to_minimal"] for row in rows] == [10, 6, 10, 16]

    def test_small_table(self, capsys):
        code, out, _ = run(capsys, "toric-table", "3", "2", "--json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert rows[0] == {
            "d": 1,
            "n": 4,
            "k": 2,
            "min_distance_formula": 2,
            "min_distance": 2,
            "next_to_minimal": 4,
            "refusal": None,
        }

    def test_binary_field_suppresses_second_weight(self, capsys):
        code, out, _ = run(capsys, "toric-table", "2", "3", "--json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [row["min_distance"] for row in rows] == [1, 1, 1]
        assert all(row["next_to_minimal"] is None for row in rows)

    def test_composite_field_rejected(self, capsys):
        code, _, err = run(capsys, "toric-table", "4", "2")
        assert code == 1
        assert "prime" in err


class TestArgumentHandling:
    def test_unknown_command_exits_one(self, capsys):
        assert main(["bogus"]) == 1

    def test_missing_argument_exits_one(self, capsys):
        assert main(["rghw"]) == 1

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

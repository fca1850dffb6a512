import json
import pathlib

import pytest

import expsumlab

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_kloosterman_sums_match_oracle():
    variety = {"kind": "torus", "dim": 1,
               "f": [{"coeff": 1, "exponents": [1]}, {"coeff": 1, "exponents": [-1]}]}
    oracle = json.loads((ROOT / "tests/oracles/sums_oracle.json").read_text())
    assert expsumlab.power_sums(5, 1, variety, 6) == oracle["kloosterman_p5"]


def test_sample_job_round_trip():
    job = json.loads((ROOT / "jobs/kloosterman_lfun.json").read_text())
    result = expsumlab.run_job(job)
    assert result.exit_code == 0
    assert result.report["command"] == "lfun"
    assert expsumlab.run_job(job).report == result.report


def test_predictions():
    assert expsumlab.chern_degree(2, [1, 1, 1], [1, 1, 1]) == 9
    assert expsumlab.curve_degree(0, 0, 2, 2) == 2
    assert expsumlab.betti_degree(3, [7, 18]) == {"degree": 11, "total_bound": 25, "signed_euler": -11}
    assert expsumlab.newton_degree(2, [[1, 1], [2, 2]]) == (0, True)
    assert expsumlab.sl2_degree(3) == 6
    assert expsumlab.fermat_report(2)["discrepancy"] is True


def test_dwork_radius():
    prof = expsumlab.radius_profile(3, [{"coeff": [0, 1], "power": -2}], ["1/2", "1"], 120)
    assert [s["r"] for s in prof["samples"]] == ["1", "2"]
    assert expsumlab.robba_index("2", "1") == 1


def test_errors_map_to_python_exceptions():
    with pytest.raises(expsumlab.SchemaError):
        expsumlab.run_job({"command": "sum", "bogus": 1})
    job = json.loads((ROOT / "jobs/kloosterman_lfun.json").read_text())
    with pytest.raises(expsumlab.BudgetExceeded):
        expsumlab.run_job(job, budget=10)
    with pytest.raises(expsumlab.Uncertified):
        expsumlab.robba_index("3/2", "1")
    assert issubclass(expsumlab.DomainError, expsumlab.Error)


def test_verify_case():
    assert "kloosterman" in expsumlab.verify_cases()
    assert expsumlab.verify("kloosterman").exit_code == 0

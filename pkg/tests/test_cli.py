import json

import pytest

from jetstrata import cli
from jetstrata.selfcheck import check_determinant_oracle, check_ring_fixture

from conftest import FOUR_MANIFOLD_SPEC


def run_cli(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def parse_report(out):
    return json.loads(out)


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")


@pytest.fixture
def ring_file(tmp_path):
    path = tmp_path / "ring.json"
    write_json(path, FOUR_MANIFOLD_SPEC)
    return path


@pytest.fixture
def bundle_file(tmp_path):
    path = tmp_path / "bundle.json"
    write_json(
        path,
        {
            "totalPositive": [{"label": "1", "coeff": 1}, {"label": "x2", "coeff": 3}],
            "totalNegativePulled": [{"label": "1", "coeff": 1}],
        },
    )
    return path


def test_codim_command(capsys):
    status, out, _ = run_cli(capsys, "codim", "--symbol", "2,1,0", "--n", "3", "--p", "3")
    assert status == 0
    report = parse_report(out)
    assert report["command"] == "codim"
    assert report["intermediates"]["bound"] == 5
    assert report["intermediates"]["firstOrderCodim"] == 4
    assert report["verdict"] is None
    assert report["citations"]


def test_codim_reports_jet_dimension_for_finite_order(capsys):
    status, out, _ = run_cli(
        capsys, "codim", "--symbol", "1,0", "--n", "2", "--p", "3", "--k", "2"
    )
    assert status == 0
    assert parse_report(out)["intermediates"]["jetFiberDim"] == 15


def test_codim_invalid_symbol_exits_2(capsys):
    status, _, err = run_cli(capsys, "codim", "--symbol", "1,2", "--n", "3", "--p", "3")
    assert status == 2
    assert "NotMonotone" in err


def test_criteria_w_command(capsys):
    status, out, _ = run_cli(
        capsys,
        "criteria", "w", "--n", "8", "--p", "8", "--i", "3", "--l", "1", "--k", "18",
    )
    assert status == 0
    report = parse_report(out)
    assert report["verdict"] == "Established"
    assert report["intermediates"]["lhs"] == 9
    assert report["intermediates"]["kRequired"] == 10


def test_criteria_stabilized_command(capsys):
    status, out, _ = run_cli(
        capsys,
        "criteria", "stabilized",
        "--n", "20", "--p", "20", "--i", "3", "--l", "1", "--k", "100",
    )
    assert status == 0
    report = parse_report(out)
    assert report["verdict"] == "Established"
    assert report["intermediates"]["shiftUsed"] == 12


def test_filtration_next_index_command(capsys):
    status, out, _ = run_cli(capsys, "filtration", "next-index", "--l", "0")
    assert status == 0
    report = parse_report(out)
    assert report["intermediates"]["index"] == 2
    assert report["intermediates"]["stageDim"] == 32


def test_porteous_command(capsys, ring_file, bundle_file):
    status, out, _ = run_cli(
        capsys,
        "porteous", "--variant", "pontrjagin",
        "--ring", str(ring_file), "--bundle", str(bundle_file),
        "--i", "2", "--n", "4", "--p", "4",
    )
    assert status == 0
    report = parse_report(out)
    assert report["verdict"] == "Nonzero"
    assert report["intermediates"]["matrixSize"] == 1
    assert report["intermediates"]["obstruction"]["components"] == [
        {"label": "x2", "coeff": 3}
    ]


def test_wtable_command(capsys, tmp_path):
    ring_spec = {
        "mode": "integer_mod_torsion",
        "topDim": 8,
        "basis": [
            {"label": "1", "degree": 0},
            {"label": "a", "degree": 4},
            {"label": "b", "degree": 8},
            {"label": "aa", "degree": 8},
        ],
        "products": [{"a": "a", "b": "a", "result": [{"label": "aa", "coeff": 1}]}],
        "fundamental": "b",
    }
    ring_path = tmp_path / "r8.json"
    write_json(ring_path, ring_spec)
    bundle_path = tmp_path / "b8.json"
    write_json(
        bundle_path,
        {
            "totalPositive": [
                {"label": "1", "coeff": 1},
                {"label": "a", "coeff": 1},
                {"label": "b", "coeff": 1},
            ],
            "totalNegativePulled": [{"label": "1", "coeff": 1}],
        },
    )
    status, out, _ = run_cli(
        capsys, "wtable", "--p", "8", "--ring", str(ring_path), "--bundle", str(bundle_path)
    )
    assert status == 0
    report = parse_report(out)
    assert report["verdict"] == "Nonzero"
    components = {c["label"]: c["coeff"] for c in report["intermediates"]["obstruction"]["components"]}
    assert components == {"b": 9, "aa": 3}


def test_verdict_command_identity_is_inconclusive(capsys, ring_file, tmp_path):
    bundle_path = tmp_path / "trivial.json"
    write_json(
        bundle_path,
        {
            "totalPositive": [{"label": "1", "coeff": 1}],
            "totalNegativePulled": [{"label": "1", "coeff": 1}],
        },
    )
    status, out, _ = run_cli(
        capsys,
        "verdict", "--ring", str(ring_file), "--bundle", str(bundle_path),
        "--i", "2", "--l", "0", "--k", "20", "--target-dim", "4",
    )
    assert status == 0
    report = parse_report(out)
    assert report["verdict"] == "Inconclusive"


def test_filtration_run_command(capsys, tmp_path):
    ring_spec = {
        "mode": "integer_mod_torsion",
        "topDim": 32,
        "basis": [{"label": "1", "degree": 0}]
        + [{"label": f"t{j}", "degree": 4 * j} for j in range(1, 9)],
        "products": [
            {
                "a": f"t{a}",
                "b": f"t{b}",
                "result": [{"label": f"t{a + b}", "coeff": 1}],
            }
            for a in range(1, 8)
            for b in range(a, 8)
            if a + b <= 8
        ],
        "fundamental": "t8",
    }
    document = {
        "d": 0,
        "schedule": [8, 9],
        "stages": [
            {
                "ring": ring_spec,
                "bundle": {
                    "totalPositive": [
                        {"label": "1", "coeff": 1},
                        {"label": "t1", "coeff": 1},
                        {"label": "t2", "coeff": 1},
                    ],
                    "totalNegativePulled": [{"label": "1", "coeff": 1}],
                },
            }
        ],
    }
    spec_path = tmp_path / "run.json"
    write_json(spec_path, document)
    status, out, _ = run_cli(capsys, "filtration", "run", "--spec", str(spec_path))
    assert status == 0
    report = parse_report(out)
    assert report["verdict"] == "RunVerified"
    stage = report["intermediates"]["stages"][0]
    assert stage["dim"] == 32
    assert stage["productObstruction"]["isZero"] is False


def test_reports_are_byte_identical(capsys, ring_file, bundle_file):
    argv = [
        "porteous", "--variant", "pontrjagin",
        "--ring", str(ring_file), "--bundle", str(bundle_file),
        "--i", "2", "--n", "4", "--p", "4",
    ]
    status_a, out_a, _ = run_cli(capsys, *argv)
    status_b, out_b, _ = run_cli(capsys, *argv)
    assert status_a == status_b == 0
    assert out_a == out_b


def test_report_ring_echo_round_trips(capsys, ring_file, bundle_file, tmp_path):
    argv = [
        "porteous", "--variant", "pontrjagin",
        "--ring", str(ring_file), "--bundle", str(bundle_file),
        "--i", "2", "--n", "4", "--p", "4",
    ]
    _, out_a, _ = run_cli(capsys, *argv)
    report = parse_report(out_a)
    ring_echo = tmp_path / "ring_echo.json"
    bundle_echo = tmp_path / "bundle_echo.json"
    write_json(ring_echo, report["inputs"]["ring"])
    write_json(bundle_echo, report["inputs"]["bundle"])
    _, out_b, _ = run_cli(
        capsys,
        "porteous", "--variant", "pontrjagin",
        "--ring", str(ring_echo), "--bundle", str(bundle_echo),
        "--i", "2", "--n", "4", "--p", "4",
    )
    assert out_a == out_b


def test_out_flag_writes_only_the_report_file(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    out_path = tmp_path / "report.json"
    status = cli.main(
        ["codim", "--symbol", "2,1", "--n", "3", "--p", "3", "--out", str(out_path)]
    )
    assert status == 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert json.loads(out_path.read_text())["intermediates"]["bound"] == 5
    assert sorted(p.name for p in tmp_path.iterdir()) == ["report.json"]


def test_missing_input_file_exits_2(capsys, bundle_file):
    status, _, err = run_cli(
        capsys,
        "porteous", "--variant", "sw",
        "--ring", "/nonexistent/ring.json", "--bundle", str(bundle_file),
        "--i", "1", "--n", "3", "--p", "3",
    )
    assert status == 2
    assert err


def test_malformed_ring_exits_2_naming_invariant(capsys, tmp_path, bundle_file):
    bad = dict(FOUR_MANIFOLD_SPEC)
    bad["basis"] = [{"label": "1", "degree": 0}, {"label": "x", "degree": 2}]
    bad["fundamental"] = "x"
    path = tmp_path / "bad.json"
    write_json(path, bad)
    status, _, err = run_cli(
        capsys,
        "porteous", "--variant", "pontrjagin",
        "--ring", str(path), "--bundle", str(bundle_file),
        "--i", "2", "--n", "4", "--p", "4",
    )
    assert status == 2
    assert "MissingFundamental" in err or "PresentationError" in err


def test_porteous_sw_command(capsys, tmp_path):
    ring_spec = {
        "mode": "mod2",
        "topDim": 4,
        "basis": [{"label": "1", "degree": 0}]
        + [{"label": f"w{j}", "degree": j} for j in range(1, 5)],
        "products": [
            {"a": f"w{a}", "b": f"w{b}", "result": [{"label": f"w{a + b}", "coeff": 1}]}
            for a in range(1, 4)
            for b in range(a, 4)
            if a + b <= 4
        ],
        "fundamental": "w4",
    }
    ring_path = tmp_path / "m2.json"
    write_json(ring_path, ring_spec)
    bundle_path = tmp_path / "bm2.json"
    write_json(
        bundle_path,
        {
            "totalPositive": [{"label": "1", "coeff": 1}, {"label": "w2", "coeff": 1}],
            "totalNegativePulled": [{"label": "1", "coeff": 1}],
        },
    )
    status, out, _ = run_cli(
        capsys,
        "porteous", "--variant", "sw",
        "--ring", str(ring_path), "--bundle", str(bundle_path),
        "--i", "2", "--n", "4", "--p", "4",
    )
    assert status == 0
    report = parse_report(out)
    # det [[W2, W1], [W3, W2]] with only W2 nonzero is W2^2 = w4
    assert report["verdict"] == "Nonzero"
    assert report["intermediates"]["obstruction"]["components"] == [
        {"label": "w4", "coeff": 1}
    ]


def test_selfcheck_passes(capsys):
    status, out, _ = run_cli(capsys, "selfcheck")
    assert status == 0
    assert "failed 0" in out


def test_selfcheck_failure_exits_1(capsys, monkeypatch):
    from jetstrata import selfcheck as selfcheck_module

    def failing():
        return [selfcheck_module.CheckResult("synthetic-failure", False, "induced")]

    monkeypatch.setattr(selfcheck_module, "run_selfcheck", failing)
    status, out, _ = run_cli(capsys, "selfcheck")
    assert status == 1
    assert "FAIL synthetic-failure" in out


def test_selfcheck_detects_corrupted_fixture():
    corrupted = {
        "mode": "integer_mod_torsion",
        "topDim": 4,
        "basis": [
            {"label": "1", "degree": 0},
            {"label": "x", "degree": 2},
            {"label": "x2", "degree": 4},
        ],
        # generator square redirected to the wrong degree
        "products": [{"a": "x", "b": "x", "result": [{"label": "x", "coeff": 1}]}],
        "fundamental": "x2",
    }
    result = check_ring_fixture(corrupted)
    assert not result.passed
    assert "PresentationError" in result.detail

    weaker = dict(corrupted)
    weaker["products"] = [{"a": "x", "b": "x", "result": [{"label": "x2", "coeff": 2}]}]
    result = check_ring_fixture(weaker)
    assert not result.passed
    assert "pairing" in result.detail


def test_determinant_oracle_check_runs():
    assert check_determinant_oracle().passed

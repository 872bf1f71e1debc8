"""End-to-end CLI behavior: outputs, exit codes, determinism."""

import json

import pytest

from ss3 import CountResult, make_context
from ss3.cli import main
from ss3.export import EXPORT_SCHEMA


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ----------------------------------------------------------------------
# field-info
# ----------------------------------------------------------------------


def test_field_info_d2_exact_output(capsys):
    rc, out, _ = run(capsys, "field-info", "2")
    assert rc == 0
    assert out == '{"d":2,"modulus":[1,0,1],"beta":"1,1","alpha":"2,0","tau":"0,1"}\n'


def test_field_info_d1_no_tau(capsys):
    rc, out, _ = run(capsys, "field-info", "1")
    assert rc == 0
    obj = json.loads(out)
    assert obj["beta"] == "2" and obj["tau"] is None


def test_field_info_rejects_degree_zero(capsys):
    rc, _, err = run(capsys, "field-info", "0")
    assert rc == 2
    assert "DegreeOutOfRange" in err


def test_field_info_modulus_override(capsys):
    rc, out, _ = run(capsys, "field-info", "2", "--modulus", "2,1,1")
    assert rc == 0
    assert json.loads(out)["modulus"] == [2, 1, 1]
    rc, _, err = run(capsys, "field-info", "2", "--modulus", "0,1,1")
    assert rc == 2 and "ModulusReducible" in err


# ----------------------------------------------------------------------
# classify
# ----------------------------------------------------------------------


def test_classify_type_I_vector(capsys):
    rc, out, _ = run(capsys, "classify", "--d", "1", "--a4", "2", "--a6", "1")
    assert rc == 0
    obj = json.loads(out)
    assert obj["class"] == {"type": "I", "invariant": "1", "beta": "2"}
    assert obj["representative"]["equation"] == "y^2 = x^3 - x + 1"
    assert obj["witness"] == {"u": "1", "r": "0"}


def test_classify_type_I_plus_vector(capsys):
    rc, out, _ = run(capsys, "classify", "--d", "1", "--a4", "1", "--a6", "0")
    assert rc == 0
    obj = json.loads(out)
    assert obj["class"]["type"] == "I+"
    assert obj["representative"]["equation"] == "y^2 = x^3 + x"


def test_classify_rejects_zero_a4(capsys):
    rc, _, err = run(capsys, "classify", "--d", "1", "--a4", "0", "--a6", "1")
    assert rc == 2 and "InvalidCurve" in err


def test_classify_coefficient_list_input(capsys):
    rc, out, _ = run(capsys, "classify", "--d", "2", "--a4", "2,0", "--a6", "0,1")
    assert rc == 0
    assert json.loads(out)["class"] == {"type": "I", "invariant": "0", "beta": "1,1"}


# ----------------------------------------------------------------------
# count
# ----------------------------------------------------------------------


def test_count_one_point_curve(capsys):
    rc, out, _ = run(capsys, "count", "--d", "1", "--a4", "2", "--a6", "2")
    assert rc == 0
    obj = json.loads(out)
    assert obj["order"] == "1" and obj["q"] == "3" and obj["trace"] == "3"


def test_count_gf9(capsys):
    rc, out, _ = run(capsys, "count", "--d", "2", "--a4", "2", "--a6", "0")
    assert rc == 0
    assert json.loads(out)["order"] == "16"


def test_count_naive_agrees_with_closed_form(capsys):
    args = ["count", "--d", "5", "--a4", "101", "--a6", "202"]
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args, "--naive")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_count_general_coefficients(capsys):
    rc, out, _ = run(
        capsys, "count", "--d", "1", "--a4", "1", "--a6", "0", "--a3", "1"
    )
    assert rc == 0
    assert json.loads(out)["order"] == "4"


def test_count_ordinary_curve_rejected_without_naive(capsys):
    args = ["count", "--d", "1", "--a4", "0", "--a6", "1", "--a2", "1"]
    rc, _, err = run(capsys, *args)
    assert rc == 2 and "NotSupersingularError" in err
    rc, out, _ = run(capsys, *args, "--naive")
    assert rc == 0
    obj = json.loads(out)
    assert obj["order"] == "6" and obj["class"] is None


def test_count_respects_oracle_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("SS3_ORACLE_CAP", "10")
    rc, _, err = run(capsys, "count", "--d", "3", "--a4", "1", "--a6", "1", "--naive")
    assert rc == 2 and "OracleTooLarge" in err
    # the closed form is unaffected by the cap
    rc, out, _ = run(capsys, "count", "--d", "3", "--a4", "1", "--a6", "1")
    assert rc == 0 and json.loads(out)["order"] == "28"


# ----------------------------------------------------------------------
# enumerate
# ----------------------------------------------------------------------


def _data_rows(out):
    lines = out.strip().splitlines()
    return lines[2:]  # header line + column line


def test_enumerate_d1(capsys):
    rc, out, _ = run(capsys, "enumerate", "--d", "1")
    assert rc == 0
    rows = _data_rows(out)
    assert len(rows) == 4
    orders = sorted(int(r.split()[-2]) for r in rows)
    assert orders == [1, 4, 4, 7]


def test_enumerate_d2(capsys):
    rc, out, _ = run(capsys, "enumerate", "--d", "2")
    assert rc == 0
    rows = _data_rows(out)
    assert len(rows) == 6
    orders = sorted(int(r.split()[-2]) for r in rows)
    assert orders == [4, 7, 10, 10, 13, 16]


def test_enumerate_d3_row_count(capsys):
    rc, out, _ = run(capsys, "enumerate", "--d", "3")
    assert rc == 0
    assert len(_data_rows(out)) == 4


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def test_verify_small_passes(capsys):
    rc, out, _ = run(capsys, "verify", "--d-max", "2", "--samples", "10")
    assert rc == 0
    assert out.startswith("verify d-max=2 samples=10 seed=0\n")
    assert "RESULT PASS" in out
    assert all(line.startswith(("verify", "PASS", "RESULT")) for line in out.strip().splitlines())


def test_verify_deterministic_reports(capsys):
    rc1, out1, _ = run(capsys, "verify", "--d-max", "2", "--samples", "15", "--seed", "7")
    rc2, out2, _ = run(capsys, "verify", "--d-max", "2", "--samples", "15", "--seed", "7")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_verify_catches_corrupted_formula(capsys, monkeypatch):
    import ss3.verify as verify_mod

    real = verify_mod.count_supersingular

    def corrupted(e):
        r = real(e)
        return CountResult(
            q=r.q, order=r.order + 3, frobenius_trace=r.frobenius_trace - 3,
            class_used=r.class_used,
        )

    monkeypatch.setattr(verify_mod, "count_supersingular", corrupted)
    rc, out, _ = run(capsys, "verify", "--d-max", "1", "--samples", "5")
    assert rc == 1
    fail_lines = [l for l in out.splitlines() if l.startswith("FAIL")]
    assert fail_lines and "curve=a4=" in fail_lines[0]
    assert "RESULT FAIL" in out


def test_usage_errors_exit_2(capsys):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["classify", "--d", "1"]) == 2  # missing a4/a6
    capsys.readouterr()


# ----------------------------------------------------------------------
# export
# ----------------------------------------------------------------------


def test_export_csv_d1_row_structure(capsys):
    rc, out, _ = run(capsys, "export", "--d", "1", "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,modulus,a4,a6,type,invariant,order,trace,u,r"
    assert len(lines) == 1 + 4 + 6  # header, class rows, curve rows


def test_export_json_validates_against_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    rc, out, _ = run(capsys, "export", "--d", "2", "--format", "json")
    assert rc == 0
    obj = json.loads(out)
    jsonschema.validate(obj, EXPORT_SCHEMA)
    assert len(obj["classes"]) == 6
    assert len(obj["curves"]) == 72


def test_export_large_degree_has_class_rows_only(capsys):
    rc, out, _ = run(capsys, "export", "--d", "30", "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 6  # header + class rows, no exhaustive curves
    assert all(line.startswith("30,") for line in lines[1:])


def test_export_to_file(tmp_path, capsys):
    out_path = tmp_path / "vectors.json"
    rc, out, _ = run(capsys, "export", "--d", "1", "--format", "json",
                     "--out", str(out_path))
    assert rc == 0 and out == ""
    obj = json.loads(out_path.read_text())
    assert obj["context"]["d"] == 1


def test_export_records_reproducible(capsys):
    # re-running classification/counting on exported inputs reproduces
    # every derived field
    from ss3 import ShortCurve, canonicalize, count_supersingular

    rc, out, _ = run(capsys, "export", "--d", "2", "--format", "json")
    obj = json.loads(out)
    ctx = make_context(obj["context"]["d"], obj["context"]["modulus"])
    for rec in obj["classes"] + obj["curves"]:
        e = ShortCurve(ctx.element(rec["a4"]), ctx.element(rec["a6"]))
        rep, cls, w = canonicalize(e)
        r = count_supersingular(e)
        assert cls.ctype.value == rec["type"]
        assert cls.invariant == rec["invariant"]
        assert str(r.order) == rec["order"]
        assert str(r.frobenius_trace) == rec["trace"]
        assert str(w.u) == rec["u"] and str(w.r) == rec["r"]

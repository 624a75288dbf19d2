import json

import pytest

from fqwilson.cli import main
from fqwilson.survey import resume


def run(capsys, argv, expect=0):
    code = main(argv)
    out, err = capsys.readouterr()
    assert code == expect, err or out
    return out, err


@pytest.fixture(autouse=True)
def _clean_seed_env(monkeypatch):
    monkeypatch.delenv("CARLITZ_SEED", raising=False)


# ------------------------------------------------------------- goldens


def test_primes_list(capsys):
    out, _ = run(capsys, ["primes", "list", "--field", "2", "--degree", "3"])
    assert out == ("2 monic irreducibles of degree 3 over 2\n"
                   "t^3+t+1\n"
                   "t^3+t^2+1\n")


def test_carlitz_bracket(capsys):
    out, _ = run(capsys, ["carlitz", "compute", "--field", "2",
                          "--what", "bracket", "--n", "1"])
    assert out == "degree 2\nt^2+t\n"


def test_check_wilson_all_conditions(capsys):
    out, _ = run(capsys, ["check", "wilson", "--field", "3",
                          "--prime", "t^3+2*t+2", "--all-conditions"])
    lines = out.splitlines()
    assert lines[0] == "def: true"
    assert lines[-1] == "wilson: true (15 conditions, unanimous)"
    assert len(lines) == 16
    assert all(line.endswith(": true") for line in lines[:-1])


def test_check_wilson_negative(capsys):
    out, _ = run(capsys, ["check", "wilson", "--field", "3",
                          "--prime", "t^3+t^2+2"])
    assert out == "wilson: false (15 conditions, unanimous)\n"


def test_check_wilson_char2_marker(capsys):
    out, _ = run(capsys, ["check", "wilson", "--field", "2",
                          "--prime", "t^2+t+1"])
    assert out == "wilson: false (1 condition, unanimous) [definition-only]\n"


def test_check_wieferich(capsys):
    out, _ = run(capsys, ["check", "wieferich", "--field", "3",
                          "--prime", "t^2+1", "--base", "t^3"])
    assert out == "wieferich: true (6 conditions, unanimous)\n"


def test_classify_base_json(capsys):
    out, _ = run(capsys, ["classify-base", "--field", "3",
                          "--base", "t^3+2*t", "--json"])
    assert out == '{"c":2,"tag":"NoWieferichPrimes","witness":"t"}\n'


def test_factor_golden(capsys):
    out, _ = run(capsys, ["factor", "--field", "3", "--poly", "t^2+2*t+1"])
    assert out == "unit: 1\n(t+1)^2\n"


def test_factor_trial_division_cofactor(capsys):
    out, _ = run(capsys, ["factor", "--field", "3",
                          "--poly", "t^4+t^3+2*t^2+t+2",
                          "--max-trial-degree", "1"])
    assert out == ("unit: 1\n"
                   "t+1\n"
                   "cofactor: degree 3 (irreducible: True)\n")


def test_survey_human_output(capsys):
    out, _ = run(capsys, ["survey", "--field", "3", "--degree", "3"])
    assert out == (
        "field 3 degree 3: 8 primes\n"
        "wilson (2): t^3+2*t+1 t^3+2*t+2\n"
        "special c=1 (0): -\n"
        "special c=2 (2): t^3+2*t+1 t^3+2*t+2\n"
        "mult D_plus_sign_c c=2: t^3+2*t+1:1 t^3+2*t+2:1\n"
        "mult L_minus_c c=2: t^3+2*t+1:2 t^3+2*t+2:2\n"
        "mult wilson_sum: t^3+2*t+1:1 t^3+2*t+2:1\n"
    )


def test_theorem5_output(capsys):
    out, _ = run(capsys, ["theorem5", "--field", "3", "--degree", "3"])
    assert out == (
        "wilson sum, degree 3: polynomial degree 9\n"
        "factors: 1x3 3x2\n"
        "degree-3 factors = wilson primes (2), multiplicities "
        "t^3+2*t+1:1 t^3+2*t+2:1\n"
    )


def test_theorem7_output(capsys):
    out, _ = run(capsys, ["theorem7", "--field", "3", "--degree", "3",
                          "--c", "2"])
    lines = out.splitlines()
    assert lines[0] == "perturbations at degree 3, c=2 (full mode)"
    assert lines[1] == "special primes (2): t^3+2*t+1 t^3+2*t+2"
    assert any(line.startswith("L_minus_c: degree 12") for line in lines)
    assert any(line.startswith("D_plus_sign_c: degree 18") for line in lines)


def test_scan_borisov_output(capsys):
    out, _ = run(capsys, ["scan", "borisov", "--field", "3",
                          "--max-degree", "4"])
    assert out == "d=3 c=1 gcd degree 6: t^6+t^4+t^2+2\n"


def test_scan_no_findings(capsys):
    out, _ = run(capsys, ["scan", "alt-conjecture", "--field", "5",
                          "--max-degree", "4"])
    assert out == "no nontrivial gcd found\n"


# ------------------------------------------------------------ exit codes


def test_bad_field_exits_2(capsys):
    _, err = run(capsys, ["primes", "list", "--field", "6", "--degree", "2"],
                 expect=2)
    assert "not a prime power" in err


def test_unparseable_poly_exits_2(capsys):
    _, err = run(capsys, ["factor", "--field", "3",
                          "--poly", "(t+1)*(t^3+2*t+2)"], expect=2)
    assert err.startswith("error:")


def test_perturbation_without_c_exits_2(capsys):
    _, err = run(capsys, ["carlitz", "compute", "--field", "3",
                          "--what", "perturbation", "--n", "3"], expect=2)
    assert "requires --c" in err


def test_missing_required_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["primes", "list", "--degree", "2"])
    assert exc.value.code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    out, _ = capsys.readouterr()
    assert out.strip()


# ------------------------------------------------------------------ json


def test_json_outputs_parse_and_repeat(capsys):
    argv = ["check", "wilson", "--field", "3", "--prime", "t^3+2*t+2",
            "--json"]
    first, _ = run(capsys, argv)
    data = json.loads(first)
    assert data["prime"] == "t^3+2*t+2"
    assert data["unanimous"] is True
    second, _ = run(capsys, argv)
    assert second == first


def test_survey_json_is_the_persisted_document(capsys, tmp_path):
    path = tmp_path / "out.jsonl"
    argv = ["survey", "--field", "3", "--degree", "2", "--out", str(path)]
    run(capsys, argv)
    stdout_doc, _ = run(capsys, argv + ["--json"])
    assert stdout_doc == path.read_text()
    header, records = resume(path)
    assert header["seed"] == 0
    assert set(records) == {"3|2"}


# ----------------------------------------------------------- persistence


def test_survey_append_and_seed_mismatch(capsys, tmp_path):
    path = tmp_path / "sweep.jsonl"
    run(capsys, ["survey", "--field", "3", "--degree", "1",
                 "--out", str(path)])
    run(capsys, ["survey", "--field", "3", "--degree", "2",
                 "--out", str(path), "--append"])
    _, records = resume(path)
    assert set(records) == {"3|1", "3|2"}

    _, err = run(capsys, ["survey", "--field", "3", "--degree", "3",
                          "--out", str(path), "--append", "--seed", "5"],
                 expect=2)
    assert "line 1" in err


def test_seed_env_fallback_and_flag_priority(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CARLITZ_SEED", "5")
    path = tmp_path / "env.jsonl"
    run(capsys, ["survey", "--field", "3", "--degree", "1",
                 "--out", str(path)])
    header, _ = resume(path)
    assert header["seed"] == 5

    path2 = tmp_path / "flag.jsonl"
    run(capsys, ["survey", "--field", "3", "--degree", "1",
                 "--out", str(path2), "--seed", "9"])
    header, _ = resume(path2)
    assert header["seed"] == 9


# ----------------------------------------------------------- verify cases


def test_verify_artin_schreier(capsys):
    out, _ = run(capsys, ["verify", "paper", "--case", "artin-schreier"])
    assert out.splitlines()[0] == "case artin-schreier"
    assert "all 54 checks passed" in out
    assert "MISMATCH" not in out


def test_verify_q3d9(capsys):
    out, _ = run(capsys, ["verify", "paper", "--case", "q3d9"])
    assert "all 5 checks passed" in out
    assert "MISMATCH" not in out


def test_verify_json_payload(capsys):
    out, _ = run(capsys, ["verify", "paper", "--case", "artin-schreier",
                          "--json"])
    data = json.loads(out)
    assert data["case"] == "artin-schreier"
    assert data["ok"] is True
    assert len(data["checks"]) == 54

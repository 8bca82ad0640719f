"""
Pruebas de la línea de órdenes: formatos, caché y códigos de salida
"""

import json

import pytest

from cli import cache_key, commands, get_default_level, load_result, obstruction_bound, run, save_result, verify_all
from exactlin import AlgebraError, VerificationError


@pytest.fixture(autouse=True)
def no_cache_env(monkeypatch):
    monkeypatch.delenv("FOVEC_CACHE", raising=False)
    monkeypatch.delenv("FOVEC_LEVEL", raising=False)


def run_json(capsys, *argv):
    code = run(list(argv) + ["--format", "json"])
    captured = capsys.readouterr()
    return code, json.loads(captured.out), captured.err


def test_obstruction_bound_values():
    assert obstruction_bound(2) == (8, 6)
    assert obstruction_bound(3) == (15, 11)
    assert obstruction_bound(10) == (120, 102)


def test_obstruction_command(capsys):
    code, document, _ = run_json(capsys, "obstruction", "--n", "10")
    assert code == 0
    assert set(document) == {"command", "params", "result", "wall_time_ms", "artifact_version"}
    assert document["result"] == {"top_degree": 120, "subflag_bound": 102, "argmax": [1, 9]}


def test_invalid_parameters_exit_code(capsys):
    code, document, _ = run_json(capsys, "obstruction", "--n", "1")
    assert code == 2
    assert document["error"]["code"] == "INVALID_PARAMETERS"


def test_wn_cohomology_json(capsys):
    code, document, _ = run_json(capsys, "wn-cohomology", "--n", "1", "--sym", "1", "--max-degree", "4")
    assert code == 0
    assert document["result"]["cohomology"] == {"2": 1, "3": 1}
    assert document["params"] == {"n": 1, "sym": 1, "max_degree": 4, "sector": "euler"}


def test_weyl_gl1_table(capsys):
    assert run(["weyl-gl1", "--N", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("WEYL-GL1:")
    rows = {}
    for line in out.splitlines():
        parts = line.split()
        if len(parts) == 2 and parts[0].isdigit():
            rows[int(parts[0])] = int(parts[1])
    assert rows == {0: 1, 3: 1, 5: 2, 6: 2, 7: 5, 8: 10, 9: 5}
    assert "- matches_formula: True" in out


def test_csv_output(capsys):
    assert run(["wn-cohomology", "--n", "1", "--max-degree", "4", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:3] == ["degree,dimension", "0,1", "3,1"]


def test_csv_without_cohomology(capsys):
    assert run(["series", "--kind", "grassmannian", "--m", "1", "--n", "1", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "key,value"
    assert lines[1] == 'poincare,"[1, 0, 1]"'


def test_relative_and_wl_commands(capsys):
    code, document, _ = run_json(capsys, "relative", "--family", "W", "--shape", "1", "--sym", "1", "--max-degree", "3")
    assert code == 0
    assert document["result"]["cohomology"] == {"2": 1}

    code, document, _ = run_json(capsys, "wl-cohomology", "--m", "1", "--n", "1")
    assert code == 0
    assert document["result"]["cohomology"] == {"0": 1, "2": 1, "4": 1}
    assert document["result"]["matches_prediction"] is True


def test_transgression_direct(capsys):
    code, document, _ = run_json(capsys, "transgression", "--blocks", "1", "--direct")
    assert code == 0
    assert document["result"]["direct"] == document["result"]["cohomology"] == {"0": 1, "3": 1}


def test_parabolic_verify_ext(capsys):
    code, document, _ = run_json(
        capsys, "parabolic-verify", "--check", "ext", "--m", "1", "--n", "1",
        "--highest", "0,0", "--levi-weight=-1,1",
    )
    assert code == 0
    assert document["result"]["computed"] == {"1": 1}
    assert document["result"]["passed"] is True


def test_cocycle_verify_wheel(capsys):
    code, document, _ = run_json(capsys, "cocycle-verify", "--kind", "wheel", "--r", "2", "--n", "1")
    assert code == 0
    assert document["result"]["zero"] is True
    assert document["result"]["closed"] is True


def test_verification_failure_exit_code(capsys, monkeypatch):
    def failing(params):
        raise VerificationError("VANISHING_VIOLATED", "instancia de prueba")

    monkeypatch.setitem(commands.COMMANDS, "obstruction", failing)
    code, document, err = run_json(capsys, "obstruction", "--n", "2")
    assert code == 1
    assert document["error"]["code"] == "VANISHING_VIOLATED"
    assert "[ERROR]" in err


def test_unexpected_error_exit_code(capsys, monkeypatch):
    def broken(params):
        raise RuntimeError("fallo")

    monkeypatch.setitem(commands.COMMANDS, "obstruction", broken)
    assert run(["obstruction", "--n", "2"]) == 1
    assert "Error inesperado" in capsys.readouterr().err


def test_missing_argument_exits_with_usage_error():
    with pytest.raises(SystemExit) as error:
        run(["obstruction"])
    assert error.value.code == 2


def test_cache_round_trip(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("FOVEC_CACHE", str(tmp_path))
    argv = ("parabolic-verify", "--check", "degeneration", "--m", "1", "--n", "1")
    _, fresh, _ = run_json(capsys, *argv)
    assert len(list(tmp_path.glob("*.json"))) == 1

    _, cached, err = run_json(capsys, *argv)
    assert "caché" in err
    assert json.dumps(cached["result"], sort_keys=True) == json.dumps(fresh["result"], sort_keys=True)


def test_cache_dir_flag(capsys, tmp_path):
    assert run(["series", "--kind", "gl", "--n", "2", "--cache-dir", str(tmp_path)]) == 0
    capsys.readouterr()
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_env_cache_dir_wins_over_flag(capsys, monkeypatch, tmp_path):
    env_dir, flag_dir = tmp_path / "env", tmp_path / "flag"
    monkeypatch.setenv("FOVEC_CACHE", str(env_dir))
    assert run(["series", "--kind", "catalan", "--N", "4", "--cache-dir", str(flag_dir)]) == 0
    capsys.readouterr()
    assert len(list(env_dir.glob("*.json"))) == 1
    assert not flag_dir.exists()


def test_cache_key():
    assert cache_key("series", {"m": 1, "n": 2}) == cache_key("series", {"n": 2, "m": 1})
    assert cache_key("series", {"m": 1}) != cache_key("series", {"m": 2})
    assert cache_key("series", {"m": 1}, "1.0.0") != cache_key("series", {"m": 1}, "2.0.0")


def test_save_and_load(tmp_path, capsys):
    key = cache_key("obstruction", {"n": 2})
    assert save_result(str(tmp_path), key, "obstruction", {"n": 2}, {"top_degree": 8})
    assert load_result(str(tmp_path), key) == {"top_degree": 8}
    assert load_result(str(tmp_path), "ausente") is None
    assert not list(tmp_path.glob("*.tmp"))


def test_unreadable_cache_entry(tmp_path, capsys):
    (tmp_path / "roto.json").write_text("{no es json", encoding="utf-8")
    assert load_result(str(tmp_path), "roto") is None
    assert "[ADVERTENCIA]" in capsys.readouterr().err


def test_default_level(monkeypatch):
    assert get_default_level() == "quick"
    monkeypatch.setenv("FOVEC_LEVEL", "full")
    assert get_default_level() == "full"
    monkeypatch.setenv("FOVEC_LEVEL", "todo")
    with pytest.raises(ValueError):
        get_default_level()


def test_invalid_level_env_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("FOVEC_LEVEL", "todo")
    assert run(["verify-all"]) == 2


@pytest.mark.slow
def test_verify_all_quick(capsys):
    code, document, err = run_json(capsys, "verify-all", "--level", "quick")
    assert code == 0
    assert document["result"]["failed"] == 0
    assert "VERIFICACIÓN COMPLETADA" in err


def test_quick_battery_covers_every_criterion():
    quick = [name for name, _ in commands._acceptance_checks("quick")]
    full = [name for name, _ in commands._acceptance_checks("full")]
    for required in (
        "H(W_1; S^4) = {2: 1, 3: 1}",
        "H(W_1, gl_1; S^4) = {2: 1}",
        "H(W_2, gl_2; S^1) = {4: 2}",
        "transgresión = directo para (2,)",
        "W(1^5) frente a la serie de Catalan",
        "H(gl_4, gl_2+gl_2) = grassmanniana",
        "anulación en b(1,2) con λ=(2,), L=adjoint",
        "anulación en b(1,2) con λ=(1,), L=tautological",
        "ξ_{λ,2} con m=1 generan H^4",
        "característica de Euler constante en las páginas",
    ):
        assert required in quick
    assert len(quick) == len(set(quick))
    assert len(full) > len(quick)


def test_battery_records_algebra_errors(monkeypatch, capsys):
    def broken():
        raise AlgebraError("D_SQUARED_NONZERO", "d∘d != 0 en el grado 1")

    monkeypatch.setattr(commands, "_acceptance_checks", lambda level: [("roto", broken), ("bien", lambda: True)])
    result = verify_all({"level": "quick"})
    assert result["failed"] == 1
    assert result["passed"] == 1
    assert result["checks"]["roto"].startswith("D_SQUARED_NONZERO")
    assert "COMPROBACIONES FALLARON" in capsys.readouterr().err

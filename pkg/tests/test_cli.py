import json

import numpy as np
import pytest

from centrotensor import (
    CauchySpec,
    DenseTensor,
    check_structure,
    materialize,
    random_structured,
)
from centrotensor.cli import main
from centrotensor.serialize import dumps, spec_to_obj, tensor_to_obj


def write_tensor(path, tensor):
    path.write_text(dumps(tensor_to_obj(tensor)) + "\n")
    return str(path)


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def sym_file(tmp_path, sym_matrix):
    return write_tensor(tmp_path / "sym.json", sym_matrix)


class TestCheck:
    def test_cauchy_tensor_is_centro(self, tmp_path, capsys):
        tensor = materialize(CauchySpec(np.array([1.0, 2.0, 1.0]), 2))
        path = write_tensor(tmp_path / "c.json", tensor)
        code, out, _ = run(capsys, ["check", path])
        assert code == 0
        assert json.loads(out)["verdict"] == "centrosymmetric"

    @pytest.mark.parametrize("method", ["direct", "sandwich", "commutation"])
    def test_matches_library_call(self, method, sym_file, capsys, sym_matrix):
        code, out, _ = run(capsys, ["check", sym_file, "--method", method])
        assert code == 0
        assert json.loads(out) == check_structure(sym_matrix).as_dict()

    def test_reads_stdin(self, capsys, monkeypatch, sym_matrix):
        payload = dumps(tensor_to_obj(sym_matrix))
        code, out, _ = run(capsys, ["check", "-"], stdin=payload, monkeypatch=monkeypatch)
        assert code == 0
        assert json.loads(out)["verdict"] == "centrosymmetric"

    def test_malformed_json_exits_2_with_position(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"order": 2,')
        code, out, err = run(capsys, ["check", str(bad)])
        assert code == 2
        assert "line" in err and "column" in err

    def test_wrong_entry_count_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "short.json"
        bad.write_text('{"order": 2, "dim": 2, "entries": [1, 2, 3]}')
        code, _, err = run(capsys, ["check", str(bad)])
        assert code == 2
        assert "entries" in err or "expected" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run(capsys, ["check", "/does/not/exist.json"])
        assert code == 2


class TestGen:
    def test_deterministic_output(self, capsys):
        code1, out1, _ = run(capsys, ["gen", "--dim", "3", "--order", "3", "--kind", "skew", "--seed", "4"])
        code2, out2, _ = run(capsys, ["gen", "--dim", "3", "--order", "3", "--kind", "skew", "--seed", "4"])
        assert code1 == code2 == 0
        assert out1 == out2

    def test_generated_kind_checks_out(self, capsys):
        code, out, _ = run(capsys, ["gen", "--dim", "4", "--order", "2", "--kind", "centro", "--seed", "8"])
        assert code == 0
        obj = json.loads(out)
        tensor = DenseTensor.from_entries(obj["order"], obj["dim"], obj["entries"])
        assert check_structure(tensor).verdict == "centrosymmetric"

    def test_matches_library_generator(self, capsys):
        code, out, _ = run(capsys, ["gen", "--dim", "2", "--order", "2", "--kind", "general", "--seed", "11"])
        expected = random_structured(2, 2, "general", 11)
        assert json.loads(out)["entries"] == expected.entries.tolist()

    def test_identity_and_exchange_kinds(self, capsys):
        code, out, _ = run(capsys, ["gen", "--dim", "2", "--order", "3", "--kind", "identity"])
        assert json.loads(out)["entries"] == [1.0, 0, 0, 0, 0, 0, 0, 1.0]
        code, out, _ = run(capsys, ["gen", "--dim", "2", "--kind", "exchange"])
        assert json.loads(out)["entries"] == [0, 1.0, 1.0, 0]

    def test_ct_seed_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("CT_SEED", "31")
        _, out_env, _ = run(capsys, ["gen", "--dim", "3", "--order", "2"])
        monkeypatch.delenv("CT_SEED")
        _, out_explicit, _ = run(capsys, ["gen", "--dim", "3", "--order", "2", "--seed", "31"])
        _, out_default, _ = run(capsys, ["gen", "--dim", "3", "--order", "2"])
        assert out_env == out_explicit
        assert out_env != out_default


class TestProducts:
    def test_prod_identity_action(self, tmp_path, capsys, sym_matrix):
        ident = write_tensor(tmp_path / "i.json", DenseTensor.identity(2, 2))
        sym = write_tensor(tmp_path / "a.json", sym_matrix)
        code, out, _ = run(capsys, ["prod", ident, sym])
        assert code == 0
        assert json.loads(out)["entries"] == [2.0, 1.0, 1.0, 2.0]

    def test_prod_cap_exceeded_is_domain_error(self, tmp_path, capsys):
        a = write_tensor(tmp_path / "a.json", DenseTensor.zeros(3, 2))
        code, _, err = run(capsys, ["prod", a, a, "--cap", "8"])
        assert code == 1
        assert "cap" in err

    def test_hadamard(self, tmp_path, capsys, sym_matrix):
        path = write_tensor(tmp_path / "a.json", sym_matrix)
        code, out, _ = run(capsys, ["hadamard", path, path])
        assert json.loads(out)["entries"] == [4.0, 1.0, 1.0, 4.0]

    def test_shape_mismatch_exits_2(self, tmp_path, capsys, sym_matrix):
        a = write_tensor(tmp_path / "a.json", sym_matrix)
        b = write_tensor(tmp_path / "b.json", DenseTensor.zeros(2, 3))
        code, _, err = run(capsys, ["hadamard", a, b])
        assert code == 2


class TestDecompose:
    def test_split_matches_library(self, tmp_path, capsys):
        path = write_tensor(tmp_path / "t.json", DenseTensor(np.array([[1.0, 2.0], [3.0, 4.0]])))
        code, out, _ = run(capsys, ["decompose", path])
        assert code == 0
        obj = json.loads(out)
        assert obj["centro"]["entries"] == [2.5, 2.5, 2.5, 2.5]
        assert obj["skew"]["entries"] == [-1.5, -0.5, 0.5, 1.5]


class TestEig:
    def test_finds_matrix_pairs(self, sym_file, capsys):
        code, out, _ = run(capsys, ["eig", sym_file, "--starts", "50", "--seed", "2"])
        assert code == 0
        obj = json.loads(out)
        values = sorted(p["value"] for p in obj["pairs"])
        assert np.allclose(values, [1.0, 3.0], atol=1e-9)
        assert obj["stats"]["attempted"] == 50

    def test_byte_identical_reruns(self, sym_file, capsys):
        _, out1, _ = run(capsys, ["eig", sym_file, "--starts", "20", "--seed", "3"])
        _, out2, _ = run(capsys, ["eig", sym_file, "--starts", "20", "--seed", "3"])
        assert out1 == out2


class TestCauchyVerb:
    def test_materialize(self, tmp_path, capsys):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(dumps(spec_to_obj(CauchySpec(np.array([1.0, 2.0, 1.0]), 2))))
        code, out, _ = run(capsys, ["cauchy", str(spec_path)])
        assert code == 0
        entries = json.loads(out)["entries"]
        assert np.isclose(entries[0], 0.5)

    def test_check_mode(self, tmp_path, capsys):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text('{"order": 2, "generating": [1, 2, 3]}')
        code, out, _ = run(capsys, ["cauchy", str(spec_path), "--mode", "check"])
        assert code == 0
        obj = json.loads(out)
        assert obj == {"order": 2, "dim": 3, "centro": False, "skew": False}

    def test_invalid_spec_exits_1(self, tmp_path, capsys):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text('{"order": 2, "generating": [1, -1]}')
        code, _, err = run(capsys, ["cauchy", str(spec_path)])
        assert code == 1
        assert "sum" in err


class TestInverseVerb:
    def test_diagonal_left(self, tmp_path, capsys):
        data = np.zeros((2, 2, 2))
        data[0, 0, 0] = 2.0
        data[1, 1, 1] = 2.0
        path = write_tensor(tmp_path / "d.json", DenseTensor(data))
        code, out, _ = run(capsys, ["inverse", path, "--side", "left", "--order", "3"])
        assert code == 0
        obj = json.loads(out)
        assert obj["found"] is True
        assert obj["residual"] <= 1e-13

    def test_matrix_recovery_failure_exits_1(self, tmp_path, capsys):
        path = write_tensor(tmp_path / "a.json", random_structured(3, 3, "centro", seed=1))
        code, out, _ = run(capsys, ["inverse", path, "--side", "left", "--order", "2"])
        assert code == 1
        assert json.loads(out)["found"] is False

    def test_identity_recovery(self, tmp_path, capsys):
        path = write_tensor(tmp_path / "i.json", DenseTensor.identity(4, 2))
        code, out, _ = run(capsys, ["inverse", path, "--side", "right", "--order", "2"])
        assert code == 0
        assert json.loads(out)["inverse"]["entries"] == [1.0, 0, 0, 1.0]


class TestVerifyAll:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, ["verify-all", "--seed", "3", "--trials", "8"])
        assert code == 0
        assert json.loads(out)["all_passed"] is True

    def test_zero_trials(self, capsys):
        code, out, _ = run(capsys, ["verify-all", "--trials", "0"])
        assert code == 0
        assert json.loads(out)["checks"] == []

    def test_corruption_fails_and_names_check(self, capsys):
        code, out, _ = run(
            capsys,
            ["verify-all", "--seed", "3", "--trials", "8", "--corrupt", "row-sum-reflection"],
        )
        assert code == 1
        report = json.loads(out)
        failing = [c["name"] for c in report["checks"] if not c["passed"]]
        assert failing == ["row-sum-reflection"]


class TestOutputFile:
    def test_writes_to_path(self, tmp_path, capsys, sym_matrix):
        src = write_tensor(tmp_path / "a.json", sym_matrix)
        dst = tmp_path / "out.json"
        code, out, _ = run(capsys, ["check", src, "-o", str(dst)])
        assert code == 0
        assert out == ""
        assert json.loads(dst.read_text())["verdict"] == "centrosymmetric"


def test_usage_error_exits_2(capsys):
    assert main(["check"]) == 2
    capsys.readouterr()

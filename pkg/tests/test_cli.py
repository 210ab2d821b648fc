import json
import re
import subprocess
import sys

import pytest

from hsk.cli import main
from hsk.schemes import quaternion_scheme, save_scheme, z4_scheme


@pytest.fixture()
def z4_path(tmp_path):
    path = tmp_path / "z4.scheme"
    save_scheme(z4_scheme(), path)
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_identities_text_deterministic(capsys, identity_report):
    code1, out1, _ = _run(capsys, ["identities"])
    code2, out2, _ = _run(capsys, ["identities"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "39/39 checks passed" in out1


def test_identities_json_schema(capsys):
    code, out, _ = _run(capsys, ["identities", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == 0
    assert len(payload["checks"]) >= 38
    # determinism holds with the timing field zeroed out
    code2, out2, _ = _run(capsys, ["identities", "--json"])
    strip = lambda text: re.sub(r'"millis": [0-9.]+', '"millis": 0', text)
    assert strip(out) == strip(out2)


def test_families_exit_codes(capsys):
    code, out, _ = _run(capsys, ["families", "--a", "2", "--c", "1"])
    assert code == 0
    assert "8 candidates" in out
    code, out, _ = _run(capsys, ["families", "--a", "2", "--c", "1", "--json"])
    payload = json.loads(out)
    assert len(payload["candidates"]) == 8
    assert all(c["verified_exact"] for c in payload["candidates"])


def test_check_hadamard_pass_and_fail(capsys, z4_path):
    code, out, _ = _run(capsys, ["check-hadamard", "--scheme", z4_path,
                                 "--w1=i", "--w2=-i", "--w3=1"])
    assert code == 0
    code, _, _ = _run(capsys, ["check-hadamard", "--scheme", z4_path,
                               "--w1=1", "--w2=1", "--w3=1"])
    assert code == 1


def test_build_matrix_output(capsys, z4_path):
    code, out, _ = _run(capsys, ["build-matrix", "--scheme", z4_path,
                                 "--w1=i", "--w2=-i", "--w3=1"])
    assert code == 0
    assert out.splitlines()[0].split() == ["1", "i", "1", "-i"]


def test_scheme_verify(capsys, z4_path):
    code, out, _ = _run(capsys, ["scheme-verify", "--scheme", z4_path,
                                 "--a", "1", "--c", "1"])
    assert code == 0
    assert "multiplicities (1, 1, 1, 1)" in out
    code, out, _ = _run(capsys, ["scheme-verify", "--scheme", z4_path,
                                 "--k1", "2", "--k2", "1", "--r", "0",
                                 "--s", "-2", "--b2", "16"])
    assert code == 1


def test_scheme_gen_roundtrip(capsys, tmp_path):
    out_path = str(tmp_path / "bush.scheme")
    code, _, _ = _run(capsys, ["scheme-gen", "bush", "--order", "4",
                               "-o", out_path])
    assert code == 0
    code, out, _ = _run(capsys, ["scheme-verify", "--scheme", out_path,
                                 "--a", "2", "--c", "1"])
    assert code == 0
    assert "multiplicities (1, 6, 6, 3)" in out


def test_scheme_gen_q8_with_seed_file(capsys, tmp_path):
    out_path = str(tmp_path / "q8.scheme")
    code, _, _ = _run(capsys, ["scheme-gen", "q8", "-o", out_path])
    assert code == 0
    from hsk.schemes import load_scheme
    assert load_scheme(out_path) == quaternion_scheme()


def test_bush_seed_file(capsys, tmp_path):
    seed = tmp_path / "seed.txt"
    seed.write_text("2\n+ +\n+ -\n")
    out_path = str(tmp_path / "b4.scheme")
    code, _, _ = _run(capsys, ["scheme-gen", "bush", "--seed", str(seed),
                               "-o", out_path])
    assert code == 0
    code, _, _ = _run(capsys, ["scheme-verify", "--scheme", out_path,
                               "--a", "1", "--c", "1"])
    assert code == 0


def test_usage_errors(capsys, tmp_path):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["families", "--a", "2"]) == 2
    capsys.readouterr()
    code, _, err = _run(capsys, ["check-hadamard", "--scheme",
                                 str(tmp_path / "missing.scheme"),
                                 "--w1=i", "--w2=-i", "--w3=1"])
    assert code == 2
    bad = tmp_path / "bad.scheme"
    bad.write_text("4 3\n0 1 2 3\n")
    code, _, err = _run(capsys, ["scheme-verify", "--scheme", str(bad)])
    assert code == 2
    code, _, err = _run(capsys, ["check-hadamard", "--scheme", str(bad),
                                 "--w1=bogus(", "--w2=-i", "--w3=1"])
    assert code == 2


def test_nonexistence_command(capsys):
    code, out, _ = _run(capsys, ["nonexistence", "ii", "--k1", "2",
                                 "--k2", "1"])
    assert code == 0
    assert "no complex Hadamard matrix" in out
    code, out, _ = _run(capsys, ["nonexistence", "ii", "--k1", "2",
                                 "--k2", "1", "--json"])
    payload = json.loads(out)
    assert payload["nonexistent"] is True
    assert payload["m1"] == "1/2"


def test_search_json(capsys):
    code, out, _ = _run(capsys, ["search", "--a", "1", "--c", "3",
                                 "--grid", "24", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["solutions"]) == 8


def test_search_deterministic_output(capsys):
    code1, out1, _ = _run(capsys, ["search", "--a", "1", "--c", "3",
                                   "--grid", "24"])
    code2, out2, _ = _run(capsys, ["search", "--a", "1", "--c", "3",
                                   "--grid", "24"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hsk.cli", "nonexistence", "iii",
         "--k1", "4", "--k2", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "not an integer" in proc.stdout

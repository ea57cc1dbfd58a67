import json
import subprocess
import sys

import pytest

from tutteconv.cli import run
from tutteconv.poly import from_json, parse


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_charpoly(capsys):
    code, out, _ = call(capsys, "compute", "--matroid", "catalog:U_2_3", "--poly", "charpoly")
    assert code == 0 and out.strip() == "l^2 - 3*l + 2"


def test_verify_identity9(capsys):
    code, out, _ = call(capsys, "verify", "--identity", "9", "--matroid", "catalog:U_1_1")
    assert code == 0
    assert "equal=true" in out and 'lhs="l*xi - 1"' in out


def test_qspace_sp(capsys):
    code, out, _ = call(capsys, "qspace", "sp", "--d", "2", "--q", "2", "--p", "1/1")
    assert code == 0 and out.strip() == "8"


def test_qspace_d_symbolic(capsys):
    code, out, _ = call(capsys, "qspace", "D", "--d", "1", "--q", "2", "--s", "1", "--p", "p")
    assert code == 0 and parse(out.strip()) == parse("p^2 - 3*p + 2")


@pytest.mark.parametrize("kind", ["euler", "genfun", "closed-form"])
def test_qspace_other_kinds(capsys, kind):
    code, out, _ = call(capsys, "qspace", kind, "--d", "2", "--s", "3", "--d-max", "3")
    assert code == 0
    if kind != "closed-form":
        assert "equal=true" in out


def test_text_and_json_agree(capsys):
    for poly in ("subset-sc", "sc", "rank-gen", "tutte-paper", "tutte-standard", "charpoly"):
        _, text, _ = call(capsys, "compute", "--matroid", "catalog:K4", "--poly", poly)
        _, js, _ = call(capsys, "compute", "--matroid", "catalog:K4", "--poly", poly, "--format", "json")
        payload = json.loads(js)
        assert payload["text"] == text.strip()
        assert parse(text.strip()) == from_json(payload["terms"])


def test_inline_and_file_matroids(capsys, tmp_path):
    spec = '{"type": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}'
    code, out, _ = call(capsys, "compute", "--matroid", spec, "--poly", "charpoly")
    assert code == 0 and out.strip() == "l^2 - 3*l + 2"
    path = tmp_path / "tri.json"
    path.write_text(spec)
    code, out2, _ = call(capsys, "compute", "--matroid", str(path), "--poly", "charpoly")
    assert code == 0 and out2 == out


def test_random_subcommands(capsys):
    code, out, _ = call(
        capsys, "random", "expect", "--matroid", "catalog:GF2_1", "--stat", "char", "--p", "1/2", "--at", "l=2"
    )
    assert code == 0 and out.strip() == "3/4"
    code, out, _ = call(
        capsys, "random", "closed-form", "--matroid", "catalog:U_1_1", "--stat", "contract", "--p", "1/3"
    )
    assert code == 0 and out.strip() == "2/3*xi - 1/3"
    code, out, _ = call(
        capsys, "random", "mc", "--matroid", "catalog:GF2_1", "--stat", "char", "--p", "1/2",
        "--at", "l=2", "--trials", "200", "--seed", "5", "--format", "json",
    )
    assert code == 0 and json.loads(out)["trials"] == 200


def test_duets_report(capsys):
    code, out, _ = call(capsys, "duets", "--matroid", "catalog:C3", "--s", "2", "--t", "3")
    assert code == 0
    assert "R(M;t,s)" in out and "size_of_complement" in out


def test_verify_json_output(capsys):
    code, out, _ = call(capsys, "verify", "--identity", "eq4-cyclic", "--matroid", "catalog:K4", "--format", "json")
    assert code == 0 and json.loads(out)[0]["equal"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--matroid", "catalog:nope", "--poly", "sc"],
        ["compute", "--matroid", "{not json", "--poly", "sc"],
        ["compute", "--matroid", "/no/such/file.json", "--poly", "sc"],
        ["verify", "--identity", "1", "--matroid", "catalog:GF3_2"],
        ["verify", "--identity", "2"],
        ["qspace", "D", "--q", "4"],
        ["qspace", "sp", "--p", "one half"],
        ["random", "closed-form", "--matroid", "catalog:U_1_1", "--stat", "contract", "--p", "1"],
        ["random", "mc", "--matroid", "catalog:U_1_1", "--stat", "char", "--p", "1/2"],
        ["compute", "--matroid", "catalog:U_1_1"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_cap_diagnostic_names_the_limit(capsys):
    _, _, err = call(capsys, "verify", "--identity", "1", "--matroid", "catalog:GF3_2")
    assert "8" in err and err.count("\n") == 1


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "tutteconv", "compute", "--matroid", "catalog:U_1_1", "--poly", "sc"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout.strip() == "x + l"


def test_failed_verification_exits_1(capsys, monkeypatch):
    import tutteconv.cli as cli
    from tutteconv.identities import verify

    def broken(m, key):
        rep = verify(m, key)
        rep.equal = False
        return rep

    monkeypatch.setattr(cli, "verify", broken)
    code, out, _ = call(capsys, "verify", "--identity", "9", "--matroid", "catalog:U_1_1")
    assert code == 1 and "equal=false" in out

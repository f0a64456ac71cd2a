"""End-to-end command line behavior: exit codes, caching, file outputs."""

import hashlib
import json

import pytest

from chardual import __version__
from chardual.cli import main


@pytest.fixture()
def cache(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("CHARTAB_CACHE", str(d))
    return d


def test_chartab_klein_four(cache, capsys):
    assert main(["chartab", "abelian:2x2"]) == 0
    out = capsys.readouterr().out
    assert "order 4, 4 classes" in out
    body = out.splitlines()[2:]
    assert len(body) == 4
    assert set("".join(body).split()) == {"1", "-1"}


def test_chartab_cache_is_byte_stable(cache, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["chartab", "q8", "--json", str(a)]) == 0
    assert len(list(cache.glob("table-*.json"))) == 1
    assert main(["chartab", "q8", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    obj = json.loads(a.read_text())
    assert obj["order"] == 8 and len(obj["entries"]) == 5


def test_chartab_cache_corruption_is_reported(cache, tmp_path, capsys):
    assert main(["chartab", "q8", "--json", str(tmp_path / "a.json")]) == 0
    key = hashlib.sha256(f"{__version__}:q8".encode()).hexdigest()
    path = cache / f"table-{key[:32]}.json"
    obj = json.loads(path.read_text())
    obj["table"]["order"] = 999
    path.write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    assert main(["chartab", "q8"]) == 1
    assert "checksum" in capsys.readouterr().err


def test_build_then_chartab_from_file(cache, tmp_path):
    desc = tmp_path / "g.json"
    assert main(["build", "sym:3", "--json", str(desc)]) == 0
    assert json.loads(desc.read_text())["kind"] == "perm"
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["chartab", str(desc), "--json", str(a)]) == 0
    assert main(["chartab", "sym:3", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_transpose_check_exit_codes(cache, capsys):
    assert main(["transpose-check", "sym:3"]) == 3
    assert "NonSquareClassSize" in capsys.readouterr().out
    assert main(["transpose-check", "abelian:2x4"]) == 0
    out = capsys.readouterr().out
    assert "RealizedBy(self)" in out and "witness row permutation" in out
    # self is always a candidate, so an empty pool still realizes
    assert main(["transpose-check", "abelian:2x4", "--candidates", "none"]) == 0
    capsys.readouterr()


def test_transpose_check_json_report(cache, tmp_path):
    out = tmp_path / "r.json"
    assert main(["transpose-check", "abelian:6", "--json", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["verdict"] == {"kind": "RealizedBy", "detail": ["self"]}
    assert obj["witness"] is not None
    assert obj["transpose_table"]["order"] == 6


def test_lattice_dot_annotates_dual_orders(cache, tmp_path, capsys):
    dot = tmp_path / "l.dot"
    assert main(["lattice", "abelian:2x4", "--dot", str(dot)]) == 0
    assert "8 normal subgroups" in capsys.readouterr().out
    text = dot.read_text()
    assert text.startswith("digraph lattice {")
    assert 'label="order 2\\ndual 4"' in text
    assert text.count(" -> ") == 11  # Z2xZ4 Hasse diagram edge count


def test_lattice_without_duality_still_prints(cache, capsys):
    assert main(["lattice", "sym:3"]) == 0
    out = capsys.readouterr().out
    assert "3 normal subgroups" in out and "dual" not in out


def test_central_series_json(cache, tmp_path):
    out = tmp_path / "s.json"
    assert main(["central-series", "q8", "--json", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["upper_orders"] == [1, 2, 8]
    assert obj["lower_orders"] == [8, 2, 1]
    assert obj["upper_layer_invariants"] == [[2], [2, 2]]
    # Q8 has a size-2 class, so there is no transpose to correspond with
    assert obj["correspondence"] is None
    out2 = tmp_path / "s2.json"
    assert main(["central-series", "abelian:2x4", "--json", str(out2)]) == 0
    obj = json.loads(out2.read_text())
    assert obj["upper_orders"] == [1, 8]
    assert obj["upper_layer_invariants"] == [[2, 4]]
    assert obj["correspondence"]["ok"] is True


def test_blocks_command(cache, capsys, tmp_path):
    assert main(["blocks", "sym:3", "-p", "2"]) == 0
    out = capsys.readouterr().out
    assert "block 0 (principal): defect 1, characters [0, 1]" in out
    assert "skipped" in out  # no transpose table for S3
    rep = tmp_path / "b.json"
    assert main(["blocks", "hanaki:p=3", "-p", "3", "--json", str(rep)]) == 0
    obj = json.loads(rep.read_text())
    assert obj["partition"]["defects"] == [5]
    assert obj["full_defect"]["ok"] is True
    assert obj["congruence"]["ok"] is True


def test_verify_control_fails_fast(cache, capsys):
    assert main(["verify", "sym:3"]) == 3
    out = capsys.readouterr().out
    assert "transposability: FAILED (NonSquareClassSize(1))" in out
    assert "lattice duality" not in out


def test_verify_hanaki_all_green(cache, tmp_path, capsys):
    rep = tmp_path / "v.json"
    assert main(["verify", "hanaki:p=3", "--json", str(rep)]) == 0
    out = capsys.readouterr().out
    assert "all checks pass" in out
    obj = json.loads(rep.read_text())
    assert obj["exit"] == 0
    assert obj["transposability"] == {"kind": "RealizedBy", "detail": ["self"]}
    assert obj["lattice"]["ok"] and obj["central_series"]["ok"]
    assert obj["blocks"]["3"]["full_defect"]["ok"] is True


def test_verify_abelian(cache, capsys):
    assert main(["verify", "abelian:2x2"]) == 0
    assert "all checks pass" in capsys.readouterr().out


def test_usage_errors_exit_one(cache, capsys):
    assert main(["frobnicate"]) == 1
    assert main(["blocks", "sym:3"]) == 1  # missing -p
    assert main(["chartab", "nope:3"]) == 1
    capsys.readouterr()


def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out

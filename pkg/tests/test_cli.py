import csv
import io
import json
import subprocess
import sys

import pytest

from antisym.cli import (
    RunConfig,
    SpecError,
    main,
    parse_group_spec,
    parse_ring_spec,
    run_verify,
    select_involutions,
)
from antisym.group import dihedral, is_abelian
from antisym.theorem import classify


def test_parse_group_examples(tmp_path):
    G = parse_group_spec("D4")
    assert G.order == 8 and not is_abelian(G)
    assert parse_group_spec("C2xD4").order == 16
    assert parse_group_spec("dic3").order == 12
    assert parse_group_spec("H27").order == 27
    for bad in ("S9", "D0", "Q8", "D4 ", "", "C2x"):
        with pytest.raises(SpecError):
            parse_group_spec(bad)
    p = tmp_path / "d3.json"
    p.write_text(json.dumps(dihedral(3).to_json()))
    assert parse_group_spec(f"file:{p}").order == 6
    with pytest.raises(SpecError):
        parse_group_spec(f"file:{tmp_path / 'missing.json'}")


def test_parse_ring_examples():
    R = parse_ring_spec("Z4xZ2")
    assert R.moduli == (4, 2) and R.characteristic == 4
    assert parse_ring_spec("z12").characteristic == 12
    for bad in ("Z1", "Z", "Z4 x Z2", "Z4*Z2", "4"):
        with pytest.raises(SpecError):
            parse_ring_spec(bad)


def test_selectors():
    G = dihedral(4)
    assert len(select_involutions(G, "all")) == 6
    [(k, phi)] = select_involutions(G, "classical")
    assert k == 4 and phi.perm == tuple(int(x) for x in G.inverse)
    [(k, phi)] = select_involutions(G, "conj:4")
    assert k == 0
    [(k, _)] = select_involutions(G, "idx:5")
    assert k == 5
    for bad in ("idx:6", "idx:x", "conj:99", "conj:1x", "what"):
        with pytest.raises(SpecError):
            select_involutions(G, bad)


def test_run_config_invariants():
    with pytest.raises(SpecError):
        RunConfig([], ["Z3"])
    with pytest.raises(SpecError):
        RunConfig(["D4"], ["Z3"], jobs=0)


def test_classify_command(capsys):
    assert main(["classify", "--group", "D4", "--ring", "Z4", "--involution", "classical"]) == 0
    out = capsys.readouterr().out
    rec = json.loads(out.strip().splitlines()[-1])
    assert rec["commutes"] and rec["cond1"] and rec["cond3"] and rec["theorem_ok"]
    assert main(["classify", "--group", "Dic2", "--ring", "Z12", "--involution", "classical"]) == 0
    rec = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert not rec["commutes"] and not any(rec[f"cond{i}"] for i in range(1, 5))
    assert main(["classify", "--group", "D4", "--ring", "Z4", "--involution", "idx:999"]) == 2
    assert main(["classify", "--group", "C4", "--ring", "Z3"]) == 2


def test_involutions_command(capsys):
    assert main(["involutions", "--group", "C3"]) == 0
    assert capsys.readouterr().out.startswith("C3: 2 involutions")
    assert main(["involutions", "--group", "C2xC2"]) == 0
    assert capsys.readouterr().out.startswith("C2xC2: 4 involutions")
    assert main(["involutions", "--group", "Dic3"]) == 0
    lines = capsys.readouterr().out.splitlines()[1:]
    assert lines and all("K-index=1" in x or "K-index=2" in x for x in lines)
    assert main(["involutions", "--group", "S9"]) == 2


def _verify(tmp_path, *extra, name="out.jsonl"):
    out = tmp_path / name
    code = main(["verify", "--out", str(out), *extra])
    return code, out


def test_verify_records(tmp_path):
    code, out = _verify(tmp_path, "--groups", "D4,Dic2", "--rings", "Z3", "Z4xZ2", "--jobs", "1")
    assert code == 0
    recs = [json.loads(x) for x in out.read_text().splitlines()]
    assert len(recs) == (6 + 10) * 2
    assert [(r["group"], r["ring"]) for r in recs[:7]] == [("D4", "Z3")] * 6 + [("D4", "Z4xZ2")]
    D4 = parse_group_spec("D4")
    for r in recs[:12]:
        [(k, phi)] = select_involutions(D4, f"idx:{r['involution']}")
        v = classify(parse_ring_spec(r["ring"]), D4, phi)
        assert (r["commutes"], r["cond1"], r["cond2"], r["cond3"], r["cond4"]) == (
            v.commutes, *(getattr(v.report, f"cond{i}") for i in range(1, 5)))
        assert any(n.startswith("module-oracle: agrees") or n.startswith("module-oracle: skipped")
                   for n in r["notes"])


def test_verify_deterministic_across_jobs(tmp_path):
    args = ("--groups", "D3,Dic2,D4", "--rings", "Z3,Z4")
    _, a = _verify(tmp_path, *args, "--jobs", "1", name="a.jsonl")
    _, b = _verify(tmp_path, *args, "--jobs", "3", name="b.jsonl")
    _, c = _verify(tmp_path, *args, "--jobs", "3", name="c.jsonl")
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_verify_skips(tmp_path):
    code, out = _verify(tmp_path, "--groups", "C4,C2xC2", "--rings", "Z3")
    assert code == 0
    recs = [json.loads(x) for x in out.read_text().splitlines()]
    assert len(recs) == 2 + 4
    assert all(r["notes"] == ["skipped: abelian group"] and r["theorem_ok"] is None for r in recs)
    code, out = _verify(tmp_path, "--groups", "D3", "--rings", "Z2,Z3", name="b.jsonl")
    recs = [json.loads(x) for x in out.read_text().splitlines()]
    assert code == 0
    assert [r["notes"] for r in recs[:4]] == [["skipped: characteristic 2"]] * 4
    assert all(r["theorem_ok"] for r in recs[4:])


def test_verify_csv(tmp_path):
    code, out = _verify(tmp_path, "--groups", "D4", "--rings", "Z4", "--csv", "--cap", "0", name="o.csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert list(rows[0]) == ["group", "ring", "involution", "commutes", "cond1", "cond2",
                             "cond3", "cond4", "theorem_ok", "notes"]
    assert len(rows) == 6 and rows[4]["commutes"] == "True"


def test_verify_unwritable(tmp_path, capsys):
    code = main(["verify", "--groups", "D3", "--rings", "Z3", "--out", str(tmp_path / "no" / "dir.jsonl")])
    assert code != 0
    assert "cannot write" in capsys.readouterr().err


def test_verify_bad_spec():
    assert main(["verify", "--groups", "X7", "--rings", "Z3"]) == 2
    assert main(["verify", "--groups", "D3", "--rings", "Z3", "--jobs", "0"]) == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "antisym", "involutions", "--group", "D4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("D4: 6 involutions")


def test_run_verify_to_stream():
    buf = io.StringIO()
    assert run_verify(RunConfig(["D3"], ["Z3"], cap=0), stdout=buf) == 0
    assert len(buf.getvalue().splitlines()) == 4

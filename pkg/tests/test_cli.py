import json
import warnings

import pytest

from branchbox import lr
from branchbox.cli import main


def run(capsys, *argv, ignore_warnings=False):
    if ignore_warnings:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rc = main(list(argv))
    else:
        rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_lr_value(capsys):
    rc, out, _ = run(capsys, "lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1")
    assert rc == 0
    assert out == '{"value":2}\n'


def test_branch_gl_o_value(capsys):
    rc, out, _ = run(capsys, "branch", "gl-o", "--lam", "2", "--mu", "", "--n", "5")
    assert rc == 0
    assert out == '{"value":1,"stable":true}\n'


def test_branch_outside_stable_range_exits_2(capsys):
    rc, out, err = run(capsys, "branch", "gl-o", "--lam", "2", "--mu", "", "--n", "2")
    assert rc == 2
    assert out == ""
    assert err == "error: outside the stable range: requires n > 2*len(lam) = 2\n"


def test_branch_warn_policy_computes(capsys):
    rc, out, _ = run(capsys, "branch", "gl-o", "--lam", "2", "--mu", "", "--n", "2",
                     "--stable-policy", "warn", ignore_warnings=True)
    assert rc == 0
    assert out == '{"value":1,"stable":false}\n'


def test_bad_partition_exits_2(capsys):
    rc, _, err = run(capsys, "lr", "--lam", "1,2", "--mu", "1", "--nu", "1")
    assert rc == 2
    assert err.startswith("error: ")


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_tensor_o_table_json(capsys):
    rc, out, _ = run(capsys, "tensor", "o", "--mu", "1", "--nu", "1", "--n", "5")
    assert rc == 0
    doc = json.loads(out)
    assert doc == [
        {"labels": [{"family": "O", "rank": 5, "weight": []}], "mult": 1, "stable": True},
        {"labels": [{"family": "O", "rank": 5, "weight": [2]}], "mult": 1, "stable": True},
        {"labels": [{"family": "O", "rank": 5, "weight": [1, 1]}], "mult": 1, "stable": True},
    ]
    assert out == json.dumps(doc, separators=(",", ":")).replace(" ", "") + "\n"


def test_tensor_o_single_value(capsys):
    rc, out, _ = run(capsys, "tensor", "o", "--mu", "1", "--nu", "1",
                     "--lam", "1,1", "--n", "5")
    assert rc == 0
    assert out == '{"value":1,"stable":true}\n'


def test_tensor_o_table_csv(capsys):
    rc, out, _ = run(capsys, "tensor", "o", "--mu", "1", "--nu", "1", "--n", "5",
                     "--output-format", "csv")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "O5,mult,stable"
    assert lines[1] == ",1,true"
    assert lines[2] == "2,1,true"
    assert lines[3] == '"1,1",1,true'


def test_tensor_gl_rational_trivial(capsys):
    rc, out, _ = run(capsys, "tensor", "gl-rational", "--mu", "1;", "--nu", ";1",
                     "--lam", ";", "--n", "3")
    assert rc == 0
    assert out == '{"value":1}\n'


def test_restrict_value_and_table(capsys):
    rc, out, _ = run(capsys, "restrict", "o", "--lam", "2", "--n", "5", "--m", "5",
                     "--mu", "1", "--nu", "1")
    assert rc == 0
    assert out == '{"value":1,"stable":true}\n'
    rc, out, _ = run(capsys, "restrict", "o", "--lam", "2", "--n", "5", "--m", "5")
    assert rc == 0
    table = [(tuple(tuple(l["weight"]) for l in e["labels"]), e["mult"])
             for e in json.loads(out)]
    assert table == [(((), ()), 1), (((), (2,)), 1),
                     (((1,), (1,)), 1), (((2,), ()), 1)]


def test_restrict_value_requires_both_labels(capsys):
    rc, _, err = run(capsys, "restrict", "o", "--lam", "2", "--n", "5", "--m", "5",
                     "--nu", "1")
    assert rc == 2
    assert "mu" in err and "nu" in err


def test_jobs_do_not_change_output(capsys):
    argv = ("tensor", "o", "--mu", "2,1", "--nu", "1,1", "--n", "9")
    rc1, out1, _ = run(capsys, *argv)
    rc4, out4, _ = run(capsys, *argv, "--jobs", "4")
    assert rc1 == rc4 == 0
    assert out1 == out4


def test_verify_seesaw_a_passes(capsys):
    rc, out, err = run(capsys, "verify", "seesaw-a", "--n", "5", "--m", "2",
                       "--max-degree", "3")
    assert rc == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["verify"] == "seesaw-a"
    assert all(e["pass"] for e in doc["entries"])
    assert "all PASS" in err


def test_verify_tensor_o_fails_outside_stable_range(capsys):
    rc, out, err = run(capsys, "verify", "tensor-o", "--n", "3", "--m", "1",
                       "--l", "1", "--max-degree", "4", "--stable-policy", "warn",
                       ignore_warnings=True)
    assert rc == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    fails = [e for e in doc["entries"] if not e["pass"]]
    assert len(fails) == 14
    assert "14 FAIL" in err
    # associate label folding: the oracle moves (1,1) to (1) at rank 3
    table = {tuple(tuple(l["weight"]) for l in e["labels"]):
             (e["formula"], e["oracle"]) for e in doc["entries"]}
    assert table[((1, 1), (1,), (1,))] == (1, 0)
    assert table[((1,), (1,), (1,))] == (0, 1)


def test_verify_brackets_case_a(capsys):
    rc, out, err = run(capsys, "verify", "brackets", "--case", "a",
                       "--n", "4", "--m", "2")
    assert rc == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert "all PASS" in err


def test_hilbert_ok(capsys):
    rc, out, _ = run(capsys, "hilbert", "--n", "5", "--m", "1", "--max-degree", "4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["harmonic"] == ["1", "5", "14", "30", "55"]


def test_hilbert_outside_range_exits_2(capsys):
    rc, _, err = run(capsys, "hilbert", "--n", "4", "--m", "2")
    assert rc == 2
    assert err == "error: outside the stable range: requires n > 2*m = 4\n"


def test_cache_roundtrip(tmp_path, capsys):
    lr.clear_cache()  # cold memo so the first run has entries to persist
    cache = tmp_path / "lr.jsonl"
    argv = ("lr", "--lam", "4,2", "--mu", "2,1", "--nu", "2,1",
            "--cache", str(cache))
    rc, out1, _ = run(capsys, *argv)
    assert rc == 0
    first = cache.read_text()
    assert first
    for line in first.splitlines():
        doc = json.loads(line)
        assert set(doc) == {"key", "value"}
        assert len(doc["key"]) == 3
    rc, out2, _ = run(capsys, *argv)
    assert rc == 0
    assert out1 == out2
    assert cache.read_text() == first  # warm run appends nothing


def test_cache_corrupt_line_skipped(tmp_path, capsys):
    cache = tmp_path / "lr.jsonl"
    cache.write_text('not json\n{"key":[[1],[1],[]],"value":1}\n')
    rc, out, err = run(capsys, "lr", "--lam", "2", "--mu", "1", "--nu", "1",
                       "--cache", str(cache))
    assert rc == 0
    assert out == '{"value":1}\n'
    assert "corrupt cache line 1" in err


def test_cache_poisoned_entry_is_trusted(tmp_path, capsys):
    # the cache is an input: a planted wrong value is reproduced verbatim
    cache = tmp_path / "lr.jsonl"
    cache.write_text('{"key":[[2],[1],[1]],"value":99}\n')
    try:
        rc, out, _ = run(capsys, "lr", "--lam", "2", "--mu", "1", "--nu", "1",
                         "--cache", str(cache))
        assert rc == 0
        assert out == '{"value":99}\n'
    finally:
        lr.clear_cache()  # do not leak the planted value into the process memo
    assert lr.lr_coefficient((2,), (1,), (1,)) == 1


def test_cache_env_and_flag_precedence(tmp_path, capsys, monkeypatch):
    env_cache = tmp_path / "env.jsonl"
    flag_cache = tmp_path / "flag.jsonl"
    monkeypatch.setenv("BRANCHBOX_CACHE", str(env_cache))
    rc, _, _ = run(capsys, "lr", "--lam", "2,1", "--mu", "1,1", "--nu", "1")
    assert rc == 0
    assert env_cache.exists()
    rc, _, _ = run(capsys, "lr", "--lam", "2,1", "--mu", "2", "--nu", "1",
                   "--cache", str(flag_cache))
    assert rc == 0
    assert flag_cache.exists()


def test_cache_does_not_change_output(tmp_path, capsys):
    argv = ("tensor", "o", "--mu", "2", "--nu", "1,1", "--n", "7")
    rc, plain, _ = run(capsys, *argv)
    cache = tmp_path / "lr.jsonl"
    rc2, cached, _ = run(capsys, *argv, "--cache", str(cache))
    rc3, warm, _ = run(capsys, *argv, "--cache", str(cache))
    assert rc == rc2 == rc3 == 0
    assert plain == cached == warm

import json

import pytest

from tourpaths.cli import main
from tourpaths.core import degree_summary
from tourpaths.trn import parse
from tourpaths.verifier import read_report


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_gen_rotational(capsys):
    code, out = run(capsys, "gen", "rotational", "--n", "3")
    assert code == 0
    t = parse(out.out).tournament
    assert t.order == 7 and degree_summary(t).is_regular


def test_gen_random_regular_out(tmp_path, capsys):
    f = tmp_path / "t.trn"
    assert run(capsys, "gen", "random-regular", "--n", "5", "--seed", "3", "--mix", "50", "--out", str(f))[0] == 0
    assert degree_summary(parse(f.read_text()).tournament).is_regular


def test_moon_embed(tmp_path, capsys):
    f = tmp_path / "h.trn"
    f.write_text("tournament 4\n-111\n0-11\n00-1\n000-\n")
    code, out = run(capsys, "gen", "moon-embed", "--in", str(f))
    lt = parse(out.out)
    assert lt.order == 7 and lt["added"] == (4, 5, 6)


@pytest.mark.parametrize("argv, order", [
    (["build", "G", "--k", "2"], 15),
    (["build", "G", "--k", "1", "--block-seed", "4"], 9),
    (["build", "remark3"], 11),
    (["build", "remark4"], 9),
    (["build", "lemma32", "--variant", "15"], 15),
])
def test_build(capsys, argv, order):
    code, out = run(capsys, *argv)
    assert code == 0 and parse(out.out).order == order


def test_spectrum_by_role(tmp_path, capsys):
    f = tmp_path / "g.trn"
    run(capsys, "build", "remark4", "--out", str(f))
    code, out = run(capsys, "spectrum", "--in", str(f), "--from", "x", "--to", "y", "--json")
    data = json.loads(out.out)
    assert data["lengths"] == [1, 2, 3, 4, 5, 6, 7, 8]
    assert len(data["witnesses"]["8"]) == 9


def test_check_exit_codes(tmp_path, capsys):
    f = tmp_path / "r.trn"
    f.write_text("tournament 4\n-111\n0-11\n00-1\n000-\n")
    code, out = run(capsys, "check", "pancyclic", "--d", "3", "--in", str(f))
    assert code == 1 and "no" in out.out
    run(capsys, "gen", "rotational", "--n", "4", "--out", str(f))
    code, out = run(capsys, "check", "panconnected", "--d", "3", "--in", str(f), "--json")
    assert code == 0 and json.loads(out.out)["holds"]


def test_verify_fixture_examples(capsys):
    code, out = run(capsys, "verify", "paper-examples")
    assert code == 0 and "remark3" in out.out


def test_verify_json_stream(tmp_path, capsys):
    f = tmp_path / "r.jsonl"
    code, _ = run(capsys, "verify", "thm16", "--count", "2", "--seed", "1", "--json", "--out", str(f), "--threads", "2")
    assert code == 0
    recs = read_report(f.read_text().splitlines())
    assert {r.claim_id for r in recs} >= {"thm1.6.4", "thm1.6.3"}


def test_verify_boundary_exits_zero(capsys):
    code, out = run(capsys, "verify", "thm15", "--count", "1", "--rule", "boundary")
    assert code == 0 and "sharpness" in out.out


def test_verify_lemmas(capsys):
    code, out = run(capsys, "verify", "lemmas33-34", "--count", "2")
    assert code == 0 and "lem3.4" in out.out


def test_bad_variant_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["build", "lemma32", "--variant", "13"])

import json
from importlib import resources

import pytest

from transmarkov.braid import BraidWord, format_braid, parse_braid
from transmarkov.cli import run
from transmarkov.contact import FrontDiagram, format_front
from transmarkov.geometry import circle, format_curve


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def cert_path():
    return str(resources.files("transmarkov").joinpath("data/unknot_example.cert"))


def test_invariants(files, capsys):
    path = files("a.braid", format_braid(BraidWord(4, (-1, 2, -3))))
    assert run(["invariants", path]) == 0
    out = capsys.readouterr().out
    assert "n=4 deg=-1 sl=-5 components=1" in out
    assert "alexander=1" in out


def test_normalize_round_trip(files, capsys, tmp_path):
    path = files("a.braid", "n=3\n1 2 -1 1\n")
    out_path = str(tmp_path / "nf.braid")
    assert run(["normalize", path, "--out", out_path]) == 0
    b = parse_braid(open(out_path).read())
    assert run(["equal", path, out_path]) == 0
    assert b.strands == 3


def test_exit_code_matrix(files):
    good = files("good.braid", "n=3\n1 2 1\n")
    other = files("other.braid", "n=3\n2 1\n")
    malformed = files("bad.braid", "n=3\n1 7\n")
    assert run(["equal", good, "n=3:2 1 2"]) == 0
    assert run(["equal", good, other]) == 1
    assert run(["equal", good, malformed]) == 2
    assert run(["invariants", "/no/such/file"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["lpq", "-1", "0"]) == 2
    assert run(["conjkey", good]) == 0


def test_cert_verify(files, capsys):
    assert run(["cert-verify", cert_path()]) == 0
    text = open(cert_path()).read().replace("destab+ : 2 -1 -2 -2", "destab+ : 2 -1 -2")
    assert run(["cert-verify", files("broken.cert", text)]) == 1
    assert run(["cert-verify", files("junk.cert", "mode transversal\n")]) == 2


def test_moves_apply(capsys):
    assert run(["moves-apply", "n=2:-1", "stab+"]) == 0
    assert capsys.readouterr().out == "n=3\n-1 2\n"
    assert run(["moves-apply", "n=2:1", "stab- k=2", "--mode", "transversal"]) == 2
    assert run(["moves-apply", "n=3:1 2", "destab+ : 2"]) == 2


def test_search_found_and_certificate_round_trip(tmp_path, capsys):
    out_path = str(tmp_path / "found.cert")
    assert run(["search", "n=4:-1 2 -3", "n=3:-1 -2", "--out", out_path]) == 0
    assert "status FOUND" in capsys.readouterr().out
    assert run(["cert-verify", out_path]) == 0


def test_search_pruned_and_budget_flags(files, capsys):
    assert run(["search", "n=2:1", "n=2:-1"]) == 1
    assert "PRUNED_INVARIANT" in capsys.readouterr().out
    cfg = files("budget.json", json.dumps({"max_nodes": 1}))
    assert run(["search", "n=4:-1 2 -3", "n=3:-1 -2", "--config", cfg]) == 1
    out = capsys.readouterr().out
    assert "NOT_FOUND_WITHIN_BUDGET" in out and "nodes tried" in out
    bad_cfg = files("bad.json", json.dumps({"max_steps": 1}))
    assert run(["search", "n=2:1", "n=2:1", "--config", bad_cfg]) == 2
    assert run(["search", "n=2:1", "n=2:1", "--budget-max-moves", "0"]) == 2


def test_search_birman_menasco_small_budget(capsys):
    k1 = "n=3:" + " ".join(["1"] * 5 + ["2"] * 4 + ["1"] * 6 + ["-2"])
    k2 = "n=3:" + " ".join(["1"] * 5 + ["-2"] + ["1"] * 6 + ["2"] * 4)
    assert run(["search", k1, k2, "--budget-max-nodes", "3"]) == 1
    assert "NOT_FOUND_WITHIN_BUDGET" in capsys.readouterr().out


def test_reduce_unknot(capsys):
    assert run(["reduce-unknot", "n=4:-1 2 -3"]) == 0
    assert "end n=3 : -1 -2" in capsys.readouterr().out
    assert run(["reduce-unknot", "n=2:1 1 1"]) == 2


def test_contact_commands(files, capsys):
    assert run(["lpq", "2", "1"]) == 0
    assert "mu=1 tb=-4" in capsys.readouterr().out
    assert run(["closure-indices", "0", "0", "n=2:1"]) == 0
    assert "mu=0 tb=-3" in capsys.readouterr().out
    assert run(["closure-indices", "0", "0", "n=2:-1"]) == 2
    front = files("f.front", format_front(FrontDiagram(0, 0, 1, 1)))
    assert run(["front", front]) == 0
    assert "tb=-1 mu=0" in capsys.readouterr().out
    assert run(["front", files("g.front", "front crossings+=1\n")]) == 2


def test_geometry_commands(files, capsys, tmp_path):
    good = files("c.curve", format_curve(circle(64)))
    assert run(["geom-check", good]) == 0
    assert "braid=yes degree=1" in capsys.readouterr().out
    bad = files("r.curve", format_curve(circle(64, reverse=True)))
    assert run(["geom-check", bad]) == 1
    assert run(["geom-check", files("x.curve", "component\n1 2\n")]) == 2
    model = str(tmp_path / "m.curve")
    assert run(["geom-model", "--tau", "0.5", "--out", model]) == 0
    assert "self_crossings=1" in open(model).read()

import json

import pytest

from leibnizx.cli import main

from conftest import corpus_path


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_check_pass(capsys):
    rc, out, _ = run(capsys, "check", corpus_path("l2.json"))
    assert rc == 0
    assert "status: pass" in out


def test_check_fail_with_witness(capsys):
    rc, out, _ = run(capsys, "check", corpus_path("bad-leibniz.json"))
    assert rc == 1
    assert "witness" in out


def test_check_kind_mismatch(capsys):
    rc, _, err = run(capsys, "check", corpus_path("l2.json"),
                     "--kind", "xmod")
    assert rc == 2
    assert "not xmod" in err


def test_check_every_corpus_kind(capsys):
    for name, want in (("assoc2.json", 0), ("xmod-id-l2.json", 0),
                       ("rep-adj-r2.json", 0), ("xrep-id-a1.json", 0),
                       ("module-a1-r.json", 0), ("bad-rep-a1.json", 1),
                       ("bad-xrep-a1.json", 1)):
        rc, _, _ = run(capsys, "check", corpus_path(name))
        assert rc == want, name


def test_malformed_input_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "leibniz_algebra", "name": "x", "basis": ["e"], '
                 '"bracket": [{"left": "e", "right": "e", '
                 '"value": {"e": "1/0"}}]}')
    rc, _, err = run(capsys, "check", str(p))
    assert rc == 2
    assert "1/0" in err


def test_report_degree_validation(capsys):
    rc, _, err = run(capsys, "xul", corpus_path("xmod-id-a1.json"),
                     "--degree", "3", "--report-degree", "2")
    assert rc == 2
    assert "report degree" in err


def test_ul_json_output(capsys):
    rc, out, _ = run(capsys, "ul", corpus_path("a1.json"),
                     "--degree", "3", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["verdict"] == "pass"
    assert doc["records"][0]["dims_by_degree"] == [1, 3, 5, 7]


def test_ul_dump_basis(capsys):
    rc, out, _ = run(capsys, "ul", corpus_path("a1.json"),
                     "--degree", "2", "--dump-basis", "--format", "json")
    doc = json.loads(out)
    classes = doc["records"][-1]["classes"]
    assert classes[0] == "1"
    assert "a_l" in classes and "a_r" in classes


def test_xul_pass_and_fail(capsys, tmp_path):
    rc, out, _ = run(capsys, "xul", corpus_path("xmod-id-a1.json"),
                     "--degree", "3")
    assert rc == 0
    # a non-crossed-module input fails at the check_xmod stage
    bad = {"kind": "xmod",
           "q": {"name": "L2", "basis": ["a", "b"],
                 "bracket": [{"left": "a", "right": "a",
                              "value": {"b": "1"}}]},
           "p": {"name": "L2", "basis": ["a", "b"],
                 "bracket": [{"left": "a", "right": "a",
                              "value": {"b": "1"}}]},
           "eta": {"a": {"a": "1"}, "b": {"b": "1"}},
           "action": {"left": [], "right": []}}
    p = tmp_path / "bad-xmod.json"
    p.write_text(json.dumps(bad))
    rc, out, _ = run(capsys, "xul", str(p), "--degree", "3")
    assert rc == 1
    assert "check_xmod" in out


def test_lm_command(capsys):
    rc, out, _ = run(capsys, "lm", corpus_path("xmod-zero-a1.json"),
                     "--degree", "3")
    assert rc == 0
    assert "crossed_module_identities" in out


def test_verify_subcommands(capsys):
    cases = [
        (("verify", "lemma41", corpus_path("xmod-id-a1.json"),
          "--degree", "3"), 0),
        (("verify", "prop42", corpus_path("a1.json"), "--degree", "3"), 0),
        (("verify", "squares", corpus_path("l2.json"), "--degree", "3"), 0),
        (("verify", "theta", corpus_path("xmod-zero-a1.json"),
          "--degree", "3"), 0),
        (("verify", "thm5", corpus_path("xrep-id-a1.json"),
          "--degree", "3"), 0),
        (("verify", "thm5", corpus_path("bad-xrep-a1.json"),
          "--degree", "3"), 1),
    ]
    for argv, want in cases:
        rc, _, _ = run(capsys, *argv)
        assert rc == want, argv


def test_deterministic_output(capsys):
    argv = ("xul", corpus_path("xmod-id-a1.json"), "--degree", "3",
            "--format", "json")
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    argv = ("check", corpus_path("r2.json"))
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2

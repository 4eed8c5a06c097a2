import json
import os

import pytest

from leibnizx import io
from leibnizx.envelope import ul

from conftest import CORPUS, corpus_path

ALL_CORPUS = sorted(os.listdir(CORPUS))


def test_corpus_is_complete():
    assert len(ALL_CORPUS) >= 20
    for required in ("a1.json", "l2.json", "r2.json", "bad-leibniz.json",
                     "bad-rep-a1.json", "bad-xrep-a1.json",
                     "xmod-zero-a1.json", "xmod-id-a1.json",
                     "xmod-incl-l2.json"):
        assert required in ALL_CORPUS


@pytest.mark.parametrize("name", ALL_CORPUS)
def test_roundtrip_bit_exact(name):
    path = corpus_path(name)
    obj = io.load_path(path)
    with open(path, encoding="utf-8") as f:
        on_disk = f.read()
    assert io.dumps(obj) == on_disk
    # load -> dump -> load is the identity
    again = io.load_data(json.loads(io.dumps(obj)), str(CORPUS))
    assert io.dumps(again) == on_disk


def test_rationals_as_strings_everywhere():
    for name in ALL_CORPUS:
        with open(corpus_path(name), encoding="utf-8") as f:
            data = f.read()
        assert "e-" not in data and ".0" not in data

    def walk(node):
        if isinstance(node, dict):
            for k, v in node.items():
                if k == "value":
                    assert all(isinstance(s, str) for s in v.values())
                else:
                    walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(json.loads(open(corpus_path("xmod-id-l2.json")).read()))


def test_module_file_pairs_with_envelope(load):
    md = load("module-a1-r.json")
    mod = md.to_ul_module(ul(md.algebra, 3))
    from leibnizx.envelope import check_module
    assert not check_module(mod)


def bad_cases():
    yield {"kind": "martian"}
    yield {"kind": "leibniz_algebra", "name": "x"}  # no basis
    yield {"kind": "leibniz_algebra", "name": "x", "basis": ["a", "a"]}
    yield {"kind": "leibniz_algebra", "name": "x", "basis": ["a"],
           "bracket": [{"left": "a", "right": "z", "value": {}}]}
    yield {"kind": "leibniz_algebra", "name": "x", "basis": ["a"],
           "bracket": [{"left": "a", "right": "a", "value": {"a": "1/0"}}]}
    yield {"kind": "leibniz_algebra", "name": "x", "basis": ["a"],
           "bracket": [{"left": "a", "right": "a", "value": {"a": 1}}]}
    yield {"kind": "rep", "name": "x", "algebra": 7, "module": []}


@pytest.mark.parametrize("data", list(bad_cases()))
def test_malformed_inputs_rejected(data):
    with pytest.raises(io.FormatError):
        io.load_data(data, ".")


def test_load_by_path_reference(tmp_path):
    ref = {"kind": "xmod", "q": "q.json", "p": "p.json", "eta": {},
           "action": {"left": [], "right": []}}
    q = {"kind": "leibniz_algebra", "name": "Q", "basis": ["m"],
         "bracket": []}
    p = {"kind": "leibniz_algebra", "name": "P", "basis": ["a"],
         "bracket": []}
    for fname, doc in (("x.json", ref), ("q.json", q), ("p.json", p)):
        (tmp_path / fname).write_text(json.dumps(doc))
    x = io.load_path(str(tmp_path / "x.json"))
    assert x.q.name == "Q" and x.p.name == "P"
    # a reference of the wrong kind is an error
    ref["q"] = "x.json"
    (tmp_path / "x2.json").write_text(json.dumps(ref))
    with pytest.raises(io.FormatError):
        io.load_path(str(tmp_path / "x2.json"))


def test_missing_file_is_format_error():
    with pytest.raises(io.FormatError):
        io.load_path("/nonexistent/never.json")

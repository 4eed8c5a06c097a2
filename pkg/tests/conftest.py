import pathlib

import pytest

from leibnizx import io

CORPUS = pathlib.Path(__file__).resolve().parents[1] / "corpus"


def corpus_path(name):
    return str(CORPUS / name)


@pytest.fixture(scope="session")
def load():
    cache = {}

    def _load(name):
        if name not in cache:
            cache[name] = io.load_path(corpus_path(name))
        return cache[name]

    return _load


@pytest.fixture(scope="session")
def a1(load):
    return load("a1.json")


@pytest.fixture(scope="session")
def l2(load):
    return load("l2.json")


@pytest.fixture(scope="session")
def r2(load):
    return load("r2.json")


@pytest.fixture(scope="session")
def xmods(load):
    names = ("xmod-zero-a1.json", "xmod-id-a1.json", "xmod-id-l2.json",
             "xmod-id-r2.json", "xmod-incl-l2.json")
    return {n: load(n) for n in names}

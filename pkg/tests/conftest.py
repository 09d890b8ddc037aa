import time
from types import SimpleNamespace

import pytest

from strayt import (enumerate_semigroup, fixture_path, load_presentation,
                    load_word_aliases, parse_cli_word)
from strayt.cli import sidecar_path


def _graph(name):
    return enumerate_semigroup(load_presentation(fixture_path(name)))


@pytest.fixture(scope="session")
def ex1():
    return _graph("ex1_monogenic")


@pytest.fixture(scope="session")
def ex2():
    return _graph("ex2_cycle")


@pytest.fixture(scope="session")
def ex3():
    return _graph("ex3_constants")


@pytest.fixture(scope="session")
def ex4():
    return _graph("ex4_abc")


@pytest.fixture(scope="session")
def p53():
    """The big fixture, enumerated once per session; build time is kept."""
    path = fixture_path("p53")
    presentation = load_presentation(path)
    t0 = time.perf_counter()
    graph = enumerate_semigroup(presentation)
    seconds = time.perf_counter() - t0
    aliases = load_word_aliases(sidecar_path(path))
    return SimpleNamespace(
        graph=graph,
        seconds=seconds,
        aliases=aliases,
        a=parse_cli_word(presentation, "@a", aliases),
        b=parse_cli_word(presentation, "@b", aliases),
    )

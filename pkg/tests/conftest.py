"""Shared fixtures: the small named graphs most tests revolve around.

Frozen expected values in the test modules were derived with the naive
subset evaluator (or are forced directly by the definitions) and are
pinned here as regression anchors.
"""

from __future__ import annotations

import pytest

from argmon import ArgumentationGraph, build_graph, enumerate_graphs


@pytest.fixture
def mutual() -> ArgumentationGraph:
    """Two arguments attacking each other."""
    return build_graph(["a", "b"], [("a", "b"), ("b", "a")])


@pytest.fixture
def chain3() -> ArgumentationGraph:
    """a attacks b attacks c."""
    return build_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def self_loop() -> ArgumentationGraph:
    """A single self-attacking argument."""
    return build_graph(["a"], [("a", "a")])


@pytest.fixture
def singleton() -> ArgumentationGraph:
    """A single unattacked argument."""
    return build_graph(["a"])


@pytest.fixture
def empty_graph() -> ArgumentationGraph:
    return build_graph([])


@pytest.fixture
def two_on_one() -> ArgumentationGraph:
    """b and c attack each other, and both attack a."""
    return build_graph(
        ["a", "b", "c"],
        [("b", "a"), ("c", "a"), ("b", "c"), ("c", "b")],
    )


@pytest.fixture
def loop_feeder() -> ArgumentationGraph:
    """A self-attacker that also attacks a second argument."""
    return build_graph(["a", "b"], [("a", "a"), ("a", "b")])


@pytest.fixture(scope="session")
def graphs_n2() -> tuple[ArgumentationGraph, ...]:
    return tuple(enumerate_graphs(2))


@pytest.fixture(scope="session")
def graphs_n3() -> tuple[ArgumentationGraph, ...]:
    return tuple(enumerate_graphs(3))

"""Extensions, labellings, and the conversions between them.

Golden values were derived with the naive subset evaluator in
``argmon.oracle`` and frozen here; the exhaustive loops re-derive them on
the fly for every small graph.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from argmon import (
    GraphError,
    LabelValue,
    Labelling,
    SemanticsId,
    build_graph,
    characteristic,
    complete_extensions,
    complete_labellings,
    ext2lab,
    extensions,
    grounded_extension,
    lab2ext,
    labellings,
    preferred_extensions,
    stable_extensions,
)
from argmon.core import enumerate_graphs
from argmon.oracle import naive_extensions

ALL_SEMANTICS = tuple(SemanticsId)

IN = LabelValue.IN
OUT = LabelValue.OUT
UND = LabelValue.UND


def sets(*members_lists):
    return tuple(frozenset(members) for members in members_lists)


# -- golden extension values -----------------------------------------------------


def test_mutual_attack_extensions(mutual):
    assert complete_extensions(mutual) == sets([], ["a"], ["b"])
    assert preferred_extensions(mutual) == sets(["a"], ["b"])
    assert stable_extensions(mutual) == sets(["a"], ["b"])
    assert grounded_extension(mutual) == frozenset()


def test_chain_extensions(chain3):
    assert complete_extensions(chain3) == sets(["a", "c"])
    assert preferred_extensions(chain3) == sets(["a", "c"])
    assert stable_extensions(chain3) == sets(["a", "c"])
    assert grounded_extension(chain3) == frozenset({"a", "c"})


def test_self_loop_extensions(self_loop):
    assert complete_extensions(self_loop) == sets([])
    assert preferred_extensions(self_loop) == sets([])
    assert stable_extensions(self_loop) == ()
    assert grounded_extension(self_loop) == frozenset()


def test_singleton_extensions(singleton):
    for semantics in ALL_SEMANTICS:
        assert extensions(singleton, semantics) == sets(["a"])


def test_empty_graph_has_one_empty_extension(empty_graph):
    for semantics in ALL_SEMANTICS:
        assert extensions(empty_graph, semantics) == sets([])
    (labelling,) = complete_labellings(empty_graph)
    assert len(labelling) == 0


def test_extensions_dispatcher_matches_the_direct_functions(two_on_one):
    assert extensions(two_on_one, SemanticsId.COMPLETE) == complete_extensions(
        two_on_one
    )
    assert extensions(two_on_one, SemanticsId.PREFERRED) == preferred_extensions(
        two_on_one
    )
    assert extensions(two_on_one, SemanticsId.STABLE) == stable_extensions(
        two_on_one
    )
    assert extensions(two_on_one, SemanticsId.GROUNDED) == (
        grounded_extension(two_on_one),
    )
    assert extensions(two_on_one, "preferred") == preferred_extensions(two_on_one)


def test_extensions_are_canonically_ordered(graphs_n3):
    for graph in graphs_n3:
        for semantics in ALL_SEMANTICS:
            found = extensions(graph, semantics)
            keys = [(len(e), tuple(sorted(e))) for e in found]
            assert keys == sorted(keys)


# -- characteristic function ------------------------------------------------------


def test_characteristic_golden_values(chain3, mutual):
    assert characteristic(chain3, set()) == frozenset({"a"})
    assert characteristic(chain3, {"a"}) == frozenset({"a", "c"})
    assert characteristic(mutual, set()) == frozenset()


def test_characteristic_rejects_foreign_subsets(chain3, empty_graph):
    with pytest.raises(GraphError):
        characteristic(chain3, {"z"})
    with pytest.raises(GraphError):
        characteristic(empty_graph, {"z"})


def test_characteristic_is_monotone(graphs_n2):
    from argmon.oracle import subsets

    for graph in graphs_n2:
        images = {s: characteristic(graph, s) for s in subsets(graph.arguments)}
        for small, small_image in images.items():
            for big, big_image in images.items():
                if small <= big:
                    assert small_image <= big_image


def test_grounded_is_the_least_fixpoint(graphs_n3):
    for graph in graphs_n3:
        grounded = grounded_extension(graph)
        assert characteristic(graph, grounded) == grounded
        # reachable from the empty set in at most |arguments| steps
        current = frozenset()
        for _ in range(len(graph.arguments) + 1):
            current = characteristic(graph, current)
        assert current == grounded


# -- labellings ---------------------------------------------------------------------


def test_mutual_attack_complete_labellings(mutual):
    assert complete_labellings(mutual) == (
        Labelling({"a": IN, "b": OUT}),
        Labelling({"a": OUT, "b": IN}),
        Labelling({"a": UND, "b": UND}),
    )


def test_self_loop_labellings(self_loop):
    assert complete_labellings(self_loop) == (Labelling({"a": UND}),)
    assert labellings(self_loop, SemanticsId.STABLE) == ()


def test_singleton_labelling_is_forced_in(singleton):
    assert complete_labellings(singleton) == (Labelling({"a": IN}),)


def test_mutual_attack_stable_and_grounded_labellings(mutual):
    assert labellings(mutual, SemanticsId.STABLE) == (
        Labelling({"a": IN, "b": OUT}),
        Labelling({"a": OUT, "b": IN}),
    )
    assert labellings(mutual, SemanticsId.GROUNDED) == (
        Labelling({"a": UND, "b": UND}),
    )


def test_labelling_rules_hold_pointwise(graphs_n3):
    for graph in graphs_n3:
        for labelling in complete_labellings(graph):
            for argument in graph.arguments:
                attackers = graph.attackers(argument)
                got = labelling[argument]
                if got is IN:
                    assert all(labelling[b] is OUT for b in attackers)
                elif got is OUT:
                    assert any(labelling[b] is IN for b in attackers)
                else:
                    assert not all(labelling[b] is OUT for b in attackers)
                    assert not any(labelling[b] is IN for b in attackers)


def test_labellings_are_canonically_ordered(graphs_n3):
    for graph in graphs_n3:
        for semantics in ALL_SEMANTICS:
            found = labellings(graph, semantics)
            ranks = [lab.sort_rank() for lab in found]
            assert ranks == sorted(ranks)


def test_stable_labellings_have_no_und(graphs_n3):
    for graph in graphs_n3:
        for labelling in labellings(graph, SemanticsId.STABLE):
            assert not labelling.und_arguments


def test_grounded_labelling_is_unique(graphs_n3):
    for graph in graphs_n3:
        assert len(labellings(graph, SemanticsId.GROUNDED)) == 1


# -- conversions ----------------------------------------------------------------------


def test_ext2lab_golden_values(mutual, chain3):
    assert ext2lab(mutual, {"a"}) == Labelling({"a": IN, "b": OUT})
    assert ext2lab(mutual, set()) == Labelling({"a": UND, "b": UND})
    assert ext2lab(chain3, {"a", "c"}) == Labelling({"a": IN, "b": OUT, "c": IN})


def test_ext2lab_rejects_foreign_members(mutual):
    with pytest.raises(GraphError):
        ext2lab(mutual, {"z"})


def test_lab2ext_reads_off_the_in_set():
    assert lab2ext(Labelling({"a": IN, "b": OUT})) == frozenset({"a"})
    assert lab2ext(Labelling({"a": UND, "b": UND})) == frozenset()


def test_conversions_are_mutually_inverse_on_extensions(graphs_n3):
    for graph in graphs_n3:
        for extension in complete_extensions(graph):
            assert lab2ext(ext2lab(graph, extension)) == extension


def test_labellings_are_the_ext2lab_image(graphs_n3):
    for graph in graphs_n3:
        for semantics in ALL_SEMANTICS:
            via_extensions = sorted(
                (ext2lab(graph, e) for e in extensions(graph, semantics)),
                key=Labelling.sort_rank,
            )
            assert list(labellings(graph, semantics)) == via_extensions


# -- structural facts ------------------------------------------------------------------


def test_oracle_equivalence(graphs_n3):
    for graph in graphs_n3:
        for semantics in ALL_SEMANTICS:
            produced = set(extensions(graph, semantics))
            assert produced == set(naive_extensions(graph, semantics))


def test_inclusion_chain(graphs_n3):
    for graph in graphs_n3:
        complete = set(complete_extensions(graph))
        preferred = set(preferred_extensions(graph))
        stable = set(stable_extensions(graph))
        grounded = grounded_extension(graph)
        assert stable <= preferred <= complete
        assert grounded in complete
        assert all(grounded <= ext for ext in complete)
        assert complete and preferred


def test_every_extension_satisfies_its_definition(graphs_n3):
    for graph in graphs_n3:
        universe = set(graph.arguments)
        for ext in complete_extensions(graph):
            assert graph.is_conflict_free(ext)
            defended = {a for a in universe if graph.defends(ext, a)}
            assert defended == set(ext)
        for ext in stable_extensions(graph):
            assert graph.is_conflict_free(ext)
            assert all(
                not graph.attackers(outsider).isdisjoint(ext)
                for outsider in universe - ext
            )


# -- the Labelling type ------------------------------------------------------------------


def test_labelling_mapping_interface():
    lab = Labelling({"b": OUT, "a": IN})
    assert list(lab) == ["a", "b"]  # canonical order
    assert lab["a"] is IN and lab["b"] is OUT
    assert len(lab) == 2
    assert dict(lab) == {"a": IN, "b": OUT}
    assert lab.in_arguments == frozenset({"a"})
    assert lab.out_arguments == frozenset({"b"})
    assert lab.und_arguments == frozenset()
    with pytest.raises(KeyError):
        lab["z"]


def test_labelling_accepts_label_strings():
    assert Labelling({"a": "in"}) == Labelling({"a": IN})


def test_labelling_is_immutable_and_hashable():
    lab = Labelling({"a": IN})
    with pytest.raises(AttributeError):
        lab.extra = 1
    assert hash(lab) == hash(Labelling({"a": IN}))
    assert lab != Labelling({"a": OUT})
    assert {lab, Labelling({"a": IN})} == {lab}


def test_labelling_repr_is_readable():
    assert repr(Labelling({"a": IN, "b": UND})) == "Labelling({a:in, b:und})"


# -- concurrency and property tests ----------------------------------------------------


def test_concurrent_queries_agree_with_serial(graphs_n2):
    serial = [complete_extensions(g) for g in graphs_n2]
    with ThreadPoolExecutor(max_workers=4) as pool:
        concurrent = list(pool.map(complete_extensions, graphs_n2))
    assert concurrent == serial


@st.composite
def indexed_graph(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    index = draw(st.integers(min_value=0, max_value=(1 << (n * n)) - 1))
    names = tuple(f"a{i}" for i in range(1, n + 1))
    pairs = [(s, t) for s in names for t in names]
    chosen = [pair for k, pair in enumerate(pairs) if index >> k & 1]
    return build_graph(names, chosen)


@given(indexed_graph(), st.sampled_from(ALL_SEMANTICS))
@settings(max_examples=120, deadline=None)
def test_production_matches_oracle_on_random_graphs(graph, semantics):
    assert set(extensions(graph, semantics)) == set(
        naive_extensions(graph, semantics)
    )


@given(indexed_graph())
@settings(max_examples=80, deadline=None)
def test_grounded_is_the_intersection_of_complete(graph):
    complete = complete_extensions(graph)
    meet = frozenset(graph.arguments)
    for ext in complete:
        meet &= ext
    assert grounded_extension(graph) == meet

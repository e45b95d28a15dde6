"""Extension and labelling semantics for argumentation graphs.

Four semantics are supported: complete, preferred, stable, and grounded.
Extensions are frozensets of argument ids; labellings assign each argument
one of the labels in, out, und.  Results come back in a deterministic
canonical order so equal graphs always produce identical output.
"""

from __future__ import annotations

from collections.abc import Mapping
from enum import Enum
from typing import Iterable, Iterator

from . import _engine
from .core import ArgumentationGraph

__all__ = [
    "SemanticsId",
    "LabelValue",
    "Labelling",
    "characteristic",
    "complete_extensions",
    "preferred_extensions",
    "stable_extensions",
    "grounded_extension",
    "extensions",
    "complete_labellings",
    "labellings",
    "ext2lab",
    "lab2ext",
]


class SemanticsId(str, Enum):
    COMPLETE = "complete"
    PREFERRED = "preferred"
    STABLE = "stable"
    GROUNDED = "grounded"


_SEMANTICS_INDEX = {
    SemanticsId.COMPLETE: _engine.COMPLETE,
    SemanticsId.PREFERRED: _engine.PREFERRED,
    SemanticsId.STABLE: _engine.STABLE,
    SemanticsId.GROUNDED: _engine.GROUNDED,
}


class LabelValue(str, Enum):
    IN = "in"
    OUT = "out"
    UND = "und"


_LABEL_RANK = {LabelValue.IN: 0, LabelValue.OUT: 1, LabelValue.UND: 2}


class Labelling(Mapping):
    """An immutable assignment of a label to every argument of a graph.

    Behaves as a read-only mapping from argument id to :class:`LabelValue`.
    Iteration follows the graph's canonical argument order.
    """

    __slots__ = ("_names", "_labels", "_hash")

    def __init__(self, assignment: Mapping[str, LabelValue]) -> None:
        names = tuple(sorted(assignment))
        labels = tuple(LabelValue(assignment[name]) for name in names)
        object.__setattr__(self, "_names", names)
        object.__setattr__(self, "_labels", labels)
        object.__setattr__(self, "_hash", hash((names, labels)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Labelling is immutable")

    def __getitem__(self, name: str) -> LabelValue:
        try:
            return self._labels[self._names.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._names)

    def __len__(self) -> int:
        return len(self._names)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Labelling):
            return self._names == other._names and self._labels == other._labels
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(
            f"{name}:{label.value}" for name, label in zip(self._names, self._labels)
        )
        return f"Labelling({{{body}}})"

    @property
    def in_arguments(self) -> frozenset[str]:
        return self._label_class(LabelValue.IN)

    @property
    def out_arguments(self) -> frozenset[str]:
        return self._label_class(LabelValue.OUT)

    @property
    def und_arguments(self) -> frozenset[str]:
        return self._label_class(LabelValue.UND)

    def _label_class(self, label: LabelValue) -> frozenset[str]:
        return frozenset(
            name for name, got in zip(self._names, self._labels) if got is label
        )

    def sort_rank(self) -> tuple[int, ...]:
        """Canonical ordering key: per-argument label ranks, in < out < und."""
        return tuple(_LABEL_RANK[label] for label in self._labels)

    def __reduce__(self):
        return (Labelling, (dict(zip(self._names, self._labels)),))


def _labelling_from_masks(
    names: tuple[str, ...], in_mask: int, out_mask: int
) -> Labelling:
    assignment = {}
    for i, name in enumerate(names):
        bit = 1 << i
        if in_mask & bit:
            assignment[name] = LabelValue.IN
        elif out_mask & bit:
            assignment[name] = LabelValue.OUT
        else:
            assignment[name] = LabelValue.UND
    return Labelling(assignment)


def _extension_sort_key(members: frozenset[str]) -> tuple[int, tuple[str, ...]]:
    return (len(members), tuple(sorted(members)))


def _extensions_from_masks(
    names: tuple[str, ...], masks: Iterable[int]
) -> tuple[frozenset[str], ...]:
    sets = [_engine.members_from_mask(names, mask) for mask in masks]
    return tuple(sorted(sets, key=_extension_sort_key))


# -- characteristic function and extensions ---------------------------------


def characteristic(
    graph: ArgumentationGraph, subset: Iterable[str]
) -> frozenset[str]:
    """The set of arguments the given subset defends."""
    members = graph._require_subset(subset)
    return frozenset(a for a in graph.arguments if graph.defends(members, a))


def complete_extensions(graph: ArgumentationGraph) -> tuple[frozenset[str], ...]:
    """All conflict-free fixpoints of the characteristic function."""
    return _extensions_for_index(graph, _engine.COMPLETE)


def preferred_extensions(graph: ArgumentationGraph) -> tuple[frozenset[str], ...]:
    """The subset-maximal complete extensions."""
    return _extensions_for_index(graph, _engine.PREFERRED)


def stable_extensions(graph: ArgumentationGraph) -> tuple[frozenset[str], ...]:
    """Conflict-free sets attacking every argument outside themselves.

    May be empty; the other three semantics always yield at least one
    extension.
    """
    return _extensions_for_index(graph, _engine.STABLE)


def grounded_extension(graph: ArgumentationGraph) -> frozenset[str]:
    """The least fixpoint of the characteristic function."""
    solved = _engine.solve_graph(graph)
    return _engine.members_from_mask(
        graph.arguments, solved.extensions[_engine.GROUNDED][0]
    )


def extensions(
    graph: ArgumentationGraph, semantics: SemanticsId | str
) -> tuple[frozenset[str], ...]:
    """All extensions of ``graph`` under ``semantics``, canonically ordered
    (by size, then members).  Grounded yields a one-element tuple."""
    return _extensions_for_index(graph, _semantics_index(semantics))


def _extensions_for_index(
    graph: ArgumentationGraph, index: int
) -> tuple[frozenset[str], ...]:
    solved = _engine.solve_graph(graph)
    return _extensions_from_masks(graph.arguments, solved.extensions[index])


def _semantics_index(semantics: SemanticsId | str) -> int:
    return _SEMANTICS_INDEX[SemanticsId(semantics)]


# -- labellings --------------------------------------------------------------


def complete_labellings(graph: ArgumentationGraph) -> tuple[Labelling, ...]:
    """All legal labellings: an argument is in iff all its attackers are
    out, out iff some attacker is in, und otherwise."""
    return labellings(graph, SemanticsId.COMPLETE)


def labellings(
    graph: ArgumentationGraph, semantics: SemanticsId | str
) -> tuple[Labelling, ...]:
    """All labellings of ``graph`` under ``semantics``, canonically ordered
    by per-argument label with in < out < und."""
    solved = _engine.solve_graph(graph)
    pairs = solved.labellings[_semantics_index(semantics)]
    built = [
        _labelling_from_masks(graph.arguments, in_mask, out_mask)
        for in_mask, out_mask in pairs
    ]
    return tuple(sorted(built, key=Labelling.sort_rank))


def ext2lab(graph: ArgumentationGraph, extension: Iterable[str]) -> Labelling:
    """The labelling induced by an extension: members in, attacked
    arguments out, the rest und."""
    members = graph._require_subset(extension)
    assignment = {}
    for name in graph.arguments:
        if name in members:
            assignment[name] = LabelValue.IN
        elif not graph.attackers(name).isdisjoint(members):
            assignment[name] = LabelValue.OUT
        else:
            assignment[name] = LabelValue.UND
    return Labelling(assignment)


def lab2ext(labelling: Labelling) -> frozenset[str]:
    """The extension a labelling denotes: its in-labelled arguments."""
    return labelling.in_arguments
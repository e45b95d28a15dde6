"""Naive reference evaluator.

Everything here works definition-by-definition with plain frozensets and
no shared state with the bitmask solver: candidate extensions come from
brute-force subset enumeration and are tested with the graph's own
``is_conflict_free`` and ``defends``.  Deliberately slow and simple; the
verification layer cross-checks the production solver against it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .core import ArgumentationGraph
from .degrees import AcceptabilityDegree, DegreeConvention
from .semantics import SemanticsId

__all__ = [
    "subsets",
    "naive_complete_extensions",
    "naive_preferred_extensions",
    "naive_stable_extensions",
    "naive_grounded_extension",
    "naive_extensions",
    "naive_degree",
]


def subsets(items) -> Iterator[frozenset[str]]:
    pool = tuple(items)
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            yield frozenset(combo)


def naive_complete_extensions(
    graph: ArgumentationGraph,
) -> tuple[frozenset[str], ...]:
    """Conflict-free sets that contain exactly the arguments they defend."""
    found = []
    for candidate in subsets(graph.arguments):
        if not graph.is_conflict_free(candidate):
            continue
        defended = frozenset(
            a for a in graph.arguments if graph.defends(candidate, a)
        )
        if defended == candidate:
            found.append(candidate)
    return tuple(found)


def naive_preferred_extensions(
    graph: ArgumentationGraph,
) -> tuple[frozenset[str], ...]:
    complete = naive_complete_extensions(graph)
    return tuple(
        ext
        for ext in complete
        if not any(other != ext and ext < other for other in complete)
    )


def naive_stable_extensions(
    graph: ArgumentationGraph,
) -> tuple[frozenset[str], ...]:
    """Conflict-free sets that attack every argument outside themselves."""
    found = []
    universe = set(graph.arguments)
    for candidate in subsets(graph.arguments):
        if not graph.is_conflict_free(candidate):
            continue
        if all(
            not graph.attackers(outsider).isdisjoint(candidate)
            for outsider in universe - candidate
        ):
            found.append(candidate)
    return tuple(found)


def naive_grounded_extension(graph: ArgumentationGraph) -> frozenset[str]:
    """Iterate the defended-set operator from the empty set to a fixpoint."""
    current: frozenset[str] = frozenset()
    while True:
        nxt = frozenset(a for a in graph.arguments if graph.defends(current, a))
        if nxt == current:
            return current
        current = nxt


def naive_extensions(
    graph: ArgumentationGraph, semantics: SemanticsId | str
) -> tuple[frozenset[str], ...]:
    semantics = SemanticsId(semantics)
    if semantics is SemanticsId.COMPLETE:
        return naive_complete_extensions(graph)
    if semantics is SemanticsId.PREFERRED:
        return naive_preferred_extensions(graph)
    if semantics is SemanticsId.STABLE:
        return naive_stable_extensions(graph)
    return (naive_grounded_extension(graph),)


def naive_degree(
    graph: ArgumentationGraph,
    semantics: SemanticsId | str,
    convention: DegreeConvention | str,
    argument: str,
) -> AcceptabilityDegree:
    """Degree computed straight from the naive extensions."""
    graph._require_argument(argument)
    exts = naive_extensions(graph, semantics)
    if not exts:
        if DegreeConvention(convention) is DegreeConvention.ALTERNATIVE:
            return AcceptabilityDegree.ZERO
        return AcceptabilityDegree.SKEPTICAL
    containing = [ext for ext in exts if argument in ext]
    if len(containing) == len(exts):
        return AcceptabilityDegree.SKEPTICAL
    if containing:
        return AcceptabilityDegree.CREDULOUS
    attackers = graph.attackers(argument)
    if any(not ext.isdisjoint(attackers) for ext in exts):
        return AcceptabilityDegree.ZERO
    return AcceptabilityDegree.WEAK_UND
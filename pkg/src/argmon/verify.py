"""Brute-force verification of degree monotonicity under attack removal.

The harness sweeps graph populations (every digraph up to a size bound,
plus optional seeded random samples) and machine-checks, for each graph:

* monotonicity: removing any subset of the attacks targeting an argument
  never lowers that argument's acceptability degree, for every selected
  semantics and convention;
* labelling transfer, addition direction: a labelling of the reduced
  graph that has the unburdened argument out is also a labelling of the
  full graph;
* labelling transfer, removal direction: a labelling of the full graph
  that has the argument in is also a labelling of the reduced graph;
* correspondence: extensions computed by the characteristic-function
  route, extensions read off the labelling route, and extensions from the
  naive set-based evaluator all agree, and the grounded extension is both
  the intersection of the complete ones and the unique minimal one;
* side claims: with at least one extension, stable semantics never grades
  an argument weakly undecided, grounded degrees never land on the
  credulous value, and unattacked arguments are always graded 1.

Any failure is reported as a :class:`Violation`; a clean sweep returns a
report with an empty violation list.  Everything is deterministic for a
given configuration, including across worker counts.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import timedelta
from enum import Enum
from typing import Callable, Iterator, Sequence

from . import _engine
from .core import (
    MAX_ENUMERATION_SIZE,
    ArgumentationGraph,
    Attack,
    Xorshift64Star,
    enumeration_names,
    graph_from_index,
    random_graph,
    sample_seed,
)
from .degrees import AcceptabilityDegree, DegreeConvention
from .io import GraphFormat, serialize_graph
from .oracle import (
    naive_complete_extensions,
    naive_grounded_extension,
    naive_stable_extensions,
)
from .semantics import SemanticsId, _semantics_index

__all__ = [
    "ALL_SEMANTICS",
    "BOTH_CONVENTIONS",
    "THREADS_ENV_VAR",
    "DegreeFn",
    "ViolationKind",
    "Violation",
    "SweepConfig",
    "VerificationReport",
    "check_monotonicity",
    "check_lemma_addition",
    "check_lemma_removal",
    "check_correspondence",
    "check_side_claims",
    "sweep",
]

ALL_SEMANTICS: tuple[SemanticsId, ...] = (
    SemanticsId.COMPLETE,
    SemanticsId.PREFERRED,
    SemanticsId.STABLE,
    SemanticsId.GROUNDED,
)
BOTH_CONVENTIONS: tuple[DegreeConvention, ...] = (
    DegreeConvention.STANDARD,
    DegreeConvention.ALTERNATIVE,
)

#: Environment variable capping the number of worker processes.
THREADS_ENV_VAR = "ARGMON_THREADS"

#: Removal subsets are enumerated exhaustively up to this in-degree; above
#: it the check falls back to singletons, the full set, and seeded random
#: subsets, keeping the per-argument work bounded.
EXHAUSTIVE_INDEGREE_LIMIT = 6
SAMPLED_SUBSETS = 64

#: Replaceable degree oracle, used to demonstrate that the harness catches
#: an implementation whose degrees really do behave non-monotonically.
DegreeFn = Callable[
    [ArgumentationGraph, SemanticsId, DegreeConvention, str],
    AcceptabilityDegree,
]


class ViolationKind(str, Enum):
    MONOTONICITY = "monotonicity"
    LEMMA_ADDITION = "lemma_addition"
    LEMMA_REMOVAL = "lemma_removal"
    CORRESPONDENCE = "correspondence"
    SIDE_CLAIM = "side_claim"


@dataclass(frozen=True)
class Violation:
    """One failed check on one graph."""

    kind: ViolationKind
    graph: ArgumentationGraph
    detail: str
    semantics: SemanticsId | None = None
    convention: DegreeConvention | None = None
    argument: str | None = None
    removed: tuple[Attack, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "semantics": self.semantics.value if self.semantics else None,
            "convention": self.convention.value if self.convention else None,
            "argument": self.argument,
            "removed": [[source, target] for source, target in self.removed],
            "graph_tgf": serialize_graph(self.graph, GraphFormat.TGF),
            "detail": self.detail,
        }

    def sort_key(self) -> tuple:
        """Canonical report order: graph, then kind, then check coordinates."""
        return (
            len(self.graph.arguments),
            serialize_graph(self.graph, GraphFormat.TGF),
            self.kind.value,
            self.semantics.value if self.semantics else "",
            self.convention.value if self.convention else "",
            self.argument or "",
            self.removed,
            self.detail,
        )

    def render(self) -> str:
        parts = [self.kind.value]
        if self.semantics:
            parts.append(self.semantics.value)
        if self.convention:
            parts.append(self.convention.value)
        if self.argument:
            parts.append(f"argument {self.argument}")
        if self.removed:
            edges = ",".join(f"{s}>{t}" for s, t in self.removed)
            parts.append(f"removed [{edges}]")
        graph = serialize_graph(self.graph, GraphFormat.TGF).strip().replace("\n", " ")
        return f"{' '.join(parts)}: {self.detail} [graph: {graph}]"


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep: graph sizes 1..max_n exhaustively, then optionally
    ``samples`` random graphs of size ``random_n`` drawn from ``seed``."""

    max_n: int
    random_n: int | None = None
    samples: int | None = None
    seed: int = 0
    semantics: tuple[SemanticsId, ...] = ALL_SEMANTICS
    conventions: tuple[DegreeConvention, ...] = BOTH_CONVENTIONS

    def __post_init__(self) -> None:
        if not 1 <= self.max_n <= MAX_ENUMERATION_SIZE:
            raise ValueError(
                f"max_n must be between 1 and {MAX_ENUMERATION_SIZE}, "
                f"got {self.max_n}"
            )
        if (self.random_n is None) != (self.samples is None):
            raise ValueError(
                "random_n and samples must be given together or not at all"
            )
        if self.random_n is not None:
            if not 1 <= self.random_n <= _engine.MAX_SOLVE_SIZE:
                raise ValueError(
                    f"random_n must be between 1 and {_engine.MAX_SOLVE_SIZE}, "
                    f"got {self.random_n}"
                )
            if self.samples < 1:
                raise ValueError(f"samples must be positive, got {self.samples}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 unsigned bits")
        semantics = tuple(SemanticsId(s) for s in self.semantics)
        conventions = tuple(DegreeConvention(c) for c in self.conventions)
        if not semantics or len(set(semantics)) != len(semantics):
            raise ValueError("semantics must be a non-empty list without repeats")
        if not conventions or len(set(conventions)) != len(conventions):
            raise ValueError("conventions must be a non-empty list without repeats")
        object.__setattr__(self, "semantics", semantics)
        object.__setattr__(self, "conventions", conventions)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a sweep.

    ``checks_performed`` counts check invocations: per graph, one
    monotonicity check per (semantics, convention) pair, two labelling
    transfer checks per semantics, one correspondence check, and one side
    claim check.
    """

    graphs_checked: int
    checks_performed: int
    violations: tuple[Violation, ...]
    elapsed: timedelta

    def to_json(self) -> dict:
        return {
            "graphs_checked": self.graphs_checked,
            "checks_performed": self.checks_performed,
            "violations": [v.to_json() for v in self.violations],
            "elapsed_ms": int(self.elapsed.total_seconds() * 1000),
        }

    def render_text(self) -> str:
        lines = [
            f"graphs checked:   {self.graphs_checked}",
            f"checks performed: {self.checks_performed}",
            f"violations:       {len(self.violations)}",
            f"elapsed:          {self.elapsed.total_seconds():.1f}s",
        ]
        for number, violation in enumerate(self.violations, 1):
            lines.append(f"violation {number}: {violation.render()}")
        return "\n".join(lines)


# -- removal subset strategy -------------------------------------------------


def _subset_seed(attackers: tuple[int, ...], index: int) -> int:
    # FNV-1a over the attacker masks, then the target index; gives each
    # (graph, argument) pair its own reproducible subset stream.
    value = 0xCBF29CE484222325
    for mask in attackers:
        value = ((value ^ mask) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return ((value ^ index) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF


def _removal_subsets(attackers: tuple[int, ...], index: int) -> Iterator[int]:
    """Non-empty subsets of the attack sources hitting argument ``index``.

    Exhaustive when the in-degree is small; otherwise singletons, the full
    set, and a fixed number of seeded random subsets.  The empty subset is
    skipped everywhere: removing nothing compares a graph with itself.
    """
    mask = attackers[index]
    if mask.bit_count() <= EXHAUSTIVE_INDEGREE_LIMIT:
        sub = mask
        while sub:
            yield sub
            sub = (sub - 1) & mask
        return
    seen = set()
    remaining = mask
    while remaining:
        low = remaining & -remaining
        seen.add(low)
        yield low
        remaining ^= low
    seen.add(mask)
    yield mask
    rng = Xorshift64Star(_subset_seed(attackers, index))
    for _ in range(SAMPLED_SUBSETS):
        draw = rng.next64() & mask
        if draw and draw not in seen:
            seen.add(draw)
            yield draw


def _attacks_from_mask(
    names: tuple[str, ...], source_mask: int, target_index: int
) -> tuple[Attack, ...]:
    target = names[target_index]
    out = []
    while source_mask:
        low = source_mask & -source_mask
        out.append(Attack(names[low.bit_length() - 1], target))
        source_mask ^= low
    return tuple(out)


def _reduced(attackers: tuple[int, ...], index: int, removal: int) -> tuple[int, ...]:
    return (
        attackers[:index]
        + (attackers[index] & ~removal,)
        + attackers[index + 1 :]
    )


def _render_labelling(names: tuple[str, ...], pair: tuple[int, int]) -> str:
    in_mask, out_mask = pair
    parts = []
    for i, name in enumerate(names):
        bit = 1 << i
        label = "in" if in_mask & bit else "out" if out_mask & bit else "und"
        parts.append(f"{name}:{label}")
    return "{" + ", ".join(parts) + "}"


# -- individual checks -------------------------------------------------------


def check_monotonicity(
    graph: ArgumentationGraph,
    semantics: SemanticsId | str,
    convention: DegreeConvention | str,
    degree_fn: DegreeFn | None = None,
) -> list[Violation]:
    """Violations of degree monotonicity under attack removal on ``graph``.

    For every argument and every removal subset of its incoming attacks,
    the degree in the reduced graph must be at least the degree in the
    full graph.  ``degree_fn`` swaps in a replacement degree oracle (and a
    slower graph-rebuilding path); the default uses the solver directly.
    """
    semantics = SemanticsId(semantics)
    convention = DegreeConvention(convention)
    names = graph.arguments
    attackers = _engine.attacker_masks(graph)
    violations: list[Violation] = []
    if degree_fn is None:
        sem_index = _semantics_index(semantics)
        alternative = convention is DegreeConvention.ALTERNATIVE
        base = _engine.solve(attackers)
        for index in range(len(names)):
            if not attackers[index]:
                continue
            before = _engine.degree_code(base, sem_index, alternative, index)
            for removal in _removal_subsets(attackers, index):
                sub = _engine.solve(_reduced(attackers, index, removal))
                after = _engine.degree_code(sub, sem_index, alternative, index)
                if before > after:
                    violations.append(
                        _monotonicity_violation(
                            graph, semantics, convention, names, index,
                            removal,
                            AcceptabilityDegree(before),
                            AcceptabilityDegree(after),
                        )
                    )
    else:
        for index in range(len(names)):
            if not attackers[index]:
                continue
            before = degree_fn(graph, semantics, convention, names[index])
            for removal in _removal_subsets(attackers, index):
                removed = _attacks_from_mask(names, removal, index)
                reduced_graph = graph.remove_attacks(removed)
                after = degree_fn(reduced_graph, semantics, convention, names[index])
                if before > after:
                    violations.append(
                        _monotonicity_violation(
                            graph, semantics, convention, names, index,
                            removal, before, after,
                        )
                    )
    return violations


def _monotonicity_violation(
    graph: ArgumentationGraph,
    semantics: SemanticsId,
    convention: DegreeConvention,
    names: tuple[str, ...],
    index: int,
    removal: int,
    before: AcceptabilityDegree,
    after: AcceptabilityDegree,
) -> Violation:
    return Violation(
        kind=ViolationKind.MONOTONICITY,
        graph=graph,
        semantics=semantics,
        convention=convention,
        argument=names[index],
        removed=_attacks_from_mask(names, removal, index),
        detail=(
            f"degree dropped from {before.json_value} to {after.json_value} "
            "after removing incoming attacks"
        ),
    )


def check_lemma_addition(
    graph: ArgumentationGraph, semantics: SemanticsId | str
) -> list[Violation]:
    """Labellings of a reduced graph that have the relieved argument out
    must survive putting the removed attacks back."""
    semantics = SemanticsId(semantics)
    sem_index = _semantics_index(semantics)
    names = graph.arguments
    attackers = _engine.attacker_masks(graph)
    base = _engine.solve(attackers)
    base_set = base.labellings[sem_index]
    violations: list[Violation] = []
    for index in range(len(names)):
        if not attackers[index]:
            continue
        bit = 1 << index
        for removal in _removal_subsets(attackers, index):
            sub = _engine.solve(_reduced(attackers, index, removal))
            for pair in sub.labellings[sem_index]:
                if pair[1] & bit and pair not in base_set:
                    violations.append(
                        Violation(
                            kind=ViolationKind.LEMMA_ADDITION,
                            graph=graph,
                            semantics=semantics,
                            argument=names[index],
                            removed=_attacks_from_mask(names, removal, index),
                            detail=(
                                "labelling "
                                + _render_labelling(names, pair)
                                + " of the reduced graph has the argument out "
                                "but is not a labelling of the full graph"
                            ),
                        )
                    )
    return violations


def check_lemma_removal(
    graph: ArgumentationGraph, semantics: SemanticsId | str
) -> list[Violation]:
    """Labellings of the full graph that have the argument in must survive
    removing any subset of its incoming attacks."""
    semantics = SemanticsId(semantics)
    sem_index = _semantics_index(semantics)
    names = graph.arguments
    attackers = _engine.attacker_masks(graph)
    base = _engine.solve(attackers)
    violations: list[Violation] = []
    for index in range(len(names)):
        if not attackers[index]:
            continue
        bit = 1 << index
        in_pairs = [p for p in base.labellings[sem_index] if p[0] & bit]
        if not in_pairs:
            continue
        for removal in _removal_subsets(attackers, index):
            sub_set = _engine.solve(
                _reduced(attackers, index, removal)
            ).labellings[sem_index]
            for pair in in_pairs:
                if pair not in sub_set:
                    violations.append(
                        Violation(
                            kind=ViolationKind.LEMMA_REMOVAL,
                            graph=graph,
                            semantics=semantics,
                            argument=names[index],
                            removed=_attacks_from_mask(names, removal, index),
                            detail=(
                                "labelling "
                                + _render_labelling(names, pair)
                                + " has the argument in but does not survive "
                                "removing its incoming attacks"
                            ),
                        )
                    )
    return violations


def check_correspondence(
    graph: ArgumentationGraph,
    semantics: Sequence[SemanticsId | str] = ALL_SEMANTICS,
) -> list[Violation]:
    """Cross-check the extension route, the labelling route, and the naive
    evaluator against each other on one graph."""
    selected = tuple(SemanticsId(s) for s in semantics)
    names = graph.arguments
    solved = _engine.solve_graph(graph)
    violations: list[Violation] = []

    naive_complete = None
    for sem in selected:
        sem_index = _semantics_index(sem)
        ext_masks = set(solved.extensions[sem_index])
        lab_masks = {pair[0] for pair in solved.labellings[sem_index]}
        if ext_masks != lab_masks:
            violations.append(
                _correspondence_violation(
                    graph, sem, names,
                    "labelling route and extension route disagree",
                    lab_masks, ext_masks,
                )
            )
        if sem is SemanticsId.COMPLETE or sem is SemanticsId.PREFERRED:
            if naive_complete is None:
                naive_complete = naive_complete_extensions(graph)
            if sem is SemanticsId.COMPLETE:
                reference = naive_complete
            else:
                reference = tuple(
                    ext
                    for ext in naive_complete
                    if not any(
                        other != ext and ext < other for other in naive_complete
                    )
                )
        elif sem is SemanticsId.STABLE:
            reference = naive_stable_extensions(graph)
        else:
            reference = (naive_grounded_extension(graph),)
        naive_masks = {
            _engine.mask_from_members(names, ext) for ext in reference
        }
        if naive_masks != ext_masks:
            violations.append(
                _correspondence_violation(
                    graph, sem, names,
                    "solver disagrees with the naive evaluator",
                    ext_masks, naive_masks,
                )
            )

    if SemanticsId.GROUNDED in selected:
        grounded_mask = solved.extensions[_engine.GROUNDED][0]
        complete_masks = solved.extensions[_engine.COMPLETE]
        meet = (1 << len(names)) - 1
        for mask in complete_masks:
            meet &= mask
        if meet != grounded_mask:
            violations.append(
                _correspondence_violation(
                    graph, SemanticsId.GROUNDED, names,
                    "grounded extension is not the intersection of the "
                    "complete ones",
                    {grounded_mask}, {meet},
                )
            )
        minimal = [
            mask
            for mask in complete_masks
            if not any(o != mask and o & mask == o for o in complete_masks)
        ]
        if minimal != [grounded_mask]:
            violations.append(
                _correspondence_violation(
                    graph, SemanticsId.GROUNDED, names,
                    "grounded extension is not the unique minimal complete "
                    "extension",
                    {grounded_mask}, set(minimal),
                )
            )
    return violations


def _correspondence_violation(
    graph: ArgumentationGraph,
    semantics: SemanticsId,
    names: tuple[str, ...],
    message: str,
    got: set[int],
    expected: set[int],
) -> Violation:
    def render(masks: set[int]) -> str:
        sets = sorted(
            sorted(_engine.members_from_mask(names, m)) for m in masks
        )
        return "{" + ", ".join("{" + ",".join(s) + "}" for s in sets) + "}"

    return Violation(
        kind=ViolationKind.CORRESPONDENCE,
        graph=graph,
        semantics=semantics,
        detail=f"{message}: {render(got)} vs {render(expected)}",
    )


def check_side_claims(
    graph: ArgumentationGraph,
    semantics: Sequence[SemanticsId | str] = ALL_SEMANTICS,
) -> list[Violation]:
    """Structural degree facts that must hold whenever extensions exist:
    no weakly undecided arguments under stable semantics, no credulous
    degree under grounded semantics, and degree 1 for every unattacked
    argument."""
    selected = tuple(SemanticsId(s) for s in semantics)
    names = graph.arguments
    attackers = _engine.attacker_masks(graph)
    solved = _engine.solve(attackers)
    violations: list[Violation] = []
    for sem in selected:
        vector = solved.degree_vectors[_semantics_index(sem)]
        if vector is None:
            continue
        for index, code in enumerate(vector):
            if (
                sem is SemanticsId.STABLE
                and code == _engine.DEG_WEAK_UND
            ):
                violations.append(
                    _side_claim_violation(
                        graph, sem, names[index],
                        "weakly undecided degree under stable semantics "
                        "although extensions exist",
                    )
                )
            if sem is SemanticsId.GROUNDED and code == _engine.DEG_CREDULOUS:
                violations.append(
                    _side_claim_violation(
                        graph, sem, names[index],
                        "credulous degree under grounded semantics",
                    )
                )
            if not attackers[index] and code != _engine.DEG_SKEPTICAL:
                violations.append(
                    _side_claim_violation(
                        graph, sem, names[index],
                        "unattacked argument not graded 1",
                    )
                )
    return violations


def _side_claim_violation(
    graph: ArgumentationGraph, semantics: SemanticsId, argument: str, message: str
) -> Violation:
    return Violation(
        kind=ViolationKind.SIDE_CLAIM,
        graph=graph,
        semantics=semantics,
        argument=argument,
        detail=message,
    )


# -- the sweep ---------------------------------------------------------------


def _check_graph(
    graph: ArgumentationGraph,
    semantics: tuple[SemanticsId, ...],
    conventions: tuple[DegreeConvention, ...],
    degree_fn: DegreeFn | None = None,
) -> tuple[int, list[Violation]]:
    checks = len(semantics) * len(conventions) + 2 * len(semantics) + 2
    if degree_fn is None:
        violations = _fused_removal_checks(graph, semantics, conventions)
    else:
        violations = []
        for sem in semantics:
            for convention in conventions:
                violations.extend(
                    check_monotonicity(graph, sem, convention, degree_fn=degree_fn)
                )
            violations.extend(check_lemma_addition(graph, sem))
            violations.extend(check_lemma_removal(graph, sem))
    violations.extend(check_correspondence(graph, semantics))
    violations.extend(check_side_claims(graph, semantics))
    return checks, violations


def _fused_removal_checks(
    graph: ArgumentationGraph,
    semantics: tuple[SemanticsId, ...],
    conventions: tuple[DegreeConvention, ...],
) -> list[Violation]:
    """Monotonicity and both labelling transfer checks in one pass.

    Produces exactly the violations the three public check functions
    would, but enumerates each (argument, removal subset) pair once and
    reuses the reduced graph's solution across every semantics and
    convention.
    """
    names = graph.arguments
    attackers = _engine.attacker_masks(graph)
    base = _engine.solve(attackers)
    sem_indices = [(sem, _semantics_index(sem)) for sem in semantics]
    conv_flags = [
        (conv, conv is DegreeConvention.ALTERNATIVE) for conv in conventions
    ]
    violations: list[Violation] = []
    for index in range(len(names)):
        if not attackers[index]:
            continue
        bit = 1 << index
        before_codes = [
            [
                _engine.degree_code(base, sem_i, alt, index)
                for _, alt in conv_flags
            ]
            for _, sem_i in sem_indices
        ]
        in_pairs = [
            [p for p in base.labellings[sem_i] if p[0] & bit]
            for _, sem_i in sem_indices
        ]
        for removal in _removal_subsets(attackers, index):
            sub = _engine.solve(_reduced(attackers, index, removal))
            for position, (sem, sem_i) in enumerate(sem_indices):
                vector = sub.degree_vectors[sem_i]
                for slot, (conv, alt) in enumerate(conv_flags):
                    before = before_codes[position][slot]
                    if vector is None:
                        after = (
                            _engine.DEG_REJECTED
                            if alt
                            else _engine.DEG_SKEPTICAL
                        )
                    else:
                        after = vector[index]
                    if before > after:
                        violations.append(
                            _monotonicity_violation(
                                graph, sem, conv, names, index, removal,
                                AcceptabilityDegree(before),
                                AcceptabilityDegree(after),
                            )
                        )
                base_set = base.labellings[sem_i]
                for pair in sub.labellings[sem_i]:
                    if pair[1] & bit and pair not in base_set:
                        violations.append(
                            Violation(
                                kind=ViolationKind.LEMMA_ADDITION,
                                graph=graph,
                                semantics=sem,
                                argument=names[index],
                                removed=_attacks_from_mask(names, removal, index),
                                detail=(
                                    "labelling "
                                    + _render_labelling(names, pair)
                                    + " of the reduced graph has the argument "
                                    "out but is not a labelling of the full "
                                    "graph"
                                ),
                            )
                        )
                if in_pairs[position]:
                    sub_set = sub.labellings[sem_i]
                    for pair in in_pairs[position]:
                        if pair not in sub_set:
                            violations.append(
                                Violation(
                                    kind=ViolationKind.LEMMA_REMOVAL,
                                    graph=graph,
                                    semantics=sem,
                                    argument=names[index],
                                    removed=_attacks_from_mask(
                                        names, removal, index
                                    ),
                                    detail=(
                                        "labelling "
                                        + _render_labelling(names, pair)
                                        + " has the argument in but does not "
                                        "survive removing its incoming attacks"
                                    ),
                                )
                            )
    return violations


def _run_exhaustive_chunk(
    n: int,
    start: int,
    stop: int,
    semantics: tuple[str, ...],
    conventions: tuple[str, ...],
) -> tuple[int, int, list[Violation]]:
    sems = tuple(SemanticsId(s) for s in semantics)
    convs = tuple(DegreeConvention(c) for c in conventions)
    names = enumeration_names(n)
    edges = tuple(Attack(s, t) for s in names for t in names)
    graphs = 0
    checks = 0
    violations: list[Violation] = []
    for index in range(start, stop):
        graph = graph_from_index(names, edges, index)
        done, found = _check_graph(graph, sems, convs)
        graphs += 1
        checks += done
        violations.extend(found)
    return graphs, checks, violations


def _run_sample_chunk(
    n: int,
    seed: int,
    start: int,
    stop: int,
    semantics: tuple[str, ...],
    conventions: tuple[str, ...],
) -> tuple[int, int, list[Violation]]:
    sems = tuple(SemanticsId(s) for s in semantics)
    convs = tuple(DegreeConvention(c) for c in conventions)
    graphs = 0
    checks = 0
    violations: list[Violation] = []
    for index in range(start, stop):
        graph = random_graph(n, Xorshift64Star(sample_seed(seed, index)))
        done, found = _check_graph(graph, sems, convs)
        graphs += 1
        checks += done
        violations.extend(found)
    return graphs, checks, violations


def _worker_count(max_workers: int | None) -> int:
    if max_workers is not None:
        return max(1, max_workers)
    count = os.cpu_count() or 1
    env = os.environ.get(THREADS_ENV_VAR)
    if env is not None and env.strip():
        try:
            cap = int(env)
        except ValueError:
            raise ValueError(
                f"{THREADS_ENV_VAR} must be an integer, got {env!r}"
            ) from None
        count = min(count, max(1, cap))
    return count


def _chunks(total: int, size: int) -> Iterator[tuple[int, int]]:
    for start in range(0, total, size):
        yield start, min(start + size, total)


_EXHAUSTIVE_CHUNK = 4096
_SAMPLE_CHUNK = 256
_PARALLEL_THRESHOLD = 2048


def sweep(
    config: SweepConfig,
    max_workers: int | None = None,
    degree_fn: DegreeFn | None = None,
) -> VerificationReport:
    """Run every check over the configured graph population.

    Results are deterministic for a given configuration: violations come
    back in graph iteration order regardless of worker count.  Worker
    processes are used for large populations unless ``degree_fn`` is given
    (a replacement oracle may not survive pickling, so it forces the
    in-process path).
    """
    started = time.perf_counter()
    sem_values = tuple(s.value for s in config.semantics)
    conv_values = tuple(c.value for c in config.conventions)

    jobs: list[tuple] = []
    for n in range(1, config.max_n + 1):
        total = 1 << (n * n)
        for start, stop in _chunks(total, _EXHAUSTIVE_CHUNK):
            jobs.append(
                (_run_exhaustive_chunk, (n, start, stop, sem_values, conv_values))
            )
    if config.random_n is not None and config.samples:
        for start, stop in _chunks(config.samples, _SAMPLE_CHUNK):
            jobs.append(
                (
                    _run_sample_chunk,
                    (
                        config.random_n,
                        config.seed,
                        start,
                        stop,
                        sem_values,
                        conv_values,
                    ),
                )
            )

    total_graphs = sum(
        1 << (n * n) for n in range(1, config.max_n + 1)
    ) + (config.samples or 0)
    workers = _worker_count(max_workers)
    use_pool = (
        workers > 1 and degree_fn is None and total_graphs >= _PARALLEL_THRESHOLD
    )

    graphs_checked = 0
    checks_performed = 0
    violations: list[Violation] = []
    if use_pool:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, *args) for fn, args in jobs]
            # collect in submission order, not completion order
            for future in futures:
                graphs, checks, found = future.result()
                graphs_checked += graphs
                checks_performed += checks
                violations.extend(found)
    else:
        sems = config.semantics
        convs = config.conventions
        for n in range(1, config.max_n + 1):
            names = enumeration_names(n)
            edges = tuple(Attack(s, t) for s in names for t in names)
            for index in range(1 << (n * n)):
                graph = graph_from_index(names, edges, index)
                done, found = _check_graph(graph, sems, convs, degree_fn)
                graphs_checked += 1
                checks_performed += done
                violations.extend(found)
        if config.random_n is not None and config.samples:
            for index in range(config.samples):
                graph = random_graph(
                    config.random_n, Xorshift64Star(sample_seed(config.seed, index))
                )
                done, found = _check_graph(graph, sems, convs, degree_fn)
                graphs_checked += 1
                checks_performed += done
                violations.extend(found)

    violations.sort(key=Violation.sort_key)
    elapsed = timedelta(seconds=time.perf_counter() - started)
    return VerificationReport(
        graphs_checked=graphs_checked,
        checks_performed=checks_performed,
        violations=tuple(violations),
        elapsed=elapsed,
    )
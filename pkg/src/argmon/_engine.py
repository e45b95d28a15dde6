"""Shared bitmask solver.

Arguments are indexed 0..n-1 in the graph's canonical (sorted) order and
argument sets are int bitmasks.  A graph is reduced to its tuple of
per-argument attacker masks, which is the memo key: two graphs with the
same attacker masks have identical solutions, so the verification sweeps
(which re-solve many overlapping subgraphs) hit the cache constantly.

One pass over all 2^n subsets classifies each conflict-free set as a
complete and/or stable extension and each induced (in, out) assignment as
a legal labelling:

    in  argument: every attacker is out
    out argument: some attacker is in      (forced: out = attacked(in))
    und argument: not every attacker is out, and no attacker is in

Extensions and labellings are therefore computed by two independent
routes, which the verification layer cross-checks against each other and
against a naive set-based evaluator.

Semantics are addressed positionally (COMPLETE, PREFERRED, STABLE,
GROUNDED) and acceptability degrees are the integer codes 0..3 in
increasing order: rejected (0), weakly undecided (1), credulously
accepted (2), skeptically accepted (3).  Code vectors are stored for the
nonempty-extension case only; :func:`degree_code` substitutes the
convention's fill-in value when a semantics yields no extension at all.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .core import ArgumentationGraph

COMPLETE, PREFERRED, STABLE, GROUNDED = range(4)
SEMANTICS_COUNT = 4

DEG_REJECTED = 0
DEG_WEAK_UND = 1
DEG_CREDULOUS = 2
DEG_SKEPTICAL = 3

#: Hard cap on solvable graph size; 2^n subsets are enumerated per solve.
MAX_SOLVE_SIZE = 20

_CACHE_SIZE = 1 << 16


class Solved(NamedTuple):
    """Everything the higher layers need about one attacker-mask tuple."""

    n: int
    attackers: tuple[int, ...]
    attacked: tuple[int, ...]
    #: per semantics index: extension in-masks, ascending
    extensions: tuple[tuple[int, ...], ...]
    #: per semantics index: (in_mask, out_mask) labelling pairs, ascending;
    #: the lists are small, so membership tests scan them directly
    labellings: tuple[tuple[tuple[int, int], ...], ...]
    #: per semantics index: per-argument degree codes, or None when the
    #: semantics yields no extension for this graph
    degree_vectors: tuple[tuple[int, ...] | None, ...]


def attacker_masks(graph: ArgumentationGraph) -> tuple[int, ...]:
    """The solver key for ``graph``: bit j of entry i set iff j attacks i."""
    names = graph.arguments
    position = {name: i for i, name in enumerate(names)}
    masks = [0] * len(names)
    for source, target in graph.attacks:
        masks[position[target]] |= 1 << position[source]
    return tuple(masks)


def members_from_mask(names: tuple[str, ...], mask: int) -> frozenset[str]:
    out = []
    while mask:
        low = mask & -mask
        out.append(names[low.bit_length() - 1])
        mask ^= low
    return frozenset(out)


def mask_from_members(names: tuple[str, ...], members) -> int:
    position = {name: i for i, name in enumerate(names)}
    mask = 0
    for member in members:
        mask |= 1 << position[member]
    return mask


def solve_graph(graph: ArgumentationGraph) -> Solved:
    return solve(attacker_masks(graph))


@lru_cache(maxsize=_CACHE_SIZE)
def solve(attackers: tuple[int, ...]) -> Solved:
    n = len(attackers)
    if n > MAX_SOLVE_SIZE:
        raise ValueError(
            f"graph has {n} arguments; the solver caps out at {MAX_SOLVE_SIZE}"
        )
    full = (1 << n) - 1

    attacked = [0] * n
    for target, mask in enumerate(attackers):
        remaining = mask
        while remaining:
            low = remaining & -remaining
            attacked[low.bit_length() - 1] |= 1 << target
            remaining ^= low

    # attacked_by[s] = union of attacked[i] over i in s, built by doubling
    attacked_by = [0]
    for mask in attacked:
        attacked_by += [known | mask for known in attacked_by]

    # defended[out] = set of arguments all of whose attackers are in `out`,
    # memoized per distinct out-mask
    defended_for: dict[int, int] = {}

    def defended(out: int) -> int:
        cached = defended_for.get(out)
        if cached is None:
            cached = 0
            survivors = ~out
            for i in range(n):
                if not attackers[i] & survivors:
                    cached |= 1 << i
            defended_for[out] = cached
        return cached

    complete: list[int] = []
    stable: list[int] = []
    pairs: list[tuple[int, int]] = []
    for s, out in enumerate(attacked_by):
        if out & s:
            continue  # not conflict-free
        d = defended(out)
        if d == s:
            complete.append(s)
        if s | out == full:
            stable.append(s)
        # legal labelling: in-arguments all defended by the out set, and no
        # und argument defended by it (that would force the in label)
        if not (s & ~d) and not (d & ~(s | out)):
            pairs.append((s, out))

    grounded = 0
    while True:
        nxt = defended(attacked_by[grounded])
        if nxt == grounded:
            break
        grounded = nxt

    if len(complete) == 1:
        preferred = complete
    else:
        preferred = [
            s
            for s in complete
            if not any(t != s and s & t == s for t in complete)
        ]

    extensions = (
        tuple(complete),
        tuple(preferred),
        tuple(stable),
        (grounded,),
    )
    # Per-semantics labellings come from the labelling route alone (maximal
    # in, empty und, minimal in), never from the extension lists, so the two
    # routes stay independent and cross-checkable.
    all_pairs = tuple(pairs)
    if len(all_pairs) == 1:
        labellings = (
            all_pairs,
            all_pairs,
            all_pairs if all_pairs[0][0] | all_pairs[0][1] == full else (),
            all_pairs,
        )
    else:
        pair_ins = [p[0] for p in pairs]
        labellings = (
            all_pairs,
            tuple(
                p
                for p in pairs
                if not any(t != p[0] and p[0] & t == p[0] for t in pair_ins)
            ),
            tuple(p for p in pairs if p[0] | p[1] == full),
            tuple(
                p
                for p in pairs
                if not any(t != p[0] and t & p[0] == t for t in pair_ins)
            ),
        )
    # complete, preferred, and grounded frequently share one extension
    # list, so vectors are memoized on the list itself
    vector_for: dict[tuple[int, ...], tuple[int, ...] | None] = {}
    degree_vectors = []
    for exts in extensions:
        vector = vector_for.get(exts, _MISSING)
        if vector is _MISSING:
            vector = _degree_vector(n, exts, attacked_by)
            vector_for[exts] = vector
        degree_vectors.append(vector)
    return Solved(
        n=n,
        attackers=attackers,
        attacked=tuple(attacked),
        extensions=extensions,
        labellings=labellings,
        degree_vectors=tuple(degree_vectors),
    )


_MISSING = object()


def _degree_vector(
    n: int, extensions: tuple[int, ...], attacked_by: list[int]
) -> tuple[int, ...] | None:
    """Degree codes when at least one extension exists, else None.

    skeptical: in every extension; credulous: in some but not all;
    rejected: in none and attacked by some extension; weakly undecided:
    in none and attacked by no extension.
    """
    if not extensions:
        return None
    if len(extensions) == 1:
        ext = extensions[0]
        attacked = attacked_by[ext]
        return tuple(
            DEG_SKEPTICAL
            if ext >> i & 1
            else DEG_REJECTED
            if attacked >> i & 1
            else DEG_WEAK_UND
            for i in range(n)
        )
    in_all = (1 << n) - 1
    in_some = 0
    attacked_some = 0
    for ext in extensions:
        in_all &= ext
        in_some |= ext
        attacked_some |= attacked_by[ext]
    codes = []
    for i in range(n):
        bit = 1 << i
        if in_all & bit:
            codes.append(DEG_SKEPTICAL)
        elif in_some & bit:
            codes.append(DEG_CREDULOUS)
        elif attacked_some & bit:
            codes.append(DEG_REJECTED)
        else:
            codes.append(DEG_WEAK_UND)
    return tuple(codes)


def degree_code(
    solved: Solved, semantics_index: int, alternative: bool, argument_index: int
) -> int:
    """Degree code for one argument under one semantics and convention.

    The two conventions only disagree on graphs where the semantics has no
    extension: every argument then gets the maximum degree under the
    standard convention and the minimum under the alternative one.
    """
    vector = solved.degree_vectors[semantics_index]
    if vector is None:
        return DEG_REJECTED if alternative else DEG_SKEPTICAL
    return vector[argument_index]


def clear_cache() -> None:
    solve.cache_clear()
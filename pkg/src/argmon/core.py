"""Argumentation graph model, attack-set algebra, and small-graph generators.

An argumentation graph is a finite set of named arguments together with a
set of directed attack edges.  Everything here is an immutable value:
graphs compare structurally, and every operation returns a new graph
instead of mutating one.  That makes all of it safe to share between
concurrent workers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

ARGUMENT_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")

#: Largest ``n`` accepted by :func:`enumerate_graphs`.  Above this the space
#: (2^(n*n) graphs) is out of reach anyway, and keeping n single-digit keeps
#: the generated names a1..an in lexicographic = numeric order.
MAX_ENUMERATION_SIZE = 9


class GraphError(ValueError):
    """A graph-level domain error: malformed id, unknown endpoint, bad subset."""


class Attack(NamedTuple):
    """A directed attack edge: ``source`` attacks ``target``."""

    source: str
    target: str


def _as_attack(value: "Attack | tuple[str, str]") -> Attack:
    if isinstance(value, Attack):
        return value
    source, target = value
    return Attack(source, target)


@dataclass(frozen=True, repr=False)
class ArgumentationGraph:
    """An immutable directed attack graph over a finite set of arguments.

    ``arguments`` is stored sorted and duplicate-free; ``attacks`` is a
    frozenset of :class:`Attack`.  Construction canonicalizes whatever
    iterables it is given and rejects attacks whose endpoints are not
    declared arguments.
    """

    arguments: tuple[str, ...]
    attacks: frozenset[Attack]
    _attacker_sets: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False
    )

    def __init__(
        self,
        arguments: Iterable[str],
        attacks: Iterable[Attack | tuple[str, str]] = (),
    ) -> None:
        names = tuple(sorted(set(arguments)))
        for name in names:
            if not isinstance(name, str) or not ARGUMENT_TOKEN.match(name):
                raise GraphError(
                    f"invalid argument id {name!r}: expected a non-empty "
                    "token of letters, digits, or underscores"
                )
        edges = frozenset(_as_attack(a) for a in attacks)
        universe = set(names)
        for edge in edges:
            if edge.source not in universe or edge.target not in universe:
                raise GraphError(
                    f"attack ({edge.source},{edge.target}) references an "
                    "argument that is not in the graph"
                )
        object.__setattr__(self, "arguments", names)
        object.__setattr__(self, "attacks", edges)
        incoming: dict[str, set[str]] = {name: set() for name in names}
        for edge in edges:
            incoming[edge.target].add(edge.source)
        object.__setattr__(
            self,
            "_attacker_sets",
            {name: frozenset(srcs) for name, srcs in incoming.items()},
        )

    # -- queries ---------------------------------------------------------

    def attackers(self, argument: str) -> frozenset[str]:
        """All arguments with an attack edge into ``argument``."""
        self._require_argument(argument)
        return self._attacker_sets[argument]

    def incoming_attacks(self, argument: str) -> frozenset[Attack]:
        """The attack edges terminating at ``argument``."""
        self._require_argument(argument)
        return frozenset(
            Attack(src, argument) for src in self._attacker_sets[argument]
        )

    def is_conflict_free(self, subset: Iterable[str]) -> bool:
        """True iff no member of ``subset`` attacks a member of ``subset``.

        A self-attacker is in conflict with itself, so a set containing one
        is never conflict-free.
        """
        members = self._require_subset(subset)
        return all(self._attacker_sets[a].isdisjoint(members) for a in members)

    def defends(self, subset: Iterable[str], argument: str) -> bool:
        """True iff every attacker of ``argument`` is attacked by ``subset``."""
        members = self._require_subset(subset)
        self._require_argument(argument)
        return all(
            not self._attacker_sets[attacker].isdisjoint(members)
            for attacker in self._attacker_sets[argument]
        )

    # -- attack-set algebra ----------------------------------------------

    def remove_attacks(
        self, removed: Iterable[Attack | tuple[str, str]]
    ) -> "ArgumentationGraph":
        """Graph with ``removed`` deleted; every removed edge must exist."""
        edges = frozenset(_as_attack(a) for a in removed)
        missing = edges - self.attacks
        if missing:
            listed = ", ".join(f"({s},{t})" for s, t in sorted(missing))
            raise GraphError(f"cannot remove attacks not in the graph: {listed}")
        return ArgumentationGraph(self.arguments, self.attacks - edges)

    def add_attacks(
        self, added: Iterable[Attack | tuple[str, str]]
    ) -> "ArgumentationGraph":
        """Graph with ``added`` unioned in; endpoints must already exist."""
        edges = frozenset(_as_attack(a) for a in added)
        return ArgumentationGraph(self.arguments, self.attacks | edges)

    # -- plumbing ----------------------------------------------------------

    def _require_argument(self, argument: str) -> None:
        if argument not in self._attacker_sets:
            raise GraphError(f"argument {argument!r} is not in the graph")

    def _require_subset(self, subset: Iterable[str]) -> frozenset[str]:
        members = frozenset(subset)
        unknown = [a for a in members if a not in self._attacker_sets]
        if unknown:
            raise GraphError(
                f"arguments not in the graph: {', '.join(sorted(unknown))}"
            )
        return members

    def __repr__(self) -> str:  # deterministic, unlike frozenset's repr
        edges = ", ".join(f"{s}>{t}" for s, t in sorted(self.attacks))
        return f"ArgumentationGraph([{', '.join(self.arguments)}], [{edges}])"


def build_graph(
    arguments: Iterable[str],
    attacks: Iterable[Attack | tuple[str, str]] = (),
) -> ArgumentationGraph:
    """Validate and build a graph from argument ids and attack pairs."""
    return ArgumentationGraph(arguments, attacks)


# -- exhaustive enumeration -----------------------------------------------


def enumeration_names(n: int) -> tuple[str, ...]:
    """The fixed labeled argument set a1..an used by the generators."""
    return tuple(f"a{i}" for i in range(1, n + 1))


def enumerate_graphs(n: int) -> Iterator[ArgumentationGraph]:
    """Yield every digraph on the labeled argument set a1..an.

    Self-loops included, so there are exactly ``2**(n*n)`` graphs.  The
    order is deterministic: the n*n possible edges are sorted
    lexicographically by (source, target), edge k is present iff bit k of
    the graph's index is set, and indices run from 0 to 2**(n*n)-1.
    """
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise ValueError(
            f"enumeration size must be between 1 and {MAX_ENUMERATION_SIZE}, got {n}"
        )
    names = enumeration_names(n)
    edges = tuple(Attack(s, t) for s in names for t in names)
    for index in range(1 << (n * n)):
        yield graph_from_index(names, edges, index)


def graph_from_index(
    names: tuple[str, ...], edges: tuple[Attack, ...], index: int
) -> ArgumentationGraph:
    """The graph whose attack set is the bit pattern ``index`` over ``edges``."""
    attacks = []
    mask = index
    while mask:
        low = mask & -mask
        attacks.append(edges[low.bit_length() - 1])
        mask ^= low
    return ArgumentationGraph(names, attacks)


# -- deterministic random graphs -------------------------------------------

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def _splitmix64_mix(value: int) -> int:
    z = value & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class Xorshift64Star:
    """xorshift64* with splitmix64 seeding.

    Pure 64-bit integer arithmetic, so two runs with the same seed produce
    the same stream on every platform.  A zero state would be absorbing,
    hence the fixed non-zero fallback after mixing.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        state = _splitmix64_mix(seed & _MASK64)
        self._state = state or 0x9E3779B97F4A7C15

    def next64(self) -> int:
        x = self._state
        x ^= (x >> 12)
        x = (x ^ (x << 25)) & _MASK64
        x ^= (x >> 27)
        self._state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def next_bit(self) -> int:
        return self.next64() >> 63

    def next_below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound); bound must be positive."""
        return self.next64() % bound


def sample_seed(seed: int, index: int) -> int:
    """The derived 64-bit seed for sample number ``index`` (0-based).

    Samples get independent substreams by walking the splitmix64 counter,
    which lets workers jump straight to any sample without replaying the
    stream.
    """
    return (seed + (index + 1) * _SPLITMIX_GAMMA) & _MASK64


def random_graph(n: int, rng: Xorshift64Star) -> ArgumentationGraph:
    """One random digraph on a1..an: each ordered pair (self-loops included)
    is an attack independently with probability 1/2, one PRNG draw per edge
    in lexicographic (source, target) order."""
    names = tuple(sorted(enumeration_names(n)))
    attacks = [
        Attack(s, t) for s in names for t in names if rng.next_bit()
    ]
    return ArgumentationGraph(names, attacks)


def sample_graphs(n: int, count: int, seed: int) -> Iterator[ArgumentationGraph]:
    """``count`` deterministic random graphs of size ``n`` for ``seed``."""
    if n < 1:
        raise ValueError(f"sample size must be positive, got {n}")
    if count < 0:
        raise ValueError(f"sample count must be non-negative, got {count}")
    for index in range(count):
        yield random_graph(n, Xorshift64Star(sample_seed(seed, index)))

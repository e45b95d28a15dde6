"""Four-valued acceptability degrees.

Under a given semantics an argument is skeptically accepted (degree 1) if
it is in every extension, credulously accepted (1/2) if it is in some but
not all, weakly undecided (3/10) if it is in none and no extension attacks
it, and rejected (0) if it is in none and some extension attacks it.

When a semantics yields no extension at all (only stable can), the two
conventions diverge: the standard convention grades every argument 1, the
alternative convention grades every argument 0.  Degrees are exact enum
values ordered ZERO < WEAK_UND < CREDULOUS < SKEPTICAL; comparisons
never go through floats.
"""

from __future__ import annotations

from enum import Enum, IntEnum
from fractions import Fraction

from . import _engine
from .core import ArgumentationGraph
from .semantics import SemanticsId, _semantics_index

__all__ = [
    "AcceptabilityDegree",
    "DegreeConvention",
    "degree",
    "degree_table",
]


class AcceptabilityDegree(IntEnum):
    """The four degrees, ordered so that bigger means more accepted."""

    ZERO = 0
    WEAK_UND = 1
    CREDULOUS = 2
    SKEPTICAL = 3

    @property
    def numeric(self) -> Fraction:
        """Exact numeric value: 0, 3/10, 1/2, or 1."""
        return _NUMERIC[self]

    @property
    def json_value(self) -> int | float:
        """The value used in JSON output: 0, 0.3, 0.5, or 1."""
        return _JSON_VALUE[self]


_NUMERIC = {
    AcceptabilityDegree.ZERO: Fraction(0),
    AcceptabilityDegree.WEAK_UND: Fraction(3, 10),
    AcceptabilityDegree.CREDULOUS: Fraction(1, 2),
    AcceptabilityDegree.SKEPTICAL: Fraction(1),
}

_JSON_VALUE: dict[AcceptabilityDegree, int | float] = {
    AcceptabilityDegree.ZERO: 0,
    AcceptabilityDegree.WEAK_UND: 0.3,
    AcceptabilityDegree.CREDULOUS: 0.5,
    AcceptabilityDegree.SKEPTICAL: 1,
}


class DegreeConvention(str, Enum):
    """How to grade arguments when a semantics yields no extension."""

    STANDARD = "standard"
    ALTERNATIVE = "alternative"


def degree(
    graph: ArgumentationGraph,
    semantics: SemanticsId | str,
    convention: DegreeConvention | str,
    argument: str,
) -> AcceptabilityDegree:
    """The acceptability degree of one argument."""
    graph._require_argument(argument)
    solved = _engine.solve_graph(graph)
    code = _engine.degree_code(
        solved,
        _semantics_index(semantics),
        DegreeConvention(convention) is DegreeConvention.ALTERNATIVE,
        graph.arguments.index(argument),
    )
    return AcceptabilityDegree(code)


def degree_table(
    graph: ArgumentationGraph,
    semantics: SemanticsId | str,
    convention: DegreeConvention | str,
) -> dict[str, AcceptabilityDegree]:
    """Degrees for every argument, keyed in canonical argument order."""
    solved = _engine.solve_graph(graph)
    index = _semantics_index(semantics)
    alternative = DegreeConvention(convention) is DegreeConvention.ALTERNATIVE
    return {
        name: AcceptabilityDegree(
            _engine.degree_code(solved, index, alternative, i)
        )
        for i, name in enumerate(graph.arguments)
    }
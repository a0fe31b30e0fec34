"""Reference algebras used by the tests, the fixtures and the CLI examples."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import TriAlgebra, direct_sum, from_binary_leibniz, opposite
from .grading import GradedAlgebra
from .groups import GroupSpec
from .linalg import Subspace, span, unit_vec

Z = GroupSpec(1)
Z2 = GroupSpec(2)

# basis h, p, q, e, f with degrees 0, 1, -1, 2, -2
EXAMPLE_LABELS = ("h", "p", "q", "e", "f")
EXAMPLE_DEGREES = (0, 1, -1, 2, -2)

EXAMPLE_BINARY = {
    ("e", "h"): {"e": 2},
    ("h", "f"): {"f": 2},
    ("e", "f"): {"h": 1},
    ("h", "e"): {"e": -2},
    ("f", "h"): {"f": -2},
    ("f", "e"): {"h": -1},
    ("p", "h"): {"p": 1},
    ("p", "f"): {"q": 1},
    ("q", "h"): {"q": -1},
    ("q", "e"): {"p": -1},
}

EXAMPLE_TERNARY = {
    ("h", "h", "e"): {"e": 4},
    ("h", "h", "f"): {"f": 4},
    ("f", "h", "e"): {"h": 2},
    ("e", "h", "f"): {"h": 2},
    ("e", "e", "f"): {"e": 2},
    ("f", "f", "e"): {"f": 2},
    ("h", "e", "h"): {"e": -4},
    ("h", "f", "h"): {"f": -4},
    ("f", "e", "h"): {"h": -2},
    ("e", "f", "h"): {"h": -2},
    ("e", "f", "e"): {"e": -2},
    ("f", "e", "f"): {"f": -2},
    ("q", "h", "e"): {"p": 2},
    ("p", "e", "f"): {"p": 1},
    ("q", "f", "e"): {"q": 1},
    ("p", "h", "f"): {"q": 2},
    ("q", "e", "h"): {"p": -2},
    ("p", "f", "e"): {"p": -1},
    ("q", "e", "f"): {"q": -1},
    ("p", "f", "h"): {"q": -2},
}


def _index_table(labels, table) -> dict[tuple[int, int], tuple]:
    index = {name: i for i, name in enumerate(labels)}
    out = {}
    for (a, b), value in table.items():
        v = [Fraction(0)] * len(labels)
        for name, c in value.items():
            v[index[name]] += Fraction(c)
        out[(index[a], index[b])] = tuple(v)
    return out


def example_binary_table() -> dict[tuple[int, int], tuple]:
    """The binary table on ``h, p, q, e, f``; it is right Leibniz."""
    return _index_table(EXAMPLE_LABELS, EXAMPLE_BINARY)


def example_algebra() -> TriAlgebra:
    """The five-dimensional ternary table with 20 nonzero products."""
    return TriAlgebra.from_labels(EXAMPLE_LABELS, EXAMPLE_TERNARY)


def example() -> GradedAlgebra:
    return GradedAlgebra.build(example_algebra(), Z, EXAMPLE_DEGREES)


def example_opposite() -> GradedAlgebra:
    """Reversed product ``[z, y, x]``; unlike the original it satisfies the identity."""
    return GradedAlgebra.build(opposite(example_algebra()), Z, EXAMPLE_DEGREES)


def example_j() -> Subspace:
    """``span{p, q}``."""
    return span([unit_vec(5, 1), unit_vec(5, 2)], 5)


def example_mod4() -> GradedAlgebra:
    return GradedAlgebra.build(example_algebra(), GroupSpec(0, (4,)), [d % 4 for d in EXAMPLE_DEGREES])


def two_axis_sum() -> GradedAlgebra:
    """Two copies of :func:`example`, graded by Z^2 along separate axes."""
    A = example_algebra()
    S = direct_sum(A, A)
    degrees = [[d, 0] for d in EXAMPLE_DEGREES] + [[0, d] for d in EXAMPLE_DEGREES]
    return GradedAlgebra.build(S, Z2, degrees)


def two_axis_j() -> Subspace:
    return span([unit_vec(10, i) for i in (1, 2, 6, 7)], 10)


def same_degree_sum() -> GradedAlgebra:
    """Two copies with identical Z-degrees; components are 2-dimensional."""
    A = example_algebra()
    return GradedAlgebra.build(direct_sum(A, A), Z, list(EXAMPLE_DEGREES) * 2)


def abelian(dim: int = 3, degrees=None, group: GroupSpec = Z) -> GradedAlgebra:
    if degrees is None:
        degrees = [0] + [(-1) ** i * ((i + 1) // 2) for i in range(1, dim)]
    return GradedAlgebra.build(TriAlgebra(dim, {}), group, degrees)


def nilpotent2(degrees=(1, 3)) -> GradedAlgebra:
    """``[e1, e1, e1] = e2``.  Compatible gradings need ``deg e2 = 3 deg e1``."""
    A = TriAlgebra(2, {(0, 0, 0): (0, 1)})
    return GradedAlgebra.build(A, Z, list(degrees))


def skew_3lie() -> TriAlgebra:
    """``[e1, e2, e3] = e4``, extended alternatingly."""
    structure = {}
    for perm in itertools.permutations(range(3)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        structure[perm] = (0, 0, 0, (-1) ** inversions)
    return TriAlgebra(4, structure)


def skew_3lie_graded() -> GradedAlgebra:
    return GradedAlgebra.build(skew_3lie(), GroupSpec(3), [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])


def sl2_lift() -> GradedAlgebra:
    """``[[x, y], z]`` on sl2 with basis e, h, f."""
    table = _index_table(
        ("e", "h", "f"),
        {
            ("h", "e"): {"e": 2}, ("e", "h"): {"e": -2},
            ("h", "f"): {"f": -2}, ("f", "h"): {"f": 2},
            ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
        },
    )
    A = from_binary_leibniz(3, table, ("e", "h", "f"), side="left")
    return GradedAlgebra.build(A, Z, [2, 0, -2])


def example_left_lift() -> GradedAlgebra:
    """Left lift of the opposite binary table ``[x, y]_op = [y, x]``."""
    table = {(j, i): v for (i, j), v in example_binary_table().items()}
    A = from_binary_leibniz(5, table, EXAMPLE_LABELS, side="left")
    return GradedAlgebra.build(A, Z, EXAMPLE_DEGREES)


def filiform_lift(n: int = 5) -> GradedAlgebra:
    """Left lift of the model filiform Lie algebra ``[e1, ei] = e(i+1)``."""
    table = {}
    for i in range(1, n - 1):
        table[(0, i)] = unit_vec(n, i + 1)
        table[(i, 0)] = tuple(-x for x in unit_vec(n, i + 1))
    A = from_binary_leibniz(n, table, side="left")
    degrees = [[1, 0]] + [[i - 1, 1] for i in range(1, n)]
    return GradedAlgebra.build(A, Z2, degrees)


def graded_catalog() -> dict[str, GradedAlgebra]:
    """Every graded fixture, keyed by name."""
    return {
        "example": example(),
        "example_opposite": example_opposite(),
        "example_mod4": example_mod4(),
        "example_left_lift": example_left_lift(),
        "two_axis_sum": two_axis_sum(),
        "same_degree_sum": same_degree_sum(),
        "abelian": abelian(),
        "nilpotent2": nilpotent2(),
        "skew_3lie": skew_3lie_graded(),
        "sl2_lift": sl2_lift(),
        "filiform_lift": filiform_lift(),
    }

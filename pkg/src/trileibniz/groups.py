"""Finitely generated abelian groups ``Z^r + Z/m_1 + ... + Z/m_t``.

Written additively.  Elements order by free part (lexicographic), then
torsion part; that order is used for every deterministic tie-break in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GroupMismatch, InvalidGroupElement


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int = 0
    torsion_moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_moduli", tuple(int(m) for m in self.torsion_moduli))
        if self.free_rank < 0:
            raise InvalidGroupElement(f"free rank must be non-negative, got {self.free_rank}")
        for m in self.torsion_moduli:
            if m < 2:
                raise InvalidGroupElement(f"torsion moduli must be >= 2, got {m}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_moduli

    def element(self, free: Iterable[int] = (), torsion: Iterable[int] = ()) -> GroupElement:
        """Build an element, reducing torsion coordinates into ``[0, m)``."""
        free = tuple(int(x) for x in free)
        torsion = tuple(int(x) for x in torsion)
        if len(free) != self.free_rank:
            raise InvalidGroupElement(
                f"free part has length {len(free)}, expected {self.free_rank}"
            )
        if len(torsion) != len(self.torsion_moduli):
            raise InvalidGroupElement(
                f"torsion part has length {len(torsion)}, expected {len(self.torsion_moduli)}"
            )
        torsion = tuple(t % m for t, m in zip(torsion, self.torsion_moduli))
        return GroupElement(free, torsion, self)

    def from_flat(self, coords: Sequence[int]) -> GroupElement:
        """Element from one flat list: free coordinates followed by torsion ones."""
        coords = list(coords)
        r = self.free_rank
        if len(coords) != r + len(self.torsion_moduli):
            raise InvalidGroupElement(
                f"degree {coords} has {len(coords)} coordinates, "
                f"expected {r + len(self.torsion_moduli)}"
            )
        return self.element(coords[:r], coords[r:])

    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.free_rank, (0,) * len(self.torsion_moduli), self)

    def is_valid(self, a: GroupElement) -> bool:
        return (
            len(a.free) == self.free_rank
            and len(a.torsion) == len(self.torsion_moduli)
            and all(0 <= t < m for t, m in zip(a.torsion, self.torsion_moduli))
        )

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{m}" for m in self.torsion_moduli]
        return " + ".join(parts) if parts else "trivial"


@dataclass(frozen=True, order=True)
class GroupElement:
    free: tuple[int, ...]
    torsion: tuple[int, ...]
    spec: GroupSpec = field(compare=False, repr=False)

    def __add__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)

    def __neg__(self) -> GroupElement:
        return inverse(self)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return compose(self, inverse(other))

    @property
    def is_identity(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def flat(self) -> list[int]:
        return [*self.free, *self.torsion]

    def __str__(self):
        coords = self.flat()
        if len(coords) == 1:
            return str(coords[0])
        return "(" + ",".join(str(c) for c in coords) + ")"


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.spec != b.spec:
        raise GroupMismatch(f"cannot compose elements of {a.spec} and {b.spec}")
    free = tuple(x + y for x, y in zip(a.free, b.free))
    torsion = tuple((x + y) % m for x, y, m in zip(a.torsion, b.torsion, a.spec.torsion_moduli))
    return GroupElement(free, torsion, a.spec)


def inverse(a: GroupElement) -> GroupElement:
    torsion = tuple((-x) % m for x, m in zip(a.torsion, a.spec.torsion_moduli))
    return GroupElement(tuple(-x for x in a.free), torsion, a.spec)


def sum_elements(spec: GroupSpec, elements: Iterable[GroupElement]) -> GroupElement:
    total = spec.identity()
    for g in elements:
        total = compose(total, g)
    return total


def symmetrize(elements: Iterable[GroupElement]) -> frozenset[GroupElement]:
    """``S u -S``: the only place the package builds ``±Sigma`` sets."""
    elements = list(elements)
    return frozenset(elements) | frozenset(inverse(g) for g in elements)


def is_symmetric(elements: Iterable[GroupElement]) -> bool:
    s = frozenset(elements)
    return all(inverse(g) in s for g in s)

"""Group gradings on a homogeneous basis, and the supports they induce."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .algebra import TriAlgebra, basis_ad, mat_mul
from .errors import GroupMismatch, InvalidGroupElement, MalformedInput
from .groups import GroupElement, GroupSpec, is_symmetric, sum_elements
from .linalg import Subspace, span, unit_vec


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    algebra: TriAlgebra
    group: GroupSpec
    degrees: tuple[GroupElement, ...]

    def __post_init__(self):
        degrees = tuple(self.degrees)
        if len(degrees) != self.algebra.dim:
            raise MalformedInput(f"{len(degrees)} degrees for a {self.algebra.dim}-dimensional algebra")
        for d in degrees:
            if d.spec != self.group:
                raise GroupMismatch(f"degree {d} belongs to {d.spec}, not {self.group}")
            if not self.group.is_valid(d):
                raise InvalidGroupElement(f"degree {d} is not a valid element of {self.group}")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def build(cls, algebra: TriAlgebra, group: GroupSpec, degrees: Sequence[Sequence[int] | int]):
        """Degrees as flat coordinate lists (or bare ints for rank-1 free groups)."""
        elems = [group.from_flat([d] if isinstance(d, int) else d) for d in degrees]
        return cls(algebra, group, tuple(elems))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def identity(self) -> GroupElement:
        return self.group.identity()

    @cached_property
    def component_indices(self) -> dict[GroupElement, tuple[int, ...]]:
        out: dict[GroupElement, list[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return {g: tuple(out[g]) for g in sorted(out)}

    @cached_property
    def components(self) -> dict[GroupElement, Subspace]:
        n = self.dim
        return {g: span([unit_vec(n, i) for i in idx], n) for g, idx in self.component_indices.items()}

    def component(self, g: GroupElement) -> Subspace:
        return self.components.get(g) or Subspace.zero(self.dim)

    def indices_of(self, g: GroupElement) -> tuple[int, ...]:
        return self.component_indices.get(g, ())

    @property
    def t1(self) -> Subspace:
        """The identity-degree component."""
        return self.component(self.identity)

    @cached_property
    def sigma1(self) -> frozenset[GroupElement]:
        return frozenset(g for g in self.component_indices if not g.is_identity)

    @cached_property
    def lie_components(self) -> dict[GroupElement, Subspace]:
        """``L_g``: span of the operators ``ad(e_i, e_j)`` with ``deg i + deg j = g``."""
        n = self.dim
        buckets: dict[GroupElement, list] = {}
        for (i, j) in {(i, j) for (i, j, _k) in self.algebra.structure}:
            op = basis_ad(self.algebra, i, j)
            buckets.setdefault(self.degrees[i] + self.degrees[j], []).append(op.flat())
        return {g: span(v, n * n) for g, v in sorted(buckets.items())}

    @cached_property
    def sigma0(self) -> frozenset[GroupElement]:
        return frozenset(g for g, s in self.lie_components.items() if not g.is_identity and not s.is_zero())

    def degree_of(self, v: Sequence) -> GroupElement | None:
        """Degree of a nonzero homogeneous vector, else ``None``."""
        degs = {self.degrees[i] for i, c in enumerate(v) if c}
        return degs.pop() if len(degs) == 1 else None

    def sorted_support(self) -> list[GroupElement]:
        return sorted(self.sigma1)


@dataclass(frozen=True)
class GradingViolation:
    indices: tuple[int, int, int]
    required: GroupElement
    found: tuple[GroupElement, ...]


def check_grading_compat(GA: GradedAlgebra) -> list[GradingViolation]:
    bad = []
    for (i, j, k), v in GA.algebra.structure.items():
        target = GA.degrees[i] + GA.degrees[j] + GA.degrees[k]
        found = tuple(sorted({GA.degrees[l] for l, c in enumerate(v) if c}))
        if found != (target,):
            bad.append(GradingViolation((i, j, k), target, found))
    return bad


def support_sigma1(GA: GradedAlgebra) -> frozenset[GroupElement]:
    return GA.sigma1


def support_sigma0(GA: GradedAlgebra) -> frozenset[GroupElement]:
    return GA.sigma0


@dataclass(frozen=True)
class SupportData:
    sigma1: tuple[GroupElement, ...]
    sigma0: tuple[GroupElement, ...]
    sigma1_symmetric: bool = field(init=False)
    sigma0_symmetric: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma1", tuple(sorted(self.sigma1)))
        object.__setattr__(self, "sigma0", tuple(sorted(self.sigma0)))
        object.__setattr__(self, "sigma1_symmetric", is_symmetric(self.sigma1))
        object.__setattr__(self, "sigma0_symmetric", is_symmetric(self.sigma0))


def support_data(GA: GradedAlgebra) -> SupportData:
    return SupportData(tuple(GA.sigma1), tuple(GA.sigma0))


def is_maximal_length(GA: GradedAlgebra) -> bool:
    return all(len(GA.indices_of(g)) == 1 for g in GA.sigma1)


def component_dimensions(GA: GradedAlgebra) -> dict[GroupElement, int]:
    return {g: len(idx) for g, idx in GA.component_indices.items()}


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given on flat coordinates: ``target = matrix @ source``.

    ``matrix`` has one row per target coordinate (free then torsion) and one
    column per source coordinate.
    """

    source: GroupSpec
    target: GroupSpec
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        nt = self.target.free_rank + len(self.target.torsion_moduli)
        ns = self.source.free_rank + len(self.source.torsion_moduli)
        if len(rows) != nt or any(len(r) != ns for r in rows):
            raise InvalidGroupElement(f"hom matrix must be {nt}x{ns}")
        # torsion generator of order m must map to an element killed by m
        for s, m in enumerate(self.source.torsion_moduli):
            col = [rows[t][self.source.free_rank + s] for t in range(nt)]
            image = self.target.from_flat([m * c for c in col])
            if not image.is_identity:
                raise InvalidGroupElement(
                    f"ill-defined torsion image: generator of order {m} maps to an element of order not dividing {m}"
                )

    def __call__(self, g: GroupElement) -> GroupElement:
        x = g.flat()
        return self.target.from_flat([sum(a * b for a, b in zip(row, x)) for row in self.matrix])

    @classmethod
    def identity(cls, spec: GroupSpec) -> GroupHom:
        n = spec.free_rank + len(spec.torsion_moduli)
        return cls(spec, spec, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def to_trivial(cls, spec: GroupSpec) -> GroupHom:
        n = spec.free_rank + len(spec.torsion_moduli)
        return cls(spec, GroupSpec(), ())


def regrade(GA: GradedAlgebra, hom: GroupHom) -> GradedAlgebra:
    if hom.source != GA.group:
        raise GroupMismatch(f"hom source {hom.source} differs from grading group {GA.group}")
    out = GradedAlgebra(GA.algebra, hom.target, tuple(hom(d) for d in GA.degrees))
    bad = check_grading_compat(out)
    if bad and not check_grading_compat(GA):
        raise AssertionError(f"regrading broke compatibility at {bad[0].indices}")
    return out


def lie_bracket_grading_defects(GA: GradedAlgebra) -> list[tuple[GroupElement, GroupElement]]:
    """Pairs (g, h) with ``[L_g, L_h]`` not inside ``L_{g+h}``."""
    n = GA.dim
    comps = GA.lie_components
    bad = []
    for (g, Lg), (h, Lh) in itertools.product(comps.items(), repeat=2):
        target = comps.get(g + h) or Subspace.zero(n * n)
        for a in Lg.rows:
            A = [a[r * n:(r + 1) * n] for r in range(n)]
            for b in Lh.rows:
                B = [b[r * n:(r + 1) * n] for r in range(n)]
                c = [x - y for x, y in zip(_flat(mat_mul(A, B)), _flat(mat_mul(B, A)))]
                if not target.contains(tuple(c)):
                    bad.append((g, h))
                    break
            else:
                continue
            break
    return bad


def _flat(m):
    return tuple(x for row in m for x in row)


def total_degree(GA: GradedAlgebra, *indices: int) -> GroupElement:
    return sum_elements(GA.group, (GA.degrees[i] for i in indices))

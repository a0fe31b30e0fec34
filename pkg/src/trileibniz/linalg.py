"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`; matrices are sequences of
rows.  A :class:`Subspace` always stores its basis in reduced row-echelon
form, so two subspaces are equal exactly when their matrices are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch

Vec = tuple  # tuple[Fraction, ...]
Matrix = Sequence[Sequence[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point scalars are not accepted; use Fraction or a 'p/q' string")
    return Fraction(x)


def vec(coords: Iterable) -> Vec:
    return tuple(as_scalar(c) for c in coords)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def is_zero(v: Vec) -> bool:
    return not any(v)


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vec) -> Vec:
    return tuple(c * a for a in v)


def mat_vec(m: Matrix, v: Vec) -> Vec:
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in m)


def rref(rows: Iterable[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; zero rows are dropped.  Returns (rows, pivots)."""
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a matrix with {ncols} columns")
    pivots = []
    prow = 0
    for c in range(ncols):
        if prow == len(m):
            break
        for i in range(prow, len(m)):
            if m[i][c] != 0:
                break
        else:
            continue
        m[prow], m[i] = m[i], m[prow]
        p = m[prow][c]
        if p != 1:
            m[prow] = [x / p for x in m[prow]]
        pr = m[prow]
        for i in range(len(m)):
            if i != prow:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], pr)]
        pivots.append(c)
        prow += 1
    return m[:prow], pivots


def nullspace(m: Matrix, ncols: int) -> list[Vec]:
    """Basis of ``{x : m x = 0}`` (one vector per free column)."""
    rows, pivots = rref(m, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, pc in zip(rows, pivots):
            x[pc] = -r[f]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    rows: tuple[Vec, ...] = ()

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, tuple(unit_vec(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(r) if x) for r in self.rows]

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient_dim

    def _check(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return span(self.rows + other.rows, self.ambient_dim)

    def intersect(self, other: Subspace) -> Subspace:
        """Zassenhaus: reduce ``[a | a]`` and ``[b | 0]``; rows ``[0 | v]`` span the meet."""
        self._check(other)
        n = self.ambient_dim
        if self.is_zero() or other.is_zero():
            return Subspace.zero(n)
        block = [list(r) + list(r) for r in self.rows]
        block += [list(r) + [ZERO] * n for r in other.rows]
        rows, pivots = rref(block, 2 * n)
        meet = [r[n:] for r, p in zip(rows, pivots) if p >= n]
        return span(meet, n)

    def contains(self, item: Union[Vec, Subspace]) -> bool:
        if isinstance(item, Subspace):
            self._check(item)
            return all(self.contains(r) for r in item.rows)
        if len(item) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(item)} in dimension {self.ambient_dim}")
        return is_zero(self.reduce(item))

    def __contains__(self, item) -> bool:
        return self.contains(item)

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)

    def reduce(self, v: Vec) -> Vec:
        """Remainder of ``v`` after eliminating this subspace's pivot columns."""
        v = list(v)
        for r, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, r)]
        return tuple(v)

    def complement_in(self, outer: Subspace) -> Subspace:
        """Canonical complement of ``self`` inside ``outer``.

        Extends the current basis with rows of ``outer`` in order, keeping a
        row whenever it is independent of everything kept so far.
        """
        self._check(outer)
        if not outer.contains(self):
            raise ValueError("complement_in requires self to be contained in outer")
        acc = self
        extra = []
        for r in outer.rows:
            if not acc.contains(r):
                extra.append(r)
                acc = span(acc.rows + (r,), self.ambient_dim)
        return span(extra, self.ambient_dim)

    def as_lists(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, rows={self.as_lists()})"


def span(vectors: Iterable[Sequence], ambient_dim: int | None = None) -> Subspace:
    vectors = [vec(v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise DimensionMismatch("span of no vectors needs an explicit ambient dimension")
        ambient_dim = len(vectors[0])
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {ambient_dim}")
    rows, _ = rref(vectors, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in rows))


def sum_subspaces(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    rows: list[Vec] = []
    for s in spaces:
        if s.ambient_dim != ambient_dim:
            raise DimensionMismatch(f"ambient dimensions differ: {s.ambient_dim} vs {ambient_dim}")
        rows.extend(s.rows)
    return span(rows, ambient_dim)


def solve_common_kernel(maps: Iterable[Matrix], dim: int) -> Subspace:
    """The subspace ``{x : M x = 0 for every M in maps}``."""
    stacked: list[Sequence[Fraction]] = []
    for m in maps:
        for row in m:
            if len(row) != dim:
                raise DimensionMismatch(f"map row of length {len(row)}, domain dimension {dim}")
            if any(row):
                stacked.append(row)
    if not stacked:
        return Subspace.full(dim)
    return span(nullspace(stacked, dim), dim)

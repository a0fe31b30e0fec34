"""Ternary algebras given by structure constants, and the 3-Leibniz identity.

A :class:`TriAlgebra` stores ``[e_i, e_j, e_k] = sum_l c_ijk^l e_l`` sparsely;
every product of arbitrary vectors is the trilinear extension.  The
fundamental identity checked here is the left form

    [x, y, [a, b, c]] = [[x, y, a], b, c] + [a, [x, y, b], c] + [a, b, [x, y, c]]

i.e. every left multiplication ``ad(x, y)`` is a derivation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, LeibnizIdentityError, MalformedInput, PreconditionError
from .linalg import ZERO, Subspace, Vec, is_zero, rref, span, unit_vec, vec

Sparse = dict  # dict[int, Fraction]


def _sparse(v: Sequence) -> Sparse:
    return {i: c for i, c in enumerate(v) if c}


def _dense(s: Mapping[int, Fraction], n: int) -> Vec:
    out = [ZERO] * n
    for i, c in s.items():
        out[i] = c
    return tuple(out)


def _axpy(acc: Sparse, c: Fraction, s: Mapping[int, Fraction]) -> None:
    for i, x in s.items():
        v = acc.get(i, ZERO) + c * x
        if v:
            acc[i] = v
        else:
            acc.pop(i, None)


@dataclass(frozen=True, eq=False)
class TriAlgebra:
    dim: int
    structure: Mapping[tuple[int, int, int], Vec]
    basis_labels: tuple[str, ...] = ()
    _sparse: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise MalformedInput(f"dimension must be positive, got {self.dim}")
        labels = tuple(self.basis_labels) or tuple(f"e{i + 1}" for i in range(self.dim))
        if len(labels) != self.dim:
            raise MalformedInput(f"{len(labels)} basis labels for dimension {self.dim}")
        clean = {}
        for key, value in self.structure.items():
            i, j, k = key
            if not all(0 <= t < self.dim for t in key):
                raise MalformedInput(f"product index {key} outside [0, {self.dim})")
            value = vec(value)
            if len(value) != self.dim:
                raise DimensionMismatch(f"product {key} has length {len(value)}")
            if not is_zero(value):
                clean[(int(i), int(j), int(k))] = value
        object.__setattr__(self, "structure", dict(sorted(clean.items())))
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "_sparse", {k: _sparse(v) for k, v in clean.items()})

    @classmethod
    def from_labels(cls, labels: Sequence[str], table: Mapping[tuple[str, str, str], Mapping[str, object]]):
        """Build from a table like ``{("h", "h", "e"): {"e": 4}}``."""
        index = {name: i for i, name in enumerate(labels)}
        n = len(labels)
        structure = {}
        for (a, b, c), value in table.items():
            v = [ZERO] * n
            for name, coef in value.items():
                v[index[name]] += Fraction(coef)
            structure[(index[a], index[b], index[c])] = tuple(v)
        return cls(n, structure, tuple(labels))

    def __eq__(self, other):
        if not isinstance(other, TriAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.structure == other.structure

    def __hash__(self):
        return hash((self.dim, tuple(self.structure.items())))

    @property
    def nonzero_products(self) -> int:
        return len(self.structure)

    def basis(self) -> list[Vec]:
        return [unit_vec(self.dim, i) for i in range(self.dim)]

    def basis_product(self, i: int, j: int, k: int) -> Vec:
        return self.structure.get((i, j, k)) or (ZERO,) * self.dim

    def _product_sparse(self, xs: Sparse, ys: Sparse, zs: Sparse) -> Sparse:
        acc: Sparse = {}
        table = self._sparse
        if len(table) < len(xs) * len(ys) * len(zs):
            for (i, j, k), val in table.items():
                if i in xs and j in ys and k in zs:
                    _axpy(acc, xs[i] * ys[j] * zs[k], val)
            return acc
        for i, a in xs.items():
            for j, b in ys.items():
                ab = a * b
                for k, c in zs.items():
                    val = table.get((i, j, k))
                    if val:
                        _axpy(acc, ab * c, val)
        return acc

    def triple_product(self, x: Sequence, y: Sequence, z: Sequence) -> Vec:
        for v in (x, y, z):
            if len(v) != self.dim:
                raise DimensionMismatch(f"vector of length {len(v)} in a {self.dim}-dimensional algebra")
        return _dense(self._product_sparse(_sparse(vec(x)), _sparse(vec(y)), _sparse(vec(z))), self.dim)

    def format_vec(self, v: Sequence) -> str:
        terms = []
        for c, name in zip(v, self.basis_labels):
            if not c:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}{name}" if c.denominator == 1 else f"({c}){name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def is_abelian(self) -> bool:
        return not self.structure


def triple_product(A: TriAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vec:
    return A.triple_product(x, y, z)


@dataclass(frozen=True)
class IdentityViolation:
    indices: tuple[int, int, int, int, int]
    lhs: Vec
    rhs: Vec

    def describe(self, A: TriAlgebra) -> str:
        x, y, a, b, c = (A.basis_labels[i] for i in self.indices)
        return (
            f"[{x}, {y}, [{a}, {b}, {c}]] = {A.format_vec(self.lhs)} but the derivation side is "
            f"{A.format_vec(self.rhs)}"
        )


def _left_ops(A: TriAlgebra) -> dict[tuple[int, int], dict[int, Sparse]]:
    """For each basis pair (x, y), the nonzero columns of ad(e_x, e_y)."""
    ops: dict[tuple[int, int], dict[int, Sparse]] = {}
    for (i, j, k), val in A._sparse.items():
        ops.setdefault((i, j), {})[k] = val
    return ops


def _apply(cols: Mapping[int, Sparse], v: Sparse) -> Sparse:
    acc: Sparse = {}
    for i, c in v.items():
        col = cols.get(i)
        if col:
            _axpy(acc, c, col)
    return acc


def check_fundamental_identity(A: TriAlgebra, side: str = "left", method: str = "auto") -> list[IdentityViolation]:
    """All ordered basis 5-tuples violating the fundamental identity.

    ``side="right"`` checks the mirror image (right multiplications
    ``z -> [z, y, x]`` are derivations); it holds for ``A`` exactly when the
    left identity holds for :func:`opposite` ``(A)``.

    ``method="sparse"`` walks the nonzero operators with exact fractions;
    ``method="dense"`` clears denominators and contracts integer tensors
    with numpy (int64 when overflow is impossible, Python integers
    otherwise), so it is exact too.
    ``"auto"`` takes the dense route whenever it is safe and the algebra is
    small enough for ``dim**5`` intermediate arrays.
    """
    if side == "right":
        return check_fundamental_identity(opposite(A), "left", method)
    if side != "left":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if method not in ("auto", "sparse", "dense"):
        raise ValueError(f"unknown method {method!r}")
    if method == "dense" or (method == "auto" and A.dim <= DENSE_MAX_DIM):
        return _identity_dense(A, *_integer_table(A))
    return _identity_sparse(A)


DENSE_MAX_DIM = 16


def _integer_table(A: TriAlgebra):
    """``(tensor, scale)`` with ``scale * c_ijk^l`` integral.

    The tensor is int64 when no contraction can overflow, otherwise an
    object array of Python integers.
    """
    n = A.dim
    scale = 1
    for v in A.structure.values():
        for c in v:
            scale = scale * c.denominator // gcd(scale, c.denominator)
    big = max((abs(c * scale) for v in A.structure.values() for c in v), default=0)
    dtype = np.int64 if 4 * n * big * big < 2 ** 62 else object
    t = np.zeros((n, n, n, n), dtype=dtype)
    for (i, j, k), v in A.structure.items():
        for l, c in enumerate(v):
            if c:
                t[i, j, k, l] = int(c * scale)
    return t, scale


def _identity_dense(A: TriAlgebra, t, scale: int) -> list[IdentityViolation]:
    n = A.dim
    s2 = scale * scale
    out = []
    for x in range(n):
        ad = t[x]  # [y, m, l]
        if not ad.any():
            continue
        lhs = np.einsum("abcm,yml->yabcl", t, ad)
        rhs = (
            np.einsum("yam,mbcl->yabcl", ad, t)
            + np.einsum("ybm,amcl->yabcl", ad, t)
            + np.einsum("ycm,abml->yabcl", ad, t)
        )
        bad = np.argwhere((lhs != rhs).any(axis=-1))
        for y, a, b, c in bad.tolist():
            out.append(
                IdentityViolation(
                    (x, y, a, b, c),
                    tuple(Fraction(int(v), s2) for v in lhs[y, a, b, c]),
                    tuple(Fraction(int(v), s2) for v in rhs[y, a, b, c]),
                )
            )
    return out


def _identity_sparse(A: TriAlgebra) -> list[IdentityViolation]:
    n = A.dim
    ops = _left_ops(A)
    unit = [{i: Fraction(1)} for i in range(n)]
    prods = {key: A._sparse.get(key, {}) for key in itertools.product(range(n), repeat=3)}
    violations = []
    for (x, y), cols in sorted(ops.items()):
        images = [cols.get(i, {}) for i in range(n)]
        for a, b, c in itertools.product(range(n), repeat=3):
            lhs = _apply(cols, prods[(a, b, c)])
            rhs: Sparse = {}
            if images[a]:
                _axpy(rhs, Fraction(1), A._product_sparse(images[a], unit[b], unit[c]))
            if images[b]:
                _axpy(rhs, Fraction(1), A._product_sparse(unit[a], images[b], unit[c]))
            if images[c]:
                _axpy(rhs, Fraction(1), A._product_sparse(unit[a], unit[b], images[c]))
            if lhs != rhs:
                violations.append(IdentityViolation((x, y, a, b, c), _dense(lhs, n), _dense(rhs, n)))
    return violations


def is_3leibniz(A: TriAlgebra) -> bool:
    return not check_fundamental_identity(A)


# ---------------------------------------------------------------------------
# Left multiplication operators and the Lie algebra they span
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdOperator:
    """``z -> [x, y, z]``; ``matrix[l][m]`` is the ``e_l`` coefficient of ``[x, y, e_m]``."""

    left: Vec
    right: Vec
    matrix: tuple[Vec, ...]

    def __call__(self, z: Sequence) -> Vec:
        return tuple(sum((a * b for a, b in zip(row, z)), ZERO) for row in self.matrix)

    def flat(self) -> Vec:
        return tuple(x for row in self.matrix for x in row)

    def is_zero(self) -> bool:
        return not any(self.flat())


def ad_operator(A: TriAlgebra, x: Sequence, y: Sequence) -> AdOperator:
    n = A.dim
    cols = [A.triple_product(x, y, unit_vec(n, m)) for m in range(n)]
    matrix = tuple(tuple(cols[m][l] for m in range(n)) for l in range(n))
    return AdOperator(vec(x), vec(y), matrix)


def basis_ad(A: TriAlgebra, i: int, j: int) -> AdOperator:
    n = A.dim
    return ad_operator(A, unit_vec(n, i), unit_vec(n, j))


def mat_mul(p: Sequence[Sequence], q: Sequence[Sequence]) -> tuple[Vec, ...]:
    cols = list(zip(*q))
    return tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in cols) for row in p)


def mat_sub(p, q) -> tuple[Vec, ...]:
    return tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(p, q))


def mat_add(p, q) -> tuple[Vec, ...]:
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(p, q))


def flatten(m: Sequence[Sequence]) -> Vec:
    return tuple(x for row in m for x in row)


def commutator(p, q) -> tuple[Vec, ...]:
    return mat_sub(mat_mul(p, q), mat_mul(q, p))


@dataclass(frozen=True)
class LieSpan:
    """Span of all ``ad(e_i, e_j)`` as flattened ``dim x dim`` matrices."""

    space: Subspace
    generators: tuple[tuple[tuple[int, int], AdOperator], ...]

    @property
    def dim(self) -> int:
        return self.space.dim

    def contains(self, op: AdOperator | Sequence[Sequence]) -> bool:
        m = op.matrix if isinstance(op, AdOperator) else op
        return self.space.contains(flatten(m))


def lie_span(A: TriAlgebra) -> LieSpan:
    gens = []
    for i, j in itertools.product(range(A.dim), repeat=2):
        op = basis_ad(A, i, j)
        if not op.is_zero():
            gens.append(((i, j), op))
    space = span([op.flat() for _, op in gens], A.dim * A.dim)
    return LieSpan(space, tuple(gens))


def embedding_product(A: TriAlgebra, first: tuple, second: tuple) -> tuple[tuple, Vec]:
    """Product in the standard embedding on generators.

    Each argument is ``((x, y), z)`` standing for ``(ad(x, y), z)``.  The
    result is ``(terms, t)`` where ``terms`` lists the pairs whose ``ad``
    operators sum to the operator part.
    """
    (x, y), z = first
    (u, v), w = second
    terms = (
        (A.triple_product(x, y, u), vec(v)),
        (vec(u), A.triple_product(x, y, v)),
        (vec(z), vec(w)),
    )
    sub_part = tuple(a - b for a, b in zip(A.triple_product(x, y, w), A.triple_product(u, v, z)))
    return terms, sub_part


@dataclass
class EmbeddingReport:
    lie_dim: int
    closed: bool = True
    bracket_is_commutator: bool = True
    anticommutative: bool = True
    jacobi: bool = True
    module_action: bool = True
    witnesses: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.closed and self.bracket_is_commutator and self.anticommutative and self.jacobi and self.module_action


def standard_embedding_check(A: TriAlgebra, max_witnesses: int = 10) -> EmbeddingReport:
    """Verify that the left multiplications form a Lie algebra acting on ``A``.

    Checks on spanning operators: the bracket
    ``[ad(a,b), ad(c,d)] = ad([a,b,c], d) + ad(c, [a,b,d])`` stays in the
    span and equals the matrix commutator; the commutator is
    anticommutative and satisfies Jacobi; the action of the operator part
    on ``A`` through the embedding product agrees with matrix application.
    """
    violations = check_fundamental_identity(A)
    if violations:
        raise PreconditionError(
            "identity",
            f"standard embedding needs a 3-Leibniz algebra; {len(violations)} identity violations, "
            f"first: {violations[0].describe(A)}",
        )
    L = lie_span(A)
    report = EmbeddingReport(L.dim)
    n = A.dim
    e = A.basis()
    gens = L.generators

    def note(msg):
        if len(report.witnesses) < max_witnesses:
            report.witnesses.append(msg)

    zero = (ZERO,) * n
    for (p, P), (q, Q) in itertools.product(gens, repeat=2):
        terms, _ = embedding_product(A, ((e[p[0]], e[p[1]]), zero), ((e[q[0]], e[q[1]]), zero))
        bracket = None
        for left, right in terms[:2]:
            m = ad_operator(A, left, right).matrix
            bracket = m if bracket is None else mat_add(bracket, m)
        if not L.contains(bracket):
            report.closed = False
            note(f"bracket of ad{p} and ad{q} leaves the span")
        if bracket != commutator(P.matrix, Q.matrix):
            report.bracket_is_commutator = False
            note(f"bracket of ad{p} and ad{q} differs from the commutator")
        if mat_add(commutator(P.matrix, Q.matrix), commutator(Q.matrix, P.matrix)) != tuple(
            (ZERO,) * n for _ in range(n)
        ):
            report.anticommutative = False
            note(f"commutator of ad{p} and ad{q} is not anticommutative")
    for (p, P), (q, Q), (r, R) in itertools.combinations(gens, 3):
        a, b, c = P.matrix, Q.matrix, R.matrix
        jac = mat_add(mat_add(commutator(a, commutator(b, c)), commutator(b, commutator(c, a))), commutator(c, commutator(a, b)))
        if any(flatten(jac)):
            report.jacobi = False
            note(f"Jacobi fails on ad{p}, ad{q}, ad{r}")
    for (p, P) in gens:
        for w in range(n):
            _, action = embedding_product(A, ((e[p[0]], e[p[1]]), zero), ((zero, zero), e[w]))
            if action != P(e[w]):
                report.module_action = False
                note(f"ad{p} acts on e{w} inconsistently")
    return report


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def _binary(table: Mapping[tuple[int, int], Sparse], x: Sparse, y: Sparse) -> Sparse:
    acc: Sparse = {}
    for i, a in x.items():
        for j, b in y.items():
            val = table.get((i, j))
            if val:
                _axpy(acc, a * b, val)
    return acc


def check_binary_leibniz(dim: int, table: Mapping[tuple[int, int], Sequence], side: str = "left") -> list[tuple[int, int, int]]:
    """Basis triples violating the left (or right) Leibniz identity.

    left:  [x, [y, z]] = [[x, y], z] + [y, [x, z]]
    right: [[x, y], z] = [[x, z], y] + [x, [y, z]]
    """
    t = {k: _sparse(vec(v)) for k, v in table.items()}
    unit = [{i: Fraction(1)} for i in range(dim)]
    bad = []
    for x, y, z in itertools.product(range(dim), repeat=3):
        X, Y, Z = unit[x], unit[y], unit[z]
        if side == "left":
            lhs = _binary(t, X, _binary(t, Y, Z))
            rhs = _binary(t, _binary(t, X, Y), Z)
            _axpy(rhs, Fraction(1), _binary(t, Y, _binary(t, X, Z)))
        elif side == "right":
            lhs = _binary(t, _binary(t, X, Y), Z)
            rhs = _binary(t, _binary(t, X, Z), Y)
            _axpy(rhs, Fraction(1), _binary(t, X, _binary(t, Y, Z)))
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        if lhs != rhs:
            bad.append((x, y, z))
    return bad


def from_binary_leibniz(
    dim: int,
    table: Mapping[tuple[int, int], Sequence],
    labels: Sequence[str] = (),
    side: str = "left",
) -> TriAlgebra:
    """Lift a binary Leibniz algebra to a ternary one.

    ``side="left"``: ``table`` must satisfy the left Leibniz identity and the
    product is ``[x, y, z] = [[x, y], z]``; the result satisfies the left
    fundamental identity.  ``side="right"``: ``table`` must be right Leibniz
    and the product is ``[x, y, z] = [x, [y, z]]``; the result satisfies the
    mirrored identity (``check_fundamental_identity(..., side="right")``).
    """
    bad = check_binary_leibniz(dim, table, side)
    if bad:
        x, y, z = bad[0]
        raise LeibnizIdentityError(
            f"binary table is not {side} Leibniz; first failure at basis triple {(x, y, z)}", bad[0]
        )
    t = {k: _sparse(vec(v)) for k, v in table.items()}
    unit = [{i: Fraction(1)} for i in range(dim)]
    structure = {}
    for i, j, k in itertools.product(range(dim), repeat=3):
        if side == "left":
            s = _binary(t, _binary(t, unit[i], unit[j]), unit[k])
        else:
            s = _binary(t, unit[i], _binary(t, unit[j], unit[k]))
        if s:
            structure[(i, j, k)] = _dense(s, dim)
    return TriAlgebra(dim, structure, tuple(labels))


def direct_sum(A: TriAlgebra, B: TriAlgebra, suffixes: tuple[str, str] = ("", "'")) -> TriAlgebra:
    n = A.dim + B.dim
    structure = {}
    for (i, j, k), v in A.structure.items():
        structure[(i, j, k)] = tuple(v) + (ZERO,) * B.dim
    off = A.dim
    for (i, j, k), v in B.structure.items():
        structure[(i + off, j + off, k + off)] = (ZERO,) * A.dim + tuple(v)
    labels = [l + suffixes[0] for l in A.basis_labels] + [l + suffixes[1] for l in B.basis_labels]
    if len(set(labels)) != n:
        labels = [f"{l}_{1 if i < off else 2}" for i, l in enumerate(A.basis_labels + B.basis_labels)]
    return TriAlgebra(n, structure, tuple(labels))


def opposite(A: TriAlgebra) -> TriAlgebra:
    """The reversed product ``[x, y, z]_op = [z, y, x]``."""
    return TriAlgebra(A.dim, {(k, j, i): v for (i, j, k), v in A.structure.items()}, A.basis_labels)


def scaled(A: TriAlgebra, c) -> TriAlgebra:
    c = Fraction(c)
    return TriAlgebra(A.dim, {k: tuple(c * x for x in v) for k, v in A.structure.items()}, A.basis_labels)


def invert_matrix(P: Sequence[Sequence]) -> tuple[Vec, ...]:
    n = len(P)
    aug = [list(vec(row)) + list(unit_vec(n, i)) for i, row in enumerate(P)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(r[n:]) for r in rows)


def transport(A: TriAlgebra, P: Sequence[Sequence]) -> TriAlgebra:
    """Isomorphic copy along the invertible map ``v -> P v``."""
    n = A.dim
    P = tuple(vec(r) for r in P)
    Pinv = invert_matrix(P)
    cols = [tuple(Pinv[r][c] for r in range(n)) for c in range(n)]  # images P^{-1} e_c
    structure = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        v = A.triple_product(cols[i], cols[j], cols[k])
        if any(v):
            structure[(i, j, k)] = tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in P)
    return TriAlgebra(n, structure)


def ternary_derivation_defect(A: TriAlgebra, D: AdOperator, a: Sequence, b: Sequence, c: Sequence) -> Vec:
    """``D[a,b,c] - [Da,b,c] - [a,Db,c] - [a,b,Dc]``; zero when ``D`` is a derivation."""
    lhs = D(A.triple_product(a, b, c))
    parts = (A.triple_product(D(a), b, c), A.triple_product(a, D(b), c), A.triple_product(a, b, D(c)))
    return tuple(l - sum(p) for l, *p in zip(lhs, *parts))


def products_span(A: TriAlgebra, triples: Iterable[tuple[Sequence, Sequence, Sequence]]) -> Subspace:
    return span([A.triple_product(x, y, z) for x, y, z in triples], A.dim)

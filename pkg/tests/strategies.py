"""Hypothesis strategies and small independent oracles shared by the tests."""

import itertools
from fractions import Fraction
from functools import lru_cache

from hypothesis import strategies as st

from trileibniz import catalog
from trileibniz.algebra import check_binary_leibniz, invert_matrix
from trileibniz.groups import GroupSpec
from trileibniz.linalg import unit_vec

Z = GroupSpec(1)


@lru_cache(maxsize=None)
def graded_catalog():
    return catalog.graded_catalog()


CATALOG_NAMES = sorted(catalog.graded_catalog())

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
small_ints = st.integers(-3, 3)


def vectors(n: int):
    return st.lists(st.sampled_from([0, 0, 0, 1, -1, 2, Fraction(1, 2)]), min_size=n, max_size=n).map(
        lambda v: tuple(Fraction(x) for x in v)
    )


@st.composite
def catalog_entries(draw, names=None):
    name = draw(st.sampled_from(names or CATALOG_NAMES))
    return name, graded_catalog()[name]


@st.composite
def homogeneous_vectors(draw, GA):
    g = draw(st.sampled_from(sorted(GA.component_indices)))
    idx = GA.indices_of(g)
    coeffs = draw(st.lists(st.sampled_from([1, -1, 2, 3]), min_size=len(idx), max_size=len(idx)))
    v = [Fraction(0)] * GA.dim
    for i, c in zip(idx, coeffs):
        v[i] = Fraction(c)
    return tuple(v)


@st.composite
def invertible_matrices(draw, n: int):
    """``L @ U`` with unit-diagonal triangular factors of small integers."""
    entries = st.integers(-1, 1)
    lower = [[1 if i == j else (draw(entries) if j < i else 0) for j in range(n)] for i in range(n)]
    upper = [[draw(st.sampled_from([1, -1, 2])) if i == j else (draw(entries) if j > i else 0) for j in range(n)]
             for i in range(n)]
    return tuple(
        tuple(Fraction(sum(lower[i][k] * upper[k][j] for k in range(n))) for j in range(n)) for i in range(n)
    )


def transport_binary(table, P):
    n = len(P)
    Pinv = invert_matrix(P)
    cols = [tuple(Pinv[r][c] for r in range(n)) for c in range(n)]

    def br(x, y):
        out = [Fraction(0)] * n
        for (i, j), v in table.items():
            c = x[i] * y[j]
            if c:
                for l, t in enumerate(v):
                    out[l] += c * t
        return out

    new = {}
    for i, j in itertools.product(range(n), repeat=2):
        w = br(cols[i], cols[j])
        img = tuple(sum((a * b for a, b in zip(row, w)), Fraction(0)) for row in P)
        if any(img):
            new[(i, j)] = img
    return new


def _lie_sl2():
    e, h, f = (unit_vec(3, i) for i in range(3))
    neg = lambda v: tuple(-x for x in v)
    two = lambda v: tuple(2 * x for x in v)
    return 3, {(1, 0): two(e), (0, 1): neg(two(e)), (1, 2): neg(two(f)), (2, 1): two(f), (0, 2): h, (2, 0): neg(h)}


def _filiform(n):
    t = {}
    for i in range(1, n - 1):
        t[(0, i)] = unit_vec(n, i + 1)
        t[(i, 0)] = tuple(-x for x in unit_vec(n, i + 1))
    return n, t


def _example_opposite_binary():
    return 5, {(j, i): v for (i, j), v in catalog.example_binary_table().items()}


LEFT_LEIBNIZ_BASES = [_lie_sl2(), _filiform(4), _filiform(5), _example_opposite_binary()]
assert all(not check_binary_leibniz(n, t, "left") for n, t in LEFT_LEIBNIZ_BASES)


@st.composite
def left_leibniz_tables(draw):
    n, table = draw(st.sampled_from(LEFT_LEIBNIZ_BASES))
    c = draw(st.sampled_from([1, -1, 2, Fraction(1, 3)]))
    table = {k: tuple(c * x for x in v) for k, v in table.items()}
    P = draw(invertible_matrices(n))
    return n, transport_binary(table, P)


def opposite_binary(table):
    return {(j, i): v for (i, j), v in table.items()}


@st.composite
def group_subsets(draw, spec=Z, bound=4, max_size=5):
    if spec.free_rank == 1 and not spec.torsion_moduli:
        ints = draw(st.sets(st.integers(-bound, bound).filter(bool), max_size=max_size))
        return frozenset(spec.from_flat([x]) for x in ints)
    coords = st.tuples(*[st.integers(-bound, bound)] * (spec.free_rank + len(spec.torsion_moduli)))
    pts = draw(st.sets(coords, max_size=max_size))
    return frozenset(g for g in (spec.from_flat(list(p)) for p in pts) if not g.is_identity)


# ---------------------------------------------------------------------------
# Oracles written independently of the library code paths
# ---------------------------------------------------------------------------


def dense_table(A):
    n = A.dim
    t = [[[[Fraction(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (i, j, k), v in A.structure.items():
        t[i][j][k] = list(v)
    return t


def dense_product(t, x, y, z):
    n = len(x)
    out = [Fraction(0)] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            for k in range(n):
                if not z[k]:
                    continue
                c = x[i] * y[j] * z[k]
                row = t[i][j][k]
                for l in range(n):
                    out[l] += c * row[l]
    return out


def identity_violation_count(A):
    """Count basis 5-tuples failing the left fundamental identity, densely."""
    n = A.dim
    t = dense_table(A)
    e = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    bad = 0
    for x, y, a, b, c in itertools.product(range(n), repeat=5):
        lhs = dense_product(t, e[x], e[y], t[a][b][c])
        r1 = dense_product(t, t[x][y][a], e[b], e[c])
        r2 = dense_product(t, e[a], t[x][y][b], e[c])
        r3 = dense_product(t, e[a], e[b], t[x][y][c])
        if any(l != p + q + r for l, p, q, r in zip(lhs, r1, r2, r3)):
            bad += 1
    return bad


def sigma0_oracle(GA):
    """Degrees ``deg i + deg j`` of basis pairs whose operator has a nonzero entry."""
    A = GA.algebra
    out = set()
    for (i, j, k), v in A.structure.items():
        g = GA.degrees[i] + GA.degrees[j]
        if not g.is_identity and any(v):
            out.add(g)
    return frozenset(out)


def rank(rows):
    """Plain Gaussian elimination rank, column by column."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r

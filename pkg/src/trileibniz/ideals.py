"""Ideals: closure, the non-Lie ideal J, annihilators, class ideals and the
decomposition ``T = U + sum_[g] I_[g]``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import TriAlgebra, _axpy, _dense, _sparse, check_fundamental_identity
from .connections import ConnectionClasses, connection_classes, j_connection_classes
from .errors import PreconditionError, TheoremContradiction
from .grading import GradedAlgebra, check_grading_compat
from .groups import GroupElement
from .linalg import ZERO, Subspace, Vec, nullspace, solve_common_kernel, span, sum_subspaces, unit_vec

log = logging.getLogger(__name__)

SLOTS = (0, 1, 2)


def insertion_images(A: TriAlgebra, v: Sequence, slots: Iterable[int] = SLOTS, others=None) -> list[Vec]:
    """Nonzero products of ``v`` placed in each slot against basis pairs.

    ``others`` restricts the two remaining slots to a set of basis indices.
    """
    xs = _sparse(v)
    allowed = None if others is None else set(others)
    out = []
    for slot in slots:
        acc: dict[tuple[int, int], dict] = {}
        for key, val in A._sparse.items():
            i = key[slot]
            if i not in xs:
                continue
            rest = key[:slot] + key[slot + 1:]
            if allowed is not None and (rest[0] not in allowed or rest[1] not in allowed):
                continue
            bucket = acc.setdefault(rest, {})
            _axpy(bucket, xs[i], val)
        out.extend(_dense(s, A.dim) for _, s in sorted(acc.items()) if s)
    return out


def ideal_closure(A: TriAlgebra, generators: Iterable[Sequence]) -> Subspace:
    """Least subspace containing ``generators`` and closed under insertion in any slot."""
    n = A.dim
    current = Subspace.zero(n)
    queue = list(generators)
    while queue:
        v = tuple(Fraction(x) for x in queue.pop())
        if current.contains(v):
            continue
        current = span(current.rows + (v,), n)
        queue.extend(w for w in insertion_images(A, v) if not current.contains(w))
    return current


def ideal_witness(A: TriAlgebra, S: Subspace):
    """First ``(row, image)`` with the image outside ``S``, or ``None``."""
    for r in S.rows:
        for w in insertion_images(A, r):
            if not S.contains(w):
                return r, w
    return None


def is_ideal(A: TriAlgebra, S: Subspace) -> bool:
    return ideal_witness(A, S) is None


def largest_ideal_in(A: TriAlgebra, V: Subspace) -> Subspace:
    """Largest ideal contained in ``V`` (intersection of preimages until stable)."""
    n = A.dim
    M = V
    while True:
        if M.is_zero():
            return M
        pivots = M.pivots
        free = [c for c in range(n) if c not in set(pivots)]
        # columns indexed by rows of M; each constraint row is one coordinate of a reduced image
        constraints: dict[tuple, list] = {}
        for idx, r in enumerate(M.rows):
            for slot in SLOTS:
                for w_key, w in _keyed_images(A, r, slot):
                    red = M.reduce(w)
                    for c in free:
                        if red[c]:
                            constraints.setdefault((slot, w_key, c), [ZERO] * M.dim)[idx] += red[c]
        if not constraints:
            return M
        coeffs = nullspace(list(constraints.values()), M.dim)
        new = span([tuple(sum((c * r[j] for c, r in zip(k, M.rows)), ZERO) for j in range(n)) for k in coeffs], n)
        if new == M:
            return M
        M = new


def _keyed_images(A: TriAlgebra, v: Sequence, slot: int):
    xs = _sparse(v)
    acc: dict[tuple[int, int], dict] = {}
    for key, val in A._sparse.items():
        i = key[slot]
        if i in xs:
            _axpy(acc.setdefault(key[:slot] + key[slot + 1:], {}), xs[i], val)
    return [(k, _dense(s, A.dim)) for k, s in sorted(acc.items()) if s]


# ---------------------------------------------------------------------------
# Gradedness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedSubspaceView:
    total: Subspace
    per_degree: dict
    graded: bool

    @property
    def dim(self) -> int:
        return self.total.dim

    def support(self) -> list[GroupElement]:
        return [g for g, s in self.per_degree.items() if not s.is_zero()]


def graded_view(GA: GradedAlgebra, S: Subspace) -> GradedSubspaceView:
    per = {}
    for g, comp in GA.components.items():
        meet = S.intersect(comp)
        if not meet.is_zero():
            per[g] = meet
    recombined = sum_subspaces(per.values(), GA.dim)
    return GradedSubspaceView(S, per, recombined == S)


def is_graded(GA: GradedAlgebra, S: Subspace) -> GradedSubspaceView:
    return graded_view(GA, S)


# ---------------------------------------------------------------------------
# The ideal J and its validation
# ---------------------------------------------------------------------------


def polarized_generators(A: TriAlgebra) -> list[Vec]:
    """Bilinearized forms of ``[x,x,y]``, ``[x,y,x]``, ``[y,x,x]`` on basis vectors."""
    n = A.dim
    p = A.basis_product
    gens = []
    for i, j, k in itertools.product(range(n), repeat=3):
        for a, b in (
            (p(i, j, k), p(j, i, k)),
            (p(i, k, j), p(j, k, i)),
            (p(k, i, j), p(k, j, i)),
        ):
            s = tuple(x + y for x, y in zip(a, b))
            if any(s):
                gens.append(s)
    return gens


def j_literal(A: TriAlgebra) -> Subspace:
    return ideal_closure(A, polarized_generators(A))


@dataclass
class JValidation:
    is_ideal: bool
    is_graded: bool
    right_annihilated: bool
    """``[T, T, J] = [T, J, T] = 0``."""
    witnesses: list[str] = field(default_factory=list)
    eq22_violations: list[tuple[tuple[int, int, int], Vec]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.is_ideal and self.is_graded and self.right_annihilated


def validate_j_candidate(GA: GradedAlgebra, S: Subspace, max_witnesses: int = 20) -> JValidation:
    A = GA.algebra
    w = ideal_witness(A, S)
    view = graded_view(GA, S)
    report = JValidation(w is None, view.graded, True)
    if w is not None:
        report.witnesses.append(f"ideal: {A.format_vec(w[0])} produces {A.format_vec(w[1])} outside the candidate")
    if not view.graded:
        report.witnesses.append("graded: candidate is not the sum of its homogeneous parts")
    n = A.dim
    found = {}
    for r, p in zip(S.rows, S.pivots):
        for slot in (2, 1):
            for (a, b), img in _keyed_images(A, r, slot):
                key = (a, b, p) if slot == 2 else (a, p, b)
                args = (unit_vec(n, a), unit_vec(n, b), r) if slot == 2 else (unit_vec(n, a), r, unit_vec(n, b))
                # a unit row can be reached from both slots; keep one copy per product
                found.setdefault((key, args), (key, args, img))
    found = [found[k] for k in sorted(found)]
    report.right_annihilated = not found
    for key, (x, y, z), img in found[:max_witnesses]:
        report.eq22_violations.append((key, img))
        report.witnesses.append(
            f"[{A.format_vec(x)}, {A.format_vec(y)}, {A.format_vec(z)}] = {A.format_vec(img)} != 0"
        )
    return report


# ---------------------------------------------------------------------------
# Annihilators
# ---------------------------------------------------------------------------


def _insertion_matrices(A: TriAlgebra, pairs_from: Sequence[int]) -> list[list[list[Fraction]]]:
    n = A.dim
    allowed = set(pairs_from)
    maps: dict[tuple[int, int, int], list[list[Fraction]]] = {}
    for (i, j, k), val in A.structure.items():
        for slot, (x, rest) in enumerate(((i, (j, k)), (j, (i, k)), (k, (i, j)))):
            if rest[0] not in allowed or rest[1] not in allowed:
                continue
            m = maps.setdefault((slot, *rest), [[ZERO] * n for _ in range(n)])
            for l, c in enumerate(val):
                m[l][x] += c
    return list(maps.values())


def annihilator(A: TriAlgebra) -> Subspace:
    return solve_common_kernel(_insertion_matrices(A, range(A.dim)), A.dim)


def split_support(GA: GradedAlgebra, J: Subspace) -> tuple[frozenset, frozenset]:
    """``(Sigma1_J, Sigma1_J0)``: degrees whose component meets ``J`` or not."""
    sj = frozenset(g for g in GA.sigma1 if not J.intersect(GA.component(g)).is_zero())
    return sj, GA.sigma1 - sj


def lie_annihilator(GA: GradedAlgebra, J: Subspace) -> Subspace:
    if not graded_view(GA, J).graded:
        raise PreconditionError("lie-annihilator", "J must be a graded subspace")
    _, sj0 = split_support(GA, J)
    idx = list(GA.indices_of(GA.identity))
    for g in sj0:
        idx.extend(GA.indices_of(g))
    return solve_common_kernel(_insertion_matrices(GA.algebra, idx), GA.dim)


# ---------------------------------------------------------------------------
# Class ideals and the decomposition theorem
# ---------------------------------------------------------------------------


def _t1_products(GA: GradedAlgebra, firsts: Iterable[GroupElement], seconds: Iterable[GroupElement]) -> Subspace:
    """``span [T_g, T_h, T_{-(g+h)}]`` over the given degree sets."""
    A = GA.algebra
    vecs = []
    seconds = list(seconds)
    for g in firsts:
        for h in seconds:
            third = -(g + h)
            for a in GA.indices_of(g):
                for b in GA.indices_of(h):
                    for c in GA.indices_of(third):
                        v = A.structure.get((a, b, c))
                        if v:
                            vecs.append(v)
    return span(vecs, GA.dim)


def t1_sigma1_span(GA: GradedAlgebra) -> Subspace:
    return _t1_products(GA, sorted(GA.sigma1), sorted(GA.sigma1) + [GA.identity])


def check_t1_span(GA: GradedAlgebra) -> bool:
    return t1_sigma1_span(GA) == GA.t1


@dataclass(frozen=True)
class ClassIdeal:
    members: tuple[GroupElement, ...]
    i1: Subspace
    v: Subspace
    view: GradedSubspaceView

    @property
    def total(self) -> Subspace:
        return self.view.total


def _class_ideal(GA: GradedAlgebra, members: Sequence[GroupElement]) -> ClassIdeal:
    members = tuple(sorted(members))
    i1 = _t1_products(GA, members, list(members) + [GA.identity])
    v = sum_subspaces((GA.component(g) for g in members), GA.dim)
    total = i1 + v
    return ClassIdeal(members, i1, v, graded_view(GA, total))


def class_ideal(GA: GradedAlgebra, members: Sequence[GroupElement]) -> ClassIdeal:
    """``I_[g] = I_{1,[g]} + V_[g]`` for a connection class given by its members."""
    return _class_ideal(GA, members)


def mixed_products(A: TriAlgebra, I: Subspace, K: Subspace) -> dict[str, Subspace]:
    """``[I,T,K]``, ``[I,K,T]``, ``[T,I,K]`` as subspaces."""
    n = A.dim
    basis = A.basis()
    out = {"[I,T,K]": [], "[I,K,T]": [], "[T,I,K]": []}
    for x in I.rows:
        for y in K.rows:
            for e in basis:
                out["[I,T,K]"].append(A.triple_product(x, e, y))
                out["[I,K,T]"].append(A.triple_product(x, y, e))
                out["[T,I,K]"].append(A.triple_product(e, x, y))
    return {k: span(v, n) for k, v in out.items()}


@dataclass
class DecompositionResult:
    classes: ConnectionClasses
    t1_sigma1: Subspace
    complement: Subspace
    class_ideals: list[ClassIdeal]
    ideals_ok: list[bool]
    orthogonality_verified: bool
    recovers_t: bool
    overlap: int
    findings: list[str] = field(default_factory=list)


def _theorem_hypotheses_hold(GA: GradedAlgebra) -> bool:
    return not check_grading_compat(GA) and not check_fundamental_identity(GA.algebra)


def decompose(GA: GradedAlgebra, classes: ConnectionClasses | None = None) -> DecompositionResult:
    if classes is None:
        classes = connection_classes(GA.sigma1, GA.sigma0)
    A = GA.algebra
    n = GA.dim
    t1s = t1_sigma1_span(GA)
    U = t1s.complement_in(GA.t1)
    cis = [_class_ideal(GA, c) for c in classes.classes]
    ok = [is_ideal(A, ci.total) for ci in cis]
    findings = []
    hypotheses = None
    for ci, good in zip(cis, ok):
        if not good:
            if hypotheses is None:
                hypotheses = _theorem_hypotheses_hold(GA)
            msg = f"class ideal for {[str(g) for g in ci.members]} is not an ideal"
            if hypotheses:
                raise TheoremContradiction("decompose", msg + " although the algebra is a graded 3-Leibniz algebra")
            findings.append(msg + " (input is not a graded 3-Leibniz algebra, so no theorem applies)")
    orthogonal = True
    for a, b in itertools.permutations(range(len(cis)), 2):
        for name, s in mixed_products(A, cis[a].total, cis[b].total).items():
            if not s.is_zero():
                orthogonal = False
                findings.append(
                    f"mixed product {name} between classes {cis[a].members[0]} and {cis[b].members[0]} is nonzero"
                )
    total = sum_subspaces([U] + [ci.total for ci in cis], n)
    overlap = U.dim + sum(ci.total.dim for ci in cis) - total.dim
    if overlap:
        findings.append(f"sum of class ideals is not direct (overlap dimension {overlap})")
    return DecompositionResult(classes, t1s, U, cis, ok, orthogonal, total.is_full(), overlap, findings)


def direct_sum_condition(GA: GradedAlgebra) -> bool:
    return annihilator(GA.algebra).is_zero() and check_t1_span(GA)


@dataclass
class LambdaIdeal:
    g: GroupElement
    psi: str
    members: tuple[GroupElement, ...]
    ideal: ClassIdeal
    status: str  # "verified", "failed" or "unverified"


def lambda_ideal(GA: GradedAlgebra, g: GroupElement, psi: str, J: Subspace) -> LambdaIdeal:
    """The subspace attached to the J-connection class of ``g`` in ``Sigma1_psi``."""
    if psi not in ("J", "J0"):
        raise ValueError("psi must be 'J' or 'J0'")
    sj, sj0 = split_support(GA, J)
    part = sj if psi == "J" else sj0
    if g not in part:
        raise PreconditionError("lambda-ideal", f"{g} is not in Sigma1_{psi}")
    classes = j_connection_classes(part, GA.sigma0)
    members = classes.class_of(g)
    ci = _class_ideal(GA, members)
    status = "unverified"
    if psi == "J" and annihilator(GA.algebra).is_zero() and check_t1_span(GA):
        status = "verified" if is_ideal(GA.algebra, ci.total) else "failed"
    return LambdaIdeal(g, psi, members, ci, status)

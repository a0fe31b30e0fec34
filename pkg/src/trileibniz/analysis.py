"""The maximal-length pipeline: support partition, Sigma1-multiplicativity,
gr-primeness probe, simplicity verdict and the assembled report.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import TriAlgebra, check_fundamental_identity
from .connections import ConnectionClasses, connection_classes, j_connection_classes
from .errors import PreconditionError, TheoremContradiction
from .grading import GradedAlgebra, check_grading_compat, component_dimensions, is_maximal_length
from .groups import GroupElement, is_symmetric
from .ideals import (
    annihilator,
    check_t1_span,
    decompose,
    graded_view,
    ideal_closure,
    is_ideal,
    j_literal,
    largest_ideal_in,
    lambda_ideal,
    lie_annihilator,
    split_support,
    validate_j_candidate,
)
from .linalg import Subspace, span, unit_vec

MAX_EXHAUSTIVE_IDEALS = 4096


# ---------------------------------------------------------------------------
# Partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupportPartition:
    sigma1_J: frozenset
    sigma1_J0: frozenset
    J: Subspace
    provenance: str  # "literal" or "candidate"


def partition_support(GA: GradedAlgebra, J: Subspace, provenance: str = "candidate") -> SupportPartition:
    if not graded_view(GA, J).graded:
        raise PreconditionError("partition", "J is not a graded subspace")
    sj, sj0 = split_support(GA, J)
    return SupportPartition(sj, sj0, J, provenance)


# ---------------------------------------------------------------------------
# Sigma1-multiplicativity
# ---------------------------------------------------------------------------


@dataclass
class MultiplicativityReport:
    violations: list[tuple[int, GroupElement, GroupElement, GroupElement]] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first(self):
        return self.violations[0] if self.violations else None


def _component_product_nonzero(GA: GradedAlgebra, g, h, k) -> bool:
    s = GA.algebra.structure
    return any(
        (a, b, c) in s for a in GA.indices_of(g) for b in GA.indices_of(h) for c in GA.indices_of(k)
    )


def check_sigma1_multiplicative(GA: GradedAlgebra, partition: SupportPartition) -> MultiplicativityReport:
    """Enumerate both conditions; ``Sigma0`` is used unsigned, as written.

    (1) ``g`` in ``Sigma1_J0``, ``h, k`` in ``Sigma1_J0 u {0}``, ``g+h`` in
    ``Sigma0``, ``g+h+k`` in ``Sigma1``.  (2) ``g`` in ``Sigma1_J``, ``h, k``
    in ``Sigma1 u {0}``, ``g+h`` in ``Sigma0``, ``g+h+k`` in ``Sigma1_J``.
    Each admissible triple needs ``[T_g, T_h, T_k] != 0``.
    """
    if not is_maximal_length(GA):
        raise PreconditionError("multiplicativity", "the grading is not of maximal length")
    e = GA.identity
    s0 = GA.sigma0
    report = MultiplicativityReport()
    conditions = (
        (1, partition.sigma1_J0, partition.sigma1_J0 | {e}, GA.sigma1),
        (2, partition.sigma1_J, GA.sigma1 | {e}, partition.sigma1_J),
    )
    for number, firsts, others, targets in conditions:
        others = sorted(others)
        for g in sorted(firsts):
            for h in others:
                if g + h not in s0:
                    continue
                for k in others:
                    if g + h + k not in targets:
                        continue
                    report.checked += 1
                    if not _component_product_nonzero(GA, g, h, k):
                        report.violations.append((number, g, h, k))
    return report


# ---------------------------------------------------------------------------
# Gr-primeness probe
# ---------------------------------------------------------------------------


def triple_span(A: TriAlgebra, X: Subspace, Y: Subspace, Zs: Subspace) -> Subspace:
    return span([A.triple_product(x, y, z) for x in X.rows for y in Y.rows for z in Zs.rows], A.dim)


def prime_product(A: TriAlgebra, I: Subspace, K: Subspace) -> Subspace:
    """``[I,K,I] + [K,I,I] + [I,I,K]``."""
    return triple_span(A, I, K, I) + triple_span(A, K, I, I) + triple_span(A, I, I, K)


def _prime_product_recheck(A: TriAlgebra, I: Subspace, K: Subspace) -> bool:
    """Independent zero test straight from the structure constants."""
    for order in ((I, K, I), (K, I, I), (I, I, K)):
        for x in order[0].rows:
            for y in order[1].rows:
                for z in order[2].rows:
                    acc = [0] * A.dim
                    for (i, j, k), v in A.structure.items():
                        c = x[i] * y[j] * z[k]
                        if c:
                            for l, t in enumerate(v):
                                acc[l] += c * t
                    if any(acc):
                        return False
    return True


def probe_family(GA: GradedAlgebra) -> list[tuple[str, Subspace]]:
    """Graded ideals generated by single components, by basis vectors of
    ``T_1``, and their pairwise sums.  Duplicates keep their first label."""
    A = GA.algebra
    n = GA.dim
    gens: list[tuple[str, Subspace]] = []
    for g in [GA.identity] + sorted(GA.sigma1):
        idx = GA.indices_of(g)
        if idx:
            gens.append((f"<T_{g}>", ideal_closure(A, [unit_vec(n, i) for i in idx])))
    for i in GA.indices_of(GA.identity):
        gens.append((f"<{A.basis_labels[i]}>", ideal_closure(A, [unit_vec(n, i)])))
    out: list[tuple[str, Subspace]] = []
    seen = set()
    for label, s in gens:
        if s not in seen:
            seen.add(s)
            out.append((label, s))
    base = list(out)
    for (la, a), (lb, b) in itertools.combinations(base, 2):
        s = a + b
        if s not in seen:
            seen.add(s)
            out.append((f"{la} + {lb}", s))
    return out


@dataclass
class ProbeReport:
    family: list[tuple[str, Subspace]]
    violation: tuple[tuple[str, Subspace], tuple[str, Subspace]] | None = None

    @property
    def clean(self) -> bool:
        return self.violation is None

    @property
    def status(self) -> str:
        return "no violation found (partial)" if self.clean else "violation"


def _trivial(S: Subspace, J: Subspace) -> bool:
    return S.is_zero() or S.is_full() or S == J


def grprime_probe(GA: GradedAlgebra, J: Subspace, family=None) -> ProbeReport:
    A = GA.algebra
    family = probe_family(GA) if family is None else family
    report = ProbeReport(family)
    candidates = [(l, s) for l, s in family if not _trivial(s, J)]
    for (la, a), (lb, b) in itertools.combinations_with_replacement(candidates, 2):
        if prime_product(A, a, b).is_zero():
            if not (_prime_product_recheck(A, a, b) and is_ideal(A, a) and is_ideal(A, b)):
                raise AssertionError(f"probe witness {la}, {lb} failed re-verification")
            report.violation = ((la, a), (lb, b))
            break
    return report


# ---------------------------------------------------------------------------
# Exhaustive enumeration when every component is at most one-dimensional
# ---------------------------------------------------------------------------


def enumerate_graded_ideals(GA: GradedAlgebra, limit: int = MAX_EXHAUSTIVE_IDEALS) -> list[Subspace] | None:
    """All graded ideals, or ``None`` if some component has dimension > 1
    or the lattice exceeds ``limit``.

    With one-dimensional components a graded subspace is a span of basis
    vectors, and a graded ideal is the sum of the closures of the basis
    vectors it contains.
    """
    if any(d > 1 for d in component_dimensions(GA).values()):
        return None
    A = GA.algebra
    n = GA.dim
    closures = []
    for i in range(n):
        c = ideal_closure(A, [unit_vec(n, i)])
        closures.append(frozenset(c.pivots))
    ideals = {frozenset()}
    for c in set(closures):
        ideals |= {s | c for s in ideals}
        if len(ideals) > limit:
            return None
    out = [span([unit_vec(n, i) for i in sorted(s)], n) for s in ideals]
    return sorted(out, key=lambda s: (s.dim, sorted(s.pivots)))


def exact_grprime(A: TriAlgebra, ideals: Sequence[Subspace], J: Subspace):
    """First pair violating gr-primeness among ``ideals``, or ``None``."""
    candidates = [s for s in ideals if not _trivial(s, J)]
    for a, b in itertools.combinations_with_replacement(candidates, 2):
        if prime_product(A, a, b).is_zero():
            return a, b
    return None


# ---------------------------------------------------------------------------
# Simplicity verdict
# ---------------------------------------------------------------------------

TIERS = ("certified-simple-direct", "certified-simple-by-theorem", "not-simple", "inconclusive")


@dataclass
class SimplicityVerdict:
    tier: str
    method: str
    witness: Subspace | None = None
    witness_label: str | None = None
    reason: str = ""
    checklist: dict[str, bool | None] = field(default_factory=dict)
    findings: list[str] = field(default_factory=list)
    probe: ProbeReport | None = None
    graded_ideals: list[Subspace] | None = None

    @property
    def simple(self) -> bool | None:
        if self.tier.startswith("certified"):
            return True
        if self.tier == "not-simple":
            return False
        return None


def _whole_product_zero(A: TriAlgebra) -> bool:
    return A.is_abelian()


def hypothesis_checklist(
    GA: GradedAlgebra,
    J: Subspace,
    probe: ProbeReport | None = None,
    identity_ok: bool | None = None,
) -> dict[str, bool | None]:
    """Every hypothesis of the structure theorem, plus the symmetry
    assumptions it relies on.  ``None`` marks a check that could not run."""
    A = GA.algebra
    out: dict[str, bool | None] = {}
    out["fundamental_identity"] = (not check_fundamental_identity(A)) if identity_ok is None else identity_ok
    out["grading_compatible"] = not check_grading_compat(GA)
    out["maximal_length"] = is_maximal_length(GA)
    view = graded_view(GA, J)
    out["J_graded_ideal"] = view.graded and is_ideal(A, J)
    part = partition_support(GA, J) if view.graded else None
    if out["maximal_length"] and part is not None:
        out["sigma1_multiplicative"] = check_sigma1_multiplicative(GA, part).passed
    else:
        out["sigma1_multiplicative"] = None
    out["t1_span"] = check_t1_span(GA)
    out["lie_annihilator_zero"] = lie_annihilator(GA, J).is_zero() if view.graded else None
    out["sigma1_J0_symmetric"] = is_symmetric(part.sigma1_J0) if part else None
    out["sigma0_symmetric"] = is_symmetric(GA.sigma0)
    for name, sub in (("J_connected_sigma1_J", "sigma1_J"), ("J_connected_sigma1_J0", "sigma1_J0")):
        if part is None:
            out[name] = None
        else:
            out[name] = len(j_connection_classes(getattr(part, sub), GA.sigma0)) <= 1
    if probe is None:
        probe = grprime_probe(GA, J)
    out["grprime_probe_clean"] = probe.clean
    return out


def _direct_certificate(GA: GradedAlgebra, J: Subspace, family) -> str | None:
    """Largest-ideal certificate; returns a reason it does not apply, or None.

    Let I be a nonzero graded ideal.  If I meets some T_g (g in Sigma1) it
    contains T_g and hence the closure of T_g, which is J or T.  If any such
    closure is T then I = T.  Otherwise I lies in T_1 + J, hence in the
    largest ideal M inside T_1 + J; M inside J gives I = J.  If I meets no
    T_g then I lies in the largest ideal inside J n T_1, assumed zero.
    """
    A = GA.algebra
    n = GA.dim
    if not is_maximal_length(GA):
        return "grading is not of maximal length"
    if not (graded_view(GA, J).graded and is_ideal(A, J)):
        return "J is not a graded ideal"
    for g in sorted(GA.sigma1):
        c = ideal_closure(A, [unit_vec(n, i) for i in GA.indices_of(g)])
        if not (c == J or c.is_full()):
            return f"ideal generated by T_{g} is neither J nor T"
    M = largest_ideal_in(A, GA.t1 + J)
    if not J.contains(M):
        return "largest ideal inside T_1 + J is not contained in J"
    L = largest_ideal_in(A, J.intersect(GA.t1))
    if not L.is_zero():
        return "largest ideal inside J n T_1 is nonzero"
    return None


def simplicity_report(
    GA: GradedAlgebra,
    J: Subspace,
    identity_ok: bool | None = None,
    allow_theorem: bool = True,
) -> SimplicityVerdict:
    """Three tiers: direct refutation, direct certification, theorem path.

    ``allow_theorem=False`` disables the theorem path, e.g. when the input
    does not satisfy the fundamental identity.
    """
    A = GA.algebra
    if identity_ok is None:
        identity_ok = not check_fundamental_identity(A)
    family = probe_family(GA)
    probe = grprime_probe(GA, J, family)
    checklist = hypothesis_checklist(GA, J, probe, identity_ok)
    findings = []
    if J.is_zero():
        findings.append("J = 0: the admissible graded ideals are 0 and T")
    elif J.is_full():
        findings.append("J = T: the admissible graded ideals are 0 and T")
    theorem_ready = allow_theorem and all(v is True for v in checklist.values())

    def done(verdict: SimplicityVerdict) -> SimplicityVerdict:
        verdict.checklist = checklist
        verdict.findings = findings
        verdict.probe = probe
        if verdict.tier == "not-simple" and theorem_ready:
            raise TheoremContradiction(
                "simplicity",
                f"every hypothesis of the structure theorem holds but {verdict.reason}",
            )
        return verdict

    ideals = enumerate_graded_ideals(GA)
    # (a) refutation
    if _whole_product_zero(A):
        witness = next((s for _, s in family if not _trivial(s, J)), None)
        return done(SimplicityVerdict("not-simple", "direct", witness, None, "[T, T, T] = 0", graded_ideals=ideals))
    for label, s in family:
        if not _trivial(s, J):
            return done(SimplicityVerdict(
                "not-simple", "direct", s, label, f"graded ideal {label} is not 0, J or T", graded_ideals=ideals
            ))
    if ideals is not None:
        extra = [s for s in ideals if not _trivial(s, J)]
        if extra:
            return done(SimplicityVerdict(
                "not-simple", "exhaustive", extra[0], None, "a graded ideal is not 0, J or T", graded_ideals=ideals
            ))
    # (b) certification
    if ideals is not None:
        return done(SimplicityVerdict(
            "certified-simple-direct", "exhaustive", reason="every graded ideal is 0, J or T", graded_ideals=ideals
        ))
    why_not = _direct_certificate(GA, J, family)
    if why_not is None:
        return done(SimplicityVerdict(
            "certified-simple-direct", "largest-ideal", reason="largest-ideal certificate holds"
        ))
    findings.append(f"direct certificate unavailable: {why_not}")
    # (c) theorem path
    if theorem_ready:
        return done(SimplicityVerdict(
            "certified-simple-by-theorem", "theorem", reason="every hypothesis of the structure theorem holds"
        ))
    failed = [k for k, v in checklist.items() if v is not True]
    if not allow_theorem:
        findings.append("theorem path disabled because the fundamental identity fails")
    return done(SimplicityVerdict("inconclusive", "none", reason="failed hypotheses: " + ", ".join(failed)))


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------


def _g(g: GroupElement) -> list[int]:
    return g.flat()


def _gs(gs) -> list[list[int]]:
    return [g.flat() for g in sorted(gs)]


def _sub(A: TriAlgebra, S: Subspace) -> dict:
    return {"dim": S.dim, "basis": [A.format_vec(r) for r in S.rows]}


def _classes_json(cc: ConnectionClasses) -> list[dict]:
    out = []
    for cls in cc.classes:
        out.append({
            "representative": _g(cls[0]),
            "members": _gs(cls),
            "witnesses": [
                {"to": _g(x), **cc.witnesses[x].as_lists()} for x in cls
            ],
        })
    return out


@dataclass
class AnalysisReport:
    data: dict
    findings: list[dict]
    verdict: SimplicityVerdict | None = None

    def to_dict(self) -> dict:
        return {**self.data, "findings": self.findings}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def finding_messages(self) -> list[str]:
        return [f["message"] for f in self.findings]


def _claim_findings(claims: dict, computed: dict) -> list[dict]:
    out = []
    for key in sorted(claims):
        if key not in computed:
            continue
        claimed, actual = claims[key], computed[key]
        if isinstance(claimed, list):
            claimed = sorted(c if isinstance(c, list) else [c] for c in claimed)
        if claimed != actual:
            out.append({
                "stage": "claims",
                "message": f"claim {key} = {json.dumps(claims[key])} disagrees with computed {json.dumps(actual)}",
            })
    return out


def full_report(
    GA: GradedAlgebra,
    j_mode: str = "literal",
    j_candidate: Subspace | None = None,
    require_identity: bool = True,
    claims: dict | None = None,
) -> AnalysisReport:
    """Run the whole pipeline.  Hard precondition failures raise
    :class:`PreconditionError` naming the stage."""
    if j_mode not in ("literal", "candidate"):
        raise ValueError("j_mode must be 'literal' or 'candidate'")
    A = GA.algebra
    n = GA.dim
    data: dict = {}
    findings: list[dict] = []

    def note(stage, message):
        findings.append({"stage": stage, "message": message})

    # identity
    violations = check_fundamental_identity(A)
    mirrored = check_fundamental_identity(A, "right")
    data["identity"] = {
        "tuples_checked": n ** 5,
        "violations": len(violations),
        "examples": [v.describe(A) for v in violations[:5]],
        "mirrored_violations": len(mirrored),
    }
    if violations:
        msg = f"fundamental identity fails on {len(violations)} of {n ** 5} basis 5-tuples"
        if require_identity:
            raise PreconditionError("identity", f"{msg}; first: {violations[0].describe(A)}")
        note("identity", msg + "; continuing on request, theorem-based conclusions are disabled")
        if not mirrored:
            note("identity", "the reversed product [z, y, x] satisfies the fundamental identity")
    identity_ok = not violations

    # grading
    bad = check_grading_compat(GA)
    data["grading"] = {"group": str(GA.group), "violations": len(bad)}
    if bad:
        i, j, k = bad[0].indices
        raise PreconditionError(
            "grading", f"product [{A.basis_labels[i]}, {A.basis_labels[j]}, {A.basis_labels[k]}] leaves degree {bad[0].required}"
        )

    # supports
    maximal = is_maximal_length(GA)
    data["supports"] = {
        "sigma1": _gs(GA.sigma1),
        "sigma0": _gs(GA.sigma0),
        "sigma1_symmetric": is_symmetric(GA.sigma1),
        "sigma0_symmetric": is_symmetric(GA.sigma0),
        "maximal_length": maximal,
        "component_dimensions": [[_g(g), d] for g, d in component_dimensions(GA).items()],
    }

    # connections
    cc = connection_classes(GA.sigma1, GA.sigma0)
    data["connections"] = _classes_json(cc)

    # decomposition
    dec = decompose(GA, cc)
    data["decomposition"] = {
        "t1_sigma1": _sub(A, dec.t1_sigma1),
        "complement": _sub(A, dec.complement),
        "class_ideals": [
            {"members": _gs(ci.members), "ideal": _sub(A, ci.total), "is_ideal": ok}
            for ci, ok in zip(dec.class_ideals, dec.ideals_ok)
        ],
        "orthogonal": dec.orthogonality_verified,
        "recovers_t": dec.recovers_t,
        "overlap": dec.overlap,
    }
    for f in dec.findings:
        note("decomposition", f)

    # J
    literal = j_literal(A)
    lit_val = validate_j_candidate(GA, literal)
    data["j"] = {"mode": j_mode, "literal": _sub(A, literal), "literal_validation": _validation_json(lit_val)}
    if not lit_val.right_annihilated:
        note("j", f"literal J violates [T,T,J] = [T,J,T] = 0: {lit_val.witnesses[len(lit_val.witnesses) - len(lit_val.eq22_violations)]}")
    if literal.is_full():
        note("j", "literal J is the whole algebra")
    if j_candidate is not None:
        cand_val = validate_j_candidate(GA, j_candidate)
        data["j"]["candidate"] = _sub(A, j_candidate)
        data["j"]["candidate_validation"] = _validation_json(cand_val)
        if j_candidate != literal:
            note("j", f"literal J (dim {literal.dim}) differs from the candidate J (dim {j_candidate.dim})")
        for w in cand_val.witnesses:
            note("j", f"candidate J: {w}")
    if j_mode == "candidate":
        if j_candidate is None:
            raise PreconditionError("j", "no j_candidate supplied")
        J, val = j_candidate, cand_val
    else:
        J, val = literal, lit_val
    if not (val.is_ideal and val.is_graded):
        raise PreconditionError("j", f"designated J is not a graded ideal: {val.witnesses[0]}")

    # partition
    part = partition_support(GA, J, j_mode)
    sj_classes = j_connection_classes(part.sigma1_J, GA.sigma0)
    sj0_classes = j_connection_classes(part.sigma1_J0, GA.sigma0)
    data["partition"] = {
        "sigma1_J": _gs(part.sigma1_J),
        "sigma1_J0": _gs(part.sigma1_J0),
        "sigma1_J_classes": _classes_json(sj_classes),
        "sigma1_J0_classes": _classes_json(sj0_classes),
        "sigma1_J_connected": len(sj_classes) <= 1,
        "sigma1_J0_connected": len(sj0_classes) <= 1,
    }

    # multiplicativity
    if maximal:
        mult = check_sigma1_multiplicative(GA, part)
        first = mult.first
        data["multiplicativity"] = {
            "applicable": True,
            "passed": mult.passed,
            "triples_checked": mult.checked,
            "violations": len(mult.violations),
            "first_violation": None if first is None else {
                "condition": first[0], "g": _g(first[1]), "h": _g(first[2]), "k": _g(first[3])
            },
        }
        if first is not None:
            note("multiplicativity", f"condition ({first[0]}) fails at (g, h, k) = ({first[1]}, {first[2]}, {first[3]})")
    else:
        data["multiplicativity"] = {"applicable": False}

    # annihilators
    ann = annihilator(A)
    ann_lie = lie_annihilator(GA, J)
    data["annihilators"] = {"ann": _sub(A, ann), "ann_lie": _sub(A, ann_lie), "t1_span": check_t1_span(GA)}
    lam = []
    for psi, classes in (("J", sj_classes), ("J0", sj0_classes)):
        for cls in classes.classes:
            li = lambda_ideal(GA, cls[0], psi, J)
            lam.append({"part": psi, "members": _gs(li.members), "subspace": _sub(A, li.ideal.total), "status": li.status})
    data["lambda_ideals"] = lam

    # simplicity
    verdict = simplicity_report(GA, J, identity_ok=identity_ok, allow_theorem=identity_ok)
    data["simplicity"] = {
        "tier": verdict.tier,
        "method": verdict.method,
        "reason": verdict.reason,
        "witness": None if verdict.witness is None else _sub(A, verdict.witness),
        "witness_label": verdict.witness_label,
        "probe": verdict.probe.status,
        "checklist": verdict.checklist,
    }
    if verdict.graded_ideals is not None:
        data["simplicity"]["graded_ideals"] = [_sub(A, s) for s in verdict.graded_ideals]
    for f in verdict.findings:
        note("simplicity", f)
    if verdict.tier.startswith("certified"):
        failed = [k for k, v in verdict.checklist.items() if v is False]
        if failed:
            note("simplicity", "informational: theorem hypotheses not met: " + ", ".join(failed))

    computed = {
        "fundamental_identity": identity_ok,
        "sigma1": _gs(GA.sigma1),
        "sigma0": _gs(GA.sigma0),
        "maximal_length": maximal,
        "annihilator_zero": ann.is_zero(),
        "lie_annihilator_zero": ann_lie.is_zero(),
        "single_class": len(cc) <= 1,
        "gr_simple": verdict.simple,
    }
    if maximal:
        computed["sigma1_multiplicative"] = data["multiplicativity"]["passed"]
    findings.extend(_claim_findings(claims or {}, computed))
    return AnalysisReport(data, findings, verdict)


def _validation_json(v) -> dict:
    return {
        "is_ideal": v.is_ideal,
        "is_graded": v.is_graded,
        "right_annihilated": v.right_annihilated,
        "witnesses": list(v.witnesses),
    }


def format_text(report: AnalysisReport) -> str:
    d = report.data
    lines = []
    ident = d["identity"]
    lines.append(f"identity: {ident['violations']} violations over {ident['tuples_checked']} basis 5-tuples")
    lines.append(f"grading: {d['grading']['group']}, {d['grading']['violations']} violations")
    s = d["supports"]
    lines.append(f"sigma1: {s['sigma1']}")
    lines.append(f"sigma0: {s['sigma0']}")
    lines.append(f"maximal length: {s['maximal_length']}")
    lines.append(f"connection classes: {[c['members'] for c in d['connections']]}")
    dec = d["decomposition"]
    lines.append(f"T_1,Sigma1: {dec['t1_sigma1']['basis']}  U: {dec['complement']['basis']}")
    for ci in dec["class_ideals"]:
        lines.append(f"  class {ci['members']}: {ci['ideal']['basis']} ideal={ci['is_ideal']}")
    j = d["j"]
    lines.append(f"J ({j['mode']}): literal {j['literal']['basis']}")
    if "candidate" in j:
        lines.append(f"  candidate {j['candidate']['basis']}")
    p = d["partition"]
    lines.append(f"sigma1_J: {p['sigma1_J']}  sigma1_J0: {p['sigma1_J0']}")
    lines.append(f"J-connected: {p['sigma1_J_connected']}, {p['sigma1_J0_connected']}")
    m = d["multiplicativity"]
    if m["applicable"]:
        lines.append(f"sigma1-multiplicative: {m['passed']}")
    else:
        lines.append("sigma1-multiplicative: not applicable")
    a = d["annihilators"]
    lines.append(f"Ann: {a['ann']['basis']}  Ann_Lie: {a['ann_lie']['basis']}")
    v = d["simplicity"]
    lines.append(f"verdict: {v['tier']} ({v['method']}): {v['reason']}")
    if v["witness"]:
        lines.append(f"  witness: {v['witness']['basis']}")
    for f in report.findings:
        lines.append(f"finding [{f['stage']}]: {f['message']}")
    return "\n".join(lines)

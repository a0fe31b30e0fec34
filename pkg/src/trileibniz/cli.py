"""Command-line interface.

Exit codes: 0 completed (whatever the verdict), 2 malformed input,
3 precondition failure (stage on stderr), 4 theorem contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .algebra import check_fundamental_identity
from .analysis import format_text, full_report
from .connections import NotInSupport, connected, connection_classes
from .errors import MalformedInput, PreconditionError, TheoremContradiction
from .grading import check_grading_compat, is_maximal_length
from .groups import is_symmetric
from .ideals import annihilator, decompose, graded_view, j_literal, lie_annihilator, validate_j_candidate


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _gs(gs):
    return [g.flat() for g in sorted(gs)]


def _sub(A, S):
    return {"dim": S.dim, "basis": [A.format_vec(r) for r in S.rows]}


def _element(GA, text: str):
    try:
        coords = [int(x) for x in text.replace("(", "").replace(")", "").split(",")]
        return GA.group.from_flat(coords)
    except ValueError as exc:
        raise MalformedInput(f"bad group element {text!r}: {exc}") from exc


def cmd_verify(args, doc) -> int:
    GA = doc.graded
    A = GA.algebra
    viol = check_fundamental_identity(A)
    grad = check_grading_compat(GA)
    payload = {
        "tuples_checked": A.dim ** 5,
        "identity_violations": len(viol),
        "identity_examples": [v.describe(A) for v in viol[:5]],
        "mirrored_identity_violations": len(check_fundamental_identity(A, "right")),
        "grading_violations": len(grad),
        "grading_examples": [
            f"[{', '.join(A.basis_labels[i] for i in v.indices)}] expected degree {v.required}" for v in grad[:5]
        ],
    }
    lines = [
        f"fundamental identity: {len(viol)} violations over {A.dim ** 5} basis 5-tuples",
        *(f"  {s}" for s in payload["identity_examples"]),
        f"mirrored identity: {payload['mirrored_identity_violations']} violations",
        f"grading: {len(grad)} violations",
        *(f"  {s}" for s in payload["grading_examples"]),
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_support(args, doc) -> int:
    GA = doc.graded
    if check_grading_compat(GA):
        raise PreconditionError("grading", "products are not compatible with the grading")
    payload = {
        "sigma1": _gs(GA.sigma1),
        "sigma0": _gs(GA.sigma0),
        "sigma1_symmetric": is_symmetric(GA.sigma1),
        "sigma0_symmetric": is_symmetric(GA.sigma0),
        "maximal_length": is_maximal_length(GA),
        "findings": [],
    }
    claimed = doc.claims.get("sigma0")
    if claimed is not None:
        claimed = sorted(c if isinstance(c, list) else [c] for c in claimed)
        if claimed != payload["sigma0"]:
            payload["findings"].append(f"claimed sigma0 {claimed} differs from computed {payload['sigma0']}")
    lines = [
        f"sigma1: {payload['sigma1']}",
        f"sigma0: {payload['sigma0']}",
        f"symmetric: sigma1 {payload['sigma1_symmetric']}, sigma0 {payload['sigma0_symmetric']}",
        f"maximal length: {payload['maximal_length']}",
        *(f"finding: {f}" for f in payload["findings"]),
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_connect(args, doc) -> int:
    GA = doc.graded
    if check_grading_compat(GA):
        raise PreconditionError("grading", "products are not compatible with the grading")
    cc = connection_classes(GA.sigma1, GA.sigma0)
    payload = {
        "classes": [
            {"members": _gs(c), "witnesses": [{"to": x.flat(), **cc.witnesses[x].as_lists()} for x in c]}
            for c in cc.classes
        ]
    }
    lines = [f"class [{c[0]}]: {{{', '.join(str(x) for x in c)}}}" for c in cc.classes]
    if (args.source is None) != (args.target is None):
        raise MalformedInput("--from and --to must be given together")
    if args.source is not None:
        g, h = _element(GA, args.source), _element(GA, args.target)
        try:
            w = connected(g, h, GA.sigma1, GA.sigma0)
        except NotInSupport as exc:
            raise PreconditionError("connect", str(exc)) from exc
        payload["query"] = {"from": g.flat(), "to": h.flat(), "connected": w is not None}
        if w is not None:
            payload["query"]["witness"] = w.as_lists()
            lines.append(f"{g} ~ {h}: chain {[str(x) for x in w.chain]}, "
                         f"even partials {[str(x) for x in w.even_partials]}")
        else:
            lines.append(f"{g} and {h} are not connected")
    _emit(args, payload, "\n".join(lines))
    return 0


def _designated_j(args, doc):
    A = doc.graded.algebra
    if args.j == "candidate":
        if doc.j_candidate is None:
            raise PreconditionError("j", "input has no j_candidate")
        return doc.j_candidate
    return j_literal(A)


def cmd_ideals(args, doc) -> int:
    GA = doc.graded
    A = GA.algebra
    J = _designated_j(args, doc)
    val = validate_j_candidate(GA, J)
    payload = {
        "mode": args.j,
        "J": _sub(A, J),
        "is_ideal": val.is_ideal,
        "is_graded": val.is_graded,
        "right_annihilated": val.right_annihilated,
        "witnesses": val.witnesses,
        "ann": _sub(A, annihilator(A)),
    }
    if graded_view(GA, J).graded:
        payload["ann_lie"] = _sub(A, lie_annihilator(GA, J))
    lines = [
        f"J ({args.j}): {payload['J']['basis']}",
        f"ideal: {val.is_ideal}  graded: {val.is_graded}  [T,T,J] = [T,J,T] = 0: {val.right_annihilated}",
        *(f"  witness: {w}" for w in val.witnesses),
        f"Ann: {payload['ann']['basis']}",
    ]
    if "ann_lie" in payload:
        lines.append(f"Ann_Lie: {payload['ann_lie']['basis']}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_decompose(args, doc) -> int:
    GA = doc.graded
    A = GA.algebra
    if check_grading_compat(GA):
        raise PreconditionError("grading", "products are not compatible with the grading")
    dec = decompose(GA)
    payload = {
        "t1_sigma1": _sub(A, dec.t1_sigma1),
        "t1": _sub(A, GA.t1),
        "complement": _sub(A, dec.complement),
        "class_ideals": [
            {"members": _gs(ci.members), "ideal": _sub(A, ci.total), "is_ideal": ok}
            for ci, ok in zip(dec.class_ideals, dec.ideals_ok)
        ],
        "orthogonal": dec.orthogonality_verified,
        "recovers_t": dec.recovers_t,
        "overlap": dec.overlap,
        "findings": dec.findings,
    }
    lines = [
        f"T_1,Sigma1: {payload['t1_sigma1']['basis']}  T_1: {payload['t1']['basis']}",
        f"U: {payload['complement']['basis']}",
        *(f"I[{c['members'][0]}] = {c['ideal']['basis']} ideal={c['is_ideal']}" for c in payload["class_ideals"]),
        f"mixed products zero: {dec.orthogonality_verified}  sum is T: {dec.recovers_t}  overlap: {dec.overlap}",
        *(f"finding: {f}" for f in dec.findings),
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_analyze(args, doc) -> int:
    report = full_report(
        doc.graded,
        j_mode=args.j,
        j_candidate=doc.j_candidate,
        require_identity=not args.allow_identity_failure,
        claims=doc.claims,
    )
    if args.format == "json":
        print(report.to_json())
    else:
        print(format_text(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trileibniz", description="Graded 3-Leibniz algebra analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="JSON algebra description")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    add("verify", cmd_verify, "check the fundamental identity and the grading")
    add("support", cmd_support, "supports of T and of its operator algebra")
    p = add("connect", cmd_connect, "connection classes, optionally a witness between two degrees")
    p.add_argument("--from", dest="source", metavar="G")
    p.add_argument("--to", dest="target", metavar="H")
    p = add("ideals", cmd_ideals, "the ideal J, its validation and the annihilators")
    p.add_argument("--j", choices=("literal", "candidate"), default="literal")
    add("decompose", cmd_decompose, "class-ideal decomposition")
    p = add("analyze", cmd_analyze, "run the whole pipeline")
    p.add_argument("--j", choices=("literal", "candidate"), default="literal")
    p.add_argument(
        "--allow-identity-failure",
        action="store_true",
        help="continue when the fundamental identity fails; theorem-based steps are disabled",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = io.load(args.file)
        return args.func(args, doc)
    except MalformedInput as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: precondition failed at stage {exc.stage}: {exc.message}", file=sys.stderr)
        return 3
    except TheoremContradiction as exc:
        print(f"error: theorem contradiction at stage {exc.stage}: {exc.message}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

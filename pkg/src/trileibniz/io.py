"""JSON input format.

::

    {"field": "rational", "dim": N, "basis": [labels],
     "group": {"free_rank": r, "torsion": [m, ...]},
     "degrees": [[ints per basis vector], ...],
     "products": [{"i": 0, "j": 1, "k": 2, "value": [[l, "num/den"], ...]}, ...],
     "j_candidate": [[...], ...],          # optional
     "claims": {"sigma0": [[...]], ...}}   # optional

Indices are 0-based.  Zero products and zero coefficients must be omitted,
and each (i, j, k) may appear once.  ``j_candidate`` vectors are dense lists
of ``dim`` coefficients or sparse ``[[l, "c"], ...]`` lists.  ``claims``
records values asserted for the algebra by whoever wrote the file; reports
compare them against what is computed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import TriAlgebra
from .errors import MalformedInput, TriLeibnizError
from .grading import GradedAlgebra
from .groups import GroupSpec
from .linalg import Subspace, span

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")

CLAIM_KEYS = (
    "fundamental_identity",
    "sigma1",
    "sigma0",
    "maximal_length",
    "sigma1_multiplicative",
    "annihilator_zero",
    "lie_annihilator_zero",
    "single_class",
    "gr_simple",
)


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise MalformedInput(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.match(x):
        num, _, den = x.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise MalformedInput(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise MalformedInput(f"not an exact rational: {x!r}")


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass
class Document:
    graded: GradedAlgebra
    j_candidate: Subspace | None = None
    claims: dict = field(default_factory=dict)


def _req(doc: dict, key: str, kind):
    if key not in doc:
        raise MalformedInput(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise MalformedInput(f"field {key!r} has the wrong type")
    return val


def _sparse_vector(entries, dim: int, where: str) -> tuple:
    coords = [Fraction(0)] * dim
    seen = set()
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[0], int) or isinstance(entry[0], bool):
            raise MalformedInput(f"{where}: entries must be [index, \"num/den\"] pairs")
        l, c = entry
        if not 0 <= l < dim:
            raise MalformedInput(f"{where}: index {l} outside [0, {dim})")
        if l in seen:
            raise MalformedInput(f"{where}: index {l} repeated")
        seen.add(l)
        c = parse_rational(c)
        if c == 0:
            raise MalformedInput(f"{where}: zero coefficients must be omitted")
        coords[l] = c
    return tuple(coords)


def parse_document(doc: Any) -> Document:
    if not isinstance(doc, dict):
        raise MalformedInput("top level must be a JSON object")
    if doc.get("field", "rational") != "rational":
        raise MalformedInput(f"unsupported field {doc.get('field')!r}; only 'rational' is supported")
    dim = _req(doc, "dim", int)
    if dim < 1:
        raise MalformedInput("dim must be positive")
    labels = doc.get("basis") or [f"e{i + 1}" for i in range(dim)]
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(s, str) for s in labels):
        raise MalformedInput("basis must list one string label per dimension")
    if len(set(labels)) != dim:
        raise MalformedInput("basis labels must be distinct")
    g = _req(doc, "group", dict)
    try:
        group = GroupSpec(int(g.get("free_rank", 0)), tuple(int(m) for m in g.get("torsion", [])))
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad group: {exc}") from exc
    degrees = _req(doc, "degrees", list)
    if len(degrees) != dim:
        raise MalformedInput(f"{len(degrees)} degrees for dimension {dim}")
    try:
        elems = tuple(group.from_flat(d if isinstance(d, list) else [d]) for d in degrees)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad degree: {exc}") from exc
    structure = {}
    for n, p in enumerate(_req(doc, "products", list)):
        if not isinstance(p, dict):
            raise MalformedInput(f"product #{n} must be an object")
        key = []
        for name in ("i", "j", "k"):
            v = p.get(name)
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < dim:
                raise MalformedInput(f"product #{n}: {name} must be an index in [0, {dim})")
            key.append(v)
        key = tuple(key)
        if key in structure:
            raise MalformedInput(f"duplicate product entry {key}")
        value = p.get("value")
        if not isinstance(value, list) or not value:
            raise MalformedInput(f"product #{n}: zero products must be omitted")
        structure[key] = _sparse_vector(value, dim, f"product {key}")
    try:
        algebra = TriAlgebra(dim, structure, tuple(labels))
        graded = GradedAlgebra(algebra, group, elems)
    except TriLeibnizError as exc:
        raise MalformedInput(str(exc)) from exc
    j_candidate = None
    if doc.get("j_candidate") is not None:
        rows = []
        for v in doc["j_candidate"]:
            if isinstance(v, list) and v and all(isinstance(e, list) for e in v):
                rows.append(_sparse_vector(v, dim, "j_candidate"))
            elif isinstance(v, list) and len(v) == dim:
                rows.append(tuple(parse_rational(c) for c in v))
            else:
                raise MalformedInput("j_candidate vectors must be dense or sparse coefficient lists")
        j_candidate = span(rows, dim)
    claims = doc.get("claims") or {}
    if not isinstance(claims, dict):
        raise MalformedInput("claims must be an object")
    unknown = set(claims) - set(CLAIM_KEYS)
    if unknown:
        raise MalformedInput(f"unknown claims: {sorted(unknown)}")
    return Document(graded, j_candidate, claims)


def load(path: str | Path) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc
    return parse_document(doc)


def dump_document(GA: GradedAlgebra, j_candidate: Subspace | None = None, claims: dict | None = None) -> dict:
    A = GA.algebra
    products = []
    for (i, j, k), v in A.structure.items():
        products.append(
            {"i": i, "j": j, "k": k, "value": [[l, format_rational(c)] for l, c in enumerate(v) if c]}
        )
    doc = {
        "field": "rational",
        "dim": A.dim,
        "basis": list(A.basis_labels),
        "group": {"free_rank": GA.group.free_rank, "torsion": list(GA.group.torsion_moduli)},
        "degrees": [d.flat() for d in GA.degrees],
        "products": products,
    }
    if j_candidate is not None:
        doc["j_candidate"] = [[[l, format_rational(c)] for l, c in enumerate(r) if c] for r in j_candidate.rows]
    if claims:
        doc["claims"] = claims
    return doc

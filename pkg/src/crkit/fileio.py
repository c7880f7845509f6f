"""Loading and saving the structured (JSON) file formats.

Three payload kinds, detected by their fields:

  algebra     dimension, field ("Q" | "Q_i"), basis, brackets
              brackets is a sparse list of [i, j, [[k, scalar], ...]] with
              i < j only; antisymmetry is filled in by the loader.
  cr-pair     an algebra payload plus h_basis, R_basis (rational rows) and
              J (dense rational matrix)
  orbit       ambient (an algebra payload over Q_i), real_basis (rational
              rows in realified coordinates), isotropy_hat_basis (rows
              over Q_i), optional kahler tag and pi1 data

Scalars are exact strings "num/den"; Q(i) scalars are ["re", "im"] pairs
of such strings (a bare string means a real value).
"""

from __future__ import annotations

import json

from .algebra import LieAlgebra, span
from .complexify import OrbitModel
from .cr import CRPair
from .errors import InputError
from .scalars import QI, QQ, format_scalar, parse_rational, parse_scalar

SCHEMA = "crkit/1"


def _require(payload, key, kind):
    if key not in payload:
        raise InputError(f"{kind} payload is missing {key!r}")
    return payload[key]


def load_algebra(payload) -> LieAlgebra:
    if not isinstance(payload, dict):
        raise InputError("algebra payload must be an object")
    dim = _require(payload, "dimension", "algebra")
    field = _require(payload, "field", "algebra")
    if field not in (QQ, QI):
        raise InputError(f"unknown field tag {field!r}")
    if not isinstance(dim, int) or dim < 0:
        raise InputError("dimension must be a nonnegative integer")
    basis = payload.get("basis")
    if basis is None:
        basis = [f"e{k}" for k in range(dim)]
    if len(basis) != dim:
        raise InputError("basis name count does not match dimension")
    brackets = {}
    for item in payload.get("brackets", []):
        try:
            i, j, terms = item
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad bracket entry {item!r}") from exc
        if not (isinstance(i, int) and isinstance(j, int)):
            raise InputError(f"bracket indices must be integers, got {item!r}")
        if not i < j:
            raise InputError(
                f"bracket entry ({i}, {j}): only i < j entries are allowed; "
                "antisymmetry is filled in automatically"
            )
        row = {}
        for term in terms:
            try:
                k, literal = term
            except (TypeError, ValueError) as exc:
                raise InputError(f"bad bracket term {term!r}") from exc
            row[k] = parse_scalar(literal, field)
        if (i, j) in brackets:
            raise InputError(f"duplicate bracket entry for ({i}, {j})")
        brackets[(i, j)] = row
    return LieAlgebra(dim, field, tuple(basis), brackets)


def algebra_payload(L: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(L.brackets):
        row = L.brackets[(i, j)]
        terms = [[k, format_scalar(row[k], L.field)] for k in sorted(row)]
        brackets.append([i, j, terms])
    return {
        "schema": SCHEMA,
        "kind": "algebra",
        "dimension": L.dim,
        "field": L.field,
        "basis": list(L.names),
        "brackets": brackets,
    }


def _rational_rows(data, width, what):
    rows = []
    for row in data:
        if len(row) != width:
            raise InputError(f"{what} rows must have length {width}")
        rows.append(tuple(parse_rational(x) for x in row))
    return rows


def load_cr_pair(payload):
    """(algebra, CRPair) from a cr-pair payload."""
    g = load_algebra(payload)
    if g.field != QQ:
        raise InputError("CR pairs need a real (Q) algebra")
    h_rows = _rational_rows(_require(payload, "h_basis", "cr-pair"), g.dim, "h_basis")
    r_rows = _rational_rows(_require(payload, "R_basis", "cr-pair"), g.dim, "R_basis")
    jdata = _require(payload, "J", "cr-pair")
    if len(jdata) != g.dim:
        raise InputError("J must be a dim x dim matrix")
    j = tuple(tuple(parse_rational(x) for x in row) for row in jdata)
    for row in j:
        if len(row) != g.dim:
            raise InputError("J must be a dim x dim matrix")
    pair = CRPair(g, span(g, h_rows), span(g, r_rows), j)
    return g, pair


def cr_pair_payload(pair: CRPair) -> dict:
    payload = algebra_payload(pair.g)
    payload["kind"] = "cr-pair"
    payload["h_basis"] = [[format_scalar(x, QQ) for x in row] for row in pair.h.rows]
    payload["R_basis"] = [[format_scalar(x, QQ) for x in row] for row in pair.r.rows]
    payload["J"] = [[format_scalar(x, QQ) for x in row] for row in pair.j]
    return payload


def load_orbit_model(payload) -> OrbitModel:
    ambient = load_algebra(_require(payload, "ambient", "orbit"))
    if ambient.field != QI:
        raise InputError("orbit ambient algebra must be complex (Q_i)")
    width = 2 * ambient.dim
    real_rows = _rational_rows(_require(payload, "real_basis", "orbit"), width, "real_basis")
    iso_rows = []
    for row in payload.get("isotropy_hat_basis", []):
        if len(row) != ambient.dim:
            raise InputError("isotropy rows must have the ambient complex dimension")
        iso_rows.append(tuple(parse_scalar(x, QI) for x in row))
    return OrbitModel(ambient, real_rows, iso_rows, name=payload.get("name", ""))


def orbit_payload(model: OrbitModel) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "orbit",
        "name": model.name,
        "ambient": algebra_payload(model.ambient),
        "real_basis": [
            [format_scalar(x, QQ) for x in row] for row in model.real_rows
        ],
        "isotropy_hat_basis": [
            [format_scalar(x, QI) for x in row] for row in model.isotropy_rows
        ],
    }


def detect_kind(payload) -> str:
    if not isinstance(payload, dict):
        raise InputError("payload must be a JSON object")
    kind = payload.get("kind")
    if kind in ("algebra", "cr-pair", "orbit"):
        return kind
    if "ambient" in payload:
        return "orbit"
    if "R_basis" in payload or "h_basis" in payload:
        return "cr-pair"
    if "dimension" in payload:
        return "algebra"
    raise InputError("cannot determine payload kind")


def load_file(path):
    """(kind, loaded object(s)) for a structured input file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON in {path}: {exc}") from exc
    kind = detect_kind(payload)
    if kind == "algebra":
        return kind, load_algebra(payload), payload
    if kind == "cr-pair":
        return kind, load_cr_pair(payload), payload
    return kind, load_orbit_model(payload), payload


def dump_payload(payload, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")

"""Group files, report documents, and export formats.

Group file schema (JSON object):

  {"name": str?,                      either a full table ...
   "order": int, "table": [[int]],
   "names": [str]?}

  {"name": str?,                      ... or a permutation generating set
   "degree": int, "generators": [[int], ...]}

Exactly one of "table" / "generators" must be present.  Indices are 0-based;
if the identity of a table sits at an index other than 0 it is relocated on
load (the group records the original index in `relabeled_from`).

Report documents are schema-versioned JSON with sorted keys so identical runs
serialize byte-identically; per-check wall-clock timing is deliberately left
out of the document for the same reason.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ._version import __version__
from .catalog import catalog_group
from .errors import ParseError
from .groups import FiniteGroup, group_center, group_from_permutations, group_from_table
from .report import CheckReport, summarize

REPORT_SCHEMA = "gyrolab-report/1"
SEARCH_SCHEMA = "gyrolab-search/1"


# ---------------------------------------------------------------------------
# group files

def parse_group_file(path) -> FiniteGroup:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(str(path), f"cannot read: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(path),
                         f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(str(path), "top level must be a JSON object")

    has_table = "table" in doc
    has_gens = "generators" in doc
    if has_table == has_gens:
        raise ParseError(str(path),
                         "exactly one of 'table' and 'generators' must be present")

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError(str(path), "field 'name' must be a string")

    if has_table:
        order = doc.get("order")
        if not isinstance(order, int) or order < 1:
            raise ParseError(str(path), "field 'order' must be a positive integer")
        try:
            arr = np.asarray(doc["table"], dtype=np.int32)
        except (TypeError, ValueError) as exc:
            raise ParseError(str(path),
                             f"field 'table' is not a rectangular integer array: {exc}") from exc
        if arr.ndim != 2 or arr.shape != (order, order):
            raise ParseError(str(path),
                             f"field 'table' has shape {tuple(arr.shape)}, "
                             f"expected ({order}, {order})")
        names = doc.get("names")
        if names is not None:
            if (not isinstance(names, list) or len(names) != order
                    or not all(isinstance(s, str) for s in names)):
                raise ParseError(str(path),
                                 f"field 'names' must be a list of {order} strings")
        return group_from_table(arr, names=names, name=name or p.stem)

    degree = doc.get("degree")
    if not isinstance(degree, int) or degree < 1:
        raise ParseError(str(path), "field 'degree' must be a positive integer")
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise ParseError(str(path), "field 'generators' must be a non-empty list")
    for i, g in enumerate(gens):
        if (not isinstance(g, list) or len(g) != degree
                or not all(isinstance(v, int) for v in g)):
            raise ParseError(str(path),
                             f"generator {i} must be a list of {degree} integers")
    return group_from_permutations(degree, gens, name=name or p.stem)


def write_group_file(G: FiniteGroup, path) -> None:
    doc = {
        "name": G.name,
        "order": G.order,
        "table": G.table.tolist(),
        "names": list(G.names),
    }
    Path(path).write_text(dumps_json(doc))


def resolve_group(spec: str) -> FiniteGroup:
    """Turn 'file:PATH' or a catalog spec string into a group."""
    if spec.startswith("file:"):
        return parse_group_file(spec[len("file:"):])
    return catalog_group(spec)


def gather_sources(inputs: str) -> list[str]:
    """Expand the --inputs argument of the scan: a directory of .json group
    files (sorted) or a text file with one source spec per line."""
    p = Path(inputs)
    if p.is_dir():
        return [f"file:{f}" for f in sorted(p.glob("*.json"))]
    if p.is_file():
        out = []
        for line in p.read_text().splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(line)
        return out
    raise ParseError(inputs, "not a directory or a readable list file")


# ---------------------------------------------------------------------------
# documents

def dumps_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def group_descriptor(G: FiniteGroup, source: str | None = None) -> dict:
    d = {"name": G.name, "order": G.order}
    if source is not None:
        d["source"] = source
    if G.relabeled_from is not None:
        d["identity_relocated_from"] = G.relabeled_from
    return d


def report_document(G: FiniteGroup, reports: list[CheckReport],
                    source: str | None = None) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "tool": {"name": "gyrolab", "version": __version__},
        "group": group_descriptor(G, source),
        "checks": [r.to_dict() for r in reports],
        "summary": summarize(reports),
    }


def search_document(summary_dict: dict) -> dict:
    return {
        "schema": SEARCH_SCHEMA,
        "tool": {"name": "gyrolab", "version": __version__},
        **summary_dict,
    }


# ---------------------------------------------------------------------------
# exports

def matrix_csv(matrix) -> str:
    rows = np.asarray(matrix)
    return "\n".join(",".join(str(int(v)) for v in row) for row in rows) + "\n"


def export_circ_table(G: FiniteGroup) -> dict:
    from .gyro import build_gyro
    L = build_gyro(G).loop
    return {
        "kind": "circ-table",
        "group": group_descriptor(G),
        "order": L.order,
        "table": L.table.tolist(),
        "names": list(L.names),
    }


def export_gyration_table(G: FiniteGroup) -> dict:
    from .gyro import build_gyro, gyration_table
    L = build_gyro(G).loop
    gt = gyration_table(L)
    return {
        "kind": "gyration-table",
        "group": group_descriptor(G),
        "order": L.order,
        "ids": gt.ids.tolist(),
        "gyrations": [np.asarray(p).tolist() for p in gt.perms],
    }


def export_factor_set(G: FiniteGroup) -> dict:
    from .cocycle import factor_set, gyro_factor_set, make_transversal
    from .gyro import build_gyro
    Z = group_center(G)
    T = make_transversal(G, Z, policy="least-index")
    fs = factor_set(G, T)
    tf = gyro_factor_set(fs, build_gyro(T.quotient).loop)
    z_list = sorted(Z)
    return {
        "kind": "factor-set",
        "group": group_descriptor(G),
        "center": z_list,
        "center_names": [G.names[i] for i in z_list],
        "quotient_order": T.quotient.order,
        "reps": [int(r) for r in T.reps],
        "plain": fs.local_values().tolist(),
        "twisted": tf.local_values().tolist(),
    }


_EXPORTERS = {
    "circ-table": export_circ_table,
    "gyration-table": export_gyration_table,
    "factor-set": export_factor_set,
}

# which matrix a CSV export of each kind dumps
_CSV_FIELD = {
    "circ-table": "table",
    "gyration-table": "ids",
    "factor-set": "twisted",
}


def export_document(G: FiniteGroup, what: str) -> dict:
    if what not in _EXPORTERS:
        raise ValueError(f"unknown export kind {what!r}")
    return _EXPORTERS[what](G)


def export_text(G: FiniteGroup, what: str, fmt: str) -> str:
    doc = export_document(G, what)
    if fmt == "json":
        return dumps_json(doc)
    if fmt == "csv":
        return matrix_csv(doc[_CSV_FIELD[what]])
    raise ValueError(f"unknown export format {fmt!r}")

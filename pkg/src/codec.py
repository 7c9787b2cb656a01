"""JSON formats for quivers, base objects, representations, sequences, traces and reports."""

import json
from pathlib import Path
from typing import Any

import numpy as np

from base import BaseCategory, BaseMorphism, BaseObject, BaseSES, Kind, instance
from construct import ConstructionTrace, TraceLevel, VertexStep
from errors import InputError
from ext import OrthogonalityReport
from quiver import Quiver, VertexFiltration
from rep import RepMorphism, Representation, RepSES


def load_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError(f"File not found: {path}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def dumps(payload: Any) -> str:
    """Canonical form: sorted keys, so equal payloads give byte-identical text."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def write_json(path: str | Path, payload: Any) -> None:
    Path(path).write_text(dumps(payload) + "\n", encoding="utf-8")


def matrix_to_json(a: np.ndarray) -> list[list[int]]:
    return [[int(v) for v in row] for row in a]


def matrix_from_json(doc: list, rows: int, cols: int) -> np.ndarray:
    """Row-major integer arrays of shape (rows, cols); an empty list stands for any matrix with no entries."""
    if not isinstance(doc, list) or not all(isinstance(row, list) for row in doc):
        raise InputError(f"Matrix must be a list of rows, got {doc!r}")
    entries = [v for row in doc for v in row]
    for v in entries:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"Matrix entry {v!r} is not an integer")
    if not entries and rows * cols == 0:
        return np.zeros((rows, cols), dtype=np.int64)
    if len(doc) != rows or any(len(row) != cols for row in doc):
        raise InputError(f"Matrix {doc!r} is not {rows}x{cols}")
    return np.array(doc, dtype=np.int64)


# quivers

def quiver_from_json(doc: dict) -> Quiver:
    try:
        return Quiver.build(
            doc["vertices"], [(a["id"], a["src"], a["tgt"]) for a in doc.get("arrows", [])])
    except (KeyError, TypeError) as e:
        raise InputError(f"Malformed quiver document: missing or invalid {e}") from None


def quiver_to_json(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "src": a.source, "tgt": a.target} for a in q.arrows],
    }


def load_quiver(path: str | Path) -> Quiver:
    return quiver_from_json(load_json(path))


def filtration_to_json(f: VertexFiltration) -> dict:
    return {"levels": [list(level) for level in f.levels], "stabilized_at": f.stabilized_at}


# base objects

def instance_from_json(doc: dict) -> BaseCategory:
    try:
        return instance(Kind(doc["kind"]), int(doc.get("p", 2)))
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"Malformed base instance {doc!r}: {e}") from None


def object_from_json(doc: dict, cat: BaseCategory | None = None) -> BaseObject:
    """{"kind","p","dim"} plus "nil" for dual numbers; kind and p default to `cat`."""
    if cat is None or "kind" in doc:
        cat = instance_from_json({"kind": doc.get("kind"), "p": doc.get("p", cat.p if cat else 2)})
    try:
        dim = int(doc["dim"])
        if "nil" in doc:
            return cat.obj(matrix_from_json(doc["nil"], dim, dim))
        return cat.canonical(dim, int(doc.get("rank", 0)))
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"Malformed base object {doc!r}: {e}") from None


def object_to_json(m: BaseObject) -> dict:
    doc = {"kind": m.kind.value, "p": m.p, "dim": m.dim}
    if m.kind is Kind.DUAL:
        doc["nil"] = matrix_to_json(m.nil)
    return doc


def morphism_to_json(f: BaseMorphism) -> list[list[int]]:
    return matrix_to_json(f.matrix)


def base_ses_to_json(e: BaseSES) -> dict:
    return {
        "sub": object_to_json(e.sub),
        "middle": object_to_json(e.middle),
        "quotient": object_to_json(e.quotient),
        "mono": morphism_to_json(e.mono),
        "epi": morphism_to_json(e.epi),
    }


# representations

def representation_from_json(doc: dict, base_dir: Path | None = None) -> Representation:
    """The "quiver" entry is an inline document or a path relative to `base_dir`."""
    try:
        quiver_doc = doc["quiver"]
        if isinstance(quiver_doc, str):
            quiver_doc = load_json((base_dir or Path.cwd()) / quiver_doc)
        q = quiver_from_json(quiver_doc)
        cat = instance_from_json(doc["base"])
        objects = {str(v): object_from_json(o, cat) for v, o in doc["objects"].items()}
        matrices = {
            str(a): matrix_from_json(m, objects[q.arrow(a).target].dim, objects[q.arrow(a).source].dim)
            for a, m in doc.get("maps", {}).items()
        }
    except (KeyError, ValueError, TypeError, AttributeError) as e:
        raise InputError(f"Malformed representation document: {e}") from None
    return Representation.build(q, cat, objects, matrices)


def representation_to_json(x: Representation) -> dict:
    return {
        "quiver": quiver_to_json(x.quiver),
        "base": {"kind": x.category.kind.value, "p": x.category.p},
        "objects": {v: object_to_json(m) for v, m in x.objects.items()},
        "maps": {a: morphism_to_json(f) for a, f in x.maps.items()},
    }


def load_representation(path: str | Path) -> Representation:
    path = Path(path)
    return representation_from_json(load_json(path), path.parent)


def rep_morphism_to_json(f: RepMorphism) -> dict:
    return {v: morphism_to_json(c) for v, c in f.components.items()}


def ses_to_json(e: RepSES) -> dict:
    return {
        "sub": representation_to_json(e.sub),
        "middle": representation_to_json(e.middle),
        "quotient": representation_to_json(e.quotient),
        "mono": rep_morphism_to_json(e.mono),
        "epi": rep_morphism_to_json(e.epi),
    }


# traces and reports

def _step_to_json(step: VertexStep) -> dict:
    doc = {
        "vertex": step.vertex,
        "level": step.level,
        "correction": base_ses_to_json(step.correction),
        "maps": {a: morphism_to_json(f) for a, f in step.maps},
        "snake": base_ses_to_json(step.snake),
    }
    if step.l is not None:
        doc["h"] = object_to_json(step.h)
        doc["l"] = object_to_json(step.l)
        doc["splitting"] = morphism_to_json(step.splitting)
    return doc


def _level_to_json(level: TraceLevel) -> dict:
    return {
        "index": level.index,
        "changed": list(level.changed),
        "ses": ses_to_json(level.ses),
        "middle_map": rep_morphism_to_json(level.middle_map) if level.middle_map is not None else None,
        "outer_map": rep_morphism_to_json(level.outer_map) if level.outer_map is not None else None,
        "steps": [_step_to_json(s) for s in level.steps],
    }


def trace_to_json(trace: ConstructionTrace) -> dict:
    return {
        "kind": trace.engine.value,
        "filtration": filtration_to_json(trace.filtration),
        "levels": [_level_to_json(level) for level in trace.levels],
    }


def report_to_json(report: OrthogonalityReport) -> dict:
    doc = {
        "rows": list(report.rows),
        "cols": list(report.cols),
        "ext1": [list(row) for row in report.ext1],
        "pass": report.passed,
    }
    if report.witness is not None:
        row, col, value = report.witness
        doc["witness"] = {"row": row, "col": col, "ext1": value}
    return doc

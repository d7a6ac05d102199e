# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/formats.py
"""JSON documents for DGLAs, morphisms, Artin rings, MC data and brackets.

Rationals are strings "p/q". Emitters walk basis elements in canonical order
and never sort dictionary keys afterwards, so emit -> parse -> emit is
byte-identical.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import DGLA, DGLAMorphism, dgla_build
from .artin import ArtinAlgebra
from .deformation import GaugeWitness, HomotopyPath, MCPair, PairDeformations, TensorDGLA
from .errors import ArgumentError, FormatError, LinfconeError
from .graded import GradedSpace, GradedVector, as_scalar, canonicalize, format_scalar
from .linfty import LInftyStructure, table_structure
from .polynomial import PolyElement
from .reports import fingerprint

logger = logging.getLogger(__name__)

Document = Dict[str, Any]


def dump_document(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_document(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg} (line {exc.lineno})", source) from exc


def load_document(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror}", str(path)) from exc
    return parse_document(text, str(path))


def _expect(doc: Any, kind: type, location: str) -> Any:
    if not isinstance(doc, kind):
        raise FormatError(f"expected {kind.__name__}", location)
    return doc


def _field(doc: Mapping[str, Any], key: str, location: str, default: Any = ...) -> Any:
    if key not in doc:
        if default is ...:
            raise FormatError(f"missing field {key!r}", location)
        return default
    return doc[key]


def _combination(doc: Any, location: str) -> Dict[str, Any]:
    doc = _expect(doc, dict, location)
    out = {}
    for name, value in doc.items():
        try:
            out[name] = as_scalar(value)
        except FormatError as exc:
            raise FormatError(str(exc), f"{location}.{name}") from None
    return out


def _vector(space: GradedSpace, doc: Any, location: str) -> GradedVector:
    try:
        return GradedVector(space, _combination(doc, location))
    except ArgumentError as exc:
        raise FormatError(str(exc), location) from None


def _basis(doc: Any, location: str) -> List[Tuple[str, int]]:
    out = []
    for i, entry in enumerate(_expect(doc, list, location)):
        where = f"{location}[{i}]"
        if not isinstance(entry, list) or len(entry) != 2:
            raise FormatError("expected [name, degree]", where)
        name, degree = entry
        if not isinstance(name, str) or isinstance(degree, bool) or not isinstance(degree, int):
            raise FormatError("expected [name, degree]", where)
        out.append((name, degree))
    return out


# ---------------------------------------------------------------------------
# DGLAs and morphisms
# ---------------------------------------------------------------------------


def dgla_to_dict(dgla: DGLA) -> Document:
    space = dgla.space
    differential = {}
    for x in space.names:
        image = dgla.d(dgla.basis_vector(x))
        if image:
            differential[x] = image.to_dict()
    bracket = []
    for i, a in enumerate(space.names):
        for b in space.names[i:]:
            value = dgla.bracket_basis(a, b)
            if value:
                bracket.append([a, b, value.to_dict()])
    doc: Document = {"basis": [[n, d] for n, d in space.basis]}
    if dgla.name:
        doc["name"] = dgla.name
    doc["differential"] = differential
    doc["bracket"] = bracket
    return doc


def dgla_from_dict(doc: Any, location: str = "$") -> DGLA:
    doc = _expect(doc, dict, location)
    basis = _basis(_field(doc, "basis", location), f"{location}.basis")
    differential = {
        src: _combination(combo, f"{location}.differential.{src}")
        for src, combo in _expect(
            _field(doc, "differential", location, {}), dict, f"{location}.differential"
        ).items()
    }
    entries = []
    raw = _expect(_field(doc, "bracket", location, []), list, f"{location}.bracket")
    for i, entry in enumerate(raw):
        where = f"{location}.bracket[{i}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise FormatError("expected [a, b, {target: scalar}]", where)
        a, b, combo = entry
        entries.append((a, b, _combination(combo, where)))
    name = _field(doc, "name", location, "")
    try:
        return dgla_build(basis, differential=differential, bracket=entries, name=name)
    except FormatError as exc:
        raise FormatError(str(exc), location) from None


def morphism_to_dict(chi: DGLAMorphism) -> Document:
    table = {}
    for x in chi.source.space.names:
        image = chi.image(x)
        if image:
            table[x] = image.to_dict()
    return {
        "source": dgla_to_dict(chi.source),
        "target": dgla_to_dict(chi.target),
        "map": table,
    }


def morphism_from_dict(doc: Any, location: str = "$") -> DGLAMorphism:
    doc = _expect(doc, dict, location)
    source = dgla_from_dict(_field(doc, "source", location), f"{location}.source")
    target = dgla_from_dict(_field(doc, "target", location), f"{location}.target")
    table = {
        src: _combination(combo, f"{location}.map.{src}")
        for src, combo in _expect(_field(doc, "map", location, {}), dict, f"{location}.map").items()
    }
    return DGLAMorphism.from_table(source, target, table)


# ---------------------------------------------------------------------------
# Artin rings
# ---------------------------------------------------------------------------


def artin_to_dict(artin: ArtinAlgebra) -> Document:
    products = []
    for i, a in enumerate(artin.monomials):
        for b in artin.monomials[i:]:
            value = artin.product(a, b)
            if value:
                products.append([a, b, value.to_dict()])
    doc: Document = {"monomials": list(artin.monomials), "products": products}
    doc["nil_index"] = artin.nil_index
    orders = artin.orders
    if orders:
        doc["orders"] = {m: orders[m] for m in artin.monomials if m in orders}
    if artin.name:
        doc["name"] = artin.name
    return doc


def artin_from_dict(doc: Any, location: str = "$") -> ArtinAlgebra:
    doc = _expect(doc, dict, location)
    monomials = _expect(_field(doc, "monomials", location), list, f"{location}.monomials")
    products = {}
    raw = _expect(_field(doc, "products", location, []), list, f"{location}.products")
    for i, entry in enumerate(raw):
        where = f"{location}.products[{i}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise FormatError("expected [x, y, {z: scalar}]", where)
        a, b, combo = entry
        if (a, b) in products or (b, a) in products:
            raise FormatError("duplicate product entry", where)
        products[(a, b)] = _combination(combo, where)
    nil_index = _field(doc, "nil_index", location)
    if isinstance(nil_index, bool) or not isinstance(nil_index, int):
        raise FormatError("nil_index must be an integer", f"{location}.nil_index")
    orders = _expect(_field(doc, "orders", location, {}), dict, f"{location}.orders")
    return ArtinAlgebra(
        monomials, products, nil_index, name=_field(doc, "name", location, ""), orders=orders
    )


# ---------------------------------------------------------------------------
# Maurer-Cartan pairs, witnesses and paths
# ---------------------------------------------------------------------------


def tensor_terms_to_list(algebra: TensorDGLA, v: GradedVector) -> List[List[str]]:
    return [[x, mono, format_scalar(c)] for x, mono, c in algebra.terms(v)]


def tensor_terms_from_list(algebra: TensorDGLA, doc: Any, location: str) -> GradedVector:
    terms = []
    for i, entry in enumerate(_expect(doc, list, location)):
        where = f"{location}[{i}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise FormatError("expected [basis, monomial, scalar]", where)
        terms.append(entry)
    try:
        return algebra.element(terms)
    except ArgumentError as exc:
        raise FormatError(str(exc), location) from None


def pair_to_dict(deformations: PairDeformations, p: MCPair) -> Document:
    return {
        "x": tensor_terms_to_list(deformations.L_A, p.x),
        "a": tensor_terms_to_list(deformations.M_A, p.a),
    }


def pair_from_dict(deformations: PairDeformations, doc: Any, location: str = "$") -> MCPair:
    doc = _expect(doc, dict, location)
    x = tensor_terms_from_list(deformations.L_A, _field(doc, "x", location, []), f"{location}.x")
    a = tensor_terms_from_list(deformations.M_A, _field(doc, "a", location, []), f"{location}.a")
    try:
        return deformations.pair(x, a)
    except ArgumentError as exc:
        raise FormatError(str(exc), location) from None


def witness_to_dict(deformations: PairDeformations, w: GaugeWitness) -> Document:
    return {
        "a": tensor_terms_to_list(deformations.L_A, w.a),
        "b": tensor_terms_to_list(deformations.M_A, w.b),
    }


def witness_from_dict(
    deformations: PairDeformations, doc: Any, location: str = "$"
) -> GaugeWitness:
    doc = _expect(doc, dict, location)
    a = tensor_terms_from_list(deformations.L_A, _field(doc, "a", location, []), f"{location}.a")
    b = tensor_terms_from_list(deformations.M_A, _field(doc, "b", location, []), f"{location}.b")
    try:
        return deformations.witness(a, b)
    except ArgumentError as exc:
        raise FormatError(str(exc), location) from None


def _poly_to_dict(algebra: TensorDGLA, p: PolyElement) -> Document:
    return {
        "t": {str(k): tensor_terms_to_list(algebra, p.even[k]) for k in sorted(p.even)},
        "dt": {str(k): tensor_terms_to_list(algebra, p.odd[k]) for k in sorted(p.odd)},
    }


def path_to_dict(deformations: PairDeformations, path: HomotopyPath) -> Document:
    """Coefficients of t^k and t^k dt for both components."""
    return {
        "cap": max(path.l.cap, path.m.cap),
        "l": _poly_to_dict(deformations.L_A, path.l),
        "m": _poly_to_dict(deformations.M_A, path.m),
    }


# ---------------------------------------------------------------------------
# Bracket documents
# ---------------------------------------------------------------------------


def brackets_to_dict(
    structure: LInftyStructure, up_to: Optional[int] = None, start: int = 1
) -> Document:
    """Nonzero structure constants on canonical words, with a digest."""
    top = structure.max_arity if up_to is None else up_to
    brackets: Dict[str, List[Document]] = {}
    for k in range(start, top + 1):
        entries = [
            {"inputs": list(word), "output": value.to_dict()}
            for word, value in structure.table(k)
        ]
        brackets[str(k)] = entries
        logger.debug("brackets_to_dict: arity %d has %d entries", k, len(entries))
    payload: Document = {
        "space": [[n, d] for n, d in structure.space.basis],
        "max_arity": top,
        "brackets": brackets,
    }
    if structure.name:
        payload = {"name": structure.name, **payload}
    payload["digest"] = fingerprint(payload)
    return payload


def brackets_from_dict(doc: Any, location: str = "$") -> LInftyStructure:
    doc = _expect(doc, dict, location)
    try:
        space = GradedSpace(_basis(_field(doc, "space", location), f"{location}.space"))
    except ArgumentError as exc:
        raise FormatError(str(exc), f"{location}.space") from None
    max_arity = _field(doc, "max_arity", location)
    if isinstance(max_arity, bool) or not isinstance(max_arity, int) or max_arity < 1:
        raise FormatError("max_arity must be a positive integer", f"{location}.max_arity")
    digest = doc.get("digest")
    if digest is not None:
        payload = {k: v for k, v in doc.items() if k != "digest"}
        if fingerprint(payload) != digest:
            raise FormatError("digest does not match the document", f"{location}.digest")
    tables: Dict[int, Dict[Tuple[str, ...], GradedVector]] = {}
    raw = _expect(_field(doc, "brackets", location), dict, f"{location}.brackets")
    for key, entries in raw.items():
        where = f"{location}.brackets.{key}"
        try:
            k = int(key)
        except ValueError:
            raise FormatError("arity keys must be integers", where) from None
        table: Dict[Tuple[str, ...], GradedVector] = {}
        for i, entry in enumerate(_expect(entries, list, where)):
            spot = f"{where}[{i}]"
            entry = _expect(entry, dict, spot)
            inputs = tuple(_expect(_field(entry, "inputs", spot), list, f"{spot}.inputs"))
            if len(inputs) != k:
                raise FormatError(f"expected {k} inputs", f"{spot}.inputs")
            for name in inputs:
                if name not in space:
                    raise FormatError(f"unknown basis name {name!r}", f"{spot}.inputs")
            word = canonicalize(space, inputs)
            if word.is_zero():
                raise FormatError("word repeats an odd factor", f"{spot}.inputs")
            if word.factors in table:
                raise FormatError(f"second entry for {list(word.factors)}", f"{spot}.inputs")
            output = _vector(space, _field(entry, "output", spot), f"{spot}.output")
            table[word.factors] = output * word.sign
        tables[k] = table
    return table_structure(space, tables, max_arity, name=_field(doc, "name", location, ""))


def error_to_dict(exc: LinfconeError) -> Document:
    body: Document = {"error": type(exc).__name__, "message": str(exc)}
    location = getattr(exc, "location", None)
    if location:
        body["location"] = location
    needed = getattr(exc, "needed", None)
    if needed is not None:
        body["needed"] = needed
    return body


def reports_document(reports: Sequence[Any]) -> Document:
    body: Document = {"reports": [r.to_dict() for r in reports]}
    body["ok"] = all(r.ok for r in reports)
    body["digest"] = fingerprint(body)
    return body

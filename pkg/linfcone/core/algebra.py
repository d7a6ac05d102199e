# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/algebra.py
"""Differential graded Lie algebras given by structure constants.

A DGLA is built from tables and is *not* validated on construction, so that
broken inputs can be studied with :func:`check_dgla`. Sub-DGLAs are carved
out of a parent by exact row reduction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import ArgumentError, FormatError
from .graded import (
    GradedMap,
    GradedSpace,
    GradedVector,
    ScalarLike,
    as_scalar,
)
from .linalg import pivot_name, rref_basis
from .reports import Report

logger = logging.getLogger(__name__)

Combination = Mapping[str, ScalarLike]
BracketEntries = Union[
    Mapping[Tuple[str, str], Combination], Iterable[Tuple[str, str, Combination]]
]


class DGLA:
    """Graded space with a degree-1 differential and bracket structure constants."""

    def __init__(
        self,
        space: GradedSpace,
        differential: GradedMap,
        table: Mapping[Tuple[str, str], GradedVector],
        name: str = "",
    ) -> None:
        self.space = space
        self.differential = differential
        self.name = name
        self._table: Dict[Tuple[str, str], Dict[str, Fraction]] = {
            key: dict(vec.coords) for key, vec in table.items() if vec
        }

    # Lie operations shared with PathAlgebra and the tensor extensions.
    def zero(self) -> GradedVector:
        return GradedVector.zero(self.space)

    def vector(self, coords: Optional[Combination] = None) -> GradedVector:
        return GradedVector(self.space, coords or {})

    def basis_vector(self, name: str) -> GradedVector:
        return GradedVector.basis(self.space, name)

    def d(self, x: GradedVector) -> GradedVector:
        return self.differential(x)

    def bracket_basis(self, a: str, b: str) -> GradedVector:
        return GradedVector._trusted(self.space, dict(self._table.get((a, b), {})))

    def bracket(self, x: GradedVector, y: GradedVector) -> GradedVector:
        acc: Dict[str, Fraction] = {}
        for a, xa in x.coords.items():
            for b, yb in y.coords.items():
                entry = self._table.get((a, b))
                if not entry:
                    continue
                c = xa * yb
                for tgt, coeff in entry.items():
                    acc[tgt] = acc.get(tgt, Fraction(0)) + c * coeff
        return GradedVector._trusted(self.space, {k: v for k, v in acc.items() if v})

    def ad_power(self, x: GradedVector, y: GradedVector, n: int) -> GradedVector:
        for _ in range(n):
            y = self.bracket(x, y)
        return y

    def degree(self, name: str) -> int:
        return self.space.degree(name)

    def table(self) -> Dict[Tuple[str, str], GradedVector]:
        return {
            key: GradedVector._trusted(self.space, dict(value))
            for key, value in self._table.items()
        }

    def is_abelian(self) -> bool:
        return not self._table

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, DGLA):
            return NotImplemented
        return (
            self.space == other.space
            and self.differential == other.differential
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash(self.space)

    def __repr__(self) -> str:
        label = self.name or "DGLA"
        return f"<{label} dims={self.space.dims()}>"


def _combination(
    space: GradedSpace, combo: Combination, location: str
) -> GradedVector:
    coords: Dict[str, Fraction] = {}
    for tgt, value in combo.items():
        if tgt not in space:
            raise FormatError(f"unknown basis name {tgt!r}", location)
        coords[tgt] = as_scalar(value)
    return GradedVector(space, coords)


def _bracket_items(entries: BracketEntries) -> List[Tuple[str, str, Combination]]:
    if isinstance(entries, Mapping):
        return [(a, b, combo) for (a, b), combo in entries.items()]
    return [(a, b, combo) for a, b, combo in entries]


def dgla_build(
    basis: Iterable[Tuple[str, int]],
    differential: Optional[Mapping[str, Combination]] = None,
    bracket: Optional[BracketEntries] = None,
    name: str = "",
) -> DGLA:
    """Build a DGLA from tables; unspecified entries are zero.

    A bracket entry [a, b] without its mirror [b, a] is completed by graded
    antisymmetry. When both are given both are kept as written.
    """
    try:
        space = GradedSpace(basis)
    except ArgumentError as exc:
        raise FormatError(str(exc), "basis") from exc

    images: Dict[str, GradedVector] = {}
    for src, combo in (differential or {}).items():
        location = f"differential.{src}"
        if src not in space:
            raise FormatError(f"unknown basis name {src!r}", location)
        image = _combination(space, combo, location)
        expected = space.degree(src) + 1
        for tgt in image.coords:
            if space.degree(tgt) != expected:
                raise FormatError(
                    f"d({src}) has a term {tgt!r} of degree {space.degree(tgt)}, "
                    f"expected {expected}",
                    location,
                )
        images[src] = image

    given: Dict[Tuple[str, str], GradedVector] = {}
    for a, b, combo in _bracket_items(bracket or []):
        location = f"bracket[{a},{b}]"
        for n in (a, b):
            if n not in space:
                raise FormatError(f"unknown basis name {n!r}", location)
        value = _combination(space, combo, location)
        expected = space.degree(a) + space.degree(b)
        for tgt in value.coords:
            if space.degree(tgt) != expected:
                raise FormatError(
                    f"[{a},{b}] has a term {tgt!r} of degree {space.degree(tgt)}, "
                    f"expected {expected}",
                    location,
                )
        if (a, b) in given:
            raise FormatError("duplicate bracket entry", location)
        given[(a, b)] = value

    table = dict(given)
    for (a, b), value in given.items():
        if (b, a) not in given:
            sign = -1 if (space.degree(a) * space.degree(b)) % 2 else 1
            table[(b, a)] = value * (-sign)

    return DGLA(space, GradedMap(space, space, 1, images), table, name=name)


def check_dgla(dgla: DGLA) -> Report:
    """Exhaustive check of d^2 = 0, antisymmetry, Leibniz and Jacobi on basis tuples."""
    report = Report("dgla")
    names = dgla.space.names
    deg = dgla.space.degree
    basis = {n: dgla.basis_vector(n) for n in names}
    dbasis = {n: dgla.d(basis[n]) for n in names}

    for x in names:
        report.checked += 1
        residual = dgla.d(dbasis[x])
        if residual:
            report.add("d_squared", (x,), residual)

    for x in names:
        for y in names:
            report.checked += 2
            sign = -1 if (deg(x) * deg(y)) % 2 else 1
            xy = dgla.bracket_basis(x, y)
            residual = xy + dgla.bracket_basis(y, x) * sign
            if residual:
                report.add("antisymmetry", (x, y), residual)
            leibniz_sign = -1 if deg(x) % 2 else 1
            residual = (
                dgla.d(xy)
                - dgla.bracket(dbasis[x], basis[y])
                - dgla.bracket(basis[x], dbasis[y]) * leibniz_sign
            )
            if residual:
                report.add("leibniz", (x, y), residual)

    for x in names:
        for y in names:
            xy = dgla.bracket_basis(x, y)
            sign = -1 if (deg(x) * deg(y)) % 2 else 1
            for z in names:
                report.checked += 1
                residual = (
                    dgla.bracket(basis[x], dgla.bracket_basis(y, z))
                    - dgla.bracket(xy, basis[z])
                    - dgla.bracket(basis[y], dgla.bracket_basis(x, z)) * sign
                )
                if residual:
                    report.add("jacobi", (x, y, z), residual)

    logger.debug(
        "check_dgla %s: %d checks, %d violations",
        dgla.name or "?",
        report.checked,
        len(report),
    )
    return report


def jacobiator(dgla: DGLA, x: str, y: str, z: str) -> GradedVector:
    """[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] on basis elements."""
    deg = dgla.space.degree
    sign = -1 if (deg(x) * deg(y)) % 2 else 1
    bx, by, bz = (dgla.basis_vector(n) for n in (x, y, z))
    return (
        dgla.bracket(bx, dgla.bracket(by, bz))
        - dgla.bracket(dgla.bracket(bx, by), bz)
        - dgla.bracket(by, dgla.bracket(bx, bz)) * sign
    )


class DGLAMorphism:
    """Degree-0 linear map between DGLAs; validated by :meth:`check`."""

    def __init__(self, source: DGLA, target: DGLA, linear: GradedMap) -> None:
        if linear.source != source.space or linear.target != target.space:
            raise ArgumentError("map does not match the DGLA spaces")
        if linear.degree != 0:
            raise ArgumentError("DGLA morphisms have degree 0")
        self.source = source
        self.target = target
        self.linear = linear

    @classmethod
    def from_table(
        cls, source: DGLA, target: DGLA, table: Mapping[str, Combination]
    ) -> "DGLAMorphism":
        images: Dict[str, GradedVector] = {}
        for src, combo in table.items():
            location = f"map.{src}"
            if src not in source.space:
                raise FormatError(f"unknown source basis name {src!r}", location)
            image = _combination(target.space, combo, location)
            for tgt in image.coords:
                if target.space.degree(tgt) != source.space.degree(src):
                    raise FormatError(
                        f"{src!r} and {tgt!r} have different degrees", location
                    )
            images[src] = image
        return cls(source, target, GradedMap(source.space, target.space, 0, images))

    def __call__(self, x: GradedVector) -> GradedVector:
        return self.linear(x)

    def image(self, name: str) -> GradedVector:
        return self.linear.image(name)

    def check(self) -> Report:
        report = Report("dgla_morphism")
        src, tgt = self.source, self.target
        for x in src.space.names:
            report.checked += 1
            bx = src.basis_vector(x)
            residual = self(src.d(bx)) - tgt.d(self(bx))
            if residual:
                report.add("chain_map", (x,), residual)
        for x in src.space.names:
            for y in src.space.names:
                report.checked += 1
                residual = self(src.bracket_basis(x, y)) - tgt.bracket(
                    self.image(x), self.image(y)
                )
                if residual:
                    report.add("bracket", (x, y), residual)
        return report

    def __repr__(self) -> str:
        return f"<DGLAMorphism {self.source!r} -> {self.target!r}>"


def zero_dgla(name: str = "zero") -> DGLA:
    space = GradedSpace([])
    return DGLA(space, GradedMap.zero(space, space, 1), {}, name=name)


def identity_morphism(dgla: DGLA) -> DGLAMorphism:
    return DGLAMorphism(dgla, dgla, GradedMap.identity(dgla.space))


def zero_morphism(source: DGLA, target: DGLA) -> DGLAMorphism:
    return DGLAMorphism(source, target, GradedMap.zero(source.space, target.space, 0))


def compose(outer: DGLAMorphism, inner: DGLAMorphism) -> DGLAMorphism:
    """outer o inner."""
    if inner.target.space != outer.source.space:
        raise ArgumentError("morphisms are not composable")
    return DGLAMorphism(inner.source, outer.target, outer.linear.compose(inner.linear))


@dataclass
class SubDGLA:
    """A sub-DGLA of ``parent`` spanned by row-reduced vectors named by their pivots."""

    parent: DGLA
    dgla: DGLA
    vectors: Dict[str, GradedVector]
    inclusion: DGLAMorphism

    def coordinates(self, vector: GradedVector) -> GradedVector:
        """Express a parent vector in the sub basis; ArgumentError when outside."""
        return _pivot_coordinates(self.vectors, self.dgla.space, vector)


def _pivot_coordinates(
    named: Mapping[str, GradedVector], space: GradedSpace, vector: GradedVector
) -> GradedVector:
    # row-reduced vectors: the coordinate of each is the coefficient at its pivot
    coords = {n: vector.coefficient(n) for n in named}
    rebuilt = GradedVector.zero(vector.space)
    for n, c in coords.items():
        if c:
            rebuilt = rebuilt + named[n] * c
    if rebuilt != vector:
        raise ArgumentError(f"vector {vector!r} is not in the subspace")
    return GradedVector(space, coords)


def sub_dgla(
    parent: DGLA, vectors: Sequence[GradedVector], name: str = ""
) -> SubDGLA:
    """The sub-DGLA spanned by homogeneous ``vectors``.

    Raises ArgumentError (with the offending basis witness) when the span is
    not closed under d or the bracket.
    """
    rows = rref_basis(vectors)
    named = {pivot_name(v): v for v in rows}
    space = GradedSpace((n, parent.space.degree(n)) for n in named)

    def coords(vector: GradedVector, witness: str) -> GradedVector:
        try:
            return _pivot_coordinates(named, space, vector)
        except ArgumentError:
            raise ArgumentError(f"span is not closed: {witness} leaves it") from None

    images = {n: coords(parent.d(v), f"d({n})") for n, v in named.items()}
    table: Dict[Tuple[str, str], GradedVector] = {}
    for a, va in named.items():
        for b, vb in named.items():
            value = parent.bracket(va, vb)
            if value:
                table[(a, b)] = coords(value, f"[{a},{b}]")

    dgla = DGLA(space, GradedMap(space, space, 1, images), table, name=name)
    inclusion = DGLAMorphism(dgla, parent, GradedMap(space, parent.space, 0, named))
    logger.debug("sub_dgla %s: dims %s", name or "?", space.dims())
    return SubDGLA(parent, dgla, named, inclusion)


def generated_sub_dgla(
    parent: DGLA, generators: Sequence[GradedVector], name: str = ""
) -> SubDGLA:
    """Smallest sub-DGLA containing ``generators`` (closure under d and brackets)."""
    rows = rref_basis(list(generators))
    while True:
        candidates = list(rows)
        for v in rows:
            candidates.append(parent.d(v))
            for w in rows:
                candidates.append(parent.bracket(v, w))
        grown = rref_basis(candidates)
        if len(grown) == len(rows):
            break
        rows = grown
    return sub_dgla(parent, rows, name=name)

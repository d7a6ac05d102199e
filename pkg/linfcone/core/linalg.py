# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/linalg.py
"""Exact linear algebra over Q on graded vectors, backed by sympy matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence

import sympy

from .errors import ArgumentError
from .graded import GradedVector


def to_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def to_fraction(value: sympy.Expr) -> Fraction:
    value = sympy.nsimplify(value)
    if not value.is_Rational:
        raise ArgumentError(f"non-rational value in exact computation: {value}")
    return Fraction(int(value.p), int(value.q))


def rref_basis(vectors: Sequence[GradedVector]) -> List[GradedVector]:
    """Row-reduced basis of the span of homogeneous vectors.

    Each returned vector has coefficient 1 at its pivot basis element and 0 at
    the other pivots; vectors come sorted by (degree, pivot).
    """
    vectors = [v for v in vectors if v]
    if not vectors:
        return []
    space = vectors[0].space
    by_degree: Dict[int, List[GradedVector]] = {}
    for vec in vectors:
        if vec.space != space:
            raise ArgumentError("vectors live in different spaces")
        if not vec.is_homogeneous():
            raise ArgumentError(f"spanning vector is not homogeneous: {vec!r}")
        by_degree.setdefault(vec.degree(), []).append(vec)

    out: List[GradedVector] = []
    for deg in sorted(by_degree):
        names = space.names_in_degree(deg)
        matrix = sympy.Matrix(
            [[to_rational(v.coefficient(n)) for n in names] for v in by_degree[deg]]
        )
        reduced, pivots = matrix.rref()
        for row, _ in enumerate(pivots):
            coords = {
                names[col]: to_fraction(reduced[row, col])
                for col in range(len(names))
                if reduced[row, col] != 0
            }
            out.append(GradedVector(space, coords))
    return out


def pivot_name(vector: GradedVector) -> str:
    """First basis element (canonical order) in the support of a vector."""
    return vector.items()[0][0]


def solve_in_span(
    basis: Sequence[GradedVector], target: GradedVector
) -> Optional[List[Fraction]]:
    """Coefficients c with sum c_i basis_i = target, or None when target is outside."""
    if not basis:
        return [] if not target else None
    names = sorted(
        {n for v in basis for n in v.coords} | set(target.coords),
        key=target.space.rank,
    )
    matrix = sympy.Matrix(
        [[to_rational(v.coefficient(n)) for v in basis] for n in names]
    )
    rhs = sympy.Matrix([to_rational(target.coefficient(n)) for n in names])
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return [to_fraction(x) for x in solution]


def span_contains(basis: Sequence[GradedVector], target: GradedVector) -> bool:
    return solve_in_span(basis, target) is not None


def nullspace(
    equations: Sequence[Dict[Hashable, Fraction]], unknowns: Sequence[Hashable]
) -> List[Dict[Hashable, Fraction]]:
    """Basis of solutions of the homogeneous system sum_u eq[u] * x_u = 0."""
    if not unknowns:
        return []
    rows = [[to_rational(eq.get(u, Fraction(0))) for u in unknowns] for eq in equations]
    if not rows:
        rows = [[sympy.Integer(0)] * len(unknowns)]
    out = []
    for column in sympy.Matrix(rows).nullspace():
        out.append(
            {u: to_fraction(column[i]) for i, u in enumerate(unknowns) if column[i] != 0}
        )
    return out

# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for DGLAs, morphisms, sub-DGLAs and exact linear algebra."""

from __future__ import annotations

from fractions import Fraction

import pytest

from linfcone.core.algebra import (
    DGLAMorphism,
    check_dgla,
    compose,
    dgla_build,
    generated_sub_dgla,
    identity_morphism,
    jacobiator,
    sub_dgla,
    zero_dgla,
    zero_morphism,
)
from linfcone.core.errors import ArgumentError, FormatError
from linfcone.core.fixtures import derived_dgla, gl_matrix_dgla, sl2
from linfcone.core.graded import GradedSpace, GradedVector
from linfcone.core.linalg import nullspace, rref_basis, solve_in_span, span_contains


def test_sl2_is_a_valid_dgla():
    report = check_dgla(sl2())
    assert report.ok, report.kinds()
    assert report.checked > 0


def test_missing_mirror_entries_are_completed_by_antisymmetry():
    M = sl2()
    assert M.bracket_basis("e", "h") == M.vector({"e": -2})
    assert M.bracket_basis("f", "e") == M.vector({"h": -1})


def test_odd_self_bracket_is_symmetric():
    M = dgla_build(
        [("u", 1), ("w", 2)],
        bracket={("u", "u"): {"w": 1}},
    )
    assert M.bracket_basis("u", "u") == M.vector({"w": 1})
    assert check_dgla(M).ok


def test_degree_mismatch_in_differential_is_a_format_error():
    with pytest.raises(FormatError) as excinfo:
        dgla_build([("x", 0), ("y", 0)], differential={"x": {"y": 1}})
    assert excinfo.value.location == "differential.x"


def test_unknown_bracket_name_is_a_format_error():
    with pytest.raises(FormatError):
        dgla_build([("x", 0)], bracket={("x", "z"): {"x": 1}})


def test_check_dgla_reports_d_squared():
    M = dgla_build(
        [("x", 0), ("y", 1), ("z", 2)],
        differential={"x": {"y": 1}, "y": {"z": 1}},
    )
    report = check_dgla(M)
    assert "d_squared" in report.kinds()


def test_check_dgla_reports_jacobi():
    # [a, b] = b and [a, c] = b with [b, c] = a breaks Jacobi
    M = dgla_build(
        [("a", 0), ("b", 0), ("c", 0)],
        bracket={("a", "b"): {"b": 1}, ("a", "c"): {"b": 1}, ("b", "c"): {"a": 1}},
    )
    report = check_dgla(M)
    assert "jacobi" in report.kinds()
    assert any(jacobiator(M, *v.witness) for v in report.violations if v.kind == "jacobi")


def test_gl2_bracket_is_the_commutator():
    gl2 = gl_matrix_dgla(2)
    assert check_dgla(gl2).ok
    value = gl2.bracket(gl2.basis_vector("E12"), gl2.basis_vector("E21"))
    assert value == gl2.vector({"E11": 1, "E22": -1})


def test_derived_fixture_is_a_dgla():
    M = derived_dgla()
    assert check_dgla(M).ok
    assert M.d(M.basis_vector("a")) == M.basis_vector("u")


def test_morphism_checks_and_composition():
    M = sl2()
    ident = identity_morphism(M)
    assert ident.check().ok
    twice = compose(ident, ident)
    assert twice(M.basis_vector("h")) == M.basis_vector("h")
    zero = zero_morphism(zero_dgla(), M)
    assert zero.check().ok


def test_non_multiplicative_map_is_reported():
    M = sl2()
    chi = DGLAMorphism.from_table(M, M, {"e": {"e": 2}, "f": {"f": 2}, "h": {"h": 2}})
    assert "bracket" in chi.check().kinds()


def test_sub_dgla_uses_pivot_names():
    M = sl2()
    borel = sub_dgla(M, [M.vector({"e": 1, "h": 1}), M.basis_vector("h")], name="b")
    assert borel.dgla.space.names == ("e", "h")
    assert borel.coordinates(M.vector({"e": 3, "h": 1})) == borel.dgla.vector(
        {"e": 3, "h": 1}
    )
    with pytest.raises(ArgumentError):
        borel.coordinates(M.basis_vector("f"))


def test_sub_dgla_rejects_non_closed_span():
    M = sl2()
    with pytest.raises(ArgumentError):
        sub_dgla(M, [M.basis_vector("e"), M.basis_vector("f")])


def test_generated_sub_dgla_closes_under_brackets():
    M = sl2()
    closure = generated_sub_dgla(M, [M.basis_vector("e"), M.basis_vector("f")])
    assert len(closure.dgla.space) == 3


def test_rref_and_span_membership():
    space = GradedSpace([("x", 0), ("y", 0), ("z", 1)])
    rows = rref_basis(
        [GradedVector(space, {"x": 2, "y": 2}), GradedVector(space, {"x": 1, "y": 1})]
    )
    assert rows == [GradedVector(space, {"x": 1, "y": 1})]
    target = GradedVector(space, {"x": 3, "y": 3})
    assert solve_in_span(rows, target) == [Fraction(3)]
    assert not span_contains(rows, GradedVector(space, {"x": 1}))
    with pytest.raises(ArgumentError):
        rref_basis([GradedVector(space, {"x": 1, "z": 1})])


def test_nullspace_is_exact():
    basis = nullspace([{"a": Fraction(1), "b": Fraction(-2)}], ["a", "b"])
    assert len(basis) == 1
    solution = basis[0]
    assert solution["a"] == 2 * solution["b"]

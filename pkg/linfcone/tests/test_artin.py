# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for Artinian coefficient rings."""

from __future__ import annotations

import pytest

from linfcone.core.artin import (
    ArtinAlgebra,
    check_artin,
    monomial_quotient,
    truncated_polynomial,
)
from linfcone.core.errors import ArgumentError, FormatError
from linfcone.core.graded import GradedVector


def test_truncated_polynomial_products():
    A = truncated_polynomial(4)
    assert A.monomials == ("e", "e^2", "e^3")
    assert A.depth == 3
    assert A.product("e", "e^2") == GradedVector.basis(A.space, "e^3")
    assert not A.product("e^2", "e^2")
    assert A.order("e^2") == 2
    assert check_artin(A).ok


def test_multiplication_is_bilinear():
    A = truncated_polynomial(4)
    x = GradedVector(A.space, {"e": 1, "e^2": 1})
    y = GradedVector(A.space, {"e": 2})
    assert A.multiply(x, y) == GradedVector(A.space, {"e^2": 2, "e^3": 2})
    assert A.product_of(["e", "e", "e"]) == GradedVector.basis(A.space, "e^3")
    assert not A.product_of(["e", "e^2", "e"])


def test_dual_numbers_need_k_at_least_two():
    assert truncated_polynomial(2).monomials == ("e",)
    with pytest.raises(ArgumentError):
        truncated_polynomial(1)


def test_monomial_quotient_in_two_variables():
    A = monomial_quotient(["x", "y"], [{"x": 2}, {"y": 2}])
    assert A.monomials == ("x", "y", "x*y")
    assert A.nil_index == 3
    assert A.product("x", "y") == GradedVector.basis(A.space, "x*y")
    assert not A.product("x", "x")
    assert A.order("x*y") == 2
    assert check_artin(A).ok


def test_quotient_needs_a_pure_power_of_each_generator():
    with pytest.raises(ArgumentError):
        monomial_quotient(["x", "y"], [{"x": 2}, {"x": 1, "y": 1}])
    with pytest.raises(ArgumentError):
        monomial_quotient(["x"], [{"z": 2}])


def test_non_associative_table_is_reported():
    A = ArtinAlgebra(["p", "q", "r"], {("p", "p"): {"q": 1}, ("q", "q"): {"r": 1}}, nil_index=4)
    report = check_artin(A)
    assert "associativity" in report.kinds()


def test_wrong_nil_index_is_reported():
    too_big = ArtinAlgebra(["e"], {}, nil_index=3)
    assert "nil_index" in check_artin(too_big).kinds()
    too_small = ArtinAlgebra(["e", "f"], {("e", "e"): {"f": 1}}, nil_index=2)
    assert "nilpotency" in check_artin(too_small).kinds()


def test_malformed_tables_are_format_errors():
    with pytest.raises(FormatError):
        ArtinAlgebra(["e"], {}, nil_index=1)
    with pytest.raises(FormatError) as info:
        ArtinAlgebra(["e"], {("e", "e"): {"f": 1}}, nil_index=2)
    assert info.value.location == "products[e,e]"

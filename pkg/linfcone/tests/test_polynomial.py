# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for the polynomial path algebra M[t, dt]."""

from __future__ import annotations

from fractions import Fraction

import pytest

from linfcone.core.errors import CapacityError
from linfcone.core.algebra import dgla_build
from linfcone.core.fixtures import derived_dgla
from linfcone.core.polynomial import (
    PathAlgebra,
    antiderivative,
    evaluate_at,
    integrate,
    split_dt,
)


def _path(cap: int = 3) -> PathAlgebra:
    return PathAlgebra(derived_dgla(), cap)


def test_differential_of_a_monomial():
    P = _path()
    M = P.base
    a, u = M.basis_vector("a"), M.basis_vector("u")
    value = P.d(P.monomial(1, a))
    assert value == P.monomial(0, a, dt=True) + P.monomial(1, u)


def test_differential_squares_to_zero():
    P = _path()
    M = P.base
    x = P.monomial(2, M.basis_vector("a")) + P.monomial(1, M.basis_vector("b"), dt=True)
    assert not P.d(P.d(x))


def test_leibniz_rule_in_the_path_algebra():
    P = _path()
    M = P.base
    x = P.monomial(1, M.basis_vector("a"))
    y = P.monomial(1, M.basis_vector("b")) + P.monomial(0, M.basis_vector("a"), dt=True)
    lhs = P.d(P.bracket(x, y))
    rhs = P.bracket(P.d(x), y) + P.bracket(x, P.d(y))
    assert lhs == rhs


def test_bracket_multiplies_forms():
    P = _path()
    M = P.base
    value = P.bracket(P.monomial(1, M.basis_vector("a")), P.monomial(1, M.basis_vector("v")))
    assert value == P.monomial(2, M.basis_vector("v"))


def test_evaluation_and_integration():
    P = _path()
    M = P.base
    a, b = M.basis_vector("a"), M.basis_vector("b")
    x = P.monomial(2, a) + P.monomial(1, b, dt=True)
    assert evaluate_at(x, 2) == a * 4
    assert integrate(x, 0, 1) == b * Fraction(1, 2)
    assert antiderivative(P.monomial(0, a, dt=True)) == P.monomial(1, a)
    y, z = split_dt(x)
    assert y == P.monomial(2, a)
    assert z == P.monomial(1, b)


def test_cap_is_enforced():
    P = _path(cap=2)
    a = P.base.basis_vector("a")
    with pytest.raises(CapacityError):
        P.monomial(3, a)
    with pytest.raises(CapacityError):
        P.bracket(P.monomial(2, a), P.monomial(1, P.base.basis_vector("b")))


def test_elements_over_different_brackets_differ():
    flat = dgla_build(
        [("a", 0), ("b", 0), ("u", 1), ("v", 1)],
        differential={"a": {"u": 1}, "b": {"v": 1}},
        name="flat",
    )
    P, Q, R = _path(), PathAlgebra(flat, 3), _path()
    x = P.monomial(1, P.base.basis_vector("a"))
    y = Q.monomial(1, Q.base.basis_vector("a"))
    z = R.monomial(1, R.base.basis_vector("a"))
    assert P.base.space == Q.base.space
    assert x != y
    assert x == z

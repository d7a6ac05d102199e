# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for the cone complex, Bernoulli tables and the closed-form brackets."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from linfcone.core.algebra import identity_morphism, zero_dgla, zero_morphism
from linfcone.core.artin import truncated_polynomial
from linfcone.core.cone import (
    PairSquare,
    bernoulli,
    classical_bernoulli,
    compose_squares,
    cone_complex,
    cone_element,
    cone_functor_map,
    cone_linfty,
    cone_map,
    cone_space,
    embed_derived,
    koszul_brackets,
    odd_koszul_residual,
)
from linfcone.core.deformation import tensor_linfty, tensor_morphism
from linfcone.core.errors import ArgumentError
from linfcone.core.fixtures import derived_bracket_fixture, derived_dgla, fixture
from linfcone.core.graded import GradedVector
from linfcone.core.linfty import check_linear_morphism, compare_structures


def _cone_vector(structure, coords):
    return GradedVector(structure.space, coords)


def test_bernoulli_values_and_recursion():
    table = bernoulli(12)
    assert table.B[1] == Fraction(-1, 2)
    assert table.B[2] == Fraction(1, 6)
    assert table.B[3] == 0
    assert table.B[4] == Fraction(-1, 30)
    assert table.I[1] == Fraction(1, 2)
    assert -table.I[2] == table.B[2] / 2 == Fraction(1, 12)
    assert table.phi_coefficients(2) == {2: Fraction(1, 2), 1: Fraction(-1, 2)}
    assert table.cross_check().ok
    assert table.B == classical_bernoulli(12)


def test_bernoulli_needs_positive_size():
    with pytest.raises(ArgumentError):
        bernoulli(0)


@pytest.mark.parametrize("name", ["abelian", "sl2", "derived", "odd", "dualnumbers"])
def test_cone_differential_squares_to_zero(name):
    space, delta = cone_complex(fixture(name))
    for x in space.names:
        assert not delta(delta(GradedVector.basis(space, x)))


def test_cone_differential_on_pure_components():
    chi = fixture("abelian")
    space, delta = cone_complex(chi)
    assert delta(GradedVector.basis(space, "L.y")) == GradedVector(space, {"M.y": 1})
    assert delta(GradedVector.basis(space, "M.x")) == GradedVector(space, {"M.y": -1})


def test_suspended_cone_degrees():
    space = cone_space(fixture("sl2"))
    assert space.dims() == {-1: 2, 0: 3}
    assert space.degree("L.e") == -1
    assert space.degree("M.f") == 0


def test_closed_form_brackets_on_the_borel_pair():
    structure = cone_linfty(fixture("sl2"), 5)
    v = lambda coords: _cone_vector(structure, coords)  # noqa: E731
    assert structure.bracket(("L.e",)) == v({"M.e": -1})
    assert structure.bracket(("M.f",)) == v({})
    assert structure.bracket(("L.e", "L.h")) == v({"L.e": -2})
    assert structure.bracket(("M.f", "L.e")) == v({"M.h": Fraction(1, 2)})
    assert structure.bracket(("M.e", "M.f")) == v({})
    # -1/12 times the two orderings of [f, [f, e]] = -2f
    assert structure.bracket(("M.f", "M.f", "L.e")) == v({"M.f": Fraction(1, 3)})
    # -B_4 ad_h^4 e with ad_h e = 2e
    assert structure.bracket(("M.h",) * 4 + ("L.e",)) == v({"M.e": Fraction(8, 15)})
    assert structure.bracket(("L.e", "L.h", "M.f")) == v({})
    assert structure.bracket(("M.e", "M.f", "M.h")) == v({})


def test_cone_linfty_needs_a_binary_bracket():
    with pytest.raises(ArgumentError):
        cone_linfty(fixture("sl2"), 1)


def test_identity_square_gives_identity_map():
    chi = fixture("sl2")
    square = PairSquare(
        chi, chi, identity_morphism(chi.source), identity_morphism(chi.target)
    )
    morphism = cone_functor_map(square, 4)
    assert check_linear_morphism(morphism, 4).ok
    for x in morphism.source.space.names:
        assert morphism.f1.image(x) == GradedVector.basis(morphism.target.space, x)


def test_projection_to_l_is_linear_morphism():
    chi = fixture("sl2-identity")
    L = chi.source
    to_zero = zero_morphism(L, zero_dgla())
    square = PairSquare(
        chi, to_zero, identity_morphism(L), zero_morphism(chi.target, zero_dgla())
    )
    morphism = cone_functor_map(square, 4)
    assert check_linear_morphism(morphism, 4).ok
    assert not morphism.f1.image("M.e")
    assert morphism.f1.image("L.e") == GradedVector.basis(morphism.target.space, "L.e")


def test_non_commuting_square_is_rejected():
    chi = fixture("sl2-identity")
    square = PairSquare(
        chi, chi, identity_morphism(chi.source), zero_morphism(chi.target, chi.target)
    )
    with pytest.raises(ArgumentError):
        cone_functor_map(square, 3)


def test_composed_squares_compose_the_cone_maps():
    chi = fixture("sl2-identity")
    L = chi.source
    ident = PairSquare(chi, chi, identity_morphism(L), identity_morphism(chi.target))
    to_zero = zero_morphism(L, zero_dgla())
    project = PairSquare(
        chi, to_zero, identity_morphism(L), zero_morphism(chi.target, zero_dgla())
    )
    composed = cone_map(compose_squares(project, ident))
    assert composed == cone_map(project).compose(cone_map(ident))


def test_koszul_brackets_on_the_derived_fixture():
    M = derived_dgla()
    assert not koszul_brackets(M, 1)(("a",))
    phi2 = koszul_brackets(M, 2)
    assert phi2(("a", "b")) == M.vector({"v": Fraction(-1, 2)})


def test_binary_cone_bracket_on_embedded_elements():
    M = derived_dgla()
    sub = derived_bracket_fixture(M)
    structure = cone_linfty(sub.inclusion, 3)
    a, b = M.basis_vector("a"), M.basis_vector("b")
    phi = koszul_brackets(M, 2).evaluate([a, b])
    lhs = structure.evaluate([embed_derived(sub, a), embed_derived(sub, b)])
    expected = cone_element(sub.inclusion, sub.coordinates(M.d(phi)), phi)
    assert lhs == expected


def test_odd_koszul_relation_holds_on_basis_triples():
    M = derived_dgla()
    for a, b, c in product(M.space.names, repeat=3):
        assert not odd_koszul_residual(M, a, b, c), (a, b, c)


def test_scalar_extension_commutes_with_the_cone():
    chi = fixture("sl2")
    artin = truncated_polynomial(4)
    extended = tensor_linfty(cone_linfty(chi, 3), artin)
    _, _, chi_A = tensor_morphism(chi, artin)
    direct = cone_linfty(chi_A, 3)
    assert compare_structures(extended, direct, 3).ok

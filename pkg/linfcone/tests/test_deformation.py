# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for Maurer-Cartan pairs, gauge witnesses and homotopies over Artinian rings."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from linfcone.core.algebra import check_dgla
from linfcone.core.artin import truncated_polynomial
from linfcone.core.cone import cone_linfty
from linfcone.core.deformation import (
    MCPair,
    PairDeformations,
    bch,
    gauge_action,
    inverse_gauge,
    mc_poly_factorization,
    mc_residue,
    tensor_dgla,
    tensor_linfty,
)
from linfcone.core.errors import ArgumentError, CapacityError
from linfcone.core.fixtures import derived_dgla, fixture, gl_matrix_dgla
from linfcone.core.polynomial import PathAlgebra

C = "e,e>e"
G = "e>1"


def _dual(k: int) -> PairDeformations:
    return PairDeformations(fixture("dualnumbers"), truncated_polynomial(k))


def _dual_pair(pd: PairDeformations, lams, mus) -> MCPair:
    powers = pd.artin.monomials
    x = pd.L_A.element([(C, mono, lam) for mono, lam in zip(powers, lams)])
    a = pd.M_A.element([(G, mono, mu) for mono, mu in zip(powers, mus)])
    return pd.pair(x, a)


def test_tensor_extension_is_a_dgla():
    assert check_dgla(tensor_dgla(derived_dgla(), truncated_polynomial(3))).ok


def test_mc_pairs_over_the_dual_numbers():
    pd = _dual(2)
    for lam, mu in itertools.product(range(-2, 3), repeat=2):
        p = _dual_pair(pd, [lam], [mu])
        expected = lam == 2 * mu
        assert pd.mc_pair_check(p) is expected
        assert (not pd.closed_residue(p)) is expected


def test_second_order_obstruction():
    # over e^3 the e^2 coefficient forces mu_1 = 0
    pd = _dual(3)
    for l1, l2, m1, m2 in itertools.product(range(-1, 3), repeat=4):
        p = _dual_pair(pd, [l1, l2], [m1, m2])
        expected = l1 == 2 * m1 and l2 == 2 * m2 and m1 == 0
        assert pd.mc_pair_check(p) is expected


def test_first_order_solution_does_not_lift():
    assert _dual(2).mc_pair_check(_dual_pair(_dual(2), [2], [1]))
    pd = _dual(4)
    assert not pd.mc_pair_check(_dual_pair(pd, [2, 0, 0], [1, 0, 0]))
    assert pd.mc_pair_check(_dual_pair(pd, [0, 2, 0], [0, 1, 0]))


def test_closed_residue_matches_the_transferred_structure():
    pd = _dual(4)
    structure = tensor_linfty(cone_linfty(pd.chi, 4), pd.artin)
    for lams, mus in (([2, 0, 0], [1, 0, 0]), ([1, -1, 3], [2, 0, 1]), ([0, 2, 4], [0, 1, 2])):
        p = _dual_pair(pd, lams, mus)
        assert pd.closed_residue(p) == mc_residue(structure, pd.gamma(p))


def test_pair_degrees_are_checked():
    pd = PairDeformations(fixture("odd"), truncated_polynomial(3))
    with pytest.raises(ArgumentError):
        pd.pair(pd.L_A.element([("a", "e", 1)]), pd.M_A.zero())
    with pytest.raises(ArgumentError):
        pd.witness(pd.L_A.zero(), pd.M_A.element([("a", "e", 1)]))


def test_bch_in_gl2():
    G2 = tensor_dgla(gl_matrix_dgla(2), truncated_polynomial(4))
    x = G2.element([("E12", "e", 1)])
    y = G2.element([("E21", "e", 1)])
    expected = G2.element(
        [
            ("E12", "e", 1),
            ("E21", "e", 1),
            ("E11", "e^2", Fraction(1, 2)),
            ("E22", "e^2", Fraction(-1, 2)),
            ("E12", "e^3", Fraction(-1, 6)),
            ("E21", "e^3", Fraction(-1, 6)),
        ]
    )
    assert bch(G2, x, y) == expected


def test_gauge_inverse_undoes_the_action():
    M_A = tensor_dgla(derived_dgla(), truncated_polynomial(3))
    a = M_A.element([("a", "e", 1), ("b", "e^2", 1)])
    y = M_A.element([("u", "e", 1), ("v", "e", 2)])
    moved = gauge_action(M_A, a, y)
    assert moved != y
    assert gauge_action(M_A, inverse_gauge(a), moved) == y


def _odd_setup():
    pd = PairDeformations(fixture("odd"), truncated_polynomial(3))
    p0 = pd.pair(pd.L_A.zero(), pd.M_A.element([("a", "e", 1)]))
    w = pd.witness(pd.L_A.element([("b", "e", 1)]), pd.M_A.element([("a_1", "e", 1)]))
    return pd, p0, w


def test_gauge_action_on_pairs():
    pd, p0, w = _odd_setup()
    assert pd.mc_pair_check(p0)
    p1 = pd.gauge_pair_act(w, p0)
    assert p1 == MCPair(
        pd.L_A.zero(),
        pd.M_A.element([("a", "e", 2), ("b", "e", -1), ("b", "e^2", -1)]),
    )
    assert pd.mc_pair_check(p1)
    assert pd.gauge_equiv_check(p0, p1, w)
    assert pd.orbit_points(p0, [w]) == [p1]


def test_gauge_and_homotopy_round_trip():
    pd, p0, w = _odd_setup()
    p1 = pd.gauge_pair_act(w, p0)
    path = pd.homotopy_from_gauge(p0, w)
    assert path.at(0) == p0
    assert path.at(1) == p1
    assert pd.path_is_mc(path)
    recovered = pd.gauge_from_homotopy(path)
    assert pd.gauge_equiv_check(p0, p1, recovered)
    assert recovered == w


def test_homotopy_respects_the_cap():
    pd, p0, w = _odd_setup()
    with pytest.raises(CapacityError):
        pd.homotopy_from_gauge(p0, w, cap=1)


def test_homotopy_needs_an_mc_start():
    pd = _dual(2)
    start = _dual_pair(pd, [1], [0])
    assert not pd.mc_pair_check(start)
    with pytest.raises(ArgumentError):
        pd.homotopy_from_gauge(start, pd.witness(pd.L_A.zero(), pd.M_A.zero()))


def test_factorization_of_a_gauge_path():
    M_A = tensor_dgla(derived_dgla(), truncated_polynomial(3))
    P = PathAlgebra(M_A, 4)
    x0 = M_A.element([("u", "e", 1)])
    a = M_A.element([("a", "e", 1), ("b", "e^2", 1)])
    x = gauge_action(P, P.monomial(1, a), P.constant(x0))
    result = mc_poly_factorization(P, x)
    assert result.x0 == x0
    assert result.g == P.monomial(1, a)


def test_factorization_rejects_non_mc_paths():
    M_A = tensor_dgla(derived_dgla(), truncated_polynomial(3))
    P = PathAlgebra(M_A, 2)
    with pytest.raises(ArgumentError):
        mc_poly_factorization(P, P.monomial(1, M_A.element([("u", "e", 1)])))

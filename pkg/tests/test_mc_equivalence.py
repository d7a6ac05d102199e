# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Maurer-Cartan pairs against the transferred structure, and gauge against homotopy."""

from __future__ import annotations

import itertools

import pytest

from linfcone.core.artin import truncated_polynomial
from linfcone.core.cone import cone_linfty
from linfcone.core.deformation import PairDeformations, mc_residue, tensor_linfty
from linfcone.core.fixtures import fixture


def _deformations(name: str, k: int):
    pd = PairDeformations(fixture(name), truncated_polynomial(k))
    structure = tensor_linfty(cone_linfty(pd.chi, max(pd.depth, 2)), pd.artin)
    return pd, structure


def _agree(pd, structure, candidates) -> int:
    accepted = 0
    for p in candidates:
        by_pair = pd.mc_pair_check(p)
        assert by_pair == (not mc_residue(structure, pd.gamma(p)))
        assert by_pair == (not pd.closed_residue(p))
        accepted += by_pair
    return accepted


def _dual_candidates(pd, lam_values, mu_values):
    monos = pd.artin.monomials
    for lams in itertools.product(lam_values, repeat=len(monos)):
        for mus in itertools.product(mu_values, repeat=len(monos)):
            x = pd.L_A.element([("e,e>e", m, c) for m, c in zip(monos, lams)])
            a = pd.M_A.element([("e>1", m, c) for m, c in zip(monos, mus)])
            yield pd.pair(x, a)


def test_dual_numbers_over_first_order():
    pd, structure = _deformations("dualnumbers", 2)
    accepted = _agree(pd, structure, _dual_candidates(pd, range(-2, 3), range(-2, 3)))
    assert accepted == 3


def test_dual_numbers_over_third_order():
    pd, structure = _deformations("dualnumbers", 4)
    accepted = _agree(pd, structure, _dual_candidates(pd, (0, 1, 2), (0, 1)))
    assert accepted == 4


def test_derived_fixture_over_second_order():
    pd, structure = _deformations("derived", 3)
    monos = pd.artin.monomials
    candidates = []
    for coeffs in itertools.product((0, 1), repeat=8):
        it = iter(coeffs)
        x = pd.L_A.element([(y, m, next(it)) for y in ("u", "v") for m in monos])
        a = pd.M_A.element([(y, m, next(it)) for y in ("a", "b") for m in monos])
        candidates.append(pd.pair(x, a))
    assert _agree(pd, structure, candidates) > 0


def _odd_cases():
    pd = PairDeformations(fixture("odd"), truncated_polynomial(3))
    L_A, M_A = pd.L_A, pd.M_A
    starts = [
        M_A.zero(),
        M_A.element([("a", "e", 1)]),
        M_A.element([("b", "e", 1), ("a", "e^2", -2)]),
    ]
    lie = [L_A.zero(), L_A.element([("b", "e", 1)]), L_A.element([("a", "e", 1), ("b", "e^2", 3)])]
    odd = [
        M_A.zero(),
        M_A.element([("a_1", "e", 1)]),
        M_A.element([("b_1", "e^2", 1)]),
        M_A.element([("a_2", "e", 1), ("a_1", "e^2", 1)]),
    ]
    for a0, l, b in itertools.product(starts, lie, odd):
        yield pd, pd.pair(L_A.zero(), a0), pd.witness(l, b)


@pytest.mark.parametrize("pd,p0,w", list(_odd_cases()))
def test_gauge_witnesses_give_mc_paths(pd, p0, w):
    p1 = pd.gauge_pair_act(w, p0)
    assert pd.mc_pair_check(p1)
    path = pd.homotopy_from_gauge(p0, w)
    assert pd.path_is_mc(path)
    assert path.at(0) == p0
    assert path.at(1) == p1
    recovered = pd.gauge_from_homotopy(path)
    assert pd.gauge_equiv_check(p0, p1, recovered)


def test_dual_numbers_gauge_round_trip():
    pd = PairDeformations(fixture("dualnumbers"), truncated_polynomial(3))
    p0 = pd.pair(pd.L_A.element([("e,e>e", "e^2", 2)]), pd.M_A.element([("e>1", "e^2", 1)]))
    assert pd.mc_pair_check(p0)
    w = pd.witness(pd.L_A.zero(), pd.M_A.zero())
    path = pd.homotopy_from_gauge(p0, w)
    assert pd.path_is_mc(path)
    assert pd.gauge_equiv_check(p0, path.at(1), pd.gauge_from_homotopy(path))

# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""End-to-end agreement of the closed-form, recursive and tree-sum brackets."""

from __future__ import annotations

import pytest

from linfcone.core.cone import cone_linfty
from linfcone.core.fixtures import fixture
from linfcone.core.linfty import compare_structures
from linfcone.core.transfer import (
    HChi,
    check_contraction,
    check_iota_morphism,
    transfer_recursive,
    tree_sum_bracket,
    tree_sum_structure,
)

# (fixture, highest arity compared)
AGREEMENT = [
    ("abelian", 5),
    ("sl2", 5),
    ("dualnumbers", 5),
    ("derived", 5),
    ("odd", 5),
]


@pytest.mark.parametrize("name,n", AGREEMENT)
def test_three_oracles_agree(name, n):
    chi = fixture(name)
    closed = cone_linfty(chi, n)
    recursive = transfer_recursive(chi, n).structure
    trees = tree_sum_structure(chi, n)
    first = compare_structures(closed, recursive, n)
    second = compare_structures(closed, trees, n)
    assert first.ok, first.to_dict()
    assert second.ok, second.to_dict()


@pytest.mark.parametrize("name", ["sl2", "odd"])
def test_iota_extends_to_an_linfty_morphism(name):
    result = transfer_recursive(fixture(name), 3)
    assert check_iota_morphism(result, 3).ok


@pytest.mark.parametrize(
    "name,cap",
    [
        ("abelian", 4),
        ("sl2", 4),
        ("sl2-identity", 4),
        ("derived", 4),
        ("odd", 4),
        ("dualnumbers", 4),
        ("hochschild", 2),
        ("split", 2),
    ],
)
def test_contraction_identities_hold(name, cap):
    report = check_contraction(fixture(name), cap)
    assert report.ok, report.to_dict()


def test_two_leaf_tree_reproduces_pi_of_the_bracket():
    # one tree, |Aut| = 2, two orderings of the inputs
    chi = fixture("dualnumbers")
    bracket = tree_sum_bracket(chi, 2)
    hchi = HChi(chi, 4)
    names = hchi.cone.names
    for i, a in enumerate(names):
        for b in names[i:]:
            expected = hchi._pi_unchecked(hchi.q2(hchi.iota_basis(a), hchi.iota_basis(b)))
            assert bracket((a, b)) == expected

# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""The closed-form cone brackets satisfy the L-infinity relations; corrupted ones do not."""

from __future__ import annotations

from fractions import Fraction

import pytest

from linfcone.core.cone import ConeCoefficients, cone_linfty
from linfcone.core.fixtures import fixture
from linfcone.core.linfty import check_linfty


@pytest.mark.parametrize(
    "name,up_to",
    [
        ("abelian", 6),
        ("sl2", 6),
        ("sl2-identity", 6),
        ("derived", 6),
        ("dualnumbers", 6),
        ("odd", 5),
        ("hochschild", 3),
        ("split", 3),
    ],
)
def test_cone_relations(name, up_to):
    report = check_linfty(cone_linfty(fixture(name), max(up_to, 2)), up_to)
    assert report.ok, report.to_dict()


MUTATIONS = {
    "half": ConeCoefficients(half=Fraction(1, 3)),
    "higher_sign": ConeCoefficients(higher_sign=-1),
    "second_bernoulli": ConeCoefficients().with_bernoulli(2, Fraction(1, 7)),
    "third_bernoulli": ConeCoefficients().with_bernoulli(3, Fraction(1)),
    "differential_sign": ConeCoefficients(differential_sign=1),
    "l_bracket_sign": ConeCoefficients(l_bracket_sign=-1),
}


@pytest.mark.parametrize("label", sorted(MUTATIONS))
def test_single_corruption_is_detected(label):
    structure = cone_linfty(fixture("sl2-identity"), 4, MUTATIONS[label])
    report = check_linfty(structure, 4)
    assert not report.ok


def test_fourth_bernoulli_weight_is_seen_by_the_arity_five_relation():
    coefficients = ConeCoefficients().with_bernoulli(4, Fraction(1, 7))
    structure = cone_linfty(fixture("sl2-identity"), 5, coefficients)
    assert check_linfty(structure, 4).ok
    assert not check_linfty(structure, 5).ok

# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for L-infinity structures, the coderivation and linear morphisms."""

from __future__ import annotations

from fractions import Fraction

import pytest

from linfcone.core.algebra import dgla_build
from linfcone.core.errors import ArgumentError, CapacityError
from linfcone.core.fixtures import derived_dgla, sl2
from linfcone.core.graded import GradedVector
from linfcone.core.linfty import (
    check_linear_morphism,
    check_linfty,
    coderivation_apply,
    compare_structures,
    identity_linear_morphism,
    quillen,
    table_structure,
    unsuspended_bracket,
)


def _corrupted_sl2():
    return dgla_build(
        [("e", 0), ("f", 0), ("h", 0)],
        bracket={("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1, "e": 1}},
        name="sl2'",
    )


def test_quillen_structure_of_sl2_satisfies_the_relations():
    structure = quillen(sl2())
    report = check_linfty(structure, 4)
    assert report.ok
    assert structure.space.degree("e") == -1


def test_corrupted_jacobi_surfaces_at_arity_three():
    structure = quillen(_corrupted_sl2(), validate=False)
    report = check_linfty(structure, 3)
    assert report.kinds() == ["arity_3"]
    with pytest.raises(ArgumentError):
        quillen(_corrupted_sl2())


def test_binary_bracket_on_the_suspension():
    M = derived_dgla()
    structure = quillen(M)
    # q2(v, w) = (-1)^{deg v}[v, w]
    assert structure.bracket(("a", "b")) == GradedVector(structure.space, {"b": 1})
    assert structure.bracket(("v", "a")) == GradedVector(structure.space, {"v": 1})
    assert structure.bracket(("a",)) == GradedVector(structure.space, {"u": -1})


def test_coderivation_on_a_two_letter_word():
    structure = quillen(derived_dgla())
    image = coderivation_apply(structure, ("a", "b"))
    assert image == {("b",): Fraction(1), ("a", "v"): Fraction(1), ("b", "u"): Fraction(-1)}


def test_unsuspended_bracket_recovers_the_lie_bracket():
    M = sl2()
    bracket = unsuspended_bracket(quillen(M), 2)
    assert bracket(("e", "f")) == M.bracket_basis("e", "f")


def test_structures_are_truncated():
    structure = quillen(sl2())
    assert not structure.bracket(("e", "f", "h"))
    table = table_structure(structure.space, {1: {}, 2: {}}, max_arity=2)
    with pytest.raises(CapacityError):
        table.bracket(("e", "f", "h"))


def test_table_structure_reproduces_brackets():
    structure = quillen(sl2())
    tables = {k: dict(structure.table(k)) for k in (1, 2)}
    copy = table_structure(structure.space, tables, max_arity=2)
    assert compare_structures(structure, copy, 2).ok


def test_identity_morphism_is_strict():
    structure = quillen(derived_dgla())
    assert check_linear_morphism(identity_linear_morphism(structure), 3).ok


def test_checks_need_positive_arity():
    with pytest.raises(ArgumentError):
        check_linfty(quillen(sl2()), 0)

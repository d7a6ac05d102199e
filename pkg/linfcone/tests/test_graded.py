# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for graded spaces, vectors, maps and Koszul signs."""

from __future__ import annotations

from fractions import Fraction

import pytest

from linfcone.core.errors import ArgumentError, FormatError
from linfcone.core.graded import (
    GradedMap,
    GradedSpace,
    GradedVector,
    MultilinearMap,
    as_scalar,
    basis_words,
    canonicalize,
    format_scalar,
    koszul_sign,
    permutation_sign,
    unshuffles,
)


def _space() -> GradedSpace:
    return GradedSpace([("b", 1), ("a", 0), ("c", 0)])


def test_basis_is_ordered_by_degree_then_name():
    space = _space()
    assert space.names == ("a", "c", "b")
    assert space.dims() == {0: 2, 1: 1}
    assert space.names_in_degree(0) == ("a", "c")


def test_shift_lowers_degrees():
    shifted = _space().shift(1)
    assert shifted.degree("a") == -1
    assert shifted.degree("b") == 0


def test_duplicate_and_unknown_names_are_rejected():
    with pytest.raises(ArgumentError):
        GradedSpace([("a", 0), ("a", 1)])
    with pytest.raises(ArgumentError):
        _space().degree("z")


def test_direct_sum_prefixes_names():
    total = GradedSpace.direct_sum([("L.", _space().shift(1)), ("M.", _space())])
    assert len(total) == 6
    assert total.degree("L.b") == 0
    assert total.degree("M.b") == 1


def test_scalars_parse_exactly():
    assert as_scalar("3/6") == Fraction(1, 2)
    assert as_scalar(4) == Fraction(4)
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(Fraction(3)) == "3"
    for bad in ("x", "1/0", True, 0.5):
        with pytest.raises(FormatError):
            as_scalar(bad)


def test_vectors_drop_zero_coefficients():
    space = _space()
    v = GradedVector(space, {"a": 1, "b": "1/2"})
    w = GradedVector(space, {"a": -1})
    total = v + w
    assert total.coords == {"b": Fraction(1, 2)}
    assert total.is_homogeneous()
    assert total.degree() == 1
    assert not (total - total)
    assert total.to_dict() == {"b": "1/2"}


def test_vector_with_unknown_name_raises():
    with pytest.raises(ArgumentError):
        GradedVector(_space(), {"z": 1})


def test_koszul_and_permutation_signs():
    assert koszul_sign((1, 0), [1, 1]) == -1
    assert koszul_sign((1, 0), [1, 0]) == 1
    assert koszul_sign((2, 0, 1), [1, 1, 1]) == 1
    assert permutation_sign((1, 2, 0)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    with pytest.raises(ArgumentError):
        koszul_sign((0, 0), [1, 1])


def test_unshuffles_count_binomially():
    assert len(unshuffles(2, 2)) == 6
    assert unshuffles(1, 2) == ((0, 1, 2), (1, 0, 2), (2, 0, 1))


def test_canonical_words():
    space = _space()
    assert canonicalize(space, ["b", "b"]).is_zero()
    word = canonicalize(space, ["b", "a"])
    assert word.factors == ("a", "b")
    assert word.sign == 1
    odd = GradedSpace([("x", 1), ("y", 1)])
    swapped = canonicalize(odd, ["y", "x"])
    assert swapped.factors == ("x", "y")
    assert swapped.sign == -1


def test_basis_words_skip_repeated_odd_factors():
    words = basis_words(_space(), 2)
    assert ("b", "b") not in words
    assert ("a", "a") in words
    assert len(words) == 5


def test_graded_map_composition():
    space = _space()
    swap = GradedMap(
        space,
        space,
        0,
        {"a": GradedVector(space, {"c": 1}), "c": GradedVector(space, {"a": 2})},
    )
    twice = swap.compose(swap)
    assert twice(GradedVector.basis(space, "a")) == GradedVector(space, {"a": 2})
    assert GradedMap.identity(space)(GradedVector.basis(space, "b")) == GradedVector.basis(
        space, "b"
    )


def test_symmetrize_of_graded_symmetric_map_scales_by_factorial():
    odd = GradedSpace([("x", 1), ("y", 1), ("z", 2)])

    def fn(names):
        word = canonicalize(odd, names)
        if word.factors == ("x", "y"):
            return GradedVector(odd, {"z": word.sign})
        return GradedVector.zero(odd)

    product = MultilinearMap(odd, odd, 2, 0, fn)
    doubled = product.symmetrize()
    x, y = GradedVector.basis(odd, "x"), GradedVector.basis(odd, "y")
    assert doubled.evaluate([x, y]) == GradedVector(odd, {"z": 2})
    assert doubled.evaluate([y, x]) == GradedVector(odd, {"z": -2})

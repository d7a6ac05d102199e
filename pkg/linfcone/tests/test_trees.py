# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for rooted-tree enumeration and the brute-force isomorphism oracle."""

from __future__ import annotations

from collections import Counter
from math import factorial

import pytest

from linfcone.core.errors import ArgumentError
from linfcone.core.trees import (
    LEAF,
    automorphisms,
    brute_force_trees,
    enumerate_trees,
    labelled_trees,
)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 12)])
def test_tree_class_counts(n, count):
    assert len(enumerate_trees(n)) == count


def test_small_automorphism_groups():
    cherry = (LEAF, LEAF)
    assert automorphisms(cherry) == 2
    assert automorphisms((LEAF, LEAF, LEAF)) == 6
    assert automorphisms((LEAF, cherry)) == 2
    assert automorphisms((cherry, cherry)) == 8


def test_binary_trees_with_four_leaves():
    binary = [t for t in enumerate_trees(4) if t.is_binary()]
    assert sorted(t.aut for t in binary) == [2, 8]


@pytest.mark.parametrize("n,labelled", [(3, 4), (4, 26), (5, 236)])
def test_orbit_sizes_add_up_to_labelled_count(n, labelled):
    assert len(labelled_trees(n)) == labelled
    assert sum(factorial(n) // t.aut for t in enumerate_trees(n)) == labelled


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_brute_force_oracle_agrees(n):
    classes = brute_force_trees(n)
    assert len(classes) == len(enumerate_trees(n))
    assert Counter(c.aut for c in classes) == Counter(t.aut for t in enumerate_trees(n))


def test_trees_need_a_leaf():
    with pytest.raises(ArgumentError):
        enumerate_trees(0)

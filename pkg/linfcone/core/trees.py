# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/trees.py
"""Rooted trees with internal vertices of arity at least two.

A tree is a nested tuple: a leaf is ``()`` and an internal vertex is the
sorted tuple of its children. Sorting makes the encoding canonical, so two
trees are isomorphic exactly when their tuples are equal.

The brute-force side builds every leaf-labelled hierarchy, turns it into a
networkx digraph and collapses isomorphic ones; it shares no code with the
canonical enumeration and serves as its oracle.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Tuple, Union

import networkx as nx
from sympy.utilities.iterables import multiset_partitions, partitions

from .errors import ArgumentError

logger = logging.getLogger(__name__)

Shape = Tuple["Shape", ...]
LEAF: Shape = ()

LabelledNode = Union[int, Tuple["LabelledNode", ...]]


@lru_cache(maxsize=None)
def leaf_count(shape: Shape) -> int:
    if shape == LEAF:
        return 1
    return sum(leaf_count(child) for child in shape)


@lru_cache(maxsize=None)
def automorphisms(shape: Shape) -> int:
    """|Aut|: product over vertices of (multiplicity of equal children)!."""
    total = 1
    for child, mult in Counter(shape).items():
        total *= factorial(mult) * automorphisms(child) ** mult
    return total


@lru_cache(maxsize=None)
def max_vertex_arity(shape: Shape) -> int:
    if shape == LEAF:
        return 0
    return max([len(shape)] + [max_vertex_arity(child) for child in shape])


@dataclass(frozen=True)
class RootedTree:
    shape: Shape

    @property
    def leaves(self) -> int:
        return leaf_count(self.shape)

    @property
    def aut(self) -> int:
        return automorphisms(self.shape)

    def is_binary(self) -> bool:
        return max_vertex_arity(self.shape) <= 2

    def __str__(self) -> str:
        return render(self.shape)


def render(shape: Shape) -> str:
    """Bracket notation: ``*`` for a leaf, ``(a b)`` for a vertex."""
    if shape == LEAF:
        return "*"
    return "(" + " ".join(render(child) for child in shape) + ")"


@lru_cache(maxsize=None)
def _shapes(n: int) -> Tuple[Shape, ...]:
    if n == 1:
        return (LEAF,)
    found = set()
    for parts in partitions(n):
        if parts.get(n) == 1:
            continue
        choices = [
            itertools.combinations_with_replacement(_shapes(size), mult)
            for size, mult in sorted(parts.items())
        ]
        for picked in itertools.product(*choices):
            children = [child for group in picked for child in group]
            found.add(tuple(sorted(children)))
    return tuple(sorted(found))


def enumerate_trees(n: int) -> List[RootedTree]:
    """All isomorphism classes of trees with n leaves, in canonical order."""
    if n < 1:
        raise ArgumentError("trees need at least one leaf")
    trees = [RootedTree(shape) for shape in _shapes(n)]
    logger.debug("enumerate_trees(%d): %d classes", n, len(trees))
    return trees


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


def _labelled(labels: Tuple[int, ...]) -> Iterator[LabelledNode]:
    if len(labels) == 1:
        yield labels[0]
        return
    for m in range(2, len(labels) + 1):
        for blocks in multiset_partitions(list(labels), m):
            subtrees = [list(_labelled(tuple(block))) for block in blocks]
            for children in itertools.product(*subtrees):
                yield tuple(children)


def labelled_trees(n: int) -> List[LabelledNode]:
    """Every leaf-labelled hierarchy on leaves 0..n-1."""
    if n < 1:
        raise ArgumentError("trees need at least one leaf")
    return list(_labelled(tuple(range(n))))


def tree_to_digraph(tree: Union[Shape, LabelledNode]) -> nx.DiGraph:
    """Edges point from a vertex to its children; node 0 is the root."""
    graph = nx.DiGraph()
    counter = itertools.count()

    def visit(node: Union[Shape, LabelledNode]) -> int:
        index = next(counter)
        graph.add_node(index)
        if isinstance(node, tuple):
            for child in node:
                graph.add_edge(index, visit(child))
        return index

    visit(tree)
    return graph


@dataclass
class TreeClass:
    graph: nx.DiGraph
    labelled: int
    aut: int


def brute_force_trees(n: int) -> List[TreeClass]:
    """Isomorphism classes of labelled trees; |Aut| = n! / (labelled members)."""
    classes: List[TreeClass] = []
    buckets: Dict[str, List[TreeClass]] = {}
    for tree in labelled_trees(n):
        graph = tree_to_digraph(tree)
        # the hash only narrows candidates; is_isomorphic decides
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(graph), [])
        for cls in bucket:
            if nx.is_isomorphic(cls.graph, graph):
                cls.labelled += 1
                break
        else:
            cls = TreeClass(graph, 1, 0)
            bucket.append(cls)
            classes.append(cls)
    for cls in classes:
        cls.aut = factorial(n) // cls.labelled
    logger.debug("brute_force_trees(%d): %d classes", n, len(classes))
    return classes

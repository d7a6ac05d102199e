# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/linfty.py
"""L-infinity structures as bracket families on a suspended space.

Brackets q_k are degree-1 graded-symmetric maps on the symmetric powers of
V[1]. They are supplied as callables on basis words in any factor order; the
structure canonicalizes words, applies the Koszul sign and memoizes the
result. The axioms are checked through the corestriction (QQ)^1 of the
coderivation extension.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from .algebra import DGLA, check_dgla
from .errors import ArgumentError, CapacityError
from .graded import (
    GradedMap,
    GradedSpace,
    GradedVector,
    MultilinearMap,
    basis_words,
    canonicalize,
    koszul_sign,
    undecalage,
    unshuffles,
)
from .reports import Report

logger = logging.getLogger(__name__)

BracketFn = Callable[[Tuple[str, ...]], GradedVector]
WordSum = Dict[Tuple[str, ...], Fraction]


class LInftyStructure:
    """Brackets q_k on the suspended space ``space`` (degrees already shifted)."""

    def __init__(
        self,
        space: GradedSpace,
        brackets: Mapping[int, BracketFn],
        max_arity: int,
        vanishing_above: bool = False,
        name: str = "",
    ) -> None:
        if max_arity < 1:
            raise ArgumentError("max_arity must be at least 1")
        self.space = space
        self.max_arity = max_arity
        self.vanishing_above = vanishing_above
        self.name = name
        self._brackets = dict(brackets)
        self._cache: Dict[Tuple[str, ...], GradedVector] = {}

    def arities(self) -> List[int]:
        return sorted(k for k in self._brackets if k <= self.max_arity)

    def raw(self, names: Sequence[str]) -> GradedVector:
        """Call the stored bracket on a word exactly as given."""
        names = tuple(names)
        k = len(names)
        if k > self.max_arity:
            if self.vanishing_above:
                return GradedVector.zero(self.space)
            raise CapacityError(
                f"bracket of arity {k} requested beyond max arity {self.max_arity}",
                needed=k,
            )
        fn = self._brackets.get(k)
        if fn is None:
            return GradedVector.zero(self.space)
        return fn(names)

    def bracket(self, names: Sequence[str]) -> GradedVector:
        """q_k on a word of basis elements, through its canonical form."""
        word = canonicalize(self.space, names)
        if word.is_zero():
            return GradedVector.zero(self.space)
        value = self._cache.get(word.factors)
        if value is None:
            value = self.raw(word.factors)
            self._cache[word.factors] = value
        return value if word.sign == 1 else -value

    def evaluate(self, vectors: Sequence[GradedVector]) -> GradedVector:
        """Multilinear extension of q_k to arbitrary vectors."""
        acc: Dict[str, Fraction] = {}
        for combo in itertools.product(*(v.items() for v in vectors)):
            coeff = Fraction(1)
            for _, value in combo:
                coeff *= value
            out = self.bracket(tuple(name for name, _ in combo))
            for tgt, c in out.coords.items():
                acc[tgt] = acc.get(tgt, Fraction(0)) + coeff * c
        return GradedVector(self.space, {k: v for k, v in acc.items() if v})

    def table(self, k: int) -> List[Tuple[Tuple[str, ...], GradedVector]]:
        """All nonzero structure constants of q_k on canonical basis words."""
        out = []
        for word in basis_words(self.space, k):
            value = self.bracket(word)
            if value:
                out.append((word, value))
        return out

    def __repr__(self) -> str:
        return f"<LInftyStructure {self.name or '?'} max_arity={self.max_arity}>"


def quillen(dgla: DGLA, validate: bool = True) -> LInftyStructure:
    """The DGLA as an L-infinity structure: q1 = -d, q2(v, w) = (-1)^{deg v}[v, w]."""
    if validate:
        report = check_dgla(dgla)
        if not report.ok:
            first = report.violations[0]
            raise ArgumentError(
                f"not a DGLA: {first.kind} fails on {', '.join(first.witness)}"
            )
    space = dgla.space.shift(1)

    def q1(names: Tuple[str, ...]) -> GradedVector:
        return -dgla.d(dgla.basis_vector(names[0])).relabel(space)

    def q2(names: Tuple[str, ...]) -> GradedVector:
        a, b = names
        value = dgla.bracket_basis(a, b).relabel(space)
        return -value if dgla.space.degree(a) % 2 else value

    return LInftyStructure(
        space, {1: q1, 2: q2}, max_arity=2, vanishing_above=True, name=dgla.name
    )


def unsuspended_bracket(structure: LInftyStructure, k: int) -> MultilinearMap:
    """The bracket [ , ..., ]_k on V recovered from q_k by inverse decalage."""
    mapping = MultilinearMap(
        structure.space, structure.space, k, 1, lambda names: structure.bracket(names)
    )
    return undecalage(mapping, shift=1)


def coderivation_apply(structure: LInftyStructure, word: Sequence[str]) -> WordSum:
    """Q(w) = sum_k sum_{unshuffles} e(s) q_k(w_s1..w_sk) . w_s(k+1)..w_sn.

    Returns canonical words with coefficients; words of a zero sum are dropped.
    """
    word = tuple(word)
    n = len(word)
    if n < 1:
        raise ArgumentError("coderivation needs a non-empty word")
    space = structure.space
    degrees = [space.degree(x) for x in word]
    out: WordSum = {}
    for k in range(1, n + 1):
        for perm in unshuffles(k, n - k):
            head = tuple(word[i] for i in perm[:k])
            rest = tuple(word[i] for i in perm[k:])
            value = structure.bracket(head)
            if not value:
                continue
            eps = koszul_sign(perm, degrees)
            for name, coeff in value.coords.items():
                canon = canonicalize(space, (name,) + rest)
                if canon.is_zero():
                    continue
                key = canon.factors
                out[key] = out.get(key, Fraction(0)) + eps * canon.sign * coeff
    return {key: value for key, value in out.items() if value}


def corestriction_residual(structure: LInftyStructure, word: Sequence[str]) -> GradedVector:
    """(QQ)^1 on a word: sum of q_{|w'|}(w') over the terms w' of Q(w)."""
    acc: Dict[str, Fraction] = {}
    for term, coeff in coderivation_apply(structure, word).items():
        value = structure.bracket(term)
        for name, c in value.coords.items():
            acc[name] = acc.get(name, Fraction(0)) + coeff * c
    return GradedVector(structure.space, {k: v for k, v in acc.items() if v})


def check_linfty(structure: LInftyStructure, up_to: int) -> Report:
    """Empty report iff (QQ)^1 vanishes on all basis words of length <= up_to."""
    if up_to < 1:
        raise ArgumentError("up_to must be at least 1")
    report = Report("linfty")
    for n in range(1, up_to + 1):
        words = basis_words(structure.space, n)
        for word in words:
            report.checked += 1
            residual = corestriction_residual(structure, word)
            if residual:
                report.add(f"arity_{n}", word, residual)
        logger.debug(
            "check_linfty %s: arity %d, %d words", structure.name or "?", n, len(words)
        )
    logger.info(
        "check_linfty %s up to %d: %d violations",
        structure.name or "?",
        up_to,
        len(report),
    )
    return report


class LInftyLinearMorphism:
    """A strict (linear) morphism given by its degree-0 component f1."""

    def __init__(
        self, source: LInftyStructure, target: LInftyStructure, f1: GradedMap
    ) -> None:
        if f1.source != source.space or f1.target != target.space or f1.degree != 0:
            raise ArgumentError("f1 must be a degree-0 map between the suspended spaces")
        self.source = source
        self.target = target
        self.f1 = f1

    def __call__(self, vector: GradedVector) -> GradedVector:
        return self.f1(vector)


def check_linear_morphism(morphism: LInftyLinearMorphism, up_to: int) -> Report:
    """Empty report iff q_n(f1 v1, ..., f1 vn) = f1 q_n(v1, ..., vn) for n <= up_to."""
    if up_to < 1:
        raise ArgumentError("up_to must be at least 1")
    report = Report("linear_morphism")
    source, target, f1 = morphism.source, morphism.target, morphism.f1
    for n in range(1, up_to + 1):
        for word in basis_words(source.space, n):
            report.checked += 1
            lhs = target.evaluate([f1.image(x) for x in word])
            rhs = f1(source.bracket(word))
            if lhs != rhs:
                report.add(f"arity_{n}", word, lhs - rhs)
    return report


def compare_structures(
    first: LInftyStructure,
    second: LInftyStructure,
    up_to: int,
    start: int = 1,
) -> Report:
    """Report every basis word on which the two structures' brackets differ."""
    if first.space != second.space:
        raise ArgumentError("structures live on different spaces")
    report = Report(f"compare:{first.name or '?'}/{second.name or '?'}")
    for n in range(start, up_to + 1):
        for word in basis_words(first.space, n):
            report.checked += 1
            a = first.bracket(word)
            b = second.bracket(word)
            if a != b:
                report.add(f"arity_{n}", word, a - b)
    return report


def identity_linear_morphism(structure: LInftyStructure) -> LInftyLinearMorphism:
    return LInftyLinearMorphism(
        structure, structure, GradedMap.identity(structure.space)
    )


def zero_structure() -> LInftyStructure:
    return LInftyStructure(GradedSpace([]), {}, max_arity=1, vanishing_above=True)


def table_structure(
    space: GradedSpace,
    tables: Mapping[int, Mapping[Tuple[str, ...], GradedVector]],
    max_arity: int,
    name: str = "",
) -> LInftyStructure:
    """Structure backed by explicit constants on canonical words (zero elsewhere)."""

    def make(k: int) -> BracketFn:
        entries = dict(tables.get(k, {}))

        def fn(names: Tuple[str, ...]) -> GradedVector:
            return entries.get(names) or GradedVector.zero(space)

        return fn

    return LInftyStructure(
        space,
        {k: make(k) for k in range(1, max_arity + 1)},
        max_arity=max_arity,
        vanishing_above=False,
        name=name,
    )

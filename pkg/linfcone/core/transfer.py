# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/transfer.py
"""Homotopy transfer from the path object H_chi onto the suspended cone.

H_chi is the sub-DGLA of L x M[t, dt] of pairs (l, m) with m(0) = 0 and
m(1) = chi(l). Its suspension carries q1 = -d and q2 = (-1)^{deg h1}[h1, h2]
and nothing above arity two. The contraction onto C[1] is

    iota(l, m) = (l, t chi(l) + dt m)
    pi(l, m)   = (l, int_0^1 m)
    K(l, m)    = (0, int_0^t m - t int_0^1 m)

Two independent constructions of the transferred brackets live here: the
recursion f_n = K X_n, <>_n = pi X_n with X_n the quadratic part of the
coalgebra map, and the sum over binary rooted trees.
"""

from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from .algebra import DGLA, DGLAMorphism
from .cone import cone_space, cone_vector, split_cone_vector
from .errors import ArgumentError, CapacityError
from .graded import (
    GradedSpace,
    GradedVector,
    MultilinearMap,
    ScalarLike,
    as_scalar,
    basis_words,
    canonicalize,
    koszul_sign,
    unshuffles,
)
from .linfty import LInftyStructure, coderivation_apply
from .polynomial import (
    PathAlgebra,
    PolyElement,
    antiderivative,
    evaluate_at,
    integrate,
)
from .reports import Report
from .trees import Shape, enumerate_trees, leaf_count, max_vertex_arity

logger = logging.getLogger(__name__)

DEFAULT_CAP_SLACK = 2


class HChiElement:
    """A pair (l, m) in L x M[t, dt]; membership in H_chi is checked separately."""

    __slots__ = ("l", "m")

    def __init__(self, l: GradedVector, m: PolyElement) -> None:
        self.l = l
        self.m = m

    def __add__(self, other: "HChiElement") -> "HChiElement":
        return HChiElement(self.l + other.l, self.m + other.m)

    def __neg__(self) -> "HChiElement":
        return HChiElement(-self.l, -self.m)

    def __sub__(self, other: "HChiElement") -> "HChiElement":
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> "HChiElement":
        q = as_scalar(scalar)
        return HChiElement(self.l * q, self.m * q)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HChiElement):
            return NotImplemented
        return self.l == other.l and self.m == other.m

    def __bool__(self) -> bool:
        return bool(self.l) or bool(self.m)

    def components(self) -> Dict[int, "HChiElement"]:
        """Split by degree in H_chi (dt counts one)."""
        base = self.m.base
        parts: Dict[int, Tuple[dict, dict, dict]] = {}

        def slot(deg: int) -> Tuple[dict, dict, dict]:
            return parts.setdefault(deg, ({}, {}, {}))

        for deg, vec in self.l.homogeneous_components().items():
            slot(deg)[0].update(vec.coords)
        for power, vec in self.m.even.items():
            for deg, part in vec.homogeneous_components().items():
                slot(deg)[1][power] = part
        for power, vec in self.m.odd.items():
            for deg, part in vec.homogeneous_components().items():
                slot(deg + 1)[2][power] = part
        return {
            deg: HChiElement(
                GradedVector(self.l.space, l),
                PolyElement(base, self.m.cap, even, odd),
            )
            for deg, (l, even, odd) in parts.items()
        }

    def __repr__(self) -> str:
        return f"({self.l!r}, {self.m!r})"


class HChi:
    """The path object of chi: L -> M with t-degree cap ``cap``."""

    def __init__(self, chi: DGLAMorphism, cap: int) -> None:
        if cap < 1:
            raise ArgumentError("H_chi needs a t-degree cap of at least 1")
        self.chi = chi
        self.cap = cap
        self.L: DGLA = chi.source
        self.M: DGLA = chi.target
        self.path = PathAlgebra(self.M, cap)
        self.cone: GradedSpace = cone_space(chi)
        self._iota: Dict[str, HChiElement] = {}

    def zero(self) -> HChiElement:
        return HChiElement(self.L.zero(), self.path.zero())

    def element(
        self, l: Optional[GradedVector] = None, m: Optional[PolyElement] = None
    ) -> HChiElement:
        return HChiElement(
            l if l is not None else self.L.zero(),
            m if m is not None else self.path.zero(),
        )

    def contains(self, h: HChiElement) -> bool:
        return not evaluate_at(h.m, 0) and evaluate_at(h.m, 1) == self.chi(h.l)

    def lift(self, h: HChiElement) -> HChiElement:
        """The same element read in this path object (a cap at least as large)."""
        if h.m.t_degree() > self.cap:
            raise CapacityError(
                f"t-degree {h.m.t_degree()} exceeds cap {self.cap}", needed=h.m.t_degree()
            )
        return HChiElement(h.l, h.m.with_cap(self.cap))

    # -- contraction -------------------------------------------------------

    def iota(self, c: GradedVector) -> HChiElement:
        l, m = split_cone_vector(self.chi, c)
        poly = PolyElement(self.M, self.cap, even={1: self.chi(l)}, odd={0: m})
        return HChiElement(l, poly)

    def iota_basis(self, name: str) -> HChiElement:
        value = self._iota.get(name)
        if value is None:
            value = self.iota(GradedVector.basis(self.cone, name))
            self._iota[name] = value
        return value

    def pi(self, h: HChiElement) -> GradedVector:
        if not self.contains(h):
            raise ArgumentError(f"element is not in H_chi: {h!r}")
        return self._pi_unchecked(h)

    def _pi_unchecked(self, h: HChiElement) -> GradedVector:
        return cone_vector(self.cone, h.l, integrate(h.m, 0, 1))

    def homotopy_k(self, h: HChiElement) -> HChiElement:
        total = integrate(h.m, 0, 1)
        m = antiderivative(h.m) - self.path.monomial(1, total)
        return HChiElement(self.L.zero(), m)

    # -- structure on H_chi[1] ---------------------------------------------

    def q1(self, h: HChiElement) -> HChiElement:
        return HChiElement(-self.L.d(h.l), -self.path.d(h.m))

    def q2(self, h1: HChiElement, h2: HChiElement) -> HChiElement:
        acc = self.zero()
        for deg, part in h1.components().items():
            value = HChiElement(
                self.L.bracket(part.l, h2.l), self.path.bracket(part.m, h2.m)
            )
            acc = acc + (-value if deg % 2 else value)
        return acc

    def spanning_set(self) -> List[Tuple[str, HChiElement]]:
        """(l, t chi l), (0, (t^i - t) y) and (0, t^i dt y) within the cap."""
        out: List[Tuple[str, HChiElement]] = []
        for x in self.L.space.names:
            l = self.L.basis_vector(x)
            out.append((f"lift:{x}", self.element(l, self.path.monomial(1, self.chi(l)))))
        for y in self.M.space.names:
            m = self.M.basis_vector(y)
            for i in range(2, self.cap + 1):
                poly = self.path.monomial(i, m) - self.path.monomial(1, m)
                out.append((f"t^{i}-t:{y}", self.element(m=poly)))
            for i in range(self.cap):
                out.append((f"t^{i}dt:{y}", self.element(m=self.path.monomial(i, m, dt=True))))
        return out

    def __repr__(self) -> str:
        return f"<HChi {self.chi!r} cap={self.cap}>"


def check_contraction(chi: DGLAMorphism, cap: int) -> Report:
    """Contraction identities and the side conditions used by the tree sum."""
    hchi = HChi(chi, cap)
    report = Report("contraction")

    for name in hchi.cone.names:
        report.checked += 1
        c = GradedVector.basis(hchi.cone, name)
        h = hchi.iota(c)
        if not hchi.contains(h):
            report.add("iota_range", (name,))
        elif hchi.pi(h) != c:
            report.add("pi_iota", (name,), hchi.pi(h) - c)

    spanning = hchi.spanning_set()
    images: List[Tuple[str, HChiElement]] = []
    for label, h in spanning:
        report.checked += 3
        kh = hchi.homotopy_k(h)
        residual = (
            hchi.iota(hchi.pi(h))
            - h
            - hchi.homotopy_k(hchi.q1(h))
            - hchi.q1(kh)
        )
        if residual:
            report.add("homotopy", (label,), repr(residual))
        if hchi.pi(kh):
            report.add("pi_k", (label,), hchi.pi(kh))
        if hchi.homotopy_k(kh):
            report.add("k_k", (label,), repr(hchi.homotopy_k(kh)))
        if kh:
            images.append((label, kh))

    # brackets of two K-images reach t-degree 2 cap
    wide = HChi(chi, 2 * cap)
    lifted = [(label, wide.lift(kh)) for label, kh in images]
    for i, (a, ka) in enumerate(lifted):
        for b, kb in lifted[i:]:
            report.checked += 1
            value = wide.q2(ka, kb)
            if wide._pi_unchecked(value) or wide.homotopy_k(value):
                report.add("side_condition", (a, b), repr(value))

    logger.info(
        "check_contraction cap=%d: %d checks, %d violations",
        cap,
        report.checked,
        len(report),
    )
    return report


# ---------------------------------------------------------------------------
# Recursive transfer
# ---------------------------------------------------------------------------


class TransferResult:
    """Transferred brackets together with the components f_n of iota_infinity."""

    def __init__(self, chi: DGLAMorphism, max_arity: int, cap: Optional[int] = None) -> None:
        if max_arity < 2:
            raise ArgumentError("transfer needs max_arity >= 2")
        self.max_arity = max_arity
        self.hchi = HChi(chi, cap if cap is not None else max_arity + DEFAULT_CAP_SLACK)
        self.space = self.hchi.cone
        self._components: Dict[Tuple[str, ...], HChiElement] = {}
        self._quadratic: Dict[Tuple[str, ...], HChiElement] = {}
        brackets = {1: self._unary}
        for k in range(2, max_arity + 1):
            brackets[k] = self._bracket
        self.structure = LInftyStructure(
            self.space, brackets, max_arity=max_arity, name="transfer"
        )

    def _check_arity(self, n: int) -> None:
        if n > self.max_arity:
            raise CapacityError(
                f"component of arity {n} beyond max arity {self.max_arity}", needed=n
            )

    def component(self, names: Sequence[str]) -> HChiElement:
        """f_n on a word of cone basis elements (f_1 = iota)."""
        word = canonicalize(self.space, names)
        if word.is_zero():
            return self.hchi.zero()
        self._check_arity(len(word))
        value = self._components.get(word.factors)
        if value is None:
            if len(word) == 1:
                value = self.hchi.iota_basis(word.factors[0])
            else:
                value = self.hchi.homotopy_k(self.quadratic(word.factors))
            self._components[word.factors] = value
        return value if word.sign == 1 else -value

    def quadratic(self, names: Sequence[str]) -> HChiElement:
        """X_n = 1/2 sum_k sum_unshuffles e q2(f_k(w_A), f_{n-k}(w_B))."""
        word = canonicalize(self.space, names)
        if word.is_zero() or len(word) < 2:
            return self.hchi.zero()
        value = self._quadratic.get(word.factors)
        if value is None:
            value = self._quadratic_canonical(word.factors)
            self._quadratic[word.factors] = value
        return value if word.sign == 1 else -value

    def _quadratic_canonical(self, word: Tuple[str, ...]) -> HChiElement:
        n = len(word)
        degrees = [self.space.degree(x) for x in word]
        acc = self.hchi.zero()
        for k in range(1, n):
            for perm in unshuffles(k, n - k):
                left = self.component([word[i] for i in perm[:k]])
                if not left:
                    continue
                right = self.component([word[i] for i in perm[k:]])
                if not right:
                    continue
                value = self.hchi.q2(left, right)
                if value:
                    acc = acc + value * koszul_sign(perm, degrees)
        return acc * Fraction(1, 2)

    def _unary(self, names: Tuple[str, ...]) -> GradedVector:
        h = self.hchi.iota_basis(names[0])
        return self.hchi._pi_unchecked(self.hchi.q1(h))

    def _bracket(self, names: Tuple[str, ...]) -> GradedVector:
        return self.hchi._pi_unchecked(self.quadratic(names))


def transfer_recursive(
    chi: DGLAMorphism, max_arity: int, cap: Optional[int] = None
) -> TransferResult:
    """Recursive transfer; brackets are computed lazily and memoized."""
    result = TransferResult(chi, max_arity, cap)
    logger.debug(
        "transfer_recursive: dims %s, max arity %d, cap %d",
        result.space.dims(),
        max_arity,
        result.hchi.cap,
    )
    return result


def check_iota_morphism(result: TransferResult, up_to: int) -> Report:
    """q1 f_n(w) + X_n(w) = sum over Q(w) = sum c w' of c f(w'), for |w| <= up_to."""
    if up_to < 1:
        raise ArgumentError("up_to must be at least 1")
    hchi = result.hchi
    report = Report("iota_morphism")
    for n in range(1, up_to + 1):
        for word in basis_words(result.space, n):
            report.checked += 1
            lhs = hchi.q1(result.component(word)) + result.quadratic(word)
            rhs = hchi.zero()
            for term, coeff in coderivation_apply(result.structure, word).items():
                rhs = rhs + result.component(term) * coeff
            if lhs != rhs:
                report.add(f"arity_{n}", word, repr(lhs - rhs))
    logger.info("check_iota_morphism up to %d: %d violations", up_to, len(report))
    return report


# ---------------------------------------------------------------------------
# Tree summation
# ---------------------------------------------------------------------------


class TreeOracle:
    """Sum over rooted trees: iota on leaves, K q2 inside, pi q2 at the root.

    Inputs are symmetrized over S_n with Koszul signs and each tree is divided
    by |Aut|. Trees with a vertex of arity three or more vanish since q_r = 0
    on H_chi for r >= 3.
    """

    def __init__(self, chi: DGLAMorphism, cap: int) -> None:
        self.hchi = HChi(chi, cap)
        self.space = self.hchi.cone
        self._memo: Dict[Tuple[Shape, Tuple[str, ...]], HChiElement] = {}
        self._trees: Dict[int, List] = {}

    def _vertex(self, shape: Shape, inputs: Tuple[str, ...]) -> HChiElement:
        # value of a non-root subtree with its leaves filled in planar order
        key = (shape, inputs)
        value = self._memo.get(key)
        if value is not None:
            return value
        if not shape:
            value = self.hchi.iota_basis(inputs[0])
        else:
            value = self.hchi.homotopy_k(self._product(shape, inputs))
        self._memo[key] = value
        return value

    def _product(self, shape: Shape, inputs: Tuple[str, ...]) -> HChiElement:
        left, right = shape
        split = leaf_count(left)
        a = self._vertex(left, inputs[:split])
        if not a:
            return self.hchi.zero()
        b = self._vertex(right, inputs[split:])
        if not b:
            return self.hchi.zero()
        return self.hchi.q2(a, b)

    def binary_trees(self, n: int) -> List:
        trees = self._trees.get(n)
        if trees is None:
            trees = [t for t in enumerate_trees(n) if max_vertex_arity(t.shape) <= 2]
            self._trees[n] = trees
        return trees

    def bracket(self, names: Sequence[str]) -> GradedVector:
        word = canonicalize(self.space, names)
        if word.is_zero():
            return GradedVector.zero(self.space)
        factors = word.factors
        n = len(factors)
        degrees = [self.space.degree(x) for x in factors]
        weight = 1
        for mult in Counter(factors).values():
            weight *= factorial(mult)
        positions: Dict[str, List[int]] = {}
        for i, name in enumerate(factors):
            positions.setdefault(name, []).append(i)

        acc = self.hchi.zero()
        for arrangement in multiset_permutations(list(factors)):
            taken: Dict[str, int] = {}
            perm = []
            for name in arrangement:
                idx = taken.get(name, 0)
                perm.append(positions[name][idx])
                taken[name] = idx + 1
            sign = koszul_sign(perm, degrees)
            inputs = tuple(arrangement)
            for tree in self.binary_trees(n):
                value = self._product(tree.shape, inputs)
                if value:
                    acc = acc + value * Fraction(sign * weight, tree.aut)
        out = self.hchi._pi_unchecked(acc)
        return out if word.sign == 1 else -out


def tree_sum_bracket(
    chi: DGLAMorphism, n: int, cap: Optional[int] = None
) -> MultilinearMap:
    """The n-ary transferred bracket as a sum over trees."""
    if n < 2:
        raise ArgumentError("tree sums start at arity 2")
    oracle = TreeOracle(chi, cap if cap is not None else n + DEFAULT_CAP_SLACK)
    return MultilinearMap(oracle.space, oracle.space, n, 1, oracle.bracket)


def tree_sum_structure(
    chi: DGLAMorphism, max_arity: int, cap: Optional[int] = None
) -> LInftyStructure:
    """All tree-sum brackets up to ``max_arity`` with unary part pi q1 iota."""
    if max_arity < 2:
        raise ArgumentError("tree sums start at arity 2")
    oracle = TreeOracle(chi, cap if cap is not None else max_arity + DEFAULT_CAP_SLACK)
    hchi = oracle.hchi

    def unary(names: Tuple[str, ...]) -> GradedVector:
        return hchi._pi_unchecked(hchi.q1(hchi.iota_basis(names[0])))

    brackets = {1: unary}
    for k in range(2, max_arity + 1):
        brackets[k] = oracle.bracket
    return LInftyStructure(oracle.space, brackets, max_arity=max_arity, name="trees")

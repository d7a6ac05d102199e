# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/deformation.py
"""Maurer-Cartan theory over local Artinian rings.

Everything is computed in finite tensor extensions D (x) m_A, named
``<basis>|<monomial>``. Lie-side helpers (gauge action, BCH, curvature) take
any object with ``zero``, ``d`` and ``bracket``, so they apply unchanged to a
tensor DGLA and to its polynomial path algebra.

Pairs (x, a) with x in L^1 (x) m_A and a in M^0 (x) m_A stand for the
Maurer-Cartan elements of the cone; the two are related by

    residue(x, a) = 0  <=>  dx + 1/2 [x, x] = 0 and e^a * chi(x) = 0.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .algebra import DGLA, DGLAMorphism
from .artin import ArtinAlgebra
from .cone import L_PREFIX, M_PREFIX, classical_bernoulli, cone_space, is_l, strip
from .errors import ArgumentError
from .graded import GradedMap, GradedSpace, GradedVector, ScalarLike, as_scalar
from .linfty import LInftyStructure
from .polynomial import (
    PathAlgebra,
    PolyElement,
    antiderivative,
    evaluate_at,
    integrate,
    map_coefficients,
    split_dt,
)

logger = logging.getLogger(__name__)

SEPARATOR = "|"

Element = Union[GradedVector, PolyElement]


def tensor_name(x: str, mono: str) -> str:
    return f"{x}{SEPARATOR}{mono}"


def split_tensor_name(name: str) -> Tuple[str, str]:
    x, _, mono = name.rpartition(SEPARATOR)
    return x, mono


def tensor_space(space: GradedSpace, artin: ArtinAlgebra) -> GradedSpace:
    """V (x) m_A with the degrees of V."""
    return GradedSpace(
        (tensor_name(x, mono), deg) for x, deg in space.basis for mono in artin.monomials
    )


def tensor_vector(
    space: GradedSpace, v: GradedVector, a: GradedVector
) -> GradedVector:
    return GradedVector._trusted(
        space,
        {
            tensor_name(x, mono): cx * ca
            for x, cx in v.coords.items()
            for mono, ca in a.coords.items()
        },
    )


# ---------------------------------------------------------------------------
# Tensor DGLAs
# ---------------------------------------------------------------------------


class TensorDGLA(DGLA):
    """The finite DGLA D (x) m_A: [x a, y b] = [x, y] ab and d(x a) = dx a."""

    def __init__(self, base: DGLA, artin: ArtinAlgebra) -> None:
        space = tensor_space(base.space, artin)
        images: Dict[str, GradedVector] = {}
        for x in base.space.names:
            dx = base.d(base.basis_vector(x))
            if not dx:
                continue
            for mono in artin.monomials:
                images[tensor_name(x, mono)] = tensor_vector(
                    space, dx, GradedVector.basis(artin.space, mono)
                )
        table: Dict[Tuple[str, str], GradedVector] = {}
        for (x, y), value in base.table().items():
            for a in artin.monomials:
                for b in artin.monomials:
                    ab = artin.product(a, b)
                    if ab:
                        table[(tensor_name(x, a), tensor_name(y, b))] = tensor_vector(
                            space, value, ab
                        )
        label = f"{base.name or 'D'}(x){artin.name or 'm_A'}"
        super().__init__(space, GradedMap(space, space, 1, images), table, name=label)
        self.base = base
        self.artin = artin

    def tensor(self, v: GradedVector, a: Union[str, GradedVector]) -> GradedVector:
        """v (x) a for v in the base DGLA and a in m_A."""
        if isinstance(a, str):
            a = GradedVector.basis(self.artin.space, a)
        return tensor_vector(self.space, v, a)

    def element(self, terms: Iterable[Sequence[Any]]) -> GradedVector:
        """Vector from (basis, monomial, scalar) triples."""
        coords: Dict[str, Fraction] = {}
        for x, mono, value in terms:
            name = tensor_name(x, mono)
            if name not in self.space:
                raise ArgumentError(f"unknown tensor basis element {x!r} (x) {mono!r}")
            coords[name] = coords.get(name, Fraction(0)) + as_scalar(value)
        return GradedVector(self.space, coords)

    def terms(self, v: GradedVector) -> List[Tuple[str, str, Fraction]]:
        return [(*split_tensor_name(name), c) for name, c in v.items()]

    def truncate(self, v: GradedVector, order: int) -> GradedVector:
        """Drop the terms whose monomial lies in m_A^order."""
        return GradedVector._trusted(
            self.space,
            {
                n: c
                for n, c in v.coords.items()
                if self.artin.order(split_tensor_name(n)[1]) < order
            },
        )


def tensor_dgla(dgla: DGLA, artin: ArtinAlgebra) -> TensorDGLA:
    return TensorDGLA(dgla, artin)


def tensor_map(linear: GradedMap, source: TensorDGLA, target: TensorDGLA) -> GradedMap:
    """f (x) id between tensor extensions."""
    images: Dict[str, GradedVector] = {}
    for x in linear.source.names:
        fx = linear.image(x)
        if not fx:
            continue
        for mono in source.artin.monomials:
            images[tensor_name(x, mono)] = target.tensor(fx, mono)
    return GradedMap(source.space, target.space, linear.degree, images)


def tensor_morphism(
    chi: DGLAMorphism, artin: ArtinAlgebra
) -> Tuple[TensorDGLA, TensorDGLA, DGLAMorphism]:
    L_A = tensor_dgla(chi.source, artin)
    M_A = tensor_dgla(chi.target, artin)
    return L_A, M_A, DGLAMorphism(L_A, M_A, tensor_map(chi.linear, L_A, M_A))


def tensor_with_polynomials(dgla: DGLA, artin: ArtinAlgebra, cap: int) -> PathAlgebra:
    """(D (x) m_A)[s, ds] truncated at s-degree ``cap``."""
    return PathAlgebra(tensor_dgla(dgla, artin), cap)


# ---------------------------------------------------------------------------
# Scalar extension of L-infinity structures and the MC residue
# ---------------------------------------------------------------------------


class TensorStructure(LInftyStructure):
    """An L-infinity structure extended m_A-multilinearly."""

    def __init__(self, base: LInftyStructure, artin: ArtinAlgebra) -> None:
        self.base = base
        self.artin = artin
        space = tensor_space(base.space, artin)

        def bracket(names: Tuple[str, ...]) -> GradedVector:
            if len(names) >= artin.nil_index:
                return GradedVector.zero(space)
            xs, monos = zip(*(split_tensor_name(n) for n in names))
            coeff = artin.product_of(monos)
            if not coeff:
                return GradedVector.zero(space)
            return tensor_vector(space, base.bracket(xs), coeff)

        vanishing = base.vanishing_above or base.max_arity >= artin.depth
        super().__init__(
            space,
            {k: bracket for k in range(1, base.max_arity + 1)},
            max_arity=base.max_arity,
            vanishing_above=vanishing,
            name=f"{base.name or '?'}(x){artin.name or 'm_A'}",
        )


def tensor_linfty(structure: LInftyStructure, artin: ArtinAlgebra) -> TensorStructure:
    return TensorStructure(structure, artin)


def mc_residue(
    structure: LInftyStructure, gamma: GradedVector, up_to: Optional[int] = None
) -> GradedVector:
    """sum_{n >= 1} <gamma^n>_n / n! for gamma of degree 0.

    The sum stops at the nilpotency depth of a tensor structure (or at
    ``up_to``); a structure truncated below that raises CapacityError.
    """
    if gamma.space != structure.space:
        raise ArgumentError("gamma is not in the structure's space")
    if gamma.degree() not in (None, 0):
        raise ArgumentError("Maurer-Cartan candidates have degree 0")
    if up_to is None:
        if isinstance(structure, TensorStructure):
            up_to = structure.artin.depth
        else:
            up_to = structure.max_arity
    items = gamma.items()
    acc = GradedVector.zero(structure.space)
    for n in range(1, up_to + 1):
        for combo in itertools.combinations_with_replacement(range(len(items)), n):
            coeff = Fraction(1)
            for i in combo:
                coeff *= items[i][1]
            for mult in _multiplicities(combo):
                coeff /= factorial(mult)
            value = structure.bracket(tuple(items[i][0] for i in combo))
            if value:
                acc = acc + value * coeff
    return acc


def _multiplicities(combo: Tuple[int, ...]) -> Iterator[int]:
    for _, group in itertools.groupby(combo):
        yield len(list(group))


# ---------------------------------------------------------------------------
# Lie-side operations, generic over DGLA-like algebras
# ---------------------------------------------------------------------------


def nilpotency_depth(algebra: Any) -> int:
    """Longest nonzero bracket word in a tensor DGLA or its path algebra."""
    base = algebra.base if isinstance(algebra, PathAlgebra) else algebra
    if not isinstance(base, TensorDGLA):
        raise ArgumentError("nilpotency depth needs an Artinian tensor extension")
    return base.artin.depth


def curvature(algebra: Any, x: Element) -> Element:
    """dx + 1/2 [x, x]."""
    return algebra.d(x) + algebra.bracket(x, x) * Fraction(1, 2)


def gauge_action(
    algebra: Any, a: Element, y: Element, depth: Optional[int] = None
) -> Element:
    """e^a * y = y + sum_{n >= 0} ad_a^n / (n+1)! ([a, y] - da)."""
    depth = depth if depth is not None else nilpotency_depth(algebra)
    acc = y
    term = algebra.bracket(a, y) - algebra.d(a)
    for n in range(depth):
        if not term:
            break
        acc = acc + term * Fraction(1, factorial(n + 1))
        term = algebra.bracket(a, term)
    return acc


def inverse_gauge(a: Element) -> Element:
    """The exponent of (e^a)^{-1}."""
    return -a


def _dynkin_blocks(n: int, letters: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    if n == 0:
        yield ()
        return
    for r in range(letters + 1):
        for s in range(letters - r + 1):
            if r + s == 0:
                continue
            for rest in _dynkin_blocks(n - 1, letters - r - s):
                yield ((r, s),) + rest


def bch(algebra: Any, x: Element, y: Element, depth: Optional[int] = None) -> Element:
    """x . y = log(e^x e^y) by the Dynkin series, cut after ``depth`` letters."""
    depth = depth if depth is not None else nilpotency_depth(algebra)
    letters = {"x": x, "y": y}
    nested: Dict[str, Element] = {"x": x, "y": y}

    def bracket_word(word: str) -> Element:
        value = nested.get(word)
        if value is None:
            inner = bracket_word(word[1:])
            value = algebra.bracket(letters[word[0]], inner) if inner else inner
            nested[word] = value
        return value

    acc = x * 0
    for n in range(1, depth + 1):
        for blocks in _dynkin_blocks(n, depth):
            word = "".join("x" * r + "y" * s for r, s in blocks)
            value = bracket_word(word)
            if not value:
                continue
            denominator = n * len(word)
            for r, s in blocks:
                denominator *= factorial(r) * factorial(s)
            acc = acc + value * Fraction((-1) ** (n - 1), denominator)
    return acc


def closed_residue(
    L: Any,
    M: Any,
    chi: Any,
    l: Element,
    m: Element,
    depth: int,
) -> Tuple[Element, Element]:
    """MC residue of (l, m) in the cone from the closed-form brackets.

    L part: -(dl + 1/2[l, l]); M part: dm - sum_n (-1)^n (B_n / n!) ad_m^n chi(l),
    that is dm - chi(l) - 1/2[m, chi(l)] - (1/12)[m, [m, chi(l)]] + ...
    """
    l_part = -curvature(L, l)
    chi_l = chi(l)
    weights = classical_bernoulli(max(depth, 1))
    m_part = M.d(m) - chi_l
    term = chi_l
    for n in range(1, depth + 1):
        term = M.bracket(m, term)
        if not term:
            break
        sign = -1 if n % 2 else 1
        m_part = m_part - term * (sign * weights[n] / factorial(n))
    return l_part, m_part


# ---------------------------------------------------------------------------
# Pairs, gauge witnesses and homotopies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MCPair:
    """(x, a) with x in L^1 (x) m_A and a in M^0 (x) m_A."""

    x: GradedVector
    a: GradedVector


@dataclass(frozen=True)
class GaugeWitness:
    """(a, b) with a in L^0 (x) m_A and b in M^-1 (x) m_A."""

    a: GradedVector
    b: GradedVector


@dataclass
class HomotopyPath:
    """(l(s), m(s)) over the path algebras of L (x) m_A and M (x) m_A."""

    l: PolyElement
    m: PolyElement

    def at(self, s: ScalarLike) -> MCPair:
        return MCPair(evaluate_at(self.l, s), evaluate_at(self.m, s))


@dataclass
class Factorization:
    """x(t) = e^{g(t)} * x0 with g(0) = 0."""

    x0: GradedVector
    g: PolyElement


def _expect_degree(v: GradedVector, degree: int, what: str) -> None:
    deg = v.degree()
    if deg is not None and deg != degree:
        raise ArgumentError(f"{what} must have degree {degree}, got {deg}")


def mc_poly_factorization(path: PathAlgebra, x: PolyElement) -> Factorization:
    """Solve g' = sum_n (B_n / n!) ad_g^n (-z), g(0) = 0, for x = y(t) + dt z(t).

    Each pass of the fixed point fixes one more power of m_A.
    """
    depth = nilpotency_depth(path)
    if curvature(path, x):
        raise ArgumentError("path is not a Maurer-Cartan element")
    work_cap = (depth + 1) * (x.t_degree() + 1) + 1
    work = PathAlgebra(path.base, work_cap)
    x = x.with_cap(work_cap)
    x0 = evaluate_at(x, 0)
    _, z = split_dt(x)
    zeta = -z
    weights = classical_bernoulli(depth)

    g = work.zero()
    for _ in range(depth + 1):
        rhs = zeta
        term = zeta
        for n in range(1, depth + 1):
            term = work.bracket(g, term)
            if not term:
                break
            rhs = rhs + term * (weights[n] / factorial(n))
        updated = antiderivative(PolyElement(work.base, work_cap, odd=rhs.even))
        if updated == g:
            break
        g = updated

    if gauge_action(work, g, work.constant(x0), depth) != x:
        raise ArgumentError("factorization did not reproduce the path")
    logger.debug("mc_poly_factorization: t-degree of g is %d", g.t_degree())
    return Factorization(x0, g)


class PairDeformations:
    """MC pairs of chi: L -> M over an Artinian ring, with their gauge symmetries."""

    def __init__(self, chi: DGLAMorphism, artin: ArtinAlgebra) -> None:
        self.chi = chi
        self.artin = artin
        self.L_A, self.M_A, self.chi_A = tensor_morphism(chi, artin)
        self.depth = artin.depth
        self.cone = tensor_space(cone_space(chi), artin)

    # -- construction helpers ---------------------------------------------

    def pair(self, x: GradedVector, a: GradedVector) -> MCPair:
        _expect_degree(x, 1, "x")
        _expect_degree(a, 0, "a")
        return MCPair(x, a)

    def witness(self, a: GradedVector, b: GradedVector) -> GaugeWitness:
        _expect_degree(a, 0, "a")
        _expect_degree(b, -1, "b")
        return GaugeWitness(a, b)

    def gamma(self, p: MCPair) -> GradedVector:
        """The cone element (x, a) in C[1] (x) m_A."""
        coords = {L_PREFIX + n: c for n, c in p.x.coords.items()}
        coords.update({M_PREFIX + n: c for n, c in p.a.coords.items()})
        return GradedVector(self.cone, coords)

    def split_gamma(self, gamma: GradedVector) -> Tuple[GradedVector, GradedVector]:
        l: Dict[str, Fraction] = {}
        m: Dict[str, Fraction] = {}
        for name, c in gamma.coords.items():
            (l if is_l(name) else m)[strip(name)] = c
        return GradedVector(self.L_A.space, l), GradedVector(self.M_A.space, m)

    # -- Maurer-Cartan ----------------------------------------------------

    def closed_residue(self, p: MCPair) -> GradedVector:
        l_part, m_part = closed_residue(self.L_A, self.M_A, self.chi_A, p.x, p.a, self.depth)
        return self.gamma(MCPair(l_part, m_part))

    def mc_pair_check(self, p: MCPair) -> bool:
        if curvature(self.L_A, p.x):
            return False
        return not gauge_action(self.M_A, p.a, self.chi_A(p.x), self.depth)

    # -- gauge ------------------------------------------------------------

    def gauge_pair_act(self, g: GaugeWitness, p: MCPair) -> MCPair:
        """(e^l, e^{db}) * (x, e^a) = (e^l * x, db . a . (-chi(l)))."""
        x = gauge_action(self.L_A, g.a, p.x, self.depth)
        tail = bch(self.M_A, p.a, -self.chi_A(g.a), self.depth)
        return MCPair(x, bch(self.M_A, self.M_A.d(g.b), tail, self.depth))

    def gauge_equiv_check(self, p0: MCPair, p1: MCPair, w: GaugeWitness) -> bool:
        return self.gauge_pair_act(w, p0) == p1

    def orbit_points(self, p: MCPair, witnesses: Sequence[GaugeWitness]) -> List[MCPair]:
        return [self.gauge_pair_act(w, p) for w in witnesses]

    # -- homotopies -------------------------------------------------------

    def paths(self, cap: int) -> Tuple[PathAlgebra, PathAlgebra]:
        return PathAlgebra(self.L_A, cap), PathAlgebra(self.M_A, cap)

    def _chi_path(self, p: PolyElement) -> PolyElement:
        return map_coefficients(p, self.M_A, self.chi_A)

    def homotopy_from_gauge(
        self, p0: MCPair, w: GaugeWitness, cap: Optional[int] = None
    ) -> HomotopyPath:
        """l(s) = e^{s a} * x0 and m(s) = d(s b) . a0 . (-chi(s a))."""
        if not self.mc_pair_check(p0):
            raise ArgumentError("starting pair is not Maurer-Cartan")
        P_L, P_M = self.paths(cap if cap is not None else self.depth + 1)
        s_a = P_L.monomial(1, w.a)
        l = gauge_action(P_L, s_a, P_L.constant(p0.x), self.depth)
        d_sb = P_M.d(P_M.monomial(1, w.b))
        tail = bch(P_M, P_M.constant(p0.a), -self._chi_path(s_a), self.depth)
        m = bch(P_M, d_sb, tail, self.depth)
        return HomotopyPath(l, m)

    def path_residue(self, path: HomotopyPath) -> Tuple[PolyElement, PolyElement]:
        cap = max(path.l.cap, path.m.cap)
        P_L, P_M = self.paths(cap)
        return closed_residue(P_L, P_M, self._chi_path, path.l, path.m, self.depth)

    def path_is_mc(self, path: HomotopyPath) -> bool:
        l_part, m_part = self.path_residue(path)
        return not l_part and not m_part

    def gauge_from_homotopy(self, path: HomotopyPath) -> GaugeWitness:
        """Witness (lambda(1), int_0^1 mu) with l = e^lambda * l(0) and
        mu = m . chi(lambda) . (-m(0))."""
        if not self.path_is_mc(path):
            raise ArgumentError("path is not a Maurer-Cartan element")
        P_L, _ = self.paths(path.l.cap)
        lam = mc_poly_factorization(P_L, path.l).g
        chi_lam = self._chi_path(lam)
        cap = self.depth * (max(path.m.t_degree(), chi_lam.t_degree()) + 1) + 1
        P_M = PathAlgebra(self.M_A, cap)
        m0 = P_M.constant(evaluate_at(path.m, 0))
        head = bch(P_M, path.m.with_cap(cap), chi_lam.with_cap(cap), self.depth)
        mu = bch(P_M, head, -m0, self.depth)
        return GaugeWitness(evaluate_at(lam, 1), integrate(mu, 0, 1))


# ---------------------------------------------------------------------------
# Functional entry points
# ---------------------------------------------------------------------------


def cone_mc_residue_closed(
    chi: DGLAMorphism, artin: ArtinAlgebra, l: GradedVector, m: GradedVector
) -> GradedVector:
    return PairDeformations(chi, artin).closed_residue(MCPair(l, m))


def mc_pair_check(chi: DGLAMorphism, artin: ArtinAlgebra, p: MCPair) -> bool:
    return PairDeformations(chi, artin).mc_pair_check(p)


def gauge_pair_act(
    chi: DGLAMorphism, artin: ArtinAlgebra, g: GaugeWitness, p: MCPair
) -> MCPair:
    return PairDeformations(chi, artin).gauge_pair_act(g, p)


def gauge_equiv_check(
    chi: DGLAMorphism, artin: ArtinAlgebra, p0: MCPair, p1: MCPair, w: GaugeWitness
) -> bool:
    return PairDeformations(chi, artin).gauge_equiv_check(p0, p1, w)


def homotopy_from_gauge(
    chi: DGLAMorphism, artin: ArtinAlgebra, p0: MCPair, w: GaugeWitness
) -> HomotopyPath:
    return PairDeformations(chi, artin).homotopy_from_gauge(p0, w)


def gauge_from_homotopy(
    chi: DGLAMorphism, artin: ArtinAlgebra, path: HomotopyPath
) -> GaugeWitness:
    return PairDeformations(chi, artin).gauge_from_homotopy(path)

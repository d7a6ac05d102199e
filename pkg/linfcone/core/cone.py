# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/cone.py
"""The suspended mapping cone of a DGLA morphism and its closed-form brackets.

For chi: L -> M the suspended cone C[1] = L[1] + M has basis ``L.<x>`` in
degree deg_L(x) - 1 and ``M.<y>`` in degree deg_M(y). Mixed words are moved
into M-first order with the Koszul sign of these degrees before the bracket
formulas are applied.

With B_k the Bernoulli numbers, the nonzero brackets are

    <(l, m)>_1          = (-dl, -chi(l) + dm)
    <l1 . l2>_2         = (-1)^{deg l1} [l1, l2]
    <m1 ... mk . l>_k+1 = -(-1)^{k + sum deg mi} (B_k / k!)
                          sum_s e(s) [m_s1, [..., [m_sk, chi(l)]...]]

where e(s) is the Koszul sign on M-degrees. At k = 1 the last line is the
familiar ((-1)^{deg m + 1} / 2) [m, chi(l)], and it vanishes for odd k >= 3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .algebra import DGLA, DGLAMorphism, SubDGLA, compose
from .errors import ArgumentError, ConsistencyError
from .graded import (
    GradedMap,
    GradedSpace,
    GradedVector,
    MultilinearMap,
    koszul_sign,
    permutation_sign,
)
from .linalg import to_fraction
from .linfty import LInftyLinearMorphism, LInftyStructure
from .reports import Report

logger = logging.getLogger(__name__)

L_PREFIX = "L."
M_PREFIX = "M."

_t = sympy.Symbol("t")


# ---------------------------------------------------------------------------
# Bernoulli machinery
# ---------------------------------------------------------------------------


@dataclass
class BernoulliTable:
    """phi_n, I_n and B_n from the integral recursion (index 0 unused for phi/I)."""

    phi: List[Optional[sympy.Poly]]
    I: List[Optional[Fraction]]
    B: List[Fraction]

    @property
    def size(self) -> int:
        return len(self.B) - 1

    def phi_coefficients(self, n: int) -> Dict[int, Fraction]:
        poly = self.phi[n]
        out: Dict[int, Fraction] = {}
        for (power,), coeff in poly.terms():
            out[power] = to_fraction(coeff)
        return out

    def cross_check(self) -> Report:
        report = Report("bernoulli")
        classical = classical_bernoulli(self.size)
        for n in range(1, self.size + 1):
            report.checked += 2
            if self.I[n] != -self.B[n] / factorial(n):
                report.add("integral_identity", (str(n),), str(self.I[n]))
            if self.B[n] != classical[n]:
                report.add("recurrence", (str(n),), str(self.B[n]))
        return report


def classical_bernoulli(n_max: int) -> List[Fraction]:
    """B_0..B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0 (B_1 = -1/2 convention)."""
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        total = sum(comb(n + 1, j) * values[j] for j in range(n))
        values.append(-total / (n + 1))
    return values


def bernoulli(n_max: int) -> BernoulliTable:
    """phi_1 = t, I_n = int_0^1 phi_n, phi_{n+1} = int_0^t phi_n - t I_n, B_n = -n! I_n."""
    if n_max < 1:
        raise ArgumentError("bernoulli table needs N >= 1")
    phi: List[Optional[sympy.Poly]] = [None, sympy.Poly(_t, _t, domain="QQ")]
    integrals: List[Optional[Fraction]] = [None]
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        primitive = phi[n].integrate()
        integral = to_fraction(primitive.eval(1) - primitive.eval(0))
        integrals.append(integral)
        values.append(-integral * factorial(n))
        correction = sympy.Poly(_t, _t, domain="QQ") * sympy.Rational(
            integral.numerator, integral.denominator
        )
        phi.append(primitive - correction)
    table = BernoulliTable(phi, integrals, values)
    report = table.cross_check()
    if not report.ok:
        raise ConsistencyError(f"Bernoulli recursion disagrees: {report.kinds()}")
    return table


# ---------------------------------------------------------------------------
# Cone spaces
# ---------------------------------------------------------------------------


def l_name(x: str) -> str:
    return L_PREFIX + x


def m_name(y: str) -> str:
    return M_PREFIX + y


def is_l(name: str) -> bool:
    return name.startswith(L_PREFIX)


def strip(name: str) -> str:
    return name[2:]


def cone_space(chi: DGLAMorphism) -> GradedSpace:
    """The suspended cone C[1] = L[1] + M."""
    return GradedSpace.direct_sum(
        [(L_PREFIX, chi.source.space.shift(1)), (M_PREFIX, chi.target.space)]
    )


def cone_complex(chi: DGLAMorphism) -> Tuple[GradedSpace, GradedMap]:
    """C^i = L^i + M^{i-1} with delta(l, m) = (dl, chi(l) - dm)."""
    L, M = chi.source, chi.target
    basis = [(l_name(x), d) for x, d in L.space.basis]
    basis += [(m_name(y), d + 1) for y, d in M.space.basis]
    space = GradedSpace(basis)
    images: Dict[str, GradedVector] = {}
    for x in L.space.names:
        l = L.basis_vector(x)
        images[l_name(x)] = cone_vector(space, L.d(l), chi(l))
    for y in M.space.names:
        images[m_name(y)] = cone_vector(space, None, -M.d(M.basis_vector(y)))
    return space, GradedMap(space, space, 1, images)


def cone_vector(
    space: GradedSpace,
    l: Optional[GradedVector] = None,
    m: Optional[GradedVector] = None,
) -> GradedVector:
    coords: Dict[str, Fraction] = {}
    if l is not None:
        coords.update({l_name(x): c for x, c in l.coords.items()})
    if m is not None:
        coords.update({m_name(y): c for y, c in m.coords.items()})
    return GradedVector(space, coords)


def split_cone_vector(
    chi: DGLAMorphism, vector: GradedVector
) -> Tuple[GradedVector, GradedVector]:
    """(l, m) components of a cone vector."""
    l: Dict[str, Fraction] = {}
    m: Dict[str, Fraction] = {}
    for name, c in vector.coords.items():
        (l if is_l(name) else m)[strip(name)] = c
    return GradedVector(chi.source.space, l), GradedVector(chi.target.space, m)


def cone_element(
    chi: DGLAMorphism,
    l: Optional[GradedVector] = None,
    m: Optional[GradedVector] = None,
) -> GradedVector:
    """The C[1] vector with components (l, m)."""
    return cone_vector(cone_space(chi), l, m)


# ---------------------------------------------------------------------------
# Closed-form brackets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConeCoefficients:
    """Named constants of the closed-form brackets.

    The defaults give the transferred structure; altering one of them yields a
    deliberately wrong structure (used to show the L-infinity check notices).
    """

    differential_sign: int = -1
    l_bracket_sign: int = 1
    half: Fraction = Fraction(1, 2)
    higher_sign: int = 1
    bernoulli: Dict[int, Fraction] = field(default_factory=dict)

    def with_bernoulli(self, k: int, value: Fraction) -> "ConeCoefficients":
        overrides = dict(self.bernoulli)
        overrides[k] = Fraction(value)
        return replace(self, bernoulli=overrides)


def nested_bracket_sum(
    M: DGLA, ms: Sequence[GradedVector], degrees: Sequence[int], target: GradedVector
) -> GradedVector:
    """sum over s in S_k of e(s) [m_s1, [m_s2, ..., [m_sk, target]...]].

    e(s) is the Koszul sign for the M-degrees; evaluated over subsets.
    """
    memo: Dict[Tuple[int, ...], GradedVector] = {(): target}

    def go(rest: Tuple[int, ...]) -> GradedVector:
        if rest in memo:
            return memo[rest]
        acc = M.zero()
        passed = 0
        for pos, i in enumerate(rest):
            sign = -1 if (degrees[i] * passed) % 2 else 1
            inner = go(rest[:pos] + rest[pos + 1 :])
            if inner:
                value = M.bracket(ms[i], inner)
                if value:
                    acc = acc + value * sign
            passed += degrees[i]
        memo[rest] = acc
        return acc

    return go(tuple(range(len(ms))))


def cone_linfty(
    chi: DGLAMorphism,
    max_arity: int,
    coefficients: Optional[ConeCoefficients] = None,
) -> LInftyStructure:
    """Closed-form L-infinity structure on C[1], truncated at ``max_arity``."""
    if max_arity < 2:
        raise ArgumentError("cone_linfty needs max_arity >= 2")
    coeffs = coefficients or ConeCoefficients()
    L, M = chi.source, chi.target
    space = cone_space(chi)
    table = bernoulli(max(max_arity, 2))
    weights = dict(enumerate(table.B))
    weights.update(coeffs.bernoulli)

    def to_cone(l: Optional[GradedVector], m: Optional[GradedVector]) -> GradedVector:
        return cone_vector(space, l, m)

    def unary(names: Tuple[str, ...]) -> GradedVector:
        (name,) = names
        s = coeffs.differential_sign
        if is_l(name):
            l = L.basis_vector(strip(name))
            return to_cone(L.d(l) * s, chi(l) * s)
        return to_cone(None, M.d(M.basis_vector(strip(name))) * (-s))

    def higher(names: Tuple[str, ...]) -> GradedVector:
        ls = [i for i, n in enumerate(names) if is_l(n)]
        ms = [i for i, n in enumerate(names) if not is_l(n)]
        if len(ls) == 2 and not ms:
            a, b = (strip(names[i]) for i in ls)
            value = L.bracket_basis(a, b) * coeffs.l_bracket_sign
            if L.space.degree(a) % 2:
                value = -value
            return to_cone(value, None)
        if len(ls) != 1 or not ms:
            return GradedVector.zero(space)

        degrees = [space.degree(n) for n in names]
        reorder = koszul_sign(ms + ls, degrees)
        m_vectors = [M.basis_vector(strip(names[i])) for i in ms]
        m_degrees = [degrees[i] for i in ms]
        chi_l = chi(L.basis_vector(strip(names[ls[0]])))
        k = len(ms)
        total = nested_bracket_sum(M, m_vectors, m_degrees, chi_l)
        if not total:
            return GradedVector.zero(space)
        parity = (k + sum(m_degrees)) % 2
        if k == 1:
            coeff = coeffs.half * (1 if parity == 0 else -1)
        else:
            coeff = -coeffs.higher_sign * weights[k] / factorial(k)
            if parity:
                coeff = -coeff
        return to_cone(None, total * (coeff * reorder))

    brackets = {1: unary}
    for k in range(2, max_arity + 1):
        brackets[k] = higher
    logger.debug("cone_linfty: dims %s, max arity %d", space.dims(), max_arity)
    return LInftyStructure(
        space, brackets, max_arity=max_arity, vanishing_above=False, name="closed"
    )


# ---------------------------------------------------------------------------
# Functoriality
# ---------------------------------------------------------------------------


@dataclass
class PairSquare:
    """A morphism of DGLA pairs: f_L, f_M with chi_target o f_L = f_M o chi_source."""

    chi_source: DGLAMorphism
    chi_target: DGLAMorphism
    f_l: DGLAMorphism
    f_m: DGLAMorphism

    def check(self) -> None:
        if self.f_l.source.space != self.chi_source.source.space:
            raise ArgumentError("f_L does not start at the source pair")
        if self.f_m.target.space != self.chi_target.target.space:
            raise ArgumentError("f_M does not end at the target pair")
        for x in self.chi_source.source.space.names:
            lhs = self.chi_target(self.f_l.image(x))
            rhs = self.f_m(self.chi_source.image(x))
            if lhs != rhs:
                raise ArgumentError(f"square does not commute on {x!r}")


def compose_squares(outer: PairSquare, inner: PairSquare) -> PairSquare:
    return PairSquare(
        inner.chi_source,
        outer.chi_target,
        compose(outer.f_l, inner.f_l),
        compose(outer.f_m, inner.f_m),
    )


def cone_map(square: PairSquare) -> GradedMap:
    """f1(l, m) = (f_L l, f_M m) between suspended cones."""
    source = cone_space(square.chi_source)
    target = cone_space(square.chi_target)
    images: Dict[str, GradedVector] = {}
    for x in square.chi_source.source.space.names:
        images[l_name(x)] = cone_vector(target, square.f_l.image(x), None)
    for y in square.chi_source.target.space.names:
        images[m_name(y)] = cone_vector(target, None, square.f_m.image(y))
    return GradedMap(source, target, 0, images)


def cone_functor_map(square: PairSquare, max_arity: int) -> LInftyLinearMorphism:
    """The linear L-infinity morphism between the closed-form cone structures."""
    square.check()
    return LInftyLinearMorphism(
        cone_linfty(square.chi_source, max_arity),
        cone_linfty(square.chi_target, max_arity),
        cone_map(square),
    )


# ---------------------------------------------------------------------------
# Koszul brackets for L = dM
# ---------------------------------------------------------------------------


def koszul_brackets(M: DGLA, n: int, odd: bool = False) -> MultilinearMap:
    """Phi_n(m1..mn) = (1/n!) sum_s e(s) [...[[dm_s1, m_s2], m_s3], ..., m_sn].

    ``odd=True`` gives the variant with the extra sign (-1)^s. Phi_1 = 0.
    """
    if n < 1:
        raise ArgumentError("koszul_brackets needs n >= 1")

    def fn(names: Tuple[str, ...]) -> GradedVector:
        if n == 1:
            return M.zero()
        degrees = [M.space.degree(x) for x in names]
        acc = M.zero()
        for perm in permutations(range(n)):
            sign = koszul_sign(perm, degrees)
            if odd:
                sign *= permutation_sign(perm)
            value = M.d(M.basis_vector(names[perm[0]]))
            for i in perm[1:]:
                if not value:
                    break
                value = M.bracket(value, M.basis_vector(names[i]))
            if value:
                acc = acc + value * sign
        return acc * Fraction(1, factorial(n))

    return MultilinearMap(M.space, M.space, n, 1, fn)


def embed_derived(chi: SubDGLA, m: GradedVector) -> GradedVector:
    """m -> (dm, m) in the suspended cone of the inclusion dM -> M."""
    M = chi.parent
    return cone_element(chi.inclusion, chi.coordinates(M.d(m)), m)


def odd_koszul_residual(M: DGLA, a: str, b: str, c: str) -> GradedVector:
    """{{a,b},c} + (-1)^{|a||b|+|a||c|}{{b,c},a} + (-1)^{|b||c|+|a||c|}{{c,a},b} - 3/2 d{a,b,c}."""
    two = koszul_brackets(M, 2, odd=True)
    three = koszul_brackets(M, 3, odd=True)
    deg = M.space.degree
    da, db, dc = deg(a), deg(b), deg(c)

    def pair(x: GradedVector, z: str) -> GradedVector:
        return two.evaluate([x, M.basis_vector(z)])

    acc = pair(two((a, b)), c)
    sign = -1 if (da * db + da * dc) % 2 else 1
    acc = acc + pair(two((b, c)), a) * sign
    sign = -1 if (db * dc + da * dc) % 2 else 1
    acc = acc + pair(two((c, a)), b) * sign
    return acc - M.d(three((a, b, c))) * Fraction(3, 2)

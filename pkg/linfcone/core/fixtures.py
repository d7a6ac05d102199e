# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/fixtures.py
"""Named DGLA pairs used by the tests and the CLI.

Besides small hand-written Lie algebras this module builds truncated
Hochschild complexes of finite-dimensional associative algebras. A cochain
f: A^{(x)n} -> A is named ``"x1,...,xn>y"`` for the basis cochain sending
(x1, ..., xn) to y; its DGLA degree is n - 1. Conventions:

    f o g = sum_i (-1)^{i (q - 1)} f(a_0, ..., g(a_i, ..., a_{i+q-1}), ...)
    [f, g] = f o g - (-1)^{|f||g|} g o f
    d f = [mu, f]

Cochains of arity above the cap form an ideal and are dropped.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    DGLA,
    DGLAMorphism,
    SubDGLA,
    dgla_build,
    generated_sub_dgla,
    sub_dgla,
)
from .cone import cone_element, cone_linfty, split_cone_vector
from .errors import ArgumentError, FormatError
from .graded import GradedMap, GradedSpace, GradedVector, ScalarLike
from .linalg import nullspace, rref_basis
from .linfty import unsuspended_bracket
from .reports import Report

logger = logging.getLogger(__name__)

DEFAULT_COCHAIN_CAP = 3


# ---------------------------------------------------------------------------
# Associative algebras
# ---------------------------------------------------------------------------


class AssocAlgebra:
    """Finite-dimensional associative algebra; ``unit`` may be absent."""

    def __init__(
        self,
        basis: Sequence[str],
        products: Mapping[Tuple[str, str], Mapping[str, ScalarLike]],
        unit: Optional[Mapping[str, ScalarLike]] = None,
        name: str = "",
    ) -> None:
        for x in basis:
            if "," in x or ">" in x:
                raise FormatError(f"basis name {x!r} may not contain ',' or '>'", "basis")
        self.space = GradedSpace((x, 0) for x in basis)
        self.basis: Tuple[str, ...] = self.space.names
        self.name = name
        self._table: Dict[Tuple[str, str], GradedVector] = {}
        for (a, b), combo in products.items():
            for n in (a, b):
                if n not in self.space:
                    raise FormatError(f"unknown basis name {n!r}", f"products[{a},{b}]")
            self._table[(a, b)] = GradedVector(self.space, combo)
        self.unit = GradedVector(self.space, unit) if unit is not None else None

    def vector(self, coords: Mapping[str, ScalarLike]) -> GradedVector:
        return GradedVector(self.space, coords)

    def product(self, a: str, b: str) -> GradedVector:
        return self._table.get((a, b)) or GradedVector.zero(self.space)

    def multiply(self, x: GradedVector, y: GradedVector) -> GradedVector:
        terms = []
        for a, xa in x.coords.items():
            for b, yb in y.coords.items():
                for c, coeff in self.product(a, b).coords.items():
                    terms.append((c, xa * yb * coeff))
        return GradedVector.from_terms(self.space, terms)

    def structure_constants(self) -> Dict[Tuple[str, str], GradedVector]:
        return {key: value for key, value in self._table.items() if value}

    def __repr__(self) -> str:
        return f"<AssocAlgebra {self.name or '?'} dim={len(self.basis)}>"


def check_assoc(algebra: AssocAlgebra) -> Report:
    report = Report("assoc")
    basis = {x: GradedVector.basis(algebra.space, x) for x in algebra.basis}
    for a, b, c in itertools.product(algebra.basis, repeat=3):
        report.checked += 1
        left = algebra.multiply(algebra.product(a, b), basis[c])
        right = algebra.multiply(basis[a], algebra.product(b, c))
        if left != right:
            report.add("associativity", (a, b, c), left - right)
    if algebra.unit is not None:
        for a in algebra.basis:
            report.checked += 1
            if (
                algebra.multiply(algebra.unit, basis[a]) != basis[a]
                or algebra.multiply(basis[a], algebra.unit) != basis[a]
            ):
                report.add("unit", (a,))
    return report


def dual_numbers() -> AssocAlgebra:
    """K[e]/(e^2) with basis 1, e."""
    return AssocAlgebra(
        ["1", "e"],
        {("1", "1"): {"1": 1}, ("1", "e"): {"e": 1}, ("e", "1"): {"e": 1}},
        unit={"1": 1},
        name="K[e]/(e^2)",
    )


def product_algebra(first: AssocAlgebra, second: AssocAlgebra) -> AssocAlgebra:
    """A1 x A2 with componentwise product; basis names must be disjoint."""
    overlap = set(first.basis) & set(second.basis)
    if overlap:
        raise ArgumentError(f"basis names overlap: {sorted(overlap)}")
    products = {key: v.coords for key, v in first.structure_constants().items()}
    products.update({key: v.coords for key, v in second.structure_constants().items()})
    unit = None
    if first.unit is not None and second.unit is not None:
        unit = dict(first.unit.coords)
        unit.update(second.unit.coords)
    return AssocAlgebra(
        list(first.basis) + list(second.basis),
        products,
        unit=unit,
        name=f"{first.name or 'A1'} x {second.name or 'A2'}",
    )


@dataclass
class AlgebraSurjection:
    source: AssocAlgebra
    target: AssocAlgebra
    images: Dict[str, GradedVector]

    @classmethod
    def from_table(
        cls,
        source: AssocAlgebra,
        target: AssocAlgebra,
        table: Mapping[str, Mapping[str, ScalarLike]],
    ) -> "AlgebraSurjection":
        images = {x: target.vector(table.get(x, {})) for x in source.basis}
        surjection = cls(source, target, images)
        surjection.check()
        return surjection

    def __call__(self, x: GradedVector) -> GradedVector:
        acc = GradedVector.zero(self.target.space)
        for name, c in x.coords.items():
            acc = acc + self.images[name] * c
        return acc

    def check(self) -> None:
        for a in self.source.basis:
            for b in self.source.basis:
                lhs = self(self.source.product(a, b))
                rhs = self.target.multiply(self.images[a], self.images[b])
                if lhs != rhs:
                    raise ArgumentError(f"map is not multiplicative on ({a}, {b})")
        if len(rref_basis(list(self.images.values()))) != len(self.target.basis):
            raise ArgumentError("map is not surjective")

    def kernel(self) -> List[GradedVector]:
        """Row-reduced basis of the ideal I = ker."""
        equations = [
            {x: self.images[x].coefficient(y) for x in self.source.basis}
            for y in self.target.basis
        ]
        solutions = nullspace(equations, list(self.source.basis))
        return rref_basis([self.source.vector(s) for s in solutions])


# ---------------------------------------------------------------------------
# Hochschild complexes
# ---------------------------------------------------------------------------

Cochain = Tuple[Tuple[str, ...], str]


def cochain_name(inputs: Sequence[str], output: str) -> str:
    return ",".join(inputs) + ">" + output


def parse_cochain(name: str) -> Cochain:
    inputs, _, output = name.partition(">")
    return tuple(inputs.split(",")), output


def _insert(f: Cochain, g: Cochain) -> Dict[Cochain, int]:
    (fin, fout), (gin, gout) = f, g
    out: Dict[Cochain, int] = {}
    for i, slot in enumerate(fin):
        if slot != gout:
            continue
        key = (fin[:i] + gin + fin[i + 1 :], fout)
        out[key] = out.get(key, 0) + (-1 if (i * (len(gin) - 1)) % 2 else 1)
    return out


def _gerstenhaber(f: Cochain, g: Cochain, cap: int) -> Dict[Cochain, int]:
    if len(f[0]) + len(g[0]) - 1 > cap:
        return {}
    out = dict(_insert(f, g))
    sign = -1 if ((len(f[0]) - 1) * (len(g[0]) - 1)) % 2 else 1
    for key, c in _insert(g, f).items():
        out[key] = out.get(key, 0) - sign * c
    return {key: c for key, c in out.items() if c}


def hochschild_dgla(algebra: AssocAlgebra, max_arity: int = DEFAULT_COCHAIN_CAP) -> DGLA:
    """Hoch^n(A, A) for 1 <= n <= max_arity with the Gerstenhaber bracket.

    Arity-0 cochains (A itself, in degree -1) are left out, so this is the
    truncation to degrees 0..max_arity-1. The differential and bracket are
    cut off above max_arity.
    """
    if max_arity < 2:
        raise ArgumentError("Hochschild truncation needs max_arity >= 2")
    cochains: List[Cochain] = []
    for n in range(1, max_arity + 1):
        for inputs in itertools.product(algebra.basis, repeat=n):
            for output in algebra.basis:
                cochains.append((inputs, output))
    space = GradedSpace((cochain_name(*c), len(c[0]) - 1) for c in cochains)

    def vector(terms: Mapping[Cochain, ScalarLike]) -> GradedVector:
        return GradedVector(space, {cochain_name(*k): v for k, v in terms.items()})

    table: Dict[Tuple[str, str], GradedVector] = {}
    for f in cochains:
        for g in cochains:
            value = _gerstenhaber(f, g, max_arity)
            if value:
                table[(cochain_name(*f), cochain_name(*g))] = vector(value)

    mu = {
        ((a, b), c): coeff
        for (a, b), prod in algebra.structure_constants().items()
        for c, coeff in prod.coords.items()
    }
    images: Dict[str, GradedVector] = {}
    for f in cochains:
        acc: Dict[Cochain, Fraction] = {}
        for m, coeff in mu.items():
            for key, c in _gerstenhaber(m, f, max_arity).items():
                acc[key] = acc.get(key, Fraction(0)) + coeff * c
        image = vector({k: v for k, v in acc.items() if v})
        if image:
            images[cochain_name(*f)] = image

    logger.debug("hochschild_dgla %s: %d cochains", algebra.name or "?", len(cochains))
    return DGLA(
        space,
        GradedMap(space, space, 1, images),
        table,
        name=f"Hoch({algebra.name or 'A'})",
    )


def evaluate_cochain(
    algebra: AssocAlgebra, f: GradedVector, inputs: Sequence[GradedVector]
) -> GradedVector:
    """f(a_1, ..., a_n) for a cochain vector f and algebra vectors a_i."""
    acc = GradedVector.zero(algebra.space)
    for name, c in f.coords.items():
        ins, out = parse_cochain(name)
        if len(ins) != len(inputs):
            continue
        weight = c
        for slot, a in zip(ins, inputs):
            weight *= a.coefficient(slot)
            if not weight:
                break
        if weight:
            acc = acc + GradedVector.basis(algebra.space, out) * weight
    return acc


@dataclass
class HochschildPair:
    """chi: L -> M inside Hoch(A, A) for a surjection A -> B with kernel I."""

    surjection: AlgebraSurjection
    hoch: DGLA
    ideal: List[GradedVector]
    kernel: SubDGLA
    l_sub: SubDGLA
    m_to_hoch: GradedMap
    max_arity: int

    @property
    def chi(self) -> DGLAMorphism:
        return self.l_sub.inclusion

    def alpha(self, f: GradedVector) -> Dict[Tuple[str, ...], GradedVector]:
        """pi o f restricted to I: nonzero values keyed by ideal basis names."""
        return hochschild_alpha(self, f)


def _ideal_names(ideal: Sequence[GradedVector]) -> List[str]:
    return [v.items()[0][0] for v in ideal]


def hochschild_alpha(
    pair: HochschildPair, f: GradedVector
) -> Dict[Tuple[str, ...], GradedVector]:
    algebra = pair.surjection.source
    names = _ideal_names(pair.ideal)
    out: Dict[Tuple[str, ...], GradedVector] = {}
    for n in range(1, pair.max_arity + 1):
        for combo in itertools.product(range(len(pair.ideal)), repeat=n):
            value = pair.surjection(
                evaluate_cochain(algebra, f, [pair.ideal[i] for i in combo])
            )
            if value:
                out[tuple(names[i] for i in combo)] = value
    return out


def kernel_of_alpha(
    surjection: AlgebraSurjection, hoch: DGLA, ideal: Sequence[GradedVector], max_arity: int
) -> SubDGLA:
    """ker alpha = {f : f(I, ..., I) in I}."""
    algebra = surjection.source
    vectors: List[GradedVector] = []
    for n in range(1, max_arity + 1):
        unknowns = [name for name in hoch.space.names if len(parse_cochain(name)[0]) == n]
        equations = []
        for combo in itertools.product(ideal, repeat=n):
            for b in surjection.target.basis:
                row: Dict[str, Fraction] = {}
                for name in unknowns:
                    value = evaluate_cochain(algebra, hoch.basis_vector(name), combo)
                    coeff = surjection(value).coefficient(b)
                    if coeff:
                        row[name] = coeff
                if row:
                    equations.append(row)
        for solution in nullspace(equations, unknowns):
            vectors.append(GradedVector(hoch.space, solution))
    return sub_dgla(hoch, vectors, name="ker_alpha")


def hochschild_cone_setup(
    surjection: AlgebraSurjection, max_arity: int = DEFAULT_COCHAIN_CAP
) -> HochschildPair:
    """The inclusion ker alpha -> Hoch(A, A), on cochains of arity 1..max_arity."""
    hoch = hochschild_dgla(surjection.source, max_arity)
    ideal = surjection.kernel()
    kernel = kernel_of_alpha(surjection, hoch, ideal, max_arity)
    return HochschildPair(
        surjection,
        hoch,
        ideal,
        kernel,
        kernel,
        GradedMap.identity(hoch.space),
        max_arity,
    )


def restrict_to_generated(
    pair: HochschildPair, generators: Sequence[GradedVector]
) -> HochschildPair:
    """Replace M by the sub-DGLA generated by ``generators`` and L by its part in ker alpha."""
    m_sub = generated_sub_dgla(pair.hoch, generators, name="M")
    M = m_sub.dgla
    rows: Dict[Tuple[Tuple[str, ...], str], Dict[str, Fraction]] = {}
    for name, vec in m_sub.vectors.items():
        for key, value in pair.alpha(vec).items():
            for b, c in value.coords.items():
                rows.setdefault((key, b), {})[name] = c
    equations = list(rows.values())
    unknowns = list(M.space.names)
    solutions = nullspace(equations, unknowns)
    # nullspace mixes degrees; split into homogeneous pieces
    pieces: List[GradedVector] = []
    for s in solutions:
        pieces.extend(GradedVector(M.space, s).homogeneous_components().values())
    l_sub = sub_dgla(M, pieces, name="L")
    return HochschildPair(
        pair.surjection,
        pair.hoch,
        pair.ideal,
        pair.kernel,
        l_sub,
        m_sub.inclusion.linear,
        pair.max_arity,
    )


def induced_bracket_value(
    pair: HochschildPair, g: GradedVector, inputs: Sequence[str]
) -> GradedVector:
    """alpha of the M-part of [x, x]_2 for x = (dg, g), evaluated on ideal inputs."""
    chi = pair.chi
    M = chi.target
    l = pair.l_sub.coordinates(M.d(g))
    x = cone_element(chi, l, g)
    bracket = unsuspended_bracket(cone_linfty(chi, 2), 2)
    value = bracket.evaluate([x.relabel(bracket.source)] * 2)
    _, m_part = split_cone_vector(chi, value)
    table = pair.alpha(pair.m_to_hoch(m_part))
    return table.get(tuple(inputs)) or GradedVector.zero(pair.surjection.target.space)


def dual_numbers_setup(max_arity: int = DEFAULT_COCHAIN_CAP) -> HochschildPair:
    """K[e]/(e^2) -> K, e -> 0."""
    A = dual_numbers()
    K = AssocAlgebra(["1"], {("1", "1"): {"1": 1}}, unit={"1": 1}, name="K")
    surjection = AlgebraSurjection.from_table(A, K, {"1": {"1": 1}})
    return hochschild_cone_setup(surjection, max_arity)


def dual_numbers_generator(pair: HochschildPair) -> GradedVector:
    """g with g(1) = 0 and g(e) = 1."""
    return pair.hoch.basis_vector(cochain_name(["e"], "1"))


def split_setup(max_arity: int = DEFAULT_COCHAIN_CAP) -> HochschildPair:
    """A = B x I with B = K b (b^2 = 0) and I = K e (e^2 = e), projecting onto B."""
    B = AssocAlgebra(["b"], {}, name="Kb")
    I = AssocAlgebra(["e"], {("e", "e"): {"e": 1}}, unit={"e": 1}, name="Ke")
    A = product_algebra(B, I)
    surjection = AlgebraSurjection.from_table(A, B, {"b": {"b": 1}})
    return hochschild_cone_setup(surjection, max_arity)


def splitting_image(pair: HochschildPair) -> SubDGLA:
    """Cochains I^{(x)n} -> B through A = B x I; an abelian sub-DGLA of Hoch."""
    algebra = pair.surjection.source
    ideal = _ideal_names(pair.ideal)
    vectors = []
    for n in range(1, pair.max_arity + 1):
        for combo in itertools.product(ideal, repeat=n):
            for b in pair.surjection.target.basis:
                if b in algebra.space:
                    vectors.append(pair.hoch.basis_vector(cochain_name(combo, b)))
    return sub_dgla(pair.hoch, vectors, name="S")


# ---------------------------------------------------------------------------
# Lie algebras
# ---------------------------------------------------------------------------


def sl2() -> DGLA:
    return dgla_build(
        [("e", 0), ("f", 0), ("h", 0)],
        bracket={("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}},
        name="sl2",
    )


def gl_matrix_dgla(n: int) -> DGLA:
    """gl_n in degree 0 with basis E<i><j> (1-based)."""
    if n < 1:
        raise ArgumentError("gl_n needs n >= 1")
    names = {(i, j): f"E{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)}
    bracket: Dict[Tuple[str, str], Dict[str, int]] = {}
    for (i, j), a in names.items():
        for (k, l), b in names.items():
            value: Dict[str, int] = {}
            if j == k:
                value[names[(i, l)]] = value.get(names[(i, l)], 0) + 1
            if l == i:
                value[names[(k, j)]] = value.get(names[(k, j)], 0) - 1
            value = {x: c for x, c in value.items() if c}
            if value:
                bracket[(a, b)] = value
    return dgla_build([(x, 0) for x in names.values()], bracket=bracket, name=f"gl{n}")


def derived_dgla() -> DGLA:
    """a, b in degree 0 and u = da, v = db in degree 1 with [a, b] = b, [a, v] = v."""
    return dgla_build(
        [("a", 0), ("b", 0), ("u", 1), ("v", 1)],
        differential={"a": {"u": 1}, "b": {"v": 1}},
        bracket={("a", "b"): {"b": 1}, ("a", "v"): {"v": 1}},
        name="derived",
    )


def derived_bracket_fixture(M: DGLA) -> SubDGLA:
    """The inclusion of dM into M; ArgumentError when dM is not a subalgebra."""
    images = [M.d(M.basis_vector(x)) for x in M.space.names]
    return sub_dgla(M, [v for v in images if v], name=f"d{M.name or 'M'}")


_EXTERIOR = {"": 0, "1": -1, "2": -1, "12": -2}
_WEDGE = {
    ("", ""): ("", 1),
    ("", "1"): ("1", 1),
    ("", "2"): ("2", 1),
    ("", "12"): ("12", 1),
    ("1", ""): ("1", 1),
    ("2", ""): ("2", 1),
    ("12", ""): ("12", 1),
    ("1", "2"): ("12", 1),
    ("2", "1"): ("12", -1),
}
_EXTERIOR_D = {"1": ("", 1), "12": ("2", 1)}


def _odd_name(x: str, form: str) -> str:
    return f"{x}_{form}" if form else x


def odd_pair() -> DGLAMorphism:
    """g (x) Lambda(n1, n2) with g = span(a, b), [a, b] = b, deg n_i = -1, dn1 = 1.

    L = g in degree 0 and chi(x) = x (x) 1.
    """
    lie = {("a", "b"): ("b", 1), ("b", "a"): ("b", -1)}
    basis = [(_odd_name(x, form), deg) for x in ("a", "b") for form, deg in _EXTERIOR.items()]
    differential = {}
    for x in ("a", "b"):
        for form, (target, c) in _EXTERIOR_D.items():
            differential[_odd_name(x, form)] = {_odd_name(x, target): c}
    bracket = []
    for (x, y), (z, c) in lie.items():
        for (p, q), (r, s) in _WEDGE.items():
            bracket.append((_odd_name(x, p), _odd_name(y, q), {_odd_name(z, r): c * s}))
    M = dgla_build(basis, differential=differential, bracket=bracket, name="g(x)Lambda")
    L = dgla_build([("a", 0), ("b", 0)], bracket={("a", "b"): {"b": 1}}, name="g")
    return DGLAMorphism.from_table(L, M, {"a": {"a": 1}, "b": {"b": 1}})


def abelian_pair() -> DGLAMorphism:
    M = dgla_build([("x", 0), ("y", 1)], differential={"x": {"y": 1}}, name="abelian")
    return derived_bracket_fixture(M).inclusion


def sl2_borel_pair() -> DGLAMorphism:
    M = sl2()
    return sub_dgla(M, [M.basis_vector("e"), M.basis_vector("h")], name="b").inclusion


def sl2_identity_pair() -> DGLAMorphism:
    M = sl2()
    return DGLAMorphism(M, M, GradedMap.identity(M.space))


def dual_numbers_pair() -> HochschildPair:
    """The sub-DGLA generated by g, over its intersection with ker alpha."""
    full = dual_numbers_setup()
    return restrict_to_generated(full, [dual_numbers_generator(full)])


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    build: Callable[[], DGLAMorphism]


def _register(*fixtures: Fixture) -> Dict[str, Fixture]:
    return {f.name: f for f in fixtures}


FIXTURES: Dict[str, Fixture] = _register(
    Fixture("abelian", "d M -> M for M = (x -> y), x in degree 0", abelian_pair),
    Fixture("sl2", "Borel span(e, h) -> sl2", sl2_borel_pair),
    Fixture("sl2-identity", "identity of sl2", sl2_identity_pair),
    Fixture(
        "derived",
        "d M -> M for M solvable with da = u, db = v",
        lambda: derived_bracket_fixture(derived_dgla()).inclusion,
    ),
    Fixture("odd", "g -> g (x) Lambda(n1, n2), nonzero M^-1 and M^-2", odd_pair),
    Fixture(
        "dualnumbers",
        "sub-DGLA of Hoch(K[e]/(e^2)) generated by g, over ker alpha",
        lambda: dual_numbers_pair().chi,
    ),
    Fixture(
        "hochschild",
        "ker alpha -> Hoch(K[e]/(e^2)), cochains of arity <= 3",
        lambda: dual_numbers_setup().chi,
    ),
    Fixture(
        "split",
        "ker alpha -> Hoch(Kb x Ke), b^2 = 0, e^2 = e",
        lambda: split_setup().chi,
    ),
)


@lru_cache(maxsize=None)
def fixture(name: str) -> DGLAMorphism:
    try:
        entry = FIXTURES[name]
    except KeyError:
        raise ArgumentError(
            f"unknown fixture {name!r}; choose from {', '.join(sorted(FIXTURES))}"
        ) from None
    return entry.build()


def fixture_names() -> List[str]:
    return list(FIXTURES)

# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/artin.py
"""Local Artinian coefficient rings given by the multiplication table of m_A.

Only the maximal ideal is stored; the unit is implicit. Elements of m_A are
degree-0 graded vectors over the monomial basis.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ArgumentError, FormatError
from .graded import GradedSpace, GradedVector, ScalarLike, as_scalar
from .linalg import rref_basis
from .reports import Report

logger = logging.getLogger(__name__)

ProductEntries = Mapping[Tuple[str, str], Mapping[str, ScalarLike]]


class ArtinAlgebra:
    """m_A with a commutative nilpotent product; ``nil_index`` is the least k with m_A^k = 0."""

    def __init__(
        self,
        monomials: Sequence[str],
        products: ProductEntries,
        nil_index: int,
        name: str = "",
        orders: Optional[Mapping[str, int]] = None,
    ) -> None:
        if nil_index < 2:
            raise FormatError("nil_index must be at least 2", "nil_index")
        try:
            self.space = GradedSpace((m, 0) for m in monomials)
        except ArgumentError as exc:
            raise FormatError(str(exc), "monomials") from exc
        self.monomials: Tuple[str, ...] = tuple(monomials)
        self.nil_index = nil_index
        self.name = name
        self._table: Dict[Tuple[str, str], GradedVector] = {}
        for (a, b), combo in products.items():
            location = f"products[{a},{b}]"
            for n in (a, b, *combo):
                if n not in self.space:
                    raise FormatError(f"unknown monomial {n!r}", location)
            value = GradedVector(self.space, {k: as_scalar(v) for k, v in combo.items()})
            if (a, b) in self._table:
                raise FormatError("duplicate product entry", location)
            self._table[(a, b)] = value
        for (a, b), value in list(self._table.items()):
            self._table.setdefault((b, a), value)
        self._orders = dict(orders or {})

    @property
    def depth(self) -> int:
        """Longest product of elements of m_A that can be nonzero."""
        return self.nil_index - 1

    def zero(self) -> GradedVector:
        return GradedVector.zero(self.space)

    def product(self, a: str, b: str) -> GradedVector:
        return self._table.get((a, b)) or self.zero()

    def multiply(self, x: GradedVector, y: GradedVector) -> GradedVector:
        terms: List[Tuple[str, Fraction]] = []
        for a, xa in x.coords.items():
            for b, yb in y.coords.items():
                for c, coeff in self.product(a, b).coords.items():
                    terms.append((c, xa * yb * coeff))
        return GradedVector.from_terms(self.space, terms)

    def product_of(self, monomials: Iterable[str]) -> GradedVector:
        """Product of a non-empty sequence of monomials."""
        it = iter(monomials)
        acc = GradedVector.basis(self.space, next(it))
        for mono in it:
            if not acc:
                break
            acc = self.multiply(acc, GradedVector.basis(self.space, mono))
        return acc

    def order(self, mono: str) -> int:
        """Largest k with mono in m_A^k (1 when not recorded)."""
        return self._orders.get(mono, 1)

    @property
    def orders(self) -> Dict[str, int]:
        return dict(self._orders)

    def table(self) -> Dict[Tuple[str, str], GradedVector]:
        return dict(self._table)

    def __repr__(self) -> str:
        return f"<ArtinAlgebra {self.name or '?'} dim={len(self.monomials)} nil={self.nil_index}>"


def _power(j: int, var: str = "e") -> str:
    return var if j == 1 else f"{var}^{j}"


def truncated_polynomial(k: int, var: str = "e") -> ArtinAlgebra:
    """m_A of K[e]/(e^k): monomials e, e^2, ..., e^{k-1}."""
    if k < 2:
        raise ArgumentError("K[e]/(e^k) needs k >= 2")
    monomials = [_power(j, var) for j in range(1, k)]
    products = {}
    for i in range(1, k):
        for j in range(i, k):
            if i + j < k:
                products[(_power(i, var), _power(j, var))] = {_power(i + j, var): 1}
    orders = {_power(j, var): j for j in range(1, k)}
    return ArtinAlgebra(monomials, products, k, name=f"K[{var}]/({var}^{k})", orders=orders)


def _divides(small: Tuple[int, ...], big: Tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(small, big))


def _monomial_name(generators: Sequence[str], exps: Tuple[int, ...]) -> str:
    return "*".join(_power(e, g) for g, e in zip(generators, exps) if e)


def monomial_quotient(
    generators: Sequence[str], ideal: Sequence[Mapping[str, int]]
) -> ArtinAlgebra:
    """m_A of K[e1..er]/(monomial ideal); every generator needs a pure power in the ideal."""
    gens = list(generators)
    if not gens or len(set(gens)) != len(gens):
        raise ArgumentError("generators must be distinct and non-empty")
    rels = []
    for entry in ideal:
        unknown = set(entry) - set(gens)
        if unknown:
            raise ArgumentError(f"ideal uses unknown generators {sorted(unknown)}")
        rels.append(tuple(int(entry.get(g, 0)) for g in gens))
    bounds = []
    for i, g in enumerate(gens):
        pure = [r[i] for r in rels if all(e == 0 for j, e in enumerate(r) if j != i)]
        if not pure:
            raise ArgumentError(f"quotient is not Artinian: no pure power of {g!r}")
        bounds.append(min(pure))

    def alive(exps: Tuple[int, ...]) -> bool:
        return any(exps) and not any(_divides(r, exps) for r in rels)

    survivors = [
        exps
        for exps in itertools.product(*(range(b) for b in bounds))
        if alive(exps)
    ]
    survivors.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    names = {exps: _monomial_name(gens, exps) for exps in survivors}
    products = {}
    for a, b in itertools.combinations_with_replacement(survivors, 2):
        total = tuple(x + y for x, y in zip(a, b))
        if total in names:
            products[(names[a], names[b])] = {names[total]: 1}
    nil_index = 1 + max(sum(e) for e in survivors)
    orders = {names[e]: sum(e) for e in survivors}
    label = "K[" + ",".join(gens) + "]/(" + ",".join(_monomial_name(gens, r) for r in rels) + ")"
    return ArtinAlgebra(
        [names[e] for e in survivors], products, nil_index, name=label, orders=orders
    )


def check_artin(artin: ArtinAlgebra) -> Report:
    """Commutativity, associativity and the nil index of the table."""
    report = Report("artin")
    basis = artin.monomials
    for a in basis:
        for b in basis:
            report.checked += 1
            if artin.product(a, b) != artin.product(b, a):
                report.add("commutativity", (a, b))
            for c in basis:
                report.checked += 1
                left = artin.multiply(artin.product(a, b), GradedVector.basis(artin.space, c))
                right = artin.multiply(GradedVector.basis(artin.space, a), artin.product(b, c))
                if left != right:
                    report.add("associativity", (a, b, c), left - right)

    power = [GradedVector.basis(artin.space, m) for m in basis]
    for k in range(2, artin.nil_index + 1):
        power = rref_basis(
            [artin.multiply(v, GradedVector.basis(artin.space, m)) for v in power for m in basis]
        )
        report.checked += 1
        if k < artin.nil_index and not power:
            report.add("nil_index", (str(k),), f"m_A^{k} already vanishes")
            break
        if k == artin.nil_index and power:
            report.add("nilpotency", (str(k),), f"m_A^{k} has rank {len(power)}")
    return report

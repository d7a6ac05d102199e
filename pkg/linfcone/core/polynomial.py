# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/polynomial.py
"""Polynomial de Rham extension M[t, dt] of a DGLA with a t-degree cap.

An element is stored as ``sum t^i m_i + sum t^i dt n_i`` with the dt factor on
the left of the M-coefficient. dt has degree 1, t has degree 0, dt^2 = 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .algebra import DGLA
from .errors import ArgumentError, CapacityError
from .graded import GradedVector, ScalarLike, as_scalar


def _check_cap(power: int, cap: int) -> None:
    if power > cap:
        raise CapacityError(f"t-degree {power} exceeds cap {cap}", needed=power)


def _accumulate(
    target: Dict[int, GradedVector], power: int, vector: GradedVector
) -> None:
    if not vector:
        return
    current = target.get(power)
    total = vector if current is None else current + vector
    if total:
        target[power] = total
    else:
        target.pop(power, None)


class PolyElement:
    """Element of M[t, dt]; immutable, t-degree at most ``cap``."""

    __slots__ = ("base", "cap", "even", "odd")

    def __init__(
        self,
        base: DGLA,
        cap: int,
        even: Optional[Mapping[int, GradedVector]] = None,
        odd: Optional[Mapping[int, GradedVector]] = None,
    ) -> None:
        self.base = base
        self.cap = cap
        self.even: Dict[int, GradedVector] = {}
        self.odd: Dict[int, GradedVector] = {}
        for store, terms in ((self.even, even), (self.odd, odd)):
            for power, vector in (terms or {}).items():
                if vector.space != base.space:
                    raise ArgumentError("coefficient is not in the base DGLA")
                if vector:
                    _check_cap(power, cap)
                    _accumulate(store, power, vector)

    @classmethod
    def zero(cls, base: DGLA, cap: int) -> "PolyElement":
        return cls(base, cap)

    @classmethod
    def constant(cls, base: DGLA, cap: int, m: GradedVector) -> "PolyElement":
        return cls(base, cap, even={0: m})

    @classmethod
    def monomial(
        cls, base: DGLA, cap: int, power: int, m: GradedVector, dt: bool = False
    ) -> "PolyElement":
        terms = {power: m}
        return cls(base, cap, odd=terms) if dt else cls(base, cap, even=terms)

    def _same(self, other: "PolyElement") -> None:
        if other.base is not self.base and other.base.space != self.base.space:
            raise ArgumentError("elements over different base DGLAs")

    def __add__(self, other: "PolyElement") -> "PolyElement":
        self._same(other)
        even = dict(self.even)
        odd = dict(self.odd)
        for power, vec in other.even.items():
            _accumulate(even, power, vec)
        for power, vec in other.odd.items():
            _accumulate(odd, power, vec)
        return PolyElement(self.base, max(self.cap, other.cap), even, odd)

    def __neg__(self) -> "PolyElement":
        return self * -1

    def __sub__(self, other: "PolyElement") -> "PolyElement":
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> "PolyElement":
        q = as_scalar(scalar)
        return PolyElement(
            self.base,
            self.cap,
            {p: v * q for p, v in self.even.items()},
            {p: v * q for p, v in self.odd.items()},
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyElement):
            return NotImplemented
        return (
            self.base == other.base and self.even == other.even and self.odd == other.odd
        )

    def __bool__(self) -> bool:
        return bool(self.even or self.odd)

    def is_zero(self) -> bool:
        return not self

    def t_degree(self) -> int:
        powers = list(self.even) + list(self.odd)
        return max(powers) if powers else 0

    def degree(self) -> Optional[int]:
        degs = set()
        for vec in self.even.values():
            degs.add(vec.degree())
        for vec in self.odd.values():
            degs.add(vec.degree() + 1)
        if len(degs) > 1:
            raise ArgumentError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop() if degs else None

    def even_part(self) -> "PolyElement":
        return PolyElement(self.base, self.cap, even=self.even)

    def dt_part(self) -> "PolyElement":
        return PolyElement(self.base, self.cap, odd=self.odd)

    def with_cap(self, cap: int) -> "PolyElement":
        return PolyElement(self.base, cap, self.even, self.odd)

    def __repr__(self) -> str:
        parts = [f"t^{p}({v!r})" for p, v in sorted(self.even.items())]
        parts += [f"t^{p}dt({v!r})" for p, v in sorted(self.odd.items())]
        return " + ".join(parts) if parts else "0"


def poly_mul(
    p: PolyElement, coefficients: Mapping[int, ScalarLike], dt: bool = False
) -> PolyElement:
    """Multiply by the form c(t) (or c(t) dt, dt placed on the left)."""
    coeffs = {i: as_scalar(c) for i, c in coefficients.items() if as_scalar(c)}
    even: Dict[int, GradedVector] = {}
    odd: Dict[int, GradedVector] = {}
    for i, c in coeffs.items():
        for power, vec in p.even.items():
            _check_cap(i + power, p.cap)
            _accumulate(odd if dt else even, i + power, vec * c)
        if not dt:
            for power, vec in p.odd.items():
                _check_cap(i + power, p.cap)
                _accumulate(odd, i + power, vec * c)
    return PolyElement(p.base, p.cap, even, odd)


def poly_bracket(p: PolyElement, q: PolyElement) -> PolyElement:
    """[w1 m1, w2 m2] = (-1)^{|m1||w2|} w1 w2 [m1, m2]."""
    p._same(q)
    base = p.base
    cap = max(p.cap, q.cap)
    even: Dict[int, GradedVector] = {}
    odd: Dict[int, GradedVector] = {}
    for i, m in p.even.items():
        for j, m2 in q.even.items():
            value = base.bracket(m, m2)
            if value:
                _check_cap(i + j, cap)
                _accumulate(even, i + j, value)
        if not q.odd:
            continue
        parts = m.homogeneous_components()
        for j, n in q.odd.items():
            for deg, part in parts.items():
                value = base.bracket(part, n)
                if value:
                    _check_cap(i + j, cap)
                    _accumulate(odd, i + j, value * (-1 if deg % 2 else 1))
    for i, n in p.odd.items():
        for j, m2 in q.even.items():
            value = base.bracket(n, m2)
            if value:
                _check_cap(i + j, cap)
                _accumulate(odd, i + j, value)
    return PolyElement(base, cap, even, odd)


def poly_d(p: PolyElement) -> PolyElement:
    """d(t^i m) = i t^{i-1} dt m + t^i dm and d(t^i dt n) = -t^i dt dn."""
    base = p.base
    even: Dict[int, GradedVector] = {}
    odd: Dict[int, GradedVector] = {}
    for i, m in p.even.items():
        if i:
            _accumulate(odd, i - 1, m * i)
        _accumulate(even, i, base.d(m))
    for i, n in p.odd.items():
        _accumulate(odd, i, -base.d(n))
    return PolyElement(base, p.cap, even, odd)


def evaluate_at(p: PolyElement, a: ScalarLike) -> GradedVector:
    """e_a: kill dt terms and substitute t = a."""
    a = as_scalar(a)
    acc = p.base.zero()
    for power, vec in p.even.items():
        acc = acc + vec * (a**power)
    return acc


def integrate(p: PolyElement, a: ScalarLike, b: ScalarLike) -> GradedVector:
    """Integral over [a, b]; only dt-coefficients contribute."""
    a, b = as_scalar(a), as_scalar(b)
    acc = p.base.zero()
    for power, vec in p.odd.items():
        weight = (b ** (power + 1) - a ** (power + 1)) / (power + 1)
        acc = acc + vec * weight
    return acc


def antiderivative(p: PolyElement) -> PolyElement:
    """The even element t -> integral over [0, t] of p."""
    even: Dict[int, GradedVector] = {}
    for power, vec in p.odd.items():
        _check_cap(power + 1, p.cap)
        _accumulate(even, power + 1, vec * Fraction(1, power + 1))
    return PolyElement(p.base, p.cap, even)


def map_coefficients(p: PolyElement, base: DGLA, fn) -> PolyElement:
    """Apply a degree-0 linear map coefficientwise (M -> base)."""
    return PolyElement(
        base,
        p.cap,
        {i: fn(v) for i, v in p.even.items()},
        {i: fn(v) for i, v in p.odd.items()},
    )


class PathAlgebra:
    """M[t, dt] exposing the same Lie operations as :class:`DGLA`."""

    def __init__(self, base: DGLA, cap: int) -> None:
        if cap < 0:
            raise ArgumentError("cap must be non-negative")
        self.base = base
        self.cap = cap

    def zero(self) -> PolyElement:
        return PolyElement(self.base, self.cap)

    def constant(self, m: GradedVector) -> PolyElement:
        return PolyElement.constant(self.base, self.cap, m)

    def monomial(self, power: int, m: GradedVector, dt: bool = False) -> PolyElement:
        return PolyElement.monomial(self.base, self.cap, power, m, dt)

    def bracket(self, x: PolyElement, y: PolyElement) -> PolyElement:
        return poly_bracket(x, y)

    def d(self, x: PolyElement) -> PolyElement:
        return poly_d(x)

    def ad_power(self, x: PolyElement, y: PolyElement, n: int) -> PolyElement:
        for _ in range(n):
            y = poly_bracket(x, y)
        return y

    def evaluate_at(self, x: PolyElement, a: ScalarLike) -> GradedVector:
        return evaluate_at(x, a)

    def __repr__(self) -> str:
        return f"<PathAlgebra {self.base!r} cap={self.cap}>"


def split_dt(p: PolyElement) -> Tuple[PolyElement, PolyElement]:
    """(y(t), z(t)) with p = y(t) + dt z(t); z is returned as an even element."""
    return p.even_part(), PolyElement(p.base, p.cap, even=p.odd)

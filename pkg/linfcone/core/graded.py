# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/graded.py
"""Graded substrate: exact scalars, graded spaces, vectors, maps and symmetric words.

Everything here is immutable after construction. Basis elements are ordered by
(degree, name); that order is the canonical order of symmetric words. Signs
follow the Koszul rule: swapping two odd factors costs a factor -1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .errors import ArgumentError, FormatError

ScalarLike = Union[int, Fraction, str]


def as_scalar(value: ScalarLike) -> Fraction:
    """Parse ints, Fractions and "p/q" strings into a Fraction in lowest terms."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FormatError(f"boolean is not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not an exact rational: {value!r}") from exc
    raise FormatError(f"not an exact rational: {value!r}")


def format_scalar(value: Fraction) -> str:
    """Render a scalar as "p/q" ("p" for integers, "-" prefix for negatives)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class GradedSpace:
    """Finite-dimensional Z-graded space with a named basis."""

    __slots__ = ("_basis", "_degree", "_rank", "_hash")

    def __init__(self, basis: Iterable[Tuple[str, int]]) -> None:
        degree: Dict[str, int] = {}
        for name, deg in basis:
            if not isinstance(name, str) or not name:
                raise ArgumentError(f"basis names must be non-empty strings: {name!r}")
            if name in degree:
                raise ArgumentError(f"duplicate basis name {name!r}")
            degree[name] = int(deg)
        ordered = sorted(degree.items(), key=lambda item: (item[1], item[0]))
        self._basis: Tuple[Tuple[str, int], ...] = tuple(ordered)
        self._degree = degree
        self._rank = {name: idx for idx, (name, _) in enumerate(ordered)}
        self._hash = hash(self._basis)

    @property
    def basis(self) -> Tuple[Tuple[str, int], ...]:
        return self._basis

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self._basis)

    def degree(self, name: str) -> int:
        try:
            return self._degree[name]
        except KeyError:
            raise ArgumentError(f"unknown basis element {name!r}") from None

    def rank(self, name: str) -> int:
        """Position of a basis element in the canonical order."""
        try:
            return self._rank[name]
        except KeyError:
            raise ArgumentError(f"unknown basis element {name!r}") from None

    def names_in_degree(self, deg: int) -> Tuple[str, ...]:
        return tuple(name for name, d in self._basis if d == deg)

    def degrees(self) -> List[int]:
        return sorted(set(self._degree.values()))

    def dims(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for _, deg in self._basis:
            out[deg] = out.get(deg, 0) + 1
        return out

    def shift(self, k: int = 1) -> "GradedSpace":
        """V[k]: same names, (V[k])^i = V^{i+k}."""
        return GradedSpace((name, deg - k) for name, deg in self._basis)

    @staticmethod
    def direct_sum(parts: Sequence[Tuple[str, "GradedSpace"]]) -> "GradedSpace":
        """Sum of spaces; each basis name gets the prefix of its summand."""
        return GradedSpace(
            (prefix + name, deg) for prefix, space in parts for name, deg in space.basis
        )

    def __contains__(self, name: object) -> bool:
        return name in self._degree

    def __len__(self) -> int:
        return len(self._basis)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSpace):
            return NotImplemented
        return self._basis == other._basis

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}:{d}" for n, d in self._basis)
        return f"GradedSpace({inner})"


class GradedVector:
    """Sparse immutable vector: basis name -> nonzero Fraction."""

    __slots__ = ("space", "coords")

    def __init__(
        self,
        space: GradedSpace,
        coords: Optional[Mapping[str, ScalarLike]] = None,
    ) -> None:
        clean: Dict[str, Fraction] = {}
        for name, value in (coords or {}).items():
            if name not in space:
                raise ArgumentError(f"unknown basis element {name!r}")
            q = as_scalar(value)
            if q:
                clean[name] = q
        self.space = space
        self.coords = clean

    @classmethod
    def _trusted(cls, space: GradedSpace, coords: Dict[str, Fraction]) -> "GradedVector":
        vec = cls.__new__(cls)
        vec.space = space
        vec.coords = coords
        return vec

    @classmethod
    def zero(cls, space: GradedSpace) -> "GradedVector":
        return cls._trusted(space, {})

    @classmethod
    def basis(cls, space: GradedSpace, name: str, coeff: ScalarLike = 1) -> "GradedVector":
        return cls(space, {name: coeff})

    @classmethod
    def from_terms(
        cls, space: GradedSpace, terms: Iterable[Tuple[str, Fraction]]
    ) -> "GradedVector":
        acc: Dict[str, Fraction] = {}
        for name, value in terms:
            acc[name] = acc.get(name, Fraction(0)) + value
        return cls._trusted(space, {k: v for k, v in acc.items() if v})

    def is_zero(self) -> bool:
        return not self.coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def coefficient(self, name: str) -> Fraction:
        return self.coords.get(name, Fraction(0))

    def items(self) -> List[Tuple[str, Fraction]]:
        return sorted(self.coords.items(), key=lambda item: self.space.rank(item[0]))

    def _check_space(self, other: "GradedVector") -> None:
        if other.space != self.space:
            raise ArgumentError("vectors live in different spaces")

    def __add__(self, other: "GradedVector") -> "GradedVector":
        self._check_space(other)
        out = dict(self.coords)
        for name, value in other.coords.items():
            total = out.get(name, Fraction(0)) + value
            if total:
                out[name] = total
            else:
                out.pop(name, None)
        return GradedVector._trusted(self.space, out)

    def __neg__(self) -> "GradedVector":
        return GradedVector._trusted(self.space, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other: "GradedVector") -> "GradedVector":
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> "GradedVector":
        q = as_scalar(scalar)
        if not q:
            return GradedVector.zero(self.space)
        return GradedVector._trusted(self.space, {k: v * q for k, v in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedVector):
            return NotImplemented
        return self.space == other.space and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.space, tuple(self.items())))

    def homogeneous_components(self) -> Dict[int, "GradedVector"]:
        parts: Dict[int, Dict[str, Fraction]] = {}
        for name, value in self.coords.items():
            parts.setdefault(self.space.degree(name), {})[name] = value
        return {deg: GradedVector._trusted(self.space, c) for deg, c in parts.items()}

    def is_homogeneous(self) -> bool:
        return len({self.space.degree(n) for n in self.coords}) <= 1

    def degree(self) -> Optional[int]:
        """Degree of a homogeneous vector; None for the zero vector."""
        degs = {self.space.degree(n) for n in self.coords}
        if len(degs) > 1:
            raise ArgumentError(f"vector is not homogeneous (degrees {sorted(degs)})")
        return degs.pop() if degs else None

    def relabel(self, space: GradedSpace) -> "GradedVector":
        """Reinterpret the coordinates in a space with the same names (e.g. a shift)."""
        return GradedVector(space, self.coords)

    def to_dict(self) -> Dict[str, str]:
        return {name: format_scalar(value) for name, value in self.items()}

    def __repr__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for name, value in self.items():
            parts.append(f"{format_scalar(value)}*{name}")
        return " + ".join(parts)


class GradedMap:
    """Linear map of fixed degree k given by images of basis elements."""

    def __init__(
        self,
        source: GradedSpace,
        target: GradedSpace,
        degree: int,
        images: Optional[Mapping[str, GradedVector]] = None,
    ) -> None:
        self.source = source
        self.target = target
        self.degree = int(degree)
        self._images: Dict[str, GradedVector] = {}
        for name, image in (images or {}).items():
            if name not in source:
                raise ArgumentError(f"unknown source basis element {name!r}")
            if image.space != target:
                raise ArgumentError(f"image of {name!r} is not in the target space")
            deg = image.degree()
            if deg is not None and deg != source.degree(name) + self.degree:
                raise ArgumentError(
                    f"image of {name!r} has degree {deg}, expected "
                    f"{source.degree(name) + self.degree}"
                )
            if image:
                self._images[name] = image

    @classmethod
    def identity(cls, space: GradedSpace) -> "GradedMap":
        return cls(space, space, 0, {n: GradedVector.basis(space, n) for n in space})

    @classmethod
    def zero(cls, source: GradedSpace, target: GradedSpace, degree: int = 0) -> "GradedMap":
        return cls(source, target, degree, {})

    def image(self, name: str) -> GradedVector:
        if name not in self.source:
            raise ArgumentError(f"unknown source basis element {name!r}")
        return self._images.get(name) or GradedVector.zero(self.target)

    def __call__(self, vector: GradedVector) -> GradedVector:
        if vector.space != self.source:
            raise ArgumentError("vector is not in the source space")
        acc: Dict[str, Fraction] = {}
        for name, value in vector.coords.items():
            image = self._images.get(name)
            if image is None:
                continue
            for tgt, coeff in image.coords.items():
                acc[tgt] = acc.get(tgt, Fraction(0)) + value * coeff
        return GradedVector._trusted(self.target, {k: v for k, v in acc.items() if v})

    def block(self, n: int) -> Dict[Tuple[str, str], Fraction]:
        """Sparse matrix of the component V^n -> W^{n+k}, keyed (source, target)."""
        out: Dict[Tuple[str, str], Fraction] = {}
        for name in self.source.names_in_degree(n):
            for tgt, coeff in self.image(name).coords.items():
                out[(name, tgt)] = coeff
        return out

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """self o inner."""
        if inner.target != self.source:
            raise ArgumentError("maps are not composable")
        return GradedMap(
            inner.source,
            self.target,
            self.degree + inner.degree,
            {n: self(inner.image(n)) for n in inner.source},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.degree == other.degree
            and self._images == other._images
        )

    def __repr__(self) -> str:
        return f"GradedMap(degree={self.degree}, images={self._images!r})"


# ---------------------------------------------------------------------------
# Permutations and signs
# ---------------------------------------------------------------------------


def _check_perm(perm: Sequence[int], n: int) -> None:
    if len(perm) != n:
        raise ArgumentError(f"permutation of length {len(perm)} for {n} degrees")
    if sorted(perm) != list(range(n)):
        raise ArgumentError(f"not a permutation of 0..{n - 1}: {tuple(perm)}")


def koszul_sign(perm: Sequence[int], degrees: Sequence[int]) -> int:
    """Sign e with v_{perm[0]} (.) ... (.) v_{perm[n-1]} = e * v_0 (.) ... (.) v_{n-1}.

    ``perm`` lists 0-based indices; ``degrees[i]`` is the degree of v_i.
    """
    n = len(degrees)
    _check_perm(perm, n)
    sign = 1
    for i in range(n):
        a = perm[i]
        if not degrees[a] % 2:
            continue
        for j in range(i + 1, n):
            b = perm[j]
            if a > b and degrees[b] % 2:
                sign = -sign
    return sign


def permutation_sign(perm: Sequence[int]) -> int:
    _check_perm(perm, len(perm))
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def unshuffles(k: int, m: int) -> Tuple[Tuple[int, ...], ...]:
    """All (k, m)-unshuffles as 0-based permutations.

    The first k entries increase, the last m entries increase; signs are
    obtained from :func:`koszul_sign` once degrees are known.
    """
    if k < 0 or m < 0:
        raise ArgumentError("unshuffle sizes must be non-negative")
    n = k + m
    out = []
    for head in itertools.combinations(range(n), k):
        chosen = set(head)
        out.append(tuple(head) + tuple(i for i in range(n) if i not in chosen))
    return tuple(out)


# ---------------------------------------------------------------------------
# Symmetric words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymWord:
    """A canonical symmetric word of basis elements with its sign (0 = zero word)."""

    factors: Tuple[str, ...]
    sign: int

    def is_zero(self) -> bool:
        return self.sign == 0

    def __len__(self) -> int:
        return len(self.factors)


@lru_cache(maxsize=200_000)
def _canonical(space: GradedSpace, names: Tuple[str, ...]) -> SymWord:
    ranks = [space.rank(n) for n in names]
    perm = sorted(range(len(names)), key=ranks.__getitem__)
    degrees = [space.degree(n) for n in names]
    ordered = tuple(names[p] for p in perm)
    for a, b in zip(ordered, ordered[1:]):
        if a == b and space.degree(a) % 2:
            return SymWord(ordered, 0)
    return SymWord(ordered, koszul_sign(perm, degrees))


def canonicalize(space: GradedSpace, names: Sequence[str]) -> SymWord:
    """Sort a word of basis elements into canonical order.

    The returned sign s satisfies ``word = s * sorted_word`` in the symmetric
    power of ``space``; a repeated odd factor gives the zero word.
    """
    return _canonical(space, tuple(names))


def word_degree(space: GradedSpace, names: Sequence[str]) -> int:
    return sum(space.degree(n) for n in names)


def basis_words(space: GradedSpace, n: int) -> List[Tuple[str, ...]]:
    """All nonzero canonical words of length n (odd factors at most once)."""
    out = []
    for combo in itertools.combinations_with_replacement(space.names, n):
        word = canonicalize(space, combo)
        if not word.is_zero() and word.factors == combo:
            out.append(combo)
    return out


# ---------------------------------------------------------------------------
# Multilinear maps and decalage
# ---------------------------------------------------------------------------


class MultilinearMap:
    """k-linear map given on basis words: ``fn(names) -> GradedVector``."""

    def __init__(
        self,
        source: GradedSpace,
        target: GradedSpace,
        arity: int,
        degree: int,
        fn: Callable[[Tuple[str, ...]], GradedVector],
    ) -> None:
        self.source = source
        self.target = target
        self.arity = arity
        self.degree = degree
        self._fn = fn

    def __call__(self, names: Sequence[str]) -> GradedVector:
        names = tuple(names)
        if len(names) != self.arity:
            raise ArgumentError(f"expected {self.arity} inputs, got {len(names)}")
        out = self._fn(names)
        deg = out.degree()
        if deg is not None and deg != word_degree(self.source, names) + self.degree:
            raise ArgumentError(
                f"map is not homogeneous of degree {self.degree} on {names}"
            )
        return out

    def evaluate(self, vectors: Sequence[GradedVector]) -> GradedVector:
        """Multilinear extension to arbitrary vectors."""
        if len(vectors) != self.arity:
            raise ArgumentError(f"expected {self.arity} inputs, got {len(vectors)}")
        acc = GradedVector.zero(self.target)
        for combo in itertools.product(*(v.items() for v in vectors)):
            coeff = Fraction(1)
            for _, value in combo:
                coeff *= value
            acc = acc + self(tuple(name for name, _ in combo)) * coeff
        return acc

    def symmetrize(self) -> "MultilinearMap":
        """sum over S_k of e(s) f(v_s1, ..., v_sk) with Koszul signs."""

        def fn(names: Tuple[str, ...]) -> GradedVector:
            degrees = [self.source.degree(n) for n in names]
            acc = GradedVector.zero(self.target)
            for perm in itertools.permutations(range(len(names))):
                value = self(tuple(names[i] for i in perm))
                if value:
                    acc = acc + value * koszul_sign(perm, degrees)
            return acc

        return MultilinearMap(self.source, self.target, self.arity, self.degree, fn)


def decalage_sign(degrees: Sequence[int], map_degree: int) -> int:
    """(-1)^{k i + sum_j (k - j) deg(v_j)} with j counted from 1."""
    k = len(degrees)
    exponent = k * map_degree + sum((k - j) * d for j, d in enumerate(degrees, start=1))
    return -1 if exponent % 2 else 1


def decalage(f: MultilinearMap, shift: int = 1) -> MultilinearMap:
    """Transport f: (x)^k V -> W of degree i to (x)^k V[1] -> W[shift].

    The result has degree i + k - shift.
    """
    if not isinstance(f.degree, int):
        raise ArgumentError("decalage needs a homogeneous map")
    source = f.source.shift(1)
    target = f.target.shift(shift)

    def fn(names: Tuple[str, ...]) -> GradedVector:
        degrees = [f.source.degree(n) for n in names]
        return f(names).relabel(target) * decalage_sign(degrees, f.degree)

    return MultilinearMap(source, target, f.arity, f.degree + f.arity - shift, fn)


def undecalage(g: MultilinearMap, shift: int = 1) -> MultilinearMap:
    """Inverse of :func:`decalage`: recover the map on the unsuspended spaces."""
    source = g.source.shift(-1)
    target = g.target.shift(-shift)
    degree = g.degree - g.arity + shift

    def fn(names: Tuple[str, ...]) -> GradedVector:
        degrees = [source.degree(n) for n in names]
        return g(names).relabel(target) * decalage_sign(degrees, degree)

    return MultilinearMap(source, target, g.arity, degree, fn)

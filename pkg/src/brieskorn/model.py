"""Brieskorn-Pham data model and the toric discrepancy functions.

A singularity ``x1^a1 + ... + xk^ak = 0`` is determined by its exponent
tuple. For a lattice vector ``p`` with non-negative entries the monomial
valuation of the pure powers is ``min(p_i * a_i)``, and the discrepancy of
the corresponding toric divisor is ``sum(p) - min(p_i * a_i) - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .numerics import ceil_div


@dataclass(frozen=True)
class ExponentTuple:
    """Exponents ``(a1, ..., ak)`` with ``k >= 3`` and every ``ai >= 2``.

    ``exponents`` keeps the caller's order so that coordinates of lattice
    vectors and hyperplane labels line up with the input; ``canonical``
    gives the nondecreasing form used for search and deduplication.
    """

    exponents: tuple[int, ...]
    reciprocal_sum: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        exps = tuple(self.exponents)
        for a in exps:
            if isinstance(a, bool) or not isinstance(a, int):
                raise ValueError(f"exponents must be integers, got {a!r}")
        if len(exps) < 3:
            raise ValueError(f"need at least 3 exponents, got {len(exps)}")
        if any(a < 2 for a in exps):
            raise ValueError(f"every exponent must be >= 2 (a_i = 1 is a smooth point): {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "reciprocal_sum", sum((Fraction(1, a) for a in exps), Fraction(0)))

    @classmethod
    def parse(cls, text: str) -> "ExponentTuple":
        """Parse the comma-separated form ``"2,3,11,17,19"``."""
        parts = [s.strip() for s in text.split(",")]
        try:
            values = tuple(int(s) for s in parts)
        except ValueError:
            raise ValueError(f"malformed exponent tuple {text!r}") from None
        return cls(values)

    @property
    def k(self) -> int:
        return len(self.exponents)

    @property
    def sorted_exponents(self) -> tuple[int, ...]:
        return tuple(sorted(self.exponents))

    def canonical(self) -> "ExponentTuple":
        return ExponentTuple(self.sorted_exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __str__(self) -> str:
        return ",".join(map(str, self.exponents))


@dataclass(frozen=True)
class LatticeVector:
    """Non-zero vector of non-negative integers."""

    coordinates: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coordinates)
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValueError(f"coordinates must be integers, got {c!r}")
        if any(c < 0 for c in coords):
            raise ValueError(f"coordinates must be non-negative: {coords}")
        if not any(coords):
            raise ValueError("lattice vector must be non-zero")
        object.__setattr__(self, "coordinates", coords)

    @property
    def interior(self) -> bool:
        """True when every coordinate is at least 1."""
        return all(c >= 1 for c in self.coordinates)

    def __len__(self) -> int:
        return len(self.coordinates)

    def __iter__(self):
        return iter(self.coordinates)


ExponentsLike = Union[ExponentTuple, Sequence[int]]
VectorLike = Union[LatticeVector, Sequence[int]]


def as_exponents(a: ExponentsLike) -> ExponentTuple:
    return a if isinstance(a, ExponentTuple) else ExponentTuple(tuple(a))


def _pair(p: VectorLike, a: ExponentsLike) -> tuple[tuple[int, ...], tuple[int, ...]]:
    vec = p if isinstance(p, LatticeVector) else LatticeVector(tuple(p))
    exps = as_exponents(a)
    if len(vec) != len(exps):
        raise ValueError(f"vector has length {len(vec)} but tuple has {len(exps)} exponents")
    return vec.coordinates, exps.exponents


def newton_value(p: VectorLike, a: ExponentsLike) -> int:
    """Value of the monomial valuation ``p`` on the pure powers, ``min(p_i * a_i)``."""
    coords, exps = _pair(p, a)
    return min(c * e for c, e in zip(coords, exps))


def discrepancy(p: VectorLike, a: ExponentsLike) -> int:
    coords, exps = _pair(p, a)
    return sum(coords) - min(c * e for c, e in zip(coords, exps)) - 1


def discrepancy_lower_bound(d: int, a: ExponentsLike) -> int:
    """``sum(ceil(d / a_i)) - d - 1``.

    Bounds the discrepancy from below for every interior vector whose newton
    value is ``d``; conversely the vector ``(ceil(d / a_i))_i`` attains a
    discrepancy no larger than this.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    exps = as_exponents(a).exponents
    return sum(ceil_div(d, e) for e in exps) - d - 1


def witness_vector(d: int, a: ExponentsLike) -> LatticeVector:
    """The interior vector ``(ceil(d / a_i))_i`` attached to level ``d``."""
    exps = as_exponents(a).exponents
    return LatticeVector(tuple(ceil_div(d, e) for e in exps))

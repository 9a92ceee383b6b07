"""Weighted blow-up with weights proportional to ``(1/a_1, ..., 1/a_k)``.

The exceptional divisor of the blow-up is modelled as projective space of
dimension ``k - 2`` carrying the ``k`` coordinate hyperplanes in general
position, with boundary coefficients ``(a_i - 1)/a_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import reduce
from typing import Optional, Sequence

from .model import ExponentsLike, as_exponents
from .numerics import format_rational, lcm_list


@dataclass(frozen=True)
class WeightVector:
    """Primitive weights ``w`` with ``w_i * a_i == level`` for every ``i``."""

    weights: tuple[int, ...]
    level: int

    def __post_init__(self):
        ws = tuple(self.weights)
        if not ws or any(w < 1 for w in ws):
            raise ValueError(f"weights must be positive integers: {ws}")
        if reduce(gcd, ws) != 1:
            raise ValueError(f"weights are not primitive: {ws}")
        object.__setattr__(self, "weights", ws)


@dataclass(frozen=True)
class LogFanoPair:
    """Projective space ``P^N`` with a boundary supported on generic hyperplanes."""

    projective_dim: int
    coefficients: tuple[Fraction, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.projective_dim < 1:
            raise ValueError(f"projective dimension must be >= 1, got {self.projective_dim}")
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if any(c < 0 for c in coeffs):
            raise ValueError("boundary coefficients must be non-negative")
        labels = self.labels
        if labels is None:
            labels = tuple(f"H{i + 1}" for i in range(len(coeffs)))
        if len(labels) != len(coeffs):
            raise ValueError("one label per coefficient required")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def anticanonical_degree(self) -> int:
        return self.projective_dim + 1

    def to_dict(self) -> dict:
        return {
            "projective_dim": self.projective_dim,
            "coefficients": [format_rational(c) for c in self.coefficients],
            "labels": list(self.labels),
            "anticanonical_degree": self.anticanonical_degree,
        }


def blowup_weights(a: ExponentsLike) -> WeightVector:
    exps = as_exponents(a).exponents
    period = lcm_list(exps)
    raw = [period // e for e in exps]
    g = reduce(gcd, raw)
    return WeightVector(tuple(w // g for w in raw), period // g)


def exceptional_discrepancy(a: ExponentsLike) -> Fraction:
    """Discrepancy ``sum(w) - min(w_i a_i) - 1`` of the weighted blow-up's divisor."""
    exps = as_exponents(a).exponents
    w = blowup_weights(exps).weights
    return Fraction(sum(w) - min(wi * e for wi, e in zip(w, exps)) - 1)


def diff_boundary(a: ExponentsLike) -> LogFanoPair:
    exps = as_exponents(a).exponents
    return LogFanoPair(
        projective_dim=len(exps) - 2,
        coefficients=tuple(Fraction(e - 1, e) for e in exps),
    )


def is_log_fano(pair: LogFanoPair) -> bool:
    """``-(K + B)`` is ample on ``P^N`` iff the boundary degree is below ``N + 1``."""
    return sum(pair.coefficients, Fraction(0)) < pair.anticanonical_degree


def is_pairwise_coprime(values: Sequence[int]) -> bool:
    values = list(values)
    return all(gcd(x, y) == 1 for i, x in enumerate(values) for y in values[i + 1:])

"""Log canonicity of generic hyperplane arrangements and n-complements on ``P^N``.

For hyperplanes in general position, ``s <= N`` of them meet in a flat of
codimension ``s`` and more than ``N`` never meet, so the pair is lc (klt)
exactly when every sum of ``s`` coefficients is ``<= s`` (``< s``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .blowup import LogFanoPair, is_log_fano
from .numerics import floor_scale, format_rational

DEFAULT_N_MAX = 100

MINIMALITY_SCOPE = (
    "minimal n among complements of the form floor((n+1)c)/n plus generic "
    "hyperplane padding; not a search over all Q-complements"
)


@dataclass(frozen=True)
class Arrangement:
    """Weighted hyperplanes in general position in ``P^N``."""

    projective_dim: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if self.projective_dim < 1:
            raise ValueError(f"projective dimension must be >= 1, got {self.projective_dim}")
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if any(c < 0 for c in coeffs):
            raise ValueError("arrangement coefficients must be non-negative")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, pair) -> "Arrangement":
        return pair if isinstance(pair, cls) else cls(pair.projective_dim, tuple(pair.coefficients))

    def scaled(self, t) -> "Arrangement":
        t = Fraction(t)
        return Arrangement(self.projective_dim, tuple(t * c for c in self.coefficients))


class LcStatus(str, Enum):
    KLT = "KLT"
    LC_NOT_KLT = "LC_NOT_KLT"
    NOT_LC = "NOT_LC"


@dataclass(frozen=True)
class LcResult:
    status: LcStatus
    worst_flat: Optional[tuple[int, Fraction]]

    def to_dict(self) -> dict:
        flat = None
        if self.worst_flat is not None:
            s, total = self.worst_flat
            flat = {"size": s, "coefficient_sum": format_rational(total)}
        return {"status": self.status.value, "worst_flat": flat}


def _top_sums(arr: Arrangement) -> list[Fraction]:
    """``M_s`` for ``s = 1 .. min(N, m)``: the sum of the ``s`` largest coefficients."""
    desc = sorted(arr.coefficients, reverse=True)
    sums = []
    acc = Fraction(0)
    for c in desc[: arr.projective_dim]:
        acc += c
        sums.append(acc)
    return sums


def lc_status(arr) -> LcResult:
    arr = Arrangement.of(arr)
    sums = _top_sums(arr)
    if not sums:
        return LcResult(LcStatus.KLT, None)
    worst_s, worst_total = 1, sums[0]
    for s, total in enumerate(sums, start=1):
        if total - s > worst_total - worst_s:
            worst_s, worst_total = s, total
    excess = worst_total - worst_s
    if excess > 0:
        status = LcStatus.NOT_LC
    elif excess == 0:
        status = LcStatus.LC_NOT_KLT
    else:
        status = LcStatus.KLT
    return LcResult(status, (worst_s, worst_total))


def lct(arr) -> Optional[Fraction]:
    """Log canonical threshold of the arrangement.

    Returns ``None`` for the zero divisor, whose threshold is infinite.
    """
    arr = Arrangement.of(arr)
    candidates = [Fraction(s) / total for s, total in enumerate(_top_sums(arr), start=1) if total > 0]
    return min(candidates) if candidates else None


@dataclass(frozen=True)
class ComplementBounds:
    d_max: Fraction
    h_max: tuple[Fraction, ...]
    passed: bool
    log_fano: bool

    def to_dict(self) -> dict:
        return {
            "d_max": format_rational(self.d_max),
            "h_max": [format_rational(h) for h in self.h_max],
            "pass": self.passed,
            "log_fano": self.log_fano,
        }


def complement_coefficient_bounds(pair: LogFanoPair) -> ComplementBounds:
    """Largest coefficients any Q-complement can put on each boundary hyperplane
    (``h_max``) and on any extra component (``d_max``), from the degree budget
    ``N + 1`` alone.

    ``log_fano`` is False when the pair is not log Fano; the numbers are still
    returned but say little in that case.
    """
    degree = pair.projective_dim + 1
    total = sum(pair.coefficients, Fraction(0))
    d_max = degree - total
    h_max = tuple(degree - (total - c) for c in pair.coefficients)
    passed = d_max < 1 and all(h < 1 for h in h_max)
    return ComplementBounds(d_max, h_max, passed, is_log_fano(pair))


class NoComplement(Exception):
    """Raised by :func:`n_complement` when the construction fails for that index."""

    MONOTONICITY = "MONOTONICITY"
    OVERFLOW = "OVERFLOW"
    NOT_LC = "NOT_LC"

    def __init__(self, reason: str, n: int):
        super().__init__(f"no {n}-complement: {reason}")
        self.reason = reason
        self.n = n


@dataclass(frozen=True)
class ComplementDivisor:
    index: int
    projective_dim: int
    rounded_coefficients: tuple[Fraction, ...]
    padding: tuple[Fraction, ...]
    lc: LcResult

    @property
    def total_degree(self) -> Fraction:
        return sum(self.rounded_coefficients + self.padding, Fraction(0))

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "rounded_coefficients": [format_rational(c) for c in self.rounded_coefficients],
            "rounded_numerators": [int(c * self.index) for c in self.rounded_coefficients],
            "padding": [format_rational(c) for c in self.padding],
            "total_degree": format_rational(self.total_degree),
            "lc_status": self.lc.status.value,
        }


def _rounded_numerators(coeffs: Sequence[Fraction], n: int) -> list[int]:
    return [floor_scale(c, n + 1) for c in coeffs]


def _precheck(coeffs: Sequence[Fraction], n: int, degree: int) -> Optional[str]:
    nums = _rounded_numerators(coeffs, n)
    # floor((n+1)c)/n >= c  <=>  floor((n+1)c) * den >= n * num
    if any(f * c.denominator < n * c.numerator for f, c in zip(nums, coeffs)):
        return NoComplement.MONOTONICITY
    if sum(nums) > n * degree:
        return NoComplement.OVERFLOW
    return None


def n_complement(pair, n: int) -> ComplementDivisor:
    """Build the ``n``-complement ``floor((n+1)c)/n`` of a boundary on ``P^N``.

    Any degree left over is filled greedily with extra generic hyperplanes of
    coefficient 1 and one final hyperplane carrying the remainder.

    Raises:
        NoComplement: with ``reason`` MONOTONICITY if rounding lowers some
            coefficient, OVERFLOW if the rounded degree exceeds ``N + 1``, or
            NOT_LC if the padded divisor is not log canonical.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"index must be a positive integer, got {n!r}")
    coeffs = tuple(Fraction(c) for c in pair.coefficients)
    degree = pair.projective_dim + 1
    reason = _precheck(coeffs, n, degree)
    if reason:
        raise NoComplement(reason, n)

    rounded = tuple(Fraction(f, n) for f in _rounded_numerators(coeffs, n))
    deficit = degree - sum(rounded, Fraction(0))
    whole, remainder = divmod(deficit, 1)
    padding = (Fraction(1),) * int(whole) + ((remainder,) if remainder else ())

    lc = lc_status(Arrangement(pair.projective_dim, rounded + padding))
    if lc.status is LcStatus.NOT_LC:
        raise NoComplement(NoComplement.NOT_LC, n)
    return ComplementDivisor(n, pair.projective_dim, rounded, padding, lc)


def minimal_complement_index(pair, n_max: int = DEFAULT_N_MAX) -> Optional[tuple[int, ComplementDivisor]]:
    """Smallest ``n <= n_max`` for which :func:`n_complement` succeeds, or None."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    coeffs = tuple(Fraction(c) for c in pair.coefficients)
    degree = pair.projective_dim + 1
    for n in range(1, n_max + 1):
        if _precheck(coeffs, n, degree):
            continue
        try:
            return n, n_complement(pair, n)
        except NoComplement:
            continue
    return None

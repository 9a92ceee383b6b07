"""Per-tuple analysis and resumable sweeps over exponent tuples."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import multiprocessing
import os
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Optional

from .blowup import (
    LogFanoPair,
    WeightVector,
    blowup_weights,
    diff_boundary,
    exceptional_discrepancy,
    is_log_fano,
    is_pairwise_coprime,
)
from .complements import (
    DEFAULT_N_MAX,
    MINIMALITY_SCOPE,
    ComplementBounds,
    ComplementDivisor,
    complement_coefficient_bounds,
    minimal_complement_index,
)
from .model import ExponentsLike, ExponentTuple, as_exponents
from .numerics import format_rational
from .terminality import BoundMode, SizeLimitError, TerminalityVerdict, is_terminal

log = logging.getLogger(__name__)

SEARCH_GUARD = 10**8
CSV_COLUMNS = ("tuple", "terminal", "min_h", "log_fano", "bounds_pass", "minimal_index", "candidate")


@dataclass(frozen=True)
class AnalysisConfig:
    bound_mode: str = BoundMode.LCM.value
    full_scan: bool = False
    n_max: int = DEFAULT_N_MAX
    jobs: int = 1

    def __post_init__(self):
        BoundMode(self.bound_mode)
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")


@dataclass(frozen=True)
class Report:
    tuple: ExponentTuple
    coprimality: bool
    terminality: TerminalityVerdict
    weights: WeightVector
    exceptional_discrepancy: Fraction
    pair: LogFanoPair
    log_fano: bool
    bounds: ComplementBounds
    n_max: int
    minimal_index: Optional[int]
    complement: Optional[ComplementDivisor]
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def reciprocal_sum(self) -> Fraction:
        return self.tuple.reciprocal_sum

    @property
    def diff_coefficients(self) -> tuple[Fraction, ...]:
        return self.pair.coefficients

    @property
    def exceptional_candidate(self) -> bool:
        return self.terminality.terminal and self.log_fano and self.bounds.passed

    def to_dict(self, include_timings: bool = False) -> dict:
        d = {
            "tuple": list(self.tuple.exponents),
            "coprimality": self.coprimality,
            "reciprocal_sum": format_rational(self.reciprocal_sum),
            "terminality": self.terminality.to_dict(),
            "weights": list(self.weights.weights),
            "weight_level": self.weights.level,
            "exceptional_discrepancy": format_rational(self.exceptional_discrepancy),
            "diff_coefficients": [format_rational(c) for c in self.diff_coefficients],
            "log_fano": self.log_fano,
            "bounds": self.bounds.to_dict(),
            "n_max": self.n_max,
            "minimal_index": self.minimal_index,
            "complement": self.complement.to_dict() if self.complement else None,
            "lc_status": self.complement.lc.status.value if self.complement else None,
            "minimality_scope": MINIMALITY_SCOPE,
            "exceptional_candidate": self.exceptional_candidate,
        }
        if include_timings:
            d["timings_ms"] = dict(self.timings)
        return d

    def csv_row(self) -> dict:
        return {
            "tuple": str(self.tuple),
            "terminal": self.terminality.terminal,
            "min_h": self.terminality.min_scanned_h,
            "log_fano": self.log_fano,
            "bounds_pass": self.bounds.passed,
            "minimal_index": self.minimal_index,
            "candidate": self.exceptional_candidate,
        }


def analyze(a: ExponentsLike, config: Optional[AnalysisConfig] = None) -> Report:
    """Run every stage on one tuple.

    Stages after a non-terminal verdict still run, since the blow-up model is
    defined regardless; only ``exceptional_candidate`` is affected. The
    complement search is skipped when the pair is not log Fano.
    """
    config = config or AnalysisConfig()
    exps = as_exponents(a)
    timings = {}

    t0 = time.perf_counter_ns()
    verdict = is_terminal(exps, config.bound_mode, full_scan=config.full_scan, jobs=config.jobs)
    t1 = time.perf_counter_ns()
    weights = blowup_weights(exps)
    disc = exceptional_discrepancy(exps)
    pair = diff_boundary(exps)
    fano = is_log_fano(pair)
    t2 = time.perf_counter_ns()
    bounds = complement_coefficient_bounds(pair)
    found = minimal_complement_index(pair, config.n_max) if fano else None
    t3 = time.perf_counter_ns()
    timings["terminality"] = (t1 - t0) // 10**6
    timings["blowup"] = (t2 - t1) // 10**6
    timings["complements"] = (t3 - t2) // 10**6

    return Report(
        tuple=exps,
        coprimality=is_pairwise_coprime(exps.exponents),
        terminality=verdict,
        weights=weights,
        exceptional_discrepancy=disc,
        pair=pair,
        log_fano=fano,
        bounds=bounds,
        n_max=config.n_max,
        minimal_index=found[0] if found else None,
        complement=found[1] if found else None,
        timings=timings,
    )


def report_line(report: Report) -> str:
    """One NDJSON line, without timings so that sweeps are reproducible."""
    return json.dumps(report.to_dict(), separators=(",", ":"))


# --- search -------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    k: int
    max_exp: int
    bound_mode: str = BoundMode.LCM.value
    n_max: int = DEFAULT_N_MAX
    jobs: int = 1
    out: Optional[str] = None
    checkpoint: Optional[str] = None
    require_coprime: bool = False
    force: bool = False

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"k must be >= 3, got {self.k}")
        if self.max_exp < 2:
            raise ValueError(f"max_exp must be >= 2, got {self.max_exp}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        BoundMode(self.bound_mode)

    def analysis(self) -> AnalysisConfig:
        return AnalysisConfig(bound_mode=self.bound_mode, n_max=self.n_max)

    def config_hash(self) -> str:
        """Hash of the settings that affect output content (not jobs or paths)."""
        key = {
            "k": self.k,
            "max_exp": self.max_exp,
            "bound_mode": self.bound_mode,
            "n_max": self.n_max,
            "require_coprime": self.require_coprime,
        }
        return hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()


@dataclass
class SearchStats:
    enumerated: int = 0
    skipped_reciprocal: int = 0
    filtered: int = 0
    emitted: int = 0
    resumed: int = 0
    finished: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def enumeration_count(k: int, max_exp: int) -> int:
    """Number of nondecreasing k-tuples with entries in ``[2, max_exp]``."""
    return comb(max_exp - 2 + k, k) if max_exp >= 2 else 0


def enumerate_tuples(k: int, max_exp: int) -> Iterator[tuple[int, ...]]:
    return combinations_with_replacement(range(2, max_exp + 1), k)


def _candidates(config: SearchConfig, stats: SearchStats, done: frozenset = frozenset()):
    for t in enumerate_tuples(config.k, config.max_exp):
        stats.enumerated += 1
        if sum(Fraction(1, a) for a in t) <= 1:
            stats.skipped_reciprocal += 1
            continue
        if config.require_coprime and not is_pairwise_coprime(t):
            stats.filtered += 1
            continue
        if t in done:
            stats.resumed += 1
            continue
        yield t


def _guard(config: SearchConfig) -> None:
    count = enumeration_count(config.k, config.max_exp)
    if count > SEARCH_GUARD and not config.force:
        raise SizeLimitError(f"search would enumerate {count} tuples (> {SEARCH_GUARD}); use force")


def _analyze_worker(args):
    t, analysis = args
    return analyze(ExponentTuple(t), analysis)


def _analyzed(tuples: Iterable[tuple[int, ...]], config: SearchConfig) -> Iterator[Report]:
    analysis = config.analysis()
    work = ((t, analysis) for t in tuples)
    if config.jobs <= 1:
        for item in work:
            yield _analyze_worker(item)
        return
    with multiprocessing.Pool(config.jobs) as pool:
        # imap preserves input order, so emission order is independent of jobs
        yield from pool.imap(_analyze_worker, work, chunksize=16)


def search(config: SearchConfig, stats: Optional[SearchStats] = None) -> Iterator[Report]:
    """Stream reports for every enumerated tuple with ``sum(1/a_i) > 1``, in lexicographic order."""
    _guard(config)
    stats = stats if stats is not None else SearchStats()
    yield from _analyzed(_candidates(config, stats), config)


def _tuple_key(line: str) -> tuple[int, ...]:
    return tuple(json.loads(line)["tuple"])


def _read_checkpoint(path: str, expected_hash: str) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith("config "):
        raise ValueError(f"{path} is not a search checkpoint")
    if lines[0].split(" ", 1)[1] != expected_hash:
        raise ValueError(f"checkpoint {path} was written for a different search configuration")
    return [ln for ln in lines[1:] if ln]


def _recover_partial(partial: str, completed: set) -> list[str]:
    """Keep one parseable line per checkpointed tuple; drop torn or unconfirmed writes."""
    kept = []
    seen = set()
    if not os.path.exists(partial):
        return kept
    with open(partial, encoding="utf-8") as fh:
        for line in fh:
            if not line.endswith("\n"):
                break
            line = line.rstrip("\n")
            try:
                key = ",".join(map(str, _tuple_key(line)))
            except (ValueError, KeyError, TypeError):
                continue
            if key in completed and key not in seen:
                seen.add(key)
                kept.append(line)
    return kept


def write_csv(reports: Iterable[Report], fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.csv_row())


def _csv_from_lines(lines: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for line in lines:
        d = json.loads(line)
        writer.writerow({
            "tuple": ",".join(map(str, d["tuple"])),
            "terminal": d["terminality"]["status"] == "Terminal",
            "min_h": d["terminality"]["min_scanned_h"],
            "log_fano": d["log_fano"],
            "bounds_pass": d["bounds"]["pass"],
            "minimal_index": d["minimal_index"],
            "candidate": d["exceptional_candidate"],
        })
    return buf.getvalue()


def run_search(config: SearchConfig, stop_after: Optional[int] = None) -> SearchStats:
    """Run a sweep into ``config.out``, resuming from ``config.checkpoint`` if present.

    Reports are appended to ``<out>.partial`` as they complete and each tuple
    is recorded in the checkpoint after its report is flushed. The final file
    is the sorted partial; it is NDJSON unless ``out`` ends in ``.csv``.
    ``stop_after`` ends the run early, unfinalized, after that many new
    reports (used to exercise resumption).
    """
    if not config.out:
        raise ValueError("run_search needs an output path")
    _guard(config)
    stats = SearchStats()
    partial = config.out + ".partial"
    digest = config.config_hash()

    completed: list[str] = []
    if config.checkpoint and os.path.exists(config.checkpoint):
        completed = _read_checkpoint(config.checkpoint, digest)
        log.info("resuming with %d completed tuples", len(completed))
    done_keys = set(completed)
    kept = _recover_partial(partial, done_keys)
    # a checkpointed tuple whose report line was lost must be recomputed
    have = {",".join(map(str, _tuple_key(ln))) for ln in kept}
    completed = [c for c in completed if c in have]

    with open(partial, "w", encoding="utf-8") as fh:
        fh.writelines(ln + "\n" for ln in kept)
    if config.checkpoint:
        with open(config.checkpoint, "w", encoding="utf-8") as ck:
            ck.write(f"config {digest}\n")
            ck.writelines(c + "\n" for c in completed)

    done = frozenset(tuple(int(x) for x in c.split(",")) for c in completed)
    ck = open(config.checkpoint, "a", encoding="utf-8") if config.checkpoint else None
    try:
        with open(partial, "a", encoding="utf-8") as out:
            for report in _analyzed(_candidates(config, stats, done), config):
                out.write(report_line(report) + "\n")
                out.flush()
                if ck:
                    ck.write(str(report.tuple) + "\n")
                    ck.flush()
                stats.emitted += 1
                if stop_after is not None and stats.emitted >= stop_after:
                    return stats
    finally:
        if ck:
            ck.close()

    with open(partial, encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    lines.sort(key=_tuple_key)
    if config.out.endswith(".csv"):
        payload = _csv_from_lines(lines)
    else:
        payload = "".join(ln + "\n" for ln in lines)
    tmp = config.out + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(payload)
    os.replace(tmp, config.out)
    os.remove(partial)
    stats.finished = True
    return stats

import json
import os

import pytest

from brieskorn.pipeline import (
    AnalysisConfig,
    SearchConfig,
    SearchStats,
    analyze,
    enumerate_tuples,
    enumeration_count,
    report_line,
    run_search,
    search,
)
from brieskorn.terminality import SizeLimitError


def count_nondecreasing(k, lo, hi):
    if k == 0:
        return 1
    return sum(count_nondecreasing(k - 1, a, hi) for a in range(lo, hi + 1))


def test_analyze_paper_tuple():
    r = analyze((2, 3, 11, 17, 19))
    assert r.terminality.terminal
    assert r.minimal_index == 22
    assert r.exceptional_candidate
    d = r.to_dict()
    assert d["diff_coefficients"] == ["1/2", "2/3", "10/11", "16/17", "18/19"]
    assert d["exceptional_discrepancy"] == "760/1"
    assert d["weights"] == [10659, 7106, 1938, 1254, 1122]
    assert d["log_fano"] is True
    assert d["coprimality"] is True
    assert d["complement"]["rounded_numerators"] == [11, 15, 20, 21, 21]
    assert "timings_ms" not in d
    assert set(r.to_dict(include_timings=True)["timings_ms"]) == {"terminality", "blowup", "complements"}


def test_analyze_negative_controls():
    r = analyze((2, 2, 2))
    assert r.terminality.witness.coordinates == (1, 1, 1)
    assert not r.exceptional_candidate
    r = analyze((2, 2, 3, 3, 3))
    assert not r.bounds.passed
    assert not r.exceptional_candidate


def test_analyze_not_log_fano_skips_complement():
    r = analyze((3, 3, 3))
    assert not r.log_fano
    assert r.minimal_index is None and r.complement is None


def test_non_coprime_flag():
    assert analyze((2, 4, 5)).coprimality is False


@pytest.mark.parametrize("k,m", [(3, 2), (3, 7), (4, 9), (5, 6)])
def test_enumeration_count(k, m):
    assert enumeration_count(k, m) == count_nondecreasing(k, 2, m) == sum(1 for _ in enumerate_tuples(k, m))


def test_search_single_tuple():
    stats = SearchStats()
    out = list(search(SearchConfig(k=3, max_exp=2), stats))
    assert [r.tuple.exponents for r in out] == [(2, 2, 2)]
    assert not out[0].exceptional_candidate
    assert stats.enumerated == 1 and stats.emitted == 0


def test_search_counts_and_filters():
    stats = SearchStats()
    out = list(search(SearchConfig(k=3, max_exp=8, require_coprime=True), stats))
    assert stats.enumerated == enumeration_count(3, 8)
    assert stats.enumerated == stats.skipped_reciprocal + stats.filtered + len(out)
    assert all(r.coprimality for r in out)


def test_search_guard():
    with pytest.raises(SizeLimitError):
        list(search(SearchConfig(k=20, max_exp=40)))


def test_search_jobs_independent():
    serial = [report_line(r) for r in search(SearchConfig(k=4, max_exp=9))]
    parallel = [report_line(r) for r in search(SearchConfig(k=4, max_exp=9, jobs=3))]
    assert serial == parallel


def _run(tmp_path, name, **kw):
    out = str(tmp_path / name)
    cfg = SearchConfig(k=4, max_exp=10, out=out, checkpoint=out + ".ckpt", **kw)
    return cfg, out


def test_resume_is_byte_identical(tmp_path):
    cfg, out = _run(tmp_path, "full.ndjson")
    stats = run_search(cfg)
    assert stats.finished
    reference = open(out, "rb").read()

    cfg2, out2 = _run(tmp_path, "resumed.ndjson")
    first = run_search(cfg2, stop_after=17)
    assert not first.finished and not os.path.exists(out2)
    # simulate a crash between the report write and the checkpoint update,
    # plus a torn trailing line
    with open(out2 + ".partial", "a") as fh:
        fh.write(open(out).read().splitlines()[30] + "\n")
        fh.write('{"tuple": [9,')
    second = run_search(cfg2, stop_after=5)
    assert second.resumed == 17
    third = run_search(cfg2)
    assert third.finished
    assert open(out2, "rb").read() == reference
    lines = reference.decode().splitlines()
    keys = [tuple(json.loads(ln)["tuple"]) for ln in lines]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_resume_refuses_other_config(tmp_path):
    cfg, out = _run(tmp_path, "x.ndjson")
    run_search(cfg, stop_after=3)
    other = SearchConfig(k=4, max_exp=10, n_max=50, out=out, checkpoint=cfg.checkpoint)
    with pytest.raises(ValueError):
        run_search(other)


def test_csv_output(tmp_path):
    out = str(tmp_path / "res.csv")
    run_search(SearchConfig(k=3, max_exp=6, out=out))
    rows = open(out).read().splitlines()
    assert rows[0] == "tuple,terminal,min_h,log_fano,bounds_pass,minimal_index,candidate"
    assert rows[1].startswith('"2,2,2",False,0,True')


def test_analysis_config_validation():
    with pytest.raises(ValueError):
        AnalysisConfig(bound_mode="median")
    with pytest.raises(ValueError):
        SearchConfig(k=2, max_exp=5)

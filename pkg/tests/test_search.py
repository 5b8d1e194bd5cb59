"""
Tests for the binary (4,4,N) CCC search
"""
import pytest
from pydantic import ValidationError

import golay_zcz.search as search_module
from golay_zcz.ccc import verify_ccc
from golay_zcz.config import Settings
from golay_zcz.errors import GolayZczError
from golay_zcz.models import SearchConfig
from golay_zcz.search import canonical_key, canonicalize, search_ccc
from golay_zcz.seeds import seed_registry
from golay_zcz.seqcore import CompleteComplementaryCode, PhaseSequence


def keys(result):
    return [canonical_key(c) for c in result.codes]


# ------------------------------------------------------------------
# Configuration
# ------------------------------------------------------------------

def test_config_defaults():
    config = SearchConfig(length=3)
    assert config.set_size == 4
    assert config.timeout_seconds == 60
    assert config.max_solutions == 1
    assert config.symmetry_reduction and config.pruning


@pytest.mark.parametrize("kwargs", [
    {"length": 0},
    {"length": 3, "set_size": 3},
    {"length": 3, "timeout_seconds": 0},
    {"length": 3, "max_solutions": 0},
])
def test_config_rejects_bad_values(kwargs):
    with pytest.raises(ValidationError):
        SearchConfig(**kwargs)


# ------------------------------------------------------------------
# Search
# ------------------------------------------------------------------

def test_finds_a_length_3_code():
    result = search_ccc(SearchConfig(length=3, timeout_seconds=60))
    assert result.solutions == 1
    assert not result.timed_out
    code = result.codes[0]
    assert code.shape == (4, 4, 3)
    assert verify_ccc(code)
    assert code.row(0, 0).entries == (0, 0, 0)
    assert result.nodes > 0 and result.prunes > 0


def test_finds_a_length_4_code():
    result = search_ccc(SearchConfig(length=4, timeout_seconds=60))
    assert result.solutions == 1
    assert verify_ccc(result.codes[0])


def test_length_1_count_with_symmetry():
    result = search_ccc(SearchConfig(length=1, max_solutions=10000))
    assert not result.timed_out
    assert result.solutions == 384
    assert all(verify_ccc(c) for c in result.codes[:20])


def test_pruning_does_not_change_the_solutions():
    pruned = search_ccc(SearchConfig(length=1, max_solutions=10000))
    plain = search_ccc(SearchConfig(length=1, max_solutions=10000, pruning=False))
    assert plain.prunes == 0
    assert plain.nodes > pruned.nodes
    assert keys(plain) == keys(pruned)
    assert plain.canonical_forms() == pruned.canonical_forms()


def test_all_ones_first_row_excludes_length_5():
    result = search_ccc(SearchConfig(length=5, timeout_seconds=60))
    assert not result.timed_out
    assert result.solutions == 0


def test_search_is_deterministic():
    config = SearchConfig(length=2, max_solutions=20)
    assert keys(search_ccc(config)) == keys(search_ccc(config))


def test_timeout_is_reported():
    result = search_ccc(SearchConfig(length=8, timeout_seconds=0.001, max_solutions=10 ** 9))
    assert result.timed_out
    assert result.to_dict()["timed_out"] is True


def test_parallel_matches_serial(monkeypatch):
    serial = search_ccc(SearchConfig(length=2, max_solutions=50))
    monkeypatch.setattr(search_module, "get_settings", lambda: Settings(threads=2))
    parallel = search_ccc(SearchConfig(length=2, max_solutions=50, workers=2))
    assert parallel.solutions == serial.solutions == 50
    assert keys(parallel) == keys(serial)


def test_parallel_stops_at_the_first_solution(monkeypatch):
    # later branches are cancelled, so neither their nodes nor a deadline count
    config = dict(length=3, timeout_seconds=5, max_solutions=1)
    serial = search_ccc(SearchConfig(**config))
    monkeypatch.setattr(search_module, "get_settings", lambda: Settings(threads=2))
    parallel = search_ccc(SearchConfig(**config, workers=2))
    assert not parallel.timed_out
    assert parallel.to_dict() == serial.to_dict()
    assert keys(parallel) == keys(serial)


def test_correlation_cache_is_cleared():
    search_ccc(SearchConfig(length=2, max_solutions=5))
    assert search_module._row_correlation.cache_info().currsize == 0
    assert search_module._row_signs.cache_info().currsize == 0


def test_workers_capped_by_threads(monkeypatch):
    monkeypatch.setattr(search_module, "get_settings", lambda: Settings(threads=1))
    result = search_ccc(SearchConfig(length=3, workers=8))
    assert result.solutions == 1


# ------------------------------------------------------------------
# Canonical forms
# ------------------------------------------------------------------

def negated(code):
    return CompleteComplementaryCode.from_rows(
        [[PhaseSequence(2, tuple(1 - e for e in r.entries)) for r in s.rows] for s in code.sets]
    )


def reversed_rows(code):
    return CompleteComplementaryCode.from_rows(
        [[PhaseSequence(2, r.entries[::-1]) for r in s.rows] for s in code.sets]
    )


def test_canonical_form_is_shared_by_images():
    code = seed_registry("table3-N3")
    form = canonical_key(canonicalize(code))
    assert canonical_key(canonicalize(negated(code))) == form
    assert canonical_key(canonicalize(reversed_rows(code))) == form
    assert canonical_key(canonicalize(negated(reversed_rows(code)))) == form


def test_canonicalize_is_idempotent():
    once = canonicalize(seed_registry("table3-N5"))
    assert canonicalize(once) == once
    assert verify_ccc(once)


def test_canonicalize_rejects_polyphase():
    row = PhaseSequence(4, (1,))
    with pytest.raises(GolayZczError):
        canonicalize(CompleteComplementaryCode.from_rows([[row]]))

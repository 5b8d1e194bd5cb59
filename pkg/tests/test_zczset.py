"""
Tests for the IDFT construction, ZCZ measurement and optimality calculus
"""
from fractions import Fraction

import numpy as np
import pytest

from golay_zcz.ccc import gcp_to_ccc
from golay_zcz.correlation import aacf, sum_profiles
from golay_zcz.errors import GolayZczError, InvalidCccError, LengthMismatchError
from golay_zcz.golay import SignQuadruple, build_theorem1_pair, golay_family, golay_mate
from golay_zcz.seeds import SEED_NAMES, seed_registry
from golay_zcz.seqcore import CompleteComplementaryCode, PhaseSequence
from golay_zcz.zczset import (
    IdftMatrix,
    build_theorem2_set,
    idft_matrix,
    measure_golay_zcz,
    optimality_factor,
    tang_fan_bound,
    verify_golay_zcz,
)


def small_codes():
    codes = [seed_registry(name) for name in SEED_NAMES]
    codes += [gcp_to_ccc(p, golay_mate(p)) for p in golay_family(32)]
    return [c for c in codes if c.set_size * c.length <= 64]


# ------------------------------------------------------------------
# IDFT matrix
# ------------------------------------------------------------------

def test_idft_columns_are_orthogonal():
    for order in (1, 2, 3, 4, 6):
        f = idft_matrix(order).as_array()
        assert np.allclose(f.conj().T @ f, order * np.eye(order))
        assert np.allclose(np.abs(f), 1.0)


def test_idft_phase_and_entry():
    f = IdftMatrix(4)
    assert f.phase(2, 3) == 2
    assert f.entry(1, 1) == pytest.approx(1j)
    with pytest.raises(GolayZczError):
        IdftMatrix(0)


# ------------------------------------------------------------------
# Construction
# ------------------------------------------------------------------

def test_example3_set(code4):
    sequences = build_theorem2_set(code4)
    assert len(sequences) == 4
    assert all(s.length == 64 and s.modulus == 4 for s in sequences)

    report = verify_golay_zcz(sequences, 12)
    assert report.passed
    assert report.complementary
    assert report.z_min == 12
    assert report.optimality_factor == Fraction(3, 4)


def test_block_layout(code4):
    sequences = build_theorem2_set(code4)
    m, n = 4, 4
    # block (i, j) of sequence k is f[i, j] * c^j_k
    for k, i, j in [(0, 0, 0), (1, 2, 3), (3, 3, 1)]:
        block = sequences[k].entries[i * m * n + j * n:i * m * n + (j + 1) * n]
        expected = code4.row(j, k).lift(4).times_root(i * j, 4).entries
        assert block == expected


def test_set_from_gcp_code(pair1, mate1):
    sequences = build_theorem2_set(gcp_to_ccc(pair1, mate1))
    assert [s.length for s in sequences] == [40, 40]
    report = verify_golay_zcz(sequences, 10)
    assert report.passed
    assert report.z_min >= 10


def test_set_from_table_code():
    sequences = build_theorem2_set(seed_registry("table3-N3"))
    assert [s.length for s in sequences] == [48] * 4
    assert verify_golay_zcz(sequences, 9).passed


def test_single_row_code_gives_the_row_back():
    row = PhaseSequence(2, (0,))
    assert build_theorem2_set(CompleteComplementaryCode.from_rows([[row]])) == [row]


def test_invalid_code_rejected(code4):
    rows = [list(s.rows) for s in code4.sets]
    first = rows[1][0]
    rows[1][0] = PhaseSequence(2, (1 - first.entries[0],) + first.entries[1:])
    with pytest.raises(InvalidCccError):
        build_theorem2_set(CompleteComplementaryCode.from_rows(rows))


@pytest.mark.parametrize("code", small_codes(), ids=lambda c: "x".join(str(d) for d in c.shape))
def test_constructed_sets_meet_claimed_width(code):
    m, n = code.set_size, code.length
    sequences = build_theorem2_set(code)
    total = sum_profiles([aacf(s) for s in sequences])
    assert total.exact
    assert all(total.at(t) == 0 for t in range(1, m * m * n))
    report = verify_golay_zcz(sequences, (m - 1) * n)
    assert report.passed
    assert report.z_min <= report.length // report.set_size


# ------------------------------------------------------------------
# Measurement
# ------------------------------------------------------------------

def test_example1_pair_widths(pair1, mate1):
    p, q = build_theorem1_pair(pair1, mate1, SignQuadruple(1, 1, 1, -1))
    report = verify_golay_zcz([p, q], 10)
    assert report.passed
    assert (report.measured_zacz, report.measured_zccz) == (10, 10)


def test_identical_sequences_fail(pair1):
    report = verify_golay_zcz([pair1.a, pair1.a], 1)
    assert not report.passed
    assert report.measured_zccz == 0


def test_lengths_must_agree():
    with pytest.raises(LengthMismatchError):
        measure_golay_zcz([PhaseSequence(2, (0, 0)), PhaseSequence(2, (0,))])


def test_claimed_width_must_be_positive(pair1):
    with pytest.raises(GolayZczError):
        verify_golay_zcz([pair1.a, pair1.b], 0)


def test_summary_lines(code4):
    report = verify_golay_zcz(build_theorem2_set(code4), 12)
    lines = report.summary()
    assert "  Zmin: 12" in lines
    assert "  optimality factor: 3/4" in lines
    assert lines[-1] == "  claimed Z=12: PASS"


# ------------------------------------------------------------------
# Optimality
# ------------------------------------------------------------------

def test_tang_fan_bound():
    assert tang_fan_bound(64, 4) == 16
    assert tang_fan_bound(40, 2, "binary") == 10


def test_four_block_pairs_are_optimal(pair1, mate1):
    p, q = build_theorem1_pair(pair1, mate1, SignQuadruple(1, 1, 1, -1))
    report = measure_golay_zcz([p, q])
    assert report.alphabet == "binary"
    assert optimality_factor(report, "binary") == 1
    assert not report.exceeds_binary_bound


def test_optimality_grows_with_set_size(pair1, mate1, code4):
    two = measure_golay_zcz(build_theorem2_set(gcp_to_ccc(pair1, mate1)))
    four = measure_golay_zcz(build_theorem2_set(code4))
    c2 = optimality_factor(two, "polyphase")
    c4 = optimality_factor(four, "polyphase")
    assert c2 == Fraction(1, 2)
    assert c4 == Fraction(3, 4)
    assert c2 < c4


def test_single_sequence_factor():
    report = measure_golay_zcz([PhaseSequence.from_values([1, 1, 1, -1], 2)])
    assert report.set_size == 1
    assert report.z_min == 3
    assert optimality_factor(report, "polyphase") == Fraction(report.z_min, 4)

"""
Tests for the sequence/code file formats and correlation CSV export
"""
import pytest

from golay_zcz.correlation import aacf, accf, pacf
from golay_zcz.errors import FileFormatError
from golay_zcz.fileio import (
    CSV_HEADER,
    parse_code,
    parse_sequence_set,
    profile_to_csv,
    read_code,
    read_sequence_set,
    serialize_code,
    serialize_sequence_set,
    write_code,
    write_profile_csv,
    write_sequence_set,
)
from golay_zcz.seeds import seed_registry
from golay_zcz.seqcore import ComplementarySet, PhaseSequence


# ------------------------------------------------------------------
# Fixtures on disk
# ------------------------------------------------------------------

def test_read_printed_pairs(fixtures_dir, pair1, pair2):
    first = read_sequence_set(fixtures_dir / "example1_gcp.txt")
    assert first.rows == (pair1.a, pair1.b)
    second = read_sequence_set(fixtures_dir / "example2_gcp.txt")
    assert second.modulus == 4
    assert second.rows == (pair2.a, pair2.b)


@pytest.mark.parametrize("name, seed", [
    ("example3_ccc.txt", "example3-N4"),
    ("table3_N3.txt", "table3-N3"),
    ("table3_N5.txt", "table3-N5"),
    ("table3_N7.txt", "table3-N7"),
    ("table3_N11.txt", "table3-N11"),
    ("table3_N13.txt", "table3-N13"),
])
def test_code_fixtures_match_registry(fixtures_dir, name, seed):
    assert read_code(fixtures_dir / name) == seed_registry(seed)


@pytest.mark.parametrize("name, seed", [
    ("example3_ccc.txt", "example3-N4"),
    ("table3_N3.txt", "table3-N3"),
])
def test_fixture_body_is_writer_output(fixtures_dir, name, seed):
    text = (fixtures_dir / name).read_text(encoding="utf-8")
    body = "".join(line for line in text.splitlines(keepends=True) if not line.startswith("#"))
    assert body == serialize_code(seed_registry(seed))


def test_missing_file(tmp_path):
    with pytest.raises(FileFormatError, match="cannot read"):
        read_code(tmp_path / "absent.txt")


# ------------------------------------------------------------------
# Writing
# ------------------------------------------------------------------

def test_code_file_layout(code4):
    text = serialize_code(code4)
    lines = text.splitlines()
    assert lines[:6] == ["GZCZ 1", "q 2", "M 4", "N 4", "SET 0", "0 0 0 0"]
    assert lines.count("SET 3") == 1
    assert parse_code(text) == code4


def test_write_and_read_back(tmp_path, pair2, code4):
    set_path = tmp_path / "pair.txt"
    write_sequence_set(set_path, pair2.as_set())
    assert read_sequence_set(set_path) == pair2.as_set()

    code_path = tmp_path / "code.txt"
    write_code(code_path, code4)
    assert read_code(code_path) == code4


def test_raw_complex_rows_survive():
    row = PhaseSequence(0, (1 + 0j, -1j, complex(0.6, 0.8)))
    text = serialize_sequence_set(ComplementarySet((row,)))
    assert "q 0" in text
    assert "0.6,0.8" in text
    assert parse_sequence_set(text).rows == (row,)


def test_comments_and_blank_lines_ignored():
    text = "# header comment\n\nGZCZ 1\nq 2\n# rows follow\nM 1\nN 3\n\n0 1 1\n"
    assert parse_sequence_set(text).rows[0].entries == (0, 1, 1)


# ------------------------------------------------------------------
# Malformed input
# ------------------------------------------------------------------

@pytest.mark.parametrize("text, message", [
    ("GZCZ 2\nq 2\nM 1\nN 1\n0\n", "header"),
    ("GZCZ 1\nq 2\nM 2\nN 2\n0 1\n", "expected 2 rows"),
    ("GZCZ 1\nq 2\nM 1\nN 2\n0 2\n", "line 5"),
    ("GZCZ 1\nq 2\nM 1\nN 2\n0\n", "expected 2 entries"),
    ("GZCZ 1\nq 2\nM 1\nN 2\n0 x\n", "malformed"),
    ("GZCZ 1\nq two\nM 1\nN 2\n0 1\n", "'q' must be an integer"),
    ("GZCZ 1\nq 2\nN 2\nM 1\n0 1\n", "expected 'M <value>'"),
])
def test_bad_sequence_files(text, message):
    with pytest.raises(FileFormatError, match=message):
        parse_sequence_set(text)


def test_bad_code_files(pair1, code4):
    with pytest.raises(FileFormatError, match="expected SET blocks"):
        parse_code(serialize_sequence_set(pair1.as_set()))
    with pytest.raises(FileFormatError, match="expected a sequence set"):
        parse_sequence_set(serialize_code(code4))

    text = serialize_code(code4).replace("SET 2", "SET 7")
    with pytest.raises(FileFormatError, match="expected 'SET 2'"):
        parse_code(text)

    short = "\n".join(serialize_code(code4).splitlines()[:-1]) + "\n"
    with pytest.raises(FileFormatError, match="needs 4 rows"):
        parse_code(short)


# ------------------------------------------------------------------
# Correlation CSV
# ------------------------------------------------------------------

def test_exact_csv(pair1):
    lines = profile_to_csv(aacf(pair1.a)).splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 19
    assert lines[10] == "0,10,0,10"
    assert lines[19] == "9,-1,0,1"


def test_exact_csv_irrational_magnitude():
    a = PhaseSequence(4, (0, 0))
    b = PhaseSequence(4, (0, 1))
    line = profile_to_csv(accf(a, b)).splitlines()[2]
    assert line.startswith("0,1,")
    assert line.endswith(",1.414213562373")


def test_float_csv():
    lines = profile_to_csv(pacf(PhaseSequence(8, (0, 1)))).splitlines()
    assert lines[1] == "0,2.000000000000,0.000000000000,2.000000000000"
    assert len(lines) == 3


def test_write_profile_csv(tmp_path, pair1):
    path = tmp_path / "aacf.csv"
    write_profile_csv(path, pacf(pair1.a))
    assert path.read_text(encoding="utf-8").splitlines()[1] == "0,10,0,10"

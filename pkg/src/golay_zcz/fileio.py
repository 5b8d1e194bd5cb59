"""
Text file formats for sequence sets and codes, and correlation CSV export.

    GZCZ 1
    q <modulus>
    M <rows>
    N <length>
    <row> ...              (sequence set)
    SET 0 / <rows> ...     (code: one block per set)

Rows hold space-separated phase exponents, or space-separated "re,im" tokens
when q = 0. Writers emit exactly this layout, header first. Readers accept a
superset: blank lines and whole lines starting with '#' may appear anywhere,
so annotated files load unchanged.
"""

import math
from pathlib import Path
from typing import List, Tuple, Union

from .correlation import CorrelationProfile
from .errors import FileFormatError, GolayZczError
from .seqcore import ComplementarySet, CompleteComplementaryCode, PhaseSequence

MAGIC = "GZCZ 1"
CSV_HEADER = "tau,real,imag,magnitude"

PathLike = Union[str, Path]


# --------------------------------------------------
# Parsing
# --------------------------------------------------

def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((number, line))
    return lines


def _header_value(lines: List[Tuple[int, str]], index: int, key: str) -> int:
    if index >= len(lines):
        raise FileFormatError(f"missing '{key}' header line")
    number, line = lines[index]
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise FileFormatError(f"line {number}: expected '{key} <value>', got {line!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise FileFormatError(f"line {number}: '{key}' must be an integer") from None


def _parse_row(number: int, line: str, modulus: int, length: int) -> PhaseSequence:
    tokens = line.split()
    if len(tokens) != length:
        raise FileFormatError(f"line {number}: expected {length} entries, found {len(tokens)}")
    try:
        if modulus == 0:
            entries = []
            for tok in tokens:
                re, im = tok.split(",")
                entries.append(complex(float(re), float(im)))
        else:
            entries = [int(tok) for tok in tokens]
    except ValueError:
        raise FileFormatError(f"line {number}: malformed entry in {line!r}") from None
    try:
        return PhaseSequence(modulus, tuple(entries))
    except GolayZczError as e:
        raise FileFormatError(f"line {number}: {e}") from None


def _parse_header(text: str) -> Tuple[int, int, int, List[Tuple[int, str]]]:
    lines = _content_lines(text)
    if not lines or lines[0][1] != MAGIC:
        raise FileFormatError(f"missing '{MAGIC}' header")
    q = _header_value(lines, 1, "q")
    m = _header_value(lines, 2, "M")
    n = _header_value(lines, 3, "N")
    if q < 0 or m < 1 or n < 1:
        raise FileFormatError(f"invalid header values q={q} M={m} N={n}")
    return q, m, n, lines[4:]


def parse_sequence_set(text: str) -> ComplementarySet:
    q, m, n, body = _parse_header(text)
    if body and body[0][1].startswith("SET"):
        raise FileFormatError("file holds a code, expected a sequence set")
    if len(body) != m:
        raise FileFormatError(f"expected {m} rows, found {len(body)}")
    return ComplementarySet(tuple(_parse_row(num, line, q, n) for num, line in body))


def parse_code(text: str) -> CompleteComplementaryCode:
    q, m, n, body = _parse_header(text)
    if not body or not body[0][1].startswith("SET"):
        raise FileFormatError("file holds a sequence set, expected SET blocks")

    sets = []
    index = 0
    while index < len(body):
        number, line = body[index]
        parts = line.split()
        if len(parts) != 2 or parts[0] != "SET" or parts[1] != str(len(sets)):
            raise FileFormatError(f"line {number}: expected 'SET {len(sets)}', got {line!r}")
        rows = body[index + 1:index + 1 + m]
        if len(rows) != m or any(r[1].startswith("SET") for r in rows):
            raise FileFormatError(f"line {number}: SET {len(sets)} needs {m} rows")
        sets.append(ComplementarySet(tuple(_parse_row(num, row, q, n) for num, row in rows)))
        index += m + 1
    return CompleteComplementaryCode(tuple(sets))


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FileFormatError(f"cannot read {path}: {e.strerror}") from None


def read_sequence_set(path: PathLike) -> ComplementarySet:
    return parse_sequence_set(_read(path))


def read_code(path: PathLike) -> CompleteComplementaryCode:
    return parse_code(_read(path))


# --------------------------------------------------
# Serialization
# --------------------------------------------------

def _format_row(row: PhaseSequence) -> str:
    if row.modulus == 0:
        return " ".join(f"{v.real!r},{v.imag!r}" for v in row.entries)
    return " ".join(str(e) for e in row.entries)


def _header(modulus: int, rows: int, length: int) -> List[str]:
    return [MAGIC, f"q {modulus}", f"M {rows}", f"N {length}"]


def serialize_sequence_set(cs: ComplementarySet) -> str:
    lines = _header(cs.modulus, cs.set_size, cs.length)
    lines.extend(_format_row(r) for r in cs.rows)
    return "\n".join(lines) + "\n"


def serialize_code(code: CompleteComplementaryCode) -> str:
    lines = _header(code.modulus, code.rows_per_set, code.length)
    for k, s in enumerate(code.sets):
        lines.append(f"SET {k}")
        lines.extend(_format_row(r) for r in s.rows)
    return "\n".join(lines) + "\n"


def write_sequence_set(path: PathLike, cs: ComplementarySet) -> None:
    Path(path).write_text(serialize_sequence_set(cs), encoding="utf-8")


def write_code(path: PathLike, code: CompleteComplementaryCode) -> None:
    Path(path).write_text(serialize_code(code), encoding="utf-8")


# --------------------------------------------------
# Correlation CSV
# --------------------------------------------------

def _exact_magnitude(re: int, im: int) -> str:
    energy = re * re + im * im
    root = math.isqrt(energy)
    if root * root == energy:
        return str(root)
    return f"{math.sqrt(energy):.12f}"


def profile_to_csv(profile: CorrelationProfile) -> str:
    """One row per shift: exact integers on the exact path, 12 decimals otherwise."""
    lines = [CSV_HEADER]
    for tau, v in profile.items():
        if v.exact:
            re, im = int(v.real), int(v.imag)
            lines.append(f"{tau},{re},{im},{_exact_magnitude(re, im)}")
        else:
            lines.append(f"{tau},{v.real:.12f},{v.imag:.12f},{v.magnitude:.12f}")
    return "\n".join(lines) + "\n"


def write_profile_csv(path: PathLike, profile: CorrelationProfile) -> None:
    Path(path).write_text(profile_to_csv(profile), encoding="utf-8")

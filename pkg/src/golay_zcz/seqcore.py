"""
Core sequence types - phase sequences, complementary sets and complete
complementary codes, plus the elementary sequence transforms
"""

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    GolayZczError,
    LengthMismatchError,
    ModulusMismatchError,
    OddModulusError,
    ShapeError,
)

# Moduli whose roots of unity are Gaussian integers (1, i, -1, -i)
GAUSSIAN_MODULI = (1, 2, 4)

UNIT_TOLERANCE = 1e-12

# Quarter-turn tables for the Gaussian-integer path
_QUARTER_RE = np.array([1, 0, -1, 0], dtype=np.int64)
_QUARTER_IM = np.array([0, 1, 0, -1], dtype=np.int64)

Number = Union[int, float]


@dataclass(frozen=True, eq=False)
class ComplexValue:
    """
    A correlation value. Exact values hold Python ints (Gaussian integers)
    and compare without tolerance; inexact values hold floats.
    """
    real: Number
    imag: Number = 0
    exact: bool = True

    def __complex__(self) -> complex:
        return complex(self.real, self.imag)

    @property
    def magnitude(self) -> float:
        return math.hypot(self.real, self.imag)

    def conjugate(self) -> "ComplexValue":
        return ComplexValue(self.real, -self.imag, self.exact)

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.exact:
            return self.real == 0 and self.imag == 0
        return self.magnitude <= tol

    def __add__(self, other: "ComplexValue") -> "ComplexValue":
        if not isinstance(other, ComplexValue):
            return NotImplemented
        return ComplexValue(self.real + other.real, self.imag + other.imag,
                            self.exact and other.exact)

    def __sub__(self, other: "ComplexValue") -> "ComplexValue":
        if not isinstance(other, ComplexValue):
            return NotImplemented
        return ComplexValue(self.real - other.real, self.imag - other.imag,
                            self.exact and other.exact)

    def __mul__(self, other: "ComplexValue") -> "ComplexValue":
        if not isinstance(other, ComplexValue):
            return NotImplemented
        return ComplexValue(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
            self.exact and other.exact,
        )

    def __neg__(self) -> "ComplexValue":
        return ComplexValue(-self.real, -self.imag, self.exact)

    def __eq__(self, other) -> bool:
        if isinstance(other, ComplexValue):
            return self.real == other.real and self.imag == other.imag
        if isinstance(other, (int, float, complex, np.number)):
            return complex(self) == complex(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(complex(self))

    def __repr__(self) -> str:
        if self.imag == 0:
            return repr(self.real)
        return repr(complex(self))


ZERO = ComplexValue(0, 0, True)


@dataclass(frozen=True)
class PhaseSequence:
    """
    A length-N sequence of q-th roots of unity stored as phase exponents.

    modulus q >= 1: entries are exponents e in [0, q), value exp(2*pi*i*e/q)
    modulus q == 0: entries are raw unimodular complex numbers
    """
    modulus: int
    entries: Tuple

    def __post_init__(self):
        if isinstance(self.modulus, bool) or int(self.modulus) != self.modulus or self.modulus < 0:
            raise GolayZczError(f"Modulus must be a non-negative integer, got {self.modulus!r}")
        object.__setattr__(self, "modulus", int(self.modulus))

        entries = tuple(self.entries)
        if not entries:
            raise GolayZczError("A sequence needs at least one entry")

        if self.modulus >= 1:
            normalized = []
            for e in entries:
                if int(e) != e:
                    raise GolayZczError(f"Phase exponent {e!r} is not an integer")
                e = int(e)
                if not 0 <= e < self.modulus:
                    raise GolayZczError(
                        f"Phase exponent {e} outside [0, {self.modulus})"
                    )
                normalized.append(e)
            entries = tuple(normalized)
        else:
            entries = tuple(complex(v) for v in entries)
            for v in entries:
                if abs(abs(v) - 1.0) > UNIT_TOLERANCE:
                    raise GolayZczError(f"Entry {v} is not unimodular")

        object.__setattr__(self, "entries", entries)

    # --------------------------------------------------
    # Constructors
    # --------------------------------------------------
    @classmethod
    def from_bits(cls, bits: str) -> "PhaseSequence":
        """Binary sequence from a string of (-1)-exponents, e.g. '0010'."""
        return cls(2, tuple(int(ch) for ch in bits.strip()))

    @classmethod
    def from_values(cls, values: Iterable[complex], modulus: Optional[int] = None) -> "PhaseSequence":
        """
        Build from complex values. Without a modulus the smallest of
        binary/quadriphase that fits is chosen, else raw complex (q = 0).
        """
        values = [complex(v) for v in values]
        candidates = [modulus] if modulus is not None else [2, 4]
        for q in candidates:
            if q == 0:
                return cls(0, tuple(values))
            exponents = _to_exponents(values, q)
            if exponents is not None:
                return cls(q, exponents)
        if modulus is not None:
            raise GolayZczError(f"Values are not {modulus}-th roots of unity")
        return cls(0, tuple(values))

    # --------------------------------------------------
    # Views
    # --------------------------------------------------
    @property
    def length(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def exact(self) -> bool:
        return self.modulus in GAUSSIAN_MODULI

    def to_complex(self) -> np.ndarray:
        if self.modulus == 0:
            return np.array(self.entries, dtype=np.complex128)
        if self.exact:
            re, im = self.parts()
            return re + 1j * im
        exps = np.array(self.entries, dtype=np.float64)
        return np.exp(2j * np.pi * exps / self.modulus)

    def values(self) -> List[complex]:
        if self.exact:
            re, im = self.parts()
            return [complex(int(r), int(i)) for r, i in zip(re, im)]
        return list(self.to_complex())

    def parts(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        (real, imag) arrays: int64 on the Gaussian-integer path, float64
        otherwise.
        """
        if self.exact:
            quarters = np.array(self.entries, dtype=np.int64) * (4 // self.modulus)
            return _QUARTER_RE[quarters], _QUARTER_IM[quarters]
        values = self.to_complex()
        return values.real.copy(), values.imag.copy()

    # --------------------------------------------------
    # Alphabet changes
    # --------------------------------------------------
    def lift(self, modulus: int) -> "PhaseSequence":
        """Re-express over a modulus that is a multiple of the current one."""
        if modulus == self.modulus:
            return self
        if modulus == 0:
            return PhaseSequence(0, tuple(self.to_complex()))
        if self.modulus == 0 or modulus % self.modulus != 0:
            raise ModulusMismatchError(
                f"Cannot lift modulus {self.modulus} to {modulus}"
            )
        factor = modulus // self.modulus
        return PhaseSequence(modulus, tuple(e * factor for e in self.entries))

    def rotate(self, k: int) -> "PhaseSequence":
        """Multiply every entry by omega_q^k."""
        if self.modulus == 0:
            raise ModulusMismatchError("rotate needs a finite modulus; use times_root")
        return self.times_root(k, self.modulus)

    def times_root(self, k: int, order: int) -> "PhaseSequence":
        """Multiply every entry by exp(2*pi*i*k/order)."""
        if self.modulus == 0:
            w = cmath.exp(2j * math.pi * k / order)
            return PhaseSequence(0, tuple(v * w for v in self.entries))
        if self.modulus % order != 0:
            raise ModulusMismatchError(
                f"An order-{order} root is not a {self.modulus}-th root of unity"
            )
        shift = (k * (self.modulus // order)) % self.modulus
        return PhaseSequence(self.modulus, tuple((e + shift) % self.modulus for e in self.entries))

    def __repr__(self) -> str:
        body = " ".join(str(e) for e in self.entries) if self.modulus else ", ".join(
            f"{v:.4g}" for v in self.entries)
        return f"PhaseSequence(q={self.modulus}, [{body}])"


def _to_exponents(values: Sequence[complex], q: int) -> Optional[Tuple[int, ...]]:
    exponents = []
    for v in values:
        if abs(abs(v) - 1.0) > 1e-9:
            return None
        e = round(cmath.phase(v) * q / (2 * math.pi)) % q
        if abs(cmath.exp(2j * math.pi * e / q) - v) > 1e-9:
            return None
        exponents.append(e)
    return tuple(exponents)


# ==================================================
# ELEMENTARY TRANSFORMS
# ==================================================

def reverse(s: PhaseSequence) -> PhaseSequence:
    return PhaseSequence(s.modulus, s.entries[::-1])


def conjugate(s: PhaseSequence) -> PhaseSequence:
    if s.modulus == 0:
        return PhaseSequence(0, tuple(v.conjugate() for v in s.entries))
    q = s.modulus
    return PhaseSequence(q, tuple((q - e) % q for e in s.entries))


def negate(s: PhaseSequence) -> PhaseSequence:
    if s.modulus == 0:
        return PhaseSequence(0, tuple(-v for v in s.entries))
    q = s.modulus
    if q % 2:
        raise OddModulusError(f"-1 is not a {q}-th root of unity")
    half = q // 2
    return PhaseSequence(q, tuple((e + half) % q for e in s.entries))


def signed(s: PhaseSequence, sign: int) -> PhaseSequence:
    """Multiply by +1 or -1."""
    if sign == 1:
        return s
    if sign == -1:
        return negate(s)
    raise GolayZczError(f"Sign must be +1 or -1, got {sign}")


def concat(parts: Sequence[PhaseSequence]) -> PhaseSequence:
    parts = list(parts)
    if not parts:
        raise GolayZczError("Nothing to concatenate")
    q = parts[0].modulus
    for p in parts[1:]:
        if p.modulus != q:
            raise ModulusMismatchError(
                f"Cannot concatenate moduli {q} and {p.modulus}"
            )
    entries: List = []
    for p in parts:
        entries.extend(p.entries)
    return PhaseSequence(q, tuple(entries))


def common_modulus(q1: int, q2: int) -> int:
    """Modulus of a product of a q1-th and a q2-th root (0 = raw complex)."""
    if q1 == 0 or q2 == 0:
        return 0
    return math.lcm(q1, q2)


def kronecker(x: PhaseSequence, y: PhaseSequence) -> PhaseSequence:
    """output[k1*N2 + k2] = x[k1] * y[k2]"""
    q = common_modulus(x.modulus, y.modulus)
    if q == 0:
        xs, ys = x.to_complex(), y.to_complex()
        return PhaseSequence(0, tuple(np.outer(xs, ys).ravel()))
    xl, yl = x.lift(q), y.lift(q)
    return PhaseSequence(q, tuple((ex + ey) % q for ex in xl.entries for ey in yl.entries))


# ==================================================
# SETS AND CODES
# ==================================================

@dataclass(frozen=True)
class ComplementarySet:
    """An ordered M x N set of sequences sharing length and modulus"""
    rows: Tuple[PhaseSequence, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if not rows:
            raise ShapeError("A set needs at least one row")
        n, q = rows[0].length, rows[0].modulus
        for r in rows[1:]:
            if r.length != n:
                raise LengthMismatchError(f"Row lengths differ: {n} vs {r.length}")
            if r.modulus != q:
                raise ModulusMismatchError(f"Row moduli differ: {q} vs {r.modulus}")
        object.__setattr__(self, "rows", rows)

    @property
    def set_size(self) -> int:
        return len(self.rows)

    @property
    def length(self) -> int:
        return self.rows[0].length

    @property
    def modulus(self) -> int:
        return self.rows[0].modulus

    def is_complementary(self) -> bool:
        from .correlation import aacs_sum, is_zero_off_peak
        return is_zero_off_peak(aacs_sum(self))

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class CompleteComplementaryCode:
    """
    An ordered list of complementary sets C^0..C^{K-1}; a CCC proper is square
    (K sets of K rows), which verify_ccc checks.
    """
    sets: Tuple[ComplementarySet, ...]

    def __post_init__(self):
        sets = tuple(self.sets)
        if not sets:
            raise ShapeError("A code needs at least one set")
        first = sets[0]
        for s in sets[1:]:
            if s.set_size != first.set_size:
                raise ShapeError("Sets disagree in number of rows")
            if s.length != first.length:
                raise ShapeError("Sets disagree in sequence length")
            if s.modulus != first.modulus:
                raise ShapeError("Sets disagree in modulus")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[PhaseSequence]]) -> "CompleteComplementaryCode":
        return cls(tuple(ComplementarySet(tuple(r)) for r in rows))

    @property
    def set_size(self) -> int:
        return len(self.sets)

    @property
    def rows_per_set(self) -> int:
        return self.sets[0].set_size

    @property
    def is_square(self) -> bool:
        return self.set_size == self.rows_per_set

    @property
    def length(self) -> int:
        return self.sets[0].length

    @property
    def modulus(self) -> int:
        return self.sets[0].modulus

    @property
    def shape(self) -> Tuple[int, int, int]:
        return (self.set_size, self.rows_per_set, self.length)

    def row(self, k: int, m: int) -> PhaseSequence:
        """c^k_m: row m of set k."""
        return self.sets[k].rows[m]

    def flattened_sets(self) -> Tuple[PhaseSequence, ...]:
        """Row i is the rows of C^i appended to one another."""
        return tuple(concat(s.rows) for s in self.sets)

    def __len__(self) -> int:
        return len(self.sets)

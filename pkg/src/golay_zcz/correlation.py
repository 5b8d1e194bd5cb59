"""
Periodic and aperiodic correlation engine.

Binary and quadriphase inputs (modulus 1, 2 or 4) are correlated on int64
real/imaginary parts so every value is an exact Gaussian integer. Any other
modulus, and raw complex input, goes through float64 with a zero threshold of
``float_eps * N``.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .config import get_settings
from .errors import GolayZczError, LengthMismatchError, ModulusMismatchError, SetSizeMismatchError
from .seqcore import ZERO, ComplementarySet, ComplexValue, PhaseSequence, kronecker

__all__ = [
    "CorrelationProfile",
    "pccf",
    "accf",
    "pacf",
    "aacf",
    "aacs_sum",
    "cross_sum",
    "periodic_from_aperiodic",
    "is_zero_off_peak",
    "profiles_equal",
    "kronecker_correlation",
    "kronecker_identity_holds",
    "sum_profiles",
]


@dataclass(frozen=True)
class CorrelationProfile:
    """
    Correlation values indexed by shift.

    Periodic profiles hold tau = 0..N-1; aperiodic profiles hold
    tau = -(N-1)..N-1, stored at index tau + N - 1.
    """
    values: Tuple[ComplexValue, ...]
    length: int
    periodic: bool
    exact: bool

    @property
    def shifts(self) -> range:
        if self.periodic:
            return range(0, self.length)
        return range(-(self.length - 1), self.length)

    @property
    def tolerance(self) -> float:
        if self.exact:
            return 0.0
        return get_settings().float_eps * self.length

    def at(self, tau: int) -> ComplexValue:
        """
        Value at shift tau. Periodic shifts wrap (R(-tau) = R(N-tau));
        aperiodic shifts beyond N-1 in magnitude are zero.
        """
        if self.periodic:
            return self.values[tau % self.length]
        if abs(tau) > self.length - 1:
            return ZERO
        return self.values[tau + self.length - 1]

    __getitem__ = at

    def is_zero_at(self, tau: int) -> bool:
        return self.at(tau).is_zero(self.tolerance)

    def items(self) -> List[Tuple[int, ComplexValue]]:
        return [(tau, self.at(tau)) for tau in self.shifts]

    def as_list(self) -> list:
        """Plain Python numbers, ints where the value is a real Gaussian integer."""
        out = []
        for v in self.values:
            if v.exact and v.imag == 0:
                out.append(int(v.real))
            else:
                out.append(complex(v))
        return out

    def __add__(self, other: "CorrelationProfile") -> "CorrelationProfile":
        if not isinstance(other, CorrelationProfile):
            return NotImplemented
        if other.length != self.length or other.periodic != self.periodic:
            raise LengthMismatchError("Cannot add profiles of different shape")
        return CorrelationProfile(
            tuple(x + y for x, y in zip(self.values, other.values)),
            self.length,
            self.periodic,
            self.exact and other.exact,
        )

    def __len__(self) -> int:
        return len(self.values)


# --------------------------------------------------
# Internal helpers
# --------------------------------------------------

def _check_pair(a: PhaseSequence, b: PhaseSequence) -> None:
    if a.length != b.length:
        raise LengthMismatchError(f"Sequence lengths differ: {a.length} vs {b.length}")
    if a.modulus != b.modulus:
        raise ModulusMismatchError(f"Sequence moduli differ: {a.modulus} vs {b.modulus}")


def _to_values(re: np.ndarray, im: np.ndarray, exact: bool) -> Tuple[ComplexValue, ...]:
    if exact:
        return tuple(ComplexValue(int(r), int(i), True) for r, i in zip(re, im))
    return tuple(ComplexValue(float(r), float(i), False) for r, i in zip(re, im))


def _correlate(a_parts, b_parts, mode_b, mode: str):
    """
    Real/imag parts of sum_k a_k * conj(b_{k+tau}), built from np.correlate,
    which computes out[tau] = sum_n x_{n+tau} * y_n on real arrays.
    """
    ar, ai = a_parts
    br, bi = mode_b(b_parts[0]), mode_b(b_parts[1])
    re = np.correlate(br, ar, mode) + np.correlate(bi, ai, mode)
    im = np.correlate(br, ai, mode) - np.correlate(bi, ar, mode)
    return re, im


def _wrap(x: np.ndarray) -> np.ndarray:
    return np.concatenate((x, x[:-1]))


def _identity(x: np.ndarray) -> np.ndarray:
    return x


# ==================================================
# CORRELATION FUNCTIONS
# ==================================================

def pccf(a: PhaseSequence, b: PhaseSequence) -> CorrelationProfile:
    """
    Periodic cross-correlation R_{a,b}(tau) = sum_k a_k conj(b_{(k+tau) mod N})
    for tau = 0..N-1.
    """
    _check_pair(a, b)
    exact = a.exact
    re, im = _correlate(a.parts(), b.parts(), _wrap, "valid")
    return CorrelationProfile(_to_values(re, im, exact), a.length, True, exact)


def accf(a: PhaseSequence, b: PhaseSequence) -> CorrelationProfile:
    """
    Aperiodic cross-correlation C_{a,b}(tau) for tau = -(N-1)..N-1.

    For tau >= 0 it is sum_{k=0}^{N-1-tau} a_k conj(b_{k+tau}); for tau < 0,
    sum_{k=0}^{N-1+tau} a_{k-tau} conj(b_k).
    """
    _check_pair(a, b)
    exact = a.exact
    re, im = _correlate(a.parts(), b.parts(), _identity, "full")
    return CorrelationProfile(_to_values(re, im, exact), a.length, False, exact)


def pacf(a: PhaseSequence) -> CorrelationProfile:
    return pccf(a, a)


def aacf(a: PhaseSequence) -> CorrelationProfile:
    return accf(a, a)


def aacs_sum(cs: ComplementarySet) -> CorrelationProfile:
    """Shift-wise sum of the rows' aperiodic autocorrelations."""
    total = aacf(cs.rows[0])
    for row in cs.rows[1:]:
        total = total + aacf(row)
    return total


def cross_sum(first: ComplementarySet, second: ComplementarySet) -> CorrelationProfile:
    """sum_m C_{first_m, second_m}(tau), the CCC cross-sum."""
    if first.set_size != second.set_size:
        raise SetSizeMismatchError(
            f"Set sizes differ: {first.set_size} vs {second.set_size}"
        )
    total = accf(first.rows[0], second.rows[0])
    for x, y in zip(first.rows[1:], second.rows[1:]):
        total = total + accf(x, y)
    return total


def periodic_from_aperiodic(profile: CorrelationProfile) -> CorrelationProfile:
    """R(tau) = C(tau) + C(tau - N), valid for auto and cross profiles."""
    if profile.periodic:
        raise GolayZczError("Expected an aperiodic profile")
    n = profile.length
    values = tuple(profile.at(tau) + profile.at(tau - n) for tau in range(n))
    return CorrelationProfile(values, n, True, profile.exact)


def is_zero_off_peak(profile: CorrelationProfile) -> bool:
    return all(profile.is_zero_at(tau) for tau in profile.shifts if tau != 0)


def profiles_equal(p1: CorrelationProfile, p2: CorrelationProfile,
                   tol: Optional[float] = None) -> bool:
    """Exact comparison when both profiles are exact, else within tol."""
    if p1.length != p2.length or p1.periodic != p2.periodic:
        return False
    if p1.exact and p2.exact and tol is None:
        return all(x == y for x, y in zip(p1.values, p2.values))
    if tol is None:
        tol = max(p1.tolerance, p2.tolerance)
    return all((x - y).magnitude <= tol for x, y in zip(p1.values, p2.values))


# --------------------------------------------------
# Kronecker correlation identity
# --------------------------------------------------

def kronecker_correlation(x1: PhaseSequence, y1: PhaseSequence,
                          x2: PhaseSequence, y2: PhaseSequence) -> CorrelationProfile:
    """
    Aperiodic correlation of x1 (x) y1 with x2 (x) y2 predicted from the
    factors: with tau = k1*N2 + k2 and 0 <= k2 < N2,
    C(tau) = Cx(k1) Cy(k2) + Cx(k1 + 1) Cy(k2 - N2).
    """
    cx = accf(x1, x2)
    cy = accf(y1, y2)
    n2 = y1.length
    n = x1.length * n2
    values = []
    for tau in range(-(n - 1), n):
        k1, k2 = divmod(tau, n2)
        values.append(cx.at(k1) * cy.at(k2) + cx.at(k1 + 1) * cy.at(k2 - n2))
    return CorrelationProfile(tuple(values), n, False, cx.exact and cy.exact)


def kronecker_identity_holds(x1: PhaseSequence, y1: PhaseSequence,
                             x2: PhaseSequence, y2: PhaseSequence) -> bool:
    direct = accf(kronecker(x1, y1), kronecker(x2, y2))
    predicted = kronecker_correlation(x1, y1, x2, y2)
    if direct.exact and predicted.exact:
        return profiles_equal(direct, predicted)
    return profiles_equal(direct, predicted, tol=direct.tolerance)


def sum_profiles(profiles: Sequence[CorrelationProfile]) -> CorrelationProfile:
    profiles = list(profiles)
    total = profiles[0]
    for p in profiles[1:]:
        total = total + p
    return total

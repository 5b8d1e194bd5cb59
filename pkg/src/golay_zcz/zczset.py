"""
Golay-ZCZ sequence sets: the IDFT-weighted construction from a CCC,
ZCZ-width measurement and the optimality calculus
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, List, Optional, Sequence

import numpy as np

from .ccc import verify_ccc
from .config import get_settings
from .correlation import CorrelationProfile, aacf, is_zero_off_peak, pacf, pccf, sum_profiles
from .errors import GolayZczError, InvalidCccError, LengthMismatchError
from .logger import setup_logger
from .models import Alphabet, ZczReport
from .seqcore import CompleteComplementaryCode, PhaseSequence, common_modulus, concat

logger = setup_logger(__name__)


@dataclass(frozen=True)
class IdftMatrix:
    """
    Unnormalized M x M IDFT matrix, f[i, j] = w^(i*j) with
    w = exp(2*pi*sqrt(-1)/M), held in exponent form.
    """
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise GolayZczError(f"IDFT order must be positive, got {self.order}")

    def phase(self, i: int, j: int) -> int:
        return (i * j) % self.order

    def entry(self, i: int, j: int) -> complex:
        return complex(np.exp(2j * np.pi * self.phase(i, j) / self.order))

    def as_array(self) -> np.ndarray:
        idx = np.arange(self.order)
        return np.exp(2j * np.pi * np.outer(idx, idx) / self.order)


def idft_matrix(order: int) -> IdftMatrix:
    return IdftMatrix(order)


def build_theorem2_set(code: CompleteComplementaryCode) -> List[PhaseSequence]:
    """
    Build M sequences of length M*M*N from an (M,M,N) CCC.

    Sequence k is the row-major flattening of the M x MN block matrix whose
    (i, j) block is f[i, j] * c^j_k. The output modulus is lcm(q, M).

    Raises:
        InvalidCccError: the input is not a CCC
    """
    if not code.is_square or not verify_ccc(code):
        raise InvalidCccError("input is not a valid complete complementary code")

    m = code.set_size
    target = common_modulus(code.modulus, m)
    f = idft_matrix(m)

    sequences = []
    for k in range(m):
        blocks = []
        for i in range(m):
            for j in range(m):
                blocks.append(code.row(j, k).lift(target).times_root(f.phase(i, j), m))
        sequences.append(concat(blocks))

    logger.info(f"Built {m} sequences of length {sequences[0].length} from a {code.shape} code")
    return sequences


# ==================================================
# MEASUREMENT
# ==================================================

def _zone_width(profile: CorrelationProfile, start: int) -> int:
    """
    Largest Z with the periodic profile zero for start <= |tau| <= Z,
    capped at L - 1. A nonzero at tau = 0 with start = 0 gives 0.
    """
    n = profile.length
    if start == 0 and not profile.is_zero_at(0):
        return 0
    width = n - 1
    for t in range(1, n):
        if not profile.is_zero_at(t):
            width = min(width, min(t, n - t) - 1)
    return width


def _parallel(fn: Callable, items: Sequence) -> list:
    threads = get_settings().threads
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(fn, items))
    return [fn(item) for item in items]


def infer_alphabet(sequences: Sequence[PhaseSequence]) -> Alphabet:
    return "binary" if sequences[0].modulus in (1, 2) else "polyphase"


def tang_fan_bound(length: int, set_size: int, alphabet: Alphabet = "polyphase") -> int:
    """Optimal ZCZ width: floor(L/M) polyphase, floor(L/(2M)) binary."""
    if alphabet == "binary":
        return length // (2 * set_size)
    return length // set_size


def _factor(z_min: int, length: int, set_size: int, alphabet: Alphabet) -> Fraction:
    z_opti = tang_fan_bound(length, set_size, alphabet)
    if z_opti == 0:
        return Fraction(0)
    return Fraction(z_min, z_opti)


def measure_golay_zcz(sequences: Sequence[PhaseSequence],
                      alphabet: Optional[Alphabet] = None) -> ZczReport:
    """Measure complementarity and the ZACZ/ZCCZ widths of a sequence set."""
    sequences = list(sequences)
    if not sequences:
        raise GolayZczError("Need at least one sequence")
    length = sequences[0].length
    for s in sequences[1:]:
        if s.length != length:
            raise LengthMismatchError(f"Sequence lengths differ: {length} vs {s.length}")
    if alphabet is None:
        alphabet = infer_alphabet(sequences)

    complementary = is_zero_off_peak(sum_profiles([aacf(s) for s in sequences]))
    auto_widths = _parallel(lambda s: _zone_width(pacf(s), 1), sequences)
    pairs = list(combinations(range(len(sequences)), 2))
    cross_widths = _parallel(lambda ij: _zone_width(pccf(sequences[ij[0]], sequences[ij[1]]), 0), pairs)

    zacz = min(auto_widths)
    zccz = min(cross_widths) if cross_widths else length - 1
    z_min = min(zacz, zccz)
    m = len(sequences)

    report = ZczReport(
        set_size=m,
        length=length,
        measured_zacz=zacz,
        measured_zccz=zccz,
        complementary=complementary,
        alphabet=alphabet,
        optimality_factor=_factor(z_min, length, m, alphabet),
        exceeds_binary_bound=alphabet == "binary" and z_min > length // (2 * m),
    )
    logger.debug(f"Measured ZACZ={zacz} ZCCZ={zccz} complementary={complementary}")
    return report


def verify_golay_zcz(sequences: Sequence[PhaseSequence], claimed_z: int,
                     alphabet: Optional[Alphabet] = None) -> ZczReport:
    """
    Check the complementary-set and zero-correlation-zone conditions against
    a claimed width; passed iff complementary and Zmin >= claimed_z.
    """
    if claimed_z < 1:
        raise GolayZczError(f"Claimed width must be positive, got {claimed_z}")
    report = measure_golay_zcz(sequences, alphabet)
    passed = report.complementary and report.z_min >= claimed_z
    logger.info(f"Golay-ZCZ check (M={report.set_size}, L={report.length}, Z={claimed_z}): "
                f"{'PASS' if passed else 'FAIL'}")
    return report.model_copy(update={"claimed_z": claimed_z, "passed": passed})


def optimality_factor(report: ZczReport, alphabet: Alphabet) -> Fraction:
    """C = Zmin / Z_opti for the given alphabet."""
    return _factor(report.z_min, report.length, report.set_size, alphabet)

"""
Golay complementary pairs: verification, Golay mates, and the four-block
construction of (2, 4N, N) Golay-ZCZ sequence pairs
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

from .correlation import aacf, accf, is_zero_off_peak
from .errors import GolayZczError, LengthMismatchError, MateError, ModulusMismatchError, SignConditionError
from .logger import setup_logger
from .seqcore import ComplementarySet, PhaseSequence, concat, conjugate, negate, reverse, signed

logger = setup_logger(__name__)


@dataclass(frozen=True)
class GolayPair:
    """Two sequences of equal length and modulus (a, b)"""
    a: PhaseSequence
    b: PhaseSequence

    def __post_init__(self):
        if self.a.length != self.b.length:
            raise LengthMismatchError(
                f"Pair lengths differ: {self.a.length} vs {self.b.length}"
            )
        if self.a.modulus != self.b.modulus:
            raise ModulusMismatchError(
                f"Pair moduli differ: {self.a.modulus} vs {self.b.modulus}"
            )

    @property
    def length(self) -> int:
        return self.a.length

    @property
    def modulus(self) -> int:
        return self.a.modulus

    def as_set(self) -> ComplementarySet:
        return ComplementarySet((self.a, self.b))

    def is_complementary(self) -> bool:
        return verify_gcp(self.a, self.b)


@dataclass(frozen=True)
class SignQuadruple:
    """Block signs (x1, x2, x3, x4), each +1 or -1"""
    x1: int
    x2: int
    x3: int
    x4: int

    def __post_init__(self):
        for x in self.as_tuple():
            if x not in (1, -1):
                raise GolayZczError(f"Signs must be +1 or -1, got {x}")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.x1, self.x2, self.x3, self.x4)

    @property
    def is_valid(self) -> bool:
        return self.x1 * self.x2 + self.x3 * self.x4 == 0

    def negated(self) -> "SignQuadruple":
        return SignQuadruple(-self.x1, -self.x2, -self.x3, -self.x4)

    @classmethod
    def parse(cls, text: str) -> "SignQuadruple":
        """Parse '1,1,1,-1'."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise GolayZczError(f"Expected four comma-separated signs, got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GolayZczError(f"Invalid signs {text!r}") from None
        return cls(*values)

    @classmethod
    def all_valid(cls) -> List["SignQuadruple"]:
        """The eight quadruples with x1*x2 + x3*x4 = 0, in lexicographic order."""
        quads = (cls(*signs) for signs in product((-1, 1), repeat=4))
        return [q for q in quads if q.is_valid]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.as_tuple())


# ==================================================
# VERIFICATION AND MATES
# ==================================================

def verify_gcp(a: PhaseSequence, b: PhaseSequence) -> bool:
    """True iff the aperiodic autocorrelations of a and b cancel off-peak."""
    if a.length != b.length:
        raise LengthMismatchError(f"Pair lengths differ: {a.length} vs {b.length}")
    return is_zero_off_peak(aacf(a) + aacf(b))


def golay_mate(pair: GolayPair) -> GolayPair:
    """(c, d) = (reversed conj(b), -reversed conj(a))"""
    c = reverse(conjugate(pair.b))
    d = negate(reverse(conjugate(pair.a)))
    return GolayPair(c, d)


def mate_property(pair: GolayPair, mate: GolayPair) -> bool:
    """True iff C_{a,b}(tau) + C_{c,d}(tau) = 0 at every shift, tau = 0 included."""
    if pair.length != mate.length:
        raise LengthMismatchError(
            f"Pair and mate lengths differ: {pair.length} vs {mate.length}"
        )
    total = accf(pair.a, pair.b) + accf(mate.a, mate.b)
    return all(total.is_zero_at(tau) for tau in total.shifts)


def build_theorem1_pair(pair: GolayPair, mate: GolayPair,
                        signs: SignQuadruple) -> Tuple[PhaseSequence, PhaseSequence]:
    """
    Four-block Golay-ZCZ pair of length 4N:

        p = x1 a || x2 b || x3 a || x4 b
        q = x1 c || x2 d || x3 c || x4 d

    Args:
        pair: GCP (a, b) of length N
        mate: complementary mate (c, d) of the pair
        signs: block signs with x1*x2 + x3*x4 = 0

    Returns:
        (p, q), whose periodic autocorrelations vanish for 1 <= tau <= N and
        whose cross-correlation vanishes for 0 <= tau <= N
    """
    if not signs.is_valid:
        raise SignConditionError("sign condition x1x2+x3x4 != 0")
    if not mate_property(pair, mate):
        raise MateError("second pair is not a complementary mate of the first")

    x1, x2, x3, x4 = signs.as_tuple()
    p = concat([signed(pair.a, x1), signed(pair.b, x2), signed(pair.a, x3), signed(pair.b, x4)])
    q = concat([signed(mate.a, x1), signed(mate.b, x2), signed(mate.a, x3), signed(mate.b, x4)])
    logger.debug(f"Built (2, {p.length}, {pair.length}) pair with signs {signs}")
    return p, q


# ==================================================
# GCP SUPPLY
# ==================================================

def golay_doubling(pair: GolayPair) -> GolayPair:
    """(a, b) -> (a || b, a || -b)"""
    return GolayPair(concat([pair.a, pair.b]), concat([pair.a, negate(pair.b)]))


def example1_pair() -> GolayPair:
    """The binary length-10 GCP used to build the (2, 40, 10) pair."""
    a = PhaseSequence.from_values([1, 1, -1, 1, 1, 1, 1, 1, -1, -1], 2)
    b = PhaseSequence.from_values([1, 1, -1, 1, -1, 1, -1, -1, 1, 1], 2)
    return GolayPair(a, b)


def example2_pair() -> GolayPair:
    """The quadriphase length-5 GCP a = (1, i, -i, -1, i), b = (1, 1, 1, i, -i)."""
    return GolayPair(
        PhaseSequence(4, (0, 1, 3, 2, 1)),
        PhaseSequence(4, (0, 0, 0, 1, 3)),
    )


def _binary_pair(a: Iterable[int], b: Iterable[int]) -> GolayPair:
    return GolayPair(PhaseSequence.from_values(a, 2), PhaseSequence.from_values(b, 2))


GOLAY_KERNELS: Dict[str, GolayPair] = {
    "binary-1": _binary_pair([1], [1]),
    "binary-10": example1_pair(),
    "binary-26": _binary_pair(
        [1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1, 1, 1, 1],
        [1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, -1, -1, -1],
    ),
    "quadriphase-5": example2_pair(),
}

BINARY_KERNELS = ("binary-1", "binary-10", "binary-26")


def golay_family(max_length: int, kernels: Optional[Iterable[str]] = None) -> List[GolayPair]:
    """
    Every pair reachable from the named kernels by repeated doubling, up to
    max_length, ordered by length then kernel.
    """
    names = list(kernels) if kernels is not None else list(BINARY_KERNELS)
    family: List[GolayPair] = []
    for name in names:
        try:
            pair = GOLAY_KERNELS[name]
        except KeyError:
            raise GolayZczError(f"Unknown Golay kernel {name!r}") from None
        while pair.length <= max_length:
            family.append(pair)
            pair = golay_doubling(pair)
    family.sort(key=lambda p: p.length)
    return family

"""
Typed parameter and report models
"""
from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Alphabet = Literal["binary", "polyphase"]


class SearchConfig(BaseModel):
    """Parameters of a binary (4,4,N) CCC search"""
    set_size: int = Field(default=4, ge=4, le=4, description="Number of sets M (only 4 is searched)")
    length: int = Field(..., ge=1, description="Sequence length N")
    timeout_seconds: float = Field(default=60.0, gt=0, description="Wall-clock limit in seconds")
    max_solutions: int = Field(default=1, ge=1, description="Stop after this many codes")
    symmetry_reduction: bool = Field(default=True, description="Fix the first row of the first set to all +1")
    pruning: bool = Field(default=True, description="Prune on partial correlation sums")
    workers: int = Field(default=1, ge=1, description="Processes for the top-level branches")


class ZczReport(BaseModel):
    """Verdict of a Golay-ZCZ measurement"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    set_size: int = Field(..., ge=1, description="Number of sequences M")
    length: int = Field(..., ge=1, description="Sequence length L")
    measured_zacz: int = Field(..., ge=0, description="Largest Z with every PACF zero on 1..Z")
    measured_zccz: int = Field(..., ge=0, description="Largest Z with every PCCF zero on |tau| <= Z")
    complementary: bool = Field(..., description="Aperiodic autocorrelations sum to zero off-peak")
    alphabet: Alphabet = Field(default="polyphase")
    optimality_factor: Fraction = Field(..., description="zMin over the optimal width for the alphabet")
    claimed_z: Optional[int] = Field(default=None, ge=1)
    passed: Optional[bool] = Field(default=None, description="Set when a width was claimed")
    exceeds_binary_bound: bool = Field(default=False, description="zMin above L/(2M) on binary input")

    @property
    def z_min(self) -> int:
        return min(self.measured_zacz, self.measured_zccz)

    def summary(self) -> List[str]:
        lines = [
            f"Golay-ZCZ set M={self.set_size} L={self.length} ({self.alphabet})",
            f"  complementary: {'yes' if self.complementary else 'no'}",
            f"  ZACZ width: {self.measured_zacz}",
            f"  ZCCZ width: {self.measured_zccz}",
            f"  Zmin: {self.z_min}",
            f"  optimality factor: {self.optimality_factor}",
        ]
        if self.exceeds_binary_bound:
            lines.append("  warning: Zmin exceeds the binary bound L/(2M)")
        if self.claimed_z is not None:
            verdict = "PASS" if self.passed else "FAIL"
            lines.append(f"  claimed Z={self.claimed_z}: {verdict}")
        return lines

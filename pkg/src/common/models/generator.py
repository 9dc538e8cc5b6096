"""
Generator specification and build report models
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .circuit import CostReport, Signal
from .reduction import ShorthandTable


class GeneratorFamily(str, Enum):
    CLASSIC_MERSENNE = "classic-mersenne"
    CLASSIC_FERMAT = "classic-fermat"
    UNIVERSAL_D1 = "universal-d1"
    BI_RESIDUE = "bi-residue"


class GeneratorSpec(BaseModel):
    """
    Parameters of one residue generator.

    Attributes:
        p: Input width in bits
        n: Modulus parameter
        family: Circuit family to build
    """
    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=1)
    n: int = Field(ge=2)
    family: GeneratorFamily

    @property
    def q(self) -> int:
        """Number of 2n-bit blocks before padding."""
        return -(-self.p // (2 * self.n))

    @property
    def effective_q(self) -> int:
        """Blocks after zero-padding up to the four the D1 architecture assumes."""
        return max(self.q, 4)

    @property
    def padded(self) -> bool:
        return self.family in (GeneratorFamily.UNIVERSAL_D1, GeneratorFamily.BI_RESIDUE) and self.q < 4


class BuildReport(BaseModel):
    """
    Structured summary of a generator build.

    Attributes:
        family: Circuit family
        p, n: Input width and modulus parameter
        q: 2n-bit block count (D1 families) or n-bit block count (classic families)
        effective_q: Block count after padding (D1 families)
        padded: Whether the input was zero-padded to four 2n-bit blocks
        cor: Correction constant that depends on p (always 0 on the D1 path)
        block_corrections: Signed charges of complemented input blocks, e.g. [-7, -7, -1]
        stage_corrections: Signed charges of inverted end-around carries per CSA stage
        core_constant: Fixed constant absorbed by the D1 core's final adder
        shared_fa_count: Full adders in the shared front-end (bi-residue)
        expected_shared_fa_count: p - 4n
        front_end: Shorthand table of the p-dependent CSA tree
        front_cost: Cost of the p-dependent CSA tree
        cost: Cost of the complete netlist
    """
    model_config = ConfigDict(frozen=True)

    family: GeneratorFamily
    p: int
    n: int
    q: int
    effective_q: Optional[int] = None
    padded: bool = False
    cor: int = 0
    block_corrections: List[int] = Field(default_factory=list)
    stage_corrections: List[int] = Field(default_factory=list)
    core_constant: Optional[int] = None
    shared_fa_count: Optional[int] = None
    expected_shared_fa_count: Optional[int] = None
    front_end: ShorthandTable
    front_cost: CostReport
    cost: CostReport


class SplitVectors(BaseModel):
    """
    The carry-save pair (D_C, D_S) of 2n-bit vectors and their n-bit halves.

    Attributes:
        carry: D_C, LSB first
        save: D_S, LSB first
    """
    model_config = ConfigDict(frozen=True)

    carry: List[Signal]
    save: List[Signal]

    @model_validator(mode="after")
    def check_widths(self):
        if len(self.carry) != len(self.save) or len(self.carry) % 2:
            raise ValueError("carry-save vectors must share an even width")
        return self

    @property
    def half(self) -> int:
        return len(self.carry) // 2

    @property
    def carry_low(self) -> List[Signal]:
        return self.carry[:self.half]

    @property
    def carry_high(self) -> List[Signal]:
        return self.carry[self.half:]

    @property
    def save_low(self) -> List[Signal]:
        return self.save[:self.half]

    @property
    def save_high(self) -> List[Signal]:
        return self.save[self.half:]

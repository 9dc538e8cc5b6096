"""
Carry-save reduction records: EAC policy, shorthand tables and correction ledger
"""

from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .modulus import Modulus


class EacPolicy(str, Enum):
    """How the carry leaving the top weight class re-enters class 0."""
    PLAIN = "plain"
    INVERTED = "inverted"
    NONE = "none"


class StageAllocation(BaseModel):
    """Adders placed on one weight class in one CSA stage."""
    model_config = ConfigDict(frozen=True)

    full_adders: int = Field(default=0, ge=0)
    half_adders: int = Field(default=0, ge=0)

    @property
    def carries(self) -> int:
        return self.full_adders + self.half_adders

    def label(self) -> str:
        """Shorthand cell text: 'FA', '2 FAs', 'FA HA', '-' when idle."""
        parts = []
        if self.full_adders == 1:
            parts.append("FA")
        elif self.full_adders > 1:
            parts.append(f"{self.full_adders} FAs")
        if self.half_adders == 1:
            parts.append("HA")
        elif self.half_adders > 1:
            parts.append(f"{self.half_adders} HAs")
        return " ".join(parts) if parts else "-"


class ShorthandStage(BaseModel):
    """
    One CSA stage: bit counts entering each class and the adders placed on them.

    Attributes:
        entering: Bits per class at the start of the stage, index = class
        allocations: Adders per class, index = class
        wrapped_carries: Carries leaving the top class (they arrive in class 0)
        correction: Signed correction charged by this stage (inverted wraps)
    """
    model_config = ConfigDict(frozen=True)

    entering: List[int]
    allocations: List[StageAllocation]
    wrapped_carries: int = 0
    correction: int = 0

    def leaving(self, wrap: bool = True) -> List[int]:
        """Bits per class after the stage; carries move to the cyclic successor."""
        width = len(self.entering)
        result = []
        for k in range(width):
            alloc = self.allocations[k]
            incoming = 0
            if k > 0:
                incoming = self.allocations[k - 1].carries
            elif wrap:
                incoming = self.allocations[width - 1].carries
            result.append(self.entering[k] - 2 * alloc.full_adders - alloc.half_adders + incoming)
        return result


class ShorthandTable(BaseModel):
    """
    Stage-by-stage summary of a CSA tree in the shorthand notation.
    """
    model_config = ConfigDict(frozen=True)

    width: int = Field(ge=1)
    stages: List[ShorthandStage] = Field(default_factory=list)
    final_counts: List[int]
    wrap: bool = True

    @model_validator(mode="after")
    def check_flow(self):
        """Entering counts of stage s+1 must follow from stage s."""
        for stage in self.stages:
            if len(stage.entering) != self.width or len(stage.allocations) != self.width:
                raise ValueError("stage rows must have one entry per weight class")
        for current, following in zip(self.stages, self.stages[1:]):
            if current.leaving(self.wrap) != following.entering:
                raise ValueError("shorthand stage counts are inconsistent")
        if self.stages and self.stages[-1].leaving(self.wrap) != self.final_counts:
            raise ValueError("final counts do not follow from the last stage")
        return self

    @property
    def fa_count(self) -> int:
        return sum(a.full_adders for stage in self.stages for a in stage.allocations)

    @property
    def ha_count(self) -> int:
        return sum(a.half_adders for stage in self.stages for a in stage.allocations)


class LedgerEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    amount: int


class CorrectionLedger(BaseModel):
    """
    Running correction owed for complemented signals.

    An inverted signal of weight |2^k|_m stands for -2^k plus its complement,
    so each one charges -2^k. `accumulated` is the total reduced modulo m and
    is the constant the final adder must add.
    """
    modulus: Modulus
    accumulated: int = 0
    entries: List[LedgerEntry] = Field(default_factory=list)

    def charge(self, amount: int, source: str) -> None:
        self.entries.append(LedgerEntry(source=source, amount=amount))
        self.accumulated = (self.accumulated + amount) % self.modulus.value()

    @property
    def raw_total(self) -> int:
        """Signed sum of all charges before reduction."""
        return sum(entry.amount for entry in self.entries)

    def amounts(self, prefix: str) -> List[int]:
        """Charges whose source label starts with prefix, in charge order."""
        return [entry.amount for entry in self.entries if entry.source.startswith(prefix)]

"""
Circuit building blocks: signals, gates, output ports and cost records
"""

from enum import Enum
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .modulus import Modulus


class Signal(BaseModel):
    """
    A reference to a wire, optionally read inverted.

    Attributes:
        wire: Identifier of a primary input, constant or gate output
        inverted: Whether the complement of the wire is read
        weight_class: k such that the signal carries residue weight |2^k|_m
    """
    model_config = ConfigDict(frozen=True)

    wire: int = Field(ge=0)
    inverted: bool = False
    weight_class: int = Field(default=0, ge=0)

    def invert(self) -> "Signal":
        return self.model_copy(update={"inverted": not self.inverted})

    def with_class(self, weight_class: int) -> "Signal":
        return self.model_copy(update={"weight_class": weight_class})

    def __str__(self) -> str:
        return f"{'~' if self.inverted else ''}w{self.wire}@{self.weight_class}"


class GateKind(str, Enum):
    FA = "FA"
    HA = "HA"
    NOT = "NOT"
    CONST0 = "CONST0"
    CONST1 = "CONST1"
    AND = "AND"
    OR = "OR"
    XOR = "XOR"


GATE_ARITY = {
    GateKind.FA: (3, 2),
    GateKind.HA: (2, 2),
    GateKind.NOT: (1, 1),
    GateKind.CONST0: (0, 1),
    GateKind.CONST1: (0, 1),
    GateKind.AND: (2, 1),
    GateKind.OR: (2, 1),
    GateKind.XOR: (2, 1),
}

GLUE_KINDS = frozenset({GateKind.AND, GateKind.OR, GateKind.XOR})


class Gate(BaseModel):
    """
    A primitive gate. FA and HA drive [sum, carry]; every other kind drives one wire.
    """
    model_config = ConfigDict(frozen=True)

    id: int = Field(ge=0)
    kind: GateKind
    inputs: List[Signal] = Field(default_factory=list)
    outputs: List[int]

    @model_validator(mode="after")
    def check_arity(self):
        n_in, n_out = GATE_ARITY[self.kind]
        if len(self.inputs) != n_in or len(self.outputs) != n_out:
            raise ValueError(
                f"{self.kind.value} gate {self.id} needs {n_in} inputs and {n_out} outputs, "
                f"got {len(self.inputs)} and {len(self.outputs)}"
            )
        return self


class PlainResidue(BaseModel):
    """
    Output port carrying weighted bits plus a constant correction.

    A canonical port holds the residue itself (bit k of weight 2^k, correction 0).
    A non-canonical port is a carry-save form whose value is
    |sum(2^class * bit) + correction|_m.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["plain"] = "plain"
    name: str
    modulus: Modulus
    signals: List[Signal]
    correction: int = 0
    canonical: bool = True


class D1Output(BaseModel):
    """Output port carrying a diminished-1 residue: zero flag plus n-bit magnitude."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["d1"] = "d1"
    name: str
    modulus: Modulus
    zero: Signal
    magnitude: List[Signal]

    @property
    def signals(self) -> List[Signal]:
        return [self.zero, *self.magnitude]


OutputPort = Annotated[Union[PlainResidue, D1Output], Field(discriminator="kind")]


class CostReport(BaseModel):
    """
    Gate counts and logic depth of a netlist.

    FA, HA and glue gates count one level each; inversions and constants count zero.
    """
    model_config = ConfigDict(frozen=True)

    fa_count: int = 0
    ha_count: int = 0
    not_count: int = 0
    glue_count: int = 0
    depth: int = 0

    def __add__(self, other: "CostReport") -> "CostReport":
        return CostReport(
            fa_count=self.fa_count + other.fa_count,
            ha_count=self.ha_count + other.ha_count,
            not_count=self.not_count + other.not_count,
            glue_count=self.glue_count + other.glue_count,
            depth=max(self.depth, other.depth),
        )

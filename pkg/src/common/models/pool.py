"""
Input partitioning and weighted bit pools
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from .circuit import Signal
from .modulus import Modulus
from .netlist import Netlist


class BitBlock(BaseModel):
    """
    A w-bit block of the input, LSB first. Padding positions are None.
    """
    model_config = ConfigDict(frozen=True)

    index: int
    positions: List[Optional[int]]

    @property
    def padding(self) -> int:
        return sum(1 for position in self.positions if position is None)

    @property
    def live(self) -> List[int]:
        return [position for position in self.positions if position is not None]


class BitPool(BaseModel):
    """
    Signals grouped by residue weight class.

    Attributes:
        modulus: Context modulus; it fixes the number of classes
        classes: classes[k] holds the signals of weight |2^k|_m, in arrival order
        source: Netlist whose single port lists the pool signals in class-major order
    """
    model_config = ConfigDict(frozen=True)

    modulus: Modulus
    classes: List[List[Signal]]
    source: Netlist

    @property
    def width(self) -> int:
        return len(self.classes)

    def counts(self) -> List[int]:
        return [len(bits) for bits in self.classes]

    def flatten(self) -> List[Signal]:
        """Class-major order: all class-0 signals, then class 1, and so on."""
        return [signal for bits in self.classes for signal in bits]

"""
Modulus and diminished-1 value models
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ModulusKind(str, Enum):
    """The three moduli families handled by the toolkit."""
    MERSENNE_LIKE = "2^n-1"
    FERMAT_LIKE = "2^n+1"
    DOUBLE_MERSENNE = "2^2n-1"


class Modulus(BaseModel):
    """
    A modulus 2^n-1, 2^n+1 or 2^(2n)-1.

    Attributes:
        n: Bit width parameter
        kind: Modulus family
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    kind: ModulusKind

    @model_validator(mode="after")
    def check_value(self):
        """Reject degenerate moduli: n below 2 for 2^n-1 and 2^n+1, values below 3."""
        if self.kind != ModulusKind.DOUBLE_MERSENNE and self.n < 2:
            raise ValueError(f"modulus {self.kind.value} needs n >= 2, got n={self.n}")
        if self.value() < 3:
            raise ValueError(f"modulus {self.kind.value} with n={self.n} is below 3")
        return self

    @classmethod
    def mersenne(cls, n: int) -> "Modulus":
        return cls(n=n, kind=ModulusKind.MERSENNE_LIKE)

    @classmethod
    def fermat(cls, n: int) -> "Modulus":
        return cls(n=n, kind=ModulusKind.FERMAT_LIKE)

    @classmethod
    def double_mersenne(cls, n: int) -> "Modulus":
        return cls(n=n, kind=ModulusKind.DOUBLE_MERSENNE)

    def value(self) -> int:
        if self.kind == ModulusKind.MERSENNE_LIKE:
            return (1 << self.n) - 1
        if self.kind == ModulusKind.FERMAT_LIKE:
            return (1 << self.n) + 1
        return (1 << (2 * self.n)) - 1

    @property
    def width(self) -> int:
        """Number of residue weight classes (the period of |2^k|_m up to sign)."""
        return 2 * self.n if self.kind == ModulusKind.DOUBLE_MERSENNE else self.n

    @property
    def inverts_wrap(self) -> bool:
        """True when 2^width is congruent to -1, i.e. wrapped bits come back inverted."""
        return self.kind == ModulusKind.FERMAT_LIKE

    def __str__(self) -> str:
        return f"{self.value()} ({self.kind.value}, n={self.n})"


class D1Value(BaseModel):
    """
    Diminished-1 encoding of a residue modulo 2^n+1.

    A nonzero X is stored as magnitude X-1 with x_z = 0; zero is stored as
    x_z = 1. The canonical form of zero has magnitude 0.
    """
    model_config = ConfigDict(frozen=True)

    x_z: int = Field(ge=0, le=1)
    magnitude: int = Field(ge=0)

    @property
    def is_canonical(self) -> bool:
        return self.x_z == 0 or self.magnitude == 0

    def bits(self, n: int) -> str:
        """Render as 'x_z magnitude' with an n-bit binary magnitude."""
        return f"({self.x_z}, {self.magnitude:0{n}b})"


class WeightDescriptor(BaseModel):
    """
    Residue weight of 2^k: a sign and a power of two 2^exponent.
    """
    model_config = ConfigDict(frozen=True)

    sign: int
    exponent: int = Field(ge=0)

    @model_validator(mode="after")
    def check_sign(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        return self

    @property
    def magnitude(self) -> int:
        return 1 << self.exponent

    @property
    def negative(self) -> bool:
        return self.sign < 0

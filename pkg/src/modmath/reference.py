"""
Pure reference arithmetic modulo 2^n-1, 2^n+1 and 2^(2n)-1.

Nothing here knows about circuits; every generator is checked against these
functions.
"""

from typing import List, Sequence, Tuple

import numpy as np

from src.common.errors import OutOfRangeError, WidthMismatchError
from src.common.models import D1Value, Modulus, ModulusKind, WeightDescriptor


def int_to_bits(x: int, p: int) -> List[int]:
    """LSB-first bit list of x over p positions."""
    if x < 0 or x >= (1 << p):
        raise OutOfRangeError(f"{x} does not fit in {p} bits")
    return [(x >> i) & 1 for i in range(p)]


def bits_to_int(bits: Sequence[int]) -> int:
    return sum((bit & 1) << i for i, bit in enumerate(bits))


def oracle_residue(bits: Sequence[int], m: Modulus) -> int:
    """
    |X|_m for the LSB-first bit vector X, by plain integer arithmetic.

    Args:
        bits: Input bits, LSB first (p >= 1)
        m: Modulus

    Returns:
        The residue in [0, m)
    """
    if len(bits) < 1:
        raise WidthMismatchError("the oracle needs at least one input bit")
    return bits_to_int(bits) % m.value()


def oracle_residues(bit_matrix: np.ndarray, m: Modulus) -> np.ndarray:
    """
    Vectorized oracle over a (p, N) matrix of bits, one column per input vector.
    """
    modulus = m.value()
    if modulus >= (1 << 62):
        raise OutOfRangeError("vectorized oracle is limited to moduli below 2^62")
    residues = np.zeros(bit_matrix.shape[1], dtype=np.int64)
    for i in range(bit_matrix.shape[0]):
        weight = pow(2, i, modulus)
        if weight:
            residues = (residues + bit_matrix[i].astype(np.int64) * weight) % modulus
    return residues


def d1_encode(x: int, n: int) -> D1Value:
    """
    Diminished-1 encoding of x in [0, 2^n].

    Raises:
        OutOfRangeError: x is negative or above 2^n
    """
    if x < 0 or x > (1 << n):
        raise OutOfRangeError(f"{x} is outside [0, 2^{n}]")
    if x == 0:
        return D1Value(x_z=1, magnitude=0)
    return D1Value(x_z=0, magnitude=x - 1)


def d1_decode(v: D1Value, n: int) -> int:
    """
    Value of a canonical D1 encoding: (1 - x_z) + magnitude.

    Raises:
        OutOfRangeError: non-canonical zero or magnitude wider than n bits
    """
    if not v.is_canonical:
        raise OutOfRangeError(f"non-canonical D1 value {v.bits(n)}: x_z=1 requires a zero magnitude")
    if v.magnitude >= (1 << n):
        raise OutOfRangeError(f"magnitude {v.magnitude} does not fit in {n} bits")
    return (1 - v.x_z) + v.magnitude


def pow2_mod(k: int, m: Modulus) -> WeightDescriptor:
    """
    Residue weight of 2^k as a signed power of two.

    2^(jw+i) is congruent to 2^i modulo 2^w-1, and to (-1)^j * 2^i modulo 2^n+1.
    """
    if k < 0:
        raise OutOfRangeError(f"exponent {k} is negative")
    period = m.width
    j, i = divmod(k, period)
    sign = -1 if m.inverts_wrap and j % 2 else 1
    return WeightDescriptor(sign=sign, exponent=i)


def neg_block_identity(b: int, m: Modulus) -> Tuple[int, int]:
    """
    Replace -B by its bitwise complement plus a constant: |-B|_m = |~B + 2|_m.

    Args:
        b: n-bit block value
        m: Modulus 2^n+1

    Returns:
        (complemented block, correction constant 2)
    """
    if m.kind != ModulusKind.FERMAT_LIKE:
        raise OutOfRangeError("the complement identity holds modulo 2^n+1 only")
    if b < 0 or b >= (1 << m.n):
        raise OutOfRangeError(f"block {b} does not fit in {m.n} bits")
    return (1 << m.n) - 1 - b, 2


def nested_residue(x: int, n: int, kind: ModulusKind) -> int:
    """|(|x|_{2^2n-1})|_m for m = 2^n-1 or 2^n+1."""
    outer = Modulus.double_mersenne(n).value()
    return (x % outer) % Modulus(n=n, kind=kind).value()

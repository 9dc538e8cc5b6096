"""
Tests for the reference modular arithmetic
"""
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.common.errors import OutOfRangeError, WidthMismatchError
from src.common.models import D1Value, Modulus, ModulusKind
from src.modmath import (
    bits_to_int,
    d1_decode,
    d1_encode,
    int_to_bits,
    neg_block_identity,
    nested_residue,
    oracle_residue,
    oracle_residues,
    pow2_mod,
)


def test_bit_conversion():
    assert int_to_bits(5, 4) == [1, 0, 1, 0]
    assert bits_to_int([1, 0, 1, 0]) == 5
    with pytest.raises(OutOfRangeError):
        int_to_bits(16, 4)


@pytest.mark.parametrize("x,p,m,expected", [
    (9, 6, Modulus.mersenne(3), 2),
    (0, 6, Modulus.mersenne(3), 0),
    (7, 6, Modulus.mersenne(3), 0),
    (19, 8, Modulus.fermat(3), 1),
    (0xBEEF, 24, Modulus.fermat(3), 0xBEEF % 9),
])
def test_oracle_residue(x, p, m, expected):
    assert oracle_residue(int_to_bits(x, p), m) == expected


def test_oracle_needs_bits():
    with pytest.raises(WidthMismatchError):
        oracle_residue([], Modulus.fermat(3))


def test_vectorized_oracle_matches_scalar():
    rng = np.random.default_rng(7)
    bits = rng.integers(0, 2, size=(40, 200), dtype=np.uint8)
    m = Modulus.fermat(5)
    residues = oracle_residues(bits, m)
    for column in range(bits.shape[1]):
        assert residues[column] == oracle_residue(bits[:, column].tolist(), m)


@pytest.mark.parametrize("x,n,expected", [
    (0, 3, D1Value(x_z=1, magnitude=0)),
    (1, 3, D1Value(x_z=0, magnitude=0)),
    (5, 3, D1Value(x_z=0, magnitude=4)),
    (8, 3, D1Value(x_z=0, magnitude=7)),
])
def test_d1_encode(x, n, expected):
    assert d1_encode(x, n) == expected
    assert d1_decode(expected, n) == x


def test_d1_encode_rejects_out_of_range():
    with pytest.raises(OutOfRangeError):
        d1_encode(9, 3)
    with pytest.raises(OutOfRangeError):
        d1_encode(-1, 3)


def test_d1_decode_rejects_non_canonical_zero():
    with pytest.raises(OutOfRangeError):
        d1_decode(D1Value(x_z=1, magnitude=3), 3)
    with pytest.raises(OutOfRangeError):
        d1_decode(D1Value(x_z=0, magnitude=8), 3)


@pytest.mark.parametrize("k,m,sign,exponent", [
    (0, Modulus.fermat(3), 1, 0),
    (3, Modulus.fermat(3), -1, 0),
    (5, Modulus.fermat(3), -1, 2),
    (6, Modulus.fermat(3), 1, 0),
    (4, Modulus.mersenne(3), 1, 1),
    (5, Modulus.double_mersenne(2), 1, 1),
])
def test_pow2_mod(k, m, sign, exponent):
    weight = pow2_mod(k, m)
    assert (weight.sign, weight.exponent) == (sign, exponent)
    assert (weight.sign * weight.magnitude - pow(2, k)) % m.value() == 0


@pytest.mark.parametrize("kind", [ModulusKind.MERSENNE_LIKE, ModulusKind.FERMAT_LIKE])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pow2_mod_matches_oracle_on_single_bits(n, kind):
    m = Modulus(n=n, kind=kind)
    period = n if kind == ModulusKind.MERSENNE_LIKE else 2 * n
    for k in range(8 * n):
        weight = pow2_mod(k, m)
        assert (weight.sign * weight.magnitude) % m.value() == oracle_residue(int_to_bits(1 << k, k + 1), m)
        assert weight == pow2_mod(k % period, m)


@pytest.mark.parametrize("n", range(2, 9))
def test_neg_block_identity(n):
    m = Modulus.fermat(n)
    for b in range(1 << n):
        complement, constant = neg_block_identity(b, m)
        assert complement == ~b & ((1 << n) - 1)
        assert constant == 2
        assert (m.value() - b) % m.value() == (complement + constant) % m.value()


def test_neg_block_identity_needs_fermat_modulus():
    with pytest.raises(OutOfRangeError):
        neg_block_identity(1, Modulus.mersenne(3))
    with pytest.raises(OutOfRangeError):
        neg_block_identity(8, Modulus.fermat(3))


@pytest.mark.parametrize("kind", [ModulusKind.MERSENNE_LIKE, ModulusKind.FERMAT_LIKE])
def test_degenerate_modulus_rejected(kind):
    with pytest.raises(ValueError):
        Modulus(n=1, kind=kind)
    with pytest.raises(ValueError):
        Modulus(n=0, kind=kind)


def test_double_mersenne_accepts_n1():
    assert Modulus.double_mersenne(1).value() == 3


def test_inverts_wrap():
    assert Modulus.fermat(3).inverts_wrap
    assert not Modulus.mersenne(3).inverts_wrap
    assert not Modulus.double_mersenne(3).inverts_wrap


@given(x=st.integers(min_value=0, max_value=2 ** 64), n=st.integers(min_value=2, max_value=10))
def test_nested_residue_identity(x, n):
    for kind in (ModulusKind.MERSENNE_LIKE, ModulusKind.FERMAT_LIKE):
        assert nested_residue(x, n, kind) == x % Modulus(n=n, kind=kind).value()


@given(n=st.integers(min_value=2, max_value=12), data=st.data())
def test_d1_decode_inverts_encode(n, data):
    x = data.draw(st.integers(min_value=0, max_value=1 << n))
    assert d1_decode(d1_encode(x, n), n) == x

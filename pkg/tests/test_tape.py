import numpy as np
import pytest

from ecamech import Tape, kink_filter
from ecamech.tape import _rot_left, _rot_right

WIDTHS = [1, 2, 7, 63, 64, 65, 100, 128, 129, 1000]


@pytest.mark.parametrize("width", WIDTHS)
def test_bits_round_trip(width):
    rng = np.random.default_rng(width)
    bits = rng.integers(0, 2, size=width, dtype=np.uint8)
    assert np.array_equal(Tape.from_bits(bits).to_bits(), bits)


def test_string_round_trip():
    text = "011010011"
    assert Tape.from_string(text).to_string() == text


def test_zeros_ones_popcount():
    assert Tape.zeros(130).popcount() == 0
    assert Tape.ones(130).popcount() == 130
    assert Tape.ones(130).to_bits().min() == 1


def test_width_matches_length():
    tape = Tape.from_string("0101")
    assert len(tape) == 4 and tape.width == 4


def test_equality():
    assert Tape.from_string("0101") == Tape.from_string("0101")
    assert Tape.from_string("0101") != Tape.from_string("0100")
    assert Tape.from_string("01") != Tape.from_string("010")


@pytest.mark.parametrize("width", WIDTHS)
def test_slice_matches_bit_slice(width):
    rng = np.random.default_rng(width + 1)
    bits = rng.integers(0, 2, size=width, dtype=np.uint8)
    tape = Tape.from_bits(bits)
    start = int(rng.integers(0, width))
    length = int(rng.integers(1, width - start + 1))
    assert np.array_equal(tape.slice(start, length).to_bits(), bits[start : start + length])


def test_slice_out_of_range():
    with pytest.raises(ValueError):
        Tape.from_string("0101").slice(2, 3)


@pytest.mark.parametrize("width", WIDTHS)
def test_rotations_match_roll(width):
    rng = np.random.default_rng(width + 2)
    bits = rng.integers(0, 2, size=width, dtype=np.uint8)
    tape = Tape.from_bits(bits)
    right = Tape(_rot_right(tape.words, width), width)
    left = Tape(_rot_left(tape.words, width), width)
    assert np.array_equal(right.to_bits(), np.roll(bits, 1))
    assert np.array_equal(left.to_bits(), np.roll(bits, -1))


def test_invalid_cells_rejected():
    with pytest.raises(ValueError):
        Tape.from_bits([0, 2, 1])
    with pytest.raises(ValueError):
        Tape.from_bits([])
    with pytest.raises(ValueError):
        Tape.zeros(0)


def test_kink_filter_keeps_adjacent_pair_only():
    assert kink_filter(Tape.from_string("00110100")).to_string() == "00110000"


def test_kink_filter_all_zeros():
    assert kink_filter(Tape.zeros(8)) == Tape.zeros(8)


def test_kink_filter_all_ones():
    assert kink_filter(Tape.ones(8)) == Tape.ones(8)


def test_kink_filter_keeps_longer_runs():
    assert kink_filter(Tape.from_string("01110010")).to_string() == "01110000"


def test_kink_filter_wraps_periodically():
    assert kink_filter(Tape.from_string("10000001")).to_string() == "10000001"
    assert kink_filter(Tape.from_string("10000000")).to_string() == "00000000"

"""Bit-packed binary tapes and word-parallel neighbor operations.

Cells are stored 64 per ``uint64`` word, cell ``i`` at bit ``i % 64`` of word
``i // 64`` (LSB first). Unused bits of the last word are kept zero.
"""

from __future__ import annotations

import numpy as np

__all__ = ["Tape", "kink_filter"]

_WORD = 64
_ONE = np.uint64(1)
_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)


def _n_words(width: int) -> int:
    return (width + _WORD - 1) // _WORD


def _tail_bits(width: int) -> int:
    """Number of valid bits in the last word, in 1..64."""
    return width - _WORD * (_n_words(width) - 1)


def _tail_mask(width: int) -> np.uint64:
    m = _tail_bits(width)
    if m == _WORD:
        return _FULL
    return np.uint64((1 << m) - 1)


def _pack(bits: np.ndarray) -> np.ndarray:
    width = bits.size
    buf = np.zeros(_n_words(width) * 8, dtype=np.uint8)
    packed = np.packbits(bits, bitorder="little")
    buf[: packed.size] = packed
    return buf.view("<u8")


def _unpack(words: np.ndarray, width: int) -> np.ndarray:
    raw = np.ascontiguousarray(words).view(np.uint8)
    return np.unpackbits(raw, bitorder="little")[:width]


def _rot_right(words: np.ndarray, width: int) -> np.ndarray:
    """Periodic shift toward higher indices: out[i] = x[(i - 1) mod width]."""
    m = _tail_bits(width)
    out = words << _ONE
    if words.size > 1:
        out[1:] |= words[:-1] >> np.uint64(63)
    out[0] |= (words[-1] >> np.uint64(m - 1)) & _ONE
    out[-1] &= _tail_mask(width)
    return out


def _rot_left(words: np.ndarray, width: int) -> np.ndarray:
    """Periodic shift toward lower indices: out[i] = x[(i + 1) mod width]."""
    m = _tail_bits(width)
    out = words >> _ONE
    if words.size > 1:
        out[:-1] |= (words[1:] & _ONE) << np.uint64(63)
    out[-1] |= (words[0] & _ONE) << np.uint64(m - 1)
    return out


class Tape:
    """A finite row of binary cells at one timestep, stored bit-packed."""

    __slots__ = ("words", "width")

    def __init__(self, words: np.ndarray, width: int):
        if width < 1:
            raise ValueError(f"tape width must be positive, got {width}")
        if words.size != _n_words(width):
            raise ValueError("word buffer does not match width")
        self.words = words
        self.width = width

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_bits(cls, bits) -> "Tape":
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim != 1 or bits.size == 0:
            raise ValueError("bits must be a non-empty 1-d sequence")
        if bits.max(initial=0) > 1:
            raise ValueError("cells must be 0 or 1")
        return cls(_pack(bits), bits.size)

    @classmethod
    def from_string(cls, text: str) -> "Tape":
        return cls.from_bits([int(ch) for ch in text])

    @classmethod
    def zeros(cls, width: int) -> "Tape":
        return cls(np.zeros(_n_words(width), dtype=np.uint64), width)

    @classmethod
    def ones(cls, width: int) -> "Tape":
        out = np.full(_n_words(width), _FULL, dtype=np.uint64)
        out[-1] = _tail_mask(width)
        return cls(out, width)

    @classmethod
    def random(cls, width: int, rng: np.random.Generator) -> "Tape":
        return cls.from_bits(rng.integers(0, 2, size=width, dtype=np.uint8))

    # -- views -------------------------------------------------------------

    def to_bits(self) -> np.ndarray:
        return _unpack(self.words, self.width)

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.to_bits())

    def slice(self, start: int, length: int) -> "Tape":
        if not (0 <= start and start + length <= self.width and length >= 1):
            raise ValueError("slice out of range")
        return Tape.from_bits(self.to_bits()[start : start + length])

    def popcount(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def neighbors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Packed (left, center, right) neighbor views with periodic wrap."""
        return (
            _rot_right(self.words, self.width),
            self.words,
            _rot_left(self.words, self.width),
        )

    # -- dunder ------------------------------------------------------------

    def __len__(self) -> int:
        return self.width

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tape):
            return NotImplemented
        return self.width == other.width and bool(np.array_equal(self.words, other.words))

    def __repr__(self) -> str:
        if self.width <= 80:
            return f"Tape({self.to_string()!r})"
        return f"Tape(width={self.width}, ones={self.popcount()})"


def kink_filter(tape: Tape) -> Tape:
    """Keep only cells that are 1 with at least one 1-neighbor (periodic)."""
    left, center, right = tape.neighbors()
    return Tape(center & (left | right), tape.width)

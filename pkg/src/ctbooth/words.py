"""Fixed-width two's-complement words and Booth radix-4 digit extraction.

All arithmetic on word values is done in unbounded Python integers; widths
only control wrapping and sign interpretation.  Words are immutable and safe
to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WidthError

BOOTH_DIGIT_VALUES = (-2, -1, 0, 1, 2)


def booth_encode(x: int, y: int, z: int) -> int:
    """Radix-4 Booth digit of a three-bit group: -2*x + y + z."""
    return -2 * x + y + z


@dataclass(frozen=True)
class Word:
    """An immutable ``width``-bit two's-complement word.

    ``bits`` is the unsigned bit pattern (bit 0 = least significant).
    """

    width: int
    bits: int

    def __post_init__(self) -> None:
        if self.width < 2:
            raise WidthError(f"word width must be >= 2, got {self.width}")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bit pattern {self.bits:#x} out of range for width {self.width}")

    def bit(self, i: int) -> int:
        """Bit ``i`` of the pattern.  Indices outside [0, width) are an error."""
        if not 0 <= i < self.width:
            raise IndexError(f"bit index {i} out of range for width {self.width}")
        return (self.bits >> i) & 1

    def bit_low(self, i: int) -> int:
        """Bit ``i`` with negative indices reading as 0.

        This is the accessor used by Booth digit extraction and by the
        compensation-bit construction, where groups reach one position below
        bit 0.  Indices >= width are still an error.
        """
        if i < 0:
            return 0
        return self.bit(i)

    @property
    def signed_value(self) -> int:
        if self.bits >> (self.width - 1):
            return self.bits - (1 << self.width)
        return self.bits

    @property
    def unsigned_value(self) -> int:
        return self.bits

    def __str__(self) -> str:
        return format(self.bits, f"0{self.width}b")


def make_word(value: int, width: int) -> Word:
    """Build a word from an integer, wrapping modulo 2**width."""
    if width < 2:
        raise WidthError(f"word width must be >= 2, got {width}")
    return Word(width, value & ((1 << width) - 1))


def signed_value(w: Word) -> int:
    """Two's-complement integer value of ``w``."""
    return w.signed_value


@dataclass(frozen=True)
class BoothDigit:
    """One radix-4 digit in {-2..2} together with its three source bits."""

    value: int
    source: tuple[int, int, int]

    def __post_init__(self) -> None:
        x, y, z = self.source
        if self.value != booth_encode(x, y, z):
            raise ValueError(f"digit {self.value} does not match source bits {self.source}")


def booth_digits(w: Word) -> tuple[BoothDigit, ...]:
    """Radix-4 digits of ``w``, least significant first (width/2 of them).

    The digits recompose the signed value: sum(4**i * d_i) == signed_value(w).
    """
    if w.width % 2 != 0:
        raise WidthError(f"Booth radix-4 digits need an even width, got {w.width}")
    digits = []
    for i in range(w.width // 2):
        x, y, z = w.bit(2 * i + 1), w.bit(2 * i), w.bit_low(2 * i - 1)
        digits.append(BoothDigit(booth_encode(x, y, z), (x, y, z)))
    return tuple(digits)


def booth_digit_values(bits: int, width: int) -> tuple[int, ...]:
    """Digit values only, from a raw bit pattern (no Word construction).

    Fast path for enumerations; bits above ``width`` are ignored.
    """
    vals = []
    prev = 0
    for i in range(width // 2):
        pair = (bits >> (2 * i)) & 3
        vals.append(-2 * ((pair >> 1) & 1) + (pair & 1) + prev)
        prev = (pair >> 1) & 1
    return tuple(vals)

"""Bitstring and Dyck-word primitives.

A bitstring packs its bits into one machine word: position i (1-based) lives
at bit i-1 of ``val``, and the length is stored explicitly, so complement,
concatenation, slicing and bit flips are a handful of integer instructions.
The ASCII rendering puts position 1 first, hence ``str(Bits.parse("110010"))``
round-trips.

A Dyck word is a balanced even-length bitstring in which every prefix holds
at least as many 1s as 0s; there are Catalan(k) of semilength k. ``mirror``
(the complement of the reverse) is an involution on Dyck words; on the lattice
path picture it reflects the path left-to-right.
"""

from __future__ import annotations

from functools import reduce

MAX_LEN = 62


class Bits:
    """Immutable bitstring of length 0..62."""

    __slots__ = ("val", "n")

    def __init__(self, val: int, n: int) -> None:
        if not 0 <= n <= MAX_LEN:
            raise ValueError(f"bitstring length {n} outside 0..{MAX_LEN}")
        if val < 0 or (val >> n):
            raise ValueError(f"value {val:#x} does not fit in {n} bits")
        self.val = val
        self.n = n

    @classmethod
    def parse(cls, text: str) -> "Bits":
        val = 0
        for i, ch in enumerate(text):
            if ch == "1":
                val |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid bit character {ch!r}")
        return cls(val, len(text))

    def bit(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside 1..{self.n}")
        return (self.val >> (i - 1)) & 1

    def flip(self, i: int) -> "Bits":
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside 1..{self.n}")
        return Bits(self.val ^ (1 << (i - 1)), self.n)

    @property
    def weight(self) -> int:
        return self.val.bit_count()

    def slice(self, i: int, j: int) -> "Bits":
        """The sub-bitstring at positions i..j inclusive (empty when j < i)."""
        if j < i:
            return EMPTY
        if i < 1 or j > self.n:
            raise IndexError(f"slice {i}..{j} outside 1..{self.n}")
        width = j - i + 1
        return Bits((self.val >> (i - 1)) & ((1 << width) - 1), width)

    def __add__(self, other: "Bits") -> "Bits":
        return Bits(self.val | (other.val << self.n), self.n + other.n)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Bits) and self.val == other.val and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.val, self.n))

    def __lt__(self, other: "Bits") -> bool:
        # Shorter strings first, then ASCII-lexicographic ('0' < '1').
        if self.n != other.n:
            return self.n < other.n
        diff = self.val ^ other.val
        if diff == 0:
            return False
        return not (self.val & (diff & -diff))

    def __le__(self, other: "Bits") -> bool:
        return self == other or self < other

    def __str__(self) -> str:
        return f"{self.val:0{self.n}b}"[::-1] if self.n else ""

    def __repr__(self) -> str:
        return f"Bits({str(self)!r})"


EMPTY = Bits(0, 0)
ZERO = Bits(0, 1)
ONE = Bits(1, 1)


def cat(*parts: Bits) -> Bits:
    return reduce(Bits.__add__, parts, EMPTY)


def complement(x: Bits) -> Bits:
    """Flip every bit."""
    return Bits(x.val ^ ((1 << x.n) - 1), x.n)


def reverse(x: Bits) -> Bits:
    v, r = x.val, 0
    for _ in range(x.n):
        r = (r << 1) | (v & 1)
        v >>= 1
    return Bits(r, x.n)


def mirror(x: Bits) -> Bits:
    """The complement of the reverse; an involution mapping Dyck words to Dyck words."""
    return complement(reverse(x))


def is_dyck(x: Bits) -> bool:
    if x.n % 2:
        return False
    h, v = 0, x.val
    for _ in range(x.n):
        h += 1 if (v & 1) else -1
        if h < 0:
            return False
        v >>= 1
    return h == 0


def first_return(x: Bits) -> int:
    """Position of the first return to height zero of a non-empty Dyck word."""
    h, v = 0, x.val
    for i in range(1, x.n + 1):
        h += 1 if (v & 1) else -1
        if h == 0:
            return i
        v >>= 1
    raise ValueError(f"{x!r} is not a non-empty Dyck word")


def decompose(x: Bits) -> tuple[Bits, Bits]:
    """Split a non-empty Dyck word as 1u0v with u, v Dyck; the 0 closes the leading 1."""
    if x.n == 0 or not is_dyck(x):
        raise ValueError(f"{x!r} is not a non-empty Dyck word")
    p = first_return(x)
    return x.slice(2, p - 1), x.slice(p + 1, x.n)


def enumerate_dyck(k: int) -> list[Bits]:
    """All Dyck words of semilength k, in descending lexicographic order with '1' ranked above '0'.

    The first word for k = 3 is 111000 and the last is 101010.
    """
    if k < 0:
        raise ValueError("semilength must be non-negative")
    if 2 * k > MAX_LEN:
        raise ValueError(f"semilength {k} exceeds the packing limit")
    out: list[Bits] = []

    def rec(val: int, pos: int, ones: int, height: int) -> None:
        if pos == 2 * k:
            out.append(Bits(val, 2 * k))
            return
        if ones < k:
            rec(val | (1 << pos), pos + 1, ones + 1, height + 1)
        if height > 0:
            rec(val, pos + 1, ones, height - 1)

    rec(0, 0, 0, 0)
    return out

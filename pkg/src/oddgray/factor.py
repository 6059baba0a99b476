"""The cycle factor covering both middle layers of the 2k-cube.

For a Dyck word x of semilength k, ``flip_sequence(x)`` is a permutation
(a_1, ..., a_2k) of [2k] built by first-return recursion: writing x = 1u0v,
the sequence starts with the position |u|+2 closing the leading 1, continues
with the reflected sequence of mirror(u), then position 1, then the sequence
of v shifted past the prefix. Flipping the bits of x in that order walks a
path of 2k+1 vertices from x to its complement, alternating between weights
k and k+1 (odd steps flip a 0, even steps flip a 1). Closing each path with
the complement edge {x, ~x} gives one cycle per Dyck word; the cycles are
vertex-disjoint and cover all binomial(2k+1, k) vertices of the two layers.

``locate`` inverts the construction: any vertex of the two layers decomposes
in exactly one of three ways (a Dyck word, i.e. a path origin; 1w1v, an
interior vertex of the mirrored-prefix stretch; 0~u1w, a vertex of the suffix
stretch), and peeling that decomposition recursively yields the unique
(origin, index) with path(origin).vertices[index] == vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .words import (
    Bits,
    ONE,
    ZERO,
    cat,
    complement,
    decompose,
    enumerate_dyck,
    is_dyck,
    mirror,
)


@dataclass(frozen=True)
class FactorPath:
    origin: Bits
    vertices: tuple[Bits, ...]


@lru_cache(maxsize=None)
def flip_sequence(x: Bits) -> tuple[int, ...]:
    """The bit-flip order generating the factor path of the Dyck word x."""
    if x.n == 0:
        return ()
    u, v = decompose(x)
    base = u.n + 2
    head = flip_sequence(mirror(u))
    tail = flip_sequence(v)
    return (base, *(base - a for a in head), 1, *(base + a for a in tail))


def _path_vals(x: Bits) -> list[int]:
    v = x.val
    vals = [v]
    for a in flip_sequence(x):
        v ^= 1 << (a - 1)
        vals.append(v)
    return vals


def path(x: Bits) -> FactorPath:
    """The factor path from x to its complement (2k+1 vertices)."""
    return FactorPath(x, tuple(Bits(v, x.n) for v in _path_vals(x)))


def flip_edge(x: Bits, i: int) -> frozenset[Bits]:
    """The unique edge of path(x) along which bit i flips."""
    if not 1 <= i <= x.n:
        raise ValueError(f"position {i} outside 1..{x.n}")
    step = flip_sequence(x).index(i) + 1
    vertices = path(x).vertices
    return frozenset((vertices[step - 1], vertices[step]))


def cycle_factor(k: int) -> Iterator[FactorPath]:
    """One path per Dyck word of semilength k, in enumeration order."""
    if not 1 <= k <= 30:
        raise ValueError(f"semilength {k} outside 1..30")
    for x in enumerate_dyck(k):
        yield path(x)


def locate(y: Bits) -> tuple[Bits, int]:
    """The unique (origin, index) with path(origin).vertices[index] == y.

    Works for any y of even length 2k and weight k or k+1. Each recursion
    step finds exactly one structural decomposition; a vertex admitting none
    or several would contradict the disjoint-cover property, so that case
    raises.
    """
    if y.n % 2:
        raise ValueError(f"{y!r} has odd length")
    k = y.n // 2
    if k == 0:
        return y, 0
    if y.weight not in (k, k + 1):
        raise ValueError(f"{y!r} has weight {y.weight}, expected {k} or {k + 1}")
    if is_dyck(y):
        return y, 0

    if y.bit(1) == 1:
        # y = 1w1v with mirror(w) of weight l-1 or l, v Dyck.
        found = None
        for l in range(1, k + 1):
            if y.bit(2 * l) != 1:
                continue
            if not is_dyck(y.slice(2 * l + 1, y.n)):
                continue
            if y.slice(2, 2 * l - 1).weight not in (l - 2, l - 1):
                continue
            if found is not None:
                raise RuntimeError(f"ambiguous decomposition of {y!r}")
            found = l
        if found is None:
            raise RuntimeError(f"no decomposition of {y!r}")
        w = y.slice(2, 2 * found - 1)
        v = y.slice(2 * found + 1, y.n)
        inner, j = locate(mirror(w))
        return cat(ONE, mirror(inner), ZERO, v), j + 1

    # y = 0~u1w with u Dyck, w of weight k-l or k-l+1.
    found = None
    for l in range(1, k + 1):
        if y.bit(2 * l) != 1:
            continue
        if not is_dyck(complement(y.slice(2, 2 * l - 1))):
            continue
        if y.slice(2 * l + 1, y.n).weight not in (k - l, k - l + 1):
            continue
        if found is not None:
            raise RuntimeError(f"ambiguous decomposition of {y!r}")
        found = l
    if found is None:
        raise RuntimeError(f"no decomposition of {y!r}")
    u = complement(y.slice(2, 2 * found - 1))
    w = y.slice(2 * found + 1, y.n)
    inner, j = locate(w)
    return cat(ONE, u, ZERO, inner), 2 * found + j

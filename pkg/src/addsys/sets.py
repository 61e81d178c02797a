"""Symbolic sets of nonnegative integers that all contain 0.

A set is one of five node types:

    Finite(elements)      an explicit finite set
    Interval(length)      [0, length)
    Tail()                the nonnegative integers N0
    Dilated(scale, inner) scale * inner
    DirectSum(parts)      the direct sum of the parts

Membership is exact.  Everything that has to look at infinitely many
elements (enumeration, equality, direct-sum verification) works inside a
window ``[0, bound)`` and says so in its name or signature.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from addsys.errors import DuplicateRepresentationError, NonZeroBase, Unsupported


class _SetNode:
    __slots__ = ()

    def __str__(self) -> str:
        return to_expr(self)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Finite(_SetNode):
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted({int(x) for x in self.elements}))
        if not elems or elems[0] < 0:
            raise ValueError(f"finite set must be nonempty and nonnegative: {self.elements!r}")
        if elems[0] != 0:
            raise NonZeroBase(f"finite set {set(elems)} does not contain 0")
        object.__setattr__(self, "elements", elems)


@dataclass(frozen=True)
class Interval(_SetNode):
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"interval [0,{self.length}) is empty")


@dataclass(frozen=True)
class Tail(_SetNode):
    pass


@dataclass(frozen=True)
class Dilated(_SetNode):
    scale: int
    inner: "StructuredSet"

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError(f"dilation scale must be >= 1, got {self.scale}")


@dataclass(frozen=True)
class DirectSum(_SetNode):
    parts: tuple["StructuredSet", ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("direct sum needs at least one part")


StructuredSet = Union[Finite, Interval, Tail, Dilated, DirectSum]

ZERO = Finite((0,))
NATURALS = Tail()


def _check_bound(bound: int) -> int:
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    return bound


# -- constructors in normal form ------------------------------------------

def finite(elements: Iterable[int]) -> StructuredSet:
    return Finite(tuple(elements))


def interval(length: int) -> StructuredSet:
    return normalize(Interval(length))


def dilated(scale: int, inner: StructuredSet) -> StructuredSet:
    return normalize(Dilated(scale, inner))


def normalize(s: StructuredSet) -> StructuredSet:
    """Rewrite ``s`` into normal form without changing the set it denotes.

    Scale-1 dilations vanish, nested dilations multiply out, nested direct
    sums flatten and the identity ``{0}`` is dropped from sums.
    """
    if isinstance(s, Interval):
        return ZERO if s.length == 1 else s
    if isinstance(s, Dilated):
        inner = normalize(s.inner)
        if s.scale == 1:
            return inner
        if inner == ZERO:
            return ZERO
        if isinstance(inner, Dilated):
            return Dilated(s.scale * inner.scale, inner.inner)
        return Dilated(s.scale, inner)
    if isinstance(s, DirectSum):
        flat: list[StructuredSet] = []
        for part in s.parts:
            part = normalize(part)
            if isinstance(part, DirectSum):
                flat.extend(part.parts)
            elif part != ZERO:
                flat.append(part)
        if not flat:
            return ZERO
        if len(flat) == 1:
            return flat[0]
        return DirectSum(tuple(flat))
    return s


# -- exact queries --------------------------------------------------------

def contains(s: StructuredSet, n: int) -> bool:
    if n < 0:
        return False
    if isinstance(s, Finite):
        i = bisect.bisect_left(s.elements, n)
        return i < len(s.elements) and s.elements[i] == n
    if isinstance(s, Interval):
        return n < s.length
    if isinstance(s, Tail):
        return True
    if isinstance(s, Dilated):
        return n % s.scale == 0 and contains(s.inner, n // s.scale)
    if isinstance(s, DirectSum):
        return _sum_contains(s.parts, n)
    raise TypeError(f"not a structured set: {s!r}")


def _sum_contains(parts: Sequence[StructuredSet], n: int) -> bool:
    # Finite parts drive the search; an infinite part is best left for the
    # final membership test.
    ordered = sorted(parts, key=lambda p: not is_finite(p))
    *head, last = ordered
    lists = [enumerate_set(p, n + 1) for p in head]

    def search(k: int, remaining: int) -> bool:
        if k == len(lists):
            return contains(last, remaining)
        for a in lists[k]:
            if a > remaining:
                break
            if search(k + 1, remaining - a):
                return True
        return False

    return search(0, n)


def is_finite(s: StructuredSet) -> bool:
    if isinstance(s, (Finite, Interval)):
        return True
    if isinstance(s, Tail):
        return False
    if isinstance(s, Dilated):
        return is_finite(s.inner)
    return all(is_finite(p) for p in s.parts)


def max_element(s: StructuredSet) -> int:
    if isinstance(s, Finite):
        return s.elements[-1]
    if isinstance(s, Interval):
        return s.length - 1
    if isinstance(s, Dilated):
        return s.scale * max_element(s.inner)
    if isinstance(s, DirectSum):
        return sum(max_element(p) for p in s.parts)
    raise Unsupported("N0 has no largest element")


def least_positive(s: StructuredSet) -> int | None:
    """Smallest nonzero element, or None when the set is {0}."""
    if isinstance(s, Finite):
        return s.elements[1] if len(s.elements) > 1 else None
    if isinstance(s, Interval):
        return 1 if s.length > 1 else None
    if isinstance(s, Tail):
        return 1
    if isinstance(s, Dilated):
        m = least_positive(s.inner)
        return None if m is None else s.scale * m
    candidates = [m for m in map(least_positive, s.parts) if m is not None]
    return min(candidates) if candidates else None


# -- bounded queries ------------------------------------------------------

def enumerate_set(s: StructuredSet, bound: int) -> list[int]:
    """Elements of ``s`` in ``[0, bound)``, ascending."""
    _check_bound(bound)
    if isinstance(s, Finite):
        return list(s.elements[: bisect.bisect_left(s.elements, bound)])
    if isinstance(s, Interval):
        return list(range(min(s.length, bound)))
    if isinstance(s, Tail):
        return list(range(bound))
    if isinstance(s, Dilated):
        g = s.scale
        return [g * x for x in enumerate_set(s.inner, -(-bound // g))]
    if isinstance(s, DirectSum):
        lists = [enumerate_set(p, bound) for p in s.parts]
        covered, _ = sum_masks(lists, bound)
        return mask_elements(covered)
    raise TypeError(f"not a structured set: {s!r}")


def sets_equal(s1: StructuredSet, s2: StructuredSet, bound: int) -> bool:
    """Equality on ``[0, bound)`` only.

    Agreement below the bound is necessary for the denoted sets to be
    equal but says nothing about larger elements.
    """
    return enumerate_set(s1, bound) == enumerate_set(s2, bound)


def direct_sum(parts: Sequence[StructuredSet], bound: int) -> StructuredSet:
    """Form the direct sum of ``parts``, checking uniqueness of sums below ``bound``.

    Raises DuplicateRepresentationError naming the least integer with two
    representations.  The two representations are element tuples aligned
    with the flattened parts, larger-first in lexicographic order.
    """
    _check_bound(bound)
    if not parts:
        raise ValueError("direct sum needs at least one part")
    s = normalize(DirectSum(tuple(parts)))
    if not isinstance(s, DirectSum):
        return s
    lists = [enumerate_set(p, bound) for p in s.parts]
    _, dup = sum_masks(lists, bound)
    if dup:
        n = lowest_bit(dup)
        reps = representations_in(lists, n, limit=2)
        rep1, rep2 = sorted(reps, reverse=True)
        raise DuplicateRepresentationError(n, rep1, rep2)
    return s


# -- sumset bookkeeping on bitmasks ---------------------------------------

def sum_masks(lists: Sequence[Sequence[int]], bound: int) -> tuple[int, int]:
    """Bitmasks of sums below ``bound`` reached at least once and at least twice.

    Bit n of the first mask is set when n = a_1 + ... + a_k with each a_i
    drawn from ``lists[i]``; bit n of the second when that happens in two
    or more distinct ways.
    """
    mask = (1 << bound) - 1
    once, twice = 1, 0
    for elems in lists:
        new_once, new_twice = 0, 0
        for a in elems:
            if a >= bound:
                break
            s1 = (once << a) & mask
            new_twice |= ((twice << a) & mask) | (new_once & s1)
            new_once |= s1
        once, twice = new_once, new_twice
    return once, twice


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def mask_elements(x: int) -> list[int]:
    bits = bin(x)[:1:-1]
    return [i for i, c in enumerate(bits) if c == "1"]


def representations_in(
    lists: Sequence[Sequence[int]], n: int, limit: int | None = None
) -> list[tuple[int, ...]]:
    """Every way to write n as one element from each ascending list, in any order."""
    order = sorted(range(len(lists)), key=lambda i: len(lists[i]))
    last = order[-1]
    last_set = set(lists[last])
    choice = [0] * len(lists)
    found: list[tuple[int, ...]] = []

    def search(k: int, remaining: int) -> None:
        if limit is not None and len(found) >= limit:
            return
        if k == len(order) - 1:
            if remaining in last_set:
                choice[last] = remaining
                found.append(tuple(choice))
            return
        i = order[k]
        for a in lists[i]:
            if a > remaining:
                break
            choice[i] = a
            search(k + 1, remaining - a)
        choice[i] = 0

    search(0, n)
    return found


# -- divisibility and quotients -------------------------------------------

def divisible(s: StructuredSet, g: int) -> bool:
    """True when every element of ``s`` is a multiple of ``g``."""
    if g == 1:
        return True
    if isinstance(s, Finite):
        return all(x % g == 0 for x in s.elements)
    if isinstance(s, Interval):
        return s.length == 1
    if isinstance(s, Tail):
        return False
    if isinstance(s, Dilated):
        return divisible(s.inner, g // math.gcd(g, s.scale))
    # every part contains 0, so each part is a subset of the sum
    return all(divisible(p, g) for p in s.parts)


def quotient(s: StructuredSet, g: int) -> StructuredSet | None:
    """The set {k : k*g in s} computed symbolically.

    Returns None when the structure of ``s`` does not determine the
    quotient, which happens for direct sums with two or more parts that
    are not multiples of ``g``.
    """
    if g == 1:
        return s
    if isinstance(s, Finite):
        return Finite(tuple(x // g for x in s.elements if x % g == 0))
    if isinstance(s, Interval):
        return interval(-(-s.length // g))
    if isinstance(s, Tail):
        return s
    if isinstance(s, Dilated):
        d = math.gcd(g, s.scale)
        q = quotient(s.inner, g // d)
        return None if q is None else dilated(s.scale // d, q)
    if isinstance(s, DirectSum):
        # With at most one part off the lattice g*N0, a multiple of g must
        # take a multiple of g from every part.
        if sum(not divisible(p, g) for p in s.parts) > 1:
            return None
        qs = [quotient(p, g) for p in s.parts]
        if any(q is None for q in qs):
            return None
        return normalize(DirectSum(tuple(qs)))  # type: ignore[arg-type]
    raise TypeError(f"not a structured set: {s!r}")


# -- text form ------------------------------------------------------------

def to_expr(s: StructuredSet) -> str:
    """Render ``s`` in the system-description language."""
    if isinstance(s, Finite):
        return "{" + ",".join(map(str, s.elements)) + "}"
    if isinstance(s, Interval):
        return f"[0,{s.length})"
    if isinstance(s, Tail):
        return "N0"
    if isinstance(s, Dilated):
        inner = to_expr(s.inner)
        if isinstance(s.inner, DirectSum):
            inner = f"({inner})"
        return f"{s.scale} * {inner}"
    return " + ".join(
        f"({to_expr(p)})" if isinstance(p, DirectSum) else to_expr(p) for p in s.parts
    )

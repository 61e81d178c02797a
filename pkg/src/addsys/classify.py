"""British number systems and the classification of additive systems.

Every additive system is a British number system, or a contraction of
one.  :func:`classify` finds the generating radices one at a time with
:func:`extraction_step`, then reads off which member owns each position n
by checking which member contains the place value G_{n-1}.
"""

from __future__ import annotations

import enum
from itertools import combinations
from dataclasses import dataclass, field
from typing import Sequence

from addsys.errors import BoundTooSmall, InsufficientSchedule, InvalidSystem, SingletonSystem, Unsupported
from addsys.lab import forced_complement
from addsys.sets import (
    NATURALS,
    ZERO,
    Dilated,
    DirectSum,
    Finite,
    Interval,
    StructuredSet,
    Tail,
    _check_bound,
    contains,
    dilated,
    direct_sum,
    enumerate_set,
    finite,
    interval,
    normalize,
    quotient,
)
from addsys.systems import AdditiveSystem, Label
from addsys.transforms import (
    IndexPartition,
    Witness,
    apply_witness,
    check_radices,
    partial_products,
)

DEFAULT_TAIL = (2,)


@dataclass(frozen=True)
class GeneratorSchedule:
    """Radices g_1, g_2, ...: a finite prefix followed by a repeating pattern.

    An empty ``tail`` makes the schedule finite.  A constant tail g is the
    pattern ``(g,)``.
    """

    prefix: tuple[int, ...] = ()
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", check_radices(self.prefix))
        object.__setattr__(self, "tail", check_radices(self.tail))

    @classmethod
    def constant(cls, g: int, prefix: Sequence[int] = ()) -> "GeneratorSchedule":
        return cls(tuple(prefix), (g,))

    @property
    def is_finite(self) -> bool:
        return not self.tail

    @property
    def tail_kind(self) -> str:
        if not self.tail:
            return "none"
        return "constant" if len(set(self.tail)) == 1 else "periodic"

    def radix(self, i: int) -> int:
        """g_i, counting from 1."""
        if i < 1:
            raise IndexError(i)
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        if not self.tail:
            raise InsufficientSchedule(f"finite schedule has only {len(self.prefix)} radices")
        return self.tail[(i - len(self.prefix) - 1) % len(self.tail)]

    def radices(self, r: int) -> tuple[int, ...]:
        return tuple(self.radix(i) for i in range(1, r + 1))

    def partial_product(self, i: int) -> int:
        return partial_products(self.radices(i))[-1]

    def canonical(self) -> "GeneratorSchedule":
        """Same radix sequence with the shortest prefix and the least period."""
        if not self.tail:
            return self
        pattern = _least_period(self.tail)
        prefix = self.prefix
        while prefix and prefix[-1] == pattern[-1]:
            prefix = prefix[:-1]
            pattern = pattern[-1:] + pattern[:-1]
        return GeneratorSchedule(prefix, pattern)


def _least_period(pattern: tuple[int, ...]) -> tuple[int, ...]:
    n = len(pattern)
    for d in range(1, n + 1):
        if n % d == 0 and pattern[:d] * (n // d) == pattern:
            return pattern[:d]
    return pattern


@dataclass(frozen=True)
class BritishNumberSystem:
    schedule: GeneratorSchedule

    def __post_init__(self):
        if self.schedule.is_finite:
            raise InsufficientSchedule("a British number system needs an infinite schedule")

    def member(self, i: int) -> StructuredSet:
        """G_{i-1} * [0, g_i)."""
        return dilated(self.schedule.partial_product(i - 1), interval(self.schedule.radix(i)))


def bns_equal(x: BritishNumberSystem, y: BritishNumberSystem) -> bool:
    """Exact equality: two such systems coincide exactly when their radix sequences do."""
    return x.schedule.canonical() == y.schedule.canonical()


def build_bns(
    schedule: GeneratorSchedule | Sequence[int], r: int, closing_label: Label = "tail"
) -> AdditiveSystem:
    """Members G_{i-1} * [0, g_i) for i = 1..r, closed off by G_r * N0."""
    if not isinstance(schedule, GeneratorSchedule):
        schedule = GeneratorSchedule(tuple(schedule))
    if schedule.is_finite and r > len(schedule.prefix):
        raise InsufficientSchedule(f"need {r} radices, schedule has {len(schedule.prefix)}")
    radices = schedule.radices(r)
    G = partial_products(radices)
    members = [(i, dilated(G[i - 1], interval(radices[i - 1]))) for i in range(1, r + 1)]
    members.append((closing_label, dilated(G[r], NATURALS)))
    return AdditiveSystem(tuple(members))


# -- one extraction step --------------------------------------------------

class Case(enum.Enum):
    DILATION = "dilation"
    CONTRACTION = "contraction"


def _shift(label: Label, by: int) -> Label:
    return label + by if isinstance(label, int) else label


@dataclass(frozen=True)
class ExtractionStep:
    """A = contraction of (radix * quotient), split off the member containing 1.

    In the dilation case the pivot's quotient was {0} and it is dropped
    from ``quotient``; in the contraction case the pivot is [0, g) plus
    g times its quotient.
    """

    pivot: Label
    radix: int
    quotient: AdditiveSystem
    case: Case
    source_labels: tuple[Label, ...]
    symbolic: bool = True

    @property
    def witness(self) -> Witness:
        classes = []
        for lbl in self.source_labels:
            if lbl == self.pivot:
                ms = {1} if self.case is Case.DILATION else {1, _shift(lbl, 1)}
            else:
                ms = {_shift(lbl, 1)}
            classes.append((lbl, frozenset(ms)))
        return Witness(IndexPartition(tuple(classes)), (self.radix,))

    def reconstruct(self, bound: int) -> AdditiveSystem:
        return apply_witness(self.quotient, self.witness, bound)


def extraction_step(sys: AdditiveSystem, bound: int) -> ExtractionStep:
    """Peel the smallest radix off an additive system.

    The pivot is the member containing 1 and the radix g is the least
    positive integer missing from it.  Every member is replaced by
    {k : k*g in A_i}, computed symbolically where possible and otherwise
    from the elements below ``bound``; the quotient system is then
    trustworthy below bound // g.
    """
    _check_bound(bound)
    if len(sys) == 1:
        raise SingletonSystem("a one-member system has nothing to extract")
    pivots = [lbl for lbl, s in sys if contains(s, 1)]
    if len(pivots) != 1:
        raise InvalidSystem(f"expected exactly one member containing 1, found {len(pivots)}")
    pivot = pivots[0]
    pivot_set = sys[pivot]
    g = 2
    while g < bound and contains(pivot_set, g):
        g += 1
    if g >= bound:
        raise BoundTooSmall(f"every integer in [1,{bound}) lies in the pivot {pivot!r}")

    symbolic = True
    quotients = []
    for lbl, s in sys:
        q = quotient(s, g)
        if q is None:
            symbolic = False
            q = finite(x // g for x in enumerate_set(s, bound) if x % g == 0)
        quotients.append((lbl, q))

    case = Case.DILATION if dict(quotients)[pivot] == ZERO else Case.CONTRACTION
    if case is Case.DILATION:
        quotients = [(lbl, q) for lbl, q in quotients if lbl != pivot]
    try:
        qsys = AdditiveSystem(tuple(quotients))
    except InvalidSystem as exc:
        if symbolic:
            raise
        raise BoundTooSmall(f"bound {bound} too small to resolve the quotient by {g}: {exc}") from exc
    return ExtractionStep(pivot, g, qsys, case, sys.labels, symbolic)


# -- full classification --------------------------------------------------

@dataclass(frozen=True)
class PartitionSpec:
    """Positions 1, 2, ... of a radix schedule grouped by the member that owns them.

    ``rest`` names the class that also owns every position past the
    explicit ones.
    """

    classes: tuple[tuple[Label, frozenset[int]], ...]
    rest: Label | None = None

    def __post_init__(self):
        classes = tuple((lbl, frozenset(ps)) for lbl, ps in self.classes)
        seen: set[int] = set()
        for _, ps in classes:
            if ps & seen:
                raise ValueError(f"positions {sorted(ps & seen)} assigned twice")
            if any(p < 1 for p in ps):
                raise ValueError("positions start at 1")
            seen |= ps
        if self.rest is not None and self.rest not in [lbl for lbl, _ in classes]:
            raise ValueError(f"rest class {self.rest!r} is not one of the classes")
        object.__setattr__(self, "classes", classes)

    def positions(self, label: Label) -> frozenset[int]:
        for lbl, ps in self.classes:
            if lbl == label:
                return ps
        raise KeyError(label)

    def class_of(self, n: int) -> Label:
        for lbl, ps in self.classes:
            if n in ps:
                return lbl
        if self.rest is None:
            raise KeyError(n)
        return self.rest


@dataclass(frozen=True)
class ClassificationResult:
    """Radices, ownership of positions, and what is left after ``depth`` steps.

    ``remainder`` is the system still to be classified; the input equals
    the contraction of ``remainder`` dilated by the prefix, with remainder
    member j joining class j.  When ``terminated`` the remainder is a
    single N0 member, which is exactly the schedule tail folded into the
    rest class.
    """

    bns: BritishNumberSystem
    partition: PartitionSpec
    depth: int
    terminated: bool
    remainder: AdditiveSystem
    bound: int
    steps: tuple[ExtractionStep, ...] = field(default=(), compare=False, repr=False)

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.bns.schedule.prefix

    @property
    def certified_bound(self) -> int:
        """Window on which the radix schedule and partition alone reproduce the input."""
        if self.terminated:
            return self.bound
        return min(self.bound, partial_products(self.prefix)[-1])


def classify(sys: AdditiveSystem, max_depth: int = 32, bound: int = 10_000) -> ClassificationResult:
    _check_bound(bound)
    current = sys
    steps: list[ExtractionStep] = []
    window = bound
    while len(current) > 1 and len(steps) < max_depth:
        try:
            step = extraction_step(current, window)
        except BoundTooSmall:
            break
        steps.append(step)
        window //= step.radix
        current = step.quotient
    terminated = len(current) == 1

    radices = tuple(st.radix for st in steps)
    G = partial_products(radices)
    owned: dict = {lbl: set() for lbl in sys.labels}
    for n in range(1, len(radices) + 1):
        owners = [lbl for lbl, s in sys if contains(s, G[n - 1])]
        if len(owners) != 1:
            raise InvalidSystem(f"place value {G[n - 1]} lies in {len(owners)} members")
        owned[owners[0]].add(n)
    classes = tuple((lbl, frozenset(owned[lbl])) for lbl in sys.labels)
    rest = current.labels[0] if terminated else None
    return ClassificationResult(
        bns=BritishNumberSystem(GeneratorSchedule(radices, DEFAULT_TAIL)),
        partition=PartitionSpec(classes, rest),
        depth=len(radices),
        terminated=terminated,
        remainder=current,
        bound=bound,
        steps=tuple(steps),
    )


def expand(result: ClassificationResult, bound: int) -> AdditiveSystem:
    """Rebuild the classified system: class L becomes the sum of G_{n-1} * [0, g_n) over n in L.

    Members still in the remainder also get G_depth times their remainder
    set; for a terminated result that is G_depth * N0 on the rest class.
    """
    radices = result.prefix
    G = partial_products(radices)
    members = []
    for lbl, positions in result.partition.classes:
        parts = [dilated(G[n - 1], interval(radices[n - 1])) for n in sorted(positions)]
        if lbl in result.remainder:
            parts.append(dilated(G[-1], result.remainder[lbl]))
        members.append((lbl, direct_sum(parts, bound) if parts else ZERO))
    return AdditiveSystem(tuple(members))


# -- decomposability ------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _smallest_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _decompose_finite(elements: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    elems = sorted(elements)
    if len(elems) < 4:
        return None
    target = 0
    for x in elems:
        target |= 1 << x
    size = len(elems)
    first = elems[1]
    rest = elems[2:]
    # the part containing the least positive element is enumerated; the other is forced
    for k in range(0, len(rest) + 1):
        na = k + 2
        if size % na or size // na < 2:
            continue
        for extra in combinations(rest, k):
            a = 1 | (1 << first)
            for x in extra:
                a |= 1 << x
            b = forced_complement(target, a)
            if b is not None and b != 1:
                return (0, first, *extra), tuple(i for i in range(b.bit_length()) if b >> i & 1)
    return None


def is_decomposable_set(
    s: StructuredSet, bound: int | None = None
) -> tuple[StructuredSet, StructuredSet] | None:
    """A split s = B (+) C with |B|, |C| >= 2, or None if there is none.

    Finite sets are searched exhaustively.  Dilated intervals G * [0, g)
    split exactly when g is composite.
    """
    s = normalize(s)
    scale = 1
    if isinstance(s, Dilated):
        scale, s = s.scale, s.inner
    if isinstance(s, Interval):
        p = _smallest_factor(s.length)
        if p == s.length:
            return None
        return dilated(scale, interval(p)), dilated(scale * p, interval(s.length // p))
    if isinstance(s, Finite):
        split = _decompose_finite(s.elements)
        if split is None:
            return None
        b, c = split
        return dilated(scale, finite(b)), dilated(scale, finite(c))
    if isinstance(s, Tail):
        return dilated(scale, interval(2)), dilated(scale * 2, NATURALS)
    if isinstance(s, DirectSum):
        return dilated(scale, s.parts[0]), dilated(scale, normalize(DirectSum(s.parts[1:])))
    raise Unsupported(f"cannot decide decomposability of {s}")


def is_indecomposable_system(bns: BritishNumberSystem) -> bool:
    """True when every radix of the schedule is prime."""
    sched = bns.schedule
    return all(is_prime(g) for g in sched.prefix + sched.tail)

"""Additive systems and the exhaustive unique-representation verifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from addsys.errors import BoundTooSmall, InvalidSystem
from addsys.sets import (
    StructuredSet,
    Tail,
    _check_bound,
    contains,
    enumerate_set,
    least_positive,
    lowest_bit,
    normalize,
    representations_in,
    sets_equal,
    sum_masks,
    to_expr,
)

# User labels are strings; integers are reserved for sets introduced by dilation.
Label = Union[str, int]


def _check_label(label) -> Label:
    if isinstance(label, bool) or not isinstance(label, (str, int)):
        raise InvalidSystem(f"label must be a string or an integer, got {label!r}")
    return label


@dataclass(frozen=True)
class AdditiveSystem:
    """An indexed family of sets, each containing 0 and at least one other element.

    Construction checks only the local rules.  Whether the family really
    direct-sums to N0 is a question for :func:`verify`.
    """

    members: tuple[tuple[Label, StructuredSet], ...]

    def __post_init__(self):
        members = tuple((_check_label(lbl), normalize(s)) for lbl, s in self.members)
        if not members:
            raise InvalidSystem("an additive system needs at least one member")
        seen = set()
        for label, s in members:
            if label in seen:
                raise InvalidSystem(f"duplicate label {label!r}")
            seen.add(label)
            if least_positive(s) is None:
                raise InvalidSystem(f"member {label!r} = {to_expr(s)} has fewer than 2 elements")
            if isinstance(s, Tail) and len(members) > 1:
                raise InvalidSystem(f"member {label!r} is all of N0 but the system has other members")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, members: Iterable[tuple[Label, StructuredSet]] | dict) -> "AdditiveSystem":
        if isinstance(members, dict):
            members = members.items()
        return cls(tuple(members))

    @property
    def labels(self) -> tuple[Label, ...]:
        return tuple(lbl for lbl, _ in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[tuple[Label, StructuredSet]]:
        return iter(self.members)

    def __getitem__(self, label: Label) -> StructuredSet:
        for lbl, s in self.members:
            if lbl == label:
                return s
        raise KeyError(label)

    def __contains__(self, label) -> bool:
        return any(lbl == label for lbl, _ in self.members)

    def without(self, label: Label) -> "AdditiveSystem":
        if label not in self:
            raise KeyError(label)
        return AdditiveSystem(tuple(m for m in self.members if m[0] != label))

    def __str__(self) -> str:
        return "(" + ", ".join(f"{lbl}: {to_expr(s)}" for lbl, s in self.members) + ")"


@dataclass(frozen=True)
class Representation:
    """The nonzero summands of one representation, as (label, element) pairs."""

    terms: tuple[tuple[Label, int], ...]

    @property
    def value(self) -> int:
        return sum(a for _, a in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{a}[{lbl}]" for lbl, a in self.terms)


@dataclass(frozen=True)
class Valid:
    def __str__(self) -> str:
        return "Valid"


@dataclass(frozen=True)
class MissingRepresentation:
    n: int

    def __str__(self) -> str:
        return f"MissingRepresentation({self.n})"


@dataclass(frozen=True)
class DuplicateRepresentation:
    n: int
    rep1: Representation
    rep2: Representation

    def __str__(self) -> str:
        return f"DuplicateRepresentation({self.n}: {self.rep1} = {self.rep2})"


@dataclass(frozen=True)
class OverlapViolation:
    i: Label
    j: Label
    n: int

    def __str__(self) -> str:
        return f"OverlapViolation({self.i!r}, {self.j!r}, {self.n})"


Verdict = Union[Valid, MissingRepresentation, DuplicateRepresentation, OverlapViolation]


@dataclass(frozen=True)
class VerificationReport:
    bound: int
    verdict: Verdict
    checked: int

    @property
    def ok(self) -> bool:
        return isinstance(self.verdict, Valid)

    def __str__(self) -> str:
        if self.ok:
            return f"Valid up to {self.bound}"
        return f"{self.verdict} (checked [0,{self.bound}))"


def representations_of(
    sys: AdditiveSystem, n: int, limit: int | None = None
) -> list[Representation]:
    """All representations of ``n`` using one element from each member.

    Only elements up to ``n`` can take part, so the search is exact.
    """
    if n < 0:
        return []
    labels = sys.labels
    lists = [enumerate_set(s, n + 1) for _, s in sys]
    reps = []
    for choice in sorted(representations_in(lists, n, limit)):
        terms = tuple((labels[i], a) for i, a in enumerate(choice) if a)
        reps.append(Representation(terms))
    return reps


def verify(sys: AdditiveSystem, bound: int) -> VerificationReport:
    """Check that every n in ``[0, bound)`` has exactly one representation.

    On failure the report carries the least offending n.  A duplicate that
    comes from one integer lying in two members is reported as an overlap.
    """
    _check_bound(bound)
    lists = [enumerate_set(s, bound) for _, s in sys]
    once, twice = sum_masks(lists, bound)
    missing = ~once & ((1 << bound) - 1)
    bad = missing | twice
    if not bad:
        return VerificationReport(bound, Valid(), bound)
    n = lowest_bit(bad)
    if missing >> n & 1:
        return VerificationReport(bound, MissingRepresentation(n), bound)
    owners = [lbl for lbl, s in sys if n and contains(s, n)]
    if len(owners) >= 2:
        return VerificationReport(bound, OverlapViolation(owners[0], owners[1], n), bound)
    rep1, rep2 = representations_of(sys, n, limit=2)
    return VerificationReport(bound, DuplicateRepresentation(n, rep1, rep2), bound)


def subfamily_rigidity_check(sys: AdditiveSystem, drop: Label, bound: int) -> VerificationReport:
    """Verify ``sys`` with member ``drop`` removed.

    For a valid system the result is MissingRepresentation at the dropped
    member's least positive element, which has no other representation.
    """
    m = least_positive(sys[drop])
    if bound <= m:
        raise BoundTooSmall(f"bound {bound} does not exceed {m}, the least positive element of {drop!r}")
    if len(sys) == 1:
        raise InvalidSystem("cannot drop the only member of a system")
    return verify(sys.without(drop), bound)


def systems_equal(a: AdditiveSystem, b: AdditiveSystem, bound: int) -> bool:
    """Member-by-member equality on ``[0, bound)``, matching members by label."""
    if len(a) != len(b) or set(a.labels) != set(b.labels):
        return False
    return all(sets_equal(s, b[lbl], bound) for lbl, s in a)

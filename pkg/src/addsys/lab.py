"""Exhaustive searches for sumset decompositions of finite sets.

Given a finite target C containing 0, look for A and B with |A|, |B| >= 2 and

    DIRECT_SUM      A (+) B = C, every sum distinct
    SUMSET          A + B = C
    SQUARE          A + A = C
    SUBSET_SLACK    A + B inside C, at most ``slack`` elements of C missed
    SUPERSET_SLACK  A + B covers C, at most ``slack`` extra elements

"At most slack" is how this module makes an "almost" statement precise;
the caller picks the slack.

Candidates are subsets of [0, max C] containing 0, widened to
[0, max C + slack] for SUPERSET_SLACK (any element of A or B is itself a
sum, so larger elements could only be paid for out of the slack).  An
outcome with ``exhausted=True`` means every candidate in that space was
examined.  Sets are handled as int bitmasks internally.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator

from addsys.errors import BudgetExceeded


class Mode(enum.Enum):
    DIRECT_SUM = "direct-sum"
    SUMSET = "sumset"
    SQUARE = "square"
    SUBSET_SLACK = "subset-slack"
    SUPERSET_SLACK = "superset-slack"


@dataclass(frozen=True)
class SearchProblem:
    target: frozenset[int]
    mode: Mode = Mode.DIRECT_SUM
    slack: int = 0

    def __post_init__(self):
        target = frozenset(int(x) for x in self.target)
        if 0 not in target or min(target) < 0:
            raise ValueError("target must be a finite set of nonnegative integers containing 0")
        if self.slack < 0:
            raise ValueError("slack must be >= 0")
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def candidate_max(self) -> int:
        extra = self.slack if self.mode is Mode.SUPERSET_SLACK else 0
        return max(self.target) + extra


Witness = tuple  # (A, B) or (A,) for SQUARE, each a sorted tuple


@dataclass
class SearchOutcome:
    witnesses: list[Witness] = field(default_factory=list)
    exhausted: bool = False
    nodes_explored: int = 0


def _to_mask(xs) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def _bits(m: int) -> tuple[int, ...]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def _sumset(a: int, b: int) -> int:
    out = 0
    for x in _bits(a):
        out |= b << x
    return out


def forced_complement(target: int, a: int) -> int | None:
    """The unique B with A (+) B = target, as a mask, or None if there is none.

    The least element of the target not yet covered cannot be a + b with
    a > 0, since b itself would then be uncovered and smaller.  So it must
    be in B, which fixes B one element at a time.
    """
    covered = 0
    b = 0
    remaining = target
    while remaining:
        x = (remaining & -remaining).bit_length() - 1
        shifted = a << x
        if shifted & ~target or shifted & covered:
            return None
        covered |= shifted
        remaining &= ~shifted
        b |= 1 << x
    return b


def _subsets_with_zero(universe: tuple[int, ...], required: int = 0) -> Iterator[int]:
    """Masks of subsets of ``universe`` containing 0 and the ``required`` bits, by increasing size."""
    free = [x for x in universe if x != 0 and not required >> x & 1]
    base = 1 | required
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            yield base | _to_mask(extra)


class _Budget:
    def __init__(self, max_nodes: int | None, time_limit: float | None):
        self.max_nodes = max_nodes
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.nodes = 0

    def tick(self) -> bool:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return False
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            return False
        return True


def search(
    problem: SearchProblem, max_nodes: int | None = None, time_limit: float | None = None
) -> SearchOutcome:
    """Find every witness for ``problem``.

    Pairs come out once each with A <= B as sorted tuples.  Raises
    BudgetExceeded, carrying the partial outcome, when ``max_nodes`` or
    ``time_limit`` (seconds) runs out.
    """
    budget = _Budget(max_nodes, time_limit)
    found: set[Witness] = set()
    runner = {
        Mode.DIRECT_SUM: _search_direct_sum,
        Mode.SUMSET: _search_pairs,
        Mode.SQUARE: _search_square,
        Mode.SUBSET_SLACK: _search_pairs,
        Mode.SUPERSET_SLACK: _search_pairs,
    }[problem.mode]
    completed = runner(problem, budget, found)
    outcome = SearchOutcome(sorted(found), completed, min(budget.nodes, budget.max_nodes or budget.nodes))
    if not completed:
        raise BudgetExceeded(outcome)
    return outcome


def _pair(a: int, b: int) -> Witness:
    x, y = _bits(a), _bits(b)
    return (x, y) if x <= y else (y, x)


def _search_direct_sum(problem: SearchProblem, budget: _Budget, found: set) -> bool:
    target = _to_mask(problem.target)
    elems = tuple(sorted(problem.target))
    size = len(elems)
    if size < 4:
        return True
    # The least positive element of C lies in exactly one of A, B; call that one A.
    # Sorted as tuples, that set is the lexicographically smaller one.
    first = 1 << elems[1]
    for a in _subsets_with_zero(elems, first):
        na = bin(a).count("1")
        if size % na or size // na < 2:
            continue
        if not budget.tick():
            return False
        b = forced_complement(target, a)
        if b is not None and b != 1:
            found.add(_pair(a, b))
    return True


def _search_square(problem: SearchProblem, budget: _Budget, found: set) -> bool:
    target = _to_mask(problem.target)
    elems = tuple(sorted(problem.target))
    for a in _subsets_with_zero(elems):
        if a == 1:
            continue
        if not budget.tick():
            return False
        if _sumset(a, a) == target:
            found.add((_bits(a),))
    return True


def _search_pairs(problem: SearchProblem, budget: _Budget, found: set) -> bool:
    target = _to_mask(problem.target)
    mode, slack = problem.mode, problem.slack
    universe = tuple(range(problem.candidate_max + 1))
    if mode is not Mode.SUPERSET_SLACK:
        universe = tuple(sorted(problem.target))
    outside = _to_mask(universe) & ~target

    def accept(s: int) -> bool:
        if mode is Mode.SUMSET:
            return s == target
        if mode is Mode.SUBSET_SLACK:
            return s & ~target == 0 and bin(target & ~s).count("1") <= slack
        return target & ~s == 0 and bin(s & ~target).count("1") <= slack

    for a in _subsets_with_zero(universe):
        if a == 1:
            continue
        if mode is Mode.SUPERSET_SLACK and bin(a & outside).count("1") > slack:
            continue
        if mode is Mode.SUPERSET_SLACK:
            partners = universe
        else:
            # b + A must stay inside C, so only these b can occur
            partners = tuple(x for x in universe if (a << x) & ~target == 0)
        for b in _subsets_with_zero(partners):
            if b == 1 or _bits(b) < _bits(a):
                continue
            if mode is Mode.SUPERSET_SLACK and bin(b & outside).count("1") > slack:
                continue
            if not budget.tick():
                return False
            if accept(_sumset(a, b)):
                found.add(_pair(a, b))
    return True


def validate_witness(problem: SearchProblem, witness) -> bool:
    """Recheck a witness against the defining equation of the problem's mode."""
    target = set(problem.target)
    mode = problem.mode
    sets = [set(w) for w in witness]
    if mode is Mode.SQUARE:
        if len(sets) != 1:
            return False
        sets = sets * 2
    elif len(sets) != 2:
        return False
    a, b = sets
    if len(a) < 2 or len(b) < 2 or 0 not in a or 0 not in b:
        return False
    sums = [x + y for x, y in product(a, b)]
    total = set(sums)
    if mode is Mode.DIRECT_SUM:
        return len(sums) == len(total) and total == target
    if mode in (Mode.SUMSET, Mode.SQUARE):
        return total == target
    if mode is Mode.SUBSET_SLACK:
        return total <= target and len(target - total) <= problem.slack
    return total >= target and len(total - target) <= problem.slack

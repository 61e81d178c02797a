"""Dilation and contraction of additive systems, and composition of their witnesses.

Dilating by radices (g_1, ..., g_r) introduces members labelled 1..r,
member i being G_{i-1} * [0, g_i).  Integer labels already present are
shifted up by r, so repeated dilation never reuses a label and labels line
up with a single dilation by the concatenated radices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from addsys.errors import InvalidRadix, LabelMismatch, NotAPartition
from addsys.sets import dilated, direct_sum, interval
from addsys.systems import AdditiveSystem, Label


def _is_int_label(label: Label) -> bool:
    return isinstance(label, int) and not isinstance(label, bool)


def partial_products(radices: Sequence[int]) -> tuple[int, ...]:
    """G_0 = 1, G_i = g_1 * ... * g_i."""
    out = [1]
    for g in radices:
        out.append(out[-1] * g)
    return tuple(out)


def check_radices(radices: Iterable[int]) -> tuple[int, ...]:
    radices = tuple(int(g) for g in radices)
    for g in radices:
        if g < 2:
            raise InvalidRadix(f"radix must be >= 2, got {g}")
    return radices


@dataclass(frozen=True)
class IndexPartition:
    """Disjoint nonempty classes of member labels, each with its own label."""

    classes: tuple[tuple[Label, frozenset], ...]

    def __post_init__(self):
        classes = tuple((lbl, frozenset(ms)) for lbl, ms in self.classes)
        seen_labels: set = set()
        seen_members: set = set()
        for lbl, ms in classes:
            if lbl in seen_labels:
                raise NotAPartition(f"class label {lbl!r} used twice")
            seen_labels.add(lbl)
            if not ms:
                raise NotAPartition(f"class {lbl!r} is empty")
            clash = seen_members & ms
            if clash:
                raise NotAPartition(f"labels {sorted(map(str, clash))} appear in two classes")
            seen_members |= ms
        object.__setattr__(self, "classes", classes)

    @classmethod
    def of(cls, classes: dict | Iterable) -> "IndexPartition":
        if isinstance(classes, dict):
            classes = classes.items()
        return cls(tuple((lbl, frozenset(ms)) for lbl, ms in classes))

    @classmethod
    def singletons(cls, labels: Iterable[Label]) -> "IndexPartition":
        return cls(tuple((lbl, frozenset([lbl])) for lbl in labels))

    @property
    def labels(self) -> tuple[Label, ...]:
        return tuple(lbl for lbl, _ in self.classes)

    @property
    def members(self) -> frozenset:
        return frozenset().union(*(ms for _, ms in self.classes))

    def __getitem__(self, label: Label) -> frozenset:
        for lbl, ms in self.classes:
            if lbl == label:
                return ms
        raise KeyError(label)

    def class_of(self, member: Label) -> Label:
        for lbl, ms in self.classes:
            if member in ms:
                return lbl
        raise KeyError(member)


@dataclass(frozen=True)
class DilationRecord:
    radices: tuple[int, ...]
    partial_products: tuple[int, ...]
    introduced_labels: tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    """Certificate that a system is ``partition`` applied to a base dilated by ``radices``."""

    partition: IndexPartition
    radices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "radices", check_radices(self.radices))


def dilate_family(sys: AdditiveSystem, radices: Sequence[int]) -> tuple[AdditiveSystem, DilationRecord]:
    radices = check_radices(radices)
    r = len(radices)
    G = partial_products(radices)
    introduced = [(i, dilated(G[i - 1], interval(radices[i - 1]))) for i in range(1, r + 1)]
    shifted = [
        (lbl + r if _is_int_label(lbl) else lbl, dilated(G[r], s)) for lbl, s in sys
    ]
    record = DilationRecord(radices, G, tuple(range(1, r + 1)))
    return AdditiveSystem(tuple(introduced + shifted)), record


def dilate(sys: AdditiveSystem, g: int) -> tuple[AdditiveSystem, DilationRecord]:
    return dilate_family(sys, (g,))


def contract(sys: AdditiveSystem, p: IndexPartition, bound: int) -> AdditiveSystem:
    """Replace each class of ``p`` by the direct sum of its members.

    Each sum is checked for unique representation below ``bound``; a
    DuplicateRepresentationError here means ``sys`` was not additive.
    """
    labels = sys.labels
    if p.members != frozenset(labels) or len(labels) != len(p.members):
        missing = set(labels) - p.members
        extra = p.members - set(labels)
        raise NotAPartition(
            f"partition does not match the system labels (uncovered: {sorted(map(str, missing))}, "
            f"unknown: {sorted(map(str, extra))})"
        )
    members = []
    for cls_label, cls_members in p.classes:
        parts = [s for lbl, s in sys if lbl in cls_members]
        members.append((cls_label, direct_sum(parts, bound)))
    return AdditiveSystem(tuple(members))


def apply_witness(base: AdditiveSystem, w: Witness, bound: int) -> AdditiveSystem:
    dilated_sys, _ = dilate_family(base, w.radices)
    return contract(dilated_sys, w.partition, bound)


def identity_witness(labels: Iterable[Label]) -> Witness:
    return Witness(IndexPartition.singletons(labels), ())


def compose_contractions(p_outer: IndexPartition, p_inner: IndexPartition) -> IndexPartition:
    """Partition of the innermost labels equivalent to contracting by ``p_inner`` then ``p_outer``.

    Class i of the result is the union of the inner classes named in outer class i.
    """
    if p_outer.members != frozenset(p_inner.labels):
        raise LabelMismatch("outer partition must partition the inner partition's class labels")
    inner = dict(p_inner.classes)
    return IndexPartition(
        tuple((lbl, frozenset().union(*(inner[j] for j in js))) for lbl, js in p_outer.classes)
    )


def compose_contraction_dilation(outer: Witness, inner: Witness) -> Witness:
    """Fuse two contraction-of-dilation witnesses into one.

    ``outer`` takes B dilated by (g_1..g_r) to A and ``inner`` takes C
    dilated by (g'_1..g'_s) to B.  The result takes C dilated by
    (g_1..g_r, g'_1..g'_s) to A.  Class i of the result collects

      * the positions of outer class i that are dilation labels in [1, r];
      * r + k for every dilation label k of an inner class named in outer class i;
      * the base labels of C in those same inner classes.
    """
    r, s = len(outer.radices), len(inner.radices)
    inner_classes = dict(inner.partition.classes)
    J = frozenset(inner_classes)
    if any(_is_int_label(j) for j in J):
        raise LabelMismatch("inner class labels must not be integers")
    inner_ints = {k for k in inner.partition.members if _is_int_label(k)}
    if inner_ints != set(range(1, s + 1)):
        raise LabelMismatch(f"inner witness must use exactly the dilation labels 1..{s} as integers")
    if outer.partition.members != frozenset(range(1, r + 1)) | J:
        raise LabelMismatch("outer witness must partition 1..r together with the inner class labels")

    classes = []
    for lbl, js in outer.partition.classes:
        own = {j for j in js if _is_int_label(j)}
        lifted = {r + k for j in js if not _is_int_label(j) for k in inner_classes[j] if _is_int_label(k)}
        base = {k for j in js if not _is_int_label(j) for k in inner_classes[j] if not _is_int_label(k)}
        classes.append((lbl, frozenset(own | lifted | base)))
    return Witness(IndexPartition(tuple(classes)), outer.radices + inner.radices)


def compose_chain(witnesses: Sequence[Witness]) -> Witness:
    """Fold a chain A_0 <- A_1 <- ... <- A_n of one-step witnesses into one witness."""
    if not witnesses:
        raise ValueError("empty witness chain")
    return reduce(compose_contraction_dilation, witnesses)

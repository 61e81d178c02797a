from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from addsys.classify import GeneratorSchedule, build_bns  # noqa: E402
from addsys.dsl import parse_system, to_system  # noqa: E402
from addsys.transforms import IndexPartition, contract  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
GOLDEN_DIR = ROOT / "tests" / "golden"


def load(name: str, bound: int = 10_000):
    return to_system(parse_system((CORPUS / name).read_text()), bound)


@pytest.fixture
def corpus_system():
    return load


@st.composite
def radix_lists(draw, min_size=1, max_size=4, max_radix=5):
    return tuple(draw(st.lists(st.integers(2, max_radix), min_size=min_size, max_size=max_size)))


@st.composite
def small_systems(draw, max_size=4, max_radix=5):
    """A random additive system: a truncated radix system with members merged at random."""
    radices = draw(radix_lists(1, max_size, max_radix))
    base = build_bns(GeneratorSchedule(radices, (2,)), len(radices), closing_label="tail")
    labels = list(base.labels)
    k = draw(st.integers(2, len(labels)))
    owner = [draw(st.integers(0, k - 1)) for _ in labels]
    # every class nonempty
    for c in range(k):
        owner[c] = c
    perm = draw(st.permutations(range(len(labels))))
    owner = [owner[perm[i]] for i in range(len(labels))]
    classes = {}
    for lbl, c in zip(labels, owner):
        classes.setdefault(f"S{c}", set()).add(lbl)
    return contract(base, IndexPartition.of(classes), 10_000)

from __future__ import annotations

import pytest
from hypothesis import given, settings

from addsys.dsl import document_of, parse_set_expr, parse_system, print_system, realize, to_system
from addsys.errors import DslSyntaxError, DuplicateLabel, DuplicateRepresentationError, NonZeroBase
from addsys.serialize import (
    classification_from_json,
    classification_to_json,
    partition_from_json,
    partition_to_json,
    report_to_json,
    schedule_from_json,
    schedule_to_json,
    system_from_json,
    system_to_json,
    witness_from_json,
    witness_to_json,
)
from addsys.classify import GeneratorSchedule, classify
from addsys.sets import NATURALS, Dilated, DirectSum, Finite, Interval, Tail, dilated, interval
from addsys.systems import AdditiveSystem, systems_equal, verify
from addsys.transforms import IndexPartition, Witness
from conftest import CORPUS, load, small_systems

MONETARY = """
system monetary {
  set M1 = [0,12)
  set M2 = 12 * [0,20)   # shillings
  set M3 = 240 * N0
}
"""


def test_parse_monetary():
    doc = parse_system(MONETARY)
    assert doc.name == "monetary"
    assert doc.declarations == (
        ("M1", Interval(12)),
        ("M2", Dilated(12, Interval(20))),
        ("M3", Dilated(240, Tail())),
    )


def test_expression_forms():
    assert parse_set_expr("{0, 1, 4, 5}") == Finite((0, 1, 4, 5))
    assert parse_set_expr("[0,2) + 4 * [0,2)") == DirectSum((Interval(2), Dilated(4, Interval(2))))
    assert parse_set_expr("2 * 3 * N0") == Dilated(2, Dilated(3, Tail()))
    assert parse_set_expr("3 * ([0,2) + 2 * {0,1})") == Dilated(3, DirectSum((Interval(2), Dilated(2, Finite((0, 1))))))


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("system { set A = [1,3) }", 1, 19),
        ("system {\n  set A = {0,1\n}", 3, 2),
        ("system { set A = 0 * N0 }", 1, 18),
        ("system { set A = [0,2) } extra", 1, 26),
        ("system { set A = $ }", 1, 18),
    ],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(DslSyntaxError) as info:
        parse_system(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_literal_without_zero():
    with pytest.raises(NonZeroBase, match="line 1, column 18"):
        parse_system("system { set A = {1,2} }")


def test_duplicate_label():
    with pytest.raises(DuplicateLabel):
        parse_system("system { set A = [0,2) set A = 2 * N0 }")


def test_realize_checks_sums():
    with pytest.raises(DuplicateRepresentationError):
        realize(parse_set_expr("[0,3) + 2 * [0,2)"), 100)


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.sys")))
def test_print_parse_round_trip(path):
    doc = parse_system(path.read_text())
    assert parse_system(print_system(doc)) == doc


@settings(max_examples=50, deadline=None)
@given(small_systems())
def test_system_text_round_trip(sys):
    back = to_system(parse_system(print_system(document_of(sys, "s"))), 10_000)
    assert systems_equal(back, sys, 2000)


@settings(max_examples=50, deadline=None)
@given(small_systems())
def test_system_json_round_trip(sys):
    assert system_from_json(system_to_json(sys), 10_000) == sys


def test_int_labels_survive_json():
    sys = AdditiveSystem(((1, interval(2)), ("n", dilated(2, NATURALS))))
    data = system_to_json(sys)
    assert data[0]["label"] == 1
    assert system_from_json(data, 100) == sys


def test_witness_and_partition_json():
    w = Witness(IndexPartition.of({"A": {1, 3, "x"}, "B": {2}}), (2, 3, 5))
    assert witness_from_json(witness_to_json(w)) == w
    assert partition_from_json(partition_to_json(w.partition)) == w.partition
    with pytest.raises(ValueError):
        partition_from_json({"classes": [{"label": True, "members": [1]}]})


def test_schedule_json():
    for sched in (GeneratorSchedule((3,), ()), GeneratorSchedule((12, 20), (2,)), GeneratorSchedule((), (2, 3))):
        assert schedule_from_json(schedule_to_json(sched)) == sched


def test_report_json():
    sys = load("monetary.sys").without("shillings")
    data = report_to_json(verify(sys, 480))
    assert data == {"verdict": "MissingRepresentation", "bound": 480, "checked": 480, "n": 12}


@pytest.mark.parametrize("name", ["monetary.sys", "merged.sys", "binary.sys"])
@pytest.mark.parametrize("depth", [1, 32])
def test_classification_json_round_trip(name, depth):
    res = classify(load(name), max_depth=depth)
    back = classification_from_json(classification_to_json(res), 10_000)
    assert back == res


def test_single_element_literal_parses_but_is_not_a_system():
    from addsys.errors import InvalidSystem

    doc = parse_system("system { set A = {0} }")
    with pytest.raises(InvalidSystem):
        to_system(doc, 100)

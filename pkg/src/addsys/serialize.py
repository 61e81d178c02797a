"""JSON encodings of systems, reports, witnesses and classification results.

Sets travel as expression strings in the system-description language,
e.g. ``"12 * [0,20)"``.  Labels keep their JSON type: strings for user
labels, integers for labels introduced by dilation.
"""

from __future__ import annotations

from addsys.classify import (
    BritishNumberSystem,
    ClassificationResult,
    ExtractionStep,
    GeneratorSchedule,
    PartitionSpec,
)
from addsys.dsl import parse_set_expr, realize
from addsys.sets import to_expr
from addsys.systems import (
    AdditiveSystem,
    DuplicateRepresentation,
    MissingRepresentation,
    OverlapViolation,
    Representation,
    VerificationReport,
)
from addsys.transforms import DilationRecord, IndexPartition, Witness


def _label_order(label) -> tuple[int, str]:
    return (0, f"{label:020d}") if isinstance(label, int) else (1, label)


def _check_label(label):
    if isinstance(label, bool) or not isinstance(label, (str, int)):
        raise ValueError(f"labels must be strings or integers, got {label!r}")
    return label


def system_to_json(sys: AdditiveSystem) -> list[dict]:
    return [{"label": lbl, "set": to_expr(s)} for lbl, s in sys]


def system_from_json(data: list, bound: int) -> AdditiveSystem:
    return AdditiveSystem(
        tuple((_check_label(m["label"]), realize(parse_set_expr(m["set"]), bound)) for m in data)
    )


def representation_to_json(rep: Representation) -> list[dict]:
    return [{"label": lbl, "element": a} for lbl, a in rep.terms]


def report_to_json(report: VerificationReport) -> dict:
    v = report.verdict
    out: dict = {"verdict": type(v).__name__, "bound": report.bound, "checked": report.checked}
    if isinstance(v, MissingRepresentation):
        out["n"] = v.n
    elif isinstance(v, DuplicateRepresentation):
        out["n"] = v.n
        out["representations"] = [representation_to_json(v.rep1), representation_to_json(v.rep2)]
    elif isinstance(v, OverlapViolation):
        out["n"] = v.n
        out["labels"] = [v.i, v.j]
    return out


def partition_to_json(p: IndexPartition) -> dict:
    return {
        "classes": [
            {"label": lbl, "members": sorted(ms, key=_label_order)} for lbl, ms in p.classes
        ]
    }


def partition_from_json(data: dict) -> IndexPartition:
    return IndexPartition(
        tuple(
            (_check_label(c["label"]), frozenset(_check_label(m) for m in c["members"]))
            for c in data["classes"]
        )
    )


def witness_to_json(w: Witness) -> dict:
    return {"radices": list(w.radices), "partition": partition_to_json(w.partition)}


def witness_from_json(data: dict) -> Witness:
    return Witness(partition_from_json(data["partition"]), tuple(data.get("radices", ())))


def dilation_record_to_json(rec: DilationRecord) -> dict:
    return {
        "radices": list(rec.radices),
        "partial_products": list(rec.partial_products),
        "introduced_labels": list(rec.introduced_labels),
    }


def schedule_to_json(sched: GeneratorSchedule) -> dict:
    kind = sched.tail_kind
    if kind == "none":
        tail = None
    elif kind == "constant":
        tail = {"kind": "constant", "radix": sched.tail[0]}
    else:
        tail = {"kind": "periodic", "pattern": list(sched.tail)}
    return {"prefix": list(sched.prefix), "tail": tail}


def schedule_from_json(data: dict) -> GeneratorSchedule:
    tail = data.get("tail")
    if tail is None:
        pattern: tuple[int, ...] = ()
    elif tail["kind"] == "constant":
        pattern = (tail["radix"],)
    elif tail["kind"] == "periodic":
        pattern = tuple(tail["pattern"])
    else:
        raise ValueError(f"unknown tail kind {tail['kind']!r}")
    return GeneratorSchedule(tuple(data.get("prefix", ())), pattern)


def step_to_json(step: ExtractionStep) -> dict:
    return {
        "pivot": step.pivot,
        "radix": step.radix,
        "case": step.case.value,
        "symbolic": step.symbolic,
        "quotient": system_to_json(step.quotient),
        "witness": witness_to_json(step.witness),
    }


def classification_to_json(result: ClassificationResult) -> dict:
    sched = schedule_to_json(result.bns.schedule)
    return {
        "prefix": sched["prefix"],
        "tail": sched["tail"],
        "depth": result.depth,
        "terminated": result.terminated,
        "partition": {
            "classes": [
                {"label": lbl, "positions": sorted(ps)} for lbl, ps in result.partition.classes
            ],
            "rest": result.partition.rest,
        },
        "remainder": system_to_json(result.remainder),
        "bound": result.bound,
        "certified_bound": result.certified_bound,
    }


def classification_from_json(data: dict, bound: int) -> ClassificationResult:
    sched = schedule_from_json({"prefix": data["prefix"], "tail": data["tail"]})
    part = data["partition"]
    spec = PartitionSpec(
        tuple((_check_label(c["label"]), frozenset(c["positions"])) for c in part["classes"]),
        part.get("rest"),
    )
    return ClassificationResult(
        bns=BritishNumberSystem(sched),
        partition=spec,
        depth=data.get("depth", len(sched.prefix)),
        terminated=data["terminated"],
        remainder=system_from_json(data["remainder"], bound),
        bound=data.get("bound", bound),
    )

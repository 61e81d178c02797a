"""Command-line front end.

Exit status: 0 on success or a Valid verdict, 1 when a verification
fails or a search finds nothing, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from addsys.classify import (
    DEFAULT_TAIL,
    BritishNumberSystem,
    GeneratorSchedule,
    build_bns,
    classify,
    extraction_step,
    expand,
    is_decomposable_set,
    is_indecomposable_system,
)
from addsys.codec import decode, encode, format_digits, parse_digits, preset
from addsys.dsl import document_of, parse_set_expr, parse_system, print_system, realize, to_system
from addsys.errors import AddsysError, BudgetExceeded
from addsys.lab import Mode, SearchProblem, search
from addsys.sets import enumerate_set, is_finite, max_element, to_expr
from addsys.serialize import (
    classification_from_json,
    classification_to_json,
    dilation_record_to_json,
    partition_from_json,
    report_to_json,
    step_to_json,
    system_to_json,
)
from addsys.systems import verify
from addsys.transforms import check_radices, contract, dilate_family

DEFAULT_BOUND = 10_000


class UsageError(Exception):
    pass


def load_schema(command: str) -> dict:
    """JSON schema for the ``--json`` output of ``command``."""
    return json.loads(resources.files("addsys").joinpath("schemas", f"{command}.json").read_text())


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="check integers in [0, N) (default 10000)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=None, help="accepted for reproducibility; all commands are deterministic")
    return p


def _radix_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--radices", help="comma-separated radices, e.g. 12,20")
    p.add_argument("--preset", help="british-monetary, binary-k, g-adic(g,k) or factorial-k")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="addsys", description="Additive systems for the nonnegative integers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check unique representation below the bound")
    p.add_argument("file")

    for name, what in (("encode", "integer to mixed-radix digits"), ("decode", "mixed-radix digits to integer")):
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("value")
        _radix_args(p)
        p.add_argument("--display-msd", action="store_true", help="digits most significant first")

    p = sub.add_parser("dilate", parents=[common], help="dilate a system by radices")
    p.add_argument("file")
    _radix_args(p)

    p = sub.add_parser("contract", parents=[common], help="contract a system by a JSON partition")
    p.add_argument("file")
    p.add_argument("partition", help="JSON file with {\"classes\": [{\"label\": ..., \"members\": [...]}]}")

    p = sub.add_parser("step", parents=[common], help="one radix extraction step")
    p.add_argument("file")

    p = sub.add_parser("classify", parents=[common], help="express a system as a contraction of a British number system")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=32, help="maximum number of extraction steps (default 32)")

    p = sub.add_parser("expand", parents=[common], help="rebuild a system from a classification JSON")
    p.add_argument("result")

    p = sub.add_parser("bns", parents=[common], help="build a British number system truncation")
    _radix_args(p)
    p.add_argument("--tail", default=",".join(map(str, DEFAULT_TAIL)), help="repeating radix pattern after the prefix (default 2)")
    p.add_argument("--count", type=int, default=None, help="number of interval members (default: prefix length)")

    p = sub.add_parser("decompose", parents=[common], help="split a set as a direct sum of two sets")
    p.add_argument("set", help="set expression, e.g. '{0,1,4,5}' or '[0,6)'")

    p = sub.add_parser("search", parents=[common], help="exhaustive sumset search on a finite set")
    p.add_argument("set", help="finite set expression")
    p.add_argument("--mode", default=Mode.DIRECT_SUM.value, choices=[m.value for m in Mode])
    p.add_argument("--slack", type=int, default=0, help="allowed missing/extra elements for slack modes")
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    return parser


# -- input helpers --------------------------------------------------------

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_system(path: str, bound: int):
    try:
        return to_system(parse_system(_read(path)), bound)
    except AddsysError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None


def _radices(args) -> tuple[int, ...]:
    if bool(args.radices) == bool(args.preset):
        raise UsageError("give exactly one of --radices or --preset")
    try:
        if args.preset:
            return preset(args.preset)
        return check_radices(int(x) for x in args.radices.split(","))
    except (ValueError, AddsysError) as exc:
        raise UsageError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- commands -------------------------------------------------------------

def cmd_verify(args) -> int:
    sys_ = _load_system(args.file, args.bound)
    report = verify(sys_, args.bound)
    _emit(args, {"command": "verify", **report_to_json(report)}, str(report))
    return 0 if report.ok else 1


def cmd_encode(args) -> int:
    radices = _radices(args)
    try:
        n = int(args.value)
    except ValueError:
        raise UsageError(f"not an integer: {args.value!r}") from None
    if n < 0:
        raise UsageError("can only encode nonnegative integers")
    d = encode(n, radices)
    payload = {
        "command": "encode", "verdict": "ok", "n": n, "radices": list(radices),
        "digits": list(d.digits), "overflow": d.overflow,
    }
    _emit(args, payload, format_digits(d, msd_first=args.display_msd))
    return 0


def cmd_decode(args) -> int:
    radices = _radices(args)
    try:
        d = parse_digits(args.value, msd_first=args.display_msd)
        n = decode(d, radices)
    except (ValueError, AddsysError) as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "command": "decode", "verdict": "ok", "n": n, "radices": list(radices),
        "digits": list(d.digits), "overflow": d.overflow,
    }
    _emit(args, payload, str(n))
    return 0


def cmd_dilate(args) -> int:
    sys_ = _load_system(args.file, args.bound)
    radices = _radices(args)
    out, record = dilate_family(sys_, radices)
    payload = {"command": "dilate", "verdict": "ok", "system": system_to_json(out), "record": dilation_record_to_json(record)}
    _emit(args, payload, print_system(document_of(out)).rstrip())
    return 0


def cmd_contract(args) -> int:
    sys_ = _load_system(args.file, args.bound)
    try:
        part = partition_from_json(_load_json(args.partition))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.partition}: malformed partition: {exc}") from None
    out = contract(sys_, part, args.bound)
    payload = {"command": "contract", "verdict": "ok", "bound": args.bound, "system": system_to_json(out)}
    _emit(args, payload, print_system(document_of(out)).rstrip())
    return 0


def cmd_step(args) -> int:
    sys_ = _load_system(args.file, args.bound)
    step = extraction_step(sys_, args.bound)
    text = "\n".join([
        f"pivot: {step.pivot}",
        f"radix: {step.radix}",
        f"case: {step.case.value}",
        f"quotient: {step.quotient}",
        f"valid below: {args.bound // step.radix}",
    ])
    _emit(args, {"command": "step", "verdict": "ok", "bound": args.bound, **step_to_json(step)}, text)
    return 0


def _positions_text(ps, is_rest: bool) -> str:
    items = [str(n) for n in sorted(ps)]
    if is_rest:
        items.append("rest")
    return ",".join(items) if items else "-"


def cmd_classify(args) -> int:
    sys_ = _load_system(args.file, args.bound)
    result = classify(sys_, args.depth, args.bound)
    payload = {"command": "classify", "verdict": "terminated" if result.terminated else "partial"}
    payload.update(classification_to_json(result))
    lines = [
        "prefix: " + (",".join(map(str, result.prefix)) or "(empty)"),
        "tail: constant 2" if result.terminated else "tail: undetermined",
        f"terminated: {'yes' if result.terminated else 'no'} after {result.depth} steps",
        "classes:",
    ]
    for lbl, ps in result.partition.classes:
        lines.append(f"  {lbl}: {_positions_text(ps, lbl == result.partition.rest)}")
    if not result.terminated:
        lines.append(f"remainder: {result.remainder}")
    lines.append(f"certified up to {result.certified_bound}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_expand(args) -> int:
    data = _load_json(args.result)
    try:
        result = classification_from_json(data, args.bound)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.result}: malformed classification: {exc}") from None
    out = expand(result, args.bound)
    payload = {"command": "expand", "verdict": "ok", "bound": args.bound, "system": system_to_json(out)}
    _emit(args, payload, print_system(document_of(out)).rstrip())
    return 0


def cmd_bns(args) -> int:
    prefix = _radices(args)
    tail = _int_list(args.tail)
    if not tail:
        raise UsageError("--tail must name at least one radix")
    try:
        sched = GeneratorSchedule(prefix, tail)
    except AddsysError as exc:
        raise UsageError(str(exc)) from None
    count = len(prefix) if args.count is None else args.count
    sys_ = build_bns(sched, count)
    report = verify(sys_, args.bound)
    indecomposable = is_indecomposable_system(BritishNumberSystem(sched))
    payload = {
        "command": "bns", **report_to_json(report),
        "prefix": list(prefix), "tail": list(tail), "count": count,
        "indecomposable": indecomposable, "system": system_to_json(sys_),
    }
    text = print_system(document_of(sys_)).rstrip()
    text += f"\n{report}\nindecomposable: {'yes' if indecomposable else 'no'}"
    _emit(args, payload, text)
    return 0 if report.ok else 1


def _load_set(text: str, bound: int):
    try:
        return realize(parse_set_expr(text), bound)
    except AddsysError as exc:
        raise UsageError(str(exc)) from None


def cmd_decompose(args) -> int:
    s = _load_set(args.set, args.bound)
    split = is_decomposable_set(s, args.bound)
    payload: dict = {"command": "decompose", "set": to_expr(s)}
    if split is None:
        payload["verdict"] = "indecomposable"
        _emit(args, payload, f"{to_expr(s)} is indecomposable")
        return 1
    b, c = split
    payload.update(verdict="decomposable", parts=[to_expr(b), to_expr(c)])
    _emit(args, payload, f"{to_expr(s)} = ({to_expr(b)}) (+) ({to_expr(c)})")
    return 0


def cmd_search(args) -> int:
    s = _load_set(args.set, args.bound)
    if not is_finite(s):
        raise UsageError("search needs a finite set")
    target = frozenset(enumerate_set(s, max_element(s) + 1))
    problem = SearchProblem(target, Mode(args.mode), args.slack)
    try:
        outcome = search(problem, args.max_nodes, args.time_limit)
        verdict = "found" if outcome.witnesses else "none"
    except BudgetExceeded as exc:
        outcome = exc.partial
        verdict = "budget-exceeded"
    payload = {
        "command": "search", "verdict": verdict, "mode": problem.mode.value, "slack": problem.slack,
        "target": sorted(target), "candidate_max": problem.candidate_max,
        "witnesses": [[list(part) for part in w] for w in outcome.witnesses],
        "exhausted": outcome.exhausted, "nodes_explored": outcome.nodes_explored,
    }
    sep = " (+) " if problem.mode is Mode.DIRECT_SUM else " , "
    lines = [sep.join("{" + ",".join(map(str, part)) + "}" for part in w) for w in outcome.witnesses]
    status = "exhausted" if outcome.exhausted else "budget exceeded"
    lines.append(f"{len(outcome.witnesses)} witnesses; {status} after {outcome.nodes_explored} candidates")
    _emit(args, payload, "\n".join(lines))
    return 0 if verdict == "found" else 1


COMMANDS = {
    "verify": cmd_verify,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "dilate": cmd_dilate,
    "contract": cmd_contract,
    "step": cmd_step,
    "classify": cmd_classify,
    "expand": cmd_expand,
    "bns": cmd_bns,
    "decompose": cmd_decompose,
    "search": cmd_search,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.bound < 1:
        print("addsys: error: --bound must be >= 1", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"addsys {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except AddsysError as exc:
        print(f"addsys {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

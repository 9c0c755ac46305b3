"""Command-line interface.

Exit codes: 0 success, 1 domain errors (not a solution, invalid
dissection), 2 usage errors.  Output is exact; ``--format json`` switches
the data subcommands to machine-readable output that round-trips through
the documented file formats.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dissections import (
    coiffee_from_t_solution,
    dissection_from_id_solution,
    dumps_dissection,
    echancree_from_s_solution,
    loads_dissection,
    solution_from_dissection,
    validate,
)
from .matrices import ID, S, T, T_INV, Mat2, parse_matrix
from .render import RenderSpec, render
from .solvers import (
    TARGET_ID,
    TARGET_S,
    TARGET_T,
    check_equation,
    enumerate_solutions,
    generate_closure,
    minimal_presentation,
    parse_target,
)
from .verify import run_suite
from .words import eval_word, format_word, parse_word, reduce_word

_NAMED = [
    (ID, "Id"), (-ID, "-Id"),
    (S, "S"), (-S, "-S"),
    (T, "T"), (-T, "-T"),
    (T_INV, "T^-1"), (-T_INV, "-T^-1"),
]


def _recognize(m: Mat2) -> str | None:
    for known, name in _NAMED:
        if m == known:
            return name
    return None


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _word_or_empty(word) -> str:
    return format_word(word) if word else "<empty>"


def cmd_eval(args) -> int:
    word = parse_word(args.word)
    m = eval_word(word)
    name = _recognize(m)
    if args.format == "json":
        _emit_json({"word": list(word), "matrix": m.text(), "is": name})
        return 0
    print(m.text())
    if name is not None:
        print(f"= {name}")
    return 0


def cmd_check(args) -> int:
    word = parse_word(args.word)
    target = parse_target(args.target)
    sign = check_equation(word, target)
    if args.format == "json":
        _emit_json(
            {
                "word": list(word),
                "target": target.name,
                "solves": sign is not None,
                "sign": sign,
            }
        )
        return 0 if sign is not None else 1
    if sign is None:
        print(f"{format_word(word)} does not solve the {target.name} equation")
        return 1
    print(f"{format_word(word)} ε={sign:+d}")
    return 0


def _solutions_obj(result) -> dict:
    return {
        "target": result.target.name,
        "matrix": result.target.matrix.text(),
        "n": result.n,
        "bound": result.bound,
        "solutions": [
            {"word": list(sol.word), "sign": sol.sign} for sol in result.solutions
        ],
    }


def cmd_solve(args) -> int:
    target = parse_target(args.target)
    result = enumerate_solutions(args.n, target, args.bound)
    if args.format == "json":
        _emit_json(_solutions_obj(result))
        return 0
    for sol in result.solutions:
        print(f"{format_word(sol.word)} ε={sol.sign:+d}")
    return 0


def cmd_generate(args) -> int:
    seed = parse_word(args.seed)
    target = parse_target(args.target)
    result = generate_closure(seed, args.max_n, target)
    if args.format == "json":
        obj = _solutions_obj(result)
        for entry, sol in zip(obj["solutions"], result.solutions):
            entry["op_b_parity"] = sol.op_b_parity
        _emit_json(obj)
        return 0
    for sol in result.solutions:
        print(f"{format_word(sol.word)} ε={sol.sign:+d} b-parity={sol.op_b_parity}")
    return 0


def cmd_reduce(args) -> int:
    word = parse_word(args.word)
    reduced, sign, trace = reduce_word(word)
    if args.format == "json":
        _emit_json(
            {
                "word": list(word),
                "reduced": list(reduced),
                "sign": sign,
                "trace": [
                    {"rule": step.rule, "pos": step.pos, "sign": step.sign}
                    for step in trace
                ],
            }
        )
        return 0
    print(f"{_word_or_empty(reduced)} sign={sign:+d}")
    for step in trace:
        print(f"  {step.rule}@{step.pos} factor={step.sign:+d}")
    return 0


def cmd_minimal(args) -> int:
    m = parse_matrix(args.matrix)
    word, sign = minimal_presentation(m)
    if args.format == "json":
        _emit_json({"matrix": m.text(), "word": list(word), "sign": sign})
        return 0
    print(f"{_word_or_empty(word)} sign={sign:+d}")
    return 0


def _write_output(data: bytes, path: str | None) -> None:
    if path is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(path, "wb") as handle:
            handle.write(data)


def cmd_dissect(args) -> int:
    word = parse_word(args.word)
    target = parse_target(args.target)
    if target.matrix == TARGET_ID.matrix:
        d = dissection_from_id_solution(word)
    elif target.matrix == TARGET_S.matrix:
        d = echancree_from_s_solution(word)
    elif target.matrix == TARGET_T.matrix:
        if word and word[-1] >= 2:
            d = coiffee_from_t_solution(word)
        else:
            if check_equation(word, TARGET_T) is None:
                raise ValueError(f"{format_word(word)} does not solve the T equation")
            d = echancree_from_s_solution(word[:-1])
            print(
                f"note: last entry is 1; emitting the notched dissection of "
                f"the prefix {format_word(word[:-1])}",
                file=sys.stderr,
            )
    else:
        raise ValueError("dissect supports the targets Id, S and T only")
    _write_output(dumps_dissection(d).encode("utf-8"), args.output)
    return 0


def _load_dissection_file(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return loads_dissection(handle.read())


def cmd_quiddity(args) -> int:
    d = _load_dissection_file(args.file)
    word, target, sign = solution_from_dissection(d)
    if args.format == "json":
        _emit_json(
            {
                "quiddity": list(word),
                "target": target.name,
                "sign": sign,
                "kind": d.kind,
            }
        )
        return 0
    print(f"{format_word(word)} target={target.name} ε={sign:+d}")
    return 0


def cmd_validate(args) -> int:
    d = _load_dissection_file(args.file)
    problems = validate(d)
    if args.format == "json":
        _emit_json({"valid": not problems, "violations": problems})
    elif not problems:
        print("valid")
    else:
        for problem in problems:
            print(problem)
    return 0 if not problems else 1


def cmd_render(args) -> int:
    d = _load_dissection_file(args.file)
    data = render(d, RenderSpec(format=args.format))
    _write_output(data, args.output)
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(max_n=args.max_n, samples=args.samples)
    failed = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        print(f"{status} {name}{suffix}")
        failed += 0 if ok else 1
    return 0 if failed == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiddity",
        description="Exact SL(2,Z) word arithmetic and polygon-dissection models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "evaluate a word to its matrix")
    p.add_argument("word")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("check", cmd_check, "check a word against a target equation")
    p.add_argument("word")
    p.add_argument("--target", required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("solve", cmd_solve, "enumerate all solutions of a given length")
    p.add_argument("--target", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("generate", cmd_generate, "close a seed solution under the surgeries")
    p.add_argument("--seed", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("reduce", cmd_reduce, "collapse interior 1/0 entries, with trace")
    p.add_argument("word")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("minimal", cmd_minimal, "minimal positive word of a matrix class")
    p.add_argument("--matrix", required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("dissect", cmd_dissect, "build the dissection of a solution word")
    p.add_argument("word")
    p.add_argument("--target", required=True)
    p.add_argument("-o", "--output", default=None)

    p = add("quiddity", cmd_quiddity, "read a dissection file's quiddity")
    p.add_argument("file")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("validate", cmd_validate, "validate a dissection file")
    p.add_argument("file")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("render", cmd_render, "draw a dissection file")
    p.add_argument("file")
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("-o", "--output", default=None)

    p = add("verify", cmd_verify, "run the theorem verification suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=2000)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, AssertionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

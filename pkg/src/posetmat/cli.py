"""Command-line interface and file formats.

Matrix text format (".pm"): first line the decimal order n, then n lines of
exactly n characters from {0,1}; trailing newline optional.  A JSON form
{"n": 3, "rows": ["100", "110", "111"]} is accepted and emitted
equivalently.  Exit codes: 0 success, 1 domain error (invalid matrix,
violated law), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import duality, enumeration, pascal, structure
from .compose import compose, kind_name, parse_kind
from .core import BinaryMatrix, PosetMatrix, cover_relation, validate
from .errors import ParseError, PosetMatError, ValidationError
from .operad import verify_laws

USAGE_EXIT = 2
DOMAIN_EXIT = 1


def parse_matrix_text(text: str) -> BinaryMatrix:
    """Parse the .pm format or its JSON form, with positioned diagnostics."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json_matrix(text)
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(1, 1, "missing order line")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(1, 1, f"order is not an integer: {lines[0].strip()!r}")
    if n < 1:
        raise ParseError(1, 1, f"order must be positive, got {n}")
    rows = []
    for r in range(n):
        lineno = r + 2
        if lineno > len(lines) or not lines[lineno - 1].strip():
            raise ParseError(lineno, 1, "missing row")
        line = lines[lineno - 1].strip()
        if len(line) < n:
            raise ParseError(lineno, len(line) + 1, "row too short")
        if len(line) > n:
            raise ParseError(lineno, n + 1, "row too long")
        for c, ch in enumerate(line):
            if ch not in "01":
                raise ParseError(lineno, c + 1, f"invalid character {ch!r}")
        rows.append([int(ch) for ch in line])
    for lineno in range(n + 2, len(lines) + 1):
        if lines[lineno - 1].strip():
            raise ParseError(lineno, 1, "unexpected extra line")
    return BinaryMatrix(rows)


def _parse_json_matrix(text: str) -> BinaryMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.colno, f"bad JSON: {e.msg}")
    if not isinstance(data, dict) or "n" not in data or "rows" not in data:
        raise ParseError(1, 1, 'JSON matrix needs keys "n" and "rows"')
    n, rows = data["n"], data["rows"]
    if not isinstance(n, int) or not isinstance(rows, list) or len(rows) != n:
        raise ParseError(1, 1, f'"rows" must list exactly n={n} strings')
    grid = []
    for r, row in enumerate(rows):
        if not isinstance(row, str) or len(row) != n or set(row) - {"0", "1"}:
            raise ParseError(1, 1, f"row {r + 1} is not an n-character bit string")
        grid.append([int(ch) for ch in row])
    return BinaryMatrix(grid)


def parse_matrix_file(path) -> BinaryMatrix:
    if path == "-":
        return parse_matrix_text(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix_text(fh.read())


def to_pm_text(m) -> str:
    return "\n".join([str(m.height)] + list(m.bit_rows())) + "\n"


def to_json_obj(m) -> dict:
    return {"n": m.height, "rows": list(m.bit_rows())}


def export_hasse(a: PosetMatrix) -> str:
    """DOT digraph of the Hasse diagram: edge j -> i for each cover (i, j)."""
    lines = ["digraph {"]
    lines += [f"  {i};" for i in range(1, a.n + 1)]
    lines += [f"  {j} -> {i};" for i, j in sorted(cover_relation(a), key=lambda p: (p[1], p[0]))]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load_poset(path) -> PosetMatrix:
    return validate(parse_matrix_file(path))


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_matrix(m, args) -> None:
    text = json.dumps(to_json_obj(m)) + "\n" if args.json else to_pm_text(m)
    _emit(text, getattr(args, "output", None))


def cmd_check(args) -> int:
    try:
        a = _load_poset(args.matrix)
    except ValidationError as e:
        if args.json:
            print(json.dumps({"valid": False, "reason": str(e)}))
        else:
            print(f"invalid poset matrix: {e}")
        return DOMAIN_EXIT
    cls = structure.classify_connectivity(a)
    if args.json:
        print(json.dumps({"valid": True, "n": a.n, "connectivity": cls.kind}))
    else:
        print(f"valid poset matrix ({cls.kind})")
    return 0


def cmd_compose(args) -> int:
    kind = parse_kind(args.op)
    a = _load_poset(args.a)
    b = _load_poset(args.b)
    _emit_matrix(compose(kind, a, args.i, b), args)
    return 0


def cmd_laws(args) -> int:
    kind = parse_kind(args.op)
    reports = verify_laws(kind, args.max_n, trials=args.random, seed=args.seed)
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            line = (
                f"{r.law}: {r.verdict}  "
                f"(cases={r.cases_checked}, skipped={r.cases_skipped})"
            )
            print(line)
            if r.witness is not None:
                w = r.witness
                print(f"  witness: A={';'.join(w.a.bit_rows())}", end="")
                if w.b is not None:
                    print(f" B={';'.join(w.b.bit_rows())}", end="")
                if w.c is not None:
                    print(f" C={';'.join(w.c.bit_rows())}", end="")
                print(f" i={w.i}" + (f" j={w.j}" if w.j is not None else ""))
                print(f"  left : {';'.join(w.left.bit_rows())}")
                print(f"  right: {';'.join(w.right.bit_rows())}")
    return DOMAIN_EXIT if any(not r.passed for r in reports) else 0


def cmd_dual(args) -> int:
    _emit_matrix(duality.dual(_load_poset(args.matrix)), args)
    return 0


def cmd_selfdual(args) -> int:
    answer = duality.is_self_dual(_load_poset(args.matrix))
    print(json.dumps(answer) if args.json else ("true" if answer else "false"))
    return 0


def cmd_semiequidual(args) -> int:
    a = _load_poset(args.a)
    b = _load_poset(args.b)
    w = duality.semi_equidual(a, b)
    if w is None:
        print("null")
    else:
        print(json.dumps({"alpha": list(w.alpha)}))
    return 0


def cmd_classify(args) -> int:
    cls = structure.classify_connectivity(_load_poset(args.matrix))
    if args.json:
        out = {"connectivity": cls.kind}
        if cls.witness:
            out["witness"] = list(cls.witness)
        print(json.dumps(out))
    elif cls.connected:
        print("connected")
    else:
        print(f"disconnected (witness: {','.join(map(str, cls.witness))})")
    return 0


def cmd_factor(args) -> int:
    kind = parse_kind(args.op)
    facs = structure.factor(_load_poset(args.matrix), kind)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "a": list(f.a.bit_rows()),
                        "i": f.i,
                        "b": list(f.b.bit_rows()),
                        "op": kind_name(f.kind),
                    }
                    for f in facs
                ]
            )
        )
    else:
        if not facs:
            print("no factorization")
        for f in facs:
            print(f"A={';'.join(f.a.bit_rows())}  i={f.i}  B={';'.join(f.b.bit_rows())}")
    return 0


def _parse_alpha(spec: str) -> tuple:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(x) for x in spec.split(","))


def cmd_invariance(args) -> int:
    a = _load_poset(args.a)
    b = _load_poset(args.b)
    answer = structure.insertion_invariance_class(a, _parse_alpha(args.alpha), b)
    print(json.dumps(answer) if args.json else ("true" if answer else "false"))
    return 0


def cmd_enumerate(args) -> int:
    if args.classes:
        classes = enumeration.classes(args.n, args.filter)
        n_conn = sum(1 for c in classes if c.connected)
        print(
            f"order {args.n}: {len(classes)} classes "
            f"({n_conn} connected, {len(classes) - n_conn} disconnected)"
        )
        matrices = [c.canonical for c in classes]
    else:
        matrices = list(enumeration.generate_all(args.n))
        if args.filter != "all":
            want = args.filter == "connected"
            matrices = [
                m
                for m in matrices
                if structure.classify_connectivity(m).connected == want
            ]
        print(f"order {args.n}: {len(matrices)} matrices ({args.filter})")
    if args.format == "json":
        body = json.dumps([to_json_obj(m) for m in matrices]) + "\n"
    else:
        body = "".join(to_pm_text(m) for m in matrices)
    if args.output:
        _emit(body, args.output)
    elif args.print_matrices:
        sys.stdout.write(body)
    return 0


def cmd_pascal(args) -> int:
    _emit_matrix(pascal.pascal_matrix(args.n), args)
    return 0


def cmd_hasse(args) -> int:
    _emit(export_hasse(_load_poset(args.matrix)), getattr(args, "output", None))
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="posetmat",
        description="Poset matrices: compositions, operad laws, duality, "
        "structure, enumeration.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("check", cmd_check, "validate a matrix file and report connectivity")
    p.add_argument("matrix")

    p = add("compose", cmd_compose, "compose two poset matrices")
    p.add_argument("--op", required=True, help="square|min|max|minmax|boxed:UAV")
    p.add_argument("--i", type=int, required=True, help="insertion position (1-based)")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("a")
    p.add_argument("b")

    p = add("laws", cmd_laws, "check the operad axioms for a composition")
    p.add_argument("--op", required=True)
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--random", type=int, default=None, help="random trials per law")
    p.add_argument("--seed", type=int, default=0)

    p = add("dual", cmd_dual, "flip-transpose dual")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("matrix")

    p = add("selfdual", cmd_selfdual, "is the matrix its own dual?")
    p.add_argument("matrix")

    p = add("semiequidual", cmd_semiequidual, "find a semi-equidual witness block")
    p.add_argument("a")
    p.add_argument("b")

    p = add("classify", cmd_classify, "connected or disconnected")
    p.add_argument("matrix")

    p = add("factor", cmd_factor, "find all two-factor decompositions")
    p.add_argument("--op", default="square")
    p.add_argument("matrix")

    p = add("invariance", cmd_invariance, "are insertions over a range identical?")
    p.add_argument("--alpha", required=True, help="range like 1..3 or list 1,2,3")
    p.add_argument("a")
    p.add_argument("b")

    p = add("enumerate", cmd_enumerate, "generate all poset matrices of an order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="one representative per class")
    p.add_argument(
        "--filter", choices=["all", "connected", "disconnected"], default="all"
    )
    p.add_argument("--format", choices=["pm", "json"], default="pm")
    p.add_argument("--print", dest="print_matrices", action="store_true")
    p.add_argument("-o", "--output", default=None)

    p = add("pascal", cmd_pascal, "binary Pascal matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output", default=None)

    p = add("hasse", cmd_hasse, "export the Hasse diagram as DOT")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("matrix")

    return top


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return USAGE_EXIT
    except FileNotFoundError as e:
        print(f"cannot read file: {e}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return USAGE_EXIT
    except PosetMatError as e:
        print(f"error: {e}", file=sys.stderr)
        return DOMAIN_EXIT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""``qf``: command-line access to the decision procedures.

Exit codes: 0 success or true verdict, 1 false verdict, 2 usage or parse
error, 3 unsupported over the field, 4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import classify, invariants, isotropy, verify
from .errors import QFError
from .expr import evaluate, evaluate_coeff, parse_coeff, parse_form
from .fields import parse_field

__all__ = ["SCHEMA_NAME", "main", "output_schema", "run_command"]

SCHEMA_NAME = "cli-output-v1.json"


def output_schema() -> dict:
    return json.loads(resources.files("qforms").joinpath("schemas", SCHEMA_NAME).read_text())


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field descriptor, e.g. F3, Q, R((x)), F5((x))((y)); repeatable for verify")
    common.add_argument("--format", choices=["text", "json"], default="text")

    p = _Parser(prog="qf", description="Decision procedures for diagonal quadratic forms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("eval", "isotropic", "witt", "hyperbolic", "anisotropic-part", "invariants", "sets"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("expr")
    for name in ("isometric", "similar"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("expr")
        sp.add_argument("expr2")
    sp = sub.add_parser("member", parents=[common])
    sp.add_argument("set", choices=["D", "G", "H"])
    sp.add_argument("expr")
    sp.add_argument("coeff")
    sp = sub.add_parser("predicate", parents=[common])
    sp.add_argument("name", choices=["group", "round", "pfister", "similar-pfister"])
    sp.add_argument("expr")

    sp = sub.add_parser("verify", parents=[common], description="run the exhaustive check suite")
    sp.add_argument("--suite", choices=["paper"], default="paper")
    sp.add_argument("--max-dim", type=int, default=4)
    sp.add_argument("--tower-depth", type=int, default=2)
    sp.add_argument("--checks", help="comma-separated check names (default: all)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=verify.DEFAULT_BUDGET)
    return p


def _form(args, text):
    return evaluate(parse_form(text), args.field_desc)


def _witness(kind: str, value) -> dict:
    return {"kind": kind, "value": str(value)}


def _run(args) -> tuple[object, list[dict], str, int]:
    """Returns (json result, witnesses, text, exit code)."""
    cmd = args.command
    if cmd == "eval":
        q = _form(args, args.expr)
        return {"form": str(q), "dim": q.dim}, [], str(q), 0
    if cmd == "isotropic":
        v = isotropy.is_isotropic(_form(args, args.expr))
        return v, [], _bool(v), 0 if v else 1
    if cmd == "hyperbolic":
        v = isotropy.is_hyperbolic(_form(args, args.expr))
        return v, [], _bool(v), 0 if v else 1
    if cmd == "witt":
        w = isotropy.witt_decomposition(_form(args, args.expr))
        an = w.anisotropic_part
        res = {
            "dim": w.dim,
            "witt_index": w.witt_index,
            "hyperbolic": w.hyperbolic,
            "anisotropic_dim": w.anisotropic_dim,
            "anisotropic_part": None if an is None else str(an),
        }
        text = f"dim {w.dim}, witt index {w.witt_index}, anisotropic part {'0' if an is None else an}"
        return res, [], text, 0
    if cmd == "anisotropic-part":
        an = isotropy.anisotropic_part(_form(args, args.expr))
        if an is None:
            return {"form": None, "invariants": None}, [], "0 (hyperbolic)", 0
        if isinstance(an, invariants.InvariantRecord):
            return {"form": None, "invariants": an.to_dict()}, [], str(an), 0
        return {"form": str(an), "invariants": None}, [], str(an), 0
    if cmd == "invariants":
        r = invariants.invariant_record(_form(args, args.expr))
        return r.to_dict(), [], str(r), 0
    if cmd in ("isometric", "similar"):
        p, q = _form(args, args.expr), _form(args, args.expr2)
        v = invariants.is_isometric(p, q) if cmd == "isometric" else invariants.is_similar(p, q)
        return v, [], _bool(v), 0 if v else 1
    if cmd == "sets":
        vs = classify.value_sets(_form(args, args.expr))
        res = {k: [str(a) for a in vs.ordered(k)] for k in ("D", "G", "H")}
        text = "\n".join(f"{k} = {{{', '.join(v)}}}" for k, v in res.items())
        return res, [], text, 0
    if cmd == "member":
        q = _form(args, args.expr)
        a = evaluate_coeff(parse_coeff(args.coeff), args.field_desc)
        test = {"D": classify.represents, "G": classify.in_G, "H": classify.in_H}[args.set]
        v = test(q, a)
        return v, [], _bool(v), 0 if v else 1
    if cmd == "predicate":
        return _predicate(args)
    raise _UsageError(f"unknown command {cmd}")


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _predicate(args):
    q = _form(args, args.expr)
    witnesses: list[dict] = []
    if args.name == "group":
        a = classify.group_witness(q)
        v = a is None
        if a is not None:
            witnesses.append(_witness("in H \\ D", a))
    elif args.name == "round":
        w = classify.round_witness(q)
        v = w is None
        if w is not None:
            witnesses.append(_witness(w[0], w[1]))
    elif args.name == "pfister":
        slots = classify.pfister_slots(q)
        v = slots is not None
        if slots is not None:
            witnesses.append(_witness("slots", "pfister(" + ", ".join(map(str, slots)) + ")"))
    else:
        v = classify.is_similar_to_pfister(q)
    text = _bool(v)
    if witnesses and not v:
        w = witnesses[0]
        text += f" (witness: {w['value']} {w['kind']})"
    return v, witnesses, text, 0 if v else 1


def _verify(args):
    fields = args.field_list or list(verify.DEFAULT_FIELDS)
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        checks = [_check_name(c) for c in checks]
    try:
        cfg = verify.SweepConfig(
            fields=tuple(parse_field(f) for f in fields),
            max_dim=args.max_dim,
            tower_depth_cap=args.tower_depth,
            checks=checks,
            seed=args.seed,
            budget=args.budget,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    report = verify.run_suite(cfg)
    return report.to_dict(), [], report.render_text(), 0 if report.ok else 1


def _check_name(c: str) -> str:
    # checks may be given by name or by catalogue position (1-based)
    names = list(verify.CHECKS)
    if c.isdigit() and 1 <= int(c) <= len(names):
        return names[int(c) - 1]
    return c


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if _wants_json(argv) else "text"
    payload: dict = {"command": argv[0] if argv else None, "field": None, "input": []}

    def emit_error(kind: str, msg: str, code: int) -> int:
        print(msg if msg.startswith("qf") else f"qf: {msg}", file=stderr)
        if fmt == "json":
            payload["result"] = None
            payload["error"] = {"type": kind, "message": msg, "exit_code": code}
            print(json.dumps(payload), file=stdout)
        return code

    try:
        args, rest = _split_fields(argv)
        ns = _build_parser().parse_args(args)
        ns.field_list = rest
        payload["command"] = ns.command
        payload["input"] = _inputs(ns)
        if ns.command == "verify":
            result, witnesses, text, code = _verify(ns)
            payload["field"] = None if not rest else ",".join(rest)
        else:
            if not ns.field:
                raise _UsageError(f"qf {ns.command}: --field is required")
            ns.field_desc = parse_field(ns.field)
            payload["field"] = str(ns.field_desc)
            result, witnesses, text, code = _run(ns)
    except _UsageError as exc:
        return emit_error("UsageError", str(exc), 2)
    except QFError as exc:
        return emit_error(type(exc).__name__, str(exc), exc.exit_code)
    payload["result"] = result
    if witnesses:
        payload["witnesses"] = witnesses
    if fmt == "json":
        print(json.dumps(payload), file=stdout)
    else:
        print(text, file=stdout)
    return code


def _wants_json(argv) -> bool:
    for i, a in enumerate(argv):
        if a == "--format=json" or (a == "--format" and i + 1 < len(argv) and argv[i + 1] == "json"):
            return True
    return False


def _split_fields(argv):
    """For ``verify``, repeated ``--field`` options select the swept fields."""
    if not argv or argv[0] != "verify":
        return argv, []
    out, fields = [], []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a == "--field":
            if i + 1 >= len(argv):
                raise _UsageError("qf verify: --field needs a value")
            fields.append(argv[i + 1])
            i += 2
            continue
        if a.startswith("--field="):
            fields.append(a.split("=", 1)[1])
        else:
            out.append(a)
        i += 1
    return out, fields


def _inputs(ns) -> list[str]:
    if ns.command == "verify":
        return [f"--max-dim={ns.max_dim}", f"--tower-depth={ns.tower_depth}", f"--seed={ns.seed}"] + (
            [f"--checks={ns.checks}"] if ns.checks else []
        )
    keys = {"member": ("set", "expr", "coeff"), "predicate": ("name", "expr")}.get(
        ns.command, ("expr", "expr2") if ns.command in ("isometric", "similar") else ("expr",)
    )
    return [getattr(ns, k) for k in keys]


def main(argv=None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()

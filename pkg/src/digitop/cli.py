"""Command line interface: ``digitop <command> ...``.

Every command prints exactly one report (JSON by default).  Exit status is 0
for a definite answer, 2 when a search budget ran out, 1 for usage or input
errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import __version__
from .constructors import box, interval, product, simple_closed_curve, wedge
from .documents import DocumentError, document_name, image_to_dict, parse_image_document
from .fixedpoint import cold_sets_audit, is_freezing, is_s_cold, minimize_freezing
from .homotopy import is_reducible, is_rigid
from .lattice import boundary, components, is_simple_closed_curve
from .maps import BudgetExhausted, SearchBudget, SearchOutcome, Verdict
from .render import render_svg, render_text
from .theorems import verify_theorems

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2

BUILTINS = {
    "interval01": lambda: interval(0, 1),
    "interval02": lambda: interval(0, 2),
    "interval05": lambda: interval(0, 5),
    "square4": lambda: simple_closed_curve(4),
    "box22": lambda: box([(0, 2), (0, 2)], 1),
    **{f"curve{n}": (lambda n=n: simple_closed_curve(n)) for n in range(4, 11)},
}


class UsageError(Exception):
    pass


def load_image(ref: str):
    """Read an image document from a path, or take a built-in image by name."""
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            text = fh.read()
        try:
            wrapped = json.loads(text)
        except json.JSONDecodeError:
            wrapped = None
        # a `construct` report carries its image under "document"
        if isinstance(wrapped, dict) and isinstance(wrapped.get("document"), dict):
            text = json.dumps(wrapped["document"])
        return parse_image_document(text), document_name(text) or os.path.basename(ref)
    if ref in BUILTINS:
        return BUILTINS[ref](), ref
    raise UsageError(f"no such file or built-in image: {ref}")


def _points_arg(X, args) -> List[int]:
    out = []
    if args.points:
        try:
            pts = json.loads(args.points)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--points must be a JSON array of points: {exc}") from None
        for p in pts:
            p = [p] if isinstance(p, int) else p
            try:
                out.append(X.index(p))
            except KeyError as exc:
                raise UsageError(str(exc)) from None
    if args.indices:
        for tok in args.indices.split(","):
            if tok.strip():
                i = int(tok)
                if not 0 <= i < len(X):
                    raise UsageError(f"index {i} out of range")
                out.append(i)
    return sorted(set(out))


def _map_dict(f):
    if f is None:
        return None
    return {"assignment": list(f.assignment),
            "points": [[list(f.source.points[p]), list(f.target.points[q])]
                       for p, q in enumerate(f.assignment)]}


def _outcome_report(query: str, out: SearchOutcome, budget: SearchBudget, **extra) -> dict:
    rep = {"query": query, "verdict": out.verdict.value, "witness": _map_dict(out.witness),
           "stats": out.stats.as_dict()}
    if out.homotopy is not None:
        rep["homotopy"] = [list(f.assignment) for f in out.homotopy.frames]
    if out.verdict is Verdict.UNKNOWN:
        rep["exhausted"] = {"budget": out.exhausted.kind, "limit": out.exhausted.limit}
    rep.update(extra)
    return rep


def _finish(rep: dict, args, budget: SearchBudget) -> dict:
    rep["version"] = __version__
    rep["budget"] = {"max_nodes": budget.max_nodes, "max_states": budget.max_states}
    return rep


def cmd_info(args, budget):
    X, name = load_image(args.input)
    ok, order = is_simple_closed_curve(X)
    return {"query": "info", "verdict": "ok", "name": name, "dimension": X.dimension,
            "points": len(X), "edges": len(X.edges()),
            "components": len(components(X)),
            "boundary": sorted(boundary(X)),
            "simple_closed_curve": ok,
            "simple_closed_curve_min4": bool(ok and len(order) >= 4),
            "curve_order": list(order) if ok else None,
            "document": image_to_dict(X, name)}


def cmd_check(args, budget):
    X, name = load_image(args.input)
    fn = is_rigid if args.property == "rigid" else is_reducible
    return _outcome_report(f"check {args.property}", fn(X, budget), budget, image=name)


def cmd_freezing(args, budget):
    X, name = load_image(args.input)
    if args.action == "verify":
        A = _points_arg(X, args)
        return _outcome_report("freezing verify", is_freezing(X, A, budget), budget,
                               image=name, subset=A)
    if args.action == "minimize":
        A = _points_arg(X, args) if (args.points or args.indices) else list(range(len(X)))
        try:
            M = minimize_freezing(X, A, budget)
        except BudgetExhausted as exc:
            return {"query": "freezing minimize", "verdict": Verdict.UNKNOWN.value, "image": name,
                    "exhausted": {"budget": exc.kind, "limit": exc.limit}}
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return {"query": "freezing minimize", "verdict": "true", "image": name, "subset": A,
                "minimal_freezing_set": sorted(M),
                "minimal_freezing_points": [list(X.points[i]) for i in sorted(M)]}
    try:
        audit = cold_sets_audit(X, budget)
    except BudgetExhausted as exc:
        return {"query": "freezing audit", "verdict": Verdict.UNKNOWN.value, "image": name,
                "exhausted": {"budget": exc.kind, "limit": exc.limit}}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"query": "freezing audit", "verdict": "true", "image": name,
            "minimal_cold_sets": [sorted(s) for s in audit.minimal_cold_sets],
            "minimal_freezing_sets": [sorted(s) for s in audit.minimal_freezing_sets],
            "cold_count": audit.cold_count, "freezing_count": audit.freezing_count,
            "empty_set_freezing": audit.empty_set_freezing}


def cmd_cold(args, budget):
    X, name = load_image(args.input)
    A = _points_arg(X, args)
    try:
        out = is_s_cold(X, A, args.s, budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _outcome_report("cold verify", out, budget, image=name, subset=A, s=args.s)


def cmd_construct(args, budget):
    kind = args.kind
    if kind == "interval":
        if len(args.args) != 2:
            raise UsageError("construct interval A B")
        a, b = (int(v) for v in args.args)
        X, name = interval(a, b), f"interval[{a},{b}]"
    elif kind == "box":
        axes = []
        for tok in args.args:
            a, _, b = tok.partition(":")
            axes.append((int(a), int(b)))
        X, name = box(axes, args.u or 1), "box"
    elif kind == "product":
        factors = [load_image(ref)[0] for ref in args.args]
        X, name = product(factors, args.u or len(factors)), "product"
    else:
        if len(args.args) != 2:
            raise UsageError("construct wedge X Y")
        (A, _), (B, _) = load_image(args.args[0]), load_image(args.args[1])
        X, w = wedge(A, B)
        return {"query": "construct wedge", "verdict": "ok", "wedge_point": list(X.points[w]),
                "document": image_to_dict(X, "wedge")}
    return {"query": f"construct {kind}", "verdict": "ok", "document": image_to_dict(X, name)}


def cmd_render(args, budget):
    X, name = load_image(args.input)
    rep = {"query": "render", "verdict": "ok", "image": name, "grid": render_text(X)}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(render_svg(X))
        rep["out"] = args.out
    return rep


def cmd_verify_theorems(args, budget):
    report = verify_theorems(seed=args.seed, budget=budget)
    rep = {"query": "verify-theorems",
           "verdict": "false" if report.failures else "true"}
    rep.update(report.as_dict())
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=int, default=10**7)
    common.add_argument("--budget-states", type=int, default=10**6)
    common.add_argument("--format", choices=("json", "text"), default="json")

    inp = argparse.ArgumentParser(add_help=False)
    inp.add_argument("--input", required=True, help="image document path or built-in name")

    subset = argparse.ArgumentParser(add_help=False)
    subset.add_argument("--points", help="JSON array of points, e.g. '[[0],[2]]'")
    subset.add_argument("--indices", help="comma separated point indices")

    p = argparse.ArgumentParser(prog="digitop", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", parents=[common, inp])
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("check", parents=[common, inp])
    s.add_argument("property", choices=("rigid", "reducible"))
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("freezing", parents=[common, inp, subset])
    s.add_argument("action", choices=("verify", "minimize", "audit"))
    s.set_defaults(func=cmd_freezing)

    s = sub.add_parser("cold", parents=[common, inp, subset])
    s.add_argument("action", choices=("verify",))
    s.add_argument("--s", type=int, default=1)
    s.set_defaults(func=cmd_cold)

    s = sub.add_parser("construct", parents=[common])
    s.add_argument("kind", choices=("interval", "box", "product", "wedge"))
    s.add_argument("args", nargs="*",
                   help="interval: A B; box: a:b ...; product/wedge: image refs")
    s.add_argument("--u", type=int)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("render", parents=[common, inp])
    s.add_argument("--out", help="write an SVG drawing to this path")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify-theorems", parents=[common])
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify_theorems)
    return p


def _text(rep: dict) -> str:
    lines = []
    for k, v in rep.items():
        if isinstance(v, str) and "\n" in v:
            lines.append(f"{k}:")
            lines.extend("  " + line for line in v.rstrip("\n").split("\n"))
        else:
            lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def run_command(argv: Optional[List[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        budget = SearchBudget(args.budget_nodes, args.budget_states)
        rep = _finish(args.func(args, budget), args, budget)
    except (UsageError, DocumentError, ValueError, KeyError, IndexError) as exc:
        rep = {"query": args.command, "verdict": "error", "error": str(exc), "version": __version__}
        code = EXIT_ERROR
    else:
        code = EXIT_UNKNOWN if rep.get("verdict") == Verdict.UNKNOWN.value else EXIT_OK
    if args.format == "json":
        stdout.write(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write(_text(rep))
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()

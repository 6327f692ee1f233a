"""Command-line front end.

Exit codes: 0 success, 1 a verification or helix check failed, 2 usage,
parse or IO error. Errors go to stderr as a single ``e8grading: error[kind]: ...`` line.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from .delpezzo import (
    HelixPeriod,
    curve_classes,
    euler_characteristic,
    is_helical,
    load_helix,
    quiver,
    validate_helix_period,
)
from .grading import build_grading
from .lattice import LABEL_TAGS, GradingLabel, from_picard, get_label, to_picard
from .roots import classify, degree, enumerate_root_classes, normalize_degree
from .verify import CHECKS
from .weyl import APPENDIX_TAGS, appendix_counts, gu_generators, orbit_decompose

PROG = "e8grading"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _label(text: str) -> GradingLabel:
    try:
        return get_label(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def _dumps(doc) -> str:
    """Indented JSON with integer vectors kept on one line."""
    text = json.dumps(doc, indent=2)
    return _INT_LIST.sub(lambda mt: "[" + ", ".join(x.strip() for x in mt.group(1).split(",")) + "]", text) + "\n"


def _parse_vector(label: GradingLabel, text: str):
    text = text.strip()
    try:
        coords = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",")]
    except (ValueError, json.JSONDecodeError):
        raise UsageError(f"cannot parse vector {text!r}; use a JSON list or comma-separated integers")
    try:
        return from_picard(label, coords)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_roots(args) -> tuple[int, str]:
    label = args.label
    out = []
    for rc in enumerate_root_classes():
        alpha = normalize_degree(label, rc.rep)
        m = degree(label, alpha)
        if args.m is not None and m != args.m:
            continue
        out.append({"rep": alpha.to_list(), "kind": classify(alpha).value, "degree": m})
    out.sort(key=lambda r: (r["degree"], r["rep"]))
    return 0, _dumps(out)


def cmd_grading(args) -> tuple[int, str]:
    label = args.label
    g = build_grading(label)
    doc = {
        "label": label.tag,
        "gu": {"name": g.gu_name, "dim": g.gu_dim, "rank": g.gu_rank},
        "components": [
            {
                "m": c.m,
                "dimension": c.dimension,
                "gamma_count": c.gamma_count,
                "beta_weights": [to_picard(label, b) for b in c.beta_weights],
            }
            for c in g.components
        ],
    }
    return 0, _dumps(doc)


def cmd_orbits(args) -> tuple[int, str]:
    label = args.label
    if not 0 <= args.m < label.d:
        raise UsageError(f"--m must lie in [0, {label.d - 1}] for label {label.tag}")
    weights = build_grading(label).component(args.m).beta_weights
    dec = orbit_decompose(weights, gu_generators(label))
    doc = {"label": label.tag, "m": args.m, "orbits": [[to_picard(label, v) for v in o] for o in dec.orbits]}
    return 0, _dumps(doc)


def cmd_curves(args) -> tuple[int, str]:
    label = args.label
    ms = [args.m] if args.m is not None else list(range(0, label.d + 1))
    doc = []
    for m in ms:
        if not 0 <= m <= label.d:
            raise UsageError(f"--m must lie in [0, {label.d}] for label {label.tag}")
        for beta in curve_classes(label, m):
            doc.append({"m": m, "class": to_picard(label, beta), "chi": euler_characteristic(label, beta)})
    return 0, _dumps(doc)


def cmd_helical(args) -> tuple[int, str]:
    label = args.label
    beta = _parse_vector(label, args.vector)
    res = is_helical(label, beta)
    doc = {
        "label": label.tag,
        "class": to_picard(label, beta),
        "helical": res.helical,
        "m": res.m,
        "self_intersection": beta.norm(),
        "chi": euler_characteristic(label, beta),
        "chi_dual": euler_characteristic(label, -beta),
    }
    return 0, _dumps(doc)


def _load(path: str) -> HelixPeriod:
    try:
        return load_helix(path)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"cannot read helix file {path}: {exc}") from None


def cmd_helix_check(args) -> tuple[int, str]:
    report = validate_helix_period(_load(args.file))
    return (0 if report.valid else 1), _dumps(report.to_json())


def cmd_helix_quiver(args) -> tuple[int, str]:
    period = _load(args.file)
    report = validate_helix_period(period)
    if not report.valid:
        return 1, _dumps(report.to_json())
    q = quiver(period)
    return 0, (q.to_dot() if args.dot else _dumps(q.to_json()))


def _dims_rows() -> list[tuple[str, list[int]]]:
    return [(t, list(build_grading(t).r_dims())) for t in LABEL_TAGS]


def cmd_table(args) -> tuple[int, str]:
    if args.which == "dims":
        rows = _dims_rows()
        if args.format == "json":
            return 0, _dumps({t: r for t, r in rows})
        lines = ["d\t" + "\t".join(f"m={m}" for m in range(1, 9))]
        lines += [t + "".join(f"\t{v}" for v in r) for t, r in rows]
        return 0, "\n".join(lines) + "\n"

    rows = [r for t in APPENDIX_TAGS for r in appendix_counts(t)]
    cols = ("d", "n", "m", "e_i", "h-e_J", "2h-e_J", "omega-e_i", "total")
    if args.format == "json":
        return 0, _dumps([dict(zip(cols, (r.d, r.n, r.m, *r.counts, r.total))) for r in rows])
    cell = lambda v: "" if v is None else str(v)  # noqa: E731
    lines = ["\t".join(cols)]
    lines += ["\t".join(cell(v) for v in (r.d, r.n, r.m, *r.counts, r.total)) for r in rows]
    return 0, "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


def cmd_verify(args) -> tuple[int, str]:
    results = {}
    for name, fn in CHECKS.items():
        try:
            ok, details = fn()
        except Exception as exc:  # a crashing check is a failing check
            ok, details = False, f"{type(exc).__name__}: {exc}"
        results[name] = (bool(ok), details)
    status = 0 if all(ok for ok, _ in results.values()) else 1
    if args.json:
        doc = {name: {"pass": ok, "details": _jsonable(details)} for name, (ok, details) in results.items()}
        return status, _dumps(doc)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {details}" for name, (ok, details) in results.items()]
    passed = sum(ok for ok, _ in results.values())
    lines.append(f"{passed}/{len(results)} checks passed")
    return status, "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog=PROG, description="Z_d-gradings of E8 and rational curves on del Pezzo surfaces.")
    p.add_argument("-o", "--output", help="write the document here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("roots", help="root representatives in the degree window of a grading")
    s.add_argument("label", type=_label)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("grading", help="graded components of E8 for a label")
    s.add_argument("label", type=_label)
    s.set_defaults(func=cmd_grading)

    s = sub.add_parser("orbits", help="Weyl orbit decomposition of the degree m weights")
    s.add_argument("label", type=_label)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("curves", help="classes with (-K).b = m and b^2 = m - 2")
    s.add_argument("label", type=_label)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_curves)

    s = sub.add_parser("helical", help="test one class for helicality")
    s.add_argument("label", type=_label)
    s.add_argument("vector", help="standard coordinates, e.g. '[1,-1,0,0,0,0]' or 1,-1,0,0,0,0")
    s.set_defaults(func=cmd_helical)

    s = sub.add_parser("helix", help="helix period files")
    hs = s.add_subparsers(dest="helix_command", required=True, parser_class=_Parser)
    c = hs.add_parser("check", help="validate a helix period")
    c.add_argument("file")
    c.set_defaults(func=cmd_helix_check)
    c = hs.add_parser("quiver", help="quiver of a helix period (JSON, or DOT with --dot)")
    c.add_argument("file")
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_helix_quiver)

    s = sub.add_parser("table", help="dimension grid or weight-shape counts")
    s.add_argument("which", choices=["dims", "orbit-counts"])
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", help="replay every reference check")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        status, text = args.func(args)
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
        return status
    except UsageError as exc:
        print(f"{PROG}: error[usage]: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{PROG}: error[io]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

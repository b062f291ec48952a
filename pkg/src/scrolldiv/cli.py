"""Command-line interface.

Examples::

    scrolldiv classify --scroll 0,0,3
    scrolldiv cohom --scroll 0,0,3 --a 1 --b 0 --space x
    scrolldiv intersect --scroll 0,0,3 --d 4 --d2 5 --json
    scrolldiv verify

Exit status is 0 on success, 2 when a precondition of the library is
violated, and 1 on usage errors.  ``--json`` prints the envelope described in
``envelope.schema.json``; rationals are always strings such as ``"2/3"``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import cohomology, divisors, intersect, oracle, transform, verify
from .core import (
    ConeClass,
    PairClass,
    PicClass,
    Regime,
    ScrollType,
    canonical_class,
    exceptional_class,
    parse_scroll,
    pic_intersect,
    strict_image,
)
from .errors import ScrollError

COMMANDS = ("classify", "cohom", "sheaf", "linsys", "transform", "intersect", "genus", "ci", "acm", "verify")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        raise UsageError(message)


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, PicClass):
        return [value.a, value.b]
    if isinstance(value, divisors.SheafForm):
        return [value.a, value.b]
    if isinstance(value, Regime):
        return value.value
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


class Envelope:
    def __init__(self, command: str, scroll: ScrollType | None, inputs: dict[str, Any]):
        self.command = command
        self.scroll = scroll
        self.inputs = inputs
        self.result: dict[str, Any] = {}
        self.warnings: list[str] = []

    def as_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "scroll": list(self.scroll.degrees) if self.scroll else [],
            "inputs": _plain(self.inputs),
            "result": _plain(self.result),
            "warnings": list(self.warnings),
        }


def _text_value(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "(" + ", ".join(_text_value(x) for x in v) + ")"
    return str(v)


def _flatten(prefix: str, value: Any, out: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    else:
        out.append((prefix, _text_value(value)))


def render_text(env: dict[str, Any]) -> str:
    lines = [f"command: {env['command']}"]
    if env["scroll"]:
        lines.append("scroll: " + ",".join(str(a) for a in env["scroll"]))
    if env["inputs"]:
        lines.append("inputs: " + " ".join(f"{k}={_text_value(v)}" for k, v in env["inputs"].items()))
    pairs: list[tuple[str, str]] = []
    _flatten("", env["result"], pairs)
    lines += [f"{k}={v}" for k, v in pairs]
    lines += [f"warning: {w}" for w in env["warnings"]]
    return "\n".join(lines) + "\n"


def render_json(env: dict[str, Any]) -> str:
    return json.dumps(env, indent=2) + "\n"


# -- argument helpers ---------------------------------------------------------


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {' '.join(missing)}")


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise UsageError(f"expected 'a,b' pairs separated by ';', got {chunk!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise UsageError(f"non-integer entry in {chunk!r}") from None
    return out


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(";")]
    except ValueError:
        raise UsageError(f"expected integers separated by ';', got {text!r}") from None


def _inputs(args: argparse.Namespace, *names: str) -> dict[str, Any]:
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


# -- subcommands ---------------------------------------------------------------


def cmd_classify(s: ScrollType, args, env: Envelope) -> None:
    env.result = {
        "regime": s.regime,
        "f": s.f,
        "r": s.r,
        "n": s.n,
        "vertex_dim": s.vertex_dim,
        "codim_vertex": s.codim_vertex,
        "canonical_class": canonical_class(s),
        "exceptional_class": exceptional_class(s) if s.is_cone else None,
    }


def cmd_cohom(s: ScrollType, args, env: Envelope) -> None:
    _need(args, "a", "b")
    a, b = args.a, args.b
    if args.space == "x":
        h = cohomology.cohomology_X(s, a, b)
    else:
        h = cohomology.cohomology_tilde(s, a, b)
    env.result = {
        "space": args.space,
        "h": list(h),
        "chi": sum((-1) ** i * x for i, x in enumerate(h)),
        "h0_closed": cohomology.h0_closed(s, a, b) if a >= 0 and b >= -1 else None,
    }


def _cartier_value(value: bool | None, env: Envelope) -> Any:
    if value is None:
        env.warnings.append("Cartier property of classes involving R is undetermined off the cone")
        return "undetermined"
    return value


def cmd_sheaf(s: ScrollType, args, env: Envelope) -> None:
    if args.classes is not None:
        (a1, b1), (a2, b2) = _two_pairs(args.classes)
        s1 = divisors.SheafForm(a1, b1, s.regime)
        s2 = divisors.SheafForm(a2, b2, s.regime)
        env.result = {"sum": divisors.div_group_op(s, s1, s2)}
        return
    if args.d is not None:
        form = divisors.sheaf_of_divisor(s, ConeClass(args.d))
        env.result = {
            "normal_form": form,
            "dual": divisors.div_dual(s, form),
            "cartier": _cartier_value(divisors.is_cartier(s, ConeClass(args.d)), env),
        }
        return
    _need(args, "a", "b")
    a, b = args.a, args.b
    form = divisors.normalize_sheaf(s, a, b)
    weil = strict_image(s, PicClass(a, b))
    env.result = {
        "reflexive": divisors.is_reflexive(s, a, b),
        "normal_form": form,
        "weil_class": weil.d if isinstance(weil, ConeClass) else [weil.alpha, weil.beta],
        "dual": divisors.div_dual(s, form),
        "cartier": _cartier_value(divisors.is_cartier(s, weil), env),
    }


def _two_pairs(text: str) -> list[tuple[int, int]]:
    pairs = _parse_pairs(text)
    if len(pairs) != 2:
        raise UsageError("--classes needs exactly two 'a,b' labels")
    return pairs


def cmd_linsys(s: ScrollType, args, env: Envelope) -> None:
    _need(args, "d")
    dim = divisors.dim_linear_system(s, args.d)
    printed = divisors.dim_linear_system_printed(s, args.d)
    env.result = {"dim": dim, "h0": dim + 1, "printed_closed_form": printed}
    if printed != dim:
        env.warnings.append(
            f"printed closed form for Cartier classes gives {printed}, computed dimension is {dim}"
        )


def cmd_transform(s: ScrollType, args, env: Envelope) -> None:
    _need(args, "d")
    d = args.d
    total = transform.integral_total_transform(s, d)
    data = transform.transform_data(s, d)
    env.result = {
        "integral_total_transform": total,
        "rational_total_transform": list(transform.rational_total_transform(s, d)),
        "k": data.k,
        "h": data.h,
        "epsilon": transform.epsilon(s, d) if d >= 0 else None,
        "strict_image": strict_image(s, total).d,
    }
    if args.vb is not None:
        env.result["proper_transform"] = transform.proper_transform(s, d, args.vb)
        env.result["pushforward_latitude"] = transform.pushforward_latitude(s, d, args.vb)
    if args.d2 is not None:
        env.result["sum_defect"] = transform.sum_defect(s, d, args.d2)
        env.result["sum_transform"] = transform.integral_total_transform(s, d + args.d2)


def cmd_intersect(s: ScrollType, args, env: Envelope) -> None:
    _need(args, "d", "d2")
    d1, d2 = args.d, args.d2
    inv = intersect.cone_ci_invariants(s, d1, d2)
    res = intersect.intersection_resolution(s, d1, d2)
    try:
        genus = inv.genus
    except ScrollError as exc:
        genus = None
        env.warnings.append(f"genus not defined: {exc}")
    env.result = {
        "degree": inv.degree,
        "genus": genus,
        "chi0": inv.chi0,
        "epsilon": [transform.epsilon(s, d1), transform.epsilon(s, d2)],
        "sum_defect": transform.sum_defect(s, d1, d2),
        "resolution": {"left": res.left, "mid1": res.mid1, "mid2": res.mid2},
        "mumford_pairing": intersect.mumford_intersection(s, [d1, d2] + [s.f] * (s.r - 2)),
        "closed_form": None,
    }
    if s.r >= 3 and d1 > s.f and d2 > s.f:
        cf = intersect.quarto_closed_form(s, d1, d2)
        env.result["closed_form"] = {
            "degree_formula": cf.degree_formula,
            "genus_formula": cf.genus_formula,
            "genus_corrected": cf.genus_corrected,
        }
        if cf.degree_formula != inv.degree:
            env.warnings.append(
                f"closed-form degree sum gives {cf.degree_formula}, authoritative degree is "
                f"{inv.degree}; the published degree formula is a known mismatch"
            )
        if cf.genus_formula != genus:
            env.warnings.append(
                f"closed-form genus sum gives {cf.genus_formula}, authoritative genus is {genus}; "
                "the published genus formula drops a factor f on its first binomial"
            )
    if args.vb is not None or args.vb2 is not None:
        _need(args, "vb", "vb2")
        e1 = intersect.EffectiveDivisorData(d1, args.vb)
        e2 = intersect.EffectiveDivisorData(d2, args.vb2)
        env.result["vertex_multiplicity"] = intersect.vertex_multiplicity(s, e1, e2)
        env.result["mumford_vertex_multiplicity"] = intersect.mumford_vertex_multiplicity(s, args.vb, args.vb2)


def cmd_ci(s: ScrollType, args, env: Envelope) -> None:
    _need(args, "classes")
    if args.space == "tilde":
        pics = [PicClass(a, b) for a, b in _parse_pairs(args.classes)]
        env.result = {"intersection": pic_intersect(s, pics)}
    elif s.is_cone:
        env.result = {"mumford_intersection": intersect.mumford_intersection(s, _parse_ints(args.classes))}
    else:
        classes = [PairClass(a, b) for a, b in _parse_pairs(args.classes)]
        env.result = {"degree": intersect.ci_degree_high_codim(s, classes)}


def cmd_genus(s: ScrollType, args, env: Envelope) -> None:
    _need(args, "d")
    env.result = {"genus": intersect.genus_divisor(s, args.d), "castelnuovo_bound": None}
    if s.r == 2 and args.d > s.n - 1:
        env.result["castelnuovo_bound"] = intersect.castelnuovo_G(s.n, args.d)


def cmd_acm(s: ScrollType, args, env: Envelope) -> None:
    if args.classes is not None:
        pairs = _parse_pairs(args.classes)
        env.result = {
            "acm": intersect.acm_koszul(s, pairs),
            "cohomology_vanishing": intersect.koszul_middle_vanishing(s, pairs),
        }
        return
    _need(args, "d")
    env.result = {"acm": intersect.is_acm_cone(s, args.d, args.d2)}


def cmd_verify(s: ScrollType | None, args, env: Envelope) -> None:
    if s is None:
        results = verify.run_all()
        env.result = {
            "criteria": [
                {"number": r.number, "name": r.name, "checks": r.checked, "passed": r.passed, "failures": r.failures}
                for r in results
            ]
        }
        if not all(r.passed for r in results):
            env.warnings.append("some checks failed")
        return
    if args.d is not None:
        _need(args, "d2")
        degree, chi0 = oracle.hilbert_degree_genus(s, args.d, args.d2)
        inv = intersect.cone_ci_invariants(s, args.d, args.d2)
        samples = oracle.hilbert_samples(s, args.d, args.d2)
        env.result = {
            "hilbert_samples": [[x.k, x.chi] for x in samples],
            "oracle_degree": degree,
            "oracle_chi0": chi0,
            "degree": inv.degree,
            "chi0": inv.chi0,
            "agree": degree == inv.degree and chi0 == inv.chi0,
        }
        return
    _need(args, "a", "b")
    naive = oracle.naive_cohomology(s, args.a, args.b)
    fast = cohomology.cohomology_tilde(s, args.a, args.b)
    env.result = {"naive": list(naive), "dp": list(fast), "agree": naive == fast}


HANDLERS: dict[str, Callable] = {
    "classify": cmd_classify,
    "cohom": cmd_cohom,
    "sheaf": cmd_sheaf,
    "linsys": cmd_linsys,
    "transform": cmd_transform,
    "intersect": cmd_intersect,
    "genus": cmd_genus,
    "ci": cmd_ci,
    "acm": cmd_acm,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scrolldiv", description="Divisor calculus on rational normal scrolls")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--scroll", help="splitting type a1,a2,...,ar")
        for flag in ("a", "b", "d", "d2", "vb", "vb2"):
            p.add_argument(f"--{flag}", type=int)
        p.add_argument("--classes", help="';'-separated classes, each 'a,b' (or an integer d)")
        p.add_argument("--space", choices=("tilde", "x"), default=None)
        p.add_argument("--json", action="store_true", help="structured output")
    return parser


INPUT_FLAGS = ("a", "b", "d", "d2", "vb", "vb2", "classes", "space")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(f"a subcommand is required: {' | '.join(COMMANDS)}")
        if args.command in ("cohom", "ci") and args.space is None:
            args.space = "tilde"
        scroll = parse_scroll(args.scroll) if args.scroll else None
        if scroll is None and args.command != "verify":
            raise UsageError(f"{args.command} requires --scroll")
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except ScrollError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2

    env = Envelope(args.command, scroll, _inputs(args, *INPUT_FLAGS))
    try:
        HANDLERS[args.command](scroll, args, env)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except ScrollError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        if args.json:
            payload = env.as_dict()
            del payload["result"]
            payload["error"] = {"type": type(exc).__name__, "message": str(exc)}
            stdout.write(render_json(payload))
        return 2

    data = env.as_dict()
    stdout.write(render_json(data) if args.json else render_text(data))
    if args.command == "verify" and env.warnings:
        return 2
    return 0


def main() -> None:
    sys.exit(run())

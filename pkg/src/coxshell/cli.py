"""``coxshell`` command line front end.

Exit status: 0 on success or when the property is verified, 1 when it is
refuted, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .complex import (
    PureComplex,
    bruhat_poset,
    check_order,
    decide_linear_shellability,
    f_polynomial,
    h_polynomial,
    lex_order,
    parse_facets,
    revlex_order,
    DEFAULT_LABELING_CAP,
)
from .coxcomplex import (
    build_complex,
    bruhat_interval_poset,
    classify_thin,
    h_by_descent_formula,
    preceq_poset,
    weak_poset,
)
from .coxeter import CoxeterSystem, GroupElement, new_system
from .errors import CoxshellError
from .interval import enumerate_interval, interval_descent_set
from .report import dump_json, element_label, facet_label, hasse_dot

EXIT_OK, EXIT_REFUTED, EXIT_INPUT = 0, 1, 2


class UsageError(CoxshellError):
    pass


# -- input helpers ------------------------------------------------------------

def load_system(args) -> CoxeterSystem:
    if args.type:
        return new_system(args.type)
    if args.matrix:
        return new_system({"matrix": json.loads(args.matrix)})
    if args.system:
        return new_system(json.loads(Path(args.system).read_text()))
    raise UsageError("give a Coxeter system with --type, --matrix or --system")


def parse_element(system: CoxeterSystem, text: str) -> GroupElement:
    """Space-separated 1-based generator indices, ``e``, or ``longest``."""
    text = text.strip()
    if text == "longest":
        return system.longest()
    if text in ("", "e"):
        return system.identity
    try:
        word = [int(tok) - 1 for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError("bad word %r: use space-separated 1-based generator indices" % text) from None
    return system.element(word)


def load_complex(path: str) -> PureComplex:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError("cannot read %s: %s" % (path, exc)) from None
    return PureComplex.from_facets(parse_facets(text))


def load_sequence(path: str, order: str):
    text = Path(path).read_text(encoding="ascii")
    facets = parse_facets(text)
    if order == "lex":
        return lex_order(set(facets))
    if order == "revlex":
        return revlex_order(set(facets))
    return facets


def write_output(args, text: str):
    if getattr(args, "dot", None):
        Path(args.dot).write_text(text)
    else:
        sys.stdout.write(text)


def _interval_args(args):
    system = load_system(args)
    u = parse_element(system, args.u)
    v = parse_element(system, args.v)
    return system, u, v


# -- commands -------------------------------------------------------------------

def cmd_interval(args) -> int:
    system, u, v = _interval_args(args)
    iv = enumerate_interval(u, v)
    des = sorted(interval_descent_set(u, v))
    if args.json:
        sys.stdout.write(dump_json({
            "command": "interval",
            "u": list(u.word), "v": list(v.word),
            "elements": [{"word": list(w.word), "label": element_label(w), "length": w.length} for w in iv],
            "covers": [list(c) for c in iv.covers],
            "descent_set": des,
        }))
    else:
        print("interval [%s, %s]_R: %d elements, %d covers" % (u, v, len(iv), len(iv.covers)))
        for w in iv:
            print("  %s  %s" % (element_label(w), w))
        print("D_R(u,v) = {%s}" % ", ".join(system.names[s] for s in des))
    if args.dot:
        Path(args.dot).write_text(hasse_dot(weak_poset(iv), element_label, lambda w: w.length, "weak"))
    return EXIT_OK


def cmd_complex(args) -> int:
    system, u, v = _interval_args(args)
    c = build_complex(u, v)
    kind, _ = classify_thin(u, v)
    if args.json:
        sys.stdout.write(dump_json({
            "command": "complex",
            "u": list(u.word), "v": list(v.word),
            "vertices": [
                {"label": i, "quotient": list(x.quotient.word), "gen": x.gen}
                for x, i in sorted(c.vertex_index.items(), key=lambda kv: kv[1])
            ],
            "facets": [{"word": list(w.word), "L": list(c.L(w))} for w in c.interval],
            "thin": kind == "thin",
        }))
    else:
        print("C(%s, %s): %d facets on %d vertices (%s)" % (u, v, len(c.interval), c.n, kind))
        for x, i in sorted(c.vertex_index.items(), key=lambda kv: kv[1]):
            print("  vertex %d = (%s, %s)" % (i, x.quotient, system.names[x.gen]))
        for w in c.interval:
            print("  L(%s) = %s" % (w, c.L(w)))
    if args.facets:
        Path(args.facets).write_text("".join(" ".join(map(str, t)) + "\n" for t in sorted(c.tuples())))
    return EXIT_OK


def _cmd_check(args, mode: str) -> int:
    seq = load_sequence(args.file, args.order)
    verdict = check_order(seq, mode)
    name = "strong shelling" if mode == "strong" else "shelling"
    if args.json:
        sys.stdout.write(dump_json({
            "command": "strong-check" if mode == "strong" else "shell-check",
            "order": args.order, "ok": verdict.ok,
            "witness": None if verdict.ok else {
                "i": verdict.witness[0] + 1, "j": verdict.witness[1] + 1,
                "C_i": list(seq[verdict.witness[0]]), "C_j": list(seq[verdict.witness[1]]),
            },
        }))
    elif verdict.ok:
        print("%s order (%d facets, %s)" % (name, len(seq), args.order))
    else:
        i, j = verdict.witness
        print("not a %s order: no valid r for i=%d (%s), j=%d (%s)"
              % (name, i + 1, facet_label(seq[i]), j + 1, facet_label(seq[j])))
    return EXIT_OK if verdict.ok else EXIT_REFUTED


def cmd_shell_check(args) -> int:
    return _cmd_check(args, args.mode)


def cmd_strong_check(args) -> int:
    return _cmd_check(args, "strong")


def cmd_linshell(args) -> int:
    x = load_complex(args.file)
    cap = args.cap if args.cap is not None else DEFAULT_LABELING_CAP
    found = decide_linear_shellability(x, args.mode, cap=cap, workers=args.jobs)
    m = len(x.vertices)
    if args.json:
        sys.stdout.write(dump_json({
            "command": "linshell", "mode": args.mode, "vertices": m,
            "labeling": None if found is None else {str(k): v for k, v in found.items()},
        }))
    elif found is None:
        print("no labeling found (%d! searched)" % m)
    else:
        print("labeling found: " + " ".join("%d->%d" % kv for kv in sorted(found.items())))
    return EXIT_OK if found is not None else EXIT_REFUTED


def cmd_hasse(args) -> int:
    if args.file:
        x = load_complex(args.file)
        p = bruhat_poset(x)
        offset = x.k * (x.k + 1) // 2
        text = hasse_dot(p, facet_label, lambda f: sum(f) - offset, "gale")
    else:
        system, u, v = _interval_args(args)
        iv = enumerate_interval(u, v)
        if args.poset == "weak":
            p = weak_poset(iv)
        elif args.poset == "bruhat":
            p = bruhat_interval_poset(iv)
        else:
            p = preceq_poset(u, v)
        text = hasse_dot(p, element_label, lambda w: w.length, args.poset)
    write_output(args, text)
    return EXIT_OK


def cmd_hpoly(args) -> int:
    if args.file:
        x = load_complex(args.file)
        f, h, hd = f_polynomial(x), h_polynomial(x), None
    else:
        system, u, v = _interval_args(args)
        x = build_complex(u, v).as_pure_complex()
        f, h, hd = f_polynomial(x), h_polynomial(x), h_by_descent_formula(u, v)
        if hd != h:
            print("descent formula gives %s but faces give %s" % (hd, h), file=sys.stderr)
            return EXIT_REFUTED
    if args.json:
        sys.stdout.write(dump_json({"command": "hpoly", "f": list(f.coeffs), "h": list(h.coeffs)}))
    else:
        print("h = %s" % h)
    return EXIT_OK


def cmd_validate(args) -> int:
    system = load_system(args)
    results = []
    if system.is_finite_type():
        els = system.elements(cap=args.cap or 10**5)
        pairs = checks.weak_pairs(els)
        results.append(("reflection formula (%d weak pairs)" % len(pairs),
                        checks.reflection_formula_counterexamples(pairs)))
        results.append(("Deodhar splitting", checks.deodhar_counterexamples(els)))
        results.append(("cover criterion", checks.cover_criterion_counterexamples(els)))
        results.append(("reflection lemma", checks.reflection_lemma_counterexamples(els)))
        results.append(("weak-order corollary", checks.reflection_corollary_counterexamples(els)))
        results.append(("projection commutation", checks.projection_commutation_counterexamples(els)))
    else:
        pairs = checks.random_pairs(system, args.pairs, args.max_length, args.seed)
        results.append(("reflection formula (%d random pairs, seed %d)" % (len(pairs), args.seed),
                        checks.reflection_formula_counterexamples(pairs)))
    failed = False
    for name, bad in results:
        status = "PASS" if not bad else "FAIL (%d counterexamples)" % len(bad)
        failed |= bool(bad)
        print("%-45s %s" % (name, status))
    return EXIT_REFUTED if failed else EXIT_OK


# -- parser -----------------------------------------------------------------------

def _system_opts(p, required_uv=True):
    g = p.add_argument_group("Coxeter system")
    g.add_argument("--type", help="type shorthand: A<n>, B<n>, I2(m)")
    g.add_argument("--matrix", help="Coxeter matrix as JSON, 0 for infinity")
    g.add_argument("--system", help="Coxeter JSON file")
    if required_uv:
        p.add_argument("--u", default="e", help="bottom element: 1-based generator indices, 'e' or 'longest'")
        p.add_argument("--v", default="longest", help="top element (default: longest)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxshell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("interval", help="enumerate a right weak interval")
    _system_opts(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("complex", help="Coxeter complex C(u,v) with its labeling")
    _system_opts(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--facets", metavar="PATH", help="write the labelled facets as a facet file")
    p.set_defaults(func=cmd_complex)

    for verb, func, has_mode in (("shell-check", cmd_shell_check, True), ("strong-check", cmd_strong_check, False)):
        p = sub.add_parser(verb, help="check an order of a facet file")
        p.add_argument("file")
        p.add_argument("--order", choices=("lex", "revlex", "file"), default="lex")
        if has_mode:
            p.add_argument("--mode", choices=("shelling", "strong"), default="shelling")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("linshell", help="search for a linearly (strongly) shelling labeling")
    p.add_argument("file")
    p.add_argument("--mode", choices=("shelling", "strong"), default="shelling")
    p.add_argument("--cap", type=int, help="maximum number of vertices (default %d)" % DEFAULT_LABELING_CAP)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_linshell)

    p = sub.add_parser("hasse", help="DOT Hasse diagram of a facet file or of an interval")
    p.add_argument("file", nargs="?")
    _system_opts(p)
    p.add_argument("--poset", choices=("weak", "bruhat", "preceq"), default="weak")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("hpoly", help="h-polynomial of a facet file or of C(u,v)")
    p.add_argument("file", nargs="?")
    _system_opts(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hpoly)

    p = sub.add_parser("validate", help="check the structural statements on a Coxeter system")
    _system_opts(p, required_uv=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=200, help="random pairs for infinite groups")
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_validate)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (CoxshellError, OSError, json.JSONDecodeError) as exc:
        print("coxshell: error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

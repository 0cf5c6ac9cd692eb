"""Command-line frontend.

Subcommands: cohomology, cells, verify, grillet, cyclic, groupoid,
oracle.  Monoid descriptors are `cyclic:m,q`, `infinite-cyclic`,
`@file.json`, or inline JSON; coefficients use the shorthand Z, Z/n,
Z^r, sums like Z/2+Z/4, or `@file.json` for tabular modules.

Exit codes: 0 success, 1 verification failure, 2 malformed input.
JSON output (--json) is byte-identical across runs for identical
inputs; timing appears only in the human-readable report.
"""

import argparse
import json
import sys
import time

from .bar import iterated_bar, render_word, word_to_json
from .cohomology import brute_force_cohomology, cohomology_group
from .cyclic import (level2_groups_cyclic, level3_top, verify_contraction,
                     verify_contraction_inf)
from .grillet import grillet_cohomology, inclusion_chainmap
from .groupoid import (check_coherence, cocycle_check, crossed_product,
                       iso_classes)
from .hmod import constant_module, module_from_descriptor, parse_group_shorthand
from .monoid import (INFINITE_CYCLIC, FiniteCommutativeMonoid,
                     monoid_from_descriptor)


class InputError(ValueError):
    pass


def parse_monoid(text):
    if text == "infinite-cyclic":
        return INFINITE_CYCLIC
    if text.startswith("cyclic:"):
        try:
            m, q = (int(v) for v in text[len("cyclic:"):].split(","))
        except ValueError:
            raise InputError("monoid: expected cyclic:m,q, got %r" % text)
        return monoid_from_descriptor({"kind": "cyclic", "index": m, "period": q})
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return monoid_from_descriptor(json.load(fh))
    if text.startswith("{"):
        return monoid_from_descriptor(json.loads(text))
    raise InputError("monoid: cannot parse descriptor %r" % text)


def parse_coefficients(text, monoid):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return module_from_descriptor(json.load(fh), monoid)
    if text.startswith("{"):
        return module_from_descriptor(json.loads(text), monoid)
    return constant_module(parse_group_shorthand(text), monoid)


def emit(args, payload, human_lines):
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        for line in human_lines:
            print(line)


def cmd_cohomology(args):
    M = parse_monoid(args.monoid)
    if not isinstance(M, FiniteCommutativeMonoid):
        raise InputError("cohomology needs a finite monoid "
                         "(use `cyclic groups` forms for the infinite one)")
    A = parse_coefficients(args.coeff, M)
    t0 = time.time()
    inv = cohomology_group(M, args.level, args.degree, A)
    payload = inv.to_json()
    emit(args, payload, [
        "H^%d(M, %d; A) = %r" % (args.degree, args.level, inv),
        "elapsed: %.3fs" % (time.time() - t0),
    ])
    return 0


def cmd_oracle(args):
    M = parse_monoid(args.monoid)
    if not isinstance(M, FiniteCommutativeMonoid):
        raise InputError("oracle needs a finite monoid")
    A = parse_coefficients(args.coeff, M)
    t0 = time.time()
    z, b, inv = brute_force_cohomology(M, args.level, args.degree, A)
    payload = dict(inv.to_json(), cocycle_count=z, coboundary_count=b)
    emit(args, payload, [
        "cocycles: %d, coboundaries: %d" % (z, b),
        "H^%d(M, %d; A) = %r" % (args.degree, args.level, inv),
        "elapsed: %.3fs" % (time.time() - t0),
    ])
    return 0


def cmd_cells(args):
    M = parse_monoid(args.monoid)
    if not isinstance(M, FiniteCommutativeMonoid):
        raise InputError("cells needs a finite monoid")
    dga = iterated_bar(M, args.level, args.degree)
    cells = dga.basis.get(args.degree, ())
    payload = {"level": args.level, "degree": args.degree,
               "cells": [word_to_json(w, M) for w in cells]}
    emit(args, payload, ["%s  (pi = %d)" % (render_word(w), w.pi(M)) for w in cells]
         or ["(no cells)"])
    return 0


def cmd_verify(args):
    if args.what != "contraction":
        raise InputError("unknown verification target %r" % args.what)
    t0 = time.time()
    if args.index is None:
        report = verify_contraction_inf(args.max_degree, args.entry_bound)
    else:
        if args.period is None:
            raise InputError("--period required with --index")
        report = verify_contraction(args.index, args.period, args.max_degree)
    payload = {"params": {k: v for k, v in sorted(report.params.items())},
               "identities": report.to_json(),
               "pass": report.all_pass()}
    lines = ["%-28s %s" % (name + ":", "pass" if ok else "FAIL %r" % wit[:2])
             for name, (ok, wit) in sorted(report.results.items())]
    lines.append("overall: %s" % ("pass" if report.all_pass() else "FAIL"))
    lines.append("elapsed: %.3fs" % (time.time() - t0))
    emit(args, payload, lines)
    return 0 if report.all_pass() else 1


def cmd_grillet(args):
    M = parse_monoid(args.monoid)
    if not isinstance(M, FiniteCommutativeMonoid):
        raise InputError("grillet needs a finite monoid")
    A = parse_coefficients(args.coeff, M)
    if args.degree is not None:
        inv = grillet_cohomology(M, A, args.degree)
        emit(args, inv.to_json(), ["H^%d_G(M; A) = %r" % (args.degree, inv)])
        return 0
    _, report = inclusion_chainmap(M, A)
    payload = {"squares": report.squares, "pass": report.all_pass()}
    lines = ["%-28s %s" % (k + ":", "pass" if v else "FAIL")
             for k, v in sorted(report.squares.items())]
    emit(args, payload, lines)
    return 0 if report.all_pass() else 1


def cmd_cyclic(args):
    if args.what != "groups":
        raise InputError("unknown cyclic subcommand %r" % args.what)
    M = monoid_from_descriptor({"kind": "cyclic", "index": args.index,
                                "period": args.period})
    A = parse_coefficients(args.coeff, M)
    t0 = time.time()
    h2, h3, h4 = level2_groups_cyclic(args.index, args.period, A)
    h5 = level3_top(args.index, args.period, A)
    payload = {"H2(C,2)": h2.to_json(), "H3(C,2)": h3.to_json(),
               "H4(C,2)": h4.to_json(), "H5(C,3)": h5.to_json()}
    emit(args, payload, [
        "H^2(C,2;A) = %r" % h2, "H^3(C,2;A) = %r" % h3,
        "H^4(C,2;A) = %r" % h4, "H^5(C,3;A) = %r" % h5,
        "elapsed: %.3fs" % (time.time() - t0),
    ])
    return 0


def _parse_cocycle_file(path):
    with open(path) as fh:
        data = json.load(fh)
    g = {}
    for key, coeffs in data.get("g", {}).items():
        args_ = tuple(int(v) for v in key.split(","))
        g[args_] = tuple(coeffs)
    mu = {}
    for key, coeffs in data.get("mu", {}).items():
        args_ = tuple(int(v) for v in key.split(","))
        mu[args_] = tuple(coeffs)
    return g, mu


def cmd_groupoid(args):
    if args.what == "classify":
        return _groupoid_classify(args)
    if args.what != "check":
        raise InputError("unknown groupoid subcommand %r" % args.what)
    M = parse_monoid(args.monoid)
    if not isinstance(M, FiniteCommutativeMonoid):
        raise InputError("groupoid check needs a finite monoid")
    if args.cocycle is None:
        raise InputError("groupoid check needs --cocycle")
    A = parse_coefficients(args.coeff, M)
    g, mu = _parse_cocycle_file(args.cocycle)
    G = crossed_product(M, A, g, mu)
    report = check_coherence(G)
    is_cocycle = cocycle_check(M, A, g, mu)
    payload = {"coherent": report.ok(), "cocycle": is_cocycle,
               "failures": [[c, list(w)] for c, w in report.failures[:10]]}
    lines = ["coherence: %s" % ("pass" if report.ok() else "FAIL %r" % report.failures[:4]),
             "5-cocycle: %s" % is_cocycle]
    emit(args, payload, lines)
    return 0 if report.ok() and is_cocycle else 1


def _groupoid_classify(args):
    M = parse_monoid(args.monoid)
    if not isinstance(M, FiniteCommutativeMonoid):
        raise InputError("groupoid classify needs a finite monoid")
    A = parse_coefficients(args.coeff, M)
    t0 = time.time()
    cocycles, classes = iso_classes(M, A, search_automorphisms=args.automorphisms)
    payload = {"cocycles": len(cocycles), "classes": len(classes),
               "automorphism_search": bool(args.automorphisms)}
    emit(args, payload, [
        "5-cocycles: %d" % len(cocycles),
        "isomorphism classes: %d" % len(classes),
        "elapsed: %.3fs" % (time.time() - t0),
    ])
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="moncoh",
                                description="cohomology of commutative monoids")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", help="H^n(M, r; A) via the bar pipeline")
    c.add_argument("--monoid", required=True)
    c.add_argument("--level", type=int, required=True)
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--coeff", required=True)
    c.set_defaults(fn=cmd_cohomology)

    c = sub.add_parser("oracle", help="brute-force enumeration oracle")
    c.add_argument("--monoid", required=True)
    c.add_argument("--level", type=int, required=True)
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--coeff", required=True)
    c.set_defaults(fn=cmd_oracle)

    c = sub.add_parser("cells", help="generic cells of one degree")
    c.add_argument("--monoid", required=True)
    c.add_argument("--level", type=int, required=True)
    c.add_argument("--degree", type=int, required=True)
    c.set_defaults(fn=cmd_cells)

    c = sub.add_parser("verify", help="verify the cyclic contraction identities")
    c.add_argument("what", choices=["contraction"])
    c.add_argument("--index", type=int)
    c.add_argument("--period", type=int)
    c.add_argument("--max-degree", type=int, default=4)
    c.add_argument("--entry-bound", type=int, default=5)
    c.set_defaults(fn=cmd_verify)

    c = sub.add_parser("grillet", help="symmetric-cochain cohomology and inclusion")
    c.add_argument("--monoid", required=True)
    c.add_argument("--coeff", required=True)
    c.add_argument("--degree", type=int)
    c.set_defaults(fn=cmd_grillet)

    c = sub.add_parser("cyclic", help="closed small-complex groups of a cyclic monoid")
    c.add_argument("what", choices=["groups"])
    c.add_argument("--index", type=int, required=True)
    c.add_argument("--period", type=int, required=True)
    c.add_argument("--coeff", required=True)
    c.set_defaults(fn=cmd_cyclic)

    c = sub.add_parser("groupoid",
                       help="coherence of a crossed product / classification")
    c.add_argument("what", choices=["check", "classify"])
    c.add_argument("--monoid", required=True)
    c.add_argument("--coeff", required=True)
    c.add_argument("--cocycle")
    c.add_argument("--automorphisms", action="store_true",
                   help="also search monoid automorphisms (|M| <= 4)")
    c.set_defaults(fn=cmd_groupoid)
    return p


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return 2 if ex.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, FileNotFoundError) as ex:
        # InputError and every domain error (monoid, module, groupoid,
        # truncation, degree-range) subclass ValueError
        sys.stderr.write("error: %s\n" % ex)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

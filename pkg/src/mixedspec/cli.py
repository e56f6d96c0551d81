"""Command line interface: ``mixedspec <command> <file> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage, parse or precondition
error, 3 an exhaustive search hit its resource cap.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import bounds as bnd
from .adjacency import associated_graph, integrated_adjacency
from .components import (ComponentDomainError, FormulaInapplicableError, decompose, determinant_terms,
                         two_coloring)
from .families import Family, FamilyError, FamilySpec, generate
from .graph import GraphDomainError, MixedGraph
from .io import GraphParseError, parse, serialize
from .matrix import det_exact
from .spectra import (PreconditionError, VertexAddition, check_ab, check_interlacing, check_perron,
                      check_r_regular, check_rs_regular, check_trace_identities,
                      check_vertex_addition, spectrum)
from .walks import ResourceLimitError, WalkClass, WalkDomainError, count_classified, matrix_walk_entries, walk_theorem_sums

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

PROPERTIES = ("ab", "uniconnected", "rs-regular", "r-regular", "perron", "trace",
              "interlacing", "vertex-addition")


class UsageError(Exception):
    pass


def r12(x: float, scale: float = 1.0) -> float:
    """Round to 12 significant digits relative to ``max(1, scale)``.

    Eigenvalues use the spectral radius as ``scale`` so that solver noise
    around zero prints as ``0.0``; ``-0.0`` becomes ``0.0``.
    """
    x = float(x)
    lead = math.floor(math.log10(max(1.0, abs(scale), abs(x))))
    return round(x, 11 - lead) + 0.0


def _schema(kind: str) -> str:
    return f"mixedspec.{kind}/{SCHEMA_VERSION}"


def _read(path: str) -> MixedGraph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse(text)


def _emit(args, payload: dict, lines: list[str]):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _poly_json(p) -> list[int]:
    return list(p.coeffs)


# -- commands ---------------------------------------------------------------

def cmd_spectrum(args) -> int:
    g = _read(args.file)
    sp = spectrum(g)
    scale = float(max(abs(sp.eigenvalues), default=0.0))
    payload = {
        "schema": _schema("spectrum"),
        "n": g.n,
        "eigenvalues": [r12(v, scale) for v in sp.eigenvalues],
        "multiplicities": [[r12(v, scale), k] for v, k in sp.multiplicities],
        "sign_counts": dict(zip(("positive", "zero", "negative"), sp.sign_counts)),
        "shifted_counts": dict(zip(("above", "at", "below"), sp.shifted_counts)),
    }
    lines = [f"n = {g.n}, matrix order {2 * g.n}",
             "eigenvalues (multiplicity):"]
    lines += [f"  {r12(v, scale):>16}  x{k}" for v, k in sp.multiplicities]
    lines.append("sign counts about 0: +{} 0:{} -{}".format(*sp.sign_counts))
    lines.append("sign counts about -2: +{} 0:{} -{}".format(*sp.shifted_counts))
    if args.exact_charpoly:
        payload["charpoly"] = _poly_json(sp.charpoly)
        lines.append(f"characteristic polynomial: {sp.charpoly}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_matrix(args) -> int:
    g = _read(args.file)
    m, idx = integrated_adjacency(g)
    labels = idx.labels()
    width = max([len(s) for s in labels] + [len(str(x)) for x in m.entries] + [1])
    print(" " * width + " " + " ".join(s.rjust(width) for s in labels))
    for lab, row in zip(labels, m.rows):
        print(lab.rjust(width) + " " + " ".join(str(x).rjust(width) for x in row))
    return EXIT_OK


def cmd_assoc(args) -> int:
    g = _read(args.file)
    assoc = associated_graph(g)
    legend = " ".join(f"{k}={assoc.labels.label(k)}" for k in range(2 * g.n))
    sys.stdout.write(f"# {legend}\n" if g.n else "")
    sys.stdout.write(serialize(assoc.base))
    return EXIT_OK


def _pairs(d: dict) -> list:
    return [[list(k) if isinstance(k, tuple) else k, m] for k, m in sorted(d.items())]


def cmd_components(args) -> int:
    g = _read(args.file)
    dec = decompose(g)
    comps = []
    lines = [f"{len(dec)} mixed component(s); p = {dec.p} (AC), q = {dec.q_ap} (AP), "
             f"l = {dec.l_even} (AC with even t)"]
    for k, c in enumerate(dec):
        comps.append({
            "type": c.ctype.value,
            "vertices": sorted(c.vertices),
            "theta": sorted(c.theta),
            "edges": _pairs(c.edges),
            "loops": _pairs(c.loops),
            "arcs": _pairs(c.arcs),
            "directed_loops": _pairs(c.dloops),
            "omega": _pairs(c.omega),
            "t": c.t,
            "AP": c.is_AP,
            "AC": c.is_AC,
        })
        flags = ",".join(f for f, on in (("AP", c.is_AP), ("AC", c.is_AC)) if on) or "-"
        lines.append(f"[{k}] type {c.ctype.value:<3} vertices {sorted(c.vertices)} "
                     f"theta {sorted(c.theta)} omega {sorted(c.omega)} t={c.t} {flags}")
    payload = {"schema": _schema("components"), "n": g.n, "p": dec.p, "q": dec.q_ap,
               "l": dec.l_even, "components": comps}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_det(args) -> int:
    g = _read(args.file)
    mode = args.mode or "both"
    exact = det_exact(integrated_adjacency(g)[0]) if mode in ("exact", "both") else None
    formula, reason = None, None
    if mode in ("formula", "both"):
        try:
            formula = determinant_terms(g).value
        except FormulaInapplicableError as exc:
            reason = str(exc)
    if exact is not None:
        print(f"exact: {exact}")
    if mode in ("formula", "both"):
        print(f"formula: {formula}" if reason is None else f"formula: {reason}")
    if reason is not None:
        return EXIT_FAIL
    if mode == "both":
        agree = exact == formula
        print("agree" if agree else "DISAGREE")
        return EXIT_OK if agree else EXIT_FAIL
    return EXIT_OK


def _check(g: MixedGraph, prop: str, vertices: list[int] | None) -> tuple[bool, list[str]]:
    if prop == "ab":
        rep = check_ab(g)
        lines = [f"AB property: {rep.ab_property}",
                 f"odd characteristic coefficients vanish: {rep.odd_coefficients_vanish}",
                 f"spectrum symmetric about 0: {rep.symmetric_spectrum}"]
        if rep.ab_property:
            lines.append(f"2-colouring of associated graph: {two_coloring(associated_graph(g).base)}")
        if not rep.consistent:
            lines.append("equivalence VIOLATED")
        return rep.ab_property and rep.consistent, lines
    if prop == "uniconnected":
        k = len(decompose(g))
        return k == 1, [f"mixed components: {k}", f"uniconnected: {k == 1}"]
    if prop == "rs-regular":
        rs = check_rs_regular(g)
        if rs is None:
            return False, ["not (r,s)-regular"]
        r, s = rs
        return True, [f"({r},{s})-regular", f"eigenpairs verified exactly: {r + s} and {r - s}"]
    if prop == "r-regular":
        rep = check_r_regular(g)
        if rep is None:
            return False, ["not r-regular"]
        return rep.holds, [f"{rep.r}-regular", f"lambda_1 = {r12(rep.lambda1)}",
                           f"multiplicity of {rep.r}: {rep.multiplicity}",
                           f"mixed components: {rep.mixed_components}"]
    if prop == "perron":
        rep = check_perron(g)
        return rep.holds, [f"uniconnected: {rep.uniconnected}", f"lambda_1 = {r12(rep.lambda1)}",
                           f"lambda_1 simple: {rep.lambda1_simple}",
                           f"positive eigenvector: {rep.positive_vector}"]
    if prop == "trace":
        rep = check_trace_identities(g)
        return rep.holds, [f"sum of eigenvalues: {r12(rep.sum_eigenvalues)} (expected 0)",
                           f"sum of squares: {r12(rep.sum_squares)} (expected {rep.expected_sum_squares})",
                           f"c_2 = {rep.c2} (expected {rep.expected_c2})"]
    if prop == "interlacing":
        subsets = [vertices] if vertices else [[w for w in range(g.n) if w != v] for v in range(g.n)]
        ok, lines = True, []
        for vs in subsets:
            rep = check_interlacing(g, vs)
            ok &= rep.holds
            lines.append(f"induced on {vs}: worst slack {r12(rep.worst_slack)} "
                         f"{'ok' if rep.holds else 'FAIL'}")
        return ok, lines
    # vertex-addition
    ok, lines = True, []
    js = vertices if vertices else range(g.n)
    for j in js:
        for mode in VertexAddition:
            rep = check_vertex_addition(g, j, mode)
            ok &= rep.holds
            lines.append(f"j={j} {mode.name:<10} ({mode.value}): "
                         + ("ok" if rep.holds else f"discrepancy {rep.difference}"))
    return ok, lines


def cmd_check(args) -> int:
    g = _read(args.file)
    ok, lines = _check(g, args.property, args.vertices)
    print("\n".join(lines))
    print(f"{args.property}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def _bound_json(b: bnd.Bound, scale: float) -> dict:
    return {"name": b.name, "lhs": r12(b.lhs, scale), "rhs": r12(b.rhs, scale),
            "slack": r12(b.slack, scale), "strict": b.strict, "pass": b.holds}


def cmd_bounds(args) -> int:
    g = _read(args.file)
    code = EXIT_OK
    try:
        rep = bnd.all_bounds(g, exact=args.exact_alpha_omega)
    except ResourceLimitError as exc:
        print(f"warning: {exc}; reporting spectral bounds only", file=sys.stderr)
        rep = bnd.all_bounds(g, exact=False)
        code = EXIT_RESOURCE
    sc = max(abs(rep.lambda1), abs(rep.lambda_2n))
    payload = {
        "schema": _schema("bounds"),
        "delta1": rep.delta1, "delta2": rep.delta2, "sdelta1": rep.sdelta1, "sdelta2": rep.sdelta2,
        "lambda1": r12(rep.lambda1, sc), "lambda2": r12(rep.lambda2, sc),
        "lambda_2nminus1": r12(rep.lambda_2nminus1, sc), "lambda_2n": r12(rep.lambda_2n, sc),
        "alpha": rep.alpha, "omega": rep.omega,
        "alpha_bound": None if rep.alpha_bound is None else r12(rep.alpha_bound, sc),
        "omega_bound": None if rep.omega_bound is None else r12(rep.omega_bound, sc),
        "bounds": [_bound_json(b, sc) for b in rep.bounds],
    }
    lines = [f"Delta1={rep.delta1} Delta2={rep.delta2} delta1={rep.sdelta1} delta2={rep.sdelta2}",
             f"lambda_1={r12(rep.lambda1, sc)} lambda_2={r12(rep.lambda2, sc)} "
             f"lambda_2n-1={r12(rep.lambda_2nminus1, sc)} lambda_2n={r12(rep.lambda_2n, sc)}"]
    if rep.alpha_bound is not None:
        lines.append(f"spectral bounds: alpha <= {r12(rep.alpha_bound, sc)}, omega <= {r12(rep.omega_bound, sc)}")
    if rep.alpha is not None:
        lines.append(f"alpha={rep.alpha} omega={rep.omega}")
    for b in rep.bounds:
        lines.append(f"{'ok  ' if b.holds else 'FAIL'} {b.name}: {r12(b.lhs, sc)} vs {r12(b.rhs, sc)} "
                     f"(slack {r12(b.slack, sc)})")
    _emit(args, payload, lines)
    if code == EXIT_OK and not rep.holds:
        code = EXIT_FAIL
    return code


def cmd_walks(args) -> int:
    g = _read(args.file)
    counts = count_classified(g, args.src, args.dst, args.length)
    sums = walk_theorem_sums(counts)
    entries = matrix_walk_entries(g, args.src, args.dst, args.length)
    agree = sums == entries
    payload = {"schema": _schema("walks"), "from": args.src, "to": args.dst, "length": args.length,
               "classified": {c.value: counts[c] for c in WalkClass},
               "theorem_sums": sums, "matrix_entries": entries, "agree": agree}
    lines = [f"walks of length {args.length} from {args.src} to {args.dst}:"]
    lines += [f"  {c.value:<22} {counts[c]}" for c in WalkClass]
    for key, label in (("pp", "v'i,v'j"), ("pd", "v'i,v''j"), ("dp", "v''i,v'j"), ("dd", "v''i,v''j")):
        lines.append(f"  I^k[{label}] = {entries[key]}  walk count {sums[key]}")
    lines.append("agree" if agree else "DISAGREE")
    _emit(args, payload, lines)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_gen(args) -> int:
    g = generate(FamilySpec.of(args.family, *args.params))
    text = serialize(g)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mixedspec", description="Spectra of integrated adjacency matrices of mixed graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file", help="graph document, or - for standard input")
        s.set_defaults(func=func)
        return s

    s = with_file("spectrum", cmd_spectrum, "eigenvalues, multiplicities and sign counts")
    s.add_argument("--json", action="store_true")
    s.add_argument("--exact-charpoly", action="store_true", help="also print the exact characteristic polynomial")
    with_file("matrix", cmd_matrix, "integrated adjacency matrix with row labels")
    with_file("assoc", cmd_assoc, "associated graph as a graph document")
    s = with_file("components", cmd_components, "mixed components with types, theta, omega and t")
    s.add_argument("--json", action="store_true")
    s = with_file("det", cmd_det, "determinant by closed formula and/or exact elimination")
    grp = s.add_mutually_exclusive_group()
    for mode in ("formula", "exact", "both"):
        grp.add_argument(f"--{mode}", dest="mode", action="store_const", const=mode)
    s = with_file("check", cmd_check, "verify a structural property or identity")
    s.add_argument("--property", required=True, choices=PROPERTIES)
    s.add_argument("--vertices", type=int, nargs="+",
                   help="interlacing: induced vertex set; vertex-addition: attachment vertices")
    s = with_file("bounds", cmd_bounds, "eigenvalue bounds report")
    s.add_argument("--exact-alpha-omega", action="store_true",
                   help="compute exact independence and clique numbers (n <= 15)")
    s.add_argument("--json", action="store_true")
    s = with_file("walks", cmd_walks, "classified walk counts against matrix power entries")
    s.add_argument("--from", dest="src", type=int, required=True)
    s.add_argument("--to", dest="dst", type=int, required=True)
    s.add_argument("--len", dest="length", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s = sub.add_parser("gen", help="generate a named family as a graph document")
    s.add_argument("--family", required=True,
                   help="one of " + ", ".join(f.value for f in Family))
    s.add_argument("--params", type=int, nargs="+", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphParseError, GraphDomainError, FamilyError, PreconditionError,
            ComponentDomainError, WalkDomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

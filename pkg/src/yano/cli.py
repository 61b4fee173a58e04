"""Command-line interface: ``yano <command> [options]``.

Exit codes: 0 success, 1 input error, 2 consistency mismatch (series mass
differs from the Milnor number, or a corpus case disagrees), 3 internal
inconsistency (for example a graph with a nonpositive Milnor number).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import charseq, golden, newton, resgraph
from .errors import (
    InconsistentGraphError,
    InternalConsistencyError,
    YanoError,
)
from .fracseries import format_fraction, parse_fraction
from .mellin.integrals import Integrand, residue_at
from .mellin.pipeline import load_pipeline
from .mellin.poly import parse_poly2

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_fraction(v)
    if isinstance(v, dict):
        return {str(_jsonable(k)): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _germ_input(args):
    """Graph plus optional Yano series from --charseq / --pairs / --graph."""
    if args.graph:
        return resgraph.load_graph(args.graph), None
    if args.charseq:
        cs = charseq.parse_charseq(args.charseq)
    elif args.pairs:
        cs = charseq.charseq_from_newton_pairs(charseq.parse_newton_pairs(args.pairs))
    else:
        raise YanoError("one of --charseq, --pairs or --graph is required")
    return resgraph.from_newton_pairs(charseq.newton_pairs_from_charseq(cs)), cs


def _multiset_text(series):
    return ", ".join(
        format_fraction(q) if c == 1 else f"{format_fraction(q)} (x{c})" for q, c in series.items()
    )


def cmd_series(args):
    graph, cs = _germ_input(args)
    series = charseq.yano_series(cs) if cs is not None else resgraph.extended_yano_series(graph)
    mu = resgraph.milnor_number(graph)
    mass = series.total_mass()
    if args.coefficient is not None:
        q = parse_fraction(args.coefficient)
        c = series.coefficient_at(q)
        _emit(args, {"exponent": q, "coefficient": c}, [str(c)])
        return EXIT_OK
    payload = {
        "series": str(series),
        "mass": mass,
        "milnor": mu,
        "exponents": {q: c for q, c in series.items()},
        "consistent": mass == mu,
    }
    lines = [str(series), f"mass: {mass}", f"mu: {mu}", f"exponents: {_multiset_text(series)}"]
    if mass != mu:
        lines.append("MISMATCH: total mass differs from the Milnor number")
    _emit(args, payload, lines)
    return EXIT_OK if mass == mu else EXIT_MISMATCH


def cmd_monodromy(args):
    graph, cs = _germ_input(args)
    mu = resgraph.milnor_number(graph)
    mults = resgraph.eigenvalue_multiplicities(graph)
    multiple = resgraph.has_multiple_eigenvalue_excluding_one(graph)
    payload = {
        "eigenvalues": mults,
        "milnor": mu,
        "zeta_exponents": resgraph.zeta_exponents(graph),
        "verdict": "multiple" if multiple else "simple",
    }
    lines = [f"{format_fraction(q):>8}  {m}" for q, m in mults.items()]
    lines += [f"mu: {mu}", f"verdict: {payload['verdict']}"]
    if cs is not None and cs.g == 2:
        gcd_simple = charseq.has_simple_eigenvalues_g2(charseq.newton_pairs_from_charseq(cs))
        payload["gcd_criterion"] = "simple" if gcd_simple else "multiple"
        lines.append(f"gcd criterion: {payload['gcd_criterion']}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_polygon(args):
    pg = newton.polygon_from_support(newton.parse_support(args.points))
    roots = newton.bf_roots(pg)
    print(
        "warning: non-degeneracy and distinct-spectrum hypotheses are not checked",
        file=sys.stderr,
    )
    payload = {"facets": [list(f) for f in pg.facets], "sigma0": pg.sigma0, "tau0": pg.tau0,
               "roots": roots, "count": len(roots)}
    lines = ["facets: " + " ".join(f"({c},{d},{n})" for c, d, n in pg.facets),
             f"roots ({len(roots)}): " + " ".join(format_fraction(q) for q in roots)]
    _emit(args, payload, lines)
    return EXIT_OK


def _parse_params(items):
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise YanoError(f"parameter {item!r} must look like name=value")
        out[name.strip()] = parse_fraction(value.strip())
    return out


def _pair(text, what):
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise YanoError(f"{what} must be two comma-separated integers, got {text!r}") from None
    return a, b


def cmd_residue(args):
    if args.pipeline:
        pipe = load_pipeline(args.pipeline)
        _, points = pipe.pieces()
        if args.at:
            points = [parse_fraction(args.at)]
        if not points:
            raise YanoError("pipeline has no residue_at step; pass --at")
        entries, lines = [], []
        for alpha in points:
            res = pipe.residue(alpha)
            closed = str(res.closed_form) if res.closed_form is not None else None
            entries.append({"residue_at": alpha, "residue": res.residue, "error": res.error,
                            "closed_form": closed, "flags": list(res.flags),
                            "pieces": [label for label, _, rep in res.pieces if rep is not None]})
            lines.append(f"residue at {format_fraction(alpha)}: {res.residue!r} (+- {res.error:.1e})")
            if closed:
                lines.append(f"closed form: {closed}")
            for fl in res.flags:
                lines.append(f"flag: {fl}")
        _emit(args, {"residues": entries}, lines)
        return EXIT_OK

    if not (args.f and args.at):
        raise YanoError("give --pipeline FILE, or --f POLY with --at ALPHA")
    f = parse_poly2(args.f, _parse_params(args.param))
    a1, a2 = _pair(args.a, "--a")
    b1, b2 = _pair(args.b, "--b")
    ig = Integrand(f, a1, b1, a2, b2, parse_fraction(args.scale))
    rep = residue_at(ig, parse_fraction(args.at))
    payload = {"location": rep.location, "order": rep.order, "residue": rep.residue,
               "error": rep.error, "leading2": rep.leading2, "tags": [list(t) for t in rep.tags],
               "flags": list(rep.flags), "positivity_certified": rep.positivity_certified}
    lines = [f"pole at {format_fraction(rep.location)}: order {rep.order}"]
    if rep.order == 2:
        lines.append(f"coefficient of (s - alpha)^-2: {_jsonable(rep.leading2)}")
    else:
        lines.append(f"residue: {rep.residue!r} (+- {rep.error:.1e})")
    lines += [f"flag: {fl}" for fl in rep.flags]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_corpus(args):
    try:
        cases = golden.load_corpus(args.dir, args.only)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not cases:
        print("error: no corpus case matches the filter", file=sys.stderr)
        return EXIT_INPUT
    results = golden.run_corpus(cases, args.workers)
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.name} [{r.kind}]")
        if r.error:
            lines.append(f"    error: {r.error}")
        lines += [f"    {d}" for d in r.diffs]
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} passed")
    payload = {"cases": [{"name": r.name, "kind": r.kind, "ok": r.ok, "diffs": r.diffs,
                          "error": r.error, "outputs": r.outputs} for r in results],
               "passed": len(results) - failed, "total": len(results)}
    _emit(args, payload, lines)
    if not failed:
        return EXIT_OK
    if any(r.error and "InconsistentGraph" in r.error for r in results):
        return EXIT_INTERNAL
    return EXIT_MISMATCH


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    p = argparse.ArgumentParser(prog="yano", parents=[common],
                                description="Candidate Bernstein-Sato exponents of plane curves.")
    sub = p.add_subparsers(dest="command", required=True)

    def germ_options(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--charseq", help='characteristic sequence "n;b1,b2,..."')
        g.add_argument("--pairs", help='Newton pairs "p1:q1,p2:q2,..."')
        g.add_argument("--graph", help="resolution graph JSON file")

    sp = sub.add_parser("series", parents=[common], help="candidate exponent series")
    germ_options(sp)
    sp.add_argument("--coefficient", metavar="Q", help="print only the coefficient of t^Q")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("monodromy", parents=[common], help="monodromy eigenvalue multiplicities")
    germ_options(sp)
    sp.set_defaults(func=cmd_monodromy)

    sp = sub.add_parser("polygon", parents=[common], help="candidate roots from a Newton polygon")
    sp.add_argument("points", help='support points "x,y;x,y;..." or a JSON list')
    sp.set_defaults(func=cmd_polygon)

    sp = sub.add_parser("residue", parents=[common], help="residues of Mellin-type integrals")
    sp.add_argument("--pipeline", help="pipeline JSON file")
    sp.add_argument("--f", help="polynomial f(x, y)")
    sp.add_argument("--a", default="1,1", help="s-coefficients a1,a2 of the exponents")
    sp.add_argument("--b", default="1,1", help="constant parts b1,b2 of the exponents")
    sp.add_argument("--scale", default="1", help="positive rational prefactor")
    sp.add_argument("--param", action="append", metavar="NAME=VALUE", help="rational parameter in f")
    sp.add_argument("--at", help="candidate pole p/q")
    sp.set_defaults(func=cmd_residue)

    sp = sub.add_parser("corpus", parents=[common], help="run the golden corpus")
    sp.add_argument("--only", action="append", metavar="SUBSTRING", help="run matching cases only")
    sp.add_argument("--dir", help="corpus directory (default: the bundled one)")
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_corpus)
    return p


def _join_negative_values(argv):
    # argparse reads "-8/21" as an option; glue it to its flag instead
    out = []
    for tok in argv:
        if out and out[-1] in ("--at", "--coefficient") and tok.startswith("-"):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except (InconsistentGraphError, InternalConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (YanoError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

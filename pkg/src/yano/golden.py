"""Golden corpus: loading cases and checking them against fresh computations.

Each case is a JSON file with ``name``, ``kind`` (charseq, graph, polygon or
pipeline), ``input``, ``expected`` and a ``provenance`` note.  Only the keys
present under ``expected`` are checked.
"""

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import charseq, newton, resgraph
from .errors import ParseError, YanoError
from .fracseries import FracSeries, format_fraction, parse_fraction
from .mellin.pipeline import pipeline_from_dict

__all__ = ["CorpusCase", "CaseResult", "load_corpus", "run_case", "run_corpus", "default_corpus_dir"]

KINDS = ("charseq", "graph", "polygon", "pipeline")


@dataclass(frozen=True)
class CorpusCase:
    name: str
    kind: str
    input: dict
    expected: dict
    provenance: str
    germ: str = ""
    path: str = ""


@dataclass
class CaseResult:
    name: str
    kind: str
    ok: bool
    diffs: list = field(default_factory=list)
    outputs: dict = field(default_factory=dict)
    error: str = None
    mass_mismatch: bool = False
    seconds: float = 0.0


def default_corpus_dir():
    return Path(str(resources.files("yano").joinpath("corpus")))


def _case_from_dict(data, path=""):
    try:
        case = CorpusCase(
            name=str(data["name"]),
            kind=str(data["kind"]),
            input=data["input"],
            expected=data["expected"],
            provenance=str(data["provenance"]),
            germ=str(data.get("germ", "")),
            path=str(path),
        )
    except KeyError as exc:
        raise ParseError(f"{path}: corpus case is missing {exc}") from None
    if case.kind not in KINDS:
        raise ParseError(f"{path}: unknown case kind {case.kind!r}")
    if not case.provenance.strip():
        raise ParseError(f"{path}: empty provenance note")
    return case


def load_corpus(directory=None, only=None):
    """Cases sorted by name; ``only`` keeps names containing any of the given substrings."""
    d = Path(directory) if directory else default_corpus_dir()
    if not d.is_dir():
        raise FileNotFoundError(f"corpus directory {d} not found")
    cases = []
    for p in sorted(d.glob("*.json")):
        with open(p, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{p}: invalid JSON ({exc})") from None
        cases.append(_case_from_dict(data, p))
    if only:
        cases = [c for c in cases if any(o in c.name for o in only)]
    return sorted(cases, key=lambda c: c.name)


def _fr_key(d):
    return {parse_fraction(str(k)): v for k, v in d.items()}


class _Checker:
    def __init__(self, expected):
        self.expected = expected
        self.diffs = []

    def eq(self, key, got, want=None, show=str):
        if key not in self.expected:
            return
        want = self.expected[key] if want is None else want
        if got != want:
            self.diffs.append(f"{key}: expected {show(want)}, got {show(got)}")


def _series_checks(chk, series, exp, outputs):
    outputs["series"] = str(series)
    outputs["mass"] = series.total_mass()
    if "series" in exp:
        chk.eq("series", series, FracSeries.parse(exp["series"]))
    if "coefficients" in exp:
        for q, c in _fr_key(exp["coefficients"]).items():
            got = series.coefficient_at(q)
            outputs.setdefault("coefficients", {})[format_fraction(q)] = got
            if got != int(c):
                chk.diffs.append(f"coefficient of t^({format_fraction(q)}): expected {c}, got {got}")
    if "yano_candidates" in exp:
        for q, flag in _fr_key(exp["yano_candidates"]).items():
            got = series.coefficient_at(q) > 0
            if got != bool(flag):
                chk.diffs.append(f"candidate {format_fraction(q)}: expected {flag}, got {got}")
    if "literature_roots" in exp and "symmetric_difference" in exp:
        lit = {-parse_fraction(r) for r in exp["literature_roots"]}
        sd = sorted(lit ^ series.exponent_set())
        outputs["symmetric_difference"] = [format_fraction(q) for q in sd]
        want = sorted(parse_fraction(q) for q in exp["symmetric_difference"])
        if sd != want:
            chk.diffs.append(
                "symmetric difference: expected "
                f"{[format_fraction(q) for q in want]}, got {outputs['symmetric_difference']}"
            )


def _run_charseq(case, chk, outputs):
    inp = case.input
    if "charseq" in inp:
        cs = charseq.parse_charseq(inp["charseq"])
    else:
        cs = charseq.charseq_from_newton_pairs(charseq.parse_newton_pairs(inp["pairs"]))
    series = charseq.yano_series(cs)
    graph = resgraph.from_newton_pairs(charseq.newton_pairs_from_charseq(cs))
    mu = resgraph.milnor_number(graph)
    outputs["milnor"] = mu
    _series_checks(chk, series, case.expected, outputs)
    chk.eq("milnor", mu)
    if resgraph.extended_yano_series(graph) != series:
        chk.diffs.append("Yano series differs from the graph series of the same germ")
    return series.total_mass() != mu


def _run_graph(case, chk, outputs):
    graph = resgraph.graph_from_dict(case.input)
    series = resgraph.extended_yano_series(graph)
    mu = resgraph.milnor_number(graph)
    mults = resgraph.eigenvalue_multiplicities(graph)
    outputs["milnor"] = mu
    outputs["eigenvalues"] = {format_fraction(q): m for q, m in mults.items()}
    outputs["multiple_eigenvalues"] = resgraph.has_multiple_eigenvalue_excluding_one(graph)
    _series_checks(chk, series, case.expected, outputs)
    chk.eq("milnor", mu)
    if "eigenvalues" in case.expected:
        want = {q: int(m) for q, m in _fr_key(case.expected["eigenvalues"]).items()}
        if mults != want:
            chk.diffs.append("eigenvalue multiplicities differ from the stored table")
    if sum(mults.values()) != mu:
        chk.diffs.append(f"eigenvalue multiplicities sum to {sum(mults.values())}, not mu = {mu}")
    chk.eq("multiple_eigenvalues", outputs["multiple_eigenvalues"])
    return series.total_mass() != mu


def _run_polygon(case, chk, outputs):
    pg = newton.polygon_from_support(case.input["support"])
    roots = newton.bf_roots(pg)
    exp = case.expected
    outputs["facets"] = [list(f) for f in pg.facets]
    outputs["roots"] = [format_fraction(q) for q in roots]
    outputs["count"] = len(roots)
    chk.eq("facets", outputs["facets"], [list(f) for f in exp.get("facets", [])])
    chk.eq("sigma0", pg.sigma0)
    chk.eq("tau0", pg.tau0)
    chk.eq("count", len(roots))
    if "roots" in exp:
        chk.eq("roots", roots, sorted((parse_fraction(q) for q in exp["roots"]), reverse=True),
               show=lambda v: [format_fraction(q) for q in v])
    if "max_root" in exp:
        chk.eq("max_root", roots[0], parse_fraction(exp["max_root"]), show=format_fraction)
    for q in exp.get("contains", []):
        if parse_fraction(q) not in roots:
            chk.diffs.append(f"{q} is missing from the candidate roots")
    for q in exp.get("excludes", []):
        if parse_fraction(q) in roots:
            chk.diffs.append(f"{q} unexpectedly among the candidate roots")
    return False


def _run_pipeline(case, chk, outputs):
    pipe = pipeline_from_dict(case.input)
    exp = case.expected
    _, points = pipe.pieces()
    if "residue_at" in exp:
        points = [parse_fraction(exp["residue_at"])]
    results = []
    for alpha in points:
        res = pipe.residue(alpha)
        entry = {
            "residue_at": format_fraction(alpha),
            "residue": res.residue,
            "error": res.error,
            "closed_form": str(res.closed_form) if res.closed_form is not None else None,
            "flags": list(res.flags),
        }
        results.append(entry)
        if res.residue is None or not math.isfinite(res.residue):
            chk.diffs.append(f"no finite residue at {format_fraction(alpha)}")
            continue
        want = exp.get("closed_form")
        if want is not None:
            if entry["closed_form"] != want:
                chk.diffs.append(f"closed form: expected {want}, got {entry['closed_form']}")
            else:
                closed = res.closed_form.value
                entry["closed_value"] = closed
                rtol = float(exp.get("rtol", 1e-8))
                if abs(res.residue - closed) > rtol * abs(closed):
                    chk.diffs.append(
                        f"residue {res.residue!r} differs from closed form {closed!r} beyond rtol {rtol}"
                    )
    outputs["residues"] = results
    return False


_RUNNERS = {"charseq": _run_charseq, "graph": _run_graph, "polygon": _run_polygon,
            "pipeline": _run_pipeline}


def run_case(case):
    start = time.perf_counter()
    chk = _Checker(case.expected)
    outputs = {}
    res = CaseResult(case.name, case.kind, False)
    try:
        res.mass_mismatch = bool(_RUNNERS[case.kind](case, chk, outputs))
    except (YanoError, ValueError, KeyError, TypeError) as exc:
        res.error = f"{type(exc).__name__}: {exc}"
    res.diffs = chk.diffs
    res.outputs = outputs
    if res.mass_mismatch:
        res.diffs.append(f"total mass {outputs.get('mass')} differs from mu = {outputs.get('milnor')}")
    res.ok = res.error is None and not res.diffs
    res.seconds = time.perf_counter() - start
    return res


def run_corpus(cases, workers=None):
    """Results in the order of ``cases``; cases are independent and run concurrently."""
    if not cases:
        return []
    with ThreadPoolExecutor(max_workers=workers or min(8, len(cases))) as pool:
        return list(pool.map(run_case, cases))


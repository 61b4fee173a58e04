"""Scripted region decompositions of two-variable integrals.

A pipeline is a JSON object::

    {
      "params": {"t": "1"},
      "integrand": {"f": "x^3*y^3 + x^7 + t*x^6*y + y^8", "a": [0, 0], "b": [1, 1],
                    "scale": "1", "weight": "1"},
      "steps": [
        {"split": "I1", "from": "root"},
        {"substitute": [[1, 3], [0, 4]]},
        ...
        {"residue_at": "-8/21"}
      ]
    }

``split`` starts a new piece (a copy of the ``from`` piece, default the
current one) and makes it current; ``substitute`` applies a monomial change
to the current piece; ``residue_at`` sums the residues over all leaf pieces
(pieces no other piece was split from).  Pieces holomorphic at the point
contribute 0.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidArgument, ParseError
from ..fracseries import parse_fraction
from .integrals import Integrand, PoleReport, _tags_for, monomial_change, residue_at
from .poly import parse_poly2

__all__ = ["Pipeline", "PipelineResult", "load_pipeline", "pipeline_from_dict", "run_pipeline"]


@dataclass(frozen=True)
class PipelineResult:
    location: Fraction
    residue: float
    error: float
    pieces: tuple  # (label, Integrand, PoleReport or None)
    closed_form: object = None  # beta.BetaClosedForm or None
    flags: tuple = ()


@dataclass
class Pipeline:
    root: Integrand
    steps: list
    params: dict

    def pieces(self):
        """Run the split/substitute steps; returns ``(pieces, parents, residue points)``."""
        pieces = {"root": self.root}
        order = ["root"]
        parents = set()
        current = "root"
        points = []
        for i, step in enumerate(self.steps):
            if not isinstance(step, dict) or len(step.keys() - {"from", "region"}) != 1:
                raise ParseError(f"pipeline step {i} is malformed: {step!r}")
            if "split" in step:
                label = str(step["split"])
                src = str(step.get("from", current))
                if src not in pieces:
                    raise InvalidArgument(f"step {i}: unknown piece {src!r}")
                if label in pieces:
                    raise InvalidArgument(f"step {i}: piece {label!r} defined twice")
                pieces[label] = pieces[src]
                order.append(label)
                parents.add(src)
                current = label
            elif "substitute" in step:
                m = step["substitute"]
                try:
                    matrix = ((int(m[0][0]), int(m[0][1])), (int(m[1][0]), int(m[1][1])))
                except (TypeError, ValueError, IndexError):
                    raise ParseError(f"step {i}: substitution must be a 2x2 integer matrix") from None
                pieces[current] = monomial_change(pieces[current], matrix)
            elif "residue_at" in step:
                points.append(parse_fraction(str(step["residue_at"])))
            else:
                raise ParseError(f"pipeline step {i} has unknown kind: {step!r}")
        leaves = [(label, pieces[label]) for label in order if label not in parents]
        return leaves, points

    def residue(self, alpha, config=None):
        from .beta import recognize_beta

        alpha = Fraction(alpha)
        leaves, _ = self.pieces()
        out = []
        values, errs, terms, flags = [], [], [], []
        for label, ig in leaves:
            if not _tags_for(ig, alpha):
                out.append((label, ig, None))
                continue
            rep = residue_at(ig, alpha, config)
            out.append((label, ig, rep))
            if rep.order == 2:
                flags.append(f"{label}:double-pole")
                continue
            values.append(rep.residue)
            errs.append(rep.error)
            terms.extend(rep.terms)
            flags.extend(f"{label}:{fl}" for fl in rep.flags)
        closed = recognize_beta(terms) if not any(f.endswith("double-pole") for f in flags) else None
        residue = math.fsum(values) if not any(f.endswith("double-pole") for f in flags) else None
        return PipelineResult(alpha, residue, math.fsum(errs), tuple(out), closed, tuple(flags))


def _rational(v):
    return parse_fraction(str(v))


def pipeline_from_dict(data):
    if not isinstance(data, dict) or "integrand" not in data:
        raise ParseError("pipeline needs an 'integrand' object")
    params = {k: _rational(v) for k, v in (data.get("params") or {}).items()}
    spec = data["integrand"]
    try:
        f = parse_poly2(spec["f"], params)
        weight = parse_poly2(spec.get("weight", "1"), params)
        a1, a2 = (int(v) for v in spec.get("a", [0, 0]))
        b1, b2 = (int(v) for v in spec.get("b", [1, 1]))
    except (KeyError, TypeError, ValueError):
        raise ParseError("integrand needs 'f' and two-element 'a', 'b' lists") from None
    root = Integrand(f, a1, b1, a2, b2, _rational(spec.get("scale", 1)), weight)
    return Pipeline(root, list(data.get("steps", [])), params)


def load_pipeline(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if "input" in data and "integrand" not in data:
        data = data["input"]
    return pipeline_from_dict(data)


def run_pipeline(pipeline, config=None):
    """Residues at every ``residue_at`` step, in order."""
    _, points = pipeline.pieces()
    return [pipeline.residue(p, config) for p in points]

"""Frobenius thresholds of monomial filtrations.

Exact values come back as fractions.Fraction; infinite nu values as the strings "+inf" / "-inf".
"""

import json
from fractions import Fraction

from ._fthresh import (  # noqa: F401
    DomainError,
    Filtration,
    Ideal,
    run_cli,
    verify_examples,
)
from . import _fthresh

__all__ = [
    "DomainError",
    "Filtration",
    "Ideal",
    "nu",
    "nu_sequence",
    "fthreshold",
    "symbolic_threshold",
    "bracket",
    "rees_valuations",
    "hypergraph_bounds",
    "verify_examples",
    "run_cli",
]


def _frac(x):
    if x is None or x in ("+inf", "-inf"):
        return x
    return Fraction(x)


def _record(r):
    return {"e": r["e"], "q": int(r["q"]), "nu": r["nu"] if isinstance(r["nu"], str) else int(r["nu"]),
            "ratio": _frac(r["ratio"])}


def _filtration(f):
    if isinstance(f, Filtration):
        return f
    if isinstance(f, Ideal):
        return Filtration.ordinary(f)
    if isinstance(f, dict):
        return Filtration.from_json(json.dumps(f))
    return Filtration.ordinary(Ideal(f))


def nu(filtration, target="m", p=2, e=1):
    return _record(json.loads(_fthresh._nu(_filtration(filtration), target, p, e)))


def nu_sequence(filtration, target="m", p=2, e_max=4, threads=1):
    s = json.loads(_fthresh._nu_sequence(_filtration(filtration), target, p, e_max, threads))
    return [_record(r) for r in s["records"]]


def _threshold(j):
    out = {"kind": j["kind"], "method": j["method"], "certificate": j["certificate"]}
    if j["kind"] == "exact":
        out["value"] = Fraction(j["value"])
    else:
        out["lower"] = Fraction(j["lower"])
        out["upper"] = _frac(j["upper"])
        out["upper_certified"] = j["upper_certified"]
    return out


def fthreshold(ideal):
    """Threshold of the ordinary powers of `ideal` against the maximal ideal."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    return _threshold(json.loads(_fthresh._fthreshold_ordinary(ideal)))


def symbolic_threshold(ideal):
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    return _threshold(json.loads(_fthresh._fthreshold_symbolic(ideal)))


def bracket(filtration, p=2, e_max=4):
    return _threshold(json.loads(_fthresh._fthreshold_bracket(_filtration(filtration), p, e_max)))


def rees_valuations(ideal):
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    return [([Fraction(w) for w in v["weights"]], int(v["value"])) for v in json.loads(_fthresh._rees_valuations(ideal))]


def hypergraph_bounds(n, edges):
    j = json.loads(_fthresh._hypergraph_bounds(n, [sorted(e) for e in edges]))
    return {k: (_frac(v) if isinstance(v, str) else v) for k, v in j.items()}

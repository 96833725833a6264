"""JSON forms for configurations, instances, and every certificate kind.

Scalars are exact: a rational is the string "p/q" and a quadratic-extension
value is {"a", "b", "d"} for a + b*sqrt(d), so files round-trip without any
precision loss. Emission is canonical (sorted keys, two-space indent,
trailing newline), making byte-for-byte comparison a meaningful test.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .convex import (AnchoredHalfspace, ColorConfig, CommonPoint,
                     FullPattern, PatternFails, SeparationCert, build_config)
from .core import FarkasCert, QuadScalar, Ray, Vec
from .lemma import (ConeDisjoint, ContradictionTrace, LemmaFalsified,
                    LemmaInstance, PencilInstance)
from .pipeline import (Both, ProofTrace, RedTransversal, TheoremCert,
                       Unresolved)
from .sphere import ConeWitness, CrossingWitness, NoCrossing, SphereDrawing
from .transversal import (PluckerLine, SearchReport, StabProof,
                          TransversalCert)


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ============================================================
# Scalars and vectors
# ============================================================


def encode_scalar(x):
    if isinstance(x, QuadScalar):
        return {"a": encode_scalar(x.a), "b": encode_scalar(x.b),
                "d": encode_scalar(x.disc)}
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_scalar(data):
    if isinstance(data, dict):
        return QuadScalar(parse_scalar(data["a"]), parse_scalar(data["b"]),
                          parse_scalar(data["d"]))
    if isinstance(data, str):
        num, _, den = data.partition("/")
        return Fraction(int(num), int(den) if den else 1)
    if isinstance(data, int):
        return Fraction(data)
    raise ValueError(f"not a scalar encoding: {data!r}")


def encode_vec(v: Vec) -> list:
    return [encode_scalar(c) for c in v.coords]


def parse_vec(data) -> Vec:
    return Vec([parse_scalar(c) for c in data])


def encode_ray(r: Ray) -> list:
    return list(r.ints)


def parse_ray(data) -> Ray:
    return Ray(tuple(int(c) for c in data))


# ============================================================
# Configurations
# ============================================================


def config_to_json(cfg: ColorConfig) -> dict:
    return {"matrix": [[encode_vec(p) for p in row] for row in cfg.matrix]}


def config_from_json(data: dict) -> ColorConfig:
    return build_config([[parse_vec(p) for p in row]
                         for row in data["matrix"]])


# ============================================================
# Halfspaces and membership instances
# ============================================================


def halfspace_to_json(h: AnchoredHalfspace) -> dict:
    return {"normal": encode_ray(h.normal), "offset": encode_scalar(h.offset)}


def halfspace_from_json(data: dict) -> AnchoredHalfspace:
    offset = parse_scalar(data["offset"])
    if isinstance(offset, QuadScalar):
        raise ValueError("halfspace offsets must be rational")
    return AnchoredHalfspace(parse_ray(data["normal"]), offset)


def lemma_instance_to_json(inst: LemmaInstance | PencilInstance) -> dict:
    if isinstance(inst, PencilInstance):
        return {"R": [halfspace_to_json(h) for h in inst.R],
                "S": [halfspace_to_json(h) for h in inst.S],
                "a": encode_vec(inst.a), "z": encode_vec(inst.z)}
    return {"hA": halfspace_to_json(inst.hA),
            "hU": halfspace_to_json(inst.hU),
            "hW": halfspace_to_json(inst.hW),
            "hC": halfspace_to_json(inst.hC),
            "a": encode_vec(inst.a), "z": encode_vec(inst.z)}


def lemma_instance_from_json(data: dict) -> LemmaInstance | PencilInstance:
    """Rebuild an instance, detecting the bundle form by its keys."""
    a, z = parse_vec(data["a"]), parse_vec(data["z"])
    if "R" in data or "S" in data:
        return PencilInstance(
            tuple(halfspace_from_json(h) for h in data["R"]),
            tuple(halfspace_from_json(h) for h in data["S"]), a, z)
    return LemmaInstance(*(halfspace_from_json(data[k])
                           for k in ("hA", "hU", "hW", "hC")), a, z)


# ============================================================
# Certificates
# ============================================================


def farkas_to_json(cert: FarkasCert) -> dict:
    return {"multipliers": [encode_scalar(m) for m in cert.multipliers]}


def cone_witness_to_json(w: ConeWitness) -> dict:
    return {"eta": None if w.eta is None else encode_ray(w.eta),
            "lam": [encode_scalar(c) for c in w.lam],
            "mu": [encode_scalar(c) for c in w.mu]}


def lemma_verdict_to_json(res: ConeDisjoint | LemmaFalsified) -> dict:
    if isinstance(res, ConeDisjoint):
        return {"verdict": "disjoint", "farkas": farkas_to_json(res.cert)}
    return {"verdict": "falsified",
            "witness": cone_witness_to_json(res.witness)}


def contradiction_trace_to_json(trace: ContradictionTrace) -> dict:
    return {"eta": None if trace.eta is None else encode_ray(trace.eta),
            "steps": [{"inequality": s.inequality,
                       "lhs": encode_scalar(s.lhs),
                       "rhs": encode_scalar(s.rhs),
                       "verdict": s.verdict} for s in trace.steps]}


def line_to_json(line: PluckerLine) -> dict:
    return {"direction": encode_vec(line.direction),
            "moment": encode_vec(line.moment)}


def line_from_json(data: dict) -> PluckerLine:
    return PluckerLine(parse_vec(data["direction"]),
                       parse_vec(data["moment"]))


def transversal_cert_to_json(cert: TransversalCert) -> dict:
    return {"line": line_to_json(cert.line),
            "proofs": [{"point": encode_vec(p.point),
                        "weights": [encode_scalar(w) for w in p.weights]}
                       for p in cert.proofs]}


def transversal_cert_from_json(data: dict) -> TransversalCert:
    return TransversalCert(
        line_from_json(data["line"]),
        tuple(StabProof(parse_vec(p["point"]),
                        tuple(parse_scalar(w) for w in p["weights"]))
              for p in data["proofs"]))


def report_to_json(report: SearchReport) -> dict:
    return {"candidates_examined": report.candidates_examined,
            "degenerate_skipped": report.degenerate_skipped,
            "oracle_samples": report.oracle_samples,
            "verdict": report.verdict}


def theorem_cert_to_json(cert: TheoremCert) -> dict:
    verdict = cert.verdict
    if isinstance(verdict, Both):
        kind, red, blue = "both", verdict.red, verdict.blue
    elif isinstance(verdict, RedTransversal):
        kind, red, blue = "red", verdict.cert, None
    else:
        kind, red, blue = "blue", None, verdict.cert
    return {"verdict": kind,
            "red": None if red is None else transversal_cert_to_json(red),
            "blue": None if blue is None else transversal_cert_to_json(blue),
            "red_report": report_to_json(cert.red_report),
            "blue_report": report_to_json(cert.blue_report)}


# ============================================================
# Diagnostic traces
# ============================================================


def separation_cert_to_json(cert: SeparationCert) -> dict:
    return {"normal": encode_ray(cert.half.normal),
            "offset": encode_scalar(cert.half.offset),
            "inside_margins": [encode_scalar(m)
                               for m in cert.inside_margins],
            "outside_margins": [encode_scalar(m)
                                for m in cert.outside_margins]}


def _common_point_to_json(c: CommonPoint) -> dict:
    return {"point": encode_vec(c.point),
            "weights_first": [encode_scalar(w) for w in c.weights_first],
            "weights_second": [encode_scalar(w) for w in c.weights_second]}


def pattern_to_json(pattern) -> dict:
    if isinstance(pattern, FullPattern):
        return {"holds": True,
                "certs": [separation_cert_to_json(c)
                          for c in pattern.certs]}
    assert isinstance(pattern, PatternFails)
    return {"holds": False, "index": pattern.index,
            "common": _common_point_to_json(pattern.common)}


def drawing_to_json(d: SphereDrawing) -> dict:
    return {"blue": [encode_ray(r) for r in d.blue],
            "red": [encode_ray(r) for r in d.red]}


def crossing_to_json(res: CrossingWitness | NoCrossing) -> dict:
    if isinstance(res, CrossingWitness):
        return {"kind": "crossing",
                "arc1": list(res.arc1.label), "arc2": list(res.arc2.label),
                "witness": cone_witness_to_json(res.witness)}
    return {"kind": "no-crossing",
            "certificates": [{"arc1": list(a), "arc2": list(b),
                              "farkas": farkas_to_json(cert)}
                             for a, b, cert in res.certificates]}


def trace_to_json(trace: ProofTrace) -> dict:
    return {
        "red_pattern": pattern_to_json(trace.red_pattern),
        "blue_pattern": pattern_to_json(trace.blue_pattern),
        "drawing": None if trace.drawing is None
        else drawing_to_json(trace.drawing),
        "crossing": None if trace.crossing is None
        else crossing_to_json(trace.crossing),
        "lemma_instance": None if trace.lemma_instance is None
        else lemma_instance_to_json(trace.lemma_instance),
        "lemma_verdict": None if trace.lemma_verdict is None
        else lemma_verdict_to_json(trace.lemma_verdict),
        "complete": trace.complete,
    }


def unresolved_to_json(res: Unresolved) -> dict:
    return {"unresolved": True,
            "trace": trace_to_json(res.trace),
            "report": report_to_json(res.report)}

"""Shipped schemas must accept what the tool actually emits."""

import json
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

from tristab.convex import halfspace
from tristab.core import Vec
from tristab.lemma import (LemmaInstance, PencilInstance, verify_basic_lemma,
                           verify_pencil_lemma)
from tristab.pipeline import GenSpec, diagnostic_chain, random_config, \
    verify_theorem
from tristab.serialize import (config_to_json, lemma_instance_to_json,
                               lemma_verdict_to_json, theorem_cert_to_json,
                               trace_to_json)

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def _load(name):
    return json.loads((SCHEMA_DIR / name).read_text())


@pytest.fixture(scope="module")
def registry():
    resources = [(p.name, Resource.from_contents(json.loads(p.read_text())))
                 for p in SCHEMA_DIR.glob("*.schema.json")]
    return Registry().with_resources(resources)


def _validate(payload, schema_name, registry):
    schema = _load(schema_name)
    jsonschema.Draft7Validator(schema, registry=registry).validate(payload)


def test_config_schema(registry):
    cfg = random_config(GenSpec(seed=5, bound=12))
    _validate(config_to_json(cfg), "config.schema.json", registry)


def test_theorem_cert_schema(registry):
    cfg = random_config(GenSpec(seed=5, bound=25))
    payload = theorem_cert_to_json(verify_theorem(cfg))
    _validate(payload, "theorem-cert.schema.json", registry)
    payload["trace"] = trace_to_json(diagnostic_chain(cfg))
    _validate(payload, "theorem-cert.schema.json", registry)


def test_lemma_schemas(registry):
    basic = LemmaInstance(
        halfspace((1, 0, 0), 0), halfspace((0, 1, 0), 0),
        halfspace((-1, 0, 0), -2), halfspace((0, -1, 0), -2),
        Vec((3, 3, 0)), Vec((-1, -1, 0)))
    _validate(lemma_instance_to_json(basic), "lemma-instance.schema.json",
              registry)
    _validate(lemma_verdict_to_json(verify_basic_lemma(basic)),
              "lemma-verdict.schema.json", registry)

    pencil = PencilInstance(
        (halfspace((1, 0, 0), 0), halfspace((0, 1, 0), 0),
         halfspace((0, 0, 1), 0)),
        (halfspace((-1, 0, 0), -2), halfspace((0, -1, 0), -2)),
        Vec((3, 3, 3)), Vec((-1, -1, -1)))
    _validate(lemma_instance_to_json(pencil), "lemma-instance.schema.json",
              registry)
    _validate(lemma_verdict_to_json(verify_pencil_lemma(pencil)),
              "lemma-verdict.schema.json", registry)


def test_batch_summary_schema(registry):
    _validate({"red": 1, "blue": 0, "both": 3, "unresolved": 0},
              "batch-summary.schema.json", registry)
    with pytest.raises(jsonschema.ValidationError):
        _validate({"red": 1, "blue": 0, "both": 3},
                  "batch-summary.schema.json", registry)


def test_schema_rejects_malformed_scalar(registry):
    cfg = config_to_json(random_config(GenSpec(seed=5, bound=12)))
    cfg["matrix"][0][0][0] = "3.5"
    with pytest.raises(jsonschema.ValidationError):
        _validate(cfg, "config.schema.json", registry)

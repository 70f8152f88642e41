import json
import os
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")
referencing = pytest.importorskip("referencing")

import tdlc

ROOT = Path(__file__).resolve().parents[2]
SAMPLES = Path(os.environ.get("TDLC_SAMPLES_DIR", ROOT / "samples"))
SCHEMAS = ROOT / "schemas"

KIND = {
    "octahedron.json": "complex",
    "disk_rel_boundary.json": "relative",
    "theta_graph.json": "graph",
    "psl2z.json": "gog",
    "integers.json": "gog",
    "c4_loop.json": "gog",
    "dinf.json": "gog",
    "dinf_sign.json": "representation",
    "notdu.json": "coxeter",
    "affine_a1.json": "coxeter",
    "affine_a2.json": "coxeter",
    "dinf_squared.json": "coxeter",
    "b2.json": "coxeter",
    "h3.json": "coxeter",
    "s3_rough.json": "rough-cayley",
}


def validator(kind):
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    registry = referencing.Registry().with_resources(resources)
    schema = json.loads((SCHEMAS / f"{kind}.schema.json").read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


def test_every_sample_is_classified():
    assert {p.name for p in SAMPLES.glob("*.json")} == set(KIND)


@pytest.mark.parametrize("name", sorted(KIND))
def test_sample_matches_schema(name):
    validator(KIND[name]).validate(json.loads((SAMPLES / name).read_text()))


def test_outputs_match_schemas():
    code, out, _ = tdlc.run("davis", SAMPLES / "notdu.json")
    assert code == 0
    validator("davis-verdict").validate(json.loads(out))
    validator("haar-value").validate(tdlc.chevalley_chi("G2", 2))


def test_schema_rejects_bad_coxeter_label():
    with pytest.raises(jsonschema.ValidationError):
        validator("coxeter").validate({"m": [[1, 0], [0, 1]]})

import json
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")
referencing = pytest.importorskip("referencing")

import superholonomy as sh

SCHEMAS = Path(__file__).resolve().parents[2] / "schemas"


def validator(command):
    docs = {p.name: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    registry = referencing.Registry().with_resources(
        (name, referencing.Resource.from_contents(doc)) for name, doc in docs.items()
    )
    return jsonschema.Draft202012Validator(docs[f"{command}.schema.json"], registry=registry)


CASES = [
    ["jacobi"],
    ["jacobi", "--m", "2", "--n", "1"],
    ["membership", "--samples", "5"],
    ["sectors"],
    ["sectors", "--m", "2", "--n", "1"],
    ["moduli", "--samples", "10", "--seed", "7"],
    ["moduli", "--m", "1", "--n", "2", "--samples", "5"],
    ["closure"],
    ["closure", "--m", "2", "--n", "1"],
    ["closure", "--tamper"],
    ["report", "--samples", "5"],
]


@pytest.mark.parametrize("args", CASES, ids=lambda a: " ".join(a))
def test_command_json_validates(args):
    code, out, err = sh.run_cli(args + ["--format", "json"])
    assert code in (0, 1), err
    validator(args[0]).validate(json.loads(out))


def test_schema_rejects_malformed():
    _, out, _ = sh.run_cli(["jacobi", "--format", "json"])
    doc = json.loads(out)
    doc["jacobi"]["max_residual"] = "small"
    with pytest.raises(jsonschema.ValidationError):
        validator("jacobi").validate(doc)

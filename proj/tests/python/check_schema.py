"""Validates every sample job against the job schema."""
import json
import pathlib
import sys

import jsonschema

root = pathlib.Path(__file__).resolve().parents[2]
schema = json.loads((root / "schemas/job.schema.json").read_text())
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)
failed = False
for path in sorted((root / "jobs").glob("*.json")):
    errors = list(validator.iter_errors(json.loads(path.read_text())))
    failed |= bool(errors)
    print(f"{path.name}: {'ok' if not errors else errors[0].message}")
bad = {"command": "sum", "field": {"p": 5, "n": 1}, "levels": 2, "bogus": True}
if validator.is_valid(bad):
    print("schema accepted an unknown key")
    failed = True
sys.exit(1 if failed else 0)

"""Validate kkg reports for every subcommand against schemas/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

kkg, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    schema = json.load(fh)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["ring", "selftest", "--ring", "witt", "--p", "3", "--f", "2", "--r", "2"],
    ["order", "--group", "GL", "--n", "3", "--ring", "poly", "--p", "5", "--r", "2", "--matrix", "1,1,0;t,1,1;t,0,1"],
    ["exponent", "--group", "GL", "--n", "2", "--ring", "witt", "--p", "5", "--r", "2"],
    ["classes", "--group", "SL", "--n", "2", "--ring", "poly", "--p", "2", "--r", "2"],
    ["kuelshammer", "--group", "SL", "--n", "2", "--ring", "witt", "--p", "2", "--r", "2"],
    ["compare", "--group", "SL", "--n", "2", "--p", "2", "--r", "3"],
    ["verify", "oracle", "--groups", "C4,S3"],
    ["verify", "prop-kuel", "--cap", "100"],
]
failed = 0
for args in runs:
    proc = subprocess.run([kkg, *args], capture_output=True, text=True)
    doc = json.loads(proc.stdout)
    errors = list(validator.iter_errors(doc))
    status = "ok" if not errors else "INVALID"
    print(f"{status}: kkg {' '.join(args)}")
    for err in errors[:5]:
        print(f"  {list(err.absolute_path)}: {err.message}")
    failed += bool(errors)
sys.exit(1 if failed else 0)

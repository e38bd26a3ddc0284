"""Validates `dfl derive --format json` output against the documented schema."""
import json
import subprocess
import sys

import jsonschema

tool, schema_path, *theories = sys.argv[1:]
with open(schema_path) as f:
    schema = json.load(f)

for theory in theories:
    for flags in ([], ["--ambiguity", "propagate"], ["--team-defeat", "off", "--semantics", "wfs"]):
        out = subprocess.run([tool, "derive", theory, "--format", "json", *flags],
                             check=True, capture_output=True, text=True).stdout
        jsonschema.validate(json.loads(out), schema)
print(f"validated {len(theories)} theories")

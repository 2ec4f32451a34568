"""Validate verlinde-lab JSON output against docs/schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

runs = [
    ("expand", ["--p", "3", "--N", "5", "--n", "2", "expand", "44"]),
    ("descendants", ["--p", "3", "--N", "5", "--n", "2", "descendants", "44"]),
    ("fuse", ["--p", "3", "--N", "5", "--n", "2", "fuse", "4", "4"]),
    ("cartan", ["--p", "2", "--N", "3", "--n", "3", "cartan"]),
    ("blocks", ["--p", "3", "--N", "4", "--n", "2", "blocks"]),
    ("simples", ["--p", "5", "--N", "3", "--n", "3", "simples"]),
    ("fuse-simples", ["--p", "3", "--N", "5", "--n", "2", "fuse-simples", "1", "4"]),
    ("covers", ["--p", "3", "--N", "5", "--n", "2", "covers"]),
    ("fpdim", ["--p", "3", "--N", "5", "--n", "2", "fpdim"]),
    ("qdim", ["--p", "3", "--N", "5", "--n", "2", "qdim"]),
    ("qdim", ["--p", "2", "--N", "3", "--n", "1", "qdim"]),
    ("stable-gr", ["--p", "3", "--N", "5", "--n", "3", "stable-gr"]),
    ("subcategories", ["--p", "2", "--N", "3", "--n", "2", "subcategories"]),
    ("tl-check", ["--p", "5", "--N", "4", "--zeta-sqrt", "1", "tl-check"]),
    ("selftest", ["--p", "3", "--N", "5", "--n", "2", "selftest"]),
]

failed = 0
for name, args in runs:
    schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
    out = subprocess.run([cli, *args], capture_output=True, text=True, check=True).stdout
    try:
        jsonschema.validate(json.loads(out), schema)
        print(f"ok   {' '.join(args)}")
    except jsonschema.ValidationError as e:
        failed += 1
        print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")

listed = {p.name.removesuffix(".schema.json") for p in schema_dir.glob("*.schema.json")}
missing = listed - {name for name, _ in runs}
if missing:
    failed += 1
    print(f"FAIL schemas without a run: {sorted(missing)}")
sys.exit(failed)

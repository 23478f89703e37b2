"""Runs the CLI on a few cases and validates the JSON reports against docs/*.schema.json."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, docs = sys.argv[1], pathlib.Path(sys.argv[2])
spec_schema = json.loads((docs / "function_spec.schema.json").read_text())
report_schema = json.loads((docs / "report.schema.json").read_text())
registry = Registry().with_resource("function_spec.schema.json", Resource.from_contents(spec_schema))
validator = jsonschema.Draft202012Validator(report_schema, registry=registry)
spec_validator = jsonschema.Draft202012Validator(spec_schema)

z = lambda k: {"type": "poly", "coeffs": [0] * k + [1]}
b = lambda n: {"type": "blaschke", "zeros": [[0, 0]] * n}
chi = {"type": "sing_inner", "point": [1, 0], "mass": 1}
cases = [
    (b(5), z(3), []),
    (b(2), z(3), ["--oracle"]),
    (b(4), z(6), []),
    (b(2), {"type": "product", "children": [z(1), {"type": "compose", "children": [chi, z(2)]}]}, []),
    (b(2), {"type": "poly", "coeffs": [0, 1, 0, 1]}, ["--space", "disk-algebra"]),
    (b(2), {"type": "product", "boundary_continuous": True, "children": [{"type": "poly", "coeffs": [1, -1]}, chi]},
     ["--space", "disk-algebra"]),
    ({"type": "poly", "coeffs": [0, "-1/2", 1]}, {"type": "poly", "coeffs": [0, 0, "-1/2", 1]}, []),
]
failures = 0
with tempfile.TemporaryDirectory() as tmp:
    for i, (gen, g, extra) in enumerate(cases):
        for spec in (gen, g):
            spec_validator.validate(spec)
        out = pathlib.Path(tmp) / f"r{i}.json"
        proc = subprocess.run([cli, "classify", "--b", json.dumps(gen), "--g", json.dumps(g), "--json", str(out), *extra],
                              capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"case {i}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        report = json.loads(out.read_text())
        errors = list(validator.iter_errors(report))
        for e in errors:
            print(f"case {i}: {e.json_path}: {e.message}")
        failures += bool(errors)
        print(f"case {i}: {report['verdict']['kind']} ok" if not errors else f"case {i}: invalid")
sys.exit(1 if failures else 0)

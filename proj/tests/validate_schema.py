"""Validate closure-lab JSON output against the shipped schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, scripts = sys.argv[1], sys.argv[2], pathlib.Path(sys.argv[3])
    schema = json.loads(pathlib.Path(schema_path).read_text())
    runs = [[cli, "paper-examples", "--json", "--seed", "42"]]
    runs += [[cli, "run", str(p), "--json"] for p in sorted(scripts.glob("*.cca"))]
    for args in runs:
        out = subprocess.run(args, capture_output=True, text=True)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema)
        assert "seed" in doc
        print("valid:", " ".join(args[1:]))
    # a failing script still produces a valid document
    bad = subprocess.run([cli, "run", "/dev/stdin", "--json"], input="ring R = poly(Q, [x]) ideal",
                         capture_output=True, text=True)
    assert bad.returncode == 3, bad.returncode
    jsonschema.validate(json.loads(bad.stdout), schema)
    print("valid: parse error document")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Runs every derlie subcommand with --json and validates the output against
the published schema for that subcommand.

usage: check_schemas.py <derlie binary> <schemas dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema

SCHEMA_FOR = {
    "maximality": "certificate",
    "ideal-gen": "certificate",
}

CASES = [
    (["bracket", "-n", "2", "x1*d2", "x2*d1"], 0),
    (["apply", "-n", "2", "x2*d1", "x1^2"], 0),
    (["grade", "-n", "2", "d1 + x1*d1 + x1*x2*d2"], 0),
    (["member", "--spec", "ms(2,1)", "x2*d1"], 0),
    (["generators", "--spec", "ms(2,1)", "--degree-bound", "1"], 0),
    (["project", "-n", "2", "-s", "1", "x1*d1 + x1*x2*d2"], 0),
    (["rank", "-n", "3", "x1*d1 + x2*d3", "x3^2*d2", "x1*x2*d1"], 0),
    (["rank", "-n", "2", "0"], 0),
    (["rank-oracle", "-n", "2", "--seed", "7", "x1*d1", "x1^2*d1"], 0),
    (["conductor", "-n", "2", "x1*d1 + x2*d2", "d2"], 0),
    (["module-member", "-n", "2", "--gen", "x1*d1", "--gen", "d2", "x1^2*d1"], 0),
    (["module-member", "-n", "2", "--gen", "x1*d1", "--gen", "d2", "d1"], 0),
    (["il", "-n", "2", "--ideal", "x1", "--algebra", "d1", "--algebra", "d2"], 0),
    (["contain", "--inner", "ms2(3,1,2)", "--outer", "ms(3,1)", "--degree-bound", "2"], 0),
    (["contain", "--inner", "ms(3,1)", "--outer", "ms2(3,1,2)", "--degree-bound", "2"], 0),
    (["maximality", "-n", "2", "-s", "1", "--adjoin", "x2*d1", "--target", "x1*x2*d1"], 0),
    (["maximality", "-n", "2", "-s", "1", "--adjoin", "x2*d1", "--target", "d1"], 0),
    (["ideal-gen", "-n", "3", "-s", "1", "--generator", "x1*x2^2*d3", "--target", "x1^2*d2 + x3*d3"], 0),
    (["derived-witness", "--spec", "sn(2)", "--depth", "3", "--degree-bound", "2"], 0),
    (["derived-witness", "--spec", "sq(1;d1)", "--depth", "1", "--degree-bound", "1"], 1),
]


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {}
    for path in schema_dir.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[path.name.removesuffix(".schema.json")] = schema

    failures = 0
    covered = set()
    documents = []
    for args, want in CASES:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        name = SCHEMA_FOR.get(args[0], args[0])
        try:
            if proc.returncode != want:
                raise RuntimeError(f"exit {proc.returncode}, want {want}: {proc.stderr.strip()}")
            doc = json.loads(proc.stdout)
            jsonschema.validate(doc, schemas[name], cls=jsonschema.Draft202012Validator)
            covered.add(args[0])
            if doc.get("kind") in ("certificate", "derived_witness"):
                documents.append(proc.stdout)
        except Exception as exc:  # report every failing case, not just the first
            failures += 1
            print(f"FAIL {' '.join(args)}: {exc}")

    # verify reads back every certificate and witness produced above.
    for doc in documents:
        proc = subprocess.run([binary, "verify", "-", "--json"], input=doc, capture_output=True, text=True)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stdout.strip()} {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schemas["verify"], cls=jsonschema.Draft202012Validator)
            covered.add("verify")
        except Exception as exc:
            failures += 1
            print(f"FAIL verify: {exc}")

    expected = {"bracket", "apply", "grade", "member", "generators", "project", "rank", "rank-oracle", "conductor",
                "module-member", "il", "contain", "maximality", "ideal-gen", "derived-witness", "verify"}
    missing = expected - covered
    if missing:
        failures += 1
        print(f"FAIL subcommands without a validated JSON report: {sorted(missing)}")

    print(f"{len(CASES) + len(documents)} JSON reports checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Validates `dbic` JSON output and code files against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

SCHEMAS = pathlib.Path(__file__).resolve().parent.parent / "schemas"


def registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        resources.append((path.name, Resource.from_contents(json.loads(path.read_text()))))
    return Registry().with_resources(resources)


def main(dbic):
    reg = registry()
    failures = 0

    def check(schema, doc, label):
        nonlocal failures
        validator = jsonschema.Draft202012Validator(
            json.loads((SCHEMAS / schema).read_text()), registry=reg)
        errors = list(validator.iter_errors(doc))
        print(f"{'ok  ' if not errors else 'FAIL'} {label}")
        for e in errors:
            print(f"     {e.message}")
        failures += bool(errors)

    def run(*args):
        proc = subprocess.run([dbic, *args], capture_output=True, text=True)
        return json.loads(proc.stdout)

    with tempfile.TemporaryDirectory() as tmp:
        code_path = pathlib.Path(tmp) / "code.json"
        check("code_output.schema.json",
              run("code", "2", "3", "1", "--out", str(code_path)), "code 2 3 1")
        check("code_file.schema.json", json.loads(code_path.read_text()), "code file")
        check("verify_output.schema.json",
              run("code", "2", "3", "1", "--verify", str(code_path)), "code --verify")
        code_path.write_text('{"d":2,"n":3,"t":1,"code":["011"]}')
        check("verify_output.schema.json",
              run("code", "2", "3", "1", "--verify", str(code_path)), "code --verify (invalid)")
    check("code_output.schema.json", run("code", "2", "2", "1"), "code 2 2 1 (twins)")
    check("code_output.schema.json", run("code", "3", "3", "1", "--greedy"), "code --greedy")
    check("check_output.schema.json", run("check", "3", "3", "2"), "check 3 3 2")
    check("check_output.schema.json", run("check", "2", "2", "1"), "check 2 2 1")
    check("graph_output.schema.json", run("graph", "2", "3"), "graph 2 3")
    check("ball_output.schema.json", run("ball", "2", "3", "1", "011", "--method", "both"),
          "ball --method both")
    check("ball_output.schema.json",
          run("ball", "3", "4", "2", "0102", "--method", "both", "--rule", "strict"),
          "ball mismatch")
    check("ecc_output.schema.json", run("ecc", "2", "3", "--vertex", "011"), "ecc --vertex")
    check("ecc_output.schema.json", run("ecc", "3", "2", "--all"), "ecc --all")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))

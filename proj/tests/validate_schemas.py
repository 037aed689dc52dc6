# Copyright 2026 The cqmkit Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Validates the CLI's JSON outputs against the shipped schemas.

usage: validate_schemas.py CQMKIT_BINARY MENU_CSV SCHEMA_DIR
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(pathlib.Path(schema_dir).glob("*.schema.json")):
        contents = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(contents)))
    return Registry().with_resources(resources)


def run(binary, args, expected_code):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expected_code:
        raise AssertionError(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expected_code}\n{proc.stderr}")
    return proc.stdout


def main():
    binary, menu, schema_dir = sys.argv[1:4]
    registry = load_registry(schema_dir)

    def validate(document, schema_name):
        schema = registry.contents(schema_name)
        cls = jsonschema.validators.validator_for(schema)
        cls(schema, registry=registry).validate(document)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        listing = pathlib.Path(tmp) / "meal.txt"
        listing.write_text("Sweet Potato\nOrange-Honeycomb\nA chicken cutlet\n"
                           "Caribbean Calypso\nSautéed Squash & Onions\n", encoding="utf-8")
        cases = [
            ("model", ["build", menu, "--bound", "calories<=700"], 0, "model.schema.json"),
            ("qubo", ["build", menu, "--bound", "calories<=700", "--emit", "qubo"], 0,
             "qubo.schema.json"),
            ("solve exact", ["solve", menu, "--bound", "calories<=700", "--format", "json",
                             "--timing"], 0, "solve.schema.json"),
            ("solve infeasible", ["solve", menu, "--bound", "calories<=500", "--format", "json"],
             3, "solve.schema.json"),
            ("solve sa", ["solve", menu, "--bound", "calories<=700", "--backend", "sa",
                          "--reads", "20", "--seed", "3", "--format", "json"], 0,
             "solve.schema.json"),
            ("check feasible", ["check", menu, "--bound", "calories<=700", "--assignment",
                                str(listing), "--format", "json"], 0, "check.schema.json"),
            ("check infeasible", ["check", menu, "--bound", "calories<=600", "--assignment",
                                  str(listing), "--format", "json"], 3, "check.schema.json"),
        ]
        for name, args, code, schema in cases:
            try:
                validate(json.loads(run(binary, args, code)), schema)
                print(f"{name}: valid against {schema}")
            except (AssertionError, jsonschema.ValidationError, json.JSONDecodeError) as err:
                failures += 1
                print(f"{name}: INVALID: {err}")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

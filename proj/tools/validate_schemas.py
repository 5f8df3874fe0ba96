#!/usr/bin/env python3
"""Validates fixtures and CLI reports against the schemas in docs/."""
import glob
import json
import os
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

lclab, root = sys.argv[1], sys.argv[2]
problem_schema = json.load(open(os.path.join(root, "docs/problem.schema.json")))
report_schema = json.load(open(os.path.join(root, "docs/report.schema.json")))
registry = Registry().with_resources([
    ("lclab/problem.schema.json", Resource.from_contents(problem_schema)),
    ("lclab/report.schema.json", Resource.from_contents(report_schema)),
])
problems = jsonschema.Draft202012Validator(problem_schema)
reports = jsonschema.Draft202012Validator(report_schema, registry=registry)

failures = 0
fixtures = sorted(glob.glob(os.path.join(root, "fixtures/*.json")))
commands = [["run", f] for f in fixtures] + [
    ["verify-paper"],
    ["verify-paper", "--inject-sign-fault"],
    ["search-converse", "--n", "3", "--max-degree", "2", "--max-i", "3"],
]
for f in fixtures:
    for e in problems.iter_errors(json.load(open(f))):
        print(f"{f}: {e.message}")
        failures += 1
for c in commands:
    report = json.loads(subprocess.run([lclab] + c, capture_output=True, text=True).stdout)
    for e in reports.iter_errors(report):
        print(f"{' '.join(c)}: {e.message}")
        failures += 1

# The schema must reject a report whose task lacks its verdict.
report = json.loads(subprocess.run([lclab, "run", fixtures[0]], capture_output=True, text=True).stdout)
del report["tasks"][0]["status"]
if reports.is_valid(report):
    print("schema accepted a task without status")
    failures += 1

print(f"{len(fixtures)} fixtures, {len(commands)} reports, {failures} failures")
sys.exit(1 if failures else 0)

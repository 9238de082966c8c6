#!/usr/bin/env python3
"""Runs one invocation per CLI report shape and validates stdout against the schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    if len(sys.argv) != 4:
        print("usage: validate_reports.py <cli> <schema.json> <data_dir>", file=sys.stderr)
        return 2
    cli, schema_path, data_dir = sys.argv[1], sys.argv[2], sys.argv[3]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft7Validator.check_schema(schema)
    validator = jsonschema.Draft7Validator(schema)

    invocations = [
        ["eval", "--map", "identity", "--z", "0.3,0.4"],
        ["eval", "--map", f"{data_dir}/sample_map.json", "--z", "0.2,-0.1"],
        ["normality", "--map", "identity", "--depth", "3"],
        ["normality", "--map", "exp-blowup", "--depth", "5", "--seed", "3"],
        ["pcrit", "--map", "bounded-normal", "--depth", "3", "--p", "2"],
        ["fivepoint", "--map", "identity", "--values=0,0", "--values=0.25,0",
         "--values=0,0.25", "--values=-0.25,0", "--values=inf"],
        ["dgrowth", "--map", "identity", "--n", "1", "--K", "2", "--depth", "3"],
        ["zoom", "--map", "identity", "--center", "0.1,0", "--rho", "0.05",
         "--radius", "1", "--frame-mesh", "9"],
        ["blowup", "--map", "exp-blowup", "--levels", "6", "--depth", "3"],
        ["maxprin", "--map", "identity", "--delta", "0.05", "--depth", "3"],
        ["boundary", "--map", "exp-decay", "--xi", "1,0", "--depth", "3"],
        ["lappan", "--map", "identity", "--pairs", f"{data_dir}/pairs.csv"],
        ["catalog", "list"],
    ]

    failures = 0
    for args in invocations:
        label = " ".join(args)
        proc = subprocess.run([cli] + args, capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}", file=sys.stderr)
            failures += 1
            continue
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: stdout is not JSON ({exc})", file=sys.stderr)
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        if errors:
            for err in errors[:3]:
                where = "/".join(str(p) for p in err.path) or "<root>"
                print(f"FAIL {label}: at {where}: {err.message}", file=sys.stderr)
            failures += 1
            continue
        print(f"ok {label}")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run a `check --json` command, validate its report against the schema and
check that the exit status agrees with the item statuses."""
import json
import subprocess
import sys

import jsonschema


def main():
    schema_path, cmd = sys.argv[1], sys.argv[2:]
    with open(schema_path) as f:
        schema = json.load(f)
    proc = subprocess.run(cmd, capture_output=True, text=True)
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
    failing = any(i["status"] == "fail" for i in report["items"])
    if failing != (proc.returncode != 0):
        print(f"exit status {proc.returncode} disagrees with item statuses")
        return 1
    print(f"{report['suite']}: {len(report['items'])} items, schema ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())

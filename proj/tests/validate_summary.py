"""Runs a small scaling sweep and validates its summary against the shipped schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    exe, schema_path, workdir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    runs = [
        ["--model", "process", "--n", "24,48", "--d", "3,5", "--trials", "3"],
        # lower bound undefined in every trial: exercises the null fields
        ["--model", "process", "--n", "16", "--d", "6", "--trials", "2"],
        ["--model", "uniform-tf", "--n", "12", "--d", "2.5", "--trials", "2"],
    ]
    for i, extra in enumerate(runs):
        out = workdir / f"run{i}"
        subprocess.run([exe, "scaling", "--seed", "5", "--output-dir", str(out), *extra], check=True)
        summary = json.loads((out / "scaling_summary.json").read_text())
        jsonschema.validate(summary, schema)
        header = (out / "scaling.csv").read_text().splitlines()[0]
        assert header.startswith("n,d,trial,e_P,alpha"), header
        print(f"run {i}: valid, {summary['rows']} rows")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Runs every --json command of the gspec binary and validates the output
against schemas/gspec-output.schema.json. Also checks that repeated runs give
identical bodies."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    gspec, root = sys.argv[1], Path(sys.argv[2])
    data = root / "data"
    full = json.loads((root / "schemas" / "gspec-output.schema.json").read_text())

    def schema_for(name):
        return {"$schema": full["$schema"], "$defs": full["$defs"], "$ref": f"#/$defs/{name}"}

    cases = [
        ("check_graph", ["check-graph", data / "gcd_graph.g6"]),
        ("check_graph", ["check-graph", data / "k2.g6"]),
        ("check_graph", ["check-graph", data / "k1.g6"]),
        ("check_graph", ["check-graph", data / "gcd_graph.mat"]),
        ("check_matrix", ["check-matrix", data / "squarefree_disc.mat"]),
        ("check_matrix", ["check-matrix", data / "square_disc.mat"]),
        ("check_matrix", ["check-matrix", data / "zero3.mat"]),
        ("verify_q", ["verify-q", data / "square_disc.mat", data / "square_disc_q.rat"]),
        ("experiment", ["experiment", "--n", "10", "--trials", "40", "--seed", "7"]),
        ("experiment", ["experiment", "--n", "2", "--trials", "5"]),
        ("disc", ["disc", data / "x2_minus_1.poly"]),
        ("disc", ["disc", "--matrix", data / "square_disc.mat"]),
        ("snf", ["snf", data / "snf_example.mat"]),
        ("walk", ["walk", data / "k2.g6"]),
        ("oracle", ["oracle", "--n", "5"]),
    ]
    failures = 0
    for name, args in cases:
        argv = [gspec] + [str(a) for a in args] + ["--json"]
        runs = [subprocess.run(argv, capture_output=True, text=True) for _ in range(2)]
        label = " ".join(str(a) for a in args)
        try:
            docs = []
            for r in runs:
                if r.returncode != 0:
                    raise ValueError(f"exit {r.returncode}: {r.stderr.strip()}")
                doc = json.loads(r.stdout)
                jsonschema.validate(doc, full)
                jsonschema.validate(doc["body"], schema_for(name))
                docs.append(doc)
            if docs[0]["body"] != docs[1]["body"]:
                raise ValueError("body differs between runs")
            print(f"ok    {label}")
        except (ValueError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL  {label}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

"""CLI integration checks: JSON output against docs/*.schema.json, exit codes,
and `check` on generated graphs."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

cli, docs, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])

schemas = {p.name: json.loads(p.read_text()) for p in docs.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items()
)
failures = []


def run(*args, expect=0):
    proc = subprocess.run([cli, *map(str, args)], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def validate(doc_text, schema_name, label):
    try:
        doc = json.loads(doc_text)
        validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
        validator.validate(doc)
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as err:
        failures.append(f"{label}: {err}")
        return None


k4 = data / "k4_fig1.txt"
relaxed = data / "relaxed_path.txt"

for extra in ([], ["--trail"], ["--labels"], ["--trail", "--labels", "--order", "inc"]):
    validate(run("compute", k4, *extra), "trail_report.schema.json", f"compute {extra}")
doc = validate(run("compute", relaxed, "--trail"), "trail_report.schema.json", "compute relaxed")
if doc and doc["optimum"] != 2:
    failures.append(f"relaxed path optimum {doc['optimum']} != 2")

validate(run("oracle", k4), "oracle_report.schema.json", "oracle")
validate(run("oracle", k4, "--from", 3, "--cap", 2), "oracle_report.schema.json", "oracle --from")
doc = validate(run("check", k4), "check_report.schema.json", "check")
if doc and not doc["ok"]:
    failures.append("check k4 not ok")

validate(run("extremal", "--complete", 4, "--exhaustive"), "extremal_report.schema.json", "extremal exhaustive")
validate(run("extremal", "--complete", 4, "--exhaustive", "--reduce", "--timing"), "extremal_report.schema.json",
         "extremal reduced")
validate(run("extremal", "--complete", 7, "--sample", 500, "--seed", 3), "extremal_report.schema.json",
         "extremal sampled")
validate(run("extremal", "--graph", relaxed, "--exhaustive"), "extremal_report.schema.json", "extremal graph")

# usage and input errors exit with 2
run(expect=2)
run("compute", expect=2)
run("compute", k4, "--order", "sideways", expect=2)
run("compute", "/nonexistent/graph.txt", expect=2)
run("extremal", "--complete", 6, "--exhaustive", expect=2)
run("extremal", "--complete", 4, expect=2)
run("gen", "-n", 3, "-m", 4, expect=2)
with tempfile.TemporaryDirectory() as tmp:
    bad = Path(tmp) / "bad.txt"
    for text in ("p 3 1\ne 2 2 5\n", "p 3 2\ne 1 2 1\ne 2 3 1\n", "p 3 1\nx 1 2 1\n"):
        bad.write_text(text)
        run("compute", bad, expect=2)

    # `check` passes on every generated graph, and generated files parse back
    for seed in range(40):
        n = 2 + seed % 9
        out = Path(tmp) / f"g{seed}.txt"
        if seed % 3 == 0:
            run("gen", "-n", n, "--complete", "--seed", seed, "-o", out)
        else:
            run("gen", "-n", n, "-m", (seed * 7) % (n * (n - 1) // 2 + 1), "--seed", seed, "-o", out)
        validate(run("check", out), "check_report.schema.json", f"check gen seed {seed}")

# TRAIL_JOBS feeds --jobs
env = dict(os.environ, TRAIL_JOBS="3")
proc = subprocess.run([cli, "extremal", "--complete", "4", "--exhaustive"], capture_output=True, text=True, env=env)
if proc.returncode != 0 or proc.stdout != run("extremal", "--complete", 4, "--exhaustive"):
    failures.append("TRAIL_JOBS run differs from default run")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)

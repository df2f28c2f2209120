"""Exit codes, output formats and schema conformance of the hyperwreath CLI.

usage: cli_contract.py <hyperwreath-cli> <chain-schema.json>
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, ok, detail=""):
    print(("ok   " if ok else "FAIL ") + name + ("" if ok else "  -- " + detail))
    if not ok:
        failures.append(name)


for args in (["chain", "--n", "1"], ["verify", "--suite", "nosuch"], ["calc", "[x1 + ]D2"],
             ["verify", "--suite", "regular", "--c-range", "3..-3"], ["chain", "--bogus"]):
    r = run(*args)
    check("exit 2 for " + " ".join(args), r.returncode == 2, f"got {r.returncode}")

r = run("chain", "--n", "3", "--imax", "0", "--format", "json")
check("chain --imax 0 is an empty table", r.returncode == 0 and json.loads(r.stdout)["rows"] == [], r.stdout)

r = run("calc", "comm([x1]D2, [1]D1")
check("parse error names the position", r.returncode == 2 and "^" in r.stderr, r.stderr)

for expr, n, want in (("comm([x1]D2,[1]D1)", "2", "[1]D2"),
                      ("tdeg([x1^2]D4)", "4", "2"),
                      ("phi([x1^2]D3)", "3", "x1^2 d3"),
                      ("inv([x1]D2 * [1]D1)", "2", "[-x1 - 1]D2 * [-1]D1")):
    r = run("calc", expr, "--n", n)
    check("calc " + expr, r.returncode == 0 and r.stdout.strip() == want, repr(r.stdout))

r = run("chain", "--n", "4", "--imax", "12", "--format", "json")
check("chain json exit 0", r.returncode == 0, f"got {r.returncode}")
report = json.loads(r.stdout)
with open(SCHEMA) as f:
    schema = json.load(f)
try:
    jsonschema.validate(report, schema)
    check("chain json validates", True)
except jsonschema.ValidationError as e:
    check("chain json validates", False, e.message)
check("chain json all rows match", report["all_match"] and all(row["match"] for row in report["rows"]))

r = run("chain", "--n", "4", "--imax", "12", "--format", "csv")
rows = list(csv.reader(io.StringIO(r.stdout)))
check("chain csv header", rows[0] == ["n", "i", "r", "h", "k", "count", "predicted", "match"], str(rows[0]))
check("chain csv rows", len(rows) == 1 + 12 * 4 and all(row[7] == "true" for row in rows[1:]))

r = run("verify", "--suite", "formulas", "--seed", "7")
check("verify formulas", r.returncode == 0, r.stdout[-400:])
r = run("verify", "--suite", "regular", "--c-range", "-3..3", "--format", "json")
check("verify regular json", r.returncode == 0 and all(p["passed"] for p in json.loads(r.stdout)))

with tempfile.TemporaryDirectory() as d:
    out = os.path.join(d, "chain.txt")
    r = run("chain", "--n", "3", "--imax", "4", "--out", out)
    check("--out writes the file", r.returncode == 0 and r.stdout == "" and os.path.getsize(out) > 0)

sys.exit(1 if failures else 0)

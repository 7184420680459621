#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: documented examples, exit
codes, and report determinism."""

import json
import subprocess
import sys

CLI = sys.argv[1]

FERMAT4 = "x1^3+x2^3+x3^3+x4^3+x5^3+x6^3"
FERMAT5 = "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3+x6^3"

failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(f"{args}: exit {proc.returncode}, wanted {expect_code}\n"
                        f"stdout: {proc.stdout}\nstderr: {proc.stderr}")
    return proc.stdout


def field(out, key):
    for line in out.splitlines():
        if line.startswith(key + ":"):
            return line.split(":", 1)[1].strip()
    failures.append(f"missing key {key} in output:\n{out}")
    return ""


# the worked wall arithmetic
out = run("mu-pair", "--Y", FERMAT4, "--H", "x0", "--t", "49/100",
          "--lambda", "6,-1,-1,-1,-1,-1,-1")
if field(out, "result") != "-3/50":
    failures.append(f"mu-pair result: {field(out, 'result')}")

# second graded piece of the fivefold Jacobian ring
out = run("jring", "--f", FERMAT5, "--k", "2")
if field(out, "result") != "21":
    failures.append(f"jring result: {field(out, 'result')}")

# limit keeps the x0-free cubic
out = run("limit", "--Y", FERMAT4 + "+x0*x1*x2", "--H", "x0",
          "--lambda", "-6,1,1,1,1,1,1")
if field(out, "Y0") != "x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6^3":
    failures.append(f"limit Y0: {field(out, 'Y0')}")

# verdict with verified certificate, JSON shape
out = run("torus-stab", "--Y", FERMAT4, "--H", "x0", "--t", "49/100",
          "--verify", "--json")
doc = json.loads(out)
if sorted(doc.keys()) != ["certificate", "command", "inputs", "notes", "result"]:
    failures.append(f"json keys: {sorted(doc.keys())}")
if doc["result"]["result"] != "TorusUnstable" or doc["result"]["verified"] != "true":
    failures.append(f"torus-stab json: {doc['result']}")

# determinism: identical argv, identical report (timing aside)
args = ("torus-stab", "--Y", FERMAT4, "--H", "x0", "--t", "1/2", "--json")
if run(*args) != run(*args):
    failures.append("json reports differ between runs")

# polynomials echoed in reports re-parse to the same canonical form
echo = field(run("mu", "--f", "x2^3 + 2*x1^3", "--lambda", "0,0,0,0,0,0,0"), "input.f")
echo2 = field(run("mu", "--f", echo, "--lambda", "0,0,0,0,0,0,0"), "input.f")
if echo != echo2:
    failures.append(f"echoed polynomial not canonical: {echo} vs {echo2}")

# exit codes: usage and input errors
run("no-such-command", expect_code=2)
run("mu", "--f", "x1^2 + x1", "--lambda", "0,0,0,0,0,0,0", expect_code=2)
run("mu", "--f", "x9", "--lambda", "0,0,0,0,0,0,0", expect_code=2)
# budget exhaustion
run("torus-stab", "--Y", FERMAT4, "--H", "x0", "--t", "49/100",
    "--pivot-budget", "1", expect_code=3)

# fiber subcommands
out = run("fiber-build", "--f3", FERMAT4)
if field(out, "w2-dimension") != "15":
    failures.append(f"fiber-build w2: {field(out, 'w2-dimension')}")
out = run("fiber-equal", "--f3", FERMAT4, "--Y", FERMAT4 + "+x0*x1*x2",
          "--Z", FERMAT4 + "+2*x0*x1*x2")
if field(out, "result") != "true":
    failures.append(f"fiber-equal: {field(out, 'result')}")

if failures:
    print("\n".join(failures))
    sys.exit(1)
print(f"cli checks passed")

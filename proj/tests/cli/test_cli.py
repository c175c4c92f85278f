#!/usr/bin/env python3
"""End-to-end checks of the noethops command line tool."""

import json
import os
import subprocess
import sys
import tempfile

BIN = os.environ["NOETHOPS_BIN"]
DATA = os.environ["NOETHOPS_DATA"]
PROBLEM = os.path.join(DATA, "paper.nop")

failures = 0


def run(*args, expect=0):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, wanted {expect}")
        print(proc.stdout)
        print(proc.stderr)
    return proc


def check(cond, what):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {what}")
    else:
        print(f"ok   {what}")


# gb
out = run("gb", PROBLEM, "--ideal", "I3").stdout.splitlines()
check(len(out) == 3, "gb of the monomial-plus-binomial ideal has 3 elements")
check(sorted(out) == sorted(["x1^3", "x2^3", "x1^2*x2 - x1*x2^2"]),
      "gb output is the reduced basis itself")

# deterministic output
a = run("gb", PROBLEM, "--ideal", "I").stdout
b = run("gb", PROBLEM, "--ideal", "I").stdout
check(a == b and a.strip(), "gb output is deterministic")

# dual at the origin, order 3: the paper's nine operators, lowest order first
proc = run("dual", PROBLEM, "--ideal", "I", "--at", "origin", "--order", "3", "--json")
doc = json.loads(proc.stdout)
check(doc["dimension"] == 9, "dual --at origin --order 3 has dimension 9")
ops = doc["operators"]
check(ops[0] == "1", "first dual operator is the evaluation functional")
check("d_x1^2*d_x2 + d_x1*d_x2^2" in ops, "the mixed cubic operator is listed")


def op_order(op):
    best = 0
    for term in op.replace("- ", "+ ").split("+ "):
        total = 0
        for factor in term.strip().split("*"):
            if factor.startswith("d_"):
                total += int(factor.split("^")[1]) if "^" in factor else 1
        best = max(best, total)
    return best


orders = [op_order(op) for op in ops]
check(all(orders[i] <= orders[i + 1] for i in range(len(orders) - 1)),
      "dual operators print lowest order first")

# dual at the maximal ideal name instead of the point
proc = run("dual", PROBLEM, "--ideal", "I", "--at", "m", "--order", "3", "--json")
check(json.loads(proc.stdout)["dimension"] == 9, "dual --at m agrees with the point form")

# excess
proc = run("excess", PROBLEM, "--ideal", "I", "--prime", "m", "--json")
doc = json.loads(proc.stdout)
check(doc["dimension"] == 2 and doc["dstar"] == 3, "excess --prime m: dimension 2 at dstar 3")
check(doc["representatives"] == ["d_x1*d_x2", "d_x1^2*d_x2 + d_x1*d_x2^2"],
      "excess representatives match the example")

# excess with a user-supplied saturation (I1 ∩ I2 = the saturation here)
with tempfile.TemporaryDirectory() as td:
    sat_problem = os.path.join(td, "sat.nop")
    with open(PROBLEM) as f:
        text = f.read()
    with open(sat_problem, "w") as f:
        f.write(text + "\nideal S = intersect(I1, I2);\n")
    proc = run("excess", sat_problem, "--ideal", "I", "--prime", "m", "--sat", "S", "--json")
    check(json.loads(proc.stdout)["dimension"] == 2, "excess accepts --sat")

# noetherian -> certificate JSON -> member
with tempfile.TemporaryDirectory() as td:
    cert = os.path.join(td, "cert.json")
    run("noetherian", PROBLEM, "--ideal", "I", "--primes", "I1,I2,m", "--out", cert)
    with open(cert) as f:
        doc = json.load(f)
    check([c["operators"] for c in doc["components"]] ==
          [["1"], ["1"], ["d_x1*d_x2", "d_x1^2*d_x2 + d_x1*d_x2^2"]],
          "certificate operators per component")
    check(doc["components"][2]["nil"] == 4, "embedded component has nil 4")
    check(doc["components"][0]["free_vars"] == ["x2"], "free variables recorded")

    run("member", "--cert", cert, "--poly", "(x1-x2^3)*(x2-x1^3)*(x1-x2)", expect=0)
    proc = run("member", "--cert", cert, "--poly", "(x1-x2^3)*(x2-x1^3)", expect=3)
    check("d_x1*d_x2" in proc.stderr, "witness operator named on stderr")
    run("member", "--cert", cert, "--poly", "0", expect=0)

# ortiz
proc = run("ortiz", PROBLEM, "--ideal", "I", "--prime", "m")
check("nil = 4" in proc.stdout, "ortiz prints nil = 4")
proc = run("ortiz", PROBLEM, "--ideal", "I", "--prime", "m", "--json")
doc = json.loads(proc.stdout)
check(doc["nil"] == 4 and doc["localized"] is False, "ortiz JSON fields")
check("x1^2*x2 - x1*x2^2" in doc["component"], "ortiz component generators include the binomial")

# ortiz at a positive-dimensional prime comes back localized
with tempfile.TemporaryDirectory() as td:
    prob = os.path.join(td, "loc.nop")
    with open(prob, "w") as f:
        f.write("ring QQ[x1, x2];\nideal I = (x2 - x1^2)^2;\nideal P = x2 - x1^2;\n")
    proc = run("ortiz", prob, "--ideal", "I", "--prime", "P", "--json")
    doc = json.loads(proc.stdout)
    check(doc["localized"] is True and doc["nil"] == 2 and doc["free_vars"] == ["x1"],
          "localized ortiz output for a curve prime")

# exit codes: usage, parse error, precondition
run("bogus", expect=1)
with tempfile.TemporaryDirectory() as td:
    bad = os.path.join(td, "bad.nop")
    with open(bad, "w") as f:
        f.write("ring QQ[x1, x2];\nideal I = x1 + + x2;\n")
    proc = run("gb", bad, expect=2)
    check("column" in proc.stderr, "parse errors report a position")

    prob = os.path.join(td, "pos.nop")
    with open(prob, "w") as f:
        f.write("ring QQ[x1, x2];\nideal I = x1;\nideal C = x1 - x2^3;\n")
    run("dual", prob, "--ideal", "I", "--at", "C", "--order", "2", expect=4)

# free variable override
proc = run("excess", PROBLEM, "--ideal", "I", "--prime", "I1", "--free-vars", "x2", "--json")
check(json.loads(proc.stdout)["free_vars"] == ["x2"], "--free-vars override respected")

print("cli: all checks done" if failures == 0 else f"cli: {failures} failures")
sys.exit(1 if failures else 0)

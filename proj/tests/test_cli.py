"""End-to-end checks of the fpg command line: outputs, exit codes, determinism."""
import json
import subprocess
import sys
from pathlib import Path

FPG = sys.argv[1]
DATA = Path(sys.argv[2])
failures = []


def run(*args, inp=None):
    cmd = [FPG, *args]
    if inp is not None:
        cmd += ["--json", json.dumps(inp)]
    p = subprocess.run(cmd, capture_output=True, text=True)
    out = json.loads(p.stdout) if p.stdout.strip() else None
    return p.returncode, out, p.stdout


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def samples(model):
    return json.loads((DATA / f"samples_{model}.json").read_text())["arrows"]


# factorizations: 2x2 LDU worked by hand
code, out, _ = run("factor", inp={"matrix": [["2", "1"], ["1", "1"]]})
check(code == 0, "gauss factor exits 0")
check(out["lower"] == [["1", "0"], ["1/2", "1"]], "gauss lower factor")
check(out["diagonal"] == ["2", "1/2"], "gauss diagonal")
check(out["upper"] == [["1", "1/2"], ["0", "1"]], "gauss upper factor")
check(out["product"] == out["input"], "gauss product echoes the input")

code, out, _ = run("factor", inp={"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
eye = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
check(code == 0 and out["lower"] == eye and out["upper"] == eye, "identity factors trivially")

code, out, _ = run("factor", inp={"matrix": [[0, -1], [1, 0]]})
check(code == 2 and out["error"] == "NotInBigCell" and out["alpha"] == 1, "s1 is outside the big cell, certificate alpha_1")

code, out, _ = run("factor", "--mode", "bruhat+", inp={"matrix": [[0, -1], [1, 0]]})
check(code == 0 and out["u"] == [1], "positive Bruhat cell of s1")

code, out, _ = run("factor", inp={"matrix": [[2, 0], [0, 2]]})
check(code == 5, "determinant other than 1 is rejected")

# groupoid arithmetic in every model
for model in ["gamma", "c2n", "fot", "gdbu"]:
    a, b = samples(model)
    code, out, _ = run("groupoid", "mul", "--model", model, "--cross-check", inp={"arrows": [a, b]})
    check(code == 0 and out["cross_model_agrees"], f"{model}: multiplication agrees with Gamma")
    for op in ["source", "target", "inverse"]:
        code, out, _ = run("groupoid", op, "--model", model, "--cross-check", inp={"arrow": a})
        check(code == 0 and out["cross_model_agrees"], f"{model}: {op} agrees with Gamma")
    _, inv, _ = run("groupoid", "inverse", "--model", model, inp={"arrow": a})
    _, back, _ = run("groupoid", "inverse", "--model", model, inp={"arrow": inv["result"]})
    check(back["result"] == a, f"{model}: inverse of the inverse, through JSON")
    code, bad, _ = run("groupoid", "mul", "--model", model, inp={"arrows": [b, a]})
    check(code == 3 and bad["error"] == "NotComposable", f"{model}: non-composable pair exits 3")

a, b = samples("gamma")
_, src, _ = run("groupoid", "source", inp={"arrow": a})
_, unit, _ = run("groupoid", "unit", inp={"point": src["result"]})
_, inv, _ = run("groupoid", "inverse", inp={"arrow": a})
_, prod, _ = run("groupoid", "mul", inp={"arrows": [a, inv["result"]]})
check(prod["result"] == unit["result"], "g g^-1 is the unit at the source")
_, uu, _ = run("groupoid", "mul", inp={"arrows": [unit["result"], unit["result"]]})
check(uu["result"] == unit["result"], "unit times unit")

# leaves
_, lab, _ = run("leaf", "classify", inp={"arrow": unit["result"]})
w = src["result"]["w"]


def inv_word(word):
    return list(reversed(word))


expect = w + [inv_word(x) for x in reversed(w)]
check(lab["label"]["u"] == expect, "the unit lies over (u, u^-1)")

code, out, _ = run("leaf", "dim", inp={"rank": 1, "w": [[1]]})
check(code == 0 and out["dim"] == 2, "A1 leaf through (s) has dimension 2")

_, pt, _ = run("chart", "bs", inp={"chart": {"rank": 1, "blocks": [[1]]}, "z": ["9"]})
code, out, _ = run("leaf", "fiber", inp={"p": pt["point"], "t": ["1"]})
check(code == 0 and sorted(out["fiber"]) == [["-3"], ["3"]], "fiber over a square has 2 points")
_, pt2, _ = run("chart", "bs", inp={"chart": {"rank": 1, "blocks": [[1]]}, "z": ["2"]})
code, out, _ = run("leaf", "fiber", inp={"p": pt2["point"], "t": ["1"]})
check(code == 4 and out["error"] == "NoRationalSqrt", "fiber over a non-square exits 4")

# charts
ch = {"rank": 2, "blocks": [[1, 2], [2, 1]]}
eps = ["1", "-2", "3/5", "7"]
_, p, _ = run("chart", "lusztig", inp={"chart": ch, "eps": eps})
_, e, _ = run("chart", "invert", inp={"chart": ch, "point": p["point"]})
check(e["eps"] == eps, "Lusztig chart inversion through the command line")
_, p0, _ = run("chart", "bs", inp={"chart": {"rank": 2, "blocks": [[1, 2]]}, "z": ["0", "3"]})
code, out, _ = run("chart", "invert", inp={"chart": {"rank": 2, "blocks": [[1, 2]]}, "point": p0["point"]})
check(code == 2 and out["vanishing"] == [1], "outside the toric chart exits 2 with the vanishing minor")

# suites
code, out, text1 = run("verify", "all", "--rank", "1", "--n", "1", "--samples", "50", "--seed", "7")
check(code == 0 and out["failed"] == 0 and out["passed"] > 0, "verify all at rank 1 passes")
_, _, text2 = run("verify", "all", "--rank", "1", "--n", "1", "--samples", "50", "--seed", "7")
check(text1 == text2, "identical seeds give byte-identical reports")
code, out, _ = run("verify", "poisson-maps", "--rank", "2", "--n", "2", "--samples", "3")
check(code == 0 and out["failed"] == 0, "verify poisson-maps at rank 2, n 2 passes")

code, out, _ = run("verify", "fixture", "--json-in", str(DATA / "fixture.json"))
check(code == 0 and out["failed"] == 0, "recorded fixture reproduces")
code, out, _ = run("verify", "fixture", "--json-in", str(DATA / "corrupted_fixture.json"))
check(code == 1 and out["counterexample"]["check"] == "case 0", "corrupted fixture fails with a counterexample")

code, out, _ = run("groupoid", "inverse", inp={"arrow": {"kind": "gamma", "rank": 1}})
check(code == 5 and out["error"] == "BadInput", "malformed records exit 5")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)

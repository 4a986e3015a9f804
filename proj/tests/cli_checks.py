import json
import subprocess
import sys
from pathlib import Path

import jsonschema

bilw, root = sys.argv[1], Path(sys.argv[2])
corpus = root / "corpus"
schema = json.loads((root / "schema" / "report.schema.json").read_text())
failures = []


def run(*args):
    p = subprocess.run([bilw, *map(str, args)], capture_output=True, text=True, timeout=900)
    report = json.loads(p.stdout)
    try:
        jsonschema.validate(report, schema)
    except jsonschema.ValidationError as e:
        failures.append(f"{args}: schema: {e.message}")
    if report["exit_code"] != p.returncode:
        failures.append(f"{args}: exit {p.returncode} but report says {report['exit_code']}")
    return p.returncode, p.stdout, report


def expect(name, cond):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)


c, _, r = run("info", corpus / "line.ideal")
expect("info line", c == 0 and r["outputs"]["curve"]["degree"] == 1 and r["outputs"]["rao_dims"] == {})
c, _, r = run("info", corpus / "skew_lines.ideal")
expect("info skew lines", c == 0 and r["outputs"]["curve"]["genus"] == -1 and r["outputs"]["rao_dims"] == {"0": 1})
c, _, r = run("info", corpus / "line_nonsaturated.ideal")
expect("info non-saturated", c == 0 and r["outputs"]["input_saturated"] is False and r["outputs"]["warnings"])
c, _, r = run("info", corpus / "line_on_quadric.ideal")
expect("info on the quadric", c == 0)
c, _, r = run("bdl", corpus / "line.ideal", "--h", "0")
expect("bdl h=0 is invalid", c == 3)
c, _, r = run("bdl", corpus / "skew_lines.ideal", "--f", "0", "--h", "2")
expect("bdl skew lines", c == 0 and r["outputs"]["rao_dims_after"] == {"2": 1})
c, _, r = run("descend", corpus / "skew_bdl3.ideal")
expect("descend tower", c == 0 and all(s["height"] < 0 for s in r["outputs"]["steps"] if not s["identity"]))
c, _, r = run("equiv", corpus / "line.ideal", corpus / "twisted_cubic.ideal")
expect("equiv acm", c == 0 and r["outputs"]["decision"] == "equivalent" and r["outputs"]["acm_class"])
c, _, r = run("equiv", corpus / "skew_lines.ideal", corpus / "skew_bdl2.ideal")
expect("equiv tower", c == 0 and r["outputs"]["decision"] == "equivalent" and r["outputs"]["shift"] == 2)
c, _, r = run("equiv", corpus / "line.ideal", corpus / "skew_lines.ideal")
expect("equiv line skew", c == 0 and r["outputs"]["decision"] == "inequivalent")
c, _, r = run("ntype", corpus / "twisted_cubic.ideal")
expect("ntype", c == 0)
c, _, r = run("triple", corpus / "line_on_quadric.ideal")
expect("triple quadric", c == 0 and r["outputs"]["P_free"] is False and r["outputs"]["M_dims"] == {})
c, _, r = run("connect-minimal", corpus / "skew_lines.ideal", corpus / "skew_lines.ideal")
expect("connect minimal", c == 0)
bad = Path("bad.ideal")
bad.write_text("ring p=32003 vars=4\nx0 +\n")
c, _, r = run("info", bad)
expect("parse error", c == 2 and r["outputs"]["error"]["code"] == "SyntaxError")
c, _, r = run("--timings", "info", corpus / "line.ideal")
expect("timings opt in", c == 0 and "timings" in r)

c1, a, _ = run("--seed", 42, "selftest", "--level", "full")
c2, b, _ = run("--seed", 42, "selftest", "--level", "full")
expect("selftest full passes", c1 == 0)
expect("selftest full byte-identical", a == b)
c, _, r = run("selftest", "--level", "quick")
expect("selftest quick covers the engine only", c == 0 and [s["criterion"] for s in r["outputs"]["suites"]] == [10])
c, _, r = run("--mutate-reduction", "--seed", 42, "selftest", "--level", "full")
expect("mutated reduction fails", c != 0)

for f in failures:
    print("failure:", f)
sys.exit(1 if failures else 0)

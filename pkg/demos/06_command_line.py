"""
The command-line interface
==========================

Every library capability is reachable through ``python3 -m weylcircles``
(or the ``weylcircles`` script). Moments are read as JSON from a file or
stdin; results are JSON, CSV or SVG on stdout.
"""
import io
import json
import tempfile
from pathlib import Path

from weylcircles.cli import main

tmp = Path(tempfile.mkdtemp())
moments = tmp / "gaussian.json"
moments.write_text(json.dumps({"label": "gaussian", "values": [1, 0, 1, 0, 3, 0, 15, 0, 105, 0, 945]}))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([*argv, "--input", str(moments)], stdout=out, stderr=err)
    return code, out.getvalue() or err.getvalue()


print(run("circle", "--z", "0+1i", "--order", "1"))
print(run("kernels", "--order", "1", "--z", "0+1i", "--w", "0-1i")[1][:200], "...")
code, csv_text = run("boundary", "--problem", "stieltjes", "--a", "-3", "--order", "1", "--samples", "4")
print(csv_text)
code, svg = run("plot", "--problem", "interval", "--a", "-4", "--b", "4", "--order", "3")
(tmp / "interval.svg").write_text(svg)
print("wrote", tmp / "interval.svg")
code, report = run("verify", "--seed", "1")
print("verify exit code", code, "all checks:", json.loads(report)["checks"])
print(run("circle", "--z", "2+0i"))

#!/usr/bin/env python3
"""Smoke test for the g2srg_py extension module.

Builds nothing itself: run `cargo build --release -p g2srg-py` first.
The script locates the compiled cdylib, stages it under an importable
name, and exercises the main types and operations end to end.

Set G2SRG_FULL_VERIFY=1 to also run the complete verification report
(adds a few seconds for the exhaustive small-graph oracle scan).
"""

import json
import os
import shutil
import sys
import tempfile
from pathlib import Path


def stage_module() -> None:
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libg2srg_py.so",
        root / "target" / "debug" / "libg2srg_py.so",
        root / "target" / "release" / "libg2srg_py.dylib",
        root / "target" / "debug" / "libg2srg_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "g2srg_py cdylib not found; run `cargo build --release -p g2srg-py` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="g2srg_py_"))
    shutil.copy2(built, stage / "g2srg_py.so")
    sys.path.insert(0, str(stage))


stage_module()

import g2srg_py as g2  # noqa: E402


def check(name: str, condition: bool) -> None:
    status = "ok" if condition else "FAIL"
    print(f"  {name:<46} {status}")
    if not condition:
        sys.exit(1)


print("g2srg_py smoke test")

gamma = g2.build_gamma()
check("gamma is srg(36,15,6,6)", gamma.srg_params() == (36, 15, 6, 6))
check("gamma has 270 edges", gamma.edge_count() == 270)
check("v1 has 36 rendered vectors", len(g2.v1_vectors()) == 36)
check("v1 starts at (0,0,1)", g2.v1_vectors()[0] == "(0,0,1)")

prime, w, classes = g2.canonical_switch()
check("W has 18 vertices from 6 classes", len(w) == 18 and len(classes) == 6)
check("gamma' = switch(gamma, W)", gamma.switch(w) == prime)
check("gamma' is srg(36,21,12,12)", prime.srg_params() == (36, 21, 12, 12))

complement = prime.complement()
check("complement is srg(36,14,4,6)", complement.srg_params() == (36, 14, 4, 6))

check("6 valid switching class sets", len(g2.valid_switch_class_sets()) == 6)
check("edge tally (72, 72, 108, 0)", g2.classify_edges() == (72, 72, 108, 0))

t_gamma = g2.two_graph_summary(gamma)
t_prime = g2.two_graph_summary(prime)
check("two-graphs agree, lambda = 18", t_gamma == t_prime and t_gamma[1] == 18)

witness = g2.switching_witness(gamma, prime)
check("switching witness is W (up to complement)",
      witness is not None and (sorted(witness) == sorted(w) or len(witness) == 36 - len(w)))

group = prime.automorphism_group()
check("|Aut gamma'| = 12096", group.order() == 12096)
check("Aut gamma' is transitive", group.is_transitive())
rank, subdegrees = g2.rank_and_subdegrees(complement.automorphism_group(), complement)
check("complement action: rank 3, subdegrees {1,14,21}",
      rank == 3 and subdegrees == [1, 14, 21])
check("|Aut gamma| = 51840", gamma.automorphism_group().order() == 51840)

g6 = prime.to_graph6()
check("graph6 round-trip", g2.Graph.from_graph6(g6) == prime)

seidel = gamma.seidel_rows()
check("seidel row profile (1, 15, 20)",
      all((r.count(0), r.count(-1), r.count(1)) == (1, 15, 20) for r in seidel))

if os.environ.get("G2SRG_FULL_VERIFY") == "1":
    passed, report_json = g2.verify(seed=7)
    report = json.loads(report_json)
    claims = report["claims"]
    check("full verification passes", passed and report["passed"])
    check("report covers all 11 criteria",
          all(any(c["id"] == f"criterion-{k:02d}" for c in claims) for k in range(1, 12)))
    print(f"  (full report: {len(claims)} claims, seed {report['environment']['seed']})")
else:
    print("  (set G2SRG_FULL_VERIFY=1 to run the full verification report)")

print("smoke test passed")

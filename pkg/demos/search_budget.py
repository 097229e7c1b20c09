"""Probe larger ranks under an explicit budget.

    python3 demos/search_budget.py 6 30     # rank 6, 30 seconds

Neither call is part of the test suite; both may time out.
"""

import sys

from invgray import ConstructionFailed, build_d_distance2, distance2_graph, find_hamilton, verify_distance2

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
seconds = float(sys.argv[2]) if len(sys.argv) > 2 else 30.0

try:
    code = build_d_distance2(n, timeout=seconds)
    print(f"splice builder, rank {n}: {len(code)} entries, ok={verify_distance2(code).ok}")
except ConstructionFailed as exc:
    print(f"splice builder, rank {n}: {exc.outcome.outcome} after {exc.outcome.nodes_expanded} nodes")

if n <= 6:
    res = find_hamilton(distance2_graph("D", n), "cycle", timeout=seconds)
    print(f"plain search, rank {n}: {res.outcome}, {res.nodes_expanded} nodes")

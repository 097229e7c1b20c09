"""A short walk through the library: counts, a recursive code, the
connecting set it walks in, and the distance-2 codes.

    python3 demos/tour.py
"""

from invgray import (
    build_d_distance2,
    classify_move,
    count,
    distance2_graph,
    find_hamilton,
    gcb,
    generating_set,
    ogcb,
    verify_distance2,
    verify_hamilton_cycle,
)
from invgray.core import pretty

print("involution counts, n = 1..8")
for kind in "ABD":
    print(f"  {kind}:", [count(kind, n) for n in range(1, 9)])

code = gcb(3)
print(f"\nGCB(3), {len(code)} entries, with the move into each entry")
words = list(code.words)
for prev, w in zip(words[-1:] + words[:-1], words):
    m = classify_move(prev, w)
    print(f"  {pretty(w):<14} {m.kind:<13} sign changes {m.sign_changes}")

T = generating_set("B", 3)
print("\nHamilton cycle in the Cayley graph:", verify_hamilton_cycle(code, T).ok)

for n in (3, 4, 5):
    rep = verify_distance2(ogcb(n))
    print(f"ogcb({n}): ok={rep.ok} max distance {rep.max_distance}")
for n in (4, 5):
    rep = verify_distance2(build_d_distance2(n))
    print(f"type D rank {n} distance-2 cycle: ok={rep.ok}")

g = distance2_graph("D", 3)
print("\nrank 3, type D, distance-2 graph:")
print("  cycle search:", find_hamilton(g, "cycle").outcome)
res = find_hamilton(g, "path")
print("  path search: ", res.outcome, " -> ".join(pretty(w) for w in res.witness))

"""Enumerate free trees and run the exhaustive theorem checks.

Run with ``python demos/exhaustive_verification.py``.
"""
from steinerk import canonicalize, enumerate_free_trees, prufer_decode, verify

# Level sequences list each tree in preorder by depth; one per isomorphism class.
for ct in enumerate_free_trees(6):
    print(ct.level_sequence, list(ct.tree.edges))

# Any labelled tree maps onto the class representative.
t = prufer_decode([3, 3, 0, 0])
print("Prüfer [3,3,0,0] ->", list(t.edges), "-> class", canonicalize(t).level_sequence)

report = verify(8)
for res in report.checks:
    status = "ok" if res.passed else f"{len(res.violations)} violations"
    print(f"{res.name:28s} trees={res.trees_examined:3d} checked={res.cases_checked:4d} "
          f"skipped={res.cases_skipped:3d}  {status}")

for name in ("gap_leaf_internal", "gap_internal_all"):
    first = report[name].violations[0]
    print(f"first {name} counterexample: levels {first.tree}, k={first.k}, "
          f"gap {first.observed} > bound {first.bound}")

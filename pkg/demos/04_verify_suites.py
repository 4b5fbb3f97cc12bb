"""Run the fast verification suites on a small custom grid and print a summary.

The full default grid is what ``slbranch verify all`` uses; here a few points
keep the run short.
"""

from __future__ import annotations

from slbranch.verify import run_suite

grid = [(2, 3, 2), (2, 5, 3), (3, 4, 3)]

for name in ("counting", "pindex", "kmain", "theta", "order", "lnt", "k2c"):
    rep = run_suite(name, grid)
    print(f"{name:<9} {rep.summary}")
    for c in rep.failures():
        print("   ", c.line(), c.detail)

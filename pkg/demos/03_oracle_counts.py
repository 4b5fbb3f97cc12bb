"""Compare parametric class counts with brute-force matrix groups.

The oracle enumerates every matrix, keeps those with the right determinant
and splits them into conjugacy classes. Its numbers must agree exactly with
the label-based counts and the symbol sums.
"""

from __future__ import annotations

import time

from slbranch import symbols as S
from slbranch.classcount import count_classes
from slbranch.errors import CapacityError
from slbranch.oracle import oracle_group

print(f"{'n':>2} {'q':>3} {'l':>2} | {'SL sym':>6} {'SL orc':>6} | {'R par':>5} {'R orc':>5} | secs")
for n, q, ell in [(2, 3, 2), (2, 5, 2), (2, 5, 3), (2, 7, 3), (2, 9, 2), (3, 2, 3), (3, 3, 2), (3, 4, 3), (3, 5, 2)]:
    t0 = time.perf_counter()
    sym = S.ibr_sl_count(n, q, ell)
    r_par = count_classes(n, q, ell, "ell_regular", "R")
    try:
        sl = oracle_group("SL", n, q).ell_regular_count(ell)
        r = oracle_group("R", n, q, ell).ell_regular_count(ell)
    except CapacityError as e:
        print(f"{n:>2} {q:>3} {ell:>2} | {sym:>6} {'-':>6} | {r_par:>5} {'-':>5} | skipped ({e})")
        continue
    assert sym == sl and r == r_par
    print(f"{n:>2} {q:>3} {ell:>2} | {sym:>6} {sl:>6} | {r_par:>5} {r:>5} | {time.perf_counter() - t0:.2f}")

"""Symbols for GL_2(q), their branching numbers and the irreducibility test.

Runs the two small worked configurations: q = 3 with l = 2 (the critical
case) and q = 7 with l = 3.
"""

from __future__ import annotations

from slbranch import symbols as S
from slbranch.symbols import CxSymbol, pair


def show_mod(n: int, q: int, ell: int) -> None:
    print(f"modular symbols, n={n} q={q} l={ell} (orbit representatives)")
    for s in S.mod_orbit_reps(n, q, ell):
        print(f"  {s}: kappa_l'={S.kappa_ell_prime(s)} kappa_l={S.kappa_ell(s)} constituents={S.num_constituents(s)}")
    print(f"  total l-regular SL classes: {S.ibr_sl_count(n, q, ell)}\n")


show_mod(2, 3, 2)
show_mod(2, 7, 3)

a = CxSymbol(3, 2, (pair(3, 2, 1, (1,)),))
b = CxSymbol(7, 3, (pair(7, 1, 3, (1,)), pair(7, 1, 2, (1,))))
for s in (a, b):
    d = S.main2_decision(s)
    print(f"complex symbol {s}")
    print(f"  star -> {S.star(s)}")
    print(f"  kappa_l'(s)={S.kappa_ell_prime(s)} kappa_l'(star)={S.kappa_ell_prime(S.star(s))}")
    print(f"  JM={d.jm} critical={d.critical} reduction irreducible={d.constituent_reduction_irreducible}\n")

s = S.mod_orbit_reps(2, 3, 2)[0]
print(f"theta lifts {s} to {S.theta(s)}, and star brings it back: {S.star(S.theta(s)) == s}")

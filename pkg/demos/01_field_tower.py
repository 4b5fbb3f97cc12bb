"""Walk through the finite-field tower over F_3.

Elements are stored as powers of a fixed generator at the smallest level
containing them. This script shows degrees, Frobenius classes, the split into
l- and l'-parts, and the element u(a, d) whose twisting raises degree by l^a.
"""

from __future__ import annotations

from slbranch.gfq import tower

T = tower(3)
eps2 = T.eps(2)
print("F_9^x has order", T.group_order(2), "and generator", eps2)

for k in range(8):
    x = T.power(eps2, k)
    print(f"  eps_2^{k} = {x}: order {T.order(x)}, degree {T.degree(x)}, class {T.frob_class(x)}")

print("\nDegree-2 Frobenius classes over F_3:", T.classes_of_degree(2))

x = T.power(eps2, 1)  # order 8: a pure 2-element
s, u = T.parts(x, 2)
print(f"\n2'-part and 2-part of {x}: {s}, {u}")

# u(a, d) needs l^a | q - 1, so use q = 5 where 4 | q - 1
T5 = tower(5)
for a in (1, 2):
    ua = T5.u_of(a, 1, 2)
    print(f"over F_5, u({a}, 1) for l = 2 is {ua}, of degree {T5.degree(ua)}")

# the same element seen from a bigger field has a scaled exponent
print("\neps_2 inside F_{3^4} has exponent", T.embed(eps2, 4))

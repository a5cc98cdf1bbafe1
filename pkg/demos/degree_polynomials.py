"""
Degree polynomials: when can q^2+q-1 be a character degree?
===========================================================
"""

# %%
from tameblocks.polyq import (DEGREE_TABLES, cyclotomic, degree_coincides, is_cyclotomic,
                              parse_poly, positive_integer_roots, root_bound)

f = parse_poly("q^2+q-1")
print(f, "cyclotomic?", is_cyclotomic(f))
print([str(cyclotomic(d)) for d in (1, 2, 3, 4, 6)])

# %%
# any positive integer root of f - g lies below the bound, so a finite scan settles it
for g in DEGREE_TABLES["gl2"]:
    diff = f - g
    if diff.is_zero() or diff.degree < 1:
        continue
    print(f"{g!s:8} bound {root_bound(diff)!s:4} roots {positive_integer_roots(diff)}")

# %%
print(degree_coincides(f, DEGREE_TABLES["gl2"], q_min=3))

"""Isotropy algebras of SO(q) x SO(n-q) orbits on the Grassmannian of p-planes.

For commuting involutions A = g I_q g^-1 and B = I_p of R^n the isotropy
algebra is the common fixed-point algebra of Ad(A) and Ad(B).  Its
dimension only depends on r, the number of common -1 directions.
"""
from dualpolar import catalog

for m, p, q in [(2, 1, 2), (3, 2, 3), (3, 3, 3), (4, 2, 4)]:
    print(f"n = {2 * m + 1}, p = {p}, q = {q}")
    for row in catalog.example_7_1_table(m, p, q):
        flag = "ok" if row.match else "MISMATCH"
        print(f"   r = {row.r}: dim {row.computed:2d}  (closed form {row.closed_form:2d})  {flag}")

"""The Ramsey norm nu on small sets, and where exhaustive search stops.

A finite set is in L when its minimum is smaller than its size minus 2.
rho(X) collects the sets every 2-colouring of whose pairs has a homogeneous
subset in X, and nu(A) counts how many rho-steps A survives.

    python demos/ramsey_norm.py
"""

import itertools
import time

from asynum.errors import WorkBudgetExceeded
from asynum.ramsey import L, in_l, in_rho, initial_segment_in, nu

subsets = [c for r in range(1, 7) for c in itertools.combinations(range(6), r)]
hist = {}
for A in subsets:
    hist[nu(A)] = hist.get(nu(A), 0) + 1
print("nu over nonempty subsets of {0..5}:", dict(sorted(hist.items())))
print("nu = 1 exactly on L:", all((nu(A) == 1) == in_l(A) for A in subsets))

ok, col = in_rho(L, range(6))
print("\n{0..5} in rho(L)?", ok)
print("  a colouring with no homogeneous L-set:", col.text())

print("\nfirst initial segment of N in L has", initial_segment_in(L, range(100)), "elements")

print("\nhow far exhaustive search gets (budget 10^7 steps):")
for top in range(6, 13):
    start = time.perf_counter()
    try:
        v = nu(range(top + 1), budget=10**7)
        print(f"  nu({{0..{top}}}) = {v}  [{time.perf_counter() - start:.2f}s]")
    except WorkBudgetExceeded:
        print(f"  nu({{0..{top}}}): budget exhausted")
        break

"""Finite witnesses for the selectivity arguments.

Each search runs inside the current filter model's certificate up to a
horizon and returns a finite set labelled as a witness.

    python demos/quasi_selectivity.py
"""

import random

from asynum import EMPTY_MODEL, commit
from asynum.qselect import (ackermann, check_fu_condition, g_plus_and_enumerator,
                            interval_to_one_reduce, monotone_restriction, rapid_set, tilde)
from asynum.seqring import PeriodicSet

H = 40
rng = random.Random(3)
vals = [rng.randint(0, n) for n in range(H + 1)]
f = lambda n: vals[n]
S = monotone_restriction(f, EMPTY_MODEL, H).elements(H)
print("random f with f(n) <= n:", vals[:12], "...")
print("longest nondecreasing restriction:", S)
print("  f on it:", [f(n) for n in S])

thirds = commit(EMPTY_MODEL, PeriodicSet.residue(0, 3))
print("\nsame search inside multiples of 3:", monotone_restriction(f, thirds, H).elements(H))

r = interval_to_one_reduce(lambda n: n % 4, EMPTY_MODEL, 16)
print("\nn mod 4 made interval-to-one:", r.g.values(16))

print("\nrapid set for n^2:", rapid_set(lambda n: n * n, EMPTY_MODEL, 1000).elements(1000))
print("FU check f(n)=n on powers of two:", check_fu_condition(lambda n: n, [2**k for k in range(8)], 200))

g = g_plus_and_enumerator(lambda n: n // 3, 12)
print("\ng = floor(n/3): g+ =", g.gplus, " enumerator =", g.enumerator)

print("\nackermann variant f_3(n) = 2^(n+3) - 3:", [ackermann(3, n) for n in range(6)])
print("tilde(n+1)(n) = 2n + 1:", [tilde(lambda x: x + 1, n) for n in range(6)])

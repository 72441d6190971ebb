"""Evens versus odds: a comparison the counts alone cannot settle.

|evens_n| - |odds_n| is 1 on even n and 0 on odd n, so whether the two sets
come out equal depends on which residue class the ultrafilter contains.
The filter model stands in for that choice one commitment at a time.

    python demos/oracle_dependence.py
"""

from asynum import EMPTY_MODEL, commit, compare, equinumerous
from asynum.pointset import EVENS, NAT, ODDS, Range, count
from asynum.seqring import EVENS as IEVENS, ODDS as IODDS

print("counts n=0..9")
print("  evens:", [count(EVENS, n) for n in range(10)])
print("  odds: ", [count(ODDS, n) for n in range(10)])

print("\nno commitments yet:")
v = equinumerous(EVENS, ODDS, EMPTY_MODEL)
print(" ", v.machine_line())
print(v.table())

print("\ncommit to the odd indices:")
v = equinumerous(EVENS, ODDS, commit(EMPTY_MODEL, IODDS))
print(" ", v.machine_line())

print("\ncommit to the even indices instead:")
v = compare(EVENS, ODDS, commit(EMPTY_MODEL, IEVENS))
print(" ", v.machine_line())

# some comparisons need no commitment at all: the deciding cell is cofinite
print("\nforced verdicts:")
for X, Y, label in [(Range(0, 4), NAT, "range(0,4) vs nat"), (NAT, EVENS, "nat vs evens")]:
    v = compare(X, Y)
    print(f"  {label}: {v.kind} (forced={v.forced})")

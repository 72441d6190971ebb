"""Characteristic series and their evaluation map.

S[X] evaluated with the first n+1 variables set to 1 gives |X_n|, so sums
and products of series become sums and products of counting sequences.
A positive combination can be rewritten as a single characteristic series
by tagging copies with prefix-free {0,1} words.

    python demos/series_encoding.py
"""

from asynum.parsing import parse_series
from asynum.pointset import count
from asynum.series import phi_sequence, positive_to_characteristic

P = parse_series("2*S[nat] + S[evens*nat] + 3")
print("P =", P.text())
print("phi(P) n=0..8:", phi_sequence(P, 8))

c = positive_to_characteristic(P, 3, 2)
print("\nsingle set X with S[X] ~ P, using", c.k, "tag coordinates:")
for word, owner in c.tags:
    what = "constant point" if owner is None else P.terms[owner][1]
    print(f"  tag {''.join(map(str, word)) or '-'}: {what}")
print("|X_n| n=0..8:", [count(c.X, n) for n in range(9)], " agrees from n =", c.n0)

D = parse_series("S[finite{(3)}] - S[finite{(0)}]")
print("\nt_3 - t_0 under phi:", phi_sequence(D, 8))

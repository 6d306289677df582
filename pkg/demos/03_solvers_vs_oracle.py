"""Polynomial solvers next to exhaustive search on random PASP profiles."""

import time

from pasp import equilibrium_president, necessary_president, possible_president, random_pasp
from pasp.oracle import brute_equilibrium_president, brute_necessary_president, brute_possible_president

e, axis = random_pasp(seed=42, sizes=[3, 2, 3, 2], n_voters=25)
print("parties:", dict(zip(e.party_names, e.parties)))
print("generator axis:", " < ".join(e.party_names[p] for p in axis))

for p, name in enumerate(e.party_names):
    t = time.perf_counter()
    eq, pp, npres = equilibrium_president(e, p), possible_president(e, p), necessary_president(e, p)
    fast = time.perf_counter() - t
    t = time.perf_counter()
    beq, bpp, bnp = brute_equilibrium_president(e, p), brute_possible_president(e, p), brute_necessary_president(e, p)
    slow = time.perf_counter() - t
    agree = (eq, pp, npres) == (beq, bpp, bnp)
    print(f"{name}: equilibrium {eq}  possible {pp}  necessary {npres}  agree={agree}  ({fast * 1e3:.1f} ms vs {slow * 1e3:.1f} ms)")

# larger instances stay fast for the DP; exhaustive search grows with the product of party sizes
big, _ = random_pasp(seed=1, sizes=[4] * 12, n_voters=200)
t = time.perf_counter()
print("\n12 parties of 4, 200 voters:", equilibrium_president(big, 0), f"in {time.perf_counter() - t:.2f} s")

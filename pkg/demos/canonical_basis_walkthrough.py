"""Walkthrough: from ladders to the canonical basis of the q-Fock space.

Covers Gaussian integers, the ladder decomposition of a restricted
partition, the divided-power first approximations, and the triangular
bar-invariant correction, all in exact Laurent-polynomial arithmetic.

Run:  python3 demos/canonical_basis_walkthrough.py
"""

from spechtmod.fock import (evaluate_at_one, first_approximation, gaussian,
                            gaussian_factorial, llt_canonical)
from spechtmod.partitions import ladder_decomposition, restricted_partitions


def header(text):
    print()
    print(text)
    print("-" * len(text))


def pstr(lam):
    return "[" + ",".join(str(a) for a in lam) + "]"


def fock_str(v):
    return "  +  ".join(f"({poly}) {pstr(lam)}"
                        for lam, poly in sorted(v.terms.items()))


header("Gaussian integers: the q-analogues behind divided powers")
for k in range(1, 5):
    print(f"  [{k}] = {gaussian(k)}")
print(f"  [3]! = {gaussian_factorial(3)}   ->   at q = 1: "
      f"{evaluate_at_one(gaussian_factorial(3))} = 3!")

header("Ladder decomposition of the 3-restricted partition (2,2,1)")
data = ladder_decomposition((2, 2, 1), 3)
for nodes, size, res in zip(data.ladders, data.sizes, data.residues):
    print(f"  nodes {nodes}   size {size}   residue {res}")
print(f"  ladder tableau rows:    {data.ladder_tableau.rows}")
print(f"  entry intervals:        {data.ladder_group_intervals}")
print(f"  ladder group order:     {data.ladder_group_order()}")

header("First approximations for p = 3, n = 5 (the five-line table)")
for mu in restricted_partitions(5, 3):
    print(f"  A{pstr(mu)} = {fock_str(first_approximation(mu, 3))}")

header("Triangular correction at n = 7, p = 3")
table = llt_canonical(7, 3)
mu, lam = (3, 2, 1, 1), (4, 2, 1)
print(f"  A{pstr(mu)} = {fock_str(table.A[mu])}")
print(f"  G{pstr(mu)} = {fock_str(table.G[mu])}")
print(f"  transition entry n[{pstr(lam)}, {pstr(mu)}] = "
      f"{table.nmat_entry(lam, mu)}")
symmetric = all(table.nmat_entry(a, b).is_bar_symmetric()
                for a in table.order for b in table.order)
print(f"  every transition entry is fixed by the bar involution: {symmetric}")

"""Decomposition numbers from the verified delta identities.

Runs the full verification for S_5 mod 3, prints the decomposition matrix,
and confirms the dimension bookkeeping against the independent full-Gram
oracle; then shows the nontrivial columns that first appear at n = 8.

Run:  python3 demos/decomposition_matrix.py
"""

from spechtmod.partitions import standard_tableau_count
from spechtmod.verify import conjecture_check, consistency_check, gram_oracle_dimD


def header(text):
    print()
    print(text)
    print("-" * len(text))


def pstr(lam):
    return "[" + ",".join(str(a) for a in lam) + "]"


def print_matrix(rows, cols, body):
    width = max(len(pstr(tau)) for tau in rows) + 2
    print(" " * width + "  ".join(pstr(mu) for mu in cols))
    for tau, line in zip(rows, body):
        cells = "  ".join(str(d).rjust(len(pstr(mu)))
                          for mu, d in zip(cols, line))
        print(pstr(tau).ljust(width) + cells)


header("Verification report for n = 5, p = 3")
report = conjecture_check(5, 3)
print(f"  all delta identities hold: {report.overall}")
print(f"  transition matrix at q = 1 is the identity: "
      f"{all(report.nmat1[i][j] == (1 if i == j else 0) for i in range(5) for j in range(5))}")

header("Decomposition matrix (rows: all partitions, columns: 3-restricted)")
rows, cols, body = report.decomposition_matrix()
print_matrix(rows, cols, body)

header("Dimension bookkeeping with the independent full-Gram oracle")
dim_d = {mu: gram_oracle_dimD(mu, 3) for mu in cols}
print("  dim D:", {pstr(mu): d for mu, d in dim_d.items()})
for tau, line in zip(rows, body):
    total = sum(d * dim_d[mu] for mu, d in zip(cols, line))
    pieces = " + ".join(f"{d}*{dim_d[mu]}"
                        for mu, d in zip(cols, line) if d)
    print(f"  dim S{pstr(tau)} = {standard_tableau_count(tau)} = "
          f"{pieces} = {total}")

header("Consistency checks for n = 6, 7, 8")
for n in (6, 7, 8):
    print(f"  n = {n}: {consistency_check(n, 3)}")

header("First nontrivial transition columns, n = 8, p = 3")
report8 = conjecture_check(8, 3)
for a, tau in enumerate(report8.order):
    for b, mu in enumerate(report8.order):
        if a != b and report8.nmat1[a][b]:
            print(f"  n[{pstr(tau)}, {pstr(mu)}](1) = {report8.nmat1[a][b]}")

"""The five-box worked example, end to end.

Builds seminormal vectors for two standard tableaux, shows their
Jucys-Murphy eigenvalues, reaches each from the row-reading tableau by an
intertwiner chain, and reduces the resulting 1x1 Gram matrices mod 3.

Run:  python3 demos/seminormal_worked_example.py
"""

from spechtmod.ranks import gram_report
from spechtmod.seminormal import SeminormalVector, gamma, jm_action
from spechtmod.tableaux import (d_reduced_word, from_rows, residue_sequence,
                                standard_tableaux)


def header(text):
    print()
    print(text)
    print("-" * len(text))


def pstr(lam):
    return "[" + ",".join(str(a) for a in lam) + "]"


FIRST = from_rows(((1, 2), (3, 5), (4,)))
SECOND = from_rows(((1, 3, 5), (2, 4)))

for name, t in (("first", FIRST), ("second", SECOND)):
    header(f"The {name} tableau: rows {t.rows}, shape {pstr(t.shape)}")
    unit = SeminormalVector.unit(t)
    contents = []
    for k in range(1, t.n + 1):
        image = jm_action(k, unit)
        eigenvalue = image.coefficient(t)
        assert image.coeffs == (unit.scale(eigenvalue)).coeffs
        contents.append(int(eigenvalue))
    print(f"  Jucys-Murphy eigenvalues (contents): {contents}")
    print(f"  residues mod 3:                      "
          f"{list(residue_sequence(t, 3).values)}")
    print(f"  word reaching it from the row-reading tableau: "
          f"{d_reduced_word(t).word}")
    print(f"  seminormal norm gamma = {gamma(t)}")

header("Norms across each shape")
for shape in ((2, 2, 1), (3, 2)):
    print(f"  shape {pstr(shape)}:")
    for t in standard_tableaux(shape):
        print(f"    gamma{t.rows} = {gamma(t)}")

header("The corresponding 1x1 Gram matrices mod 3")
for mu, tau in (((2, 1, 1, 1), (2, 2, 1)), ((1, 1, 1, 1, 1), (3, 2))):
    report = gram_report(mu, tau, 3)
    print(f"  weight {pstr(mu)} in the module of {pstr(tau)}: "
          f"gram {[[str(x) for x in row] for row in report.gram]} "
          f"-> mod 3 {[list(row) for row in report.gram_mod_p]} "
          f"-> rank {report.rank}")

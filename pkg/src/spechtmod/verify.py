r"""Conjecture verification, multiplicity matrices, and decomposition numbers.

The central identity checked here couples the two halves of the package: with
n(lam, mu) the canonical-basis transition matrix at q = 1, a = n^{-1}, and
m(lam, mu) = dim of the mu-weight space of the simple module D(lam) computed
by exact Gram ranks, the claim is

    m(tau, mu) + sum over lam strictly dominating mu of a(lam, mu) m(tau, lam)
        = delta(mu, tau)

for all p-restricted mu, tau of n -- equivalently, the matrix product
m . a is the identity.  Both sides are computed independently: the left by
intertwiner chains and mod-p ranks, the right by the Fock-space recursion.
When every identity holds, the decomposition numbers d(tau, mu) are read off
as the q = 1 evaluations of the canonical-basis coefficients.

``gram_oracle_dimD`` is a deliberately naive cross-check: it spans the whole
Specht module by word chains of the seminormal action, forms the full integer
Gram matrix, and takes its mod-p rank, the dimension of the simple head.  It
shares no code path with the eigenspace pipeline beyond the seminormal action
itself.  The stated region of the main identity is n < p*p; reports outside it
carry an explicit marker and skip the mu columns whose ladder lengths reach p.
"""

import multiprocessing
from dataclasses import dataclass, field

from .fock import evaluate_at_one, invert_unitriangular, llt_canonical, nmat_at_one
from .partitions import (Partition, all_partitions, check_partition, dominates,
                         is_p_restricted, restricted_partitions,
                         standard_tableau_count, validate_ladder_lengths)
from .ranks import dim_e_tilde_D, gram_matrix, modp_rank
from .seminormal import SeminormalVector, act_by_word
from .tableaux import d_reduced_word, row_reading_tableau, standard_tableaux


@dataclass
class VerificationReport:
    """Everything the verify pipeline produced for one (n, p)."""
    p: int
    n: int
    order: tuple                 # p-restricted partitions, most dominant first
    nmat1: tuple                 # transition matrix at q = 1
    amat: tuple                  # its inverse
    mmat: tuple                  # weight-space dims; a column is None when
                                 # that mu has a ladder of length >= p
    checks: dict                 # (mu, tau) -> {"lhs", "expected", "pass"}
    overall: bool                # every evaluated check passed
    outside_region: bool         # n >= p*p: outside the stated region
    decomposition: dict = field(default_factory=dict)
                                 # (tau in Par_n, mu restricted) -> d(tau, mu)

    def nonnegativity_violations(self) -> tuple:
        """Entries of nmat1 below zero (conjecturally none)."""
        out = []
        for a, lam in enumerate(self.order):
            for b, mu in enumerate(self.order):
                if self.nmat1[a][b] < 0:
                    out.append((lam, mu, self.nmat1[a][b]))
        return tuple(out)

    def decomposition_matrix(self):
        """(row labels, column labels, integer rows); empty when unpopulated."""
        if not self.decomposition:
            return (), (), ()
        rows = all_partitions(self.n)
        body = tuple(tuple(self.decomposition[(tau, mu)] for mu in self.order)
                     for tau in rows)
        return rows, self.order, body


def _m_column(args):
    n, p, mu = args
    return mu, tuple(dim_e_tilde_D(mu, lam, p)
                     for lam in restricted_partitions(n, p))


def m_matrix(n: int, p: int, jobs: int = 1):
    """m[lam][mu] = dim of the mu-weight space of D(lam), lam and mu running
    over the p-restricted partitions of n in canonical order.  Columns whose
    mu fails the ladder-length bound (possible only for n >= p*p) are None."""
    order = restricted_partitions(n, p)
    valid = [mu for mu in order if validate_ladder_lengths(mu, p)]
    tasks = [(n, p, mu) for mu in valid]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_m_column, tasks)
    else:
        results = [_m_column(t) for t in tasks]
    columns = dict(results)
    return tuple(tuple(columns[mu][a] if mu in columns else None
                       for mu in order)
                 for a, _lam in enumerate(order))


def conjecture_check(n: int, p: int, jobs: int = 1) -> VerificationReport:
    """Evaluate every delta identity for (n, p) and assemble the report."""
    order = restricted_partitions(n, p)
    table = llt_canonical(n, p)
    nmat1 = tuple(tuple(row) for row in nmat_at_one(table))
    amat = tuple(tuple(row) for row in invert_unitriangular(
        [list(row) for row in nmat1]))
    mmat = m_matrix(n, p, jobs=jobs)
    idx = {mu: k for k, mu in enumerate(order)}
    checks = {}
    overall = True
    for mu in order:
        # the identity at column mu needs the m-columns of every lam with
        # a(lam, mu) != 0; skip (not fail) when one of them is unavailable
        needed = [lam for lam in order if amat[idx[lam]][idx[mu]] != 0]
        available = all(mmat[0][idx[lam]] is not None for lam in needed)
        for tau in order:
            expected = 1 if mu == tau else 0
            if not available:
                checks[(mu, tau)] = {"lhs": None, "expected": expected,
                                     "pass": None}
                continue
            lhs = sum(mmat[idx[tau]][idx[lam]] * amat[idx[lam]][idx[mu]]
                      for lam in needed)
            ok = lhs == expected
            overall = overall and ok
            checks[(mu, tau)] = {"lhs": lhs, "expected": expected, "pass": ok}
    report = VerificationReport(p=p, n=n, order=order, nmat1=nmat1, amat=amat,
                                mmat=mmat, checks=checks, overall=overall,
                                outside_region=n >= p * p)
    if overall:
        for mu in order:
            g = table.G[mu]
            for tau in all_partitions(n):
                report.decomposition[(tau, mu)] = evaluate_at_one(
                    g.coefficient(tau))
    return report


_ORACLE_CAP = 20000


def gram_oracle_dimD(tau: Partition, p: int, allow_large: bool = False) -> int:
    """Mod-p rank of the full Specht Gram matrix: the dimension of D(tau).

    The integral basis vector for each standard t is the word chain of d(t)
    applied to the seminormal vector of the row-reading tableau; the Gram
    entries of that basis must come out integral.  E.g. for shape (2,1) the
    matrix is [[2,-1],[-1,2]] with determinant 3.
    """
    tau = check_partition(tau)
    if not is_p_restricted(tau, p):
        raise ValueError(f"{tau} is not {p}-restricted")
    ts = standard_tableaux(tau)
    if len(ts) > _ORACLE_CAP and not allow_large:
        raise ValueError(
            f"|Std({tau})| = {len(ts)} > {_ORACLE_CAP} needs allow_large=True")
    start = SeminormalVector.unit(row_reading_tableau(tau))
    basis = [act_by_word(d_reduced_word(t).word, start) for t in ts]
    gram = gram_matrix(basis)
    for row in gram:
        for entry in row:
            if entry.denominator != 1:
                raise ArithmeticError(
                    f"non-integer Gram entry {entry} for shape {tau}")
    _, rank = modp_rank(gram, p)
    return rank


def consistency_check(n: int, p: int, jobs: int = 1, collect=None) -> bool:
    """Standard decomposition-matrix sanity for (n, p): column dimensions,
    diagonal ones, and dominance triangularity, with dim D from the
    independent full-Gram oracle.  Appends human-readable diff lines to
    ``collect`` (when given) and returns False instead of raising."""
    diffs = collect if collect is not None else []
    report = conjecture_check(n, p, jobs=jobs)
    if not report.overall:
        diffs.append(f"conjecture check failed for n={n}, p={p}")
        return False
    dim_d = {mu: gram_oracle_dimD(mu, p) for mu in report.order}
    ok = True
    for tau in all_partitions(n):
        dim_s = standard_tableau_count(tau)
        total = sum(report.decomposition[(tau, mu)] * dim_d[mu]
                    for mu in report.order)
        if total != dim_s:
            ok = False
            diffs.append(f"dim S{tau} = {dim_s} but sum d*dimD = {total}")
    for mu in report.order:
        if report.decomposition[(mu, mu)] != 1:
            ok = False
            diffs.append(f"d({mu},{mu}) = {report.decomposition[(mu, mu)]} != 1")
    for (tau, mu), d in report.decomposition.items():
        if d != 0 and not dominates(tau, mu):
            ok = False
            diffs.append(f"d({tau},{mu}) = {d} nonzero without dominance")
    return ok

r"""Laurent arithmetic and the q-Fock space: raising operators, first
approximations, and the triangular recursion for the canonical basis.

The Fock space has the set of all partitions as a basis over
``Z[q, q^{-1}]``.  The residue-i raising operator acts by

.. math::  f_i \lambda = \sum_\gamma q^{N_i(\gamma)} (\lambda \cup \gamma),

summed over addable i-nodes :math:`\gamma` of :math:`\lambda`, where
:math:`N_i(\gamma)` counts addable i-nodes of :math:`\lambda` in strictly
smaller columns minus removable i-nodes of :math:`\lambda` in strictly smaller
columns.  The lowering operator is dual, counting in strictly larger columns
with inverted powers of q.

For a p-restricted mu with ladders L_1 < ... < L_m of residues
:math:`\iota_k`, the first approximation is the ladder product of divided
powers applied to the vacuum,

.. math::  A(\mu) = f_{\iota_m}^{(|L_m|)} \cdots f_{\iota_1}^{(|L_1|)}\,\emptyset ,

a bar-invariant vector supported on partitions dominating mu with leading
coefficient 1.  The canonical basis vector G(mu) is characterized by
bar-invariance and G(mu) = mu mod qZ[q]; ``llt_canonical`` extracts it by
subtracting bar-symmetric corrections n(q) G(nu) at dominance-greater nu,
most dominant first, and records the transition matrix n.
"""

from dataclasses import dataclass
from functools import cache

from .partitions import (Partition, check_partition, restricted_partitions,
                         addable_nodes, removable_nodes, add_node, remove_node,
                         ladder_decomposition, dominates, total_order_key)


class LaurentPoly:
    """Sparse integer Laurent polynomial in q: map exponent -> coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q_power(cls, k, coeff=1):
        return cls({k: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^{-1} (exponent negation)."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def is_bar_symmetric(self) -> bool:
        return self.coeffs == {-e: c for e, c in self.coeffs.items()}

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_degree(self):
        return min(self.coeffs) if self.coeffs else None

    def max_degree(self):
        return max(self.coeffs) if self.coeffs else None

    def coefficient(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                terms.append(f"{c}")
            else:
                mono = "q" if e == 1 else f"q^{e}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1
                             else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def bar(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def evaluate_at_one(f: LaurentPoly) -> int:
    """Sum of coefficients, as a plain integer."""
    return sum(f.coeffs.values())


def gaussian(k: int) -> LaurentPoly:
    """[k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}, with [0]_q = 0."""
    if k == 0:
        return LaurentPoly.zero()
    if k < 0:
        raise ValueError("gaussian integers are defined for k >= 0 here")
    return LaurentPoly({e: 1 for e in range(1 - k, k, 2)})


@cache
def gaussian_factorial(k: int) -> LaurentPoly:
    """[k]_q! = [k]_q [k-1]_q ... [1]_q, with [0]_q! = 1."""
    if k < 0:
        raise ValueError("factorial needs k >= 0")
    if k == 0:
        return LaurentPoly.one()
    return gaussian_factorial(k - 1) * gaussian(k)


def laurent_exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """The exact quotient f / g in Z[q, q^{-1}]; ArithmeticError when inexact."""
    if not g:
        raise ArithmeticError("division by zero")
    if not f:
        return LaurentPoly.zero()
    shift = f.min_degree() - g.min_degree()
    # reduce to ordinary polynomials with nonzero constant terms
    fc = {e - f.min_degree(): c for e, c in f.coeffs.items()}
    gc = {e - g.min_degree(): c for e, c in g.coeffs.items()}
    gdeg = max(gc)
    glead = gc[gdeg]
    quot = {}
    while fc:
        fdeg = max(fc)
        if fdeg < gdeg:
            raise ArithmeticError(f"inexact Laurent division: {f!r} / {g!r}")
        c, r = divmod(fc[fdeg], glead)
        if r != 0:
            raise ArithmeticError(f"inexact Laurent division: {f!r} / {g!r}")
        e = fdeg - gdeg
        quot[e] = c
        for ge, gco in gc.items():
            key = ge + e
            val = fc.get(key, 0) - c * gco
            if val:
                fc[key] = val
            else:
                fc.pop(key, None)
    return LaurentPoly({e + shift: c for e, c in quot.items()})


class FockVector:
    """Finitely supported combination of partitions of n over Z[q, q^{-1}]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        for lam, c in (terms or {}).items():
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly.const(c)
            if c:
                assert sum(lam) == n, f"partition {lam} is not of size {n}"
                self.terms[tuple(lam)] = c

    @classmethod
    def basis(cls, lam) -> "FockVector":
        lam = check_partition(lam)
        return cls(sum(lam), {lam: LaurentPoly.one()})

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls(0, {(): LaurentPoly.one()})

    def coefficient(self, lam) -> LaurentPoly:
        return self.terms.get(tuple(lam), LaurentPoly.zero())

    def support(self) -> tuple:
        return tuple(sorted(self.terms, key=total_order_key))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, FockVector) and self.n == other.n
                and self.terms == other.terms)

    def __add__(self, other):
        assert self.n == other.n
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, LaurentPoly.zero()) + c
        return FockVector(self.n, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, f) -> "FockVector":
        if isinstance(f, int):
            f = LaurentPoly.const(f)
        return FockVector(self.n, {lam: c * f for lam, c in self.terms.items()})

    def is_bar_invariant(self) -> bool:
        return all(c.is_bar_symmetric() for c in self.terms.values())

    def __repr__(self):
        parts = [f"({c!r})*{lam}" for lam, c in
                 sorted(self.terms.items(), key=lambda kv: total_order_key(kv[0]))]
        return " + ".join(parts) if parts else "0"


def f_action(i: int, v: FockVector, p: int) -> FockVector:
    """The residue-i raising operator (adds an i-node to each term)."""
    out = {}
    for lam, c in v.terms.items():
        adds = addable_nodes(lam, i, p)
        rems = removable_nodes(lam, i, p)
        for g in adds:
            npow = (sum(1 for a in adds if a[1] < g[1])
                    - sum(1 for r in rems if r[1] < g[1]))
            mu = add_node(lam, g)
            out[mu] = out.get(mu, LaurentPoly.zero()) + c * LaurentPoly.q_power(npow)
    return FockVector(v.n + 1, out)


def e_action(i: int, v: FockVector, p: int) -> FockVector:
    """The residue-i lowering operator (removes an i-node from each term)."""
    out = {}
    for mu, c in v.terms.items():
        adds = addable_nodes(mu, i, p)
        rems = removable_nodes(mu, i, p)
        for g in rems:
            npow = (sum(1 for a in adds if a[1] > g[1])
                    - sum(1 for r in rems if r[1] > g[1]))
            lam = remove_node(mu, g)
            out[lam] = out.get(lam, LaurentPoly.zero()) + c * LaurentPoly.q_power(-npow)
    return FockVector(v.n - 1, out)


def divided_f(i: int, k: int, v: FockVector, p: int) -> FockVector:
    """The divided power f_i^(k) = f_i^k / [k]_q!; the division must be exact,
    and inexactness raises ArithmeticError (it would signal a bug upstream)."""
    if k <= 0:
        raise ValueError("divided power needs k >= 1")
    for _ in range(k):
        v = f_action(i, v, p)
    fact = gaussian_factorial(k)
    return FockVector(v.n, {lam: laurent_exact_div(c, fact)
                            for lam, c in v.terms.items()})


@cache
def first_approximation(mu: Partition, p: int) -> FockVector:
    """The ladder product of divided powers applied to the vacuum vector."""
    ld = ladder_decomposition(check_partition(mu), p)
    v = FockVector.vacuum()
    for m, iota in zip(ld.sizes, ld.residues):
        v = divided_f(iota, m, v, p)
    return v


@dataclass(frozen=True)
class CanonicalBasisTable:
    """First approximations A, canonical basis G, and the transition matrix
    nmat with A(mu) = sum_lam nmat(lam, mu) G(lam); nmat entries are stored for
    (lam, mu) with lam dominance-greater-or-equal mu only."""
    p: int
    n: int
    order: tuple
    A: dict
    G: dict
    nmat: dict

    def nmat_entry(self, lam, mu) -> LaurentPoly:
        lam, mu = tuple(lam), tuple(mu)
        if lam == mu:
            return LaurentPoly.one()
        return self.nmat.get((lam, mu), LaurentPoly.zero())


def _bar_symmetric_correction(c: LaurentPoly) -> LaurentPoly:
    """The unique bar-symmetric polynomial agreeing with c in degrees <= 0."""
    out = {}
    for e, coef in c.coeffs.items():
        if e == 0:
            out[0] = out.get(0, 0) + coef
        elif e < 0:
            out[e] = out.get(e, 0) + coef
            out[-e] = out.get(-e, 0) + coef
    return LaurentPoly(out)


def _has_nonpositive_part(c: LaurentPoly) -> bool:
    return any(e <= 0 for e in c.coeffs)


def llt_canonical(n: int, p: int, order=None) -> CanonicalBasisTable:
    """Compute G(mu) and n(lam, mu) for every p-restricted mu of n.

    Processing mu most dominant first, the current vector starts at A(mu) and
    bar-symmetric corrections n(q) G(nu) are subtracted at the most dominant
    nu != mu whose coefficient still has a term of non-positive degree; a
    subtraction can re-dirty strictly more dominant coefficients, but each
    cascade strictly decreases the negative depth, so the loop terminates (a
    generous iteration cap guards this).  On exit every non-leading coefficient
    lies in qZ[q]; bar-invariance of the recorded corrections, unitriangularity
    and exact reconstruction A = nmat . G are asserted.
    """
    if order is None:
        return _llt_canonical_default(n, p)
    return _llt_canonical(n, p, tuple(check_partition(m) for m in order))


@cache
def _llt_canonical_default(n: int, p: int) -> CanonicalBasisTable:
    return _llt_canonical(n, p, restricted_partitions(n, p))


def _llt_canonical(n: int, p: int, order: tuple) -> CanonicalBasisTable:
    if set(order) != set(restricted_partitions(n, p)) or len(set(order)) != len(order):
        raise ValueError("order must enumerate the p-restricted partitions of n")
    pos = {mu: k for k, mu in enumerate(order)}
    A = {mu: first_approximation(mu, p) for mu in order}
    G, nmat = {}, {}
    cap = 1000 + 20 * len(order) * len(order)
    for mu in order:
        cur = A[mu]
        for lam in cur.terms:
            if not dominates(lam, mu):
                raise AssertionError(
                    f"triangularity failure: {lam} in A({mu}) does not dominate")
        steps = 0
        while True:
            offender = None
            for nu in order[:pos[mu]]:
                c = cur.coefficient(nu)
                if c and _has_nonpositive_part(c):
                    offender = nu
                    break
            if offender is None:
                break
            steps += 1
            if steps > cap:
                raise AssertionError("canonical-basis elimination did not stabilize")
            corr = _bar_symmetric_correction(cur.coefficient(offender))
            assert corr.is_bar_symmetric()
            cur = cur - G[offender].scale(corr)
            key = (offender, mu)
            nmat[key] = nmat.get(key, LaurentPoly.zero()) + corr
            if not nmat[key]:
                del nmat[key]
        # global-basis congruence: all non-leading coefficients in qZ[q]
        if cur.coefficient(mu) != LaurentPoly.one():
            raise AssertionError(f"leading coefficient of G({mu}) is not 1")
        for lam, c in cur.terms.items():
            if lam != mu and c.min_degree() <= 0:
                raise AssertionError(
                    f"coefficient of {lam} in G({mu}) not in qZ[q]: {c!r}")
        G[mu] = cur
    table = CanonicalBasisTable(p, n, order, A, G, nmat)
    _assert_table_invariants(table)
    return table


def _assert_table_invariants(table: CanonicalBasisTable):
    for (lam, mu), c in table.nmat.items():
        if not c.is_bar_symmetric():
            raise AssertionError(f"nmat({lam},{mu}) is not bar-invariant: {c!r}")
        if lam == mu or not dominates(lam, mu):
            raise AssertionError(f"nmat({lam},{mu}) breaks unitriangularity")
    for mu in table.order:
        recon = FockVector(table.n)
        for lam in table.order:
            c = table.nmat_entry(lam, mu)
            if c:
                recon = recon + table.G[lam].scale(c)
        if recon != table.A[mu]:
            raise AssertionError(f"A({mu}) != sum nmat . G reconstruction")


def nmat_at_one(table: CanonicalBasisTable):
    """The integer matrix n(lam, mu)(1), rows and columns in table order."""
    return [[evaluate_at_one(table.nmat_entry(lam, mu)) for mu in table.order]
            for lam in table.order]


def invert_unitriangular(M):
    """Exact inverse of an upper-unitriangular integer matrix."""
    N = len(M)
    for i in range(N):
        if M[i][i] != 1:
            raise ValueError("matrix is not unitriangular (diagonal != 1)")
        for j in range(i):
            if M[i][j] != 0:
                raise ValueError("matrix is not upper triangular")
    inv = [[1 if i == j else 0 for j in range(N)] for i in range(N)]
    for j in range(N):
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(inv[i][k] * M[k][j] for k in range(i, j))
    return inv

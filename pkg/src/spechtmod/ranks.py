r"""Eigenspace bases of Specht modules and mod-p Gram ranks.

For a p-restricted mu (all ladder lengths < p) and any tau of the same size,
the pipeline runs:

1. enumerate T_{mu,tau}, the standard tableaux of shape tau whose residue
   sequence equals that of the ladder tableau of mu;
2. factor each d(s), s in T_{mu,tau}, into a reduced word;
3. apply the corresponding intertwiner chain phi_{i_k} ... phi_{i_1} to the
   seminormal vector of the row-reading tableau of tau (rightmost letter
   first), giving a basis of the class eigenspace of the Specht module;
4. symmetrize over the ladder group (the full average over each interval
   symmetric group) and keep a maximal Q-independent subset, in input order;
5. form the Gram matrix of the invariant form, whose entries must be
   p-integral;
6. reduce mod p and take the rank.

The resulting rank is the dimension of the mu-weight space of the simple
module indexed by tau (dim of the image of the class projector composed with
ladder symmetrization on D(tau)).
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .fock import evaluate_at_one, first_approximation
from .partitions import (Partition, check_partition, is_p_restricted,
                         ladder_decomposition, validate_ladder_lengths)
from .seminormal import (SeminormalVector, act_by_word, inner_product,
                         phi_action)
from .tableaux import (StandardTableau, d_reduced_word, ladder_class_of_shape,
                       reduced_word, row_reading_tableau)


@dataclass(frozen=True)
class GramReport:
    """Outcome of the six-step rank computation for one pair (mu, tau)."""
    mu: Partition
    tau: Partition
    p: int
    basis_size_before_symmetrization: int
    basis_size: int
    gram: tuple            # basis_size x basis_size, Fractions
    gram_mod_p: tuple      # same shape over Z/p
    rank: int


def _require_valid_mu(mu: Partition, p: int) -> Partition:
    mu = check_partition(mu)
    if not is_p_restricted(mu, p):
        raise ValueError(f"{mu} is not {p}-restricted")
    if not validate_ladder_lengths(mu, p):
        raise ValueError(f"{mu} has a ladder of length >= {p}")
    return mu


def phi_chain_basis(mu: Partition, tau: Partition, p: int,
                    word_strategy: str = "canonical",
                    allow_large: bool = False) -> tuple:
    """The intertwiner-chain vectors, one per member of T_{mu,tau}."""
    mu = _require_valid_mu(mu, p)
    tau = check_partition(tau)
    if sum(mu) != sum(tau):
        raise ValueError(f"size mismatch: {mu} vs {tau}")
    members = ladder_class_of_shape(mu, tau, p, allow_large=allow_large)
    start = SeminormalVector.unit(row_reading_tableau(tau))
    out = []
    for s in members:
        v = start
        for i in reversed(d_reduced_word(s, word_strategy).word):
            v = phi_action(i, v, p)
        out.append(v)
    return tuple(out)


def _interval_symmetrizer(v: SeminormalVector, a: int, b: int,
                          n: int) -> SeminormalVector:
    """The average over the symmetric group on positions a..b."""
    m = b - a + 1
    base = list(range(1, n + 1))
    acc = SeminormalVector(v.shape)
    for perm in itertools.permutations(range(a, b + 1)):
        one_line = tuple(base[:a - 1]) + perm + tuple(base[b:])
        acc = acc + act_by_word(reduced_word(one_line), v)
    return acc.scale(Fraction(1, math.factorial(m)))


def independent_subset(vectors) -> tuple:
    """Maximal Q-linearly independent subset, greedily in input order.

    Gaussian elimination with tableau-indexed pivots; every stored pivot
    vector is supported on its pivot position and later ones, so each
    elimination step strictly advances the leading position and terminates.
    """
    pivots = {}   # leading tableau -> normalized coeff dict
    kept = []
    for v in vectors:
        work = dict(v.coeffs)
        while True:
            nonzero = [t for t, c in work.items() if c]
            if not nonzero:
                break    # v is dependent on the kept vectors
            t = min(nonzero, key=StandardTableau.sort_key)
            if t in pivots:
                f = work.pop(t)
                for u, c in pivots[t].items():
                    if u != t:
                        work[u] = work.get(u, Fraction(0)) - f * c
            else:
                lead = work[t]
                pivots[t] = {u: c / lead for u, c in work.items() if c}
                kept.append(v)
                break
    return tuple(kept)


def ladder_symmetrize(mu: Partition, basis, p: int) -> tuple:
    """Average each vector over the ladder group of mu, then keep a maximal
    independent subset (the symmetrized images of an orbit coincide)."""
    mu = _require_valid_mu(mu, p)
    ld = ladder_decomposition(mu, p)
    n = sum(mu)
    symmetrized = []
    for v in basis:
        w = v
        for a, b in ld.ladder_group_intervals:
            if b > a:
                w = _interval_symmetrizer(w, a, b, n)
        symmetrized.append(w)
    return independent_subset(symmetrized)


def gram_matrix(basis) -> tuple:
    """Matrix of the invariant form on the given vectors (exact, symmetric)."""
    k = len(basis)
    g = [[Fraction(0)] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            val = inner_product(basis[a], basis[b])
            g[a][b] = g[b][a] = val
    return tuple(tuple(row) for row in g)


def modp_rank(gram, p: int):
    """Reduce a p-integral rational matrix mod p and return (matrix, rank)."""
    k = len(gram)
    reduced = []
    for row in gram:
        r = []
        for entry in row:
            entry = Fraction(entry)
            if entry.denominator % p == 0:
                raise ArithmeticError(
                    f"entry {entry} is not {p}-integral; upstream basis bug")
            r.append(entry.numerator * pow(entry.denominator, -1, p) % p)
        reduced.append(r)
    mat = [row[:] for row in reduced]
    rank, lead = 0, 0
    for col in range(k):
        piv = next((r for r in range(lead, k) if mat[r][col] % p != 0), None)
        if piv is None:
            continue
        mat[lead], mat[piv] = mat[piv], mat[lead]
        inv = pow(mat[lead][col], -1, p)
        mat[lead] = [x * inv % p for x in mat[lead]]
        for r in range(k):
            if r != lead and mat[r][col] % p != 0:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[lead])]
        rank += 1
        lead += 1
        if lead == k:
            break
    return tuple(tuple(row) for row in reduced), rank


def gram_report(mu: Partition, tau: Partition, p: int,
                word_strategy: str = "canonical",
                allow_large: bool = False) -> GramReport:
    """Run steps 1-6 and package the result."""
    mu, tau = check_partition(mu), check_partition(tau)
    chains = phi_chain_basis(mu, tau, p, word_strategy, allow_large)
    sym = ladder_symmetrize(mu, chains, p)
    # weight-space dimension cross-check against the Fock-side coefficient
    expected = evaluate_at_one(first_approximation(mu, p).coefficient(tau))
    if len(sym) != expected:
        raise AssertionError(
            f"symmetrized basis for mu={mu}, tau={tau} has size {len(sym)}, "
            f"weight-space count expects {expected}")
    gram = gram_matrix(sym)
    gram_p, rank = modp_rank(gram, p)
    return GramReport(mu=mu, tau=tau, p=p,
                      basis_size_before_symmetrization=len(chains),
                      basis_size=len(sym), gram=gram, gram_mod_p=gram_p,
                      rank=rank)


def dim_e_tilde_D(mu: Partition, tau: Partition, p: int,
                  word_strategy: str = "canonical",
                  allow_large: bool = False) -> int:
    """dim of the mu-weight space of the simple module of tau: steps 1-6."""
    return gram_report(mu, tau, p, word_strategy, allow_large).rank

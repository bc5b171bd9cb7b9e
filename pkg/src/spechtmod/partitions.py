"""Partitions, nodes, residues, hooks, dominance, and the ladder decomposition.

A partition is a weakly decreasing tuple of positive integers; ``()`` is the
empty partition of 0.  Nodes of the Young diagram are 1-based ``(row, col)``
pairs; the node ``(i, j)`` has content ``j - i`` and, for an odd prime ``p``,
residue ``(j - i) mod p``.

For a fixed ``p``, the ladder through ``(i, j)`` is the set of diagram nodes on
the line ``j = b - (p-1)(i-1)`` (slope ``1/(p-1)`` in matrix coordinates); the
residue is constant along each ladder.  Filling the diagram ladder by ladder,
smallest ladder first and top to bottom inside each ladder, yields the ladder
tableau of a p-restricted partition, the combinatorial backbone of the
eigenspace algorithm in :mod:`spechtmod.ranks`.
"""

from dataclasses import dataclass
from functools import cache

Partition = tuple
Node = tuple


def check_partition(parts) -> Partition:
    """Normalize ``parts`` to a partition tuple, dropping trailing zeros.

    >>> check_partition([3, 2, 0])
    (3, 2)
    """
    parts = tuple(int(a) for a in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(a <= 0 for a in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


@cache
def all_partitions(n: int) -> tuple:
    """All partitions of ``n`` in canonical order (descending lexicographic)."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(m, max_part):
        if m == 0:
            yield ()
            return
        for first in range(min(m, max_part), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def is_p_restricted(lam: Partition, p: int) -> bool:
    """True iff every difference ``lam[i] - lam[i+1]`` (last part included,
    against 0) is strictly less than ``p``."""
    lam = tuple(lam)
    return all(lam[i] - (lam[i + 1] if i + 1 < len(lam) else 0) < p
               for i in range(len(lam)))


@cache
def restricted_partitions(n: int, p: int) -> tuple:
    """All p-restricted partitions of ``n``, most dominant first.

    >>> restricted_partitions(5, 3)
    ((3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1))
    """
    return tuple(lam for lam in all_partitions(n) if is_p_restricted(lam, p))


def dominance_compare(lam: Partition, mu: Partition) -> str:
    """Compare by partial sums; one of 'less', 'equal', 'greater', 'incomparable'."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: {lam} vs {mu}")
    le = ge = True
    sl = sm = 0
    for i in range(max(len(lam), len(mu))):
        sl += lam[i] if i < len(lam) else 0
        sm += mu[i] if i < len(mu) else 0
        if sl < sm:
            ge = False
        elif sl > sm:
            le = False
    if le and ge:
        return "equal"
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff lam is dominance-greater-or-equal to mu."""
    return dominance_compare(lam, mu) in ("greater", "equal")


def total_order_key(lam: Partition) -> tuple:
    """Sort key for the canonical total order (most dominant first).

    Descending lexicographic comparison of parts refines dominance: for equal
    sizes, ``lam`` dominating ``mu`` forces ``lam`` >= ``mu`` lexicographically,
    and incomparable pairs are broken larger-lexicographic first.
    """
    return tuple(-a for a in lam)


def total_order(lam: Partition, mu: Partition) -> int:
    """-1 if lam precedes mu in the canonical total order, 0 if equal, else 1."""
    if sum(lam) != sum(mu):
        raise ValueError(f"total order needs equal sizes: {lam} vs {mu}")
    kl, km = total_order_key(lam), total_order_key(mu)
    return -1 if kl < km else (0 if kl == km else 1)


def node_content(node: Node) -> int:
    i, j = node
    return j - i


def node_residue(node: Node, p: int) -> int:
    i, j = node
    return (j - i) % p


def all_addable_nodes(lam: Partition) -> tuple:
    """Nodes whose addition gives a partition, by increasing row."""
    lam = tuple(lam)
    out = []
    for r in range(1, len(lam) + 2):
        row = lam[r - 1] if r <= len(lam) else 0
        above = lam[r - 2] if r >= 2 else None
        if above is None or row < above:
            out.append((r, row + 1))
    return tuple(out)


def all_removable_nodes(lam: Partition) -> tuple:
    """Nodes whose removal gives a partition, by increasing row."""
    lam = tuple(lam)
    out = []
    for r in range(1, len(lam) + 1):
        below = lam[r] if r < len(lam) else 0
        if lam[r - 1] > below:
            out.append((r, lam[r - 1]))
    return tuple(out)


def addable_nodes(lam: Partition, i: int, p: int) -> tuple:
    """Addable nodes of residue ``i`` (mod p), by increasing row."""
    return tuple(g for g in all_addable_nodes(lam) if node_residue(g, p) == i % p)


def removable_nodes(lam: Partition, i: int, p: int) -> tuple:
    """Removable nodes of residue ``i`` (mod p), by increasing row."""
    return tuple(g for g in all_removable_nodes(lam) if node_residue(g, p) == i % p)


def add_node(lam: Partition, node: Node) -> Partition:
    i, j = node
    lam = list(lam)
    if i == len(lam) + 1:
        lam.append(0)
    lam[i - 1] += 1
    assert lam[i - 1] == j
    return check_partition(lam)


def remove_node(lam: Partition, node: Node) -> Partition:
    i, j = node
    lam = list(lam)
    assert lam[i - 1] == j
    lam[i - 1] -= 1
    return check_partition(lam)


def hook_lengths(lam: Partition) -> dict:
    """Map node -> hook length (arm + leg + 1)."""
    lam = tuple(lam)
    conj = conjugate(lam)
    return {(i, j): (lam[i - 1] - j) + (conj[j - 1] - i) + 1
            for i in range(1, len(lam) + 1)
            for j in range(1, lam[i - 1] + 1)}


def conjugate(lam: Partition) -> Partition:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= j) for j in range(1, lam[0] + 1))


def standard_tableau_count(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook-length formula."""
    lam = check_partition(lam)
    n = sum(lam)
    num = 1
    for k in range(2, n + 1):
        num *= k
    den = 1
    for h in hook_lengths(lam).values():
        den *= h
    assert num % den == 0
    return num // den


def ladder_index(node: Node, p: int) -> int:
    """The b with ``j = b - (p-1)(i-1)``, i.e. the ladder containing the node."""
    i, j = node
    return j + (p - 1) * (i - 1)


@dataclass(frozen=True)
class LadderData:
    """Ladder decomposition of a p-restricted partition.

    ``ladders[k]`` lists the nodes of the (k+1)-st nonempty ladder, top to
    bottom; ``limits`` holds the running totals ``n_0 = 0, n_1, ..., n_m = n``;
    ``ladder_group_intervals`` are the entry intervals ``[n_{k-1}+1, n_k]`` on
    which the ladder group (a direct product of symmetric groups) acts.
    """
    partition: Partition
    p: int
    ladders: tuple
    sizes: tuple
    residues: tuple
    limits: tuple
    ladder_tableau: "object"
    ladder_residue_sequence: "object"
    ladder_group_intervals: tuple

    def ladder_group_order(self) -> int:
        order = 1
        for m in self.sizes:
            for k in range(2, m + 1):
                order *= k
        return order


@cache
def ladder_decomposition(lam: Partition, p: int) -> LadderData:
    """Full ladder data of a p-restricted partition.

    The ladder tableau fills 1..n smallest ladder first, top to bottom within
    each ladder; its residue sequence is constant on each entry interval.
    Non-p-restricted input is rejected (its ladder tableau would be broken).
    """
    from .tableaux import StandardTableau, ResidueSequence

    lam = check_partition(lam)
    if not is_p_restricted(lam, p):
        raise ValueError(f"{lam} is not {p}-restricted")
    by_b = {}
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            by_b.setdefault(ladder_index((i, j), p), []).append((i, j))
    ladders = tuple(tuple(sorted(by_b[b])) for b in sorted(by_b))
    sizes = tuple(len(L) for L in ladders)
    residues = tuple(node_residue(L[0], p) for L in ladders)
    limits = [0]
    for m in sizes:
        limits.append(limits[-1] + m)
    entry_of = {}
    k = 1
    for L in ladders:
        for node in L:
            entry_of[node] = k
            k += 1
    rows = tuple(tuple(entry_of[(i, j)] for j in range(1, lam[i - 1] + 1))
                 for i in range(1, len(lam) + 1))
    tab = StandardTableau(rows)
    rseq = ResidueSequence(p, tuple(node_residue(tab.position_of(k), p)
                                    for k in range(1, sum(lam) + 1)))
    intervals = tuple((limits[k] + 1, limits[k + 1]) for k in range(len(sizes)))
    return LadderData(lam, p, ladders, sizes, residues, tuple(limits),
                      tab, rseq, intervals)


def validate_ladder_lengths(lam: Partition, p: int) -> bool:
    """True iff every ladder of lam has length < p (so that the ladder-group
    symmetrizers 1/|L_k|! exist mod p); guaranteed whenever ``|lam| < p**2``."""
    return all(m < p for m in ladder_decomposition(lam, p).sizes)

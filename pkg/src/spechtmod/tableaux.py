"""Standard tableaux, residue sequences, tableau classes, and reduced words.

Tableaux are stored row-wise as tuples of tuples.  All tableau orderings are
lexicographic on the entry-position sequence (the node of 1, then of 2, ...),
so enumerations are reproducible run to run.

Two standard tableaux are p-equivalent when their residue sequences agree; the
equivalence classes are enumerated by the incremental construction: start from
the one-node diagram and add, at each step k, an addable node of the k-th
prescribed residue in every possible way.  ``ladder_class_of_shape`` specializes
the class of the ladder tableau of mu to members of a fixed shape, the index set
T_{mu,lambda} of the eigenspace algorithm.

Permutations act on tableaux on the left by place permutation: applying g
replaces entry k by g(k).  The permutation d(t) with d(t) t^lam = t (t^lam the
row-reading tableau) is factored into adjacent transpositions
sigma_i = (i-1, i), 2 <= i <= n, by a deterministic bubble sort.
"""

from dataclasses import dataclass
from functools import cache

from .partitions import (Partition, Node, check_partition, addable_nodes,
                         all_addable_nodes, add_node, ladder_decomposition)


class StandardTableau:
    """A standard filling of a partition shape, stored as row tuples."""

    __slots__ = ("rows", "_positions")

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        pos = {}
        for i, row in enumerate(self.rows, start=1):
            for j, entry in enumerate(row, start=1):
                pos[entry] = (i, j)
        self._positions = pos

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    def position_of(self, k: int) -> Node:
        return self._positions[k]

    def entry_at(self, node: Node) -> int:
        i, j = node
        return self.rows[i - 1][j - 1]

    def content(self, k: int) -> int:
        i, j = self._positions[k]
        return j - i

    def sort_key(self) -> tuple:
        return tuple(self._positions[k] for k in range(1, self.n + 1))

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"StandardTableau({list(map(list, self.rows))})"

    def __reduce__(self):
        return (StandardTableau, (self.rows,))


def is_standard_rows(rows) -> bool:
    """True iff ``rows`` is a standard filling of a partition shape by 1..n."""
    rows = tuple(tuple(row) for row in rows)
    lengths = [len(row) for row in rows]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    if any(ln == 0 for ln in lengths):
        return False
    entries = [e for row in rows for e in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for row in rows:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(len(rows) - 1):
        for j in range(len(rows[i + 1])):
            if rows[i][j] >= rows[i + 1][j]:
                return False
    return True


def from_rows(rows) -> StandardTableau:
    if not is_standard_rows(rows):
        raise ValueError(f"not a standard tableau: {rows}")
    return StandardTableau(rows)


@cache
def row_reading_tableau(lam: Partition) -> StandardTableau:
    """The tableau t^lam filled 1..n along rows, top to bottom.

    >>> row_reading_tableau((2, 1)).rows
    ((1, 2), (3,))
    """
    lam = check_partition(lam)
    rows, k = [], 1
    for a in lam:
        rows.append(tuple(range(k, k + a)))
        k += a
    return StandardTableau(rows)


@cache
def standard_tableaux(lam: Partition) -> tuple:
    """All standard tableaux of shape lam, lexicographic on position sequences."""
    lam = check_partition(lam)
    n = sum(lam)
    out = []

    def grow(node_seq, shape):
        k = len(node_seq)
        if k == n:
            out.append(_tableau_from_nodes(node_seq))
            return
        for g in _addable_within(shape, lam):
            grow(node_seq + (g,), add_node(shape, g))

    grow((), ())
    return tuple(out)


def _addable_within(shape: Partition, target: Partition) -> tuple:
    """Addable nodes of ``shape`` that stay inside ``target``, by row."""
    return tuple(g for g in all_addable_nodes(shape)
                 if g[0] <= len(target) and g[1] <= target[g[0] - 1])


def _tableau_from_nodes(node_seq) -> StandardTableau:
    by_row = {}
    for k, (i, j) in enumerate(node_seq, start=1):
        by_row.setdefault(i, {})[j] = k
    rows = tuple(tuple(by_row[i][j] for j in sorted(by_row[i]))
                 for i in sorted(by_row))
    return StandardTableau(rows)


@dataclass(frozen=True)
class ResidueSequence:
    """A length-n word over Z/p: position k holds the residue of entry k."""
    p: int
    values: tuple

    def __len__(self):
        return len(self.values)

    def swap(self, i: int) -> "ResidueSequence":
        """The sequence with positions i-1 and i exchanged (action of sigma_i)."""
        v = list(self.values)
        v[i - 2], v[i - 1] = v[i - 1], v[i - 2]
        return ResidueSequence(self.p, tuple(v))


def content(t: StandardTableau, k: int) -> int:
    """c_t(k) = column - row of the node holding k."""
    return t.content(k)


def residue_sequence(t: StandardTableau, p: int) -> ResidueSequence:
    return ResidueSequence(p, tuple(t.content(k) % p for k in range(1, t.n + 1)))


_CLASS_CAP = 40


def tableau_class(rs: ResidueSequence, allow_large: bool = False) -> tuple:
    """All standard tableaux (of any shape) with residue sequence ``rs``.

    Built by the incremental addable-node construction, memoized on the pair
    (prefix length, prefix shape): all prefixes reaching the same shape at the
    same step share their completions.  May be empty.
    """
    n = len(rs)
    if n > _CLASS_CAP and not allow_large:
        raise ValueError(
            f"tableau_class with n={n} > {_CLASS_CAP} needs allow_large=True")
    return _class_members(rs, None)


def ladder_class_of_shape(mu: Partition, lam: Partition, p: int,
                          allow_large: bool = False) -> tuple:
    """T_{mu,lam}: the shape-lam members of the class of the ladder tableau of mu."""
    mu, lam = check_partition(mu), check_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"size mismatch: {mu} vs {lam}")
    rs = ladder_decomposition(mu, p).ladder_residue_sequence
    if len(rs) > _CLASS_CAP and not allow_large:
        raise ValueError(
            f"class enumeration with n={len(rs)} > {_CLASS_CAP} needs allow_large=True")
    return _class_members(rs, lam)


def ladder_classes_by_shape(mu: Partition, p: int,
                            allow_large: bool = False) -> dict:
    """The full class of the ladder tableau of mu, grouped by shape."""
    rs = ladder_decomposition(mu, p).ladder_residue_sequence
    grouped = {}
    for t in tableau_class(rs, allow_large=allow_large):
        grouped.setdefault(t.shape, []).append(t)
    return {shape: tuple(ts) for shape, ts in grouped.items()}


def _class_members(rs: ResidueSequence, target) -> tuple:
    """Members of the class of ``rs``; restricted to shape ``target`` if given."""
    n, p = len(rs), rs.p
    memo = {}

    def completions(k, shape):
        # node sequences for entries k+1..n starting from ``shape``
        if k == n:
            return ((),)
        key = (k, shape)
        if key not in memo:
            nodes = addable_nodes(shape, rs.values[k], p)
            if target is not None:
                nodes = tuple(g for g in nodes
                              if g[0] <= len(target) and g[1] <= target[g[0] - 1])
            memo[key] = tuple((g,) + rest
                              for g in nodes
                              for rest in completions(k + 1, add_node(shape, g)))
        return memo[key]

    if n == 0:
        return (StandardTableau(()),)
    out = [_tableau_from_nodes(seq) for seq in completions(0, ())]
    if target is not None:
        assert all(t.shape == target for t in out)
    return tuple(sorted(out, key=StandardTableau.sort_key))


@dataclass(frozen=True)
class PermutationWord:
    """A permutation in one-line notation together with a reduced word in the
    generators sigma_i = (i-1, i); the word is in product order, so composing
    sigma_{word[0]} sigma_{word[1]} ... reproduces ``one_line``."""
    one_line: tuple
    word: tuple


def inversions(one_line: tuple) -> int:
    return sum(1 for a in range(len(one_line)) for b in range(a + 1, len(one_line))
               if one_line[a] > one_line[b])


def reduced_word(one_line: tuple, strategy: str = "canonical") -> tuple:
    """A reduced word for ``one_line`` in product order.

    'canonical' repeatedly locates the smallest i >= 2 whose values i-1, i are
    inverted, records i, and left-multiplies by sigma_i; 'reverse' takes the
    largest such i instead.  Both run in at most inversion-count steps.
    """
    if strategy not in ("canonical", "reverse"):
        raise ValueError(f"unknown word strategy {strategy!r}")
    w = list(one_line)
    n = len(w)
    pos = [0] * (n + 1)
    for idx, val in enumerate(w):
        pos[val] = idx
    word = []
    while True:
        found = None
        candidates = range(2, n + 1) if strategy == "canonical" else range(n, 1, -1)
        for i in candidates:
            if pos[i] < pos[i - 1]:
                found = i
                break
        if found is None:
            break
        word.append(found)
        a, b = pos[found - 1], pos[found]
        w[a], w[b] = w[b], w[a]
        pos[found - 1], pos[found] = b, a
    assert w == list(range(1, n + 1))
    return tuple(word)


def permutation_of_word(word, n: int) -> tuple:
    """One-line form of sigma_{word[0]} sigma_{word[1]} ... in S_n.

    Letters are applied right to left (rightmost factor acts first); each
    left multiplication by sigma_i swaps the values i-1 and i.
    """
    w = list(range(1, n + 1))
    for i in reversed(word):
        w = [i - 1 if v == i else i if v == i - 1 else v for v in w]
    return tuple(w)


def d_permutation(t: StandardTableau) -> tuple:
    """One-line form of d(t), the place permutation with d(t) t^lam = t."""
    tlam = row_reading_tableau(t.shape)
    return tuple(t.entry_at(tlam.position_of(k)) for k in range(1, t.n + 1))


@cache
def d_reduced_word(t: StandardTableau, strategy: str = "canonical") -> PermutationWord:
    """d(t) with a deterministic reduced word; word length = inversion count."""
    one_line = d_permutation(t)
    word = reduced_word(one_line, strategy)
    assert len(word) == inversions(one_line)
    return PermutationWord(one_line, word)


def place_permute(g, t: StandardTableau) -> tuple:
    """Row tuples of g . t (entry k replaced by g(k)); possibly non-standard."""
    return tuple(tuple(g[e - 1] for e in row) for row in t.rows)


def act_tableau(g, t: StandardTableau):
    """g . t as a StandardTableau, or None when the result is not standard."""
    rows = place_permute(g, t)
    return StandardTableau(rows) if is_standard_rows(rows) else None


def swap_entries(t: StandardTableau, i: int):
    """sigma_i . t (entries i-1 and i exchanged), or None when not standard."""
    rows = tuple(tuple(i - 1 if e == i else i if e == i - 1 else e for e in row)
                 for row in t.rows)
    return StandardTableau(rows) if is_standard_rows(rows) else None

r"""Young's seminormal form over exact rationals.

The rational Specht module of shape lam has the seminormal basis
``{xi_t : t standard of shape lam}`` of simultaneous eigenvectors of the
Jucys-Murphy elements, ``L_k xi_t = c_t(k) xi_t``.  With
``h = c_s(i-1) - c_s(i)`` (never zero for a standard s) and ``t = sigma_i s``,
the Coxeter generator sigma_i = (i-1, i) acts by

    h = -1  ->   xi_s                (i-1, i adjacent in a row)
    h =  1  ->  -xi_s                (i-1, i adjacent in a column)
    h >  1  ->  -(1/h) xi_s + xi_t
    h < -1  ->  -(1/h) xi_s + ((h^2-1)/h^2) xi_t

and the invariant bilinear form is diagonal, <xi_s, xi_t> = delta_st gamma_s,
where gamma_s is a product of hook quotients over the entry-truncations of s.

The intertwiner phi_i = sigma_i + 1/(L_{i-1} - L_i) moves vectors between
tableau classes (equal residue sequences mod p).  Termwise it kills the
|h| = 1 directions; otherwise its matrix depends on whether h is divisible by
p (the singular case, where sigma_i s stays in the class of s):

    regular,  h >  1  ->  xi_t
    regular,  h < -1  ->  ((h^2-1)/h^2) xi_t
    singular, h >  1  ->  (1 - 1/h) xi_s + xi_t
    singular, h < -1  ->  (1 - 1/h) xi_s + ((h^2-1)/h^2) xi_t
"""

from fractions import Fraction
from functools import cache

from .partitions import hook_lengths
from .tableaux import (StandardTableau, ResidueSequence, residue_sequence,
                       swap_entries)

Rational = Fraction


class SeminormalVector:
    """Sparse rational combination of seminormal basis vectors of one shape."""

    __slots__ = ("shape", "coeffs")

    def __init__(self, shape, coeffs=None):
        self.shape = tuple(shape)
        self.coeffs = {}
        for t, c in (coeffs or {}).items():
            if c:
                assert t.shape == self.shape, f"{t} is not of shape {self.shape}"
                self.coeffs[t] = Fraction(c)

    @classmethod
    def unit(cls, t: StandardTableau) -> "SeminormalVector":
        return cls(t.shape, {t: Fraction(1)})

    def coefficient(self, t: StandardTableau) -> Rational:
        return self.coeffs.get(t, Fraction(0))

    def support(self) -> tuple:
        return tuple(sorted(self.coeffs, key=StandardTableau.sort_key))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, SeminormalVector) and self.shape == other.shape
                and self.coeffs == other.coeffs)

    def __add__(self, other):
        assert self.shape == other.shape
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = out.get(t, Fraction(0)) + c
        return SeminormalVector(self.shape, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, a) -> "SeminormalVector":
        return SeminormalVector(self.shape,
                                {t: c * a for t, c in self.coeffs.items()})

    def __repr__(self):
        parts = [f"({c})*xi{list(map(list, t.rows))}"
                 for t, c in sorted(self.coeffs.items(),
                                    key=lambda kv: kv[0].sort_key())]
        return " + ".join(parts) if parts else "0"


@cache
def gamma(t: StandardTableau) -> Rational:
    """The seminormal norm <xi_t, xi_t>: over each entry-truncation of t,
    the product of h/(h-1) along the row of the largest entry, hooks of
    length one omitted.  E.g. gamma of any row-reading tableau telescopes
    to the product of the row factorials."""
    out = Fraction(1)
    for i in range(2, t.n + 1):
        shape_i = tuple(ln for ln in
                        (sum(1 for e in row if e <= i) for row in t.rows) if ln)
        hooks = hook_lengths(shape_i)
        r = t.position_of(i)[0]
        for j in range(1, shape_i[r - 1] + 1):
            h = hooks[(r, j)]
            if h >= 2:
                out *= Fraction(h, h - 1)
    return out


def sigma_action(i: int, v: SeminormalVector) -> SeminormalVector:
    """The seminormal action of sigma_i = (i-1, i), extended linearly."""
    out = {}

    def add(t, c):
        if c:
            out[t] = out.get(t, Fraction(0)) + c

    for s, c in v.coeffs.items():
        h = s.content(i - 1) - s.content(i)
        if h == -1:
            add(s, c)
        elif h == 1:
            add(s, -c)
        else:
            t = swap_entries(s, i)
            assert t is not None  # |h| > 1 forces sigma_i s standard
            add(s, -c / h)
            if h > 1:
                add(t, c)
            else:
                add(t, c * Fraction(h * h - 1, h * h))
    return SeminormalVector(v.shape, out)


def jm_action(k: int, v: SeminormalVector) -> SeminormalVector:
    """The Jucys-Murphy element L_k, diagonal with content eigenvalues
    (the k = 1 convention L_1 = 0 is the content of the (1,1) node)."""
    return SeminormalVector(v.shape,
                            {t: c * t.content(k) for t, c in v.coeffs.items()})


def phi_action(i: int, v: SeminormalVector, p: int) -> SeminormalVector:
    """The intertwiner phi_i = sigma_i + 1/(L_{i-1} - L_i), extended linearly;
    the regular/singular split is decided termwise by p | h."""
    out = {}

    def add(t, c):
        if c:
            out[t] = out.get(t, Fraction(0)) + c

    for s, c in v.coeffs.items():
        h = s.content(i - 1) - s.content(i)
        if h == 1 or h == -1:
            continue
        t = swap_entries(s, i)
        assert t is not None
        if h % p == 0:
            add(s, c * Fraction(h - 1, h))
        if h > 1:
            add(t, c)
        else:
            add(t, c * Fraction(h * h - 1, h * h))
    return SeminormalVector(v.shape, out)


def act_by_word(word, v: SeminormalVector) -> SeminormalVector:
    """Apply a product of generators given as a word in product order; the
    rightmost factor acts first, so letters are consumed in reverse."""
    for i in reversed(word):
        v = sigma_action(i, v)
    return v


def inner_product(u: SeminormalVector, v: SeminormalVector) -> Rational:
    """The invariant form, diagonal on the seminormal basis with norms gamma."""
    if u.shape != v.shape:
        raise ValueError(f"shape mismatch: {u.shape} vs {v.shape}")
    small, big = (u.coeffs, v.coeffs) if len(u.coeffs) <= len(v.coeffs) \
        else (v.coeffs, u.coeffs)
    out = Fraction(0)
    for t, c in small.items():
        d = big.get(t)
        if d:
            out += c * d * gamma(t)
    return out


def class_project(rs: ResidueSequence, v: SeminormalVector) -> SeminormalVector:
    """Restrict to the basis vectors whose residue sequence equals rs."""
    return SeminormalVector(v.shape,
                            {t: c for t, c in v.coeffs.items()
                             if residue_sequence(t, rs.p) == rs})

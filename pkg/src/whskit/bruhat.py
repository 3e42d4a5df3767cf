"""Weyl group elements as root permutations, reduced words, coset minima.

An element is stored as the permutation it induces on the full (signed) root
list of its root system.  Words multiply as maps: (w * u) applies u first in
root coordinates, i.e. (w*u)(alpha) = w(u(alpha)), and the reduced word of
w * u is word(w) + word(u) when lengths add.

Minimal coset representatives are taken for cosets W_I * w: the unique minimal
w has w^{-1}(alpha_i) > 0 for every i in I.  With that choice the inversion
set R_+ ∩ w(R_-) of a representative sits inside the roots outside the Levi,
and the longest representative's inversion set is exactly that complement.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .conventions import WEYL_ORDER_CAP
from .errors import (
    GroupTooLarge,
    InvalidWeights,
    NotMinimalRepresentative,
)


class WeylElement:
    __slots__ = ("rs", "perm", "word")

    def __init__(self, rs, perm, word):
        self.rs = rs
        self.perm = perm
        self.word = word

    @classmethod
    def identity(cls, rs):
        return cls(rs, tuple(range(len(rs.roots))), ())

    @property
    def length(self):
        return len(self.word)

    def apply_index(self, r):
        return self.perm[r]

    def apply(self, coeffs):
        """Image of a root given by its coefficient tuple."""
        return self.rs.roots[self.perm[self.rs.index(coeffs)]]

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.rs is not other.rs:
            raise InvalidWeights("elements of different Weyl groups")
        perm = tuple(self.perm[p] for p in other.perm)
        return WeylElement(self.rs, perm, _reduced_word(self.rs, perm))

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return WeylElement(self.rs, tuple(inv), tuple(reversed(self.word)))

    def times_simple(self, i):
        """w * s_i, word maintained without re-deriving when lengths add."""
        s = _simple_elements(self.rs)[i]
        perm = tuple(self.perm[p] for p in s.perm)
        n_pos = self.rs.n_pos
        if self.perm[self.rs.index(_simple_root(self.rs, i))] < n_pos:
            word = self.word + (i,)
        else:
            word = _reduced_word(self.rs, perm)
        return WeylElement(self.rs, perm, word)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs is other.rs and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        if not self.word:
            return "WeylElement(e)"
        return "WeylElement(%s)" % "*".join("s%d" % (i + 1) for i in self.word)


def _simple_root(rs, i):
    return tuple(1 if j == i else 0 for j in range(rs.n))


@lru_cache(maxsize=None)
def _simple_elements_cached(type_name):
    from .rootsys import build_root_system

    rs = build_root_system(type_name)
    out = []
    for i in range(rs.n):
        out.append(WeylElement(rs, rs.simple_reflection_perm(i), (i,)))
    return tuple(out)


def _simple_elements(rs):
    return _simple_elements_cached(rs.type_name)


def _descent(rs, perm):
    """Some i with perm sending alpha_i negative (a right descent), or None."""
    n_pos = rs.n_pos
    for i in range(rs.n):
        if perm[rs.index(_simple_root(rs, i))] >= n_pos:
            return i
    return None


def _reduced_word(rs, perm):
    """Greedy descent recovery of a reduced word from a permutation."""
    simples = _simple_elements(rs)
    word = []
    cur = perm
    while True:
        i = _descent(rs, cur)
        if i is None:
            break
        # cur <- cur * s_i, strictly shorter
        s = simples[i].perm
        cur = tuple(cur[p] for p in s)
        word.append(i)
    assert cur == tuple(range(len(rs.roots))), "descent recursion failed"
    return tuple(reversed(word))


@lru_cache(maxsize=None)
def _generate_weyl_cached(type_name):
    from .rootsys import build_root_system

    rs = build_root_system(type_name)
    order = rs.weyl_order()
    if order > WEYL_ORDER_CAP:
        raise GroupTooLarge(
            "Weyl group of %s has order %d > cap %d"
            % (type_name, order, WEYL_ORDER_CAP)
        )
    simples = _simple_elements(rs)
    e = WeylElement.identity(rs)
    seen = {e.perm: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.n):
                u_perm = tuple(w.perm[p] for p in simples[i].perm)
                if u_perm not in seen:
                    u = WeylElement(rs, u_perm, w.word + (i,))
                    seen[u_perm] = u
                    nxt.append(u)
        frontier = nxt
    assert len(seen) == order, (len(seen), order)
    out = sorted(seen.values(), key=lambda w: (w.length, w.word))
    return tuple(out)


def generate_weyl(rs):
    """All Weyl group elements, sorted by (length, word); BFS words are reduced."""
    return _generate_weyl_cached(rs.type_name)


def longest_element(rs):
    return generate_weyl(rs)[-1]


def inversion_set(w):
    """R_+ ∩ w(R_-) = {alpha > 0 : w^{-1}(alpha) < 0}, in graded root order."""
    rs = w.rs
    inv = [0] * len(w.perm)
    for i, p in enumerate(w.perm):
        inv[p] = i
    return [rs.roots[r] for r in range(rs.n_pos) if inv[r] >= rs.n_pos]


def _check_levi(rs, I):
    I = sorted(set(int(i) for i in I))
    if any(i < 0 or i >= rs.n for i in I):
        raise InvalidWeights("Levi subset out of range for rank %d" % rs.n)
    return I


def levi_subgroup_order(rs, I):
    """|W_I| by closure over the generating reflections (I is small)."""
    I = _check_levi(rs, I)
    if not I:
        return 1
    simples = _simple_elements(rs)
    e = tuple(range(len(rs.roots)))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for i in I:
                q = tuple(p[x] for x in simples[i].perm)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def is_min_coset_rep(rs, I, w):
    """True when w is the minimum of W_I * w: w^{-1}(alpha_i) > 0 for i in I."""
    I = _check_levi(rs, I)
    inv = [0] * len(w.perm)
    for i, p in enumerate(w.perm):
        inv[p] = i
    return all(inv[rs.index(_simple_root(rs, i))] < rs.n_pos for i in I)


def min_coset_reps(rs, I):
    """Minimal representatives of the cosets W_I \\ W, sorted by (length, word).

    Exactly |W| / |W_I| elements come back, one per coset.
    """
    I = _check_levi(rs, I)
    reps = [w for w in generate_weyl(rs) if is_min_coset_rep(rs, I, w)]
    expected = len(generate_weyl(rs)) // levi_subgroup_order(rs, I)
    assert len(reps) == expected, (len(reps), expected)
    return reps


def poincare_polynomial(rs, I=()):
    """Coefficients of sum_w q^{l(w)} over minimal coset representatives.

    With I empty this is the Poincare polynomial of the full Weyl group.
    """
    reps = min_coset_reps(rs, I)
    top = max(w.length for w in reps)
    coeffs = [0] * (top + 1)
    for w in reps:
        coeffs[w.length] += 1
    return coeffs


def cross_action(rs, i, w):
    """Right multiplication w * s_i; stable on cosets W_I * w."""
    if not 0 <= i < rs.n:
        raise InvalidWeights("simple index out of range")
    return w.times_simple(i)


def require_min_rep(rs, I, w):
    if not is_min_coset_rep(rs, I, w):
        raise NotMinimalRepresentative(
            "element %r is not minimal in its W_I coset" % (w,)
        )


def reduced_words_all(w, cap=10000):
    """Every reduced word of w (test helper; exponential in principle)."""
    rs = w.rs
    out = []
    stack = [(w.perm, ())]
    simples = _simple_elements(rs)
    while stack:
        perm, suffix = stack.pop()
        if perm == tuple(range(len(rs.roots))):
            out.append(suffix)
            if len(out) > cap:
                raise GroupTooLarge("too many reduced words")
            continue
        for i in range(rs.n):
            if perm[rs.index(_simple_root(rs, i))] >= rs.n_pos:
                nperm = tuple(perm[p] for p in simples[i].perm)
                stack.append((nperm, (i,) + suffix))
    return out

"""Exact rational representations of permutation groups.

A representation is given by one square matrix of Fractions per group
generator; the homomorphism property is verified by extending the
assignment over the whole Cayley graph and re-checking every edge.
``fixed_dim`` computes dim V^H as the exact character average over H,
with the averaged-projector rank available as an independent route.
"""

from __future__ import annotations

from fractions import Fraction

from .groups import PermGroup, p_identity, p_mul


class RepresentationError(Exception):
    """The generator matrices do not define a group homomorphism."""


class NonIntegralAverage(Exception):
    """A character average came out non-integral (invalid representation)."""


def _frac_rows(rows):
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k))
                       for j in range(m)) for i in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_scale(c, a):
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n))
                 for i in range(n))


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def mat_rank(a) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    rows = [list(r) for r in a]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows))
                      if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [v - c * p for v, p in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class Representation:
    def __init__(self, group: PermGroup, dim: int, gen_matrices):
        self.group = group
        self.dim = dim
        self.gen_matrices = tuple(_frac_rows(m) for m in gen_matrices)
        if len(self.gen_matrices) != len(group.generators):
            raise RepresentationError("one matrix per generator required")
        for m in self.gen_matrices:
            if len(m) != dim or any(len(r) != dim for r in m):
                raise RepresentationError("matrices must be dim x dim")
        self._matrices = self._extend()
        self._verify()
        self._character = {g: mat_trace(m)
                           for g, m in self._matrices.items()}

    def _extend(self):
        out = {p_identity(self.group.degree): mat_identity(self.dim)}
        frontier = list(out)
        pairs = list(zip(self.group.generators, self.gen_matrices))
        while frontier:
            nxt = []
            for e in frontier:
                for g, mg in pairs:
                    f = p_mul(g, e)
                    m = mat_mul(mg, out[e])
                    if f not in out:
                        out[f] = m
                        nxt.append(f)
            frontier = nxt
        return out

    def _verify(self):
        if set(self._matrices) != set(self.group.elements):
            raise RepresentationError("matrices do not cover the group")
        for e, me in self._matrices.items():
            for g, mg in zip(self.group.generators, self.gen_matrices):
                if self._matrices[p_mul(g, e)] != mat_mul(mg, me):
                    raise RepresentationError(
                        "generator matrices are not a homomorphism")

    def matrix(self, element):
        return self._matrices[tuple(element)]

    def character(self, element) -> Fraction:
        return self._character[tuple(element)]

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "matrices": [[[str(v) for v in row] for row in m]
                             for m in self.gen_matrices]}

    @staticmethod
    def from_json(group: PermGroup, obj) -> "Representation":
        mats = [[[Fraction(v) for v in row] for row in m]
                for m in obj["matrices"]]
        return Representation(group, obj["dim"], mats)


def fixed_dim(rep: Representation, H) -> int:
    """dim V^H as the exact character average (1/|H|) sum_{h in H} chi(h)."""
    H = tuple(H)
    avg = sum(rep.character(h) for h in H) / len(H)
    if avg.denominator != 1 or avg < 0:
        raise NonIntegralAverage(f"character average {avg} is not a "
                                 "nonnegative integer")
    return int(avg)


def fixed_projector_rank(rep: Representation, H) -> int:
    """dim V^H as the rank of the averaged projector (1/|H|) sum ρ(h);
    an independent route used to cross-check ``fixed_dim``."""
    H = tuple(H)
    acc = rep.matrix(H[0])
    for h in H[1:]:
        acc = mat_add(acc, rep.matrix(h))
    return mat_rank(mat_scale(Fraction(1, len(H)), acc))


# ------------------------------------------------------------- presets

def trivial_representation(G: PermGroup) -> Representation:
    return Representation(G, 1, [[[1]] for _ in G.generators])


def _perm_matrix(p):
    n = len(p)
    return [[int(p[j] == i) for j in range(n)] for i in range(n)]


def permutation_representation(G: PermGroup) -> Representation:
    """The natural degree-n permutation representation."""
    return Representation(G, G.degree,
                          [_perm_matrix(g) for g in G.generators])


def _translation(G: PermGroup, g) -> tuple:
    index = {e: i for i, e in enumerate(G.elements)}
    return tuple(index[p_mul(g, e)] for e in G.elements)


def regular_representation(G: PermGroup) -> Representation:
    """Left translation on the group elements."""
    return Representation(G, G.order,
                          [_perm_matrix(_translation(G, g))
                           for g in G.generators])


def _reduced_matrix(sigma) -> list:
    # on the sum-zero subspace with basis v_k = e_k - e_0 (k = 1..n-1):
    # P v_k = v_{sigma(k)} - v_{sigma(0)}, with v_0 = 0
    n = len(sigma)
    out = [[0] * (n - 1) for _ in range(n - 1)]
    for k in range(1, n):
        if sigma[k] != 0:
            out[sigma[k] - 1][k - 1] += 1
        if sigma[0] != 0:
            out[sigma[0] - 1][k - 1] -= 1
    return out


def reduced_regular_representation(G: PermGroup) -> Representation:
    """The regular representation minus its trivial summand
    (dimension |G| - 1)."""
    return Representation(G, G.order - 1,
                          [_reduced_matrix(_translation(G, g))
                           for g in G.generators])


def reduced_permutation_representation(G: PermGroup) -> Representation:
    """The natural permutation representation restricted to the sum-zero
    subspace; for a transitive degree-n action this is the standard
    (n-1)-dimensional representation."""
    return Representation(G, G.degree - 1,
                          [_reduced_matrix(g) for g in G.generators])


REP_PRESETS = {
    "trivial": trivial_representation,
    "permutation": permutation_representation,
    "regular": regular_representation,
    "reduced-regular": reduced_regular_representation,
    "standard": reduced_permutation_representation,
}

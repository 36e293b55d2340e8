"""Finite permutation groups and their subgroup-conjugacy lattices.

Permutations are tuples ``p`` of length ``degree`` with ``p[i]`` the
image of point ``i`` (0-based internally; JSON uses 1-based points).
Subgroups are frozensets of permutations; the lattice groups them into
conjugacy classes ordered by subconjugacy.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ORDER_BOUND = 60


class GroupTooLarge(Exception):
    """The group order exceeds the configured enumeration bound."""


def p_identity(n: int) -> tuple:
    return tuple(range(n))


def p_mul(p: tuple, q: tuple) -> tuple:
    """p after q."""
    return tuple(p[q[i]] for i in range(len(p)))


def p_inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _closure(degree: int, gens) -> frozenset:
    gens = [tuple(g) for g in gens]
    seen = {p_identity(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p_mul(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple       # of permutation tuples
    elements: tuple         # sorted materialized closure

    def __post_init__(self):
        for g in self.generators:
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"{g} is not a permutation of the degree")

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "generators": [[i + 1 for i in g] for g in self.generators]}

    @staticmethod
    def from_json(obj) -> "PermGroup":
        gens = [tuple(i - 1 for i in g) for g in obj["generators"]]
        return perm_group(obj["degree"], gens)


def perm_group(degree: int, generators) -> PermGroup:
    gens = tuple(tuple(g) for g in generators)
    elements = tuple(sorted(_closure(degree, gens)))
    return PermGroup(degree, gens, elements)


# ------------------------------------------------------------ subgroups

def subgroup_key(H: frozenset) -> tuple:
    return tuple(sorted(H))


def generated_subgroup(G: PermGroup, gens) -> frozenset:
    return _closure(G.degree, gens)


def cyclic_subgroups(G: PermGroup) -> set:
    return {generated_subgroup(G, [g]) for g in G.elements}


def all_subgroups(G: PermGroup) -> list:
    """Every subgroup: cyclic subgroups closed under pairwise join."""
    found = set(cyclic_subgroups(G))
    while True:
        new = set()
        pool = sorted(found, key=subgroup_key)
        for a in pool:
            for b in pool:
                if a < b or b < a or a == b:
                    continue
                j = generated_subgroup(G, tuple(a) + tuple(b))
                if j not in found:
                    new.add(j)
        if not new:
            return sorted(found, key=lambda h: (len(h), subgroup_key(h)))
        found |= new


def conjugate_subgroup(H: frozenset, g: tuple) -> frozenset:
    gi = p_inv(g)
    return frozenset(p_mul(g, p_mul(h, gi)) for h in H)


def is_subconjugate(G: PermGroup, H: frozenset, K: frozenset) -> bool:
    """H contained in some conjugate of K."""
    if len(K) % len(H) != 0:
        return False
    return any(H <= conjugate_subgroup(K, g) for g in G.elements)


def normalizer(G: PermGroup, H: frozenset) -> frozenset:
    return frozenset(g for g in G.elements
                     if conjugate_subgroup(H, g) == H)


# ------------------------------------------------------- conjugacy poset

@dataclass(frozen=True)
class ConjugacyPoset:
    """Conjugacy classes of subgroups ordered by subconjugacy.

    Classes are indexed 0..n-1, sorted by (subgroup order, lexicographic
    element set of the canonical representative); index 0 is the trivial
    class and index n-1 is the class of the whole group.
    """
    group: PermGroup
    classes: tuple        # class index -> tuple of subgroups (sorted)
    leq: tuple            # leq[i][j] iff class i subconjugate to class j
    weyl_orders: tuple

    @property
    def n(self) -> int:
        return len(self.classes)

    def representative(self, i: int) -> frozenset:
        return self.classes[i][0]

    def class_order(self, i: int) -> int:
        return len(self.representative(i))

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "classes": [
                {"index": i,
                 "subgroup_order": self.class_order(i),
                 "class_size": len(cl),
                 "representative": [[p + 1 for p in perm]
                                    for perm in sorted(cl[0])]}
                for i, cl in enumerate(self.classes)],
            "leq": [[bool(v) for v in row] for row in self.leq],
            "weyl_orders": list(self.weyl_orders),
        }


def enumerate_subgroup_classes(G: PermGroup,
                               bound: int = DEFAULT_ORDER_BOUND
                               ) -> ConjugacyPoset:
    if G.order > bound:
        raise GroupTooLarge(f"|G| = {G.order} exceeds the bound {bound}")
    subgroups = all_subgroups(G)
    remaining = set(subgroups)
    classes = []
    while remaining:
        H = min(remaining, key=lambda h: (len(h), subgroup_key(h)))
        orbit = {conjugate_subgroup(H, g) for g in G.elements}
        classes.append(tuple(sorted(orbit, key=subgroup_key)))
        remaining -= orbit
    classes.sort(key=lambda cl: (len(cl[0]), subgroup_key(cl[0])))
    leq = tuple(
        tuple(is_subconjugate(G, ci[0], cj[0]) for cj in classes)
        for ci in classes)
    weyl = tuple(len(normalizer(G, cl[0])) // len(cl[0]) for cl in classes)
    return ConjugacyPoset(G, tuple(classes), leq, weyl)


def weyl_group(poset: ConjugacyPoset, class_idx: int):
    """(order, coset representatives) of N_G(H)/H for the class
    representative H."""
    G = poset.group
    H = poset.representative(class_idx)
    N = sorted(normalizer(G, H))
    reps = []
    covered = set()
    for g in N:
        if g in covered:
            continue
        reps.append(g)
        covered |= {p_mul(g, h) for h in H}
    assert len(reps) == len(N) // len(H)
    return len(reps), tuple(reps)

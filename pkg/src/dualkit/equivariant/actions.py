"""Finite G-sets and the untwisting bijection.

A G-set on points {0..m-1} is an action table mapping every group
element to the tuple of images of the points.  The untwisting map
phi(g, x) = (g, g.x) intertwines the left-on-first-factor action with
the diagonal action on G x X, with inverse psi(g, x) = (g, g^-1 x).
"""

from __future__ import annotations

from .groups import PermGroup, p_identity, p_inv, p_mul


class InvalidAction(Exception):
    """The table is not a group action."""


def validate_action(G: PermGroup, action: dict) -> int:
    """Check the action table (element -> image tuple); returns the
    number of points."""
    if set(action) != set(G.elements):
        raise InvalidAction("table does not cover the group exactly")
    sizes = {len(v) for v in action.values()}
    if len(sizes) != 1:
        raise InvalidAction("rows have different lengths")
    m = sizes.pop()
    for v in action.values():
        if sorted(v) != list(range(m)):
            raise InvalidAction(f"row {v} is not a permutation of the points")
    if action[p_identity(G.degree)] != tuple(range(m)):
        raise InvalidAction("identity does not act trivially")
    for g in G.elements:
        for h in G.elements:
            gh = p_mul(g, h)
            composite = tuple(action[g][action[h][x]] for x in range(m))
            if composite != action[gh]:
                raise InvalidAction(
                    "table is not associative with the group law")
    return m


def untwisting_check(G: PermGroup, action: dict) -> bool:
    """True iff phi(g,x) = (g, g.x) is an equivariant bijection from the
    left-on-first-factor action to the diagonal action, with
    psi(g,x) = (g, g^-1 x) a two-sided inverse (checked exhaustively)."""
    m = validate_action(G, action)

    def phi(g, x):
        return g, action[g][x]

    def psi(g, x):
        return g, action[p_inv(g)][x]

    pairs = [(g, x) for g in G.elements for x in range(m)]
    # two-sided inverse, hence bijectivity
    for g, x in pairs:
        if psi(*phi(g, x)) != (g, x) or phi(*psi(g, x)) != (g, x):
            return False
    # equivariance: phi(h.(g,x)) = h.phi(g,x) with the source acting on
    # the first factor only and the target acting diagonally
    for h in G.elements:
        for g, x in pairs:
            source = (p_mul(h, g), x)
            gd, xd = phi(g, x)
            target = (p_mul(h, gd), action[h][xd])
            if phi(*source) != target:
                return False
    return True


def left_translation_action(G: PermGroup) -> dict:
    index = {e: i for i, e in enumerate(G.elements)}
    return {g: tuple(index[p_mul(g, e)] for e in G.elements)
            for g in G.elements}


def natural_action(G: PermGroup) -> dict:
    return {g: g for g in G.elements}


def coset_action(G: PermGroup, H) -> dict:
    """The transitive action on the left cosets of H."""
    H = frozenset(H)
    cosets = []
    seen = set()
    for g in G.elements:
        c = frozenset(p_mul(g, h) for h in H)
        if c not in seen:
            seen.add(c)
            cosets.append(c)
    index = {}
    for i, c in enumerate(cosets):
        for e in c:
            index[e] = i
    return {g: tuple(index[p_mul(g, next(iter(sorted(c))))]
                     for c in cosets)
            for g in G.elements}


def transitive_actions(G: PermGroup, poset) -> list:
    """One transitive G-set per subgroup-conjugacy class (its coset
    action)."""
    return [coset_action(G, poset.representative(i))
            for i in range(poset.n)]

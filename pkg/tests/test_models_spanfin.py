"""SpanFin model tests.

The composition oracle below works with explicit spans of sets: an
apex element list with legs, composed by enumerating the set-level
pullback.  This is independent of the matrix-product implementation.
"""

import random

import pytest

from dualkit.exactlin import NotInvertible
from dualkit.models import (SpanFin, UnsupportedShape, biproduct_equations_hold,
                            span, triangle_equations_hold)

C = SpanFin()


# -------------------------------------------------------------------- oracle

def explicit_span_from_matrix(m):
    """List of apex elements (a, b) with multiplicity tags."""
    apex = []
    for b in range(m.rows):
        for a in range(m.cols):
            for t in range(m.data[b][a]):
                apex.append((a, b, t))
    return apex


def pullback_compose_oracle(g, f):
    """Count the apex of the pullback of explicit spans for g o f."""
    fa = explicit_span_from_matrix(f.matrix)
    ga = explicit_span_from_matrix(g.matrix)
    counts = [[0] * f.dom for _ in range(g.cod)]
    for (a, b1, _) in fa:
        for (b2, c, _) in ga:
            if b1 == b2:
                counts[c][a] += 1
    return counts


def rand_span(rng, dom, cod, maxent=3):
    return span(dom, cod, [[rng.randint(0, maxent) for _ in range(dom)]
                           for _ in range(cod)])


# --------------------------------------------------------------------- tests

def test_compose_matches_pullback_oracle():
    rng = random.Random(0)
    for _ in range(200):
        a, b, c = (rng.randint(0, 4) for _ in range(3))
        f = rand_span(rng, a, b)
        g = rand_span(rng, b, c)
        assert C.compose(g, f).matrix.tolist() == pullback_compose_oracle(g, f)


def test_compose_frozen_example():
    f = span(2, 2, [[0, 1], [1, 0]])
    g = span(2, 2, [[1, 1], [0, 1]])
    assert C.compose(g, f).matrix.tolist() == [[1, 1], [1, 0]]


def test_category_laws():
    rng = random.Random(1)
    for _ in range(250):
        a, b, c, d = (rng.randint(0, 3) for _ in range(4))
        f = rand_span(rng, a, b)
        g = rand_span(rng, b, c)
        h = rand_span(rng, c, d)
        assert C.compose(h, C.compose(g, f)) == C.compose(C.compose(h, g), f)
        assert C.compose(f, C.identity(a)) == f
        assert C.compose(C.identity(b), f) == f


def test_tensor_functoriality():
    rng = random.Random(2)
    for _ in range(100):
        a, b, c = (rng.randint(0, 3) for _ in range(3))
        a2, b2, c2 = (rng.randint(0, 3) for _ in range(3))
        f, g = rand_span(rng, a, b), rand_span(rng, b, c)
        f2, g2 = rand_span(rng, a2, b2), rand_span(rng, b2, c2)
        assert C.compose(C.tensor_mor(g, g2), C.tensor_mor(f, f2)) == \
            C.tensor_mor(C.compose(g, f), C.compose(g2, f2))


def test_braiding_naturality():
    rng = random.Random(3)
    for _ in range(50):
        a, b, c, d = (rng.randint(0, 3) for _ in range(4))
        f, g = rand_span(rng, a, c), rand_span(rng, b, d)
        lhs = C.compose(C.braiding(c, d), C.tensor_mor(f, g))
        rhs = C.compose(C.tensor_mor(g, f), C.braiding(a, b))
        assert lhs == rhs


def test_duality_snakes():
    for n in range(5):
        dd = C.duality(n)
        assert triangle_equations_hold(C, dd)
    assert C.duality(1).eta.matrix.tolist() == [[1]]
    assert C.duality(2).eta.matrix.tolist() == [[1], [0], [0], [1]]


def test_biproduct_houston():
    rng = random.Random(4)
    for _ in range(30):
        x, y = rng.randint(0, 4), rng.randint(0, 4)
        bp = C.biproduct(x, y)
        assert bp.obj == x + y
        assert biproduct_equations_hold(C, x, y, bp)


def test_zero_object_duality():
    assert triangle_equations_hold(C, C.duality(0))


def test_cofiber_table():
    # 0 -> 1 (all-zero row)
    assert C.cofiber(span(0, 1, [[]])).obj == 1
    # forward fold 2 -> 1
    assert C.cofiber(span(2, 1, [[1, 1]])).obj == 0
    # backward map 1 <- 2 -> 2 seen from 1: matrix is the column of ones
    assert C.cofiber(span(1, 2, [[1], [1]])).obj == 0
    # 1 -> 0 (all-zero column)
    assert C.cofiber(span(1, 0, [])).obj == 0
    # identity
    assert C.cofiber(C.identity(3)).obj == 0


def test_cofiber_random_backward_maps():
    # any map whose matrix rows each contain exactly one 1 has cofiber 0
    rng = random.Random(5)
    for _ in range(50):
        dom, apex = rng.randint(1, 4), rng.randint(0, 5)
        rows = []
        for _ in range(apex):
            r = [0] * dom
            r[rng.randrange(dom)] = 1
            rows.append(r)
        c = C.cofiber(span(dom, apex, rows))
        assert c.obj == 0


def test_cofiber_forward_functions():
    # a function dom -> cod: cofiber counts the unhit points
    rng = random.Random(6)
    for _ in range(50):
        dom, cod = rng.randint(0, 4), rng.randint(1, 4)
        fn = [rng.randrange(cod) for _ in range(dom)]
        rows = [[1 if fn[a] == b else 0 for a in range(dom)] for b in range(cod)]
        c = C.cofiber(span(dom, cod, rows))
        unhit = cod - len(set(fn))
        assert c.obj == unhit
        # quotient projects onto the unhit points
        assert c.quotient.dom == cod and c.quotient.cod == unhit
        assert C.compose(c.quotient, span(dom, cod, rows)) == \
            C.zero_mor(dom, unhit)


def test_cofiber_rejects_general_spans():
    with pytest.raises(UnsupportedShape):
        C.cofiber(span(1, 1, [[2]]))
    with pytest.raises(UnsupportedShape):
        C.cofiber(span(2, 2, [[1, 1], [0, 1]]))


def test_suspension():
    assert C.suspension(1) == 0
    assert C.suspension(0) == 0
    assert C.suspension(3) == 0


def test_invert():
    perm = span(2, 2, [[0, 1], [1, 0]])
    assert C.invert(perm) == perm
    with pytest.raises(NotInvertible):
        C.invert(span(1, 1, [[2]]))


def test_json_roundtrip():
    f = span(2, 3, [[1, 0], [2, 1], [0, 0]])
    from dualkit.models import SpanMorphism
    assert SpanMorphism.from_json(f.to_json()) == f

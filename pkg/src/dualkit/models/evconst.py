"""The eventually-constant product of the categories of F_p vector spaces.

An object is an infinite tuple (V_2, V_3, V_5, ...) of vector spaces
over the prime fields, identified at all but finitely many primes with
the reduction of a common free abelian group Z^f.  Canonical form:
store the free rank f and only the exceptional dimensions d_p != f.

A morphism carries an integer matrix between the free parts and, at an
explicit finite set of primes, F_p matrices; at every other prime the
component is the reduction of the free part.  Canonical form drops
explicit primes where both endpoints are non-exceptional and the stored
matrix equals that reduction.

Cofibers are computed through the Smith normal form of the free part:
the free rank of the cokernel gives the new free rank, and at each
relevant prime the component dimension is cod_p - rank_p(component).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactlin import (INT, DimensionMismatch, Matrix, NotInvertible, fp,
                        int_matrix, invert_or_fail, kronecker,
                        left_null_basis_fp, rank_fp, smith_normal_form)
from .base import Biproduct, Cofiber, DualityDatum, ModelCategory


@dataclass(frozen=True)
class EvObject:
    """Canonical object: free rank + exceptional dimensions (sorted, != f)."""
    f: int
    exc: tuple = ()  # tuple of (prime, dim), sorted by prime, dim != f

    def __post_init__(self):
        if self.f < 0 or any(d < 0 for _, d in self.exc):
            raise ValueError("negative dimension")
        if any(d == self.f for _, d in self.exc):
            raise ValueError("non-canonical object: exceptional dim equals f")
        if list(self.exc) != sorted(self.exc):
            raise ValueError("exceptional primes not sorted")

    def dim(self, p: int) -> int:
        for q, d in self.exc:
            if q == p:
                return d
        return self.f

    def exc_primes(self) -> tuple:
        return tuple(p for p, _ in self.exc)

    def to_json(self) -> dict:
        return {"f": self.f, "exc": {str(p): d for p, d in self.exc}}

    @staticmethod
    def from_json(obj) -> "EvObject":
        return ev_object(obj["f"], {int(p): d for p, d in obj.get("exc", {}).items()})

    def __str__(self):
        if self.f == 0 and not self.exc:
            return "0"
        parts = []
        if self.f:
            parts.append("S" if self.f == 1 else f"S^{self.f}")
        for p, d in self.exc:
            delta = d - self.f
            if delta > 0:
                parts.append(f"S/{p}" + (f"^{delta}" if delta > 1 else ""))
            else:
                parts.append(f"S({p})-defect{delta}")
        return " + ".join(parts) if parts else "0"


def ev_object(f: int, exc: dict | None = None) -> EvObject:
    exc = exc or {}
    return EvObject(f, tuple(sorted((p, d) for p, d in exc.items() if d != f)))


UNIT = ev_object(1)
ZERO = ev_object(0)


@dataclass(frozen=True)
class EvMorphism:
    dom: EvObject
    cod: EvObject
    free: Matrix          # cod.f x dom.f over INT
    explicit: tuple = ()  # sorted tuple of (prime, F_p matrix cod.d_p x dom.d_p)

    def __post_init__(self):
        if self.free.domain != INT or \
                (self.free.rows, self.free.cols) != (self.cod.f, self.dom.f):
            raise DimensionMismatch("free part shape mismatch")
        keys = [p for p, _ in self.explicit]
        if list(self.explicit) != sorted(self.explicit, key=lambda t: t[0]):
            raise ValueError("explicit primes not sorted")
        for p in set(self.dom.exc_primes()) | set(self.cod.exc_primes()):
            if p not in keys:
                raise ValueError(f"missing explicit component at prime {p}")
        for p, m in self.explicit:
            if m.domain != fp(p) or \
                    (m.rows, m.cols) != (self.cod.dim(p), self.dom.dim(p)):
                raise DimensionMismatch(f"component at {p} has wrong shape")
            if self.dom.dim(p) == self.dom.f and self.cod.dim(p) == self.cod.f \
                    and m == self.free.mod(p):
                raise ValueError(f"non-canonical: redundant explicit prime {p}")

    def component(self, p: int) -> Matrix:
        for q, m in self.explicit:
            if q == p:
                return m
        return self.free.mod(p)

    def explicit_primes(self) -> tuple:
        return tuple(p for p, _ in self.explicit)

    def to_json(self) -> dict:
        return {"dom": self.dom.to_json(), "cod": self.cod.to_json(),
                "free": self.free.tolist(),
                "explicit": {str(p): m.tolist() for p, m in self.explicit}}

    @staticmethod
    def from_json(obj) -> "EvMorphism":
        dom = EvObject.from_json(obj["dom"])
        cod = EvObject.from_json(obj["cod"])
        free = int_matrix(obj["free"], shape=(cod.f, dom.f))
        expl = {int(p): m for p, m in obj.get("explicit", {}).items()}
        return ev_morphism(dom, cod, free, expl)


def ev_morphism(dom: EvObject, cod: EvObject, free: Matrix,
                explicit: dict | None = None) -> EvMorphism:
    """Smart constructor: accepts raw row lists, canonicalizes."""
    explicit = dict(explicit or {})
    if not isinstance(free, Matrix):
        free = int_matrix(free, shape=(cod.f, dom.f))
    comps = {}
    for p, m in explicit.items():
        if not isinstance(m, Matrix):
            m = Matrix.from_rows(fp(p), m, shape=(cod.dim(p), dom.dim(p)))
        elif m.domain != fp(p):
            m = m.mod(p)
        comps[p] = m
    keep = []
    for p in sorted(comps):
        m = comps[p]
        if dom.dim(p) == dom.f and cod.dim(p) == cod.f and m == free.mod(p):
            continue
        keep.append((p, m))
    return EvMorphism(dom, cod, free, tuple(keep))


class EvConst(ModelCategory):
    name = "evconst"

    def unit(self) -> EvObject:
        return UNIT

    def zero_obj(self) -> EvObject:
        return ZERO

    def dom(self, f: EvMorphism) -> EvObject:
        return f.dom

    def cod(self, f: EvMorphism) -> EvObject:
        return f.cod

    def identity(self, x: EvObject) -> EvMorphism:
        expl = {p: Matrix.identity(fp(p), x.dim(p)) for p in x.exc_primes()}
        return ev_morphism(x, x, Matrix.identity(INT, x.f), expl)

    def compose(self, g: EvMorphism, f: EvMorphism) -> EvMorphism:
        if f.cod != g.dom:
            raise DimensionMismatch("evconst composition boundary mismatch")
        primes = sorted(set(f.explicit_primes()) | set(g.explicit_primes()))
        expl = {p: g.component(p).mul(f.component(p)) for p in primes}
        return ev_morphism(f.dom, g.cod, g.free.mul(f.free), expl)

    def tensor_obj(self, x: EvObject, y: EvObject) -> EvObject:
        primes = set(x.exc_primes()) | set(y.exc_primes())
        return ev_object(x.f * y.f, {p: x.dim(p) * y.dim(p) for p in primes})

    def tensor_mor(self, f: EvMorphism, g: EvMorphism) -> EvMorphism:
        dom = self.tensor_obj(f.dom, g.dom)
        cod = self.tensor_obj(f.cod, g.cod)
        primes = sorted(set(f.explicit_primes()) | set(g.explicit_primes()))
        expl = {p: kronecker(f.component(p), g.component(p)) for p in primes}
        return ev_morphism(dom, cod, kronecker(f.free, g.free), expl)

    @staticmethod
    def _commutation(domain, a: int, b: int) -> Matrix:
        rows = [[0] * (a * b) for _ in range(a * b)]
        for i in range(a):
            for j in range(b):
                rows[j * a + i][i * b + j] = 1
        return Matrix.from_rows(domain, rows, shape=(a * b, a * b))

    def braiding(self, x: EvObject, y: EvObject) -> EvMorphism:
        dom = self.tensor_obj(x, y)
        cod = self.tensor_obj(y, x)
        primes = set(x.exc_primes()) | set(y.exc_primes())
        expl = {p: self._commutation(fp(p), x.dim(p), y.dim(p)) for p in primes}
        return ev_morphism(dom, cod, self._commutation(INT, x.f, y.f), expl)

    def zero_mor(self, x: EvObject, y: EvObject) -> EvMorphism:
        primes = set(x.exc_primes()) | set(y.exc_primes())
        expl = {p: Matrix.zeros(fp(p), y.dim(p), x.dim(p)) for p in primes}
        return ev_morphism(x, y, Matrix.zeros(INT, y.f, x.f), expl)

    def add_mor(self, f: EvMorphism, g: EvMorphism) -> EvMorphism:
        if (f.dom, f.cod) != (g.dom, g.cod):
            raise DimensionMismatch("evconst addition boundary mismatch")
        primes = sorted(set(f.explicit_primes()) | set(g.explicit_primes()))
        expl = {p: f.component(p).add(g.component(p)) for p in primes}
        return ev_morphism(f.dom, f.cod, f.free.add(g.free), expl)

    def negate(self, f: EvMorphism) -> EvMorphism:
        expl = {p: m.scale(-1) for p, m in f.explicit}
        return ev_morphism(f.dom, f.cod, f.free.scale(-1), expl)

    def sub_mor(self, f: EvMorphism, g: EvMorphism) -> EvMorphism:
        return self.add_mor(f, self.negate(g))

    def biproduct(self, x: EvObject, y: EvObject) -> Biproduct:
        primes = set(x.exc_primes()) | set(y.exc_primes())
        obj = ev_object(x.f + y.f, {p: x.dim(p) + y.dim(p) for p in primes})

        def block(domain, rows, cols, fn):
            return Matrix.from_rows(
                domain, [[fn(i, j) for j in range(cols)] for i in range(rows)],
                shape=(rows, cols))

        def mk(dom, cod, fn_free, fn_p):
            expl = {p: block(fp(p), cod.dim(p), dom.dim(p), fn_p(p))
                    for p in primes}
            return ev_morphism(dom, cod, block(INT, cod.f, dom.f, fn_free), expl)

        i1 = mk(x, obj, lambda i, j: 1 if i == j else 0,
                lambda p: lambda i, j: 1 if i == j else 0)
        i2 = mk(y, obj, lambda i, j: 1 if i == x.f + j else 0,
                lambda p: lambda i, j: 1 if i == x.dim(p) + j else 0)
        p1 = mk(obj, x, lambda i, j: 1 if j == i else 0,
                lambda p: lambda i, j: 1 if j == i else 0)
        p2 = mk(obj, y, lambda i, j: 1 if j == x.f + i else 0,
                lambda p: lambda i, j: 1 if j == x.dim(p) + i else 0)
        return Biproduct(obj=obj, inj1=i1, inj2=i2, proj1=p1, proj2=p2)

    def duality(self, x: EvObject) -> DualityDatum:
        xx = self.tensor_obj(x, x)

        def pairing(domain, n, rows, transposed):
            diag = {i * n + i for i in range(n)}
            col = [[1 if k in diag else 0] for k in range(n * n)]
            m = Matrix.from_rows(domain, col, shape=(n * n, 1))
            return m.transpose() if transposed else m

        primes = x.exc_primes()
        eta = ev_morphism(UNIT, xx, pairing(INT, x.f, None, False),
                          {p: pairing(fp(p), x.dim(p), None, False)
                           for p in primes})
        eps = ev_morphism(xx, UNIT, pairing(INT, x.f, None, True),
                          {p: pairing(fp(p), x.dim(p), None, True)
                           for p in primes})
        return DualityDatum(obj=x, dual=x, eta=eta, eps=eps)

    def invert(self, f: EvMorphism) -> EvMorphism:
        if f.dom.f != f.cod.f or any(
                f.dom.dim(p) != f.cod.dim(p)
                for p in set(f.dom.exc_primes()) | set(f.cod.exc_primes())):
            raise NotInvertible("objects have different dimensions")
        free_inv = invert_or_fail(f.free)
        expl = {p: invert_or_fail(m) for p, m in f.explicit}
        return ev_morphism(f.cod, f.dom, free_inv, expl)

    # ----------------------------------------------------------- cofibers

    def cofiber(self, f: EvMorphism) -> Cofiber:
        u, d, _ = smith_normal_form(f.free)
        diag = [d.data[i][i] for i in range(min(d.rows, d.cols))]
        nonzero = [x for x in diag if x != 0]
        k = len(nonzero)
        free_rank = f.cod.f - k
        relevant = set(f.explicit_primes())
        for x in nonzero:
            if x > 1:
                q = 2
                while q * q <= x:
                    if x % q == 0:
                        relevant.add(q)
                        while x % q == 0:
                            x //= q
                    q += 1
                if x > 1:
                    relevant.add(x)
        dims = {}
        quot_expl = {}
        for p in sorted(relevant):
            comp = f.component(p)
            dims[p] = f.cod.dim(p) - rank_fp(comp)
            quot_expl[p] = left_null_basis_fp(comp)
        cobj = ev_object(free_rank, dims)
        q_free = Matrix.from_rows(INT, [list(u.data[i]) for i in range(k, f.cod.f)],
                                  shape=(free_rank, f.cod.f))
        quotient = ev_morphism(f.cod, cobj, q_free, quot_expl)
        return Cofiber(obj=cobj, quotient=quotient, provenance="snf")


def enumerate_homs(x: EvObject, y: EvObject):
    """Yield every morphism x -> y when the hom-set is finite
    (requires x.f * y.f = 0, so the free part is empty)."""
    if x.f * y.f != 0:
        raise ValueError("infinite hom-set: free parts are nonzero")
    cat = EvConst()
    primes = sorted(set(x.exc_primes()) | set(y.exc_primes()))
    shapes = [(p, y.dim(p), x.dim(p)) for p in primes]
    free = Matrix.zeros(INT, y.f, x.f)

    def rec(idx, acc):
        if idx == len(shapes):
            yield ev_morphism(x, y, free, dict(acc))
            return
        p, r, c = shapes[idx]
        total = r * c

        def cells(j, flat):
            if j == total:
                m = Matrix.from_rows(fp(p), [flat[i * c:(i + 1) * c]
                                             for i in range(r)], shape=(r, c))
                acc.append((p, m))
                yield from rec(idx + 1, acc)
                acc.pop()
                return
            for v in range(p):
                yield from cells(j + 1, flat + [v])
        yield from cells(0, [])
    yield from rec(0, [])
    del cat


def hom_group_structure(x: EvObject, y: EvObject) -> dict:
    """The hom-group Hom(x, y) as (free rank, torsion multiplicities).

    Hom = Z^(x.f*y.f) + sum over exceptional primes p of
    Mat_{y.d_p x x.d_p}(F_p); returns {"free": rank, "torsion": {p: dim}}.
    """
    primes = sorted(set(x.exc_primes()) | set(y.exc_primes()))
    torsion = {}
    for p in primes:
        n = x.dim(p) * y.dim(p)
        if n:
            torsion[p] = n
    return {"free": x.f * y.f, "torsion": torsion}

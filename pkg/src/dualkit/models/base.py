"""Uniform computable-category interface shared by the concrete models.

A model category exposes: object canonical form and equality, morphism
equality, identity, composition, tensor, braiding, biproducts, zero
objects/morphisms, duality data, cofibers, and suspension.  Everything
is exact and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..exactlin import NotInvertible


class UnsupportedShape(Exception):
    """A partial operation (e.g. a shape-classified cofiber) rejected its input."""


@dataclass(frozen=True)
class DualityDatum:
    """Self-duality data for an object: unit eta: S -> Xv (x) X and counit
    eps: X (x) Xv -> S, satisfying both triangle equations."""
    obj: Any
    dual: Any
    eta: Any
    eps: Any


@dataclass(frozen=True)
class Biproduct:
    obj: Any
    inj1: Any
    inj2: Any
    proj1: Any
    proj2: Any


@dataclass(frozen=True)
class Cofiber:
    obj: Any
    quotient: Any
    provenance: str = ""


class ModelCategory:
    """Abstract surface; concrete models implement every method below."""

    name: str = "abstract"

    # objects
    def unit(self):  # pragma: no cover - interface
        raise NotImplementedError

    def zero_obj(self):  # pragma: no cover - interface
        raise NotImplementedError

    def obj_eq(self, x, y) -> bool:
        return x == y

    # morphisms
    def dom(self, f):  # pragma: no cover - interface
        raise NotImplementedError

    def cod(self, f):  # pragma: no cover - interface
        raise NotImplementedError

    def mor_eq(self, f, g) -> bool:
        return f == g

    def identity(self, x):  # pragma: no cover - interface
        raise NotImplementedError

    def compose(self, g, f):  # pragma: no cover - interface
        raise NotImplementedError

    def tensor_obj(self, x, y):  # pragma: no cover - interface
        raise NotImplementedError

    def tensor_mor(self, f, g):  # pragma: no cover - interface
        raise NotImplementedError

    def braiding(self, x, y):  # pragma: no cover - interface
        raise NotImplementedError

    def zero_mor(self, x, y):  # pragma: no cover - interface
        raise NotImplementedError

    def add_mor(self, f, g):  # pragma: no cover - interface
        raise NotImplementedError

    def biproduct(self, x, y) -> Biproduct:  # pragma: no cover - interface
        raise NotImplementedError

    def duality(self, x) -> DualityDatum:  # pragma: no cover - interface
        raise NotImplementedError

    def cofiber(self, f) -> Cofiber:  # pragma: no cover - interface
        raise NotImplementedError

    def invert(self, f):  # pragma: no cover - interface
        raise NotImplementedError

    # derived ------------------------------------------------------------

    def suspension(self, x):
        """Suspension computed as the cofiber of x -> 0."""
        return self.cofiber(self.zero_mor(x, self.zero_obj())).obj

    def is_invertible(self, f) -> bool:
        try:
            self.invert(f)
            return True
        except NotInvertible:
            return False

    def compose_many(self, *fs):
        """compose_many(h, g, f) = h o g o f."""
        out = fs[0]
        for f in fs[1:]:
            out = self.compose(out, f)
        return out


def triangle_equations_hold(model: ModelCategory, dd: DualityDatum) -> bool:
    """Check both snake identities for a self-duality datum.

    With eta: S -> Xv (x) X and eps: X (x) Xv -> S these read
    (eps (x) id_X) o (id_X (x) eta) = id_X and
    (id_Xv (x) eps) o (eta (x) id_Xv) = id_Xv.
    """
    x, xv = dd.obj, dd.dual
    idx = model.identity(x)
    idxv = model.identity(xv)
    left = model.compose(model.tensor_mor(dd.eps, idx),
                         model.tensor_mor(idx, dd.eta))
    right = model.compose(model.tensor_mor(idxv, dd.eps),
                          model.tensor_mor(dd.eta, idxv))
    return model.mor_eq(left, idx) and model.mor_eq(right, idxv)


def biproduct_equations_hold(model: ModelCategory, x, y, bp: Biproduct) -> bool:
    """p1 i1 = id_x, p2 i2 = id_y, p1 i2 = 0, p2 i1 = 0,
    i1 p1 + i2 p2 = id (so coproduct and product agree: Houston)."""
    checks = [
        model.mor_eq(model.compose(bp.proj1, bp.inj1), model.identity(x)),
        model.mor_eq(model.compose(bp.proj2, bp.inj2), model.identity(y)),
        model.mor_eq(model.compose(bp.proj1, bp.inj2), model.zero_mor(y, x)),
        model.mor_eq(model.compose(bp.proj2, bp.inj1), model.zero_mor(x, y)),
        model.mor_eq(
            model.add_mor(model.compose(bp.inj1, bp.proj1),
                          model.compose(bp.inj2, bp.proj2)),
            model.identity(bp.obj)),
    ]
    return all(checks)

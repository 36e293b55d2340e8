"""Evaluation of string diagrams in a concrete model category.

An interpretation assigns a model object to every generating object and
a model morphism to every generator.  Cups and caps evaluate through
the model's duality data (the bundled models are strictly self-dual),
braids through the model braiding, and inverse boxes through exact
inversion.
"""

from __future__ import annotations

from .diagram import BRAID, CAP, CUP, GEN, GEN_INV, Diagram, cell_arity
from .signature import Letter


class EvaluationError(Exception):
    """The interpretation does not cover the diagram."""


class Interpretation:
    def __init__(self, model, objects: dict, generators: dict | None = None):
        self.model = model
        self.objects = dict(objects)
        self.generators = dict(generators or {})
        for name, obj in self.objects.items():
            dd = model.duality(obj)
            if not model.obj_eq(dd.dual, dd.obj):
                raise EvaluationError(
                    f"model object for {name} is not strictly self-dual")

    def obj(self, letter: Letter):
        if letter.name not in self.objects:
            raise EvaluationError(f"no object assigned to {letter.name}")
        base = self.objects[letter.name]
        if letter.dual:
            return self.model.duality(base).dual
        return base

    def word_obj(self, w):
        out = self.model.unit()
        for letter in w:
            out = self.model.tensor_obj(out, self.obj(letter))
        return out

    def gen_mor(self, name: str):
        if name not in self.generators:
            raise EvaluationError(f"no morphism assigned to {name}")
        return self.generators[name]


def evaluate(diagram: Diagram, interp: Interpretation):
    """The model morphism denoted by the diagram."""
    model = interp.model
    words = diagram.boundaries()
    out = model.identity(interp.word_obj(diagram.dom))
    for t, cell in enumerate(diagram.slices):
        consumed, produced = cell_arity(diagram.sig, cell, words[t])
        del produced
        w = cell.offset
        if cell.kind == GEN:
            mor = interp.gen_mor(cell.data)
        elif cell.kind == GEN_INV:
            mor = model.invert(interp.gen_mor(cell.data))
        elif cell.kind == BRAID:
            a = interp.obj(words[t][w])
            b = interp.obj(words[t][w + 1])
            if cell.data == 1:
                mor = model.braiding(a, b)
            else:
                mor = model.invert(model.braiding(b, a))
        elif cell.kind == CUP:
            mor = model.duality(interp.obj(cell.data)).eta
        elif cell.kind == CAP:
            mor = model.duality(interp.obj(cell.data)).eps
        else:  # pragma: no cover - exhaustive
            raise EvaluationError(f"unknown cell {cell}")
        left = model.identity(interp.word_obj(words[t][:w]))
        right = model.identity(interp.word_obj(words[t][w + len(consumed):]))
        slice_mor = model.tensor_mor(model.tensor_mor(left, mor), right)
        out = model.compose(slice_mor, out)
    return out

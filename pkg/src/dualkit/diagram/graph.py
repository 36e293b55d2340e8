"""Open-graph semantics and the symmetric-equality decision procedure.

A diagram determines an open graph: generator boxes with typed ports,
wires connecting boundary positions and box ports, and closed loops.
Braids, cups and caps are pure wire routing, so two diagrams have the
same open graph exactly when they are equal in the free symmetric
monoidal category with duals on the signature.  Equality is decided by
a canonical labeling of the box occurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .diagram import BRAID, CAP, CUP, GEN, GEN_INV, Diagram, cell_arity


@dataclass(frozen=True)
class OpenGraph:
    dom: tuple            # boundary words (letters)
    cod: tuple
    boxes: tuple          # occurrence index -> (kind, generator name)
    wires: tuple          # frozensets of two endpoints
    loops: tuple          # sorted base names of closed loops

    # endpoint encodings:
    #   ("dom", i) / ("cod", j) / ("box", occ, "in"|"out", port)


def diagram_to_open_graph(diagram: Diagram) -> OpenGraph:
    """Trace every wire of the diagram through its routing cells."""
    sig = diagram.sig
    words = diagram.boundaries()

    edges = {}      # edge id -> [endpointA, endpointB or None]
    edge_letter = {}
    nxt = [0]

    def new_edge(endpoint, letter):
        eid = nxt[0]
        nxt[0] += 1
        edges[eid] = [endpoint, None]
        edge_letter[eid] = letter
        return eid

    live = [new_edge(("dom", i), letter)
            for i, letter in enumerate(diagram.dom)]
    boxes = []
    routing = {}    # (node, port) -> (node, partner port) for braid/cup/cap

    for t, cell in enumerate(diagram.slices):
        consumed, produced = cell_arity(sig, cell, words[t])
        w = cell.offset
        if cell.kind in (GEN, GEN_INV):
            occ = len(boxes)
            boxes.append((cell.kind, cell.data))
            for k in range(len(consumed)):
                edges[live[w + k]][1] = ("box", occ, "in", k)
            outs = [new_edge(("box", occ, "out", k), produced[k])
                    for k in range(len(produced))]
        else:
            node = ("route", t)
            if cell.kind == BRAID:
                pairs = [(node + ("in", 0), node + ("out", 1)),
                         (node + ("in", 1), node + ("out", 0))]
            elif cell.kind == CUP:
                pairs = [(node + ("out", 0), node + ("out", 1))]
            else:  # CAP
                pairs = [(node + ("in", 0), node + ("in", 1))]
            for a, b in pairs:
                routing[a] = b
                routing[b] = a
            for k in range(len(consumed)):
                edges[live[w + k]][1] = node + ("in", k)
            outs = [new_edge(node + ("out", k), produced[k])
                    for k in range(len(produced))]
        live[w:w + len(consumed)] = outs

    cod = words[-1]
    for j, eid in enumerate(live):
        edges[eid][1] = ("cod", j)

    full_routing = routing

    # index edges by endpoint
    by_endpoint = {}
    for eid, (ea, eb) in edges.items():
        by_endpoint[ea] = eid
        by_endpoint[eb] = eid

    def is_terminal(pt):
        return pt[0] in ("dom", "cod", "box")

    visited = set()
    wires = []
    for eid, (ea, eb) in sorted(edges.items()):
        for start in (ea, eb):
            if not is_terminal(start) or eid in visited:
                continue
            # walk from this terminal to the far terminal
            here_edge, here_end = eid, start
            while True:
                visited.add(here_edge)
                a, b = edges[here_edge]
                far = b if a == here_end else a
                if is_terminal(far):
                    wires.append(frozenset((start, far)))
                    break
                partner = full_routing[far]
                here_edge = by_endpoint[partner]
                here_end = partner

    loops = []
    for eid in sorted(edges.keys()):
        if eid in visited:
            continue
        loops.append(edge_letter[eid].name)
        here_edge, here_end = eid, edges[eid][0]
        while True:
            visited.add(here_edge)
            a, b = edges[here_edge]
            far = b if a == here_end else a
            partner = full_routing[far]
            here_edge = by_endpoint[partner]
            here_end = partner
            if here_edge == eid:
                break

    return OpenGraph(diagram.dom, cod, tuple(boxes), tuple(wires),
                     tuple(sorted(loops)))


def _encode(graph: OpenGraph, perm) -> tuple:
    """Wire multiset encoding under a relabeling of box occurrences."""
    def rename(pt):
        if pt[0] == "box":
            return ("box", perm[pt[1]], pt[2], pt[3])
        return pt

    return tuple(sorted(tuple(sorted(map(rename, wire))) for wire in
                        graph.wires))


@dataclass(frozen=True)
class NormalForm:
    dom: tuple
    cod: tuple
    boxes: tuple
    wires: tuple
    loops: tuple


def normalize_symmetric(diagram: Diagram) -> NormalForm:
    """A canonical form deciding equality in the free symmetric monoidal
    category with duals: box occurrences are relabeled, within each box
    label class, to minimize the wire encoding."""
    graph = diagram_to_open_graph(diagram)
    n = len(graph.boxes)
    groups = {}
    for occ, label in enumerate(graph.boxes):
        groups.setdefault(label, []).append(occ)

    # canonical box order: occurrences sorted by label, then choose the
    # within-class permutation minimizing the wire encoding
    labels_sorted = sorted(groups)
    base = {}
    pos = 0
    for label in labels_sorted:
        for occ in groups[label]:
            base[occ] = pos
            pos += 1

    best = None
    class_lists = [groups[label] for label in labels_sorted]

    def rec(idx, perm):
        nonlocal best
        if idx == len(class_lists):
            enc = _encode(graph, perm)
            if best is None or enc < best:
                best = enc
            return
        occs = class_lists[idx]
        slots = sorted(base[o] for o in occs)
        for assignment in permutations(slots):
            for o, s in zip(occs, assignment):
                perm[o] = s
            rec(idx + 1, perm)

    rec(0, [0] * n)
    canonical_boxes = tuple(label for label in labels_sorted
                            for _ in groups[label])
    return NormalForm(graph.dom, graph.cod, canonical_boxes,
                      best if best is not None else (), graph.loops)

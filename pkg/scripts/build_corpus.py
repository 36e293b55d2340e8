#!/usr/bin/env python3
"""Build the bundled rewrite-trace corpus.

Each trace is constructed programmatically, validated by replay, and
serialized to src/dualkit/diagram/data/<name>.json.  Run from the
repository root:

    python3 scripts/build_corpus.py
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from dualkit.diagram import (Cell, Diagram, Letter, RewriteRule, RewriteTrace,
                             Step, signature, validate_trace, word)

DATA = pathlib.Path(__file__).resolve().parents[1] / \
    "src" / "dualkit" / "diagram" / "data"

T = Letter("T")

# ----------------------------------------------------------- twist corpus
# One dualizable object T with an invertible twist t: T -> T.  The four
# twisted-trivial braiding conditions assert that the braiding (or its
# inverse) on T (x) T is a twist on one strand:
#   twist-right:      b+ = id ^ t        twist-left:      b+ = t ^ id
#   inv-twist-right:  b- = id ^ t^-1     inv-twist-left:  b- = t^-1 ^ id

SIG_T = signature(["T"], {"t": (("T",), ("T",), True)})
W2 = word("T", "T")
W3 = word("T", "T", "T")
WD = word("T^", "T")


def dia(sig, dom, cells):
    return Diagram(sig, dom, tuple(cells))


def rule(rid, kind, lhs, rhs):
    return RewriteRule(rid, kind, lhs, rhs)


def twist_rule(rid, kind):
    table = {
        "twist-right": (1, Cell("gen", 1, "t")),
        "twist-left": (1, Cell("gen", 0, "t")),
        "inv-twist-right": (-1, Cell("gen-inv", 1, "t")),
        "inv-twist-left": (-1, Cell("gen-inv", 0, "t")),
    }
    sign, cell = table[rid]
    return rule(rid, kind, dia(SIG_T, W2, [Cell("braid", 0, sign)]),
                dia(SIG_T, W2, [cell]))


def steps(*tuples):
    return tuple(Step(*t) for t in tuples)


TRACES = []


def trace(name, sig, rules, start, end, step_list):
    TRACES.append(RewriteTrace(name, sig, tuple(rules), start, end,
                               steps(*step_list)))


BP = Cell("braid", 0, 1)
BM = Cell("braid", 0, -1)

# the four conditions imply each other pairwise
trace("twist-right-to-left", SIG_T, [twist_rule("twist-right", "hypothesis")],
      dia(SIG_T, W2, [BP]), dia(SIG_T, W2, [Cell("gen", 0, "t")]),
      [("braid-cancel-rev", "bwd", 0, 0), ("twist-right", "fwd", 1, 0),
       ("braid-nat", "bwd", 0, 0), ("braid-cancel-rev", "fwd", 1, 0)])

trace("twist-left-to-right", SIG_T, [twist_rule("twist-left", "hypothesis")],
      dia(SIG_T, W2, [BP]), dia(SIG_T, W2, [Cell("gen", 1, "t")]),
      [("braid-cancel", "bwd", 1, 0), ("twist-left", "fwd", 1, 0),
       ("braid-nat", "fwd", 1, 0), ("braid-cancel", "fwd", 0, 0)])

trace("twist-right-to-inverse-left", SIG_T,
      [twist_rule("twist-right", "hypothesis")],
      dia(SIG_T, W2, [BM]), dia(SIG_T, W2, [Cell("gen-inv", 0, "t")]),
      [("inv-cancel-rev:t", "bwd", 0, 0), ("braid-nat", "fwd", 1, 0),
       ("twist-right", "bwd", 2, 0), ("braid-cancel-rev", "fwd", 1, 0)])

trace("inverse-twist-left-to-right", SIG_T,
      [twist_rule("inv-twist-left", "hypothesis")],
      dia(SIG_T, W2, [BP]), dia(SIG_T, W2, [Cell("gen", 1, "t")]),
      [("inv-cancel:t", "bwd", 1, 0), ("inv-twist-left", "bwd", 2, 0),
       ("braid-nat", "fwd", 1, 0), ("braid-cancel", "fwd", 0, 0)])

trace("twist-left-to-inverse-right", SIG_T,
      [twist_rule("twist-left", "hypothesis")],
      dia(SIG_T, W2, [BM]), dia(SIG_T, W2, [Cell("gen-inv", 1, "t")]),
      [("inv-cancel-rev:t", "bwd", 0, 1), ("braid-nat", "fwd", 1, 0),
       ("twist-left", "bwd", 2, 0), ("braid-cancel-rev", "fwd", 1, 0)])

trace("inverse-twist-right-to-left", SIG_T,
      [twist_rule("inv-twist-right", "hypothesis")],
      dia(SIG_T, W2, [BP]), dia(SIG_T, W2, [Cell("gen", 0, "t")]),
      [("inv-cancel:t", "bwd", 1, 1), ("inv-twist-right", "bwd", 2, 0),
       ("braid-nat", "fwd", 1, 0), ("braid-cancel", "fwd", 0, 0)])

# a twisted-trivial braiding collapses overlapping crossings
trace("crossings-collapse", SIG_T, [twist_rule("twist-right", "hypothesis")],
      dia(SIG_T, W3, [Cell("braid", 0, 1), Cell("braid", 1, -1)]),
      dia(SIG_T, W3, []),
      [("twist-right", "fwd", 0, 0), ("braid-nat", "fwd", 0, 1),
       ("twist-right", "bwd", 1, 1), ("braid-cancel-rev", "fwd", 0, 1)])

# both Yang-Baxter sides collapse to the same twisted form
trace("twisted-yang-baxter", SIG_T, [twist_rule("twist-right", "hypothesis")],
      dia(SIG_T, W3, [Cell("braid", 0, 1), Cell("braid", 1, 1),
                      Cell("braid", 0, 1)]),
      dia(SIG_T, W3, [Cell("braid", 1, 1), Cell("braid", 0, 1),
                      Cell("braid", 1, 1)]),
      [("twist-right", "fwd", 0, 0), ("braid-nat", "fwd", 0, 1),
       ("interchange", "fwd", 1, 2), ("twist-right", "bwd", 2, 1)])

# the twist of a twisted-trivially braided dualizable object is the
# closed-loop Euler scalar: b+ = id ^ id ^ (eps o b- o eta)
trace("dual-euler-twist", SIG_T,
      [twist_rule("inv-twist-left", "lemma"),
       twist_rule("inv-twist-right", "lemma")],
      dia(SIG_T, W2, [BP]),
      dia(SIG_T, W2, [Cell("cup", 2, T), Cell("braid", 2, -1),
                      Cell("cap", 2, T)]),
      [("triangle-A", "bwd", 0, 1), ("braid-cancel-rev", "bwd", 1, 2),
       ("cupcap-slide", "fwd", 2, 2), ("interchange", "fwd", 3, 2),
       ("inv-twist-left", "fwd", 2, 1), ("inv-twist-right", "bwd", 2, 0),
       ("braid-cancel-rev", "fwd", 2, 0)])

# untwisting: on E = T-dual ^ T with r = (id ^ t) o eta, i = eps o braid,
# the splitting r o i = id_E and stability (i o r) ^ id_E = id_E hold
trace("untwist-splitting", SIG_T, [twist_rule("twist-left", "lemma")],
      dia(SIG_T, WD, [Cell("braid", 0, 1), Cell("cap", 0, T),
                      Cell("cup", 0, T), Cell("gen", 1, "t")]),
      dia(SIG_T, WD, []),
      [("interchange", "fwd", 1, 0), ("interchange", "fwd", 2, 2),
       ("twist-left", "bwd", 2, 1), ("cupcap-slide", "fwd", 2, 1),
       ("interchange", "fwd", 1, 0), ("triangle-B", "fwd", 2, 0),
       ("braid-cancel", "fwd", 0, 0)])

trace("untwist-stability", SIG_T, [twist_rule("twist-left", "lemma")],
      dia(SIG_T, WD, [Cell("cup", 0, T), Cell("gen", 1, "t"),
                      Cell("braid", 0, 1), Cell("cap", 0, T)]),
      dia(SIG_T, WD, []),
      [("braid-cancel-rev", "bwd", 1, 2), ("interchange", "fwd", 2, 2),
       ("interchange", "fwd", 3, 2), ("interchange", "fwd", 4, 2),
       ("twist-left", "bwd", 2, 1), ("interchange", "fwd", 0, 0),
       ("cupcap-slide", "fwd", 1, 0), ("braid-cancel-rev", "fwd", 2, 0),
       ("triangle-A", "fwd", 1, 0), ("braid-cancel-rev", "fwd", 0, 0)])

# -------------------------------------------------------- smashing corpus
# E carries an invertible unit rid: S -> E (locally the unit map r is an
# equivalence); "unit-def" identifies rid with r.

SIG_E = signature(["E"], {"rid": ((), ("E",), True), "r": ((), ("E",))})
E = Letter("E")
WE = word("E")
WEE = word("E", "E")

UNIT_DEF = rule("unit-def", "definition",
                dia(SIG_E, (), [Cell("gen", 0, "rid")]),
                dia(SIG_E, (), [Cell("gen", 0, "r")]))

UNIT_COMMUTES = rule("unit-commutes", "lemma",
                     dia(SIG_E, WE, [Cell("gen", 0, "r")]),
                     dia(SIG_E, WE, [Cell("gen", 1, "r")]))

SIG_F = signature(["E", "X", "Y"], {"rid": ((), ("E",), True),
                                    "f": (("X",), ("Y",))})

# smashing with an invertible unit is faithful: conjugation by rid
# recovers any morphism
trace("smashing-faithfulness", SIG_F, [],
      dia(SIG_F, word("X"), [Cell("gen", 0, "rid"), Cell("gen", 1, "f"),
                             Cell("gen-inv", 0, "rid")]),
      dia(SIG_F, word("X"), [Cell("gen", 0, "f")]),
      [("interchange", "fwd", 0, 0), ("inv-cancel:rid", "fwd", 1, 0)])

# the two unit maps E -> E ^ E agree: r ^ id = id ^ r
trace("smashing-unit-commutes", SIG_E, [UNIT_DEF],
      dia(SIG_E, WE, [Cell("gen", 0, "r")]),
      dia(SIG_E, WE, [Cell("gen", 1, "r")]),
      [("inv-cancel-rev:rid", "bwd", 0, 0), ("unit-def", "fwd", 1, 0),
       ("interchange", "fwd", 1, 0), ("unit-def", "bwd", 1, 0),
       ("inv-cancel-rev:rid", "fwd", 0, 0)])

# an idempotent with invertible unit has trivial braiding on E ^ E
trace("smashing-trivial-braiding", SIG_E, [UNIT_DEF, UNIT_COMMUTES],
      dia(SIG_E, WEE, [Cell("braid", 0, 1)]),
      dia(SIG_E, WEE, []),
      [("inv-cancel-rev:rid", "bwd", 0, 0), ("unit-def", "fwd", 1, 0),
       ("unit-slide+", "fwd", 1, 0), ("unit-commutes", "bwd", 1, 0),
       ("unit-def", "bwd", 1, 0), ("inv-cancel-rev:rid", "fwd", 0, 0)])

# ---------------------------------------------------------- clopen corpus
# r: S -> E with inclusions i, i2: E -> S; splitting r o i = id_E as a
# one-cell-context rule, stability (i o r) ^ id_E = id_E likewise.

SIG_C = signature(["E"], {"r": ((), ("E",)), "i": (("E",), ()),
                          "i2": (("E",), ())})
WCE = word("E")
WCEE = word("E", "E")


def split_rule(rid, inc):
    return rule(rid, "hypothesis",
                dia(SIG_C, WCE, [Cell("gen", 0, inc), Cell("gen", 0, "r")]),
                dia(SIG_C, WCE, []))


STAB_1 = rule("stability-i", "hypothesis",
              dia(SIG_C, WCE, [Cell("gen", 0, "r"), Cell("gen", 0, "i")]),
              dia(SIG_C, WCE, []))

# a clopen inclusion splitting r is unique
trace("clopen-inclusion-unique", SIG_C,
      [split_rule("splitting-i2", "i2"), STAB_1],
      dia(SIG_C, WCE, [Cell("gen", 0, "i")]),
      dia(SIG_C, WCE, [Cell("gen", 0, "i2")]),
      [("splitting-i2", "bwd", 0, 0), ("interchange", "fwd", 0, 0),
       ("interchange", "fwd", 1, 1), ("stability-i", "fwd", 0, 0)])

# the reduction idempotent acts identically on either smash factor
trace("clopen-retract-idempotent", SIG_C, [split_rule("splitting-i", "i")],
      dia(SIG_C, WCEE, [Cell("gen", 0, "i"), Cell("gen", 0, "r")]),
      dia(SIG_C, WCEE, [Cell("gen", 1, "i"), Cell("gen", 1, "r")]),
      [("splitting-i", "fwd", 0, 0), ("splitting-i", "bwd", 0, 1)])


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for old in DATA.glob("*.json"):
        old.unlink()
    bad = 0
    for tr in TRACES:
        report = validate_trace(tr)
        status = "ok" if report.ok else f"FAILED: {report.message}"
        print(f"{tr.name:32s} {len(tr.steps):2d} steps  {status}")
        if not report.ok:
            bad += 1
            continue
        path = DATA / f"{tr.name}.json"
        path.write_text(json.dumps(tr.to_json(), indent=2, sort_keys=True)
                        + "\n")
    print(f"{len(TRACES) - bad}/{len(TRACES)} traces written to {DATA}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

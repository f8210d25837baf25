#!/usr/bin/env python3
"""Smoke test for the ricci_py extension module.

Build the module first:

    cargo build --release -p ricci-py
    cp target/release/libricci_py.so python/ricci_py.so

then run:  python3 python/smoke_test.py
"""

import json
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import ricci_py  # noqa: E402


def frac(s):
    return Fraction(s)


def main():
    # complete graph: kappa = n/(n-1) on every edge
    k6 = ricci_py.Graph.complete(6)
    assert k6.vertex_count() == 6 and k6.edge_count() == 15
    assert frac(k6.kappa_lly(0, 1)) == Fraction(6, 5)
    low, edge = k6.ricci_lower()
    assert frac(low) == Fraction(6, 5) and edge == (0, 1)

    # sharpness family: designated edge has kappa = -1/(2l), both routes
    g, (x, y) = ricci_py.Graph.sharpness(2)
    assert g.vertex_count() == 9 and g.min_degree() == 4
    assert frac(g.kappa_lly(x, y)) == Fraction(-1, 4)
    assert frac(g.kappa_lly_assignment(x, y)) == Fraction(-1, 4)
    assert frac(g.kappa_alpha(x, y, "1/5")) == Fraction(-1, 5)

    # idleness function: ends at (1, 0), at most 3 linear pieces
    bps = [(frac(a), frac(v)) for a, v in g.idleness_breakpoints(x, y)]
    assert bps[0][0] == 0 and bps[-1] == (1, 0)
    assert len(bps) - 1 <= 3

    # metric queries
    c6 = ricci_py.Graph.cycle(6)
    assert c6.distance(0, 3) == 3
    assert c6.sphere(0, 2) == [2, 4]
    assert frac(c6.kappa_lly(0, 1)) == 0

    # theorem checks round-trip through JSON
    report = json.loads(ricci_py.verify_threshold(k6))
    assert report["hypothesis_holds"] and report["conclusion_holds"]
    assert not report["violation"]
    report = json.loads(ricci_py.verify_sharpness(3))
    assert report["conclusion_holds"]
    assert frac(report["witness_kappa"]) == Fraction(-1, 6)

    reports = [json.loads(r) for r in ricci_py.sweep(6, 12, 5, 42, "threshold")]
    assert len(reports) == 5
    assert not any(r["violation"] for r in reports)

    # error paths surface as ValueError
    try:
        k6.kappa_lly(0, 99)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for out-of-range vertex")

    print("ricci_py smoke test: OK")


if __name__ == "__main__":
    main()

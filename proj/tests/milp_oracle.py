#!/usr/bin/env python3
"""Cross-checks `dbic code` and `dbic check` against an independent model.

The graph comes from networkx, and minimum t-identifying codes come from a
0/1 integer program solved by HiGHS (scipy.optimize.milp): one variable per
vertex, one covering row per ball and per symmetric difference of two balls.
"""

import itertools
import json
import subprocess
import sys

import networkx as nx
import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

CASES = [(2, 3, 1), (3, 2, 1), (2, 4, 1), (2, 5, 1), (3, 3, 1), (3, 3, 2), (2, 4, 2), (2, 2, 1)]


def de_bruijn(d, n):
    symbols = "".join(str(a) for a in range(d))
    g = nx.Graph()
    g.add_nodes_from("".join(w) for w in itertools.product(symbols, repeat=n))
    for w in itertools.product(symbols, repeat=n + 1):
        w = "".join(w)
        if w[:-1] != w[1:]:
            g.add_edge(w[:-1], w[1:])
    return g


def minimum_code(g, t):
    nodes = sorted(g.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    dist = dict(nx.all_pairs_shortest_path_length(g, cutoff=t))
    balls = [frozenset(index[u] for u in dist[v]) for v in nodes]
    if len(set(balls)) < len(balls):
        return None
    rows = set(balls)
    rows.update(a ^ b for a, b in itertools.combinations(balls, 2))
    a = np.zeros((len(rows), len(nodes)))
    for r, row in enumerate(rows):
        a[r, list(row)] = 1
    res = milp(np.ones(len(nodes)), constraints=LinearConstraint(a, 1, np.inf),
               integrality=np.ones(len(nodes)), bounds=Bounds(0, 1))
    return round(res.fun)


def main(dbic):
    failures = 0
    for d, n, t in CASES:
        expected = minimum_code(de_bruijn(d, n), t)
        proc = subprocess.run([dbic, "code", str(d), str(n), str(t)],
                              capture_output=True, text=True)
        out = json.loads(proc.stdout)
        if expected is None:
            ok = proc.returncode == 1 and out.get("identifiable") is False
        else:
            ok = proc.returncode == 0 and out["optimal"] and out["size"] == expected
        print(f"{'ok  ' if ok else 'FAIL'} B({d},{n}) t={t}: milp={expected} "
              f"dbic={out.get('size')} exit={proc.returncode}")
        failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))

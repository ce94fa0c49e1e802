"""Independent brute-force derivation of expected values frozen into the C++ tests.

Groups are built here from their own multiplication rules; nothing is read
from the C++ library. Run: python3 tests/oracle/derive_expected.py
"""
import itertools
import json
import math
import os
import sys

import networkx as nx


class Group:
    def __init__(self, elements, mul, name):
        self.els = list(elements)
        self.idx = {e: i for i, e in enumerate(self.els)}
        self.n = len(self.els)
        self.t = [[self.idx[mul(a, b)] for b in self.els] for a in self.els]
        self.name = name
        self.e = next(i for i in range(self.n) if all(self.t[i][j] == j for j in range(self.n)))

    def order(self, x):
        k, y = 1, x
        while y != self.e:
            y, k = self.t[y][x], k + 1
        return k

    def closure(self, gens):
        s = {self.e} | set(gens)
        frontier = list(s)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    for p in (self.t[a][g], self.t[g][a]):
                        if p not in s:
                            s.add(p)
                            nxt.append(p)
            frontier = nxt
        return s

    def cyclic_pair(self, x, y):
        s = self.closure([x, y])
        return max(self.order(z) for z in s) == len(s)


def cyclic_data(g):
    cyc_of = [{y for y in range(g.n) if g.cyclic_pair(x, y)} for x in range(g.n)]
    cyc = set(range(g.n))
    for s in cyc_of:
        cyc &= s
    return cyc_of, cyc


def noncyclic_graph(g, cyc_of, cyc):
    verts = [x for x in range(g.n) if x not in cyc]
    G = nx.Graph()
    G.add_nodes_from(verts)
    for a, b in itertools.combinations(verts, 2):
        if b not in cyc_of[a]:
            G.add_edge(a, b)
    return G


def omega(G):
    return nx.max_weight_clique(G, weight=None)[1]


def diam(G):
    return nx.diameter(G) if nx.is_connected(G) else "inf"


def zn(*mods):
    els = itertools.product(*[range(m) for m in mods])
    return Group(els, lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, mods)), "x".join(f"Z{m}" for m in mods))


def semidirect(n, m, r):
    # (i, j) = c^i d^j with d c d^-1 = c^r
    def mul(a, b):
        return ((a[0] + pow(r, a[1], n) * b[0]) % n, (a[1] + b[1]) % m)
    return Group(itertools.product(range(n), range(m)), mul, f"Z{n}:Z{m}[{r}]")


def perm_group(gens, name):
    deg = len(gens[0])
    comp = lambda p, q: tuple(q[p[i]] for i in range(deg))
    els = {tuple(range(deg))}
    frontier = list(els)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = comp(a, g)
                if b not in els:
                    els.add(b)
                    nxt.append(b)
        frontier = nxt
    return Group(sorted(els), comp, name)


def product(g, h):
    els = [(a, b) for a in range(g.n) for b in range(h.n)]
    return Group(els, lambda x, y: (g.t[x[0]][y[0]], h.t[x[1]][y[1]]), g.name + "x" + h.name)


def heisenberg():
    def mul(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return ((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3)
    return Group(itertools.product(range(3), repeat=3), mul, "Heis27")


def domination(G, cap=3):
    nodes = list(G.nodes)
    for k in range(1, cap + 1):
        for S in itertools.combinations(nodes, k):
            covered = set(S)
            for v in S:
                covered |= set(G[v])
            if len(covered) == len(nodes):
                return k
    return f">{cap}"


def summary(g):
    cyc_of, cyc = cyclic_data(g)
    G = noncyclic_graph(g, cyc_of, cyc)
    H = nx.complement(G)
    return {
        "order": g.n,
        "cyc": len(cyc),
        "vertices": G.number_of_nodes(),
        "edges": G.number_of_edges(),
        "omega": omega(G),
        "diam_C": diam(G),
        "diam_Cbar": diam(H),
        "planar": nx.check_planarity(G)[0],
        "gamma_C": domination(G) if g.n <= 36 else None,
        "gamma_Cbar": domination(H) if g.n <= 36 else None,
    }


def main():
    out = {}
    s3 = perm_group([(1, 0, 2), (1, 2, 0)], "S3")
    q8 = perm_group([(1, 2, 3, 0, 5, 6, 7, 4), (4, 7, 6, 5, 2, 1, 0, 3)], "Q8")
    d8 = semidirect(4, 2, 3)
    f42 = semidirect(7, 6, 3)
    for g in [zn(2, 2), s3, q8, d8, zn(4, 2), zn(3, 9), zn(3, 3, 3), semidirect(9, 3, 4), heisenberg(),
              zn(2, 2, 3, 3)]:
        out[g.name] = summary(g)
        print(g.name, out[g.name], file=sys.stderr, flush=True)

    # Centralizer of an order-3 element of F42 inside C2 x F42, and the diameters.
    c2f = product(zn(2), f42)
    d = next(x for x in range(c2f.n) if c2f.els[x][0] == 0 and f42.order(c2f.els[x][1]) == 3)
    out["C2xF42"] = summary(c2f)
    out["C2xF42"]["centralizer_order3"] = sum(1 for y in range(c2f.n) if c2f.t[d][y] == c2f.t[y][d])
    out["F42_center"] = sum(1 for x in range(f42.n) if all(f42.t[x][y] == f42.t[y][x] for y in range(f42.n)))

    # C6 x S3: |Cyc_G(x)| for the order-3 element of the C6 factor.
    c6s3 = product(zn(6), s3)
    x = c6s3.idx[(zn(6).idx[(2,)], s3.e)]
    cyc_of, cyc = cyclic_data(c6s3)
    out["C6xS3"] = {"cyc": len(cyc), "cyc_of_x": len(cyc_of[x]), "x_order": c6s3.order(x)}

    # Five-element set {c, d, cd, c^-1 d, c d^-1} with d^-1 c d = c^4 in Z9 : Z3.
    # In (i, j) = c^i d^j coordinates with d c d^-1 = c^4 the relation d^-1 c d = c^4
    # holds for e = d^-1, so both readings are checked.
    g = semidirect(9, 3, 4)
    inv = lambda a: next(b for b in range(g.n) if g.t[a][b] == g.e)
    c = g.idx[(1, 0)]
    for label, dd in (("d", g.idx[(0, 1)]), ("d_inverse", inv(g.idx[(0, 1)]))):
        conj = g.t[g.t[inv(dd)][c]][dd]
        relation = conj == g.idx[(4, 0)]
        five = [c, dd, g.t[c][dd], g.t[inv(c)][dd], g.t[c][inv(dd)]]
        clique = len(set(five)) == 5 and all(not g.cyclic_pair(a, b) for a, b in itertools.combinations(five, 2))
        out[f"Z9:Z3 five-set with {label}"] = {"relation_d^-1cd=c^4": relation, "is_clique": clique,
                                               "elements": [list(g.els[v]) for v in five]}

    json.dump(out, sys.stdout, indent=1, default=str)
    print()


if __name__ == "__main__":
    main()

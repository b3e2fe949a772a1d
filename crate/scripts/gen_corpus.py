#!/usr/bin/env python3
"""Writes every non-isomorphic simple graph on 0..=8 vertices in graph6 form.

Graphs on up to 7 vertices come from the networkx graph atlas. Graphs on 8
vertices are obtained by attaching a new vertex to every subset of each
7-vertex graph and removing isomorphic duplicates.

Usage: gen_corpus.py OUT
"""
import itertools
import sys
from collections import defaultdict

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

EXPECTED = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]  # OEIS A000088


def invariant(g):
    degs = tuple(sorted(d for _, d in g.degree()))
    return (g.number_of_edges(), degs, nx.weisfeiler_lehman_graph_hash(g, iterations=3))


def main(out):
    by_n = defaultdict(list)
    for g in graph_atlas_g():
        by_n[g.number_of_nodes()].append(g)
    by_n[0] = [nx.empty_graph(0)]

    buckets = defaultdict(list)
    for g in by_n[7]:
        for r in range(8):
            for nbrs in itertools.combinations(range(7), r):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, x) for x in nbrs)
                key = invariant(h)
                if not any(nx.is_isomorphic(h, k) for k in buckets[key]):
                    buckets[key].append(h)
    eight = [h for hs in buckets.values() for h in hs]
    eight.sort(key=lambda h: (h.number_of_edges(), nx.to_graph6_bytes(h, header=False)))
    by_n[8] = eight

    with open(out, "wb") as f:
        for n in range(9):
            assert len(by_n[n]) == EXPECTED[n], (n, len(by_n[n]))
            for g in by_n[n]:
                f.write(nx.to_graph6_bytes(g, header=False))


if __name__ == "__main__":
    main(sys.argv[1])

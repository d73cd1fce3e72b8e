#!/usr/bin/env python3
"""Generate graph6 corpora of small connected graphs for the test fixtures.

Connected triangle-free graphs are grown one vertex at a time: every such
graph on n vertices has a non-cut vertex whose removal leaves a connected
triangle-free graph on n-1 vertices, so attaching a new vertex to each
nonempty independent set of every (n-1)-vertex graph reaches all of them.
Isomorphic duplicates are removed with a WL-hash bucket plus an exact
isomorphism test.

Usage: gen_corpus.py MAX_N OUT.g6
"""
import itertools
import sys

import networkx as nx


def independent_subsets(g):
    nodes = sorted(g.nodes)
    for r in range(1, len(nodes) + 1):
        for s in itertools.combinations(nodes, r):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                yield s


def extend(graphs, n):
    buckets = {}
    out = []
    for g in graphs:
        for s in independent_subsets(g):
            h = g.copy()
            h.add_node(n - 1)
            h.add_edges_from((n - 1, v) for v in s)
            key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, o) for o in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return out


def main():
    max_n = int(sys.argv[1])
    path = sys.argv[2]
    level = [nx.empty_graph(1)]
    by_n = {1: level}
    for n in range(2, max_n + 1):
        level = extend(level, n)
        by_n[n] = level
        print(f"n={n}: {len(level)}", file=sys.stderr)
    with open(path, "w") as f:
        for n in range(1, max_n + 1):
            lines = sorted(
                nx.to_graph6_bytes(g, header=False).decode().strip()
                for g in by_n[n]
            )
            for line in lines:
                f.write(line + "\n")


if __name__ == "__main__":
    main()

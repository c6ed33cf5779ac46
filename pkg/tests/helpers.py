"""Shared fixtures-in-spirit for the test suite: random graphs and oracles."""

import random

from degreesearch import Graph, build_graph


def random_graph(rng, n, p, ensure_connected=False):
    """Erdos-Renyi style G(n, p) graph, optionally stitched connected."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if ensure_connected:
        order = list(range(n))
        rng.shuffle(order)
        for a, b in zip(order, order[1:]):
            edges.append((a, b))
    return build_graph(edges, n)


def random_simple_path(rng, g, max_len=30):
    """Random walk without node revisits; always a valid simple route."""
    start = rng.randrange(g.node_count)
    nodes = [start]
    seen = {start}
    while len(nodes) <= max_len:
        fresh = [w for w in g.neighbors(nodes[-1]) if w not in seen]
        if not fresh:
            break
        nxt = fresh[rng.randrange(len(fresh))]
        nodes.append(nxt)
        seen.add(nxt)
    return nodes


def floyd_warshall(g):
    """Brute-force all-pairs distances; None where unreachable."""
    n = g.node_count
    inf = float("inf")
    dist = [[inf] * n for _ in range(n)]
    for u in range(n):
        dist[u][u] = 0
        for v in g.neighbors(u):
            dist[u][v] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return [[None if d == inf else int(d) for d in row] for row in dist]


def check_graph_invariants(g):
    assert isinstance(g, Graph)
    assert g.node_count == len(g.adjacency)
    for u, row in enumerate(g.adjacency):
        assert list(row) == sorted(set(row)), f"adjacency of {u} not sorted unique"
        assert u not in row, f"self-loop at {u}"
        assert g.degree(u) == len(row)
        for v in row:
            assert 0 <= v < g.node_count
            assert u in g.adjacency[v], f"edge {u}-{v} not symmetric"
    assert g.edge_count == sum(g.degrees) // 2


def summarize_csv_rows(rows):
    """Recompute per-variant summary statistics from parsed CSV rows.

    Mirrors the documented summary definitions so the pipeline output can
    be cross-checked from its own records file.  Returns a dict keyed by
    variant label with plain-dict summaries (histogram keys as ints).
    """
    order = []
    grouped = {}
    for row in rows:
        label = row["variant"]
        if label not in grouped:
            grouped[label] = []
            order.append(label)
        grouped[label].append(row)
    def mean(values):
        values = list(values)
        return sum(values) / len(values) if values else None

    out = {}
    for label in order:
        rows_v = grouped[label]
        ok = [r for r in rows_v if r["outcome"] == "found"]
        walks = [int(r["walk_steps"]) for r in ok]
        refined = [int(r["refined_length"]) for r in ok if r["refined_length"] != ""]
        hist = {}
        for n in walks:
            hist[n] = hist.get(n, 0) + 1
        out[label] = {
            "total_searches": len(rows_v),
            "successful_searches": len(ok),
            "success_rate": len(ok) / len(rows_v) if rows_v else 0.0,
            "mean_walk_steps": mean(walks),
            "mean_route_length": mean(int(r["route_length"]) for r in ok),
            "mean_refined_length": mean(refined),
            "max_refined_length": max(refined) if refined else None,
            "fraction_under_10": (
                sum(1 for n in walks if n < 10) / len(walks) if walks else None
            ),
            "mean_consults": mean(int(r["consults"]) for r in ok),
            "length_histogram": dict(sorted(hist.items())),
            "oracle_mean_shortest_path": mean(
                int(r["oracle_distance"]) for r in ok if r["oracle_distance"] != ""
            ),
        }
    return out


def make_rng(seed):
    return random.Random(seed)

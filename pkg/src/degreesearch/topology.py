"""Edge-list file I/O and label remapping.

File format: one edge per line as two whitespace-separated labels, ``#``
lines are comments, blank lines are skipped.  Labels are arbitrary strings
and get remapped to dense internal IDs.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .errors import EdgeListError
from .graphs import Graph, build_graph

__all__ = ["IdMap", "load_edge_list", "save_edge_list"]


@dataclass(frozen=True)
class IdMap:
    """Bijection between external labels and dense internal IDs."""

    external_to_internal: dict[str, int]
    internal_to_external: list[str]


def _label_order(labels: set[str]):
    # Sorting by numeric value keeps files written by save_edge_list mapping
    # back to the identical internal IDs; mixed or non-numeric labels fall
    # back to plain string order.  Either way the assignment is independent
    # of line order in the file.
    try:
        return sorted(labels, key=lambda s: (int(s), s))
    except ValueError:
        return sorted(labels)


def load_edge_list(path, take_giant_component: bool = True) -> tuple[Graph, IdMap]:
    """Read a graph from an edge-list file.

    Args:
        path: File to read (UTF-8).
        take_giant_component: Keep only the largest connected component;
            ties go to the component containing the smallest label.

    Returns:
        ``(graph, id_map)`` where the map covers exactly the kept nodes.

    Raises:
        EdgeListError: On a malformed line, or when no edges survive
            filtering.
        OSError: If the file cannot be read.
    """
    pairs: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise EdgeListError(
                    f"expected two tokens, got {len(tokens)}",
                    path=path,
                    line_no=line_no,
                )
            a, b = tokens
            if a == b:
                continue
            pairs.add((a, b) if a < b else (b, a))
    if not pairs:
        raise EdgeListError("no usable edges in file", path=path)

    labels = {a for a, _ in pairs} | {b for _, b in pairs}
    if take_giant_component:
        labels = _giant_component(labels, pairs)
        pairs = {(a, b) for a, b in pairs if a in labels}

    ordered = _label_order(labels)
    external_to_internal = {label: i for i, label in enumerate(ordered)}
    edges = [
        (external_to_internal[a], external_to_internal[b]) for a, b in pairs
    ]
    graph = build_graph(edges, len(ordered))
    return graph, IdMap(external_to_internal, ordered)


def _giant_component(
    labels: set[str], pairs: set[tuple[str, str]]
) -> set[str]:
    adjacency: dict[str, list[str]] = {label: [] for label in labels}
    for a, b in pairs:
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen: set[str] = set()
    best: set[str] = set()
    for start in _label_order(labels):
        if start in seen:
            continue
        component = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if v not in component:
                    component.add(v)
                    queue.append(v)
        seen |= component
        # Starts are visited smallest-label first, so on a size tie the
        # component containing the smallest label wins.
        if len(component) > len(best):
            best = component
    return best


def save_edge_list(g: Graph, path) -> None:
    """Write a graph as a sorted edge list.

    Each edge appears once as ``u v`` with ``u < v``, lines sorted, LF
    newlines.  Loading the result back reproduces the adjacency exactly for
    any graph without isolated nodes.
    """
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w", encoding="utf-8", newline="\n") as handle:
        for u in range(g.node_count):
            for v in g.adjacency[u]:
                if v > u:
                    handle.write(f"{u} {v}\n")
    os.replace(tmp, path)

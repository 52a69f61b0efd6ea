"""Graphical ground sets and external/internal parking functions of K_{n+1}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from . import spaces
from .matroid import GroundSet


class Disconnected(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices ``0..n``."""

    n: int
    edges: tuple

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(itertools.combinations(range(n + 1), 2)))

    def is_connected(self) -> bool:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n + 1))
        g.add_edges_from(self.edges)
        return nx.is_connected(g)


def graph_to_groundset(G: Graph) -> GroundSet:
    """Edge ``{v_i, v_j}`` (i < j) becomes ``e_i - e_j`` with ``e_0 = 0``."""
    if not G.is_connected():
        raise Disconnected("graph is not connected")
    cols = []
    for a, b in G.edges:
        i, j = min(a, b), max(a, b)
        if i == j:
            raise ValueError("loops are not allowed")
        v = [0] * G.n
        if i:
            v[i - 1] += 1
        v[j - 1] -= 1
        cols.append(tuple(v))
    return GroundSet(tuple(cols))


def _upper_set(r, v) -> list:
    return [u for u in range(len(r)) if r[u] >= r[v]]


def is_external_parking(r) -> bool:
    n = len(r)
    for v in range(n):
        up = _upper_set(r, v)
        bound = n - r[v] + 1
        if len(up) < bound:
            continue
        if len(up) == bound and r[min(up)] == r[v]:
            continue
        return False
    return True


def is_internal_parking(r) -> bool:
    n = len(r)
    for v in range(n):
        up = _upper_set(r, v)
        bound = n - r[v]
        if len(up) < bound:
            continue
        top = max(up)
        if len(up) == bound and any(r[u] == r[v] for u in up if u != top):
            continue
        return False
    return True


def _enumerate(n: int, pred, bound: int | None = None) -> list:
    bound = n if bound is None else bound
    return [r for r in itertools.product(range(bound + 1), repeat=n) if pred(r)]


def external_parking(n: int, bound: int | None = None) -> list:
    """All external parking functions ``r: {1..n} -> Z+`` (as tuples), entries <= ``bound``."""
    return _enumerate(n, is_external_parking, bound)


def internal_parking(n: int, bound: int | None = None) -> list:
    return _enumerate(n, is_internal_parking, bound)


def parking_basis_match(n: int) -> dict:
    """Match external parking functions to the ``Q_I`` basis of P+(K_{n+1}).

    A parking function ``r`` may be matched with ``Q_I`` when ``t^r`` has a
    nonzero coefficient in ``Q_I`` (which forces equal degrees).
    """
    X = graph_to_groundset(Graph.complete(n))
    R = external_parking(n)
    Q = spaces.q_basis(X, "external")
    report = {"n": n, "parkingCount": len(R), "basisCount": len(Q)}
    g = nx.Graph()
    left = [("r", r) for r in R]
    g.add_nodes_from(left)
    g.add_nodes_from(("q", I) for I, _ in Q)
    for r in R:
        for I, q in Q:
            if q.coefficient(r):
                g.add_edge(("r", r), ("q", I))
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    pairs = [(r, matching[("r", r)][1]) for r in R if ("r", r) in matching]
    report["matched"] = len(pairs)
    report["success"] = len(R) == len(Q) == len(pairs)
    report["pairs"] = [
        {"r": list(r), "I": list(I), "degree": sum(r)} for r, I in sorted(pairs)
    ]
    return report

"""Weighted undirected graphs, ego-graph extraction, and backbone pruning.

Graphs are immutable after construction: node ids are opaque strings, every
edge weight is positive, and there is at most one edge per unordered pair.
Neighbor iteration order is deterministic (sorted ids) so that everything
downstream is reproducible.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraph, NegativeOrZeroWeight, ParseError, SelfLoop, UnknownNode


class WeightedGraph:
    """Undirected graph with positive real edge weights."""

    __slots__ = ("_adj", "_nodes", "_index", "_num_edges", "_csr")

    def __init__(self, adjacency):
        # adjacency: {u: {v: w}} already symmetric, validated by the factories
        self._nodes = tuple(sorted(adjacency))
        self._index = {u: i for i, u in enumerate(self._nodes)}
        self._adj = {u: dict(sorted(adjacency[u].items())) for u in self._nodes}
        self._num_edges = sum(len(nbrs) for nbrs in self._adj.values()) // 2
        self._csr = None

    @classmethod
    def from_edge_weights(cls, nodes, edge_weights):
        """Build from a {sorted (u, v): w} mapping plus extra isolated nodes."""
        adj = {u: {} for u in nodes}
        for (u, v), w in edge_weights.items():
            adj.setdefault(u, {})[v] = w
            adj.setdefault(v, {})[u] = w
        return cls(adj)

    # -- inspection ---------------------------------------------------------

    @property
    def nodes(self):
        return self._nodes

    def number_of_nodes(self):
        return len(self._nodes)

    def number_of_edges(self):
        return self._num_edges

    def has_node(self, u):
        return u in self._adj

    def has_edge(self, u, v):
        return v in self._adj.get(u, ())

    def neighbors(self, u):
        if u not in self._adj:
            raise UnknownNode(u)
        return tuple(self._adj[u])

    def degree(self, u):
        if u not in self._adj:
            raise UnknownNode(u)
        return len(self._adj[u])

    def strength(self, u):
        """Sum of weights incident to u."""
        if u not in self._adj:
            raise UnknownNode(u)
        return sum(self._adj[u].values())

    def weight(self, u, v):
        try:
            return self._adj[u][v]
        except KeyError:
            raise UnknownNode((u, v)) from None

    def edges(self):
        """Yield (u, v, w) once per edge with u < v."""
        for u in self._nodes:
            for v, w in self._adj[u].items():
                if u < v:
                    yield u, v, w

    def total_weight(self):
        return sum(w for _, _, w in self.edges())

    def index(self, u):
        if u not in self._index:
            raise UnknownNode(u)
        return self._index[u]

    def csr(self):
        """Dense-index CSR view: (indptr, indices, weights, lengths).

        lengths = 1/weight, the shortest-path edge length (strong ties are
        short). Cached; arrays must not be mutated.
        """
        if self._csr is None:
            n = len(self._nodes)
            indptr = np.zeros(n + 1, dtype=np.int64)
            indices = np.empty(2 * self._num_edges, dtype=np.int64)
            weights = np.empty(2 * self._num_edges, dtype=np.float64)
            pos = 0
            for i, u in enumerate(self._nodes):
                for v, w in self._adj[u].items():
                    indices[pos] = self._index[v]
                    weights[pos] = w
                    pos += 1
                indptr[i + 1] = pos
            lengths = 1.0 / weights
            self._csr = (indptr, indices, weights, lengths)
        return self._csr

    def subgraph(self, keep):
        """Induced subgraph on `keep` (all edges with both endpoints kept)."""
        keep = set(keep)
        for u in keep:
            if u not in self._adj:
                raise UnknownNode(u)
        adj = {u: {v: w for v, w in self._adj[u].items() if v in keep} for u in keep}
        return WeightedGraph(adj)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._adj == other._adj

    def __hash__(self):
        return hash((self._nodes, self._num_edges))

    def __repr__(self):
        return f"WeightedGraph(n={self.number_of_nodes()}, m={self.number_of_edges()})"


@dataclass(frozen=True)
class EgoGraph:
    """Induced subgraph around a focal node, with the ego distinguished."""

    ego: str
    order: int
    graph: WeightedGraph

    def __post_init__(self):
        if self.order not in (1, 2):
            raise ValueError(f"ego-graph order must be 1 or 2, got {self.order}")
        if not self.graph.has_node(self.ego):
            raise UnknownNode(self.ego)


@dataclass(frozen=True)
class BackboneParams:
    """Disparity-filter settings: keep an edge when its weight is significant
    (alpha < significance) at either endpoint; degree-1 edges always survive."""

    significance: float = 0.05
    keep_rule: str = "either-endpoint"

    def __post_init__(self):
        if not 0.0 < self.significance < 1.0:
            raise ValueError("significance must be in (0, 1)")
        if self.keep_rule != "either-endpoint":
            raise ValueError(f"unsupported keep rule {self.keep_rule!r}")


def build_graph(edge_records):
    """Build a WeightedGraph from (node, node, weight) records.

    Duplicate pairs are merged by summing weights. Self-loops and
    non-positive weights are rejected with the offending record index.
    """
    merged = {}
    nodes = set()
    for idx, (u, v, w) in enumerate(edge_records):
        u, v = str(u), str(v)
        if not u or not v:
            raise ParseError("<records>", idx, "empty node id")
        if u == v:
            raise SelfLoop(u, idx)
        if not (w > 0):
            raise NegativeOrZeroWeight(w, idx)
        key = (u, v) if u < v else (v, u)
        merged[key] = merged.get(key, 0.0) + float(w)
        nodes.add(u)
        nodes.add(v)
    return WeightedGraph.from_edge_weights(nodes, merged)


def extract_ego(g, v, order=1):
    """Ego graph of v: induced subgraph on v plus its 1- or 2-hop neighbors."""
    if not g.has_node(v):
        raise UnknownNode(v)
    keep = {v}
    frontier = g.neighbors(v)
    keep.update(frontier)
    if order == 2:
        for u in frontier:
            keep.update(g.neighbors(u))
    elif order != 1:
        raise ValueError(f"order must be 1 or 2, got {order}")
    return EgoGraph(ego=v, order=order, graph=g.subgraph(keep))


def disparity_alpha(weight, strength, degree):
    """Significance of one edge at one endpoint: (1 - w/s)^(k-1)."""
    p = weight / strength
    return (1.0 - p) ** (degree - 1)


def disparity_filter(g, params=BackboneParams()):
    """Multiscale backbone: drop edges insignificant at both endpoints.

    For a node of degree k > 1 the null expects each edge to carry a uniform
    share of its strength; an edge survives at that endpoint when
    alpha = (1 - w/s)^(k-1) < significance. Degree-1 edges always survive.
    The node set is preserved, so isolated nodes may appear.
    """
    if g.number_of_nodes() == 0:
        raise EmptyGraph("cannot filter an empty graph")
    kept = {}
    for u, v, w in g.edges():
        keep = False
        for end in (u, v):
            k = g.degree(end)
            if k == 1:
                keep = True
                break
            if disparity_alpha(w, g.strength(end), k) < params.significance:
                keep = True
                break
        if keep:
            kept[(u, v)] = w
    return WeightedGraph.from_edge_weights(g.nodes, kept)


# -- edge-list CSV ----------------------------------------------------------

EDGE_LIST_HEADER = ("src", "dst", "weight")


def read_edge_list(path, strict=False):
    """Read `src,dst,weight` CSV into edge records; malformed rows skip with
    a report unless strict."""
    records = []
    problems = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return records, problems
        if [h.strip().lower() for h in header] != list(EDGE_LIST_HEADER):
            raise ParseError(path, 1, f"expected header src,dst,weight, got {header}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            try:
                if len(row) != 3:
                    raise ValueError(f"expected 3 fields, got {len(row)}")
                src, dst, w = row[0].strip(), row[1].strip(), float(row[2])
                if not src or not dst:
                    raise ValueError("empty node id")
                records.append((src, dst, w))
            except ValueError as exc:
                if strict:
                    raise ParseError(path, lineno, str(exc)) from None
                problems.append((lineno, str(exc)))
    return records, problems


def write_edge_list(g, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(EDGE_LIST_HEADER)
        for u, v, w in g.edges():
            writer.writerow([u, v, format(w, ".12g")])

"""Shortest paths on compressed representations.

A DAG compression induces a 0-1-weighted distance model (two copies of the
DAG joined on the graph vertices); deque-based BFS on it yields exact graph
distances, shortest-path trees, APSP, scattered sets, and the radius-r width
measurement for construction sequences.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .convert import (ConstructionSequence, DagCompression,
                      IntervalBicliquePartition, MERGE, SequenceError,
                      ibp_to_dag, stm_to_ibp)
from .graph import InputError
from .stm import SignedTreeModel

Representation = Union[SignedTreeModel, IntervalBicliquePartition, DagCompression]


class DistanceModel:
    """0-1-weighted digraph distance-equivalent to the graph on nodes 1..n.

    Node ids: 1..n are the shared graph vertices; the top copy keeps the DAG's
    internal ids; bottom-copy internals are shifted past them.
    """

    __slots__ = ("n", "num_nodes", "adj", "_radj", "num_edges")

    def __init__(self, n: int, num_nodes: int, edges: Iterable[tuple[int, int, int]]):
        self.n = n
        self.num_nodes = num_nodes
        adj: list[list[tuple[int, int]]] = [[] for _ in range(num_nodes + 1)]
        m = 0
        for x, y, w in edges:
            if w not in (0, 1):
                raise InputError(f"edge weight {w} not in {{0,1}}")
            adj[x].append((y, w))
            m += 1
        self.adj = adj
        self.num_edges = m
        self._radj: Optional[list[list[tuple[int, int]]]] = None

    @property
    def size(self) -> int:
        return self.num_nodes + self.num_edges

    def reverse_adj(self) -> list[list[tuple[int, int]]]:
        if self._radj is None:
            radj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_nodes + 1)]
            for x, lst in enumerate(self.adj):
                for y, w in lst:
                    radj[y].append((x, w))
            self._radj = radj
        return self._radj


@dataclass(frozen=True)
class ShortestPathTree:
    """Per-vertex distance (sentinel n for unreachable) and parent (0 for
    source and unreachable vertices); arrays indexed by vertex-1."""

    source: int
    dist: tuple[int, ...]
    parent: tuple[int, ...]


def dag_to_distance_model(dc: DagCompression) -> DistanceModel:
    """Two copies of the DAG joined on the graph vertices: top edges run
    toward the sinks at weight 0, bottom edges away from them at weight 0,
    and each compressed edge {x,y} becomes bottom(x)->top(y) and
    bottom(y)->top(x) at weight 1 (both ways, the graph being undirected)."""
    n, nn = dc.n, dc.num_nodes

    def bottom(t: int) -> int:
        return t if t <= n else nn + (t - n)

    edges: list[tuple[int, int, int]] = []
    for x, y in dc.edges:
        edges.append((x, y, 0))
        edges.append((bottom(y), bottom(x), 0))
    for x, y in dc.compressed:
        edges.append((bottom(x), y, 1))
        edges.append((bottom(y), x, 1))
    return DistanceModel(n, nn + (nn - n), edges)


@dataclass
class ZeroOneResult:
    dist: list[int]          # over model nodes, index 0 unused; INF sentinel
    parent_vertex: list[int]  # projected G-parent per shared vertex, index v-1
    ops: int                  # edges relaxed, a machine-independent cost proxy

    INF = None  # set per run


def zero_one_bfs(dm: DistanceModel, source: int, max_dist: Optional[int] = None) -> ZeroOneResult:
    """Deque BFS: weight-0 relaxations go to the front, weight-1 to the back.

    Each model node carries the most recent shared-layer vertex on its
    shortest path; a shared vertex's G-parent is the label carried into it.
    ``max_dist`` bounds the search radius (used by scattered sets).
    """
    if not 1 <= source <= dm.n:
        raise InputError(f"source {source} is not a graph vertex in [1,{dm.n}]")
    return _zero_one_bfs(dm.adj, dm.n, dm.num_nodes, source, max_dist)


def _zero_one_bfs(adj, n, num_nodes, source, max_dist):
    INF = num_nodes + 1
    dist = [INF] * (num_nodes + 1)
    label = [0] * (num_nodes + 1)
    parent = [0] * n
    dist[source] = 0
    label[source] = source
    dq = deque([source])
    ops = 0
    while dq:
        u = dq.popleft()
        du = dist[u]
        if max_dist is not None and du > max_dist:
            continue
        for v, w in adj[u]:
            ops += 1
            nd = du + w
            if nd < dist[v]:
                dist[v] = nd
                if v <= n:
                    parent[v - 1] = label[u]
                    label[v] = v
                else:
                    label[v] = label[u]
                if w == 0:
                    dq.appendleft(v)
                else:
                    dq.append(v)
    res = ZeroOneResult(dist, parent, ops)
    res.INF = INF
    return res


def _as_distance_model(rep: Representation) -> DistanceModel:
    if isinstance(rep, SignedTreeModel):
        rep = stm_to_ibp(rep)
    if isinstance(rep, IntervalBicliquePartition):
        rep = ibp_to_dag(rep)
    if isinstance(rep, DagCompression):
        return dag_to_distance_model(rep)
    if isinstance(rep, DistanceModel):
        return rep
    raise InputError(f"unsupported representation {type(rep).__name__}")


def sssp(rep: Representation, source: int,
         counters: Optional[dict] = None) -> ShortestPathTree:
    """Shortest-path tree from ``source`` on any representation in the
    pipeline.  ``counters``, if given, receives the relaxation count and
    model size under keys "ops" and "model_size"."""
    dm = _as_distance_model(rep)
    res = zero_one_bfs(dm, source)
    if counters is not None:
        counters["ops"] = res.ops
        counters["model_size"] = dm.size
    n = dm.n
    dist = tuple(res.dist[v] if res.dist[v] < res.INF else n for v in range(1, n + 1))
    parent = tuple(0 if v == source or dist[v - 1] >= n else res.parent_vertex[v - 1]
                   for v in range(1, n + 1))
    return ShortestPathTree(source, dist, parent)


def apsp(rep: Representation) -> list[list[int]]:
    """n x n distance matrix (sentinel n for unreachable): one distance model,
    n independent BFS runs."""
    dm = _as_distance_model(rep)
    n = dm.n
    out = []
    for s in range(1, n + 1):
        res = zero_one_bfs(dm, s)
        out.append([res.dist[v] if res.dist[v] < res.INF else n for v in range(1, n + 1)])
    return out


def scattered_maximal_subset(dm: DistanceModel, X: Iterable[int], c: int, r: int) -> list[int]:
    """Greedy maximal r-scattered subset of X of size at most c.

    Repeatedly take the smallest remaining id and remove everything within
    graph distance r of it, found by radius-bounded forward and backward BFS
    on the distance model.
    """
    if c < 1 or r < 1:
        raise InputError("c and r must be at least 1")
    rest = sorted(set(X))
    for v in rest:
        if not 1 <= v <= dm.n:
            raise InputError(f"X contains {v}, outside [1,{dm.n}]")
    out: list[int] = []
    while rest and len(out) < c:
        x = rest[0]
        out.append(x)
        fwd = _zero_one_bfs(dm.adj, dm.n, dm.num_nodes, x, r)
        bwd = _zero_one_bfs(dm.reverse_adj(), dm.n, dm.num_nodes, x, r)
        near = {v for v in rest
                if min(fwd.dist[v], bwd.dist[v]) <= r}
        rest = [v for v in rest if v not in near and v != x]
    return out


def radius_r_width(seq: ConstructionSequence, r: int = 1) -> int:
    """Replay a construction sequence and report its radius-r width: the
    maximum, over steps and vertices, of the number of parts met by the
    radius-r ball of the vertex in the resolved-pairs graph.  Naive
    re-evaluation per step; measurement tool, not a hot path."""
    if r < 1:
        raise InputError("r must be at least 1")
    n = seq.n
    part_of = list(range(n + 1))
    alive: dict[int, list[int]] = {v: [v] for v in range(1, n + 1)}
    resolved_adj: list[set[int]] = [set() for _ in range(n + 1)]

    def measure() -> int:
        best = 0
        for v in range(1, n + 1):
            ball = {v}
            frontier = [v]
            for _ in range(r):
                nxt = []
                for u in frontier:
                    for w in resolved_adj[u]:
                        if w not in ball:
                            ball.add(w)
                            nxt.append(w)
                frontier = nxt
            best = max(best, len({part_of[u] for u in ball}))
        return best

    width = measure()
    next_id = n
    for step, (kind, i, j) in enumerate(seq.ops, start=1):
        if i not in alive or j not in alive:
            raise SequenceError(f"step {step}: part {i if i not in alive else j} is not alive")
        if kind == MERGE:
            if i == j:
                raise SequenceError(f"step {step}: cannot merge a part with itself")
            next_id += 1
            members = alive.pop(i) + alive.pop(j)
            alive[next_id] = members
            for u in members:
                part_of[u] = next_id
        else:
            for u in alive[i]:
                for v in alive[j]:
                    if u != v:
                        resolved_adj[u].add(v)
                        resolved_adj[v].add(u)
        width = max(width, measure())
    return width

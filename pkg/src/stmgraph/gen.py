"""Seeded instance generators for tests, benchmarks, and the CLI.

All randomness flows through one random.Random per call, so identical seeds
give identical instances.
"""

from __future__ import annotations

import random

from .convert import (ConstructionSequence, MERGE, RESOLVE_NEG, RESOLVE_POS,
                      SdDegenSequence)
from .graph import Graph, InputError
from .stm import SignedTreeModel, _pairs_cross


def random_full_tree(n: int, rng: random.Random) -> dict[int, tuple[int, int]]:
    """Random full binary tree over leaves 1..n; internal ids n+1..2n-1 in
    merge order, so the root is 2n-1."""
    roots = list(range(1, n + 1))
    rng.shuffle(roots)
    children: dict[int, tuple[int, int]] = {}
    next_id = n
    while len(roots) > 1:
        i = rng.randrange(len(roots))
        a = roots.pop(i)
        j = rng.randrange(len(roots))
        b = roots.pop(j)
        next_id += 1
        children[next_id] = (a, b)
        roots.append(next_id)
    return children


def random_stm(n: int, num_pairs: int, seed: int = 0,
               tries_per_pair: int = 50) -> SignedTreeModel:
    """Random model: random tree plus rejection-sampled non-crossing pairs.

    Pair candidates are uniform node pairs; crossing or non-transversal
    candidates are rejected, so fewer than ``num_pairs`` pairs may result on
    crowded trees.
    """
    if n < 1:
        raise InputError("need at least one leaf")
    rng = random.Random(seed)
    children = random_full_tree(n, rng)
    base = SignedTreeModel(n, children)
    num_nodes = 2 * n - 1
    accepted: list[tuple[int, int]] = []
    taken: set[tuple[int, int]] = set()
    signs: list[int] = []
    budget = tries_per_pair * num_pairs
    while len(accepted) < num_pairs and budget > 0:
        budget -= 1
        if num_nodes < 2:
            break
        x = rng.randrange(1, num_nodes)  # the root cannot be transversal
        y = rng.randrange(1, num_nodes)
        if x == y or base.is_ancestor(x, y) or base.is_ancestor(y, x):
            continue
        pair = base.canonical_pair(x, y)
        if pair in taken:
            continue
        if any(_pairs_cross(base, pair, q) for q in accepted):
            continue
        taken.add(pair)
        accepted.append(pair)
        signs.append(rng.choice((-1, 1)))
    pairs_a = [p for p, s in zip(accepted, signs) if s < 0]
    pairs_b = [p for p, s in zip(accepted, signs) if s > 0]
    return base.with_pairs(pairs_a, pairs_b)


def random_stm_sparse(n: int, num_pairs: int, seed: int = 0) -> SignedTreeModel:
    """Fast large-n generator: pairs are sibling pairs or leaf pairs, which
    can never cross anything, so no crossing checks are needed."""
    if n < 2:
        raise InputError("need at least two leaves")
    rng = random.Random(seed)
    children = random_full_tree(n, rng)
    base = SignedTreeModel(n, children)
    taken: set[tuple[int, int]] = set()
    pairs_a: list[tuple[int, int]] = []
    pairs_b: list[tuple[int, int]] = []
    internals = sorted(children)
    budget = 20 * num_pairs
    while len(taken) < num_pairs and budget > 0:
        budget -= 1
        if rng.random() < 0.5:
            t = rng.choice(internals)
            pair = base.canonical_pair(*children[t])
        else:
            u = rng.randrange(1, n + 1)
            v = rng.randrange(1, n + 1)
            if u == v:
                continue
            pair = base.canonical_pair(u, v)
        if pair in taken:
            continue
        taken.add(pair)
        (pairs_b if rng.random() < 0.5 else pairs_a).append(pair)
    return base.with_pairs(pairs_a, pairs_b)


def planted_sdseq(n: int, width: int, seed: int = 0) -> tuple[Graph, SdDegenSequence]:
    """Graph plus sd-degeneracy sequence of width <= ``width``, planted by
    running the elimination backwards: each new vertex copies a random
    existing vertex's neighborhood with at most ``width`` toggled entries, so
    its elimination-time symmetric difference stays bounded."""
    if n < 2:
        raise InputError("need at least two vertices")
    if width < 0:
        raise InputError("width must be nonnegative")
    rng = random.Random(seed)
    adj: dict[int, set[int]] = {1: set()}
    rev_pairs: list[tuple[int, int]] = []
    for u in range(2, n + 1):
        v = rng.randrange(1, u)
        nb = set(adj[v])
        nb.discard(u)
        others = [w for w in range(1, u) if w != v]
        for _ in range(rng.randint(0, width)):
            if not others:
                break
            w = rng.choice(others)
            nb.symmetric_difference_update({w})
        if rng.random() < 0.5:
            nb.add(v)
        adj[u] = set()
        for w in nb:
            adj[u].add(w)
            adj[w].add(u)
        rev_pairs.append((u, v))
    relabel = list(range(1, n + 1))
    rng.shuffle(relabel)
    label = {old: new for old, new in zip(range(1, n + 1), relabel)}
    edges = {(min(label[u], label[w]), max(label[u], label[w]))
             for u, nbrs in adj.items() for w in nbrs if u < w}
    seq = SdDegenSequence(tuple((label[u], label[v]) for u, v in reversed(rev_pairs)))
    return Graph(n, edges), seq


def random_cseq(n: int, num_resolves: int, seed: int = 0) -> ConstructionSequence:
    """Random merges interleaved with random (possibly self) resolves."""
    if n < 1:
        raise InputError("need at least one vertex")
    rng = random.Random(seed)
    alive = list(range(1, n + 1))
    next_id = n
    ops: list[tuple[str, int, int]] = []
    resolves_left = num_resolves
    while len(alive) > 1 or resolves_left > 0:
        do_merge = len(alive) > 1 and (resolves_left == 0 or rng.random() < 0.4)
        if do_merge:
            i = alive.pop(rng.randrange(len(alive)))
            j = alive.pop(rng.randrange(len(alive)))
            next_id += 1
            ops.append((MERGE, i, j))
            alive.append(next_id)
        else:
            i = rng.choice(alive)
            j = rng.choice(alive)
            ops.append((rng.choice((RESOLVE_POS, RESOLVE_NEG)), i, j))
            resolves_left -= 1
    return ConstructionSequence(n, tuple(ops))


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    if not 0 <= p <= 1:
        raise InputError("edge probability must be in [0,1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return Graph(n, edges)

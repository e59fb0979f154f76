"""Signed tree models: representation, validation, brute-force decoding,
cleaning transformations, and dynamic leaf-level edge edits.

A model is a full binary tree over n leaves (node ids: leaves 1..n, internal
n+1..2n-1) plus two disjoint sets of non-crossing transversal node pairs:
negative pairs (anti-bicliques) and positive pairs (bicliques).  Two leaves
are adjacent in the decoded graph iff the minimal pair covering them is
positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from .graph import Graph, InputError
from .rect import Rect, inclusion_forest

POSITIVE = "positive"
NEGATIVE = "negative"

Pair = tuple[int, int]


class InvalidModelError(ValueError):
    """Raised when an operation requires a valid model and gets an invalid one."""


@dataclass
class ValidationReport:
    ok: bool
    violations: list[tuple[str, str]]
    """(kind, message) pairs; kinds: tree, loop, transversal, crossing, overlap, range."""

    def messages(self) -> list[str]:
        return [m for _, m in self.violations]


@dataclass(frozen=True)
class EditLog:
    """Counts leaf-pair edits since the last rebuild; rebuild forced at threshold."""

    count: int
    threshold: int

    def bump(self) -> "EditLog":
        return EditLog(self.count + 1, self.threshold)

    @property
    def rebuild_required(self) -> bool:
        return self.count >= self.threshold


class SignedTreeModel:
    """Immutable signed tree model.  All edit operations return new models."""

    __slots__ = ("n", "children", "parent", "root", "pairs_a", "pairs_b",
                 "_tin", "_tout", "leaf_order", "leaf_pos", "_lo", "_hi")

    def __init__(self, n: int,
                 children: Mapping[int, tuple[int, int]],
                 pairs_a: Iterable[Pair] = (),
                 pairs_b: Iterable[Pair] = ()):
        if n < 1:
            raise InputError("a model needs at least one leaf")
        self.n = n
        num_nodes = 2 * n - 1
        self.children: dict[int, tuple[int, int]] = dict(children)
        parent = [0] * (num_nodes + 1)
        for t, (l, r) in self.children.items():
            if not (n < t <= num_nodes):
                raise InputError(f"internal node id {t} out of range ({n},{num_nodes}]")
            for c in (l, r):
                if not (1 <= c <= num_nodes):
                    raise InputError(f"child id {c} of node {t} out of range")
                if parent[c]:
                    raise InputError(f"node {c} has two parents")
                parent[c] = t
        roots = [t for t in range(1, num_nodes + 1) if not parent[t]]
        if len(roots) != 1:
            raise InputError(f"tree must have exactly one root, found {roots}")
        self.root = roots[0]
        self.parent = tuple(parent)

        # Euler tour for O(1) ancestor tests, plus leaf positions and the
        # position interval spanned by each subtree.
        tin = [0] * (num_nodes + 1)
        tout = [0] * (num_nodes + 1)
        lo = [0] * (num_nodes + 1)
        hi = [0] * (num_nodes + 1)
        leaves: list[int] = []
        timer = 0
        stack: list[tuple[int, bool]] = [(self.root, False)]
        while stack:
            t, done = stack.pop()
            if done:
                tout[t] = timer
                l, r = self.children[t]
                lo[t] = lo[l]
                hi[t] = hi[r]
                continue
            timer += 1
            tin[t] = timer
            if t in self.children:
                l, r = self.children[t]
                stack.append((t, True))
                stack.append((r, False))
                stack.append((l, False))
            else:
                leaves.append(t)
                tout[t] = timer
                lo[t] = hi[t] = len(leaves)
        if sorted(leaves) != list(range(1, n + 1)):
            raise InputError("leaves must be exactly the ids 1..n")
        self._tin = tuple(tin)
        self._tout = tuple(tout)
        self._lo = tuple(lo)
        self._hi = tuple(hi)
        self.leaf_order = tuple(leaves)
        leaf_pos = [0] * (n + 1)
        for p, v in enumerate(leaves, start=1):
            leaf_pos[v] = p
        self.leaf_pos = tuple(leaf_pos)

        def canon(pairs: Iterable[Pair]) -> frozenset[Pair]:
            out = set()
            for x, y in pairs:
                if not (1 <= x <= num_nodes and 1 <= y <= num_nodes):
                    raise InputError(f"pair ({x},{y}) references unknown nodes")
                out.add(self.canonical_pair(x, y))
            return frozenset(out)

        self.pairs_a = canon(pairs_a)
        self.pairs_b = canon(pairs_b)

    # -- structure queries ------------------------------------------------

    def is_leaf(self, t: int) -> bool:
        return t <= self.n

    def is_ancestor(self, x: int, y: int) -> bool:
        """True iff x is an ancestor of y (reflexively)."""
        return self._tin[x] <= self._tin[y] and self._tout[y] <= self._tout[x]

    def leaf_interval(self, t: int) -> tuple[int, int]:
        """Positions (inclusive) of the leaves under t, in left-to-right order."""
        return self._lo[t], self._hi[t]

    def canonical_pair(self, x: int, y: int) -> Pair:
        """Endpoint with the earlier-starting leaf interval first."""
        return (x, y) if self._lo[x] <= self._lo[y] else (y, x)

    def pairs_signed(self) -> Iterator[tuple[int, int, int]]:
        """Yield (x, y, sign) with sign -1 for negative and +1 for positive pairs."""
        for x, y in sorted(self.pairs_a):
            yield x, y, -1
        for x, y in sorted(self.pairs_b):
            yield x, y, +1

    @property
    def num_pairs(self) -> int:
        return len(self.pairs_a) + len(self.pairs_b)

    def with_pairs(self, pairs_a: Iterable[Pair], pairs_b: Iterable[Pair]) -> "SignedTreeModel":
        return SignedTreeModel(self.n, self.children, pairs_a, pairs_b)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SignedTreeModel)
                and self.n == other.n and self.children == other.children
                and self.pairs_a == other.pairs_a and self.pairs_b == other.pairs_b)

    def __hash__(self) -> int:
        return hash((self.n, self.pairs_a, self.pairs_b))

    def __repr__(self) -> str:
        return (f"SignedTreeModel(n={self.n}, |A|={len(self.pairs_a)}, "
                f"|B|={len(self.pairs_b)})")


def pair_rects(stm: SignedTreeModel) -> list[Rect]:
    """Rectangles (in leaf-position space) of all transversal pairs.

    Payload of each rectangle is ``(pair, sign)``.  Loops yield squares.
    """
    rects = []
    for x, y, sign in stm.pairs_signed():
        x1, x2 = stm.leaf_interval(x)
        y1, y2 = stm.leaf_interval(y)
        rects.append(Rect(x1, x2, y1, y2, payload=((x, y), sign)))
    return rects


def validate(stm: SignedTreeModel, strict: bool = True) -> ValidationReport:
    """Check all model invariants; the report names offending pairs/nodes.

    In strict mode loops {t,t} are violations; non-strict mode permits them
    (pre-cleaning inputs for loop removal).
    """
    v: list[tuple[str, str]] = []
    num_nodes = 2 * stm.n - 1
    for t in range(stm.n + 1, num_nodes + 1):
        if t not in stm.children:
            v.append(("tree", f"internal node {t} has no children"))
    overlap = stm.pairs_a & stm.pairs_b
    for p in sorted(overlap):
        v.append(("overlap", f"pair {p} is both positive and negative"))
    pairs = list(stm.pairs_signed())
    for x, y, _ in pairs:
        if not (1 <= x <= num_nodes and 1 <= y <= num_nodes):
            v.append(("range", f"pair ({x},{y}) references unknown nodes"))
            continue
        if x == y:
            if strict:
                v.append(("loop", f"pair ({x},{y}) is a loop"))
            continue
        if stm.is_ancestor(x, y) or stm.is_ancestor(y, x):
            v.append(("transversal", f"pair ({x},{y}) is not transversal"))
    for i in range(len(pairs)):
        x1, y1, _ = pairs[i]
        for j in range(i + 1, len(pairs)):
            x2, y2, _ = pairs[j]
            if _pairs_cross(stm, (x1, y1), (x2, y2)):
                v.append(("crossing", f"pairs ({x1},{y1}) and ({x2},{y2}) cross"))
    return ValidationReport(ok=not v, violations=v)


def _pairs_cross(stm: SignedTreeModel, e1: Pair, e2: Pair) -> bool:
    def strictly_above(a: int, e: Pair) -> bool:
        return any(stm.is_ancestor(a, b) and a != b for b in e)

    return (any(strictly_above(a, e2) for a in e1)
            and any(strictly_above(b, e1) for b in e2))


def decode_bruteforce(stm: SignedTreeModel, validated: bool = False) -> Graph:
    """Decode by scanning, for every leaf pair, all covering transversal pairs.

    The minimal covering pair is the one with the smallest rectangle (covering
    rectangles of a fixed cell are nested); the leaves are adjacent iff it is
    positive.  Loops are supported with their square rectangles, which yields
    the nearest-enclosing-loop semantics used by loop removal.  This is the
    oracle against which the conversion pipeline is tested.
    """
    if not validated:
        report = validate(stm, strict=False)
        if not report.ok:
            raise InvalidModelError("; ".join(report.messages()))
    n = stm.n
    big = np.iinfo(np.int64).max
    best = np.full((n + 1, n + 1), big, dtype=np.int64)
    sign = np.zeros((n + 1, n + 1), dtype=np.int8)
    for r in pair_rects(stm):
        block = best[r.x1:r.x2 + 1, r.y1:r.y2 + 1]
        mask = r.area < block
        block[mask] = r.area
        sign[r.x1:r.x2 + 1, r.y1:r.y2 + 1][mask] = r.payload[1]
    edges = []
    pos_i, pos_j = np.nonzero(np.triu(sign, k=1) > 0)
    for i, j in zip(pos_i, pos_j):
        edges.append((stm.leaf_order[i - 1], stm.leaf_order[j - 1]))
    return Graph(n, edges)


def remove_loops(stm: SignedTreeModel) -> SignedTreeModel:
    """Replace loops by equivalent sibling pairs (single top-down pass).

    Each internal node whose children lack a transversal pair gets one with
    the sign of the nearest ancestor-or-self loop, if any; then all loops are
    dropped.  The added pairs form a matching on sibling pairs (at most n-1),
    and the decoded graph is unchanged.
    """
    loop_sign: dict[int, int] = {}
    for x, y, s in stm.pairs_signed():
        if x == y:
            loop_sign[x] = s
    pairs_a = {p for p in stm.pairs_a if p[0] != p[1]}
    pairs_b = {p for p in stm.pairs_b if p[0] != p[1]}
    if not loop_sign:
        return stm.with_pairs(pairs_a, pairs_b)
    stack: list[tuple[int, int]] = [(stm.root, 0)]  # (node, sign carried from nearest loop)
    while stack:
        t, carried = stack.pop()
        carried = loop_sign.get(t, carried)
        if stm.is_leaf(t):
            continue
        l, r = stm.children[t]
        sib = stm.canonical_pair(l, r)
        if carried and sib not in pairs_a and sib not in pairs_b:
            (pairs_b if carried > 0 else pairs_a).add(sib)
        stack.append((l, carried))
        stack.append((r, carried))
    return stm.with_pairs(pairs_a, pairs_b)


def clean_same_sign(stm: SignedTreeModel) -> SignedTreeModel:
    """Drop every pair whose parent in the rectangle inclusion forest has the
    same sign; afterwards signs strictly alternate along the forest and the
    decoded graph is unchanged."""
    rects = pair_rects(stm)
    forest = inclusion_forest(rects)
    pairs_a = set(stm.pairs_a)
    pairs_b = set(stm.pairs_b)
    for i, p in enumerate(forest.parent):
        if p is None:
            continue
        pair, s = rects[i].payload
        if s == rects[p].payload[1]:
            (pairs_a if s < 0 else pairs_b).discard(pair)
    return stm.with_pairs(pairs_a, pairs_b)


def default_edit_log(stm: SignedTreeModel) -> EditLog:
    """Fresh edit log with the default rebuild threshold max(n, pair count)."""
    return EditLog(count=0, threshold=max(stm.n, stm.num_pairs))


def insert_edit(stm: SignedTreeModel, u: int, v: int, sign: str,
                log: EditLog) -> tuple[SignedTreeModel, EditLog, bool]:
    """Flip or add the leaf pair {u,v} with the given sign.

    Leaf pairs cannot cross anything (leaves have no strict descendants), so
    the model stays valid.  Returns (model, log, rebuild_required); once the
    log hits its threshold the caller is expected to rebuild from scratch.
    """
    if sign not in (POSITIVE, NEGATIVE):
        raise InputError(f"sign must be {POSITIVE!r} or {NEGATIVE!r}")
    if not (1 <= u <= stm.n and 1 <= v <= stm.n):
        raise InputError(f"({u},{v}) is not a leaf pair")
    if u == v:
        raise InputError("cannot edit a leaf pair with equal endpoints")
    pair = stm.canonical_pair(u, v)
    pairs_a = set(stm.pairs_a) - {pair}
    pairs_b = set(stm.pairs_b) - {pair}
    (pairs_b if sign == POSITIVE else pairs_a).add(pair)
    new_log = log.bump()
    return stm.with_pairs(pairs_a, pairs_b), new_log, new_log.rebuild_required

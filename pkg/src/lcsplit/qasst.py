"""Splits, strong splits, and the quotient-augmented strong split tree.

A split of a connected graph is a bipartition of its vertices whose
crossing edges form a complete bipartite subgraph; it is strong when no
other split crosses it.  Collapsing the nontrivial strong splits yields a
tree of quotient graphs.  Each collapsed split leaves behind a matched
pair of split-nodes, one in each of the two quotients it separates; the
quotients plus the pairing losslessly encode the original graph.

Quotient nodes are either original vertex ids (leaf-nodes, plain ints) or
:class:`SplitNode` markers.  ``SplitNode(i, j)`` lives in quotient ``i``
and is paired with ``SplitNode(j, i)`` in quotient ``j``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import (
    MalformedQasstError,
    NotConnectedError,
    SizeLimitError,
)
from .graphs import (
    SimpleGraph,
    induced_subgraph,
    is_connected,
    neighborhood,
)

# Quotient kinds.  "c", "sc" and "ss" are relative to a designated
# split-node; "star" is the unoriented shape of a single-quotient tree.
COMPLETE = "c"
STAR_CENTER = "sc"
STAR_SPOKE = "ss"
STAR = "star"
PRIME = "prime"

_SPLIT_ENUM_MAX = 18


@dataclass(frozen=True, order=True)
class SplitNode:
    """Marker node s_i^j: lives in quotient i, paired with s_j^i."""

    i: int
    j: int

    @property
    def partner(self) -> "SplitNode":
        return SplitNode(self.j, self.i)


Node = Union[int, SplitNode]


def node_sort_key(node: Node) -> tuple:
    if isinstance(node, SplitNode):
        return (1, node.i, node.j)
    return (0, node, 0)


@dataclass(frozen=True)
class QuotientKind:
    kind: str  # COMPLETE | STAR_CENTER | STAR_SPOKE | STAR | PRIME
    center: Optional[Node] = None  # star center (for ss/star kinds)


class QuotientGraph:
    """A small graph over leaf-nodes and split-nodes."""

    def __init__(self, nodes: Iterable[Node] = (), edges: Iterable[frozenset] = ()):
        self.nodes: set[Node] = set(nodes)
        self.edges: set[frozenset] = {frozenset(e) for e in edges}
        for e in self.edges:
            if len(e) != 2 or not e <= self.nodes:
                raise MalformedQasstError(f"bad quotient edge {set(e)}")

    def copy(self) -> "QuotientGraph":
        g = QuotientGraph.__new__(QuotientGraph)
        g.nodes = set(self.nodes)
        g.edges = set(self.edges)
        return g

    def has_edge(self, a: Node, b: Node) -> bool:
        return frozenset((a, b)) in self.edges

    def add_edge(self, a: Node, b: Node) -> None:
        if a == b:
            raise MalformedQasstError("quotient self-loop")
        self.edges.add(frozenset((a, b)))

    def neighbors(self, node: Node) -> set[Node]:
        return {next(iter(e - {node})) for e in self.edges if node in e}

    def remove_node(self, node: Node) -> None:
        self.nodes.discard(node)
        self.edges = {e for e in self.edges if node not in e}

    def toggle_edges_among(self, group: Iterable[Node]) -> None:
        for a, b in itertools.combinations(sorted(group, key=node_sort_key), 2):
            e = frozenset((a, b))
            if e in self.edges:
                self.edges.discard(e)
            else:
                self.edges.add(e)

    def local_complement_at(self, node: Node) -> None:
        self.toggle_edges_among(self.neighbors(node))

    def leaf_nodes(self) -> set[int]:
        return {v for v in self.nodes if isinstance(v, int)}

    def split_nodes(self) -> set[SplitNode]:
        return {v for v in self.nodes if isinstance(v, SplitNode)}

    def __repr__(self) -> str:
        ns = sorted(self.nodes, key=node_sort_key)
        es = sorted((sorted(e, key=node_sort_key) for e in self.edges),
                    key=lambda e: (node_sort_key(e[0]), node_sort_key(e[1])))
        return f"QuotientGraph(nodes={ns}, edges={es})"


class Qasst:
    """Quotient-augmented strong split tree."""

    def __init__(self, quotients: dict[int, QuotientGraph]):
        self.quotients: dict[int, QuotientGraph] = quotients

    @property
    def n(self) -> int:
        return sum(len(q.leaf_nodes()) for q in self.quotients.values())

    def copy(self) -> "Qasst":
        return Qasst({i: q.copy() for i, q in self.quotients.items()})

    def leaves(self) -> set[int]:
        out: set[int] = set()
        for q in self.quotients.values():
            out |= q.leaf_nodes()
        return out

    def leaf_quotient(self, v: int) -> int:
        for i, q in self.quotients.items():
            if v in q.leaf_nodes():
                return i
        raise MalformedQasstError(f"vertex {v} is not a leaf-node of any quotient")

    def tree_edges(self) -> list[tuple[SplitNode, SplitNode]]:
        out = []
        for i, q in sorted(self.quotients.items()):
            for s in sorted(q.split_nodes()):
                if s.i < s.j:
                    out.append((s, s.partner))
        return out

    def leaf_partition(self) -> set[frozenset]:
        """The partition of original vertices into quotient leaf blocks."""
        return {
            frozenset(q.leaf_nodes())
            for q in self.quotients.values()
            if q.leaf_nodes()
        }

    def far_leaves(self, s: SplitNode) -> frozenset:
        """Original vertices on the partner side of split-node s."""
        out: set[int] = set()
        seen = {s.i}
        stack = [s.j]
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            q = self.quotients[i]
            out |= q.leaf_nodes()
            for t in q.split_nodes():
                if t.j not in seen:
                    stack.append(t.j)
        return frozenset(out)

    def strong_split_sides(self) -> set[frozenset]:
        """One side (the far side, per tree edge) of each collapsed split."""
        return {self.far_leaves(s) for s, _ in self.tree_edges()}

    def structure_key(self):
        """Canonical encoding, independent of quotient numbering.

        Split-nodes are identified by the original-vertex set behind them,
        which determines the decomposition uniquely.
        """
        def label(i: int, node: Node):
            if isinstance(node, SplitNode):
                return ("S", tuple(sorted(self.far_leaves(node))))
            return ("L", node)

        quots = []
        for i, q in self.quotients.items():
            nodes = frozenset(label(i, v) for v in q.nodes)
            edges = frozenset(
                frozenset((label(i, a), label(i, b)))
                for a, b in (tuple(e) for e in q.edges)
            )
            quots.append((nodes, edges))
        return frozenset(quots)

    def validate(self, expect_full_range: bool = True) -> None:
        seen_leaves: list[int] = []
        indices = set(self.quotients)
        for i, q in self.quotients.items():
            for s in q.split_nodes():
                if s.i != i:
                    raise MalformedQasstError(f"split-node {s} stored in quotient {i}")
                if s.j not in indices:
                    raise MalformedQasstError(f"split-node {s} has no partner quotient")
                if s.partner not in self.quotients[s.j].nodes:
                    raise MalformedQasstError(f"split-node {s} is unmatched")
            seen_leaves.extend(q.leaf_nodes())
        if len(seen_leaves) != len(set(seen_leaves)):
            raise MalformedQasstError("a vertex appears in two quotients")
        if expect_full_range and set(seen_leaves) != set(range(1, len(seen_leaves) + 1)):
            raise MalformedQasstError("leaf-nodes do not cover 1..n")
        if len(self.quotients) > 1:
            for i, q in self.quotients.items():
                if not q.split_nodes():
                    raise MalformedQasstError(f"quotient {i} has no split-node")
        # Tree check: connected with exactly m-1 edges.
        m = len(self.quotients)
        edges = self.tree_edges()
        if m > 0 and len(edges) != m - 1:
            raise MalformedQasstError("tree-edge count is not (quotients - 1)")
        if m > 1:
            seen = {next(iter(indices))}
            stack = [next(iter(seen))]
            while stack:
                i = stack.pop()
                for s in self.quotients[i].split_nodes():
                    if s.j not in seen:
                        seen.add(s.j)
                        stack.append(s.j)
            if seen != indices:
                raise MalformedQasstError("quotient tree is disconnected")

    def normalize(self) -> "Qasst":
        """Renumber quotients deterministically.

        Quotients without leaf-nodes come first (ordered by the least
        vertex behind any of their split-nodes); leaf-bearing quotients
        follow in ascending order of their least leaf.
        """
        def order_key(i: int):
            q = self.quotients[i]
            leaves = q.leaf_nodes()
            if leaves:
                return (1, min(leaves))
            fars = sorted(min(self.far_leaves(s)) for s in q.split_nodes())
            return (0, fars[0] if fars else 0)

        old_order = sorted(self.quotients, key=order_key)
        remap = {old: new for new, old in enumerate(old_order)}

        def remap_node(node: Node) -> Node:
            if isinstance(node, SplitNode):
                return SplitNode(remap[node.i], remap[node.j])
            return node

        quotients = {}
        for old, q in self.quotients.items():
            quotients[remap[old]] = QuotientGraph(
                (remap_node(v) for v in q.nodes),
                (frozenset(remap_node(v) for v in e) for e in q.edges),
            )
        return Qasst(quotients)

    def __repr__(self) -> str:
        return f"Qasst({self.quotients})"


def single_quotient_qasst(g: SimpleGraph) -> Qasst:
    quotient = QuotientGraph(
        range(1, g.n + 1), (frozenset(e) for e in g.edges())
    )
    return Qasst({0: quotient})


# -- splits ------------------------------------------------------------------


def _check_bipartition(g: SimpleGraph, side_a: Iterable[int], side_b: Iterable[int]):
    a = set(side_a)
    b = set(side_b)
    if not a or not b or a & b or a | b != set(range(1, g.n + 1)):
        raise ValueError("sides must be disjoint, nonempty, and cover all vertices")
    amask = 0
    for v in a:
        amask |= 1 << v
    return amask, sum(1 << v for v in b)


def _mask_is_split(adj: list[int], amask: int, bmask: int) -> bool:
    b1 = 0
    m = amask
    while m:
        low = m & -m
        b1 |= adj[low.bit_length() - 1] & bmask
        m ^= low
    m = amask
    while m:
        low = m & -m
        cross = adj[low.bit_length() - 1] & bmask
        if cross and cross != b1:
            return False
        m ^= low
    return True


def is_split(g: SimpleGraph, side_a: Iterable[int], side_b: Iterable[int]) -> bool:
    """Crossing edges between the sides form a complete bipartite subgraph."""
    amask, bmask = _check_bipartition(g, side_a, side_b)
    adj = [g.neighborhood_mask(v) if 1 <= v <= g.n else 0 for v in range(g.n + 1)]
    return _mask_is_split(adj, amask, bmask)


def _all_split_masks(adj: list[int], full: int) -> list[int]:
    """All splits, one orientation each (side containing the least vertex)."""
    verts = [v for v in range(len(adj)) if full >> v & 1]
    if len(verts) > _SPLIT_ENUM_MAX:
        raise SizeLimitError(
            f"split enumeration limited to {_SPLIT_ENUM_MAX} vertices, got {len(verts)}"
        )
    anchor = verts[0]
    rest = [v for v in verts if v != anchor]
    out = []
    for r in range(len(rest)):
        for combo in itertools.combinations(rest, r):
            amask = (1 << anchor) | sum(1 << v for v in combo)
            bmask = full ^ amask
            if bmask and _mask_is_split(adj, amask, bmask):
                out.append(amask)
    return out


def _masks_cross(a1: int, b1: int, a2: int, b2: int) -> bool:
    return bool(a1 & a2) and bool(a1 & b2) and bool(b1 & a2) and bool(b1 & b2)


def is_strong(g: SimpleGraph, side_a: Iterable[int], side_b: Iterable[int]) -> bool:
    """A strong split is crossed by no other split (trivial splits always are)."""
    amask, bmask = _check_bipartition(g, side_a, side_b)
    adj = [g.neighborhood_mask(v) if 1 <= v <= g.n else 0 for v in range(g.n + 1)]
    if not _mask_is_split(adj, amask, bmask):
        return False
    full = amask | bmask
    for other_a in _all_split_masks(adj, full):
        other_b = full ^ other_a
        if _masks_cross(amask, bmask, other_a, other_b):
            return False
    return True


# -- reconstruction ----------------------------------------------------------


def reconstruct(q: Qasst) -> SimpleGraph:
    """Merge every split-node pair into all-to-all connections.

    Works even when the tree edges do not correspond to strong splits.
    """
    q.validate()
    adj: dict[Node, set[Node]] = {}
    for quot in q.quotients.values():
        for v in quot.nodes:
            adj.setdefault(v, set())
        for e in quot.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
    for sa, sb in q.tree_edges():
        na = adj.pop(sa)
        nb = adj.pop(sb)
        na.discard(sb)
        nb.discard(sa)
        for v in na:
            adj[v].discard(sa)
        for v in nb:
            adj[v].discard(sb)
        for u in na:
            for v in nb:
                adj[u].add(v)
                adj[v].add(u)
    n = len(adj)
    if set(adj) != set(range(1, n + 1)):
        raise MalformedQasstError("reconstruction did not produce leaf-nodes 1..n")
    return SimpleGraph(n, [(u, v) for u in adj for v in adj[u] if u < v])


# -- classification ----------------------------------------------------------


def classify_quotient(q: QuotientGraph, at: Optional[Node] = None) -> QuotientKind:
    """Shape of a quotient, oriented at a designated split-node.

    With ``at`` given, stars classify as star-center or star-spoke; without
    it the unoriented shape (complete/star/prime) is returned.  One- and
    two-node quotients classify as complete (they are simultaneously
    complete and star; callers that merge degenerate quotients special-case
    sizes <= 2).
    """
    if at is not None and at not in q.nodes:
        raise MalformedQasstError(f"node {at} not in quotient")
    m = len(q.nodes)
    if m <= 2:
        return QuotientKind(COMPLETE)
    degs = {v: len(q.neighbors(v)) for v in q.nodes}
    if all(d == m - 1 for d in degs.values()):
        return QuotientKind(COMPLETE)
    centers = [v for v, d in degs.items() if d == m - 1]
    if len(centers) == 1 and all(
        degs[v] == 1 for v in q.nodes if v != centers[0]
    ):
        center = centers[0]
        if at is None:
            return QuotientKind(STAR, center=center)
        if at == center:
            return QuotientKind(STAR_CENTER, center=center)
        return QuotientKind(STAR_SPOKE, center=center)
    return QuotientKind(PRIME)


def join_validity(a: str, b: str) -> bool:
    """Whether two quotient kinds may sit across a strong split.

    Invalid combinations (they would merge into one quotient): complete
    with complete, and star-center opposite star-spoke.  Prime joined with
    anything is valid.
    """
    invalid = {(COMPLETE, COMPLETE), (STAR_CENTER, STAR_SPOKE), (STAR_SPOKE, STAR_CENTER)}
    return (a, b) not in invalid


# -- pendant/twin elimination (reverse one-vertex extensions) -----------------


def _graph_adj_dict(g: SimpleGraph) -> dict[int, set[int]]:
    return {v: neighborhood(g, v) for v in range(1, g.n + 1)}


def eliminate_extensions(
    g: SimpleGraph,
) -> tuple[dict[int, set[int]], list[tuple[str, int, int]]]:
    """Greedily strip pendants and twins, recording the reversed trace.

    Returns the irreducible kernel (adjacency dict over surviving original
    labels) and a list of (kind, anchor, removed) steps in removal order.
    Replaying the steps in reverse rebuilds g by one-vertex extensions.
    A graph is distance-hereditary exactly when the kernel is one vertex.
    """
    adj = _graph_adj_dict(g)
    trace: list[tuple[str, int, int]] = []
    changed = True
    while changed and len(adj) > 1:
        changed = False
        verts = sorted(adj)
        for v in verts:
            if len(adj[v]) == 1:
                anchor = next(iter(adj[v]))
                adj[anchor].discard(v)
                del adj[v]
                trace.append(("pendant", anchor, v))
                changed = True
                break
        if changed:
            continue
        for u, v in itertools.combinations(verts, 2):
            if adj[u] - {v} == adj[v] - {u}:
                kind = "true_twin" if v in adj[u] else "false_twin"
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                trace.append((kind, u, v))
                changed = True
                break
    return adj, trace


def is_distance_hereditary(g: SimpleGraph) -> bool:
    """True iff g reduces to one vertex by pendant/twin elimination.

    Equivalently (and checked in the tests): every quotient in the split
    decomposition is a star or complete graph.
    """
    if not is_connected(g):
        raise NotConnectedError("distance-hereditary test requires a connected graph")
    kernel, _ = eliminate_extensions(g)
    return len(kernel) == 1


def dh_definition_oracle(g: SimpleGraph) -> bool:
    """Literal definition: connected induced subgraphs preserve distances."""
    if not is_connected(g):
        raise NotConnectedError("distance-hereditary test requires a connected graph")
    if g.n > 10:
        raise SizeLimitError("definition oracle limited to 10 vertices")

    def distances(graph: SimpleGraph) -> dict[tuple[int, int], int]:
        dist = {}
        for src in range(1, graph.n + 1):
            seen = {src: 0}
            queue = deque([src])
            while queue:
                u = queue.popleft()
                for w in neighborhood(graph, u):
                    if w not in seen:
                        seen[w] = seen[u] + 1
                        queue.append(w)
            for t, d in seen.items():
                dist[(src, t)] = d
        return dist

    base = distances(g)
    verts = list(range(1, g.n + 1))
    for r in range(2, g.n + 1):
        for combo in itertools.combinations(verts, r):
            sub, labels = induced_subgraph(g, combo)
            if not is_connected(sub):
                continue
            for (u, v), d in distances(sub).items():
                if base[(labels[u], labels[v])] != d:
                    return False
    return True


# -- decomposition -----------------------------------------------------------


def _adj_is_star_or_complete(adj: dict) -> bool:
    m = len(adj)
    if m <= 3:
        # No nontrivial split fits in three nodes; K3/P3/K2/K1 are quotients.
        return True
    degs = [len(nb) for nb in adj.values()]
    if all(d == m - 1 for d in degs):
        return True
    return sorted(degs) == [1] * (m - 1) + [m - 1]


def _decompose_adj(adj: dict, pair_counter: itertools.count):
    """Recursive brute-force decomposition of an adjacency dict.

    Nodes are original labels or ("s", pair_id, side) markers.  Returns
    (components, pairs) where each component is an adjacency dict with no
    nontrivial strong split and pairs lists matched marker couples.
    """
    if _adj_is_star_or_complete(adj):
        return [adj], []
    nodes = sorted(adj, key=_marker_sort_key)
    index = {v: i for i, v in enumerate(nodes)}
    bit_adj = [0] * len(nodes)
    for v, nb in adj.items():
        for w in nb:
            bit_adj[index[v]] |= 1 << index[w]
    full = (1 << len(nodes)) - 1
    splits = _all_split_masks(bit_adj, full)
    nontrivial = sorted(
        a for a in splits
        if a.bit_count() >= 2 and (full ^ a).bit_count() >= 2
    )
    strong = None
    for a in nontrivial:
        b = full ^ a
        if all(
            not _masks_cross(a, b, t, full ^ t)
            for t in splits
            if t != a
        ):
            strong = a
            break
    if strong is None:
        return [adj], []
    amask = strong
    bmask = full ^ amask
    side_a = {nodes[i] for i in range(len(nodes)) if amask >> i & 1}
    side_b = {nodes[i] for i in range(len(nodes)) if bmask >> i & 1}
    boundary_a = {v for v in side_a if adj[v] & side_b}
    boundary_b = {v for v in side_b if adj[v] & side_a}
    pid = next(pair_counter)
    ma = ("s", pid, 0)
    mb = ("s", pid, 1)
    adj_a = {v: (adj[v] & side_a) | ({ma} if v in boundary_a else set()) for v in side_a}
    adj_a[ma] = set(boundary_a)
    adj_b = {v: (adj[v] & side_b) | ({mb} if v in boundary_b else set()) for v in side_b}
    adj_b[mb] = set(boundary_b)
    comps_a, pairs_a = _decompose_adj(adj_a, pair_counter)
    comps_b, pairs_b = _decompose_adj(adj_b, pair_counter)
    return comps_a + comps_b, pairs_a + pairs_b + [(ma, mb)]


def _marker_sort_key(node) -> tuple:
    if isinstance(node, tuple):
        return (1, node[1], node[2])
    return (0, node, 0)


def _qasst_from_adj_components(components: list[dict], pairs: list[tuple]) -> Qasst:
    """Assemble a Qasst from decomposed components and marker pairs."""
    marker_home = {}
    for ci, comp in enumerate(components):
        for v in comp:
            if isinstance(v, tuple):
                marker_home[v] = ci

    def comp_order_key(ci: int):
        leaves = [v for v in components[ci] if isinstance(v, int)]
        if leaves:
            return (1, min(leaves))
        return (0, ci)

    order = sorted(range(len(components)), key=comp_order_key)
    newindex = {ci: i for i, ci in enumerate(order)}
    marker_name: dict[tuple, SplitNode] = {}
    for ma, mb in pairs:
        qa = newindex[marker_home[ma]]
        qb = newindex[marker_home[mb]]
        marker_name[ma] = SplitNode(qa, qb)
        marker_name[mb] = SplitNode(qb, qa)

    def rename(v) -> Node:
        return marker_name[v] if isinstance(v, tuple) else v

    quotients = {}
    for ci, comp in enumerate(components):
        edges = set()
        for v, nb in comp.items():
            for w in nb:
                edges.add(frozenset((rename(v), rename(w))))
        quotients[newindex[ci]] = QuotientGraph((rename(v) for v in comp), edges)
    return Qasst(quotients)


def compute_qasst_by_splits(g: SimpleGraph) -> Qasst:
    """Reference decomposition by explicit strong-split search.

    Exponential in the component sizes; used as the independent oracle in
    tests and on the small irreducible kernels of the production path.
    """
    if g.n < 1:
        raise ValueError("decomposition needs n >= 1")
    if not is_connected(g):
        raise NotConnectedError("decomposition requires a connected graph")
    components, pairs = _decompose_adj(_graph_adj_dict(g), itertools.count())
    q = _qasst_from_adj_components(components, pairs)
    q.validate()
    return q


def compute_qasst(g: SimpleGraph) -> Qasst:
    """The unique minimal split decomposition of a connected graph.

    Fast path: strip pendants/twins down to an irreducible kernel, decompose
    the kernel by explicit split search, then replay the stripped
    extensions forward through the quotient tree.  For distance-hereditary
    graphs the kernel is a single vertex and no split search happens.
    """
    if g.n < 1:
        raise ValueError("decomposition needs n >= 1")
    if not is_connected(g):
        raise NotConnectedError("decomposition requires a connected graph")
    if g.n <= 2:
        return single_quotient_qasst(g)
    kernel, trace = eliminate_extensions(g)
    if len(kernel) == 1:
        root = next(iter(kernel))
        q = Qasst({0: QuotientGraph([root])})
    else:
        comps, pairs = _decompose_adj(kernel, itertools.count())
        q = _qasst_from_adj_components(comps, pairs)
    from . import qasst_ops  # deferred: qasst_ops builds on this module

    for kind, anchor, removed in reversed(trace):
        q = qasst_ops.extend_with_label(q, kind, anchor, removed)
    q = q.normalize()
    q.validate()
    return q


# -- serialization -----------------------------------------------------------


def to_json_dict(q: Qasst) -> dict:
    q = q.normalize()
    quotients = []
    for i in sorted(q.quotients):
        quot = q.quotients[i]
        edges = sorted(
            (sorted((_node_json(a), _node_json(b)), key=_json_node_key)
             for a, b in (tuple(e) for e in quot.edges)),
            key=lambda e: (_json_node_key(e[0]), _json_node_key(e[1])),
        )
        quotients.append(
            {
                "leaf_nodes": sorted(quot.leaf_nodes()),
                "split_nodes": [
                    {"i": s.i, "j": s.j} for s in sorted(quot.split_nodes())
                ],
                "edges": edges,
            }
        )
    tree_edges = [
        [{"i": a.i, "j": a.j}, {"i": b.i, "j": b.j}] for a, b in q.tree_edges()
    ]
    return {"quotients": quotients, "tree_edges": tree_edges}


def _node_json(node: Node):
    if isinstance(node, SplitNode):
        return {"i": node.i, "j": node.j}
    return node


def _json_node_key(nj) -> tuple:
    if isinstance(nj, dict):
        return (1, nj["i"], nj["j"])
    return (0, nj, 0)


def _node_from_json(nj) -> Node:
    if isinstance(nj, dict):
        return SplitNode(int(nj["i"]), int(nj["j"]))
    return int(nj)


def from_json_dict(data: dict) -> Qasst:
    quotients = {}
    for i, qd in enumerate(data["quotients"]):
        nodes: list[Node] = [int(v) for v in qd["leaf_nodes"]]
        nodes += [SplitNode(int(s["i"]), int(s["j"])) for s in qd["split_nodes"]]
        edges = {
            frozenset((_node_from_json(a), _node_from_json(b)))
            for a, b in qd["edges"]
        }
        quotients[i] = QuotientGraph(nodes, edges)
    q = Qasst(quotients)
    q.validate()
    return q


def to_dot(q: Qasst) -> str:
    """Quotient tree as DOT: leaf-nodes circles, split-nodes boxes."""
    q = q.normalize()
    lines = ["graph QASST {"]
    for i in sorted(q.quotients):
        quot = q.quotients[i]
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="Q{i}";')
        for v in sorted(quot.leaf_nodes()):
            lines.append(f'    q{i}_{v} [label="{v}", shape=circle];')
        for s in sorted(quot.split_nodes()):
            lines.append(f'    s_{s.i}_{s.j} [label="s{s.i}^{s.j}", shape=box];')
        for e in sorted((sorted(e, key=node_sort_key) for e in quot.edges),
                        key=lambda e: (node_sort_key(e[0]), node_sort_key(e[1]))):
            lines.append(f"    {_dot_id(i, e[0])} -- {_dot_id(i, e[1])};")
        lines.append("  }")
    for a, b in q.tree_edges():
        lines.append(
            f"  s_{a.i}_{a.j} -- s_{b.i}_{b.j} [style=bold, color=red];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(i: int, node: Node) -> str:
    if isinstance(node, SplitNode):
        return f"s_{node.i}_{node.j}"
    return f"q{i}_{node}"

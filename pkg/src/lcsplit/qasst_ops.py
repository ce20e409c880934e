"""Dynamic maintenance of quotient trees.

Three ways a quotient tree evolves without being recomputed from scratch:

- :func:`lc_propagate`: a local complement at an original vertex touches
  its quotient and is transmitted across split-node pairs to neighbors.
- :func:`induced_qasst`: deleting vertices, then re-merging quotient pairs
  whose connecting split stopped being strong.
- :func:`extend`: one-vertex extensions (pendant / false twin / true twin),
  where the anchor's quotient either grows in place or splits off a fresh
  three-node quotient.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidVertexError, MalformedQasstError, NotConnectedError
from .graphs import SimpleGraph, induced_subgraph, is_connected, neighborhood
from .qasst import (
    COMPLETE,
    PRIME,
    STAR,
    STAR_CENTER,
    STAR_SPOKE,
    Qasst,
    QuotientGraph,
    SplitNode,
    classify_quotient,
    join_validity,
    reconstruct,
)

PENDANT = "pendant"
FALSE_TWIN = "false_twin"
TRUE_TWIN = "true_twin"
EXTENSION_KINDS = (PENDANT, FALSE_TWIN, TRUE_TWIN)


@dataclass(frozen=True)
class ExtensionKind:
    tag: str
    anchor: int

    def __post_init__(self):
        if self.tag not in EXTENSION_KINDS:
            raise ValueError(f"unknown extension kind {self.tag!r}")


# -- LC propagation ----------------------------------------------------------


def lc_propagate(q: Qasst, v: int) -> Qasst:
    """Quotient tree of the local complement at leaf-node v.

    Complements v's quotient at v; every split-node adjacent to the
    complemented node transmits the complement to its partner, recursively.
    The tree structure guarantees termination; the visited set is a
    defensive guard.
    """
    out = q.copy()
    start = out.leaf_quotient(v)  # raises if v is not a leaf-node
    visited: set[tuple[int, object]] = set()
    stack: list[tuple[int, object]] = [(start, v)]
    while stack:
        i, node = stack.pop()
        if (i, node) in visited:
            continue
        visited.add((i, node))
        quot = out.quotients[i]
        nbrs = quot.neighbors(node)
        quot.local_complement_at(node)
        for s in nbrs:
            if isinstance(s, SplitNode):
                stack.append((s.j, s.partner))
    return out


# -- induced subgraph --------------------------------------------------------


def induced_qasst(q: Qasst, keep) -> Qasst:
    """Quotient tree of the induced subgraph on ``keep``.

    Deletes excluded leaf-nodes, then repeatedly merges across tree edges
    that are no longer strong splits: quotient pairs classifying c-c,
    sc-ss or ss-sc, and any quotient reduced to one or two nodes.  Merge
    order is ascending by quotient index pair; the result is unique
    regardless (asserted against recomputation in the tests).

    Intended for trees whose quotients are stars or completes (the
    distance-hereditary case); a pruned prime quotient is kept as-is.
    """
    keep_set = set(keep)
    leaves = q.leaves()
    if not keep_set:
        raise ValueError("keep set must be nonempty")
    if not keep_set <= leaves:
        raise InvalidVertexError(f"keep set contains non-vertices: {sorted(keep_set - leaves)}")
    g = reconstruct(q)
    sub, _ = induced_subgraph(g, keep_set)
    if not is_connected(sub):
        raise NotConnectedError("induced subgraph is not connected")

    out = q.copy()
    for quot in out.quotients.values():
        for v in sorted(quot.leaf_nodes()):
            if v not in keep_set:
                quot.remove_node(v)
    while len(out.quotients) > 1:
        edge = _first_merge_edge(out)
        if edge is None:
            break
        _merge_tree_edge(out, edge)
    return out


def _first_merge_edge(q: Qasst):
    for sa, sb in q.tree_edges():
        qa = q.quotients[sa.i]
        qb = q.quotients[sb.i]
        if len(qa.nodes) <= 2 or len(qb.nodes) <= 2:
            return (sa, sb)
        ka = classify_quotient(qa, sa).kind
        kb = classify_quotient(qb, sb).kind
        if not join_validity(ka, kb):
            return (sa, sb)
    return None


def _merge_tree_edge(q: Qasst, edge) -> None:
    sa, sb = edge
    i, j = sa.i, sb.i
    qa = q.quotients[i]
    qb = q.quotients[j]
    na = qa.neighbors(sa)
    nb = qb.neighbors(sb)
    qa.remove_node(sa)
    qb.remove_node(sb)
    # Re-home quotient j's remaining split-nodes (and their partners) to i.
    rename = {s: SplitNode(i, s.j) for s in qb.split_nodes()}
    for old, new in rename.items():
        partner_quot = q.quotients[old.j]
        _rename_node(partner_quot, old.partner, new.partner)
    _apply_rename(qb, rename)
    nb = {rename.get(v, v) for v in nb}
    qa.nodes |= qb.nodes
    qa.edges |= qb.edges
    for u in na:
        for w in nb:
            qa.add_edge(u, w)
    del q.quotients[j]


def _rename_node(quot: QuotientGraph, old, new) -> None:
    quot.nodes.discard(old)
    quot.nodes.add(new)
    quot.edges = {
        frozenset(new if v == old else v for v in e) for e in quot.edges
    }


def _apply_rename(quot: QuotientGraph, rename: dict) -> None:
    quot.nodes = {rename.get(v, v) for v in quot.nodes}
    quot.edges = {frozenset(rename.get(v, v) for v in e) for e in quot.edges}


# -- one-vertex extensions ---------------------------------------------------


def extend(q: Qasst, e: ExtensionKind, p: int) -> Qasst:
    """Quotient tree after a one-vertex extension adding vertex p."""
    expected = q.n + 1
    if p != expected:
        raise InvalidVertexError(f"new vertex must be n+1 = {expected}, got {p}")
    out, _ = extend_with_subcase(q, e.tag, e.anchor, p)
    return out


def extend_with_label(q: Qasst, kind: str, anchor: int, new_label: int) -> Qasst:
    """Extension with an arbitrary (unused) new leaf label; internal."""
    out, _ = extend_with_subcase(q, kind, anchor, new_label)
    return out


def extend_with_subcase(
    q: Qasst, kind: str, anchor: int, new: int
) -> tuple[Qasst, str]:
    """Apply one extension subcase; returns the tree and the subcase id.

    Subcase ids follow the quotient shape at the anchor: 1 = star center,
    2 = star spoke, 3 = complete, 4 = prime; a/b/c = pendant / false twin /
    true twin.  One- and two-node quotients (necessarily the whole tree)
    grow in place.
    """
    if kind not in EXTENSION_KINDS:
        raise ValueError(f"unknown extension kind {kind!r}")
    out = q.copy()
    if new in out.leaves():
        raise InvalidVertexError(f"vertex {new} already present")
    i = out.leaf_quotient(anchor)
    quot = out.quotients[i]
    m = len(quot.nodes)

    if m == 1:
        if kind == FALSE_TWIN:
            raise NotConnectedError("false twin of an isolated vertex disconnects")
        quot.nodes.add(new)
        quot.add_edge(anchor, new)
        return out, "degenerate-1"
    if m == 2:
        other = next(iter(quot.nodes - {anchor}))
        quot.nodes.add(new)
        if kind == PENDANT:
            quot.add_edge(anchor, new)
        elif kind == FALSE_TWIN:
            quot.add_edge(other, new)
        else:
            quot.add_edge(anchor, new)
            quot.add_edge(other, new)
        return out, "degenerate-2"

    shape = classify_quotient(quot)
    if shape.kind == STAR and anchor == shape.center:
        if kind == PENDANT:  # 1a: grow a spoke
            quot.nodes.add(new)
            quot.add_edge(anchor, new)
            return out, "1a"
        if kind == FALSE_TWIN:  # 1b: split off an sc triple {anchor, new}
            _split_off(out, i, anchor, new, "sc")
            return out, "1b"
        _split_off(out, i, anchor, new, "k3")  # 1c
        return out, "1c"
    if shape.kind == STAR:
        if kind == PENDANT:  # 2a: split off an ss triple centered at anchor
            _split_off(out, i, anchor, new, "ss")
            return out, "2a"
        if kind == FALSE_TWIN:  # 2b: grow a spoke
            quot.nodes.add(new)
            quot.add_edge(shape.center, new)
            return out, "2b"
        _split_off(out, i, anchor, new, "k3")  # 2c
        return out, "2c"
    if shape.kind == COMPLETE:
        if kind == PENDANT:  # 3a
            _split_off(out, i, anchor, new, "ss")
            return out, "3a"
        if kind == FALSE_TWIN:  # 3b
            _split_off(out, i, anchor, new, "sc")
            return out, "3b"
        existing = sorted(quot.nodes, key=lambda v: (isinstance(v, SplitNode), str(v)))
        quot.nodes.add(new)  # 3c: grow a fully connected vertex
        for w in existing:
            quot.add_edge(w, new)
        return out, "3c"
    # Prime quotient: always splits.
    if kind == PENDANT:
        _split_off(out, i, anchor, new, "ss")
        return out, "4a"
    if kind == FALSE_TWIN:
        _split_off(out, i, anchor, new, "sc")
        return out, "4b"
    _split_off(out, i, anchor, new, "k3")
    return out, "4c"


def _split_off(q: Qasst, i: int, anchor: int, new: int, shape: str) -> None:
    """Replace the anchor by a split-node and attach a 3-node quotient.

    The new quotient holds {anchor, new, split-node} shaped as star-spoke
    ("ss", center anchor), star-center ("sc", center split-node), or a
    triangle ("k3").
    """
    m = max(q.quotients) + 1
    s_im = SplitNode(i, m)
    s_mi = SplitNode(m, i)
    quot = q.quotients[i]
    nbrs = quot.neighbors(anchor)
    quot.remove_node(anchor)
    quot.nodes.add(s_im)
    for w in nbrs:
        quot.add_edge(s_im, w)
    q2 = QuotientGraph([anchor, new, s_mi])
    if shape == "ss":
        q2.add_edge(anchor, new)
        q2.add_edge(anchor, s_mi)
    elif shape == "sc":
        q2.add_edge(s_mi, anchor)
        q2.add_edge(s_mi, new)
    else:
        q2.add_edge(anchor, new)
        q2.add_edge(anchor, s_mi)
        q2.add_edge(new, s_mi)
    q.quotients[m] = q2


def extend_graph(g: SimpleGraph, kind: str, anchor: int) -> SimpleGraph:
    """Graph-level one-vertex extension; the new vertex is n+1."""
    g._check_vertex(anchor)
    p = g.n + 1
    edges = g.edges()
    if kind == PENDANT:
        edges.append((anchor, p))
    elif kind == FALSE_TWIN:
        edges.extend((w, p) for w in sorted(neighborhood(g, anchor)))
    elif kind == TRUE_TWIN:
        edges.extend((w, p) for w in sorted(neighborhood(g, anchor)))
        edges.append((anchor, p))
    else:
        raise ValueError(f"unknown extension kind {kind!r}")
    return SimpleGraph(p, edges)


def random_dh(n: int, seed) -> tuple[SimpleGraph, list[tuple[str, int, int]]]:
    """Reproducible random distance-hereditary graph with its build trace.

    Grows from a single vertex by uniformly chosen one-vertex extensions
    (false twins only at anchors with neighbors, to stay connected).
    The trace lists (kind, anchor, new vertex) in construction order.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    g = SimpleGraph(1)
    trace: list[tuple[str, int, int]] = []
    for p in range(2, n + 1):
        anchor = rng.randint(1, g.n)
        kinds = [PENDANT, TRUE_TWIN]
        if neighborhood(g, anchor):
            kinds.append(FALSE_TWIN)
        kind = rng.choice(kinds)
        g = extend_graph(g, kind, anchor)
        trace.append((kind, anchor, p))
    return g, trace

"""Symmetry classes of the complete k-partite / clique-star orbits.

Both orbits live inside one QASST equivalence class: a central quotient Q0
on k split-nodes with one outer quotient per vertex block.  A symmetry
class fixes the quotient kinds:

- case 1:    Q0 complete; blocks in I star-spoke, the rest star-center.
- case 2(j): Q0 star-center toward Q_j; Q_j star-center; I star-spoke,
             the rest complete.
- case 3(j): like 2(j) but Q_j complete.

The parity of |I| decides the orbit: for the k-partite orbit case 1 and
case 2 take even |I| and case 3 odd; for the clique-star orbit the
parities flip.  This module enumerates the classes, realizes them as
labeled graphs, synthesizes explicit LC sequences from the base graph, and
classifies how a single local complement moves between classes (the
closure rules behind the non-equivalence of the two orbits).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidCaseError, InvalidSpecError, MalformedQasstError
from .families import CLIQUE_STAR, KPARTITE, block_ranges
from .graphs import SimpleGraph, apply_sequence
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
    compute_qasst,
    reconstruct,
)

SS_CENTER = "ss_center"
SS_SPOKE = "ss_spoke"
SC_NODE = "sc"
C_NODE = "c"


@dataclass(frozen=True)
class SymmetryCase:
    tag: str  # KPartite | CliqueStar
    case_id: int  # 1 | 2 | 3
    j: Optional[int]  # pointer block for cases 2/3
    I: frozenset  # star-spoke blocks
    centers: Optional[dict] = None  # block -> chosen star-center vertex

    def __post_init__(self):
        if self.tag not in (KPARTITE, CLIQUE_STAR):
            raise InvalidCaseError(f"unknown orbit tag {self.tag!r}")
        if self.case_id not in (1, 2, 3):
            raise InvalidCaseError(f"case id must be 1, 2 or 3, got {self.case_id}")
        if self.case_id == 1:
            if self.j is not None:
                raise InvalidCaseError("case 1 takes no pointer index")
        else:
            if self.j is None:
                raise InvalidCaseError(f"case {self.case_id} needs a pointer index j")
            if self.j in self.I:
                raise InvalidCaseError("pointer index j must not lie in I")
        if not _parity_ok(self.tag, self.case_id, len(self.I)):
            raise InvalidCaseError(
                f"|I| = {len(self.I)} has the wrong parity for "
                f"{self.tag} case {self.case_id}"
            )


def _parity_ok(tag: str, case_id: int, size: int) -> bool:
    even = size % 2 == 0
    if tag == KPARTITE:
        return even if case_id in (1, 2) else not even
    return not even if case_id in (1, 2) else even


def case_assignment(case: SymmetryCase, k: int):
    """(Q0 kind, per-block kinds) for a symmetry case."""
    for i in case.I:
        if not (1 <= i <= k):
            raise InvalidCaseError(f"block index {i} out of 1..{k}")
    if case.case_id == 1:
        kinds = tuple("ss" if i in case.I else "sc" for i in range(1, k + 1))
        return "c", kinds
    if case.j is None or not (1 <= case.j <= k):
        raise InvalidCaseError(f"pointer index {case.j} out of 1..{k}")
    pointed = "sc" if case.case_id == 2 else "c"
    kinds = tuple(
        pointed if i == case.j else ("ss" if i in case.I else "c")
        for i in range(1, k + 1)
    )
    return ("sc", case.j), kinds


def enumerate_cases(
    tag: str, n_list: Sequence[int]
) -> list[tuple[SymmetryCase, int]]:
    """Every symmetry class with its member count (choices of ss centers).

    The multiplicity of a class is prod_{i in I} n_i; summed over all
    classes this equals the orbit-size formula.
    """
    if len(n_list) < 3 or any(n < 2 for n in n_list):
        raise InvalidSpecError("need k >= 3 blocks with all n_i >= 2")
    k = len(n_list)
    out: list[tuple[SymmetryCase, int]] = []

    def subsets(pool, parity_even):
        for r in range(len(pool) + 1):
            if (r % 2 == 0) != parity_even:
                continue
            yield from itertools.combinations(pool, r)

    even1 = _parity_ok(tag, 1, 0)
    for I in subsets(range(1, k + 1), even1):
        case = SymmetryCase(tag, 1, None, frozenset(I))
        out.append((case, math.prod(n_list[i - 1] for i in I)))
    for case_id in (2, 3):
        even = _parity_ok(tag, case_id, 0)
        for j in range(1, k + 1):
            pool = [i for i in range(1, k + 1) if i != j]
            for I in subsets(pool, even):
                case = SymmetryCase(tag, case_id, j, frozenset(I))
                out.append((case, math.prod(n_list[i - 1] for i in I)))
    return out


def build_star_qasst(
    n_list: Sequence[int], q0_kind, kinds, centers: Optional[dict] = None
) -> Qasst:
    """The star-shaped QASST for an assignment of quotient kinds."""
    k = len(n_list)
    blocks = block_ranges(n_list)
    centers = centers or {}
    q0 = QuotientGraph(SplitNode(0, i) for i in range(1, k + 1))
    if q0_kind == "c":
        for a, b in itertools.combinations(range(1, k + 1), 2):
            q0.add_edge(SplitNode(0, a), SplitNode(0, b))
    else:
        j = q0_kind[1]
        for i in range(1, k + 1):
            if i != j:
                q0.add_edge(SplitNode(0, j), SplitNode(0, i))
    quotients = {0: q0}
    for i, (block, kind) in enumerate(zip(blocks, kinds), start=1):
        s = SplitNode(i, 0)
        quot = QuotientGraph(list(block) + [s])
        if kind == "c":
            nodes = list(block) + [s]
            for a, b in itertools.combinations(nodes, 2):
                quot.add_edge(a, b)
        elif kind == "sc":
            for v in block:
                quot.add_edge(s, v)
        elif kind == "ss":
            center = centers.get(i, block[0])
            if center not in block:
                raise InvalidCaseError(f"center {center} not in block {i}")
            for v in block:
                if v != center:
                    quot.add_edge(center, v)
            quot.add_edge(center, s)
        else:
            raise InvalidCaseError(f"unknown quotient kind {kind!r}")
        quotients[i] = quot
    return Qasst(quotients)


def realize(
    case: SymmetryCase, n_list: Sequence[int], centers: Optional[dict] = None
) -> SimpleGraph:
    """The labeled graph of a symmetry class (default centers: first of block)."""
    q0_kind, kinds = case_assignment(case, len(n_list))
    return reconstruct(
        build_star_qasst(n_list, q0_kind, kinds, centers or case.centers)
    )


# -- transformations -----------------------------------------------------------


def component_edge_pivot_sequence(g: SimpleGraph, i: int, j: int) -> list[int]:
    """The lenient edge pivot: identity when i = j or (i,j) is a non-edge."""
    if i == j or not g.has_edge(i, j):
        return []
    return [i, j, i]


def component_edge_pivot(g: SimpleGraph, i: int, j: int) -> SimpleGraph:
    return apply_sequence(g, component_edge_pivot_sequence(g, i, j))


def synthesize_transformation(
    tag: str,
    case: SymmetryCase,
    n_list: Sequence[int],
    r: Optional[int] = None,
) -> list[int]:
    """An LC sequence from the base graph into the symmetry class.

    The base is K_{n_1..n_k} for the k-partite orbit and CS^r (default
    r = 1) for the clique-star orbit.  Star centers default to the first
    vertex of each block; case 1 of the k-partite orbit chains edge pivots
    over consecutive pairs of I in ascending order.
    """
    if case.tag != tag:
        raise InvalidCaseError("case belongs to a different orbit")
    k = len(n_list)
    blocks = block_ranges(n_list)
    centers = dict(case.centers or {})

    def center_of(i: int) -> int:
        return centers.get(i, blocks[i - 1][0])

    def first_of(i: int) -> int:
        return blocks[i - 1][0]

    if tag == KPARTITE:
        I = sorted(case.I)
        if case.case_id == 1:
            seq: list[int] = []
            for a, b in zip(I[0::2], I[1::2]):
                la, lb = center_of(a), center_of(b)
                seq.extend([la, lb, la])
            return seq
        return [first_of(case.j)] + [center_of(i) for i in I]

    if r is None:
        r = 1
    if not (1 <= r <= k):
        raise InvalidSpecError(f"base center r must be in 1..{k}")
    if case.case_id == 1:
        seq = [center_of(i) for i in sorted(case.I) if i != r]
        seq.append(center_of(r) if r in case.I else first_of(r))
        return seq
    seq = [] if r == case.j else [first_of(r), first_of(case.j), first_of(r)]
    return seq + [center_of(i) for i in sorted(case.I)]


# -- member classification and closure ----------------------------------------


def analyze_star_member(
    g: SimpleGraph, n_list: Sequence[int], tag: Optional[str] = None
) -> tuple[SymmetryCase, dict]:
    """Classify an orbit member into its symmetry class.

    Also returns the role of every vertex: a map v -> (role, block) with
    role one of ss_center / ss_spoke / sc / c.  The orbit tag can be
    supplied or inferred from the |I| parity.
    """
    k = len(n_list)
    blocks = block_ranges(n_list)
    block_of_leafset = {frozenset(b): i for i, b in enumerate(blocks, start=1)}
    q = compute_qasst(g)
    if len(q.quotients) != k + 1:
        raise MalformedQasstError("graph does not have the star-shaped QASST")
    central = None
    outer: dict[int, QuotientGraph] = {}
    for quot in q.quotients.values():
        leaves = frozenset(quot.leaf_nodes())
        if not leaves:
            central = quot
        else:
            block = block_of_leafset.get(leaves)
            if block is None:
                raise MalformedQasstError(f"leaf block {sorted(leaves)} unexpected")
            outer[block] = quot
    if central is None or len(outer) != k:
        raise MalformedQasstError("graph does not have the star-shaped QASST")

    central_index = next(iter(central.split_nodes())).i
    block_of_quotient = {
        next(iter(outer[b].split_nodes())).i: b for b in outer
    }
    roles: dict[int, tuple[str, int]] = {}
    kinds: dict[int, str] = {}
    for b, quot in outer.items():
        s = next(iter(quot.split_nodes()))
        kind = classify_quotient(quot, s)
        kinds[b] = kind.kind
        for v in quot.leaf_nodes():
            if kind.kind == STAR_SPOKE:
                role = SS_CENTER if v == kind.center else SS_SPOKE
            elif kind.kind == STAR_CENTER:
                role = SC_NODE
            elif kind.kind == COMPLETE:
                role = C_NODE
            else:
                raise MalformedQasstError("prime outer quotient")
            roles[v] = (role, b)

    central_kind = classify_quotient(central)
    I = frozenset(b for b, kind in kinds.items() if kind == STAR_SPOKE)
    centers = {
        b: next(v for v, (role, bb) in roles.items() if bb == b and role == SS_CENTER)
        for b in I
    }
    if central_kind.kind == COMPLETE:
        case_id, j = 1, None
    elif central_kind.kind == STAR:
        j = block_of_quotient[central_kind.center.j]
        if kinds[j] == STAR_CENTER:
            case_id = 2
        elif kinds[j] == COMPLETE:
            case_id = 3
        else:
            raise MalformedQasstError("pointed quotient is star-spoke")
    else:
        raise MalformedQasstError("central quotient is neither star nor complete")
    if tag is None:
        even = len(I) % 2 == 0
        if case_id in (1, 2):
            tag = KPARTITE if even else CLIQUE_STAR
        else:
            tag = CLIQUE_STAR if even else KPARTITE
    return SymmetryCase(tag, case_id, j, I, centers), roles


def classify_star_member(
    g: SimpleGraph, n_list: Sequence[int], tag: Optional[str] = None
) -> SymmetryCase:
    return analyze_star_member(g, n_list, tag)[0]


def classify_bipartite_member(g: SimpleGraph, n: int, m: int) -> tuple[str, str]:
    """Kind pair (block-1 quotient, block-2 quotient) of a K_{n,m} orbit member."""
    q = compute_qasst(g)
    if len(q.quotients) != 2:
        raise MalformedQasstError("graph does not have the two-quotient QASST")
    blocks = {frozenset(range(1, n + 1)): 0, frozenset(range(n + 1, n + m + 1)): 1}
    kinds: list[Optional[str]] = [None, None]
    for quot in q.quotients.values():
        b = blocks.get(frozenset(quot.leaf_nodes()))
        if b is None:
            raise MalformedQasstError("leaf blocks do not match the bipartition")
        s = next(iter(quot.split_nodes()))
        kinds[b] = classify_quotient(quot, s).kind
    assert kinds[0] is not None and kinds[1] is not None
    return kinds[0], kinds[1]


def closure_step(tag: str, case: SymmetryCase, role: tuple[str, int]) -> tuple[int, Optional[int]]:
    """Resulting (case id, pointer) after one LC at a vertex with this role.

    ``role`` is (role kind, block index) as produced by
    :func:`analyze_star_member`.  The same rules govern both orbits; the
    case never leaves its orbit, which is what makes the two orbits
    provably disjoint.
    """
    kind, i = role
    if case.tag != tag:
        raise InvalidCaseError("case belongs to a different orbit")
    cid, j, I = case.case_id, case.j, case.I
    if cid == 1:
        if kind == SS_CENTER and i in I:
            return (3, i)
        if kind == SS_SPOKE and i in I:
            return (1, None)
        if kind == SC_NODE and i not in I:
            return (2, i)
        raise InvalidCaseError(f"role {role} impossible in case 1")
    if cid == 2:
        if kind == SC_NODE and i == j:
            return (1, None)
        if kind == SS_CENTER and i in I:
            return (3, j)
        if kind == SS_SPOKE and i in I:
            return (2, j)
        if kind == C_NODE and i not in I and i != j:
            return (3, j)
        raise InvalidCaseError(f"role {role} impossible in case 2({j})")
    if kind == C_NODE and i == j:
        return (1, None)
    if kind == SS_CENTER and i in I:
        return (2, j)
    if kind == SS_SPOKE and i in I:
        return (3, j)
    if kind == C_NODE and i not in I and i != j:
        return (2, j)
    raise InvalidCaseError(f"role {role} impossible in case 3({j})")

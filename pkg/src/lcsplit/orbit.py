"""Brute-force enumeration of local-complement orbits.

The orbit of a graph is its closure under the n primitive local
complements.  Enumeration is a breadth-first search over labeled graphs,
de-duplicated by canonical key, and serves as the ground-truth oracle for
every closed-form count in :mod:`lcsplit.counting`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import BudgetExceededError, NotEquivalentError
from .graphs import (
    LcSequence,
    SimpleGraph,
    apply_sequence,
    canonical_key,
    edge_count,
    find_isomorphism,
    local_complement,
    max_degree,
)

DEFAULT_BUDGET = 10**6


@dataclass
class Orbit:
    """A fully enumerated LC orbit.

    ``members`` maps canonical key -> graph.  ``parent`` (kept only when
    requested) maps a member's key to (predecessor key, pivot vertex) for
    transformation extraction; the base maps to None.
    """

    base: SimpleGraph
    members: dict[bytes, SimpleGraph]
    parent: Optional[dict[bytes, Optional[tuple[bytes, int]]]] = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: SimpleGraph) -> bool:
        return canonical_key(g) in self.members

    def sorted_members(self) -> list[SimpleGraph]:
        return [self.members[k] for k in sorted(self.members)]


def enumerate_orbit(
    g: SimpleGraph, limit: int = DEFAULT_BUDGET, track_parents: bool = False
) -> Orbit:
    """BFS closure of g under all primitive local complements.

    Deterministic: the frontier is FIFO and pivots are tried in ascending
    vertex order.  Raises :class:`BudgetExceededError` if the member count
    would exceed ``limit``.
    """
    if g.n < 1:
        raise ValueError("orbit enumeration needs n >= 1")
    if limit < 1:
        raise ValueError("budget must be >= 1")
    base_key = canonical_key(g)
    members: dict[bytes, SimpleGraph] = {base_key: g}
    parent: Optional[dict[bytes, Optional[tuple[bytes, int]]]] = (
        {base_key: None} if track_parents else None
    )
    queue: deque[tuple[bytes, SimpleGraph]] = deque([(base_key, g)])
    while queue:
        key, cur = queue.popleft()
        for v in range(1, g.n + 1):
            nxt = local_complement(cur, v)
            nkey = canonical_key(nxt)
            if nkey in members:
                continue
            if len(members) >= limit:
                raise BudgetExceededError(len(members), limit)
            members[nkey] = nxt
            if parent is not None:
                parent[nkey] = (key, v)
            queue.append((nkey, nxt))
    return Orbit(base=g, members=members, parent=parent)


def are_lc_equivalent(g: SimpleGraph, h: SimpleGraph, limit: int = DEFAULT_BUDGET) -> bool:
    """True iff h lies in the orbit of g.

    A budget overrun propagates as :class:`BudgetExceededError` (an
    indeterminate outcome, distinct from False).
    """
    if g.n != h.n:
        return False
    target = canonical_key(h)
    if target == canonical_key(g):
        return True
    return target in enumerate_orbit(g, limit=limit).members


def transformation_between(
    g: SimpleGraph, h: SimpleGraph, limit: int = DEFAULT_BUDGET
) -> list[int]:
    """A primitive LC sequence taking g to h, of minimal BFS depth."""
    if g.n != h.n:
        raise NotEquivalentError("graphs have different vertex counts")
    orbit = enumerate_orbit(g, limit=limit, track_parents=True)
    target = canonical_key(h)
    if target not in orbit.members:
        raise NotEquivalentError("graphs are not LC-equivalent")
    assert orbit.parent is not None
    steps: list[int] = []
    key = target
    while True:
        entry = orbit.parent[key]
        if entry is None:
            break
        key, v = entry
        steps.append(v)
    steps.reverse()
    assert apply_sequence(g, steps) == h
    return steps


def orbit_iso_classes(o: Orbit) -> list[tuple[SimpleGraph, int]]:
    """Partition orbit members into isomorphism classes.

    Returns (representative, multiplicity) pairs; representatives are the
    canonical-key-least member of each class, listed in key order.
    """
    buckets: dict[tuple, list[SimpleGraph]] = {}
    for g in o.sorted_members():
        degs = sorted(
            g.neighborhood_mask(v).bit_count() for v in range(1, g.n + 1)
        )
        buckets.setdefault((g.n, tuple(degs)), []).append(g)
    classes: list[tuple[SimpleGraph, int]] = []
    for _, graphs in buckets.items():
        reps: list[tuple[SimpleGraph, int]] = []
        for g in graphs:
            for i, (rep, count) in enumerate(reps):
                if find_isomorphism(rep, g) is not None:
                    reps[i] = (rep, count + 1)
                    break
            else:
                reps.append((g, 1))
        classes.extend(reps)
    classes.sort(key=lambda pair: canonical_key(pair[0]))
    return classes


def min_edge_member(o: Orbit) -> tuple[SimpleGraph, int]:
    """The member with fewest edges; ties broken by canonical key."""
    best = min(
        o.members.items(), key=lambda item: (edge_count(item[1]), item[0])
    )
    return best[1], edge_count(best[1])


def min_max_degree_member(o: Orbit) -> tuple[SimpleGraph, int]:
    """The member with smallest maximum degree; ties broken by canonical key."""
    best = min(
        o.members.items(), key=lambda item: (max_degree(item[1]), item[0])
    )
    return best[1], max_degree(best[1])

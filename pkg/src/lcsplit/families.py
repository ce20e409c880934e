"""Constructors for the special graph families.

Vertex labeling conventions (fixed so fixtures are reproducible):

- complete K_n, path P_n, cycle C_n: vertices 1..n in sequence.
- star S_n: n+1 vertices, center 1, spokes 2..n+1.
- complete bipartite / multipartite and clique-star: vertices numbered
  consecutively block by block, block i = {1+sum(n_1..n_{i-1}), ...}.
- multi-leaf repeater MR_{n_1..n_k}: same blocks; the first vertex of each
  block is a core vertex (the core forms K_k) and the remaining n_i - 1
  vertices of the block are leaves attached to it.
- repeater R_n is MR_{2,...,2} (n blocks), so the cores are the odd labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvalidSpecError
from .graphs import SimpleGraph

KPARTITE = "KPartite"
CLIQUE_STAR = "CliqueStar"

FAMILY_TAGS = (
    "complete",
    "star",
    "path",
    "cycle",
    "complete_bipartite",
    "complete_multipartite",
    "clique_star",
    "repeater",
    "multi_leaf_repeater",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]
    center: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILY_TAGS:
            raise InvalidSpecError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


def block_ranges(n_list: Sequence[int]) -> list[range]:
    """Consecutive vertex blocks [n_1]={1..n_1}, [n_2]={n_1+1..}, ..."""
    out = []
    start = 1
    for n in n_list:
        out.append(range(start, start + n))
        start += n
    return out


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidSpecError("complete graph needs n >= 1")
    return SimpleGraph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def star_graph(n: int) -> SimpleGraph:
    """Star S_n: n spokes on n+1 vertices; center is vertex 1."""
    if n < 1:
        raise InvalidSpecError("star graph needs n >= 1 spokes")
    return SimpleGraph(n + 1, [(1, v) for v in range(2, n + 2)])


def path_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidSpecError("path graph needs n >= 1")
    return SimpleGraph(n, [(v, v + 1) for v in range(1, n)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise InvalidSpecError("cycle graph needs n >= 3")
    return SimpleGraph(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def complete_multipartite_graph(n_list: Sequence[int]) -> SimpleGraph:
    if len(n_list) < 2 or any(n < 1 for n in n_list):
        raise InvalidSpecError("complete multipartite needs k >= 2 blocks of size >= 1")
    blocks = block_ranges(n_list)
    total = sum(n_list)
    edges = []
    for i, bi in enumerate(blocks):
        for bj in blocks[i + 1:]:
            edges.extend((u, v) for u in bi for v in bj)
    return SimpleGraph(total, edges)


def complete_bipartite_graph(n: int, m: int) -> SimpleGraph:
    return complete_multipartite_graph([n, m])


def clique_star_graph(n_list: Sequence[int], r: int) -> SimpleGraph:
    """CS^r: every block a clique, block r fully joined to all other blocks."""
    k = len(n_list)
    if k < 3 or any(n < 2 for n in n_list):
        raise InvalidSpecError("clique-star needs k >= 3 and all n_i >= 2")
    if not (1 <= r <= k):
        raise InvalidSpecError(f"clique-star center r must be in 1..{k}, got {r}")
    blocks = block_ranges(n_list)
    edges = []
    for b in blocks:
        edges.extend((u, v) for u in b for v in b if u < v)
    center = blocks[r - 1]
    for i, b in enumerate(blocks):
        if i != r - 1:
            edges.extend((u, v) for u in center for v in b)
    return SimpleGraph(sum(n_list), edges)


def multi_leaf_repeater_graph(n_list: Sequence[int]) -> SimpleGraph:
    """MR: complete core K_k, plus n_i - 1 leaves on core vertex i."""
    k = len(n_list)
    if k < 3 or any(n < 2 for n in n_list):
        raise InvalidSpecError("multi-leaf repeater needs k >= 3 and all n_i >= 2")
    blocks = block_ranges(n_list)
    cores = [b[0] for b in blocks]
    edges = [(u, v) for u in cores for v in cores if u < v]
    for b in blocks:
        edges.extend((b[0], leaf) for leaf in b[1:])
    return SimpleGraph(sum(n_list), edges)


def repeater_graph(n: int) -> SimpleGraph:
    """R_n = MR_{2,...,2}: core K_n with one leaf per core vertex."""
    if n < 3:
        raise InvalidSpecError("repeater needs n >= 3")
    return multi_leaf_repeater_graph([2] * n)


def build(spec: FamilySpec) -> SimpleGraph:
    fam, p = spec.family, spec.params
    if fam == "complete":
        _expect_params(p, 1)
        return complete_graph(p[0])
    if fam == "star":
        _expect_params(p, 1)
        return star_graph(p[0])
    if fam == "path":
        _expect_params(p, 1)
        return path_graph(p[0])
    if fam == "cycle":
        _expect_params(p, 1)
        return cycle_graph(p[0])
    if fam == "complete_bipartite":
        _expect_params(p, 2)
        return complete_bipartite_graph(p[0], p[1])
    if fam == "complete_multipartite":
        return complete_multipartite_graph(p)
    if fam == "clique_star":
        if spec.center is None:
            raise InvalidSpecError("clique_star requires a center index r")
        return clique_star_graph(p, spec.center)
    if fam == "repeater":
        _expect_params(p, 1)
        return repeater_graph(p[0])
    if fam == "multi_leaf_repeater":
        return multi_leaf_repeater_graph(p)
    raise InvalidSpecError(f"unknown family {fam!r}")


def _expect_params(p: tuple[int, ...], count: int) -> None:
    if len(p) != count:
        raise InvalidSpecError(f"expected {count} parameter(s), got {len(p)}")


def mlr_orbit_home(k: int) -> str:
    """Which orbit the multi-leaf repeater MR on k blocks belongs to.

    Even k: the complete k-partite orbit; odd k: the clique-star orbit.
    """
    if k < 3:
        raise InvalidSpecError("multi-leaf repeater needs k >= 3")
    return KPARTITE if k % 2 == 0 else CLIQUE_STAR

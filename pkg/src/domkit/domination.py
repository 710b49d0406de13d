"""Domination predicates, parameters, and enumerators for a single graph.

Everything is exact.  Parameters are found by increasing-size bounded search
(a greedy solution caps the search depth, and the search branches only inside
the neighborhood of an uncovered vertex, so no approximation is ever
returned).  Set enumerators route through the minimal-transversal backend or
a pruned subset search; both are guarded by a configurable vertex cap so an
accidental call on a large graph fails fast instead of running for hours.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexSet, iter_bits, set_sort_key
from . import hypergraphs

DEFAULT_ENUMERATION_CAP = 24


class EnumerationCapExceeded(RuntimeError):
    """Enumeration requested on a graph larger than the configured cap."""


def _check_cap(n: int, cap: int | None) -> None:
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if n > limit:
        raise EnumerationCapExceeded(
            f"graph has {n} vertices, above the enumeration cap {limit}"
        )


def _require_nonempty(graph: Graph) -> None:
    if graph.n == 0:
        raise ValueError("operation undefined on the zero-vertex graph")


def _check_universe(graph: Graph, s: VertexSet) -> None:
    if s.universe_size != graph.n:
        raise ValueError(
            f"vertex set universe {s.universe_size} does not match graph order {graph.n}"
        )


def _closed_union(graph: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= graph.closed_mask(v)
    return out


def _open_union(graph: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= graph.adj_mask(v)
    return out


def is_dominating(graph: Graph, d: VertexSet) -> bool:
    """True when every vertex is in ``d`` or adjacent to a member of ``d``."""
    _require_nonempty(graph)
    _check_universe(graph, d)
    return _closed_union(graph, d.mask) == graph.full_mask


def is_total_dominating(graph: Graph, d: VertexSet) -> bool:
    """True when every vertex, members of ``d`` included, has a neighbor in ``d``."""
    _require_nonempty(graph)
    _check_universe(graph, d)
    return _open_union(graph, d.mask) == graph.full_mask


@dataclass(frozen=True)
class DominationClassification:
    """Per-vertex view of how a set dominates a graph.

    ``barely_dominated`` vertices are dominated but not totally dominated,
    i.e. x with N[x] meeting the set exactly in {x}; they are always members.
    ``leaves`` are members with exactly one neighbor inside the set, and
    ``redundant`` are members without a private closed neighbor (their removal
    keeps the set dominating whenever it was).
    """

    graph: Graph
    dset: VertexSet
    dominated: VertexSet
    totally_dominated: VertexSet
    barely_dominated: VertexSet
    leaves: VertexSet
    redundant: VertexSet


def _leaves_mask(graph: Graph, dmask: int) -> int:
    out = 0
    for u in iter_bits(dmask):
        if (graph.adj_mask(u) & dmask).bit_count() == 1:
            out |= 1 << u
    return out


def _has_private_closed_neighbor(graph: Graph, dmask: int, u: int) -> bool:
    bu = 1 << u
    for v in iter_bits(graph.closed_mask(u)):
        if graph.closed_mask(v) & dmask == bu:
            return True
    return False


def _redundant_mask(graph: Graph, dmask: int) -> int:
    out = 0
    for u in iter_bits(dmask):
        if not _has_private_closed_neighbor(graph, dmask, u):
            out |= 1 << u
    return out


def classify(graph: Graph, d: VertexSet) -> DominationClassification:
    """Tag every vertex with its domination status relative to ``d``."""
    _require_nonempty(graph)
    _check_universe(graph, d)
    dmask = d.mask
    dominated = _closed_union(graph, dmask)
    totally = _open_union(graph, dmask)
    return DominationClassification(
        graph=graph,
        dset=d,
        dominated=VertexSet.from_mask(graph.n, dominated),
        totally_dominated=VertexSet.from_mask(graph.n, totally),
        barely_dominated=VertexSet.from_mask(graph.n, dominated & ~totally),
        leaves=VertexSet.from_mask(graph.n, _leaves_mask(graph, dmask)),
        redundant=VertexSet.from_mask(graph.n, _redundant_mask(graph, dmask)),
    )


def private_closed_neighbors(graph: Graph, d: VertexSet, u: int) -> VertexSet:
    """All v whose closed neighborhood meets ``d`` exactly in {u}."""
    _require_nonempty(graph)
    _check_universe(graph, d)
    if u not in d:
        raise ValueError(f"vertex {u} is not a member of the set")
    bu = 1 << u
    out = 0
    for v in iter_bits(graph.closed_mask(u)):
        if graph.closed_mask(v) & d.mask == bu:
            out |= 1 << v
    return VertexSet.from_mask(graph.n, out)


def _is_minimal_dominating_mask(graph: Graph, dmask: int) -> bool:
    if _closed_union(graph, dmask) != graph.full_mask:
        return False
    return all(_has_private_closed_neighbor(graph, dmask, u) for u in iter_bits(dmask))


def is_minimal_dominating(graph: Graph, d: VertexSet) -> bool:
    """Dominating, and every member keeps a private closed neighbor."""
    _require_nonempty(graph)
    _check_universe(graph, d)
    return _is_minimal_dominating_mask(graph, d.mask)


def _is_irreducible_mask(graph: Graph, dmask: int) -> bool:
    if _closed_union(graph, dmask) != graph.full_mask:
        return False
    leaves = _leaves_mask(graph, dmask)
    for u in iter_bits(dmask):
        if graph.adj_mask(u) & leaves:
            continue
        if not _has_private_closed_neighbor(graph, dmask, u):
            return False
    return True


def is_irreducible_dominating(graph: Graph, d: VertexSet) -> bool:
    """Dominating set where every member has a private closed neighbor or a leaf neighbor.

    Equivalent to the direct definition checked by
    :func:`is_irreducible_dominating_definitional`: no member can be dropped
    while preserving both domination and the set of totally dominated
    vertices.
    """
    _require_nonempty(graph)
    _check_universe(graph, d)
    return _is_irreducible_mask(graph, d.mask)


def is_irreducible_dominating_definitional(graph: Graph, d: VertexSet) -> bool:
    """Direct reducibility check, kept as the oracle for the characterization."""
    _require_nonempty(graph)
    _check_universe(graph, d)
    dmask = d.mask
    if _closed_union(graph, dmask) != graph.full_mask:
        return False
    totally = _open_union(graph, dmask)
    for u in iter_bits(dmask):
        smaller = dmask ^ (1 << u)
        if _closed_union(graph, smaller) == graph.full_mask and _open_union(
            graph, smaller
        ) == totally:
            return False
    return True


def is_minimal_total_dominating(graph: Graph, d: VertexSet) -> bool:
    """Total dominating, and no one-element deletion stays total dominating."""
    _require_nonempty(graph)
    _check_universe(graph, d)
    full = graph.full_mask
    if _open_union(graph, d.mask) != full:
        return False
    for u in iter_bits(d.mask):
        if _open_union(graph, d.mask ^ (1 << u)) == full:
            return False
    return True


def _greedy_cover(graph: Graph, closed: bool) -> int:
    """Greedy covering set mask; upper bound for the exact searches."""
    cover = graph.closed_mask if closed else graph.adj_mask
    uncovered = graph.full_mask
    chosen = 0
    while uncovered:
        best_v, best_gain = -1, -1
        for v in range(graph.n):
            gain = (cover(v) & uncovered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        uncovered &= ~cover(best_v)
    return chosen


def _find_cover(graph: Graph, k: int, closed: bool) -> int | None:
    """Search for a set of size <= k whose neighborhoods cover all vertices.

    Branches on the neighborhood of the lowest uncovered vertex: any covering
    set must contain one of its (closed) neighbors, so the search is complete
    with depth at most k.
    """
    cover = graph.closed_mask if closed else graph.adj_mask
    full = graph.full_mask

    def rec(uncovered: int, chosen: int, remaining: int) -> int | None:
        if not uncovered:
            return chosen
        if remaining == 0:
            return None
        v = (uncovered & -uncovered).bit_length() - 1
        # by symmetry, u covers v exactly when u lies in cover(v)
        for u in iter_bits(cover(v)):
            found = rec(uncovered & ~cover(u), chosen | (1 << u), remaining - 1)
            if found is not None:
                return found
        return None

    return rec(full, 0, k)


def minimum_dominating_set(graph: Graph) -> VertexSet:
    """A minimum dominating set, found by increasing-size bounded search."""
    _require_nonempty(graph)
    ub = _greedy_cover(graph, closed=True).bit_count()
    for k in range(1, ub + 1):
        found = _find_cover(graph, k, closed=True)
        if found is not None:
            return VertexSet.from_mask(graph.n, found)
    raise AssertionError("greedy bound must be attainable")


def gamma(graph: Graph) -> int:
    """Domination number."""
    return len(minimum_dominating_set(graph))


def minimum_total_dominating_set(graph: Graph) -> VertexSet:
    """A minimum total dominating set; undefined with isolated vertices."""
    _require_nonempty(graph)
    if any(graph.adj_mask(v) == 0 for v in range(graph.n)):
        raise ValueError("total domination undefined: the graph has an isolated vertex")
    ub = _greedy_cover(graph, closed=False).bit_count()
    for k in range(1, ub + 1):
        found = _find_cover(graph, k, closed=False)
        if found is not None:
            return VertexSet.from_mask(graph.n, found)
    raise AssertionError("greedy bound must be attainable")


def gamma_t(graph: Graph) -> int:
    """Total domination number; raises on graphs with isolated vertices."""
    return len(minimum_total_dominating_set(graph))


def _find_independent(graph: Graph, k: int) -> int | None:
    """Search for an independent set of size exactly k, ascending vertex order."""

    def rec(allowed: int, chosen: int, need: int) -> int | None:
        if need == 0:
            return chosen
        if allowed.bit_count() < need:
            return None
        while allowed:
            v = (allowed & -allowed).bit_length() - 1
            allowed ^= 1 << v
            found = rec(allowed & ~graph.adj_mask(v), chosen | (1 << v), need - 1)
            if found is not None:
                return found
        return None

    return rec(graph.full_mask, 0, k)


def _greedy_independent(graph: Graph) -> int:
    chosen = 0
    blocked = 0
    for v in range(graph.n):
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= graph.closed_mask(v)
    return chosen


def maximum_independent_set(graph: Graph) -> VertexSet:
    """A maximum independent set, by increasing-size search above a greedy start."""
    _require_nonempty(graph)
    best = _greedy_independent(graph)
    k = best.bit_count()
    while k < graph.n:
        found = _find_independent(graph, k + 1)
        if found is None:
            break
        best, k = found, k + 1
    return VertexSet.from_mask(graph.n, best)


def alpha(graph: Graph) -> int:
    """Independence number."""
    return len(maximum_independent_set(graph))


def neighborhood_hypergraph(graph: Graph) -> hypergraphs.Hypergraph:
    """Inclusion-minimal closed neighborhoods, as a Sperner hypergraph.

    Its minimal transversals are exactly the minimal dominating sets.
    """
    _require_nonempty(graph)
    raw = hypergraphs.Hypergraph(
        graph.n,
        [VertexSet.from_mask(graph.n, graph.closed_mask(v)) for v in range(graph.n)],
    )
    return hypergraphs.sperner_reduce(raw)


def enumerate_minimal_dominating_sets(
    graph: Graph, cap: int | None = None
) -> list[VertexSet]:
    """All minimal dominating sets, canonically ordered."""
    _require_nonempty(graph)
    _check_cap(graph.n, cap)
    return hypergraphs.enumerate_minimal_transversals(neighborhood_hypergraph(graph))


def upper_gamma(graph: Graph, cap: int | None = None) -> int:
    """Upper domination number: the largest size of a minimal dominating set."""
    return max(len(d) for d in enumerate_minimal_dominating_sets(graph, cap))


def enumerate_irreducible_dominating_sets(
    graph: Graph, cap: int | None = None
) -> list[VertexSet]:
    """All irreducible dominating sets, canonically ordered.

    Include/exclude search over the vertices in ascending order.  A branch is
    pruned once some vertex can no longer be dominated, or once a committed
    member can no longer end up with a private closed neighbor or a leaf
    neighbor (both conditions only get harder as the set grows, so the prune
    is sound); each completed leaf is then checked exactly.
    """
    _require_nonempty(graph)
    _check_cap(graph.n, cap)
    n = graph.n
    full = graph.full_mask
    out: list[VertexSet] = []

    def support_possible(u: int, dmask: int, not_excluded: int) -> bool:
        bu = 1 << u
        for v in iter_bits(graph.closed_mask(u)):
            if graph.closed_mask(v) & dmask & ~bu == 0:
                return True
        for w in iter_bits(graph.adj_mask(u) & not_excluded):
            if graph.adj_mask(w) & dmask & ~bu == 0:
                return True
        return False

    def rec(i: int, dmask: int) -> None:
        available = dmask | (full >> i << i)
        for v in range(n):
            if not graph.closed_mask(v) & available:
                return
        for u in iter_bits(dmask):
            if not support_possible(u, dmask, available):
                return
        if i == n:
            if _is_irreducible_mask(graph, dmask):
                out.append(VertexSet.from_mask(n, dmask))
            return
        rec(i + 1, dmask)
        rec(i + 1, dmask | (1 << i))

    rec(0, 0)
    out.sort(key=set_sort_key)
    return out

"""Exhaustive reference implementations used to cross-check the fast paths.

Everything here scans all 2^n subsets and applies definitions directly, with
no shared logic with the search- or transversal-based implementations.  Only
usable at desk scale; that is the point.
"""

from __future__ import annotations

from .graphs import Graph, VertexSet, iter_bits, set_sort_key
from .hypergraphs import Hypergraph


def _closed_cover_table(graph: Graph) -> list[int]:
    """cover[mask] = union of closed neighborhoods over the members of mask."""
    n = graph.n
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        table[mask] = table[mask ^ low] | graph.closed_mask(low.bit_length() - 1)
    return table


def _open_cover_table(graph: Graph) -> list[int]:
    n = graph.n
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        table[mask] = table[mask ^ low] | graph.adj_mask(low.bit_length() - 1)
    return table


def minimal_dominating_sets(graph: Graph) -> list[VertexSet]:
    """All inclusion-minimal dominating sets, by scanning every subset."""
    full = graph.full_mask
    cover = _closed_cover_table(graph)
    out = []
    for mask in range(1 << graph.n):
        if cover[mask] != full:
            continue
        if all(cover[mask ^ (1 << u)] != full for u in iter_bits(mask)):
            out.append(VertexSet.from_mask(graph.n, mask))
    out.sort(key=set_sort_key)
    return out


def minimal_total_dominating_sets(graph: Graph) -> list[VertexSet]:
    full = graph.full_mask
    cover = _open_cover_table(graph)
    out = []
    for mask in range(1 << graph.n):
        if cover[mask] != full:
            continue
        if all(cover[mask ^ (1 << u)] != full for u in iter_bits(mask)):
            out.append(VertexSet.from_mask(graph.n, mask))
    out.sort(key=set_sort_key)
    return out


def irreducible_dominating_sets(graph: Graph) -> list[VertexSet]:
    """Dominating sets with no droppable member, per the direct definition.

    A member is droppable when removing it keeps the set dominating and keeps
    the set of totally dominated vertices unchanged.
    """
    full = graph.full_mask
    closed = _closed_cover_table(graph)
    opened = _open_cover_table(graph)
    out = []
    for mask in range(1 << graph.n):
        if closed[mask] != full:
            continue
        reducible = False
        for u in iter_bits(mask):
            rest = mask ^ (1 << u)
            if closed[rest] == full and opened[rest] == opened[mask]:
                reducible = True
                break
        if not reducible:
            out.append(VertexSet.from_mask(graph.n, mask))
    out.sort(key=set_sort_key)
    return out


def maximal_independent_sets(graph: Graph) -> list[VertexSet]:
    out = []
    for mask in range(1 << graph.n):
        independent = True
        for u in iter_bits(mask):
            if graph.adj_mask(u) & mask:
                independent = False
                break
        if not independent:
            continue
        # maximal: every outside vertex sees some member
        if all(
            graph.adj_mask(v) & mask
            for v in range(graph.n)
            if not mask >> v & 1
        ):
            out.append(VertexSet.from_mask(graph.n, mask))
    out.sort(key=set_sort_key)
    return out


def gamma(graph: Graph) -> int:
    full = graph.full_mask
    cover = _closed_cover_table(graph)
    return min(
        mask.bit_count() for mask in range(1 << graph.n) if cover[mask] == full
    )


def gamma_t(graph: Graph) -> int:
    full = graph.full_mask
    cover = _open_cover_table(graph)
    sizes = [mask.bit_count() for mask in range(1 << graph.n) if cover[mask] == full]
    if not sizes:
        raise ValueError("total domination undefined: the graph has an isolated vertex")
    return min(sizes)


def upper_gamma(graph: Graph) -> int:
    return max(len(d) for d in minimal_dominating_sets(graph))


def alpha(graph: Graph) -> int:
    best = 0
    for mask in range(1 << graph.n):
        if all(not graph.adj_mask(u) & mask for u in iter_bits(mask)):
            best = max(best, mask.bit_count())
    return best


def minimal_transversals(h: Hypergraph) -> list[VertexSet]:
    """All minimal transversals by scanning every subset of the universe."""
    edges = h.edge_masks
    out = []
    for mask in range(1 << h.n):
        if not all(mask & e for e in edges):
            continue
        if all(
            not all((mask ^ (1 << u)) & e for e in edges) for u in iter_bits(mask)
        ):
            out.append(VertexSet.from_mask(h.n, mask))
    out.sort(key=set_sort_key)
    return out

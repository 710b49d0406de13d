"""Lexicographic products: construction, projections, and domination structure.

A vertex of the product is a pair (g, h); the flattened encoding is
g * |V(H)| + h.  Adjacency: (g1, h1) ~ (g2, h2) iff g1 g2 is an edge of the
base graph, or g1 = g2 and h1 h2 is an edge of the fiber graph.  Every subset
of the product decomposes uniquely into its base projection and one fiber per
projected vertex, and the domination-theoretic predicates here are all phrased
through that decomposition; each has a flattened-graph counterpart used as an
oracle in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .graphs import (
    Graph,
    VertexSet,
    is_edgeless,
    isolated_vertices,
    induced_subgraph,
    iter_bits,
)
from .domination import (
    _check_cap,
    classify,
    enumerate_irreducible_dominating_sets,
    enumerate_minimal_dominating_sets,
    gamma,
    gamma_t,
    alpha,
    upper_gamma,
    is_dominating,
    is_irreducible_dominating,
    is_minimal_dominating,
)


class ProductGraph:
    """A lexicographic product together with its flattened realization."""

    __slots__ = ("base", "fiber", "graph")

    def __init__(self, base: Graph, fiber: Graph):
        if base.n == 0 or fiber.n == 0:
            raise ValueError("both factors must have at least one vertex")
        nh = fiber.n
        edges = []
        for gu, gv in base.edges:
            for hu in range(nh):
                for hv in range(nh):
                    edges.append((gu * nh + hu, gv * nh + hv))
        for g in range(base.n):
            for hu, hv in fiber.edges:
                edges.append((g * nh + hu, g * nh + hv))
        graph = Graph(base.n * nh, edges)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "fiber", fiber)
        object.__setattr__(self, "graph", graph)

    def __setattr__(self, name, value):
        raise AttributeError("ProductGraph is immutable")

    @property
    def nontrivial(self) -> bool:
        """Both factors have at least two vertices."""
        return self.base.n >= 2 and self.fiber.n >= 2

    def encode(self, g: int, h: int) -> int:
        if not (0 <= g < self.base.n and 0 <= h < self.fiber.n):
            raise ValueError(f"pair ({g}, {h}) outside the product universe")
        return g * self.fiber.n + h

    def decode(self, flat: int) -> tuple[int, int]:
        if not 0 <= flat < self.graph.n:
            raise ValueError(f"flat vertex {flat} outside the product universe")
        return divmod(flat, self.fiber.n)

    def __repr__(self) -> str:
        return f"ProductGraph(base={self.base!r}, fiber={self.fiber!r})"


def lex_product(base: Graph, fiber: Graph) -> ProductGraph:
    """Build the lexicographic product of two non-empty graphs."""
    return ProductGraph(base, fiber)


class ProductSet:
    """Subset of a product's vertices, kept as sorted (g, h) pairs.

    The base projection and the per-vertex fibers are derived on demand; the
    set always equals the disjoint union of {x} x fiber(x) over the projected
    vertices x, and flattening is exact in both directions.
    """

    __slots__ = ("base_n", "fiber_n", "pairs")

    def __init__(self, base_n: int, fiber_n: int, pairs: Iterable[tuple[int, int]]):
        cleaned = sorted(set((int(g), int(h)) for g, h in pairs))
        for g, h in cleaned:
            if not (0 <= g < base_n and 0 <= h < fiber_n):
                raise ValueError(f"pair ({g}, {h}) outside the product universe")
        object.__setattr__(self, "base_n", base_n)
        object.__setattr__(self, "fiber_n", fiber_n)
        object.__setattr__(self, "pairs", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("ProductSet is immutable")

    @classmethod
    def from_flat(cls, product: ProductGraph, flat: VertexSet) -> "ProductSet":
        if flat.universe_size != product.graph.n:
            raise ValueError("flattened set universe does not match the product")
        return cls(
            product.base.n, product.fiber.n, [product.decode(v) for v in flat]
        )

    def projection(self) -> VertexSet:
        """Base-graph vertices that carry at least one member."""
        return VertexSet(self.base_n, {g for g, _ in self.pairs})

    def fibers(self) -> dict[int, VertexSet]:
        """Map from each projected vertex to its (non-empty) fiber."""
        by_g: dict[int, set[int]] = {}
        for g, h in self.pairs:
            by_g.setdefault(g, set()).add(h)
        return {g: VertexSet(self.fiber_n, hs) for g, hs in sorted(by_g.items())}

    def flatten(self) -> VertexSet:
        return VertexSet(
            self.base_n * self.fiber_n, [g * self.fiber_n + h for g, h in self.pairs]
        )

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProductSet)
            and self.base_n == other.base_n
            and self.fiber_n == other.fiber_n
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((self.base_n, self.fiber_n, self.pairs))

    def __repr__(self) -> str:
        return f"ProductSet({self.base_n}, {self.fiber_n}, {list(self.pairs)})"


def project(d: ProductSet) -> tuple[VertexSet, dict[int, VertexSet]]:
    """Base projection and fibers of a product set; reconstruction is exact."""
    return d.projection(), d.fibers()


def _check_product_set(product: ProductGraph, d: ProductSet) -> None:
    if d.base_n != product.base.n or d.fiber_n != product.fiber.n:
        raise ValueError("product set universe does not match the product")


def dominates_product_vertex(
    product: ProductGraph, d: ProductSet, vertex: tuple[int, int]
) -> bool:
    """Whether ``d`` dominates the product vertex (g, h).

    Holds exactly when the projection totally dominates g in the base graph,
    or the fiber over g dominates h in the fiber graph; this matches the
    direct adjacency test in the flattened graph.
    """
    _check_product_set(product, d)
    g, h = vertex
    if not (0 <= g < product.base.n and 0 <= h < product.fiber.n):
        raise ValueError(f"pair ({g}, {h}) outside the product universe")
    proj_mask = 0
    fiber_mask = 0
    for pg, ph in d.pairs:
        proj_mask |= 1 << pg
        if pg == g:
            fiber_mask |= 1 << ph
    if product.base.adj_mask(g) & proj_mask:
        return True
    return bool(product.fiber.closed_mask(h) & fiber_mask)


def is_dominating_product(product: ProductGraph, d: ProductSet) -> bool:
    """Factor-wise domination test, equal to domination in the flattened graph.

    The projection must dominate the base graph, and the fiber over every
    vertex that the projection dominates only barely (no projected neighbor)
    must dominate the whole fiber graph.
    """
    _check_product_set(product, d)
    base = product.base
    proj = d.projection()
    if not is_dominating(base, proj):
        return False
    fibers = d.fibers()
    for g in iter_bits(proj.mask):
        if base.closed_mask(g) & proj.mask == 1 << g:  # barely dominated
            if not is_dominating(product.fiber, fibers[g]):
                return False
    return True


@dataclass(frozen=True)
class ProductMinimalityReport:
    """Condition-level breakdown of minimality of a product set.

    cond_i: the projection is an irreducible dominating set of the base graph.
    cond_ii: fibers are singletons over totally dominated projected vertices
        and minimal dominating sets of the fiber graph over barely dominated
        ones.
    cond_iii: every redundant projected vertex has a leaf neighbor whose fiber
        fails to dominate the fiber graph.
    ``minimal`` is their conjunction and coincides with inclusion-minimal
    domination in the flattened product.  When the fiber graph has no
    universal vertex, cond_i and cond_ii together force cond_iii.
    """

    cond_i: bool
    cond_ii: bool
    cond_iii: bool

    @property
    def minimal(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii


def check_minimal_product(product: ProductGraph, d: ProductSet) -> ProductMinimalityReport:
    """Evaluate the three structural minimality conditions for a product set."""
    _check_product_set(product, d)
    base, fiber_graph = product.base, product.fiber
    proj = d.projection()
    fibers = d.fibers()

    cond_i = is_irreducible_dominating(base, proj)

    cond_ii = True
    for g in iter_bits(proj.mask):
        totally = bool(base.adj_mask(g) & proj.mask)
        if totally:
            if len(fibers[g]) != 1:
                cond_ii = False
                break
        elif not is_minimal_dominating(fiber_graph, fibers[g]):
            cond_ii = False
            break

    info = classify(base, proj) if proj.mask else None
    cond_iii = True
    if info is not None:
        for r in iter_bits(info.redundant.mask):
            supported = False
            for y in iter_bits(base.adj_mask(r) & info.leaves.mask):
                if not is_dominating(fiber_graph, fibers[y]):
                    supported = True
                    break
            if not supported:
                cond_iii = False
                break

    return ProductMinimalityReport(cond_i=cond_i, cond_ii=cond_ii, cond_iii=cond_iii)


def enumerate_minimal_dominating_sets_product(
    base: Graph, fiber: Graph, cap: int | None = None
) -> list[ProductSet]:
    """All minimal dominating sets of the product, built from the factors.

    For each irreducible dominating set P of the base graph, totally dominated
    members receive singleton fibers and barely dominated members receive
    minimal dominating sets of the fiber graph, in every combination.  When
    the fiber graph has a universal vertex, combinations are kept only if
    every redundant member of P has a leaf neighbor whose chosen fiber vertex
    is not universal (for fiber graphs without universal vertices the
    condition holds automatically).  The output equals brute-force
    minimal-dominating enumeration on the flattened product.

    The cap guards the factor sizes, not the flattened size, so products far
    beyond the flattened enumeration range stay reachable.
    """
    if base.n == 0 or fiber.n == 0:
        raise ValueError("both factors must have at least one vertex")
    _check_cap(base.n, cap)
    _check_cap(fiber.n, cap)

    fiber_mds = enumerate_minimal_dominating_sets(fiber, cap)
    singles = [VertexSet(fiber.n, (h,)) for h in range(fiber.n)]
    universal = [fiber.closed_mask(h) == fiber.full_mask for h in range(fiber.n)]
    any_universal = any(universal)

    out: list[ProductSet] = []
    for p in enumerate_irreducible_dominating_sets(base, cap):
        info = classify(base, p)
        members = p.members
        choice_lists = []
        for x in members:
            if base.adj_mask(x) & p.mask:
                choice_lists.append(singles)
            else:
                choice_lists.append(fiber_mds)
        redundant = info.redundant.members
        leaf_sets = {
            r: tuple(iter_bits(base.adj_mask(r) & info.leaves.mask)) for r in redundant
        }
        index_of = {x: i for i, x in enumerate(members)}
        for assignment in itertools.product(*choice_lists):
            if any_universal and redundant:
                ok = True
                for r in redundant:
                    if not any(
                        not universal[assignment[index_of[y]].members[0]]
                        for y in leaf_sets[r]
                    ):
                        ok = False
                        break
                if not ok:
                    continue
            pairs = [
                (x, h) for x, chosen in zip(members, assignment) for h in chosen
            ]
            out.append(ProductSet(base.n, fiber.n, pairs))
    out.sort(key=lambda ps: (len(ps), ps.pairs))
    return out


def gamma_product(base: Graph, fiber: Graph) -> int:
    """Domination number of the product, from the factors alone.

    If the base graph is edgeless the product is |V(base)| disjoint fiber
    copies.  Otherwise, when the fiber graph has a universal vertex the value
    is the base domination number, and when it has none it is the total
    domination number of the base minus its isolated vertices, plus one fiber
    domination number per isolated vertex.  Equals the domination number of
    the flattened product.
    """
    if base.n == 0 or fiber.n == 0:
        raise ValueError("both factors must have at least one vertex")
    if is_edgeless(base):
        return base.n * gamma(fiber)
    gh = gamma(fiber)
    if gh == 1:
        return gamma(base)
    iso = isolated_vertices(base)
    core, _ = induced_subgraph(
        base, VertexSet.from_mask(base.n, base.full_mask & ~iso.mask)
    )
    return gamma_t(core) + len(iso) * gh


def upper_gamma_product_bound(
    base: Graph, fiber: Graph, cap: int | None = None
) -> tuple[int, bool]:
    """Lower bound alpha(base) * Gamma(fiber) for the product's upper domination.

    Returns (bound, holds) where ``holds`` reports whether the product's upper
    domination number, taken as the largest set from the constructive
    enumeration, is at least the bound.  Expected to hold always.
    """
    bound = alpha(base) * upper_gamma(fiber, cap)
    observed = max(len(d) for d in enumerate_minimal_dominating_sets_product(base, fiber, cap))
    return bound, observed >= bound

"""Acceptance gate: worked regressions plus oracle equivalence at desk scale.

Each test prints one pass/fail line (visible with ``pytest -s``) and enforces
its runtime budget.  Everything asserted here is exact; the expected values
come from subset brute force or from worked examples checked by hand.
"""

import itertools
import time
from random import Random

import pytest

from domkit import bruteforce
from domkit.domination import (
    enumerate_irreducible_dominating_sets,
    gamma,
    gamma_t,
    is_dominating,
    is_irreducible_dominating,
    is_irreducible_dominating_definitional,
    is_minimal_dominating,
    is_minimal_total_dominating,
)
from domkit.families import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    nonisomorphic_graphs,
    path_graph,
    random_graph,
    random_isolate_free_graph,
    random_sperner_hypergraph,
    two_cliques_with_matching,
)
from domkit.graphs import VertexSet, complement
from domkit.hypergraphs import (
    Hypergraph,
    enumerate_minimal_transversals,
    is_minimal_transversal,
)
from domkit.lexicographic import (
    ProductSet,
    check_minimal_product,
    enumerate_minimal_dominating_sets_product,
    gamma_product,
    is_dominating_product,
    lex_product,
    upper_gamma_product_bound,
)
from domkit.recognition import (
    is_well_dominated_bounded_k,
    is_well_dominated_enum,
    is_well_dominated_gamma2,
    is_well_dominated_lex,
)


class _Budget:
    def __init__(self, name: str, seconds: float):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"{status} {self.name} ({elapsed:.1f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, f"{self.name}: {elapsed:.1f}s over budget"


def _family(n_lo, n_hi, connected=False):
    out = []
    for n in range(n_lo, n_hi + 1):
        out.extend(nonisomorphic_graphs(n, connected=connected))
    return out


def test_worked_product_example_regression():
    with _Budget("worked example in the 5-path times 3-path product", 1.0):
        product = lex_product(path_graph(5), path_graph(3))
        d = ProductSet(5, 3, [(1, 1), (2, 0), (3, 1)])
        report = check_minimal_product(product, d)
        assert report.cond_i is True
        assert report.cond_ii is True
        assert report.cond_iii is False
        assert report.minimal is False
        assert is_dominating_product(product, ProductSet(5, 3, [(1, 1), (3, 1)]))


def test_upper_domination_gap_two_cliques():
    with _Budget("upper domination gap for matched cliques over a 4-cycle", 60.0):
        fiber = cycle_graph(4)
        for k in (4, 5):
            base = two_cliques_with_matching(k)
            sets = enumerate_minimal_dominating_sets_product(base, fiber)
            observed = max(len(d) for d in sets)
            bound, holds = upper_gamma_product_bound(base, fiber)
            assert observed == k
            assert bound == 4
            assert holds


def test_constructive_product_enumeration_matches_brute_force():
    with _Budget("constructive product enumeration equals flat brute force", 300.0):
        checked = 0
        for base in _family(1, 4):
            for fiber in _family(1, 3):
                got = {
                    d.flatten()
                    for d in enumerate_minimal_dominating_sets_product(base, fiber)
                }
                want = set(
                    bruteforce.minimal_dominating_sets(lex_product(base, fiber).graph)
                )
                assert got == want, (base, fiber)
                checked += 1
        assert checked == 18 * 7


def test_product_domination_number_formula():
    with _Budget("product domination number formula", 300.0):
        for base in _family(1, 4):
            for fiber in _family(1, 3):
                flat = lex_product(base, fiber).graph
                assert gamma_product(base, fiber) == bruteforce.gamma(flat), (base, fiber)
        # complete bases give the constant value two once fibers need two dominators
        for n in (2, 3, 4):
            for fiber in (cycle_graph(4), path_graph(4), edgeless_graph(2)):
                assert gamma(fiber) >= 2
                base = complete_graph(n)
                assert gamma_product(base, fiber) == 2
                assert gamma(lex_product(base, fiber).graph) == 2
        # a fiber needing three dominators shows the value is not gamma(fiber)
        seven_cycle = cycle_graph(7)
        assert gamma(seven_cycle) == 3
        for n in (2, 3):
            value = gamma_product(complete_graph(n), seven_cycle)
            assert value == 2 != gamma(seven_cycle)
        # doubling into an edgeless two-vertex fiber computes total domination
        rng = Random(101)
        fiber = edgeless_graph(2)
        for _ in range(200):
            base = random_isolate_free_graph(rng.randint(2, 9), rng)
            value = gamma_product(base, fiber)
            assert value == gamma_t(base)
            assert value == gamma(lex_product(base, fiber).graph)


def test_irreducible_characterization_and_census():
    with _Budget("irreducible dominating set characterization", 180.0):
        for g in _family(1, 6):
            for mask in range(1 << g.n):
                d = VertexSet.from_mask(g.n, mask)
                char = is_irreducible_dominating(g, d)
                assert char == is_irreducible_dominating_definitional(g, d)
                if is_minimal_dominating(g, d):
                    assert char
                if is_minimal_total_dominating(g, d):
                    assert char
        for n in (3, 4, 5):
            got = [s.members for s in enumerate_irreducible_dominating_sets(complete_graph(n))]
            want = [(v,) for v in range(n)] + list(itertools.combinations(range(n), 2))
            assert got == want


def test_product_recognition_matches_flattened():
    with _Budget("product recognition against flattened recognition", 600.0):
        for base in _family(2, 4, connected=True):
            for fiber in _family(2, 4):
                got = is_well_dominated_lex(base, fiber).verdict
                want = is_well_dominated_enum(lex_product(base, fiber).graph).verdict
                assert got == want, (base, fiber)
        rng = Random(102)
        for _ in range(50):
            parts = [random_graph(rng.randint(1, 3), rng) for _ in range(rng.randint(2, 3))]
            base = parts[0]
            for p in parts[1:]:
                base = disjoint_union(base, p)
            fiber = random_graph(rng.randint(2, 3), rng)
            flat = lex_product(base, fiber).graph
            got = is_well_dominated_lex(base, fiber).verdict
            want = is_well_dominated_enum(flat, cap=flat.n).verdict
            assert got == want, (base, fiber)


def test_gamma_two_recognition_agreement():
    with _Budget("domination-number-two recognition agreement", 180.0):
        pool = _family(1, 7)
        rng = Random(103)
        pool += [random_graph(rng.randint(1, 9), rng) for _ in range(500)]
        for g in pool:
            if gamma(g) != 2:
                continue
            got = is_well_dominated_gamma2(g)
            want = is_well_dominated_enum(g)
            assert got.verdict == want.verdict, g
        prism = complement(cycle_graph(6))
        report = is_well_dominated_gamma2(prism)
        assert not report.verdict
        assert report.notes["violating_triangles"] == [[0, 2, 4], [1, 3, 5]]
        assert len(report.witness_small) == 2 and len(report.witness_large) == 3
        assert is_well_dominated_gamma2(cycle_graph(4)).verdict
        assert is_well_dominated_gamma2(path_graph(4)).verdict


def test_bounded_gamma_recognition_agreement():
    with _Budget("bounded domination number recognition agreement", 180.0):
        rng = Random(104)
        checked = 0
        while checked < 300:
            g = random_graph(rng.randint(1, 9), rng)
            k = gamma(g)
            if k > 3:
                continue
            report = is_well_dominated_bounded_k(g, k)
            assert report.verdict == is_well_dominated_enum(g).verdict, g
            if not report.verdict:
                assert is_minimal_dominating(g, report.witness_large)
                assert len(report.witness_large) != k
            checked += 1


def test_product_upper_domination_bound_holds():
    with _Budget("product upper domination lower bound", 300.0):
        for base in _family(1, 4):
            for fiber in _family(1, 3):
                bound, holds = upper_gamma_product_bound(base, fiber)
                assert holds, (base, fiber, bound)


def test_transversal_duality_and_oracle_suites():
    with _Budget("transversal enumeration and self-duality suites", 120.0):
        rng = Random(105)
        for _ in range(300):
            h = random_sperner_hypergraph(rng.randint(1, 7), rng)
            fast = enumerate_minimal_transversals(h)
            assert fast == bruteforce.minimal_transversals(h)
            assert all(is_minimal_transversal(h, x) for x in fast)
            dual = Hypergraph(h.n, fast)
            assert Hypergraph(h.n, enumerate_minimal_transversals(dual)) == h

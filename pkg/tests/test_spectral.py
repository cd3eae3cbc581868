"""Eigenvalues, exact characteristic polynomials, and cospectrality."""

from __future__ import annotations

import math

import pytest
import sympy

from conftest import path_graph, star_graph
from treedist import GraphError, char_poly, eigenvalues, enumerate_trees, is_cospectral
from treedist.graph_core import from_edge_list

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def test_eigenvalues_p2():
    spec = eigenvalues(from_edge_list(2, [(0, 1)]))
    assert spec.values == pytest.approx((1.0, -1.0), abs=1e-10)


def test_eigenvalues_star():
    spec = eigenvalues(star_graph(3))
    assert spec.values == pytest.approx((math.sqrt(3), 0.0, 0.0, -math.sqrt(3)), abs=1e-10)


def test_eigenvalues_p4_golden_ratio():
    spec = eigenvalues(path_graph(4))
    assert spec.values == pytest.approx((PHI, PHI - 1.0, 1.0 - PHI, -PHI), abs=1e-10)


def test_eigenvalues_accuracy_against_exact_roots():
    # Oracle: exact real roots of the integer char poly, evaluated to 30 digits.
    lam = sympy.symbols("lam")
    for tree in enumerate_trees(8):
        coeffs = char_poly(tree.graph).coeffs
        poly = sympy.Poly(sum(int(c) * lam**i for i, c in enumerate(coeffs)), lam)
        exact = sorted((float(r.evalf(30)) for r in sympy.real_roots(poly)), reverse=True)
        computed = eigenvalues(tree.graph).values
        assert max(abs(a - b) for a, b in zip(exact, computed)) <= 1e-10


def _path_char_poly_coeffs(n: int) -> tuple[int, ...]:
    # Transfer recurrence p_n = lam * p_{n-1} - p_{n-2}, p_0 = 1, p_1 = lam.
    prev = [1]
    cur = [0, 1]
    for _ in range(n - 1):
        shifted = [0] + cur
        nxt = [a - b for a, b in zip(shifted, prev + [0] * (len(shifted) - len(prev)))]
        prev, cur = cur, nxt
    return tuple(cur)


def test_char_poly_p2():
    assert char_poly(from_edge_list(2, [(0, 1)])).coeffs == (-1, 0, 1)


def test_char_poly_star_k13():
    assert char_poly(star_graph(3)).coeffs == (0, 0, -3, 0, 1)


def test_char_poly_p4():
    assert char_poly(path_graph(4)).coeffs == (1, 0, -3, 0, 1)


def test_char_poly_paths_match_transfer_recurrence():
    for n in range(2, 11):
        assert char_poly(path_graph(n)).coeffs == _path_char_poly_coeffs(n)


def test_char_poly_stars_closed_form():
    # K_{1,q}: lam^(q+1) - q * lam^(q-1)
    for q in range(2, 9):
        expected = [0] * (q + 2)
        expected[q + 1] = 1
        expected[q - 1] = -q
        assert char_poly(star_graph(q)).coeffs == tuple(expected)


def test_char_poly_structural_coefficients():
    for n in range(2, 9):
        for tree in enumerate_trees(n):
            coeffs = char_poly(tree.graph).coeffs
            assert coeffs[n] == 1
            assert coeffs[n - 1] == 0
            assert coeffs[n - 2] == -(n - 1)


def test_spectrum_invariants_trees_up_to_10():
    for n in range(2, 11):
        for tree in enumerate_trees(n):
            spec = eigenvalues(tree.graph)
            vals = spec.values
            assert abs(sum(vals)) <= 1e-9
            assert abs(sum(v * v for v in vals) - 2 * (n - 1)) <= 1e-9
            mirrored = sorted(-v for v in vals)
            assert max(abs(a - b) for a, b in zip(sorted(vals), mirrored)) <= 1e-9


def test_eigenvalues_are_char_poly_roots():
    for n in range(2, 11):
        for tree in enumerate_trees(n):
            poly = char_poly(tree.graph)
            for v in eigenvalues(tree.graph).values:
                assert abs(poly.evaluate(v)) <= 1e-6 * poly.evaluation_scale(v)


def test_is_cospectral_isomorphic_relabeling():
    p4 = path_graph(4)
    other = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
    assert is_cospectral(p4, other)


def test_is_cospectral_rejects_distinct_trees():
    assert not is_cospectral(path_graph(4), star_graph(3))
    assert not is_cospectral(path_graph(5), star_graph(4))


def test_is_cospectral_order_mismatch():
    with pytest.raises(GraphError):
        is_cospectral(path_graph(4), path_graph(5))


def test_isomorphic_enumerated_trees_cospectral_by_code():
    # Same canonical code would mean same tree; spot-check the contrapositive
    # direction on an exact collision census instead: the smallest
    # non-isomorphic cospectral tree pair lives at n = 8, and orders below
    # have none.
    census = {}
    for n in range(4, 10):
        buckets: dict[tuple[int, ...], int] = {}
        for tree in enumerate_trees(n):
            key = char_poly(tree.graph).coeffs
            buckets[key] = buckets.get(key, 0) + 1
        census[n] = sum(c * (c - 1) // 2 for c in buckets.values())
    assert census == {4: 0, 5: 0, 6: 0, 7: 0, 8: 1, 9: 5}

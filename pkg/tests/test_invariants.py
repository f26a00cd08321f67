import math

import numpy as np
import pytest
from hypothesis import given, settings

from knotrecon.braids import BraidWord, braid_closure, table_braid, torus_braid
from knotrecon.diagram import component_count, is_positive, parse_pd
from knotrecon.errors import (
    DisconnectedDiagram,
    InconsistentBounds,
    MismatchedBraid,
    NotPositive,
)
from knotrecon.invariants import (
    Certificate,
    ReconnectionBounds,
    alexander_polynomial,
    braid_invariants,
    burau_alexander_oracle,
    reconnection_bounds,
    reconnection_number_positive,
    signature,
    symmetric_signature,
)
from knotrecon.laurent import LaurentPoly, normalize_laurent
from knotrecon.seifert import SeifertMatrix, seifert_circles, seifert_matrix

from conftest import full_braids, load_pd


def poly(*coeffs):
    """Coefficients from the constant term upward."""
    return LaurentPoly(0, tuple(coeffs))


def eigen_signature(m):
    sym = np.array(m.symmetrized(), dtype=float).reshape(m.dim, m.dim)
    if m.dim == 0:
        return 0
    ev = np.linalg.eigvalsh(sym)
    return int((ev > 1e-9).sum() - (ev < -1e-9).sum())


def lattice_torus_signature(p, q):
    """Signature of the (p, q) torus knot by counting lattice points."""
    inner = outer = 0
    for i in range(1, p):
        for j in range(1, q):
            x = i * q + j * p  # compare i/p + j/q with 1/2 and 3/2 in units of 1/(2pq)
            if p * q < 2 * x < 3 * p * q:
                inner += 1
            else:
                outer += 1
    return outer - inner


TABLE = {
    # name: (Alexander from the constant term up, signature)
    "3_1": (poly(1, -1, 1), -2),
    "4_1": (poly(1, -3, 1), 0),
    "5_1": (poly(1, -1, 1, -1, 1), -4),
    "5_2": (poly(2, -3, 2), -2),
    "6_1": (poly(2, -5, 2), 0),
    "6_2": (poly(1, -3, 3, -3, 1), -2),
    "6_3": (poly(1, -3, 5, -3, 1), 0),
    "7_1": (poly(1, -1, 1, -1, 1, -1, 1), -6),
}


class TestAlexander:
    def test_trefoil_matrix(self):
        m = SeifertMatrix(((-1, 1), (0, -1)))
        assert normalize_laurent(alexander_polynomial(m)) == poly(1, -1, 1)

    def test_empty_matrix(self):
        assert alexander_polynomial(SeifertMatrix(())) == LaurentPoly.const(1)

    @pytest.mark.parametrize("name", sorted(TABLE))
    def test_table(self, name):
        alex, sig = braid_invariants(table_braid(name))
        assert alex == TABLE[name][0]
        assert sig == TABLE[name][1]

    @pytest.mark.parametrize("name", sorted(TABLE))
    def test_table_burau(self, name):
        assert burau_alexander_oracle(table_braid(name)) == TABLE[name][0]

    def test_hopf(self):
        alex, sig = braid_invariants(BraidWord(2, (1, 1)))
        assert alex == poly(-1, 1)
        assert sig == -1

    @settings(max_examples=60)
    @given(full_braids(max_strands=5, max_len=11))
    def test_matches_burau(self, b):
        assert braid_invariants(b)[0] == burau_alexander_oracle(b)

    @given(full_braids())
    def test_value_at_one(self, b):
        alex = braid_invariants(b)[0]
        mu = component_count(braid_closure(b))
        if mu == 1:
            assert abs(alex(1)) == 1
        else:
            assert alex(1) == 0

    @given(full_braids())
    def test_symmetric_up_to_sign(self, b):
        c = braid_invariants(b)[0].coeffs
        assert c == c[::-1] or c == tuple(-v for v in c[::-1])

    @given(full_braids())
    def test_mirror_invariant(self, b):
        assert braid_invariants(b)[0] == braid_invariants(b.mirror())[0]


class TestSignature:
    def test_symmetric_helper(self):
        assert symmetric_signature([[0, 1], [1, 0]]) == 0
        assert symmetric_signature([[2, 1], [1, 2]]) == 2
        assert symmetric_signature([[-2]]) == -1
        assert symmetric_signature([[0, 0], [0, 0]]) == 0
        assert symmetric_signature([]) == 0
        with pytest.raises(ValueError):
            symmetric_signature([[0, 1], [2, 0]])

    @given(full_braids())
    def test_matches_eigenvalues(self, b):
        m = seifert_matrix(b)
        assert signature(m) == eigen_signature(m)

    @given(full_braids())
    def test_mirror_negates(self, b):
        assert braid_invariants(b.mirror())[1] == -braid_invariants(b)[1]

    @given(full_braids())
    def test_knot_signature_even(self, b):
        sig = braid_invariants(b)[1]
        if component_count(braid_closure(b)) == 1:
            assert sig % 2 == 0
        assert abs(sig) <= seifert_matrix(b).dim

    @given(full_braids(positive=True))
    def test_positive_braids_have_negative_signature(self, b):
        sig = braid_invariants(b)[1]
        assert sig <= 0
        if seifert_matrix(b).dim:
            assert sig < 0

    @pytest.mark.parametrize("p,q", [(p, q) for p in range(2, 6) for q in range(2, 8)
                                     if p < q and math.gcd(p, q) == 1])
    def test_torus_lattice_count(self, p, q):
        assert braid_invariants(torus_braid(p, q))[1] == lattice_torus_signature(p, q)


class TestBounds:
    def test_positive_trefoil_exact(self, trefoil):
        r = reconnection_bounds(trefoil, BraidWord(2, (1, 1, 1)))
        assert (r.lower, r.upper, r.exact) == (2, 2, 2)
        assert any(c.kind == "positivity" for c in r.certificates)
        assert reconnection_number_positive(trefoil) == 2

    def test_figure_eight_open(self):
        b = table_braid("4_1")
        r = reconnection_bounds(braid_closure(b), b)
        assert (r.lower, r.upper, r.exact) == (0, 2, None)
        r = reconnection_bounds(braid_closure(b), b, u=1)
        assert (r.lower, r.upper, r.exact) == (0, 2, None)

    def test_unknotting_certificate_closes_gap(self):
        b = table_braid("6_2")
        r = reconnection_bounds(braid_closure(b), b, u=1)
        assert r.exact == 2
        kinds = {(c.kind, c.role) for c in r.certificates}
        assert ("signature", "lower") in kinds and ("unknotting", "upper") in kinds

    def test_link_unknotting_bound_counts_components(self):
        d = load_pd("chain_link.pd")
        r = reconnection_bounds(d, u=0)
        assert r.upper == 2 and r.exact == 2

    def test_without_braid(self):
        d = braid_closure(table_braid("4_1"))
        r = reconnection_bounds(d)
        assert r.lower == 0
        assert r.upper == d.c - seifert_circles(d).count + 1

    def test_unknot(self):
        r = reconnection_bounds(parse_pd("[] + L1"))
        assert r.exact == 0

    def test_mismatched_braid(self, trefoil):
        with pytest.raises(MismatchedBraid):
            reconnection_bounds(trefoil, table_braid("4_1"))

    def test_disconnected(self):
        with pytest.raises(DisconnectedDiagram):
            reconnection_bounds(braid_closure(BraidWord(3, (1,))))
        with pytest.raises(DisconnectedDiagram):
            reconnection_number_positive(parse_pd("[] + L2"))

    def test_not_positive(self):
        with pytest.raises(NotPositive) as err:
            reconnection_number_positive(braid_closure(table_braid("4_1")))
        assert err.value.site == [1, 3]

    def test_negative_unknotting(self, trefoil):
        with pytest.raises(ValueError):
            reconnection_bounds(trefoil, u=-1)

    def test_inconsistent(self):
        with pytest.raises(InconsistentBounds):
            ReconnectionBounds(3, 2)
        with pytest.raises(InconsistentBounds):
            ReconnectionBounds(2, 2)
        with pytest.raises(InconsistentBounds):
            ReconnectionBounds(1, 2, 1)

    @given(full_braids())
    def test_interval_is_sound(self, b):
        d = braid_closure(b)
        r = reconnection_bounds(d, b)
        assert r.lower >= abs(braid_invariants(b)[1])
        assert r.lower >= component_count(d) - 1
        assert r.upper <= d.c - seifert_circles(d).count + 1
        if is_positive(d):
            assert r.exact == d.c - b.strands + 1

    def test_roundtrip(self, trefoil):
        r = reconnection_bounds(trefoil, BraidWord(2, (1, 1, 1)), u=1)
        assert ReconnectionBounds.from_dict(r.to_dict()) == r
        c = Certificate("signature", "lower", 2, "sigma=-2")
        assert Certificate.from_dict(c.to_dict()) == c

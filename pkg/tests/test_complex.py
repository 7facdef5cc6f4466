"""Tests for vertex sets, complexes and complex operations"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.complex import SimplicialComplex
from models.vertex_set import Subset, VertexSet
from services.complex_service import ComplexService
from tests.strategies import all_complexes, complexes, labels, vertex_sets
from utils.error_handler import ConstructionError, DisjointnessError, VertexSetMismatchError
from utils.helpers import minimal_transversals, submasks

A3 = VertexSet.of("123")


def cx(vertices, *facets):
    return SimplicialComplex.from_labels(vertices, facets)


class TestVertexSet:
    """Labels, masks and order-insensitive equality"""

    def test_order_does_not_matter(self):
        assert VertexSet(("a", "b")) == VertexSet(("b", "a"))
        assert hash(VertexSet(("a", "b"))) == hash(VertexSet(("b", "a")))

    def test_translate_between_orders(self):
        left, right = VertexSet(("a", "b", "c")), VertexSet(("c", "a", "b"))
        mask = left.mask(["a", "c"])
        assert right.labels_of(right.translate(mask, left)) == ("c", "a")

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ConstructionError, match="duplicate"):
            VertexSet(("a", "a"))

    @pytest.mark.parametrize("label", ["", "a b", "{a}", "a,b", "x*y", "a->b", "-"])
    def test_invalid_labels_rejected(self, label):
        with pytest.raises(ConstructionError):
            VertexSet((label,))

    def test_pair_labels_allowed(self):
        assert "(1,a)" in VertexSet(("(1,a)", "(2,a)"))

    def test_concat_requires_disjoint_sets(self):
        with pytest.raises(DisjointnessError):
            VertexSet.of("12").concat(VertexSet.of("23"))

    def test_subset_coerced_across_orders(self):
        S = VertexSet(("b", "a")).subset(["a"])
        assert VertexSet(("a", "b")).coerce(S).mask == 1

    def test_subset_on_other_vertex_set_rejected(self):
        with pytest.raises(VertexSetMismatchError):
            A3.coerce(VertexSet.of("ab").subset("a"))


class TestConstruction:
    """Facet antichains and canonical order"""

    def test_non_maximal_sets_dropped(self):
        X = SimplicialComplex.from_facets(A3, [A3.subset("12"), A3.subset("1")])
        assert X.facets == (A3.subset("12"),)

    def test_facets_sorted_by_size_then_labels(self):
        X = cx(A3, "23", "1")
        assert [f.labels for f in X.facets] == [("1",), ("2", "3")]

    def test_void_and_empty_face_differ(self):
        void, empty = SimplicialComplex.void(A3), SimplicialComplex.empty_face(A3)
        assert void.is_void and not empty.is_void
        assert void != empty
        assert void <= empty

    def test_mask_outside_vertex_set_rejected(self):
        with pytest.raises(ConstructionError):
            SimplicialComplex(A3, (8,))

    def test_boundary_of_empty_vertex_set_is_void(self):
        assert SimplicialComplex.boundary(VertexSet(())).is_void

    def test_boundary_of_singleton_is_empty_face(self):
        assert SimplicialComplex.boundary(VertexSet.of("1")) == SimplicialComplex.empty_face(
            VertexSet.of("1")
        )

    def test_equality_ignores_vertex_order(self):
        X = cx(VertexSet(("1", "2", "3")), "12", "3")
        Y = cx(VertexSet(("3", "2", "1")), "3", "21")
        assert X == Y
        assert hash(X) == hash(Y)

    def test_complexes_on_different_vertex_sets_not_comparable(self):
        with pytest.raises(VertexSetMismatchError):
            SimplicialComplex.simplex(A3) <= SimplicialComplex.simplex(VertexSet.of("ab"))


class TestQueries:
    """Faces, cofacets, support and dimension"""

    def test_faces_of_two_facets(self):
        X = cx(A3, "12", "3")
        assert [f.labels for f in X.faces()] == [(), ("1",), ("2",), ("3",), ("1", "2")]
        assert X.is_face(A3.subset("1"))
        assert not X.is_face(A3.subset("13"))

    def test_cofacets(self):
        assert [c.labels for c in cx(A3, "12", "3").cofacets()] == [("1", "3"), ("2", "3")]

    def test_cofacets_of_void_is_empty_set(self):
        assert SimplicialComplex.void(A3).cofacet_masks == (0,)

    def test_simplex_has_no_cofacets(self):
        assert SimplicialComplex.simplex(A3).cofacet_masks == ()

    def test_cofacets_of_empty_face_are_singletons(self):
        assert SimplicialComplex.empty_face(A3).cofacet_masks == (1, 2, 4)

    def test_support_and_dimension(self):
        X = cx(A3, "12", "3")
        assert X.support() == A3.everything()
        assert X.dimension == 1

    def test_cosupport_of_simplex_is_everything(self):
        assert SimplicialComplex.simplex(A3).cosupport() == A3.everything()

    def test_empty_face_support_and_dimension(self):
        X = SimplicialComplex.empty_face(A3)
        assert X.support() == A3.empty()
        assert X.dimension == -1

    def test_void_has_no_dimension(self):
        assert SimplicialComplex.void(A3).dimension is None

    @given(complexes(labels(4, "v")))
    def test_downward_closed(self, X):
        faces = set(X.face_masks())
        assert all(s in faces for f in faces for s in submasks(f))

    @given(complexes(labels(4, "v")))
    def test_cofacets_are_minimal_non_faces(self, X):
        for n in X.cofacet_masks:
            assert not X.contains_mask(n)
            assert all(X.contains_mask(n & ~(1 << i)) for i in range(4) if n >> i & 1)

    @given(complexes(labels(4, "v")))
    def test_cofacets_determine_complex(self, X):
        assert SimplicialComplex.from_cofacet_masks(X.vertices, X.cofacet_masks) == X


class TestAlexanderDual:
    def test_dual_of_two_facets(self):
        assert ComplexService.alexander_dual(cx(A3, "12", "3")) == cx(A3, "1", "2")

    def test_dual_swaps_void_and_simplex(self):
        assert ComplexService.alexander_dual(SimplicialComplex.void(A3)) == SimplicialComplex.simplex(A3)
        assert ComplexService.alexander_dual(SimplicialComplex.simplex(A3)).is_void

    def test_dual_of_empty_face_is_boundary(self):
        dual = ComplexService.alexander_dual(SimplicialComplex.empty_face(A3))
        assert dual == SimplicialComplex.boundary(A3)

    @pytest.mark.parametrize("size", [0, 1, 2, 3])
    def test_involution_exhaustive(self, size):
        for X in all_complexes(labels(size, "v")):
            assert ComplexService.alexander_dual(ComplexService.alexander_dual(X)) == X

    @given(complexes(labels(5, "v")))
    def test_dual_faces_are_complements_of_non_faces(self, X):
        dual = ComplexService.alexander_dual(X)
        full = X.vertices.full
        for m in range(1 << 5):
            assert dual.contains_mask(m) == (not X.contains_mask(full & ~m))


class TestRestrictionAndLink:
    def test_restriction(self):
        Y = cx(A3, "13", "2")
        E = A3.subset("12")
        assert ComplexService.restriction(Y, E) == cx(VertexSet.of("12"), "1", "2")

    def test_link_of_vertex(self):
        Y = cx(A3, "13", "2")
        assert ComplexService.link(Y, A3.subset("3")) == cx(VertexSet.of("12"), "1")

    def test_link_of_non_face_is_void(self):
        Y = cx(A3, "13", "2")
        assert ComplexService.link(Y, A3.subset("23")).is_void

    def test_link_of_empty_set_is_complex(self):
        Y = cx(A3, "13", "2")
        assert ComplexService.link(Y, A3.empty()) == Y

    @settings(max_examples=50)
    @given(complexes(labels(5, "v")), st.integers(0, 31))
    def test_link_membership(self, X, e):
        L = ComplexService.link(X, Subset(X.vertices, e))
        rest = X.vertices.full & ~e
        for f in submasks(rest):
            mask = L.vertices.mask(X.vertices.labels_of(f))
            assert L.contains_mask(mask) == X.contains_mask(f | e)


class TestJoinAndCone:
    def test_join_of_boundaries(self):
        X = SimplicialComplex.boundary(VertexSet.of("12"))
        Y = SimplicialComplex.boundary(VertexSet.of("34"))
        expected = cx(VertexSet.of("1234"), "13", "14", "23", "24")
        assert ComplexService.join(X, Y) == expected

    def test_empty_face_is_unit(self):
        X = cx(A3, "12", "3")
        unit = SimplicialComplex.empty_face(VertexSet.of("ab"))
        assert ComplexService.join(X, unit) == X.rehouse(A3.concat(VertexSet.of("ab")))

    def test_void_absorbs(self):
        X = cx(A3, "12", "3")
        assert ComplexService.join(X, SimplicialComplex.void(VertexSet.of("ab"))).is_void

    def test_join_commutes(self):
        X, Y = cx(A3, "12", "3"), cx(VertexSet.of("ab"), "a")
        assert ComplexService.join(X, Y) == ComplexService.join(Y, X)

    def test_join_needs_disjoint_vertex_sets(self):
        with pytest.raises(DisjointnessError):
            ComplexService.join(SimplicialComplex.simplex(A3), SimplicialComplex.simplex(A3))

    def test_cone(self):
        X = cx(VertexSet.of("12"), "1", "2")
        coned = ComplexService.cone(X, VertexSet.of("c"))
        assert coned == cx(VertexSet.of("12c"), "1c", "2c")


class TestLattice:
    def test_meet_and_join(self):
        X, Y = cx(A3, "12", "3"), cx(A3, "13")
        assert ComplexService.lattice_meet(X, Y) == cx(A3, "1", "3")
        assert ComplexService.lattice_join(X, Y) == cx(A3, "12", "13")

    def test_meet_with_void(self):
        X = cx(A3, "12")
        assert ComplexService.lattice_meet(X, SimplicialComplex.void(A3)).is_void

    def test_different_vertex_sets_rejected(self):
        with pytest.raises(VertexSetMismatchError):
            ComplexService.lattice_join(
                SimplicialComplex.void(A3), SimplicialComplex.void(VertexSet.of("ab"))
            )

    @given(st.data())
    def test_lattice_axioms(self, data):
        V = labels(4, "v")
        X, Y, Z = (data.draw(complexes(V)) for _ in range(3))
        meet, join = ComplexService.lattice_meet, ComplexService.lattice_join
        assert meet(X, X) == X and join(X, X) == X
        assert meet(X, Y) == meet(Y, X) and join(X, Y) == join(Y, X)
        assert meet(X, join(X, Y)) == X
        assert join(X, meet(X, Y)) == X
        assert meet(meet(X, Y), Z) == meet(X, meet(Y, Z))


class TestTransversals:
    def test_no_edges(self):
        assert minimal_transversals([]) == [0]

    def test_empty_edge_has_no_transversal(self):
        assert minimal_transversals([0, 1]) == []

    def test_two_edges(self):
        assert sorted(minimal_transversals([0b011, 0b100])) == [0b101, 0b110]

    @given(vertex_sets(0, 4), st.data())
    def test_transversals_hit_every_edge(self, V, data):
        edges = data.draw(st.lists(st.integers(1, max(V.full, 1)), max_size=4)) if len(V) else []
        for t in minimal_transversals(edges):
            assert all(t & e for e in edges)
            for i in range(len(V)):
                if t >> i & 1:
                    assert not all((t & ~(1 << i)) & e for e in edges)

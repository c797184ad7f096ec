"""Correlation polytopes: vertices, membership, facets, coordinate maps."""

import math

import numpy as np
import pytest

from bellbound import (
    DimensionError,
    ParameterError,
    PolytopeSpec,
    ResourceLimitError,
    ambient_coefficients,
    bell_embed,
    bell_to_cut,
    chsh,
    cut_to_bell,
    facet_check,
    membership,
    triangle,
    vertices,
)

SQRT2 = math.sqrt(2.0)

SINGLET_POINT = np.array([SQRT2 / 2, SQRT2 / 2, SQRT2 / 2, -SQRT2 / 2])


def test_spec_dimensions():
    assert PolytopeSpec.bell(3).ambient_dim == 3
    assert PolytopeSpec.bell_bipartite(2, 2).ambient_dim == 4
    assert PolytopeSpec.cut(4).ambient_dim == 6
    assert PolytopeSpec.cor(3).ambient_dim == 6
    with pytest.raises(ParameterError):
        PolytopeSpec("simplex", 3)
    with pytest.raises(DimensionError):
        PolytopeSpec.bell(1)
    with pytest.raises(DimensionError):
        PolytopeSpec.bell_bipartite(2, 0)
    with pytest.raises(DimensionError):
        PolytopeSpec("bell", 3, 2)


def test_coordinate_pairs_order():
    assert PolytopeSpec.bell(4).coordinate_pairs() == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    ]
    assert PolytopeSpec.bell_bipartite(2, 2).coordinate_pairs() == [
        (0, 0), (0, 1), (1, 0), (1, 1),
    ]
    assert PolytopeSpec.cor(3).coordinate_pairs() == [
        (0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2),
    ]


def test_vertex_counts_and_values():
    cases = [
        (PolytopeSpec.bell(3), 4, {-1, 1}),
        (PolytopeSpec.bell_bipartite(2, 2), 8, {-1, 1}),
        (PolytopeSpec.cut(4), 8, {0, 1}),
        (PolytopeSpec.cor(3), 8, {0, 1}),
    ]
    for spec, count, values in cases:
        verts = vertices(spec)
        assert verts.shape == (count, spec.ambient_dim)
        assert set(np.unique(verts)) <= values
        assert len({tuple(row) for row in verts.tolist()}) == count


def test_vertex_guard():
    with pytest.raises(ResourceLimitError):
        vertices(PolytopeSpec.bell(20))
    assert vertices(PolytopeSpec.bell(17), guard=17).shape[0] == 2**16


@pytest.mark.parametrize(
    "spec",
    [
        PolytopeSpec.bell(3),
        PolytopeSpec.bell_bipartite(2, 2),
        PolytopeSpec.cut(4),
        PolytopeSpec.cor(3),
    ],
)
def test_vertices_are_members(spec):
    verts = vertices(spec)
    for row in verts:
        cert = membership(spec, row.astype(float))
        assert cert.inside
        assert cert.distance < 1e-10
    centroid = verts.mean(axis=0)
    assert membership(spec, centroid).inside


def test_singlet_point_outside_bipartite_polytope():
    spec = PolytopeSpec.bell_bipartite(2, 2)
    cert = membership(spec, SINGLET_POINT)
    assert not cert.inside
    assert cert.distance == pytest.approx(SQRT2 - 1.0, abs=1e-7)
    normal, offset = cert.separating.normal, cert.separating.offset
    assert normal @ SINGLET_POINT > offset
    for row in vertices(spec):
        assert normal @ row <= offset + 1e-12


def test_uniform_negative_point_outside_bell3():
    spec = PolytopeSpec.bell(3)
    point = np.array([-0.5, -0.5, -0.5])
    cert = membership(spec, point)
    assert not cert.inside
    assert cert.distance == pytest.approx(0.5 / math.sqrt(3.0), abs=1e-7)
    normal, offset = cert.separating.normal, cert.separating.offset
    assert normal @ point > offset
    for row in vertices(spec):
        assert normal @ row <= offset + 1e-12


def test_certificate_json_shape():
    spec = PolytopeSpec.bell(3)
    inside = membership(spec, np.zeros(3)).to_json_dict()
    assert set(inside) == {"inside", "distance", "separating"}
    assert inside["inside"] is True
    assert inside["separating"] is None
    outside = membership(spec, np.array([-0.5, -0.5, -0.5])).to_json_dict()
    assert set(outside) == {"inside", "distance", "separating"}
    assert set(outside["separating"]) == {"normal", "offset"}


def test_membership_dimension_check():
    with pytest.raises(DimensionError):
        membership(PolytopeSpec.bell(3), np.zeros(4))


def test_ambient_coefficients():
    spec = PolytopeSpec.bell_bipartite(2, 2)
    vec, rhs = ambient_coefficients(spec, chsh())
    assert np.allclose(vec, [0.5, 0.5, 0.5, -0.5])
    assert rhs == 1.0
    vec, rhs = ambient_coefficients(PolytopeSpec.bell(3), triangle())
    assert np.allclose(vec, [-1.0, -1.0, -1.0])
    with pytest.raises(DimensionError):
        ambient_coefficients(PolytopeSpec.bell(3), chsh())
    with pytest.raises(DimensionError):
        ambient_coefficients(PolytopeSpec.bell_bipartite(2, 2), triangle())


def test_chsh_is_facet():
    spec = PolytopeSpec.bell_bipartite(2, 2)
    vec, rhs = ambient_coefficients(spec, chsh())
    report = facet_check(spec, vec, rhs)
    assert report.valid
    assert report.is_facet
    assert report.affine_rank == spec.ambient_dim - 1


def test_triangle_is_facet():
    spec = PolytopeSpec.bell(3)
    vec, rhs = ambient_coefficients(spec, triangle())
    report = facet_check(spec, vec, rhs)
    assert report.valid
    assert report.is_facet
    assert report.tight_count == 3


def test_valid_but_not_facet():
    spec = PolytopeSpec.bell(3)
    report = facet_check(spec, np.array([1.0, 0.0, 0.0]), 1.0)
    assert report.valid
    assert not report.is_facet
    assert report.tight_count == 2
    assert report.affine_rank == 1


def test_invalid_inequality_detected():
    spec = PolytopeSpec.bell(3)
    report = facet_check(spec, np.array([1.0, 0.0, 0.0]), 0.5)
    assert not report.valid


def test_facet_check_dimension_guard():
    with pytest.raises(DimensionError):
        facet_check(PolytopeSpec.bell(3), np.zeros(4), 1.0)


def test_cut_bell_maps_inverse():
    rng = np.random.default_rng(12)
    for _ in range(100):
        point = rng.uniform(-2.0, 2.0, size=6)
        assert np.max(np.abs(bell_to_cut(cut_to_bell(point)) - point)) < 1e-15
        assert np.max(np.abs(cut_to_bell(bell_to_cut(point)) - point)) < 1e-15


def test_cut_vertices_map_onto_bell_vertices():
    n = 4
    cut_rows = {tuple(map(float, cut_to_bell(r))) for r in vertices(PolytopeSpec.cut(n))}
    bell_rows = {tuple(map(float, r)) for r in vertices(PolytopeSpec.bell(n))}
    assert cut_rows == bell_rows


def test_bell_embed_structure():
    point = np.array([-0.5, -0.5, -0.5])
    image = bell_embed(point, 3)
    assert image.shape == (9,)
    matrix = image.reshape(3, 3)
    assert np.allclose(np.diag(matrix), 1.0)
    assert np.allclose(matrix, matrix.T)
    assert matrix[0, 1] == -0.5
    with pytest.raises(DimensionError):
        bell_embed(np.zeros(4), 3)


def test_bell_embed_preserves_exclusion():
    point = np.array([-0.5, -0.5, -0.5])
    cert = membership(PolytopeSpec.bell_bipartite(3, 3), bell_embed(point, 3))
    assert not cert.inside
    assert cert.distance == pytest.approx(0.3692744729, abs=1e-7)

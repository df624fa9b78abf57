import pytest
from hypothesis import given, settings, strategies as st

from surfclass.complex import (
    CellComplex,
    FaceSide,
    Side,
    Triangulation,
    corner_pairs,
    format_tri,
    from_triangulation,
    parse_tri,
    relabel,
    require_valid,
    triangulate,
    validate,
    vertex_classes,
)
from surfclass.errors import ParseError, SurfaceError, ValidationError
from surfclass.oracle import canonical_torus, euler, genus_g, refine


def test_torus_is_valid(torus):
    assert validate(torus).ok


def test_unglued_side_is_reported():
    T = Triangulation(2, ((Side(0, 1), Side(1, 1)), (Side(0, 2), Side(1, 2))))
    report = validate(T)
    assert "unpaired side 0.0" in report.violations
    assert "unpaired side 1.0" in report.violations


def test_two_disjoint_tori_are_disconnected():
    T = canonical_torus()
    shifted = tuple((Side(a.t + 2, a.s), Side(b.t + 2, b.s)) for a, b in T.gluings)
    both = Triangulation(4, T.gluings + shifted)
    assert validate(both).violations == ("dual graph disconnected",)


@pytest.mark.parametrize(
    "gluings, message",
    [
        (((Side(0, 0), Side(0, 0)),), "glued to itself"),
        (((Side(0, 0), Side(1, 0)), (Side(0, 0), Side(1, 1))), "glued more than once"),
        (((Side(0, 3), Side(1, 0)),), "out of range"),
    ],
)
def test_malformed_gluings(gluings, message):
    report = validate(Triangulation(2, gluings))
    assert any(message in v for v in report.violations)


def test_zero_triangles_rejected():
    assert not validate(Triangulation(0, ())).ok


def test_require_valid_raises_with_message():
    T = Triangulation(2, ((Side(0, 1), Side(1, 1)), (Side(0, 2), Side(1, 2))))
    with pytest.raises(ValidationError, match="unpaired side 0.0"):
        require_valid(T)


def test_corner_identifications_reverse_orientation():
    # side s spans corners s and s+1; the reversing gluing swaps ends
    pairs = corner_pairs(Side(0, 1), Side(1, 2))
    assert set(pairs) == {((0, 1), (1, 0)), ((0, 2), (1, 2))}


def test_vertex_counts(torus, sphere):
    assert vertex_classes(torus).count == 1
    assert vertex_classes(sphere).count == 3


def test_vertex_classes_of_invalid_triangulation():
    with pytest.raises(ValidationError):
        vertex_classes(Triangulation(1, ()))


def test_valid_triangulations_have_even_size():
    for g in range(4):
        T = genus_g(g)
        assert T.n % 2 == 0
        assert len(T.gluings) == 3 * T.n // 2


def test_triangulate_keeps_triangles(sphere):
    assert triangulate(from_triangulation(sphere)) == sphere


def test_triangulate_square_torus():
    square = CellComplex((4,), ((FaceSide(0, 0), FaceSide(0, 2)), (FaceSide(0, 1), FaceSide(0, 3))))
    T = triangulate(square)
    assert T.n == 4
    assert euler(T).genus == 1


def test_triangulate_bigon_sphere():
    # two bigons glued along both sides form a sphere
    C = CellComplex((2, 2), ((FaceSide(0, 0), FaceSide(1, 0)), (FaceSide(0, 1), FaceSide(1, 1))))
    T = triangulate(C)
    assert T.n == 4
    assert euler(T).genus == 0


def test_triangulate_is_idempotent(genus2):
    once = triangulate(from_triangulation(genus2))
    assert triangulate(from_triangulation(once)) == once


def test_triangulate_rejects_open_complex():
    C = CellComplex.build((3,), ())
    assert len(C.boundary) == 1
    with pytest.raises(SurfaceError, match="open complex"):
        triangulate(C)


def test_triangulate_rejects_disconnected():
    T = canonical_torus()
    C = CellComplex((3, 3, 3, 3), T.gluings + tuple(
        (FaceSide(a.t + 2, a.s), FaceSide(b.t + 2, b.s)) for a, b in T.gluings))
    with pytest.raises(SurfaceError, match="disconnected"):
        triangulate(C)


def test_boundary_circle_of_single_triangle():
    C = CellComplex.build((3,), (), lambda side: "rim")
    C.check()
    (circle,) = C.boundary
    assert circle.sides == (FaceSide(0, 0), FaceSide(0, 1), FaceSide(0, 2))
    assert circle.label == "rim"


def test_triangulate_permuted_faces_same_genus(genus2):
    C = from_triangulation(refine(genus2, 3, 5))
    k = len(C.faces)
    perm = list(range(k))[::-1]
    permuted = CellComplex(
        C.faces, tuple((FaceSide(perm[a.f], a.i), FaceSide(perm[b.f], b.i)) for a, b in C.gluings)
    )
    assert euler(triangulate(permuted)).genus == euler(triangulate(C)).genus == 2


def test_tri_round_trip(genus2):
    text = format_tri(genus2)
    assert parse_tri(text) == genus2
    assert format_tri(parse_tri(text)) == text


def test_tri_comments_and_blank_lines():
    text = "# torus\ntri 1\n\ntriangles 2  # two\nglue 0.0 1.0\nglue 0.1 1.1\nglue 0.2 1.2\n"
    assert parse_tri(text) == canonical_torus()


@pytest.mark.parametrize(
    "text, line",
    [
        ("tri 2\n", 1),
        ("tri 1\ntriangles x\n", 2),
        ("tri 1\ntriangles 2\nglue 0.0\n", 3),
        ("tri 1\ntriangles 2\nglue 0.0 1.1\nglue 0-1 1.0\n", 4),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError, match=f"line {line}:"):
        parse_tri(text)


def test_relabel_rejects_non_permutation(torus):
    with pytest.raises(SurfaceError):
        relabel(torus, [0, 0])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3), st.integers(0, 12), st.integers(0, 10**6), st.randoms(use_true_random=False))
def test_relabeling_preserves_vertex_count(g, steps, seed, rnd):
    T = refine(genus_g(g), steps, seed)
    perm = list(range(T.n))
    rnd.shuffle(perm)
    assert vertex_classes(relabel(T, perm)).count == vertex_classes(T).count

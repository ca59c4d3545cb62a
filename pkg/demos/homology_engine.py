"""Exact integral homology of standard complexes, with and without collapses."""

from pbcomplex.complex import (
    SimplicialComplex,
    boundary_of_simplex,
    cm_check,
    cross_polytope,
    join_complex,
    points,
    projective_plane,
    reduced_homology,
)

spaces = {
    "hollow triangle": boundary_of_simplex(2),
    "octahedron": cross_polytope(3),
    "projective plane (6 vertices)": projective_plane(),
    "empty complex": SimplicialComplex(),
    "S0 * S0 * S0": join_complex(join_complex(points(2), points(2)), points(2)),
}

for name, K in spaces.items():
    plain = reduced_homology(K)
    pre = reduced_homology(K, collapse_first=True)
    assert plain == pre
    cm = cm_check(K).is_cm if not K.is_empty else "-"
    print(f"{name:32s} f={K.f_vector()}  H~: {plain}  CM: {cm}")

"""Inflating a complex replaces each vertex by a set of copies; the
Cohen-Macaulay property and the dimension survive."""

from pbcomplex.complex import SimplicialComplex, boundary_of_simplex, cm_check, inflate, natural_projection, reduced_homology
from pbcomplex.verify import verify_inflation_cm

tetra = boundary_of_simplex(3)
bowtie = SimplicialComplex([(0, 1, 2), (0, 3, 4)])

for name, K in [("tetrahedron boundary", tetra), ("two triangles at a vertex", bowtie)]:
    I = inflate(K, {v: "ab" for v in K.vertices})
    print(f"{name}: base f={K.f_vector()} CM={cm_check(K).is_cm};"
          f" inflated f={I.f_vector()} CM={cm_check(I).is_cm}, H~ {reduced_homology(I)}")

p = natural_projection(tetra, {v: "ab" for v in tetra.vertices})
print("projection is onto:", set(p.vertex_map.values()) == set(tetra.vertices))

rep = verify_inflation_cm(trials=50, seed=1)
print(rep.summary_line(), rep.observations)

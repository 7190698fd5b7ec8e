"""Vertex links, face sequences, and the vertex-count arithmetic.

The link of a vertex is the cyclic arrangement of faces around it; its
C-notation brackets the quadrangle corner.  The face sequence is the
multiset of face sizes at a vertex; a map where every vertex has the same
sequence is semi-equivelar (SEM).
"""

from semap import (
    FaceSequence,
    FlatTypeError,
    catalog_map,
    face_sequence,
    sem_vertex_count,
    semi_equivelar_type,
    vertex_link,
)

k1 = catalog_map("K1")

# Around vertex 0 of K1: one quadrangle corner [2, 3, 4], then triangles.
link = vertex_link(k1, 0)
print("lk(0) =", link.notation())
print("corner faces:", link.faces())
print("face sequence at 0:", face_sequence(k1, 0))

# Every vertex agrees, so K1 is semi-equivelar of type (3^5, 4).
print("type of K1:", semi_equivelar_type(k1))
print("type of cube:", semi_equivelar_type(catalog_map("cube")))

# chi = N * (1 - d/2 + sum p_i/a_i) forces the vertex count for a type.
seq = FaceSequence.from_string("3^5,4")
print("\ncurvature of (3^5, 4):", seq.curvature())
for chi in (-1, -2, -8):
    print(f"  chi={chi}: N = {sem_vertex_count(seq, chi)}")

print("curvature of (3^7, 4):", FaceSequence.from_string("3^7,4").curvature())
print("  chi=-10: N =", sem_vertex_count(FaceSequence.from_string("3^7,4"), -10))

# Flat types (like the triangular tiling of the torus) admit any count.
try:
    sem_vertex_count(FaceSequence.from_string("3^6"), 0)
except FlatTypeError as exc:
    print("\n(3^6) on chi=0:", exc)

"""Orientation double covers: from the chi=-1 maps to the double torus.

Every non-orientable map has a connected 2-fold cover that is orientable;
vertex counts, edges, faces and chi all double.  The covers of the three
chi=-1 census maps are exactly the bundled T1, T2, T3 on the double
torus, and the cover of the 6-vertex projective plane is the icosahedron.
"""

from semap import (
    are_isomorphic,
    catalog_map,
    double_cover,
    semi_equivelar_type,
    surface_profile,
    validate,
    verify_covering,
)

for base_name, cover_name in (("K1", "T1"), ("K2", "T2"), ("K3", "T3")):
    base = catalog_map(base_name)
    cover, witness = double_cover(base)
    p = surface_profile(cover)
    print(f"cover({base_name}): {p}, type {semi_equivelar_type(cover)}")
    print(f"   covering verified: {verify_covering(cover, base, witness)}")
    print(f"   isomorphic to bundled {cover_name}: "
          f"{are_isomorphic(cover, catalog_map(cover_name))}")

# The classical example: the antipodal quotient undone.
rp2 = catalog_map("rp2_6")
ico, witness = double_cover(rp2)
print(f"\ncover(rp2_6): {surface_profile(ico)} on {ico.n} vertices "
      f"(valid: {validate(ico).ok})")
print("every vertex has five triangles:", semi_equivelar_type(ico))

# Orientable input is refused: its orientation cover falls apart into two
# disjoint copies, which is not a map.
try:
    double_cover(catalog_map("T1"))
except Exception as exc:
    print(f"\ncover(T1) refused: {exc}")

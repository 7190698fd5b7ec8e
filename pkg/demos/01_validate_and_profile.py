"""Build maps by hand, check the closed-surface axioms, read off profiles.

A map is a list of faces, each a cyclic vertex sequence.  Validation
checks closedness (every edge in exactly two faces), the intersection
axiom, the link condition at every vertex, and connectivity.
"""

from semap import PolyhedralMap, catalog, surface_profile, validate

# The boundary of the 3-simplex: the smallest closed surface map.
tetra = PolyhedralMap([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
                      name="tetrahedron")
print(validate(tetra))                  # -> valid
print(surface_profile(tetra))           # -> chi=2 (orientable), V=4 E=6 F=4

# Remove one face and closedness fails: three edges now bound one face each.
broken = tetra.drop_face(0)
report = validate(broken)
print(f"\nafter dropping a face: {len(report)} violations")
for violation in report:
    print("   ", violation)

# A square pyramid without its base is not closed either, and gluing two
# triangles along a shared diagonal pair breaks the intersection axiom.
bad = PolyhedralMap([(0, 1, 2, 3), (0, 4, 2, 5)], name="diagonal-clash")
print("\ndiagonal clash:", [v.axiom for v in validate(bad)])

# The bundled census: every entry re-checks its stored profile on load.
print("\nbundled maps:")
for entry in catalog():
    p = surface_profile(entry.map)
    print(f"  {entry.name:12s} {p}")

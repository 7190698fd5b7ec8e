"""Stacking barycenters: 12-covered triangulations of the chi=-1 surface.

Equivelar (constant-degree) triangulations do not exist on chi=-1, but a
triangulation in which every edge touches a vertex of degree 12 does:
stack a barycenter into every face of a (3^5, 4) map.  Each original
vertex then has degree 6 + 6 = 12, and every edge keeps one original
endpoint.
"""

from semap import catalog_map, is_d_covered, stack_faces, surface_profile, validate

for name in ("K1", "K2", "K3"):
    base = catalog_map(name)
    stacked = stack_faces(base)
    p = surface_profile(stacked)
    degrees = sorted({stacked.degree(v) for v in range(base.n)})
    print(f"stacked {name}: {p} (valid: {validate(stacked).ok})")
    print(f"   original vertices now have degrees {degrees}")
    print(f"   12-covered: {is_d_covered(stacked, 12)}; "
          f"11-covered: {is_d_covered(stacked, 11)}")

# The same construction keeps chi and works on any map.
cube = catalog_map("cube")
stacked_cube = stack_faces(cube)
print(f"\nstacked cube: {surface_profile(stacked_cube)}, "
      f"4-covered: {is_d_covered(stacked_cube, 4)}")

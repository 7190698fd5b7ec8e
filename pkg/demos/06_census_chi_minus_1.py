"""The exhaustive census: all (3^5, 4) maps on the chi=-1 surface.

The search fixes the link of vertex 0 as C7([2, 3, 4], 5, 6, 7, 1) (any
map of this type can be relabeled so a vertex looks like that), then
completes links by backtracking over open edges.  Exactly three
isomorphism classes survive, the bundled K1, K2, K3.
"""

from semap import (
    FaceSequence,
    are_isomorphic,
    catalog_map,
    enumerate_sems,
    seed_link,
    seed_partial,
)

seq = FaceSequence.from_string("3^5,4")
print("seed link:", seed_link((4, 3, 3, 3, 3, 3)).notation())
print("seed faces:", sorted(seed_partial(seq, -1).faces))

maps, stats = enumerate_sems(seq, -1)
print(f"\nsearch: {stats.nodes} nodes, {stats.solutions} completed maps, "
      f"{stats.classes} isomorphism classes in {stats.seconds:.2f}s")

for m in maps:
    match = next(name for name in ("K1", "K2", "K3")
                 if are_isomorphic(m, catalog_map(name)))
    print(f"   class {m.name} is the bundled {match}")

# Sanity checks on classical cases: each is the unique map of its type.
for type_string, chi, expect in (("3^3", 2, "tetrahedron"),
                                 ("3^4", 2, "octahedron"),
                                 ("4^3", 2, "cube"),
                                 ("3^5", 1, "6-vertex projective plane")):
    found, st = enumerate_sems(FaceSequence.from_string(type_string), chi)
    print(f"({type_string}) on chi={chi}: {len(found)} class(es)  [{expect}]")

"""Canonical forms, automorphisms, and the G_t distinguishing graphs.

Two maps are isomorphic exactly when their canonical forms (flag-rooted
breadth-first encodings) agree.  The G_t graph joins vertex pairs whose
link-cycle vertex sets meet in exactly t vertices; it is an isomorphism
invariant and separates the three chi=-1 census maps.
"""

import random

from semap import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    catalog_map,
    g_t_graph,
    is_vertex_transitive,
    isomorphism,
)

k1, k2, k3 = catalog_map("K1"), catalog_map("K2"), catalog_map("K3")

# Relabeling invariance: shuffle the vertex labels, the form is unchanged.
rng = random.Random(0)
perm = list(range(12))
rng.shuffle(perm)
shuffled = k1.relabel(perm)
print("canonical form survives relabeling:", canonical_form(shuffled) == canonical_form(k1))
print("witness bijection:", isomorphism(k1, shuffled))

# The three census maps are pairwise non-isomorphic...
print("\nK1 ~ K2:", are_isomorphic(k1, k2))
print("K1 ~ K3:", are_isomorphic(k1, k3))
print("K2 ~ K3:", are_isomorphic(k2, k3))

# ...which the G_t edge counts already show.
for name, m in (("K1", k1), ("K2", k2), ("K3", k3)):
    g2, g6 = g_t_graph(m, 2), g_t_graph(m, 6)
    print(f"G_2({name}): {g2.sorted_edges()}   G_6({name}): {g6.sorted_edges()}")

# Automorphism groups are tiny, so none of these maps is vertex-transitive;
# compare with the tetrahedron, where every vertex looks alike.
for name, m in (("K1", k1), ("K2", k2), ("K3", k3), ("tetrahedron", catalog_map("tetrahedron"))):
    group = automorphism_group(m)
    print(f"\n{name}: |Aut| = {group.order}, orbits = {[list(o) for o in group.orbits]}")
    print(f"   vertex-transitive: {is_vertex_transitive(m)}")

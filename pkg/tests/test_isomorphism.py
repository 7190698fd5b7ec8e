import random
from itertools import combinations

import pytest

from semap import (
    SimpleGraph,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_map,
    g_t_graph,
    is_vertex_transitive,
    isomorphism,
    link_vertex_set,
    neighbor_set,
    normalize_face,
    stack_faces,
    validate,
)
from oracles import (
    brute_force_automorphisms,
    brute_force_isomorphism,
    neighbor_oracle,
)


def shuffled(m, rng):
    perm = list(range(m.n))
    rng.shuffle(perm)
    return m.relabel(perm), perm


# ---------------------------------------------------------------------------
# neighbor sets and link sets
# ---------------------------------------------------------------------------

def test_neighbor_set_of_k1_vertex_0(k1):
    # the quadrangle 0-2-3-4 contributes only 2 and 4 as neighbors of 0
    assert neighbor_set(k1, 0) == {1, 2, 4, 5, 6, 7}


def test_neighbor_set_of_tetrahedron(tetrahedron):
    assert neighbor_set(tetrahedron, 0) == {1, 2, 3}


def test_neighbor_set_of_t1_vertex_0(t1):
    assert neighbor_set(t1, 0) == {1, 2, 4, 6, 7, 13}


def test_neighbor_sets_match_oracle(all_catalog):
    for entry in all_catalog:
        for v in range(entry.map.n):
            assert neighbor_set(entry.map, v) == neighbor_oracle(entry.map, v)


def test_link_set_adds_quad_opposites(k1):
    # link cycle of 0 passes through 3, the vertex opposite 0 in the quad
    assert link_vertex_set(k1, 0) == {1, 2, 3, 4, 5, 6, 7}
    assert link_vertex_set(k1, 0) - neighbor_set(k1, 0) == {3}


def test_link_set_equals_neighbors_on_triangulations(tetrahedron, rp2):
    for m in (tetrahedron, rp2):
        for v in range(m.n):
            assert link_vertex_set(m, v) == neighbor_set(m, v)


# ---------------------------------------------------------------------------
# G_t graphs
# ---------------------------------------------------------------------------

def test_g_t_published_values_for_k1(k1):
    assert g_t_graph(k1, 6).edge_count == 0
    g2 = g_t_graph(k1, 2)
    assert g2.sorted_edges() == [(2, 4), (7, 10)]


def test_g_t_published_values_for_k2(k2):
    assert g_t_graph(k2, 2).edge_count == 2
    assert g_t_graph(k2, 6).sorted_edges() == [(1, 6), (5, 7)]


def test_g_t_k3_values(k3):
    assert g_t_graph(k3, 2).edge_count == 0
    # The published table prints two edges ([1,6] plus a garbled out-of-range
    # pair); the class itself has three, an isomorphism invariant any
    # relabeling of K3 must reproduce.
    assert g_t_graph(k3, 6).sorted_edges() == [(0, 8), (1, 6), (2, 7)]


def test_g_t_partitions_all_pairs(all_catalog):
    for entry in all_catalog:
        m = entry.map
        total = sum(g_t_graph(m, t).edge_count for t in range(m.n + 1))
        assert total == m.n * (m.n - 1) // 2, entry.name


def test_g_t_neighbor_variant_also_partitions(k1):
    total = sum(g_t_graph(k1, t, sets="neighbor").edge_count for t in range(k1.n + 1))
    assert total == k1.n * (k1.n - 1) // 2


def test_g_t_equivariance_under_relabeling(k1, k2):
    rng = random.Random(7)
    for m in (k1, k2):
        for t in (2, 5, 6):
            g = g_t_graph(m, t)
            relabeled, perm = shuffled(m, rng)
            g2 = g_t_graph(relabeled, t)
            mapped = {tuple(sorted((perm[a], perm[b]))) for a, b in g.edges}
            assert mapped == set(g2.edges)


def test_g2_of_k1_is_two_disjoint_edges(k1, k2):
    # unlabeled isomorphism type: a perfect matching on 4 of 12 vertices
    assert g_t_graph(k1, 2).unlabeled_key() == g_t_graph(k2, 2).unlabeled_key()


def test_simple_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(0, 5)}))


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def test_canonical_form_invariant_under_relabeling(all_catalog):
    rng = random.Random(101)
    for entry in all_catalog:
        form = canonical_form(entry.map)
        for _ in range(10):
            relabeled, _ = shuffled(entry.map, rng)
            assert canonical_form(relabeled) == form, entry.name


def test_canonical_forms_separate_k1_k2_k3(k1, k2, k3):
    forms = {canonical_form(k1), canonical_form(k2), canonical_form(k3)}
    assert len(forms) == 3


def test_canonical_map_is_isomorphic_representative(k1):
    rep = canonical_map(k1)
    assert validate(rep).ok
    assert are_isomorphic(rep, k1)
    assert canonical_form(rep) == canonical_form(k1)


# ---------------------------------------------------------------------------
# isomorphism testing
# ---------------------------------------------------------------------------

def test_k_maps_pairwise_non_isomorphic(k1, k2, k3):
    assert not are_isomorphic(k1, k2)
    assert not are_isomorphic(k1, k3)
    assert not are_isomorphic(k2, k3)


def test_t_maps_pairwise_non_isomorphic(t1, t2, t3, n_map):
    maps = [t1, t2, t3, n_map]
    for a, b in combinations(maps, 2):
        assert not are_isomorphic(a, b), (a.name, b.name)


def test_relabeled_map_is_isomorphic_with_verified_witness(k1):
    rng = random.Random(5)
    relabeled, perm = shuffled(k1, rng)
    witness = isomorphism(k1, relabeled)
    assert witness is not None
    for face in k1.faces:
        image = normalize_face(tuple(witness[v] for v in face))
        assert image in set(relabeled.face_keys)


def test_swap_relabeling_example(k1):
    perm = list(range(12))
    perm[0], perm[11] = perm[11], perm[0]
    assert are_isomorphic(k1, k1.relabel(perm))


def test_isomorphism_agrees_with_brute_force_on_small_maps(
        tetrahedron, cube, octahedron):
    rng = random.Random(9)
    stacked_tetra = stack_faces(tetrahedron)  # 8 vertices
    pool = [tetrahedron, cube, octahedron, stacked_tetra]
    for m in list(pool):
        relabeled, _ = shuffled(m, rng)
        pool.append(relabeled)
    for a, b in combinations(pool, 2):
        got = are_isomorphic(a, b)
        want = brute_force_isomorphism(a, b) is not None
        assert got == want, (a.name, b.name)


def test_isomorphism_is_an_equivalence_relation(k1, k2, t1, octahedron):
    rng = random.Random(13)
    pool = [k1, k2, t1, octahedron]
    pool += [shuffled(m, rng)[0] for m in pool]
    for a in pool:
        assert are_isomorphic(a, a)
    for a, b in combinations(pool, 2):
        assert are_isomorphic(a, b) == are_isomorphic(b, a)
    for a in pool:
        for b in pool:
            for c in pool:
                if are_isomorphic(a, b) and are_isomorphic(b, c):
                    assert are_isomorphic(a, c)


# ---------------------------------------------------------------------------
# automorphisms and transitivity
# ---------------------------------------------------------------------------

def test_tetrahedron_automorphisms(tetrahedron):
    group = automorphism_group(tetrahedron)
    assert group.order == 24
    assert len(group.orbits) == 1
    assert is_vertex_transitive(tetrahedron)


def test_automorphisms_match_brute_force(tetrahedron, cube, octahedron, rp2):
    for m in (tetrahedron, cube, octahedron, rp2):
        group = automorphism_group(m)
        brute = brute_force_automorphisms(m)
        assert group.order == len(brute)
        assert set(group.elements) == set(brute)


def test_k_maps_not_vertex_transitive(k1, k2, k3):
    for m in (k1, k2, k3):
        group = automorphism_group(m)
        assert len(group.orbits) > 1
        assert not is_vertex_transitive(m)


def test_n_not_vertex_transitive(n_map):
    assert not is_vertex_transitive(n_map)


def test_generators_preserve_faces(all_catalog):
    for entry in all_catalog:
        m = entry.map
        group = automorphism_group(m)
        keys = set(m.face_keys)
        for gen in group.generators:
            mapped = {normalize_face(tuple(gen[v] for v in f)) for f in m.faces}
            assert mapped == keys, entry.name


def test_orbits_partition_and_divide_order(all_catalog):
    for entry in all_catalog:
        group = automorphism_group(entry.map)
        seen = sorted(v for orbit in group.orbits for v in orbit)
        assert seen == list(range(entry.map.n))
        for orbit in group.orbits:
            assert group.order % len(orbit) == 0


def test_generators_generate_the_whole_group(cube):
    from semap.isomorphism import _closure

    group = automorphism_group(cube)
    assert len(_closure(list(group.generators), cube.n)) == group.order

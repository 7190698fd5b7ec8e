"""Surgery on maps: orientation double covers, cylinder addition, stacking."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

from .core import (
    Face,
    FaceSequence,
    FlatTypeError,
    ImpossibleTypeError,
    PolyhedralMap,
    normalize_face,
    same_face,
    sem_vertex_count,
    semi_equivelar_type,
    surface_profile,
    validate,
)
from .isomorphism import canonical_form


class TransformError(ValueError):
    """A surgery cannot be performed or would produce an invalid map."""


# ---------------------------------------------------------------------------
# Orientation double cover
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoveringWitness:
    """A fold-to-one projection from cover vertices onto base vertices."""

    vertex_map: dict[int, int]
    fold: int


def double_cover(m: PolyhedralMap) -> tuple[PolyhedralMap, CoveringWitness]:
    """Orientation double cover of a non-orientable map.

    Takes two oppositely oriented copies of every face and crosses each
    edge flipping the copy exactly when the stored boundary orientations
    fail to be coherent.  Corners then glue into 2V cover vertices; the
    result is orientable and connected, with every count doubled.
    """
    report = validate(m)
    if not report.ok:
        raise TransformError(f"double cover needs a valid map, got: {report}")
    if surface_profile(m).orientable:
        raise TransformError(
            "map is already orientable; its orientation cover is the disconnected "
            "disjoint union of two copies, not a map"
        )

    # Directed use of each edge by each face, to detect coherence.
    use: dict[tuple[int, int], list[tuple[int, bool]]] = {}
    for fi, face in enumerate(m.faces):
        k = len(face)
        for i in range(k):
            a, b = face[i], face[(i + 1) % k]
            key = (a, b) if a < b else (b, a)
            use.setdefault(key, []).append((fi, a < b))

    # Union-find over (face, position, sheet) corners.
    index: dict[tuple[int, int, int], int] = {}
    for fi, face in enumerate(m.faces):
        for i in range(len(face)):
            for s in (0, 1):
                index[(fi, i, s)] = len(index)
    parent = list(range(len(index)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pos_of = {
        (fi, v): m.faces[fi].index(v)
        for fi, face in enumerate(m.faces)
        for v in face
    }
    for (a, b), uses in use.items():
        (f1, d1), (f2, d2) = uses
        flip = 1 if d1 == d2 else 0
        for v in (a, b):
            i1, i2 = pos_of[(f1, v)], pos_of[(f2, v)]
            for s in (0, 1):
                x, y = find(index[(f1, i1, s)]), find(index[(f2, i2, s ^ flip)])
                if x != y:
                    parent[x] = y

    # Cover vertices: corner classes, numbered deterministically per base vertex.
    classes: dict[int, list[tuple[int, int, int]]] = {}
    for corner, idx in index.items():
        classes.setdefault(find(idx), []).append(corner)
    keyed = sorted(
        (m.faces[min(members)[0]][min(members)[1]], min(members), members)
        for members in classes.values()
    )
    cover_id: dict[int, int] = {}
    vertex_map: dict[int, int] = {}
    for new, (base_vertex, _, members) in enumerate(keyed):
        vertex_map[new] = base_vertex
        for corner in members:
            cover_id[index[corner]] = new
    lifts: dict[int, int] = {}
    for b in vertex_map.values():
        lifts[b] = lifts.get(b, 0) + 1
    if any(lifts.get(v, 0) != 2 for v in range(m.n)):
        raise TransformError("internal error: some vertex did not lift to 2 copies")

    faces: list[Face] = []
    for fi, face in enumerate(m.faces):
        for s in (0, 1):
            lifted = tuple(cover_id[find(index[(fi, i, s)])] for i in range(len(face)))
            faces.append(lifted[::-1] if s else lifted)
    cover = PolyhedralMap(faces, n=2 * m.n, name=f"{m.name}^2" if m.name else "")

    report = validate(cover)
    if not report.ok:
        raise TransformError(f"internal error: double cover came out invalid: {report}")
    return cover, CoveringWitness(vertex_map=vertex_map, fold=2)


def verify_covering(cover: PolyhedralMap, base: PolyhedralMap,
                    witness: CoveringWitness) -> bool:
    """Check a claimed covering: fold count, face lifting, local bijectivity."""
    vm = witness.vertex_map
    if set(vm) != set(range(cover.n)):
        return False
    if any(not 0 <= b < base.n for b in vm.values()):
        return False
    preimages: dict[int, int] = {}
    for b in vm.values():
        preimages[b] = preimages.get(b, 0) + 1
    if any(preimages.get(v, 0) != witness.fold for v in range(base.n)):
        return False
    base_keys = set(base.face_keys)
    for face in cover.faces:
        image = tuple(vm[v] for v in face)
        if len(set(image)) != len(image):
            return False
        if normalize_face(image) not in base_keys:
            return False
    # Local bijectivity: the faces at each cover vertex map one-to-one onto
    # the faces at its image.
    for x in range(cover.n):
        images = sorted(
            normalize_face(tuple(vm[v] for v in cover.faces[fi]))
            for fi in cover.vertex_faces[x]
        )
        downstairs = sorted(base.face_keys[fi] for fi in base.vertex_faces[vm[x]])
        if images != downstairs:
            return False
    return True


# ---------------------------------------------------------------------------
# Stacking
# ---------------------------------------------------------------------------

def stack_faces(m: PolyhedralMap) -> PolyhedralMap:
    """Subdivide every face by a barycenter joined to all its vertices.

    Each p-gon becomes p triangles; chi is preserved and the result is a
    triangulation on V + F vertices.
    """
    faces: list[Face] = []
    for fi, face in enumerate(m.faces):
        bary = m.n + fi
        k = len(face)
        for i in range(k):
            faces.append((face[i], face[(i + 1) % k], bary))
    return PolyhedralMap(faces, n=m.n + len(m.faces),
                         name=f"stacked({m.name})" if m.name else "")


# ---------------------------------------------------------------------------
# Cylinder addition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CylinderSpec:
    """One cylinder gluing between two equal-size, vertex-disjoint faces.

    ``kind`` is "quad" (4 quadrangles between two quadrangle boundaries) or
    "tri" (a 6-triangle band between two triangle boundaries).  ``offset``
    rotates and ``reflect`` flips the second boundary before the walls are
    attached; together they realise every boundary matching (8 for quads,
    6 for triangles).  For two-map gluings ``face_b`` refers to the second
    map; its labels are shifted past the first map's vertices when glued.
    """

    kind: str
    face_a: Face
    face_b: Face
    offset: int = 0
    reflect: bool = False

    def __post_init__(self):
        size = {"quad": 4, "tri": 3}.get(self.kind)
        if size is None:
            raise ValueError(f"kind must be 'quad' or 'tri', got {self.kind!r}")
        if len(self.face_a) != size or len(self.face_b) != size:
            raise ValueError(f"{self.kind} cylinder needs two {size}-gons")
        if not 0 <= self.offset < size:
            raise ValueError(f"offset must be in 0..{size - 1}")


def _wall_faces(a: Face, b: Face, offset: int, reflect: bool) -> list[Face]:
    """Faces of the cylinder between boundary cycles ``a`` and ``b``."""
    k = len(a)
    if reflect:
        b = b[::-1]
    c = tuple(b[(offset + i) % k] for i in range(k))
    if k == 4:
        return [(a[i], a[(i + 1) % 4], c[(i + 1) % 4], c[i]) for i in range(4)]
    return [
        (a[0], a[1], c[1]), (a[0], c[1], c[0]),
        (a[1], a[2], c[2]), (a[1], c[2], c[1]),
        (a[2], a[0], c[0]), (a[2], c[0], c[2]),
    ]


def _find_face(m: PolyhedralMap, face) -> Face:
    key = normalize_face(tuple(face))
    for f in m.faces:
        if normalize_face(f) == key:
            return f
    raise TransformError(f"face {tuple(face)} not present in {m!r}")


def add_cylinder(map_a: PolyhedralMap, spec: CylinderSpec,
                 map_b: PolyhedralMap | None = None) -> PolyhedralMap:
    """Remove two faces and glue a cylinder between their boundary cycles.

    With ``map_b`` the second face lives there and the two vertex sets are
    made disjoint by shifting the second map's labels.  The result is
    validated before being returned; an invalid gluing raises instead, so
    callers never see a broken map.
    """
    fa = _find_face(map_a, spec.face_a)
    if map_b is None:
        fb = _find_face(map_a, spec.face_b)
        all_faces = list(map_a.faces)
        n = map_a.n
    else:
        fb_local = _find_face(map_b, spec.face_b)
        fb = tuple(v + map_a.n for v in fb_local)
        all_faces = list(map_a.faces) + [
            tuple(v + map_a.n for v in f) for f in map_b.faces
        ]
        n = map_a.n + map_b.n
    if same_face(fa, fb):
        raise TransformError("cannot glue a face to itself")
    if set(fa) & set(fb):
        raise TransformError(f"faces {fa} and {fb} share vertices {sorted(set(fa) & set(fb))}")

    keep = [f for f in all_faces if not (same_face(f, fa) or same_face(f, fb))]
    keep.extend(_wall_faces(fa, fb, spec.offset, spec.reflect))
    out = PolyhedralMap(keep, n=n, name=map_a.name)
    report = validate(out)
    if not report.ok:
        raise TransformError(f"gluing produced an invalid map: {report}")
    return out


# ---------------------------------------------------------------------------
# Search over cylinder bundles
# ---------------------------------------------------------------------------

@dataclass
class CylinderSearchStats:
    bundles: int = 0
    candidates: int = 0      # gluing combinations examined
    built: int = 0           # maps actually constructed and validated
    valid: int = 0
    classes: int = 0
    exhausted: bool = True
    seconds: float = 0.0


@dataclass(frozen=True)
class CylinderProvenance:
    """Which bases and cylinder specs produced a search result.

    Spec faces are given in the labels of the disjoint union of the bases
    (the i-th base's vertices shifted by the combined count of its
    predecessors).
    """

    bases: tuple[str, ...]
    specs: tuple[CylinderSpec, ...]


def _perfect_matchings(items: list) -> Iterator[tuple]:
    """All ways to split an even list into unordered pairs."""
    if not items:
        yield ()
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for sub in _perfect_matchings(rest):
            yield ((first, items[i]),) + sub


def _triangle_partitions(m: PolyhedralMap) -> list[tuple[Face, ...]]:
    """Sets of vertex-disjoint triangle faces covering every vertex once."""
    tris = sorted(f for f in m.face_keys if len(f) == 3)
    out: list[tuple[Face, ...]] = []

    def extend(chosen: list[Face], covered: set[int]) -> None:
        if len(covered) == m.n:
            out.append(tuple(chosen))
            return
        pivot = min(v for v in range(m.n) if v not in covered)
        for t in tris:
            if pivot in t and not set(t) & covered:
                chosen.append(t)
                extend(chosen, covered | set(t))
                chosen.pop()

    extend([], set())
    return out


def _bundle_connects(pairs, component_of) -> bool:
    """Whether the cylinder pairs join all disjoint-union components."""
    comps = set(component_of.values())
    if len(comps) <= 1:
        return True
    parent = {c: c for c in comps}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for fa, fb in pairs:
        a, b = find(component_of[normalize_face(fa)]), find(component_of[normalize_face(fb)])
        if a != b:
            parent[a] = b
    return len({find(c) for c in comps}) == 1


def _gluings(kind: str) -> list[tuple[int, bool]]:
    size = 4 if kind == "quad" else 3
    return [(o, r) for r in (False, True) for o in range(size)]


def _infer_kind(base_type: FaceSequence, target_type: FaceSequence) -> str | None:
    base = dict(base_type.entries)
    quad_up = dict(base)
    quad_up[4] = quad_up.get(4, 0) + 1
    if quad_up == dict(target_type.entries):
        return "quad"
    tri_up = dict(base)
    tri_up[3] = tri_up.get(3, 0) + 2
    if tri_up == dict(target_type.entries):
        return "tri"
    return None


def _search_units(base_maps, target_type, target_chi, kind):
    """Deterministic stream of work units: (names, faces, n, pairing).

    A unit fixes the base multiset and one admissible pairing of cylinder
    sites; the gluing choices remain to be enumerated.  Units from
    different base multisets are interleaved round-robin so truncated
    searches still sample every combination of bases.
    """
    per_task: list[list[tuple]] = []
    min_n = min(b.n for b in base_maps)
    max_copies = max(1, sem_target_n(target_type, target_chi) // min_n)
    for count in range(1, max_copies + 1):
        for combo in combinations_with_replacement(range(len(base_maps)), count):
            picked = [base_maps[i] for i in combo]
            if sum(b.n for b in picked) != sem_target_n(target_type, target_chi):
                continue
            chi_sum = sum(surface_profile(b).euler_characteristic for b in picked)
            twice = chi_sum - target_chi
            if twice <= 0 or twice % 2:
                continue
            n_cyl = twice // 2
            units = list(_units_for_multiset(picked, n_cyl, kind))
            if units:
                per_task.append(units)
    # Round-robin across base multisets.
    i = 0
    while True:
        yielded = False
        for units in per_task:
            if i < len(units):
                yield units[i]
                yielded = True
        if not yielded:
            return
        i += 1


def sem_target_n(target_type: FaceSequence, target_chi: int) -> int:
    return sem_vertex_count(target_type, target_chi)


def _units_for_multiset(picked, n_cyl, kind):
    offset = 0
    faces: list[Face] = []
    component_of: dict[Face, int] = {}
    names = []
    for ci, b in enumerate(picked):
        names.append(b.name or f"base{ci}")
        for f in b.faces:
            shifted = tuple(v + offset for v in f)
            faces.append(shifted)
            component_of[normalize_face(shifted)] = ci
        offset += b.n
    union = PolyhedralMap(faces, n=offset)
    if kind == "quad":
        quads = sorted(f for f in union.face_keys if len(f) == 4)
        if len(quads) != 2 * n_cyl:
            return
        site_sets: Iterable = [quads]
    else:
        site_sets = [sorted(p) for p in _triangle_partitions(union)
                     if len(p) == 2 * n_cyl]
    units = []
    for sites in site_sets:
        for pairing in _perfect_matchings(list(sites)):
            if any(set(a) & set(b) for a, b in pairing):
                continue
            if not _bundle_connects(pairing, component_of):
                continue
            units.append((tuple(names), tuple(faces), offset, pairing))
    # Same-component pairs are heavily constrained (their walls tend to hit
    # existing edges); try the units with the fewest of them first so a
    # truncated search reaches productive gluings early.
    def same_component_pairs(unit):
        return sum(
            1 for a, b in unit[3]
            if component_of[normalize_face(a)] == component_of[normalize_face(b)]
        )

    units.sort(key=lambda u: (same_component_pairs(u), u[3]))
    yield from units


def _new_pairs(a: Face, b: Face, offset: int, reflect: bool) -> list[tuple[int, int]]:
    """Vertex pairs that the cylinder walls join across the two boundaries.

    These are exactly the new wall edges plus, for quadrangle walls, the
    wall diagonals; none of them may lie together inside any face that
    survives the surgery, or validation must fail.
    """
    k = len(a)
    if reflect:
        b = b[::-1]
    c = tuple(b[(offset + i) % k] for i in range(k))
    pairs = [(a[i], c[i]) for i in range(k)]
    pairs += [(a[i], c[(i + 1) % k]) for i in range(k)]
    if k == 4:
        pairs += [(a[i], c[(i + 2) % k]) for i in range(k)]
    return pairs


def _feasible_gluings(union: PolyhedralMap, removed: set[Face],
                      a: Face, b: Face, kind: str) -> list[tuple[int, bool]]:
    """Gluings whose new vertex pairs avoid every surviving face."""
    surviving: dict[int, set[int]] = {v: set() for v in range(union.n)}
    for fi, face in enumerate(union.faces):
        if normalize_face(face) in removed:
            continue
        for v in face:
            surviving[v].add(fi)
    out = []
    for o, r in _gluings(kind):
        if all(not (surviving[x] & surviving[y]) for x, y in _new_pairs(a, b, o, r)):
            out.append((o, r))
    return out


def _run_unit(unit, kind: str, target_entries: tuple, target_chi: int) -> dict:
    """Try every gluing of one unit; return valid candidates with forms.

    Gluings are screened per cylinder first: a wall edge or wall diagonal
    landing inside a surviving face is a guaranteed validation failure, so
    only combinations of individually feasible gluings are constructed.
    """
    names, faces, n, pairing = unit
    union = PolyhedralMap(faces, n=n)
    removed = {normalize_face(f) for pair in pairing for f in pair}
    feasible = [
        _feasible_gluings(union, removed, a, b, kind) for a, b in pairing
    ]
    candidates = len(_gluings(kind)) ** len(pairing)
    found = []
    built = 0
    for gchoice in product(*feasible):
        built += 1
        specs = tuple(
            CylinderSpec(kind=kind, face_a=a, face_b=b, offset=o, reflect=r)
            for (a, b), (o, r) in zip(pairing, gchoice)
        )
        cand_faces = _apply_bundle(faces, specs)
        cand = PolyhedralMap(cand_faces, n=n)
        if not validate(cand).ok:
            continue
        t = semi_equivelar_type(cand)
        if t is None or t.entries != target_entries:
            continue
        if surface_profile(cand).euler_characteristic != target_chi:
            continue
        found.append((canonical_form(cand), cand.faces, specs))
    return {"names": names, "n": n, "candidates": candidates,
            "built": built, "found": found}


def _run_unit_star(args):
    return _run_unit(*args)


def _apply_bundle(faces, specs) -> list[Face]:
    removed = {normalize_face(s.face_a) for s in specs}
    removed |= {normalize_face(s.face_b) for s in specs}
    out = [f for f in faces if normalize_face(f) not in removed]
    for s in specs:
        out.extend(_wall_faces(s.face_a, s.face_b, s.offset, s.reflect))
    return out


def cylinder_search(
    base_maps: Sequence[PolyhedralMap],
    target_type: FaceSequence,
    target_chi: int,
    max_candidates: int | None = None,
    jobs: int = 1,
) -> tuple[list[PolyhedralMap], list[CylinderProvenance], CylinderSearchStats]:
    """Search cylinder additions over the bases for SEMs of the target type.

    Combines copies of the base maps whose vertex counts sum to the count
    forced by (type, chi) and enumerates admissible cylinder bundles:
    every quadrangle consumed when the target gains one quadrangle per
    vertex, or a perfect matching of vertex-disjoint triangles consuming
    every vertex once when it gains two triangles.  Each gluing choice is
    applied, results are filtered by validation, semi-equivelar type and
    chi, and de-duplicated by canonical form, one representative per
    isomorphism class.

    ``max_candidates`` truncates the deterministic candidate stream (at
    work-unit granularity); ``stats.exhausted`` records whether the whole
    space was covered.  ``jobs > 1`` distributes units over processes; the
    result list does not depend on ``jobs``.
    """
    t0 = time.perf_counter()
    stats = CylinderSearchStats()
    results: list[PolyhedralMap] = []
    notes: list[CylinderProvenance] = []
    seen: set[bytes] = set()

    try:
        sem_target_n(target_type, target_chi)
    except (ImpossibleTypeError, FlatTypeError):
        stats.seconds = time.perf_counter() - t0
        return results, notes, stats

    base_types = {semi_equivelar_type(b) for b in base_maps}
    if len(base_types) != 1 or None in base_types:
        raise TransformError("all base maps must share one semi-equivelar type")
    kind = _infer_kind(base_types.pop(), target_type)
    if kind is None:
        stats.seconds = time.perf_counter() - t0
        return results, notes, stats

    per_cyl = len(_gluings(kind))
    units = []
    for unit in _search_units(base_maps, target_type, target_chi, kind):
        if max_candidates is not None:
            cost = per_cyl ** len(unit[3])
            if stats.candidates + cost > max_candidates:
                stats.exhausted = False
                break
            stats.candidates += cost
        units.append(unit)
    if max_candidates is None:
        stats.candidates = sum(per_cyl ** len(u[3]) for u in units)
    stats.bundles = len(units)

    args = [(u, kind, target_type.entries, target_chi) for u in units]
    if jobs > 1 and len(units) > 1:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_run_unit_star, args, chunksize=8))
    else:
        outputs = [_run_unit_star(a) for a in args]

    for out in outputs:
        stats.built += out["built"]
        stats.valid += len(out["found"])
        for form, faces, specs in out["found"]:
            if form in seen:
                continue
            seen.add(form)
            name = "+".join(out["names"]) + f"#{len(results) + 1}"
            results.append(PolyhedralMap(faces, n=out["n"], name=name))
            notes.append(CylinderProvenance(bases=out["names"], specs=specs))
    stats.classes = len(results)
    stats.seconds = time.perf_counter() - t0
    return results, notes, stats

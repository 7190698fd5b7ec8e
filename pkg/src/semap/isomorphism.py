"""Relabeling-grade machinery: canonical forms, automorphisms, G_t graphs.

The canonical form is computed by flag-rooted traversal.  A flag is a
mutually incident (vertex, edge, face) triple; every flag admits three
moves (swap the vertex, the edge, or the face while keeping the other
two).  A breadth-first walk of the flag graph from a fixed root visits
every flag of a valid map in an order that depends only on the structure,
so the walk's transition code is a relabeling invariant.  The canonical
form is the relabeled, sorted face list read off a root with the
lexicographically least code; two maps get equal forms iff some flag of
one walks exactly like some flag of the other, which is precisely an
isomorphism.  Roots with minimal code are in bijection with the
automorphism group (an automorphism fixing a flag is the identity).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .core import Edge, Face, PolyhedralMap, normalize_face, oriented_edge


# ---------------------------------------------------------------------------
# Simple graphs (edge graphs, G_t graphs)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..n-1, no loops or multi-edges."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop edge {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a}, {b}) outside 0..{self.n - 1}")
            if a > b:
                raise ValueError(f"edge ({a}, {b}) not normalized")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "SimpleGraph":
        return cls(n, frozenset(oriented_edge(a, b) for a, b in pairs))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> list[tuple[frozenset[int], frozenset[Edge]]]:
        """Connected components of the edge support (isolated vertices omitted)."""
        adj: dict[int, set[int]] = {}
        for a, b in self.edges:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        out = []
        left = set(adj)
        while left:
            seed = left.pop()
            comp = {seed}
            frontier = [seed]
            while frontier:
                cur = frontier.pop()
                for nxt in adj[cur]:
                    if nxt not in comp:
                        comp.add(nxt)
                        frontier.append(nxt)
            left -= comp
            es = frozenset(e for e in self.edges if e[0] in comp)
            out.append((frozenset(comp), es))
        return out

    def unlabeled_key(self, max_component: int = 9):
        """Isomorphism-class key: component shapes by brute force, plus n.

        Only meant for the sparse graphs that show up as G_t invariants;
        refuses components larger than ``max_component``.
        """
        from itertools import permutations

        shapes = []
        for comp, es in self.components():
            verts = sorted(comp)
            if len(verts) > max_component:
                raise ValueError(f"component with {len(verts)} vertices is too large")
            best = None
            for perm in permutations(range(len(verts))):
                relab = {v: perm[i] for i, v in enumerate(verts)}
                key = tuple(sorted(oriented_edge(relab[a], relab[b]) for a, b in es))
                if best is None or key < best:
                    best = key
            shapes.append((len(verts), best))
        return (self.n, tuple(sorted(shapes)))


def neighbor_set(m: PolyhedralMap, v: int) -> frozenset[int]:
    """Vertices joined to ``v`` by an edge of some face."""
    return m.neighbors[v]


def edge_graph(m: PolyhedralMap) -> SimpleGraph:
    return SimpleGraph(m.n, frozenset(m.edge_faces))


def link_vertex_set(m: PolyhedralMap, v: int) -> frozenset[int]:
    """Vertices on the link cycle of ``v``: neighbors plus, for every
    larger face at ``v``, the boundary vertices opposite the corner."""
    from .core import vertex_link

    return frozenset(vertex_link(m, v).link_vertices)


def g_t_graph(m: PolyhedralMap, t: int, sets: str = "link") -> SimpleGraph:
    """Graph joining the vertex pairs whose surrounding vertex sets meet in
    exactly t vertices.  All unordered pairs are considered, adjacent or not.

    ``sets`` picks the per-vertex set: "link" (default) uses the full link
    cycle, which is what reproduces the published distinguishing data for
    the bundled catalog; "neighbor" uses plain edge-graph neighborhoods.
    On triangulations the two coincide.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if sets == "link":
        around = {v: link_vertex_set(m, v) for v in range(m.n)}
    elif sets == "neighbor":
        around = m.neighbors
    else:
        raise ValueError(f"sets must be 'link' or 'neighbor', got {sets!r}")
    edges = set()
    for i in range(m.n):
        ni = around[i]
        for j in range(i + 1, m.n):
            if len(ni & around[j]) == t:
                edges.add((i, j))
    return SimpleGraph(m.n, frozenset(edges))


# ---------------------------------------------------------------------------
# Flag system
# ---------------------------------------------------------------------------

def _flag_system(m: PolyhedralMap):
    """Build the three flag moves as flat arrays.

    Flag 2*i+0 at face position i uses the edge toward the next boundary
    vertex, flag 2*i+1 the edge toward the previous one.  Requires every
    edge to lie in exactly two faces (i.e. a valid map).
    """
    base = []
    acc = 0
    for f in m.faces:
        base.append(acc)
        acc += 2 * len(f)
    nflags = acc
    s0 = [0] * nflags
    s1 = [0] * nflags
    s2 = [0] * nflags
    fv = [0] * nflags
    flen = [0] * nflags
    half: dict[tuple[int, Edge], int] = {}
    for fi, f in enumerate(m.faces):
        k = len(f)
        b = base[fi]
        for i in range(k):
            x0 = b + 2 * i
            x1 = x0 + 1
            v = f[i]
            fv[x0] = fv[x1] = v
            flen[x0] = flen[x1] = k
            s1[x0] = x1
            s1[x1] = x0
            s0[x0] = b + 2 * ((i + 1) % k) + 1
            s0[x1] = b + 2 * ((i - 1) % k)
            for x, w in ((x0, f[(i + 1) % k]), (x1, f[(i - 1) % k])):
                key = (v, oriented_edge(v, w))
                mate = half.pop(key, None)
                if mate is None:
                    half[key] = x
                else:
                    s2[x] = mate
                    s2[mate] = x
    if half:
        raise ValueError("canonical form needs a closed map (some edge is not in 2 faces)")
    return s0, s1, s2, fv, flen, nflags


def _bfs_code(root: int, s0, s1, s2, nflags: int, best):
    """Breadth-first transition code from ``root``; early-abort against ``best``.

    Returns (verdict, code, visit order): verdict 1 means lexicographically
    worse than best (code and order are None), -1 strictly better, 0 equal
    (code is None too: it would equal ``best``).  The code list is only
    materialised for strictly better roots.
    """
    order = [-1] * nflags
    order[root] = 0
    queue = [root]
    append_flag = queue.append
    code: list[int] | None = None
    verdict = 0 if best is not None else -1
    if verdict == -1:
        code = []
    pos = 0
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for y in (s0[x], s1[x], s2[x]):
            j = order[y]
            if j < 0:
                j = len(queue)
                order[y] = j
                append_flag(y)
            if verdict == 0:
                b = best[pos]
                if j > b:
                    return 1, None, None
                if j < b:
                    verdict = -1
                    code = list(best[:pos])
                    code.append(j)
            elif code is not None:
                code.append(j)
            pos += 1
    return verdict, code, queue


def _labeling(queue, fv) -> dict[int, int]:
    """Vertex -> canonical label, by first appearance along the walk."""
    label: dict[int, int] = {}
    for x in queue:
        v = fv[x]
        if v not in label:
            label[v] = len(label)
    return label


@dataclass(frozen=True)
class CanonData:
    form: bytes
    canonical_faces: tuple[Face, ...]
    labelings: tuple[tuple[int, ...], ...]  # original vertex -> canonical label


def _encode(n: int, faces) -> bytes:
    body = ";".join(",".join(map(str, f)) for f in faces)
    return f"{n}|{body}".encode()


def _vertex_signature(m: PolyhedralMap) -> dict[int, tuple]:
    """A cheap relabeling-invariant fingerprint per vertex: the incident
    face sizes plus the neighborhood-intersection profile."""
    nb = m.neighbors
    sig = {}
    for v in range(m.n):
        sizes = tuple(sorted(len(m.faces[i]) for i in m.vertex_faces[v]))
        inter = tuple(sorted(len(nb[v] & nb[w]) for w in nb[v]))
        sig[v] = (sizes, inter)
    return sig


def _root_flags(m: PolyhedralMap, fv, flen, nflags: int) -> list[int]:
    """Flags to root the traversal at: the rarest face size, then the
    rarest vertex fingerprint on such faces.  Both filters are invariant
    under relabeling, so isomorphic maps restrict to corresponding flag
    sets, and the automorphism group still acts on the result (its minimal
    flags remain a single free orbit)."""
    face_counts = Counter(flen)
    sig = _vertex_signature(m)
    sig_counts = Counter(sig.values())
    key = [
        (face_counts[flen[x]], flen[x], sig_counts[sig[fv[x]]], sig[fv[x]])
        for x in range(nflags)
    ]
    least = min(key)
    return [x for x in range(nflags) if key[x] == least]


def _compute_canonical(m: PolyhedralMap) -> CanonData:
    s0, s1, s2, fv, flen, nflags = _flag_system(m)
    best = None
    best_queues: list[list[int]] = []
    for root in _root_flags(m, fv, flen, nflags):
        verdict, code, queue = _bfs_code(root, s0, s1, s2, nflags, best)
        if verdict == 1:
            continue
        if verdict == -1:
            best = code
            best_queues = [queue]
        else:
            best_queues.append(queue)
    labelings = []
    for q in best_queues:
        lab = _labeling(q, fv)
        labelings.append(tuple(lab[v] for v in range(m.n)))
    lab0 = labelings[0]
    faces = tuple(sorted(normalize_face(tuple(lab0[v] for v in f)) for f in m.faces))
    return CanonData(
        form=_encode(m.n, faces),
        canonical_faces=faces,
        labelings=tuple(labelings),
    )


@lru_cache(maxsize=512)
def _canonical_cached(m: PolyhedralMap) -> CanonData:
    return _compute_canonical(m)


def canonical_form(m: PolyhedralMap) -> bytes:
    """Byte-comparable encoding equal for two maps iff they are isomorphic."""
    return _canonical_cached(m).form


def canonical_map(m: PolyhedralMap) -> PolyhedralMap:
    """The canonically relabeled representative of the isomorphism class."""
    data = _canonical_cached(m)
    return PolyhedralMap(data.canonical_faces, n=m.n, name=m.name)


def isomorphism(m1: PolyhedralMap, m2: PolyhedralMap) -> dict[int, int] | None:
    """A vertex bijection carrying the faces of m1 onto the faces of m2, or None.

    The witness is re-verified against the raw face sets before being
    returned; a failure there would mean a canonicalization bug.
    """
    if m1.n != m2.n or len(m1.faces) != len(m2.faces):
        return None
    d1 = _canonical_cached(m1)
    d2 = _canonical_cached(m2)
    if d1.form != d2.form:
        return None
    lab1 = d1.labelings[0]
    inv2 = {c: v for v, c in enumerate(d2.labelings[0])}
    witness = {v: inv2[lab1[v]] for v in range(m1.n)}
    mapped = {normalize_face(tuple(witness[v] for v in f)) for f in m1.faces}
    if mapped != set(m2.face_keys):
        raise RuntimeError("internal error: canonical forms agree but witness fails")
    return witness


def are_isomorphic(m1: PolyhedralMap, m2: PolyhedralMap) -> bool:
    return isomorphism(m1, m2) is not None


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AutomorphismGroup:
    """All face-preserving vertex permutations of a map."""

    elements: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[int, ...], ...]
    order: int
    orbits: tuple[tuple[int, ...], ...]

    def orbit_of(self, v: int) -> tuple[int, ...]:
        for orbit in self.orbits:
            if v in orbit:
                return orbit
        raise KeyError(v)


def _compose(p, q):
    """x -> p[q[x]]."""
    return tuple(p[q[x]] for x in range(len(p)))


def _closure(gens: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    identity = tuple(range(n))
    done = {identity}
    frontier = [identity]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = _compose(g, cur)
            if nxt not in done:
                done.add(nxt)
                frontier.append(nxt)
    return done


def automorphism_group(m: PolyhedralMap) -> AutomorphismGroup:
    """Vertex permutations preserving the face set, one per minimal flag."""
    data = _canonical_cached(m)
    lab0 = data.labelings[0]
    face_keys = set(m.face_keys)
    elements = []
    for lab in data.labelings:
        inv = {c: v for v, c in enumerate(lab)}
        perm = tuple(inv[lab0[v]] for v in range(m.n))
        mapped = {normalize_face(tuple(perm[v] for v in f)) for f in m.faces}
        if mapped != face_keys:
            raise RuntimeError("internal error: minimal-flag relabeling is not an automorphism")
        elements.append(perm)
    elements = sorted(set(elements))
    if len(elements) != len(data.labelings):
        raise RuntimeError("internal error: duplicate automorphisms from distinct minimal flags")

    orbits = _orbits(elements, m.n)
    gens: list[tuple[int, ...]] = []
    have = 1
    for g in elements:
        if g == tuple(range(m.n)):
            continue
        if have == len(elements):
            break
        trial = _closure(gens + [g], m.n)
        if len(trial) > have:
            gens.append(g)
            have = len(trial)
    return AutomorphismGroup(
        elements=tuple(elements),
        generators=tuple(gens),
        order=len(elements),
        orbits=orbits,
    )


def _orbits(elements, n: int) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in elements:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def is_vertex_transitive(m: PolyhedralMap) -> bool:
    """Whether the automorphism group has a single vertex orbit."""
    return len(automorphism_group(m).orbits) == 1

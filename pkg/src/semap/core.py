"""Polyhedral maps on closed surfaces, stored as cyclic face lists.

A map is a finite collection of polygonal faces (cyclic vertex sequences)
whose pairwise intersections are empty, a single vertex, or a single edge,
and whose vertex links are single closed cycles.  Every operation here is a
pure function over immutable :class:`PolyhedralMap` instances.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

Face = tuple[int, ...]
Edge = tuple[int, int]


class ImpossibleTypeError(ValueError):
    """No positive integer vertex count realises the requested type and chi."""


class FlatTypeError(ValueError):
    """The type has zero curvature: chi = 0 admits every vertex count."""


class NotTriangulationError(ValueError):
    """Raised by triangulation-only operations on maps with larger faces."""


def oriented_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def face_edges(face: Face) -> list[Edge]:
    """Unordered edges traversed by the boundary cycle of a face."""
    n = len(face)
    return [oriented_edge(face[i], face[(i + 1) % n]) for i in range(n)]


def normalize_face(face) -> Face:
    """Least representative of a face under rotation and reflection."""
    seq = tuple(face)
    n = len(seq)
    if n == 0:
        return seq
    rev = seq[::-1]
    return min(
        min(seq[i:] + seq[:i] for i in range(n)),
        min(rev[i:] + rev[:i] for i in range(n)),
    )


def same_face(f: Face, g: Face) -> bool:
    """Whether two vertex sequences denote the same undirected cycle."""
    return len(f) == len(g) and normalize_face(f) == normalize_face(g)


class PolyhedralMap:
    """Vertices ``0..n-1`` plus faces given as cyclic vertex sequences.

    Faces are undirected cycles: any rotation or reflection of the stored
    sequence denotes the same face.  The stored sequences are kept verbatim
    (catalog data stays recognisable); equality and hashing use the
    normalised face set.  Construction performs only structural coercion --
    run :func:`validate` to check the closed-surface axioms.
    """

    def __init__(self, faces, n: int | None = None, name: str = ""):
        fs = tuple(tuple(int(v) for v in face) for face in faces)
        for face in fs:
            for v in face:
                if v < 0:
                    raise ValueError(f"negative vertex label {v} in face {face}")
        if n is None:
            n = 1 + max((max(face) for face in fs if face), default=-1)
        self.n = int(n)
        self.faces = fs
        self.name = name

    @cached_property
    def face_keys(self) -> tuple[Face, ...]:
        return tuple(normalize_face(f) for f in self.faces)

    @cached_property
    def face_key_set(self) -> frozenset[Face]:
        return frozenset(self.face_keys)

    @cached_property
    def edge_faces(self) -> dict[Edge, tuple[int, ...]]:
        """Edge -> indices of the faces whose boundary traverses it."""
        acc: dict[Edge, list[int]] = {}
        for i, face in enumerate(self.faces):
            for e in face_edges(face):
                acc.setdefault(e, []).append(i)
        return {e: tuple(v) for e, v in acc.items()}

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edge_faces))

    @cached_property
    def vertex_faces(self) -> dict[int, tuple[int, ...]]:
        acc: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for i, face in enumerate(self.faces):
            for v in set(face):
                if v < self.n:
                    acc[v].append(i)
        return {v: tuple(ix) for v, ix in acc.items()}

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        acc: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for a, b in self.edge_faces:
            if a < self.n and b < self.n:
                acc[a].add(b)
                acc[b].add(a)
        return {v: frozenset(s) for v, s in acc.items()}

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def relabel(self, perm, name: str = "") -> "PolyhedralMap":
        """Apply a vertex permutation (dict or sequence old->new)."""
        if not isinstance(perm, dict):
            perm = {i: p for i, p in enumerate(perm)}
        faces = [tuple(perm[v] for v in face) for face in self.faces]
        return PolyhedralMap(faces, n=self.n, name=name or self.name)

    def drop_face(self, index: int) -> "PolyhedralMap":
        faces = self.faces[:index] + self.faces[index + 1:]
        return PolyhedralMap(faces, n=self.n, name=self.name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyhedralMap):
            return NotImplemented
        return self.n == other.n and sorted(self.face_keys) == sorted(other.face_keys)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.face_keys)))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<PolyhedralMap{tag} n={self.n} faces={len(self.faces)}>"


# ---------------------------------------------------------------------------
# Face sequences
# ---------------------------------------------------------------------------

_TYPE_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class FaceSequence:
    """The multiset of face sizes around a vertex, e.g. ``(3^5, 4)``.

    Entries are (face size, multiplicity) pairs with strictly increasing
    sizes.  The cyclic arrangement of the faces around a vertex is carried
    separately by :class:`VertexLink`.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        sizes = [a for a, _ in self.entries]
        if sizes != sorted(set(sizes)):
            raise ValueError(f"face sizes must be strictly increasing: {self.entries}")
        if any(a < 3 or p < 1 for a, p in self.entries):
            raise ValueError(f"need sizes >= 3 and multiplicities >= 1: {self.entries}")

    @classmethod
    def from_sizes(cls, sizes) -> "FaceSequence":
        counts = Counter(sizes)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_string(cls, text: str) -> "FaceSequence":
        """Parse ``"3^5,4"`` or ``"(3^5, 4^2)"``."""
        body = text.strip().strip("()")
        entries = []
        for term in body.split(","):
            m = _TYPE_TERM.match(term)
            if not m:
                raise ValueError(f"bad face-sequence term {term!r} in {text!r}")
            entries.append((int(m.group(1)), int(m.group(2) or 1)))
        counts: Counter[int] = Counter()
        for a, p in entries:
            counts[a] += p
        return cls(tuple(sorted(counts.items())))

    @property
    def degree(self) -> int:
        """Total number of faces around the vertex."""
        return sum(p for _, p in self.entries)

    def multiplicity(self, size: int) -> int:
        return dict(self.entries).get(size, 0)

    def curvature(self) -> Fraction:
        """Per-vertex Euler contribution 1 - d/2 + sum(p_i / a_i)."""
        d = self.degree
        return 1 - Fraction(d, 2) + sum(Fraction(p, a) for a, p in self.entries)

    def __str__(self) -> str:
        terms = [f"{a}^{p}" if p > 1 else f"{a}" for a, p in self.entries]
        return "(" + ", ".join(terms) + ")"


def sem_vertex_count(seq: FaceSequence, chi: int) -> int:
    """Vertex count forced by ``chi = N * curvature`` for a semi-equivelar type.

    Raises :class:`FlatTypeError` for zero-curvature types with chi = 0
    (any count works) and :class:`ImpossibleTypeError` when no positive
    integer count exists.
    """
    if seq.degree < 3:
        raise ValueError(f"a map vertex needs at least 3 faces, got {seq}")
    curv = seq.curvature()
    if curv == 0:
        if chi == 0:
            raise FlatTypeError(f"indeterminate: flat type {seq} admits any vertex count")
        raise ImpossibleTypeError(f"flat type {seq} only lives on chi=0 surfaces")
    count = Fraction(chi) / curv
    if count.denominator != 1 or count <= 0:
        raise ImpossibleTypeError(f"chi={chi} gives vertex count {count} for type {seq}")
    return int(count)


# ---------------------------------------------------------------------------
# Vertex links
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexLink:
    """The cyclic arrangement of faces around a vertex.

    ``corners[i]`` is the boundary path of the i-th face, read around the
    center vertex: ``(a, b)`` for a triangle ``[center, a, b]`` and
    ``(a, m, b)`` for a quadrangle ``[center, a, m, b]``.  Consecutive
    corners share an endpoint; the whole thing closes into one cycle.
    Instances are stored in a canonical rotation/reflection.
    """

    center: int
    corners: tuple[Face, ...]

    @staticmethod
    def _least(corners: tuple[Face, ...]) -> tuple[Face, ...]:
        d = len(corners)
        flipped = tuple(c[::-1] for c in corners[::-1])
        candidates = [corners[i:] + corners[:i] for i in range(d)]
        candidates += [flipped[i:] + flipped[:i] for i in range(d)]
        return min(candidates)

    @classmethod
    def from_corners(cls, center: int, corners) -> "VertexLink":
        corners = tuple(tuple(c) for c in corners)
        for prev, cur in zip(corners, corners[1:] + corners[:1]):
            if prev[-1] != cur[0]:
                raise ValueError(f"corner chain broken between {prev} and {cur}")
        return cls(center, cls._least(corners))

    @classmethod
    def from_notation(cls, center: int, text: str) -> "VertexLink":
        """Parse link notation like ``"C7([2, 3, 4], 5, 6, 7, 1)"``.

        The bracketed block marks a quadrangle corner; the remaining labels
        are triangle corners closing the cycle back to the bracket.
        """
        body = text.strip()
        m = re.match(r"^C_?\d*\s*\((.*)\)$", body)
        if m:
            body = m.group(1)
        bracket = None
        rest: list[int] = []
        bm = re.search(r"\[([^\]]*)\]", body)
        if bm:
            bracket = [int(t) for t in bm.group(1).replace(" ", "").split(",")]
            body = body[:bm.start()] + body[bm.end():]
        rest = [int(t) for t in body.replace(" ", "").split(",") if t]
        corners: list[Face] = []
        if bracket is not None:
            if len(bracket) != 3:
                raise ValueError(f"quadrangle corner needs 3 labels: {bracket}")
            chain = [bracket[2]] + rest + [bracket[0]]
            corners.append(tuple(bracket))
        else:
            chain = rest + [rest[0]]
        corners.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
        return cls.from_corners(center, corners)

    @property
    def degree(self) -> int:
        return len(self.corners)

    @property
    def cycle(self) -> tuple[tuple[int, int], ...]:
        """(first link vertex, face size) per corner, in cyclic order."""
        return tuple((c[0], len(c) + 1) for c in self.corners)

    @property
    def link_vertices(self) -> tuple[int, ...]:
        """The link cycle as a plain vertex sequence."""
        out: list[int] = []
        for c in self.corners:
            out.extend(c[:-1])
        return tuple(out)

    def faces(self) -> tuple[Face, ...]:
        """The faces this link asserts around the center."""
        return tuple((self.center,) + c for c in self.corners)

    def notation(self) -> str:
        """Render as C-notation: brackets mark the larger corners, the other
        labels walk the rest of the link cycle."""
        order = self.corners
        bigs = [i for i, c in enumerate(order) if len(c) > 2]
        if bigs:
            order = order[bigs[0]:] + order[:bigs[0]]
        walk: list[int] = []
        for c in order:
            walk.extend(c[:-1])
        length = len(walk)
        if not bigs:
            return f"C{length}(" + ", ".join(map(str, walk)) + ")"
        tokens: list[str] = []
        pos = 0
        for c in order:
            k = len(c)
            if k > 2:
                block = [walk[(pos + j) % length] for j in range(k)]
                tokens.append("[" + ", ".join(map(str, block)) + "]")
                pos += k - 1
            else:
                if pos + 1 < length:
                    tokens.append(str(walk[pos + 1]))
                pos += 1
        return f"C{length}(" + ", ".join(tokens) + ")"


def vertex_link(m: PolyhedralMap, v: int) -> VertexLink:
    """Cyclic face arrangement around ``v`` (map must be valid at ``v``)."""
    if not 0 <= v < m.n:
        raise KeyError(f"vertex {v} not in map with n={m.n}")
    paths: list[Face] = []
    for fi in m.vertex_faces[v]:
        face = m.faces[fi]
        i = face.index(v)
        paths.append(face[i + 1:] + face[:i])
    if not paths:
        raise ValueError(f"vertex {v} lies on no face")
    # Walk the link: corner q follows corner p when q starts at p's last
    # vertex (they share the edge from v to that vertex).  In a valid map
    # each endpoint belongs to exactly two corners.
    by_endpoint: dict[int, list[tuple[int, bool]]] = {}
    for k, p in enumerate(paths):
        by_endpoint.setdefault(p[0], []).append((k, False))
        by_endpoint.setdefault(p[-1], []).append((k, True))
    start = min(range(len(paths)), key=lambda k: paths[k])
    chain: list[Face] = [paths[start]]
    used = {start}
    while len(used) < len(paths):
        tail = chain[-1][-1]
        step = [(k, rev) for k, rev in by_endpoint.get(tail, ()) if k not in used]
        if len(step) != 1:
            raise ValueError(f"link of vertex {v} is not a single closed cycle")
        k, rev = step[0]
        used.add(k)
        chain.append(paths[k][::-1] if rev else paths[k])
    if chain[-1][-1] != chain[0][0]:
        raise ValueError(f"link of vertex {v} is not a single closed cycle")
    return VertexLink.from_corners(v, chain)


def face_sequence(m: PolyhedralMap, v: int) -> FaceSequence:
    """Multiset of face sizes incident to ``v``."""
    sizes = [len(m.faces[i]) for i in m.vertex_faces[v]]
    if not sizes:
        raise ValueError(f"vertex {v} lies on no face")
    return FaceSequence.from_sizes(sizes)


def face_sequence_classes(m: PolyhedralMap) -> dict[FaceSequence, list[int]]:
    """Group vertices by their face sequence."""
    classes: dict[FaceSequence, list[int]] = {}
    for v in range(m.n):
        classes.setdefault(face_sequence(m, v), []).append(v)
    return classes


def semi_equivelar_type(m: PolyhedralMap) -> FaceSequence | None:
    """The common face sequence, or None when vertices disagree."""
    classes = face_sequence_classes(m)
    if len(classes) == 1:
        return next(iter(classes))
    return None


def is_d_covered(m: PolyhedralMap, d: int) -> bool:
    """Whether every edge of a triangulation meets a vertex of degree ``d``."""
    if any(len(f) != 3 for f in m.faces):
        raise NotTriangulationError("d-covered is defined for triangulations only")
    deg = {v: m.degree(v) for v in range(m.n)}
    return all(deg[a] == d or deg[b] == d for a, b in m.edge_faces)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    witness: tuple = ()

    def __str__(self) -> str:
        return f"[{self.axiom}] {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __iter__(self):
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def validate(m: PolyhedralMap) -> ValidationReport:
    """Check every closed-surface axiom; empty report iff the map is valid.

    All violations are collected (not just the first), each naming the
    broken axiom and the witnessing vertices, faces, or edges.  Malformed
    faces are reported and excluded from the later structural checks so a
    single bad face cannot crash the rest of the analysis.
    """
    out: list[Violation] = []
    if not m.faces or m.n == 0:
        out.append(Violation("empty", "map has no faces"))
        return ValidationReport(tuple(out))

    wellformed: list[tuple[int, Face]] = []
    for i, face in enumerate(m.faces):
        bad = False
        if len(face) < 3:
            out.append(Violation("face-size", f"face #{i} {face} has fewer than 3 vertices", (i,)))
            bad = True
        if len(set(face)) != len(face):
            out.append(Violation("face-repeat", f"face #{i} {face} repeats a vertex", (i,)))
            bad = True
        undeclared = [v for v in face if v >= m.n]
        if undeclared:
            out.append(Violation(
                "undeclared-vertex",
                f"face #{i} {face} references vertices {undeclared} >= n={m.n}",
                (i, tuple(undeclared)),
            ))
            bad = True
        if not bad:
            wellformed.append((i, face))

    seen: dict[Face, int] = {}
    for i, face in wellformed:
        key = normalize_face(face)
        if key in seen:
            out.append(Violation(
                "duplicate-face",
                f"faces #{seen[key]} and #{i} are the same cycle {key}",
                (seen[key], i),
            ))
        else:
            seen[key] = i

    edge_faces: dict[Edge, list[int]] = {}
    for i, face in wellformed:
        for e in face_edges(face):
            edge_faces.setdefault(e, []).append(i)
    for e, fs in sorted(edge_faces.items()):
        if len(fs) != 2:
            out.append(Violation(
                "edge-degree",
                f"edge {e} lies in {len(fs)} face(s) {tuple(fs)}, expected 2",
                (e, tuple(fs)),
            ))

    # Any two faces meet in nothing, one vertex, or one full edge.
    for a in range(len(wellformed)):
        ia, fa = wellformed[a]
        sa = set(fa)
        ea = set(face_edges(fa))
        for b in range(a + 1, len(wellformed)):
            ib, fb = wellformed[b]
            shared = sa & set(fb)
            if len(shared) < 2:
                continue
            if len(shared) == 2:
                e = oriented_edge(*shared)
                if e in ea and e in set(face_edges(fb)):
                    continue
                out.append(Violation(
                    "face-intersection",
                    f"faces #{ia} and #{ib} share {sorted(shared)} which is not an edge of both",
                    (ia, ib, tuple(sorted(shared))),
                ))
            else:
                out.append(Violation(
                    "face-intersection",
                    f"faces #{ia} and #{ib} share {len(shared)} vertices {sorted(shared)}",
                    (ia, ib, tuple(sorted(shared))),
                ))

    # Link condition: the faces at each vertex chain into one closed cycle
    # of length >= 3.  Only meaningful where the local edge counts are 2.
    vertex_faces: dict[int, list[Face]] = {v: [] for v in range(m.n)}
    for _, face in wellformed:
        for v in set(face):
            vertex_faces[v].append(face)
    for v in range(m.n):
        faces_here = vertex_faces[v]
        if not faces_here:
            out.append(Violation("link", f"vertex {v} lies on no face", (v,)))
            continue
        if len(faces_here) < 3:
            out.append(Violation(
                "link", f"vertex {v} lies on only {len(faces_here)} face(s), need >= 3", (v,),
            ))
            continue
        local_edges = [e for e in edge_faces if v in e]
        if any(len(edge_faces[e]) != 2 for e in local_edges):
            continue  # already reported as edge-degree; link walk undefined
        corners = []
        for face in faces_here:
            i = face.index(v)
            path = face[i + 1:] + face[:i]
            corners.append((path[0], path[-1]))
        adj: dict[int, int] = {}
        for x, y in corners:
            adj[x] = adj.get(x, 0) + 1
            adj[y] = adj.get(y, 0) + 1
        if any(c != 2 for c in adj.values()) or len(adj) != len(corners):
            out.append(Violation(
                "link", f"faces around vertex {v} do not close into a single cycle", (v,),
            ))
            continue
        # Degree-2 everywhere: a disjoint union of cycles; require exactly one.
        start = corners[0][0]
        reached = {start}
        frontier = [start]
        touch: dict[int, list[int]] = {}
        for x, y in corners:
            touch.setdefault(x, []).append(y)
            touch.setdefault(y, []).append(x)
        while frontier:
            cur = frontier.pop()
            for nxt in touch[cur]:
                if nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
        if len(reached) != len(adj):
            out.append(Violation(
                "link", f"link of vertex {v} splits into several cycles", (v,),
            ))

    # Connectivity of the edge graph.
    if edge_faces:
        verts = set()
        for a, b in edge_faces:
            verts.add(a)
            verts.add(b)
        adj2: dict[int, list[int]] = {v: [] for v in verts}
        for a, b in edge_faces:
            adj2[a].append(b)
            adj2[b].append(a)
        start = next(iter(verts))
        reached = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for nxt in adj2[cur]:
                if nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
        if len(reached) != len(verts):
            out.append(Violation(
                "connectivity",
                f"edge graph has {len(verts) - len(reached)} vertices unreachable from {start}",
            ))

    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# Surface profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurfaceProfile:
    euler_characteristic: int
    orientable: bool
    vertex_count: int
    edge_count: int
    face_count: int

    def __post_init__(self):
        v, e, f = self.vertex_count, self.edge_count, self.face_count
        if self.euler_characteristic != v - e + f:
            raise ValueError("chi must equal V - E + F")

    def __str__(self) -> str:
        o = "orientable" if self.orientable else "non-orientable"
        return (f"chi={self.euler_characteristic} ({o}), "
                f"V={self.vertex_count} E={self.edge_count} F={self.face_count}")


def is_orientable(m: PolyhedralMap) -> bool:
    """Try to direct every face boundary so each edge is used once each way."""
    flips = _orientation_flips(m)
    return flips is not None


def _orientation_flips(m: PolyhedralMap) -> list[int] | None:
    """Per-face flip bits making the orientations coherent, or None.

    Two faces sharing an edge are coherent when their boundary cycles
    traverse the shared edge in opposite directions.
    """
    directed: dict[tuple[int, int], list[tuple[int, bool]]] = {}
    for i, face in enumerate(m.faces):
        k = len(face)
        for j in range(k):
            a, b = face[j], face[(j + 1) % k]
            key = (a, b) if a < b else (b, a)
            directed.setdefault(key, []).append((i, a < b))
    flip = [-1] * len(m.faces)
    for start in range(len(m.faces)):
        if flip[start] != -1:
            continue
        flip[start] = 0
        stack = [start]
        while stack:
            cur = stack.pop()
            for e in face_edges(m.faces[cur]):
                uses = directed.get(e, [])
                if len(uses) != 2:
                    return None
                (f1, d1), (f2, d2) = uses
                other, do, dc = (f2, d2, d1) if f1 == cur else (f1, d1, d2)
                # Same traversal direction forces opposite flips.
                want = flip[cur] ^ (1 if do == dc else 0)
                if flip[other] == -1:
                    flip[other] = want
                    stack.append(other)
                elif flip[other] != want:
                    return None
    return flip


def surface_profile(m: PolyhedralMap) -> SurfaceProfile:
    """Counts, Euler characteristic and orientability of a valid map."""
    v = m.n
    e = len(m.edge_faces)
    f = len(m.faces)
    return SurfaceProfile(
        euler_characteristic=v - e + f,
        orientable=is_orientable(m),
        vertex_count=v,
        edge_count=e,
        face_count=f,
    )

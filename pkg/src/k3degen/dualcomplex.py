"""Two-dimensional Delta-complexes and orientation actions of their symmetries.

These are the dual complexes of semistable degenerations: a vertex per
component, an edge per double curve, a triangle per triple point. Distinct
components can meet in several curves, so multi-edges are allowed and
triangles carry explicit edge ids rather than vertex pairs.

Conventions. A triangle stores a cyclic vertex order (v0, v1, v2) and edges
(e0, e1, e2) with side i running from v_i to v_{i+1 mod 3} along edge e_i.
The side sign is +1 when the traversal agrees with the stored direction of
the edge and -1 otherwise; it is inferred from the endpoints, except that a
loop edge (equal endpoints) leaves the direction undetermined and the
triangle must then supply explicit signs.
"""

from __future__ import annotations

from collections import deque

from . import _linalg


class InvalidComplex(Exception):
    """Raised when incidence data does not describe a Delta-complex."""


class NonOrientable(Exception):
    """Raised when orientation propagation reaches a contradiction."""


def _infer_sign(edge, tail, head, explicit):
    a, b = edge
    if a == b:
        if explicit is None:
            raise InvalidComplex(
                "triangle side runs along a loop edge; explicit signs are required"
            )
        return explicit
    if (a, b) == (tail, head):
        inferred = 1
    elif (a, b) == (head, tail):
        inferred = -1
    else:
        raise InvalidComplex(
            f"edge {a, b} does not connect triangle side {tail} -> {head}"
        )
    if explicit is not None and explicit != inferred:
        raise InvalidComplex(
            f"declared sign {explicit} contradicts edge direction {a, b} on side {tail} -> {head}"
        )
    return inferred


class DeltaComplex:
    """A 2-dimensional Delta-complex with explicit cell ids.

    vertices: iterable of ids.
    edges: map edge id -> (v0, v1).
    triangles: map triangle id -> (vertices, edges) or (vertices, edges, signs).
    """

    def __init__(self, vertices, edges, triangles):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidComplex("repeated vertex id")
        vertex_set = set(self.vertices)

        self.edges = {}
        for eid, pair in dict(edges).items():
            a, b = pair
            if a not in vertex_set or b not in vertex_set:
                raise InvalidComplex(f"edge {eid!r} references an unknown vertex")
            self.edges[eid] = (a, b)

        self.triangles = {}
        self.triangle_signs = {}
        for tid, data in dict(triangles).items():
            if len(data) == 2:
                (verts, tri_edges), signs = data, (None, None, None)
            else:
                verts, tri_edges, signs = data
            verts, tri_edges, signs = tuple(verts), tuple(tri_edges), tuple(signs)
            if len(verts) != 3 or len(tri_edges) != 3 or len(signs) != 3:
                raise InvalidComplex(f"triangle {tid!r} needs 3 vertices, edges, and signs")
            if any(v not in vertex_set for v in verts):
                raise InvalidComplex(f"triangle {tid!r} references an unknown vertex")
            if any(e not in self.edges for e in tri_edges):
                raise InvalidComplex(f"triangle {tid!r} references an unknown edge")
            resolved = tuple(
                _infer_sign(self.edges[tri_edges[i]], verts[i], verts[(i + 1) % 3], signs[i])
                for i in range(3)
            )
            self.triangles[tid] = (verts, tri_edges)
            self.triangle_signs[tid] = resolved

    # -- incidence helpers -------------------------------------------------

    def sides_of_edge(self, eid):
        """All (triangle id, side index) pairs glued to an edge."""
        out = []
        for tid, (_, tri_edges) in self.triangles.items():
            for i, e in enumerate(tri_edges):
                if e == eid:
                    out.append((tid, i))
        return out

    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.triangles)

    def euler_characteristic(self) -> int:
        v, e, f = self.counts()
        return v - e + f

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for a, b in self.edges.values():
            union(a, b)
        for verts, _ in self.triangles.values():
            union(verts[0], verts[1])
            union(verts[0], verts[2])
        roots = {find(v) for v in self.vertices}
        return len(roots) == 1

    # -- homology ----------------------------------------------------------

    def boundary_matrices(self):
        """Integer matrices of the chain complex C2 -> C1 -> C0."""
        v_index = {v: i for i, v in enumerate(self.vertices)}
        e_ids = sorted(self.edges, key=str)
        e_index = {e: i for i, e in enumerate(e_ids)}
        t_ids = sorted(self.triangles, key=str)

        d1 = [[0] * len(e_ids) for _ in range(len(self.vertices))]
        for eid, (a, b) in self.edges.items():
            j = e_index[eid]
            d1[v_index[b]][j] += 1
            d1[v_index[a]][j] -= 1

        d2 = [[0] * len(t_ids) for _ in range(len(e_ids))]
        for col, tid in enumerate(t_ids):
            _, tri_edges = self.triangles[tid]
            for i, eid in enumerate(tri_edges):
                d2[e_index[eid]][col] += self.triangle_signs[tid][i]
        return d1, d2

    def homology_dims(self) -> tuple[int, int, int]:
        """Rational Betti numbers (h0, h1, h2) from exact boundary ranks."""
        v, e, f = self.counts()
        d1, d2 = self.boundary_matrices()
        r1 = _linalg.exact_rank(d1)
        r2 = _linalg.exact_rank(d2)
        return v - r1, (e - r1) - r2, f - r2

    # -- vertex links --------------------------------------------------------

    def _link_is_circle(self, v) -> bool:
        # Link graph at v: nodes are edge-ends at v, arcs are triangle corners.
        nodes = set()
        for eid, (a, b) in self.edges.items():
            if a == v:
                nodes.add((eid, 0))
            if b == v:
                nodes.add((eid, 1))
        arcs = []
        for tid, (verts, tri_edges) in self.triangles.items():
            signs = self.triangle_signs[tid]
            for i in range(3):
                if verts[i] != v:
                    continue
                # side i-1 arrives at v, side i leaves v
                j = (i - 1) % 3
                incoming = (tri_edges[j], 1 if signs[j] == 1 else 0)
                outgoing = (tri_edges[i], 0 if signs[i] == 1 else 1)
                arcs.append((incoming, outgoing))
        if not nodes or len(arcs) != len(nodes):
            return False
        degree = {n: 0 for n in nodes}
        adjacency = {n: [] for n in nodes}
        for x, y in arcs:
            if x not in degree or y not in degree:
                return False
            degree[x] += 1
            degree[y] += 1
            adjacency[x].append(y)
            adjacency[y].append(x)
        if any(d != 2 for d in degree.values()):
            return False
        start = next(iter(nodes))
        seen = {start}
        stack = [start]
        while stack:
            for nxt in adjacency[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == len(nodes)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": eid, "v": list(pair)} for eid, pair in sorted(self.edges.items(), key=lambda kv: str(kv[0]))],
            "triangles": [
                {
                    "id": tid,
                    "edges": list(self.triangles[tid][1]),
                    "vertices": list(self.triangles[tid][0]),
                    "signs": list(self.triangle_signs[tid]),
                }
                for tid in sorted(self.triangles, key=str)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DeltaComplex":
        try:
            vertices = data["vertices"]
            edges = {e["id"]: tuple(e["v"]) for e in data["edges"]}
            triangles = {}
            for t in data["triangles"]:
                signs = tuple(t["signs"]) if "signs" in t else (None, None, None)
                triangles[t["id"]] = (tuple(t["vertices"]), tuple(t["edges"]), signs)
        except (KeyError, TypeError) as exc:
            raise InvalidComplex(f"malformed complex payload: {exc}") from exc
        return cls(vertices, edges, triangles)


class SphereCheck:
    """Outcome of sphere recognition: truthy iff all conditions hold."""

    __slots__ = ("ok", "reason")

    def __init__(self, ok, reason=None):
        self.ok = ok
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"SphereCheck(ok={self.ok}, reason={self.reason!r})"


def is_sphere_triangulation(c: DeltaComplex) -> SphereCheck:
    """Decide whether the complex triangulates the 2-sphere.

    Checks, in order: nonempty with 2-cells, connected, every edge on
    exactly two triangle sides, every vertex link a single circle,
    orientable, Euler characteristic 2. The first failure is reported.
    """
    if not c.vertices or not c.triangles:
        return SphereCheck(False, "empty complex or no triangles")
    if not c.is_connected():
        return SphereCheck(False, "not connected")
    for eid in c.edges:
        n = len(c.sides_of_edge(eid))
        if n != 2:
            return SphereCheck(False, f"edge {eid!r} lies on {n} triangle sides, expected 2")
    for v in c.vertices:
        if not c._link_is_circle(v):
            return SphereCheck(False, f"link of vertex {v!r} is not a single circle")
    try:
        orient(c)
    except NonOrientable:
        return SphereCheck(False, "not orientable")
    if c.euler_characteristic() != 2:
        return SphereCheck(False, f"Euler characteristic is {c.euler_characteristic()}, expected 2")
    return SphereCheck(True)


def orient(c: DeltaComplex) -> dict:
    """Assign +-1 to each triangle so induced edge orientations cancel.

    Signs are propagated breadth-first from an arbitrary seed triangle.
    Requires a closed connected pseudo-surface: every edge on exactly two
    triangle sides. Raises NonOrientable on contradiction.
    """
    if not c.triangles:
        raise InvalidComplex("nothing to orient: no triangles")
    if not c.is_connected():
        raise InvalidComplex("orientation requires a connected complex")
    pairings = []
    for eid in c.edges:
        sides = c.sides_of_edge(eid)
        if len(sides) != 2:
            raise InvalidComplex(
                f"edge {eid!r} lies on {len(sides)} triangle sides, expected 2"
            )
        pairings.append(sides)

    neighbors = {tid: [] for tid in c.triangles}
    for (t1, i1), (t2, i2) in pairings:
        s1 = c.triangle_signs[t1][i1]
        s2 = c.triangle_signs[t2][i2]
        # or[t1]*s1 + or[t2]*s2 = 0  <=>  or[t2] = -or[t1]*s1*s2
        neighbors[t1].append((t2, -s1 * s2))
        neighbors[t2].append((t1, -s1 * s2))

    orientation = {}
    seed = next(iter(c.triangles))
    orientation[seed] = 1
    queue = deque([seed])
    while queue:
        t = queue.popleft()
        for u, rel in neighbors[t]:
            expected = orientation[t] * rel
            if u in orientation:
                if orientation[u] != expected:
                    raise NonOrientable(f"orientation contradiction at triangle {u!r}")
            else:
                orientation[u] = expected
                queue.append(u)
    if len(orientation) != len(c.triangles):
        raise InvalidComplex("triangles not connected through shared edges")

    # the signed 2-chain must be a cycle
    boundary = {}
    for tid, (_, tri_edges) in c.triangles.items():
        for i, eid in enumerate(tri_edges):
            boundary[eid] = boundary.get(eid, 0) + orientation[tid] * c.triangle_signs[tid][i]
    assert all(x == 0 for x in boundary.values())
    return orientation


_ROTATIONS = tuple(tuple((i + r) % 3 for i in range(3)) for r in range(3))
_REFLECTIONS = tuple(tuple((c - i) % 3 for i in range(3)) for c in range(3))


class ComplexAutomorphism:
    """A symmetry of a DeltaComplex: bijections of vertex, edge, triangle ids
    commuting with all incidence relations."""

    def __init__(self, complex: DeltaComplex, vertex_map, edge_map, triangle_map):
        self.complex = complex
        self.vertex_map = dict(vertex_map)
        self.edge_map = dict(edge_map)
        self.triangle_map = dict(triangle_map)
        self._parities = {}
        self._validate()

    def _validate(self):
        c = self.complex
        for name, mapping, domain in (
            ("vertex", self.vertex_map, set(c.vertices)),
            ("edge", self.edge_map, set(c.edges)),
            ("triangle", self.triangle_map, set(c.triangles)),
        ):
            if set(mapping) != domain or set(mapping.values()) != domain:
                raise InvalidComplex(f"{name}_map is not a bijection of the {name} ids")

        for eid, (a, b) in c.edges.items():
            image = c.edges[self.edge_map[eid]]
            if set(image) != {self.vertex_map[a], self.vertex_map[b]}:
                raise InvalidComplex(f"edge_map breaks endpoints of edge {eid!r}")

        for tid, (verts, tri_edges) in c.triangles.items():
            image_id = self.triangle_map[tid]
            iverts, iedges = c.triangles[image_id]
            gv = tuple(self.vertex_map[v] for v in verts)
            ge = tuple(self.edge_map[e] for e in tri_edges)
            parities = set()
            for perm in _ROTATIONS:
                if all(gv[i] == iverts[perm[i]] for i in range(3)) and all(
                    ge[i] == iedges[perm[i]] for i in range(3)
                ):
                    parities.add(1)
            for perm in _REFLECTIONS:
                # a reflected side i lands on the image side perm[i] - 1, reversed
                if all(gv[i] == iverts[perm[i]] for i in range(3)) and all(
                    ge[i] == iedges[(perm[i] - 1) % 3] for i in range(3)
                ):
                    parities.add(-1)
            if not parities:
                raise InvalidComplex(f"triangle_map breaks incidence of triangle {tid!r}")
            if len(parities) > 1:
                raise InvalidComplex(
                    f"triangle {tid!r} maps ambiguously (both parities); data too symmetric"
                )
            self._parities[tid] = parities.pop()

    def parity(self, tid) -> int:
        """+1 if the triangle's cyclic vertex order is preserved, -1 if reversed."""
        return self._parities[tid]

    def compose(self, other: "ComplexAutomorphism") -> "ComplexAutomorphism":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if other.complex is not self.complex:
            raise InvalidComplex("cannot compose automorphisms of different complexes")
        return ComplexAutomorphism(
            self.complex,
            {v: self.vertex_map[w] for v, w in other.vertex_map.items()},
            {e: self.edge_map[f] for e, f in other.edge_map.items()},
            {t: self.triangle_map[u] for t, u in other.triangle_map.items()},
        )

    @classmethod
    def identity(cls, complex: DeltaComplex) -> "ComplexAutomorphism":
        return cls(
            complex,
            {v: v for v in complex.vertices},
            {e: e for e in complex.edges},
            {t: t for t in complex.triangles},
        )

    @classmethod
    def from_vertex_map(cls, complex: DeltaComplex, vertex_map) -> "ComplexAutomorphism":
        """Extend a vertex bijection to a full automorphism when the edge and
        triangle images are forced by endpoints; fails on multi-edges."""
        vertex_map = dict(vertex_map)
        by_ends = {}
        for eid, (a, b) in complex.edges.items():
            key = frozenset((a, b)) if a != b else (a,)
            if key in by_ends:
                raise InvalidComplex("multi-edge: vertex map does not determine edge map")
            by_ends[key] = eid
        edge_map = {}
        for eid, (a, b) in complex.edges.items():
            ia, ib = vertex_map[a], vertex_map[b]
            key = frozenset((ia, ib)) if ia != ib else (ia,)
            if key not in by_ends:
                raise InvalidComplex(f"vertex map sends edge {eid!r} to a non-edge")
            edge_map[eid] = by_ends[key]
        by_verts = {}
        for tid, (verts, _) in complex.triangles.items():
            key = frozenset(verts)
            if key in by_verts:
                raise InvalidComplex("repeated triangle: vertex map does not determine triangle map")
            by_verts[key] = tid
        triangle_map = {}
        for tid, (verts, _) in complex.triangles.items():
            key = frozenset(vertex_map[v] for v in verts)
            if key not in by_verts:
                raise InvalidComplex(f"vertex map sends triangle {tid!r} to a non-triangle")
            triangle_map[tid] = by_verts[key]
        return cls(complex, vertex_map, edge_map, triangle_map)

    @classmethod
    def from_json_dict(cls, complex: DeltaComplex, data: dict) -> "ComplexAutomorphism":
        try:
            return cls(complex, data["vertex_map"], data["edge_map"], data["triangle_map"])
        except KeyError as exc:
            raise InvalidComplex(f"malformed automorphism payload: missing {exc}") from exc


def orientation_action(c: DeltaComplex, g: ComplexAutomorphism) -> int:
    """The sign by which a symmetry acts on the 2-element set of orientations.

    Pushing the fundamental 2-cycle forward along g multiplies it by a global
    sign on a connected closed orientable surface; that sign is returned.
    """
    orientation = orient(c)
    epsilon = None
    for tid in c.triangles:
        image = g.triangle_map[tid]
        value = orientation[tid] * g.parity(tid) * orientation[image]
        if epsilon is None:
            epsilon = value
        elif epsilon != value:
            raise InvalidComplex("pushforward of the fundamental cycle is not a multiple of it")
    return epsilon

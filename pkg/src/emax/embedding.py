"""Embedding schemes for pseudographs on surfaces.

A scheme is a signed rotation system: every vertex carries a cyclic order of
its incident darts, and every edge carries a signature in {+1, -1}.  A dart
is an (edge_id, end) pair with end in {0, 1}; edge (u, v) puts dart (e, 0)
at u and dart (e, 1) at v, and a loop contributes both darts at its single
vertex.  Loops and parallel edges are allowed throughout.

Face tracing works on *states* (dart, side) with side in {+1, -1}.  From
state (d, side) the walk crosses d's edge to the opposite dart d', flips the
side by the edge signature, and leaves along the rotation successor of d'
(side +1) or predecessor (side -1).  The step map is a bijection on the 4m
states, so states split into cycles; the involution

    mirror(d, side) = (opposite dart, -side * signature)

conjugates the step map to its inverse and pairs every cycle with its
reversed twin.  Each pair is one face of the embedded pseudograph; the walk
length equals the cycle length and the total over faces is 2m.  This single
mechanism covers orientable and non-orientable schemes, loops, and parallel
edges uniformly.

The Euler genus is g = 2 - n + m - f, and a scheme is orientable exactly
when its signature can be switched (vertex flips) to all-positive.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graphs import Graph

Dart = tuple  # (edge_id, end)
State = tuple  # (Dart, side)


class SchemeError(ValueError):
    pass


class PseudoEmbedding:
    """Immutable signed rotation system for a pseudograph."""

    __slots__ = ("n", "edges", "rotation", "_pos")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, int]],
        rotation: Iterable[Iterable[Dart]],
    ):
        edges = tuple((int(u), int(v), int(s)) for (u, v, s) in edges)
        rotation = tuple(tuple((int(e), int(t)) for (e, t) in rot) for rot in rotation)
        if n < 1:
            raise SchemeError("scheme needs at least one vertex")
        if len(rotation) != n:
            raise SchemeError(f"rotation has {len(rotation)} entries for n={n}")
        for i, (u, v, s) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise SchemeError(f"edges[{i}]: endpoint out of range 0..{n-1}")
            if s not in (1, -1):
                raise SchemeError(f"edges[{i}]: signature must be +1 or -1, got {s}")
        pos = {}
        for v, rot in enumerate(rotation):
            for i, d in enumerate(rot):
                e, end = d
                if not (0 <= e < len(edges)) or end not in (0, 1):
                    raise SchemeError(f"rotation[{v}][{i}]: invalid dart {d}")
                home = edges[e][end]
                if home != v:
                    raise SchemeError(
                        f"rotation[{v}][{i}]: dart {d} belongs at vertex {home}"
                    )
                if d in pos:
                    raise SchemeError(
                        f"rotation[{v}][{i}]: dart {d} appears more than once"
                    )
                pos[d] = (v, i)
        if len(pos) != 2 * len(edges):
            missing = [
                (e, end)
                for e in range(len(edges))
                for end in (0, 1)
                if (e, end) not in pos
            ]
            raise SchemeError(f"darts missing from rotations: {missing[:4]}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "_pos", pos)

    def __setattr__(self, name, value):
        raise AttributeError("PseudoEmbedding is immutable")

    def __repr__(self):
        return f"PseudoEmbedding(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def signature(self, e: int) -> int:
        return self.edges[e][2]

    def dart_vertex(self, d: Dart) -> int:
        e, end = d
        return self.edges[e][end]

    @staticmethod
    def opposite(d: Dart) -> Dart:
        e, end = d
        return (e, 1 - end)

    def next_dart(self, d: Dart, direction: int) -> Dart:
        """Rotation successor (direction +1) or predecessor (-1) of d."""
        v, i = self._pos[d]
        rot = self.rotation[v]
        return rot[(i + direction) % len(rot)]

    def step(self, state: State) -> State:
        d, side = state
        e = d[0]
        d2 = self.opposite(d)
        side2 = side * self.signature(e)
        return (self.next_dart(d2, 1 if side2 > 0 else -1), side2)

    def mirror(self, state: State) -> State:
        d, side = state
        return (self.opposite(d), -side * self.signature(d[0]))

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        adj = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def is_simple_graph(self) -> bool:
        pairs = set()
        for u, v, _ in self.edges:
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def simple_graph(self) -> Graph:
        """Underlying graph; raises if the scheme has loops or parallels."""
        if not self.is_simple_graph():
            raise SchemeError("scheme is not a simple graph (loops or parallels)")
        return Graph(self.n, [(u, v) for u, v, _ in self.edges])


@dataclass(frozen=True)
class FacialWalk:
    steps: tuple  # ((edge_id, end), side) per step
    vertices: tuple  # vertex visited at each step

    @property
    def length(self) -> int:
        return len(self.steps)

    def distinct_vertices(self) -> frozenset:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class FacialWalkSet:
    walks: tuple

    @property
    def face_count(self) -> int:
        return len(self.walks)

    @property
    def lengths(self) -> tuple:
        return tuple(w.length for w in self.walks)


@dataclass(frozen=True)
class SurfaceInfo:
    euler_genus: int
    orientable: bool


def _state_key(state: State):
    (e, end), side = state
    return (e, end, 0 if side > 0 else 1)


def trace_faces(E: PseudoEmbedding) -> FacialWalkSet:
    """Deterministic complete face set of the scheme.

    Faces are cycle pairs of the state map (see the module docstring).  Of
    each mirror pair we keep the cycle containing the smallest state; walks
    are listed by that smallest state, so face indices are reproducible and
    usable as witnesses.
    """
    if E.m == 0:
        raise SchemeError("face tracing needs at least one edge")
    if not E.is_connected():
        raise SchemeError("scheme is disconnected; faces would misreport genus")
    all_states = [
        ((e, end), side)
        for e in range(E.m)
        for end in (0, 1)
        for side in (1, -1)
    ]
    all_states.sort(key=_state_key)
    orbit_of = {}
    orbits = []
    for s0 in all_states:
        if s0 in orbit_of:
            continue
        orbit = []
        s = s0
        while s not in orbit_of:
            orbit_of[s] = len(orbits)
            orbit.append(s)
            s = E.step(s)
        if s != s0:
            raise RuntimeError("state map failed to close a cycle")
        orbits.append(orbit)
    walks = []
    for idx, orbit in enumerate(orbits):
        partner = orbit_of[E.mirror(orbit[0])]
        if partner == idx:
            raise RuntimeError(
                "self-mirrored facial cycle; scheme invariants violated"
            )
        if partner < idx:
            continue  # the partner cycle carries this face
        mirrored = {E.mirror(s) for s in orbit}
        if mirrored != set(orbits[partner]):
            raise RuntimeError("mirror pairing mismatch between facial cycles")
        walks.append(
            FacialWalk(
                steps=tuple(orbit),
                vertices=tuple(E.dart_vertex(d) for d, _ in orbit),
            )
        )
    total = sum(w.length for w in walks)
    if total != 2 * E.m:
        raise RuntimeError(f"face sides sum to {total}, expected {2 * E.m}")
    per_edge = Counter(d[0] for w in walks for d, _ in w.steps)
    if any(per_edge[e] != 2 for e in range(E.m)):
        raise RuntimeError("some edge is not traversed exactly twice")
    return FacialWalkSet(walks=tuple(walks))


def orientability(E: PseudoEmbedding) -> tuple[bool, Optional[int]]:
    """Switching test: breadth-first vertex flips; returns (orientable,
    conflicting edge id or None)."""
    flip = [None] * E.n
    adj = [[] for _ in range(E.n)]
    for e, (u, v, s) in enumerate(E.edges):
        if u == v:
            if s < 0:
                return (False, e)  # a negative loop cannot be switched away
            continue
        adj[u].append((v, e, s))
        adj[v].append((u, e, s))
    for root in range(E.n):
        if flip[root] is not None:
            continue
        flip[root] = 0
        queue = [root]
        while queue:
            x = queue.pop(0)
            for y, e, s in adj[x]:
                want = flip[x] ^ (1 if s < 0 else 0)
                if flip[y] is None:
                    flip[y] = want
                    queue.append(y)
                elif flip[y] != want:
                    return (False, e)
    return (True, None)


def surface_info(E: PseudoEmbedding) -> SurfaceInfo:
    faces = trace_faces(E)
    g = 2 - E.n + E.m - faces.face_count
    if g < 0:
        raise RuntimeError(f"negative Euler genus {g}; tracing is broken")
    orient, _ = orientability(E)
    if orient and g % 2 != 0:
        raise RuntimeError(f"orientable scheme with odd Euler genus {g}")
    return SurfaceInfo(euler_genus=g, orientable=orient)


def is_triangulation(E: PseudoEmbedding) -> bool:
    return all(w.length == 3 for w in trace_faces(E).walks)


def is_edge_maximal_embedding(
    E: PseudoEmbedding,
) -> tuple[bool, Optional[tuple[int, tuple[int, int]]]]:
    """True iff every face's distinct vertex set induces a clique in the
    underlying simple graph.  On failure returns (face index, nonadjacent
    pair) as a witness.  Defined only for schemes of simple graphs."""
    G = E.simple_graph()
    for fi, w in enumerate(trace_faces(E).walks):
        vs = sorted(w.distinct_vertices())
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                if not G.has_edge(u, v):
                    return (False, (fi, (u, v)))
    return (True, None)


def edges_short(E: PseudoEmbedding) -> int:
    """3(n+g-2) - m: how many edges the scheme lacks to be a triangulation
    of its surface."""
    info = surface_info(E)
    if E.n + info.euler_genus < 3:
        raise SchemeError("edges_short needs n + g >= 3")
    return 3 * (E.n + info.euler_genus - 2) - E.m


def four_distinct_window(walk: Union[FacialWalk, Sequence[int]]) -> int:
    """First offset r such that walk vertices r..r+3 (cyclically) are four
    distinct vertices.  Errors when the walk is shorter than 4 or no window
    exists."""
    verts = walk.vertices if isinstance(walk, FacialWalk) else tuple(walk)
    t = len(verts)
    if t < 4:
        raise SchemeError("window search needs walk length >= 4")
    for r in range(t):
        window = {verts[(r + i) % t] for i in range(4)}
        if len(window) == 4:
            return r
    raise SchemeError("no four distinct consecutive vertices on this walk")


def min_degree_of_scheme(E: PseudoEmbedding) -> int:
    deg = [0] * E.n
    for u, v, _ in E.edges:
        deg[u] += 1
        deg[v] += 1
    return min(deg)


# Corner bookkeeping shared by the surgery operations.  The walk enters the
# vertex at position i along in_dart (the arrival end of the previous step's
# edge) and leaves along out_dart; side is the local orientation there.  A
# new dart laid inside the face at this corner goes immediately after
# in_dart in the rotation when side is +1, immediately before it when side
# is -1.


@dataclass(frozen=True)
class Corner:
    pos: int
    vertex: int
    in_dart: Dart
    out_dart: Dart
    side: int


def walk_corners(E: PseudoEmbedding, walk: FacialWalk) -> list:
    corners = []
    steps = walk.steps
    t = len(steps)
    for i in range(t):
        d, side = steps[i]
        prev_d, _ = steps[(i - 1) % t]
        corners.append(
            Corner(
                pos=i,
                vertex=E.dart_vertex(d),
                in_dart=E.opposite(prev_d),
                out_dart=d,
                side=side,
            )
        )
    return corners


def insert_dart_at_corner(rot_lists: list, corner: Corner, dart: Dart) -> None:
    """Mutate rot_lists (lists of darts per vertex) to lay `dart` inside the
    face at `corner`.  Repeated insertions at one corner stack adjacent to
    in_dart, which is exactly the nesting chords need."""
    rot = rot_lists[corner.vertex]
    i = rot.index(corner.in_dart)
    if corner.side > 0:
        rot.insert(i + 1, dart)
    else:
        rot.insert(i, dart)


# Scheme file format: {"n": int, "edges": [[u, v, sig], ...],
# "rotation": [[[edge_id, end], ...] per vertex]}.  The writer preserves
# rotation order (it is semantic); the reader validates everything and
# reports positions.


def scheme_to_dict(E: PseudoEmbedding) -> dict:
    return {
        "n": E.n,
        "edges": [[u, v, s] for u, v, s in E.edges],
        "rotation": [[[e, end] for e, end in rot] for rot in E.rotation],
    }


def scheme_from_dict(obj) -> PseudoEmbedding:
    if not isinstance(obj, dict):
        raise SchemeError("scheme document must be a JSON object")
    for key in ("n", "edges", "rotation"):
        if key not in obj:
            raise SchemeError(f"scheme document missing '{key}'")
    n = obj["n"]
    if not isinstance(n, int):
        raise SchemeError("'n' must be an integer")
    edges = []
    for i, rec in enumerate(obj["edges"]):
        if not (isinstance(rec, list) and len(rec) == 3):
            raise SchemeError(f"edges[{i}]: expected [u, v, sig]")
        edges.append(tuple(rec))
    rotation = []
    for v, rot in enumerate(obj["rotation"]):
        if not isinstance(rot, list):
            raise SchemeError(f"rotation[{v}]: expected a list of darts")
        darts = []
        for i, d in enumerate(rot):
            if not (isinstance(d, list) and len(d) == 2):
                raise SchemeError(f"rotation[{v}][{i}]: expected [edge_id, end]")
            darts.append(tuple(d))
        rotation.append(darts)
    return PseudoEmbedding(n, edges, rotation)


def scheme_to_json(E: PseudoEmbedding) -> str:
    return json.dumps(scheme_to_dict(E))


def scheme_from_json(text: str) -> PseudoEmbedding:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemeError(f"invalid JSON at position {exc.pos}: {exc.msg}")
    return scheme_from_dict(obj)

"""Simple graphs and bipartitions.

Vertices are dense integer indices 0..n-1.  Edges are unordered pairs stored
in canonical (min, max) form; loops and parallel edges are rejected (the
pseudograph machinery lives in `emax.embedding`).  Everything is immutable
after construction, so adjacency is built once and all queries are pure.

Connectivity and local-Hamiltonicity checks are deliberately brute force:
these run on desk-scale graphs where an obviously correct search beats a
clever one.  Size caps make the intended scale explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

CONNECTIVITY_VERTEX_CAP = 64
HAMILTON_DEGREE_CAP = 10


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n-1}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed in a simple graph")
            canon.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v: int):
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def add_edges(self, new_edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(new_edges))


@dataclass(frozen=True)
class Bipartition:
    part_a: frozenset
    part_b: frozenset

    def __post_init__(self):
        object.__setattr__(self, "part_a", frozenset(self.part_a))
        object.__setattr__(self, "part_b", frozenset(self.part_b))


def check_bipartition(G: Graph, P: Bipartition) -> None:
    """Raise GraphError unless P is a valid bipartition of G."""
    if P.part_a & P.part_b:
        raise GraphError("bipartition parts are not disjoint")
    if P.part_a | P.part_b != frozenset(range(G.n)):
        raise GraphError("bipartition does not cover all vertices")
    for u, v in G.edges:
        if (u in P.part_a) == (v in P.part_a):
            raise GraphError(f"edge ({u},{v}) does not cross the bipartition")


def closed_neighborhood(G: Graph, v: int) -> frozenset:
    """N[v] = N(v) together with v itself."""
    return G.neighbors(v) | {v}


def common_neighbors(G: Graph, u: int, v: int) -> frozenset:
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return G.neighbors(u) & G.neighbors(v)


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    vs = list(set(S))
    for v in vs:
        G._check_vertex(v)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if not G.has_edge(u, v):
                return False
    return True


def min_degree(G: Graph) -> int:
    if G.n < 1:
        raise GraphError("min_degree needs at least one vertex")
    return min(G.degree(v) for v in range(G.n))


def _components(n: int, adj: Sequence[Iterable[int]], alive) -> int:
    seen = set()
    comps = 0
    alive = set(alive)
    for s in alive:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in alive and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return False
    return _components(G.n, G._adj, range(G.n)) == 1


def is_k_connected(G: Graph, k: int) -> bool:
    """Vertex connectivity >= k for k in {1,2,3}, by removing every vertex
    subset of size < k and checking connectivity.  Brute force; capped at
    n <= 64 vertices."""
    if k not in (1, 2, 3):
        raise GraphError("k must be 1, 2 or 3")
    if G.n > CONNECTIVITY_VERTEX_CAP:
        raise GraphError(
            f"connectivity check capped at n <= {CONNECTIVITY_VERTEX_CAP}"
        )
    if G.n <= k:
        return False
    import itertools

    verts = range(G.n)
    for size in range(k):
        for removed in itertools.combinations(verts, size):
            alive = [v for v in verts if v not in removed]
            if _components(G.n, G._adj, alive) != 1:
                return False
    return True


def _has_hamilton_cycle(vertices: list, adj_ok) -> bool:
    """Backtracking Hamilton-cycle search on a small vertex set.

    adj_ok(u, v) tests adjacency.  Fixes the first vertex to kill cyclic
    symmetry; the path extends only along edges, so dead branches prune
    early.
    """
    k = len(vertices)
    if k < 3:
        return False
    first = vertices[0]
    rest = vertices[1:]
    used = [False] * len(rest)

    def extend(last, count):
        if count == k:
            return adj_ok(last, first)
        for i, w in enumerate(rest):
            if not used[i] and adj_ok(last, w):
                used[i] = True
                if extend(w, count + 1):
                    return True
                used[i] = False
        return False

    return extend(first, 1)


def is_locally_hamiltonian(G: Graph) -> bool:
    """True iff every open neighborhood induces a subgraph with a Hamilton
    cycle.  A vertex of degree < 3 makes this false outright (a cycle needs
    three vertices).  Degrees are capped at 10 for the permutation search."""
    for v in range(G.n):
        nb = sorted(G.neighbors(v))
        if len(nb) < 3:
            return False
        if len(nb) > HAMILTON_DEGREE_CAP:
            raise GraphError(
                f"local Hamilton search capped at degree <= {HAMILTON_DEGREE_CAP}"
            )
        if not _has_hamilton_cycle(nb, G.has_edge):
            return False
    return True


def bipartite_genus_lower_bound(G: Graph, P: Bipartition) -> int:
    """max(0, ceil(m/2) - n + 2): a lower bound on the Euler genus of a
    bipartite graph, from the bipartite edge bound m <= 2(n+g-2)."""
    if G.n < 3:
        raise GraphError("bipartite genus bound needs n >= 3")
    check_bipartition(G, P)
    return max(0, (G.m + 1) // 2 - G.n + 2)


def is_planar(G: Graph) -> bool:
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    ok, _ = nx.check_planarity(H)
    return ok


# Edge-list text format: first line "n m", then m lines "u v" (0-based).
# Blank lines and '#' comments are ignored.  A writer may embed the B side
# of a bipartition as a "# part_b: ..." comment; the parser exposes it
# separately and plain readers can ignore it.


def parse_edge_list(text: str) -> tuple[Graph, Optional[frozenset]]:
    header = None
    edges = []
    part_b = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("part_b:"):
                try:
                    part_b = frozenset(int(t) for t in body[7:].split())
                except ValueError:
                    raise GraphError(f"line {lineno}: malformed part_b comment")
            continue
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphError(f"line {lineno}: expected header 'n m'")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer header")
            continue
        if len(fields) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer endpoint")
        edges.append((u, v))
    if header is None:
        raise GraphError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    return Graph(n, edges), part_b


def format_edge_list(G: Graph, part_b: Optional[Iterable[int]] = None) -> str:
    lines = [f"{G.n} {G.m}"]
    if part_b is not None:
        lines.append("# part_b: " + " ".join(str(v) for v in sorted(part_b)))
    for u, v in sorted(G.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"

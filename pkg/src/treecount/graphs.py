"""Simple undirected graphs: friendship windmills, edge subdivision,
Laplacians, and the edge-list text format."""

from __future__ import annotations

from typing import Iterable

from .matrix import ExactMatrix


class EdgeListFormatError(ValueError):
    """Malformed edge-list text. ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Edges are held as a frozenset of ``(u, v)`` pairs with ``u < v``, so
    self-loops and parallel edges cannot be represented.
    """

    __slots__ = ("_n", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalised: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            normalised.add((u, v) if u < v else (v, u))
        self._n = n
        self._edges = frozenset(normalised)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edges

    def degree(self, v: int) -> int:
        if not 0 <= v < self._n:
            raise ValueError(f"vertex {v} out of range for {self._n} vertices")
        return sum(1 for e in self._edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self._n
        for u, v in self._edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={sorted(self._edges)})"


class UnionFind:
    """Array-based union-find with path halving."""

    __slots__ = ("parent", "components")

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.components = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of ``a`` and ``b``; False when already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.components -= 1
        return True


def connected_components(g: Graph) -> int:
    uf = UnionFind(g.n)
    for u, v in g.edges:
        uf.union(u, v)
    return uf.components


def is_connected(g: Graph) -> bool:
    return g.n > 0 and connected_components(g) == 1


def friendship_graph(k: int) -> Graph:
    """``k`` triangles sharing a single hub vertex (index 0).

    Block ``i`` owns vertices ``2i+1`` and ``2i+2``. The result has ``2k+1``
    vertices and ``3k`` edges; the hub has degree ``2k``, every other vertex
    degree 2.
    """
    if k < 1:
        raise ValueError(f"triangle count must be at least 1, got {k}")
    edges: list[tuple[int, int]] = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * k + 1, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def subdivide(g: Graph) -> Graph:
    """Insert a fresh degree-2 vertex in the middle of every edge.

    Fresh vertices are numbered ``g.n, g.n + 1, ...`` following the sorted
    order of the original edges, so the labelling is deterministic.
    """
    edges: list[tuple[int, int]] = []
    w = g.n
    for u, v in sorted(g.edges):
        edges += [(u, w), (w, v)]
        w += 1
    return Graph(g.n + g.num_edges, edges)


def laplacian(g: Graph) -> ExactMatrix:
    """Degree matrix minus adjacency matrix; every row and column sums to zero."""
    if g.n < 1:
        raise ValueError("Laplacian needs at least one vertex")
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][u] += 1
        rows[v][v] += 1
        rows[u][v] -= 1
        rows[v][u] -= 1
    return ExactMatrix(rows)


def reduced_laplacian(g: Graph, drop: int = 0) -> ExactMatrix:
    """Laplacian with row and column ``drop`` removed."""
    if g.n < 2:
        raise ValueError("reduced Laplacian needs at least two vertices")
    if not 0 <= drop < g.n:
        raise ValueError(f"vertex {drop} out of range for {g.n} vertices")
    return laplacian(g).submatrix({drop}, {drop})


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: a ``p <n> <m>`` header, then ``m`` lines ``<u> <v>``.

    Blank lines and ``#`` comments are skipped. Self-loops, duplicate edges,
    out-of-range endpoints, and malformed lines are rejected with the line
    number, never silently dropped.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] != "p":
                raise EdgeListFormatError(lineno, f"expected header 'p <n> <m>', got {line!r}")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise EdgeListFormatError(lineno, f"non-integer counts in header {line!r}") from None
            if n < 0 or m < 0:
                raise EdgeListFormatError(lineno, f"negative counts in header {line!r}")
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise EdgeListFormatError(lineno, f"more than the declared {m} edges")
        if len(fields) != 2:
            raise EdgeListFormatError(lineno, f"expected '<u> <v>', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListFormatError(lineno, f"non-integer endpoint in {line!r}") from None
        if u == v:
            raise EdgeListFormatError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListFormatError(lineno, f"endpoint out of range [0, {n}) in {line!r}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListFormatError(lineno, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListFormatError(max(last_line, 1), "missing 'p <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise EdgeListFormatError(max(last_line, 1), f"declared {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"

"""Points of the Hamming cube {0,1}^n, point sets, distance matrices and trees."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactla import RatMatrix

DEFAULT_CUBE_CAP = 10


class FormatError(ValueError):
    """Malformed point-set or tree text; the message carries the line number."""


class PointSetError(ValueError):
    pass


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class HammingPoint:
    bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise PointSetError("a point needs at least one coordinate")
        if any(b not in (0, 1) for b in bits):
            raise PointSetError(f"non-binary coordinate in {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, s: str) -> "HammingPoint":
        return cls(tuple(int(ch) for ch in s))

    @property
    def n(self) -> int:
        return len(self.bits)

    def as_vector(self) -> tuple:
        return tuple(Fraction(b) for b in self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def hamming_distance(p: HammingPoint, q: HammingPoint) -> int:
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    return sum(a != b for a, b in zip(p.bits, q.bits))


@dataclass(frozen=True)
class HammingPointSet:
    """Ordered list of at least two distinct points of a common cube H_n."""

    points: tuple

    def __post_init__(self):
        pts = tuple(p if isinstance(p, HammingPoint) else HammingPoint(p) for p in self.points)
        if len(pts) < 2:
            raise PointSetError(f"need at least 2 points, got {len(pts)}")
        n = pts[0].n
        for p in pts:
            if p.n != n:
                raise PointSetError(f"point {p} has dimension {p.n}, expected {n}")
        seen = {}
        for i, p in enumerate(pts):
            if p.bits in seen:
                raise PointSetError(f"duplicate point {p} at indices {seen[p.bits]} and {i}")
            seen[p.bits] = i
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "HammingPointSet":
        return cls(tuple(HammingPoint.from_string(s) for s in strings))

    @property
    def n(self) -> int:
        return self.points[0].n

    @property
    def m(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i) -> HammingPoint:
        return self.points[i]

    def subset(self, indices: Sequence[int]) -> "HammingPointSet":
        return HammingPointSet(tuple(self.points[i] for i in indices))

    def vectors(self) -> list:
        return [p.as_vector() for p in self.points]


class DistMatrix:
    """Validated distance matrix of a finite metric space."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: RatMatrix):
        if not isinstance(matrix, RatMatrix):
            matrix = RatMatrix.from_rows(matrix)
        _check_metric(matrix)
        self.matrix = matrix

    @property
    def m(self) -> int:
        return self.matrix.rows

    def __getitem__(self, ij) -> Fraction:
        return self.matrix[ij]

    def __eq__(self, other) -> bool:
        if isinstance(other, DistMatrix):
            return self.matrix == other.matrix
        return NotImplemented

    def __repr__(self) -> str:
        return f"DistMatrix({self.matrix!r})"


def _check_metric(M: RatMatrix) -> None:
    m = M.rows
    if not M.is_square() or m < 2:
        raise PointSetError(f"distance matrix must be square with m >= 2, got {M.shape}")
    if not M.is_symmetric():
        raise PointSetError("distance matrix is not symmetric")
    for i in range(m):
        if M[i, i] != 0:
            raise PointSetError(f"nonzero diagonal entry at {i}")
        for j in range(m):
            if i != j and M[i, j] <= 0:
                raise PointSetError(f"non-positive distance between {i} and {j}")
    for k in range(m):
        for i in range(m):
            dik = M[i, k]
            for j in range(i + 1, m):
                if M[i, j] > dik + M[k, j]:
                    raise PointSetError(f"triangle inequality fails for ({i},{j}) via {k}")


def distance_matrix(X: HammingPointSet) -> DistMatrix:
    pts = X.points
    m = len(pts)
    return DistMatrix(RatMatrix(m, m, (hamming_distance(p, q) for p in pts for q in pts)))


def full_cube(n: int, cap: int = DEFAULT_CUBE_CAP) -> HammingPointSet:
    """All 2^n points, lexicographic with coordinate 0 most significant."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if n > cap:
        raise ValueError(f"dimension {n} exceeds cube cap {cap}")
    return HammingPointSet(tuple(HammingPoint(_int_to_bits(k, n)) for k in range(2 ** n)))


def _int_to_bits(k: int, n: int) -> tuple:
    return tuple((k >> (n - 1 - t)) & 1 for t in range(n))


def random_subset(n: int, m: int, seed: int) -> HammingPointSet:
    """``m`` distinct points of H_n drawn without replacement, reproducibly."""
    if not 2 <= m <= 2 ** n:
        raise ValueError(f"m={m} out of range [2, {2 ** n}] for n={n}")
    rng = random.Random(seed)
    picks = rng.sample(range(2 ** n), m)
    return HammingPointSet(tuple(HammingPoint(_int_to_bits(k, n)) for k in picks))


# --- trees ----------------------------------------------------------------

@dataclass(frozen=True)
class UnweightedTree:
    vertex_count: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        k = self.vertex_count
        if k < 1:
            raise NotATreeError("a tree needs at least one vertex")
        if len(edges) != k - 1:
            raise NotATreeError(f"{k} vertices need {k - 1} edges, got {len(edges)}")
        for u, v in edges:
            if not (0 <= u < k and 0 <= v < k) or u == v:
                raise NotATreeError(f"bad edge ({u}, {v})")
        if len(_bfs_parents(k, edges)) != k:
            raise NotATreeError("graph is not connected")

    def path_distances(self) -> list:
        """All-pairs edge-count distances by BFS from every vertex."""
        adj = _adjacency(self.vertex_count, self.edges)
        out = []
        for s in range(self.vertex_count):
            dist = {s: 0}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w, _ in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            out.append([dist[t] for t in range(self.vertex_count)])
        return out


def _adjacency(k: int, edges) -> list:
    adj = [[] for _ in range(k)]
    for idx, (u, v) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    return adj


def _bfs_parents(k: int, edges) -> dict:
    """Map vertex -> (parent, edge index) for vertices reachable from 0."""
    adj = _adjacency(k, edges)
    parent = {0: (None, None)}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, idx in adj[u]:
            if w not in parent:
                parent[w] = (u, idx)
                queue.append(w)
    return parent


def tree_to_cube(T: UnweightedTree) -> HammingPointSet:
    """Embed a tree isometrically in H_{|E|}: vertex v goes to the indicator
    vector of the edges on the path from vertex 0 to v."""
    if T.vertex_count < 2:
        raise NotATreeError("need at least 2 vertices")
    n = len(T.edges)
    parent = _bfs_parents(T.vertex_count, T.edges)
    bits = {0: (0,) * n}
    # dict order is BFS order, so parents precede children
    for v in list(parent)[1:]:
        p, idx = parent[v]
        b = list(bits[p])
        b[idx] = 1
        bits[v] = tuple(b)
    X = HammingPointSet(tuple(HammingPoint(bits[v]) for v in range(T.vertex_count)))
    D = distance_matrix(X)
    tree_d = T.path_distances()
    assert all(D[i, j] == tree_d[i][j]
               for i in range(T.vertex_count) for j in range(T.vertex_count))
    return X


def random_tree(vertex_count: int, seed: int) -> UnweightedTree:
    """Uniform random labelled tree via a Pruefer sequence."""
    k = vertex_count
    if k < 2:
        raise ValueError("need at least 2 vertices")
    if k == 2:
        return UnweightedTree(2, ((0, 1),))
    rng = random.Random(seed)
    seq = [rng.randrange(k) for _ in range(k - 2)]
    degree = [1] * k
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(k) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(k) if degree[x] == 1]
    edges.append((u, w))
    return UnweightedTree(k, tuple(edges))


# --- text formats ----------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_points(text: str) -> HammingPointSet:
    """One point per line as a 0/1 string; blanks and '#' lines ignored."""
    points = []
    width = None
    seen = {}
    for lineno, line in _content_lines(text):
        if any(ch not in "01" for ch in line):
            raise FormatError(f"line {lineno}: expected a string of 0/1, got {line!r}")
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise FormatError(f"line {lineno}: length {len(line)} differs from {width}")
        if line in seen:
            raise FormatError(f"line {lineno}: duplicate of point on line {seen[line]}")
        seen[line] = lineno
        points.append(HammingPoint.from_string(line))
    if len(points) < 2:
        raise FormatError(f"need at least 2 points, found {len(points)}")
    return HammingPointSet(tuple(points))


def format_points(X: HammingPointSet) -> str:
    return "".join(f"{p}\n" for p in X.points)


def parse_tree(text: str) -> UnweightedTree:
    """Header ``tree <vertexCount>`` followed by one ``u v`` edge per line."""
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty tree file") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "tree" or not parts[1].isdigit():
        raise FormatError(f"line {lineno}: expected 'tree <vertexCount>', got {header!r}")
    k = int(parts[1])
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return UnweightedTree(k, tuple(edges))
    except NotATreeError as exc:
        raise NotATreeError(f"not a tree: {exc}") from None

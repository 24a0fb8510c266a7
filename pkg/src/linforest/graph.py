"""Labeled simple graphs on [n] stored as adjacency bitrows, plus graph6 I/O.

Every public interface speaks 1-based vertex labels. Internally row ``i`` of
``Graph.rows`` is the neighbourhood bitmask of label ``i + 1`` (bit ``j`` set
means label ``j + 1`` is adjacent).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

Edge = Tuple[int, int]


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full or (r >> i) & 1:
                raise ValueError(f"bad adjacency row for vertex {i + 1}")
            for j in _bits(r):
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"asymmetric pair {i + 1},{j + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            _check_label(u, n)
            _check_label(v, n)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(rows))

    def edges(self) -> Iterator[Edge]:
        """Edges as 1-based pairs (u, v) with u < v, in lexicographic order."""
        for i, r in enumerate(self.rows):
            for j in _bits(r >> (i + 1)):
                yield (i + 1, i + j + 2)

    def num_edges(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        _check_label(u, self.n)
        _check_label(v, self.n)
        return bool((self.rows[u - 1] >> (v - 1)) & 1)

    def degree(self, v: int) -> int:
        _check_label(v, self.n)
        return bin(self.rows[v - 1]).count("1")

    def neighbours(self, v: int) -> list[int]:
        _check_label(v, self.n)
        return [j + 1 for j in _bits(self.rows[v - 1])]

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        return self._with(u, v, True)

    def remove_edge(self, u: int, v: int) -> "Graph":
        return self._with(u, v, False)

    def is_subgraph_of(self, other: "Graph") -> bool:
        """Label-exact edge containment (same vertex set)."""
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def _with(self, u: int, v: int, present: bool) -> "Graph":
        _check_label(u, self.n)
        _check_label(v, self.n)
        rows = list(self.rows)
        bu, bv = 1 << (u - 1), 1 << (v - 1)
        if present:
            rows[u - 1] |= bv
            rows[v - 1] |= bu
        else:
            rows[u - 1] &= ~bv
            rows[v - 1] &= ~bu
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class BipartiteGraph:
    """Parts X = x_1..x_nx and Y = y_1..y_ny; ``rows[i]`` is the Y-neighbourhood
    bitmask of x_{i+1}. Intra-part edges cannot be expressed."""

    nx: int
    ny: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.nx < 0 or self.ny < 0 or len(self.rows) != self.nx:
            raise ValueError("row count must equal nx")
        full = (1 << self.ny) - 1
        if any(r & ~full for r in self.rows):
            raise ValueError("biadjacency row exceeds ny")

    @classmethod
    def from_edges(cls, nx: int, ny: int, edges: Iterable[Edge]) -> "BipartiteGraph":
        """``edges`` are (x, y) pairs with x in 1..nx and y in 1..ny."""
        rows = [0] * nx
        for x, y in edges:
            _check_label(x, nx)
            _check_label(y, ny)
            rows[x - 1] |= 1 << (y - 1)
        return cls(nx, ny, tuple(rows))

    def edges(self) -> Iterator[Edge]:
        for i, r in enumerate(self.rows):
            for j in _bits(r):
                yield (i + 1, j + 1)

    def num_edges(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def y_rows(self) -> Tuple[int, ...]:
        """X-neighbourhood bitmask of each Y vertex."""
        cols = [0] * self.ny
        for i, r in enumerate(self.rows):
            for j in _bits(r):
                cols[j] |= 1 << i
        return tuple(cols)

    def to_graph(self) -> Graph:
        """X at labels 1..nx, Y at nx+1..nx+ny."""
        return Graph.from_edges(self.nx + self.ny, ((x, self.nx + y) for x, y in self.edges()))

    def __repr__(self):
        return f"BipartiteGraph(nx={self.nx}, ny={self.ny}, edges={list(self.edges())})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_label(v: int, n: int) -> None:
    if not 1 <= v <= n:
        raise ValueError(f"vertex label {v} outside 1..{n}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative vertex count")
    return Graph(n, (0,) * n)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return Graph(g1.n + g2.n, g1.rows + tuple(r << g1.n for r in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every pair between the two vertex sets."""
    low = (1 << g1.n) - 1
    high = ((1 << g2.n) - 1) << g1.n
    rows = tuple(r | high for r in g1.rows) + tuple((r << g1.n) | low for r in g2.rows)
    return Graph(g1.n + g2.n, rows)


# graph6: offset-63 bytes, size header N(n), then the upper triangle in
# column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed 6 bits per byte.

def encode_graph6(g: Graph) -> str:
    out = _encode_size(g.n)
    bits = []
    for j in range(1, g.n):
        col = g.rows[j]
        bits.extend((col >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    for p in range(0, len(bits), 6):
        v = 0
        for b in bits[p:p + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


def _encode_size(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError("graph too large for graph6")


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    data = s.encode("ascii", errors="replace")
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside printable graph6 range", i)
    n, pos = _decode_size(data, start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        off = pos + min(nbytes, len(data) - pos)
        raise Graph6Error(f"expected {nbytes} edge bytes for n={n}, got {len(data) - pos}", off)
    rows = [0] * n
    i, j = 0, 1
    for b in range(nbits):
        byte = data[pos + b // 6] - 63
        if (byte >> (5 - b % 6)) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        i += 1
        if i == j:
            i, j = 0, j + 1
    if nbits % 6:
        tail = (data[pos + nbytes - 1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if tail:
            raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    return Graph(n, tuple(rows))


def _decode_size(data: bytes, start: int) -> tuple[int, int]:
    if len(data) <= start:
        raise Graph6Error("missing size header", start)
    if data[start] != 126:
        return data[start] - 63, start + 1
    if len(data) > start + 1 and data[start + 1] == 126:
        width, pos = 6, start + 2
    else:
        width, pos = 3, start + 1
    if len(data) < pos + width:
        raise Graph6Error("truncated extended size header", len(data))
    n = 0
    for b in data[pos:pos + width]:
        n = (n << 6) | (b - 63)
    if (width == 3 and n <= 62) or (width == 6 and n <= 258047):
        raise Graph6Error("non-canonical size header", start)
    return n, pos + width


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)

"""Pluecker-index combinatorics and the triangular Grassmannian seed.

Grid coordinates are unified throughout: a seed vertex Grid(x, y) has
x in 1..n-k (horizontal, counting rectangle columns) and y in 1..k (vertical,
counting rectangle rows, bottom-up).  The drawn pictures number rows top-down,
so drawn row i corresponds to y = k - i + 1; the mutable grid occupies
x <= n-k-1, y <= k-1.  Grid(x, y) labels the unique Pluecker index whose
Young diagram is the y-by-x rectangle; the exceptional frozen vertex 'empty'
labels (1, ..., k).

Young-diagram boxes are addressed (i, j) = (row from top, column), matching
matrix entry positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from grassdt.quiver import IceQuiver


@dataclass(frozen=True)
class PluckerIndex:
    """A strictly increasing k-subset of {1..n}."""

    k: int
    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.k:
            raise ValueError(f"expected {self.k} entries, got {len(entries)}")
        if any(b <= a for a, b in zip(entries, entries[1:])):
            raise ValueError(f"entries not strictly increasing: {entries}")
        if entries[0] < 1 or entries[-1] > self.n:
            raise ValueError(f"entries outside 1..{self.n}: {entries}")

    def to_text(self) -> str:
        return ",".join(str(a) for a in self.entries)

    @classmethod
    def parse(cls, text: str, k: int, n: int) -> "PluckerIndex":
        return cls(k, n, tuple(int(p) for p in text.split(",")))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class YoungDiagram:
    """Row lengths top to bottom, weakly decreasing, bounded by max_width."""

    rows: tuple[int, ...]
    max_width: int

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r < 0 for r in rows):
            raise ValueError(f"negative row length in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows not weakly decreasing: {rows}")
        if rows and rows[0] > self.max_width:
            raise ValueError(f"row {rows[0]} exceeds width bound {self.max_width}")

    def is_empty(self) -> bool:
        return not any(self.rows)

    def num_boxes(self) -> int:
        return sum(self.rows)


@dataclass(frozen=True)
class SeedVertex:
    """Grid(x, y), or the exceptional frozen vertex when both are None."""

    x: Optional[int] = None
    y: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("x and y must both be set or both be None")

    @property
    def is_empty(self) -> bool:
        return self.x is None

    def to_text(self) -> str:
        return "empty" if self.is_empty else f"{self.x},{self.y}"

    def __str__(self) -> str:
        return self.to_text()


EMPTY_VERTEX = SeedVertex()


def _check_kn(k: int, n: int) -> None:
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n-2, got k={k}, n={n}")


def young_diagram(index: PluckerIndex) -> YoungDiagram:
    """Row i from top has length a_{k-i+1} - (k-i+1)."""
    k, n, a = index.k, index.n, index.entries
    rows = tuple(a[k - i] - (k - i + 1) for i in range(1, k + 1))
    return YoungDiagram(rows, n - k)


def peaks_valleys(
    diagram: YoungDiagram,
) -> tuple[frozenset[tuple[int, int]], frozenset[tuple[int, int]]]:
    """Peaks and valleys of a nonempty Young diagram, as (row, col) boxes.

    A peak is a box with no box to its east and none to its south; a valley
    is a box with boxes to its south and east but none to its southeast.
    Every nonempty diagram has exactly one more peak than valleys.
    """
    rows = diagram.rows
    k = len(rows)
    if diagram.is_empty():
        raise ValueError("no boxes")
    peaks = set()
    valleys = set()
    for i in range(1, k + 1):
        length = rows[i - 1]
        below = rows[i] if i < k else 0
        if length > 0 and below < length:
            peaks.add((i, length))
        if i < k and rows[i] >= 1 and length > rows[i]:
            valleys.add((i, rows[i]))
    return frozenset(peaks), frozenset(valleys)


def rectangle_to_plucker(rows: int, cols: int, k: int, n: int) -> PluckerIndex:
    """The index whose Young diagram is the rows-by-cols rectangle."""
    if not 1 <= rows <= k:
        raise ValueError(f"rows {rows} outside 1..{k}")
    if not 1 <= cols <= n - k:
        raise ValueError(f"cols {cols} outside 1..{n - k}")
    entries = tuple(range(1, k - rows + 1)) + tuple(
        range(k - rows + 1 + cols, k + cols + 1)
    )
    return PluckerIndex(k, n, entries)


def plucker_rectangle_shape(index: PluckerIndex) -> Optional[tuple[int, int]]:
    """(rows, cols) if the Young diagram is a nonempty rectangle, else None."""
    rows = young_diagram(index).rows
    filled = [r for r in rows if r > 0]
    if not filled or any(r != filled[0] for r in filled):
        return None
    return (len(filled), filled[0])


@dataclass(frozen=True)
class TriangularSeed:
    """The initial seed: quiver plus the vertex-id <-> grid labeling."""

    k: int
    n: int
    quiver: IceQuiver
    labels: tuple[SeedVertex, ...]  # position i is vertex id i+1

    @property
    def num_mutable(self) -> int:
        return self.quiver.num_mutable

    @property
    def num_vertices(self) -> int:
        return self.quiver.num_vertices

    def vertex(self, vid: int) -> SeedVertex:
        return self.labels[vid - 1]

    def vertex_id(self, v: SeedVertex) -> int:
        return self.labels.index(v) + 1

    def plucker(self, vid: int) -> PluckerIndex:
        v = self.vertex(vid)
        if v.is_empty:
            return PluckerIndex(self.k, self.n, tuple(range(1, self.k + 1)))
        return rectangle_to_plucker(v.y, v.x, self.k, self.n)


def seed_vertex_id(x: int, y: int, k: int, n: int) -> int:
    """Vertex id of Grid(x, y) in the triangular seed numbering.

    Mutable vertices come first, drawn-row-major (top row y = k-1 first);
    then the frozen top row y = k left to right, the frozen right column
    x = n-k top to bottom, and finally the exceptional vertex.
    """
    w = n - k
    r = (k - 1) * (w - 1)
    if not (1 <= x <= w and 1 <= y <= k):
        raise ValueError(f"grid vertex ({x}, {y}) outside 1..{w} x 1..{k}")
    if x <= w - 1 and y <= k - 1:
        return (w - 1) * (k - 1 - y) + x
    if y == k:
        return r + x
    return r + w + (k - y)


def grid_vertex_id(x: int, y: int, k: int, n: int) -> int:
    """Mutable-grid id of (x, y): drawn-row-major over the mutable grid."""
    w = n - k - 1
    if not (1 <= x <= w and 1 <= y <= k - 1):
        raise ValueError(f"mutable grid vertex ({x}, {y}) outside 1..{w} x 1..{k - 1}")
    return w * (k - 1 - y) + x


def grid_vertex_xy(vid: int, k: int, n: int) -> tuple[int, int]:
    w = n - k - 1
    r = (k - 1) * w
    if not 1 <= vid <= r:
        raise ValueError(f"grid vertex id {vid} outside 1..{r}")
    x = (vid - 1) % w + 1
    y = k - 1 - (vid - 1) // w
    return (x, y)


@lru_cache(maxsize=None)
def triangular_seed(k: int, n: int, decorated: bool = True) -> TriangularSeed:
    """The triangular initial seed for the (k, n) Grassmannian.

    Vertices: Grid(x, y) for the full k x (n-k) rectangle plus the
    exceptional frozen vertex; m = k(n-k) + 1, of which n are frozen.
    Arrows: east (x, y) -> (x+1, y), north (x, y) -> (x, y+1), and the
    southwest diagonals (x+1, y+1) -> (x, y), plus empty -> Grid(1, 1).
    With ``decorated`` the two frozen-frozen arrows empty -> Grid(1, k) and
    empty -> Grid(n-k, 1) of the usual picture are included as well; they
    play no role in any computation.
    """
    _check_kn(k, n)
    w = n - k
    r = (k - 1) * (w - 1)
    m = k * w + 1

    def vid(x: int, y: int) -> int:
        return seed_vertex_id(x, y, k, n)

    labels: list[SeedVertex] = [EMPTY_VERTEX] * m
    for x in range(1, w + 1):
        for y in range(1, k + 1):
            labels[vid(x, y) - 1] = SeedVertex(x, y)
    labels[m - 1] = EMPTY_VERTEX

    arrows: list[tuple[int, int]] = []
    for y in range(1, k + 1):
        for x in range(1, w):
            arrows.append((vid(x, y), vid(x + 1, y)))
    for x in range(1, w + 1):
        for y in range(1, k):
            arrows.append((vid(x, y), vid(x, y + 1)))
    for x in range(1, w):
        for y in range(1, k):
            arrows.append((vid(x + 1, y + 1), vid(x, y)))
    arrows.append((m, vid(1, 1)))
    if decorated:
        arrows.append((m, vid(1, k)))
        arrows.append((m, vid(w, 1)))

    quiver = IceQuiver(m, r, tuple(arrows))
    return TriangularSeed(k, n, quiver, tuple(labels))


@lru_cache(maxsize=None)
def grid_quiver(k: int, n: int) -> IceQuiver:
    """The mutable part of the triangular seed as a standalone quiver.

    Vertex ids follow :func:`grid_vertex_id`; all vertices are mutable.
    """
    _check_kn(k, n)
    w = n - k - 1
    r = (k - 1) * w
    arrows: list[tuple[int, int]] = []
    for y in range(1, k):
        for x in range(1, w):
            arrows.append((grid_vertex_id(x, y, k, n), grid_vertex_id(x + 1, y, k, n)))
    for x in range(1, w + 1):
        for y in range(1, k - 1):
            arrows.append((grid_vertex_id(x, y, k, n), grid_vertex_id(x, y + 1, k, n)))
    for x in range(1, w):
        for y in range(1, k - 1):
            arrows.append(
                (grid_vertex_id(x + 1, y + 1, k, n), grid_vertex_id(x, y, k, n))
            )
    return IceQuiver(r, r, tuple(arrows))


def g_vector_plucker(index: PluckerIndex) -> tuple[int, ...]:
    """Extended g-vector of a Pluecker coordinate w.r.t. the triangular seed.

    The coordinate labeled (1..k) gets the basis vector of the exceptional
    vertex; otherwise the vector is the sum of basis vectors over peaks minus
    the sum over valleys of the Young diagram, a box (i, j) contributing at
    the vertex Grid(j, i).
    """
    k, n = index.k, index.n
    _check_kn(k, n)
    m = k * (n - k) + 1
    vec = [0] * m
    diagram = young_diagram(index)
    if diagram.is_empty():
        vec[m - 1] = 1
        return tuple(vec)
    peaks, valleys = peaks_valleys(diagram)
    for i, j in peaks:
        vec[seed_vertex_id(j, i, k, n) - 1] += 1
    for i, j in valleys:
        vec[seed_vertex_id(j, i, k, n) - 1] -= 1
    return tuple(vec)


def noncrossing(left: PluckerIndex, right: PluckerIndex) -> bool:
    """No cyclically ordered a, b, c, d with a, c in I\\J and b, d in J\\I."""
    if (left.k, left.n) != (right.k, right.n):
        raise ValueError("indices live in different Grassmannians")
    only_left = set(left.entries) - set(right.entries)
    only_right = set(right.entries) - set(left.entries)
    if not only_left:
        return True
    marks = [
        i in only_left for i in range(1, left.n + 1) if i in only_left or i in only_right
    ]
    blocks = 1 + sum(1 for a, b in zip(marks, marks[1:]) if a != b)
    if blocks > 1 and marks[0] == marks[-1]:
        blocks -= 1  # cyclic wrap merges the first and last blocks
    return blocks < 4


def is_plucker_cluster(indices: Iterable[PluckerIndex]) -> bool:
    """A maximal pairwise-noncrossing collection: k(n-k)+1 distinct members."""
    items = list(indices)
    if not items:
        return False
    k, n = items[0].k, items[0].n
    if any((i.k, i.n) != (k, n) for i in items):
        return False
    if len(set(items)) != len(items) or len(items) != k * (n - k) + 1:
        return False
    return all(noncrossing(a, b) for a, b in combinations(items, 2))


def is_cyclic_interval(index: PluckerIndex) -> bool:
    members = set(index.entries)
    breaks = sum(1 for i in members if (i % index.n) + 1 not in members)
    return breaks == 1


@dataclass(frozen=True)
class JKSProfile:
    """Arrow weights and rim heights of the rank-one module of an index.

    ``x_weights[i-1]`` is the weight ('t' or '1') of the clockwise arrow at
    position i, which is 't' exactly when i is in the index; ``y_weights``
    covers the counterclockwise arrows i+1 -> i, weighted 't' exactly when i
    is absent.  ``rim_heights`` has n+1 entries h(0..n), stepping down across
    members and up across non-members, normalized so the minimum is 0.
    """

    index: PluckerIndex
    x_weights: tuple[str, ...]
    y_weights: tuple[str, ...]
    rim_heights: tuple[int, ...]
    is_projective: bool


def jks_profile(index: PluckerIndex) -> JKSProfile:
    members = set(index.entries)
    n = index.n
    x_weights = tuple("t" if i in members else "1" for i in range(1, n + 1))
    y_weights = tuple("1" if i in members else "t" for i in range(1, n + 1))
    heights = [0]
    for i in range(1, n + 1):
        heights.append(heights[-1] + (-1 if i in members else 1))
    low = min(heights)
    rim = tuple(h - low for h in heights)
    return JKSProfile(index, x_weights, y_weights, rim, is_cyclic_interval(index))


def all_plucker_indices(k: int, n: int) -> list[PluckerIndex]:
    return [PluckerIndex(k, n, c) for c in combinations(range(1, n + 1), k)]

"""Reddening sequences and DT F-polynomials for rectangular grid quivers.

Two independent routes to the same polynomials:

* run a maximal green (or any reddening) sequence with full tracking and read
  off the final F-polynomials through the permutation carried by the final
  G-matrix;
* expand the generating function of 3D Young diagrams inside a box of chains
  L_r x L_s x L_t attached to each grid vertex.

The box sides for a grid vertex (p, q) of the (k, n) grid are the inclusive
sizes of the rectangle [p, n-k-1] x [q, k-1] together with 1 + min(p-1, q-1);
down-sets of the box poset biject with monomials, all coefficients are 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from grassdt.grassmann import grid_quiver, grid_vertex_id
from grassdt.poly import Poly
from grassdt.quiver import IceQuiver
from grassdt.tracking import (
    TrackedSeed,
    initial_tracked,
    mutate_tracked,
    validate_tracked,
    vertex_color,
)

DEFAULT_MAX_CELLS = 64
DEFAULT_MAX_DOWNSETS = 10**7
MAX_CELLS_ENV = "GRASS_DT_MAX_CELLS"


class BoxTooLargeError(ValueError):
    """The requested box exceeds the configured enumeration limits."""


def max_cells_limit(default: int = DEFAULT_MAX_CELLS) -> int:
    """Box-size limit, overridable through the GRASS_DT_MAX_CELLS env var."""
    raw = os.environ.get(MAX_CELLS_ENV)
    return int(raw) if raw else default


def rectangular_sweep_sequence(k: int, n: int) -> tuple[int, ...]:
    """Row sweeps over shrinking blocks of the mutable grid.

    For block width w = n-k-1 down to 1, mutate every drawn row top to bottom,
    each row left to right up to column w.  Empirically a maximal green
    sequence for these grids; greenness is verified at run time, never
    assumed.  Length (k-1)(n-k-1)(n-k)/2.
    """
    w = n - k - 1
    word: list[int] = []
    for width in range(w, 0, -1):
        for y in range(k - 1, 0, -1):
            for x in range(1, width + 1):
                word.append(grid_vertex_id(x, y, k, n))
    return tuple(word)


@dataclass(frozen=True)
class GreenSeqReport:
    word: tuple[int, ...]
    all_steps_green: bool
    is_reddening: bool
    sigma: Optional[tuple[int, ...]]  # sigma[i-1] = image of vertex i
    final_g: tuple[tuple[int, ...], ...]
    dtf: Optional[tuple[Poly, ...]]  # indexed by initial vertices
    final_seed: TrackedSeed


def extract_sigma(seed: TrackedSeed) -> Optional[tuple[int, ...]]:
    """The permutation with g_j = -e_{sigma(j)} on the mutable block, if any."""
    r = seed.num_mutable
    sigma = [0] * r
    for j in range(r):
        col = seed.gmatrix[j][:r]
        nonzero = [(i, x) for i, x in enumerate(col) if x]
        if len(nonzero) != 1 or nonzero[0][1] != -1:
            return None
        sigma[j] = nonzero[0][0] + 1
    return tuple(sigma) if sorted(sigma) == list(range(1, r + 1)) else None


def run_reddening(
    q: IceQuiver,
    word: Iterable[int],
    track_fpolys: bool = True,
    validate: bool = False,
) -> GreenSeqReport:
    """Execute a mutation word and report its green/reddening structure.

    The i-th DT F-polynomial is the final F-polynomial of the vertex whose
    final g-vector is -e_i; it is independent of the chosen reddening word.
    """
    word = tuple(word)
    seed = initial_tracked(q, track_fpolys=track_fpolys)
    if validate:
        validate_tracked(seed)
    all_green = True
    for k in word:
        if vertex_color(seed, k) != "green":
            all_green = False
        seed = mutate_tracked(seed, k)
        if validate:
            validate_tracked(seed)
    is_reddening = all(c == "red" for c in seed.colors())
    sigma = extract_sigma(seed) if is_reddening else None
    if is_reddening and sigma is None:
        raise AssertionError(
            "all-red seed whose G-matrix is not a signed permutation; tracking bug"
        )
    dtf = None
    if sigma is not None and seed.fpolys is not None:
        inverse = {image: j + 1 for j, image in enumerate(sigma)}
        dtf = tuple(seed.fpolys[inverse[i] - 1] for i in range(1, q.num_mutable + 1))
    return GreenSeqReport(
        word=word,
        all_steps_green=all_green,
        is_reddening=is_reddening,
        sigma=sigma,
        final_g=seed.gmatrix,
        dtf=dtf,
        final_seed=seed,
    )


def greedy_green_search(
    q: IceQuiver,
    max_steps: int = 1000,
    tie_break: str = "lowest",
) -> Optional[tuple[int, ...]]:
    """Mutate the lowest-indexed green vertex until all are red.

    Returns the word, or None if the step budget ran out first.
    """
    if tie_break != "lowest":
        raise ValueError(f"unknown tie_break {tie_break!r}")
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    seed = initial_tracked(q, track_fpolys=False)
    word: list[int] = []
    for _ in range(max_steps + 1):
        greens = [k for k in range(1, q.num_mutable + 1) if vertex_color(seed, k) == "green"]
        if not greens:
            return tuple(word)
        if len(word) >= max_steps:
            return None
        k = min(greens)
        seed = mutate_tracked(seed, k)
        word.append(k)
    return None


# -- box posets and plane partitions ---------------------------------------


@dataclass(frozen=True)
class BoxPoset:
    """The product of chains L_r x L_s x L_t, elements (p', q', r') 1-based."""

    r: int
    s: int
    t: int

    def __post_init__(self) -> None:
        if min(self.r, self.s, self.t) < 1:
            raise ValueError(f"box sides must be >= 1, got {(self.r, self.s, self.t)}")

    @property
    def cells(self) -> int:
        return self.r * self.s * self.t


def weng_box(k: int, n: int, p: int, q: int) -> tuple[int, int, int]:
    """Box side lengths attached to the grid vertex (p, q).

    r and s are the inclusive sizes of [p, n-k-1] and [q, k-1]; the height is
    t = 1 + min(p-1, q-1).
    """
    if not 1 <= p <= n - k - 1:
        raise ValueError(f"p={p} outside 1..{n - k - 1}")
    if not 1 <= q <= k - 1:
        raise ValueError(f"q={q} outside 1..{k - 1}")
    return ((n - k) - p, k - q, 1 + min(p - 1, q - 1))


def macmahon_count(r: int, s: int, t: int) -> int:
    """Number of plane partitions in an r x s x t box (product formula)."""
    if min(r, s, t) < 1:
        raise ValueError("box sides must be >= 1")
    total = Fraction(1)
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            for l in range(1, t + 1):
                total *= Fraction(i + j + l - 1, i + j + l - 2)
    assert total.denominator == 1
    return total.numerator


def _rows(s: int, caps: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing s-tuples bounded entrywise by caps, lex ascending."""
    if s == 0:
        yield ()
        return
    for first in range(0, caps[0] + 1):
        for rest in _rows(s - 1, tuple(min(first, c) for c in caps[1:])):
            yield (first,) + rest


def enumerate_downsets(
    box: BoxPoset,
    max_cells: Optional[int] = None,
    max_downsets: int = DEFAULT_MAX_DOWNSETS,
) -> Iterator[frozenset[tuple[int, int, int]]]:
    """All down-sets (predecessor-closed subsets) of the box poset.

    Down-sets are encoded as height arrays h[p'][q'] weakly decreasing in
    both directions with entries 0..t, streamed in lexicographic order of the
    flattened array; the empty down-set comes first.
    """
    limit = max_cells if max_cells is not None else max_cells_limit()
    if box.cells > limit:
        raise BoxTooLargeError(f"box too large: {box.cells} cells > limit {limit}")
    if macmahon_count(box.r, box.s, box.t) > max_downsets:
        raise BoxTooLargeError(f"box too large: more than {max_downsets} down-sets")

    def grow(level: int, prev: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if level == box.r:
            yield ()
            return
        for row in _rows(box.s, prev):
            for rest in grow(level + 1, row):
                yield (row,) + rest

    top = tuple(box.t for _ in range(box.s))
    for heights in grow(0, top):
        yield frozenset(
            (i + 1, j + 1, l)
            for i in range(box.r)
            for j in range(box.s)
            for l in range(1, heights[i][j] + 1)
        )


def is_downset(box: BoxPoset, subset: frozenset[tuple[int, int, int]]) -> bool:
    """Predecessor-closedness check, used as an independent oracle."""
    for (a, b, c) in subset:
        for below in ((a - 1, b, c), (a, b - 1, c), (a, b, c - 1)):
            if min(below) >= 1 and below not in subset:
                return False
    return True


def dtf_closed_form(
    k: int, n: int, p: int, q: int, max_cells: Optional[int] = None
) -> Poly:
    """DT F-polynomial of the grid vertex (p, q) as a down-set sum.

    Each down-set K of the vertex box contributes the monomial
    prod over (p', q', r') in K of y at grid vertex (p+p'-r', q+q'-r');
    distinct down-sets give distinct monomials, so all coefficients are 1.
    """
    box = BoxPoset(*weng_box(k, n, p, q))
    num_vars = (k - 1) * (n - k - 1)
    seen: dict[tuple[int, ...], int] = {}
    for downset in enumerate_downsets(box, max_cells=max_cells):
        exps = [0] * num_vars
        for (a, b, c) in downset:
            vid = grid_vertex_id(p + a - c, q + b - c, k, n)
            exps[vid - 1] += 1
        key = tuple(exps)
        seen[key] = seen.get(key, 0) + 1
    if any(count != 1 for count in seen.values()):
        raise AssertionError("distinct down-sets produced identical monomials")
    return Poly(num_vars, tuple((exps, 1) for exps in seen))


def injective_layers(
    k: int, n: int, p: int, q: int
) -> list[tuple[int, tuple[tuple[int, int], tuple[int, int]]]]:
    """Per-degree supports of the module behind the vertex (p, q).

    Layer d (d = 0, -1, ...) is thin and supported on the base rectangle
    [p, n-k-1] x [q, k-1] translated by (d, d); there are t layers in total.
    """
    _, _, t = weng_box(k, n, p, q)
    layers = []
    for d in range(0, -t, -1):
        rect = ((p + d, (n - k - 1) + d), (q + d, (k - 1) + d))
        layers.append((d, rect))
    return layers


def dtf_by_mutation(
    k: int, n: int, validate: bool = False
) -> tuple[GreenSeqReport, tuple[Poly, ...]]:
    """DT F-polynomials of the (k, n) grid via the rectangular sweep."""
    report = run_reddening(
        grid_quiver(k, n), rectangular_sweep_sequence(k, n), validate=validate
    )
    if not (report.all_steps_green and report.is_reddening and report.dtf):
        raise AssertionError(f"rectangular sweep failed to redden the ({k},{n}) grid")
    return report, report.dtf

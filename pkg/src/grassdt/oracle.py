"""Independent brute-force validation of the combinatorial machinery.

Everything here is exact: Grassmannian points are integer matrices, cluster
values are rationals, symbolic work is done on small instances only.  The
exchange-graph search identifies cluster-variable slots with Pluecker
coordinates by comparing values at several independent sample points, then
reads off their tracked extended g-vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from grassdt.grassmann import (
    PluckerIndex,
    TriangularSeed,
    all_plucker_indices,
    triangular_seed,
)
from grassdt.quiver import IceQuiver, mutate
from grassdt.tracking import (
    TrackedSeed,
    initial_tracked,
    mutate_tracked,
    validate_tracked,
)

DEFAULT_RNG_SEED = 104729

RationalMatrix = tuple[tuple[Fraction, ...], ...]


class NonGenericPointError(ArithmeticError):
    """A cluster value hit zero; the sample point must be resampled."""


class BudgetError(RuntimeError):
    """A size or step budget was exhausted."""


def plucker_value(matrix: Sequence[Sequence[Fraction]], index: PluckerIndex) -> Fraction:
    """Determinant of the k x k submatrix on the columns of the index."""
    k = index.k
    rows = [[Fraction(matrix[i][c - 1]) for c in index.entries] for i in range(k)]
    value = Fraction(1)
    for p in range(k):
        pivot_row = next((i for i in range(p, k) if rows[i][p]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != p:
            rows[p], rows[pivot_row] = rows[pivot_row], rows[p]
            value = -value
        value *= rows[p][p]
        inv = 1 / rows[p][p]
        for i in range(p + 1, k):
            factor = rows[i][p] * inv
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[p])]
    return value


def random_grassmann_point(
    k: int,
    n: int,
    rng_seed: int = DEFAULT_RNG_SEED,
    require_all_minors: bool = True,
    budget: int = 500,
) -> RationalMatrix:
    """A small-integer k x n matrix with nonzero seed-label minors.

    With ``require_all_minors`` (feasible at desk scale) every maximal minor
    is required to be nonzero, which keeps every Pluecker value usable for
    identification.
    """
    rng = random.Random(rng_seed)
    seed = triangular_seed(k, n)
    labels = [seed.plucker(i) for i in range(1, seed.num_vertices + 1)]
    targets = all_plucker_indices(k, n) if require_all_minors else labels
    for _ in range(budget):
        matrix = tuple(
            tuple(Fraction(rng.randint(-9, 9)) for _ in range(n)) for _ in range(k)
        )
        if all(plucker_value(matrix, idx) != 0 for idx in targets):
            return matrix
    raise BudgetError(f"no generic point found in {budget} samples")


@dataclass(frozen=True)
class NumericSeed:
    quiver: IceQuiver
    values: tuple[Fraction, ...]


def initial_numeric(seed: TriangularSeed, matrix: RationalMatrix) -> NumericSeed:
    values = tuple(
        plucker_value(matrix, seed.plucker(i)) for i in range(1, seed.num_vertices + 1)
    )
    return NumericSeed(seed.quiver, values)


def mutate_numeric(seed: NumericSeed, k: int) -> NumericSeed:
    """Exchange relation x_k x_k' = prod over arrows into k + prod out of k."""
    old = seed.values[k - 1]
    if old == 0:
        raise NonGenericPointError("non-generic point")
    prod_in = Fraction(1)
    for s in seed.quiver.neighbors_in(k):
        prod_in *= seed.values[s - 1]
    prod_out = Fraction(1)
    for t in seed.quiver.neighbors_out(k):
        prod_out *= seed.values[t - 1]
    new_value = (prod_in + prod_out) / old
    values = seed.values[: k - 1] + (new_value,) + seed.values[k:]
    return NumericSeed(mutate(seed.quiver, k), values)


@dataclass
class BfsReport:
    gvectors: dict[PluckerIndex, tuple[int, ...]] = field(default_factory=dict)
    clusters: int = 0
    complete: bool = True
    mismatched: list[str] = field(default_factory=list)


def bfs_exchange_graph(
    k: int,
    n: int,
    max_clusters: int = 5000,
    rng_seed: int = DEFAULT_RNG_SEED,
    num_points: int = 3,
    validate: bool = False,
    paranoid: bool = False,
) -> BfsReport:
    """Search the exchange graph from the triangular seed, id'ing Plueckers.

    Tracked and numeric seeds mutate in lockstep at ``num_points`` sample
    points.  A slot is identified with the Pluecker coordinate whose minors
    match its values at every point; its extended g-vector is recorded.
    Seeds are deduplicated by the multiset of g-vector columns; with
    ``paranoid`` every dedup hit is re-verified by value comparison.

    Only sensible for finite-type instances; the BFS stops (and flags the
    report incomplete) after ``max_clusters`` clusters.
    """
    for attempt in range(8):
        try:
            return _bfs_once(
                k, n, max_clusters, rng_seed + 7919 * attempt, num_points, validate, paranoid
            )
        except NonGenericPointError:
            continue
    raise BudgetError("all sample-point batches hit non-generic values")


def _bfs_once(
    k: int,
    n: int,
    max_clusters: int,
    rng_seed: int,
    num_points: int,
    validate: bool,
    paranoid: bool,
) -> BfsReport:
    from collections import deque

    seed_info = triangular_seed(k, n)
    matrices = [
        random_grassmann_point(k, n, rng_seed=rng_seed + i) for i in range(num_points)
    ]
    tables = [
        {idx: plucker_value(mat, idx) for idx in all_plucker_indices(k, n)}
        for mat in matrices
    ]
    lookup = [dict() for _ in matrices]
    for a, table in enumerate(tables):
        for idx, value in table.items():
            lookup[a].setdefault(value, set()).add(idx)

    report = BfsReport()
    g_owner: dict[tuple[int, ...], PluckerIndex] = {}

    def identify(slot_values: list[Fraction], gvec: tuple[int, ...]) -> None:
        if any(v == 0 for v in slot_values):
            return
        candidates = set(lookup[0].get(slot_values[0], set()))
        for a in range(1, num_points):
            candidates &= lookup[a].get(slot_values[a], set())
            if not candidates:
                return
        if len(candidates) != 1:
            report.mismatched.append(
                f"ambiguous value match: {sorted(str(c) for c in candidates)}"
            )
            return
        index = candidates.pop()
        known = report.gvectors.get(index)
        if known is not None:
            if known != gvec:
                report.mismatched.append(
                    f"{index}: conflicting g-vectors {known} vs {gvec}"
                )
            return
        owner = g_owner.get(gvec)
        if owner is not None and owner != index:
            report.mismatched.append(
                f"g-vector {gvec} claimed by both {owner} and {index}"
            )
            return
        report.gvectors[index] = gvec
        g_owner[gvec] = index

    tracked = initial_tracked(seed_info.quiver)
    numerics = [initial_numeric(seed_info, mat) for mat in matrices]

    def seed_key(s: TrackedSeed) -> tuple:
        return tuple(sorted(s.gmatrix[: s.num_mutable]))

    def value_key(nums: list[NumericSeed]) -> tuple:
        return tuple(
            tuple(sorted(ns.values[: ns.quiver.num_mutable])) for ns in nums
        )

    visited: dict[tuple, tuple] = {seed_key(tracked): value_key(numerics)}
    queue = deque([(tracked, numerics)])
    report.clusters = 1
    r, m = tracked.num_mutable, tracked.num_vertices

    while queue:
        current, nums = queue.popleft()
        if validate:
            validate_tracked(current)
        for j in range(1, m + 1):
            identify([ns.values[j - 1] for ns in nums], current.gmatrix[j - 1])
        for direction in range(1, r + 1):
            child = mutate_tracked(current, direction)
            child_nums = [mutate_numeric(ns, direction) for ns in nums]
            key = seed_key(child)
            if key in visited:
                if paranoid and visited[key] != value_key(child_nums):
                    raise AssertionError(
                        "g-vector dedup key collided with distinct cluster values"
                    )
                continue
            if report.clusters >= max_clusters:
                report.complete = False
                return report
            visited[key] = value_key(child_nums)
            report.clusters += 1
            queue.append((child, child_nums))
    return report


# -- symbolic Laurent mutation (small instances) ----------------------------


def laurent_mutation(q: IceQuiver, word: Sequence[int], max_ops: int = 200_000):
    """Cluster variables along a word as symbolic Laurent expressions.

    Returns one sympy expression per vertex in the variables x1..xm.  Only
    meant for desk-scale checks: at most 8 mutable vertices and words of
    length at most 12; blows the budget otherwise.
    """
    import sympy

    if q.num_mutable > 8:
        raise BudgetError(f"too many mutable vertices for symbolic work: {q.num_mutable}")
    word = tuple(word)
    if len(word) > 12:
        raise BudgetError(f"word too long for symbolic work: {len(word)}")
    xs = sympy.symbols(f"x1:{q.num_vertices + 1}", positive=True)
    values = list(xs)
    current = q
    for k in word:
        if not current.is_mutable(k):
            raise ValueError(f"vertex {k} is frozen")
        prod_in = sympy.Integer(1)
        for s in current.neighbors_in(k):
            prod_in *= values[s - 1]
        prod_out = sympy.Integer(1)
        for t in current.neighbors_out(k):
            prod_out *= values[t - 1]
        values[k - 1] = sympy.cancel((prod_in + prod_out) / values[k - 1])
        if sympy.count_ops(values[k - 1]) > max_ops:
            raise BudgetError("expression-size budget exceeded")
        current = mutate(current, k)
    return values


def principal_grading(q_unfrozen: IceQuiver) -> list[tuple[int, ...]]:
    """Degrees of x1..x2m under the principal grading of a co-framed quiver.

    deg x_j = e_j and deg x_{m+j} = minus column j of the exchange matrix of
    the unfrozen quiver.
    """
    m = q_unfrozen.num_vertices
    degrees: list[tuple[int, ...]] = []
    for j in range(1, m + 1):
        degrees.append(tuple(1 if i == j else 0 for i in range(1, m + 1)))
    for j in range(1, m + 1):
        degrees.append(tuple(-q_unfrozen.b_entry(i, j) for i in range(1, m + 1)))
    return degrees


def laurent_multidegree(expr, degrees: list[tuple[int, ...]]) -> Optional[tuple[int, ...]]:
    """Multidegree of a Laurent expression, or None if not homogeneous."""
    import sympy

    num_symbols = len(degrees)
    xs = sympy.symbols(f"x1:{num_symbols + 1}", positive=True)
    m = len(degrees[0])
    numer, denom = sympy.fraction(sympy.cancel(expr))

    def poly_degrees(p) -> list[tuple[int, ...]]:
        poly = sympy.Poly(p, *xs)
        out = []
        for monom, _ in poly.terms():
            deg = [0] * m
            for exp, dvec in zip(monom, degrees):
                if exp:
                    for i in range(m):
                        deg[i] += exp * dvec[i]
            out.append(tuple(deg))
        return out

    denom_degs = poly_degrees(denom)
    if len(denom_degs) != 1:
        return None  # denominator is not a monomial: not Laurent
    base = denom_degs[0]
    numer_degs = set(poly_degrees(numer))
    if len(numer_degs) != 1:
        return None
    top = numer_degs.pop()
    return tuple(a - b for a, b in zip(top, base))

"""Cluster-pattern bookkeeping along mutation words.

A :class:`TrackedSeed` carries, besides the quiver itself, the C-matrix
(columns are c-vectors), the G-matrix (columns are extended g-vectors) and
one F-polynomial per mutable vertex.  The update rules are:

* C is the framing block of the extended matrix [B; I] mutated by the usual
  matrix rule; equivalently, the framing block of a quiver co-framed at its
  mutable vertices (framing arrows pointing into the quiver).
* G is multiplied on the right by the elementary matrix E(k, eps) read off
  the current quiver, with eps = +1 exactly when k is green (its c-vector is
  nonnegative).  G is stored m x m: frozen columns stay at basis vectors,
  while mutable columns acquire entries in frozen rows -- these are the
  extended g-vectors.
* F_k is replaced through the exchange recursion whose coefficient monomials
  come from the positive and negative parts of the current c-vector c_k; the
  division by the old F_k is exact whenever the books are consistent.

Mutation words are applied-order lists (left to right).  A composition
written right-to-left, say mu_3 mu_2 mu_1, is the word (1, 2, 3).

Matrices are column-major: ``cmatrix[j]`` is the c-vector of vertex j+1.
All values are immutable; every operation returns a fresh seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from grassdt.poly import Poly
from grassdt.quiver import FrozenVertexError, IceQuiver, QuiverError, mutate

Matrix = tuple[tuple[int, ...], ...]  # tuple of columns


class SignCoherenceError(ValueError):
    """A c-vector or g-matrix row failed sign-coherence; upstream bug."""


def vector_sign(v: Iterable[int]) -> Optional[int]:
    """+1 / -1 for a nonzero sign-coherent vector, None otherwise."""
    pos = neg = False
    for x in v:
        if x > 0:
            pos = True
        elif x < 0:
            neg = True
    if pos and not neg:
        return 1
    if neg and not pos:
        return -1
    return None


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))


def det(matrix: Matrix) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    n = len(matrix)
    a = [[matrix[j][i] for j in range(n)] for i in range(n)]
    sign, prev = 1, 1
    for p in range(n - 1):
        if a[p][p] == 0:
            for i in range(p + 1, n):
                if a[i][p]:
                    a[p], a[i] = a[i], a[p]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
            a[i][p] = 0
        prev = a[p][p]
    return sign * a[n - 1][n - 1]


def ematrix(q: IceQuiver, k: int, eps: int) -> Matrix:
    """The m x m matrix E(k, eps) of the quiver q.

    It differs from the identity only in column k: entry (k, k) is -1 and
    entry (i, k) is [-eps * b_ik]_+ for i != k.  For fixed eps it is an
    involution.
    """
    if eps not in (1, -1):
        raise ValueError(f"eps must be +-1, got {eps}")
    m = q.num_vertices
    if not 1 <= k <= q.num_vertices:
        raise QuiverError(f"vertex {k} outside 1..{m}")
    cols = [list(col) for col in identity_matrix(m)]
    col_k = [max(0, -eps * q.b_entry(i, k)) for i in range(1, m + 1)]
    col_k[k - 1] = -1
    cols[k - 1] = col_k
    return tuple(tuple(col) for col in cols)


@dataclass(frozen=True)
class TrackedSeed:
    quiver: IceQuiver
    cmatrix: Matrix  # r columns of length r
    gmatrix: Matrix  # m columns of length m
    fpolys: Optional[tuple[Poly, ...]]  # r entries, or None if not tracked
    history: tuple[int, ...] = ()

    @property
    def num_mutable(self) -> int:
        return self.quiver.num_mutable

    @property
    def num_vertices(self) -> int:
        return self.quiver.num_vertices

    def colors(self) -> tuple[str, ...]:
        return tuple(vertex_color(self, k) for k in range(1, self.num_mutable + 1))


def initial_tracked(q: IceQuiver, track_fpolys: bool = True) -> TrackedSeed:
    """The seed at the root: C = I_r, G = I_m, all F-polynomials 1."""
    r, m = q.num_mutable, q.num_vertices
    fpolys = tuple(Poly.one(r) for _ in range(r)) if track_fpolys else None
    return TrackedSeed(q, identity_matrix(r), identity_matrix(m), fpolys)


def vertex_color(seed: TrackedSeed, k: int) -> str:
    """"green" if c_k is nonnegative, "red" if nonpositive."""
    if not seed.quiver.is_mutable(k):
        raise FrozenVertexError("vertex is frozen")
    sign = vector_sign(seed.cmatrix[k - 1])
    if sign is None:
        raise SignCoherenceError("sign-coherence violated")
    return "green" if sign > 0 else "red"


def mutate_tracked(seed: TrackedSeed, k: int) -> TrackedSeed:
    q = seed.quiver
    if not 1 <= k <= q.num_vertices:
        raise QuiverError(f"vertex {k} outside 1..{q.num_vertices}")
    if not q.is_mutable(k):
        raise FrozenVertexError("vertex is frozen")
    r, m = q.num_mutable, q.num_vertices
    kk = k - 1
    ck = seed.cmatrix[kk]
    eps = vector_sign(ck)
    if eps is None:
        raise SignCoherenceError("sign-coherence violated")
    b_col = [q.b_entry(i, k) for i in range(1, m + 1)]
    b_row = [q.b_entry(k, j) for j in range(1, r + 1)]

    # G: only column k changes, g_k' = -g_k + sum_i [-eps b_ik]_+ g_i.
    new_gk = [-x for x in seed.gmatrix[kk]]
    for i in range(m):
        coef = max(0, -eps * b_col[i])
        if coef and i != kk:
            col = seed.gmatrix[i]
            for row in range(m):
                new_gk[row] += coef * col[row]
    gmatrix = seed.gmatrix[:kk] + (tuple(new_gk),) + seed.gmatrix[kk + 1 :]

    # C: extended-matrix mutation of [B; C] at column k.
    new_cols = []
    for j in range(r):
        if j == kk:
            new_cols.append(tuple(-x for x in ck))
            continue
        bkj = b_row[j]
        col = seed.cmatrix[j]
        new_cols.append(
            tuple(
                col[i] + max(0, ck[i]) * max(0, bkj) - max(0, -ck[i]) * max(0, -bkj)
                for i in range(r)
            )
        )
    cmatrix = tuple(new_cols)

    fpolys = seed.fpolys
    if fpolys is not None:
        pos = Poly.monomial(r, tuple(max(0, c) for c in ck))
        neg = Poly.monomial(r, tuple(max(0, -c) for c in ck))
        for i in range(r):
            b = b_col[i]
            if b > 0:
                pos = pos * fpolys[i] ** b
            elif b < 0:
                neg = neg * fpolys[i] ** (-b)
        new_fk = (pos + neg).div_exact(fpolys[kk])
        fpolys = fpolys[:kk] + (new_fk,) + fpolys[kk + 1 :]

    return TrackedSeed(mutate(q, k), cmatrix, gmatrix, fpolys, seed.history + (k,))


def apply_word(seed: TrackedSeed, word: Iterable[int]) -> TrackedSeed:
    for k in word:
        seed = mutate_tracked(seed, k)
    return seed


def _row(matrix: Matrix, i: int) -> tuple[int, ...]:
    return tuple(col[i] for col in matrix)


def rebase_g(gmatrix: Matrix, q_new_base: IceQuiver, k: int) -> Matrix:
    """Move the base of a G-matrix one step across the edge labeled k.

    Given G(t1, t2) and the quiver at the *new* base t1' (one mutation at k
    away from t1), returns G(t1', t2) = E(k, eps) G(t1, t2), where eps is the
    common sign of row k of G(t1, t2).  Folding this over a word, starting
    from G(t0, t_end) and feeding the quivers Q(t1), ..., Q(t_end) in order,
    ends at the identity matrix G(t_end, t_end).
    """
    m = len(gmatrix)
    if q_new_base.num_vertices != m:
        raise ValueError("quiver size does not match G-matrix size")
    eps = vector_sign(_row(gmatrix, k - 1))
    if eps is None:
        raise SignCoherenceError("sign-coherence violated")
    kk = k - 1
    coefs = [max(0, -eps * q_new_base.b_entry(i, k)) for i in range(1, m + 1)]
    new_cols = []
    for col in gmatrix:
        v = list(col)
        pivot = v[kk]
        for i in range(m):
            if i != kk and coefs[i]:
                v[i] += coefs[i] * pivot
        v[kk] = -pivot
        new_cols.append(tuple(v))
    return tuple(new_cols)


def check_duality(seed: TrackedSeed) -> bool:
    """True iff C^T G = identity on the mutable block."""
    r = seed.num_mutable
    for i in range(r):
        ci = seed.cmatrix[i]
        for j in range(r):
            gj = seed.gmatrix[j]
            dot = sum(ci[l] * gj[l] for l in range(r))
            if dot != (1 if i == j else 0):
                return False
    return True


def validate_tracked(seed: TrackedSeed) -> None:
    """Assert the seed invariants; raises on the first violation.

    Checks: sign-coherent nonzero c-vectors, sign-coherent G-matrix rows,
    C^T G = I on the mutable block, det G = +-1, and F-polynomials with
    constant term 1 and positive coefficients.
    """
    for j, col in enumerate(seed.cmatrix):
        if vector_sign(col) is None:
            raise SignCoherenceError(f"c-vector {j + 1} is not sign-coherent: {col}")
    m = seed.num_vertices
    for i in range(m):
        row = _row(seed.gmatrix, i)
        if vector_sign(row) is None:
            raise SignCoherenceError(f"g-matrix row {i + 1} is not sign-coherent: {row}")
    if not check_duality(seed):
        raise AssertionError("C^T G != I on the mutable block")
    d = det(seed.gmatrix)
    if d not in (1, -1):
        raise AssertionError(f"det G = {d}, expected +-1")
    if seed.fpolys is not None:
        for j, f in enumerate(seed.fpolys):
            if f.constant_term() != 1:
                raise AssertionError(f"F_{j + 1} has constant term {f.constant_term()}")
            if any(c <= 0 for c in f.coefficients()):
                raise AssertionError(f"F_{j + 1} has a nonpositive coefficient")


def matrix_to_json(matrix: Matrix) -> list[list[int]]:
    """JSON form: array of columns."""
    return [list(col) for col in matrix]

"""Ice quivers and the three-step vertex mutation rule.

Vertices are numbered 1..m with the mutable ones first (1..r); the remaining
vertices are frozen.  Arrows form a multiset of ``(source, target)`` pairs;
parallel arrows are stored as repeated pairs.  The arrow tuple is kept
lexicographically sorted, so structurally equal quivers compare equal.

Arrows between two frozen vertices are tolerated (they occur in seed
pictures) but are ignored by mutation and by the exchange matrix, and
mutation never creates new ones.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property


class QuiverError(ValueError):
    """Invalid quiver data or invalid operation on a quiver."""


class FrozenVertexError(QuiverError):
    """Mutation was requested at a frozen vertex."""


@dataclass(frozen=True)
class IceQuiver:
    num_vertices: int
    num_mutable: int
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        m, r = self.num_vertices, self.num_mutable
        if m < 1:
            raise QuiverError(f"need at least one vertex, got {m}")
        if not 0 <= r <= m:
            raise QuiverError(f"num_mutable {r} outside 0..{m}")
        arrows = tuple(sorted((int(s), int(t)) for s, t in self.arrows))
        object.__setattr__(self, "arrows", arrows)
        seen = set(arrows)
        for s, t in arrows:
            if not (1 <= s <= m and 1 <= t <= m):
                raise QuiverError(f"arrow ({s}, {t}) leaves vertex range 1..{m}")
            if s == t:
                raise QuiverError(f"loop at vertex {s}")
            if (t, s) in seen and (s <= r or t <= r):
                raise QuiverError(f"2-cycle between {s} and {t}")

    @cached_property
    def _counts(self) -> Counter:
        return Counter(self.arrows)

    def arrow_count(self, s: int, t: int) -> int:
        return self._counts[(s, t)]

    def b_entry(self, i: int, j: int) -> int:
        """Net arrow count #(i -> j) - #(j -> i)."""
        return self._counts[(i, j)] - self._counts[(j, i)]

    def is_mutable(self, k: int) -> bool:
        return 1 <= k <= self.num_mutable

    def neighbors_in(self, k: int) -> list[int]:
        """Sources of arrows into k, with multiplicity."""
        return [s for (s, t) in self.arrows if t == k]

    def neighbors_out(self, k: int) -> list[int]:
        """Targets of arrows out of k, with multiplicity."""
        return [t for (s, t) in self.arrows if s == k]

    def to_json_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "num_mutable": self.num_mutable,
            "arrows": [[s, t] for s, t in self.arrows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "IceQuiver":
        try:
            m = int(data["num_vertices"])
            r = int(data["num_mutable"])
            arrows = tuple((int(s), int(t)) for s, t in data["arrows"])
        except (KeyError, TypeError, ValueError) as exc:
            raise QuiverError(f"malformed quiver JSON: {exc}") from exc
        return cls(m, r, arrows)


def _check_vertex(q: IceQuiver, k: int) -> None:
    if not 1 <= k <= q.num_vertices:
        raise QuiverError(f"vertex {k} outside 1..{q.num_vertices}")
    if not q.is_mutable(k):
        raise FrozenVertexError("vertex is frozen")


def mutate(q: IceQuiver, k: int) -> IceQuiver:
    """Mutate the quiver at the mutable vertex k.

    Three steps: add a composite i -> j for every path i -> k -> j, reverse
    all arrows at k, then cancel 2-cycles.  Cancellation removes
    ``min(#(i->j), #(j->i))`` copies for every unordered pair, which is the
    unique maximal disjoint family, so the result is deterministic.
    Frozen-frozen pairs are exempt from all three steps.
    """
    _check_vertex(q, k)
    r = q.num_mutable
    new = Counter()
    ins: Counter = Counter()
    outs: Counter = Counter()
    for (s, t), c in q._counts.items():
        if s == k:
            outs[t] += c
            new[(t, s)] += c
        elif t == k:
            ins[s] += c
            new[(t, s)] += c
        else:
            new[(s, t)] += c
    for i, ci in ins.items():
        for j, cj in outs.items():
            if i > r and j > r:
                continue  # never create frozen-frozen arrows
            new[(i, j)] += ci * cj
    for s, t in [p for p in new if p[0] < p[1]]:
        back = (t, s)
        if new[back] and (s <= r or t <= r):
            c = min(new[(s, t)], new[back])
            new[(s, t)] -= c
            new[back] -= c
    arrows = []
    for pair, c in new.items():
        arrows.extend([pair] * c)
    return IceQuiver(q.num_vertices, q.num_mutable, tuple(arrows))


def mutate_word(q: IceQuiver, word) -> IceQuiver:
    """Fold ``mutate`` over an applied-order (left-to-right) vertex list.

    A composition written right-to-left, e.g. mu_3 mu_2 mu_1, corresponds to
    the applied-order word (1, 2, 3).
    """
    for k in word:
        q = mutate(q, k)
    return q


def exchange_matrix(q: IceQuiver) -> list[list[int]]:
    """The m x r extended exchange matrix, b[i][j] = #(i->j) - #(j->i).

    Columns run over mutable vertices only; the top r x r block is the
    skew-symmetric principal part.
    """
    m, r = q.num_vertices, q.num_mutable
    return [[q.b_entry(i, j) for j in range(1, r + 1)] for i in range(1, m + 1)]


def principal_extension(q: IceQuiver) -> IceQuiver:
    """Attach a frozen copy m+i of every vertex i with an arrow i -> m+i."""
    m = q.num_vertices
    arrows = q.arrows + tuple((i, m + i) for i in range(1, m + 1))
    return IceQuiver(2 * m, q.num_mutable, arrows)


def coframed_extension(q: IceQuiver) -> IceQuiver:
    """Attach a frozen copy m+i of every vertex i with an arrow m+i -> i.

    The bottom block of the resulting exchange matrix is the identity, which
    is the framing convention under which c-vectors and standard principal
    coefficients live.
    """
    m = q.num_vertices
    arrows = q.arrows + tuple((m + i, i) for i in range(1, m + 1))
    return IceQuiver(2 * m, q.num_mutable, arrows)

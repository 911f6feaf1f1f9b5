"""Frozen expected values shared between unit and acceptance tests."""

from grassdt.poly import Poly

# DT F-polynomial of vertex 7 = (p,q) = (3,2) of the 3x4 grid, 20 monomials,
# written over variables y1..y12 (drawn-row-major vertex labels).
DTF_GR49_VERTEX7_MONOMIALS = [
    (),
    (7,),
    (3, 7),
    (7, 8),
    (7, 10),
    (3, 7, 8),
    (3, 7, 10),
    (7, 8, 10),
    (3, 4, 7, 8),
    (3, 6, 7, 10),
    (3, 7, 8, 10),
    (7, 8, 10, 11),
    (3, 4, 7, 8, 10),
    (3, 6, 7, 8, 10),
    (3, 7, 8, 10, 11),
    (3, 4, 6, 7, 8, 10),
    (3, 6, 7, 8, 10, 11),
    (3, 4, 7, 8, 10, 11),
    (3, 4, 6, 7, 8, 10, 11),
    (3, 4, 6, 7, 7, 8, 10, 11),
]


def dtf_gr49_vertex7() -> Poly:
    terms = []
    for monomial in DTF_GR49_VERTEX7_MONOMIALS:
        exps = [0] * 12
        for v in monomial:
            exps[v - 1] += 1
        terms.append((tuple(exps), 1))
    return Poly(12, tuple(terms))


# A3 golden run: applied word, per-step G-matrices (as column tuples) and
# vertex colorings, final F-polynomials and permutation.
A3_WORD = (1, 2, 3, 1, 2, 1)
A3_STEP_G = [
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((-1, 1, 0), (0, 1, 0), (0, 0, 1)),
    ((-1, 1, 0), (-1, 0, 1), (0, 0, 1)),
    ((-1, 1, 0), (-1, 0, 1), (-1, 0, 0)),
    ((0, -1, 1), (-1, 0, 1), (-1, 0, 0)),
    ((0, -1, 1), (0, -1, 0), (-1, 0, 0)),
    ((0, 0, -1), (0, -1, 0), (-1, 0, 0)),
]
A3_STEP_COLORS = [
    ("green", "green", "green"),
    ("red", "green", "green"),
    ("green", "red", "green"),
    ("green", "green", "red"),
    ("red", "green", "red"),
    ("green", "red", "red"),
    ("red", "red", "red"),
]
A3_SIGMA = (3, 2, 1)
A3_FINAL_F = ("1 + y3", "1 + y2 + y2*y3", "1 + y1 + y1*y2 + y1*y2*y3")
A3_DTF = ("1 + y1 + y1*y2 + y1*y2*y3", "1 + y2 + y2*y3", "1 + y3")

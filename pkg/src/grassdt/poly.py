"""Sparse multivariate polynomials over the integers.

Exponent vectors are tuples of nonnegative integers of fixed length; variable
i (1-based) prints as ``y{i}``.  Coefficients are arbitrary-precision Python
integers.  Terms are kept in canonical order: total degree ascending, then
lexicographic on the exponent vector, so equal polynomials have equal
representations and the printed form is stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


def _key(exps: tuple[int, ...]):
    return (sum(exps), exps)


@dataclass(frozen=True)
class Poly:
    num_vars: int
    terms: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[tuple[int, ...], int] = {}
        for exps, coeff in self.terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.num_vars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {self.num_vars}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            merged[exps] = merged.get(exps, 0) + int(coeff)
        cleaned = tuple(
            (exps, c) for exps, c in sorted(merged.items(), key=lambda t: _key(t[0])) if c
        )
        object.__setattr__(self, "terms", cleaned)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "Poly":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: int) -> "Poly":
        return cls(num_vars, (((0,) * num_vars, value),))

    @classmethod
    def one(cls, num_vars: int) -> "Poly":
        return cls.constant(num_vars, 1)

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "Poly":
        """The monomial y_i (1-based)."""
        if not 1 <= i <= num_vars:
            raise ValueError(f"variable index {i} outside 1..{num_vars}")
        exps = tuple(1 if j == i - 1 else 0 for j in range(num_vars))
        return cls(num_vars, ((exps, 1),))

    @classmethod
    def monomial(cls, num_vars: int, exps, coeff: int = 1) -> "Poly":
        return cls(num_vars, ((tuple(exps), coeff),))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == (((0,) * self.num_vars, 1),)

    def constant_term(self) -> int:
        if self.terms and sum(self.terms[0][0]) == 0:
            return self.terms[0][1]
        return 0

    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    def total_degree(self) -> int:
        return sum(self.terms[-1][0]) if self.terms else 0

    def monomials(self) -> tuple[tuple[int, ...], ...]:
        return tuple(exps for exps, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- ring operations ---------------------------------------------------

    def _require_same_ring(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.num_vars != self.num_vars:
            raise ValueError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._require_same_ring(other)
        return Poly(self.num_vars, self.terms + other.terms)

    def __neg__(self) -> "Poly":
        return Poly(self.num_vars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._require_same_ring(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Poly(self.num_vars, tuple(acc.items()))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.one(self.num_vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def div_exact(self, divisor: "Poly") -> "Poly":
        """Return q with q * divisor == self, or raise InexactDivisionError.

        Division proceeds from the trailing (canonically smallest) term; the
        trailing term of a product is the product of trailing terms, so an
        exact quotient is found this way whenever one exists.
        """
        self._require_same_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Poly.zero(self.num_vars)
        max_deg = self.total_degree() - divisor.total_degree()
        d_exps, d_coeff = divisor.terms[0]
        remainder = dict(self.terms)
        quotient: dict[tuple[int, ...], int] = {}
        while remainder:
            exps = min(remainder, key=_key)
            coeff = remainder[exps]
            q_exps = tuple(a - b for a, b in zip(exps, d_exps))
            if any(e < 0 for e in q_exps) or coeff % d_coeff or sum(q_exps) > max_deg:
                raise InexactDivisionError("inexact division")
            q_coeff = coeff // d_coeff
            quotient[q_exps] = q_coeff
            for e2, c2 in divisor.terms:
                e = tuple(a + b for a, b in zip(q_exps, e2))
                c = remainder.get(e, 0) - q_coeff * c2
                if c:
                    remainder[e] = c
                else:
                    remainder.pop(e, None)
        return Poly(self.num_vars, tuple(quotient.items()))

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: monomials like ``y3*y7^2`` joined by " + "."""
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.terms:
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"y{i + 1}")
                elif e > 1:
                    factors.append(f"y{i + 1}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts)

    _TERM_RE = re.compile(r"^(-?\d+)?\s*\*?\s*((?:y\d+(?:\^\d+)?(?:\s*\*\s*)?)*)$")

    @classmethod
    def parse(cls, text: str, num_vars: int) -> "Poly":
        """Parse the ``to_text`` format back into a polynomial."""
        text = text.strip()
        if text == "0":
            return cls.zero(num_vars)
        terms = []
        for raw in text.split("+"):
            raw = raw.strip()
            sign = 1
            if raw.startswith("-") and raw[1:].lstrip().startswith("y"):
                sign, raw = -1, raw[1:].lstrip()
            match = cls._TERM_RE.match(raw)
            if not match or not raw:
                raise ValueError(f"cannot parse term {raw!r}")
            coeff = sign * (int(match.group(1)) if match.group(1) else 1)
            exps = [0] * num_vars
            body = match.group(2)
            if body:
                for factor in body.replace(" ", "").split("*"):
                    if not factor:
                        continue
                    var, _, power = factor.partition("^")
                    i = int(var[1:])
                    if not 1 <= i <= num_vars:
                        raise ValueError(f"variable y{i} outside 1..{num_vars}")
                    exps[i - 1] += int(power) if power else 1
            terms.append((tuple(exps), coeff))
        return cls(num_vars, tuple(terms))

    def __str__(self) -> str:
        return self.to_text()

"""Sparse two-variable Laurent polynomials and the corank-nullity polynomial.

The polynomial of a table g is sum over subsets A of t**(r(S)-r(A)) *
z**(|A|-r(A)). Exponents may be negative for badly behaved tables, so terms
live in Z[t, 1/t, z, 1/z] with exact integer coefficients.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .core import NormalizationError, RankFunctionError, RankTable


class LaurentPoly2:
    """Sparse polynomial in t and z with integer coefficients and integer
    (possibly negative) exponents. Immutable; zero coefficients are never
    stored, so equality is term-map equality."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), c in terms.items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise RankFunctionError(f"non-integer coefficient {c!r}")
                if c != 0:
                    cleaned[(int(i), int(j))] = c
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, t_exp: int, z_exp: int, coeff: int = 1) -> "LaurentPoly2":
        return cls({(t_exp, z_exp): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            s = acc.get(key, 0) + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = acc
        return out

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = acc.get(key, 0) + c1 * c2
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = acc
        return out

    __rmul__ = __mul__

    def shift(self, dt: int, dz: int) -> "LaurentPoly2":
        """Multiply by the monomial t**dt * z**dz."""
        if dt == 0 and dz == 0:
            return self
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {(i + dt, j + dz): c for (i, j), c in self._terms.items()}
        return out

    def min_exponents(self) -> tuple[int, int]:
        """Smallest t and z exponents; (0, 0) for the zero polynomial."""
        if not self._terms:
            return (0, 0)
        return (
            min(i for i, _ in self._terms),
            min(j for _, j in self._terms),
        )

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms sorted by t exponent descending, then z exponent descending."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            parts = []
            if abs(c) != 1 or (i == 0 and j == 0):
                parts.append(str(abs(c)))
            if i != 0:
                parts.append("t" if i == 1 else f"t^{i}")
            if j != 0:
                parts.append("z" if j == 1 else f"z^{j}")
            body = "*".join(parts)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self._terms!r})"


def tutte_subset(g: RankTable) -> LaurentPoly2:
    """Subset expansion: one monomial t**corank * z**nullity per subset."""
    values = g.values
    total = values[g.ground.full_mask]
    acc: dict[tuple[int, int], int] = {}
    for mask in range(g.ground.size):
        v = values[mask]
        key = (total - v, mask.bit_count() - v)
        acc[key] = acc.get(key, 0) + 1
    return LaurentPoly2(acc)


def _pivot_lowest(remaining: int) -> int:
    return (remaining & -remaining).bit_length() - 1


def _pivot_highest(remaining: int) -> int:
    return remaining.bit_length() - 1


#: Pivot strategies pick a bit position from the mask of remaining elements.
PIVOT_STRATEGIES: dict[str, Callable[[int], int]] = {
    "lowest": _pivot_lowest,
    "highest": _pivot_highest,
}


def tutte_recursive(g: RankTable, pivot: str | Callable[[int], int] = "lowest") -> LaurentPoly2:
    """Deletion-contraction evaluation, memoized over minors.

    The recursion at ground R with contracted set C uses rank
    rk(A) = r(A | C) - r(C) and splits on a pivot p:

        f = t**(rk(R) - rk(R - p)) * f(delete p) + z**(1 - rk(p)) * f(contract p)

    The base case is the empty ground set (value 1). Requires r(empty) = 0;
    the result equals tutte_subset(g) for every pivot strategy.
    """
    if g.values[0] != 0:
        raise NormalizationError("deletion-contraction recursion requires r(empty) = 0")
    if isinstance(pivot, str):
        try:
            choose = PIVOT_STRATEGIES[pivot]
        except KeyError:
            raise RankFunctionError(f"unknown pivot strategy {pivot!r}") from None
    else:
        choose = pivot

    values = g.values
    one = LaurentPoly2.one()
    memo: dict[tuple[int, int], LaurentPoly2] = {}

    def run(contracted: int, remaining: int) -> LaurentPoly2:
        if remaining == 0:
            return one
        key = (contracted, remaining)
        cached = memo.get(key)
        if cached is not None:
            return cached
        pos = choose(remaining)
        bit = 1 << pos
        if not remaining & bit:
            raise RankFunctionError("pivot strategy chose an element outside the ground set")
        rest = remaining ^ bit
        rc = values[contracted]
        t_exp = values[contracted | remaining] - values[contracted | rest]
        z_exp = 1 - (values[contracted | bit] - rc)
        result = run(contracted, rest).shift(t_exp, 0) + run(contracted | bit, rest).shift(0, z_exp)
        memo[key] = result
        return result

    return run(0, g.ground.full_mask)


def swap_vars(p: LaurentPoly2) -> LaurentPoly2:
    """Exchange the two exponents of every term (t and z swap roles)."""
    return LaurentPoly2({(j, i): c for (i, j), c in p.terms.items()})

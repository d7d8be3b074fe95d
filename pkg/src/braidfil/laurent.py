"""Exact bivariate Laurent polynomials in (a, z) with integer coefficients.

Polynomials are stored as a mapping {(deg_a, deg_z): coeff} with no zero
coefficients.  All arithmetic is exact; coefficients are Python ints, so
there is no overflow.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping


class LaurentPoly2:
    """A Laurent polynomial in two variables a, z over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (da, dz), c in terms.items():
                if c:
                    clean[(int(da), int(dz))] = clean.get((da, dz), 0) + int(c)
        self._terms = {k: v for k, v in clean.items() if v}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly2":
        return LaurentPoly2()

    @staticmethod
    def one() -> "LaurentPoly2":
        return LaurentPoly2({(0, 0): 1})

    @staticmethod
    def term(coeff: int, deg_a: int = 0, deg_z: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(deg_a, deg_z): coeff})

    @staticmethod
    def a(power: int = 1) -> "LaurentPoly2":
        return LaurentPoly2({(power, 0): 1})

    @staticmethod
    def z(power: int = 1) -> "LaurentPoly2":
        return LaurentPoly2({(0, power): 1})

    # -- basic protocol ----------------------------------------------------

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.term(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.text()!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.term(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.term(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly2":
        return LaurentPoly2.term(other) - self

    def __mul__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (da1, dz1), c1 in self._terms.items():
            for (da2, dz2), c2 in other._terms.items():
                k = (da1 + da2, dz1 + dz2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            mono = self.as_monomial()
            if mono is None:
                raise ValueError("negative power of a non-monomial")
            (da, dz), c = mono
            if abs(c) != 1:
                raise ValueError("negative power needs a unit coefficient")
            return LaurentPoly2({(da * n, dz * n): c ** (-n) if c == -1 else 1})
        acc = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def shift(self, deg_a: int = 0, deg_z: int = 0) -> "LaurentPoly2":
        """Multiply by the monomial a^deg_a z^deg_z."""
        return LaurentPoly2(
            {(da + deg_a, dz + deg_z): c for (da, dz), c in self._terms.items()}
        )

    def as_monomial(self) -> tuple[tuple[int, int], int] | None:
        if len(self._terms) != 1:
            return None
        [(k, c)] = self._terms.items()
        return k, c

    def subs_a_inverse(self) -> "LaurentPoly2":
        """The image under a -> a^-1 (mirror transform on closures)."""
        return LaurentPoly2({(-da, dz): c for (da, dz), c in self._terms.items()})

    # -- degree queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def min_a_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no a-degree")
        return min(da for da, _ in self._terms)

    def max_a_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no a-degree")
        return max(da for da, _ in self._terms)

    def coefficient_a(self, deg_a: int) -> "LaurentPoly2":
        """The z-polynomial multiplying a^deg_a."""
        return LaurentPoly2(
            {(0, dz): c for (da, dz), c in self._terms.items() if da == deg_a}
        )

    def z_degrees(self) -> set[int]:
        return {dz for _, dz in self._terms}

    # -- serialization -----------------------------------------------------

    def triples(self) -> list[tuple[int, int, int]]:
        """Sorted (deg_a, deg_z, coeff) triples."""
        return sorted((da, dz, c) for (da, dz), c in self._terms.items())

    @staticmethod
    def from_triples(triples: Iterable[Iterable[int]]) -> "LaurentPoly2":
        return LaurentPoly2({(int(da), int(dz)): int(c) for da, dz, c in triples})

    def to_json(self) -> str:
        return json.dumps(self.triples())

    @staticmethod
    def from_json(text: str) -> "LaurentPoly2":
        return LaurentPoly2.from_triples(json.loads(text))

    def text(self) -> str:
        """Human-readable form like '-a^-4 + a^-2 z^2 + 2 a^-2'."""
        if not self._terms:
            return "0"
        parts = []
        for (da, dz, c) in self.triples():
            factors = []
            if da:
                factors.append("a" if da == 1 else f"a^{da}")
            if dz:
                factors.append("z" if dz == 1 else f"z^{dz}")
            body = " ".join(factors)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)} {body}"
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


#: The HOMFLY unlink factor (a - a^-1)/z under the calibrated convention.
def unlink_factor_homfly() -> LaurentPoly2:
    return LaurentPoly2({(1, -1): 1, (-1, -1): -1})


#: The Dubrovnik unlink factor (a - a^-1)/z + 1.
def unlink_factor_dubrovnik() -> LaurentPoly2:
    return LaurentPoly2({(1, -1): 1, (-1, -1): -1, (0, 0): 1})

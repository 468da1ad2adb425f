"""Integer polynomials in the Lefschetz class L, plus the cell-count
polynomials of flag varieties.

A variety with an affine paving has motivic class sum(L^(dim of cell));
for G/P the cells are indexed by minimal coset representatives and the
dimension of a cell is the length of its word, so the class is the
length generating polynomial of W^P.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .weyl import WeylGroup

PairList = list[list[int]]


class LPolynomial:
    """Sparse polynomial in L with integer coefficients; zero coefficients
    are never stored."""

    __slots__ = ("_coeffs",)

    def __init__(self, data: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        acc: dict[int, int] = {}
        items = data.items() if isinstance(data, Mapping) else (data or ())
        for deg, c in items:
            if not isinstance(deg, int) or not isinstance(c, int):
                raise ValueError("degrees and coefficients must be integers")
            if deg < 0:
                raise ValueError("negative degree")
            acc[deg] = acc.get(deg, 0) + c
        self._coeffs = {d: c for d, c in sorted(acc.items()) if c != 0}

    @classmethod
    def zero(cls) -> "LPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LPolynomial":
        return cls({0: 1})

    @classmethod
    def lefschetz(cls, power: int = 1) -> "LPolynomial":
        return cls({power: 1})

    @classmethod
    def from_pairs(cls, pairs: PairList) -> "LPolynomial":
        return cls((int(d), int(c)) for d, c in pairs)

    def to_pairs(self) -> PairList:
        return [[d, c] for d, c in self._coeffs.items()]

    def coefficient(self, deg: int) -> int:
        return self._coeffs.get(deg, 0)

    def coefficients(self) -> dict[int, int]:
        return dict(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int | None:
        if not self._coeffs:
            return None
        return max(self._coeffs)

    def is_palindromic(self) -> bool:
        d = self.degree()
        if d is None:
            return True
        return all(self.coefficient(k) == self.coefficient(d - k) for k in range(d + 1))

    def evaluate(self, q: int) -> int:
        if not isinstance(q, int):
            raise ValueError("evaluation point must be an integer")
        return sum(c * q**d for d, c in self._coeffs.items())

    def _coerce(self, other) -> "LPolynomial | None":
        if isinstance(other, LPolynomial):
            return other
        if isinstance(other, int):
            return LPolynomial({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._coeffs)
        for d, c in o._coeffs.items():
            out[d] = out.get(d, 0) + c
        return LPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LPolynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in o._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return LPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = LPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self._coeffs.items():
            mag = abs(c)
            if d == 0:
                body = str(mag)
            elif d == 1:
                body = "L" if mag == 1 else f"{mag}*L"
            else:
                body = f"L^{d}" if mag == 1 else f"{mag}*L^{d}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LPolynomial({self.to_pairs()})"


L = LPolynomial.lefschetz()


def poincare_polynomial(group: WeylGroup, parabolic: Iterable[int] = ()) -> LPolynomial:
    """Class of G/P as a polynomial in L: one cell per element of W^P,
    of dimension the element's length."""
    return LPolynomial((w.length, 1) for w in group.min_coset_reps(parabolic))


def subgroup_length_poly(group: WeylGroup, parabolic: Iterable[int]) -> LPolynomial:
    """Length generating polynomial of the parabolic subgroup W_P itself."""
    return LPolynomial((w.length, 1) for w in group.parabolic_elements(parabolic))


def projective_bundle_poly(base: LPolynomial, rank: int) -> LPolynomial:
    """Class of a projectivized rank-r bundle: base * (1 + L + ... + L^(r-1))."""
    if not isinstance(rank, int) or rank < 1:
        raise ValueError("bundle rank must be a positive integer")
    return base * LPolynomial((k, 1) for k in range(rank))

"""Root systems from Cartan matrices, in exact integer arithmetic.

The sign convention for Cartan entries is fixed once, here, and every
pairing in the package routes through this module:

    a[i][j] = <alpha_j, alpha_i_check>

so the simple reflection acts by s_i(alpha_j) = alpha_j - a[i][j] alpha_i.
Node indices are 1-based on the public surface (matching Dynkin diagram
labels and reduced words elsewhere in the package); tuple storage is
0-based internally.  For type G2 node 1 is the long root.

Roots are plain integer tuples holding coordinates in the simple-root
basis.  All derived data (symmetrizer, bilinear form, coroots) stays in
integers or exact fractions; nothing here floats.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import CapExceededError, UnknownTypeError

Matrix = tuple[tuple[int, ...], ...]
Root = tuple[int, ...]

DEFAULT_ROOT_CAP = 100_000

_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
        for r in range(n)
    )


def matvec(m: Matrix, v: Root) -> Root:
    n = len(v)
    return tuple(sum(m[r][k] * v[k] for k in range(n)) for r in range(n))


@dataclass(frozen=True)
class CartanMatrix:
    """Square integer matrix with diagonal 2, nonpositive off-diagonal
    entries, and zeros placed symmetrically."""

    entries: Matrix

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValueError("empty Cartan matrix")
        for row in self.entries:
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError("Cartan entries must be integers")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise ValueError("Cartan diagonal entries must equal 2")
            for j in range(n):
                if i != j and self.entries[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0):
                    raise ValueError("Cartan zeros must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """<alpha_j, alpha_i_check> for 1-based node indices i, j."""
        return self.entries[i - 1][j - 1]

    @cached_property
    def symmetrizer(self) -> tuple[int, ...]:
        """Positive integers d with d_i a[i][j] = d_j a[j][i], scaled to be
        coprime.  Exists exactly when the matrix is symmetrizable; the
        named families always are, arbitrary literals may not be."""
        n = self.rank
        a = self.entries
        d: list[Fraction | None] = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if i == j or a[i][j] == 0:
                        continue
                    val = d[i] * Fraction(a[i][j], a[j][i])
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        raise ValueError("Cartan matrix is not symmetrizable")
        scale = math.lcm(*(f.denominator for f in d))
        ints = [int(f * scale) for f in d]
        g = math.gcd(*ints)
        out = tuple(x // g for x in ints)
        for i in range(n):
            for j in range(n):
                if out[i] * a[i][j] != out[j] * a[j][i]:
                    raise ValueError("Cartan matrix is not symmetrizable")
        return out

    def bilinear(self, v: Root, w: Root) -> int:
        """Symmetric form with (alpha_i, alpha_j) = d_i a[i][j]."""
        d = self.symmetrizer
        a = self.entries
        n = self.rank
        return sum(
            d[i] * a[i][j] * v[i] * w[j] for i in range(n) for j in range(n)
        )


def _blank(n: int) -> list[list[int]]:
    return [[2 if i == j else 0 for j in range(n)] for i in range(n)]


def _set_edge(m: list[list[int]], i: int, j: int, aij: int = -1, aji: int = -1) -> None:
    # 1-based nodes; aij is the row-i, column-j entry <alpha_j, alpha_i_check>.
    m[i - 1][j - 1] = aij
    m[j - 1][i - 1] = aji


def _build_named(letter: str, n: int) -> list[list[int]]:
    m = _blank(n)
    if letter == "A":
        for i in range(1, n):
            _set_edge(m, i, i + 1)
        return m
    if letter in ("B", "C"):
        if n < 2:
            raise UnknownTypeError(f"type {letter}{n} is not supported (rank must be >= 2)")
        for i in range(1, n - 1):
            _set_edge(m, i, i + 1)
        if letter == "B":
            # node n is the short root
            _set_edge(m, n - 1, n, aij=-1, aji=-2)
        else:
            _set_edge(m, n - 1, n, aij=-2, aji=-1)
        return m
    if letter == "D":
        if n < 3:
            raise UnknownTypeError(f"type D{n} is not supported (rank must be >= 3)")
        for i in range(1, n - 1):
            _set_edge(m, i, i + 1)
        _set_edge(m, n - 2, n)
        return m
    if letter == "E":
        if n not in (6, 7, 8):
            raise UnknownTypeError(f"type E{n} is not supported (rank must be 6, 7 or 8)")
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            _set_edge(m, a, b)
        _set_edge(m, 2, 4)
        return m
    if letter == "F":
        if n != 4:
            raise UnknownTypeError(f"type F{n} is not supported (rank must be 4)")
        _set_edge(m, 1, 2)
        _set_edge(m, 2, 3, aij=-1, aji=-2)  # nodes 3, 4 short
        _set_edge(m, 3, 4)
        return m
    if letter == "G":
        if n != 2:
            raise UnknownTypeError(f"type G{n} is not supported (rank must be 2)")
        # node 1 long, node 2 short
        _set_edge(m, 1, 2, aij=-1, aji=-3)
        return m
    raise UnknownTypeError(f"unknown type letter {letter!r}")


def parse_cartan(name: str) -> CartanMatrix:
    """Parse a type name like ``"G2"`` or a JSON matrix literal like
    ``"[[2,0],[0,2]]"`` into a validated CartanMatrix."""
    name = name.strip()
    match = _TYPE_RE.match(name)
    if match:
        letter, digits = match.group(1), int(match.group(2))
        if digits < 1:
            raise UnknownTypeError(f"rank must be positive in {name!r}")
        rows = _build_named(letter, digits)
        return CartanMatrix(tuple(tuple(r) for r in rows))
    if name.startswith("["):
        try:
            data = json.loads(name)
        except json.JSONDecodeError as exc:
            raise UnknownTypeError(f"bad matrix literal: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise UnknownTypeError("matrix literal must be a list of rows")
        try:
            return CartanMatrix(tuple(tuple(x for x in row) for row in data))
        except ValueError as exc:
            raise UnknownTypeError(str(exc)) from None
    raise UnknownTypeError(
        f"unknown type name {name!r}: expected a letter A-G with a rank, or a matrix literal"
    )


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of a finite type, sorted by (height, coordinates)."""

    cartan: CartanMatrix
    positive_roots: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @cached_property
    def _root_set(self) -> frozenset[Root]:
        neg = tuple(tuple(-x for x in r) for r in self.positive_roots)
        return frozenset(self.positive_roots) | frozenset(neg)

    def simple_root(self, i: int) -> Root:
        self._check_node(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def is_root(self, v: Root) -> bool:
        return tuple(v) in self._root_set

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range 1..{self.rank}")

    def reflect(self, i: int, v: Root) -> Root:
        """s_i(v) = v - <v, alpha_i_check> alpha_i for any lattice vector v."""
        self._check_node(i)
        if len(v) != self.rank:
            raise ValueError("vector length does not match the rank")
        c = sum(self.cartan.entries[i - 1][j] * v[j] for j in range(self.rank))
        return tuple(v[k] - c if k == i - 1 else v[k] for k in range(self.rank))

    def simple_reflection_matrix(self, i: int) -> Matrix:
        self._check_node(i)
        n = self.rank
        a = self.cartan.entries
        return tuple(
            tuple((1 if r == c else 0) - (a[i - 1][c] if r == i - 1 else 0) for c in range(n))
            for r in range(n)
        )

    def norm2(self, beta: Root) -> int:
        return self.cartan.bilinear(beta, beta)

    def coroot_coordinates(self, beta: Root) -> tuple[int, ...]:
        """Coordinates of beta_check in the simple coroot basis.

        From beta = sum b_j alpha_j one gets beta_check = sum c_j alpha_j_check
        with c_j = b_j (alpha_j, alpha_j) / (beta, beta); integrality is
        automatic for genuine roots and asserted here.
        """
        beta = tuple(beta)
        if not self.is_root(beta):
            raise ValueError(f"{beta} is not a root of this system")
        d = self.cartan.symmetrizer
        nb = self.norm2(beta)
        coords = []
        for j in range(self.rank):
            num = beta[j] * 2 * d[j]
            if num % nb:
                raise ValueError("coroot is not integral; invalid root data")
            coords.append(num // nb)
        return tuple(coords)

    def coroot_pairing(self, v: Root, beta: Root) -> int:
        """<v, beta_check> = 2 (v, beta) / (beta, beta) for a root beta."""
        beta = tuple(beta)
        if not self.is_root(beta):
            raise ValueError(f"{beta} is not a root of this system")
        if len(v) != self.rank:
            raise ValueError("vector length does not match the rank")
        cc = self.coroot_coordinates(beta)
        # <alpha_j, beta_check> expands through the Cartan pairings of the
        # simple coroots: <alpha_j, alpha_i_check> = a[i][j].
        a = self.cartan.entries
        return sum(v[j] * sum(cc[i] * a[i][j] for i in range(self.rank)) for j in range(self.rank))

    def reflection_matrix(self, beta: Root) -> Matrix:
        """Matrix of s_beta on the root lattice, columns are images of the
        simple roots: alpha_j - <alpha_j, beta_check> beta."""
        beta = tuple(beta)
        if not self.is_root(beta):
            raise ValueError(f"{beta} is not a root of this system")
        n = self.rank
        pair = [self.coroot_pairing(self.simple_root(j + 1), beta) for j in range(n)]
        return tuple(
            tuple((1 if r == c else 0) - pair[c] * beta[r] for c in range(n))
            for r in range(n)
        )


def generate_root_system(cartan: CartanMatrix, cap: int = DEFAULT_ROOT_CAP) -> RootSystem:
    """Close the simple roots under simple reflections, keeping the positive
    chamber.  Raises CapExceededError when more than ``cap`` positive roots
    appear (non-finite literals never terminate otherwise)."""
    if cap < 1:
        raise ValueError("cap must be positive")
    n = cartan.rank
    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen: set[Root] = set(simples)
    queue: list[Root] = list(simples)
    a = cartan.entries
    while queue:
        v = queue.pop()
        for i in range(n):
            c = sum(a[i][j] * v[j] for j in range(n))
            w = tuple(v[k] - c if k == i else v[k] for k in range(n))
            if w not in seen and all(x >= 0 for x in w):
                seen.add(w)
                if len(seen) > cap:
                    raise CapExceededError(
                        f"positive root generation exceeded cap {cap}"
                    )
                queue.append(w)
    ordered = sorted(seen, key=lambda r: (sum(r), r))
    return RootSystem(cartan, tuple(ordered))


def root_system(name: str, cap: int = DEFAULT_ROOT_CAP) -> RootSystem:
    """Convenience: parse a type string and generate its root system."""
    return generate_root_system(parse_cartan(name), cap=cap)

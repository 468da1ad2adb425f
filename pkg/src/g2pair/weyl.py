"""Weyl groups as integer matrices acting on the root lattice.

Elements carry a canonical reduced word: the lexicographically smallest
one, obtained by greedy extraction of the smallest left descent.  The
enumeration below builds those words while it walks the group, layer by
layer: an element first reached at length k+1 has all its left descents
in layer k, so the smallest generator g with g*w already known gives the
canonical first letter, and the rest is the (inductively canonical) word
of g*w.

Matrices are the sole identity of an element; words are derived.  The
group is enumerated up front, so products and inverses are lattice
lookups rather than fresh reductions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import CapExceededError
from .rootsys import Matrix, RootSystem, identity_matrix, matmul, matvec

DEFAULT_GROUP_CAP = 1_000_000

Word = tuple[int, ...]


def word_name(word: Word) -> str:
    """Render a reduced word: () -> "e", (1, 2) -> "s1*s2"."""
    if not word:
        return "e"
    return "*".join(f"s{i}" for i in word)


@dataclass(frozen=True)
class WeylElement:
    word: Word
    matrix: Matrix
    group: "WeylGroup" = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def name(self) -> str:
        return word_name(self.word)

    def __str__(self) -> str:
        return self.name

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.group is not other.group:
            raise ValueError("cannot multiply elements of different groups")
        return self.group.element_by_matrix(matmul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        inv = self.group.identity
        for i in reversed(self.word):
            inv = inv * self.group.generator(i)
        return inv

    def order(self) -> int:
        k, cur = 1, self
        while cur.word:
            cur = cur * self
            k += 1
        return k

    def apply(self, v: tuple[int, ...]) -> tuple[int, ...]:
        return matvec(self.matrix, v)

    def has_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), i.e. w sends alpha_i to a negative root; that is
        the i-th matrix column read off directly."""
        col = i - 1
        return all(row[col] <= 0 for row in self.matrix)


@dataclass(frozen=True)
class LengthBijection:
    """Pairing of two coset-representative lists by sorted position.

    ``pairs`` is None when the length multisets disagree; the two length
    tuples stay available either way so a failure names the mismatch.
    """

    left: tuple[WeylElement, ...]
    right: tuple[WeylElement, ...]
    lengths_left: tuple[int, ...]
    lengths_right: tuple[int, ...]
    pairs: tuple[tuple[WeylElement, WeylElement], ...] | None

    @property
    def ok(self) -> bool:
        return self.pairs is not None


class WeylGroup:
    """Finite Weyl group of a root system, fully enumerated.

    Elements are sorted by (length, word); enumeration stops with
    CapExceededError if more than ``cap`` elements appear.
    """

    def __init__(self, root_system: RootSystem, cap: int = DEFAULT_GROUP_CAP):
        if cap < 1:
            raise ValueError("cap must be positive")
        self.root_system = root_system
        rank = root_system.rank
        gens = [root_system.simple_reflection_matrix(i) for i in range(1, rank + 1)]
        words: dict[Matrix, Word] = {identity_matrix(rank): ()}
        frontier: list[Matrix] = list(words)
        while frontier:
            discovered: set[Matrix] = set()
            for m in frontier:
                for g in gens:
                    t = matmul(g, m)
                    if t not in words:
                        discovered.add(t)
            if len(words) + len(discovered) > cap:
                raise CapExceededError(f"Weyl group enumeration exceeded cap {cap}")
            layer: dict[Matrix, Word] = {}
            for t in discovered:
                for i in range(1, rank + 1):
                    shorter = words.get(matmul(gens[i - 1], t))
                    if shorter is not None:
                        layer[t] = (i,) + shorter
                        break
                else:
                    raise AssertionError("new element with no descent")
            words.update(layer)
            frontier = list(layer)
        elements = [WeylElement(word=w, matrix=m, group=self) for m, w in words.items()]
        elements.sort(key=lambda e: (e.length, e.word))
        self.elements: tuple[WeylElement, ...] = tuple(elements)
        self._by_matrix = {e.matrix: e for e in self.elements}
        self.identity = self.elements[0]
        if len(self.elements) > 1 and self.elements[-2].length == self.elements[-1].length:
            raise AssertionError("longest element is not unique; group is not finite Weyl")

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"WeylGroup(rank {self.rank}, order {self.order})"

    def generator(self, i: int) -> WeylElement:
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range 1..{self.rank}")
        return self._by_matrix[self.root_system.simple_reflection_matrix(i)]

    def element_by_matrix(self, m: Matrix) -> WeylElement:
        try:
            return self._by_matrix[m]
        except KeyError:
            raise ValueError("matrix does not belong to this group") from None

    def from_word(self, letters: Iterable[int]) -> WeylElement:
        """Canonical element for an arbitrary (not necessarily reduced) word."""
        m = identity_matrix(self.rank)
        for i in letters:
            if not 1 <= i <= self.rank:
                raise ValueError(f"letter {i} out of range 1..{self.rank}")
            m = matmul(m, self.root_system.simple_reflection_matrix(i))
        return self._by_matrix[m]

    def inversion_length(self, w: WeylElement) -> int:
        """Number of positive roots sent negative; equals len(w.word) and is
        kept as the independent check of that fact."""
        count = 0
        for beta in self.root_system.positive_roots:
            image = matvec(w.matrix, beta)
            if all(x <= 0 for x in image):
                count += 1
        return count

    def normalize_parabolic(self, nodes: Iterable[int]) -> tuple[int, ...]:
        out = sorted(set(nodes))
        for i in out:
            if not isinstance(i, int) or not 1 <= i <= self.rank:
                raise ValueError(f"parabolic node {i} out of range 1..{self.rank}")
        return tuple(out)

    def min_coset_reps(self, nodes: Iterable[int]) -> tuple[WeylElement, ...]:
        """Shortest representatives of the cosets w W_P, P generated by
        ``nodes``: exactly the elements with no right descent in P.
        Sorted by (length, word) like everything else."""
        p = self.normalize_parabolic(nodes)
        return tuple(
            w for w in self.elements if not any(w.has_right_descent(i) for i in p)
        )

    def parabolic_elements(self, nodes: Iterable[int]) -> tuple[WeylElement, ...]:
        """Elements of the standard parabolic subgroup W_P.  Canonical words
        of W_P elements only use letters of P, so membership is a word test."""
        p = set(self.normalize_parabolic(nodes))
        return tuple(w for w in self.elements if set(w.word) <= p)

    def length_bijection(self, left_nodes: Iterable[int], right_nodes: Iterable[int]) -> LengthBijection:
        left = self.min_coset_reps(left_nodes)
        right = self.min_coset_reps(right_nodes)
        ll = tuple(w.length for w in left)
        lr = tuple(w.length for w in right)
        pairs = tuple(zip(left, right)) if ll == lr else None
        return LengthBijection(left=left, right=right, lengths_left=ll, lengths_right=lr, pairs=pairs)

    def longest_element(self) -> WeylElement:
        return self.elements[-1]

    def reflections(self) -> dict[tuple[int, ...], WeylElement]:
        """Map positive root -> the reflection it defines."""
        out = {}
        for beta in self.root_system.positive_roots:
            out[beta] = self._by_matrix[self.root_system.reflection_matrix(beta)]
        return out


def enumerate_group(root_system: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> WeylGroup:
    return WeylGroup(root_system, cap=cap)

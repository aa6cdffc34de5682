"""Permutations of [n] in one-line notation, reduced words and compositions.

Conventions used throughout the package:

* windows are 1-indexed: ``Permutation((2, 1, 5, 4, 3))`` sends 1 -> 2, 2 -> 1, ...
* composition is ``(p * q)(i) = p(q(i))``, so ``s_a * w`` swaps the values
  ``a`` and ``a + 1`` in the window of ``w``, while ``w * s_a`` swaps positions.
* a word ``(a_1, ..., a_p)`` denotes the product ``s_{a_1} * ... * s_{a_p}``.
* compositions are plain tuples of non-negative ints, always padded to n parts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Word = tuple[int, ...]
Composition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation window: {self.window!r}")
        object.__setattr__(self, "window", w)

    # constructors

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a simple transposition of S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def from_word(cls, word, n: int) -> Permutation:
        """The product s_{a_1} ... s_{a_p} in S_n."""
        w = list(range(1, n + 1))
        # right multiplication by s_a swaps positions a, a+1; read the word left to right
        for a in word:
            if not 1 <= a < n:
                raise ValueError(f"letter {a} out of range for S_{n}")
            w[a - 1], w[a] = w[a], w[a - 1]
        return cls(tuple(w))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``"2,1,5,4,3"`` (or ``"21543"`` when n <= 9)."""
        text = text.strip().strip("[]()")
        if not text:
            raise ValueError("empty permutation")
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
            return cls(tuple(int(p) for p in parts))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        if len(text) > 9:
            raise ValueError("digit-string windows are only accepted for n <= 9; use commas")
        return cls(tuple(int(c) for c in text))

    # basic queries

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise ValueError("permutations live in different symmetric groups")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, wi in enumerate(self.window, start=1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return all(wi == i for i, wi in enumerate(self.window, start=1))

    def right_descents(self) -> list[int]:
        """Positions i with w_i > w_{i+1}, i.e. l(w s_i) < l(w)."""
        w = self.window
        return [i for i in range(1, self.n) if w[i - 1] > w[i]]

    def left_descents(self) -> list[int]:
        """Values a with a+1 left of a in the window, i.e. l(s_a w) < l(w)."""
        return self.inverse().right_descents()

    def __str__(self) -> str:
        if self.n <= 9:
            return "[" + "".join(map(str, self.window)) + "]"
        return "[" + ",".join(map(str, self.window)) + "]"

    def to_text(self) -> str:
        return ",".join(map(str, self.window))


def length(w: Permutation) -> int:
    """Number of inversions of w."""
    win = w.window
    return sum(1 for i, j in itertools.combinations(range(len(win)), 2) if win[i] > win[j])


@lru_cache(maxsize=None)
def _reduced_words(window: tuple[int, ...]) -> frozenset[Word]:
    w = Permutation(window)
    if w.is_identity():
        return frozenset({()})
    out = set()
    for a in w.left_descents():
        rest = Permutation.simple(a, w.n) * w
        out.update((a,) + tail for tail in _reduced_words(rest.window))
    return frozenset(out)


def reduced_words(w: Permutation) -> frozenset[Word]:
    """All reduced words R(w), peeling off left descents recursively."""
    return _reduced_words(w.window)


def is_reduced_word(word, w: Permutation) -> bool:
    return len(word) == length(w) and Permutation.from_word(word, w.n) == w


def reduced_expression(pi: Permutation) -> Word:
    """Lexicographically smallest reduced word for pi."""
    word = []
    w = pi
    # greedy on the smallest left descent gives the lex-min word
    while not w.is_identity():
        a = min(w.left_descents())
        word.append(a)
        w = Permutation.simple(a, w.n) * w
    return tuple(word)


def all_permutations(n: int):
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


# compositions


def pad(a, n: int) -> Composition:
    a = tuple(a)
    if len(a) > n:
        if any(a[n:]):
            raise ValueError(f"composition {a} has more than {n} non-zero parts")
        return a[:n]
    return a + (0,) * (n - len(a))


def is_partition(a) -> bool:
    return all(x >= y for x, y in zip(a, a[1:])) and all(x >= 0 for x in a)


def sort_desc(a) -> Composition:
    return tuple(sorted(a, reverse=True))


def push_action(pi: Permutation, v) -> Composition:
    """Coordinate permutation: result[pi(i)] = v[i]."""
    if len(v) != pi.n:
        raise ValueError("composition length must match the permutation size")
    out = [0] * pi.n
    for i, vi in enumerate(v, start=1):
        out[pi(i) - 1] = vi
    return tuple(out)


def shortest_sorting_perm(a) -> Permutation:
    """The shortest pi with push_action(pi, sort_desc(a)) == a.

    A stable descending sort records where each sorted entry came from; keeping
    equal parts in their original order is what makes the sorter shortest.
    """
    order = sorted(range(len(a)), key=lambda k: -a[k])
    return Permutation(tuple(k + 1 for k in order))


def simple_root(i: int, n: int) -> Composition:
    """alpha_i = e_i - e_{i+1}."""
    v = [0] * n
    v[i - 1] = 1
    v[i] = -1
    return tuple(v)


def word_to_text(word) -> str:
    """``(2, 1, 3)`` -> ``"s2 s1 s3"``; the empty word renders as ``"id"``."""
    return " ".join(f"s{a}" for a in word) if word else "id"

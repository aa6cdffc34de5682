"""Reduced pipe dreams: tracing, weights, enumeration and chute moves."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .compatible import compatible_sequences
from .perm import Permutation, length, reduced_words
from .poly import Polynomial

Cell = tuple[int, int]


def canonical_order(crosses) -> list[Cell]:
    """Rows top to bottom, right to left within a row."""
    return sorted(crosses, key=lambda c: (c[0], -c[1]))


@dataclass(frozen=True)
class PipeDream:
    """Cross positions (row, column), 1-indexed from the top-left.

    Only boxes with ``row + column <= n`` may hold crosses; every other box
    of the n x n grid is an elbow.
    """

    n: int
    crosses: frozenset[Cell]

    def __post_init__(self):
        crosses = frozenset((int(i), int(j)) for i, j in self.crosses)
        for i, j in crosses:
            if i < 1 or j < 1 or i + j > self.n:
                raise ValueError(f"cross at {(i, j)} lies below the anti-diagonal for n={self.n}")
        object.__setattr__(self, "crosses", crosses)

    @classmethod
    def empty(cls, n: int) -> PipeDream:
        return cls(n, frozenset())

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.crosses

    def __len__(self):
        return len(self.crosses)

    def key(self) -> tuple[Cell, ...]:
        return tuple(canonical_order(self.crosses))

    def __lt__(self, other: PipeDream) -> bool:
        return (self.n, self.key()) < (other.n, other.key())

    def row(self, i: int) -> list[int]:
        """Columns of the crosses in row i, left to right."""
        return sorted(j for r, j in self.crosses if r == i)

    def weight(self) -> tuple[int, ...]:
        return weight(self)

    def permutation(self) -> Permutation:
        return trace_pipes(self)

    def moved(self, remove: Cell, add: Cell) -> PipeDream:
        return PipeDream(self.n, (self.crosses - {remove}) | {add})

    # serialisation

    def to_json(self) -> dict:
        return {"n": self.n, "crosses": [list(c) for c in self.key()]}

    @classmethod
    def from_json(cls, data) -> PipeDream:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), frozenset(tuple(c) for c in data["crosses"]))

    def key_text(self) -> str:
        return "[" + ",".join(f"[{i},{j}]" for i, j in self.key()) + "]"

    def ascii(self) -> str:
        """Rows top-down, ``+`` for a cross and ``.`` for an elbow, through the anti-diagonal."""
        lines = []
        for i in range(1, self.n + 1):
            lines.append("".join("+" if (i, j) in self.crosses else "." for j in range(1, self.n - i + 2)))
        return "\n".join(lines)

    def __str__(self):
        return self.ascii()


def trace_pipes(D: PipeDream) -> Permutation:
    """Follow each pipe from the left edge of row i to the top edge; w_i is its exit column."""
    n = D.n
    window = []
    for start in range(1, n + 1):
        r, c, heading = start, 1, "E"
        while r >= 1:
            if (r, c) not in D.crosses:
                heading = "N" if heading == "E" else "E"
            if heading == "E":
                c += 1
            else:
                r -= 1
            if c > n:
                raise AssertionError(f"pipe from row {start} left the grid on the right")
        window.append(c)
    if sorted(window) != list(range(1, n + 1)):
        raise AssertionError(f"traced window {window} is not a permutation")
    return Permutation(tuple(window))


def weight(D: PipeDream) -> tuple[int, ...]:
    v = [0] * D.n
    for i, _ in D.crosses:
        v[i - 1] += 1
    return tuple(v)


def is_reduced(D: PipeDream) -> bool:
    return len(D.crosses) == length(trace_pipes(D))


def word_of(D: PipeDream) -> tuple[int, ...]:
    """Letters i + j - 1 of the crosses in canonical order."""
    return tuple(i + j - 1 for i, j in canonical_order(D.crosses))


@lru_cache(maxsize=None)
def _enumerate_rp(window: tuple[int, ...]) -> frozenset[PipeDream]:
    w = Permutation(window)
    out = set()
    for a in reduced_words(w):
        for beta in compatible_sequences(a):
            out.add(PipeDream(w.n, frozenset((b, x - b + 1) for x, b in zip(a, beta))))
    return frozenset(out)


def enumerate_rp(w: Permutation) -> frozenset[PipeDream]:
    """RP(w), built from (reduced word, compatible sequence) pairs."""
    return _enumerate_rp(w.window)


def enumerate_rp_bruteforce(w: Permutation) -> frozenset[PipeDream]:
    """RP(w) by testing every cross set of size l(w); only sensible for n <= 5."""
    n = w.n
    cells = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]
    ell = length(w)
    out = set()
    for subset in itertools.combinations(cells, ell):
        D = PipeDream(n, frozenset(subset))
        if trace_pipes(D) == w:
            out.add(D)
    return frozenset(out)


def schubert_pipedreams(w: Permutation) -> Polynomial:
    return Polynomial.from_weights((weight(D) for D in enumerate_rp(w)), w.n)


def chute_move(D: PipeDream, cell: Cell) -> PipeDream | None:
    """The unrestricted chute move of the cross at ``cell``, if one is defined.

    The cross at (i, j) jumps to (i+1, j-m) when (i+1, j) is an elbow, the
    boxes (i, j-k), (i+1, j-k) are crosses for 0 < k < m, and (i, j-m),
    (i+1, j-m) are both elbows.
    """
    i, j = cell
    if cell not in D.crosses or (i + 1, j) in D.crosses:
        return None
    for k in itertools.count(1):
        if j - k < 1:
            return None
        up, down = (i, j - k) in D.crosses, (i + 1, j - k) in D.crosses
        if up and down:
            continue
        if up or down:
            return None
        return D.moved(cell, (i + 1, j - k))


def general_chute_moves(D: PipeDream) -> frozenset[PipeDream]:
    """Every chute move applicable to D, with no pairing restriction."""
    out = set()
    for cell in D.crosses:
        E = chute_move(D, cell)
        if E is not None:
            out.add(E)
    return frozenset(out)


def chute_components(w: Permutation) -> list[frozenset[PipeDream]]:
    """Connected components of RP(w) under chute moves and their inverses."""
    verts = enumerate_rp(w)
    adj = {D: set() for D in verts}
    for D in verts:
        for E in general_chute_moves(D):
            adj[D].add(E)
            adj.setdefault(E, set()).add(D)
    seen, comps = set(), []
    for D in sorted(verts):
        if D in seen:
            continue
        stack, comp = [D], set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps

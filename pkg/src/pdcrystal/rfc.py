"""Reduced factorizations with cutoff (RFCs), their crystal operators, and the
bijections linking pipe dreams, compatible sequences and RFCs.

Blocks are stored by index: ``blocks[0]`` is block 1. The conventional display
runs right to left, ``(r^{n-1}) ... (r^2)(r^1)``, and the reading word is the
concatenation in display order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache

from .compatible import CompatibleSequence, compatible_sequences, is_compatible
from .perm import Permutation, length, reduced_words
from .pipedream import PipeDream, canonical_order
from .poly import Polynomial

__all__ = [
    "RFC", "BlockPairing", "parse_rfc", "to_text", "compatible_sequences", "is_compatible", "CompatibleSequence",
    "schubert_compatible", "enumerate_rfc", "schubert_rfc", "pair_block", "lower_rfc",
    "raise_rfc", "phi1", "phi1_inverse", "phi2", "phi", "phi_inverse",
]


@dataclass(frozen=True, order=True)
class RFC:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(x) for x in b) for b in self.blocks)
        if len(blocks) != self.n - 1:
            raise ValueError(f"an RFC for S_{self.n} has {self.n - 1} blocks, got {len(blocks)}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_sets(cls, n: int, blocks) -> RFC:
        return cls(n, tuple(tuple(sorted(b)) for b in blocks))

    def block(self, i: int) -> tuple[int, ...]:
        """Block i (1-indexed); blocks beyond n-1 are empty."""
        return self.blocks[i - 1] if 1 <= i <= len(self.blocks) else ()

    def weight(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks) + (0,)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for b in reversed(self.blocks) for x in b)

    def permutation(self) -> Permutation:
        return Permutation.from_word(self.reading_word(), self.n)

    def is_valid(self) -> bool:
        """Increasing blocks, cutoff, and a reduced reading word."""
        for i, b in enumerate(self.blocks, start=1):
            if any(x >= y for x, y in zip(b, b[1:])):
                return False
            if b and b[0] < i:
                return False
            if any(not 1 <= x < self.n for x in b):
                return False
        return length(self.permutation()) == len(self.reading_word())

    def __str__(self):
        return to_text(self)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data) -> RFC:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(tuple(b) for b in data["blocks"]))


def to_text(r: RFC) -> str:
    """``( )( 4 )( 3 )( 1 4 )`` -- blocks n-1 down to 1."""
    return "".join("( " + " ".join(map(str, b)) + " )" if b else "( )" for b in reversed(r.blocks))


def parse_rfc(text: str, n: int | None = None) -> RFC:
    """Inverse of :func:`to_text`; also accepts compact ``()(4)(3)(14)``."""
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups and text.strip():
        raise ValueError(f"cannot parse factorization {text!r}")
    blocks = []
    for g in groups:
        g = g.strip()
        if not g:
            blocks.append(())
        elif re.search(r"[\s,]", g):
            blocks.append(tuple(int(x) for x in re.split(r"[\s,]+", g) if x))
        else:
            blocks.append(tuple(int(c) for c in g))
    blocks.reverse()
    if n is None:
        n = len(blocks) + 1
    if len(blocks) > n - 1:
        raise ValueError(f"{len(blocks)} blocks do not fit S_{n}")
    blocks += [()] * (n - 1 - len(blocks))
    return RFC(n, tuple(blocks))


# compatible sequences


def schubert_compatible(w: Permutation) -> Polynomial:
    """Sum over reduced words a and a-compatible beta of x^wt(beta)."""
    return Polynomial.from_weights(
        (CompatibleSequence(a, b).weight(w.n) for a in reduced_words(w) for b in compatible_sequences(a)),
        w.n,
    )


# enumeration


def factorizations(word, n: int):
    """Cutoff factorizations of one word, as RFCs (no reducedness check)."""
    word = tuple(word)
    out = []

    def place(k, prev_block, assign):
        if k == len(word):
            blocks = [[] for _ in range(n - 1)]
            for x, b in zip(word, assign):
                blocks[b - 1].append(x)
            out.append(RFC(n, tuple(tuple(b) for b in blocks)))
            return
        x = word[k]
        # reading order visits blocks n-1, ..., 1; stay in a block only while letters increase
        hi = prev_block if (k and word[k - 1] < x) else prev_block - 1
        for b in range(min(hi, x), 0, -1):
            assign.append(b)
            place(k + 1, b, assign)
            assign.pop()

    place(0, n, [])
    return out


@lru_cache(maxsize=None)
def _enumerate_rfc(window) -> frozenset[RFC]:
    w = Permutation(window)
    return frozenset(r for a in reduced_words(w) for r in factorizations(a, w.n))


def enumerate_rfc(w: Permutation) -> frozenset[RFC]:
    """RFC(w): cutoff factorizations of every reduced word of w."""
    return _enumerate_rfc(w.window)


def schubert_rfc(w: Permutation) -> Polynomial:
    """Sum of x^wt(r) over RFC(w^{-1})."""
    return Polynomial.from_weights((r.weight() for r in enumerate_rfc(w.inverse())), w.n)


# crystal operators


@dataclass(frozen=True)
class BlockPairing:
    block: int
    pairs: tuple[tuple[int, int], ...]  # (letter of block i, letter of block i+1)
    unpaired_block: tuple[int, ...]  # block i, in scan order (largest first)
    unpaired_next: tuple[int, ...]  # block i+1, increasing


def pair_block(r: RFC, i: int) -> BlockPairing:
    """Scan block i from its largest letter down; each letter a takes the
    smallest still-unpaired b > a in block i+1."""
    free = list(r.block(i + 1))
    pairs, lonely = [], []
    for a in sorted(r.block(i), reverse=True):
        b = next((x for x in free if x > a), None)
        if b is None:
            lonely.append(a)
        else:
            free.remove(b)
            pairs.append((a, b))
    return BlockPairing(i, tuple(pairs), tuple(lonely), tuple(free))


def _replace_blocks(r: RFC, i: int, new_i, new_next) -> RFC | None:
    if i + 1 > r.n - 1:
        return None
    blocks = list(r.blocks)
    blocks[i - 1] = tuple(sorted(new_i))
    blocks[i] = tuple(sorted(new_next))
    cand = RFC(r.n, tuple(blocks))
    if sum(map(len, cand.blocks)) != sum(map(len, r.blocks)):
        return None
    if not cand.is_valid() or cand.permutation() != r.permutation():
        return None
    return cand


def _check_index(r: RFC, i: int):
    if not 1 <= i < r.n:
        raise ValueError(f"operator index {i} out of range for n={r.n}")


def lower_rfc(r: RFC, i: int) -> RFC | None:
    """f_i: move the smallest unpaired letter u of block i to block i+1 as
    t = max{z <= u : z-1 not in block i}; zero if the result is not an RFC."""
    _check_index(r, i)
    p = pair_block(r, i)
    if not p.unpaired_block:
        return None
    u = min(p.unpaired_block)
    blk = set(r.block(i))
    t = u
    while t - 1 in blk:
        t -= 1
    nxt = set(r.block(i + 1))
    if t in nxt:
        return None
    return _replace_blocks(r, i, blk - {u}, nxt | {t})


def raise_rfc(r: RFC, i: int) -> RFC | None:
    """e_i: move the largest unpaired letter v of block i+1 to block i as
    s = min{z >= v : z+1 not in block i+1}; zero if the result is not an RFC."""
    _check_index(r, i)
    p = pair_block(r, i)
    if not p.unpaired_next:
        return None
    v = max(p.unpaired_next)
    nxt = set(r.block(i + 1))
    s = v
    while s + 1 in nxt:
        s += 1
    blk = set(r.block(i))
    if s in blk:
        return None
    return _replace_blocks(r, i, blk | {s}, nxt - {v})


def is_highest_weight_rfc(r: RFC) -> bool:
    return all(raise_rfc(r, i) is None for i in range(1, r.n))


# bijections


def phi1(D: PipeDream) -> CompatibleSequence:
    """Crosses in canonical order give letters i + j - 1 and rows beta = i."""
    cells = canonical_order(D.crosses)
    return CompatibleSequence(tuple(i + j - 1 for i, j in cells), tuple(i for i, _ in cells))


def phi1_inverse(word, beta, n: int) -> PipeDream:
    if not is_compatible(word, beta):
        raise ValueError(f"{beta} is not compatible with {word}")
    return PipeDream(n, frozenset((b, a - b + 1) for a, b in zip(word, beta)))


def phi2(word, beta, n: int) -> RFC:
    """Letter a_j goes to block beta_j."""
    if not is_compatible(word, beta):
        raise ValueError(f"{beta} is not compatible with {word}")
    blocks = [[] for _ in range(n - 1)]
    for a, b in zip(word, beta):
        blocks[b - 1].append(a)
    return RFC.from_sets(n, blocks)


def phi(D: PipeDream) -> RFC:
    """Cross (i, j) becomes letter i + j - 1 in block i."""
    blocks = [[] for _ in range(D.n - 1)]
    for i, j in D.crosses:
        blocks[i - 1].append(i + j - 1)
    return RFC.from_sets(D.n, blocks)


def phi_inverse(r: RFC) -> PipeDream:
    return PipeDream(r.n, frozenset((i, x - i + 1) for i, b in enumerate(r.blocks, start=1) for x in b))

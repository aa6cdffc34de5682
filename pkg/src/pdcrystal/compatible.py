"""Reduced-word compatible sequences."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class CompatibleSequence:
    word: tuple[int, ...]
    beta: tuple[int, ...]

    def weight(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        for b in self.beta:
            v[b - 1] += 1
        return tuple(v)


def is_compatible(word, beta) -> bool:
    if len(word) != len(beta):
        return False
    for j, (a, b) in enumerate(zip(word, beta)):
        if b < 1 or b > a:
            return False
        if j and beta[j - 1] > b:
            return False
        if j and word[j - 1] < a and not beta[j - 1] < b:
            return False
    return True


def compatible_sequences(word) -> frozenset[tuple[int, ...]]:
    """All beta compatible with ``word``: weakly increasing, beta_j <= a_j,
    and strictly increasing wherever the word ascends."""
    word = tuple(word)
    out = []

    def extend(prefix):
        j = len(prefix)
        if j == len(word):
            out.append(tuple(prefix))
            return
        lo = 1
        if j:
            lo = prefix[-1] + (1 if word[j - 1] < word[j] else 0)
        for b in range(lo, word[j] + 1):
            prefix.append(b)
            extend(prefix)
            prefix.pop()

    extend([])
    return frozenset(out)

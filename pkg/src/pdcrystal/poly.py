"""Exact sparse polynomials in x_1..x_n and the operators that build
Schubert, key and Schur polynomials from them."""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache

from .perm import (
    Permutation,
    is_partition,
    pad,
    reduced_expression,
    shortest_sorting_perm,
    sort_desc,
)


class Polynomial:
    """A map from exponent vectors (length n) to non-zero int coefficients.

    Instances are treated as immutable values.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not have {n} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp, coeff: int = 1) -> Polynomial:
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def var(cls, i: int, n: int) -> Polynomial:
        exp = [0] * n
        exp[i - 1] = 1
        return cls(n, {tuple(exp): 1})

    @classmethod
    def from_weights(cls, weights, n: int) -> Polynomial:
        """Sum of x^v over an iterable of exponent vectors (with multiplicity)."""
        acc = defaultdict(int)
        for v in weights:
            acc[tuple(v)] += 1
        return cls(n, acc)

    # value semantics

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Polynomial(self.n, {(0,) * self.n: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def coeff(self, exp) -> int:
        return self._terms.get(tuple(exp), 0)

    # ring operations

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"polynomials in {self.n} and {other.n} variables")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial(self.n, {(0,) * self.n: other})
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.n, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        acc = defaultdict(int)
        for (e1, c1), (e2, c2) in itertools.product(self._terms.items(), other._terms.items()):
            acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(self.n, acc)

    __rmul__ = __mul__

    def swap(self, i: int) -> Polynomial:
        """s_i acting by exchanging x_i and x_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(self.n, out)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # rendering

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial(n={self.n}, {to_text(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exp": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, n: int | None = None) -> Polynomial:
        if n is None:
            n = len(data[0]["exp"]) if data else 0
        return cls(n, {tuple(t["exp"]): t["coeff"] for t in data})


def _monomial_text(exp) -> str:
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def to_text(p: Polynomial) -> str:
    """Render as ``x1^2*x2^2 + 2*x1^2*x2*x3 + ...`` in graded-lex order."""
    if not p:
        return "0"
    chunks = []
    for k, (exp, c) in enumerate(p.sorted_terms()):
        mono = _monomial_text(exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def _exact_divide_by_root(p: Polynomial, i: int) -> Polynomial:
    """Divide p by (x_i - x_{i+1}); raise if the division is not exact."""
    rem = dict(p.terms)
    quot = defaultdict(int)
    k, k1 = i - 1, i
    while rem:
        # leading term: highest power of x_i, ties broken lexicographically
        exp = max(rem, key=lambda e: (e[k], e))
        c = rem.pop(exp)
        if exp[k] == 0:
            raise ArithmeticError(f"division by x{i} - x{i + 1} left a remainder")
        q = list(exp)
        q[k] -= 1
        q = tuple(q)
        quot[q] += c
        # subtract c * x^q * (x_i - x_{i+1}); the x^q*x_i part is exp itself
        nxt = list(q)
        nxt[k1] += 1
        nxt = tuple(nxt)
        rem[nxt] = rem.get(nxt, 0) + c
        if rem[nxt] == 0:
            del rem[nxt]
    return Polynomial(p.n, quot)


def divided_difference(i: int, p: Polynomial) -> Polynomial:
    """(p - s_i p) / (x_i - x_{i+1})."""
    if not 1 <= i < p.n:
        raise ValueError(f"index {i} out of range for {p.n} variables")
    return _exact_divide_by_root(p - p.swap(i), i)


def demazure_operator(i: int, p: Polynomial) -> Polynomial:
    """Isobaric divided difference pi_i(p) = d_i(x_i p)."""
    return divided_difference(i, Polynomial.var(i, p.n) * p)


def apply_word(op, word, p: Polynomial) -> Polynomial:
    """op_{i_1} ... op_{i_p} (p): the rightmost letter acts first."""
    for i in reversed(word):
        p = op(i, p)
    return p


@lru_cache(maxsize=None)
def _schubert(window: tuple[int, ...]) -> Polynomial:
    n = len(window)
    w = Permutation(window)
    ascents = [i for i in range(1, n) if window[i - 1] < window[i]]
    if not ascents:
        return Polynomial.monomial(tuple(range(n - 1, -1, -1)))
    # S_w = d_i S_{w s_i} for any ascent i of w
    i = ascents[0]
    up = w * Permutation.simple(i, n)
    return divided_difference(i, _schubert(up.window))


def schubert_divdiff(w: Permutation) -> Polynomial:
    """Schubert polynomial by divided differences down from the longest element."""
    if w.n == 0:
        return Polynomial.one(0)
    return _schubert(w.window)


@lru_cache(maxsize=None)
def _key(a: tuple[int, ...]) -> Polynomial:
    lam = sort_desc(a)
    sigma = shortest_sorting_perm(a)
    return apply_word(demazure_operator, reduced_expression(sigma), Polynomial.monomial(lam))


def key_polynomial(a, word=None) -> Polynomial:
    """kappa_a as pi_{i_1}...pi_{i_p} x^lambda for a reduced word of the sorting permutation.

    ``word`` overrides the default (lex-smallest) reduced word; it must be a
    reduced word for ``shortest_sorting_perm(a)``.
    """
    a = tuple(a)
    if any(x < 0 for x in a):
        raise ValueError(f"negative part in composition {a}")
    if word is None:
        return _key(a)
    return apply_word(demazure_operator, word, Polynomial.monomial(sort_desc(a)))


def semistandard_tableaux(shape, n: int):
    """All SSYT of the given partition shape with entries in 1..n.

    Tableaux are tuples of rows in English notation (first row is longest).
    Filled cell by cell in row-major order; the column bound prunes early.
    """
    shape = [s for s in shape if s > 0]
    if len(shape) > n:
        return
    cells = [(r, c) for r, length_ in enumerate(shape) for c in range(length_)]
    grid = [[0] * length_ for length_ in shape]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        # room for the rows still below this cell in the column
        hi = n - (len([s for s in shape if s > c]) - 1 - r)
        for v in range(lo, hi + 1):
            grid[r][c] = v
            yield from fill(k + 1)
        grid[r][c] = 0

    yield from fill(0)


def tableau_content(t, n: int) -> tuple[int, ...]:
    v = [0] * n
    for row in t:
        for x in row:
            v[x - 1] += 1
    return tuple(v)


def schur_oracle(lam, n: int) -> Polynomial:
    """s_lambda(x_1..x_n) by direct enumeration of semistandard tableaux."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return Polynomial.from_weights((tableau_content(t, n) for t in semistandard_tableaux(lam, n)), n)


def staircase(n: int) -> tuple[int, ...]:
    return pad(tuple(range(n - 1, -1, -1)), n)

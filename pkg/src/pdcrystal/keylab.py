"""Truncating permutations and the key polynomial expansion of Schubert polynomials.

Two independent routes to the truncating permutation of a highest weight pipe
dream D are provided:

* :func:`algorithm_d_tilde` slides the crosses of D into a key-shaped diagram;
* :func:`pi_r` runs Edelman-Greene insertion on the factorization phi(D) and lifts.

Both are checked against Demazure characters computed from the tableau crystal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .crystal import Component, decompose, is_highest_weight
from .perm import (
    Permutation,
    is_partition,
    pad,
    push_action,
    reduced_expression,
    shortest_sorting_perm,
    sort_desc,
    word_to_text,
)
from .pipedream import PipeDream, schubert_pipedreams, weight
from .poly import Polynomial, key_polynomial, tableau_content
from .rfc import RFC, phi


# Edelman-Greene insertion


@dataclass(frozen=True)
class Tableau:
    """Rows listed bottom to top: ``rows[0]`` is the bottom row."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if r))

    def weight(self, n: int) -> tuple[int, ...]:
        return pad(tuple(len(r) for r in self.rows), n)

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in reversed(self.rows))


def eg_insert(P: Tableau, x: int) -> Tableau:
    """Edelman-Greene insertion of the letter x into P."""
    rows = [list(r) for r in P.rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            break
        row = rows[i]
        if all(x >= z for z in row):
            row.append(x)
            break
        k, bumped = min(((k, z) for k, z in enumerate(row) if z > x), key=lambda t: t[1])
        if bumped != x + 1 or x not in row:
            row[k] = x
        x = bumped
        i += 1
    return Tableau(tuple(tuple(r) for r in rows))


def insertion_tableau(word) -> Tableau:
    P = Tableau()
    for x in word:
        P = eg_insert(P, x)
    return P


# lift and key-shaped fillings


@dataclass(frozen=True)
class KeyShapedFilling:
    """Left-justified rows indexed from 1; rows absent from the map are empty."""

    rows: dict

    def weight(self, n: int) -> tuple[int, ...]:
        top = max(self.rows, default=0)
        if top > n:
            raise ValueError(f"filling uses row {top} > {n}")
        return tuple(len(self.rows.get(i, ())) for i in range(1, n + 1))

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return {i: tuple(r) for i, r in sorted(self.rows.items()) if r}

    def __eq__(self, other):
        if not isinstance(other, KeyShapedFilling):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(tuple(self.as_dict().items()))


class LiftError(ValueError):
    pass


LIFT_ORDERS = ("top-down", "bottom-up")


def lift(P: Tableau, order: str = "top-down") -> KeyShapedFilling:
    """Raise each column of P, left to right, into a key-shaped filling.

    The first column goes to the rows named by its entries. With
    ``order="top-down"`` the entries of each later column are taken top to
    bottom, each going to the highest free row whose entry in the previous
    column is strictly smaller while staying below the entry placed just
    before it. ``order="bottom-up"`` takes the entries bottom to top and drops
    the relative-order constraint.
    """
    if order not in LIFT_ORDERS:
        raise ValueError(f"unknown lift order {order!r}; expected one of {LIFT_ORDERS}")
    rows: dict[int, list[int]] = {}
    width = max((len(r) for r in P.rows), default=0)
    for c in range(width):
        column = [r[c] for r in P.rows if len(r) > c]
        if c == 0:
            for e in column:
                if e in rows:
                    raise LiftError(f"repeated entry {e} in the first column")
                rows[e] = [e]
            continue
        ceiling = None
        for e in (reversed(column) if order == "top-down" else column):
            options = [
                k for k, r in rows.items()
                if len(r) == c and r[-1] < e and (ceiling is None or k < ceiling)
            ]
            if not options:
                raise LiftError(f"no row can receive entry {e} in column {c + 1}")
            k = max(options)
            rows[k].append(e)
            if order == "top-down":
                ceiling = k
    return KeyShapedFilling({k: tuple(v) for k, v in rows.items()})


def pi_r(r: RFC, order: str = "top-down") -> Permutation:
    """Shortest sorter of the weight of lift(P(r)), P(r) read in display order."""
    a = lift(insertion_tableau(r.reading_word()), order).weight(r.n)
    return shortest_sorting_perm(a)


# sliding crosses of a highest weight pipe dream


class NotHighestWeight(ValueError):
    pass


def algorithm_d_tilde(D: PipeDream) -> KeyShapedFilling:
    """Shift row i right by i-1, drop each row's first cross onto the diagonal,
    then place the l-th crosses (l = 2, 3, ...) from the bottom row up, each
    as low as it can go in its column.

    The returned filling maps each row to the columns of its crosses.
    """
    if not is_highest_weight(D):
        raise NotHighestWeight(f"{D.key_text()} is not a highest weight pipe dream")
    shifted = {i: [i + j - 1 for j in D.row(i)] for i in range(1, D.n) if D.row(i)}
    where: dict[tuple[int, int], bool] = {}  # (row, col) -> fixed?
    for i, cols in shifted.items():
        for c in cols:
            where[(i, c)] = False

    for i in sorted(shifted, reverse=True):
        c = shifted[i][0]
        del where[(i, c)]
        if (c, c) in where:
            raise AssertionError(f"diagonal box {(c, c)} already occupied")
        where[(c, c)] = True

    deepest = max(map(len, shifted.values()), default=0)
    for ell in range(2, deepest + 1):
        for i in sorted((i for i in shifted if len(shifted[i]) >= ell), reverse=True):
            col = shifted[i][ell - 1]
            del where[(i, col)]
            best = None
            r = i
            while True:
                left = sum(1 for (rr, cc), fixed in where.items() if rr == r and cc < col and fixed)
                right = any(fixed for (rr, cc), fixed in where.items() if rr == r and cc > col)
                if left == ell - 1 and not right:
                    best = r
                r += 1
                if (r, col) in where or r > D.n:
                    break
            if best is None:
                raise AssertionError(f"no valid landing row for cross {(i, col)} at l={ell}")
            where[(best, col)] = True

    rows: dict[int, list[int]] = {}
    for (r, c) in sorted(where):
        rows.setdefault(r, []).append(c)
    return KeyShapedFilling({r: tuple(cs) for r, cs in rows.items()})


def truncating_permutation(D: PipeDream) -> Permutation:
    return shortest_sorting_perm(algorithm_d_tilde(D).weight(D.n))


def crystal_truncation(members, n: int) -> tuple[int, ...]:
    """The composition a with character(members) = key_polynomial(a), read off
    the crystal itself.

    The extremal weights of a Demazure crystal B_pi(lambda) are sigma(lambda)
    for sigma below pi in Bruhat order; a = pi(lambda) is the one with the
    longest shortest sorter. The candidate is confirmed against the key
    polynomial before it is returned.
    """
    weights = [weight(E) for E in members]
    lam = max(weights)  # the highest weight is lex-largest
    if not is_partition(lam):
        raise ValueError(f"lex-largest weight {lam} is not a partition")
    extremal = {a for a in weights if sort_desc(a) == lam}
    top = max(shortest_sorting_perm(a).length() for a in extremal)
    cands = [a for a in extremal if shortest_sorting_perm(a).length() == top]
    character = Polynomial.from_weights(weights, n)
    if len(cands) != 1 or key_polynomial(cands[0]) != character:
        raise ValueError(f"component is not a Demazure crystal; extremal weights {sorted(extremal)}")
    return cands[0]


# Demazure crystals on semistandard tableaux (English rows, first row longest)


def _reading_word(t):
    """Row reading word: bottom row first, each row left to right."""
    return [(r, c) for r in range(len(t) - 1, -1, -1) for c in range(len(t[r]))]


def tableau_lower(t, i: int):
    """Kashiwara f_i on a semistandard tableau via bracketing of the reading word."""
    stack_open = []  # unmatched i+1 positions
    unmatched_i = []
    for pos in _reading_word(t):
        x = t[pos[0]][pos[1]]
        if x == i + 1:
            stack_open.append(pos)
        elif x == i:
            if stack_open:
                stack_open.pop()
            else:
                unmatched_i.append(pos)
    if not unmatched_i:
        return None
    r, c = unmatched_i[-1]
    rows = [list(row) for row in t]
    rows[r][c] = i + 1
    return tuple(tuple(row) for row in rows)


def tableau_raise(t, i: int):
    stack_close = []  # unmatched i positions, scanning right to left
    unmatched = []
    for pos in reversed(_reading_word(t)):
        x = t[pos[0]][pos[1]]
        if x == i:
            stack_close.append(pos)
        elif x == i + 1:
            if stack_close:
                stack_close.pop()
            else:
                unmatched.append(pos)
    if not unmatched:
        return None
    r, c = unmatched[-1]
    rows = [list(row) for row in t]
    rows[r][c] = i
    return tuple(tuple(row) for row in rows)


def highest_tableau(lam) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple([k] * part) for k, part in enumerate(lam, start=1) if part)


def demazure_closure(X, i: int) -> frozenset:
    """All f_i^k(x), k >= 0, for x in X."""
    out = set()
    for t in X:
        while t is not None and t not in out:
            out.add(t)
            t = tableau_lower(t, i)
    return frozenset(out)


def demazure_tableau_crystal(lam, pi: Permutation, n: int, word=None) -> frozenset:
    """B_pi(lambda) as a set of tableaux: the closures along a reduced word of
    pi applied to the highest weight tableau, rightmost letter first."""
    lam = tuple(lam)
    if len([x for x in lam if x]) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    if word is None:
        word = reduced_expression(pi)
    X = frozenset({highest_tableau(lam)})
    for i in reversed(word):
        X = demazure_closure(X, i)
    return X


def demazure_character(lam, pi: Permutation, n: int, word=None) -> Polynomial:
    return Polynomial.from_weights(
        (tableau_content(t, n) for t in demazure_tableau_crystal(lam, pi, n, word)), n
    )


# assembling the decomposition


@dataclass
class CrystalComponent:
    members: list[PipeDream]
    highest: PipeDream
    lam: tuple[int, ...]
    pi: Permutation
    a: tuple[int, ...]
    character: Polynomial
    key: Polynomial
    checks: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "highest_weight_crosses": [list(c) for c in self.highest.key()],
            "lambda": list(self.lam),
            "pi_window": list(self.pi.window),
            "pi_reduced_word": list(reduced_expression(self.pi)),
            "a_D": list(self.a),
            "component_size": len(self.members),
            "key_polynomial": self.key.to_json(),
            "verified": self.verified,
        }

    def summary(self) -> str:
        return (
            f"lambda={self.lam} pi={word_to_text(reduced_expression(self.pi))} "
            f"a_D={self.a} size={len(self.members)} verified={self.verified}"
        )


@dataclass
class Decomposition:
    w: Permutation
    components: list[CrystalComponent]
    schubert: Polynomial
    key_sum: Polynomial

    @property
    def verified(self) -> bool:
        return self.schubert == self.key_sum and all(c.verified for c in self.components)

    def to_json(self) -> dict:
        return {
            "permutation": list(self.w.window),
            "schubert": self.schubert.to_json(),
            "components": [c.to_json() for c in self.components],
            "identity_holds": self.schubert == self.key_sum,
            "verified": self.verified,
        }


class DecompositionError(AssertionError):
    def __init__(self, report: Decomposition):
        self.report = report
        bad = [c.summary() for c in report.components if not c.verified]
        super().__init__(f"key expansion of S_{report.w} failed: " + ("; ".join(bad) or "sum mismatch"))


TRUNCATIONS = ("d_tilde", "lift_bottom_up", "crystal")


def enrich(comp: Component, n: int, crystal_oracle: bool = False, truncation: str = "d_tilde") -> CrystalComponent:
    """Attach lambda, pi_D, a_D and the consistency checks to a component.

    ``truncation`` picks how a_D is found: ``"d_tilde"`` slides the crosses of
    the highest weight element, ``"lift_bottom_up"`` lifts the insertion
    tableau of phi(D) bottom-up, and ``"crystal"`` reads a_D off the component.
    """
    if truncation not in TRUNCATIONS:
        raise ValueError(f"unknown truncation {truncation!r}; expected one of {TRUNCATIONS}")
    D = comp.highest
    lam = weight(D)
    if truncation == "d_tilde":
        a = algorithm_d_tilde(D).weight(n)
    elif truncation == "lift_bottom_up":
        a = lift(insertion_tableau(phi(D).reading_word()), "bottom-up").weight(n)
    else:
        a = crystal_truncation(comp.members, n)
    pi = shortest_sorting_perm(a)
    character = Polynomial.from_weights((weight(E) for E in comp.members), n)
    key = key_polynomial(a)
    checks = {
        "a_is_pi_lambda": push_action(pi, lam) == a,
        "lambda_is_sorted_a": sort_desc(a) == lam,
        "character_is_key": character == key,
    }
    if truncation == "d_tilde":
        checks["pi_matches_insertion"] = pi_r(phi(D)) == pi
    if crystal_oracle:
        checks["character_is_demazure"] = demazure_character(lam, pi, n) == character
    return CrystalComponent(comp.members, D, lam, pi, a, character, key, checks)


def decompose_schubert(
    w: Permutation, check: bool = True, crystal_oracle: bool = False, truncation: str = "d_tilde"
) -> Decomposition:
    """Key expansion of the Schubert polynomial, one term per highest weight pipe dream."""
    comps = [enrich(c, w.n, crystal_oracle, truncation) for c in decompose(w)]
    total = Polynomial.zero(w.n)
    for c in comps:
        total = total + c.key
    report = Decomposition(w, comps, schubert_pipedreams(w), total)
    if check and not report.verified:
        raise DecompositionError(report)
    return report

"""Pairing process and crystal chute moves on reduced pipe dreams.

Operators return ``None`` for the crystal's zero element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .perm import Permutation, is_partition
from .pipedream import Cell, PipeDream, enumerate_rp, weight


@dataclass(frozen=True)
class RowPairing:
    row: int
    pairs: tuple[tuple[Cell, Cell], ...]
    unpaired_upper: tuple[Cell, ...]  # row i, in scan order (right to left)
    unpaired_lower: tuple[Cell, ...]  # row i + 1, left to right


def pair_row(D: PipeDream, i: int) -> RowPairing:
    """Scan row i right to left; each cross takes the leftmost still-unpaired
    cross of row i+1 lying weakly to its right."""
    upper = sorted(D.row(i), reverse=True)
    free = D.row(i + 1)
    pairs, lonely = [], []
    for c in upper:
        match = next((c2 for c2 in free if c2 >= c), None)
        if match is None:
            lonely.append((i, c))
        else:
            free.remove(match)
            pairs.append(((i, c), (i + 1, match)))
    return RowPairing(i, tuple(pairs), tuple(lonely), tuple((i + 1, c) for c in free))


def _check_index(D: PipeDream, i: int):
    if not 1 <= i < D.n:
        raise ValueError(f"operator index {i} out of range for n={D.n}")


def lower(D: PipeDream, i: int) -> PipeDream | None:
    """Crystal chute move f_i."""
    _check_index(D, i)
    p = pair_row(D, i)
    if not p.unpaired_upper:
        return None
    j = min(c for _, c in p.unpaired_upper)
    if all((i, k) in D for k in range(1, j + 1)):
        return None
    m = 1
    while (i, j - m) in D:
        if (i + 1, j - m) not in D:
            raise AssertionError(f"broken rectangle left of {(i, j)}; is the pipe dream reduced?")
        m += 1
    if (i + 1, j - m) in D:
        raise AssertionError(f"broken rectangle left of {(i, j)}; is the pipe dream reduced?")
    return D.moved((i, j), (i + 1, j - m))


def raise_(D: PipeDream, i: int) -> PipeDream | None:
    """Inverse crystal chute move e_i."""
    _check_index(D, i)
    p = pair_row(D, i)
    if not p.unpaired_lower:
        return None
    ell = max(c for _, c in p.unpaired_lower)
    col = ell + 1
    while (i + 1, col) in D:
        col += 1
    return D.moved((i + 1, ell), (i, col))


def is_highest_weight(D: PipeDream) -> bool:
    return all(raise_(D, i) is None for i in range(1, D.n))


def is_lowest_weight(D: PipeDream) -> bool:
    return all(lower(D, i) is None for i in range(1, D.n))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


@dataclass
class CrystalGraph:
    w: Permutation
    vertices: list[PipeDream]
    edges: list[tuple[PipeDream, int, PipeDream]]  # (D, i, f_i(D))

    def to_dot(self) -> str:
        lines = [f"digraph crystal {{", f"  label={_dot_quote('RP(' + str(self.w) + ')')};"]
        for D in self.vertices:
            label = D.ascii() + "\nwt=" + "".join(map(str, weight(D)))
            lines.append(f"  {_dot_quote(D.key_text())} [shape=box, fontname=monospace, label={_dot_quote(label)}];")
        for D, i, E in self.edges:
            lines.append(f"  {_dot_quote(D.key_text())} -> {_dot_quote(E.key_text())} [label={i}];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "permutation": list(self.w.window),
            "vertices": [dict(D.to_json(), weight=list(weight(D))) for D in self.vertices],
            "edges": [
                {"source": D.to_json()["crosses"], "i": i, "target": E.to_json()["crosses"]}
                for D, i, E in self.edges
            ],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def crystal_graph(w: Permutation) -> CrystalGraph:
    verts = sorted(enumerate_rp(w))
    edges = []
    for D in verts:
        for i in range(1, w.n):
            E = lower(D, i)
            if E is not None:
                edges.append((D, i, E))
    return CrystalGraph(w, verts, edges)


@dataclass
class Component:
    """A connected component of the crystal graph."""

    highest: PipeDream
    members: list[PipeDream] = field(default_factory=list)

    @property
    def lam(self) -> tuple[int, ...]:
        return weight(self.highest)

    def __len__(self):
        return len(self.members)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def components(graph: CrystalGraph) -> list[Component]:
    uf = _UnionFind(graph.vertices)
    for D, _, E in graph.edges:
        uf.union(D, E)
    groups: dict[PipeDream, list[PipeDream]] = {}
    for D in graph.vertices:
        groups.setdefault(uf.find(D), []).append(D)
    out = []
    for members in groups.values():
        tops = [D for D in members if is_highest_weight(D)]
        if len(tops) != 1:
            raise AssertionError(f"component with {len(tops)} highest weight vertices in RP({graph.w})")
        if not is_partition(weight(tops[0])):
            raise AssertionError(f"highest weight {weight(tops[0])} is not a partition")
        out.append(Component(tops[0], sorted(members)))
    out.sort(key=lambda c: (tuple(-x for x in c.lam), c.highest.key()))
    return out


def decompose(w: Permutation) -> list[Component]:
    """Components of the crystal on RP(w), each with its unique highest weight vertex."""
    return components(crystal_graph(w))


def lowering_closure(D: PipeDream) -> set[PipeDream]:
    """Everything reachable from D by lowering operators alone."""
    seen, stack = set(), [D]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        for i in range(1, x.n):
            y = lower(x, i)
            if y is not None and y not in seen:
                stack.append(y)
    return seen

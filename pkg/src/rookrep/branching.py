"""Restriction rule, Bratteli diagrams, path counts, and graph export.

The tower embeds each monoid into the next by fixing the last coordinate,
so restricting a module just drops the top transposition matrix.  Vertex
identity in the branching graph is (level, multipartition): the same
label at different levels is a different vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .combinatorics import mp_size, multipartitions, remove_box, removable_boxes
from .seminormal import ModuleMats


def restrict_label(shape, n: int) -> list:
    """Labels of the restriction to the next monoid down, each multiplicity 1.

    Shapes obtained by removing one outer corner, plus the shape itself
    when it is strictly smaller than the level.
    """
    if mp_size(shape) > n:
        raise ValueError("shape too large for this level")
    out = []
    if mp_size(shape) < n:
        out.append(shape)
    for k, comp in enumerate(shape):
        for box in removable_boxes(comp):
            smaller = list(shape)
            smaller[k] = remove_box(comp, box)
            out.append(tuple(smaller))
    return sorted(out)


@dataclass(frozen=True)
class BratteliGraph:
    r: int
    levels: tuple  # levels[m] = sorted tuple of multipartitions
    edges: tuple   # (m, idx at level m-1, idx at level m)

    def vertex_index(self, shape, m: int) -> int:
        return self.levels[m].index(shape)

    def to_json(self) -> str:
        data = {"r": self.r,
                "levels": [[[list(c) for c in shape] for shape in lv]
                           for lv in self.levels],
                "edges": [list(e) for e in self.edges]}
        return json.dumps(data, separators=(",", ":"), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BratteliGraph":
        data = json.loads(text)
        levels = tuple(
            tuple(tuple(tuple(c) for c in shape) for shape in lv)
            for lv in data["levels"])
        return cls(data["r"], levels,
                   tuple(tuple(e) for e in data["edges"]))

    def to_dot(self) -> str:
        lines = ["graph bratteli {", "  rankdir=TB;"]
        for m, lv in enumerate(self.levels):
            lines.append(f"  subgraph level_{m} {{")
            lines.append("    rank=same;")
            for i, shape in enumerate(lv):
                label = json.dumps([list(c) for c in shape],
                                   separators=(",", ":"))
                lines.append(f'    v{m}_{i} [label="{label}"];')
            lines.append("  }")
        for m, a, b in self.edges:
            lines.append(f"  v{m - 1}_{a} -- v{m}_{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def bratteli_graph(r: int, n_max: int) -> BratteliGraph:
    levels = []
    for m in range(n_max + 1):
        lv = sorted(shape for i in range(m + 1)
                    for shape in multipartitions(r, i))
        levels.append(tuple(lv))
    edges = []
    for m in range(1, n_max + 1):
        below = {shape: i for i, shape in enumerate(levels[m - 1])}
        for j, shape in enumerate(levels[m]):
            for mu in restrict_label(shape, m):
                edges.append((m, below[mu], j))
    edges.sort()
    return BratteliGraph(r, tuple(levels), tuple(edges))


def count_paths(g: BratteliGraph, shape, n: int) -> int:
    """Paths from the level-0 vertex down to (shape, n)."""
    if shape not in g.levels[n]:
        raise ValueError("vertex absent at this level")
    counts = {g.levels[0][0]: 1}
    for m in range(1, n + 1):
        nxt = {}
        for (em, a, b) in g.edges:
            if em == m:
                mu = g.levels[m - 1][a]
                lam = g.levels[m][b]
                nxt[lam] = nxt.get(lam, 0) + counts.get(mu, 0)
        counts = nxt
    return counts.get(shape, 0)


def export_graph(g: BratteliGraph, fmt: str) -> str:
    if fmt == "dot":
        return g.to_dot()
    if fmt == "json":
        return g.to_json()
    raise ValueError(f"unknown format {fmt!r}")


def restricted_module(mod: ModuleMats) -> ModuleMats:
    """The same space as a module for the next monoid down the tower."""
    if mod.n < 1:
        raise ValueError("nothing to restrict")
    return ModuleMats(mod.n - 1, mod.r, mod.p_mat, mod.q_mat,
                      mod.s_mats[:mod.n - 2] if mod.n >= 2 else ())

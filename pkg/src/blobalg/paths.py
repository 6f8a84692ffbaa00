"""Lattice-path picture of standard tableaux.

A tableau embeds as a walk on an exponent lattice: one vertex per box
plus a starting vertex, each step moving one unit right (SE, positive
entry) or left (SW, negative entry).  Vertex j sits x(j) = x(j-1) +- 1,
and the markers of the parameter configuration sit on a fixed row just
above the walk, at positions congruent to the marker anchor mod 2.

Everything degree-related lives here: the tile diagram between a path
and the path of its shape's distinguished tableau, the combinatorial
degree read off the tiles, the reduced word obtained by peeling tiles
in a canonical order, and the equivalent degree computed by pushing the
reduced word through the residue sequence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .params import ALPHA_LABELS
from .tableaux import (
    Shape,
    Tableau,
    from_negated_set,
    is_standard,
    is_valid_shape,
    max_negatives,
    residue_seq,
    shape_base,
    shapes,
    t_lambda,
    weyl_act,
)

__all__ = [
    "EmbeddedPath",
    "embed",
    "positions",
    "width",
    "path_residues",
    "realize",
    "negate",
    "translate",
    "reflect",
    "sim_neighbors",
    "canonical_key",
    "sim_class_paths",
    "sim_class_tableaux",
    "residue_class_tableaux",
    "Tile",
    "tiles",
    "tile_degree",
    "degree_tiles",
    "tau_order",
    "reduced_word",
    "word_to_tableau",
    "degree_klr",
    "perm_from_tableau",
    "coxeter_length",
    "max_shape",
    "is_ladder",
]


@dataclass(frozen=True)
class EmbeddedPath:
    orbit: str
    start: int
    steps: tuple  # True = SE (x+1), False = SW (x-1)

    @property
    def n(self):
        return len(self.steps)


def embed(cfg, n, t):
    """Embed a standard tableau as a path anchored at its marker."""
    orbit, b = shape_base(cfg, t.shape)
    negs = t.negated_set()
    m = (n - t.shape.k) // 2 - len(negs)
    steps = tuple(j not in negs for j in range(1, n + 1))
    return EmbeddedPath(orbit, b - 1 - 2 * m, steps)


def positions(path):
    """x(0), ..., x(n)."""
    xs = [path.start]
    for se in path.steps:
        xs.append(xs[-1] + (1 if se else -1))
    return xs


def width(path):
    return sum(1 if se else -1 for se in path.steps)


def path_residues(cfg, path):
    """Residue of each step: SE steps read the lattice directly, SW
    steps read the mirror position and invert."""
    out = []
    x = path.start
    for j, se in enumerate(path.steps, start=1):
        if se:
            out.append(cfg.residue(path.orbit, x + j))
            x += 1
        else:
            out.append(cfg.res_invert(cfg.residue(path.orbit, x - j)))
            x -= 1
    return tuple(out)


def realize(cfg, n, path):
    """All (shape, tableau) pairs this path presents.

    A shape matches when its implied marker position actually carries
    that marker and the path's SW count respects the bead bound.
    """
    if path.n != n:
        raise ValueError("path has %d steps, expected %d" % (path.n, n))
    sw = sum(1 for se in path.steps if not se)
    negs = frozenset(j for j, se in enumerate(path.steps, start=1) if not se)
    out = []
    for shape in shapes(n):
        if sw > max_negatives(n, shape):
            continue
        anchor = path.start + 1 + 2 * ((n - shape.k) // 2 - sw)
        if cfg.marker_label_at(path.orbit, anchor) == shape.marker:
            out.append((shape, from_negated_set(n, shape, negs)))
    return out


# -- similarity moves ----------------------------------------------------

def negate(cfg, path):
    """Mirror the whole picture through inversion; residues persist."""
    return EmbeddedPath(
        cfg.invert_orbit(path.orbit),
        cfg.raw_invert_position(path.orbit, path.start),
        tuple(not se for se in path.steps),
    )


def translate(cfg, path, r=1):
    """Shift by r full periods; only meaningful at finite e."""
    if cfg.e is None:
        raise ValueError("translation needs finite e")
    return EmbeddedPath(path.orbit, path.start + 2 * cfg.e * r, path.steps)


def reflect(cfg, path, i):
    """Reflect the tail after vertex i, which must sit on a wall."""
    xs = positions(path)
    if not 0 <= i <= path.n:
        raise ValueError("vertex index out of range")
    if not cfg.on_hyperplane(path.orbit, xs[i]):
        raise ValueError("vertex %d is not on a wall" % i)
    return EmbeddedPath(
        path.orbit,
        path.start,
        path.steps[:i] + tuple(not se for se in path.steps[i:]),
    )


def sim_neighbors(cfg, path):
    yield negate(cfg, path)
    if cfg.e is not None:
        yield translate(cfg, path, 1)
        yield translate(cfg, path, -1)
    xs = positions(path)
    for i in range(path.n + 1):
        if cfg.on_hyperplane(path.orbit, xs[i]):
            yield reflect(cfg, path, i)


def canonical_key(cfg, path):
    start = path.start if cfg.e is None else path.start % (2 * cfg.e)
    return (path.orbit, start, path.steps)


def sim_class_paths(cfg, path):
    """Breadth-first closure of a path under the similarity moves."""
    seen = {canonical_key(cfg, path): path}
    frontier = [path]
    while frontier:
        nxt = []
        for p in frontier:
            for q in sim_neighbors(cfg, p):
                key = canonical_key(cfg, q)
                if key not in seen:
                    seen[key] = q
                    nxt.append(q)
        frontier = nxt
    return list(seen.values())


def sim_class_tableaux(cfg, n, t):
    """Tableaux realized anywhere in the similarity class of embed(t)."""
    out = set()
    for p in sim_class_paths(cfg, embed(cfg, n, t)):
        for _, u in realize(cfg, n, p):
            out.add(u)
    return out


def residue_class_tableaux(cfg, n, t):
    """Tableaux of every shape sharing t's residue sequence."""
    from .tableaux import cstd

    target = residue_seq(cfg, n, t)
    out = []
    for shape in shapes(n):
        out.extend(cstd(cfg, n, shape, target))
    return out


# -- tiles and degrees ---------------------------------------------------

class Tile(NamedTuple):
    xc: int
    yc: int
    side: str  # "L" or "R" of the distinguished path

    @property
    def top_x(self):
        return self.xc

    @property
    def top_y(self):
        return self.yc - 1

    @property
    def content(self):
        return self.yc - 1


def tiles(cfg, n, t):
    """Diamond tiles between t's path and its shape's distinguished
    path, row by row."""
    xs_t = positions(embed(cfg, n, t))
    xs_l = positions(embed(cfg, n, t_lambda(n, t.shape)))
    out = []
    for yc in range(1, n + 1):
        a, b = xs_t[yc - 1], xs_l[yc - 1]
        lo, hi = min(a, b), max(a, b)
        for xc in range(lo + 1, hi, 2):
            out.append(Tile(xc, yc, "L" if xc < b else "R"))
    return out


def tile_degree(cfg, orbit, tile):
    """Degree contribution of one tile, read off its top vertex.

    Tiles touching the marker row score by the marker they touch; lower
    tiles score -2 on a wall and +1 next to one.
    """
    x = tile.top_x
    if tile.top_y == 0:
        label = cfg.marker_label_at(orbit, x)
        if label in ALPHA_LABELS:
            return 1
        if label is not None:
            return 0  # a theta-type marker
        return -2 if cfg.on_hyperplane(orbit, x) else 0
    if cfg.on_hyperplane(orbit, x):
        return -2
    beside = int(cfg.on_hyperplane(orbit, x - 1)) + int(cfg.on_hyperplane(orbit, x + 1))
    return 1 if beside == 1 else 0


def degree_tiles(cfg, n, t):
    orbit = embed(cfg, n, t).orbit
    return sum(tile_degree(cfg, orbit, tile) for tile in tiles(cfg, n, t))


# -- tile order and reduced words ----------------------------------------

def _neighbors(u, v):
    return abs(u.xc - v.xc) == 1 and abs(u.yc - v.yc) == 1


def _linearize(ts, before, key):
    """Topological order respecting `before` on adjacent tiles, greedy
    by `key` among the available ones."""
    succ = {u: [] for u in ts}
    indeg = {u: 0 for u in ts}
    for u in ts:
        for v in ts:
            if u is not v and _neighbors(u, v) and before(u, v):
                succ[u].append(v)
                indeg[v] += 1
    heap = [(key(u), u) for u in ts if indeg[u] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, u = heapq.heappop(heap)
        out.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, (key(v), v))
    if len(out) != len(ts):
        raise RuntimeError("tile precedence is cyclic")  # cannot happen
    return out


def tau_order(cfg, n, t):
    """Canonical removal order: left tiles first, inner column before
    outer, smallest content available; then right tiles mirrored."""
    ts = tiles(cfg, n, t)
    left = [u for u in ts if u.side == "L"]
    right = [u for u in ts if u.side == "R"]
    ordered = _linearize(
        left, lambda u, v: u.xc > v.xc, key=lambda u: (u.top_y, -u.xc)
    )
    ordered += _linearize(
        right, lambda u, v: u.xc < v.xc, key=lambda u: (-u.top_y, u.xc)
    )
    return ordered


def reduced_word(cfg, n, t):
    """Letters of a reduced expression for the group element moving the
    distinguished tableau to t, printed last-applied-first."""
    return [u.content for u in reversed(tau_order(cfg, n, t))]


def word_to_tableau(n, shape, word, check=False):
    """Apply a reduced word (printed order) to the distinguished
    tableau.  With check=True every intermediate must stay standard."""
    entries = t_lambda(n, shape).entries
    for c in reversed(word):
        entries = weyl_act(c, entries)
        if check and not is_standard(n, shape, entries):
            raise ValueError("word leaves the standard tableaux at letter %d" % c)
    return Tableau(shape, entries)


def degree_klr(cfg, n, t):
    """Degree recomputed by threading the reduced word through the
    residue sequence of the distinguished tableau."""
    seq = list(residue_seq(cfg, n, t_lambda(n, t.shape)))
    alphas = {cfg.point_residue(lbl) for lbl in ALPHA_LABELS}
    deg = 0
    for u in tau_order(cfg, n, t):
        c = u.content
        if c == 0:
            r = seq[0]
            if cfg.res_invert(r) == r:
                deg -= 2
            elif r in alphas:
                deg += 1
            seq[0] = cfg.res_invert(r)
        else:
            a, b = seq[c - 1], seq[c]
            if a == b:
                deg -= 2
            elif b == cfg.res_shift(a, 1) or b == cfg.res_shift(a, -1):
                deg += 1
            seq[c - 1], seq[c] = b, a
    return deg


# -- signed permutations -------------------------------------------------

def perm_from_tableau(n, t):
    """The signed permutation w with t = w(t_lambda), as the tuple
    (w(1), ..., w(n))."""
    source = t_lambda(n, t.shape).entries
    w = [0] * (n + 1)
    for a, b in zip(source, t.entries):
        if a > 0:
            w[a] = b
        else:
            w[-a] = -b
    return tuple(w[1:])


def coxeter_length(w):
    """Length in the signed permutation group: inversions of the signed
    value sequence plus the sum of the absolute negative values."""
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    return inv + sum(-v for v in w if v < 0)


# -- widest realization --------------------------------------------------

def max_shape(cfg, n, path) -> Optional[Shape]:
    """Shape of the widest tableau this path (or its mirror) presents.

    Walking right from the start, the first alpha-type marker decides;
    if the shape it implies is not admissible the answer can only be
    the zero shape, checked at the far endpoint.
    """
    xs = positions(path)
    x0, xn = xs[0], xs[-1]
    if x0 > xn:
        return max_shape(cfg, n, negate(cfg, path))
    m = 0
    while xn - x0 - 2 * m >= 1:
        label = cfg.marker_label_at(path.orbit, x0 + 1 + 2 * m)
        if label in ALPHA_LABELS:
            shape = Shape(xn - x0 - 2 * m, label)
            if is_valid_shape(n, shape):
                return shape
            break
        m += 1
    if n % 2 == 0:
        if cfg.marker_label_at(path.orbit, xn + 1) == "theta":
            return Shape(0, "theta")
        if cfg.marker_label_at(path.orbit, xn - 1) == "theta_inv":
            return Shape(0, "theta")
    elif cfg.marker_label_at(path.orbit, xn) in ("theta", "theta_inv"):
        return Shape(0, "theta")
    return None


def is_ladder(cfg, n, t):
    """A tableau is a ladder when its own path is the widest rightward
    presentation within its residue class."""
    p = embed(cfg, n, t)
    if max_shape(cfg, n, p) != t.shape:
        return False
    w = width(p)
    for u in residue_class_tableaux(cfg, n, t):
        if width(embed(cfg, n, u)) > w:
            return False
    return True

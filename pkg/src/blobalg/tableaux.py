"""One-row standard tableaux for the two-boundary setting.

A shape is a pair (k, marker): k boxes of "alternating part are gone",
i.e. n-k boxes to the left of the wall survive in pairs, and the marker
names which special point sits on the bead box.  The shapes for a given
n are (0, theta) together with (k, alpha) for k = n, n-2, ..., down to
1 or 2; k = 1 admits only alpha1 and k = 2 excludes alpha1_inv.

A standard tableau of shape (k, marker) is a filling of boxes 1..n by
+-1..+-n, strictly increasing left to right, whose negative entries all
sit strictly left of the bead box p = (n-k)/2 + 1.  For (0, theta) the
bead bound is waived and any number of entries may be negative.  Since
entries increase, the negative entries always form a prefix, so a
tableau is the same thing as the set of its negated values, bounded in
size by p-1 (not bounded for (0, theta)).

Residues: the content of box j is marker * q^(2(j-p)), and res_i(t) is
the content of the box holding +-i, inverted when the entry is negative.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .params import ALPHA_LABELS, Residue

__all__ = [
    "Shape",
    "Tableau",
    "shapes",
    "is_valid_shape",
    "validate_shape",
    "bead",
    "max_negatives",
    "count_std",
    "from_negated_set",
    "enumerate_std",
    "t_lambda",
    "is_standard",
    "weyl_act",
    "shape_base",
    "box_contents",
    "residue_seq",
    "cstd",
    "cstd_brute",
    "shape_str",
    "parse_shape",
    "tableau_str",
    "parse_tableau",
    "shape_sort_key",
]

SHAPE_MARKERS = ALPHA_LABELS + ("theta",)


class Shape(NamedTuple):
    k: int
    marker: str


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    entries: tuple

    def negated_set(self):
        return frozenset(-v for v in self.entries if v < 0)


def shapes(n):
    """All shapes for n boxes, largest first.

    Within equal k the markers come in the fixed order alpha1, alpha2,
    alpha1_inv, alpha2_inv; (0, theta) is always present and always
    last.
    """
    out = []
    k = n
    while k >= 1:
        for marker in _markers_for(k):
            out.append(Shape(k, marker))
        k -= 2
    out.append(Shape(0, "theta"))
    return out


def _markers_for(k):
    if k >= 3:
        return ALPHA_LABELS
    if k == 2:
        return ("alpha1", "alpha2", "alpha2_inv")
    return ("alpha1",)


def is_valid_shape(n, shape):
    k, marker = shape
    if k == 0:
        return marker == "theta" and n >= 0
    return (
        1 <= k <= n
        and (n - k) % 2 == 0
        and marker in _markers_for(k)
    )


def validate_shape(n, shape):
    if not is_valid_shape(n, shape):
        raise ValueError("%s is not a shape for n=%d" % (shape_str(shape), n))
    return shape


def shape_sort_key(shape):
    """Sort key for the canonical total order (largest shape first)."""
    return (-shape.k, SHAPE_MARKERS.index(shape.marker))


def bead(n, k):
    """Index of the bead box."""
    return (n - k) // 2 + 1


def max_negatives(n, shape):
    if shape.k == 0:
        return n
    return bead(n, shape.k) - 1


def count_std(n, shape):
    """Number of standard tableaux, by the binomial formula."""
    if shape.k == 0:
        return 2**n
    p = bead(n, shape.k)
    return sum(math.comb(n, j) for j in range(p))


def from_negated_set(n, shape, negs):
    negs = frozenset(negs)
    if len(negs) > max_negatives(n, shape):
        raise ValueError("too many negative entries for %s" % (shape_str(shape),))
    if not all(1 <= v <= n for v in negs):
        raise ValueError("negated values must lie in 1..n")
    entries = sorted(-v for v in negs) + sorted(set(range(1, n + 1)) - negs)
    return Tableau(shape, tuple(entries))


def enumerate_std(n, shape):
    """Yield all standard tableaux, ordered by negated-value set."""
    for j in range(max_negatives(n, shape) + 1):
        for negs in combinations(range(1, n + 1), j):
            yield from_negated_set(n, shape, negs)


def t_lambda(n, shape):
    """The distinguished tableau: -2, -4, ... to the left of the bead,
    1 on the bead, odd entries rightwards while boxes remain paired,
    then consecutive."""
    validate_shape(n, shape)
    if n == 0:
        return Tableau(shape, ())
    p = bead(n, shape.k)
    entries = [-2 * (p - 1 - j) for j in range(p - 1)]
    entries.append(1)
    v = 3
    for box in range(p + 1, n + 1):
        if box <= 2 * p - 1:
            entries.append(v)
            v += 2
        else:
            entries.append(box)
    return Tableau(shape, tuple(entries))


def is_standard(n, shape, entries):
    """Check a raw entry tuple (boxes left to right)."""
    if len(entries) != n:
        return False
    if sorted(abs(v) for v in entries) != list(range(1, n + 1)):
        return False
    if any(entries[i] >= entries[i + 1] for i in range(n - 1)):
        return False
    return sum(1 for v in entries if v < 0) <= max_negatives(n, shape)


def weyl_act(j, entries):
    """Apply the signed-permutation generator s_j to the entries.

    s_0 flips the sign of the entry +-1; s_j for j >= 1 swaps the values
    j and j+1, signs riding along.  Boxes stay put, so the result need
    not be standard.
    """
    if j == 0:
        return tuple(-v if abs(v) == 1 else v for v in entries)
    out = []
    for v in entries:
        a = abs(v)
        if a == j:
            a = j + 1
        elif a == j + 1:
            a = j
        out.append(a if v > 0 else -a)
    return tuple(out)


def shape_base(cfg, shape):
    """Raw lattice coordinate (orbit, position) of the shape's marker.

    Unlike point_residue this is not reduced mod 2e; it anchors the
    path embedding, where positions are genuine integers.
    """
    label = shape.marker
    inv = label.endswith("_inv")
    if inv:
        label = label[:-4]
    spec = cfg.points[label]
    if hasattr(spec, "exp"):
        orbit, pos = "q", spec.exp
    else:
        orbit, pos = spec.orbit, spec.offset
    if inv:
        pos = cfg.raw_invert_position(orbit, pos)
        orbit = cfg.invert_orbit(orbit)
    return orbit, pos


def box_contents(cfg, n, shape):
    """Content residues of boxes 1..n (index 0 unused)."""
    pr = cfg.point_residue(shape.marker)
    p = bead(n, shape.k)
    return [None] + [cfg.res_shift(pr, j - p) for j in range(1, n + 1)]


def residue_seq(cfg, n, t):
    """res_1(t), ..., res_n(t)."""
    contents = box_contents(cfg, n, t.shape)
    by_value = {}
    for box, v in enumerate(t.entries, start=1):
        by_value[abs(v)] = (box, v > 0)
    out = []
    for i in range(1, n + 1):
        box, positive = by_value[i]
        r = contents[box]
        out.append(r if positive else cfg.res_invert(r))
    return tuple(out)


def _target_residues(cfg, n, target):
    if isinstance(target, Shape):
        return residue_seq(cfg, n, t_lambda(n, target))
    if isinstance(target, Tableau):
        return residue_seq(cfg, n, target)
    target = tuple(target)
    if len(target) != n or not all(isinstance(r, Residue) for r in target):
        raise ValueError("target must be a Shape, a Tableau, or n Residues")
    return target


def cstd(cfg, n, shape, target):
    """Standard tableaux of the given shape whose residue sequence
    matches the target (a Shape meaning res of its t_lambda, a Tableau,
    or an explicit residue sequence).

    Walks the path lattice: after j steps at position x, step j+1 moves
    SE with residue (orbit, x+j+1) or SW with the inverse of
    (orbit, x-j-1); only matching steps are taken, so the search
    branches only where both match.  One start position per admissible
    count of negative entries.
    """
    validate_shape(n, shape)
    R = _target_residues(cfg, n, target)
    orbit, b = shape_base(cfg, shape)
    k = shape.k
    half = (n - k) // 2
    found = []

    def go(j, x, sw, negs):
        if len(sw) > negs or len(sw) + (n - j) < negs:
            return
        if j == n:
            found.append(frozenset(sw))
            return
        step = j + 1
        if cfg.residue(orbit, x + step) == R[j]:
            go(j + 1, x + 1, sw, negs)
        if cfg.res_invert(cfg.residue(orbit, x - step)) == R[j]:
            sw.append(step)
            go(j + 1, x - 1, sw, negs)
            sw.pop()

    for negs in range(max_negatives(n, shape) + 1):
        go(0, b - 1 - 2 * (half - negs), [], negs)

    found.sort(key=lambda s: (len(s), sorted(s)))
    return [from_negated_set(n, shape, s) for s in found]


def cstd_brute(cfg, n, shape, target):
    """Reference implementation: filter the full enumeration."""
    R = _target_residues(cfg, n, target)
    return [t for t in enumerate_std(n, shape) if residue_seq(cfg, n, t) == R]


# -- text forms ----------------------------------------------------------

_SHAPE_RE = re.compile(r"^\((\d+),(alpha1|alpha2|alpha1_inv|alpha2_inv|theta)\)$")


def shape_str(shape):
    return "(%d,%s)" % (shape.k, shape.marker)


def parse_shape(text):
    m = _SHAPE_RE.match(text.strip())
    if not m:
        raise ValueError(
            'bad shape %r; expected "(k,marker)" with marker one of %s'
            % (text, ", ".join(SHAPE_MARKERS))
        )
    return Shape(int(m.group(1)), m.group(2))


def tableau_str(t):
    return "%s:[%s]" % (shape_str(t.shape), ",".join(str(v) for v in t.entries))


def parse_tableau(text, n=None):
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise ValueError('bad tableau %r; expected "(k,marker):[entries]"' % text)
    shape = parse_shape(head)
    tail = tail.strip()
    if not (tail.startswith("[") and tail.endswith("]")):
        raise ValueError("bad entry list %r" % tail)
    body = tail[1:-1].strip()
    entries = tuple(int(v) for v in body.split(",")) if body else ()
    if n is None:
        n = len(entries)
    validate_shape(n, shape)
    if not is_standard(n, shape, entries):
        raise ValueError("%r is not standard for n=%d" % (text, n))
    return Tableau(shape, entries)

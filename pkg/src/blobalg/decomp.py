"""Graded Delta-matrices, their equivalence blocks, and the unique
N*A factorization that yields the conjectural graded decomposition
matrix, simple dimensions, and ladder lower bounds."""

import warnings
from dataclasses import dataclass, field, replace

from . import laurent
from .paths import degree_tiles, is_ladder
from .tableaux import (
    Shape,
    count_std,
    cstd,
    enumerate_std,
    residue_seq,
    shape_str,
    shapes,
)

__all__ = [
    "GradedMatrix",
    "delta_matrix",
    "blocks",
    "na_factorize",
    "decomposition_matrix",
    "delta_graded_dim",
    "simple_graded_dims",
    "simple_dim_lower_bounds",
]

_ONE = {0: 1}


def _label(s):
    return shape_str(s) if isinstance(s, Shape) else str(s)


@dataclass(frozen=True)
class GradedMatrix:
    """Square matrix of Laurent polynomials over an ordered label list.

    Rows and columns are indexed by the same ``shapes`` sequence; the
    entry in row ``la``, column ``mu`` is a Laurent polynomial in the
    dict representation of :mod:`.laurent`.  ``conjectural`` marks
    matrices whose content rests on the decomposition conjecture and is
    carried into every serialization.
    """

    shapes: tuple
    rows: tuple
    conjectural: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) != len(self.shapes):
            raise ValueError("row count does not match label count")
        for r in self.rows:
            if len(r) != len(self.shapes):
                raise ValueError("matrix is not square")

    @property
    def dim(self):
        return len(self.shapes)

    @classmethod
    def identity(cls, labels):
        labels = tuple(labels)
        m = len(labels)
        return cls(labels, tuple(
            tuple(dict(_ONE) if i == j else {} for j in range(m))
            for i in range(m)))

    def index(self, label):
        return self.shapes.index(label)

    def entry(self, la, mu):
        return self.rows[self.index(la)][self.index(mu)]

    def labeled_entries(self):
        """Nonzero entries as a {(row label, column label): poly} dict."""
        out = {}
        for i, la in enumerate(self.shapes):
            for j, mu in enumerate(self.shapes):
                if self.rows[i][j]:
                    out[(la, mu)] = self.rows[i][j]
        return out

    def is_lower_unitriangular(self):
        for i in range(self.dim):
            if self.rows[i][i] != _ONE:
                return False
            for j in range(i + 1, self.dim):
                if self.rows[i][j]:
                    return False
        return True

    def submatrix(self, keep):
        keep = set(keep)
        idx = [i for i, s in enumerate(self.shapes) if s in keep]
        return GradedMatrix(
            tuple(self.shapes[i] for i in idx),
            tuple(tuple(self.rows[i][j] for j in idx) for i in idx),
            conjectural=self.conjectural)

    def mul(self, other):
        if self.shapes != other.shapes:
            raise ValueError("label mismatch in matrix product")
        m = self.dim
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = {}
                for k in range(m):
                    if self.rows[i][k] and other.rows[k][j]:
                        acc = laurent.add(
                            acc, laurent.mul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            rows.append(tuple(row))
        return GradedMatrix(self.shapes, tuple(rows))

    def to_json_obj(self):
        obj = {
            "shapes": [_label(s) for s in self.shapes],
            "entries": [[laurent.to_json_obj(e) for e in row]
                        for row in self.rows],
        }
        if self.conjectural:
            obj["conjectural"] = True
        return obj

    def to_tsv(self):
        lines = []
        if self.conjectural:
            lines.append("# conjectural")
        labels = [_label(s) for s in self.shapes]
        lines.append("\t".join([""] + labels))
        for lab, row in zip(labels, self.rows):
            lines.append("\t".join([lab] + [laurent.to_str(e) for e in row]))
        return "\n".join(lines) + "\n"


def _delta_column(args):
    cfg, n, order, mu = args
    col = []
    for la in order:
        ent = {}
        for s in cstd(cfg, n, la, mu):
            ent = laurent.add(ent, {degree_tiles(cfg, n, s): 1})
        col.append(ent)
    return col


def delta_matrix(cfg, n, restrict=None, jobs=1):
    """Matrix of graded coloured-tableau counts, rows and columns in
    the canonical shape order.

    Entry (la, mu) is the sum of v^deg over the standard tableaux of
    shape la coloured like T_mu.  ``restrict`` cuts the matrix down to
    the given shapes; ``jobs`` > 1 distributes columns over processes.
    """
    order = shapes(n)
    if restrict is not None:
        wanted = set(restrict)
        missing = wanted.difference(order)
        if missing:
            raise ValueError("shapes not in the poset: %s"
                             % ", ".join(sorted(map(_label, missing))))
        order = [s for s in order if s in wanted]
    tasks = [(cfg, n, order, mu) for mu in order]
    if jobs > 1 and len(order) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cols = list(pool.map(_delta_column, tasks))
    else:
        cols = [_delta_column(t) for t in tasks]
    rows = tuple(tuple(cols[j][i] for j in range(len(order)))
                 for i in range(len(order)))
    for i, la in enumerate(order):
        assert rows[i][i] == _ONE, "diagonal entry != 1 at %s" % _label(la)
        for j, mu in enumerate(order):
            if i < j:
                assert not rows[i][j], (
                    "entry above the diagonal at (%s, %s)"
                    % (_label(la), _label(mu)))
            if i != j and la.k == mu.k:
                assert not rows[i][j], (
                    "nonzero entry between distinct shapes of equal k: "
                    "(%s, %s)" % (_label(la), _label(mu)))
    return GradedMatrix(tuple(order), rows)


def blocks(delta):
    """Connected components of the nonzero-support graph of a
    Delta-matrix, each a tuple of labels in matrix order."""
    m = delta.dim
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(m):
        for j in range(m):
            if i != j and delta.rows[i][j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    comps = {}
    for i in range(m):
        comps.setdefault(find(i), []).append(i)
    out = [tuple(delta.shapes[i] for i in members)
           for members in comps.values()]
    out.sort(key=lambda blk: delta.index(blk[0]))
    return out


def na_factorize(delta):
    """Split a lower-unitriangular Delta into N*A with N strictly
    positive off the diagonal and A bar-symmetric.

    Works column by column from the right, rows nearest the diagonal
    first, so every term of the correction sum is already known.  The
    recursion runs inside each block; entries between blocks are zero
    on both sides.
    """
    if not delta.is_lower_unitriangular():
        raise ValueError("matrix is not lower unitriangular")
    m = delta.dim
    nrows = [[dict(_ONE) if i == j else {} for j in range(m)]
             for i in range(m)]
    arows = [[dict(_ONE) if i == j else {} for j in range(m)]
             for i in range(m)]
    for blk in blocks(delta):
        pos = [delta.index(s) for s in blk]
        for c in reversed(pos):
            for r in pos:
                if r <= c:
                    continue
                f = delta.rows[r][c]
                for k in pos:
                    if c < k < r:
                        f = laurent.sub(
                            f, laurent.mul(nrows[r][k], arows[k][c]))
                a, nn = laurent.bar_split(f)
                arows[r][c] = a
                nrows[r][c] = nn
    nmat = GradedMatrix(delta.shapes, tuple(map(tuple, nrows)))
    amat = GradedMatrix(delta.shapes, tuple(map(tuple, arows)))
    return nmat, amat


def decomposition_matrix(cfg, n, restrict=None, jobs=1):
    """Conjectural graded decomposition matrix: the N factor of the
    Delta-matrix.  Off-diagonal coefficients are expected nonnegative;
    a violation is reported as a warning, not an error."""
    delta = delta_matrix(cfg, n, restrict=restrict, jobs=jobs)
    nmat, _ = na_factorize(delta)
    bad = [(la, mu) for (la, mu), p in nmat.labeled_entries().items()
           if any(c < 0 for c in p.values())]
    if bad:
        warnings.warn(
            "negative coefficients in the decomposition matrix at: %s"
            % ", ".join("(%s, %s)" % (_label(a), _label(b)) for a, b in bad))
    return replace(nmat, conjectural=True)


def delta_graded_dim(cfg, n, shape):
    """Graded dimension of a standard module: sum of v^deg over the
    standard tableaux of the shape."""
    out = {}
    for t in enumerate_std(n, shape):
        out = laurent.add(out, {degree_tiles(cfg, n, t): 1})
    return out


def simple_graded_dims(cfg, n, jobs=1):
    """Conjectural graded dimensions of the simple modules, solved by
    back-substitution against the decomposition matrix."""
    nmat = decomposition_matrix(cfg, n, jobs=jobs)
    dims = {}
    for r, la in enumerate(nmat.shapes):
        acc = delta_graded_dim(cfg, n, la)
        assert laurent.eval_one(acc) == count_std(n, la)
        for c in range(r):
            if nmat.rows[r][c]:
                acc = laurent.sub(
                    acc, laurent.mul(nmat.rows[r][c], dims[nmat.shapes[c]]))
        dims[la] = acc
    return dims


def simple_dim_lower_bounds(cfg, n):
    """Lower bound for each simple dimension at v=1: the number of
    standard tableaux of the shape sharing a residue sequence with a
    ladder tableau of that shape."""
    out = {}
    for la in shapes(n):
        by_res = {}
        for t in enumerate_std(n, la):
            by_res.setdefault(residue_seq(cfg, n, t), []).append(t)
        bound = 0
        for group in by_res.values():
            if any(is_ladder(cfg, n, t) for t in group):
                bound += len(group)
        out[la] = bound
    return out

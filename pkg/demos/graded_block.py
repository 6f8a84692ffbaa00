"""Walk through the graded pipeline on the largest interesting block.

Builds the n=16 graded count matrix for the e=5 one-orbit configuration,
picks out the eight-shape block containing (16,alpha1), and factorizes
it.  On this block the decomposition matrix equals the count matrix and
the adjustment is trivial, which is the cleanest illustration of the
positivity/bar-symmetry split.

Run:  python3 demos/graded_block.py
"""

from blobalg.decomp import blocks, delta_matrix, na_factorize
from blobalg.params import Formal, Paired, make_config
from blobalg.tableaux import parse_shape, shape_str

cfg = make_config(
    5,
    {"alpha1": Formal("A", 0), "alpha2": Formal("A", 4), "theta": Formal("A", 6)},
    {"A": Paired("A*")},
)

n = 16
delta = delta_matrix(cfg, n)
print("n = %d: %d shapes, %d blocks" % (n, delta.dim, len(blocks(delta))))

block = next(b for b in blocks(delta) if parse_shape("(16,alpha1)") in b)
print("block of (16,alpha1):", ", ".join(shape_str(s) for s in block))
print()

sub = delta.submatrix(block)
print(sub.to_tsv())

nmat, amat = na_factorize(sub)
print("N == Delta:", nmat == sub)
print("A == Id:   ", all(not e or i == j
                         for i, row in enumerate(amat.rows)
                         for j, e in enumerate(row)))

"""Graded simple dimensions versus the combinatorial lower bound.

For the e=5 one-orbit configuration the widest-shape cells stay simple
while the theta-labelled simple collapses well below its 2^n standard
count.  The ladder-tableau bound tracks the collapsed dimension from
below; at these sizes the two agree on every shape.

Run:  python3 demos/simple_dimensions.py
"""

from blobalg import laurent
from blobalg.decomp import simple_dim_lower_bounds, simple_graded_dims
from blobalg.params import Formal, Paired, make_config
from blobalg.tableaux import Shape, count_std, shape_str

cfg = make_config(
    5,
    {"alpha1": Formal("A", 0), "alpha2": Formal("A", 4), "theta": Formal("A", 6)},
    {"A": Paired("A*")},
)

for n in range(2, 7):
    dims = simple_graded_dims(cfg, n)
    bounds = simple_dim_lower_bounds(cfg, n)
    theta = Shape(0, "theta")
    print("n = %d: dim L(0,theta) = %d out of %d standard tableaux"
          % (n, laurent.eval_one(dims[theta]), count_std(n, theta)))
    for shape, poly in dims.items():
        flat = laurent.eval_one(poly)
        marker = "" if bounds[shape] == flat else "  (bound %d)" % bounds[shape]
        print("  %-16s %-28s dim %d%s"
              % (shape_str(shape), laurent.to_str(poly), flat, marker))

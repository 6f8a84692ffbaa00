"""Spot-check the numeric modules against every defining relation.

Draws one generic seed, builds the calibrated module for each shape at
n = 5, and prints the worst residual per relation family.  Everything
should sit far below the 1e-8 acceptance tolerance; the blob column
exercises the quotient relations (kappa on theta shapes, annihilation
elsewhere).

Run:  python3 demos/relation_residuals.py
"""

from blobalg.calibrated import (
    blob_check,
    build_calibrated,
    check_hecke_relations,
    check_jm_spectrum,
    check_tl_relations,
    make_seed,
)
from blobalg.params import Formal, Paired, make_config
from blobalg.tableaux import shape_str, shapes

cfg = make_config(
    None,
    {"alpha1": Formal("A", 0), "alpha2": Formal("B", 0), "theta": Formal("C", 0)},
    {"A": Paired("A*"), "B": Paired("B*"), "C": Paired("C*")},
)

seed = make_seed(cfg, seed=2026)
n = 5
print("%-16s %10s %10s %10s %10s" % ("shape", "hecke", "tl", "jm", "blob"))
for shape in shapes(n):
    mod = build_calibrated(cfg, n, shape, seed)
    cols = [check(mod)["max_residual"]
            for check in (check_hecke_relations, check_tl_relations,
                          check_jm_spectrum, blob_check)]
    print("%-16s %10.2e %10.2e %10.2e %10.2e"
          % ((shape_str(shape),) + tuple(cols)))

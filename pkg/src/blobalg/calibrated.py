"""Floating-point models of the calibrated modules.

A numeric seed fixes complex values for q, the boundary parameters q0
and qn, and a base value for every formal orbit, consistently with a
parameter configuration.  Each shape then yields matrices for the
generators T_0, T_1, ..., T_{n-1}, T_0v acting on the standard tableaux
of the shape, with T_n reconstructed by conjugation and the commuting
family X_1, ..., X_n built recursively.  Relation checkers report the
worst operator-norm residual per relation.

Everything here is double precision on purpose: the relations are
polynomial identities and a generic seed keeps every denominator well
conditioned, so residuals land many orders of magnitude below the
default tolerance of 1e-8.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .params import res_to_complex
from .tableaux import Tableau, enumerate_std, is_standard, residue_seq, weyl_act

__all__ = [
    "NonGenericSeedError",
    "NumericSeed",
    "make_seed",
    "residue_value",
    "gamma_from_shape",
    "CalibratedModule",
    "build_calibrated",
    "check_hecke_relations",
    "check_tl_relations",
    "check_jm_spectrum",
    "blob_check",
]

DEFAULT_TOL = 1e-8
_ANNULUS = (0.5, 2.0)
_MARGIN = 1e-6  # numeric separation demanded of the special points
# Squares of paired orbit bases must stay this far from q-powers: such a
# near miss is a near-singular tableau denominator, and relation
# residuals grow like a power of its inverse.  The wide margin costs a
# modest fraction of samples and keeps residuals near 1e-10.
_DENOM_MARGIN = 0.25


class NonGenericSeedError(ValueError):
    pass


@dataclass(frozen=True)
class NumericSeed:
    q: complex
    q0: complex
    qn: complex
    orbit_bases: dict = field(default_factory=dict)
    theta_value: complex = 0j
    tolerance: float = DEFAULT_TOL

    @property
    def alpha1(self):
        return self.q0 * self.qn

    @property
    def alpha2(self):
        return -self.q0 / self.qn


def residue_value(cfg, seed, r):
    return res_to_complex(cfg, r, seed.q, seed.orbit_bases)


def _bracket(x):
    return x + 1 / x


def _sample_annulus(rng):
    radius = math.exp(rng.uniform(math.log(_ANNULUS[0]), math.log(_ANNULUS[1])))
    return radius * cmath.exp(2j * math.pi * rng.random())


def _in_annulus(z):
    return _ANNULUS[0] - 1e-12 <= abs(z) <= _ANNULUS[1] + 1e-12


def _sample_q(cfg, rng):
    if cfg.e is not None:
        period = 2 * cfg.e
        j = rng.randrange(1, period)
        while math.gcd(j, period) != 1:
            j = rng.randrange(1, period)
        return cmath.exp(2j * math.pi * j / period)
    while True:
        q = cmath.exp(2j * math.pi * rng.uniform(0.01, 0.99))
        # low harmonics are the ones that show up as denominators, so
        # they get a hard margin; high ones only need to stay nonzero
        if all(abs(q ** (2 * m) - 1) > 0.1 for m in range(1, 17)) and all(
            abs(q ** (2 * m) - 1) > 0.01 for m in range(17, 65)
        ):
            return q


def _point_site(cfg, label):
    """(orbit or None, exponent) of a point; None orbit means integral."""
    spec = cfg.points[label]
    if hasattr(spec, "exp"):
        return None, spec.exp
    return spec.orbit, spec.offset


def _separated(cfg, seed, margin=_MARGIN):
    """Numeric version of the configuration assumptions: the four base
    points stay apart, their q^2 shifts avoid the bases, nothing lands
    on +-1, and theta stays clear of the bases and small q-powers.

    Paired orbit bases must additionally keep their squares away from
    small q-powers: a near miss there puts a tableau denominator close
    to zero and inflates every residual downstream.
    """
    q = seed.q
    for orbit, z in seed.orbit_bases.items():
        if hasattr(cfg.inversions.get(orbit), "partner"):
            zz = z * z
            if any(abs(zz - q**j) < _DENOM_MARGIN for j in range(-32, 33)):
                return False
    a1, a2 = seed.alpha1, seed.alpha2
    bases = [a1, 1 / a1, a2, 1 / a2]
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(bases[i] - bases[j]) < margin:
                return False
    twelve = list(bases)
    for b in bases:
        for shift in (q**2, q**-2):
            twelve.append(b * shift)
            if any(abs(b * shift - c) < margin for c in bases):
                return False
    if any(abs(z - 1) < margin or abs(z + 1) < margin for z in twelve):
        return False
    th = seed.theta_value
    if abs(th - 1) < margin or abs(th + 1) < margin:
        return False
    if any(abs(th - b) < margin for b in bases):
        return False
    for m in (1, 2):
        for s in (q**m, q**-m):
            if abs(th - s) < margin or abs(th + s) < margin:
                return False
    return True


def make_seed(cfg, seed=None, tol=DEFAULT_TOL):
    """Draw a generic numeric seed consistent with the configuration.

    q0 and qn are pinned exactly to whatever the configuration forces
    (alpha1 = q0*qn, alpha2 = -q0/qn); the leftover freedom is sampled
    from an annulus and rejected until every special point is cleanly
    separated.
    """
    rng = random.Random(seed)
    o1, c1 = _point_site(cfg, "alpha1")
    o2, c2 = _point_site(cfg, "alpha2")
    ot, ct = _point_site(cfg, "theta")
    for _ in range(500):
        q = _sample_q(cfg, rng)
        bases = {}
        sign = rng.choice((1, -1))
        if o1 == o2:
            # the ratio alpha1/alpha2 does not involve a free base
            qn = sign * cmath.sqrt(-(q**c1) / q**c2)
            if o1 is None:
                q0 = q**c1 / qn
            else:
                q0 = _sample_annulus(rng)
                bases[o1] = q0 * qn * q**-c1
        elif o1 is None:
            qn = _sample_annulus(rng)
            q0 = q**c1 / qn
            bases[o2] = -q0 / qn * q**-c2
        elif o2 is None:
            qn = _sample_annulus(rng)
            q0 = -(q**c2) * qn
            bases[o1] = q0 * qn * q**-c1
        else:
            q0, qn = _sample_annulus(rng), _sample_annulus(rng)
            bases[o1] = q0 * qn * q**-c1
            bases[o2] = -q0 / qn * q**-c2
        if ot is not None and ot not in bases:
            inv = cfg.inversions.get(ot)
            if hasattr(inv, "center"):
                bases[ot] = rng.choice((1, -1)) * q ** (-(inv.center // 2))
            else:
                bases[ot] = _sample_annulus(rng)
        for orbit in list(bases):
            partner = cfg.invert_orbit(orbit)
            if partner != orbit:
                bases[partner] = 1 / bases[orbit]
        if not (_in_annulus(q0) and _in_annulus(qn)):
            continue
        if not all(_in_annulus(z) for z in bases.values()):
            continue
        theta_value = bases.get(ot, 1) * q**ct
        candidate = NumericSeed(q, q0, qn, bases, theta_value, tol)
        if _separated(cfg, candidate):
            return candidate
    raise NonGenericSeedError("could not sample a well-separated seed")


def gamma_from_shape(cfg, n, shape, seed):
    """Leading eigenvalue gamma_1: the value of the first box content."""
    base = residue_value(cfg, seed, cfg.point_residue(shape.marker))
    if shape.k > 0:
        p = (n - shape.k) // 2 + 1
        return base * seed.q ** (-2 * (p - 1))
    if n % 2 == 0:
        return base * seed.q**-n
    return base * seed.q ** (-(n - 1))


@dataclass
class CalibratedModule:
    shape: object
    n: int
    basis: list
    gamma: list  # gamma[row][i-1] = value of res_i
    t0: np.ndarray
    ts: list  # T_1 .. T_{n-1}
    t0v: np.ndarray
    tn: np.ndarray
    xs: list  # X_1 .. X_n
    seed: NumericSeed

    @property
    def dim(self):
        return len(self.basis)

    def generators(self):
        """(name, matrix, quadratic parameter) for T_0 .. T_n and T_0v."""
        out = [("T0", self.t0, self.seed.q0)]
        out += [("T%d" % (i + 1), m, self.seed.q) for i, m in enumerate(self.ts)]
        out.append(("Tn", self.tn, self.seed.qn))
        out.append(("T0v", self.t0v, self.seed.qn))
        return out


def _flip(shape, n, t, i):
    moved = weyl_act(i, t.entries)
    if is_standard(n, shape, moved):
        return Tableau(shape, moved)
    return None


def build_calibrated(cfg, n, shape, seed):
    """Assemble the generator matrices on the standard tableaux basis.

    Raises NonGenericSeedError when an action denominator degenerates,
    naming the offending tableau and index.
    """
    q, q0, qn = seed.q, seed.q0, seed.qn
    big_q0, big_qn = q0 - 1 / q0, qn - 1 / qn
    basis = list(enumerate_std(n, shape))
    index = {t: r for r, t in enumerate(basis)}
    gamma = [
        [residue_value(cfg, seed, r) for r in residue_seq(cfg, n, t)] for t in basis
    ]
    dim = len(basis)

    ts = []
    for i in range(1, n):
        mat = np.zeros((dim, dim), dtype=complex)
        for col, t in enumerate(basis):
            denom = 1 - gamma[col][i - 1] / gamma[col][i]
            if abs(denom) < seed.tolerance:
                raise NonGenericSeedError(
                    "non-generic seed: T_%d denominator ~ 0 on %s" % (i, t.entries)
                )
            a = (q - 1 / q) / denom
            mat[col, col] = a
            other = _flip(shape, n, t, i)
            # evaluate the pair coefficient once, from the lower column:
            # both radicands agree analytically, but evaluating them
            # independently can pick opposite branches across the cut
            if other is not None and index[other] > col:
                c = cmath.sqrt(-(a - q) * (a + 1 / q))
                mat[index[other], col] = c
                mat[col, index[other]] = c
        ts.append(mat)

    t0 = np.zeros((dim, dim), dtype=complex)
    for col, t in enumerate(basis):
        g = 1 / gamma[col][0]
        denom = 1 - g * g
        if abs(denom) < seed.tolerance:
            raise NonGenericSeedError(
                "non-generic seed: T_0 denominator ~ 0 on %s" % (t.entries,)
            )
        a = (big_q0 + big_qn * g) / denom
        t0[col, col] = a
        other = _flip(shape, n, t, 0)
        if other is not None and index[other] > col:
            c = cmath.sqrt(-(a - q0) * (a + 1 / q0))
            t0[index[other], col] = c
            t0[col, index[other]] = c

    # T_0v has diagonal (Qn + Q0*g)/(1 - g^2) and off-diagonal
    # g*sqrt(-(b - qn)(b + 1/qn)), but the branch of that root is not
    # free: the product of the T_0v and T_0 pair coefficients is pinned
    # by X_1 = T_0v T_0 acting diagonally.  Deriving T_0v from the exact
    # diagonal of X_1 selects the coherent branch automatically (its
    # diagonal provably reduces to the closed form above).
    eye = np.eye(dim, dtype=complex)
    x1 = np.diag(np.array([gamma[r][0] for r in range(dim)], dtype=complex))
    t0v = x1 @ (t0 + (1 / q0 - q0) * eye)

    tn = t0v
    for mat in ts:  # T_1 first, T_{n-1} outermost
        tn = mat @ tn @ (mat + (1 / q - q) * eye)

    xs = [t0v @ t0]
    for mat in ts:
        xs.append(mat @ xs[-1] @ mat)

    return CalibratedModule(shape, n, basis, gamma, t0, ts, t0v, tn, xs, seed)


# -- relation reports ----------------------------------------------------

def _norm(mat):
    return float(np.linalg.norm(mat, 2))


def _report(relations, tol):
    worst = max(relations.values()) if relations else 0.0
    return {
        "relations": relations,
        "max_residual": worst,
        "tol": tol,
        "pass": bool(worst < tol),
    }


def check_hecke_relations(m, tol=None):
    """Quadratic, commuting, braid, and X-commutation residuals."""
    tol = m.seed.tolerance if tol is None else tol
    eye = np.eye(m.dim, dtype=complex)
    rel = {}
    gens = m.generators()
    for name, mat, par in gens:
        rel["quadratic %s" % name] = _norm((mat - par * eye) @ (mat + eye / par))

    chain = [("T0", m.t0)] + [("T%d" % (i + 1), t) for i, t in enumerate(m.ts)]
    chain.append(("Tn", m.tn))
    for i in range(len(chain)):
        for j in range(i + 2, len(chain)):
            a, b = chain[i][1], chain[j][1]
            rel["commute %s %s" % (chain[i][0], chain[j][0])] = _norm(a @ b - b @ a)
    for i in range(2, len(chain) - 1):
        b = chain[i][1]
        rel["commute T0v %s" % chain[i][0]] = _norm(m.t0v @ b - b @ m.t0v)

    for i in range(len(m.ts) - 1):
        a, b = m.ts[i], m.ts[i + 1]
        rel["braid3 T%d T%d" % (i + 1, i + 2)] = _norm(a @ b @ a - b @ a @ b)
    if m.ts:
        a, b = m.t0, m.ts[0]
        rel["braid4 T0 T1"] = _norm(a @ b @ a @ b - b @ a @ b @ a)
        a, b = m.tn, m.ts[-1]
        rel["braid4 Tn T%d" % (m.n - 1)] = _norm(a @ b @ a @ b - b @ a @ b @ a)

    for i in range(m.n):
        for j in range(i + 1, m.n):
            a, b = m.xs[i], m.xs[j]
            rel["commute X%d X%d" % (i + 1, j + 1)] = _norm(a @ b - b @ a)
    return _report(rel, tol)


def _idempotents(m):
    """e_0, e_1, ..., e_{n-1}, e_n, and e_0v (each T minus its q)."""
    eye = np.eye(m.dim, dtype=complex)
    es = {0: m.t0 - m.seed.q0 * eye}
    for i, t in enumerate(m.ts, start=1):
        es[i] = t - m.seed.q * eye
    es[m.n] = m.tn - m.seed.qn * eye
    return es, m.t0v - m.seed.qn * eye


def check_tl_relations(m, tol=None):
    """Square and smash relations for the e generators."""
    tol = m.seed.tolerance if tol is None else tol
    q, q0, qn = m.seed.q, m.seed.q0, m.seed.qn
    es, e0v = _idempotents(m)
    pars = {0: q0, m.n: qn}
    rel = {}
    for i, e in es.items():
        rel["square e%d" % i] = _norm(e @ e + _bracket(pars.get(i, q)) * e)
    rel["square e0v"] = _norm(e0v @ e0v + _bracket(qn) * e0v)
    if m.n >= 2:
        e0, e1 = es[0], es[1]
        rel["smash e1 e0 e1"] = _norm(e1 @ e0 @ e1 - _bracket(q0 / q) * e1)
        ett, en = es[m.n - 1], es[m.n]
        rel["smash e%d en e%d" % (m.n - 1, m.n - 1)] = _norm(
            ett @ en @ ett - _bracket(qn / q) * ett
        )
    for i in range(1, m.n - 1):
        a, b = es[i], es[i + 1]
        rel["tl e%d e%d e%d" % (i, i + 1, i)] = _norm(a @ b @ a - a)
        rel["tl e%d e%d e%d" % (i + 1, i, i + 1)] = _norm(b @ a @ b - b)
    return _report(rel, tol)


def check_jm_spectrum(m, tol=None):
    """X_i must be diagonal with the residue values on the diagonal."""
    tol = m.seed.tolerance if tol is None else tol
    rel = {}
    for i, x in enumerate(m.xs, start=1):
        expected = np.array([m.gamma[r][i - 1] for r in range(m.dim)])
        rel["X%d diagonal" % i] = float(np.max(np.abs(np.diag(x) - expected)))
        rel["X%d off-diagonal" % i] = _norm(x - np.diag(np.diag(x)))
    return _report(rel, tol)


def blob_check(m, tol=None):
    """Alternating-product relations: the zero shape carries the kappa
    relations, every other shape is annihilated by both products."""
    tol = m.seed.tolerance if tol is None else tol
    es, _ = _idempotents(m)
    eye = np.eye(m.dim, dtype=complex)
    i0, i1 = eye, eye
    for i in range(0, m.n + 1, 2):
        i0 = i0 @ es[i]
    for i in range(1, m.n + 1, 2):
        i1 = i1 @ es[i]
    rel = {}
    if m.shape.k == 0:
        th, q = m.seed.theta_value, m.seed.q
        if m.n % 2 == 0:
            kappa = _bracket(th / q) - _bracket(m.seed.alpha1 / q)
        else:
            kappa = _bracket(th) - _bracket(m.seed.alpha2)
        rel["I0 I1 I0 = kappa I0"] = _norm(i0 @ i1 @ i0 - kappa * i0)
        rel["I1 I0 I1 = kappa I1"] = _norm(i1 @ i0 @ i1 - kappa * i1)
    else:
        rel["I0 = 0"] = _norm(i0)
        rel["I1 = 0"] = _norm(i1)
    return _report(rel, tol)

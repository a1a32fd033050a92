"""Brute-force solvability of diagonal quadratic equations over Q_p.

Verdicts come from exhaustive search over residue vectors mod p^k combined
with the lifting criterion for simple zeros: a residue solution certifies an
exact p-adic zero once the precision exceeds twice the valuation of the
relevant partial derivative. Nothing in here consults a symbol formula; this
module is the independent oracle the closed-form routes are tested against,
and the generator the 2-adic Hilbert table is built from.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .rationals import Rational, as_rational, is_prime, padic_valuation, unit_residue

# Exhaustive search over Z/p^k gets quadratic in the modulus; beyond this it
# is no longer a desk-scale computation.
MAX_MODULUS = 100_000


class InconclusivePrecisionError(ArithmeticError):
    """Residue search at the requested precision neither certifies nor refutes."""


def min_precision(p: int) -> int:
    # below this, units congruent mod p^k need not lie in the same square class
    return 3 if p == 2 else 1


def default_precision(p: int) -> int:
    # 2*v_p(2) + 3: any primitive residue solution has a unit coordinate whose
    # Hensel exponent already clears the 2t < k bar, so the search is always
    # conclusive at this depth
    return 5 if p == 2 else 3


def represents_one(
    coeffs: Sequence[Rational | int | str], p: int, k: int | None = None
) -> bool:
    """True iff sum a_i x_i^2 = 1 has a solution over Q_p.

    Same thing as isotropy of the form extended by -1: a nontrivial zero with
    nonzero last coordinate rescales to a solution, and a zero of the original
    form alone spans a hyperbolic plane, which represents everything.
    """
    cs = [as_rational(c) for c in coeffs]
    return isotropic(cs + [Fraction(-1)], p, k)


def isotropic(
    coeffs: Sequence[Rational | int | str], p: int, k: int | None = None
) -> bool:
    """True iff sum c_i y_i^2 = 0 has a nontrivial zero over Q_p.

    Search all residue vectors mod p^k:

      * some residue solution has a coordinate with 2*v_p(2 c_j y_j) < k:
        it lifts (Hensel), return True;
      * no primitive residue solution exists: an exact nontrivial zero would
        scale to a primitive one and reduce, so return False;
      * otherwise raise InconclusivePrecisionError.

    The default precision makes the last case unreachable.
    """
    cs = [as_rational(c) for c in coeffs]
    if not cs:
        raise ValueError("empty coefficient list")
    if any(c == 0 for c in cs):
        raise ValueError("zero coefficient in a nondegenerate diagonal form")
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    if k is None:
        k = default_precision(p)
    if k < min_precision(p):
        raise InconclusivePrecisionError(
            f"precision p^{k} is below the faithful minimum p^{min_precision(p)} at p={p}"
        )
    m = p**k
    if m > MAX_MODULUS:
        raise ValueError(f"residue modulus {p}^{k} exceeds the search cap")

    # Modulo squares, c = p^beta * w with beta in {0,1} and w determined by its
    # residue mod p^k (faithful by the precision floor above). The Hensel
    # exponent of coordinate j at residue y is t = v_p(2) + beta_j + v_p(y).
    v2 = 1 if p == 2 else 0
    reduced = [(padic_valuation(c, p) % 2, unit_residue(c, p, k)) for c in cs]

    big = k  # 2t < k already fails at t = ceil(k/2); cap valuations there
    unreach = big + 1
    vp_res = np.zeros(m, dtype=np.int64)
    pj = p
    while pj < m:
        vp_res[pj::pj] += 1
        pj *= p
    vp_res[0] = big
    np.minimum(vp_res, big, out=vp_res)
    residues = np.arange(m, dtype=np.int64)
    unit_mask = residues % p != 0

    # reach_t[v]: least Hensel exponent over vectors hitting value v (unreach
    # if none); reach_prim[v]: v is hit by a vector with a unit coordinate
    reach_t = np.full(m, unreach, dtype=np.int64)
    reach_t[0] = big  # the empty vector
    reach_prim = np.zeros(m, dtype=bool)
    for beta, w in reduced:
        term = (p**beta * w % m) * residues**2 % m
        texp = np.minimum(v2 + beta + vp_res, big)
        # group residues sharing (shift, exponent, unit flag): one roll each
        groups: dict[tuple[int, int, bool], None] = {}
        for r in range(m):
            groups[(int(term[r]), int(texp[r]), bool(unit_mask[r]))] = None
        reach_any = reach_t < unreach
        cand_t = {
            t: np.where(reach_any, np.minimum(reach_t, t), unreach)
            for t in {t for (_, t, _) in groups}
        }
        new_t = np.full(m, unreach, dtype=np.int64)
        new_prim = np.zeros(m, dtype=bool)
        for shift, t, unit in groups:
            np.minimum(new_t, np.roll(cand_t[t], shift), out=new_t)
            new_prim |= np.roll(reach_any if unit else reach_prim, shift)
        reach_t, reach_prim = new_t, new_prim

    t0 = int(reach_t[0])
    if t0 <= big and 2 * t0 < k:
        return True
    if bool(reach_prim[0]):
        raise InconclusivePrecisionError(
            f"no certified zero and no refutation at precision {p}^{k}"
        )
    return False

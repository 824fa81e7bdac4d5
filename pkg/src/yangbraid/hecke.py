"""Exact matrix model of the braid operators on the span of t-coefficients.

Basis vectors are ``t_{j,k}`` with node ``j`` (1-based) and level
``0 <= k <= r``, ordered node-major.  Matrices act on column vectors: column
``c`` holds the image of basis vector ``c``.  Every operator maps level ``k``
into levels ``<= k``, so in this column convention the shift matrix is upper
unitriangular within each node block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cartan import CartanData
from .exact import GlobalParams, mat_identity, mat_mul, mat_product, mat_sub


def _basis(cd: CartanData, r: int) -> tuple:
    return tuple((j, k) for j in cd.nodes for k in range(r + 1))


def shift_matrix(cd: CartanData, r: int, c) -> tuple:
    """Matrix of ``t_j(u) -> t_j(u + c)`` on coefficients.

    ``t_{j,k}`` is sent to ``sum_s binom(k, s) (-c)^(k-s) t_{j,s}``.
    """
    basis = _basis(cd, r)
    index = {b: n for n, b in enumerate(basis)}
    size = len(basis)
    cols = []
    for j, k in basis:
        col = [Fraction(0)] * size
        for s in range(k + 1):
            col[index[(j, s)]] = comb(k, s) * Fraction(-c) ** (k - s)
        cols.append(col)
    return tuple(zip(*cols))


@dataclass(frozen=True)
class HeckeModel:
    cd: CartanData
    gp: GlobalParams
    r: int
    basis: tuple
    Z: tuple
    Tau: tuple
    T: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def z_power(self, m: int) -> tuple:
        """``Z^m``; the shift by ``m * hbar / 2``."""
        return shift_matrix(self.cd, self.r, Fraction(m) * self.gp.hbar / 2)


def _tau_matrices(cd: CartanData, basis: tuple, z_power) -> tuple:
    index = {b: n for n, b in enumerate(basis)}
    size = len(basis)
    out = []
    for i in cd.nodes:
        cols = []
        for j, k in basis:
            col = [Fraction(0)] * size
            col[index[(j, k)]] += 1
            a = abs(cd.a[i - 1][j - 1])
            sign = -1 if i == j else 1
            for ell in range(a):
                zm = z_power(-cd.d[i - 1] * (a - 2 * ell))
                src = index[(i, k)]
                for row in range(size):
                    if zm[row][src]:
                        col[row] += sign * zm[row][src]
            cols.append(col)
        out.append(tuple(zip(*cols)))
    return tuple(out)


def build_model(cd: CartanData, gp: GlobalParams, r: int) -> HeckeModel:
    if r < 0:
        raise ValueError("truncation level must be nonnegative")
    basis = _basis(cd, r)
    zp = {}

    def z_power(m):
        if m not in zp:
            zp[m] = shift_matrix(cd, r, Fraction(m) * gp.hbar / 2)
        return zp[m]

    tau = _tau_matrices(cd, basis, z_power)
    T = tuple(mat_mul(z_power(cd.d[i]), tau[i]) for i in range(cd.n))
    return HeckeModel(cd, gp, r, basis, z_power(1), tau, T)


def weyl_specialization(cd: CartanData, r: int) -> tuple:
    """The operators Tau_i with the shift replaced by the identity."""
    basis = _basis(cd, r)
    ident = mat_identity(len(basis), Fraction(1), Fraction(0))
    return _tau_matrices(cd, basis, lambda m: ident)


@dataclass(frozen=True)
class HeckeReport:
    braid_ok: bool
    quadratic_ok: bool
    commute_ok: bool
    submodule_ok: bool
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.braid_ok and self.quadratic_ok and self.commute_ok and self.submodule_ok


def _first_diff(x, y):
    for c in range(len(x[0])):
        if any(x[r][c] != y[r][c] for r in range(len(x))):
            return c
    return None


def alternating(mats, i: int, j: int, length: int) -> list:
    return [mats[(i, j)[k % 2] - 1] for k in range(length)]


def verify_hecke(model: HeckeModel) -> HeckeReport:
    cd, n = model.cd, model.dim
    one, zero = Fraction(1), Fraction(0)
    witness = None

    def fail(what, x, y):
        nonlocal witness
        col = _first_diff(x, y)
        if col is None:
            return False
        if witness is None:
            witness = f"{what}: column t_{model.basis[col]}"
        return True

    braid_ok = True
    for name, mats in (("Tau", model.Tau), ("T", model.T)):
        for i in cd.nodes:
            for j in cd.nodes:
                if i >= j:
                    continue
                m = cd.m[i - 1][j - 1]
                lhs = mat_product(alternating(mats, i, j, m), n, one, zero)
                rhs = mat_product(alternating(mats, j, i, m), n, one, zero)
                if fail(f"braid {name}_{i},{name}_{j}", lhs, rhs):
                    braid_ok = False

    quadratic_ok = True
    commute_ok = True
    ident = mat_identity(n, one, zero)
    for i in cd.nodes:
        tau = model.Tau[i - 1]
        zz = model.z_power(-2 * cd.d[i - 1])
        lhs = mat_mul(tau, tau)
        lhs = tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(lhs, mat_mul(mat_sub(zz, ident), tau))
        )
        if fail(f"quadratic Tau_{i}", lhs, zz):
            quadratic_ok = False
        t = model.T[i - 1]
        zi = model.z_power(cd.d[i - 1])
        zi_inv = model.z_power(-cd.d[i - 1])
        zero_mat = tuple(tuple(zero for _ in range(n)) for _ in range(n))
        prod = mat_mul(mat_sub(t, zi), tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(t, zi_inv)
        ))
        if fail(f"quadratic T_{i}", prod, zero_mat):
            quadratic_ok = False
        if fail(f"[Tau_{i}, Z]", mat_mul(tau, model.Z), mat_mul(model.Z, tau)):
            commute_ok = False

    submodule_ok = all(submodule_check(model, rp) for rp in range(model.r + 1))
    if not submodule_ok and witness is None:
        witness = "submodule"
    return HeckeReport(braid_ok, quadratic_ok, commute_ok, submodule_ok, witness)


def submodule_check(model: HeckeModel, r_sub: int) -> bool:
    """Do all generators preserve the span of levels ``<= r_sub``?"""
    if not 0 <= r_sub <= model.r:
        raise ValueError("sub-level must lie in 0..r")
    inside = [k <= r_sub for _, k in model.basis]
    gens = [model.Z, model.z_power(-1), *model.Tau, *model.T]
    for g in gens:
        for row, row_in in enumerate(inside):
            if row_in:
                continue
            if any(g[row][c] for c, c_in in enumerate(inside) if c_in):
                return False
    return True

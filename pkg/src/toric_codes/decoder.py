"""List decoder for the dual C of a toric evaluation code C_L(P, G).

Given an auxiliary divisor G', a received word r = c + e is decoded by
(1) solving the bracket system sum_j [r, f_j g_i] a_j = 0 over the
monomial bases f of L(G') and g of L(G - G'), (2) taking the candidate
set N(f) where the locator f = sum a_j f_j fails to be provably nonzero,
and (3) solving sum_{i in N(f)} b_i h_j(P_i) = [r, h_j] over the basis h
of L(G).

Boundary subtleties: a basis monomial of L(G') may have a pole at an
orbit point (G' can carry positive coefficients on rays that host
points).  The locator is therefore evaluated at orbit points through its
graded expansion in the transverse parameter: terms are bucketed by their
vanishing order <a, v_ray>, each bucket restricted to the orbit as a unit
multiple of the orbit character, and the leading nonzero bucket decides
zero (order > 0), a value (order 0), or a pole (order < 0).  Pole
positions cannot be certified error-free, so they are kept in the
candidate set N(f); the value system stays exact either way because the
products f_j g_i and the h_j are always pole-free (hard setup error
otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import GF
from .codes import LinearCode, matvec, min_distance, null_space, solve
from .geometry import (
    Fan2D,
    OrbitPoint,
    PoleError,
    TDivisor,
    TorusPoint,
    evaluation_matrix,
    lattice_points,
    polytope_of_divisor,
)
from .toric import ToricCodeSpec, ToricCodeResult, build


class SetupError(ValueError):
    """Decoder setup violates an assumption (empty space, required pole)."""


@dataclass
class GradedPointData:
    """Locator-basis evaluation data at one orbit point: bucket matrix
    rows are vanishing orders (ascending), columns the basis monomials."""

    levels: list[int]
    bucket: np.ndarray  # (len(levels), ell)


@dataclass
class DecoderSetup:
    spec: ToricCodeSpec
    result: ToricCodeResult
    gprime: TDivisor
    basis_locator: list[tuple[int, int]]  # L(G')
    basis_gap: list[tuple[int, int]]  # L(G - G')
    basis_full: list[tuple[int, int]]  # L(G)
    H: np.ndarray  # len(basis_full) x n, strict values
    FG: np.ndarray  # (len(gap), len(locator), n) product values
    locator_torus: np.ndarray  # ell x n with zeros at orbit columns
    graded: dict[int, GradedPointData]  # point index -> bucket data
    zero_cap: int
    zero_cap_exact: bool
    condition_c: str  # "verified" | "failed" | "unverified"
    d_dual: int | None

    @property
    def n(self) -> int:
        return len(self.spec.points)


@dataclass
class DecodeOutcome:
    status: str  # "unique" | "list" | "fail"
    errors_found: np.ndarray | list[np.ndarray] | None
    locator: np.ndarray | None
    zero_set: list[int]
    within_zero_cap: bool | None = None
    diagnostics: str = ""


def _strict_eval_rows(exponents, spec: ToricCodeSpec, what: str) -> np.ndarray:
    try:
        return evaluation_matrix(exponents, spec.points, spec.gf, spec.fan)
    except PoleError as exc:
        raise SetupError(f"pole in required {what}: {exc}") from exc


def setup(
    spec: ToricCodeSpec,
    gprime: TDivisor,
    z_work_budget: int = 4_000_000,
    check_condition_c_threshold: int = 2_000_000,
) -> DecoderSetup:
    """Build bases, evaluation tables, and the zero cap Z.

    Z bounds the number of points at which a nonzero member of L(G') can
    fail to be provably nonzero.  It is n - d_aux, where d_aux is the
    minimum distance of L(G') evaluated at the pole-free points: exact
    when the search finishes within the budget, otherwise the search's
    certified lower bound (a smaller d_aux only enlarges Z, so the cap
    stays valid).
    """
    gf, fan = spec.gf, spec.fan
    result = build(spec)

    basis_full = spec.basis
    basis_locator = lattice_points(polytope_of_divisor(fan, gprime))
    basis_gap = lattice_points(polytope_of_divisor(fan, spec.divisor - gprime))
    if not basis_locator or not basis_gap or not basis_full:
        raise SetupError(
            "a required function space is zero: "
            f"|L(G)| = {len(basis_full)}, |L(G')| = {len(basis_locator)}, "
            f"|L(G-G')| = {len(basis_gap)}"
        )

    H = result.eval_matrix
    prod_exps = [
        (fa[0] + ga[0], fa[1] + ga[1]) for ga in basis_gap for fa in basis_locator
    ]
    FGflat = _strict_eval_rows(prod_exps, spec, "product f_j * g_i")
    FG = FGflat.reshape(len(basis_gap), len(basis_locator), len(spec.points))

    # locator evaluation data: strict values where possible, graded buckets
    # at orbit points where some basis monomial has a pole
    n = len(spec.points)
    ell = len(basis_locator)
    locator_torus = np.zeros((ell, n), dtype=np.int16)
    graded: dict[int, GradedPointData] = {}
    clean_cols: list[int] = []
    torus_cols = [i for i, pt in enumerate(spec.points) if isinstance(pt, TorusPoint)]
    if torus_cols:
        sub = evaluation_matrix(basis_locator, [spec.points[i] for i in torus_cols], gf)
        locator_torus[:, torus_cols] = sub
        clean_cols.extend(torus_cols)
    for i, pt in enumerate(spec.points):
        if not isinstance(pt, OrbitPoint):
            continue
        v = fan.rays[pt.ray]
        m_r = fan.transverse_vector(pt.ray)
        u_r = fan.orbit_lattice_generator(pt.ray)
        pairings = [a[0] * v[0] + a[1] * v[1] for a in basis_locator]
        levels = sorted(set(pairings))
        bucket = np.zeros((len(levels), ell), dtype=np.int16)
        for j, (a, c) in enumerate(zip(basis_locator, pairings)):
            red = (a[0] - c * m_r[0], a[1] - c * m_r[1])
            lam = red[0] // u_r[0] if u_r[0] else red[1] // u_r[1]
            bucket[levels.index(c), j] = gf.pow(pt.s, lam)
        if min(levels) >= 0:
            # pole-free here: the strict value is the level-0 bucket (or 0)
            if 0 in levels:
                locator_torus[:, i] = bucket[levels.index(0)]
            clean_cols.append(i)
        else:
            graded[i] = GradedPointData(levels, bucket)

    # zero cap from the pole-free columns of the auxiliary code
    aux = LinearCode(gf, locator_torus[:, sorted(clean_cols)])
    if aux.k < ell:
        zcap, exact = n, True  # eval map on L(G') is not injective: no cap
    else:
        rep = min_distance(aux, work_budget=z_work_budget)
        zcap = n - (rep.d if rep.exact else rep.lower)
        exact = rep.exact and len(clean_cols) == n
    # condition (C): d(dual) must exceed the cap; expensive, so optional
    dual_code = result.dual
    total = (gf.q**dual_code.k - 1) // (gf.q - 1)
    if total <= check_condition_c_threshold:
        d_dual = min_distance(dual_code).d
        cond = "verified" if d_dual > zcap else "failed"
    else:
        d_dual, cond = None, "unverified"

    return DecoderSetup(
        spec=spec,
        result=result,
        gprime=gprime,
        basis_locator=basis_locator,
        basis_gap=basis_gap,
        basis_full=basis_full,
        H=H,
        FG=FG,
        locator_torus=locator_torus,
        graded=graded,
        zero_cap=zcap,
        zero_cap_exact=exact,
        condition_c=cond,
        d_dual=d_dual,
    )


# -- the stages ---------------------------------------------------------------


def bracket(r: np.ndarray, exponent, setup: DecoderSetup) -> int:
    """[r, phi] = sum_i r_i phi(P_i) for the character phi = x^exponent."""
    spec = setup.spec
    r = np.asarray(r, dtype=np.int16)
    if r.shape[0] != setup.n:
        raise ValueError(f"received word length {r.shape[0]} != n = {setup.n}")
    row = evaluation_matrix([tuple(exponent)], spec.points, spec.gf, spec.fan)[0]
    return int(setup.spec.gf.vsum(setup.spec.gf.vmul(row, r)))


def bracket_matrix(r: np.ndarray, setup: DecoderSetup) -> np.ndarray:
    """B[i, j] = [r, f_j g_i] over the precomputed product tables."""
    gf = setup.spec.gf
    kg, ell, n = setup.FG.shape
    flat = setup.FG.reshape(kg * ell, n)
    return gf.vsum(gf.vmul(flat, np.asarray(r, dtype=np.int16)[None, :]), axis=1).reshape(kg, ell)


def error_locator(r: np.ndarray, setup: DecoderSetup) -> np.ndarray:
    """A deterministic nontrivial solution of the bracket system: the
    null-space basis vector of the first free column (graded-lex order)."""
    B = bracket_matrix(r, setup)
    ns = null_space(setup.spec.gf, B)
    if ns.shape[0] == 0:
        raise SetupError(
            "bracket system has a trivial null space: no locator "
            "(more errors than this setup supports)"
        )
    return ns[0]


def zero_set(f_coeffs: np.ndarray, setup: DecoderSetup) -> list[int]:
    """Candidate positions: points where the locator is not provably
    nonzero (value zero, higher-order vanishing, or a pole)."""
    gf = setup.spec.gf
    f = np.asarray(f_coeffs, dtype=np.int16)
    if not f.any():
        raise ValueError("zero locator has no zero set")
    vals = matvec(gf, setup.locator_torus.T, f)
    out = []
    for i in range(setup.n):
        if i in setup.graded:
            g = setup.graded[i]
            buckets = matvec(gf, g.bucket, f)
            nz = np.nonzero(buckets)[0]
            if nz.size == 0:
                out.append(i)  # vanishes along the transverse curve
            elif g.levels[int(nz[0])] != 0:
                out.append(i)  # leading order > 0 (zero) or < 0 (pole)
        elif int(vals[i]) == 0:
            out.append(i)
    return out


def error_values(
    r: np.ndarray, nf: list[int], setup: DecoderSetup, list_cap: int = 256
) -> DecodeOutcome:
    """Solve the value system on the candidate positions."""
    gf = setup.spec.gf
    r = np.asarray(r, dtype=np.int16)
    s = matvec(gf, setup.H, r)  # [r, h_j] for every j
    within = len(nf) <= setup.zero_cap
    if not nf:
        if not s.any():
            return DecodeOutcome(
                status="unique",
                errors_found=np.zeros(setup.n, dtype=np.int16),
                locator=None,
                zero_set=[],
                within_zero_cap=within,
            )
        return DecodeOutcome(
            status="fail",
            errors_found=None,
            locator=None,
            zero_set=[],
            within_zero_cap=within,
            diagnostics="empty candidate set but nonzero syndrome",
        )
    A = setup.H[:, nf]
    sol = solve(gf, A, s)
    if sol is None:
        return DecodeOutcome(
            status="fail",
            errors_found=None,
            locator=None,
            zero_set=list(nf),
            within_zero_cap=within,
            diagnostics="inconsistent value system (locator missed an error position)",
        )
    x, ns = sol
    if ns.shape[0] == 0:
        e = np.zeros(setup.n, dtype=np.int16)
        e[nf] = x
        status = "unique" if within else "list"
        found = e if status == "unique" else [e]
        return DecodeOutcome(
            status=status,
            errors_found=found,
            locator=None,
            zero_set=list(nf),
            within_zero_cap=within,
            diagnostics="" if within else "solution unique but |N(f)| exceeds the zero cap",
        )
    count = gf.q ** ns.shape[0]
    if count > list_cap:
        return DecodeOutcome(
            status="fail",
            errors_found=None,
            locator=None,
            zero_set=list(nf),
            within_zero_cap=within,
            diagnostics=f"{count} candidate solutions exceed the list cap {list_cap}",
        )
    import itertools

    cands = []
    for combo in itertools.product(range(gf.q), repeat=ns.shape[0]):
        b = x.copy()
        for c, row in zip(combo, ns):
            if c:
                b = gf.vadd(b, gf.vscale(c, row))
        e = np.zeros(setup.n, dtype=np.int16)
        e[nf] = b
        cands.append(e)
    return DecodeOutcome(
        status="list",
        errors_found=cands,
        locator=None,
        zero_set=list(nf),
        within_zero_cap=within,
        diagnostics="underdetermined value system",
    )


def decode(r: np.ndarray, setup: DecoderSetup, list_cap: int = 256) -> DecodeOutcome:
    """Locator -> zero set -> values; a unique outcome always satisfies
    the dual-code membership r - e in C (its brackets against L(G) vanish
    by construction of the value system)."""
    r = np.asarray(r, dtype=np.int16)
    if r.shape[0] != setup.n:
        raise ValueError(f"received word length {r.shape[0]} != n = {setup.n}")
    try:
        f = error_locator(r, setup)
    except SetupError as exc:
        return DecodeOutcome(
            status="fail",
            errors_found=None,
            locator=None,
            zero_set=[],
            diagnostics=str(exc),
        )
    nf = zero_set(f, setup)
    out = error_values(r, nf, setup, list_cap=list_cap)
    out.locator = f
    return out

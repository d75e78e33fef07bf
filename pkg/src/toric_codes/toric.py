"""Assemble evaluation codes from a field, a fan, a divisor, and a point
set: one generator row per lattice point of the divisor polytope, one
column per rational point.

The canonical point set is the dense torus in its fixed order, optionally
followed by full ray orbits.  A monomial with a pole at some chosen point
is a hard error (silent point exclusion would change n); exponents with a
coordinate of magnitude >= q-1 only raise a warning, since character
collisions then merely reduce the rank, which is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .field import GF
from .codes import CodeError, LinearCode
from .geometry import (
    EvalPoint,
    Fan2D,
    OrbitPoint,
    TDivisor,
    TorusPoint,
    evaluation_matrix,
    lattice_points,
    orbit_points,
    polytope_of_divisor,
    torus_points,
)


@dataclass
class ToricCodeSpec:
    gf: GF
    fan: Fan2D
    divisor: TDivisor
    points: list[EvalPoint]
    basis: list[tuple[int, int]] = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.basis:
            self.basis = lattice_points(polytope_of_divisor(self.fan, self.divisor))
        if len(set(self.points)) != len(self.points):
            raise CodeError("evaluation points must be distinct")


@dataclass
class ToricCodeResult:
    spec: ToricCodeSpec
    code: LinearCode
    dual: LinearCode
    eval_matrix: np.ndarray
    kc: int
    injective: bool
    warnings: list[str]

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k


def default_points(
    gf: GF, fan: Fan2D, torus: bool = True, orbits: Sequence[int] = ()
) -> list[EvalPoint]:
    """Torus points in the fixed order, then full ray orbits in ray order."""
    pts: list[EvalPoint] = list(torus_points(gf)) if torus else []
    for i in orbits:
        pts.extend(orbit_points(fan, i, gf))
    return pts


def build(spec: ToricCodeSpec) -> ToricCodeResult:
    """Evaluate every basis monomial at every point and take the row space."""
    if not spec.basis:
        raise CodeError("empty monomial basis: the divisor polytope has no lattice points")
    warnings = []
    q = spec.gf.q
    if any(abs(a) >= q - 1 for e in spec.basis for a in e):
        warnings.append(
            f"exponent coordinate of magnitude >= q-1 = {q - 1}: "
            "character collisions possible, rank may drop"
        )
    M = evaluation_matrix(spec.basis, spec.points, spec.gf, spec.fan)
    code = LinearCode(spec.gf, M)
    warnings.extend(code.warnings)
    kc = len(spec.basis)
    injective = code.k == kc
    if not injective:
        warnings.append(f"evaluation map is not injective: rank {code.k} < {kc}")
    dual = code.dual()
    return ToricCodeResult(
        spec=spec,
        code=code,
        dual=dual,
        eval_matrix=M,
        kc=kc,
        injective=injective,
        warnings=warnings,
    )


def toric_code(
    gf: GF,
    rays: Sequence[Sequence[int]] | Fan2D,
    divisor: Sequence[int] | TDivisor,
    torus: bool = True,
    orbits: Sequence[int] = (),
) -> ToricCodeResult:
    """Convenience wrapper: validate, pick default points, build."""
    fan = rays if isinstance(rays, Fan2D) else Fan2D(rays)
    div = divisor if isinstance(divisor, TDivisor) else TDivisor(divisor)
    pts = default_points(gf, fan, torus=torus, orbits=orbits)
    return build(ToricCodeSpec(gf, fan, div, pts))


# -- the four classical triangle/rectangle/trapezoid families ---------------

# base fans; the primed variants are the refinements entered by hand
HANSEN_FANS = {
    "a": ((1, 0), (-1, 1), (-1, -1)),
    "a-refined": ((1, 0), (-1, 1), (-1, -1), (0, -1)),
    "b": ((1, 0), (0, 1), (-1, -1)),
    "c": ((1, 0), (0, 1), (-1, 0), (0, -1)),
}


def hansen_fan(case: str, m: int = 1) -> Fan2D:
    if case in HANSEN_FANS:
        return Fan2D(HANSEN_FANS[case])
    if case == "d":
        # refined trapezoid fan, smooth for every slope m >= 1
        return Fan2D([(1, 0), (0, 1), (-1, m), (0, -1)])
    raise CodeError(f"unknown case {case!r}")


def hansen_divisor(case: str, a: int, b: int = 0, m: int = 1) -> TDivisor:
    """Divisor whose polytope is the case's polytope at parameters (a, b, m).

    (a): isoceles triangle (0,0), (a,a), (0,2a) -> 2a * D_3 (the vertex
         data needs the doubled coefficient; a bare a*D_3 halves the
         triangle).
    (b): right triangle (0,0), (a,0), (0,a)     -> a * D_3.
    (c): rectangle a x b                        -> a * D_3 + b * D_4.
    (d): trapezoid (0,0), (a,0), (0,b), (a,b+am), up to the x<->y swap
         -> b * D_3 + a * D_4 on the refined fan.
    """
    if case == "a":
        return TDivisor((0, 0, 2 * a))
    if case == "a-refined":
        return TDivisor((0, 0, 2 * a, 2 * a))
    if case == "b":
        return TDivisor((0, 0, a))
    if case == "c":
        return TDivisor((0, 0, a, b))
    if case == "d":
        return TDivisor((0, 0, b, a))
    raise CodeError(f"unknown case {case!r}")


def hansen_code(case: str, gf: GF, a: int, b: int = 0, m: int = 1) -> ToricCodeResult:
    """Build the classical code family instance on its torus point set.

    Constructs on the singular base fan for case (a) (evaluation never
    needs smoothness; the refined fan gives the identical polytope and is
    available through hansen_fan("a-refined")).
    """
    if case not in ("a", "b", "c", "d"):
        raise CodeError(f"unknown case {case!r}")
    if a <= 0 or (case in ("c", "d") and b <= 0) or (case == "d" and m <= 0):
        raise CodeError("parameters must be positive")
    fan = hansen_fan(case, m)
    div = hansen_divisor(case, a, b, m)
    return build(ToricCodeSpec(gf, fan, div, default_points(gf, fan)))

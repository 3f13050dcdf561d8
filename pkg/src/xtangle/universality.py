"""Spectrum-preserving conversion of any two-qubit state to an X-state.

The pipeline has two legs. First, a basis change built from the input's
eigenvectors lands on the maximally entangled mixed state (MEMS) with the
same spectrum; that state is X-form and carries the largest concurrence
and negativity of the whole unitary orbit. Second, a one-parameter family
of block rotations inside the X manifold walks either measure down from
the MEMS value, monotonically in effect, until it matches the input's
value. Composing the two legs gives a single unitary whose conjugation of
the input is an X-state with the same spectrum and the same chosen
measure.

Block rotations mix the outer levels (1,4) or the inner levels (2,3)
only, so they keep X-form. Walking the outer coherence from x down to a
target t uses a rotation angle whose doubled cosine and sine are

    cos 2b = (sqrt(t x) + (h/2) sqrt(X+ - t)) / X+
    sin 2b = (sqrt(x (X+ - t)) - (h/2) sqrt(t)) / X+

with h the outer population difference and X+ = (h/2)^2 + x the orbit
ceiling. Along tau in [0, 1] the coherence is

    x_tau = (h/2 sin(2 b tau) - sqrt(x) cos(2 b tau))^2,

which starts at x, ends exactly at t, and never drops below t (for
negative h it transiently rises above x, bounded by X+; the measure
formulas remain exact there). The inner-coherence leg is identical with
(y, g, H) in place of (x, h, G).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import as_matrix, conjugate, hermitian_eig, is_density_matrix, Spectrum
from .measures import concurrence_general, concurrence_x, negativity_general, negativity_x
from .xstate import (
    XParams,
    coeffs,
    diagonal,
    from_density,
    is_separable,
    params_from_entries,
    to_density,
    validate_params,
)

TAU_SLACK = 1e-12
TARGET_SLACK = 1e-12
TAU_WIDTH = 1e-12
SOLVE_TOL = 1e-10
SCAN_POINTS = 64

# eigenbasis-to-X rotation: maps diag(l1..l4), non-ascending, onto the
# maximally entangled mixed state of that spectrum
_INV_SQRT2 = 1.0 / np.sqrt(2.0)
O_BASIS = np.array(
    [
        [0.0, 0.0, 0.0, 1.0],
        [_INV_SQRT2, 0.0, _INV_SQRT2, 0.0],
        [_INV_SQRT2, 0.0, -_INV_SQRT2, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ],
    dtype=complex,
)


class TargetOutOfRangeError(ValueError):
    """Requested measure value not reachable along the path."""


@dataclass(frozen=True)
class DisentangleSolution:
    """Block-rotation angles removing all entanglement at tau = 1.

    Exactly one of b1 (outer) and b3 (inner) is nonzero; b2 and b4 pin
    the rotation phases to the coherence phases. x_plus and x_minus are
    the orbit ceiling and floor (h/2)^2 +- x of the active block,
    z_minus is sin^2(2 b) of the selected rotation and s_tilde the sign
    of its cos(2 b), carried as 0 whenever the active population
    difference vanishes (degenerate blocks admit both root signs); both
    are zero for an already separable input.
    """

    b1: float
    b2: float
    b3: float
    b4: float
    x_plus: float
    x_minus: float
    z_minus: float
    s_tilde: int
    branch: str


@dataclass(frozen=True)
class PathPoint:
    """State of the walk at one tau, with both measures evaluated."""

    tau: float
    params: XParams
    concurrence: float
    negativity: float


@dataclass(frozen=True)
class CounterpartResult:
    """Full record of one conversion.

    state = unitary @ input @ unitary^dagger, tau the path parameter,
    target the input's measure value, achieved the output's, clip the
    amount (if any) the target exceeded the MEMS ceiling by and was
    cut back; nonzero clip only ever reflects numerical noise.
    """

    state: np.ndarray
    unitary: np.ndarray
    tau: float
    branch: str
    measure: str
    target: float
    achieved: float
    clip: float


def x_unitary(b1, b2: float = 0.0, b3: float = 0.0, b4: float = 0.0) -> np.ndarray:
    """Unitary rotating the outer block by b1 and the inner block by b3.

    Accepts a DisentangleSolution in place of b1, taking all four angles
    from it (the remaining arguments must then be left at zero).
    """
    if isinstance(b1, DisentangleSolution):
        if b2 != 0.0 or b3 != 0.0 or b4 != 0.0:
            raise TypeError("pass either a solution or four angles, not both")
        b1, b2, b3, b4 = b1.b1, b1.b2, b1.b3, b1.b4
    c1, s1 = np.cos(b1), np.sin(b1)
    c3, s3 = np.cos(b3), np.sin(b3)
    e2, e4 = np.exp(1j * b2), np.exp(1j * b4)
    v = np.zeros((4, 4), dtype=complex)
    v[0, 0] = v[3, 3] = c1
    v[0, 3] = e2 * s1
    v[3, 0] = -s1 / e2
    v[1, 1] = v[2, 2] = c3
    v[1, 2] = e4 * s3
    v[2, 1] = -s3 / e4
    return v


def conjugate_x(p: XParams, b1: float, b2: float = 0.0,
                b3: float = 0.0, b4: float = 0.0) -> XParams:
    """Parameters of V rho V^dagger for the block rotation V(b1..b4).

    Closed form; equals from_density(conjugate(to_density(p), V)) up to
    round-off.
    """
    validate_params(p)
    d1, d2, d3, d4 = diagonal(p)
    sx, sy = np.sqrt(p.x), np.sqrt(p.y)
    h = d1 - d4
    g = d2 - d3

    c1, s1 = np.cos(b1), np.sin(b1)
    delta = b2 - p.mu
    shift = sx * np.sin(2.0 * b1) * np.cos(delta)
    d1n = c1 * c1 * d1 + s1 * s1 * d4 + shift
    d4n = s1 * s1 * d1 + c1 * c1 * d4 - shift
    outer = (c1 * c1 * sx * np.exp(1j * p.mu)
             - s1 * s1 * sx * np.exp(1j * (2.0 * b2 - p.mu))
             - c1 * s1 * h * np.exp(1j * b2))

    c3, s3 = np.cos(b3), np.sin(b3)
    ddelta = b4 - p.nu
    shift_i = sy * np.sin(2.0 * b3) * np.cos(ddelta)
    d2n = c3 * c3 * d2 + s3 * s3 * d3 + shift_i
    d3n = s3 * s3 * d2 + c3 * c3 * d3 - shift_i
    inner = (c3 * c3 * sy * np.exp(1j * p.nu)
             - s3 * s3 * sy * np.exp(1j * (2.0 * b4 - p.nu))
             - c3 * s3 * g * np.exp(1j * b4))

    return params_from_entries(d1n, d2n, d3n, d4n, outer, inner)


def _half_angle(a: float, tgt: float, dd: float) -> tuple[float, float, float]:
    """Rotation half-angle taking coherence a down to tgt along the
    monotone-in-effect root; returns (b, cos 2b, sin 2b).

    dd is the population difference of the block. The returned branch
    keeps the running coherence at or above tgt for every intermediate
    angle; the quadratic's other root crosses zero first when dd < 0.
    """
    xp = (0.5 * dd) ** 2 + a
    if xp <= 0.0:
        return 0.0, 1.0, 0.0
    head = max(xp - tgt, 0.0)
    c2b = (np.sqrt(tgt * a) + 0.5 * dd * np.sqrt(head)) / xp
    s2b = (np.sqrt(a * head) - 0.5 * dd * np.sqrt(tgt)) / xp
    return 0.5 * np.arctan2(s2b, c2b), c2b, s2b


def disentangle_params(p: XParams) -> DisentangleSolution:
    """Angles of the block rotation separating p at tau = 1.

    A state with dominant outer product (H >= G) carries entanglement
    only in its outer coherence, so an outer rotation bringing x down to
    G separates it; the opposite ordering is handled by the mirrored
    inner rotation. Conservation of the block invariants guarantees the
    untouched coherence stays admissible throughout.
    """
    validate_params(p)
    cf = coeffs(p)
    if cf.h_cal >= cf.g_cal:
        a, tgt, dd = p.x, cf.g_cal, cf.h_low
        outer_leg = True
    else:
        a, tgt, dd = p.y, cf.h_cal, cf.g_low
        outer_leg = False
    x_plus = (0.5 * dd) ** 2 + a
    x_minus = (0.5 * dd) ** 2 - a

    if is_separable(p):
        return DisentangleSolution(
            b1=0.0, b2=p.mu, b3=0.0, b4=p.nu,
            x_plus=x_plus, x_minus=x_minus,
            z_minus=0.0, s_tilde=0, branch="already_separable",
        )

    b, c2b, s2b = _half_angle(a, tgt, dd)
    if dd == 0.0:
        s_tilde = 0
    else:
        s_tilde = 1 if c2b >= 0.0 else -1
    z_minus = s2b * s2b
    if outer_leg:
        branch = "h_zero" if dd == 0.0 else "HgtG"
        return DisentangleSolution(
            b1=b, b2=p.mu, b3=0.0, b4=p.nu,
            x_plus=x_plus, x_minus=x_minus,
            z_minus=z_minus, s_tilde=s_tilde, branch=branch,
        )
    branch = "g_zero" if dd == 0.0 else "GgtH"
    return DisentangleSolution(
        b1=0.0, b2=p.mu, b3=b, b4=p.nu,
        x_plus=x_plus, x_minus=x_minus,
        z_minus=z_minus, s_tilde=s_tilde, branch=branch,
    )


def evolve(p: XParams, sol: DisentangleSolution, tau: float) -> PathPoint:
    """Full-matrix state of the walk at tau in [0, 1]."""
    if tau < -TAU_SLACK or tau > 1.0 + TAU_SLACK:
        raise ValueError(f"tau {tau!r} outside [0, 1]")
    tau = min(max(tau, 0.0), 1.0)
    q = conjugate_x(p, sol.b1 * tau, sol.b2, sol.b3 * tau, sol.b4)
    rho = to_density(q)
    return PathPoint(tau=tau, params=q,
                     concurrence=concurrence_x(rho),
                     negativity=negativity_x(rho))


def _path_inputs(p: XParams, sol: DisentangleSolution) -> tuple[float, float, float, float, float]:
    """(coherence, population difference, floor target, partner sum, angle)."""
    cf = coeffs(p)
    if sol.branch in ("HgtG", "h_zero"):
        if cf.h_cal < cf.g_cal - 1e-9:
            raise ValueError("solution branch does not match the state")
        return p.x, cf.h_low, cf.g_cal, cf.b_cal, sol.b1
    if sol.branch in ("GgtH", "g_zero"):
        if cf.g_cal < cf.h_cal - 1e-9:
            raise ValueError("solution branch does not match the state")
        return p.y, cf.g_low, cf.h_cal, cf.c_cal, sol.b3
    return 0.0, 0.0, 0.0, 0.0, 0.0


def _coherence_at(a: float, dd: float, b: float, tau: float) -> float:
    r = 0.5 * dd * np.sin(2.0 * b * tau) - np.sqrt(a) * np.cos(2.0 * b * tau)
    return r * r


def concurrence_along(p: XParams, sol: DisentangleSolution, tau: float) -> float:
    """Concurrence of the walk at tau, in closed form."""
    if sol.branch == "already_separable":
        return 0.0
    a, dd, floor, _, b = _path_inputs(p, sol)
    x_tau = _coherence_at(a, dd, b, tau)
    return 2.0 * max(0.0, np.sqrt(x_tau) - np.sqrt(floor))


def negativity_along(p: XParams, sol: DisentangleSolution, tau: float) -> float:
    """Negativity of the walk at tau, in closed form."""
    if sol.branch == "already_separable":
        return 0.0
    a, dd, floor, partner, b = _path_inputs(p, sol)
    x_tau = _coherence_at(a, dd, b, tau)
    half = 0.5 * partner
    return max(0.0, np.sqrt(max(half * half + x_tau - floor, 0.0)) - half)


def solve_tau(p: XParams, sol: DisentangleSolution, target: float,
              measure: str = "concurrence") -> float:
    """tau at which the chosen measure equals target.

    Coarse scan for a sign-change bracket followed by bisection; no
    monotonicity is assumed. The result is verified to SOLVE_TOL.
    """
    if measure == "concurrence":
        fn = concurrence_along
    elif measure == "negativity":
        fn = negativity_along
    else:
        raise ValueError(f"unknown measure {measure!r}")

    value0 = fn(p, sol, 0.0)
    if target < -TARGET_SLACK or target > value0 + TARGET_SLACK:
        raise TargetOutOfRangeError(
            f"target {target!r} outside [0, {value0!r}] for {measure}"
        )
    target = min(max(target, 0.0), value0)
    if value0 == 0.0 or sol.branch == "already_separable":
        return 0.0
    if target == value0:
        return 0.0
    # both measures are clamped at zero, so a target at or below the
    # endpoint value never produces a sign change; tau = 1 is the answer
    end = fn(p, sol, 1.0)
    if target <= end + TARGET_SLACK:
        if abs(end - target) > SOLVE_TOL:
            raise ArithmeticError(
                f"endpoint value {end!r} inconsistent with target {target!r}"
            )
        return 1.0

    def gap(tau: float) -> float:
        return fn(p, sol, tau) - target

    lo, hi = 0.0, 1.0
    glo = gap(0.0)
    found = False
    for i in range(1, SCAN_POINTS + 1):
        t = i / SCAN_POINTS
        gt = gap(t)
        if glo >= 0.0 >= gt or glo <= 0.0 <= gt:
            lo, hi = (i - 1) / SCAN_POINTS, t
            found = True
            break
        glo = gt
    if not found:
        raise ArithmeticError(
            f"no crossing found for target {target!r} ({measure})"
        )

    glo = gap(lo)
    while hi - lo > TAU_WIDTH:
        mid = 0.5 * (lo + hi)
        gm = gap(mid)
        if (glo >= 0.0 and gm >= 0.0) or (glo <= 0.0 and gm <= 0.0):
            lo, glo = mid, gm
        else:
            hi = mid
    tau = 0.5 * (lo + hi)
    if abs(gap(tau)) > SOLVE_TOL:
        raise ArithmeticError(
            f"bisection landed {gap(tau):.3e} away from target at tau={tau!r}"
        )
    return tau


def verstraete_unitary(rho: np.ndarray) -> np.ndarray:
    """Unitary taking rho to the maximally entangled state of its spectrum."""
    spec = hermitian_eig(as_matrix(rho))
    return O_BASIS @ spec.eigvecs.conj().T


def mems_from_spectrum(spectrum) -> np.ndarray:
    """Maximally entangled mixed X-state with the given eigenvalues."""
    if isinstance(spectrum, Spectrum):
        vals = spectrum.values
    else:
        vals = np.asarray(spectrum, dtype=float)
    if vals.shape != (4,):
        raise ValueError("spectrum must hold exactly four values")
    l1, l2, l3, l4 = np.sort(vals)[::-1]
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = l4
    m[3, 3] = l2
    m[1, 1] = m[2, 2] = 0.5 * (l1 + l3)
    m[1, 2] = m[2, 1] = 0.5 * (l1 - l3)
    return m


def counterpart_details(rho: np.ndarray, measure: str = "concurrence") -> CounterpartResult:
    """Convert rho to an X-state of equal spectrum and equal measure.

    The returned unitary W satisfies state = W rho W^dagger. The target
    can exceed the MEMS ceiling only through numerical noise; any excess
    is clipped and reported.
    """
    rho = as_matrix(rho)
    ok, why = is_density_matrix(rho)
    if not ok:
        raise ValueError(f"not a density matrix: {why}")
    if measure == "concurrence":
        target = concurrence_general(rho)
    elif measure == "negativity":
        target = negativity_general(rho)
    else:
        raise ValueError(f"unknown measure {measure!r}")

    u = verstraete_unitary(rho)
    mems = conjugate(rho, u)
    pm = from_density(mems)
    sol = disentangle_params(pm)
    fn = concurrence_along if measure == "concurrence" else negativity_along
    ceiling = fn(pm, sol, 0.0)

    clip = max(0.0, target - ceiling)
    goal = min(target, ceiling)
    if sol.branch == "already_separable" or ceiling == 0.0:
        tau = 0.0
    else:
        tau = solve_tau(pm, sol, goal, measure)

    v = x_unitary(sol.b1 * tau, sol.b2, sol.b3 * tau, sol.b4)
    w = v @ u
    out = conjugate(rho, w)
    if measure == "concurrence":
        achieved = concurrence_general(out)
    else:
        achieved = negativity_general(out)
    return CounterpartResult(state=out, unitary=w, tau=tau, branch=sol.branch,
                             measure=measure, target=target, achieved=achieved,
                             clip=clip)


def x_counterpart(rho: np.ndarray, measure: str = "concurrence") -> tuple[np.ndarray, np.ndarray]:
    """(X-state, unitary) with the X-state = unitary @ rho @ unitary^dagger."""
    res = counterpart_details(rho, measure)
    return res.state, res.unitary

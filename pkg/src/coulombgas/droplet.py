"""Droplet geometry of a radial potential.

The equilibrium support is the annulus (or disc) r0 <= |z| <= r1 where r0 is
the largest solution of r q'(r) = 0 and r1 the smallest solution of
r q'(r) = 2, both found by bisection on the increasing function r q'(r).
More generally solve_r_tau(p, tau) inverts r q'(r) = 2 tau, which gives the
outer radius of the weighted droplet seen by monomials of rotated degree
tau.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidPotentialError, SolverError

_MAX_BISECT = 200
_DISC_PROBE = 1e-9
_DISC_LEVEL = 1e-8


@dataclass(frozen=True)
class Droplet:
    r0: float
    r1: float
    kind: str  # "disc" or "annulus"


def _rqp(p, r):
    return float(r * p.q_derivs(r, 1))


def _is_disc(p):
    # Disc iff q' is already positive at the origin side: probe q'(1e-9)
    # and confirm r q'(r) has no zero above 1e-8 (r q' is increasing, so a
    # positive value at the probe radius settles it).
    try:
        qp = float(p.q_derivs(_DISC_PROBE, 1))
    except DomainError:
        return False
    return qp > 0.0 and _rqp(p, _DISC_LEVEL) > 0.0


def _bracket_candidates(p):
    if p.support_radius is not None:
        s = p.support_radius
        return [s * (1.0 - 0.5**k) for k in range(1, 60)]
    return [2.0**k for k in range(0, 1024)]


def solve_r_tau(p, tau):
    """Solve r q'(r) = 2 tau for the outer radius, tau in [0, 1].

    For a disc potential tau = 0 returns 0.  Bisection runs on a bracket
    found by scanning upward, and converges to relative width ~1e-15 in
    well under the 200-iteration cap.
    """
    tau = float(tau)
    if not (math.isfinite(tau) and 0.0 <= tau <= 1.0):
        raise DomainError(f"tau must lie in [0, 1], got {tau!r}")
    if tau == 0.0 and _is_disc(p):
        return 0.0
    target = 2.0 * tau

    lo = 1e-12
    if p.support_radius is not None:
        lo = min(1e-12, p.support_radius * 1e-15)
    if _rqp(p, lo) - target >= 0.0:
        if tau == 0.0:
            return 0.0
        raise InvalidPotentialError(
            f"r q'(r) already exceeds {target!r} at r = {lo!r}; no inner bracket"
        )
    hi = None
    prev = lo
    for cand in _bracket_candidates(p):
        if cand <= prev:
            continue
        if _rqp(p, cand) - target > 0.0:
            hi = cand
            break
        prev = cand
    if hi is None:
        raise InvalidPotentialError(
            f"r q'(r) never reaches {target!r}; the potential does not confine this level"
        )
    lo = prev

    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _rqp(p, mid) - target <= 0.0:
            lo = mid
        else:
            hi = mid
    if hi - lo > 1e-13 * max(1.0, hi):
        raise SolverError(f"bisection stalled at width {hi - lo!r} for tau = {tau!r}")
    return 0.5 * (lo + hi)


def droplet_of(p):
    """Droplet radii and kind, with an admissibility check on the Laplacian.

    Raises InvalidPotentialError when the Laplacian of Q fails to be
    strictly positive on a grid spanning a neighborhood of the droplet.
    """
    r1 = solve_r_tau(p, 1.0)
    if _is_disc(p):
        d = Droplet(0.0, r1, "disc")
    else:
        d = Droplet(solve_r_tau(p, 0.0), r1, "annulus")

    lo = max(0.9 * d.r0, 1e-6)
    hi = 1.1 * d.r1
    if p.support_radius is not None:
        hi = min(hi, p.support_radius * (1.0 - 1e-9))
    grid = np.linspace(lo, hi, 64)
    dq = np.asarray(p.laplacian(grid), dtype=float)
    if not np.all(np.isfinite(dq)) or np.any(dq <= 0.0):
        raise InvalidPotentialError(
            "the Laplacian of Q is not strictly positive near the droplet"
        )
    return d


def dr_dtau(p, tau):
    """Derivative of the outer radius with respect to tau.

    d r_tau / d tau = 1 / (2 r_tau laplacian(r_tau)).  tau must be positive;
    for disc potentials the map degenerates as tau -> 0 and values below
    1e-12 are rejected.
    """
    tau = float(tau)
    if not (math.isfinite(tau) and 0.0 < tau <= 1.0):
        raise DomainError(f"tau must lie in (0, 1], got {tau!r}")
    if tau < 1e-12 and _is_disc(p):
        raise DomainError("dr_dtau is singular as tau -> 0 for a disc droplet")
    r = solve_r_tau(p, tau)
    dq = float(p.laplacian(r))
    if not dq > 0.0:
        raise InvalidPotentialError(f"nonpositive Laplacian at r_tau = {r!r}")
    return 1.0 / (2.0 * r * dq)

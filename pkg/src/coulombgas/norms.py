"""Orthogonal monomial norms for radial weights, exact and asymptotic.

The squared norm of the degree-j monomial with respect to the planar
measure e^{-s q(|z|)} dA(z), dA = d^2z / pi, is

    h_j = 2 * integral of r^(2j+1) e^{-s q(r)} dr over (0, infinity),

with s = n for the determinantal (normal) ensemble and s = 2n for the
symplectic one.  The exact route rewrites the integrand through the
effective potential V_tau, tau = j/s, shifts by its minimum so the
quadrature sees a bounded integrand, and truncates where the shifted
exponent is negligible.  The asymptotic routes implement the two-term
Laplace approximation at the saddle r_tau, the factorial form valid for
low degrees over a disc droplet, and the gated high-degree form.
"""

import math
from dataclasses import dataclass

import numpy as np

from .droplet import droplet_of, solve_r_tau
from .equilibrium import b1
from .errors import DomainError, IntegrationError
from .quadrature import integrate
from .specialfn import LOG_2PI, ln_factorial

_ENSEMBLES = ("normal", "symplectic")


@dataclass(frozen=True)
class NormQuery:
    """Degree j norm request at matrix size n for one ensemble."""

    n: int
    j: int
    ensemble: str = "normal"

    def __post_init__(self):
        if self.ensemble not in _ENSEMBLES:
            raise DomainError(f"ensemble must be one of {_ENSEMBLES}, got {self.ensemble!r}")
        if self.n != int(self.n) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if self.j != int(self.j) or not 0 <= self.j <= self.s - 1:
            raise DomainError(
                f"degree must be an integer in [0, {self.s - 1}], got {self.j!r}"
            )

    @property
    def s(self):
        """Inverse temperature scale in the weight e^{-s q}."""
        return self.n if self.ensemble == "normal" else 2 * self.n

    @property
    def tau(self):
        return self.j / self.s


def _v_of(p, tau, r):
    # scalar/array V_tau without re-validating tau
    q0 = p.q_derivs(r, 0)
    if tau == 0.0:
        return q0
    return q0 - 2.0 * tau * np.log(r)


def _peak(p, query):
    """Saddle radius, V minimum, and Gaussian width for the shifted weight."""
    s = query.s
    tau = query.tau
    r_star = solve_r_tau(p, tau)
    if r_star == 0.0:
        v_min = p.q_at_zero()
        dq_star = p.laplacian_at_zero()
    else:
        v_min = float(_v_of(p, tau, r_star))
        dq_star = float(p.laplacian(r_star))
    if not dq_star > 0.0:
        raise IntegrationError(f"nonpositive Laplacian at the saddle r = {r_star!r}")
    width = 1.0 / math.sqrt(2.0 * s * dq_star)
    return r_star, v_min, width


def _r_cut(p, query, r_star, v_min):
    """Truncation radius: first dyadic point where the shifted exponent
    exceeds 40 + log s, capped at the support radius."""
    s = query.s
    tau = query.tau
    thresh = 40.0 + math.log(s)
    r = max(2.0 * r_star, r_star + 1.0)
    support = p.support_radius
    for _ in range(2000):
        if support is not None and r >= support:
            return support
        if s * (float(_v_of(p, tau, r)) - v_min) >= thresh:
            return r
        r *= 2.0
        if r > 1e300:
            raise IntegrationError("failed to locate a truncation radius")
    raise IntegrationError("failed to locate a truncation radius")


def log_norm_exact(p, query, rel_tol=1e-13):
    """log h_j by shifted adaptive quadrature.

    Accuracy target is rel_tol on the norm value, which translates to about
    the same absolute error on the log.
    """
    s = query.s
    tau = query.tau
    r_star, v_min, width = _peak(p, query)
    cut = _r_cut(p, query, r_star, v_min)

    seeds = []
    for k in (1.0, 2.0, 4.0, 8.0, 16.0, 32.0):
        seeds.append(r_star - k * width)
        seeds.append(r_star + k * width)
    if r_star > 0.0:
        seeds.append(r_star)
    seeds = [x for x in seeds if 0.0 < x < cut]

    def integrand(r):
        return 2.0 * r * np.exp(-s * (_v_of(p, tau, r) - v_min))

    val, _ = integrate(integrand, 0.0, cut, rel_tol=rel_tol, abs_tol=0.0, seeds=seeds)
    if not val > 0.0:
        raise IntegrationError(f"nonpositive norm integral {val!r}")
    return -s * v_min + math.log(val)


def _laplace_value(p, s, tau):
    r = solve_r_tau(p, tau)
    if r == 0.0:
        raise DomainError(
            "the Laplace form needs a positive saddle radius; "
            "use the low-degree form for small j over a disc droplet"
        )
    dq = float(p.laplacian(r))
    v = float(_v_of(p, tau, r))
    corr = float(b1(p, r)) / s
    return -s * v + 0.5 * math.log(2.0 * math.pi * r * r / (s * dq)) + math.log1p(corr)


def log_norm_laplace(p, query):
    """Two-term Laplace approximation of log h_j at the saddle r_tau.

    Error is O(s^-2) uniformly in j as long as r_tau stays away from 0.
    """
    return _laplace_value(p, query.s, query.tau)


def log_norm_lowdeg(p, query):
    """Factorial form of log h_j for low degrees over a disc droplet.

    log h_j ~ -s q(0) - (j+1) log(s laplacian(0)) + log j!; exact for the
    quadratic profile and accurate while j stays well below the droplet
    scale.
    """
    d = droplet_of(p)
    if d.kind != "disc":
        raise DomainError("the low-degree factorial form requires a disc droplet")
    s = query.s
    q0 = p.q_at_zero()
    dq0 = p.laplacian_at_zero()
    return -s * q0 - (query.j + 1) * math.log(s * dq0) + ln_factorial(query.j)


def log_norm_highdeg(p, query):
    """Laplace form of log h_j gated to degrees above the splitting scale.

    Requires a disc droplet and j >= n^(1/6) (twice that for the symplectic
    grid), the regime where the saddle is uniformly separated from the
    origin.
    """
    d = droplet_of(p)
    if d.kind != "disc":
        raise DomainError("the high-degree form requires a disc droplet")
    gate = query.n ** (1.0 / 6.0)
    if query.ensemble == "symplectic":
        gate *= 2.0
    if query.j < gate:
        raise DomainError(
            f"degree {query.j} below the high-degree gate {gate!r} at n = {query.n}"
        )
    return _laplace_value(p, query.s, query.tau)

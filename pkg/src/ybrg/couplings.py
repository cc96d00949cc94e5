"""Maps between spectral data (f, u) and the Kondo couplings (J_par, J_perp).

Sign conventions
----------------
The integrable family is parameterised by a single real argument ``phi``
(``phi = a*z + c`` for the S-matrices). The coupling relations are written for
``f(-t)``, so along a physical time axis the closed-form couplings are evaluated
at ``phi(t) = c - a*t`` (see :func:`integrable_phi`).

The integrability constraint is used in its half-angle form::

    cos(J_par / 2) = cos(u) * cos(J_perp / 2)

which is what the closed-form family satisfies identically and what reduces to
``J_par**2 - J_perp**2 = 4 u**2`` at small coupling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

import numpy as np

from .errors import DomainError, InvalidAnisotropy, InvalidTime, NonHyperbolicRegime

__all__ = [
    "CLAMP_TOL",
    "CouplingPair",
    "SpectralParams",
    "SpectralProfile",
    "couplings_from_spectral",
    "spectral_from_couplings",
    "check_constraint",
    "weak_coupling_residual",
    "su2_coupling",
    "su2_spectral",
    "kondo_temperature",
    "check_shift_property",
    "integrable_phi",
    "rg_identified_slope",
]

CLAMP_TOL = 1e-12


class CouplingPair(NamedTuple):
    """Couplings in radians."""

    j_par: float
    j_perp: float


@dataclass(frozen=True)
class SpectralParams:
    """Integrable parameterisation ``f(z) = a z + c`` with shift ``kappa = a L``."""

    a: float
    c: float
    u: float
    L: float = 1.0

    def __post_init__(self):
        if not self.L > 0:
            raise DomainError(f"system size L must be positive, got {self.L}")

    @property
    def kappa(self) -> float:
        return self.a * self.L

    def profile(self) -> "SpectralProfile":
        return SpectralProfile.linear(self.a, self.c)


@dataclass(frozen=True)
class SpectralProfile:
    """The function ``phi(z)`` fed to every S-matrix.

    Build with :meth:`linear` for the integrable family, or with :meth:`custom`,
    :meth:`sine` and :meth:`quadratic` for the non-integrable controls.
    """

    func: Callable[[float], float] = field(repr=False)
    kind: str = "custom"
    a: float | None = None
    c: float | None = None
    label: str = ""

    def __call__(self, z):
        return self.func(z)

    @classmethod
    def linear(cls, a: float, c: float) -> "SpectralProfile":
        return cls(lambda z: a * z + c, "linear", a, c, f"{a!r}*z + {c!r}")

    @classmethod
    def custom(cls, func: Callable[[float], float], label: str = "") -> "SpectralProfile":
        return cls(func, "custom", None, None, label)

    @classmethod
    def sine(cls, a: float, c: float, eps: float, freq: float = 3.0) -> "SpectralProfile":
        """``a z + c + eps sin(freq z)``: linear slope, broken shift property."""
        return cls(lambda z: a * z + c + eps * np.sin(freq * z), "custom", a, c,
                   f"{a!r}*z + {c!r} + {eps!r}*sin({freq!r}*z)")

    @classmethod
    def quadratic(cls, scale: float = 1.0) -> "SpectralProfile":
        return cls(lambda z: scale * z * z, "custom", None, None, f"{scale!r}*z**2")


def _check_u(u: float) -> None:
    if not 0.0 < u <= math.pi / 2:
        raise InvalidAnisotropy(f"u must lie in (0, pi/2], got {u!r}")


def couplings_from_spectral(u: float, phi: float, branch: int = +1) -> CouplingPair:
    """Closed-form integrable couplings at spectral value ``phi``.

    ``J_perp = 2 arccos(+-tanh(phi) / D)`` and
    ``J_par = 2 arccos(+-cos(u) tanh(phi) / D)`` with
    ``D = sqrt(sin(u)**2 + cos(u)**2 tanh(phi)**2)``.

    Evaluated through the equivalent ``atan2`` forms
    ``J_perp = 2 atan2(sin u, +-sinh phi)`` and
    ``J_par = 2 atan2(sin u, +-cos u tanh phi)``; arccos near 1 loses half the
    digits at weak coupling.
    """
    _check_u(u)
    if not math.isfinite(phi):
        if math.isinf(phi):
            # endpoint of the family: tanh -> sign(phi)
            s = math.copysign(1.0, phi) * branch
            return CouplingPair(2 * math.atan2(math.sin(u), s * math.cos(u)),
                                2 * math.atan2(0.0, s))
        raise DomainError("phi must be finite")
    if branch not in (1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch!r}")
    su = math.sin(u)
    j_perp = 2 * math.atan2(su, branch * math.sinh(phi))
    j_par = 2 * math.atan2(su, branch * math.cos(u) * math.tanh(phi))
    return CouplingPair(j_par, j_perp)


def spectral_from_couplings(pair) -> tuple[float, float]:
    """Invert the coupling relations: return ``(f, u)``.

    ``u = arccos(cos(J_par/2) / cos(J_perp/2))`` and
    ``tanh f = sqrt(sin((J_par - J_perp)/2) sin((J_par + J_perp)/2)) / sin(J_par/2)``.

    Requires ``J_par >= J_perp >= 0``. At ``J_perp = 0`` the result is
    ``f = inf``; at ``J_par = J_perp`` it is ``f = 0`` (``u`` is then only
    fixed through the ratio of cosines and is ill-conditioned near ``(pi, pi)``).
    """
    j_par, j_perp = float(pair[0]), float(pair[1])
    if not (math.isfinite(j_par) and math.isfinite(j_perp)):
        raise DomainError("couplings must be finite")
    if j_par < j_perp or j_perp < 0:
        raise NonHyperbolicRegime(
            f"need j_par >= j_perp >= 0, got ({j_par!r}, {j_perp!r})")
    half_par, half_perp = j_par / 2, j_perp / 2

    cos_perp = math.cos(half_perp)
    if cos_perp == 0.0:
        ratio = math.nan if math.cos(half_par) == 0.0 else math.inf
    else:
        ratio = math.cos(half_par) / cos_perp
    if not math.isnan(ratio) and abs(ratio) > 1 + CLAMP_TOL:
        raise DomainError(f"arccos argument {ratio!r} outside [-1, 1]")

    # sin^2(A) - sin^2(B) = sin(A - B) sin(A + B)
    prod = math.sin(half_par - half_perp) * math.sin(half_par + half_perp)
    prod = max(prod, 0.0)
    num = math.sqrt(prod)
    if math.isnan(ratio):
        u = math.nan
    else:
        # stable equivalent of arccos(ratio): sin u = num/|cos B|, cos u = ratio
        u = math.atan2(num, math.copysign(1.0, cos_perp) * math.cos(half_par))

    sin_par = math.sin(half_par)
    if num == 0.0:
        return 0.0, u
    if j_perp == 0.0:
        return math.inf, u
    tanh_f = num / sin_par
    # 1 - tanh f = sin^2 B / (sin^2 A (1 + tanh f)), no cancellation
    one_minus = (math.sin(half_perp) / sin_par) ** 2 / (1 + tanh_f)
    f = 0.5 * math.log((1 + tanh_f) / one_minus)
    return f, u


def check_constraint(pair, u: float) -> float:
    """``|cos(J_par/2) - cos(u) cos(J_perp/2)|``."""
    j_par, j_perp = pair
    return abs(math.cos(j_par / 2) - math.cos(u) * math.cos(j_perp / 2))


def weak_coupling_residual(pair, u: float) -> float:
    """Signed ``4 u**2 - (J_par**2 - J_perp**2)``."""
    j_par, j_perp = pair
    return 4 * u * u - (j_par * j_par - j_perp * j_perp)


def su2_coupling(t: float) -> float:
    """Universal long-time SU(2) coupling ``J(t) = pi / t``."""
    if not t > 0:
        raise InvalidTime(f"t must be positive, got {t!r}")
    return math.pi / t


def su2_spectral(J: float) -> float:
    """SU(2) spectral parameter ``f = cot(J/2)`` for ``J`` in ``(0, pi]``."""
    if not 0 < J <= math.pi:
        raise DomainError(f"J must lie in (0, pi], got {J!r}")
    return math.cos(J / 2) / math.sin(J / 2)


def kondo_temperature(value: float, cutoff: float, scheme: str = "bethe") -> float:
    """Kondo temperature.

    ``scheme="bethe"``: ``value`` is the spectral parameter f,
    ``T_K = cutoff * exp(-pi f)``.
    ``scheme="wilson"``: ``value`` is the coupling J,
    ``T_K = cutoff * exp(-pi / J)``.
    """
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff!r}")
    if scheme == "bethe":
        return cutoff * math.exp(-math.pi * value)
    if scheme == "wilson":
        if value == 0:
            raise DomainError("J = 0 has no Wilson Kondo temperature")
        return cutoff * math.exp(-math.pi / value)
    raise ValueError(f"unknown scheme {scheme!r}")


def check_shift_property(profile: Callable[[float], float], L: float, kappa: float,
                         sample_points: Iterable[float]) -> float:
    """Max violation of ``phi(z +- L) = phi(z) +- kappa`` over the samples."""
    worst = 0.0
    for z in sample_points:
        p = profile(z)
        worst = max(worst,
                    abs(profile(z + L) - p - kappa),
                    abs(profile(z - L) - p + kappa))
    return float(worst)


def rg_identified_slope(u: float) -> float:
    """Slope ``a = -2u/pi`` that maps the integrable family onto the RG flow."""
    return -2.0 * u / math.pi


def integrable_phi(t, a: float, c: float):
    """Spectral argument of the closed-form couplings at time ``t``: ``c - a t``."""
    return c - a * t

"""Numerical checks of the integrability structure of the time-dependent
anisotropic Kondo model: S-matrices, Yang-Baxter and transport-commutation
identities, one-particle qKZ propagation and the correspondence between the
integrable coupling trajectories and the one-loop RG flow.
"""
__version__ = "0.1.0"

from .errors import (  # noqa: F401
    DimMismatch,
    DivergedFlow,
    DomainError,
    EmptyComposition,
    InvalidAnisotropy,
    InvalidSlots,
    InvalidTime,
    NonHyperbolicRegime,
    PathMismatch,
    PropagationDefect,
    SingularSMatrix,
    YbrgError,
)
from .tensor_core import ChainSpec, compose, embed_two_site, residual  # noqa: F401
from .smatrix import impurity_smatrix, particle_smatrix  # noqa: F401
from .couplings import (  # noqa: F401
    CouplingPair,
    SpectralParams,
    SpectralProfile,
    couplings_from_spectral,
    spectral_from_couplings,
)
from .transport import TransportConfig, integrability_witness, transport_operator  # noqa: F401
from .rgflow import RgTrajectory, integrate_rg, compare_with_integrable  # noqa: F401

# coding: utf-8

# # One-particle difference equation
#
# In the one-particle sector the amplitude obeys f(z - L) = S(f(z)) f(z).
# Data given on one window [z0, z0 + L) extends uniquely to the whole line.

# In[1]:

import numpy as np

from ybrg.couplings import SpectralProfile
from ybrg.wavefunction import extend_one_particle, pbc_residual, round_trip_residual, uniform_grid


# In[2]:

prof = SpectralProfile.linear(-0.3, 0.2)
grid = uniform_grid(0.0, 1.0, 32)
rng = np.random.default_rng(0)
init = rng.normal(size=(32, 4)) + 1j * rng.normal(size=(32, 4))

field = extend_one_particle(init, grid, 5, prof, 0.5, 1.0)
print("periods:", field.periods)
print("pbc residual:", pbc_residual(field, prof, 0.5))
print("round trip:", round_trip_residual(init, grid, 10, prof, 0.5, 1.0))


# The norm of each sample is preserved because S is unitary.

# In[3]:

norms = np.linalg.norm(field.values, axis=2)
print(np.ptp(norms, axis=0).max())

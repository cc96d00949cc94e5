# coding: utf-8

# # Impurity S-matrix and the Yang-Baxter relations
#
# The two-body S-matrix is the trigonometric XXZ R-matrix with rapidity-like
# argument x and anisotropy u. Here we build it, check unitarity and the
# inverse property, then test both Yang-Baxter relations for a linear and a
# strongly nonlinear spectral function.

# In[1]:

import numpy as np

from ybrg.couplings import SpectralProfile
from ybrg.smatrix import (impurity_smatrix, inverse_property_residual, mixing_block,
                          ybe_impurity_residual, ybe_particle_residual)

np.set_printoptions(precision=4, suppress=True)


# The 4x4 matrix only mixes the two antiparallel states:

# In[2]:

S = impurity_smatrix(0.4, 0.7)
print(S)
b, c = mixing_block(0.4, 0.7)
print("|b|^2 + |c|^2 =", abs(b) ** 2 + abs(c) ** 2)


# S(-x) undoes S(x):

# In[3]:

print("inverse residual:", max(inverse_property_residual(x, 0.7) for x in np.linspace(-3, 3, 13)))


# Yang-Baxter holds for any profile as long as particle pairs see the
# difference f(z_i) - f(z_j). It therefore cannot decide integrability alone.

# In[4]:

rng = np.random.default_rng(1)
for prof in (SpectralProfile.linear(-0.5, 0.1), SpectralProfile.custom(np.sinh, "sinh z")):
    r16 = max(ybe_impurity_residual(*z, prof, 0.7) for z in rng.uniform(-1, 1, (20, 2)))
    r18 = max(ybe_particle_residual(*z, prof, 0.7) for z in rng.uniform(-1, 1, (20, 3)))
    print(f"{prof.label:>20}: impurity YBE {r16:.1e}, particle YBE {r18:.1e}")

# coding: utf-8

# # Transport operators and the integrability witness
#
# Carrying particle j once around the ring gives the transport operator Z_j.
# The operators commute (with the shift z_j -> z_j - L inserted) only when the
# spectral function is shift-linear, f(z + L) = f(z) + kappa.

# In[1]:

from ybrg.couplings import SpectralProfile
from ybrg.transport import TransportConfig, commutation_residual, integrability_witness


# Linear profile: residual at rounding level.

# In[2]:

cfg = TransportConfig.linear((-0.3, 0.4, 1.2), a=-0.32, c=0.1, u=0.6, L=1.0)
print(integrability_witness(cfg).verdict, integrability_witness(cfg).max_residual)


# Adding a small sine ripple breaks shift-linearity and the witness notices.

# In[3]:

for eps in (0.0, 0.01, 0.05, 0.1):
    cfg = TransportConfig((-0.3, 0.4), SpectralProfile.sine(-0.32, 0.1, eps), 0.6, 1.0, -0.32)
    print(f"eps={eps:<5} residual={commutation_residual(1, 2, cfg):.3e}")

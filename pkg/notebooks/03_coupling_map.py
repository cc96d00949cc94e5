# coding: utf-8

# # From spectral data to Kondo couplings
#
# (u, f) map to (J_par, J_perp) subject to the half-angle constraint
# cos(J_par/2) = cos(u) cos(J_perp/2). The map is inverted exactly.

# In[1]:

from ybrg.couplings import (check_constraint, couplings_from_spectral, kondo_temperature,
                            spectral_from_couplings, weak_coupling_residual)


# In[2]:

pair = couplings_from_spectral(0.5, 1.0)
print(pair)
print("constraint residual:", check_constraint(pair, 0.5))
print("back:", spectral_from_couplings(pair))


# At weak coupling the family sits on the hyperbola J_par^2 - J_perp^2 = 4 u^2;
# the signed residual shrinks as f grows.

# In[3]:

for phi in (1.0, 2.0, 4.0):
    print(phi, weak_coupling_residual(couplings_from_spectral(0.05, phi), 0.05))


# Bethe-ansatz and one-loop Kondo temperatures agree when f = 1/J.

# In[4]:

for J in (0.1, 0.25, 0.5, 1.0):
    print(J, kondo_temperature(1 / J, 10.0, "bethe"), kondo_temperature(J, 10.0, "wilson"))

# coding: utf-8

# # Poor-man's scaling versus the integrable family
#
# With spectral slope a = -2u/pi the one-loop flow and the closed-form
# integrable couplings agree up to terms of third order in the couplings.
# Shrinking the coupling scale tenfold shrinks the relative mismatch about a
# hundredfold.

# In[1]:

import math

import numpy as np

from ybrg.couplings import couplings_from_spectral, rg_identified_slope
from ybrg.rgflow import (closed_form_trajectory, compare_with_integrable, correspondence_deviation,
                         integrate_rg, integrate_su2, compare_with_su2)


# In[2]:

u, c = 0.02, math.log(3)
a = rg_identified_slope(u)
traj = integrate_rg(couplings_from_spectral(u, c), 0.0, 1 / u, 4000, a, u)
print("max relative deviation:", compare_with_integrable(traj, u, a, c).max_rel_dev)


# In[3]:

d1 = correspondence_deviation(0.02, c)
d2 = correspondence_deviation(0.002, c)
print(f"{d1:.4e} / {d2:.4e} = {d1 / d2:.2f}")


# J_par^2 - J_perp^2 is conserved, so flows are hyperbolae.

# In[4]:

q = traj.conserved
print("drift:", np.max(np.abs(q - q[0])))


# SU(2) point: J = pi/t.

# In[5]:

su2 = integrate_su2(math.pi, 1.0, 10.0, 10_000)
print("SU(2) RK4 vs pi/t:", compare_with_su2(su2).max_rel_dev)


# Toulouse point u = pi/2: J_par stays put, J_perp flows.

# In[6]:

tl = closed_form_trajectory(math.pi / 2, 0.4, np.linspace(0, 4, 5))
print(np.column_stack([tl.t, tl.j_par, tl.j_perp]))

# coding: utf-8

# # Command-line driver
#
# `ybrg verify <suite>` writes a JSON report and exits 0 only when every check
# passes. `ybrg traj` writes the integrable trajectory as CSV.

# In[1]:

import json
import os
import tempfile

from ybrg.cli import main


# In[2]:

tmp = tempfile.mkdtemp()
out = os.path.join(tmp, "report.json")
print("exit:", main(["verify", "couplings", "--u", "0.5", "--out", out]))
report = json.load(open(out))
for chk in report["checks"]:
    print(chk["pass"], chk["name"], chk["value"])


# In[3]:

csv = os.path.join(tmp, "traj.csv")
main(["traj", "--u", "0.5", "--samples", "5", "--csv", csv])
print(open(csv).read())

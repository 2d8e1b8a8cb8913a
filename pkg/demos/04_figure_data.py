"""
Figure data from the command line
=================================

The CLI writes plot-ready CSV. This script calls it in-process, writes four
figure tables to a scratch directory and the bound curves next to them,
then summarises each file with numpy.
"""

# %%
import tempfile
from pathlib import Path

import numpy as np

from qostrowski.cli import main

out = Path(tempfile.mkdtemp(prefix="qostrowski-"))
for fig in (1, 2, 3, 4):
    main(["figure", str(fig), "--out", str(out / f"figure{fig}.csv")])
main(["bounds", "--grid", "400", "--out", str(out / "bounds.csv")])
print("wrote", sorted(p.name for p in out.iterdir()), "to", out)

# %%
# Each table starts with t and value. The remaining columns depend on the figure.
for fig in (1, 2, 3, 4):
    data = np.genfromtxt(out / f"figure{fig}.csv", delimiter=",", names=True)
    cols = data.dtype.names
    line = f"figure {fig}: {len(data)} rows, columns {cols}"
    if "derivative" in cols:
        d = data["derivative"][np.isfinite(data["derivative"])]
        line += f"; max |D_q f| = {np.abs(d).max():.6f}"
    print(line)

# %%
# The combined bound M(x) jumps down on the lattice.
b = np.genfromtxt(out / "bounds.csv", delimiter=",", names=True, dtype=None, encoding=None)
lat = b[b["branch"] == "LATTICE"]
off = b[b["branch"] == "OFF_LATTICE"]
print(f"{len(lat)} lattice rows, {len(off)} off-lattice rows")
print(f"largest jump: {np.max(lat['bound_full'] - lat['bound_M']):.4f}")

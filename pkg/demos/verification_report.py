"""
Running the property checks
===========================

``run_all`` probes the partition, fit and ordering identities on a dense
grid.  Standard linear interpolation fails the ordering check on the same
scene.
"""

from dinterp import run_all
from dinterp.io import format_report
from dinterp.fixtures import fig1_fixture

fx = fig1_fixture()
print(format_report(run_all(fx.samples, fx.field)))

sli = run_all(fx.samples, fx.field, method="sli")
c = sli["dicp"]
print(f"SLI: dicp passed={c.passed}, worst violation {c.worst_residual:.3f} at x={c.worst_location}")

# %%
# A seeded fault: doubling one similarity value breaks the partition check.
from dinterp.verify import check_rho_partition

bad = check_rho_partition(fx.field, perturb=lambda rl, rr, x: (2 * rl, rr))
print(f"mutated rho: passed={bad.passed}, residual {bad.worst_residual:.3f}")

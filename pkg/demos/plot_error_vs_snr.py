"""
Error probability versus SNR
============================

Runs the default sweep (L=2, fields 5, 13 and 41, 10^4 blocks per point) and
plots relay and destination error rates against the union bound. At high SNR
the destination curves flatten onto the rank-failure probability of each
field while the relay error keeps falling.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from gausscf.sweep import SweepConfig, run_sweep

reports = run_sweep(SweepConfig(seed=2013))

fig, ax = plt.subplots(figsize=(7, 5))
for p, color in zip((5, 13, 41), ("C0", "C1", "C2")):
    rows = [r for r in reports if r.p == p]
    snr = [r.snr_db for r in rows]
    ax.semilogy(snr, [r.relay_rate or float("nan") for r in rows], "--", color=color, label=f"relay, F_{p}")
    ax.semilogy(snr, [r.dest_rate for r in rows], "o-", color=color, label=f"destination, F_{p}")
    ax.semilogy(snr, [r.union_bound for r in rows], ":", color=color, label=f"union bound, F_{p}")
    top = rows[-1]
    print(f"F_{p}: destination error at {top.snr_db} dB = {top.dest_rate:.4f}, rank-failure floor = {top.analytic_p1:.4f}")

ax.set_xlabel("SNR (dB)")
ax.set_ylabel("error probability")
ax.set_ylim(1e-5, 1.5)
ax.grid(which="both", alpha=0.3)
ax.legend(fontsize=7, ncol=3, loc="lower left")
fig.tight_layout()
fig.savefig("error_vs_snr.png", dpi=120)
print("wrote error_vs_snr.png")

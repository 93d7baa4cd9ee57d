"""
One compute-and-forward block, step by step
===========================================

Two sources in F_13 send one message each. The relay sees two noisy
superpositions with fresh Gaussian-integer gains, decodes a field
combination from each, and the destination inverts the coefficient matrix.
"""

import numpy as np

from gausscf import build_system, run_block, sigma_for_snr
from gausscf.cflink import Decoded

sys = build_system(13)
sigma = sigma_for_snr(15.0, sys)
rng = np.random.default_rng(7)

trace = run_block(rng, sys, 2, sigma)
print(f"messages w = {trace.messages}, codewords = {[str(sys.codebook[m]) for m in trace.messages]}")
for t, (use, comb, est) in enumerate(zip(trace.uses, trace.combinations, trace.relay_estimates)):
    print(f"use {t}: h = {[str(h) for h in use.gains]}  y = {use.received:.3f}")
    print(f"        coefficients a = {comb.coeffs}, true v = {comb.value}, relay estimate = {est}")
print("A =", trace.matrix)
if isinstance(trace.outcome, Decoded):
    print("destination decoded", trace.outcome.messages, "(correct)" if not trace.block_error else "(wrong)")
else:
    print("coefficient matrix is singular: rank", trace.outcome.rank)

# Tally a few thousand blocks the slow way to see where errors come from.
counts = {"ok": 0, "rank failure": 0, "relay error": 0}
for _ in range(3000):
    t = run_block(rng, sys, 2, sigma)
    if t.rank_failure:
        counts["rank failure"] += 1
    elif t.block_error:
        counts["relay error"] += 1
    else:
        counts["ok"] += 1
print(counts)

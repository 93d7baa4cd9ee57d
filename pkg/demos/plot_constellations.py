"""
Residue-class constellations
============================

Builds the signal sets for F_5, F_13 and F_41, prints the Bezout pairs that
drive the inverse map, and draws each constellation with its field labels.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from gausscf import build_system, phi_inv

fig, axes = plt.subplots(1, 3, figsize=(13, 4.5))
for ax, p in zip(axes, (5, 13, 41)):
    sys = build_system(p)
    prm = sys.params
    print(f"p={p:2d}  pi={prm.pi}  u={prm.u}  v={prm.v}  "
          f"u*pi + v*conj(pi) = {prm.u * prm.pi + prm.v * prm.pi.conj()}  E|x|^2 = {sys.avg_energy}")

    # every codeword maps back to the field element that produced it
    assert [phi_inv(x, prm) for x in sys.codebook] == list(range(p))

    ax.scatter(sys.code_re, sys.code_im, s=30)
    for a, x in enumerate(sys.codebook):
        ax.annotate(str(a), (x.re, x.im), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_title(f"pi = {prm.pi}  (F_{p})")
    ax.set_aspect("equal")
    ax.grid(alpha=0.3)

fig.tight_layout()
fig.savefig("constellations.png", dpi=120)
print("wrote constellations.png")

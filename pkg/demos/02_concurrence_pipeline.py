"""The concurrence pipeline, from density matrix to entanglement measure."""

import numpy as np

import spinwitness as sw
from spinwitness.states import SINGLET_KET

singlet = sw.validate(np.outer(SINGLET_KET, SINGLET_KET.conj()))
print("C(singlet) =", sw.wootters_concurrence(singlet).concurrence)

# Product states always come out at zero.
product = sw.product_state_density(sw.ProductState([0.3, 0.1, 0.8], [0, -0.5, 0.2]))
print("C(product) =", sw.wootters_concurrence(product).concurrence)

# Werner family: singlet mixed with white noise, entangled above 1/2.
for f in (0.3, 0.5, 0.75, 1.0):
    werner = f * singlet + (1 - f) * (np.eye(4) - singlet) / 3
    c = sw.wootters_concurrence(sw.validate(werner)).concurrence
    print(f"Werner F={f}: C = {c:.4f}  (closed form: {max(0.0, 2*f-1):.4f})")

# The spin flip underneath the measure is an involution fixing the singlet.
print("\nspin flip of |uu><uu| has populations",
      np.real(np.diag(sw.spin_flip(np.diag([1.0, 0, 0, 0])))).tolist())

# Rotation-averaged states carry a closed form: no matrix work needed.
s = sw.SpunState(p_s=0.6, a=0.1, b=0.3, m=0.2, eta=0.8, phi=1.1)
closed = sw.spun_concurrence_closed_form(s)
generic = sw.wootters_concurrence(sw.to_density(s))
print("\nclosed form :", closed.concurrence, closed.lambdas)
print("generic      :", generic.concurrence, generic.lambdas)

# Reading a state from disk (see README for the JSON schema):
sw.save_state(singlet, "/tmp/singlet.json", basis="coupled")
print("\nround trip C =", sw.wootters_concurrence(sw.load_state("/tmp/singlet.json")).concurrence)

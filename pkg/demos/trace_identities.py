"""Exact trace identities for free pairs of unitaries.

Two order-two unitaries on distinct free factors of C2 * C2 are freely
independent by construction, so expanding products word by word checks the
closed-form trace of uv and of the commutator uvu*v* with no analytic
input at all.
"""

import math

from freecomm import (
    FreeProductGroup,
    cyclic_group,
    ell,
    ell_bar,
    multiply,
    order_two_unitary,
    star,
    trace,
    verify_free_commutator_identity,
)

ambient = FreeProductGroup((cyclic_group(2), cyclic_group(2)))

print("tau(uv) = tau(u) tau(v) for free unitaries:")
for alpha, beta in [(0.5, 0.5), (0.9, -0.25), (0.0, 0.75)]:
    u = order_two_unitary(ambient, alpha, 0)
    v = order_two_unitary(ambient, beta, 1)
    tau_uv = trace(multiply(u, v))
    print(f"  alpha={alpha:+.2f} beta={beta:+.2f}  tau(uv)={tau_uv.real:+.6f}  "
          f"alpha*beta={alpha * beta:+.6f}")

print("\ntau(u v u* v*) = 1 - (1 - alpha^2)(1 - beta^2):")
for alpha, beta in [(0.0, 0.0), (0.5, 0.5), (0.9, 0.0), (0.75, -0.75)]:
    chk = verify_free_commutator_identity(alpha, beta)
    print(f"  alpha={alpha:+.2f} beta={beta:+.2f}  expansion={chk.lhs.real:.12f}  "
          f"closed form={chk.rhs:.12f}  deviation={chk.deviation:.2e}")

print("\ntwo-sided bound  l_bar(u) l_bar(v)/sqrt(2) <= l([u,v]) <= sqrt(2) l_bar(u) l_bar(v):")
for alpha, beta in [(0.5, 0.5), (0.9, 0.5), (0.25, -0.75)]:
    u = order_two_unitary(ambient, alpha, 0)
    v = order_two_unitary(ambient, beta, 1)
    comm = multiply(multiply(multiply(u, v), star(u)), star(v))
    lo = ell_bar(u) * ell_bar(v) / math.sqrt(2)
    hi = math.sqrt(2) * ell_bar(u) * ell_bar(v)
    print(f"  alpha={alpha:+.2f} beta={beta:+.2f}   {lo:.5f} <= {ell(comm):.5f} <= {hi:.5f}"
          f"   (l_bar of commutator = {ell_bar(comm):.5f})")

"""Verma modules with a symbolic highest weight.

The module only ever sees the weight through the symbols y_i = q^(lam, a_i),
so one computation certifies an identity for every weight at once -- the
computational form of a Zariski-density argument.
"""

from qshapo.freealg import get_rewrite_system
from qshapo.verma import (
    HighestWeight,
    VermaVector,
    act_e,
    act_f,
    act_k,
    h_eval,
    is_hwv,
)

n = 2
rs = get_rewrite_system(n)
hw = HighestWeight.symbolic(n)
v = VermaVector.highest(hw)

print("the highest weight vector is killed by every raising generator:")
print("  is_hwv(v) =", is_hwv(v, rs))

w = act_f(1, v, rs)
print("\nlowering then raising picks up a quantum integer:")
print("  e1 f1 v =", act_e(1, w, rs))
print("  e2 f1 v =", act_e(2, w, rs))

print("\nthe group-likes act by symbolic eigenvalues:")
print("  k_(a1) f1 v =", act_k((1, 0), w))

print("\nh_i acts on v by the scalar -1/q v^(1-L) [L]_v with "
      "L = (lam + rho, sigma_i):")
print("  h_1(lam) =", h_eval(1, hw))
print("  h_1 at (lam,a1) = 0:", h_eval(1, HighestWeight.numeric((0, 0))))

print("\non the level-1 hyperplane the weight loses one degree of freedom:")
tied = HighestWeight.symbolic(n, hyperplane_m=1)
print("  y1*y2 collapses to", tied.k_eigen((1, 1)))

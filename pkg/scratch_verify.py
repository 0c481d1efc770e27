import sys
sys.path.insert(0, "src")
import time

from ybsys.scalar import parse, variable, ONE, ZERO, const
from ybsys.tensor import Space, ProductSpace, LinMap, identity, flip
from ybsys.structures import Algebra, Coalgebra, check_algebra, check_coalgebra
from ybsys.yang_baxter import (
    algebra_operator, algebra_operator_inverse, coalgebra_operator,
    w_from_algebra, z_from_coalgebra, check_braid, check_qybe,
    yb_commutator, WXZSystem, check_wxz,
)

s = variable("s")
q = variable("q")
r = variable("r")
p = variable("p")
t = variable("t")

A_space = Space("A", ("1", "x"))
C_space = Space("C", ("e", "f"))

x2 = ONE / (s + 1)
alg = Algebra.build(A_space, {(0,0,0): 1, (0,1,1): 1, (1,0,1): 1, (1,1,0): x2}, ["1", "0"])
coa = Coalgebra.build(
    C_space,
    {(0,0,0): 1, (0,1,1): x2, (1,0,1): 1, (1,1,0): 1},
    ["1", "0"],
)
print("algebra check:", check_algebra(alg).ok)
print("coalgebra check:", check_coalgebra(coa).ok)

W = w_from_algebra(alg, 1, s)
print("W matrix:")
print(W.to_text())
Z = z_from_coalgebra(coa, s, 1)  # p=s, t=1
print("Z matrix:")
print(Z.to_text())
WT = W.transposed(W.domain, W.codomain)
print("Z == W^T:", Z == WT)

# W = R o tau cross-check
R_A = algebra_operator(alg, 1, s)
tau_AA = flip(A_space, A_space)
print("W == R_A o tau:", W == tau_AA.then(R_A))

# braid checks, symbolic
R_sym = algebra_operator(alg, r, s)
print("R_A braid (symbolic r,s):", check_braid(R_sym).ok)
Rc_sym = coalgebra_operator(coa, p, t)
print("R_C braid (symbolic p,t):", check_braid(Rc_sym).ok)

# closed-form inverse
inv = algebra_operator_inverse(alg, r, s)
print("R_A o inv == id:", R_sym.then(inv) == identity(R_sym.domain), inv.then(R_sym) == identity(R_sym.domain))

# braid <-> qybe
print("QYBE of R o tau:", check_qybe(tau_AA.then(R_sym)).ok)

# X56
AC = ProductSpace.of(A_space, C_space)
X56 = LinMap.from_dense(AC, AC, [
    ["1","0","0","0"],
    ["0","1","0","0"],
    ["0","q","1","0"],
    ["0","0","0","-1"],
])
sys56 = WXZSystem(W, X56, Z)
rep = check_wxz(sys56)
print("X56 system:", rep.ok)

# X59
X59 = LinMap.from_dense(AC, AC, [
    ["1/s","0","0","q*(1-s)"],
    ["0","1","0","0"],
    ["0","q","1/s","0"],
    ["0","0","0","-1"],
])
sys59 = WXZSystem(W, X59, Z)
rep59 = check_wxz(sys59)
print("X59 system (generic s):", rep59.ok)
for c in rep59.checks:
    print("   ", c.describe())

# side conditions for X59 at generic s
iota = alg.unit_map()
eps = coa.counit_map()
idA = identity(A_space)
idC = identity(C_space)
lhs_unit = iota.tensor(idC).then(X59)
rhs_unit = iota.tensor(idC)
print("X59 unit side condition diff zero:", (lhs_unit - rhs_unit).is_zero())
lhs_counit = X59.then(idA.tensor(eps))
rhs_counit = idA.tensor(eps)
print("X59 counit side condition diff zero:", (lhs_counit - rhs_counit).is_zero())

# X59 at s=1 equals X56
X59_s1 = LinMap.from_dense(AC, AC, [
    ["1","0","0","0"],
    ["0","1","0","0"],
    ["0","q","1","0"],
    ["0","0","0","-1"],
])
print("X59 at s=1 == X56:", X59_s1 == X56)

# perturbation probes on X56: which single-entry bumps keep the system valid?
print("perturbation scan (entry += 1):")
for i in range(4):
    for j in range(4):
        rows = [dict(row) for row in X56.rows]
        rows[i][j] = rows[i].get(j, ZERO) + ONE
        Xp = LinMap(AC, AC, rows)
        sysp = WXZSystem(W, Xp, Z)
        ok = check_wxz(sysp).ok
        unit_ok = (iota.tensor(idC).then(Xp) - iota.tensor(idC)).is_zero()
        counit_ok = (Xp.then(idA.tensor(eps)) - idA.tensor(eps)).is_zero()
        if ok and unit_ok and counit_ok:
            print(f"   ({i},{j}): STILL VALID (incl. side conditions)")

# [W,X,X] for q->q+1 wholesale
X56_shift = LinMap.from_dense(AC, AC, [
    ["1","0","0","0"],
    ["0","1","0","0"],
    ["0","q+1","1","0"],
    ["0","0","0","-1"],
])
print("[W,X,X] zero for q->q+1:", yb_commutator(W, X56_shift, X56_shift).is_zero())

# timing for a braid check on a 4-dim space operator (prep for gluing scale)
t0 = time.time()
rep = check_braid(R_sym)
print("braid re-check ok:", rep.ok, f"({time.time()-t0:.3f}s)")

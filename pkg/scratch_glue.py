import sys, time
sys.path.insert(0, "src")

from ybsys.scalar import parse, variable, ONE, ZERO
from ybsys.tensor import Space, ProductSpace, LinMap, identity, flip
from ybsys.structures import Algebra, Coalgebra
from ybsys.yang_baxter import WXZSystem, check_wxz, check_braid, w_from_algebra, z_from_coalgebra
from ybsys.entwining import (
    EntwiningStructure, check_entwining, wxz_from_entwining, entwining_from_wxz,
    dualize_entwining, invert_entwining,
)
from ybsys.gluing import glue, hecke_glue, check_hecke, check_algebra_quadratic, check_coalgebra_quadratic

s = variable("s"); q = variable("q"); r = variable("r"); p = variable("p"); t = variable("t")

A_space = Space("A", ("1", "x"))
C_space = Space("C", ("e", "f"))
x2 = ONE / (s + 1)
alg = Algebra.build(A_space, {(0,0,0): 1, (0,1,1): 1, (1,0,1): 1, (1,1,0): x2}, ["1", "0"])
coa = Coalgebra.build(C_space, {(0,0,0): 1, (0,1,1): x2, (1,0,1): 1, (1,1,0): 1}, ["1", "0"])

CA = ProductSpace.of(C_space, A_space)
AC = ProductSpace.of(A_space, C_space)
# psi per the element formulas: psi(c (x) 1) = 1 (x) c, psi(e (x) x) = q 1(x)f + x(x)e, psi(f(x)x) = -x(x)f
# domain order (C,A): (e,1),(e,x),(f,1),(f,x); codomain (A,C): (1,e),(1,f),(x,e),(x,f)
psi = LinMap.from_dense(CA, AC, [
    ["1","0","0","0"],
    ["0","q","1","0"],
    ["0","1","0","0"],
    ["0","0","0","-1"],
])
ent = EntwiningStructure(alg, coa, psi)
rep = check_entwining(ent)
print("ex28 entwining (symbolic q,s):", rep.ok)

# X from psi equals X56
X = flip(A_space, C_space).then(psi)
X56 = LinMap.from_dense(AC, AC, [
    ["1","0","0","0"],
    ["0","1","0","0"],
    ["0","q","1","0"],
    ["0","0","0","-1"],
])
print("X from psi == X56:", X == X56)

sysx = wxz_from_entwining(ent, 1, s, s, 1)  # r=1, s=s, p=s, t=1
print("system ok:", check_wxz(sysx).ok)
back = entwining_from_wxz(sysx, alg, coa)
print("backward recovers psi:", back.entwining_map == psi)

# sign-flip perturbation of (2.16): psi(f(x)x) = +x(x)f instead of -x(x)f
psi_bad = LinMap.from_dense(CA, AC, [
    ["1","0","0","0"],
    ["0","q","1","0"],
    ["0","1","0","0"],
    ["0","0","0","1"],
])
rep_bad = check_entwining(EntwiningStructure(alg, coa, psi_bad))
print("sign-flipped psi failures:", [c.law for c in rep_bad.failures])

# dualization
dual = dualize_entwining(ent)
print("dual entwining passes:", check_entwining(dual).ok)
dd = dualize_entwining(dual)
print("double dual round-trips:", dd.entwining_map == psi, dd.algebra == alg, dd.coalgebra == coa)

# glue
t0 = time.time()
g = glue(sysx)
t1 = time.time()
print("glued dim:", g.operator.domain.dim, f"(assembled in {t1-t0:.2f}s)")
rep = check_braid(g.operator)
t2 = time.time()
print("glued braid:", rep.ok, f"({t2-t1:.2f}s)")
print("block readback R == W o tau:", g.restrict("ll", "ll") == flip(A_space, A_space).then(sysx.w), g.sector_is_exact("ll","ll"))
print("block readback U:", g.restrict("rl", "lr") == flip(C_space, A_space).then(sysx.x), g.sector_is_exact("rl","lr"))

# hecke glue, symbolic q
t0 = time.time()
h = hecke_glue(ent, q)
rep_h = check_hecke(h.operator, q)
t1 = time.time()
print("hecke glue checks:", rep_h.ok, f"({t1-t0:.2f}s)", [c.law for c in rep_h.checks])

# hecke at q = 1: mixed blocks are psi and psi inverse
h1 = hecke_glue(ent, 1)
print("hecke q=1 mixed blocks:", h1.restrict("rl","lr") == psi, h1.restrict("lr","rl") == invert_entwining(ent), h1.sector_is_exact("rl","lr"))

# quadratic annihilation, symbolic
print("algebra quadratic:", check_algebra_quadratic(alg, r, s).ok)
print("coalgebra quadratic:", check_coalgebra_quadratic(coa, p, t).ok)

# negative control: perturb X entry (0,0) by +1, glue without validation
rows = [dict(rowd) for rowd in X56.rows]
rows[0][0] = rows[0].get(0, ZERO) + ONE
X_bad = LinMap(AC, AC, rows)
sys_bad = WXZSystem(sysx.w, X_bad, sysx.z)
print("perturbed X (0,0): wxz ok?", check_wxz(sys_bad).ok)
g_bad = glue(sys_bad, validate=False)
print("perturbed glued braid ok?", check_braid(g_bad.operator).ok)

# glue with near-trivial coalgebra (one group-like)
pt = Space("pt", ("e",))
point = Coalgebra.build(pt, {(0,0,0): 1}, ["1"])
flipent = EntwiningStructure(alg, point, flip(pt, A_space))
print("flip entwining on (A, point):", check_entwining(flipent).ok)
sys_pt = wxz_from_entwining(flipent, r, s, p, t)
g_pt = glue(sys_pt)
print("point-glued braid:", check_braid(g_pt.operator).ok)

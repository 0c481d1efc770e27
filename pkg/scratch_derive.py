import sys
sys.path.insert(0, "src")

from ybsys.scalar import variable, ONE, ZERO, parse
from ybsys.tensor import Space, ProductSpace, LinMap, identity, flip
from ybsys.structures import Algebra, Coalgebra, dualize_algebra, check_algebra
from ybsys.yang_baxter import (
    algebra_operator, coalgebra_operator, w_from_algebra, z_from_coalgebra,
    WXZSystem, check_wxz, yb_commutator,
)
from ybsys.entwining import (
    EntwiningStructure, AlgebraFactorisation, check_factorisation,
    wxz_from_factorisation, check_entwining, wxz_from_entwining,
)
from ybsys.gluing import glue, hecke_glue
from ybsys.zoo import get_example

r, s, p, t, q = (variable(n) for n in "rsptq")

# dual consistency: R_C on A* vs transpose of R_A
for name, params in (("ex28.algebra", None), ("group_bialgebra", {"n": 2}), ("group_bialgebra", {"n": 3})):
    e = get_example(name, params)
    alg = e.payload.algebra if e.kind == "bialgebra" else e.payload
    dual = dualize_algebra(alg)
    dsq = ProductSpace.of(dual.space, dual.space)
    ra = algebra_operator(alg, t, p)   # swapped params
    rat = ra.transposed(dsq, dsq)
    pflip = flip(dual.space, dual.space)
    lhs = coalgebra_operator(dual, p, t)
    rhs = pflip.then(rat).then(pflip)
    print(name, params, "R_C(A*) == tau o R_A(t,p)^T o tau:", lhs == rhs)

# factorisation: flip exchange on two algebras
alg_a = get_example("ex28.algebra").payload
alg_b = get_example("group_bialgebra").payload.algebra
fact = AlgebraFactorisation(alg_a, alg_b, flip(alg_b.space, alg_a.space))
print("flip factorisation:", check_factorisation(fact).ok)
r2, s2 = parse("r+1"), parse("s+1")  # independent second parameters
sysf = wxz_from_factorisation(fact, r, s, r2, s2)
print("factorisation system:", check_wxz(sysf).ok)

# B = k (one-dimensional algebra)
k_space = Space("k1", ("u",))
alg_k = Algebra.build(k_space, {(0, 0, 0): 1}, ["1"])
fact_k = AlgebraFactorisation(alg_a, alg_k, flip(k_space, alg_a.space))
print("B=k factorisation:", check_factorisation(fact_k).ok,
      check_wxz(wxz_from_factorisation(fact_k, r, s, p, t)).ok)

# perturbed exchange map
rows = [dict(rw) for rw in fact.exchange.rows]
rows[3][3] = rows[3].get(3, ZERO) + ONE  # bump one entry
pert = LinMap(fact.exchange.domain, fact.exchange.codomain, rows)
fact_bad = AlgebraFactorisation(alg_a, alg_b, pert)
rep = check_factorisation(fact_bad)
print("perturbed factorisation ok?", rep.ok, [c.law for c in rep.failures])
x_bad = flip(alg_a.space, alg_b.space).then(pert)
w_a = w_from_algebra(alg_a, r, s)
print("[W,X,X] zero for perturbed exchange?", yb_commutator(w_a, x_bad, x_bad).is_zero())

# hecke vs plain glue cross-check at r=t=q, s=p=1/q
ent = get_example("ex28.entwining").payload
sysq = wxz_from_entwining(ent, q, q**-1, q**-1, q)
g = glue(sysq)
h = hecke_glue(ent, q)
a_sp, c_sp = ent.algebra.space, ent.coalgebra.space
corr = (q - q**-1) * identity(ProductSpace.of(c_sp, a_sp))
same_others = (
    h.restrict("ll", "ll") == g.restrict("ll", "ll")
    and h.restrict("rr", "rr") == g.restrict("rr", "rr")
    and h.restrict("lr", "rl") == g.restrict("lr", "rl")
    and h.restrict("rl", "lr") == g.restrict("rl", "lr")
)
print("hecke = glue + correction:", same_others, h.restrict("rl", "rl") == g.restrict("rl", "rl") + corr)

# kZ2 algebra operator expansion oracle: R(g (x) g) = s 1(x)1 + r 1(x)1? no:
# R(a(x)b) = s ab(x)1 + r 1(x)ab - s a(x)b with g*g = 1:
# R(g(x)g) = s 1(x)1 + r 1(x)1 - s g(x)g
alg2 = get_example("group_bialgebra").payload.algebra
R2 = algebra_operator(alg2, r, s)
row = R2.rows[3]  # (g,g)
print("R(g,g) row:", {k: str(v) for k, v in sorted(row.items())})

# commutator bilinearity
import random
rng = random.Random(7)
V = Space("V", ("a", "b"))
Vp = Space("U", ("u", "v"))
Vpp = Space("W", ("w", "z"))
def rand_map(d, c):
    pool = [ZERO, ZERO, ONE, -ONE, s, q]
    d, c = ProductSpace.of(*d), ProductSpace.of(*c)
    rows = [{j: rng.choice(pool) for j in range(c.dim)} for _ in range(d.dim)]
    return LinMap(d, c, rows)
R1 = rand_map((V, Vp), (V, Vp)); R1b = rand_map((V, Vp), (V, Vp))
S1 = rand_map((V, Vpp), (V, Vpp)); T1 = rand_map((Vp, Vpp), (Vp, Vpp))
lhs = yb_commutator(R1 + R1b, S1, T1)
rhs = yb_commutator(R1, S1, T1) + yb_commutator(R1b, S1, T1)
print("commutator additive in first arg:", lhs == rhs)
lhs3 = yb_commutator(R1, S1, T1 + T1)
print("commutator additive in third arg:", lhs3 == yb_commutator(R1, S1, T1).scaled(2))

# trivial doi-koppinen: B = k over the ex28 pair -> flip
from ybsys.structures import Bialgebra, ComoduleAlgebra, ModuleCoalgebra
from ybsys.entwining import doi_koppinen_entwining
coa_c = get_example("ex28.coalgebra").payload
bk = Bialgebra(alg_k, Coalgebra.build(k_space, {(0,0,0): 1}, ["1"]))
rho = identity(alg_a.space).tensor(bk.algebra.unit_map())
act = identity(coa_c.space).tensor(bk.coalgebra.counit_map())
dk = doi_koppinen_entwining(ComoduleAlgebra(alg_a, bk, rho), ModuleCoalgebra(coa_c, bk, act))
print("trivial DK is the flip:", dk.entwining_map == flip(coa_c.space, alg_a.space))

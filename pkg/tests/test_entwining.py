import random

import pytest

from ybsys.entwining import (
    AlgebraFactorisation,
    EntwiningStructure,
    check_entwining,
    check_factorisation,
    doi_koppinen_entwining,
    dualize_entwining,
    entwining_from_wxz,
    invert_entwining,
    wxz_from_entwining,
    wxz_from_factorisation,
)
from ybsys.report import CheckFailedError
from ybsys.scalar import ONE, ZERO, parse, variable
from ybsys.structures import (
    Algebra,
    Bialgebra,
    Coalgebra,
    ComoduleAlgebra,
    ModuleCoalgebra,
)
from ybsys.tensor import (
    LinMap,
    ProductSpace,
    SingularMapError,
    Space,
    SpaceMismatchError,
    flip,
    identity,
)
from ybsys.yang_baxter import WXZSystem, check_wxz, w_from_algebra, yb_commutator, z_from_coalgebra
from ybsys.zoo import get_example

r, s, p, t, q = (variable(n) for n in "rsptq")

ZOO_ENTWININGS = [
    ("flip", {}),
    ("ex28.entwining", {}),
    ("ex27.truncated", {"N": 1}),
    ("ex27.truncated", {"N": 2}),
    ("ex27.truncated", {"N": 3}),
    ("doi_koppinen", {"n": 2}),
    ("doi_koppinen", {"n": 3}),
]


def perturb_map(m, i, j, delta):
    rows = [dict(row) for row in m.rows]
    rows[i][j] = rows[i].get(j, ZERO) + delta
    return LinMap(m.domain, m.codomain, rows)


def test_flip_entwines_any_pair():
    alg = get_example("ex28.algebra").payload
    coa = get_example("ex27.truncated", N=2).payload.coalgebra
    ent = EntwiningStructure(alg, coa, flip(coa.space, alg.space))
    report = check_entwining(ent)
    assert report.ok
    assert len(report.checks) == 4


def test_two_dim_entwining_passes_symbolically():
    assert check_entwining(get_example("ex28.entwining").payload).ok


def test_sign_flip_breaks_coproduct_compatibility():
    ent = get_example("ex28.entwining").payload
    # flip the sign of the x(x)f image of f(x)x: rows are indexed by
    # (e,1),(e,x),(f,1),(f,x) and columns by (1,e),(1,f),(x,e),(x,f)
    flipped = perturb_map(ent.entwining_map, 3, 3, 2 * ONE)
    assert flipped.entry(3, 3) == ONE
    report = check_entwining(
        EntwiningStructure(ent.algebra, ent.coalgebra, flipped)
    )
    assert not report.ok
    assert not report.check("coproduct-compatibility").ok
    assert report.check("coproduct-compatibility").witnesses()


def test_shape_validation():
    ent = get_example("ex28.entwining").payload
    with pytest.raises(SpaceMismatchError):
        EntwiningStructure(ent.algebra, ent.coalgebra, identity(ent.entwining_map.codomain))


@pytest.mark.parametrize("name,params", ZOO_ENTWININGS)
def test_forward_direction_builds_valid_systems(name, params):
    ent = get_example(name, params).payload
    system = wxz_from_entwining(ent, r, s, p, t)
    assert check_wxz(system).ok


def test_forward_x_block_is_case56():
    ent = get_example("ex28.entwining").payload
    system = wxz_from_entwining(ent, 1, s, s, 1)
    assert system.x == get_example("ex28.X56").payload
    assert system.w == get_example("ex28.W").payload
    assert system.z == get_example("ex28.Z").payload


def test_forward_rejects_non_entwinings():
    ent = get_example("ex28.entwining").payload
    broken = EntwiningStructure(
        ent.algebra, ent.coalgebra, perturb_map(ent.entwining_map, 3, 3, 2 * ONE)
    )
    with pytest.raises(CheckFailedError):
        wxz_from_entwining(broken, r, s, p, t)


@pytest.mark.parametrize("name,params", ZOO_ENTWININGS)
def test_backward_direction_recovers_the_map(name, params):
    ent = get_example(name, params).payload
    system = wxz_from_entwining(ent, r, s, p, t)
    recovered = entwining_from_wxz(system, ent.algebra, ent.coalgebra)
    assert recovered.entwining_map == ent.entwining_map
    assert check_entwining(recovered).ok


def test_case59_rejected_by_the_unit_side_condition():
    entry = get_example("ex28.entwining").payload
    x59 = get_example("ex28.X59").payload
    system = WXZSystem(
        w_from_algebra(entry.algebra, 1, s),
        x59,
        z_from_coalgebra(entry.coalgebra, s, 1),
    )
    with pytest.raises(CheckFailedError) as err:
        entwining_from_wxz(system, entry.algebra, entry.coalgebra)
    report = err.value.report
    assert not report.check("unit-side-condition").ok
    row, col, value = report.check("unit-side-condition").witnesses()[0]
    assert row == ("e",)


def test_case59_at_s_one_recovers_the_entwining_map():
    entry = get_example("ex28.entwining", s="1").payload
    x59 = get_example("ex28.X59", s="1").payload
    system = WXZSystem(
        w_from_algebra(entry.algebra, 1, parse("1")),
        x59,
        z_from_coalgebra(entry.coalgebra, parse("1"), 1),
    )
    recovered = entwining_from_wxz(system, entry.algebra, entry.coalgebra)
    assert recovered.entwining_map == entry.entwining_map


def test_doi_koppinen_group_entwining_values():
    ent = get_example("doi_koppinen", n=2).payload
    # psi(g_i (x) g_j) = g_j (x) g_{i+j}
    psi = ent.entwining_map
    n = 2
    for i in range(n):
        for j in range(n):
            row = i * n + j
            expected_col = j * n + (i + j) % n
            assert psi.entry(row, expected_col) == ONE
            assert len(psi.rows[row]) == 1


def test_doi_koppinen_trivial_bialgebra_is_flip():
    k_space = Space("k1", ("u",))
    trivial = Bialgebra(
        Algebra.build(k_space, {(0, 0, 0): 1}, ["1"]),
        Coalgebra.build(k_space, {(0, 0, 0): 1}, ["1"]),
    )
    alg = get_example("ex28.algebra").payload
    coa = get_example("ex28.coalgebra").payload
    comodule = ComoduleAlgebra(
        alg, trivial, identity(alg.space).tensor(trivial.algebra.unit_map())
    )
    module = ModuleCoalgebra(
        coa, trivial, identity(coa.space).tensor(trivial.coalgebra.counit_map())
    )
    ent = doi_koppinen_entwining(comodule, module)
    assert ent.entwining_map == flip(coa.space, alg.space)
    assert check_entwining(ent).ok


def test_doi_koppinen_rejects_mismatched_bialgebras():
    b2 = get_example("group_bialgebra", n=2).payload
    b3 = get_example("group_bialgebra", n=3).payload
    comodule = ComoduleAlgebra(b2.algebra, b2, b2.coalgebra.comult_map())
    module = ModuleCoalgebra(b3.coalgebra, b3, b3.algebra.mult_map())
    with pytest.raises(SpaceMismatchError):
        doi_koppinen_entwining(comodule, module)


def test_doi_koppinen_rejects_failed_prerequisites():
    b = get_example("group_bialgebra", n=2).payload
    zero = LinMap.zero(b.space, ProductSpace.of(b.space, b.space))
    comodule = ComoduleAlgebra(b.algebra, b, zero)
    module = ModuleCoalgebra(b.coalgebra, b, b.algebra.mult_map())
    with pytest.raises(CheckFailedError):
        doi_koppinen_entwining(comodule, module)


def test_invert_entwining():
    ent = get_example("ex28.entwining").payload
    inv = invert_entwining(ent)
    ident_ca = identity(ent.entwining_map.domain)
    ident_ac = identity(ent.entwining_map.codomain)
    assert ent.entwining_map.then(inv) == ident_ca
    assert inv.then(ent.entwining_map) == ident_ac

    flip_ent = get_example("flip").payload
    tau_back = flip(flip_ent.algebra.space, flip_ent.coalgebra.space)
    assert invert_entwining(flip_ent) == tau_back


def test_invert_entwining_singular():
    ent = get_example("ex28.entwining").payload
    degenerate = LinMap.zero(ent.entwining_map.domain, ent.entwining_map.codomain)
    rows = [dict(row) for row in degenerate.rows]
    rows[0][0] = ONE
    rows[1][0] = ONE
    bad = EntwiningStructure(
        ent.algebra,
        ent.coalgebra,
        LinMap(degenerate.domain, degenerate.codomain, rows),
    )
    with pytest.raises(SingularMapError):
        invert_entwining(bad)


@pytest.mark.parametrize("name,params", ZOO_ENTWININGS)
def test_dualization_preserves_validity(name, params):
    ent = get_example(name, params).payload
    dual = dualize_entwining(ent)
    assert check_entwining(dual).ok


def test_dualize_flip_is_flip_on_duals():
    ent = get_example("flip").payload
    dual = dualize_entwining(ent)
    assert dual.entwining_map == flip(dual.coalgebra.space, dual.algebra.space)


def test_dualize_twice_round_trips():
    ent = get_example("ex28.entwining").payload
    twice = dualize_entwining(dualize_entwining(ent))
    assert twice == ent


def test_dualization_preserves_failures():
    rng = random.Random(31)
    ent = get_example("ex28.entwining").payload
    deltas = [ONE, -ONE, variable("q"), parse("2")]
    for _ in range(12):
        i = rng.randrange(4)
        j = rng.randrange(4)
        candidate = EntwiningStructure(
            ent.algebra,
            ent.coalgebra,
            perturb_map(ent.entwining_map, i, j, rng.choice(deltas)),
        )
        assert (
            check_entwining(candidate).ok
            == check_entwining(dualize_entwining(candidate)).ok
        )


def test_flip_factorisation_and_its_system():
    alg_a = get_example("ex28.algebra").payload
    alg_b = get_example("group_bialgebra", n=2).payload.algebra
    fact = AlgebraFactorisation(alg_a, alg_b, flip(alg_b.space, alg_a.space))
    report = check_factorisation(fact)
    assert report.ok
    assert len(report.checks) == 4
    system = wxz_from_factorisation(fact, r, s, parse("r+1"), parse("s+1"))
    assert check_wxz(system).ok


def test_one_dimensional_second_factor():
    alg_a = get_example("ex28.algebra").payload
    k_space = Space("k1", ("u",))
    alg_k = Algebra.build(k_space, {(0, 0, 0): 1}, ["1"])
    fact = AlgebraFactorisation(alg_a, alg_k, flip(k_space, alg_a.space))
    assert check_factorisation(fact).ok
    assert check_wxz(wxz_from_factorisation(fact, r, s, p, t)).ok


def test_perturbed_exchange_breaks_the_mixed_commutator():
    alg_a = get_example("ex28.algebra").payload
    alg_b = get_example("group_bialgebra", n=2).payload.algebra
    exchange = perturb_map(flip(alg_b.space, alg_a.space), 3, 3, ONE)
    fact = AlgebraFactorisation(alg_a, alg_b, exchange)
    assert not check_factorisation(fact).ok
    with pytest.raises(CheckFailedError):
        wxz_from_factorisation(fact, r, s, p, t)
    x = flip(alg_a.space, alg_b.space).then(exchange)
    w = w_from_algebra(alg_a, r, s)
    assert not yb_commutator(w, x, x).is_zero()

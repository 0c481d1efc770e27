import pytest

from ybsys.entwining import EntwiningStructure, invert_entwining, wxz_from_entwining
from ybsys.gluing import (
    check_algebra_quadratic,
    check_coalgebra_quadratic,
    check_hecke,
    glue,
    hecke_glue,
)
from ybsys.report import CheckFailedError
from ybsys.scalar import ONE, ZERO, parse, variable
from ybsys.structures import Algebra
from ybsys.tensor import (
    LinMap,
    ProductSpace,
    SingularMapError,
    Space,
    flip,
    identity,
)
from ybsys.yang_baxter import (
    WXZSystem,
    algebra_operator,
    check_braid,
    coalgebra_operator,
)
from ybsys.zoo import get_example

r, s, p, t, q = (variable(n) for n in "rsptq")


def test_glue_case56_system_is_a_yang_baxter_operator():
    system = get_example("ex28.system").payload
    glued = glue(system)
    assert glued.operator.domain.dim == 16
    assert check_braid(glued.operator).ok


def test_glued_blocks_read_back_the_inputs():
    system = get_example("ex28.system").payload
    glued = glue(system)
    v, v1 = system.left_space, system.right_space
    assert glued.restrict("ll", "ll") == flip(v, v).then(system.w)
    assert glued.restrict("rr", "rr") == flip(v1, v1).then(system.z)
    u = flip(v1, v).then(system.x)
    assert glued.restrict("rl", "lr") == u
    assert glued.restrict("lr", "rl") == u.invert()
    for rows, cols in (("ll", "ll"), ("rr", "rr"), ("rl", "lr"), ("lr", "rl")):
        assert glued.sector_is_exact(rows, cols)


def test_glue_with_one_group_like_right_space():
    alg = get_example("ex28.algebra").payload
    point = get_example("point.coalgebra").payload
    ent = EntwiningStructure(alg, point, flip(point.space, alg.space))
    system = wxz_from_entwining(ent, r, s, p, t)
    glued = glue(system)
    assert check_braid(glued.operator).ok


def test_glue_validates_the_system():
    system = get_example("ex28.system").payload
    rows = [dict(row) for row in system.x.rows]
    rows[0][0] = rows[0].get(0, ZERO) + ONE
    broken = WXZSystem(
        system.w, LinMap(system.x.domain, system.x.codomain, rows), system.z
    )
    with pytest.raises(CheckFailedError):
        glue(broken)
    glued = glue(broken, validate=False)
    assert not check_braid(glued.operator).ok


def test_glue_rejects_singular_x():
    system = get_example("ex28.system").payload
    rows = [dict(row) for row in system.x.rows]
    rows[3] = {}
    broken = WXZSystem(
        system.w, LinMap(system.x.domain, system.x.codomain, rows), system.z
    )
    with pytest.raises((SingularMapError, CheckFailedError)):
        glue(broken)
    with pytest.raises(SingularMapError):
        glue(broken, validate=False)


def test_hecke_glue_on_flip_entwining():
    glued = hecke_glue(get_example("flip").payload, q)
    report = check_hecke(glued.operator, q)
    assert report.ok
    assert [c.law for c in report.checks] == ["braid", "hecke-quadratic"]


def test_hecke_glue_on_the_two_dim_entwining():
    ent = get_example("ex28.entwining").payload
    glued = hecke_glue(ent, q)
    assert glued.operator.domain.dim == 16
    assert check_hecke(glued.operator, q).ok


def test_hecke_glue_at_parameter_one_has_plain_mixed_blocks():
    ent = get_example("ex28.entwining").payload
    glued = hecke_glue(ent, 1)
    assert glued.restrict("rl", "lr") == ent.entwining_map
    assert glued.restrict("lr", "rl") == invert_entwining(ent)
    assert glued.sector_is_exact("rl", "lr")
    assert glued.sector_is_exact("lr", "rl")


def test_hecke_glue_matches_plain_glue_up_to_the_correction():
    ent = get_example("ex28.entwining").payload
    plain = glue(wxz_from_entwining(ent, q, q ** -1, q ** -1, q))
    hecke = hecke_glue(ent, q)
    a, c = ent.algebra.space, ent.coalgebra.space
    correction = (q - q ** -1) * identity(ProductSpace.of(c, a))
    assert hecke.restrict("ll", "ll") == plain.restrict("ll", "ll")
    assert hecke.restrict("rr", "rr") == plain.restrict("rr", "rr")
    assert hecke.restrict("lr", "rl") == plain.restrict("lr", "rl")
    assert hecke.restrict("rl", "lr") == plain.restrict("rl", "lr")
    assert hecke.restrict("rl", "rl") == plain.restrict("rl", "rl") + correction


def test_hecke_glue_rejects_zero_parameter():
    with pytest.raises(ZeroDivisionError):
        hecke_glue(get_example("flip").payload, ZERO)


def test_hecke_glue_rejects_singular_entwining_map():
    ent = get_example("ex28.entwining").payload
    rows = [dict(row) for row in ent.entwining_map.rows]
    rows[3] = {}
    broken = EntwiningStructure(
        ent.algebra,
        ent.coalgebra,
        LinMap(ent.entwining_map.domain, ent.entwining_map.codomain, rows),
    )
    with pytest.raises((SingularMapError, CheckFailedError)):
        hecke_glue(broken, q)


def test_check_hecke_scalar_multiple_of_identity():
    v = Space("V", ("a", "b"))
    op = q * identity(ProductSpace.of(v, v))
    assert check_hecke(op, q).ok


def test_check_hecke_on_the_algebra_operator():
    for name, params in (("ex28.algebra", {}), ("group_bialgebra", {"n": 2})):
        payload = get_example(name, params).payload
        alg = payload.algebra if hasattr(payload, "algebra") else payload
        op = algebra_operator(alg, q, q ** -1)
        assert check_hecke(op, q).ok


def test_check_hecke_fails_for_generic_parameters():
    alg = get_example("ex28.algebra").payload
    op = algebra_operator(alg, r, s)
    report = check_hecke(op, q)
    assert not report.ok
    assert report.check("hecke-quadratic").witnesses()


def test_check_hecke_rejects_zero_parameter():
    v = Space("V", ("a", "b"))
    with pytest.raises(ZeroDivisionError):
        check_hecke(identity(ProductSpace.of(v, v)), ZERO)


def test_quadratic_annihilation_for_zoo_algebras():
    for name, params in (
        ("ex28.algebra", {}),
        ("group_bialgebra", {"n": 2}),
        ("group_bialgebra", {"n": 3}),
    ):
        payload = get_example(name, params).payload
        alg = payload.algebra if hasattr(payload, "algebra") else payload
        assert check_algebra_quadratic(alg, r, s).ok


def test_quadratic_annihilation_for_zoo_coalgebras():
    for name in ("ex28.coalgebra", "point.coalgebra"):
        assert check_coalgebra_quadratic(get_example(name).payload, p, t).ok
    coa = get_example("ex27.truncated", N=2).payload.coalgebra
    assert check_coalgebra_quadratic(coa, p, t).ok


def test_one_dimensional_algebra_operator_is_scalar():
    pt = Space("k1", ("u",))
    alg = Algebra.build(pt, {(0, 0, 0): 1}, ["1"])
    op = algebra_operator(alg, r, s)
    ident = identity(op.domain)
    assert (op - r * ident).is_zero()
    assert check_algebra_quadratic(alg, r, s).ok

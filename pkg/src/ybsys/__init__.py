"""Exact-arithmetic workbench for Yang-Baxter operators, WXZ-systems
and entwining structures, all represented by structure constants over
the rational-function field Q(p, q, r, s, t).
"""

from .scalar import (
    ONE,
    ZERO,
    MultiPoly,
    ParseError,
    ScalarExpr,
    as_scalar,
    const,
    parse,
    variable,
)
from .tensor import (
    LinMap,
    ProductSpace,
    SingularMapError,
    Space,
    SpaceMismatchError,
    direct_sum,
    flip,
    identity,
    lift12,
    lift13,
    lift23,
)
from .report import CheckFailedError, CheckReport, LawCheck
from .structures import (
    Algebra,
    Bialgebra,
    Coalgebra,
    ComoduleAlgebra,
    ModuleCoalgebra,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_comodule_algebra,
    check_module_coalgebra,
    dualize_algebra,
    dualize_coalgebra,
)
from .yang_baxter import (
    WXZSystem,
    algebra_operator,
    algebra_operator_inverse,
    check_braid,
    check_qybe,
    check_wxz,
    coalgebra_operator,
    w_from_algebra,
    yb_commutator,
    z_from_coalgebra,
)
from .entwining import (
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
from .gluing import (
    GluedOperator,
    check_algebra_quadratic,
    check_coalgebra_quadratic,
    check_hecke,
    glue,
    hecke_glue,
)
from .zoo import ExampleEntry, get_example, list_examples

__version__ = "0.1.0"

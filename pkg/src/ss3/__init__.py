"""Supersingular elliptic curves over GF(3^d): classification and counting.

Classifies canonical-form curves y^2 = x^3 + a4*x + a6 (a4 != 0) into
explicit isomorphism classes and computes their group orders in closed
form, with brute-force character-sum oracles for verification.
"""

from .classify import (
    ClassEntry,
    CurveClass,
    CurveType,
    IsomorphismWitness,
    canonicalize,
    class_representative,
    curve_type,
    isomorphic,
    list_classes,
    quadratic_twist,
)
from .count import (
    CountResult,
    count_general,
    count_supersingular,
    count_trivial,
    count_type_I,
    count_type_II,
    s_brute,
    s_closed,
)
from .curve import (
    GeneralCurve,
    Point,
    ReductionResult,
    ShortCurve,
    add,
    affine_points,
    count_points_by_enumeration,
    double,
    is_supersingular,
    naive_count,
    negate,
    parse_general_curve,
    parse_short_curve,
    random_point,
    random_supersingular_curve,
    reduce_curve,
    scalar_mul,
)
from .errors import (
    ContextMismatch,
    DegreeOutOfRange,
    DivisionByZero,
    DParityError,
    FactorizationFailure,
    InvalidCurve,
    ModulusReducible,
    NotANonSquare,
    NotSupersingularError,
    OracleTooLarge,
    ParseError,
    PointNotOnCurve,
    SingularCurve,
    SS3Error,
    ZeroArgument,
)
from .field import (
    FieldContext,
    FieldElement,
    chi,
    context_to_json,
    decode_element,
    encode_element,
    fourth_roots,
    is_fourth_power,
    is_irreducible,
    make_context,
    oracle_cap,
    smallest_nonsquare,
    solve_linearized,
    sqrt,
    trace,
)

__version__ = "0.1.0"

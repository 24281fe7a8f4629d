"""Exact Seiberg-Witten wall-crossing data for 4-manifolds with b+ = 1."""

__version__ = "0.1.0"

from .errors import (
    CharacteristicError,
    ConeError,
    ContractError,
    DimensionError,
    InputError,
    IntegralityError,
    LatticeInconsistencyError,
    ParityError,
    PreconditionError,
    SWCrossError,
    ValidationError,
)
from .exterior import ExtElement, Orientation1, divided_power, pair_top, truncated_exp, wedge
from .manifold import CharClass, FourManifoldData, cij_tensor, make_char_class, validate
from .wallcrossing import (
    SWForm,
    UcClass,
    build_uc,
    sigma_eval,
    sigma_eval_coefficient_formula,
    sigma_table,
    verify_wall_crossing,
)
from .segre import ChernInput, chern_character_expansion, dirac_chern_classes, segre_polynomials
from .chambers import (
    Chamber,
    ChamberQuery,
    Component,
    PeriodDirection,
    c_good_at,
    c_good_sufficient,
    classify,
    component_of,
    zero_twist_chamber_constancy,
)
from .kahler import (
    DivisorClass,
    RationalSurface,
    dou_nonempty,
    enumerate_blowup_classes,
    p2_table,
    sw_values,
)

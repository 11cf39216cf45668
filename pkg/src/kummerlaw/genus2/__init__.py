from .curve import AffinePointG2, CurveG2, random_curve
from .divisor import (
    MumfordDivisor,
    NEUTRAL,
    cantor_add,
    cantor_neg,
    cantor_sub,
    divisor_distance,
    divisor_from_points,
    random_divisor,
    support_points,
    validate_divisor,
)
from .kowalevski import FlowResult, kowalevski_flow
from .kummer import (
    DivisorClass,
    KummerProduct,
    UNIT_KUMMER,
    gamma3,
    kummer_embed,
    kummer_lift,
    kummer_mul,
    kummer_product_points,
    pairing_matrix,
    pairing_product,
    phi_psi,
    phi_psi_corrupted,
    semistable_mul,
    wp_sum_difference,
    z12,
)
from .wp import (
    Dual,
    F_sym,
    F_sym_printed,
    WpJet,
    direction_field,
    du_derivative,
    jacobi_invert,
    psi_asym,
    wp_from_divisor,
)

__all__ = [name for name in dir() if not name.startswith("_")]

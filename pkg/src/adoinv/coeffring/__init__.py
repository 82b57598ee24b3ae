from .cyclotomic import CycField, CycScalar, LevelMismatch, cyclotomic_polynomial, field
from .scalar import (
    ScalarExt,
    TExponentMismatch,
    quantum_factorial,
    quantum_integer,
    quantum_integer_lambda,
    set_gcd_threshold,
)
from .serialize import scalar_from_json, scalar_to_json
from .specialize import DegenerateSpecialization, SpecializationMap, specialize, specialize_xd


def cyc_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    return a * b


__all__ = [
    "CycField",
    "CycScalar",
    "DegenerateSpecialization",
    "LevelMismatch",
    "ScalarExt",
    "SpecializationMap",
    "TExponentMismatch",
    "cyc_mul",
    "cyclotomic_polynomial",
    "field",
    "quantum_factorial",
    "quantum_integer",
    "quantum_integer_lambda",
    "scalar_from_json",
    "scalar_to_json",
    "set_gcd_threshold",
    "specialize",
    "specialize_xd",
]

from linpi.constraints.substitution import GroundSubstitution
from linpi.typecheck.checker import check_expression, check_process, verify_solution
from linpi.typecheck.envfile import load_env

__all__ = [
    "GroundSubstitution",
    "check_expression",
    "check_process",
    "load_env",
    "verify_solution",
]

from linpi.constraints.exprs import (
    ChanT,
    Constraint,
    ConstraintSet,
    IntT,
    ProdT,
    SumT,
    TCoh,
    TComb,
    TEq,
    TVar,
    TypeExpr,
    UEq,
    UseExpr,
    is_proper,
    render_constraint,
    render_type_expr,
    render_use_expr,
    un,
    var_key,
)
from linpi.constraints.generate import (
    SynthEnv,
    VarSupply,
    combine_envs,
    gen_expression,
    gen_process,
    merge_envs,
)
from linpi.constraints.substitution import GroundSubstitution

__all__ = [
    "ChanT",
    "Constraint",
    "ConstraintSet",
    "GroundSubstitution",
    "IntT",
    "ProdT",
    "SumT",
    "SynthEnv",
    "TCoh",
    "TComb",
    "TEq",
    "TVar",
    "TypeExpr",
    "UEq",
    "UseExpr",
    "VarSupply",
    "combine_envs",
    "gen_expression",
    "gen_process",
    "is_proper",
    "merge_envs",
    "render_constraint",
    "render_type_expr",
    "render_use_expr",
    "un",
    "var_key",
]

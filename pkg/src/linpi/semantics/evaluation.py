from linpi.errors import StuckExpression
from linpi.syntax.ast import Add, Expression, Fst, Inl, Inr, IntLit, NameRef, Pair, Snd


def eval_expression(e: Expression) -> Expression:
    """Big-step evaluation of a closed expression to a value.

    Raises:
        StuckExpression: On a projection of a non-pair, a sum of non-integers
            or a variable.
    """
    if isinstance(e, IntLit):
        return e
    if isinstance(e, NameRef):
        if not e.id.is_channel:
            raise StuckExpression(f"unbound variable {e.id.text}")
        return e
    if isinstance(e, Pair):
        return Pair(eval_expression(e.fst), eval_expression(e.snd))
    if isinstance(e, (Inl, Inr)):
        return type(e)(eval_expression(e.arg))
    if isinstance(e, (Fst, Snd)):
        v = eval_expression(e.arg)
        if not isinstance(v, Pair):
            raise StuckExpression(f"projection of a non-pair {v!r}")
        return v.fst if isinstance(e, Fst) else v.snd
    if isinstance(e, Add):
        lhs, rhs = eval_expression(e.lhs), eval_expression(e.rhs)
        if not isinstance(lhs, IntLit) or not isinstance(rhs, IntLit):
            raise StuckExpression(f"addition of non-integers {lhs!r} and {rhs!r}")
        return IntLit(lhs.value + rhs.value)
    raise TypeError(f"not an expression: {e!r}")

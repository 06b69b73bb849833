from linpi.semantics.evaluation import eval_expression
from linpi.semantics.labels import TAU, Comm, Label, Tau
from linpi.semantics.reduction import Redex, close_process, run, step

__all__ = [
    "TAU",
    "Comm",
    "Label",
    "Redex",
    "Tau",
    "close_process",
    "eval_expression",
    "run",
    "step",
]

"""
linpi - Type reconstruction for the linear pi-calculus

Infers, for a process with pairs, sums and replicated servers, the most
precise environment of linear channel types: which channels are used
exactly once for input or output, and which are unlimited.

Example:
    >>> from linpi import infer, render_env
    >>> inference = infer("*succ?(p). let (x, y) = p in y!(x+1)")
    >>> render_env(inference.store, inference.env)
    ['succ : [int * [int]{0,1}]{w,0}']
"""

# Configuration
from linpi.config.settings import ConfigError, Settings, load_settings

# Constraints
from linpi.constraints import ConstraintSet, GroundSubstitution, VarSupply, gen_process

# Logging
from linpi.core import DateFormat, LogFormat, get_rich_logger

# Errors
from linpi.errors import (
    DomainMismatch,
    IllFormedSystem,
    InsufficientUse,
    LinpiError,
    MissingChannel,
    NoSolution,
    NotAValue,
    NotCovering,
    NotSessionShaped,
    ParseError,
    StuckExpression,
    UnboundName,
    Unsatisfiable,
)

# Semantics
from linpi.semantics import TAU, Comm, Label, Redex, close_process, eval_expression, run, step

# Sessions
from linpi.sessions import SessionStore

# Shortcuts
from linpi.shortcuts import (
    Inference,
    check,
    describe_sessions,
    generate_constraints,
    infer,
    run_program,
)

# Solver
from linpi.solver import SolverTrace, run_solver, solve

# Syntax
from linpi.syntax import Name, Process, alpha_equal, free_names, parse_process, render_process

# Checking
from linpi.typecheck import check_expression, check_process, load_env, verify_solution

# Types
from linpi.types import TypeEnv, TypeId, TypeStore, Use, parse_type, render_env

# Utilities
from linpi.utils import log_context, log_errors, log_execution_time

__version__ = "0.1.0"

__all__ = [
    "TAU",
    "Comm",
    "ConfigError",
    "ConstraintSet",
    "DateFormat",
    "DomainMismatch",
    "GroundSubstitution",
    "IllFormedSystem",
    "Inference",
    "InsufficientUse",
    "Label",
    "LinpiError",
    "LogFormat",
    "MissingChannel",
    "Name",
    "NoSolution",
    "NotAValue",
    "NotCovering",
    "NotSessionShaped",
    "ParseError",
    "Process",
    "Redex",
    "SessionStore",
    "Settings",
    "SolverTrace",
    "StuckExpression",
    "TypeEnv",
    "TypeId",
    "TypeStore",
    "UnboundName",
    "Unsatisfiable",
    "Use",
    "VarSupply",
    "__version__",
    "alpha_equal",
    "check",
    "check_expression",
    "check_process",
    "close_process",
    "describe_sessions",
    "eval_expression",
    "free_names",
    "gen_process",
    "generate_constraints",
    "get_rich_logger",
    "infer",
    "load_env",
    "load_settings",
    "log_context",
    "log_errors",
    "log_execution_time",
    "parse_process",
    "parse_type",
    "render_env",
    "render_process",
    "run",
    "run_program",
    "run_solver",
    "solve",
    "step",
    "verify_solution",
]

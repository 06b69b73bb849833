"""
One-call pipelines from source text to results.

These are the functions behind the ``linpi`` subcommands; they take the
solver and interpreter tunables from a :class:`Settings` instance, so a
library user gets the same behaviour as the command line.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Optional, Union

from linpi.config.settings import Settings
from linpi.constraints.exprs import ConstraintSet
from linpi.constraints.generate import SynthEnv, VarSupply, gen_process
from linpi.errors import NotSessionShaped
from linpi.semantics.labels import Label
from linpi.semantics.reduction import run
from linpi.sessions.session import SessionStore
from linpi.solver.synthesis import SolverTrace, run_solver
from linpi.syntax.ast import Name, Process
from linpi.syntax.parser import parse_process
from linpi.typecheck.checker import check_process
from linpi.typecheck.envfile import load_env
from linpi.types.env import TypeEnv
from linpi.types.store import TypeId, TypeStore
from linpi.utils.decorators import log_execution_time

logger = logging.getLogger(__name__)

Source = Union[str, Process]


def _process(source: Source) -> Process:
    return parse_process(source) if isinstance(source, str) else source


@dataclass
class Inference:
    """Everything produced while reconstructing the environment of a process."""

    process: Process
    store: TypeStore
    delta: SynthEnv
    constraints: ConstraintSet
    trace: SolverTrace
    env: TypeEnv


def generate_constraints(
    source: Source, *, settings: Optional[Settings] = None
) -> tuple[SynthEnv, ConstraintSet]:
    """Synthesized environment and constraint set of a process.

    Raises:
        ParseError: If ``source`` is text that does not parse.
    """
    settings = settings or Settings()
    return gen_process(_process(source), VarSupply(), settings.unbalanced_new)


@log_execution_time(logger, level=logging.INFO, label="inference")
def infer(
    source: Source,
    *,
    settings: Optional[Settings] = None,
    store: Optional[TypeStore] = None,
) -> Inference:
    """Reconstruct the most precise typing environment of a process.

    Args:
        source: Process text or an already parsed process.
        settings: Solver tunables; defaults to ``Settings()``.
        store: Store receiving the inferred types; a fresh one by default.

    Returns:
        Inference: The environment together with every intermediate result.

    Raises:
        ParseError: If ``source`` is text that does not parse.
        Unsatisfiable: If the process has a constructor clash.
        NoSolution: If the use equations cannot be solved.

    Example:
        >>> inference = infer("new a in (a!3 | a?(x).idle)")
        >>> inference.env
        {}
    """
    settings = settings or Settings()
    store = store if store is not None else TypeStore()
    p = _process(source)
    supply = VarSupply()
    delta, c = gen_process(p, supply, settings.unbalanced_new)
    trace = run_solver(
        c,
        store,
        supply,
        max_search_vars=settings.max_search_vars,
        omega_fallback=settings.omega_fallback,
    )
    env = trace.solution.apply_env(delta, store)
    return Inference(p, store, delta, c, trace, env)


def check(
    source: Source,
    env: Union[str, Mapping[Name, TypeId]],
    *,
    settings: Optional[Settings] = None,
    store: Optional[TypeStore] = None,
) -> bool:
    """Decide whether a process is well typed in an environment.

    ``env`` is either the text of an environment file or a mapping whose
    types live in ``store``.

    Raises:
        ParseError: If the process or the environment text does not parse.
        UnboundName: If a free name of the process has no type.
    """
    settings = settings or Settings()
    store = store if store is not None else TypeStore()
    g = load_env(env, store) if isinstance(env, str) else env
    return check_process(g, _process(source), store, unbalanced_new=settings.unbalanced_new)


def run_program(
    source: Source, *, settings: Optional[Settings] = None
) -> list[tuple[Label, Process]]:
    """Reduction trace of a process under the seeded scheduler."""
    settings = settings or Settings()
    return run(
        _process(source), settings.max_steps, settings.seed, fuel_repl=settings.fuel_repl
    )


def describe_sessions(env: Mapping[Name, TypeId], store: TypeStore) -> dict[Name, Optional[str]]:
    """The protocol of every binding, or None where the type is not session shaped."""
    sessions = SessionStore(store)
    described: dict[Name, Optional[str]] = {}
    for u in sorted(env, key=lambda u: u.text):
        try:
            described[u] = sessions.render_session(sessions.decode(env[u]))
        except NotSessionShaped as e:
            logger.debug("%s has no protocol: %s", u.text, e)
            described[u] = None
    return described

# Logging
DEFAULT_LEVEL: str = "WARNING"
DEFAULT_LOG_FORMAT: str = "DEFAULT"
DEFAULT_DATE_FORMAT: str = "DEFAULT"
DEFAULT_RICH_TRACEBACKS: bool = True
DEFAULT_TRACEBACK_SUPPRESS: list[str] = ["lark", "networkx"]

# Solver
DEFAULT_MAX_SEARCH_VARS: int = 24
DEFAULT_OMEGA_FALLBACK: bool = False
DEFAULT_UNBALANCED_NEW: bool = False

# Interpreter
DEFAULT_FUEL_REPL: int = 1
DEFAULT_MAX_STEPS: int = 100
DEFAULT_SEED: int = 0

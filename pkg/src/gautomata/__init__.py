"""G-automata with an abelian register, word problems and pumpable loops."""

__version__ = "0.1.0"

from .automaton import Edge, GAutomaton, make_automaton  # noqa: E402
from .errors import (  # noqa: E402
    CertificationError,
    GAutomataError,
    ResourceGuardError,
    UsageError,
    WellDefinednessViolation,
)
from .lattice import INFINITE, AbelianSpec  # noqa: E402
from .paths import EXACT, Bounded, Exact, Verdict, accepts, is_empty  # noqa: E402

__all__ = [
    "AbelianSpec",
    "Bounded",
    "CertificationError",
    "EXACT",
    "Edge",
    "Exact",
    "GAutomaton",
    "GAutomataError",
    "INFINITE",
    "ResourceGuardError",
    "UsageError",
    "Verdict",
    "WellDefinednessViolation",
    "accepts",
    "is_empty",
    "make_automaton",
]

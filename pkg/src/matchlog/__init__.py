"""Applicative matching logic: kernel, tactics, meta transforms, models.

The trusted base is kernel.check_proof over the schema tables in systems;
everything else (the derived-rule catalog, the proof transformers, the
surface syntax, the CLI) emits plain proofs and re-checks them there.
"""

from .errors import MatchlogError, SideConditionError
from .kernel import (
    Ax, Hyp, Judgment, ProofError, ProofStep, RuleApp, check_proof,
)
from .syntax import (
    And, App, Bot, Context, DEF_SYMBOL, EVar, Exists, Forall, Hole, Implies,
    Not, Or, Pattern, Sym, ceil, eqdef, expand, floor, iff, member,
)
from .systems import GC, MGC, P, ProofSystem, instantiate, system

__all__ = [
    "And", "App", "Ax", "Bot", "Context", "DEF_SYMBOL", "EVar", "Exists",
    "Forall", "GC", "Hole", "Hyp", "Implies", "Judgment", "MGC",
    "MatchlogError", "Not", "Or", "P", "Pattern", "ProofError", "ProofStep",
    "ProofSystem", "RuleApp", "Sym", "SideConditionError", "ceil",
    "check_proof", "eqdef", "expand", "floor", "iff", "instantiate",
    "member", "system",
]

__version__ = "0.1.0"

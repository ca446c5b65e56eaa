"""Proof checking.

A proof is a list of steps; each step states its conclusion pattern and a
justification: a hypothesis, an axiom schema instance, or a rule applied
to earlier steps. The checker instantiates the cited schema or rule under
the supplied slot assignment and compares patterns for identity. It never
searches and never unifies, so checking is deterministic and linear in
proof size.

Failures raise ProofError carrying the failing step index and a stable
machine-readable cause tag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import MatchlogError, SideConditionError
from .syntax import Pattern, Variable
from .systems import (
    Assignment, ProofSystem, check_side_condition, instantiate,
)


class ProofError(MatchlogError):
    """Rejected proof: .step is the 0-based failing index, .cause a tag."""

    def __init__(self, step: int | None, cause: str, message: str):
        super().__init__(message)
        self.step = step
        self.cause = cause
        self.message = message


@dataclass
class Hyp:
    """The stated conclusion is one of the hypotheses."""


@dataclass
class Ax:
    schema_id: str
    assignment: Assignment = field(default_factory=dict)


@dataclass
class RuleApp:
    rule_id: str
    premises: tuple[int, ...]
    assignment: Assignment = field(default_factory=dict)


Justification = Union[Hyp, Ax, RuleApp]


@dataclass
class ProofStep:
    conclusion: Pattern
    justification: Justification


@dataclass(frozen=True)
class Judgment:
    """What a checked proof establishes.

    gen_vars records every binder the gen rule was applied to, in any
    step; the deduction transformer consumes this discipline.
    """
    system_id: str
    hypotheses: tuple[Pattern, ...]
    conclusion: Pattern
    gen_vars: frozenset = frozenset()

    def __str__(self):
        hyp = ", ".join(map(str, self.hypotheses))
        sep = " " if hyp else ""
        return f"{self.system_id}: {hyp}{sep}|- {self.conclusion}"


def check_proof(system: ProofSystem, hypotheses: Sequence[Pattern],
                steps: Sequence[ProofStep]) -> Judgment:
    """Check every step; return the judgment of the final one.

    Any prefix of a valid proof is itself valid, and checking a step
    consults only earlier steps, the hypothesis list, and the system
    tables, so results never depend on later content.
    """
    if not steps:
        raise ProofError(None, "empty-proof", "proof has no steps")
    hyp_set = set(hypotheses)
    gen_vars: set[Variable] = set()
    for i, step in enumerate(steps):
        _check_step(system, hyp_set, steps, i, step, gen_vars)
    return Judgment(system.id, tuple(hypotheses), steps[-1].conclusion,
                    frozenset(gen_vars))


def _check_step(system: ProofSystem, hyp_set: set, steps: Sequence[ProofStep],
                i: int, step: ProofStep, gen_vars: set) -> None:
    j = step.justification
    if isinstance(j, Hyp):
        if step.conclusion not in hyp_set:
            raise ProofError(
                i, "hypothesis-not-found",
                f"step {i}: {step.conclusion} is not a hypothesis")
        return

    if isinstance(j, Ax):
        schema = system.axiom(j.schema_id)
        if schema is None:
            raise ProofError(i, "unknown-axiom",
                             f"step {i}: system {system.id} has no axiom "
                             f"schema {j.schema_id!r}")
        try:
            inst = instantiate(schema.template, j.assignment)
            for cond in schema.side_conditions:
                if not check_side_condition(cond, j.assignment):
                    raise ProofError(
                        i, "side-condition",
                        f"step {i}: {schema.id} needs {cond.describe()}")
        except ProofError:
            raise
        except MatchlogError as e:
            raise ProofError(i, "bad-assignment",
                             f"step {i}: {schema.id}: {e}") from None
        if inst is not step.conclusion:
            raise ProofError(
                i, "conclusion-mismatch",
                f"step {i}: {schema.id} instance is {inst}, "
                f"step states {step.conclusion}")
        return

    if isinstance(j, RuleApp):
        rule = system.rule(j.rule_id)
        if rule is None:
            raise ProofError(i, "unknown-rule",
                             f"step {i}: system {system.id} has no rule "
                             f"{j.rule_id!r}")
        if len(j.premises) != len(rule.premises):
            raise ProofError(
                i, "premise-count",
                f"step {i}: {rule.id} takes {len(rule.premises)} premises, "
                f"got {len(j.premises)}")
        for k in j.premises:
            if not (0 <= k < i):
                raise ProofError(
                    i, "premise-index",
                    f"step {i}: premise index {k} is not an earlier step")
        try:
            for t, k in zip(rule.premises, j.premises):
                want = instantiate(t, j.assignment)
                if want is not steps[k].conclusion:
                    raise ProofError(
                        i, "premise-mismatch",
                        f"step {i}: {rule.id} premise should be {want}, "
                        f"step {k} states {steps[k].conclusion}")
            for cond in rule.side_conditions:
                if not check_side_condition(cond, j.assignment):
                    raise ProofError(
                        i, "side-condition",
                        f"step {i}: {rule.id} needs {cond.describe()}")
            inst = instantiate(rule.conclusion, j.assignment)
        except ProofError:
            raise
        except MatchlogError as e:
            raise ProofError(i, "bad-assignment",
                             f"step {i}: {rule.id}: {e}") from None
        if inst is not step.conclusion:
            raise ProofError(
                i, "conclusion-mismatch",
                f"step {i}: {rule.id} concludes {inst}, "
                f"step states {step.conclusion}")
        if rule.id == "gen":
            gen_vars.add(_gen_binder(j.assignment))
        return

    raise ProofError(i, "bad-justification",
                     f"step {i}: unrecognized justification {j!r}")


def _gen_binder(asg: Assignment) -> Variable:
    v = asg["x"]
    return v if isinstance(v, str) else v.name


def proof_conclusions(steps: Iterable[ProofStep]) -> list[Pattern]:
    return [s.conclusion for s in steps]


@dataclass(frozen=True)
class Proof:
    """A portable proof object: system, hypotheses, and the step list."""
    system_id: str
    hypotheses: tuple[Pattern, ...]
    steps: tuple[ProofStep, ...]
    extensions: frozenset = frozenset()

    @property
    def conclusion(self) -> Pattern:
        return self.steps[-1].conclusion

    def check(self) -> Judgment:
        from .systems import system
        s = system(self.system_id)
        if self.extensions:
            s = s.with_extensions(
                singletons="singletons" in self.extensions,
                existence="existence" in self.extensions)
        return check_proof(s, self.hypotheses, self.steps)

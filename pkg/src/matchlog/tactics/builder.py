"""Step-list accumulation with dedup, splicing, and slot inference.

The builder keeps the invariant that its step list is always a valid
proof prefix: every append instantiates the cited schema or rule first
and only then records the step, so the kernel re-check at the end cannot
fail except through a builder bug. Steps proving an already-proven
conclusion are collapsed onto the earlier index, which turns the deeply
nested lemma expansions of catalog entries into compact DAG-shaped
proofs.

Rule slots are inferred by one-way matching of premise templates against
the cited steps' conclusions; slots no premise determines (an expansion
context, a generalization binder) are passed explicitly.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import MatchlogError
from ..kernel import Ax, Hyp, ProofStep, RuleApp, Judgment, check_proof
from ..syntax import (
    And, App, Bot, EVar, Exists, Forall, Implies, Not, Or, Pattern, Sym,
)
from ..systems import (
    Assignment, ProofSystem, Rule, TAnd, TApp, TBot, TExists, TForall,
    TImplies, TNot, TOr, TSlot, TSubf, TSym, TVar, Template, instantiate,
)


def match_template(t: Template, p: Pattern, binding: Assignment) -> None:
    """Extend binding so that instantiate(t, binding) is p, or raise.

    TSubf templates are not matchable (substitution is not injective);
    no built-in rule premise contains one.
    """
    match t:
        case TBot():
            if not isinstance(p, Bot):
                raise MatchlogError(f"expected bottom, got {p}")
        case TSlot(name):
            _bind(binding, name, p)
        case TVar(name):
            if not isinstance(p, EVar):
                raise MatchlogError(f"expected a variable, got {p}")
            _bind(binding, name, p.name)
        case TSym(name):
            if not (isinstance(p, Sym) and p.name == name):
                raise MatchlogError(f"expected symbol {name}, got {p}")
        case TNot(s):
            if not isinstance(p, Not):
                raise MatchlogError(f"expected a negation, got {p}")
            match_template(s, p.sub, binding)
        case TImplies(a, b):
            if not isinstance(p, Implies):
                raise MatchlogError(f"expected an implication, got {p}")
            match_template(a, p.left, binding)
            match_template(b, p.right, binding)
        case TAnd(a, b):
            if not isinstance(p, And):
                raise MatchlogError(f"expected a conjunction, got {p}")
            match_template(a, p.left, binding)
            match_template(b, p.right, binding)
        case TOr(a, b):
            if not isinstance(p, Or):
                raise MatchlogError(f"expected a disjunction, got {p}")
            match_template(a, p.left, binding)
            match_template(b, p.right, binding)
        case TApp(a, b):
            if not isinstance(p, App):
                raise MatchlogError(f"expected an application, got {p}")
            match_template(a, p.left, binding)
            match_template(b, p.right, binding)
        case TForall(v, b):
            if not isinstance(p, Forall):
                raise MatchlogError(f"expected a universal, got {p}")
            _bind(binding, v, p.var)
            match_template(b, p.body, binding)
        case TExists(v, b):
            if not isinstance(p, Exists):
                raise MatchlogError(f"expected an existential, got {p}")
            _bind(binding, v, p.var)
            match_template(b, p.body, binding)
        case TSubf():
            raise MatchlogError("cannot match against a substitution "
                                "template")
        case _:
            raise MatchlogError(f"bad template node {t!r}")


def _bind(binding: Assignment, name: str, value) -> None:
    old = binding.get(name)
    if old is None:
        binding[name] = value
    elif old is not value and old != value:
        raise MatchlogError(
            f"slot {name!r} matched both {old} and {value}")


class ProofBuilder:
    def __init__(self, system: ProofSystem,
                 hypotheses: Sequence[Pattern] = ()):
        self.system = system
        self.hypotheses: list[Pattern] = list(hypotheses)
        self.steps: list[ProofStep] = []
        self.cited: set[str] = set()
        self._by_conclusion: dict[Pattern, int] = {}

    def __len__(self):
        return len(self.steps)

    def conclusion(self, i: int) -> Pattern:
        return self.steps[i].conclusion

    def _add(self, conclusion: Pattern, just) -> int:
        got = self._by_conclusion.get(conclusion)
        if got is not None:
            return got
        self.steps.append(ProofStep(conclusion, just))
        i = len(self.steps) - 1
        self._by_conclusion[conclusion] = i
        return i

    def hyp(self, pattern: Pattern) -> int:
        if pattern not in self.hypotheses:
            self.hypotheses.append(pattern)
        return self._add(pattern, Hyp())

    def axiom(self, schema_id: str, **slots) -> int:
        schema = self.system.axiom(schema_id)
        if schema is None:
            raise MatchlogError(
                f"system {self.system.id} has no axiom {schema_id!r}")
        asg = dict(slots)
        concl = instantiate(schema.template, asg)
        return self._add(concl, Ax(schema_id, asg))

    def rule(self, rule_id: str, *premises: int, **slots) -> int:
        r = self.system.rule(rule_id)
        if r is None:
            raise MatchlogError(
                f"system {self.system.id} has no rule {rule_id!r}")
        if len(premises) != len(r.premises):
            raise MatchlogError(
                f"{rule_id} takes {len(r.premises)} premises")
        asg: Assignment = dict(slots)
        for t, k in zip(r.premises, premises):
            match_template(t, self.steps[k].conclusion, asg)
        concl = instantiate(r.conclusion, asg)
        return self._add(concl, RuleApp(rule_id, tuple(premises), asg))

    # the propositional workhorses, named for terseness at call sites
    def mp(self, minor: int, major: int) -> int:
        return self.rule("mp", minor, major)

    def syl(self, first: int, second: int) -> int:
        return self.rule("syllogism", first, second)

    def use(self, label: str, *params, prem: Sequence[int] = ()) -> int:
        """Apply a catalog entry in place; records the citation."""
        from .catalog import apply_entry
        return apply_entry(self, label, *params, prem=tuple(prem))

    def splice(self, steps: Sequence[ProofStep]) -> list[int]:
        """Append a foreign step list, remapping indices; returns the map.

        Hypothesis steps extend this builder's hypothesis list, so the
        spliced material proves the same judgments it did at home.
        """
        mapping: list[int] = []
        for step in steps:
            j = step.justification
            if isinstance(j, Hyp):
                mapping.append(self.hyp(step.conclusion))
            elif isinstance(j, Ax):
                mapping.append(self._add(step.conclusion,
                                         Ax(j.schema_id, dict(j.assignment))))
            elif isinstance(j, RuleApp):
                remapped = tuple(mapping[k] for k in j.premises)
                mapping.append(self._add(
                    step.conclusion,
                    RuleApp(j.rule_id, remapped, dict(j.assignment))))
            else:
                raise MatchlogError(f"cannot splice step {step!r}")
        return mapping

    def check(self) -> Judgment:
        return check_proof(self.system, self.hypotheses, self.steps)

    def check_at(self, i: int) -> Judgment:
        """Judgment of the prefix ending at step i."""
        return check_proof(self.system, self.hypotheses,
                           self.steps[:i + 1])

"""The three built-in Hilbert systems as data.

Axiom schemas and deduction rules are templates over named slots: pattern
slots (phi, psi, chi) and variable slots (x, y). A template may apply free
substitution to a slot (the quantifier schemas need it); instantiation is
purely structural otherwise. Side conditions name slots and are checked
against the supplied assignment -- the kernel does no search.

Two-form table entries (contraction, weakening, permutation, the
propagation families) are split into separate schemas with -1/-2 suffixes
so justifications are unambiguous: -1 is the left/first displayed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import MatchlogError
from .subst import free_for, subf
from .syntax import (
    And, App, Bot, DEF_SYMBOL, EVar, Exists, Forall, Implies, Not, Or,
    Pattern, Sym, Variable, occurs,
)


# -- templates ---------------------------------------------------------------

class Template:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class TBot(Template):
    pass


@dataclass(frozen=True, slots=True)
class TSlot(Template):
    """Pattern metavariable."""
    name: str


@dataclass(frozen=True, slots=True)
class TVar(Template):
    """Element variable slot, used as a pattern (an EVar leaf)."""
    name: str


@dataclass(frozen=True, slots=True)
class TSym(Template):
    name: str


@dataclass(frozen=True, slots=True)
class TNot(Template):
    sub: Template


@dataclass(frozen=True, slots=True)
class TImplies(Template):
    left: Template
    right: Template


@dataclass(frozen=True, slots=True)
class TAnd(Template):
    left: Template
    right: Template


@dataclass(frozen=True, slots=True)
class TOr(Template):
    left: Template
    right: Template


@dataclass(frozen=True, slots=True)
class TApp(Template):
    left: Template
    right: Template


@dataclass(frozen=True, slots=True)
class TForall(Template):
    var: str            # variable slot name
    body: Template


@dataclass(frozen=True, slots=True)
class TExists(Template):
    var: str
    body: Template


@dataclass(frozen=True, slots=True)
class TSubf(Template):
    """Free substitution applied after instantiation: body[var := repl]."""
    var: str            # variable slot substituted away
    repl: str           # variable slot substituted in
    body: Template


Assignment = dict[str, Union[Pattern, Variable]]


def instantiate(t: Template, asg: Assignment) -> Pattern:
    """Homomorphic slot replacement; raises on missing or ill-kinded slots."""
    match t:
        case TBot():
            return Bot()
        case TSlot(name):
            v = _lookup(asg, name)
            if not isinstance(v, Pattern):
                raise MatchlogError(f"slot {name!r} needs a pattern")
            return v
        case TVar(name):
            return EVar(_var(asg, name))
        case TSym(name):
            return Sym(name)
        case TNot(s):
            return Not(instantiate(s, asg))
        case TImplies(a, b):
            return Implies(instantiate(a, asg), instantiate(b, asg))
        case TAnd(a, b):
            return And(instantiate(a, asg), instantiate(b, asg))
        case TOr(a, b):
            return Or(instantiate(a, asg), instantiate(b, asg))
        case TApp(a, b):
            return App(instantiate(a, asg), instantiate(b, asg))
        case TForall(v, b):
            return Forall(_var(asg, v), instantiate(b, asg))
        case TExists(v, b):
            return Exists(_var(asg, v), instantiate(b, asg))
        case TSubf(x, y, b):
            return subf(_var(asg, x), _var(asg, y), instantiate(b, asg))
    raise MatchlogError(f"bad template node {t!r}")


def _lookup(asg: Assignment, name: str):
    try:
        return asg[name]
    except KeyError:
        raise MatchlogError(f"missing slot {name!r}") from None


def _var(asg: Assignment, name: str) -> Variable:
    v = _lookup(asg, name)
    if isinstance(v, EVar):
        return v.name
    if not isinstance(v, str):
        raise MatchlogError(f"slot {name!r} needs a variable")
    return v


def template_slots(t: Template) -> tuple[frozenset, frozenset]:
    """(pattern slots, variable slots) mentioned by a template."""
    ps: set[str] = set()
    vs: set[str] = set()

    def walk(t: Template):
        match t:
            case TSlot(name):
                ps.add(name)
            case TVar(name):
                vs.add(name)
            case TForall(v, b) | TExists(v, b):
                vs.add(v)
                walk(b)
            case TSubf(x, y, b):
                vs.add(x)
                vs.add(y)
                walk(b)
            case TNot(s):
                walk(s)
            case TImplies(a, b) | TAnd(a, b) | TOr(a, b) | TApp(a, b):
                walk(a)
                walk(b)

    walk(t)
    return frozenset(ps), frozenset(vs)


# -- side conditions ---------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FreeFor:
    """x is free for y in phi (slot names)."""
    x: str
    y: str
    phi: str

    def holds(self, asg: Assignment) -> bool:
        return free_for(_var(asg, self.x), _var(asg, self.y),
                        _pattern(asg, self.phi))

    def describe(self) -> str:
        return f"{self.x} free for {self.y} in {self.phi}"


@dataclass(frozen=True, slots=True)
class NotOccurs:
    """x does not occur in phi (free, bound, or as a binder)."""
    x: str
    phi: str

    def holds(self, asg: Assignment) -> bool:
        return not occurs(_var(asg, self.x), _pattern(asg, self.phi))

    def describe(self) -> str:
        return f"{self.x} does not occur in {self.phi}"


@dataclass(frozen=True, slots=True)
class NotFree:
    """x is not free in phi."""
    x: str
    phi: str

    def holds(self, asg: Assignment) -> bool:
        return _var(asg, self.x) not in _pattern(asg, self.phi).fve

    def describe(self) -> str:
        return f"{self.x} not free in {self.phi}"


@dataclass(frozen=True, slots=True)
class DistinctVars:
    x: str
    y: str

    def holds(self, asg: Assignment) -> bool:
        return _var(asg, self.x) != _var(asg, self.y)

    def describe(self) -> str:
        return f"{self.x} distinct from {self.y}"


SideCondition = Union[FreeFor, NotOccurs, NotFree, DistinctVars]


def _pattern(asg: Assignment, name: str) -> Pattern:
    v = _lookup(asg, name)
    if not isinstance(v, Pattern):
        raise MatchlogError(f"slot {name!r} needs a pattern")
    return v


def check_side_condition(cond: SideCondition, asg: Assignment) -> bool:
    return cond.holds(asg)


def _cond_slots(cond: SideCondition) -> frozenset:
    match cond:
        case FreeFor(x, y, phi):
            return frozenset((x, y, phi))
        case NotOccurs(x, phi) | NotFree(x, phi):
            return frozenset((x, phi))
        case DistinctVars(x, y):
            return frozenset((x, y))
    raise MatchlogError(f"bad side condition {cond!r}")


# -- schemas, rules, systems -------------------------------------------------

@dataclass(frozen=True)
class AxiomSchema:
    id: str
    template: Template
    side_conditions: tuple[SideCondition, ...] = ()
    pattern_slots: frozenset = field(init=False)
    var_slots: frozenset = field(init=False)

    def __post_init__(self):
        ps, vs = template_slots(self.template)
        object.__setattr__(self, "pattern_slots", ps)
        object.__setattr__(self, "var_slots", vs)
        for c in self.side_conditions:
            if not _cond_slots(c) <= ps | vs:
                raise MatchlogError(
                    f"schema {self.id}: side condition names unknown slot")

    @property
    def slots(self) -> frozenset:
        return self.pattern_slots | self.var_slots


@dataclass(frozen=True)
class Rule:
    id: str
    premises: tuple[Template, ...]
    conclusion: Template
    side_conditions: tuple[SideCondition, ...] = ()
    pattern_slots: frozenset = field(init=False)
    var_slots: frozenset = field(init=False)

    def __post_init__(self):
        ps: frozenset = frozenset()
        vs: frozenset = frozenset()
        for t in (*self.premises, self.conclusion):
            p, v = template_slots(t)
            ps |= p
            vs |= v
        object.__setattr__(self, "pattern_slots", ps)
        object.__setattr__(self, "var_slots", vs)
        for c in self.side_conditions:
            if not _cond_slots(c) <= ps | vs:
                raise MatchlogError(
                    f"rule {self.id}: side condition names unknown slot")

    @property
    def slots(self) -> frozenset:
        return self.pattern_slots | self.var_slots


ALIASES = {
    "exfalso": "ex-falso",
    "ex-falso-quodlibet": "ex-falso",
    "modus-ponens": "mp",
}


@dataclass(frozen=True)
class ProofSystem:
    id: str
    axioms: tuple[AxiomSchema, ...]
    rules: tuple[Rule, ...]
    extensions: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "_axiom_by_id",
                           {a.id: a for a in self.axioms})
        object.__setattr__(self, "_rule_by_id",
                           {r.id: r for r in self.rules})

    def axiom(self, schema_id: str) -> AxiomSchema | None:
        schema_id = ALIASES.get(schema_id, schema_id)
        return self._axiom_by_id.get(schema_id)

    def rule(self, rule_id: str) -> Rule | None:
        rule_id = ALIASES.get(rule_id, rule_id)
        return self._rule_by_id.get(rule_id)

    def with_extensions(self, *, singletons: bool = False,
                        existence: bool = False) -> "ProofSystem":
        """Add the gated zero-premise schemas; identity if nothing new."""
        flags = set(self.extensions)
        extra = []
        if singletons and "singletons" not in flags:
            flags.add("singletons")
            extra.append(_SINGLETONS_AXIOM)
        if existence and "existence" not in flags:
            flags.add("existence")
            extra.append(_EXISTENCE_AXIOM)
        if not extra:
            return self
        return ProofSystem(self.id, self.axioms + tuple(extra), self.rules,
                           frozenset(flags))


# template shorthands used by the tables below
_P = TSlot("phi")
_Q = TSlot("psi")
_C = TSlot("chi")
_x = TVar("x")
_y = TVar("y")


def _timp(a, b):
    return TImplies(a, b)


def _tceil(t):
    return TApp(TSym(DEF_SYMBOL), t)


def _tiff(a, b):
    return TAnd(TImplies(a, b), TImplies(b, a))


def _teq(a, b):
    return TNot(_tceil(TNot(_tiff(a, b))))


_PROPOSITIONAL_AXIOMS = (
    AxiomSchema("contraction-1", _timp(TOr(_P, _P), _P)),
    AxiomSchema("contraction-2", _timp(_P, TAnd(_P, _P))),
    AxiomSchema("weakening-1", _timp(_P, TOr(_P, _Q))),
    AxiomSchema("weakening-2", _timp(TAnd(_P, _Q), _P)),
    AxiomSchema("permutation-1", _timp(TOr(_P, _Q), TOr(_Q, _P))),
    AxiomSchema("permutation-2", _timp(TAnd(_P, _Q), TAnd(_Q, _P))),
    AxiomSchema("ex-falso", _timp(TBot(), _P)),
    AxiomSchema("lem", TOr(_P, TNot(_P))),
    AxiomSchema("axiom-not-1", _timp(TNot(_P), _timp(_P, TBot()))),
    AxiomSchema("axiom-not-2", _timp(_timp(_P, TBot()), TNot(_P))),
)

_PROPOSITIONAL_RULES = (
    Rule("mp", (_P, _timp(_P, _Q)), _Q),
    Rule("syllogism", (_timp(_P, _Q), _timp(_Q, _C)), _timp(_P, _C)),
    Rule("exportation", (_timp(TAnd(_P, _Q), _C),),
         _timp(_P, _timp(_Q, _C))),
    Rule("importation", (_timp(_P, _timp(_Q, _C)),),
         _timp(TAnd(_P, _Q), _C)),
    Rule("expansion", (_timp(_P, _Q),), _timp(TOr(_C, _P), TOr(_C, _Q))),
)

_PROPAGATION_BOT = (
    AxiomSchema("propagation-bot-1", _timp(TApp(_P, TBot()), TBot())),
    AxiomSchema("propagation-bot-2", _timp(TApp(TBot(), _P), TBot())),
)

_PROPAGATION_OR = (
    AxiomSchema("propagation-or-1",
                _timp(TApp(TOr(_P, _Q), _C),
                      TOr(TApp(_P, _C), TApp(_Q, _C)))),
    AxiomSchema("propagation-or-2",
                _timp(TApp(_C, TOr(_P, _Q)),
                      TOr(TApp(_C, _P), TApp(_C, _Q)))),
)


def _propagation_exists(cond_cls):
    # cond_cls is NotOccurs (x does not occur in psi) or NotFree (weaker)
    return (
        AxiomSchema("propagation-exists-1",
                    _timp(TApp(TExists("x", _P), _Q),
                          TExists("x", TApp(_P, _Q))),
                    (cond_cls("x", "psi"),)),
        AxiomSchema("propagation-exists-2",
                    _timp(TApp(_Q, TExists("x", _P)),
                          TExists("x", TApp(_Q, _P))),
                    (cond_cls("x", "psi"),)),
    )


_FRAMING_RULES = (
    Rule("framing-left", (_timp(_P, _Q),),
         _timp(TApp(_P, _C), TApp(_Q, _C))),
    Rule("framing-right", (_timp(_P, _Q),),
         _timp(TApp(_C, _P), TApp(_C, _Q))),
)

_EXISTS_QUANTIFIER = AxiomSchema(
    "exists-quantifier", _timp(TSubf("x", "y", _P), TExists("x", _P)),
    (FreeFor("x", "y", "phi"),))

_EXISTS_RULE = Rule(
    "exists-rule", (_timp(_P, _Q),), _timp(TExists("x", _P), _Q),
    (NotFree("x", "psi"),))

GC = ProofSystem(
    "Gc",
    axioms=_PROPOSITIONAL_AXIOMS + (
        _EXISTS_QUANTIFIER,
        AxiomSchema("forall-quantifier",
                    _timp(TForall("x", _P), TSubf("x", "y", _P)),
                    (FreeFor("x", "y", "phi"),)),
        *_PROPAGATION_BOT,
        *_PROPAGATION_OR,
        *_propagation_exists(NotOccurs),
    ),
    rules=_PROPOSITIONAL_RULES + (
        _EXISTS_RULE,
        Rule("forall-rule", (_timp(_P, _Q),), _timp(_P, TForall("x", _Q)),
             (NotFree("x", "phi"),)),
        *_FRAMING_RULES,
    ),
)

P = ProofSystem(
    "P",
    axioms=(
        AxiomSchema("axiom-1", _timp(_P, _timp(_Q, _P))),
        AxiomSchema("axiom-2",
                    _timp(_timp(_P, _timp(_Q, _C)),
                          _timp(_timp(_P, _Q), _timp(_P, _C)))),
        AxiomSchema("axiom-3", _timp(TNot(TNot(_P)), _P)),
        AxiomSchema("axiom-not-1", _timp(TNot(_P), _timp(_P, TBot()))),
        AxiomSchema("axiom-not-2", _timp(_timp(_P, TBot()), TNot(_P))),
        AxiomSchema("axiom-or-1",
                    _timp(TOr(_P, _Q), _timp(TNot(_P), _Q))),
        AxiomSchema("axiom-or-2",
                    _timp(_timp(TNot(_P), _Q), TOr(_P, _Q))),
        AxiomSchema("axiom-and-1",
                    _timp(TAnd(_P, _Q), TNot(TOr(TNot(_P), TNot(_Q))))),
        AxiomSchema("axiom-and-2",
                    _timp(TNot(TOr(TNot(_P), TNot(_Q))), TAnd(_P, _Q))),
        _EXISTS_QUANTIFIER,
        AxiomSchema("axiom-forall-1",
                    _timp(TForall("x", _P), TNot(TExists("x", TNot(_P))))),
        AxiomSchema("axiom-forall-2",
                    _timp(TNot(TExists("x", TNot(_P))), TForall("x", _P))),
        *_PROPAGATION_BOT,
        *_PROPAGATION_OR,
        *_propagation_exists(NotFree),      # the starred, weaker form
    ),
    rules=(
        Rule("mp", (_P, _timp(_P, _Q)), _Q),
        _EXISTS_RULE,
        *_FRAMING_RULES,
    ),
)

MGC = ProofSystem(
    "MGc",
    axioms=_PROPOSITIONAL_AXIOMS + (
        AxiomSchema("monk-1",
                    _timp(TForall("x", _timp(_P, _Q)),
                          _timp(TForall("x", _P), TForall("x", _Q)))),
        AxiomSchema("monk-2", _timp(_P, TForall("x", _P)),
                    (NotOccurs("x", "phi"),)),
        AxiomSchema("monk-3", TExists("x", _teq(_x, _y)),
                    (DistinctVars("x", "y"),)),
        AxiomSchema("axiom-exists-1",
                    _timp(TExists("x", _P), TNot(TForall("x", TNot(_P))))),
        AxiomSchema("axiom-exists-2",
                    _timp(TNot(TForall("x", TNot(_P))), TExists("x", _P))),
        *_PROPAGATION_OR,
        *_propagation_exists(NotOccurs),
        AxiomSchema("propagation-ceil-1",
                    _timp(TApp(_tceil(_P), _Q), _tceil(_P))),
        AxiomSchema("propagation-ceil-2",
                    _timp(TApp(_Q, _tceil(_P)), _tceil(_P))),
        AxiomSchema("definedness", _tceil(_x)),
        AxiomSchema("ceil-intro", _timp(_P, _tceil(_P))),
        AxiomSchema("ceil-bot", _timp(_tceil(TBot()), TBot())),
    ),
    rules=_PROPOSITIONAL_RULES + (
        Rule("gen", (_P,), TForall("x", _P)),
        *_FRAMING_RULES,
    ),
)

_SINGLETONS_AXIOM = AxiomSchema(
    "singletons",
    TOr(TNot(_tceil(TAnd(_x, _P))), TNot(_tceil(TAnd(_x, TNot(_P))))))

_EXISTENCE_AXIOM = AxiomSchema("existence", TExists("x", _x))

_SLOT_RANK = {"phi": 0, "psi": 1, "chi": 2, "x": 0, "y": 1, "z": 2}


def canonical_assignment(pattern_slots: Iterable[str],
                         var_slots: Iterable[str]) -> Assignment:
    """Distinct fresh symbols p0, p1, ... and variables v0, v1, ...

    Symbols have no variables and v0, v1, ... are pairwise distinct, so
    every side condition any built-in schema can state holds trivially.
    """
    def rank(s):
        return (_SLOT_RANK.get(s, 99), s)

    asg: Assignment = {}
    for i, s in enumerate(sorted(pattern_slots, key=rank)):
        asg[s] = Sym(f"p{i}")
    for i, s in enumerate(sorted(var_slots, key=rank)):
        asg[s] = f"v{i}"
    return asg


_BY_ID = {"Gc": GC, "P": P, "MGc": MGC}


def system(system_id: str) -> ProofSystem:
    try:
        return _BY_ID[system_id]
    except KeyError:
        raise MatchlogError(f"unknown proof system {system_id!r}") from None


def list_system(system_id: str) -> dict:
    """Full schema/rule table with side conditions, for docs and tests."""
    s = system(system_id)
    return {
        "id": s.id,
        "axioms": [
            {"id": a.id,
             "side_conditions": [c.describe() for c in a.side_conditions]}
            for a in s.axioms
        ],
        "rules": [
            {"id": r.id, "premises": len(r.premises),
             "side_conditions": [c.describe() for c in r.side_conditions]}
            for r in s.rules
        ],
        "extensions": sorted(s.extensions),
    }

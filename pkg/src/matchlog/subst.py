"""Free substitution, bounded substitution, free-for, fresh names.

subf replaces free occurrences of a variable by a variable and stops at
binders of that variable. subb renames every binder of a variable (and the
occurrences it binds) to a new variable that must not occur anywhere in the
pattern -- it is the explicit alpha-renaming step; nothing else in the
package ever renames.

The syntactic lemma suite at the bottom packages the interplay facts
(subf/subb composition, occurrence bookkeeping, free-for preservation) as
executable properties; the test suite and the acceptance harness run them
over generated patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import SideConditionError
from .syntax import (
    And, App, Bot, EVar, Exists, Forall, Hole, Implies, Not, Or, Pattern, Sym,
    Variable, all_vars, occurs, occurs_bound,
)


def free_for(x: Variable, y: Variable, p: Pattern) -> bool:
    """x is free for y in p: no free occurrence of x lies inside the scope
    of a y-binder (so subf(x, y, p) captures nothing)."""
    if x not in p.fve or y not in p.bve:
        return True
    match p:
        case Not(q):
            return free_for(x, y, q)
        case Implies(a, b) | And(a, b) | Or(a, b) | App(a, b):
            return free_for(x, y, a) and free_for(x, y, b)
        case Forall(v, b) | Exists(v, b):
            if v == x:
                return True         # no free x below
            if v == y:
                return x not in b.fve
            return free_for(x, y, b)
    return True


def subf(x: Variable, y: Variable, p: Pattern) -> Pattern:
    """Replace every free occurrence of x by y."""
    if x == y or x not in p.fve:
        return p
    match p:
        case EVar(_):
            return EVar(y)          # p must be EVar(x): x is free in p
        case Not(q):
            return Not(subf(x, y, q))
        case Implies(a, b):
            return Implies(subf(x, y, a), subf(x, y, b))
        case And(a, b):
            return And(subf(x, y, a), subf(x, y, b))
        case Or(a, b):
            return Or(subf(x, y, a), subf(x, y, b))
        case App(a, b):
            return App(subf(x, y, a), subf(x, y, b))
        case Forall(v, b):
            return Forall(v, subf(x, y, b))   # v != x since x free in p
        case Exists(v, b):
            return Exists(v, subf(x, y, b))
    raise AssertionError(p)


def subb(x: Variable, y: Variable, p: Pattern) -> Pattern:
    """Rename every x-binder (and the occurrences it binds) to y.

    Precondition (checked): y does not occur in p. Free occurrences of x are
    untouched, so fve is preserved.
    """
    if x in p.bve and occurs(y, p):
        raise SideConditionError(
            "subb-target-occurs",
            f"subb target {y!r} already occurs in the pattern")
    return _subb(x, y, p)


def _subb(x: Variable, y: Variable, p: Pattern) -> Pattern:
    if x not in p.bve:
        return p
    match p:
        case Not(q):
            return Not(_subb(x, y, q))
        case Implies(a, b):
            return Implies(_subb(x, y, a), _subb(x, y, b))
        case And(a, b):
            return And(_subb(x, y, a), _subb(x, y, b))
        case Or(a, b):
            return Or(_subb(x, y, a), _subb(x, y, b))
        case App(a, b):
            return App(_subb(x, y, a), _subb(x, y, b))
        case Forall(v, b):
            b = _subb(x, y, b)
            return Forall(y, subf(x, y, b)) if v == x else Forall(v, b)
        case Exists(v, b):
            b = _subb(x, y, b)
            return Exists(y, subf(x, y, b)) if v == x else Exists(v, b)
    raise AssertionError(p)


def fresh(base: str, avoid) -> Variable:
    """Smallest identifier base+counter not in avoid. Deterministic, so the
    proof objects built by the meta transformers are reproducible."""
    avoid = set(avoid)
    i = 0
    while f"{base}{i}" in avoid:
        i += 1
    return f"{base}{i}"


def fresh_many(base: str, n: int, avoid) -> list[Variable]:
    avoid = set(avoid)
    out = []
    for _ in range(n):
        v = fresh(base, avoid)
        avoid.add(v)
        out.append(v)
    return out


def avoid_set(*patterns: Pattern) -> set[str]:
    s: set[str] = set()
    for p in patterns:
        s |= all_vars(p)
    return s


# -- syntactic lemma suite ---------------------------------------------------
#
# Each entry is universally quantified over (phi, x, y, z); check returns
# None when the stated hypotheses do not hold for the drawn instance
# (vacuous) and a bool otherwise. Names are the statements, not citations.

@dataclass(frozen=True)
class SyntacticLemma:
    name: str
    statement: str
    check: Callable[[Pattern, Variable, Variable, Variable], Optional[bool]]


def _l_free_for_self(phi, x, y, z):
    return free_for(x, x, phi)


def _l_fresh_free_for(phi, x, y, z):
    if occurs(y, phi):
        return None
    return free_for(x, y, phi)


def _l_subf_id(phi, x, y, z):
    if x in phi.fve:
        return None
    return subf(x, y, phi) is phi


def _l_subf_inverse(phi, x, y, z):
    if occurs(y, phi):
        return None
    return subf(y, x, subf(x, y, phi)) is phi


def _l_subf_eliminates(phi, x, y, z):
    if x == y or occurs_bound(x, phi):
        return None
    return not occurs(x, subf(x, y, phi))


def _l_subf_keeps_unbound(phi, x, y, z):
    if occurs_bound(y, phi):
        return None
    return not occurs_bound(y, subf(x, y, phi))


def _l_subf_compose(phi, x, y, z):
    if occurs(z, phi):
        return None
    return subf(z, y, subf(x, z, phi)) is subf(x, y, phi)


def _l_subb_fve(phi, x, y, z):
    if occurs(y, phi):
        return None
    return subb(x, y, phi).fve == phi.fve


def _l_subb_unbinds(phi, x, y, z):
    if x == y or occurs(y, phi):
        return None
    return not occurs_bound(x, subb(x, y, phi))


def _l_subb_eliminates(phi, x, y, z):
    if x == y or x in phi.fve or occurs(y, phi):
        return None
    return not occurs(x, subb(x, y, phi))


def _l_subf_subb_eliminates(phi, x, y, z):
    if x == y or x == z or occurs(z, phi):
        return None
    return not occurs(x, subf(x, y, subb(x, z, phi)))


def _l_subb_roundtrip(phi, x, y, z):
    if len({x, y, z}) != 3 or occurs(z, phi):
        return None
    return subb(z, x, subf(x, y, subb(x, z, phi))) is subf(x, y, phi)


def _l_subb_keeps_free_for(phi, x, y, z):
    if occurs(z, phi) or not free_for(x, y, phi):
        return None
    return free_for(x, y, subb(x, z, phi))


def _l_subf_fresh_free_for(phi, x, y, z):
    if occurs(z, phi) or not free_for(x, y, phi):
        return None
    return free_for(z, y, subf(x, z, phi))


SYNTACTIC_LEMMAS: tuple[SyntacticLemma, ...] = (
    SyntacticLemma("free-for-self", "x is free for x in phi", _l_free_for_self),
    SyntacticLemma("fresh-free-for",
                   "y not occurring in phi => x free for y in phi",
                   _l_fresh_free_for),
    SyntacticLemma("subf-identity",
                   "x not free in phi => subf(x,y,phi) = phi", _l_subf_id),
    SyntacticLemma("subf-inverse",
                   "y not occurring => subf(y,x,subf(x,y,phi)) = phi",
                   _l_subf_inverse),
    SyntacticLemma("subf-eliminates",
                   "x != y, x not bound => x not occurring in subf(x,y,phi)",
                   _l_subf_eliminates),
    SyntacticLemma("subf-keeps-unbound",
                   "y not bound in phi => y not bound in subf(x,y,phi)",
                   _l_subf_keeps_unbound),
    SyntacticLemma("subf-compose",
                   "z fresh => subf(z,y,subf(x,z,phi)) = subf(x,y,phi)",
                   _l_subf_compose),
    SyntacticLemma("subb-preserves-fve",
                   "subb never changes the free variables", _l_subb_fve),
    SyntacticLemma("subb-unbinds",
                   "x != y => x not bound in subb(x,y,phi)", _l_subb_unbinds),
    SyntacticLemma("subb-eliminates",
                   "x not free, x != y => x not occurring in subb(x,y,phi)",
                   _l_subb_eliminates),
    SyntacticLemma("subf-subb-eliminates",
                   "x != y,z => x not occurring in subf(x,y,subb(x,z,phi))",
                   _l_subf_subb_eliminates),
    SyntacticLemma("subb-roundtrip",
                   "x,y,z distinct, z fresh => "
                   "subb(z,x,subf(x,y,subb(x,z,phi))) = subf(x,y,phi)",
                   _l_subb_roundtrip),
    SyntacticLemma("subb-keeps-free-for",
                   "x free for y in phi => x free for y in subb(x,z,phi)",
                   _l_subb_keeps_free_for),
    SyntacticLemma("subf-fresh-free-for",
                   "z fresh, x free for y => z free for y in subf(x,z,phi)",
                   _l_subf_fresh_free_for),
)


def syntactic_lemma_suite() -> tuple[SyntacticLemma, ...]:
    """The registered lemma suite, in a stable order."""
    return SYNTACTIC_LEMMAS

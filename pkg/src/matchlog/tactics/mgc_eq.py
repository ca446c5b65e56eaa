"""Equality layer of the definedness calculus.

Equality of patterns is the floored equivalence, so every rule here is
the matching equivalence rule read through the floor introduction and
elimination pair. The guarded application rules at the end specialize
the guarded framing family to an equality antecedent; the substitution
walkers call them directly.
"""

from __future__ import annotations

from ..syntax import And, App, EVar, Exists, Forall, Implies, Not, Or, \
    eqdef, iff
from .catalog import derived, theorem


@theorem("equal-imp-dnd", "MGc",
         stmt=lambda phi, psi: Implies(eqdef(phi, psi), iff(phi, psi)))
def _equal_weakens(b, phi, psi):
    return b.use("lemma-floor-elim-alt", iff(phi, psi))


@derived("Gamma-equal-iff-dnd→", "MGc",
         prem=lambda phi, psi: (iff(phi, psi),),
         stmt=lambda phi, psi: eqdef(phi, psi))
def _equal_intro(b, phi, psi, prem):
    return b.use("lemma-floor-intro-iff→", iff(phi, psi), prem=prem)


@derived("Gamma-equal-iff-dnd←", "MGc",
         prem=lambda phi, psi: (eqdef(phi, psi),),
         stmt=lambda phi, psi: iff(phi, psi))
def _equal_elim(b, phi, psi, prem):
    return b.use("lemma-floor-intro-iff←", iff(phi, psi), prem=prem)


@theorem("eq-refl", "MGc", stmt=lambda phi: eqdef(phi, phi))
def _eq_refl(b, phi):
    s1 = b.use("sim-refl", phi)
    return b.use("lemma-floor-intro-iff→", iff(phi, phi), prem=(s1,))


@derived("eq-symm", "MGc",
         prem=lambda phi, psi: (eqdef(phi, psi),),
         stmt=lambda phi, psi: eqdef(psi, phi))
def _eq_symm(b, phi, psi, prem):
    s1 = b.use("Gamma-equal-iff-dnd←", phi, psi, prem=prem)
    s2 = b.use("sim-symm", phi, psi, prem=(s1,))
    return b.use("Gamma-equal-iff-dnd→", psi, phi, prem=(s2,))


@derived("eq-trans", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi), eqdef(psi, chi)),
         stmt=lambda phi, psi, chi: eqdef(phi, chi))
def _eq_trans(b, phi, psi, chi, prem):
    s1 = b.use("Gamma-equal-iff-dnd←", phi, psi, prem=(prem[0],))
    s2 = b.use("Gamma-equal-iff-dnd←", psi, chi, prem=(prem[1],))
    s3 = b.use("sim-trans", phi, psi, chi, prem=(s1, s2))
    return b.use("Gamma-equal-iff-dnd→", phi, chi, prem=(s3,))


def _through_floor(b, phi, psi, prem, cong, left, right):
    # unfloor the equality, run the equivalence congruence, refloor
    s1 = b.use("Gamma-equal-iff-dnd←", phi, psi, prem=prem)
    s2 = cong(s1)
    return b.use("Gamma-equal-iff-dnd→", left, right, prem=(s2,))


@derived("lemma-eq-cong-not", "MGc",
         prem=lambda phi, psi: (eqdef(phi, psi),),
         stmt=lambda phi, psi: eqdef(Not(phi), Not(psi)))
def _eq_cong_not(b, phi, psi, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("Gamma-dnd-cong-neg", phi, psi, prem=(s,)),
        Not(phi), Not(psi))


@derived("lemma-eq-cong-or-1", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi),),
         stmt=lambda phi, psi, chi: eqdef(Or(phi, chi), Or(psi, chi)))
def _eq_cong_or_1(b, phi, psi, chi, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("sim-pairs-or-left", phi, psi, chi, prem=(s,)),
        Or(phi, chi), Or(psi, chi))


@derived("lemma-eq-cong-or-2", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi),),
         stmt=lambda phi, psi, chi: eqdef(Or(chi, phi), Or(chi, psi)))
def _eq_cong_or_2(b, phi, psi, chi, prem):
    """The premise row displays the right operand equal to itself in
    the source."""
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("sim-pairs-or-right", phi, psi, chi, prem=(s,)),
        Or(chi, phi), Or(chi, psi))


@derived("lemma-eq-cong-and-1", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi),),
         stmt=lambda phi, psi, chi: eqdef(And(phi, chi), And(psi, chi)))
def _eq_cong_and_1(b, phi, psi, chi, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("sim-pairs-and-left", phi, psi, chi, prem=(s,)),
        And(phi, chi), And(psi, chi))


@derived("lemma-eq-cong-and-2", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi),),
         stmt=lambda phi, psi, chi: eqdef(And(chi, phi), And(chi, psi)))
def _eq_cong_and_2(b, phi, psi, chi, prem):
    """The premise row displays the right operand equal to itself in
    the source."""
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("sim-pairs-and-right", phi, psi, chi, prem=(s,)),
        And(chi, phi), And(chi, psi))


@derived("lemma-eq-cong-imp-1", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi),),
         stmt=lambda phi, psi, chi: eqdef(Implies(phi, chi),
                                          Implies(psi, chi)))
def _eq_cong_imp_1(b, phi, psi, chi, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("sim-pairs-to-left", phi, psi, chi, prem=(s,)),
        Implies(phi, chi), Implies(psi, chi))


@derived("lemma-eq-cong-imp-2", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi),),
         stmt=lambda phi, psi, chi: eqdef(Implies(chi, phi),
                                          Implies(chi, psi)))
def _eq_cong_imp_2(b, phi, psi, chi, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("sim-pairs-to-right", phi, psi, chi, prem=(s,)),
        Implies(chi, phi), Implies(chi, psi))


@derived("lemma-eq-cong-forall", "MGc",
         prem=lambda phi, psi, x: (eqdef(phi, psi),),
         stmt=lambda phi, psi, x: eqdef(Forall(x, phi), Forall(x, psi)))
def _eq_cong_forall(b, phi, psi, x, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("vp-ra-psi-forall-vp-dnd-forall-psi-M",
                        phi, psi, x, prem=(s,)),
        Forall(x, phi), Forall(x, psi))


@derived("lemma-eq-cong-exists", "MGc",
         prem=lambda phi, psi, x: (eqdef(phi, psi),),
         stmt=lambda phi, psi, x: eqdef(Exists(x, phi), Exists(x, psi)))
def _eq_cong_exists(b, phi, psi, x, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("vp-ra-psi-exists-vp-dnd-exists-psi-M",
                        phi, psi, x, prem=(s,)),
        Exists(x, phi), Exists(x, psi))


@derived("lemma-eq-cong-app-1", "MGc",
         prem=lambda phi, psi, chi: (eqdef(phi, psi),),
         stmt=lambda phi, psi, chi: eqdef(App(phi, chi), App(psi, chi)))
def _eq_cong_app_1(b, phi, psi, chi, prem):
    return _through_floor(
        b, phi, psi, prem,
        lambda s: b.use("rule-iff-compat-in-app-left", phi, psi, chi,
                        prem=(s,)),
        App(phi, chi), App(psi, chi))


@derived("lemma-eq-cong-app-2", "MGc",
         prem=lambda phi, chi, gamma: (eqdef(chi, gamma),),
         stmt=lambda phi, chi, gamma: eqdef(App(phi, chi),
                                            App(phi, gamma)))
def _eq_cong_app_2(b, phi, chi, gamma, prem):
    return _through_floor(
        b, chi, gamma, prem,
        lambda s: b.use("rule-iff-compat-in-app-right", phi, chi, gamma,
                        prem=(s,)),
        App(phi, chi), App(phi, gamma))


@derived("xeqytovppsi-imp-xeqy-vpchitopsichi", "MGc",
         prem=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)), Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)),
                     Implies(App(phi, chi), App(psi, chi)))))
def _eq_guard_app_left(b, phi, psi, chi, x, y, prem):
    # the equality guard is the floored equivalence of the variables
    return b.use("floordelta-imp-vpchitopsichi", phi, psi, chi,
                 iff(EVar(x), EVar(y)), prem=prem)


@derived("xeqytovpdndpsi-imp-xeqy-vpchidndpsichi", "MGc",
         prem=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)), iff(phi, psi)),),
         stmt=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)),
                     iff(App(phi, chi), App(psi, chi)))))
def _eq_guard_app_left_iff(b, phi, psi, chi, x, y, prem):
    return b.use("floordelta-imp-vpchidndpsichi", phi, psi, chi,
                 iff(EVar(x), EVar(y)), prem=prem)


@derived("xeqytovppsi-imp-xeqy-chivptochipsi", "MGc",
         prem=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)), Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)),
                     Implies(App(chi, phi), App(chi, psi)))))
def _eq_guard_app_right(b, phi, psi, chi, x, y, prem):
    return b.use("floordelta-imp-chivptochipsi", phi, psi, chi,
                 iff(EVar(x), EVar(y)), prem=prem)


@derived("xeqytovpdndpsi-imp-xeqy-chivpndchipsi", "MGc",
         prem=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)), iff(phi, psi)),),
         stmt=lambda phi, psi, chi, x, y: (
             Implies(eqdef(EVar(x), EVar(y)),
                     iff(App(chi, phi), App(chi, psi)))))
def _eq_guard_app_right_iff(b, phi, psi, chi, x, y, prem):
    return b.use("floordelta-imp-chivpndchipsi", phi, psi, chi,
                 iff(EVar(x), EVar(y)), prem=prem)

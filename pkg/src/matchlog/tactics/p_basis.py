"""Hilbert-style basis: the implicational calculus rebuilt from two
axioms plus modus ponens.

Everything the sequent-flavored core gets from its structural rules is
reproved here from axiom-1 and axiom-2. Entry labels carry a trailing
prime to keep them apart from their structural twins; the two families
are never mixed inside one proof. The only kernel rules available are
modus ponens, the existential rule and framing, so even syllogisms go
through the derived entry.
"""

from __future__ import annotations

from ..subst import free_for, subf
from ..syntax import And, BOT, Exists, Forall, Implies, Not, Or
from .catalog import derived, theorem


def _syl(b, s1, s2):
    # chain s1: a -> m and s2: m -> c through the derived syllogism
    p = b.conclusion(s1)
    q = b.conclusion(s2)
    return b.use("syllogism'", p.left, p.right, q.right, prem=(s1, s2))


@derived("syllogism'", "P",
         prem=lambda phi, psi, chi: (Implies(phi, psi),
                                     Implies(psi, chi)),
         stmt=lambda phi, psi, chi: Implies(phi, chi))
def _syllogism(b, phi, psi, chi, prem):
    s1 = b.axiom("axiom-2", phi=phi, psi=psi, chi=chi)
    s2 = b.axiom("axiom-1", phi=Implies(psi, chi), psi=phi)
    s4 = b.mp(prem[1], s2)
    s5 = b.mp(s4, s1)
    return b.mp(prem[0], s5)


@derived("expansion'", "P",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(Or(chi, phi), Or(chi, psi)))
def _expansion(b, phi, psi, chi, prem):
    s2 = b.axiom("axiom-1", phi=Implies(phi, psi), psi=Not(chi))
    s3 = b.mp(prem[0], s2)
    s4 = b.axiom("axiom-2", phi=Not(chi), psi=phi, chi=psi)
    s5 = b.mp(s3, s4)
    s6 = b.axiom("axiom-or-1", phi=chi, psi=phi)
    s7 = _syl(b, s6, s5)
    s8 = b.axiom("axiom-or-2", phi=chi, psi=psi)
    return _syl(b, s7, s8)


@derived("ax2-rule'", "P",
         prem=lambda phi, psi, chi: (Implies(phi, Implies(psi, chi)),
                                     Implies(phi, psi)),
         stmt=lambda phi, psi, chi: Implies(phi, chi))
def _ax2_rule(b, phi, psi, chi, prem):
    s1 = b.axiom("axiom-2", phi=phi, psi=psi, chi=chi)
    s3 = b.mp(prem[0], s1)
    return b.mp(prem[1], s3)


@derived("premise-comm'", "P",
         prem=lambda phi, psi, chi: (Implies(phi, Implies(psi, chi)),),
         stmt=lambda phi, psi, chi: Implies(psi, Implies(phi, chi)))
def _premise_comm(b, phi, psi, chi, prem):
    s1 = b.axiom("axiom-2", phi=phi, psi=psi, chi=chi)
    s3 = b.mp(prem[0], s1)
    lifted = Implies(Implies(phi, psi), Implies(phi, chi))
    s4 = b.axiom("axiom-2", phi=psi, psi=Implies(phi, psi),
                 chi=Implies(phi, chi))
    s5 = b.axiom("axiom-1", phi=lifted, psi=psi)
    s6 = b.mp(s3, s5)
    s7 = b.mp(s6, s4)
    s8 = b.axiom("axiom-1", phi=psi, psi=phi)
    return b.mp(s8, s7)


@derived("extra-premise-alt'", "P",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(Implies(chi, phi),
                                            Implies(chi, psi)))
def _extra_premise_alt(b, phi, psi, chi, prem):
    s2 = b.axiom("axiom-1", phi=Implies(phi, psi), psi=chi)
    s3 = b.mp(prem[0], s2)
    s4 = b.axiom("axiom-2", phi=chi, psi=phi, chi=psi)
    return b.mp(s3, s4)


@derived("imp-trans-alt'", "P",
         prem=lambda phi, psi, chi, gamma: (
             Implies(phi, Implies(psi, chi)), Implies(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: Implies(phi,
                                                   Implies(psi, gamma)))
def _imp_trans_alt(b, phi, psi, chi, gamma, prem):
    """Step twelve is two detachments: the lifted chain passes through
    the distribution instance before the final one."""
    s2 = b.axiom("axiom-2", phi=phi, psi=psi, chi=chi)
    s3 = b.mp(prem[0], s2)
    s5 = b.axiom("axiom-1", phi=Implies(chi, gamma), psi=phi)
    s6 = b.mp(prem[1], s5)
    s7 = b.axiom("axiom-2", phi=phi, psi=chi, chi=gamma)
    s8 = b.mp(s6, s7)
    s9 = _syl(b, s3, s8)
    lifted = Implies(Implies(phi, psi), Implies(phi, gamma))
    s10 = b.axiom("axiom-2", phi=psi, psi=Implies(phi, psi),
                  chi=Implies(phi, gamma))
    s11 = b.axiom("axiom-1", phi=lifted, psi=psi)
    s12 = b.mp(s9, s11)
    s12b = b.mp(s12, s10)
    s13 = b.axiom("axiom-1", phi=psi, psi=phi)
    s14 = b.mp(s13, s12b)
    return b.use("premise-comm'", psi, phi, gamma, prem=(s14,))


@theorem("imp-reflexivity'", "P", stmt=lambda phi: Implies(phi, phi))
def _imp_refl(b, phi):
    s1 = b.axiom("axiom-2", phi=phi, psi=Implies(phi, phi), chi=phi)
    s2 = b.axiom("axiom-1", phi=phi, psi=Implies(phi, phi))
    s3 = b.mp(s2, s1)
    s4 = b.axiom("axiom-1", phi=phi, psi=phi)
    return b.mp(s4, s3)


@theorem("lem'", "P", stmt=lambda phi: Or(phi, Not(phi)))
def _lem(b, phi):
    s1 = b.use("imp-reflexivity'", Not(phi))
    s2 = b.axiom("axiom-or-2", phi=phi, psi=Not(phi))
    return b.mp(s1, s2)


@theorem("imp-trans'", "P",
         stmt=lambda phi, psi, chi: Implies(
             Implies(phi, psi),
             Implies(Implies(psi, chi), Implies(phi, chi))))
def _imp_trans(b, phi, psi, chi):
    s1 = b.axiom("axiom-2", phi=phi, psi=psi, chi=chi)
    s2 = b.axiom("axiom-1", phi=Implies(psi, chi), psi=phi)
    s3 = _syl(b, s2, s1)
    return b.use("premise-comm'", Implies(psi, chi), Implies(phi, psi),
                 Implies(phi, chi), prem=(s3,))


@derived("extra-premise'", "P",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(Implies(psi, chi),
                                            Implies(phi, chi)))
def _extra_premise(b, phi, psi, chi, prem):
    s1 = b.use("imp-trans'", phi, psi, chi)
    return b.mp(prem[0], s1)


@theorem("rec-ax3'", "P",
         stmt=lambda phi, psi: Implies(Implies(phi, psi),
                                       Implies(Not(psi), Not(phi))))
def _rec_ax3(b, phi, psi):
    s1 = b.use("imp-trans'", phi, psi, BOT)
    s2 = b.axiom("axiom-not-2", phi=phi)
    s3 = b.use("imp-trans-alt'", Implies(phi, psi), Implies(psi, BOT),
               Implies(phi, BOT), Not(phi), prem=(s1, s2))
    s4 = b.axiom("axiom-not-1", phi=psi)
    s5 = b.use("extra-premise'", Not(psi), Implies(psi, BOT), Not(phi),
               prem=(s4,))
    return _syl(b, s3, s5)


@derived("rec-ax3-rule'", "P",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(Not(psi), Not(phi)))
def _rec_ax3_rule(b, phi, psi, prem):
    s2 = b.use("rec-ax3'", phi, psi)
    return b.mp(prem[0], s2)


@theorem("exfalso'", "P", stmt=lambda phi: Implies(BOT, phi))
def _exfalso(b, phi):
    """The closing detachment is step nine; the listing reuses an
    earlier number for it."""
    s1 = b.axiom("axiom-3", phi=phi)
    s2 = b.use("extra-premise-alt'", Not(Not(phi)), phi, BOT,
               prem=(s1,))
    s3 = b.axiom("axiom-1", phi=BOT, psi=Implies(phi, BOT))
    s4 = b.axiom("axiom-not-2", phi=Implies(phi, BOT))
    s5 = _syl(b, s3, s4)
    s6 = b.axiom("axiom-not-1", phi=phi)
    s7 = b.use("rec-ax3-rule'", Not(phi), Implies(phi, BOT),
               prem=(s6,))
    s8 = _syl(b, s5, s7)
    return b.mp(s8, s2)


@theorem("vp-to-vp-to-psi-to-psi'", "P",
         stmt=lambda phi, psi: Implies(phi,
                                       Implies(Implies(phi, psi), psi)))
def _assertion(b, phi, psi):
    s1 = b.use("imp-reflexivity'", Implies(phi, psi))
    return b.use("premise-comm'", Implies(phi, psi), phi, psi,
                 prem=(s1,))


@theorem("dni-pg'", "P",
         stmt=lambda phi: Implies(phi, Not(Not(phi))))
def _dni(b, phi):
    s1 = b.use("vp-to-vp-to-psi-to-psi'", phi, BOT)
    s2 = b.axiom("axiom-not-2", phi=Implies(phi, BOT))
    s3 = _syl(b, s1, s2)
    s4 = b.axiom("axiom-not-1", phi=phi)
    s5 = b.use("rec-ax3-rule'", Not(phi), Implies(phi, BOT),
               prem=(s4,))
    return _syl(b, s3, s5)


@theorem("ax3'", "P",
         stmt=lambda phi, psi: Implies(Implies(Not(phi), Not(psi)),
                                       Implies(psi, phi)))
def _ax3(b, phi, psi):
    s1 = b.use("rec-ax3'", Not(phi), Not(psi))
    s2 = b.use("dni-pg'", psi)
    s3 = b.use("extra-premise'", psi, Not(Not(psi)), Not(Not(phi)),
               prem=(s2,))
    s4 = _syl(b, s1, s3)
    s5 = b.axiom("axiom-3", phi=phi)
    return b.use("imp-trans-alt'", Implies(Not(phi), Not(psi)), psi,
                 Not(Not(phi)), phi, prem=(s4, s5))


@theorem("weak-disj-1'", "P",
         stmt=lambda phi, psi: Implies(phi, Or(phi, psi)))
def _weak_disj_1(b, phi, psi):
    s1 = b.use("dni-pg'", phi)
    s2 = b.axiom("axiom-not-1", phi=Not(phi))
    s3 = _syl(b, s1, s2)
    s4 = b.use("exfalso'", psi)
    s5 = b.use("imp-trans-alt'", phi, Not(phi), BOT, psi,
               prem=(s3, s4))
    s6 = b.axiom("axiom-or-2", phi=phi, psi=psi)
    return _syl(b, s5, s6)


@theorem("weak-disj-2'", "P",
         stmt=lambda phi, psi: Implies(psi, Or(phi, psi)))
def _weak_disj_2(b, phi, psi):
    """The closing syllogism feeds on steps one and two, not on
    itself."""
    s1 = b.axiom("axiom-1", phi=psi, psi=Not(phi))
    s2 = b.axiom("axiom-or-2", phi=phi, psi=psi)
    return _syl(b, s1, s2)


@theorem("weak-conj-1'", "P",
         stmt=lambda phi, psi: Implies(And(phi, psi), phi))
def _weak_conj_1(b, phi, psi):
    s1 = b.use("weak-disj-1'", Not(phi), Not(psi))
    s2 = b.use("rec-ax3'", Not(phi), Or(Not(phi), Not(psi)))
    s3 = b.mp(s1, s2)
    s4 = b.axiom("axiom-3", phi=phi)
    s5 = _syl(b, s3, s4)
    s6 = b.axiom("axiom-and-1", phi=phi, psi=psi)
    return _syl(b, s6, s5)


@theorem("weak-conj-2'", "P",
         stmt=lambda phi, psi: Implies(And(phi, psi), psi))
def _weak_conj_2(b, phi, psi):
    s1 = b.use("weak-disj-2'", Not(phi), Not(psi))
    s2 = b.use("rec-ax3'", Not(psi), Or(Not(phi), Not(psi)))
    s3 = b.mp(s1, s2)
    s4 = b.axiom("axiom-3", phi=psi)
    s5 = _syl(b, s3, s4)
    s6 = b.axiom("axiom-and-1", phi=phi, psi=psi)
    return _syl(b, s6, s5)


@theorem("perm-disj'", "P",
         stmt=lambda phi, psi: Implies(Or(phi, psi), Or(psi, phi)))
def _perm_disj(b, phi, psi):
    s1 = b.use("rec-ax3'", Not(phi), psi)
    s2 = b.axiom("axiom-3", phi=phi)
    s3 = b.use("imp-trans-alt'", Implies(Not(phi), psi), Not(psi),
               Not(Not(phi)), phi, prem=(s1, s2))
    s4 = b.axiom("axiom-or-1", phi=phi, psi=psi)
    s5 = _syl(b, s4, s3)
    s6 = b.axiom("axiom-or-2", phi=psi, psi=phi)
    return _syl(b, s5, s6)


@theorem("perm-conj'", "P",
         stmt=lambda phi, psi: Implies(And(phi, psi), And(psi, phi)))
def _perm_conj(b, phi, psi):
    flipped = Or(Not(psi), Not(phi))
    straight = Or(Not(phi), Not(psi))
    s1 = b.use("rec-ax3'", flipped, straight)
    s2 = b.use("perm-disj'", Not(psi), Not(phi))
    s3 = b.mp(s2, s1)
    s4 = b.axiom("axiom-and-1", phi=phi, psi=psi)
    s5 = _syl(b, s4, s3)
    s6 = b.axiom("axiom-and-2", phi=psi, psi=phi)
    return _syl(b, s5, s6)


@derived("rule-negnegvp-premise-vp-conc'", "P",
         prem=lambda phi, psi: (Implies(Not(Not(phi)), psi),),
         stmt=lambda phi, psi: Implies(phi, psi))
def _unwrap_dni(b, phi, psi, prem):
    """The syllogism takes the double negation introduction as its
    first leg."""
    s2 = b.use("dni-pg'", phi)
    return _syl(b, s2, prem[0])


@derived("contra'", "P",
         prem=lambda phi, psi: (Implies(Not(psi),
                                        Not(Implies(phi, phi))),),
         stmt=lambda phi, psi: psi)
def _contra(b, phi, psi, prem):
    s2 = b.use("ax3'", psi, Implies(phi, phi))
    s3 = b.mp(prem[0], s2)
    s4 = b.use("imp-reflexivity'", phi)
    return b.mp(s4, s3)


@derived("importation'", "P",
         prem=lambda phi, psi, chi: (Implies(phi, Implies(psi, chi)),),
         stmt=lambda phi, psi, chi: Implies(And(phi, psi), chi))
def _importation(b, phi, psi, chi, prem):
    s2 = b.use("weak-conj-1'", phi, psi)
    s3 = b.use("syllogism'", And(phi, psi), phi, Implies(psi, chi),
               prem=(s2, prem[0]))
    s4 = b.use("weak-conj-2'", phi, psi)
    return b.use("ax2-rule'", And(phi, psi), psi, chi, prem=(s3, s4))


@theorem("ex-falso-impl'", "P",
         stmt=lambda phi, psi: Implies(phi, Implies(Not(phi), psi)))
def _ex_falso_impl(b, phi, psi):
    s1 = b.axiom("axiom-not-1", phi=phi)
    s2 = b.use("extra-premise'", Not(phi), Implies(phi, BOT), psi,
               prem=(s1,))
    s3 = b.use("extra-premise-alt'", Implies(Implies(phi, BOT), psi),
               Implies(Not(phi), psi), phi, prem=(s2,))
    s4 = b.use("exfalso'", psi)
    s5 = b.use("extra-premise-alt'", BOT, psi, Implies(phi, BOT),
               prem=(s4,))
    s6 = b.use("extra-premise-alt'", Implies(Implies(phi, BOT), BOT),
               Implies(Implies(phi, BOT), psi), phi, prem=(s5,))
    s7 = b.use("vp-to-vp-to-psi-to-psi'", phi, BOT)
    s8 = b.mp(s7, s6)
    return b.mp(s8, s3)


@theorem("contr-disj'", "P",
         stmt=lambda phi: Implies(Or(phi, phi), phi))
def _contr_disj(b, phi):
    """Step three feeds the projection pair in nested-first order."""
    pp = Implies(Not(phi), phi)
    wedge = And(pp, Not(phi))
    refl = Implies(phi, phi)
    s1 = b.use("weak-conj-2'", pp, Not(phi))
    s2 = b.use("weak-conj-1'", pp, Not(phi))
    s3 = b.use("ax2-rule'", wedge, Not(phi), phi, prem=(s2, s1))
    s4 = b.use("ex-falso-impl'", phi, Not(refl))
    s5 = b.axiom("axiom-1", phi=Implies(phi, Implies(Not(phi),
                                                     Not(refl))),
                 psi=wedge)
    s6 = b.mp(s4, s5)
    s7 = b.use("ax2-rule'", wedge, phi, Implies(Not(phi), Not(refl)),
               prem=(s6, s3))
    s8 = b.use("ax2-rule'", wedge, Not(phi), Not(refl), prem=(s7, s1))
    packed = Or(Not(pp), Not(Not(phi)))
    s9 = b.axiom("axiom-and-2", phi=pp, psi=Not(phi))
    s10 = b.use("syllogism'", Not(packed), wedge, Not(refl),
                prem=(s9, s8))
    s11 = b.use("contra'", phi, packed, prem=(s10,))
    s12 = b.axiom("axiom-or-1", phi=Not(pp), psi=Not(Not(phi)))
    s13 = b.mp(s11, s12)
    s14 = b.use("dni-pg'", pp)
    s15 = _syl(b, s14, s13)
    s16 = b.axiom("axiom-3", phi=phi)
    s17 = _syl(b, s15, s16)
    s18 = b.axiom("axiom-or-1", phi=phi, psi=phi)
    return _syl(b, s18, s17)


@theorem("contr-conj'", "P",
         stmt=lambda phi: Implies(phi, And(phi, phi)))
def _contr_conj(b, phi):
    s1 = b.use("contr-disj'", Not(phi))
    s2 = b.use("rec-ax3'", Or(Not(phi), Not(phi)), Not(phi))
    s3 = b.mp(s1, s2)
    s4 = b.use("dni-pg'", phi)
    s5 = _syl(b, s4, s3)
    s6 = b.axiom("axiom-and-2", phi=phi, psi=phi)
    return _syl(b, s5, s6)


@theorem("and-intro'", "P",
         stmt=lambda phi, psi: Implies(phi,
                                       Implies(psi, And(phi, psi))))
def _and_intro(b, phi, psi):
    packed = Or(Not(phi), Not(psi))
    s1 = b.axiom("axiom-or-1", phi=Not(phi), psi=Not(psi))
    s2 = b.use("dni-pg'", phi)
    s3 = b.use("extra-premise'", phi, Not(Not(phi)), Not(psi),
               prem=(s2,))
    s4 = _syl(b, s1, s3)
    s5 = b.use("premise-comm'", packed, phi, Not(psi), prem=(s4,))
    s6 = b.use("rec-ax3'", packed, Not(psi))
    s7 = _syl(b, s5, s6)
    s8 = b.use("dni-pg'", psi)
    s9 = b.use("extra-premise'", psi, Not(Not(psi)), Not(packed),
               prem=(s8,))
    s10 = _syl(b, s7, s9)
    s11 = b.axiom("axiom-and-2", phi=phi, psi=psi)
    return b.use("imp-trans-alt'", phi, psi, Not(packed),
                 And(phi, psi), prem=(s10, s11))


@derived("exportation'", "P",
         prem=lambda phi, psi, chi: (Implies(And(phi, psi), chi),),
         stmt=lambda phi, psi, chi: Implies(phi, Implies(psi, chi)))
def _exportation(b, phi, psi, chi, prem):
    """The chaining step takes the pairing theorem as its nested
    premise and the assumption as the closing leg."""
    s2 = b.use("and-intro'", phi, psi)
    return b.use("imp-trans-alt'", phi, psi, And(phi, psi), chi,
                 prem=(s2, prem[0]))


@theorem("forall-x-subf'", "P",
         stmt=lambda phi, x, y: Implies(Forall(x, phi),
                                        subf(x, y, phi)),
         conds=(("x free for y in phi",
                 lambda phi, x, y: free_for(x, y, phi)),))
def _forall_inst(b, phi, x, y):
    """Substitution distributes over negation here, so the two
    spellings of the double negation are the same pattern and the
    recursion-unfolding step has nothing left to prove."""
    nphi = Not(phi)
    target = subf(x, y, phi)
    s1 = b.axiom("exists-quantifier", phi=nphi, x=x, y=y)
    s2 = b.use("rec-ax3-rule'", subf(x, y, nphi), Exists(x, nphi),
               prem=(s1,))
    s3 = b.axiom("axiom-forall-1", phi=phi, x=x)
    s4 = _syl(b, s3, s2)
    s7 = b.axiom("axiom-3", phi=target)
    return _syl(b, s4, s7)


@derived("forall-x-rule'", "P",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(phi, Forall(x, psi)),
         conds=(("x not free in phi",
                 lambda phi, psi, x: x not in phi.fve),))
def _forall_rule(b, phi, psi, x, prem):
    """The closing syllogism feeds on steps five and six."""
    s2 = b.use("rec-ax3-rule'", phi, psi, prem=prem)
    s3 = b.rule("exists-rule", s2, x=x)
    s4 = b.use("rec-ax3-rule'", Exists(x, Not(psi)), Not(phi),
               prem=(s3,))
    s5 = b.use("rule-negnegvp-premise-vp-conc'", phi,
               Not(Exists(x, Not(psi))), prem=(s4,))
    s6 = b.axiom("axiom-forall-2", phi=psi, x=x)
    return _syl(b, s5, s6)

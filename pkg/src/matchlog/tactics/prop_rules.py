"""Derived propositional rules: judgment-level closure properties.

Each entry consumes premise judgments already on the builder and leaves
the derived conclusion as the last cited step. Premise shapes are
declared next to the statement so misuse fails at the entry boundary.
"""

from __future__ import annotations

from ..syntax import And, Implies, Not, Or, iff
from .catalog import derived

# -- basic closure under the structural axioms -------------------------------


@derived("vp-implies-psi-to-vp", "Gc",
         prem=lambda phi, psi: (phi,),
         stmt=lambda phi, psi: Implies(psi, phi))
def _const_antecedent(b, phi, psi, prem):
    s = b.use("vp-to-psi-to-vp", phi, psi)
    return b.mp(prem[0], s)


@derived("Gamma-vp-psi-vp-si-psi→", "Gc",
         prem=lambda phi, psi: (phi, psi),
         stmt=lambda phi, psi: And(phi, psi))
def _conj_intro(b, phi, psi, prem):
    s3 = b.use("vp-to-vp", And(phi, psi))
    s4 = b.rule("exportation", s3)
    s5 = b.mp(prem[0], s4)
    return b.mp(prem[1], s5)


@derived("Gamma-vp-psi-vp-si-psi←-l", "Gc",
         prem=lambda phi, psi: (And(phi, psi),),
         stmt=lambda phi, psi: phi)
def _conj_elim_l(b, phi, psi, prem):
    s2 = b.axiom("weakening-2", phi=phi, psi=psi)
    return b.mp(prem[0], s2)


@derived("Gamma-vp-psi-vp-si-psi←-r", "Gc",
         prem=lambda phi, psi: (And(phi, psi),),
         stmt=lambda phi, psi: psi)
def _conj_elim_r(b, phi, psi, prem):
    s5 = b.use("weak-si-2", phi, psi)
    return b.mp(prem[0], s5)


@derived("expansion-2", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(Or(phi, chi), Or(psi, chi)))
def _expansion_right(b, phi, psi, chi, prem):
    s2 = b.rule("expansion", prem[0], chi=chi)
    s3 = b.axiom("permutation-1", phi=phi, psi=chi)
    s4 = b.syl(s3, s2)
    s5 = b.axiom("permutation-1", phi=chi, psi=psi)
    return b.syl(s4, s5)


@derived("vp-psi-vp-to-psi-implies two-l", "Gc",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(Or(phi, psi), psi))
def _absorb_or_l(b, phi, psi, prem):
    s2 = b.use("expansion-2", phi, psi, psi, prem=(prem[0],))
    s3 = b.axiom("contraction-1", phi=psi)
    return b.syl(s2, s3)


@derived("vp-psi-vp-to-psi-implies two-r", "Gc",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(Or(psi, phi), psi))
def _absorb_or_r(b, phi, psi, prem):
    s2 = b.rule("expansion", prem[0], chi=psi)
    s3 = b.axiom("contraction-1", phi=psi)
    return b.syl(s2, s3)


@derived("vp-to-psi-imp-vp-si-chi-to-psi-l", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(And(phi, chi), psi))
def _weaken_conj_l(b, phi, psi, chi, prem):
    s2 = b.axiom("weakening-2", phi=phi, psi=chi)
    return b.syl(s2, prem[0])


@derived("vp-to-psi-imp-vp-si-chi-to-psi-r", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(And(chi, phi), psi))
def _weaken_conj_r(b, phi, psi, chi, prem):
    s2 = b.use("weak-si-2", chi, phi)
    return b.syl(s2, prem[0])


@derived("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi), Implies(phi, chi)),
         stmt=lambda phi, psi, chi: Implies(phi, And(psi, chi)))
def _conj_concl_intro(b, phi, psi, chi, prem):
    s1 = b.use("vp-to-vp", And(psi, chi))
    s2 = b.rule("exportation", s1)
    s4 = b.syl(prem[0], s2)
    s5 = b.axiom("permutation-2", phi=chi, psi=phi)
    s6 = b.rule("importation", s4)
    s7 = b.syl(s5, s6)
    s9 = b.rule("exportation", s7)
    s10 = b.syl(prem[1], s9)
    s11 = b.axiom("contraction-2", phi=phi)
    s12 = b.rule("importation", s10)
    return b.syl(s11, s12)


@derived("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi←-l", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, And(psi, chi)),),
         stmt=lambda phi, psi, chi: Implies(phi, psi))
def _conj_concl_elim_l(b, phi, psi, chi, prem):
    s2 = b.axiom("weakening-2", phi=psi, psi=chi)
    return b.syl(prem[0], s2)


@derived("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi←-r", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, And(psi, chi)),),
         stmt=lambda phi, psi, chi: Implies(phi, chi))
def _conj_concl_elim_r(b, phi, psi, chi, prem):
    s5 = b.use("weak-si-2", psi, chi)
    return b.syl(prem[0], s5)


@derived("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, chi), Implies(psi, chi)),
         stmt=lambda phi, psi, chi: Implies(Or(phi, psi), chi))
def _disj_elim(b, phi, psi, chi, prem):
    s2 = b.use("vp-psi-vp-to-psi-implies two-l", phi, chi, prem=(prem[0],))
    s4 = b.rule("expansion", prem[1], chi=phi)
    return b.syl(s4, s2)


@derived("Gamma-vp-to-psi-imp-Gamma-chi-to-vp-chi-to-psi", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(Implies(chi, phi),
                                            Implies(chi, psi)))
def _mono_consequent(b, phi, psi, chi, prem):
    s1 = b.use("MP-axiom-1", chi, phi)
    s3 = b.syl(s1, prem[0])
    return b.rule("exportation", s3)


@derived("psi-to-vp-chi-to-gamma-vp-si-chi-to-psi-si-gamma", "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi, psi),
                                            Implies(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: Implies(And(phi, chi),
                                                   And(psi, gamma)))
def _conj_pair(b, phi, psi, chi, gamma, prem):
    s3 = b.use("vp-to-psi-imp-vp-si-chi-to-psi-l", phi, psi, chi,
               prem=(prem[0],))
    s4 = b.use("vp-to-psi-imp-vp-si-chi-to-psi-r", chi, gamma, phi,
               prem=(prem[1],))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 And(phi, chi), psi, gamma, prem=(s3, s4))


@derived("vp-to-psi-and-chi-to-gamma-implies-sau", "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi, psi),
                                            Implies(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: Implies(Or(phi, chi),
                                                   Or(psi, gamma)))
def _disj_pair(b, phi, psi, chi, gamma, prem):
    s3 = b.axiom("weakening-1", phi=psi, psi=gamma)
    s4 = b.syl(prem[0], s3)
    s5 = b.use("weak-sau-2", psi, gamma)
    s6 = b.syl(prem[1], s5)
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 phi, chi, Or(psi, gamma), prem=(s4, s6))


@derived("vp-si-psi-implies-chi-perm", "Gc",
         prem=lambda phi, psi, chi: (Implies(And(phi, psi), chi),),
         stmt=lambda phi, psi, chi: Implies(And(psi, phi), chi))
def _antecedent_swap(b, phi, psi, chi, prem):
    s2 = b.axiom("permutation-2", phi=psi, psi=phi)
    return b.syl(s2, prem[0])


@derived("vp-implies-psi-implies-chi-perm", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, Implies(psi, chi)),),
         stmt=lambda phi, psi, chi: Implies(And(psi, phi), chi))
def _import_swap(b, phi, psi, chi, prem):
    s2 = b.rule("importation", prem[0])
    return b.use("vp-si-psi-implies-chi-perm", phi, psi, chi, prem=(s2,))


@derived("vp-to-psi-to-chi--psi-to-vp-to-chi", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, Implies(psi, chi)),),
         stmt=lambda phi, psi, chi: Implies(psi, Implies(phi, chi)))
def _nested_swap(b, phi, psi, chi, prem):
    s2 = b.use("vp-implies-psi-implies-chi-perm", phi, psi, chi,
               prem=(prem[0],))
    return b.rule("exportation", s2)


@derived("Gamma-vp-to-psi-imp-Gamma-vp-si-chi-to-psi-si-chi-l", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(And(phi, chi), And(psi, chi)))
def _conj_mono_l(b, phi, psi, chi, prem):
    s2 = b.axiom("weakening-2", phi=phi, psi=chi)
    s3 = b.syl(s2, prem[0])
    s4 = b.use("weak-si-2", phi, chi)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 And(phi, chi), psi, chi, prem=(s3, s4))


@derived("Gamma-vp-to-psi-imp-Gamma-vp-si-chi-to-psi-si-chi-r", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(And(chi, phi), And(chi, psi)))
def _conj_mono_r(b, phi, psi, chi, prem):
    s2 = b.use("weak-si-2", chi, phi)
    s3 = b.syl(s2, prem[0])
    s4 = b.axiom("weakening-2", phi=chi, psi=phi)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 And(chi, phi), chi, psi, prem=(s4, s3))


@derived("vp-to-psi-imp-psi-to-chi-tto-vp-to-chi", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),),
         stmt=lambda phi, psi, chi: Implies(Implies(psi, chi),
                                            Implies(phi, chi)))
def _mono_antecedent(b, phi, psi, chi, prem):
    s2 = b.use("vp-to-vp", Implies(psi, chi))
    s3 = b.use("psi-to-vp-chi-to-gamma-vp-si-chi-to-psi-si-gamma",
               phi, psi, Implies(psi, chi), Implies(psi, chi),
               prem=(prem[0], s2))
    s4 = b.use("MP-axiom-2", psi, chi)
    s5 = b.syl(s3, s4)
    s6 = b.use("vp-si-psi-implies-chi-perm", phi, Implies(psi, chi), chi,
               prem=(s5,))
    return b.rule("exportation", s6)


@derived("vp-vp-si-psi-implies-two-l", "Gc",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(phi, And(phi, psi)))
def _self_pair_l(b, phi, psi, prem):
    s1 = b.use("vp-to-vp", phi)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 phi, phi, psi, prem=(s1, prem[0]))


@derived("vp-vp-si-psi-implies-two-r", "Gc",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(phi, And(psi, phi)))
def _self_pair_r(b, phi, psi, prem):
    s2 = b.use("vp-to-vp", phi)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 phi, psi, phi, prem=(prem[0], s2))


@derived("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi", "Gc",
         prem=lambda phi, psi, chi: (Implies(phi, psi),
                                     Implies(phi, Implies(psi, chi))),
         stmt=lambda phi, psi, chi: Implies(phi, chi))
def _pointwise_mp(b, phi, psi, chi, prem):
    s2 = b.use("vp-vp-si-psi-implies-two-l", phi, psi, prem=(prem[0],))
    s4 = b.rule("importation", prem[1])
    return b.syl(s2, s4)


@derived("vp-tto-psi-to-chi-and-chi-togamma-imp-vp-tto-psi-to-gamma", "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi, Implies(psi, chi)),
                                            Implies(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: Implies(phi,
                                                   Implies(psi, gamma)))
def _nested_mono(b, phi, psi, chi, gamma, prem):
    s3 = b.rule("importation", prem[0])
    s4 = b.syl(s3, prem[1])
    return b.rule("exportation", s4)


# -- second layer, built on the distribution theorems ------------------------


@derived("Gamma-vp-to-psi-vp-to-chi-tto-vp-to-psi-to-chi", "Gc",
         prem=lambda phi, psi, chi: (Implies(Implies(phi, psi),
                                             Implies(phi, chi)),),
         stmt=lambda phi, psi, chi: Implies(phi, Implies(psi, chi)))
def _uncurry_left(b, phi, psi, chi, prem):
    s2 = b.rule("importation", prem[0])
    s3 = b.use("vp-si-psi-implies-chi-perm", Implies(phi, psi), phi, chi,
               prem=(s2,))
    s4 = b.use("vp-si-vp-to-psi-chi-implies", phi, psi, chi)
    s5 = b.mp(s3, s4)
    return b.rule("exportation", s5)


@derived("vp-to-psi-to-chi-vp-to-chi-to-gamma-implies-vp-to-psi-to-gamma",
         "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi, Implies(psi, chi)),
                                            Implies(phi,
                                                    Implies(chi, gamma))),
         stmt=lambda phi, psi, chi, gamma: Implies(phi,
                                                   Implies(psi, gamma)))
def _nested_chain(b, phi, psi, chi, gamma, prem):
    s2 = b.use("vp-to-psi-to-chi-to-vp-to-psi-to-vp-to-chi", phi, psi, chi)
    s3 = b.mp(prem[0], s2)
    s5 = b.use("vp-to-psi-to-chi-to-vp-to-psi-to-vp-to-chi", phi, chi, gamma)
    s6 = b.mp(prem[1], s5)
    s7 = b.syl(s3, s6)
    return b.use("Gamma-vp-to-psi-vp-to-chi-tto-vp-to-psi-to-chi",
                 phi, psi, gamma, prem=(s7,))


@derived("psi-to-vp-chi-to-gamma-vp-to-chi-to-psi-to-gamma", "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(psi, phi),
                                            Implies(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: Implies(Implies(phi, chi),
                                                   Implies(psi, gamma)))
def _impl_pair(b, phi, psi, chi, gamma, prem):
    a = And(Implies(phi, chi), psi)
    s2 = b.use("vp-implies-psi-to-vp", Implies(psi, phi), a,
               prem=(prem[0],))
    s3 = b.axiom("weakening-2", phi=Implies(phi, chi), psi=psi)
    s4 = b.use("vp-to-psi-to-chi-vp-to-chi-to-gamma-implies-vp-to-psi-to-gamma",
               a, psi, phi, chi, prem=(s2, s3))
    s5 = b.use("weak-si-2", Implies(phi, chi), psi)
    s6 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               a, psi, chi, prem=(s5, s4))
    s8 = b.use("vp-implies-psi-to-vp", Implies(chi, gamma), a,
               prem=(prem[1],))
    s9 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               a, chi, gamma, prem=(s6, s8))
    return b.rule("exportation", s9)


@derived("vp-to-psi-to-chi-si-vp-to-gamma-to-chi-to-vp-to-psi-sau-gamma-to-chi",
         "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi, Implies(psi, chi)),
                                            Implies(phi,
                                                    Implies(gamma, chi))),
         stmt=lambda phi, psi, chi, gamma: Implies(phi,
                                                   Implies(Or(psi, gamma),
                                                           chi)))
def _nested_disj_elim(b, phi, psi, chi, gamma, prem):
    s2 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", phi, psi, chi,
               prem=(prem[0],))
    s4 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", phi, gamma, chi,
               prem=(prem[1],))
    s5 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               psi, gamma, Implies(phi, chi), prem=(s2, s4))
    return b.use("vp-to-psi-to-chi--psi-to-vp-to-chi",
                 Or(psi, gamma), phi, chi, prem=(s5,))


@derived("vp-to-psi-si-chi-to-gamma-iff-vp-to-psi-to-chi-to-gamma→", "Gc",
         prem=lambda phi, psi, chi, gamma: (
             Implies(phi, Implies(And(psi, chi), gamma)),),
         stmt=lambda phi, psi, chi, gamma: Implies(
             phi, Implies(psi, Implies(chi, gamma))))
def _nested_export(b, phi, psi, chi, gamma, prem):
    s2 = b.rule("importation", prem[0])
    s3 = b.use("si-associativity-1", phi, psi, chi)
    s4 = b.syl(s3, s2)
    s5 = b.rule("exportation", s4)
    return b.rule("exportation", s5)


@derived("vp-to-psi-si-chi-to-gamma-iff-vp-to-psi-to-chi-to-gamma←", "Gc",
         prem=lambda phi, psi, chi, gamma: (
             Implies(phi, Implies(psi, Implies(chi, gamma))),),
         stmt=lambda phi, psi, chi, gamma: Implies(
             phi, Implies(And(psi, chi), gamma)))
def _nested_import(b, phi, psi, chi, gamma, prem):
    s2 = b.rule("importation", prem[0])
    s3 = b.rule("importation", s2)
    s4 = b.use("si-associativity-2", phi, psi, chi)
    s5 = b.syl(s4, s3)
    return b.rule("exportation", s5)


@derived("expansion-extra-premise", "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi,
                                                    Implies(psi, chi)),),
         stmt=lambda phi, psi, chi, gamma: Implies(
             phi, Implies(Or(gamma, psi), Or(gamma, chi))))
def _expansion_under(b, phi, psi, chi, gamma, prem):
    s2 = b.use("expansion-thm", psi, chi, gamma)
    return b.syl(prem[0], s2)


# -- negation-level rules ----------------------------------------------------


@derived("rec-ax3-rule", "Gc",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(Not(psi), Not(phi)))
def _contrapose(b, phi, psi, prem):
    s2 = b.use("contraposition", phi, psi)
    return b.mp(prem[0], s2)


@derived("Gamma-vptonegpsi-implies-Gamma-psitonegvp", "Gc",
         prem=lambda phi, psi: (Implies(phi, Not(psi)),),
         stmt=lambda phi, psi: Implies(psi, Not(phi)))
def _neg_swap(b, phi, psi, prem):
    s2 = b.use("vptonegpsi-to-psitonegvp", phi, psi)
    return b.mp(prem[0], s2)


@derived("rule-proof-by-cases", "Gc",
         prem=lambda phi, psi: (Implies(phi, psi), Implies(Not(phi), psi)),
         stmt=lambda phi, psi: psi)
def _by_cases(b, phi, psi, prem):
    s3 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               phi, Not(phi), psi, prem=prem)
    s4 = b.axiom("lem", phi=phi)
    return b.mp(s4, s3)


@derived("proof-by-cases-extra-premise", "Gc",
         prem=lambda phi, psi, chi: (Implies(And(psi, phi), chi),
                                     Implies(And(Not(psi), phi), chi)),
         stmt=lambda phi, psi, chi: Implies(phi, chi))
def _by_cases_under_l(b, phi, psi, chi, prem):
    s2 = b.rule("exportation", prem[0])
    s4 = b.rule("exportation", prem[1])
    return b.use("rule-proof-by-cases", psi, Implies(phi, chi),
                 prem=(s2, s4))


@derived("proof-by-cases-extra-premise-1", "Gc",
         prem=lambda phi, psi, chi: (Implies(And(phi, psi), chi),
                                     Implies(And(phi, Not(psi)), chi)),
         stmt=lambda phi, psi, chi: Implies(phi, chi))
def _by_cases_under_r(b, phi, psi, chi, prem):
    s2 = b.use("vp-si-psi-implies-chi-perm", phi, psi, chi, prem=(prem[0],))
    s4 = b.use("vp-si-psi-implies-chi-perm", phi, Not(psi), chi,
               prem=(prem[1],))
    return b.use("proof-by-cases-extra-premise", phi, psi, chi,
                 prem=(s2, s4))


# -- equivalence judgments ---------------------------------------------------


@derived("vpdndpsi-imp-vp-iff-psi→", "Gc",
         prem=lambda phi, psi: (iff(phi, psi), phi),
         stmt=lambda phi, psi: psi)
def _equiv_transport(b, phi, psi, prem):
    s = b.use("Gamma-vp-psi-vp-si-psi←-l",
              Implies(phi, psi), Implies(psi, phi), prem=(prem[0],))
    return b.mp(prem[1], s)


@derived("vpdndpsi-imp-vp-iff-psi←", "Gc",
         prem=lambda phi, psi: (iff(phi, psi), psi),
         stmt=lambda phi, psi: phi)
def _equiv_transport_back(b, phi, psi, prem):
    s = b.use("Gamma-vp-psi-vp-si-psi←-r",
              Implies(phi, psi), Implies(psi, phi), prem=(prem[0],))
    return b.mp(prem[1], s)


@derived("Gamma-vptopsi-psitovp-iff-vpdndpsi→", "Gc",
         prem=lambda phi, psi: (Implies(phi, psi), Implies(psi, phi)),
         stmt=lambda phi, psi: iff(phi, psi))
def _equiv_intro(b, phi, psi, prem):
    return b.use("Gamma-vp-psi-vp-si-psi→",
                 Implies(phi, psi), Implies(psi, phi), prem=prem)


@derived("Gamma-vptopsi-psitovp-iff-vpdndpsi←-l", "Gc",
         prem=lambda phi, psi: (iff(phi, psi),),
         stmt=lambda phi, psi: Implies(phi, psi))
def _equiv_elim_l(b, phi, psi, prem):
    return b.use("Gamma-vp-psi-vp-si-psi←-l",
                 Implies(phi, psi), Implies(psi, phi), prem=prem)


@derived("Gamma-vptopsi-psitovp-iff-vpdndpsi←-r", "Gc",
         prem=lambda phi, psi: (iff(phi, psi),),
         stmt=lambda phi, psi: Implies(psi, phi))
def _equiv_elim_r(b, phi, psi, prem):
    return b.use("Gamma-vp-psi-vp-si-psi←-r",
                 Implies(phi, psi), Implies(psi, phi), prem=prem)


def _fwd(b, phi, psi, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-l", phi, psi,
                 prem=prem)


def _bwd(b, phi, psi, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-r", phi, psi,
                 prem=prem)


@derived("sim-symm", "Gc",
         prem=lambda phi, psi: (iff(phi, psi),),
         stmt=lambda phi, psi: iff(psi, phi))
def _equiv_symm(b, phi, psi, prem):
    s2 = _fwd(b, phi, psi, prem)
    s3 = _bwd(b, phi, psi, prem)
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→", psi, phi,
                 prem=(s3, s2))


@derived("sim-trans", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi), iff(psi, chi)),
         stmt=lambda phi, psi, chi: iff(phi, chi))
def _equiv_trans(b, phi, psi, chi, prem):
    s3 = _fwd(b, phi, psi, (prem[0],))
    s4 = _fwd(b, psi, chi, (prem[1],))
    s5 = b.syl(s3, s4)
    s6 = _bwd(b, phi, psi, (prem[0],))
    s7 = _bwd(b, psi, chi, (prem[1],))
    s8 = b.syl(s7, s6)
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→", phi, chi,
                 prem=(s5, s8))


@derived("sim-pairs-or", "Gc",
         prem=lambda phi, phip, psi, psip: (iff(phi, phip), iff(psi, psip)),
         stmt=lambda phi, phip, psi, psip: iff(Or(phi, psi),
                                               Or(phip, psip)))
def _equiv_or_pair(b, phi, phip, psi, psip, prem):
    s2 = _fwd(b, phi, phip, (prem[0],))
    s4 = _fwd(b, psi, psip, (prem[1],))
    s5 = b.use("vp-to-psi-and-chi-to-gamma-implies-sau",
               phi, phip, psi, psip, prem=(s2, s4))
    s6 = _bwd(b, phi, phip, (prem[0],))
    s7 = _bwd(b, psi, psip, (prem[1],))
    s8 = b.use("vp-to-psi-and-chi-to-gamma-implies-sau",
               phip, phi, psip, psi, prem=(s6, s7))
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→",
                 Or(phi, psi), Or(phip, psip), prem=(s5, s8))


@derived("sim-pairs-and", "Gc",
         prem=lambda phi, phip, psi, psip: (iff(phi, phip), iff(psi, psip)),
         stmt=lambda phi, phip, psi, psip: iff(And(phi, psi),
                                               And(phip, psip)))
def _equiv_and_pair(b, phi, phip, psi, psip, prem):
    s2 = _fwd(b, phi, phip, (prem[0],))
    s4 = _fwd(b, psi, psip, (prem[1],))
    s5 = b.use("psi-to-vp-chi-to-gamma-vp-si-chi-to-psi-si-gamma",
               phi, phip, psi, psip, prem=(s2, s4))
    s6 = _bwd(b, phi, phip, (prem[0],))
    s7 = _bwd(b, psi, psip, (prem[1],))
    s8 = b.use("psi-to-vp-chi-to-gamma-vp-si-chi-to-psi-si-gamma",
               phip, phi, psip, psi, prem=(s6, s7))
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→",
                 And(phi, psi), And(phip, psip), prem=(s5, s8))


@derived("sim-pairs-to", "Gc",
         prem=lambda phi, phip, psi, psip: (iff(phi, phip), iff(psi, psip)),
         stmt=lambda phi, phip, psi, psip: iff(Implies(phi, psi),
                                               Implies(phip, psip)))
def _equiv_to_pair(b, phi, phip, psi, psip, prem):
    """Each half feeds on the reversed extraction of the other side; a
    same-direction pair cannot produce the contravariant position."""
    s2 = _fwd(b, phi, phip, (prem[0],))
    s4 = _fwd(b, psi, psip, (prem[1],))
    s6 = _bwd(b, phi, phip, (prem[0],))
    s7 = _bwd(b, psi, psip, (prem[1],))
    s5 = b.use("psi-to-vp-chi-to-gamma-vp-to-chi-to-psi-to-gamma",
               phi, phip, psi, psip, prem=(s6, s4))
    s8 = b.use("psi-to-vp-chi-to-gamma-vp-to-chi-to-psi-to-gamma",
               phip, phi, psip, psi, prem=(s2, s7))
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→",
                 Implies(phi, psi), Implies(phip, psip), prem=(s5, s8))


@derived("Gamma-vpdndvpp-and-Gamma-psidndpsip-implies-Gamma-vpdndpsitovppdndpsip",
         "Gc",
         prem=lambda phi, phip, psi, psip: (iff(phi, phip), iff(psi, psip)),
         stmt=lambda phi, phip, psi, psip: Implies(iff(phi, psi),
                                                   iff(phip, psip)))
def _equiv_transfer(b, phi, phip, psi, psip, prem):
    s2 = _fwd(b, phi, phip, (prem[0],))
    s4 = _fwd(b, psi, psip, (prem[1],))
    s6 = _bwd(b, phi, phip, (prem[0],))
    s7 = _bwd(b, psi, psip, (prem[1],))
    s5 = b.use("psi-to-vp-chi-to-gamma-vp-to-chi-to-psi-to-gamma",
               phi, phip, psi, psip, prem=(s6, s4))
    s8 = b.use("psi-to-vp-chi-to-gamma-vp-to-chi-to-psi-to-gamma",
               psi, psip, phi, phip, prem=(s7, s2))
    return b.use("psi-to-vp-chi-to-gamma-vp-si-chi-to-psi-si-gamma",
                 Implies(phi, psi), Implies(phip, psip),
                 Implies(psi, phi), Implies(psip, phip), prem=(s5, s8))


@derived("sim-pairs-to-left-1", "Gc",
         prem=lambda phi, phip, psi: (iff(phi, phip), Implies(phi, psi)),
         stmt=lambda phi, phip, psi: Implies(phip, psi))
def _equiv_replace_antecedent(b, phi, phip, psi, prem):
    s3 = _bwd(b, phi, phip, (prem[0],))
    return b.syl(s3, prem[1])


@derived("sim-pairs-to-right-1", "Gc",
         prem=lambda phi, psi, psip: (iff(psi, psip), Implies(phi, psi)),
         stmt=lambda phi, psi, psip: Implies(phi, psip))
def _equiv_replace_consequent(b, phi, psi, psip, prem):
    s3 = _fwd(b, psi, psip, (prem[0],))
    return b.syl(prem[1], s3)


@derived("sim-pairs-to-left-right-1", "Gc",
         prem=lambda phi, phip, psi, psip: (iff(phi, phip), iff(psi, psip),
                                            Implies(phi, psi)),
         stmt=lambda phi, phip, psi, psip: Implies(phip, psip))
def _equiv_replace_both(b, phi, phip, psi, psip, prem):
    s2 = _bwd(b, phi, phip, (prem[0],))
    s4 = _fwd(b, psi, psip, (prem[1],))
    s6 = b.syl(s2, prem[2])
    return b.syl(s6, s4)


@derived("sim-trans-2", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, chi), iff(psi, chi)),
         stmt=lambda phi, psi, chi: iff(phi, psi))
def _equiv_common_target(b, phi, psi, chi, prem):
    """Conjunction introduction here is the judgment-level one; the
    implication-shaped variant does not apply to categorical premises."""
    s3 = b.use("Gamma-vp-psi-vp-si-psi→", iff(phi, chi), iff(psi, chi),
               prem=prem)
    s4 = b.use("dnd-tranz", phi, psi, chi)
    return b.mp(s3, s4)


@derived("vp-to-psi-dnd-chi-vp-dnd-chi-to-gamma-implies-vp-to-psi-dnd-gamma",
         "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi, iff(psi, chi)),
                                            Implies(phi, iff(chi, gamma))),
         stmt=lambda phi, psi, chi, gamma: Implies(phi, iff(psi, gamma)))
def _equiv_chain_under(b, phi, psi, chi, gamma, prem):
    s2 = b.axiom("weakening-2", phi=Implies(psi, chi), psi=Implies(chi, psi))
    s3 = b.use("weak-si-2", Implies(psi, chi), Implies(chi, psi))
    s4 = b.syl(prem[0], s2)
    s5 = b.syl(prem[0], s3)
    s7 = b.axiom("weakening-2", phi=Implies(chi, gamma),
                 psi=Implies(gamma, chi))
    s8 = b.use("weak-si-2", Implies(chi, gamma), Implies(gamma, chi))
    s9 = b.syl(prem[1], s7)
    s10 = b.syl(prem[1], s8)
    s11 = b.use(
        "vp-to-psi-to-chi-vp-to-chi-to-gamma-implies-vp-to-psi-to-gamma",
        phi, psi, chi, gamma, prem=(s4, s9))
    s12 = b.use(
        "vp-to-psi-to-chi-vp-to-chi-to-gamma-implies-vp-to-psi-to-gamma",
        phi, gamma, chi, psi, prem=(s10, s5))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 phi, Implies(psi, gamma), Implies(gamma, psi),
                 prem=(s11, s12))


@derived("vp-to-psi-dnd-chi-and-chi-dnd-gamma-implies-vp-to-psi-dnd-gamma",
         "Gc",
         prem=lambda phi, psi, chi, gamma: (Implies(phi, iff(psi, chi)),
                                            iff(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: Implies(phi, iff(psi, gamma)))
def _equiv_chain_mixed(b, phi, psi, chi, gamma, prem):
    s3 = b.use("vp-implies-psi-to-vp", iff(chi, gamma), phi,
               prem=(prem[1],))
    return b.use(
        "vp-to-psi-dnd-chi-vp-dnd-chi-to-gamma-implies-vp-to-psi-dnd-gamma",
        phi, psi, chi, gamma, prem=(prem[0], s3))


# -- congruence rules, instantiated from the conditional theorems ------------


def _via_mp(b, label, args, prem):
    s = b.use(label, *args)
    return b.mp(prem[0], s)


@derived("Gamma-dnd-cong-neg", "Gc",
         prem=lambda phi, psi: (iff(phi, psi),),
         stmt=lambda phi, psi: iff(Not(phi), Not(psi)))
def _cong_neg(b, phi, psi, prem):
    return _via_mp(b, "vpdndpsi-neg", (phi, psi), prem)


@derived("sim-pairs-to-left", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(Implies(phi, chi),
                                        Implies(psi, chi)))
def _cong_to_left(b, phi, psi, chi, prem):
    return _via_mp(b, "vpdndpsi-to-r", (phi, psi, chi), prem)


@derived("sim-pairs-to-right", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(Implies(chi, phi),
                                        Implies(chi, psi)))
def _cong_to_right(b, phi, psi, chi, prem):
    return _via_mp(b, "vpdndpsi-to-l", (phi, psi, chi), prem)


@derived("sim-pairs-or-left", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(Or(phi, chi), Or(psi, chi)))
def _cong_or_left(b, phi, psi, chi, prem):
    return _via_mp(b, "vpdndpsi-sau-r", (phi, psi, chi), prem)


@derived("sim-pairs-or-right", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(Or(chi, phi), Or(chi, psi)))
def _cong_or_right(b, phi, psi, chi, prem):
    return _via_mp(b, "vpdndpsi-sau-l", (phi, psi, chi), prem)


@derived("sim-pairs-and-left", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(And(phi, chi), And(psi, chi)))
def _cong_and_left(b, phi, psi, chi, prem):
    return _via_mp(b, "vpdndpsi-si-r", (phi, psi, chi), prem)


@derived("sim-pairs-and-right", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(And(chi, phi), And(chi, psi)))
def _cong_and_right(b, phi, psi, chi, prem):
    return _via_mp(b, "vpdndpsi-si-l", (phi, psi, chi), prem)

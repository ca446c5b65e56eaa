"""Propositional theorems over the classical core calculus.

Entries are closed statements; builders cite core schemas, core rules
and earlier entries only, so the whole module replays bottom-up.
"""

from __future__ import annotations

from ..syntax import And, Bot, Implies, Not, Or, iff
from .catalog import theorem

# -- weakening family --------------------------------------------------------


@theorem("weak-sau-2", "Gc", stmt=lambda phi, psi: Implies(psi, Or(phi, psi)))
def _weak_sau_2(b, phi, psi):
    s1 = b.axiom("weakening-1", phi=psi, psi=phi)
    s2 = b.axiom("permutation-1", phi=psi, psi=phi)
    return b.syl(s1, s2)


@theorem("weak-si-2", "Gc", stmt=lambda phi, psi: Implies(And(phi, psi), psi))
def _weak_si_2(b, phi, psi):
    s1 = b.axiom("permutation-2", phi=phi, psi=psi)
    s2 = b.axiom("weakening-2", phi=psi, psi=phi)
    return b.syl(s1, s2)


@theorem("vp-to-psi-to-vp", "Gc",
         stmt=lambda phi, psi: Implies(phi, Implies(psi, phi)))
def _const_impl(b, phi, psi):
    s1 = b.axiom("weakening-2", phi=phi, psi=psi)
    return b.rule("exportation", s1)


@theorem("vp-to-vp", "Gc", stmt=lambda phi: Implies(phi, phi))
def _identity(b, phi):
    s1 = b.axiom("contraction-2", phi=phi)
    s2 = b.axiom("weakening-2", phi=phi, psi=phi)
    return b.syl(s1, s2)


@theorem("vp-to-psi-to-vpsipsi", "Gc",
         stmt=lambda phi, psi: Implies(phi, Implies(psi, And(phi, psi))))
def _pairing(b, phi, psi):
    s1 = b.use("vp-to-vp", And(phi, psi))
    return b.rule("exportation", s1)


@theorem("MP-axiom-1", "Gc",
         stmt=lambda phi, psi: Implies(And(Implies(phi, psi), phi), psi))
def _detach_left(b, phi, psi):
    s1 = b.use("vp-to-vp", Implies(phi, psi))
    return b.rule("importation", s1)


@theorem("MP-axiom-2", "Gc",
         stmt=lambda phi, psi: Implies(And(phi, Implies(phi, psi)), psi))
def _detach_right(b, phi, psi):
    s1 = b.use("MP-axiom-1", phi, psi)
    s2 = b.axiom("permutation-2", phi=phi, psi=Implies(phi, psi))
    return b.syl(s2, s1)


@theorem("MP-axiom-3", "Gc",
         stmt=lambda phi, psi: Implies(phi, Implies(Implies(phi, psi), psi)))
def _detach_curried(b, phi, psi):
    s1 = b.use("MP-axiom-2", phi, psi)
    return b.rule("exportation", s1)


@theorem("weak-si-3-l", "Gc",
         stmt=lambda phi, psi, chi: Implies(And(And(phi, psi), chi), phi))
def _proj3_1(b, phi, psi, chi):
    s1 = b.axiom("weakening-2", phi=And(phi, psi), psi=chi)
    s2 = b.axiom("weakening-2", phi=phi, psi=psi)
    return b.syl(s1, s2)


@theorem("weak-si-3-l1", "Gc",
         stmt=lambda phi, psi, chi: Implies(And(phi, And(psi, chi)), psi))
def _proj3_2(b, phi, psi, chi):
    s1 = b.use("weak-si-2", phi, And(psi, chi))
    s2 = b.axiom("weakening-2", phi=psi, psi=chi)
    return b.syl(s1, s2)


@theorem("weak-si-3-r", "Gc",
         stmt=lambda phi, psi, chi: Implies(And(And(phi, psi), chi), psi))
def _proj3_3(b, phi, psi, chi):
    s1 = b.axiom("weakening-2", phi=And(phi, psi), psi=chi)
    s2 = b.use("weak-si-2", phi, psi)
    return b.syl(s1, s2)


@theorem("weak-si-3-r1", "Gc",
         stmt=lambda phi, psi, chi: Implies(And(phi, And(psi, chi)), chi))
def _proj3_4(b, phi, psi, chi):
    s1 = b.use("weak-si-2", phi, And(psi, chi))
    s2 = b.use("weak-si-2", psi, chi)
    return b.syl(s1, s2)


@theorem("weak-sau-3-l1", "Gc",
         stmt=lambda phi, psi, chi: Implies(psi, Or(phi, Or(psi, chi))))
def _inj3_1(b, phi, psi, chi):
    s1 = b.axiom("weakening-1", phi=psi, psi=chi)
    s2 = b.use("weak-sau-2", phi, Or(psi, chi))
    return b.syl(s1, s2)


@theorem("weak-sau-3-r1", "Gc",
         stmt=lambda phi, psi, chi: Implies(chi, Or(phi, Or(psi, chi))))
def _inj3_2(b, phi, psi, chi):
    s1 = b.use("weak-sau-2", psi, chi)
    s2 = b.use("weak-sau-2", phi, Or(psi, chi))
    return b.syl(s1, s2)


@theorem("weak-sau-3-l2", "Gc",
         stmt=lambda phi, psi, chi: Implies(phi, Or(Or(phi, psi), chi)))
def _inj3_3(b, phi, psi, chi):
    s1 = b.axiom("weakening-1", phi=phi, psi=psi)
    s2 = b.axiom("weakening-1", phi=Or(phi, psi), psi=chi)
    return b.syl(s1, s2)


@theorem("weak-sau-3-r2", "Gc",
         stmt=lambda phi, psi, chi: Implies(psi, Or(Or(phi, psi), chi)))
def _inj3_4(b, phi, psi, chi):
    s1 = b.use("weak-sau-2", phi, psi)
    s2 = b.axiom("weakening-1", phi=Or(phi, psi), psi=chi)
    return b.syl(s1, s2)


# -- currying and composition ------------------------------------------------


@theorem("vp-to-psi-to-chi-to-psi-to-vp-to-chi", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Implies(phi, Implies(psi, chi)),
             Implies(psi, Implies(phi, chi))))
def _swap_thm(b, phi, psi, chi):
    imp = Implies(phi, Implies(psi, chi))
    g = And(And(imp, psi), phi)
    s1 = b.use("weak-si-3-l", imp, psi, phi)
    s2 = b.use("weak-si-2", And(imp, psi), phi)
    s3 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, phi, Implies(psi, chi), prem=(s2, s1))
    s4 = b.use("weak-si-3-r", imp, psi, phi)
    s5 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, psi, chi, prem=(s4, s3))
    s6 = b.rule("exportation", s5)
    return b.rule("exportation", s6)


@theorem("vp-si-vp-to-psi-chi-implies", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Implies(And(phi, Implies(phi, psi)), chi),
             Implies(And(phi, psi), chi)))
def _strengthen_pair(b, phi, psi, chi):
    s1 = b.use("vp-to-vp", phi)
    s2 = b.use("vp-to-psi-to-vp", psi, phi)
    s3 = b.use("psi-to-vp-chi-to-gamma-vp-si-chi-to-psi-si-gamma",
               phi, phi, psi, Implies(phi, psi), prem=(s1, s2))
    return b.use("vp-to-psi-imp-psi-to-chi-tto-vp-to-chi",
                 And(phi, psi), And(phi, Implies(phi, psi)), chi,
                 prem=(s3,))


@theorem("vp-si-psi-to-chi-to-vp-to-psi-to-chi", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Implies(And(phi, psi), chi),
             Implies(phi, Implies(psi, chi))))
def _export_thm(b, phi, psi, chi):
    imp = Implies(And(phi, psi), chi)
    g = And(And(imp, phi), psi)
    s1 = b.use("weak-si-3-l", imp, phi, psi)
    s2 = b.use("weak-si-3-r", imp, phi, psi)
    s3 = b.use("weak-si-2", And(imp, phi), psi)
    s4 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               g, phi, psi, prem=(s2, s3))
    s5 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, And(phi, psi), chi, prem=(s4, s1))
    s6 = b.rule("exportation", s5)
    return b.rule("exportation", s6)


@theorem("vp-to-psi-to-chi-si-vp-to-psi-si-vp-to-chi", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             And(And(Implies(phi, Implies(psi, chi)), Implies(phi, psi)),
                 phi),
             chi))
def _apply_pair(b, phi, psi, chi):
    i1 = Implies(phi, Implies(psi, chi))
    i2 = Implies(phi, psi)
    g = And(And(i1, i2), phi)
    s1 = b.use("weak-si-2", And(i1, i2), phi)
    s2 = b.use("weak-si-3-r", i1, i2, phi)
    s3 = b.use("weak-si-3-l", i1, i2, phi)
    s4 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, phi, psi, prem=(s1, s2))
    s5 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, phi, Implies(psi, chi), prem=(s1, s3))
    return b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
                 g, psi, chi, prem=(s4, s5))


@theorem("vp-to-psi-to-chi-to-vp-to-psi-to-vp-to-chi", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Implies(phi, Implies(psi, chi)),
             Implies(Implies(phi, psi), Implies(phi, chi))))
def _distribute_impl(b, phi, psi, chi):
    s1 = b.use("vp-to-psi-to-chi-si-vp-to-psi-si-vp-to-chi", phi, psi, chi)
    s2 = b.rule("exportation", s1)
    return b.rule("exportation", s2)


@theorem("vp-psi-chi-tranzitivity-ra", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Implies(phi, psi),
             Implies(Implies(psi, chi), Implies(phi, chi))))
def _chain_thm(b, phi, psi, chi):
    i1 = Implies(phi, psi)
    i2 = Implies(psi, chi)
    g = And(And(i1, i2), phi)
    s1 = b.use("weak-si-3-l", i1, i2, phi)
    s2 = b.use("weak-si-2", And(i1, i2), phi)
    s3 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, phi, psi, prem=(s2, s1))
    s4 = b.use("weak-si-3-r", i1, i2, phi)
    s5 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, psi, chi, prem=(s3, s4))
    s6 = b.rule("exportation", s5)
    return b.rule("exportation", s6)


@theorem("vp-to-psi-tto-chi-to-vp-chi-to-psi", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Implies(phi, psi),
             Implies(Implies(chi, phi), Implies(chi, psi))))
def _postcompose(b, phi, psi, chi):
    """Step two swaps the outer antecedents, so it cites the nested-swap
    rule rather than a transitivity form."""
    s1 = b.use("vp-psi-chi-tranzitivity-ra", chi, phi, psi)
    return b.use("vp-to-psi-to-chi--psi-to-vp-to-chi",
                 Implies(chi, phi), Implies(phi, psi), Implies(chi, psi),
                 prem=(s1,))


@theorem("expansion-thm", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Implies(phi, psi),
             Implies(Or(chi, phi), Or(chi, psi))))
def _expansion_internal(b, phi, psi, chi):
    """Step six composes under a common antecedent, so it reuses the
    nested-monotonicity rule from step three instead of a syllogism."""
    s1 = b.use("MP-axiom-3", phi, psi)
    s2 = b.use("weak-sau-2", chi, psi)
    s3 = b.use("vp-tto-psi-to-chi-and-chi-togamma-imp-vp-tto-psi-to-gamma",
               phi, Implies(phi, psi), psi, Or(chi, psi), prem=(s1, s2))
    s4 = b.use("vp-to-psi-to-vp", chi, Implies(phi, psi))
    s5 = b.axiom("weakening-1", phi=chi, psi=psi)
    s6 = b.use("vp-tto-psi-to-chi-and-chi-togamma-imp-vp-tto-psi-to-gamma",
               chi, Implies(phi, psi), chi, Or(chi, psi), prem=(s4, s5))
    s7 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               chi, phi, Implies(Implies(phi, psi), Or(chi, psi)),
               prem=(s6, s3))
    return b.use("vp-to-psi-to-chi--psi-to-vp-to-chi",
                 Or(chi, phi), Implies(phi, psi), Or(chi, psi),
                 prem=(s7,))


# -- associativity and distribution ------------------------------------------


@theorem("si-associativity-1", "Gc",
         stmt=lambda phi, psi, chi: Implies(And(And(phi, psi), chi),
                                            And(phi, And(psi, chi))))
def _si_assoc_1(b, phi, psi, chi):
    g = And(And(phi, psi), chi)
    s1 = b.use("weak-si-3-l", phi, psi, chi)
    s2 = b.use("weak-si-3-r", phi, psi, chi)
    s3 = b.use("weak-si-2", And(phi, psi), chi)
    s4 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               g, psi, chi, prem=(s2, s3))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 g, phi, And(psi, chi), prem=(s1, s4))


@theorem("si-associativity-2", "Gc",
         stmt=lambda phi, psi, chi: Implies(And(phi, And(psi, chi)),
                                            And(And(phi, psi), chi)))
def _si_assoc_2(b, phi, psi, chi):
    """The final step pairs step four with the third projection, in
    that order; its conclusion is the full statement."""
    g = And(phi, And(psi, chi))
    s1 = b.axiom("weakening-2", phi=phi, psi=And(psi, chi))
    s2 = b.use("weak-si-3-l1", phi, psi, chi)
    s3 = b.use("weak-si-3-r1", phi, psi, chi)
    s4 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               g, phi, psi, prem=(s1, s2))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 g, And(phi, psi), chi, prem=(s4, s3))


@theorem("sau-associativity-1", "Gc",
         stmt=lambda phi, psi, chi: Implies(Or(Or(phi, psi), chi),
                                            Or(phi, Or(psi, chi))))
def _sau_assoc_1(b, phi, psi, chi):
    s1 = b.axiom("weakening-1", phi=phi, psi=Or(psi, chi))
    s2 = b.use("weak-sau-3-l1", phi, psi, chi)
    s3 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               phi, psi, Or(phi, Or(psi, chi)), prem=(s1, s2))
    s4 = b.use("weak-sau-3-r1", phi, psi, chi)
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 Or(phi, psi), chi, Or(phi, Or(psi, chi)), prem=(s3, s4))


@theorem("sau-associativity-2", "Gc",
         stmt=lambda phi, psi, chi: Implies(Or(phi, Or(psi, chi)),
                                            Or(Or(phi, psi), chi)))
def _sau_assoc_2(b, phi, psi, chi):
    t = Or(Or(phi, psi), chi)
    s1 = b.use("weak-sau-2", Or(phi, psi), chi)
    s2 = b.use("weak-sau-3-l2", phi, psi, chi)
    s3 = b.use("weak-sau-3-r2", phi, psi, chi)
    s4 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               psi, chi, t, prem=(s3, s1))
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 phi, Or(psi, chi), t, prem=(s2, s4))


@theorem("distrib-si-sau-1", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Or(And(phi, psi), And(phi, chi)), And(phi, Or(psi, chi))))
def _distrib_in_1(b, phi, psi, chi):
    s1 = b.axiom("weakening-2", phi=phi, psi=psi)
    s2 = b.use("weak-si-2", phi, psi)
    s3 = b.axiom("weakening-1", phi=psi, psi=chi)
    s4 = b.syl(s2, s3)
    s5 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               And(phi, psi), phi, Or(psi, chi), prem=(s1, s4))
    s6 = b.axiom("weakening-2", phi=phi, psi=chi)
    s7 = b.use("weak-si-2", phi, chi)
    s8 = b.use("weak-sau-2", psi, chi)
    s9 = b.syl(s7, s8)
    s10 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                And(phi, chi), phi, Or(psi, chi), prem=(s6, s9))
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 And(phi, psi), And(phi, chi), And(phi, Or(psi, chi)),
                 prem=(s5, s10))


@theorem("distrib-si-sau-2", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             And(phi, Or(psi, chi)), Or(And(phi, psi), And(phi, chi))))
def _distrib_out_2(b, phi, psi, chi):
    t = Or(And(phi, psi), And(phi, chi))
    s1 = b.axiom("weakening-1", phi=And(phi, psi), psi=And(phi, chi))
    s2 = b.use("vp-si-psi-implies-chi-perm", phi, psi, t, prem=(s1,))
    s3 = b.rule("exportation", s2)
    s4 = b.use("weak-sau-2", And(phi, psi), And(phi, chi))
    s5 = b.use("vp-si-psi-implies-chi-perm", phi, chi, t, prem=(s4,))
    s6 = b.rule("exportation", s5)
    s7 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               psi, chi, Implies(phi, t), prem=(s3, s6))
    s8 = b.rule("importation", s7)
    return b.use("vp-si-psi-implies-chi-perm", Or(psi, chi), phi, t,
                 prem=(s8,))


@theorem("distrib-sau-si-1", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             Or(phi, And(psi, chi)), And(Or(phi, psi), Or(phi, chi))))
def _distrib_over_1(b, phi, psi, chi):
    s1 = b.axiom("weakening-1", phi=phi, psi=psi)
    s2 = b.axiom("weakening-1", phi=phi, psi=chi)
    s3 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               phi, Or(phi, psi), Or(phi, chi), prem=(s1, s2))
    s4 = b.axiom("weakening-2", phi=psi, psi=chi)
    s5 = b.use("weak-sau-2", phi, psi)
    s6 = b.syl(s4, s5)
    s7 = b.use("weak-si-2", psi, chi)
    s8 = b.use("weak-sau-2", phi, chi)
    s9 = b.syl(s7, s8)
    s10 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                And(psi, chi), Or(phi, psi), Or(phi, chi), prem=(s6, s9))
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 phi, And(psi, chi), And(Or(phi, psi), Or(phi, chi)),
                 prem=(s3, s10))


@theorem("distrib-sau-si-2", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             And(Or(phi, psi), Or(phi, chi)), Or(phi, And(psi, chi))))
def _distrib_over_2(b, phi, psi, chi):
    d = And(Or(phi, psi), Or(phi, chi))
    t = Or(phi, And(psi, chi))
    s1 = b.axiom("weakening-2", phi=Or(phi, psi), psi=Or(phi, chi))
    s2 = b.use("weak-si-2", Or(phi, psi), Or(phi, chi))
    s3 = b.axiom("weakening-1", phi=phi, psi=And(psi, chi))
    s4 = b.axiom("weakening-2", phi=phi, psi=psi)
    s5 = b.syl(s4, s3)
    s6 = b.rule("exportation", s5)
    s7 = b.use("weak-sau-2", phi, And(psi, chi))
    s8 = b.use("vp-si-psi-implies-chi-perm", psi, chi, t, prem=(s7,))
    s9 = b.rule("exportation", s8)
    s10 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                phi, chi, Implies(psi, t), prem=(s6, s9))
    s11 = b.syl(s2, s10)
    s12 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", d, psi, t,
                prem=(s11,))
    s14 = b.axiom("weakening-2", phi=phi, psi=d)
    s15 = b.syl(s14, s3)
    s16 = b.rule("exportation", s15)
    s17 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                phi, psi, Implies(d, t), prem=(s16, s12))
    s18 = b.syl(s1, s17)
    s19 = b.rule("importation", s18)
    s20 = b.axiom("contraction-2", phi=d)
    return b.syl(s20, s19)


# -- negation ----------------------------------------------------------------


@theorem("ex-falso-and", "Gc",
         stmt=lambda phi, psi: Implies(And(phi, Not(phi)), psi))
def _explode_pair(b, phi, psi):
    """The fifth step extends step four with a left conjunct; it feeds
    on step four, not on itself."""
    s1 = b.use("MP-axiom-2", phi, Bot())
    s2 = b.axiom("ex-falso", phi=psi)
    s3 = b.syl(s1, s2)
    s4 = b.axiom("axiom-not-1", phi=phi)
    s5 = b.use("Gamma-vp-to-psi-imp-Gamma-vp-si-chi-to-psi-si-chi-r",
               Not(phi), Implies(phi, Bot()), phi, prem=(s4,))
    return b.syl(s5, s3)


@theorem("ex-falso-impl", "Gc",
         stmt=lambda phi, psi: Implies(phi, Implies(Not(phi), psi)))
def _explode_curried(b, phi, psi):
    s1 = b.use("ex-falso-and", phi, psi)
    return b.rule("exportation", s1)


@theorem("ex-falso-impl-1", "Gc",
         stmt=lambda phi, psi: Implies(Not(phi), Implies(phi, psi)))
def _explode_flipped(b, phi, psi):
    s1 = b.use("ex-falso-impl", phi, psi)
    return b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", phi, Not(phi), psi,
                 prem=(s1,))


@theorem("negnegvp-vp", "Gc",
         stmt=lambda phi: Implies(Not(Not(phi)), phi))
def _dne(b, phi):
    s1 = b.axiom("lem", phi=phi)
    s2 = b.use("vp-to-psi-to-vp", phi, Not(Not(phi)))
    s3 = b.use("ex-falso-and", Not(phi), phi)
    s4 = b.rule("exportation", s3)
    s5 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               phi, Not(phi), Implies(Not(Not(phi)), phi), prem=(s2, s4))
    return b.mp(s1, s5)


@theorem("axiom-or-2", "Gc",
         stmt=lambda phi, psi: Implies(Implies(Not(phi), psi), Or(phi, psi)))
def _or_from_impl(b, phi, psi):
    s1 = b.axiom("weakening-1", phi=phi, psi=psi)
    s2 = b.use("vp-implies-psi-to-vp",
               Implies(phi, Or(phi, psi)), Implies(Not(phi), psi),
               prem=(s1,))
    s3 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi",
               Implies(Not(phi), psi), phi, Or(phi, psi), prem=(s2,))
    s4 = b.use("MP-axiom-2", Not(phi), psi)
    s5 = b.use("weak-sau-2", phi, psi)
    s6 = b.syl(s4, s5)
    s7 = b.rule("exportation", s6)
    s8 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               phi, Not(phi), Implies(Implies(Not(phi), psi), Or(phi, psi)),
               prem=(s3, s7))
    s9 = b.axiom("lem", phi=phi)
    return b.mp(s9, s8)


@theorem("disj-impl-1", "Gc",
         stmt=lambda phi, psi: Implies(Implies(phi, psi),
                                       Or(Not(phi), psi)))
def _impl_to_or(b, phi, psi):
    s1 = b.use("axiom-or-2", Not(phi), psi)
    s2 = b.use("negnegvp-vp", phi)
    s3 = b.use("vp-to-psi-imp-psi-to-chi-tto-vp-to-chi",
               Not(Not(phi)), phi, psi, prem=(s2,))
    return b.syl(s3, s1)


@theorem("vptonegpsi-to-psitonegvp", "Gc",
         stmt=lambda phi, psi: Implies(Implies(phi, Not(psi)),
                                       Implies(psi, Not(phi))))
def _neg_transpose(b, phi, psi):
    s1 = b.axiom("axiom-not-1", phi=psi)
    s2 = b.use("Gamma-vp-to-psi-imp-Gamma-chi-to-vp-chi-to-psi",
               Not(psi), Implies(psi, Bot()), phi, prem=(s1,))
    s3 = b.use("vp-to-psi-to-chi-to-psi-to-vp-to-chi", phi, psi, Bot())
    s4 = b.syl(s2, s3)
    s5 = b.axiom("axiom-not-2", phi=phi)
    s6 = b.use("Gamma-vp-to-psi-imp-Gamma-chi-to-vp-chi-to-psi",
               Implies(phi, Bot()), Not(phi), psi, prem=(s5,))
    return b.syl(s4, s6)


@theorem("axiom-or-1", "Gc",
         stmt=lambda phi, psi: Implies(Or(phi, psi),
                                       Implies(Not(phi), psi)))
def _or_to_impl(b, phi, psi):
    s1 = b.use("ex-falso-impl", phi, psi)
    s2 = b.use("vp-to-psi-to-vp", psi, Not(phi))
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 phi, psi, Implies(Not(phi), psi), prem=(s1, s2))


@theorem("contraposition", "Gc",
         stmt=lambda phi, psi: Implies(Implies(phi, psi),
                                       Implies(Not(psi), Not(phi))))
def _contraposition_thm(b, phi, psi):
    i = Implies(phi, psi)
    g = And(And(i, Not(psi)), phi)
    s1 = b.use("weak-si-3-l", i, Not(psi), phi)
    s2 = b.use("weak-si-3-r", i, Not(psi), phi)
    s3 = b.use("weak-si-2", And(i, Not(psi)), phi)
    s4 = b.use("vp-to-psi-and-vp-to-psi-to-chi-implies-vp-to-chi",
               g, phi, psi, prem=(s3, s1))
    s5 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               g, psi, Not(psi), prem=(s4, s2))
    s6 = b.use("ex-falso-and", psi, Bot())
    s7 = b.syl(s5, s6)
    s8 = b.rule("exportation", s7)
    s9 = b.axiom("axiom-not-2", phi=phi)
    s10 = b.syl(s8, s9)
    return b.rule("exportation", s10)


# -- double negation and de Morgan -------------------------------------------


@theorem("dni", "Gc", stmt=lambda phi: Implies(phi, Not(Not(phi))))
def _dni(b, phi):
    s1 = b.use("MP-axiom-3", phi, Bot())
    s2 = b.axiom("axiom-not-2", phi=Implies(phi, Bot()))
    s3 = b.syl(s1, s2)
    s4 = b.axiom("axiom-not-1", phi=phi)
    s5 = b.use("rec-ax3-rule", Not(phi), Implies(phi, Bot()), prem=(s4,))
    return b.syl(s3, s5)


@theorem("axiom-and-1", "Gc",
         stmt=lambda phi, psi: Implies(And(phi, psi),
                                       Not(Or(Not(phi), Not(psi)))))
def _and_encode(b, phi, psi):
    s1 = b.axiom("weakening-2", phi=phi, psi=psi)
    s2 = b.use("rec-ax3-rule", And(phi, psi), phi, prem=(s1,))
    s3 = b.use("weak-si-2", phi, psi)
    s4 = b.use("rec-ax3-rule", And(phi, psi), psi, prem=(s3,))
    s5 = b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
               Not(phi), Not(psi), Not(And(phi, psi)), prem=(s2, s4))
    s6 = b.use("rec-ax3-rule", Or(Not(phi), Not(psi)), Not(And(phi, psi)),
               prem=(s5,))
    s7 = b.use("dni", And(phi, psi))
    return b.syl(s7, s6)


@theorem("axiom-and-2", "Gc",
         stmt=lambda phi, psi: Implies(Not(Or(Not(phi), Not(psi))),
                                       And(phi, psi)))
def _and_decode(b, phi, psi):
    s1 = b.use("axiom-or-2", Not(phi), Not(psi))
    s2 = b.use("negnegvp-vp", phi)
    s3 = b.use("vp-to-psi-imp-psi-to-chi-tto-vp-to-chi",
               Not(Not(phi)), phi, Not(psi), prem=(s2,))
    s4 = b.use("vp-si-psi-to-chi-to-vp-to-psi-to-chi", phi, psi, Bot())
    s5 = b.axiom("axiom-not-1", phi=And(phi, psi))
    s6 = b.syl(s5, s4)
    s7 = b.axiom("axiom-not-2", phi=psi)
    s8 = b.use("Gamma-vp-to-psi-imp-Gamma-chi-to-vp-chi-to-psi",
               Implies(psi, Bot()), Not(psi), phi, prem=(s7,))
    s9 = b.syl(s6, s8)
    s10 = b.syl(s9, s3)
    s11 = b.syl(s10, s1)
    s12 = b.use("rec-ax3-rule", Not(And(phi, psi)), Or(Not(phi), Not(psi)),
                prem=(s11,))
    s13 = b.use("negnegvp-vp", And(phi, psi))
    return b.syl(s12, s13)


@theorem("disj-impl-2", "Gc",
         stmt=lambda phi, psi: Implies(Or(Not(phi), psi),
                                       Implies(phi, psi)))
def _or_to_impl_neg(b, phi, psi):
    s1 = b.use("ex-falso-impl-1", phi, psi)
    s2 = b.use("vp-to-psi-to-vp", psi, phi)
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 Not(phi), psi, Implies(phi, psi), prem=(s1, s2))


@theorem("de-morgan-and-2", "Gc",
         stmt=lambda phi, psi: Implies(Not(And(phi, psi)),
                                       Or(Not(phi), Not(psi))))
def _dm_and_out(b, phi, psi):
    s1 = b.use("axiom-and-2", phi, psi)
    s2 = b.use("rec-ax3-rule", Not(Or(Not(phi), Not(psi))), And(phi, psi),
               prem=(s1,))
    s3 = b.use("negnegvp-vp", Or(Not(phi), Not(psi)))
    return b.syl(s2, s3)


@theorem("de-morgan-or-1", "Gc",
         stmt=lambda phi, psi: Implies(Or(Not(phi), Not(psi)),
                                       Not(And(phi, psi))))
def _dm_and_in(b, phi, psi):
    """Steps two and four contrapose a projection, so they cite the
    contraposition rule, not an antecedent-monotonicity form."""
    s1 = b.axiom("weakening-2", phi=phi, psi=psi)
    s2 = b.use("rec-ax3-rule", And(phi, psi), phi, prem=(s1,))
    s3 = b.use("weak-si-2", phi, psi)
    s4 = b.use("rec-ax3-rule", And(phi, psi), psi, prem=(s3,))
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 Not(phi), Not(psi), Not(And(phi, psi)), prem=(s2, s4))


@theorem("de-morgan-or-2", "Gc",
         stmt=lambda phi, psi: Implies(Not(Or(phi, psi)),
                                       And(Not(phi), Not(psi))))
def _dm_or_out(b, phi, psi):
    s1 = b.axiom("weakening-1", phi=phi, psi=psi)
    s2 = b.use("rec-ax3-rule", phi, Or(phi, psi), prem=(s1,))
    s3 = b.use("weak-sau-2", phi, psi)
    s4 = b.use("rec-ax3-rule", psi, Or(phi, psi), prem=(s3,))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 Not(Or(phi, psi)), Not(phi), Not(psi), prem=(s2, s4))


@theorem("de-morgan-and-1", "Gc",
         stmt=lambda phi, psi: Implies(And(Not(phi), Not(psi)),
                                       Not(Or(phi, psi))))
def _dm_or_in(b, phi, psi):
    g = And(Not(phi), Not(psi))
    s1 = b.axiom("weakening-2", phi=Not(phi), psi=Not(psi))
    s2 = b.axiom("axiom-not-1", phi=phi)
    s3 = b.syl(s1, s2)
    s4 = b.use("weak-si-2", Not(phi), Not(psi))
    s5 = b.axiom("axiom-not-1", phi=psi)
    s6 = b.syl(s4, s5)
    s7 = b.use("vp-to-psi-to-chi-si-vp-to-gamma-to-chi-to-vp-to-psi-sau-gamma-to-chi",
               g, phi, Bot(), psi, prem=(s3, s6))
    s8 = b.axiom("axiom-not-2", phi=Or(phi, psi))
    return b.syl(s7, s8)


@theorem("useful-mem-neg-1", "Gc",
         stmt=lambda phi, psi: Implies(Or(Not(phi), Not(psi)),
                                       Implies(psi, Not(phi))))
def _neg_or_impl(b, phi, psi):
    s1 = b.axiom("permutation-1", phi=Not(phi), psi=Not(psi))
    s2 = b.use("disj-impl-2", psi, Not(phi))
    return b.syl(s1, s2)

"""Equivalence-level theorems: commutations, dualities, congruence.

Statements here are biconditionals or implications between
biconditionals. Both reading directions of each biconditional were
established separately earlier; entries here glue them together.
"""

from __future__ import annotations

from ..syntax import And, Implies, Not, Or, iff
from .catalog import theorem


def _combine(b, left, right, fwd, bwd):
    # fwd: left -> right, bwd: right -> left
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→", left, right,
                 prem=(fwd, bwd))


@theorem("sim-refl", "Gc", stmt=lambda phi: iff(phi, phi))
def _refl(b, phi):
    s = b.use("vp-to-vp", phi)
    return _combine(b, phi, phi, s, s)


@theorem("si-comm", "Gc",
         stmt=lambda phi, psi: iff(And(phi, psi), And(psi, phi)))
def _si_comm(b, phi, psi):
    s1 = b.axiom("permutation-2", phi=phi, psi=psi)
    s2 = b.axiom("permutation-2", phi=psi, psi=phi)
    return _combine(b, And(phi, psi), And(psi, phi), s1, s2)


@theorem("sau-comm", "Gc",
         stmt=lambda phi, psi: iff(Or(phi, psi), Or(psi, phi)))
def _sau_comm(b, phi, psi):
    s1 = b.axiom("permutation-1", phi=phi, psi=psi)
    s2 = b.axiom("permutation-1", phi=psi, psi=phi)
    return _combine(b, Or(phi, psi), Or(psi, phi), s1, s2)


@theorem("negnegvp-dnd-vp", "Gc",
         stmt=lambda phi: iff(Not(Not(phi)), phi))
def _dn_equiv(b, phi):
    s1 = b.use("negnegvp-vp", phi)
    s2 = b.use("dni", phi)
    return _combine(b, Not(Not(phi)), phi, s1, s2)


@theorem("vpsaupsi-negvptopsi", "Gc",
         stmt=lambda phi, psi: iff(Or(phi, psi),
                                   Implies(Not(phi), psi)))
def _or_as_impl(b, phi, psi):
    s1 = b.use("axiom-or-1", phi, psi)
    s2 = b.use("axiom-or-2", phi, psi)
    return _combine(b, Or(phi, psi), Implies(Not(phi), psi), s1, s2)


@theorem("def-imp-or", "Gc",
         stmt=lambda phi, psi: iff(Implies(phi, psi),
                                   Or(Not(phi), psi)))
def _impl_as_or(b, phi, psi):
    s1 = b.use("disj-impl-1", phi, psi)
    s2 = b.use("disj-impl-2", phi, psi)
    return _combine(b, Implies(phi, psi), Or(Not(phi), psi), s1, s2)


@theorem("vpsipsi-demorgan", "Gc",
         stmt=lambda phi, psi: iff(And(phi, psi),
                                   Not(Or(Not(phi), Not(psi)))))
def _and_encode_equiv(b, phi, psi):
    s1 = b.use("axiom-and-1", phi, psi)
    s2 = b.use("axiom-and-2", phi, psi)
    return _combine(b, And(phi, psi), Not(Or(Not(phi), Not(psi))), s1, s2)


@theorem("de-morgan-or-dnd", "Gc",
         stmt=lambda phi, psi: iff(Or(Not(phi), Not(psi)),
                                   Not(And(phi, psi))))
def _dm_or_equiv(b, phi, psi):
    s1 = b.use("de-morgan-or-1", phi, psi)
    s2 = b.use("de-morgan-and-2", phi, psi)
    return _combine(b, Or(Not(phi), Not(psi)), Not(And(phi, psi)), s1, s2)


@theorem("de-morgan-and-dnd", "Gc",
         stmt=lambda phi, psi: iff(And(Not(phi), Not(psi)),
                                   Not(Or(phi, psi))))
def _dm_and_equiv(b, phi, psi):
    s1 = b.use("de-morgan-and-1", phi, psi)
    s2 = b.use("de-morgan-or-2", phi, psi)
    return _combine(b, And(Not(phi), Not(psi)), Not(Or(phi, psi)), s1, s2)


@theorem("si-assoc", "Gc",
         stmt=lambda phi, psi, chi: iff(And(phi, And(psi, chi)),
                                        And(And(phi, psi), chi)))
def _si_assoc_equiv(b, phi, psi, chi):
    s1 = b.use("si-associativity-2", phi, psi, chi)
    s2 = b.use("si-associativity-1", phi, psi, chi)
    return _combine(b, And(phi, And(psi, chi)), And(And(phi, psi), chi),
                    s1, s2)


@theorem("sau-assoc", "Gc",
         stmt=lambda phi, psi, chi: iff(Or(phi, Or(psi, chi)),
                                        Or(Or(phi, psi), chi)))
def _sau_assoc_equiv(b, phi, psi, chi):
    s1 = b.use("sau-associativity-2", phi, psi, chi)
    s2 = b.use("sau-associativity-1", phi, psi, chi)
    return _combine(b, Or(phi, Or(psi, chi)), Or(Or(phi, psi), chi),
                    s1, s2)


@theorem("distrib-si-sau", "Gc",
         stmt=lambda phi, psi, chi: iff(And(phi, Or(psi, chi)),
                                        Or(And(phi, psi), And(phi, chi))))
def _distrib_si_equiv(b, phi, psi, chi):
    s1 = b.use("distrib-si-sau-2", phi, psi, chi)
    s2 = b.use("distrib-si-sau-1", phi, psi, chi)
    return _combine(b, And(phi, Or(psi, chi)),
                    Or(And(phi, psi), And(phi, chi)), s1, s2)


@theorem("distrib-sau-si", "Gc",
         stmt=lambda phi, psi, chi: iff(Or(phi, And(psi, chi)),
                                        And(Or(phi, psi), Or(phi, chi))))
def _distrib_sau_equiv(b, phi, psi, chi):
    s1 = b.use("distrib-sau-si-1", phi, psi, chi)
    s2 = b.use("distrib-sau-si-2", phi, psi, chi)
    return _combine(b, Or(phi, And(psi, chi)),
                    And(Or(phi, psi), Or(phi, chi)), s1, s2)


@theorem("sau-idemp", "Gc", stmt=lambda phi: iff(Or(phi, phi), phi))
def _or_idemp(b, phi):
    s1 = b.axiom("contraction-1", phi=phi)
    s2 = b.axiom("weakening-1", phi=phi, psi=phi)
    return _combine(b, Or(phi, phi), phi, s1, s2)


@theorem("si-idemp", "Gc", stmt=lambda phi: iff(And(phi, phi), phi))
def _and_idemp(b, phi):
    s1 = b.axiom("weakening-2", phi=phi, psi=phi)
    s2 = b.axiom("contraction-2", phi=phi)
    return _combine(b, And(phi, phi), phi, s1, s2)


@theorem("dnd-tranz", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             And(iff(phi, chi), iff(psi, chi)), iff(phi, psi)))
def _equiv_triangle(b, phi, psi, chi):
    d = And(iff(phi, chi), iff(psi, chi))
    s1 = b.axiom("weakening-2", phi=iff(phi, chi), psi=iff(psi, chi))
    s2 = b.axiom("weakening-2", phi=Implies(phi, chi), psi=Implies(chi, phi))
    s3 = b.syl(s1, s2)
    s4 = b.use("weak-si-2", iff(phi, chi), iff(psi, chi))
    s5 = b.use("weak-si-2", Implies(psi, chi), Implies(chi, psi))
    s6 = b.syl(s4, s5)
    s7 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               d, Implies(phi, chi), Implies(chi, psi), prem=(s3, s6))
    s8 = b.use("vp-psi-chi-tranzitivity-ra", phi, chi, psi)
    s9 = b.rule("importation", s8)
    s10 = b.syl(s7, s9)
    # second half mirrors the first with the roles of phi and psi swapped
    t2 = b.axiom("weakening-2", phi=Implies(psi, chi),
                 psi=Implies(chi, psi))
    t3 = b.syl(s4, t2)
    t5 = b.use("weak-si-2", Implies(phi, chi), Implies(chi, phi))
    t6 = b.syl(s1, t5)
    t7 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               d, Implies(psi, chi), Implies(chi, phi), prem=(t3, t6))
    t8 = b.use("vp-psi-chi-tranzitivity-ra", psi, chi, phi)
    t9 = b.rule("importation", t8)
    s11 = b.syl(t7, t9)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 d, Implies(phi, psi), Implies(psi, phi), prem=(s10, s11))


# -- congruence under each connective ----------------------------------------


@theorem("vpdndpsi-neg", "Gc",
         stmt=lambda phi, psi: Implies(iff(phi, psi),
                                       iff(Not(phi), Not(psi))))
def _cong_thm_neg(b, phi, psi):
    s1 = b.axiom("weakening-2", phi=Implies(phi, psi), psi=Implies(psi, phi))
    s2 = b.use("contraposition", phi, psi)
    s3 = b.syl(s1, s2)
    s4 = b.use("weak-si-2", Implies(phi, psi), Implies(psi, phi))
    s5 = b.use("contraposition", psi, phi)
    s6 = b.syl(s4, s5)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 iff(phi, psi), Implies(Not(phi), Not(psi)),
                 Implies(Not(psi), Not(phi)), prem=(s6, s3))


@theorem("vpdndpsi-to-r", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             iff(phi, psi), iff(Implies(phi, chi), Implies(psi, chi))))
def _cong_thm_to_r(b, phi, psi, chi):
    s1 = b.axiom("weakening-2", phi=Implies(phi, psi), psi=Implies(psi, phi))
    s2 = b.use("vp-psi-chi-tranzitivity-ra", phi, psi, chi)
    s3 = b.syl(s1, s2)
    s4 = b.use("weak-si-2", Implies(phi, psi), Implies(psi, phi))
    s5 = b.use("vp-psi-chi-tranzitivity-ra", psi, phi, chi)
    s6 = b.syl(s4, s5)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 iff(phi, psi), Implies(Implies(phi, chi),
                                        Implies(psi, chi)),
                 Implies(Implies(psi, chi), Implies(phi, chi)),
                 prem=(s6, s3))


@theorem("vpdndpsi-to-l", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             iff(phi, psi), iff(Implies(chi, phi), Implies(chi, psi))))
def _cong_thm_to_l(b, phi, psi, chi):
    s1 = b.axiom("weakening-2", phi=Implies(phi, psi), psi=Implies(psi, phi))
    s2 = b.use("vp-to-psi-tto-chi-to-vp-chi-to-psi", phi, psi, chi)
    s3 = b.syl(s1, s2)
    s4 = b.use("weak-si-2", Implies(phi, psi), Implies(psi, phi))
    s5 = b.use("vp-to-psi-tto-chi-to-vp-chi-to-psi", psi, phi, chi)
    s6 = b.syl(s4, s5)
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 iff(phi, psi), Implies(Implies(chi, phi),
                                        Implies(chi, psi)),
                 Implies(Implies(chi, psi), Implies(chi, phi)),
                 prem=(s3, s6))


@theorem("vpdndpsi-sau-r", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             iff(phi, psi), iff(Or(phi, chi), Or(psi, chi))))
def _cong_thm_or_r(b, phi, psi, chi):
    """The two bridge equivalences enter in their symmetric orientation,
    produced by an explicit symmetry step."""
    s1 = b.use("vpdndpsi-neg", phi, psi)
    s2 = b.use("vpdndpsi-to-r", Not(phi), Not(psi), chi)
    s3 = b.syl(s1, s2)
    s4a = b.use("vpsaupsi-negvptopsi", phi, chi)
    s4 = b.use("sim-symm", Or(phi, chi), Implies(Not(phi), chi),
               prem=(s4a,))
    s5a = b.use("vpsaupsi-negvptopsi", psi, chi)
    s5 = b.use("sim-symm", Or(psi, chi), Implies(Not(psi), chi),
               prem=(s5a,))
    s6 = b.use(
        "Gamma-vpdndvpp-and-Gamma-psidndpsip-implies-Gamma-vpdndpsitovppdndpsip",
        Implies(Not(phi), chi), Or(phi, chi),
        Implies(Not(psi), chi), Or(psi, chi), prem=(s4, s5))
    return b.syl(s3, s6)


@theorem("vpdndpsi-sau-l", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             iff(phi, psi), iff(Or(chi, phi), Or(chi, psi))))
def _cong_thm_or_l(b, phi, psi, chi):
    """The transfer step consumes the two bridge equivalences directly
    above it, in their symmetric orientation."""
    s1 = b.use("vpdndpsi-to-l", phi, psi, Not(chi))
    s2a = b.use("vpsaupsi-negvptopsi", chi, phi)
    s2 = b.use("sim-symm", Or(chi, phi), Implies(Not(chi), phi),
               prem=(s2a,))
    s3a = b.use("vpsaupsi-negvptopsi", chi, psi)
    s3 = b.use("sim-symm", Or(chi, psi), Implies(Not(chi), psi),
               prem=(s3a,))
    s4 = b.use(
        "Gamma-vpdndvpp-and-Gamma-psidndpsip-implies-Gamma-vpdndpsitovppdndpsip",
        Implies(Not(chi), phi), Or(chi, phi),
        Implies(Not(chi), psi), Or(chi, psi), prem=(s2, s3))
    return b.syl(s1, s4)


@theorem("vpdndpsi-si-r", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             iff(phi, psi), iff(And(phi, chi), And(psi, chi))))
def _cong_thm_and_r(b, phi, psi, chi):
    s1 = b.use("vpdndpsi-neg", phi, psi)
    s2 = b.use("vpdndpsi-sau-r", Not(phi), Not(psi), Not(chi))
    s3 = b.syl(s1, s2)
    s4 = b.use("vpdndpsi-neg", Or(Not(phi), Not(chi)),
               Or(Not(psi), Not(chi)))
    s5 = b.syl(s3, s4)
    s6a = b.use("vpsipsi-demorgan", phi, chi)
    s6 = b.use("sim-symm", And(phi, chi), Not(Or(Not(phi), Not(chi))),
               prem=(s6a,))
    s7a = b.use("vpsipsi-demorgan", psi, chi)
    s7 = b.use("sim-symm", And(psi, chi), Not(Or(Not(psi), Not(chi))),
               prem=(s7a,))
    s8 = b.use(
        "Gamma-vpdndvpp-and-Gamma-psidndpsip-implies-Gamma-vpdndpsitovppdndpsip",
        Not(Or(Not(phi), Not(chi))), And(phi, chi),
        Not(Or(Not(psi), Not(chi))), And(psi, chi), prem=(s6, s7))
    return b.syl(s5, s8)


@theorem("vpdndpsi-si-l", "Gc",
         stmt=lambda phi, psi, chi: Implies(
             iff(phi, psi), iff(And(chi, phi), And(chi, psi))))
def _cong_thm_and_l(b, phi, psi, chi):
    s1 = b.use("vpdndpsi-neg", phi, psi)
    s2 = b.use("vpdndpsi-sau-l", Not(phi), Not(psi), Not(chi))
    s3 = b.syl(s1, s2)
    s4 = b.use("vpdndpsi-neg", Or(Not(chi), Not(phi)),
               Or(Not(chi), Not(psi)))
    s5 = b.syl(s3, s4)
    s6a = b.use("vpsipsi-demorgan", chi, phi)
    s6 = b.use("sim-symm", And(chi, phi), Not(Or(Not(chi), Not(phi))),
               prem=(s6a,))
    s7a = b.use("vpsipsi-demorgan", chi, psi)
    s7 = b.use("sim-symm", And(chi, psi), Not(Or(Not(chi), Not(psi))),
               prem=(s7a,))
    s8 = b.use(
        "Gamma-vpdndvpp-and-Gamma-psidndpsip-implies-Gamma-vpdndpsitovppdndpsip",
        Not(Or(Not(chi), Not(phi))), And(chi, phi),
        Not(Or(Not(chi), Not(psi))), And(chi, psi), prem=(s6, s7))
    return b.syl(s5, s8)

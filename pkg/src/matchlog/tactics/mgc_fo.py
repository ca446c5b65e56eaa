"""First-order layer of the definedness calculus.

Quantifiers here are axiomatized by distribution over implication,
vacuous generalization and the existential duality pair, not by
substitution instances, so the quantifier toolkit is rebuilt from those.
The guarded lifting family at the end pushes a fixed antecedent through
a binder; the equality and substitution walkers feed on it.
"""

from __future__ import annotations

from ..subst import avoid_set, fresh, subb
from ..syntax import And, Exists, Forall, Implies, Not, Or, iff, occurs
from .catalog import derived, theorem
from .congruence import MGC_LABELS, dnd_walk


def _combine(b, left, right, fwd, bwd):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→", left, right,
                 prem=(fwd, bwd))


def _fwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-l", left, right,
                 prem=prem)


def _bwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-r", left, right,
                 prem=prem)


@theorem("psi-topsisivp-sau-psisinegvp", "MGc",
         stmt=lambda phi, psi: Implies(
             psi, Or(And(psi, phi), And(psi, Not(phi)))))
def _split_by_cases(b, phi, psi):
    s0 = b.use("sim-refl", psi)
    s1 = _fwd(b, psi, psi, (s0,))
    s2 = b.axiom("lem", phi=phi)
    s3 = b.use("vp-implies-psi-to-vp", Or(phi, Not(phi)), psi,
               prem=(s2,))
    s4 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               psi, psi, Or(phi, Not(phi)), prem=(s1, s3))
    s5 = b.use("distrib-si-sau", psi, phi, Not(phi))
    s6 = _fwd(b, And(psi, Or(phi, Not(phi))),
              Or(And(psi, phi), And(psi, Not(phi))), (s5,))
    return b.syl(s4, s6)


@theorem("neg-psisinegvp-dnd-negpsisauvp", "MGc",
         stmt=lambda phi, psi: iff(Not(And(psi, Not(phi))),
                                   Or(Not(psi), phi)))
def _neg_conj_negr(b, phi, psi):
    s1 = b.use("de-morgan-or-dnd", psi, Not(phi))
    s2 = b.use("sim-symm", Or(Not(psi), Not(Not(phi))),
               Not(And(psi, Not(phi))), prem=(s1,))
    s3 = b.use("negnegvp-dnd-vp", phi)
    s4 = b.use("sim-pairs-or-right", Not(Not(phi)), phi, Not(psi),
               prem=(s3,))
    return b.use("sim-trans", Not(And(psi, Not(phi))),
                 Or(Not(psi), Not(Not(phi))), Or(Not(psi), phi),
                 prem=(s2, s4))


@theorem("neg-negvpsaupsi-dnd-vpsinegpsi", "MGc",
         stmt=lambda phi, psi: iff(Not(Or(Not(phi), psi)),
                                   And(phi, Not(psi))))
def _neg_disj_negl(b, phi, psi):
    s0 = b.use("de-morgan-and-dnd", Not(phi), psi)
    s1 = b.use("sim-symm", And(Not(Not(phi)), Not(psi)),
               Not(Or(Not(phi), psi)), prem=(s0,))
    s2 = b.use("negnegvp-dnd-vp", phi)
    s3 = b.use("sim-pairs-and-left", Not(Not(phi)), phi, Not(psi),
               prem=(s2,))
    return b.use("sim-trans", Not(Or(Not(phi), psi)),
                 And(Not(Not(phi)), Not(psi)), And(phi, Not(psi)),
                 prem=(s1, s3))


@theorem("neg-vptopsi-dnd-vpsinegpsi", "MGc",
         stmt=lambda phi, psi: iff(Not(Implies(phi, psi)),
                                   And(phi, Not(psi))))
def _neg_imp(b, phi, psi):
    s1 = b.use("def-imp-or", phi, psi)
    s2 = b.use("Gamma-dnd-cong-neg", Implies(phi, psi),
               Or(Not(phi), psi), prem=(s1,))
    s3 = b.use("neg-negvpsaupsi-dnd-vpsinegpsi", phi, psi)
    return b.use("sim-trans", Not(Implies(phi, psi)),
                 Not(Or(Not(phi), psi)), And(phi, Not(psi)),
                 prem=(s2, s3))


@theorem("neg-vptopsi-dnd-negpsisivp", "MGc",
         stmt=lambda phi, psi: iff(Not(Implies(phi, psi)),
                                   And(Not(psi), phi)))
def _neg_imp_comm(b, phi, psi):
    s1 = b.use("neg-vptopsi-dnd-vpsinegpsi", phi, psi)
    s2 = b.use("si-comm", phi, Not(psi))
    return b.use("sim-trans", Not(Implies(phi, psi)),
                 And(phi, Not(psi)), And(Not(psi), phi),
                 prem=(s1, s2))


@theorem("negvp-sau-negpsi--dnd--vp-to-negpsi", "MGc",
         stmt=lambda phi, psi: iff(Or(Not(phi), Not(psi)),
                                   Implies(psi, Not(phi))))
def _neg_disj_as_imp(b, phi, psi):
    s1 = b.use("def-imp-or", psi, Not(phi))
    s2 = b.use("sau-comm", Not(psi), Not(phi))
    s3 = b.use("sim-trans", Implies(psi, Not(phi)),
               Or(Not(psi), Not(phi)), Or(Not(phi), Not(psi)),
               prem=(s1, s2))
    return b.use("sim-symm", Implies(psi, Not(phi)),
                 Or(Not(phi), Not(psi)), prem=(s3,))


@theorem("useful-mem-neg-2", "MGc",
         stmt=lambda phi, psi: iff(
             Not(iff(phi, psi)),
             Or(And(phi, Not(psi)), And(Not(phi), psi))))
def _neg_iff(b, phi, psi):
    # the biconditional is literally the conjunction of its two halves,
    # so the de-morgan instance below already speaks about it
    s0 = b.use("de-morgan-or-dnd", Implies(phi, psi), Implies(psi, phi))
    s1 = b.use("sim-symm",
               Or(Not(Implies(phi, psi)), Not(Implies(psi, phi))),
               Not(iff(phi, psi)), prem=(s0,))
    s2 = b.use("neg-vptopsi-dnd-vpsinegpsi", phi, psi)
    s3 = b.use("neg-vptopsi-dnd-negpsisivp", psi, phi)
    s4 = b.use("sim-pairs-or", Not(Implies(phi, psi)),
               And(phi, Not(psi)), Not(Implies(psi, phi)),
               And(Not(phi), psi), prem=(s2, s3))
    return b.use("sim-trans", Not(iff(phi, psi)),
                 Or(Not(Implies(phi, psi)), Not(Implies(psi, phi))),
                 Or(And(phi, Not(psi)), And(Not(phi), psi)),
                 prem=(s1, s4))


@theorem("vpdndpsi-to-vpsaupsi-dnd-vpsipsi", "MGc",
         stmt=lambda phi, psi: Implies(
             iff(phi, psi), iff(Or(phi, psi), And(phi, psi))))
def _iff_collapses_join_meet(b, phi, psi):
    """Step four runs on the conjunction half from step three, not on
    the disjunction half again, and the closing triangle is anchored at
    the right operand."""
    comb = "vp-to-psi-dnd-chi-and-chi-dnd-gamma-implies-vp-to-psi-dnd-gamma"
    s1 = b.use("vpdndpsi-sau-r", phi, psi, psi)
    s2 = b.use(comb, iff(phi, psi), Or(phi, psi), Or(psi, psi), psi,
               prem=(s1, b.use("sau-idemp", psi)))
    s3 = b.use("vpdndpsi-si-r", phi, psi, psi)
    s4 = b.use(comb, iff(phi, psi), And(phi, psi), And(psi, psi), psi,
               prem=(s3, b.use("si-idemp", psi)))
    s5 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               iff(phi, psi), iff(Or(phi, psi), psi),
               iff(And(phi, psi), psi), prem=(s2, s4))
    s6 = b.use("dnd-tranz", Or(phi, psi), And(phi, psi), psi)
    return b.syl(s5, s6)


@theorem("useful-mem-intro", "MGc",
         stmt=lambda phi, psi: Implies(
             Or(phi, psi), Or(Not(iff(phi, psi)), And(phi, psi))))
def _join_forces_iff_or_meet(b, phi, psi):
    """The antecedent swap feeds on the syllogism step right before it;
    two consecutive steps share a number in the source."""
    s1 = b.use("vpdndpsi-to-vpsaupsi-dnd-vpsipsi", phi, psi)
    s2 = b.axiom("weakening-2",
                 phi=Implies(Or(phi, psi), And(phi, psi)),
                 psi=Implies(And(phi, psi), Or(phi, psi)))
    s3 = b.syl(s1, s2)
    s3b = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", iff(phi, psi),
                Or(phi, psi), And(phi, psi), prem=(s3,))
    s4 = b.use("def-imp-or", iff(phi, psi), And(phi, psi))
    return b.use("sim-pairs-to-right-1", Or(phi, psi),
                 Implies(iff(phi, psi), And(phi, psi)),
                 Or(Not(iff(phi, psi)), And(phi, psi)),
                 prem=(s4, s3b))


@derived("vp-ra-psi-forall-vp-ra-forall-psi-M", "MGc",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(Forall(x, phi),
                                          Forall(x, psi)))
def _forall_mono(b, phi, psi, x, prem):
    s1 = b.rule("gen", prem[0], x=x)
    s2 = b.axiom("monk-1", phi=phi, psi=psi, x=x)
    return b.mp(s1, s2)


@derived("vp-ra-psi-forall-vp-dnd-forall-psi-M", "MGc",
         prem=lambda phi, psi, x: (iff(phi, psi),),
         stmt=lambda phi, psi, x: iff(Forall(x, phi), Forall(x, psi)))
def _forall_iff_mono(b, phi, psi, x, prem):
    """The closing display transposes the two sides; the statement
    orientation is the one proved."""
    s1 = _fwd(b, phi, psi, prem)
    s2 = _bwd(b, phi, psi, prem)
    s3 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", phi, psi, x,
               prem=(s1,))
    s4 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", psi, phi, x,
               prem=(s2,))
    return _combine(b, Forall(x, phi), Forall(x, psi), s3, s4)


@derived("vp-ra-psi-ra-chi-forall-M", "MGc",
         prem=lambda phi, psi, chi, x: (Implies(phi, Implies(psi, chi)),),
         stmt=lambda phi, psi, chi, x: Implies(
             Forall(x, phi), Implies(Forall(x, psi), Forall(x, chi))))
def _forall_mono_2(b, phi, psi, chi, x, prem):
    s1 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", phi,
               Implies(psi, chi), x, prem=prem)
    s2 = b.axiom("monk-1", phi=psi, psi=chi, x=x)
    return b.syl(s1, s2)


@derived("vp-ra-psi-exists-vp-ra-exists-psi-M", "MGc",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(Exists(x, phi),
                                          Exists(x, psi)))
def _exists_mono(b, phi, psi, x, prem):
    s2 = b.use("rec-ax3-rule", phi, psi, prem=prem)
    s3 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", Not(psi),
               Not(phi), x, prem=(s2,))
    s4 = b.use("rec-ax3-rule", Forall(x, Not(psi)), Forall(x, Not(phi)),
               prem=(s3,))
    s5 = b.axiom("axiom-exists-1", phi=phi, x=x)
    s6 = b.syl(s5, s4)
    s7 = b.axiom("axiom-exists-2", phi=psi, x=x)
    return b.syl(s6, s7)


@derived("vp-ra-psi-exists-vp-dnd-exists-psi-M", "MGc",
         prem=lambda phi, psi, x: (iff(phi, psi),),
         stmt=lambda phi, psi, x: iff(Exists(x, phi), Exists(x, psi)))
def _exists_iff_mono(b, phi, psi, x, prem):
    """The closing display transposes the two sides; the statement
    orientation is the one proved."""
    s1 = _fwd(b, phi, psi, prem)
    s2 = _bwd(b, phi, psi, prem)
    s3 = b.use("vp-ra-psi-exists-vp-ra-exists-psi-M", phi, psi, x,
               prem=(s1,))
    s4 = b.use("vp-ra-psi-exists-vp-ra-exists-psi-M", psi, phi, x,
               prem=(s2,))
    return _combine(b, Exists(x, phi), Exists(x, psi), s3, s4)


@theorem("existsxvp-dnd-negforallxngvp", "MGc",
         stmt=lambda phi, x: iff(Exists(x, phi),
                                 Not(Forall(x, Not(phi)))))
def _exists_duality(b, phi, x):
    s1 = b.axiom("axiom-exists-1", phi=phi, x=x)
    s2 = b.axiom("axiom-exists-2", phi=phi, x=x)
    return _combine(b, Exists(x, phi), Not(Forall(x, Not(phi))),
                    s1, s2)


@theorem("forallxvp-to-negexistsxngvp", "MGc",
         stmt=lambda phi, x: Implies(Forall(x, phi),
                                     Not(Exists(x, Not(phi)))))
def _forall_to_neg_exists_neg(b, phi, x):
    s1 = b.axiom("axiom-exists-1", phi=Not(phi), x=x)
    s2 = b.use("rec-ax3-rule", Exists(x, Not(phi)),
               Not(Forall(x, Not(Not(phi)))), prem=(s1,))
    s3a = b.use("negnegvp-dnd-vp", Forall(x, Not(Not(phi))))
    s3 = _bwd(b, Not(Not(Forall(x, Not(Not(phi))))),
              Forall(x, Not(Not(phi))), (s3a,))
    s4 = b.syl(s3, s2)
    s5a = b.use("negnegvp-dnd-vp", phi)
    s5 = _bwd(b, Not(Not(phi)), phi, (s5a,))
    s6 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", phi,
               Not(Not(phi)), x, prem=(s5,))
    return b.syl(s6, s4)


@theorem("negexistsxngvp-to-forallxvp", "MGc",
         stmt=lambda phi, x: Implies(Not(Exists(x, Not(phi))),
                                     Forall(x, phi)))
def _neg_exists_neg_to_forall(b, phi, x):
    s1 = b.axiom("axiom-exists-2", phi=Not(phi), x=x)
    s2 = b.use("rec-ax3-rule", Not(Forall(x, Not(Not(phi)))),
               Exists(x, Not(phi)), prem=(s1,))
    s3a = b.use("negnegvp-dnd-vp", Forall(x, Not(Not(phi))))
    s3 = _fwd(b, Not(Not(Forall(x, Not(Not(phi))))),
              Forall(x, Not(Not(phi))), (s3a,))
    s4 = b.syl(s2, s3)
    s5a = b.use("negnegvp-dnd-vp", phi)
    s5 = _fwd(b, Not(Not(phi)), phi, (s5a,))
    s6 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", Not(Not(phi)),
               phi, x, prem=(s5,))
    return b.syl(s4, s6)


@theorem("forallxvp-dnd-negexistsxngvp", "MGc",
         stmt=lambda phi, x: iff(Forall(x, phi),
                                 Not(Exists(x, Not(phi)))))
def _forall_duality(b, phi, x):
    s1 = b.use("forallxvp-to-negexistsxngvp", phi, x)
    s2 = b.use("negexistsxngvp-to-forallxvp", phi, x)
    return _combine(b, Forall(x, phi), Not(Exists(x, Not(phi))),
                    s1, s2)


@theorem("negexistsxvp-dnd-forallxnegvp", "MGc",
         stmt=lambda phi, x: iff(Not(Exists(x, phi)),
                                 Forall(x, Not(phi))))
def _neg_exists(b, phi, x):
    """The congruence step lands mirrored relative to its display and
    is flipped before chaining; the chaining steps are equivalence
    transitivity, not syllogism."""
    s1 = b.use("existsxvp-dnd-negforallxngvp", phi, x)
    s2 = b.use("Gamma-dnd-cong-neg", Exists(x, phi),
               Not(Forall(x, Not(phi))), prem=(s1,))
    s2b = b.use("sim-symm", Not(Exists(x, phi)),
                Not(Not(Forall(x, Not(phi)))), prem=(s2,))
    s3 = b.use("negnegvp-dnd-vp", Forall(x, Not(phi)))
    s4 = b.use("sim-symm", Not(Not(Forall(x, Not(phi)))),
               Forall(x, Not(phi)), prem=(s3,))
    s5 = b.use("sim-trans", Forall(x, Not(phi)),
               Not(Not(Forall(x, Not(phi)))), Not(Exists(x, phi)),
               prem=(s4, s2b))
    return b.use("sim-symm", Forall(x, Not(phi)), Not(Exists(x, phi)),
                 prem=(s5,))


@theorem("negforallxvp-dnd-existsxnegvp", "MGc",
         stmt=lambda phi, x: iff(Not(Forall(x, phi)),
                                 Exists(x, Not(phi))))
def _neg_forall(b, phi, x):
    """Same mirroring as the negated-existential twin."""
    s1 = b.use("forallxvp-dnd-negexistsxngvp", phi, x)
    s2 = b.use("Gamma-dnd-cong-neg", Forall(x, phi),
               Not(Exists(x, Not(phi))), prem=(s1,))
    s2b = b.use("sim-symm", Not(Forall(x, phi)),
                Not(Not(Exists(x, Not(phi)))), prem=(s2,))
    s3 = b.use("negnegvp-dnd-vp", Exists(x, Not(phi)))
    s4 = b.use("sim-symm", Not(Not(Exists(x, Not(phi)))),
               Exists(x, Not(phi)), prem=(s3,))
    s5 = b.use("sim-trans", Exists(x, Not(phi)),
               Not(Not(Exists(x, Not(phi)))), Not(Forall(x, phi)),
               prem=(s4, s2b))
    return b.use("sim-symm", Exists(x, Not(phi)), Not(Forall(x, phi)),
                 prem=(s5,))


@theorem("forallx-vp-si-psi-to-forallxvp-si-forallxpsi-M", "MGc",
         stmt=lambda phi, psi, x: Implies(
             Forall(x, And(phi, psi)),
             And(Forall(x, phi), Forall(x, psi))))
def _forall_over_and_out(b, phi, psi, x):
    """The pairing step combines the two distributed halves in
    statement order and feeds on both, not on the bare weakening."""
    s1 = b.axiom("weakening-2", phi=phi, psi=psi)
    s2 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", And(phi, psi),
               phi, x, prem=(s1,))
    s3 = b.use("weak-si-2", phi, psi)
    s4 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", And(phi, psi),
               psi, x, prem=(s3,))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 Forall(x, And(phi, psi)), Forall(x, phi),
                 Forall(x, psi), prem=(s2, s4))


@theorem("forallxvp-si-forallxpsi-to-forallx-vp-si-psi-M", "MGc",
         stmt=lambda phi, psi, x: Implies(
             And(Forall(x, phi), Forall(x, psi)),
             Forall(x, And(phi, psi))))
def _forall_over_and_in(b, phi, psi, x):
    """The importation closes over the syllogism step, not over
    itself."""
    s1 = b.use("vp-to-psi-to-vpsipsi", phi, psi)
    s2 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", phi,
               Implies(psi, And(phi, psi)), x, prem=(s1,))
    s3 = b.axiom("monk-1", phi=psi, psi=And(phi, psi), x=x)
    s4 = b.syl(s2, s3)
    return b.rule("importation", s4)


@theorem("forallxvp-si-forallxpsi-dnd-forallx-vp-si-psi-M", "MGc",
         stmt=lambda phi, psi, x: iff(
             And(Forall(x, phi), Forall(x, psi)),
             Forall(x, And(phi, psi))))
def _forall_over_and(b, phi, psi, x):
    s1 = b.use("forallxvp-si-forallxpsi-to-forallx-vp-si-psi-M",
               phi, psi, x)
    s2 = b.use("forallx-vp-si-psi-to-forallxvp-si-forallxpsi-M",
               phi, psi, x)
    return _combine(b, And(Forall(x, phi), Forall(x, psi)),
                    Forall(x, And(phi, psi)), s1, s2)


@theorem("existsxvp-to-vpp", "MGc",
         stmt=lambda phi, x: Implies(Exists(x, phi), phi),
         conds=(("x does not occur in phi",
                 lambda phi, x: not occurs(x, phi)),))
def _exists_vacuous(b, phi, x):
    """Step one is vacuous generalization, not distribution; the label
    in the source names the wrong axiom."""
    s1 = b.axiom("monk-2", phi=Not(phi), x=x)
    s2 = b.use("rec-ax3-rule", Not(phi), Forall(x, Not(phi)),
               prem=(s1,))
    s3a = b.use("existsxvp-dnd-negforallxngvp", phi, x)
    s3 = _fwd(b, Exists(x, phi), Not(Forall(x, Not(phi))), (s3a,))
    s4 = b.syl(s3, s2)
    s5a = b.use("negnegvp-dnd-vp", phi)
    s5 = _fwd(b, Not(Not(phi)), phi, (s5a,))
    return b.syl(s4, s5)


_GUARD_CONDS = (("z does not occur in chi",
                 lambda phi, psi, chi, z: not occurs(z, chi)),)


@derived("chi-vppsi-chi-forallxvppsi-M", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, Implies(Forall(z, phi), Forall(z, psi))),
         conds=_GUARD_CONDS)
def _guard_forall(b, phi, psi, chi, z, prem):
    s2 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", chi,
               Implies(phi, psi), z, prem=prem)
    s3 = b.axiom("monk-1", phi=phi, psi=psi, x=z)
    s4 = b.syl(s2, s3)
    s5 = b.axiom("monk-2", phi=chi, x=z)
    return b.syl(s5, s4)


@derived("chi-vppsi-chi-forallxvppsi-dnd-M", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, iff(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, iff(Forall(z, phi), Forall(z, psi))),
         conds=_GUARD_CONDS)
def _guard_forall_iff(b, phi, psi, chi, z, prem):
    """The backward half chains the premise with the projection, so its
    syllogism feeds on step one."""
    s2 = b.axiom("weakening-2", phi=Implies(phi, psi),
                 psi=Implies(psi, phi))
    s3 = b.syl(prem[0], s2)
    s4 = b.use("chi-vppsi-chi-forallxvppsi-M", phi, psi, chi, z,
               prem=(s3,))
    s5 = b.use("weak-si-2", Implies(phi, psi), Implies(psi, phi))
    s6 = b.syl(prem[0], s5)
    s7 = b.use("chi-vppsi-chi-forallxvppsi-M", psi, phi, chi, z,
               prem=(s6,))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 chi, Implies(Forall(z, phi), Forall(z, psi)),
                 Implies(Forall(z, psi), Forall(z, phi)),
                 prem=(s4, s7))


@derived("chi-vppsi-chi-existsxvppsi-M", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, Implies(Exists(z, phi), Exists(z, psi))),
         conds=_GUARD_CONDS)
def _guard_exists(b, phi, psi, chi, z, prem):
    """Step seven needs the duality axiom that leaves the existential,
    not the one that enters it."""
    s2 = b.use("contraposition", phi, psi)
    s3 = b.syl(prem[0], s2)
    s4 = b.use("chi-vppsi-chi-forallxvppsi-M", Not(psi), Not(phi),
               chi, z, prem=(s3,))
    s5 = b.use("contraposition", Forall(z, Not(psi)),
               Forall(z, Not(phi)))
    s6 = b.syl(s4, s5)
    s7 = b.axiom("axiom-exists-1", phi=phi, x=z)
    s8 = b.axiom("axiom-exists-2", phi=psi, x=z)
    s9 = b.use("psi-to-vp-chi-to-gamma-vp-to-chi-to-psi-to-gamma",
               Not(Forall(z, Not(phi))), Exists(z, phi),
               Not(Forall(z, Not(psi))), Exists(z, psi),
               prem=(s7, s8))
    return b.syl(s6, s9)


@derived("chi-vppsi-chi-existsxvppsi-dnd-M", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, iff(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, iff(Exists(z, phi), Exists(z, psi))),
         conds=_GUARD_CONDS)
def _guard_exists_iff(b, phi, psi, chi, z, prem):
    """The backward half chains the premise with the other projection;
    its syllogism does not reuse the forward pair."""
    s2 = b.axiom("weakening-2", phi=Implies(phi, psi),
                 psi=Implies(psi, phi))
    s3 = b.syl(prem[0], s2)
    s4 = b.use("chi-vppsi-chi-existsxvppsi-M", phi, psi, chi, z,
               prem=(s3,))
    s5 = b.use("weak-si-2", Implies(phi, psi), Implies(psi, phi))
    s6 = b.syl(prem[0], s5)
    s7 = b.use("chi-vppsi-chi-existsxvppsi-M", psi, phi, chi, z,
               prem=(s6,))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 chi, Implies(Exists(z, phi), Exists(z, psi)),
                 Implies(Exists(z, psi), Exists(z, phi)),
                 prem=(s4, s7))


_NFV_CONDS = (("z not free in chi",
               lambda phi, psi, chi, z: z not in chi.fve),)


def _nfv_detour(b, phi, psi, chi, z, label, inner, outer, prem):
    # z may still appear as a binder in chi; rename those binders to a
    # fresh name so the occurrence-conditioned entry applies, then carry
    # the conclusion back across the renaming equivalence
    if not occurs(z, chi):
        return b.use(label, phi, psi, chi, z, prem=prem)
    y = fresh("y", avoid_set(chi) | {z})
    delta = subb(z, y, chi)
    s2 = b.use("thm-vp-dnd-subbxybvp", chi, z, y)
    base = {(chi, delta): s2}
    s3 = dnd_walk(b, Implies(chi, inner), Implies(delta, inner), base,
                  MGC_LABELS)
    s4 = b.use("vpdndpsi-imp-vp-iff-psi→", Implies(chi, inner),
               Implies(delta, inner), prem=(s3, prem[0]))
    s5 = b.use(label, phi, psi, delta, z, prem=(s4,))
    s6 = dnd_walk(b, Implies(chi, outer), Implies(delta, outer), base,
                  MGC_LABELS)
    return b.use("vpdndpsi-imp-vp-iff-psi←", Implies(chi, outer),
                 Implies(delta, outer), prem=(s6, s5))


@derived("chi-vppsi-chi-forallxvppsi-M-NFV", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, Implies(Forall(z, phi), Forall(z, psi))),
         conds=_NFV_CONDS)
def _guard_forall_nfv(b, phi, psi, chi, z, prem):
    return _nfv_detour(b, phi, psi, chi, z,
                       "chi-vppsi-chi-forallxvppsi-M",
                       Implies(phi, psi),
                       Implies(Forall(z, phi), Forall(z, psi)), prem)


@derived("chi-vppsi-chi-forallxvppsi-dnd-M-NFV", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, iff(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, iff(Forall(z, phi), Forall(z, psi))),
         conds=_NFV_CONDS)
def _guard_forall_iff_nfv(b, phi, psi, chi, z, prem):
    return _nfv_detour(b, phi, psi, chi, z,
                       "chi-vppsi-chi-forallxvppsi-dnd-M",
                       iff(phi, psi),
                       iff(Forall(z, phi), Forall(z, psi)), prem)


@derived("chi-vppsi-chi-existsxvppsi-M-NFV", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, Implies(Exists(z, phi), Exists(z, psi))),
         conds=_NFV_CONDS)
def _guard_exists_nfv(b, phi, psi, chi, z, prem):
    return _nfv_detour(b, phi, psi, chi, z,
                       "chi-vppsi-chi-existsxvppsi-M",
                       Implies(phi, psi),
                       Implies(Exists(z, phi), Exists(z, psi)), prem)


@derived("chi-vppsi-chi-existsxvppsi-dnd-M-NFV", "MGc",
         prem=lambda phi, psi, chi, z: (Implies(chi, iff(phi, psi)),),
         stmt=lambda phi, psi, chi, z: Implies(
             chi, iff(Exists(z, phi), Exists(z, psi))),
         conds=_NFV_CONDS)
def _guard_exists_iff_nfv(b, phi, psi, chi, z, prem):
    return _nfv_detour(b, phi, psi, chi, z,
                       "chi-vppsi-chi-existsxvppsi-dnd-M",
                       iff(phi, psi),
                       iff(Exists(z, phi), Exists(z, psi)), prem)

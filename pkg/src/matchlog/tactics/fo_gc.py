"""First-order theorems and rules: quantifier shifting and renaming.

The quantifier axioms of the core calculus are substitution-shaped; the
plain instances (y := x) come first and everything else builds on them.
The renaming lemmas at the end are the sharp ones: their side conditions
are exactly what makes the free substitution reversible.
"""

from __future__ import annotations

from ..syntax import BOT, Exists, Forall, Implies, Not, iff, occurs
from ..subst import subf
from .catalog import derived, theorem


def _combine(b, left, right, fwd, bwd):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→", left, right,
                 prem=(fwd, bwd))


def _fwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-l", left, right,
                 prem=prem)


def _bwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-r", left, right,
                 prem=prem)


@theorem("forall-quant-x", "Gc",
         stmt=lambda phi, x: Implies(Forall(x, phi), phi))
def _forall_inst_self(b, phi, x):
    """Instantiating a universal at its own variable: subf(x, x, phi) is
    phi itself and the capture condition is vacuous."""
    return b.axiom("forall-quantifier", phi=phi, x=x, y=x)


@theorem("exists-quant-x", "Gc",
         stmt=lambda phi, x: Implies(phi, Exists(x, phi)))
def _exists_intro_self(b, phi, x):
    return b.axiom("exists-quantifier", phi=phi, x=x, y=x)


@theorem("forall-vp-to-exists-vp", "Gc",
         stmt=lambda phi, x: Implies(Forall(x, phi), Exists(x, phi)))
def _forall_to_exists(b, phi, x):
    s1 = b.use("forall-quant-x", phi, x)
    s2 = b.use("exists-quant-x", phi, x)
    return b.syl(s1, s2)


@theorem("existsxvp-to-notforallxnotvp", "Gc",
         stmt=lambda phi, x: Implies(Exists(x, phi),
                                     Not(Forall(x, Not(phi)))))
def _exists_to_not_forall_not(b, phi, x):
    s1 = b.use("forall-quant-x", Not(phi), x)
    s2 = b.use("Gamma-vptonegpsi-implies-Gamma-psitonegvp",
               Forall(x, Not(phi)), phi, prem=(s1,))
    # x is bound in the conclusion's right side, so the rule applies
    return b.rule("exists-rule", s2, x=x)


@theorem("forallxnegvp-to-negexistsxvp", "Gc",
         stmt=lambda phi, x: Implies(Forall(x, Not(phi)),
                                     Not(Exists(x, phi))))
def _forall_not_to_not_exists(b, phi, x):
    s1 = b.use("existsxvp-to-notforallxnotvp", phi, x)
    return b.use("Gamma-vptonegpsi-implies-Gamma-psitonegvp",
                 Exists(x, phi), Forall(x, Not(phi)), prem=(s1,))


@theorem("existsxvp-to-psi-tto-forallx-vptopsi", "Gc",
         stmt=lambda phi, psi, x: Implies(
             Implies(Exists(x, phi), psi),
             Forall(x, Implies(phi, psi))),
         conds=(("x not free in psi",
                 lambda phi, psi, x: x not in psi.fve),))
def _exists_elim_shift(b, phi, psi, x):
    s1 = b.use("exists-quant-x", phi, x)
    s2 = b.use("vp-to-psi-imp-psi-to-chi-tto-vp-to-chi",
               phi, Exists(x, phi), psi, prem=(s1,))
    return b.rule("forall-rule", s2, x=x)


@derived("vp-ra-psi-forall-vp-ra-forall-psi", "Gc",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(Forall(x, phi), Forall(x, psi)))
def _mono_forall(b, phi, psi, x, prem):
    s1 = b.use("forall-quant-x", phi, x)
    s2 = b.syl(s1, prem[0])
    return b.rule("forall-rule", s2, x=x)


@derived("vp-dnd-psi-forall-vp-dnd-forall-psi", "Gc",
         prem=lambda phi, psi, x: (iff(phi, psi),),
         stmt=lambda phi, psi, x: iff(Forall(x, phi), Forall(x, psi)))
def _cong_forall(b, phi, psi, x, prem):
    s2 = _fwd(b, phi, psi, prem)
    s3 = b.use("vp-ra-psi-forall-vp-ra-forall-psi", phi, psi, x,
               prem=(s2,))
    s4 = _bwd(b, phi, psi, prem)
    s5 = b.use("vp-ra-psi-forall-vp-ra-forall-psi", psi, phi, x,
               prem=(s4,))
    return _combine(b, Forall(x, phi), Forall(x, psi), s3, s5)


@derived("vp-ra-psi-exists-vp-ra-exists-psi", "Gc",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(Exists(x, phi), Exists(x, psi)))
def _mono_exists(b, phi, psi, x, prem):
    s2 = b.use("exists-quant-x", psi, x)
    s3 = b.syl(prem[0], s2)
    return b.rule("exists-rule", s3, x=x)


@derived("vp-dnd-psi-exists-vp-dnd-exists-psi", "Gc",
         prem=lambda phi, psi, x: (iff(phi, psi),),
         stmt=lambda phi, psi, x: iff(Exists(x, phi), Exists(x, psi)))
def _cong_exists(b, phi, psi, x, prem):
    s2 = _fwd(b, phi, psi, prem)
    s3 = b.use("vp-ra-psi-exists-vp-ra-exists-psi", phi, psi, x,
               prem=(s2,))
    s4 = _bwd(b, phi, psi, prem)
    s5 = b.use("vp-ra-psi-exists-vp-ra-exists-psi", psi, phi, x,
               prem=(s4,))
    return _combine(b, Exists(x, phi), Exists(x, psi), s3, s5)


@theorem("forallxvp-to-notexistsxnotvp", "Gc",
         stmt=lambda phi, x: Implies(Forall(x, phi),
                                     Not(Exists(x, Not(phi)))))
def _forall_to_not_exists_not(b, phi, x):
    """Step three instantiates a closed theorem; it consumes no prior
    step."""
    s1 = b.use("dni", phi)
    s2 = b.use("vp-ra-psi-forall-vp-ra-forall-psi",
               phi, Not(Not(phi)), x, prem=(s1,))
    s3 = b.use("forallxnegvp-to-negexistsxvp", Not(phi), x)
    return b.syl(s2, s3)


@theorem("forallxnegnegvpforall-dnd-negexistsxnegvp", "Gc",
         stmt=lambda phi, x: iff(Not(Exists(x, Not(phi))),
                                 Forall(x, Not(Not(phi)))))
def _not_exists_not_vs_forall_notnot(b, phi, x):
    """The combining step takes its forward half from step six, so the
    negated existential is the left side of the biconditional."""
    ne = Exists(x, Not(phi))
    s1 = b.use("existsxvp-to-psi-tto-forallx-vptopsi", Not(phi), BOT, x)
    s2 = b.axiom("axiom-not-1", phi=ne)
    s3 = b.syl(s2, s1)
    s4 = b.axiom("axiom-not-2", phi=Not(phi))
    s5 = b.use("vp-ra-psi-forall-vp-ra-forall-psi",
               Implies(Not(phi), BOT), Not(Not(phi)), x, prem=(s4,))
    s6 = b.syl(s3, s5)
    s7 = b.use("forallxnegvp-to-negexistsxvp", Not(phi), x)
    return _combine(b, Not(ne), Forall(x, Not(Not(phi))), s6, s7)


@theorem("axiom-forall-2-Gc", "Gc",
         stmt=lambda phi, x: Implies(Not(Exists(x, Not(phi))),
                                     Forall(x, phi)))
def _forall_from_not_exists_not(b, phi, x):
    """Step four lifts step three under the quantifier; it feeds on step
    three, not on a later step."""
    s1 = b.use("forallxnegnegvpforall-dnd-negexistsxnegvp", phi, x)
    s2 = _fwd(b, Not(Exists(x, Not(phi))), Forall(x, Not(Not(phi))),
              (s1,))
    s3 = b.use("negnegvp-vp", phi)
    s4 = b.use("vp-ra-psi-forall-vp-ra-forall-psi",
               Not(Not(phi)), phi, x, prem=(s3,))
    return b.syl(s2, s4)


@theorem("vp-dnd-forall-vp", "Gc",
         stmt=lambda phi, x: iff(phi, Forall(x, phi)),
         conds=(("x not free in phi",
                 lambda phi, x: x not in phi.fve),))
def _vacuous_forall(b, phi, x):
    s1 = b.use("vp-to-vp", phi)
    s2 = b.rule("forall-rule", s1, x=x)
    s3 = b.use("forall-quant-x", phi, x)
    return _combine(b, phi, Forall(x, phi), s2, s3)


@theorem("vp-dnd-exists-vp", "Gc",
         stmt=lambda phi, x: iff(phi, Exists(x, phi)),
         conds=(("x not free in phi",
                 lambda phi, x: x not in phi.fve),))
def _vacuous_exists(b, phi, x):
    """The combining step takes its forward half from step three and its
    backward half from step two; the universal variant consumes its two
    halves in the opposite order."""
    s1 = b.use("vp-to-vp", phi)
    s2 = b.rule("exists-rule", s1, x=x)
    s3 = b.use("exists-quant-x", phi, x)
    return _combine(b, phi, Exists(x, phi), s3, s2)


_RENAME_CONDS = (
    ("x not bound in phi", lambda phi, x, y: x not in phi.bve),
    ("x = y or y does not occur in phi",
     lambda phi, x, y: x == y or not occurs(y, phi)),
)


@theorem("forallxvp-to-subfxyvp-Gc", "Gc",
         stmt=lambda phi, x, y: Implies(Forall(x, phi),
                                        Forall(y, subf(x, y, phi))),
         conds=_RENAME_CONDS)
def _rename_forall_fwd(b, phi, x, y):
    # y does not occur in phi, so x is free for y and the instance below
    # is legal; y is likewise not free in the universal, so the vacuous
    # quantifier can be prefixed.
    if x == y:
        return b.use("vp-to-vp", Forall(x, phi))
    s1 = b.axiom("forall-quantifier", phi=phi, x=x, y=y)
    s2 = b.use("vp-ra-psi-forall-vp-ra-forall-psi",
               Forall(x, phi), subf(x, y, phi), y, prem=(s1,))
    s3 = b.use("vp-dnd-forall-vp", Forall(x, phi), y)
    s4 = _fwd(b, Forall(x, phi), Forall(y, Forall(x, phi)), (s3,))
    return b.syl(s4, s2)


@theorem("subfxyvp-to-forallxvp-Gc", "Gc",
         stmt=lambda phi, x, y: Implies(Forall(y, subf(x, y, phi)),
                                        Forall(x, phi)),
         conds=_RENAME_CONDS)
def _rename_forall_bwd(b, phi, x, y):
    """Instantiating the forward direction at the substituted pattern
    sends y back to x; the two substitutions cancel, which is exactly
    what the side conditions guarantee."""
    if x == y:
        return b.use("vp-to-vp", Forall(x, phi))
    return b.use("forallxvp-to-subfxyvp-Gc", subf(x, y, phi), y, x)


@theorem("forallxvp-dns-subfxyvp-Gc", "Gc",
         stmt=lambda phi, x, y: iff(Forall(x, phi),
                                    Forall(y, subf(x, y, phi))),
         conds=_RENAME_CONDS)
def _rename_forall_iff(b, phi, x, y):
    s1 = b.use("forallxvp-to-subfxyvp-Gc", phi, x, y)
    s2 = b.use("subfxyvp-to-forallxvp-Gc", phi, x, y)
    return _combine(b, Forall(x, phi), Forall(y, subf(x, y, phi)),
                    s1, s2)

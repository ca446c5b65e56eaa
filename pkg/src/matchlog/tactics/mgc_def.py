"""Definedness and totality layer of the definedness calculus.

The ceiling operator is application of the definedness constant, the
floor operator is its dual, and everything here is driven by the four
dedicated axioms plus framing. The application-compatibility rules and
the guarded framing family at the end are what the equality congruences
and the substitution walkers plug into.
"""

from __future__ import annotations

from ..syntax import (And, App, BOT, DEF, EVar, Exists, Forall, Implies,
                      Not, Or, ceil, eqdef, floor, iff)
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


@theorem("bot-dnd-ceilbot", "MGc", stmt=lambda: iff(BOT, ceil(BOT)))
def _bot_ceil_bot(b):
    s1 = b.axiom("ex-falso", phi=ceil(BOT))
    s2 = b.axiom("ceil-bot")
    return _combine(b, BOT, ceil(BOT), s1, s2)


@derived("lemma-imp-compat-in-ceil", "MGc",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(ceil(phi), ceil(psi)))
def _imp_compat_ceil(b, phi, psi, prem):
    # ceil is application of the definedness constant, so framing does it
    return b.rule("framing-right", prem[0], chi=DEF)


@derived("rule-iff-compat-in-ceil", "MGc",
         prem=lambda phi, psi: (iff(phi, psi),),
         stmt=lambda phi, psi: iff(ceil(phi), ceil(psi)))
def _iff_compat_ceil(b, phi, psi, prem):
    s1 = _fwd(b, phi, psi, prem)
    s2 = _bwd(b, phi, psi, prem)
    s3 = b.use("lemma-imp-compat-in-ceil", phi, psi, prem=(s1,))
    s4 = b.use("lemma-imp-compat-in-ceil", psi, phi, prem=(s2,))
    return _combine(b, ceil(phi), ceil(psi), s3, s4)


@derived("lemma-imp-compat-in-floor", "MGc",
         prem=lambda phi, psi: (Implies(phi, psi),),
         stmt=lambda phi, psi: Implies(floor(phi), floor(psi)))
def _imp_compat_floor(b, phi, psi, prem):
    s1 = b.use("rec-ax3-rule", phi, psi, prem=prem)
    s2 = b.use("lemma-imp-compat-in-ceil", Not(psi), Not(phi), prem=(s1,))
    return b.use("rec-ax3-rule", ceil(Not(psi)), ceil(Not(phi)), prem=(s2,))


@derived("lemma-iff-compat-in-floor", "MGc",
         prem=lambda phi, psi: (iff(phi, psi),),
         stmt=lambda phi, psi: iff(floor(phi), floor(psi)))
def _iff_compat_floor(b, phi, psi, prem):
    s1 = _fwd(b, phi, psi, prem)
    s2 = _bwd(b, phi, psi, prem)
    s3 = b.use("lemma-imp-compat-in-floor", phi, psi, prem=(s1,))
    s4 = b.use("lemma-imp-compat-in-floor", psi, phi, prem=(s2,))
    return _combine(b, floor(phi), floor(psi), s3, s4)


@theorem("negfloorvp-dnd-ceilnegvp", "MGc",
         stmt=lambda phi: iff(Not(floor(phi)), ceil(Not(phi))))
def _neg_floor(b, phi):
    # the negated floor is a double negation of the ceiling, literally
    return b.use("negnegvp-dnd-vp", ceil(Not(phi)))


@theorem("negceilvp-dnd-negfloornegfloor", "MGc",
         stmt=lambda phi: iff(Not(ceil(phi)), floor(Not(phi))))
def _neg_ceil(b, phi):
    """The opening double-negation row is transposed in the source and
    the congruence row is cited as contraposition."""
    s1 = b.use("negnegvp-dnd-vp", phi)
    s2 = b.use("sim-symm", Not(Not(phi)), phi, prem=(s1,))
    s3 = b.use("rule-iff-compat-in-ceil", phi, Not(Not(phi)), prem=(s2,))
    return b.use("Gamma-dnd-cong-neg", ceil(phi), ceil(Not(Not(phi))),
                 prem=(s3,))


@theorem("lemma-ceil-negfloornegfloor", "MGc",
         stmt=lambda phi: iff(ceil(phi), Not(floor(Not(phi)))))
def _ceil_as_neg_floor(b, phi):
    """The congruence row is cited as contraposition in the source."""
    s1 = b.use("negceilvp-dnd-negfloornegfloor", phi)
    s2 = b.use("Gamma-dnd-cong-neg", Not(ceil(phi)), floor(Not(phi)),
               prem=(s1,))
    s3 = b.use("negnegvp-dnd-vp", ceil(phi))
    s4 = b.use("sim-symm", Not(Not(ceil(phi))), ceil(phi), prem=(s3,))
    return b.use("sim-trans", ceil(phi), Not(Not(ceil(phi))),
                 Not(floor(Not(phi))), prem=(s4, s2))


@theorem("lemma-floor-elim-alt", "MGc",
         stmt=lambda phi: Implies(floor(phi), phi))
def _floor_elim(b, phi):
    s1 = b.axiom("ceil-intro", phi=Not(phi))
    s2 = b.use("rec-ax3-rule", Not(phi), ceil(Not(phi)), prem=(s1,))
    s3 = _fwd(b, Not(Not(phi)), phi, (b.use("negnegvp-dnd-vp", phi),))
    return b.syl(s2, s3)


@derived("lemma-floor-intro-iff→", "MGc",
         prem=lambda phi: (phi,),
         stmt=lambda phi: floor(phi))
def _floor_intro(b, phi, prem):
    """The bottom-collapse step cites the propagation principle for
    bottom, which this system does not have; the dedicated collapse
    axiom proves the same line. Two rows near the end share a number
    in the source."""
    s2 = _bwd(b, Not(Not(phi)), phi, (b.use("negnegvp-dnd-vp", phi),))
    s3 = b.mp(prem[0], s2)
    s4 = b.axiom("axiom-not-1", phi=Not(phi))
    s5 = b.mp(s3, s4)
    s6 = b.use("lemma-imp-compat-in-ceil", Not(phi), BOT, prem=(s5,))
    s7 = b.axiom("ceil-bot")
    s8 = b.syl(s6, s7)
    s9 = b.axiom("axiom-not-2", phi=ceil(Not(phi)))
    return b.mp(s8, s9)


@derived("lemma-floor-intro-iff←", "MGc",
         prem=lambda phi: (floor(phi),),
         stmt=lambda phi: phi)
def _floor_drop(b, phi, prem):
    s2 = b.use("lemma-floor-elim-alt", phi)
    return b.mp(prem[0], s2)


@theorem("lemma-ceil-compat-in-or-1", "MGc",
         stmt=lambda phi, psi: Implies(ceil(Or(phi, psi)),
                                       Or(ceil(phi), ceil(psi))))
def _ceil_or_out(b, phi, psi):
    # disjunction propagation at the definedness constant
    return b.axiom("propagation-or-2", phi=phi, psi=psi, chi=DEF)


@theorem("lemma-ceil-compat-in-or-2", "MGc",
         stmt=lambda phi, psi: Implies(Or(ceil(phi), ceil(psi)),
                                       ceil(Or(phi, psi))))
def _ceil_or_in(b, phi, psi):
    s1 = b.axiom("weakening-1", phi=phi, psi=psi)
    s2 = b.rule("framing-right", s1, chi=DEF)
    s3 = b.use("weak-sau-2", phi, psi)
    s4 = b.rule("framing-right", s3, chi=DEF)
    return b.use("vp-to-chi-and-psi-to-chi-implies-vp-sau-psi-to-chi",
                 ceil(phi), ceil(psi), ceil(Or(phi, psi)), prem=(s2, s4))


@theorem("lemma-ceil-compat-in-or", "MGc",
         stmt=lambda phi, psi: iff(ceil(Or(phi, psi)),
                                   Or(ceil(phi), ceil(psi))))
def _ceil_or(b, phi, psi):
    s1 = b.use("lemma-ceil-compat-in-or-1", phi, psi)
    s2 = b.use("lemma-ceil-compat-in-or-2", phi, psi)
    return _combine(b, ceil(Or(phi, psi)), Or(ceil(phi), ceil(psi)),
                    s1, s2)


@theorem("lemma-floor-compat-in-and-1", "MGc",
         stmt=lambda phi, psi: Implies(floor(And(phi, psi)),
                                       And(floor(phi), floor(psi))))
def _floor_and_out(b, phi, psi):
    """Citations drift by one through the middle rows of the source,
    and the second half-split cites the disjunction decomposition
    where the conjunction one runs."""
    ca, cb = ceil(Not(phi)), ceil(Not(psi))
    s1 = b.use("lemma-ceil-compat-in-or-2", Not(phi), Not(psi))
    s2 = _fwd(b, Or(Not(phi), Not(psi)), Not(And(phi, psi)),
              (b.use("de-morgan-or-dnd", phi, psi),))
    s3 = b.rule("framing-right", s2, chi=DEF)
    s4 = b.syl(s1, s3)
    s5 = b.use("rec-ax3-rule", Or(ca, cb), ceil(Not(And(phi, psi))),
               prem=(s4,))
    s6 = _bwd(b, And(Not(ca), Not(cb)), Not(Or(ca, cb)),
              (b.use("de-morgan-and-dnd", ca, cb),))
    return b.syl(s5, s6)


@theorem("lemma-floor-compat-in-and-2", "MGc",
         stmt=lambda phi, psi: Implies(And(floor(phi), floor(psi)),
                                       floor(And(phi, psi))))
def _floor_and_in(b, phi, psi):
    """The unfolding row cites the conjunction decomposition where the
    disjunction one runs."""
    ca, cb = ceil(Not(phi)), ceil(Not(psi))
    s1 = _fwd(b, And(Not(ca), Not(cb)), Not(Or(ca, cb)),
              (b.use("de-morgan-and-dnd", ca, cb),))
    s2 = _bwd(b, Or(Not(phi), Not(psi)), Not(And(phi, psi)),
              (b.use("de-morgan-or-dnd", phi, psi),))
    s3 = b.rule("framing-right", s2, chi=DEF)
    s4 = b.use("lemma-ceil-compat-in-or-1", Not(phi), Not(psi))
    s5 = b.syl(s3, s4)
    s6 = b.use("rec-ax3-rule", ceil(Not(And(phi, psi))), Or(ca, cb),
               prem=(s5,))
    return b.syl(s1, s6)


@theorem("lemma-floor-compat-iff-and", "MGc",
         stmt=lambda phi, psi: iff(floor(And(phi, psi)),
                                   And(floor(phi), floor(psi))))
def _floor_and(b, phi, psi):
    s1 = b.use("lemma-floor-compat-in-and-1", phi, psi)
    s2 = b.use("lemma-floor-compat-in-and-2", phi, psi)
    return _combine(b, floor(And(phi, psi)),
                    And(floor(phi), floor(psi)), s1, s2)


@theorem("ceil-xsauvp", "MGc",
         stmt=lambda phi, x: ceil(Or(EVar(x), phi)))
def _ceil_var_or(b, phi, x):
    s1 = b.axiom("definedness", x=x)
    s2 = b.axiom("weakening-1", phi=ceil(EVar(x)), psi=ceil(phi))
    s3 = b.mp(s1, s2)
    s4 = b.use("lemma-ceil-compat-in-or-2", EVar(x), phi)
    return b.mp(s3, s4)


@derived("rule-iff-compat-in-app", "MGc",
         prem=lambda phi, psi, chi, gamma: (iff(phi, psi),
                                            iff(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: iff(App(phi, chi),
                                               App(psi, gamma)))
def _iff_compat_app(b, phi, psi, chi, gamma, prem):
    s2 = b.use("Gamma-vp-psi-vp-si-psi←-l", Implies(phi, psi),
               Implies(psi, phi), prem=(prem[0],))
    s3 = b.rule("framing-left", s2, chi=chi)
    s5 = b.axiom("weakening-2", phi=Implies(chi, gamma),
                 psi=Implies(gamma, chi))
    s6 = b.mp(prem[1], s5)
    s7 = b.rule("framing-right", s6, chi=psi)
    s8 = b.syl(s3, s7)
    s10 = b.use("Gamma-vp-psi-vp-si-psi←-r", Implies(phi, psi),
                Implies(psi, phi), prem=(prem[0],))
    s11 = b.rule("framing-left", s10, chi=gamma)
    s13 = b.use("weak-si-2", Implies(chi, gamma), Implies(gamma, chi))
    s14 = b.mp(prem[1], s13)
    s15 = b.rule("framing-right", s14, chi=phi)
    s16 = b.syl(s11, s15)
    return b.use("Gamma-vp-psi-vp-si-psi→",
                 Implies(App(phi, chi), App(psi, gamma)),
                 Implies(App(psi, gamma), App(phi, chi)),
                 prem=(s8, s16))


@derived("rule-iff-compat-in-app-left", "MGc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(App(phi, chi), App(psi, chi)))
def _iff_compat_app_left(b, phi, psi, chi, prem):
    s1 = b.use("sim-refl", chi)
    return b.use("rule-iff-compat-in-app", phi, psi, chi, chi,
                 prem=(prem[0], s1))


@derived("rule-iff-compat-in-app-right", "MGc",
         prem=lambda phi, chi, gamma: (iff(chi, gamma),),
         stmt=lambda phi, chi, gamma: iff(App(phi, chi), App(phi, gamma)))
def _iff_compat_app_right(b, phi, chi, gamma, prem):
    s1 = b.use("sim-refl", phi)
    return b.use("rule-iff-compat-in-app", phi, phi, chi, gamma,
                 prem=(s1, prem[0]))


@theorem("propagation-bot-l", "MGc",
         stmt=lambda phi: Implies(App(BOT, phi), BOT))
def _prop_bot_left(b, phi):
    """The opening row displays the collapse equivalence transposed."""
    s0 = b.use("bot-dnd-ceilbot")
    s1 = b.use("sim-symm", BOT, ceil(BOT), prem=(s0,))
    s2 = b.use("rule-iff-compat-in-app-left", ceil(BOT), BOT, phi,
               prem=(s1,))
    s3 = b.axiom("propagation-ceil-1", phi=BOT, psi=phi)
    return b.use("sim-pairs-to-left-right-1", App(ceil(BOT), phi),
                 App(BOT, phi), ceil(BOT), BOT, prem=(s2, s1, s3))


@theorem("propagation-bot-r", "MGc",
         stmt=lambda phi: Implies(App(phi, BOT), BOT))
def _prop_bot_right(b, phi):
    s0 = b.use("bot-dnd-ceilbot")
    s1 = b.use("sim-symm", BOT, ceil(BOT), prem=(s0,))
    s2 = b.use("rule-iff-compat-in-app-right", phi, ceil(BOT), BOT,
               prem=(s1,))
    s3 = b.axiom("propagation-ceil-2", phi=BOT, psi=phi)
    return b.use("sim-pairs-to-left-right-1", App(phi, ceil(BOT)),
                 App(phi, BOT), ceil(BOT), BOT, prem=(s2, s1, s3))


@derived("floordelta-imp-vpchitopsichi", "MGc",
         prem=lambda phi, psi, chi, delta: (
             Implies(floor(delta), Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, delta: (
             Implies(floor(delta),
                     Implies(App(phi, chi), App(psi, chi)))))
def _guarded_framing_left(b, phi, psi, chi, delta, prem):
    """The framing row is cited for the opposite side, both disjunction
    rewrites run on the left disjunct where the kernel expansion rule
    does not reach, and the closing commutation cites the propagation
    row instead of the syllogism right before it."""
    fd = floor(delta)
    cnd = ceil(Not(delta))
    s2 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", fd, phi, psi,
               prem=prem)
    s3 = _fwd(b, Implies(fd, psi), Or(Not(fd), psi),
              (b.use("def-imp-or", fd, psi),))
    s4 = b.syl(s2, s3)
    s5 = _fwd(b, Not(fd), cnd,
              (b.use("negfloorvp-dnd-ceilnegvp", delta),))
    s6 = b.use("expansion-2", Not(fd), cnd, psi, prem=(s5,))
    s7 = b.syl(s4, s6)
    s8 = b.rule("framing-left", s7, chi=chi)
    s9 = b.axiom("propagation-or-1", phi=cnd, psi=psi, chi=chi)
    s10 = b.syl(s8, s9)
    s11 = b.axiom("propagation-ceil-1", phi=Not(delta), psi=chi)
    s12 = b.use("expansion-2", App(cnd, chi), cnd, App(psi, chi),
                prem=(s11,))
    s13 = b.syl(s10, s12)
    s14 = _fwd(b, Or(cnd, App(psi, chi)),
               Implies(Not(cnd), App(psi, chi)),
               (b.use("vpsaupsi-negvptopsi", cnd, App(psi, chi)),))
    s15 = b.syl(s13, s14)
    return b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", App(phi, chi),
                 fd, App(psi, chi), prem=(s15,))


@derived("floordelta-imp-vpchidndpsichi", "MGc",
         prem=lambda phi, psi, chi, delta: (
             Implies(floor(delta), iff(phi, psi)),),
         stmt=lambda phi, psi, chi, delta: (
             Implies(floor(delta), iff(App(phi, chi), App(psi, chi)))))
def _guarded_framing_left_iff(b, phi, psi, chi, delta, prem):
    """The displays in the source carry the operand order of the mirror
    lemma."""
    fd = floor(delta)
    s2 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi←-l",
               fd, Implies(phi, psi), Implies(psi, phi), prem=prem)
    s3 = b.use("floordelta-imp-vpchitopsichi", phi, psi, chi, delta,
               prem=(s2,))
    s4 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi←-r",
               fd, Implies(phi, psi), Implies(psi, phi), prem=prem)
    s5 = b.use("floordelta-imp-vpchitopsichi", psi, phi, chi, delta,
               prem=(s4,))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 fd, Implies(App(phi, chi), App(psi, chi)),
                 Implies(App(psi, chi), App(phi, chi)), prem=(s3, s5))


@derived("floordelta-imp-chivptochipsi", "MGc",
         prem=lambda phi, psi, chi, delta: (
             Implies(floor(delta), Implies(phi, psi)),),
         stmt=lambda phi, psi, chi, delta: (
             Implies(floor(delta),
                     Implies(App(chi, phi), App(chi, psi)))))
def _guarded_framing_right(b, phi, psi, chi, delta, prem):
    """Same citation slips as the mirror lemma, with the framing row
    cited for the left side where the right one runs."""
    fd = floor(delta)
    cnd = ceil(Not(delta))
    s2 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", fd, phi, psi,
               prem=prem)
    s3 = _fwd(b, Implies(fd, psi), Or(Not(fd), psi),
              (b.use("def-imp-or", fd, psi),))
    s4 = b.syl(s2, s3)
    s5 = _fwd(b, Not(fd), cnd,
              (b.use("negfloorvp-dnd-ceilnegvp", delta),))
    s6 = b.use("expansion-2", Not(fd), cnd, psi, prem=(s5,))
    s7 = b.syl(s4, s6)
    s8 = b.rule("framing-right", s7, chi=chi)
    s9 = b.axiom("propagation-or-2", phi=cnd, psi=psi, chi=chi)
    s10 = b.syl(s8, s9)
    s11 = b.axiom("propagation-ceil-2", phi=Not(delta), psi=chi)
    s12 = b.use("expansion-2", App(chi, cnd), cnd, App(chi, psi),
                prem=(s11,))
    s13 = b.syl(s10, s12)
    s14 = _fwd(b, Or(cnd, App(chi, psi)),
               Implies(Not(cnd), App(chi, psi)),
               (b.use("vpsaupsi-negvptopsi", cnd, App(chi, psi)),))
    s15 = b.syl(s13, s14)
    return b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", App(chi, phi),
                 fd, App(chi, psi), prem=(s15,))


@derived("floordelta-imp-chivpndchipsi", "MGc",
         prem=lambda phi, psi, chi, delta: (
             Implies(floor(delta), iff(phi, psi)),),
         stmt=lambda phi, psi, chi, delta: (
             Implies(floor(delta), iff(App(chi, phi), App(chi, psi)))))
def _guarded_framing_right_iff(b, phi, psi, chi, delta, prem):
    """The closing display in the source transposes the two sides."""
    fd = floor(delta)
    s2 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi←-l",
               fd, Implies(phi, psi), Implies(psi, phi), prem=prem)
    s3 = b.use("floordelta-imp-chivptochipsi", phi, psi, chi, delta,
               prem=(s2,))
    s4 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi←-r",
               fd, Implies(phi, psi), Implies(psi, phi), prem=prem)
    s5 = b.use("floordelta-imp-chivptochipsi", psi, phi, chi, delta,
               prem=(s4,))
    return b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
                 fd, Implies(App(chi, phi), App(chi, psi)),
                 Implies(App(chi, psi), App(chi, phi)), prem=(s3, s5))


@theorem("existsxceilvp-to-ceilexistsxvp", "MGc",
         stmt=lambda phi, x: Implies(Exists(x, ceil(phi)),
                                     ceil(Exists(x, phi))))
def _exists_ceil_out(b, phi, x):
    s1 = b.use("exists-quant-x-M", phi, x)
    s2 = b.use("lemma-imp-compat-in-ceil", phi, Exists(x, phi),
               prem=(s1,))
    # x cannot be free in the ceiling of the closed quantification
    return b.use("exists-quant-rule", ceil(phi), ceil(Exists(x, phi)),
                 x, prem=(s2,))


@theorem("ceilexistsxvp-to-existsxceilvp", "MGc",
         stmt=lambda phi, x: Implies(ceil(Exists(x, phi)),
                                     Exists(x, ceil(phi))))
def _exists_ceil_in(b, phi, x):
    # x never occurs in the definedness constant
    return b.axiom("propagation-exists-2", phi=phi, psi=DEF, x=x)


@theorem("existsxceilvp-dnd-ceilexistsxvp", "MGc",
         stmt=lambda phi, x: iff(Exists(x, ceil(phi)),
                                 ceil(Exists(x, phi))))
def _exists_ceil(b, phi, x):
    s1 = b.use("existsxceilvp-to-ceilexistsxvp", phi, x)
    s2 = b.use("ceilexistsxvp-to-existsxceilvp", phi, x)
    return _combine(b, Exists(x, ceil(phi)), ceil(Exists(x, phi)),
                    s1, s2)


@theorem("forallxfloor-dnd-floorforallx", "MGc",
         stmt=lambda phi, x: iff(Forall(x, floor(phi)),
                                 floor(Forall(x, phi))))
def _forall_floor(b, phi, x):
    """Both congruence rows land mirrored relative to their displays
    and are flipped before chaining; the chaining rows are equivalence
    transitivity, not syllogism."""
    en = Exists(x, ceil(Not(phi)))
    ce = ceil(Exists(x, Not(phi)))
    s1 = b.use("negexistsxvp-dnd-forallxnegvp", ceil(Not(phi)), x)
    s2 = b.use("existsxceilvp-dnd-ceilexistsxvp", Not(phi), x)
    s3a = b.use("Gamma-dnd-cong-neg", en, ce, prem=(s2,))
    s3 = b.use("sim-symm", Not(en), Not(ce), prem=(s3a,))
    s4 = b.use("sim-trans", Not(ce), Not(en), Forall(x, floor(phi)),
               prem=(s3, s1))
    s5 = b.use("negforallxvp-dnd-existsxnegvp", phi, x)
    s6 = b.use("rule-iff-compat-in-ceil", Not(Forall(x, phi)),
               Exists(x, Not(phi)), prem=(s5,))
    s7a = b.use("Gamma-dnd-cong-neg", ceil(Not(Forall(x, phi))), ce,
                prem=(s6,))
    s7 = b.use("sim-symm", floor(Forall(x, phi)), Not(ce), prem=(s7a,))
    s8 = b.use("sim-symm", Not(ce), Forall(x, floor(phi)), prem=(s4,))
    return b.use("sim-trans", Forall(x, floor(phi)), Not(ce),
                 floor(Forall(x, phi)), prem=(s8, s7))


@theorem("forallxnfloor-dnd-floorforallxn", "MGc",
         stmt=lambda phi, x, y: iff(Forall(x, Forall(y, floor(phi))),
                                    floor(Forall(x, Forall(y, phi)))))
def _forall2_floor(b, phi, x, y):
    """The source states this for any number of leading binders; the
    entry fixes two and floor_forall_chain below walks the general
    prefix by the same induction."""
    s1 = b.use("forallxfloor-dnd-floorforallx", phi, y)
    s2 = b.use("vp-ra-psi-forall-vp-dnd-forall-psi-M",
               Forall(y, floor(phi)), floor(Forall(y, phi)), x,
               prem=(s1,))
    s3 = b.use("forallxfloor-dnd-floorforallx", Forall(y, phi), x)
    return b.use("sim-trans", Forall(x, Forall(y, floor(phi))),
                 Forall(x, floor(Forall(y, phi))),
                 floor(Forall(x, Forall(y, phi))), prem=(s2, s3))


def floor_forall_chain(b, phi, xs):
    """Prove a step for forall-prefix commutation with floor at any
    prefix length: forall xs . floor(phi) <-> floor(forall xs . phi)."""
    if not xs:
        return b.use("sim-refl", floor(phi))
    head, rest = xs[0], list(xs[1:])
    inner = phi
    for v in reversed(rest):
        inner = Forall(v, inner)
    lhs_rest = floor(phi)
    for v in reversed(rest):
        lhs_rest = Forall(v, lhs_rest)
    s1 = floor_forall_chain(b, phi, rest)
    s2 = b.use("vp-ra-psi-forall-vp-dnd-forall-psi-M", lhs_rest,
               floor(inner), head, prem=(s1,))
    s3 = b.use("forallxfloor-dnd-floorforallx", inner, head)
    return b.use("sim-trans", Forall(head, lhs_rest),
                 Forall(head, floor(inner)), floor(Forall(head, inner)),
                 prem=(s2, s3))


@theorem("forallxnvpeqdefpsi-dnd-floorforallxnvpdndpsi", "MGc",
         stmt=lambda phi, psi, x, y: iff(
             Forall(x, Forall(y, eqdef(phi, psi))),
             floor(Forall(x, Forall(y, iff(phi, psi))))))
def _forall2_eqdef(b, phi, psi, x, y):
    # the equality pattern is the floored equivalence, so this is the
    # two-binder commutation read through that definition
    return b.use("forallxnfloor-dnd-floorforallxn", iff(phi, psi), x, y)


def eqdef_forall_chain(b, phi, psi, xs):
    """Prefix form of the floored-equivalence reading of equality."""
    return floor_forall_chain(b, iff(phi, psi), xs)

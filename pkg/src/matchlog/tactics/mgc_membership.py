"""Membership forms of the definedness calculus.

Elementhood x in phi abbreviates the definedness of x taken jointly
with phi, so every entry here works through the ceiling operator.
Entries carrying the singleton extension lean on the axiom that a
variable never sits in both a pattern and its negation; the closing
introduction-elimination pair additionally needs inhabitation.
"""

from __future__ import annotations

from ..syntax import (And, EVar, Exists, Forall, Implies, Not, Or, ceil,
                      eqdef, iff, member)
from .catalog import derived, theorem

_SINGLE = ("singletons",)


def _combine(b, left, right, fwd, bwd):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→", left, right,
                 prem=(fwd, bwd))


def _fwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-l", left, right,
                 prem=prem)


def _bwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-r", left, right,
                 prem=prem)


@theorem("xinvp-char-equiv", "MGc",
         stmt=lambda phi, x: iff(member(x, phi),
                                 ceil(And(phi, EVar(x)))))
def _char_equiv(b, phi, x):
    s1 = b.use("si-comm", EVar(x), phi)
    return b.use("rule-iff-compat-in-ceil", And(EVar(x), phi),
                 And(phi, EVar(x)), prem=(s1,))


@derived("lemma-in-compat-to-vppsi", "MGc",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(member(x, phi),
                                          member(x, psi)))
def _in_compat_to_pat(b, phi, psi, x, prem):
    """Membership is monotone in the pattern slot.

    The source's middle row reads an implication premise into the
    equivalence congruence for conjunction; the one-sided conjunction
    rule is what fits, used here.
    """
    s2 = b.use("Gamma-vp-to-psi-imp-Gamma-vp-si-chi-to-psi-si-chi-r",
               phi, psi, EVar(x), prem=(prem[0],))
    return b.use("lemma-imp-compat-in-ceil", And(EVar(x), phi),
                 And(EVar(x), psi), prem=(s2,))


@derived("lemma-in-compat-dnd-vppsi", "MGc",
         prem=lambda phi, psi, x: (iff(phi, psi),),
         stmt=lambda phi, psi, x: iff(member(x, phi), member(x, psi)))
def _in_compat_dnd_pat(b, phi, psi, x, prem):
    f = _fwd(b, phi, psi, (prem[0],))
    bk = _bwd(b, phi, psi, (prem[0],))
    s1 = b.use("lemma-in-compat-to-vppsi", phi, psi, x, prem=(f,))
    s2 = b.use("lemma-in-compat-to-vppsi", psi, phi, x, prem=(bk,))
    return _combine(b, member(x, phi), member(x, psi), s1, s2)


@derived("lemma-in-compat-to-xy", "MGc",
         prem=lambda phi, x, y: (Implies(EVar(x), EVar(y)),),
         stmt=lambda phi, x, y: Implies(member(x, phi),
                                        member(y, phi)))
def _in_compat_to_var(b, phi, x, y, prem):
    s2 = b.use("Gamma-vp-to-psi-imp-Gamma-vp-si-chi-to-psi-si-chi-l",
               EVar(x), EVar(y), phi, prem=(prem[0],))
    return b.use("lemma-imp-compat-in-ceil", And(EVar(x), phi),
                 And(EVar(y), phi), prem=(s2,))


@derived("lemma-in-compat-dnd-xy", "MGc",
         prem=lambda phi, x, y: (iff(EVar(x), EVar(y)),),
         stmt=lambda phi, x, y: iff(member(x, phi), member(y, phi)))
def _in_compat_dnd_var(b, phi, x, y, prem):
    f = _fwd(b, EVar(x), EVar(y), (prem[0],))
    bk = _bwd(b, EVar(x), EVar(y), (prem[0],))
    s1 = b.use("lemma-in-compat-to-xy", phi, x, y, prem=(f,))
    s2 = b.use("lemma-in-compat-to-xy", phi, y, x, prem=(bk,))
    return _combine(b, member(x, phi), member(y, phi), s1, s2)


@derived("lemma-in-compat-to-xy-vppsi", "MGc",
         prem=lambda phi, psi, x, y: (Implies(EVar(x), EVar(y)),
                                      Implies(phi, psi)),
         stmt=lambda phi, psi, x, y: Implies(member(x, phi),
                                             member(y, psi)))
def _in_compat_to_both(b, phi, psi, x, y, prem):
    """Monotone in both slots at once.

    Two rows of the source cite their own index for the step being
    composed; the intended references are the rows directly above,
    which the chain below follows.
    """
    s1 = b.use("lemma-in-compat-to-vppsi", phi, psi, x, prem=(prem[1],))
    s2 = b.use("lemma-in-compat-to-xy", psi, x, y, prem=(prem[0],))
    return b.syl(s1, s2)


@derived("lemma-in-compat-dnd-xy-vppsi", "MGc",
         prem=lambda phi, psi, x, y: (iff(EVar(x), EVar(y)),
                                      iff(phi, psi)),
         stmt=lambda phi, psi, x, y: iff(member(x, phi),
                                         member(y, psi)))
def _in_compat_dnd_both(b, phi, psi, x, y, prem):
    # same self-referential citations as the one-sided form
    s1 = b.use("lemma-in-compat-dnd-vppsi", phi, psi, x, prem=(prem[1],))
    s2 = b.use("lemma-in-compat-dnd-xy", psi, x, y, prem=(prem[0],))
    return b.use("sim-trans", member(x, phi), member(x, psi),
                 member(y, psi), prem=(s1, s2))


@derived("mem-intro", "MGc",
         prem=lambda phi, x: (phi,),
         stmt=lambda phi, x: Forall(x, member(x, phi)))
def _mem_intro(b, phi, x, prem):
    s2 = b.use("vp-to-psi-to-vp", phi, EVar(x))
    s3 = b.mp(prem[0], s2)
    s4 = _fwd(b, EVar(x), EVar(x), (b.use("sim-refl", EVar(x)),))
    s5 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi→",
               EVar(x), EVar(x), phi, prem=(s4, s3))
    s6 = b.use("lemma-imp-compat-in-ceil", EVar(x),
               And(EVar(x), phi), prem=(s5,))
    s7 = b.axiom("definedness", x=x)
    s8 = b.mp(s7, s6)
    return b.rule("gen", s8, x=x)


@theorem("xiny-dnd-yinx", "MGc",
         stmt=lambda x, y: iff(member(x, EVar(y)), member(y, EVar(x))))
def _in_swap(b, x, y):
    s1 = b.use("si-comm", EVar(x), EVar(y))
    return b.use("rule-iff-compat-in-ceil", And(EVar(x), EVar(y)),
                 And(EVar(y), EVar(x)), prem=(s1,))


@theorem("xeqdefy-to-xiny", "MGc",
         stmt=lambda x, y: Implies(eqdef(EVar(x), EVar(y)),
                                   member(x, EVar(y))))
def _eq_to_in(b, x, y):
    """Provably equal variables sit in one another.

    Two citation slips in the source: the application row lifting the
    case split cites the unlifted premise, and the final detach names
    a row index past the end of the table. Both are off by a digit;
    the intended rows are used.
    """
    case = Not(iff(EVar(x), EVar(y)))
    both = And(EVar(x), EVar(y))
    s1 = b.use("useful-mem-intro", EVar(x), EVar(y))
    s2 = b.use("lemma-imp-compat-in-ceil", Or(EVar(x), EVar(y)),
               Or(case, both), prem=(s1,))
    s3 = b.use("ceil-xsauvp", EVar(y), x)
    s4 = b.mp(s3, s2)
    s5 = b.use("lemma-ceil-compat-in-or-1", case, both)
    s6 = b.mp(s4, s5)
    s7 = _fwd(b, Or(ceil(case), ceil(both)),
              Implies(Not(ceil(case)), ceil(both)),
              (b.use("vpsaupsi-negvptopsi", ceil(case), ceil(both)),))
    return b.mp(s6, s7)


@theorem("xeqdefy-dnd-negxinnegy-si-negyinnegx", "MGc",
         stmt=lambda x, y: iff(
             eqdef(EVar(x), EVar(y)),
             And(Not(member(x, Not(EVar(y)))),
                 Not(member(y, Not(EVar(x)))))))
def _eq_as_non_membership(b, x, y):
    """Equality of variables as joint non-membership in the negations.

    The source's closing rows come in transposed and the last one
    cites itself; the chain below keeps each equivalence oriented
    toward the stated form, with a symmetry step where the
    characterization enters the wrong way around.
    """
    a = member(x, Not(EVar(y)))
    bb = member(y, Not(EVar(x)))
    lhs_cell = And(EVar(x), Not(EVar(y)))
    rhs_cell = And(Not(EVar(x)), EVar(y))
    case = Not(iff(EVar(x), EVar(y)))
    s1 = b.use("useful-mem-neg-2", EVar(x), EVar(y))
    s2 = b.use("rule-iff-compat-in-ceil", case,
               Or(lhs_cell, rhs_cell), prem=(s1,))
    s3 = b.use("lemma-ceil-compat-in-or", lhs_cell, rhs_cell)
    s4 = b.use("xinvp-char-equiv", Not(EVar(x)), y)
    s5 = b.use("sim-symm", bb, ceil(rhs_cell), prem=(s4,))
    s6 = b.use("sim-pairs-or-right", ceil(rhs_cell), bb, a, prem=(s5,))
    s7 = b.use("sim-trans", ceil(case), ceil(Or(lhs_cell, rhs_cell)),
               Or(a, ceil(rhs_cell)), prem=(s2, s3))
    s8 = b.use("sim-trans", ceil(case), Or(a, ceil(rhs_cell)),
               Or(a, bb), prem=(s7, s6))
    s9 = b.use("Gamma-dnd-cong-neg", ceil(case), Or(a, bb), prem=(s8,))
    s10 = b.use("de-morgan-and-dnd", a, bb)
    s11 = b.use("sim-symm", And(Not(a), Not(bb)), Not(Or(a, bb)),
                prem=(s10,))
    return b.use("sim-trans", Not(ceil(case)), Not(Or(a, bb)),
                 And(Not(a), Not(bb)), prem=(s9, s11))


@theorem("xinvp-sau-xinnegvp", "MGc",
         stmt=lambda phi, x: Or(member(x, phi), member(x, Not(phi))))
def _in_or_in_neg(b, phi, x):
    s1 = b.use("psi-topsisivp-sau-psisinegvp", phi, EVar(x))
    s2 = b.use("lemma-imp-compat-in-ceil", EVar(x),
               Or(And(EVar(x), phi), And(EVar(x), Not(phi))),
               prem=(s1,))
    s3 = b.axiom("definedness", x=x)
    s4 = b.mp(s3, s2)
    s5 = b.use("lemma-ceil-compat-in-or-1", And(EVar(x), phi),
               And(EVar(x), Not(phi)))
    return b.mp(s4, s5)


@theorem("neg-xinvp-to-xinnegvp", "MGc",
         stmt=lambda phi, x: Implies(Not(member(x, phi)),
                                     member(x, Not(phi))))
def _not_in_to_in_neg(b, phi, x):
    s1 = b.use("xinvp-sau-xinnegvp", phi, x)
    s2 = _fwd(b, Or(member(x, phi), member(x, Not(phi))),
              Implies(Not(member(x, phi)), member(x, Not(phi))),
              (b.use("vpsaupsi-negvptopsi", member(x, phi),
                     member(x, Not(phi))),))
    return b.mp(s1, s2)


@theorem("neg-xinnegvp-to-xinvp", "MGc",
         stmt=lambda phi, x: Implies(Not(member(x, Not(phi))),
                                     member(x, phi)))
def _not_in_neg_to_in(b, phi, x):
    s1 = b.use("neg-xinvp-to-xinnegvp", Not(phi), x)
    s2 = b.use("negnegvp-dnd-vp", phi)
    f = _fwd(b, Not(Not(phi)), phi, (s2,))
    s3 = b.use("lemma-in-compat-to-vppsi", Not(Not(phi)), phi, x,
               prem=(f,))
    return b.syl(s1, s3)


@theorem("xinvpsaupsi-dnd-xinvpsauxinpsi", "MGc",
         stmt=lambda phi, psi, x: iff(member(x, Or(phi, psi)),
                                      Or(member(x, phi),
                                         member(x, psi))))
def _in_or(b, phi, psi, x):
    """Membership distributes over disjunction.

    One row cites the floor compatibility lemma where the ceiling one
    is doing the work; corrected here.
    """
    s1 = b.use("lemma-ceil-compat-in-or", And(EVar(x), phi),
               And(EVar(x), psi))
    s2 = b.use("distrib-si-sau", EVar(x), phi, psi)
    s3 = b.use("rule-iff-compat-in-ceil", And(EVar(x), Or(phi, psi)),
               Or(And(EVar(x), phi), And(EVar(x), psi)), prem=(s2,))
    return b.use("sim-trans", member(x, Or(phi, psi)),
                 ceil(Or(And(EVar(x), phi), And(EVar(x), psi))),
                 Or(member(x, phi), member(x, psi)), prem=(s3, s1))


@theorem("xinvpsaupsi-eqdef-xinvpsauxinpsi", "MGc",
         stmt=lambda phi, psi, x: eqdef(member(x, Or(phi, psi)),
                                        Or(member(x, phi),
                                           member(x, psi))))
def _in_or_eq(b, phi, psi, x):
    s1 = b.use("xinvpsaupsi-dnd-xinvpsauxinpsi", phi, psi, x)
    return b.use("Gamma-equal-iff-dnd→", member(x, Or(phi, psi)),
                 Or(member(x, phi), member(x, psi)), prem=(s1,))


@theorem("mem-exists", "MGc",
         stmt=lambda phi, x, y: eqdef(member(x, Exists(y, phi)),
                                      Exists(y, member(x, phi))),
         conds=(("the member variable differs from the bound one",
                 lambda phi, x, y: x != y),))
def _mem_exists(b, phi, x, y):
    """Membership commutes with an existential over another variable.

    The source collapses the definedness propagation equivalence into
    the table facing the other way; a symmetry step restores the
    orientation.
    """
    s1 = b.use("vp-si-existsxpsi-dnd-existsx-vp-si-psi",
               EVar(x), phi, y)
    s2 = b.use("rule-iff-compat-in-ceil",
               And(EVar(x), Exists(y, phi)),
               Exists(y, And(EVar(x), phi)), prem=(s1,))
    s3 = b.use("existsxceilvp-dnd-ceilexistsxvp", And(EVar(x), phi), y)
    s4 = b.use("sim-symm", Exists(y, member(x, phi)),
               ceil(Exists(y, And(EVar(x), phi))), prem=(s3,))
    s5 = b.use("sim-trans", member(x, Exists(y, phi)),
               ceil(Exists(y, And(EVar(x), phi))),
               Exists(y, member(x, phi)), prem=(s2, s4))
    return b.use("Gamma-equal-iff-dnd→", member(x, Exists(y, phi)),
                 Exists(y, member(x, phi)), prem=(s5,))


@theorem("singleton-used-membership-elim", "MGc",
         stmt=lambda phi, x: Or(Not(member(x, phi)),
                                Or(Not(EVar(x)), phi)),
         extensions=_SINGLE)
def _membership_elim(b, phi, x):
    cell = And(EVar(x), Not(phi))
    s1 = b.axiom("singletons", phi=phi, x=x)
    s2 = b.axiom("ceil-intro", phi=cell)
    s3 = b.use("rec-ax3-rule", cell, ceil(cell), prem=(s2,))
    s4 = b.use("neg-psisinegvp-dnd-negpsisauvp", phi, EVar(x))
    f4 = _fwd(b, Not(cell), Or(Not(EVar(x)), phi), (s4,))
    s5 = b.syl(s3, f4)
    s6 = b.rule("expansion", s5, chi=Not(member(x, phi)))
    return b.mp(s1, s6)


@theorem("singleton-used-membership-elim-2", "MGc",
         stmt=lambda phi, x: Not(And(member(x, phi),
                                     And(EVar(x), Not(phi)))),
         extensions=_SINGLE)
def _membership_elim_2(b, phi, x):
    """Negated-conjunction form of the elimination disjunction.

    The source's detach row names the wrong right premise, off by
    one; read against the assembled disjunction it checks out.
    """
    cell = And(EVar(x), Not(phi))
    notm = Not(member(x, phi))
    s1 = b.use("singleton-used-membership-elim", phi, x)
    s2 = b.use("neg-psisinegvp-dnd-negpsisauvp", phi, EVar(x))
    s3 = b.use("sim-pairs-or-right", Not(cell),
               Or(Not(EVar(x)), phi), notm, prem=(s2,))
    s4 = b.use("vpdndpsi-imp-vp-iff-psi←", Or(notm, Not(cell)),
               Or(notm, Or(Not(EVar(x)), phi)), prem=(s3, s1))
    s5 = b.use("de-morgan-or-dnd", member(x, phi), cell)
    return b.use("vpdndpsi-imp-vp-iff-psi→", Or(notm, Not(cell)),
                 Not(And(member(x, phi), cell)), prem=(s5, s4))


@theorem("xinvpsix-to-vp", "MGc",
         stmt=lambda phi, x: Implies(And(member(x, phi), EVar(x)),
                                     phi),
         extensions=_SINGLE)
def _in_and_var_to_pat(b, phi, x):
    m = member(x, phi)
    s1 = b.use("singleton-used-membership-elim", phi, x)
    s2 = b.use("sau-assoc", Not(m), Not(EVar(x)), phi)
    s3 = b.use("vpdndpsi-imp-vp-iff-psi→",
               Or(Not(m), Or(Not(EVar(x)), phi)),
               Or(Or(Not(m), Not(EVar(x))), phi), prem=(s2, s1))
    s4 = b.use("de-morgan-or-dnd", m, EVar(x))
    s5 = b.use("sim-pairs-or-left", Or(Not(m), Not(EVar(x))),
               Not(And(m, EVar(x))), phi, prem=(s4,))
    s6 = b.use("vpdndpsi-imp-vp-iff-psi→",
               Or(Or(Not(m), Not(EVar(x))), phi),
               Or(Not(And(m, EVar(x))), phi), prem=(s5, s3))
    s7 = b.use("def-imp-or", And(m, EVar(x)), phi)
    return b.use("vpdndpsi-imp-vp-iff-psi←",
                 Implies(And(m, EVar(x)), phi),
                 Or(Not(And(m, EVar(x))), phi), prem=(s7, s6))


@theorem("singletons-equiv-1", "MGc",
         stmt=lambda phi, x: Not(And(member(x, phi),
                                     member(x, Not(phi)))),
         extensions=_SINGLE)
def _singleton_negated_conjunction(b, phi, x):
    # the source numbers two adjacent rows identically here
    s1 = b.axiom("singletons", phi=phi, x=x)
    s2 = b.use("de-morgan-or-dnd", member(x, phi),
               member(x, Not(phi)))
    f = _fwd(b, Or(Not(member(x, phi)), Not(member(x, Not(phi)))),
             Not(And(member(x, phi), member(x, Not(phi)))), (s2,))
    return b.mp(s1, f)


@theorem("singletons-equiv-2", "MGc",
         stmt=lambda phi, x: Implies(member(x, Not(phi)),
                                     Not(member(x, phi))),
         extensions=_SINGLE)
def _in_neg_excludes_in(b, phi, x):
    s1 = b.axiom("singletons", phi=phi, x=x)
    s2 = b.use("negvp-sau-negpsi--dnd--vp-to-negpsi",
               member(x, phi), member(x, Not(phi)))
    f = _fwd(b, Or(Not(member(x, phi)), Not(member(x, Not(phi)))),
             Implies(member(x, Not(phi)), Not(member(x, phi))), (s2,))
    return b.mp(s1, f)


@theorem("singletons-equiv-2-dnd", "MGc",
         stmt=lambda phi, x: iff(member(x, Not(phi)),
                                 Not(member(x, phi))),
         extensions=_SINGLE)
def _in_neg_iff_not_in(b, phi, x):
    s1 = b.use("singletons-equiv-2", phi, x)
    s2 = b.use("neg-xinvp-to-xinnegvp", phi, x)
    return _combine(b, member(x, Not(phi)), Not(member(x, phi)),
                    s1, s2)


@theorem("singletons-equiv-2-eqdef", "MGc",
         stmt=lambda phi, x: eqdef(member(x, Not(phi)),
                                   Not(member(x, phi))),
         extensions=_SINGLE)
def _in_neg_eq_not_in(b, phi, x):
    s1 = b.use("singletons-equiv-2-dnd", phi, x)
    return b.use("Gamma-equal-iff-dnd→", member(x, Not(phi)),
                 Not(member(x, phi)), prem=(s1,))


@theorem("singletons-equiv-2-negvp-dnd", "MGc",
         stmt=lambda phi, x: iff(member(x, phi),
                                 Not(member(x, Not(phi)))),
         extensions=_SINGLE)
def _in_iff_not_in_neg(b, phi, x):
    """Same exclusion read at the negation.

    The closing transitivity in the source cites the second row for
    its right leg where the first is meant; corrected.
    """
    s1 = b.use("singletons-equiv-2-dnd", Not(phi), x)
    s2 = b.use("negnegvp-dnd-vp", phi)
    s2b = b.use("sim-symm", Not(Not(phi)), phi, prem=(s2,))
    s3 = b.use("lemma-in-compat-dnd-vppsi", phi, Not(Not(phi)), x,
               prem=(s2b,))
    return b.use("sim-trans", member(x, phi),
                 member(x, Not(Not(phi))),
                 Not(member(x, Not(phi))), prem=(s3, s1))


@theorem("singletons-equiv-2-negvp-eqdef", "MGc",
         stmt=lambda phi, x: eqdef(member(x, phi),
                                   Not(member(x, Not(phi)))),
         extensions=_SINGLE)
def _in_eq_not_in_neg(b, phi, x):
    s1 = b.use("singletons-equiv-2-negvp-dnd", phi, x)
    return b.use("Gamma-equal-iff-dnd→", member(x, phi),
                 Not(member(x, Not(phi))), prem=(s1,))


@theorem("xiny-dnd-xeqdefy", "MGc",
         stmt=lambda x, y: iff(member(x, EVar(y)),
                               eqdef(EVar(x), EVar(y))),
         extensions=_SINGLE)
def _in_var_iff_equal(b, x, y):
    """Variable membership coincides with provable equality.

    The source numbers its last two rows identically; the closing
    transitivity chain below is what they perform.
    """
    mxy = member(x, EVar(y))
    myx = member(y, EVar(x))
    na = Not(member(x, Not(EVar(y))))
    nb = Not(member(y, Not(EVar(x))))
    eq = eqdef(EVar(x), EVar(y))
    s1 = b.use("xeqdefy-dnd-negxinnegy-si-negyinnegx", x, y)
    s2 = b.use("singletons-equiv-2-negvp-dnd", EVar(y), x)
    s3 = b.use("singletons-equiv-2-negvp-dnd", EVar(x), y)
    s4 = b.use("sim-pairs-and", mxy, na, myx, nb, prem=(s2, s3))
    s5 = b.use("sim-trans-2", And(mxy, myx), eq, And(na, nb),
               prem=(s4, s1))
    s6 = b.use("xiny-dnd-yinx", x, y)
    s7 = b.use("sim-pairs-and-right", mxy, myx, mxy, prem=(s6,))
    s8 = b.use("si-idemp", mxy)
    s8b = b.use("sim-symm", And(mxy, mxy), mxy, prem=(s8,))
    s9 = b.use("sim-trans", mxy, And(mxy, mxy), And(mxy, myx),
               prem=(s8b, s7))
    return b.use("sim-trans", mxy, And(mxy, myx), eq, prem=(s9, s5))


@theorem("xiny-eqdef-xeqdefy", "MGc",
         stmt=lambda x, y: eqdef(member(x, EVar(y)),
                                 eqdef(EVar(x), EVar(y))),
         extensions=_SINGLE)
def _in_var_eq_equal(b, x, y):
    s1 = b.use("xiny-dnd-xeqdefy", x, y)
    return b.use("Gamma-equal-iff-dnd→", member(x, EVar(y)),
                 eqdef(EVar(x), EVar(y)), prem=(s1,))


@derived("forallxxinvp-xtovp", "MGc",
         prem=lambda phi, x: (Forall(x, member(x, phi)),),
         stmt=lambda phi, x: Implies(EVar(x), phi),
         extensions=_SINGLE)
def _universal_membership_to_imp(b, phi, x, prem):
    m = member(x, phi)
    s2 = b.use("forall-quant-x-M", m, x)
    s3 = b.mp(prem[0], s2)
    s4 = b.use("singleton-used-membership-elim", phi, x)
    s5 = b.use("def-imp-or", m, Or(Not(EVar(x)), phi))
    b5 = _bwd(b, Implies(m, Or(Not(EVar(x)), phi)),
              Or(Not(m), Or(Not(EVar(x)), phi)), (s5,))
    s6 = b.mp(s4, b5)
    s7 = b.mp(s3, s6)
    s8 = b.use("def-imp-or", EVar(x), phi)
    b8 = _bwd(b, Implies(EVar(x), phi), Or(Not(EVar(x)), phi), (s8,))
    return b.mp(s7, b8)


@derived("mem-intro-elim", "MGc",
         prem=lambda phi, x: (Forall(x, member(x, phi)),),
         stmt=lambda phi, x: phi,
         conds=(("x not free in phi",
                 lambda phi, x: x not in phi.fve),),
         extensions=("singletons", "existence"))
def _mem_elim(b, phi, x, prem):
    """Elimination half of the membership introduction rule.

    The source states introduction and elimination as one equivalence
    of judgments; the introduction direction is registered separately
    above, and this direction needs the inhabitation axiom.
    """
    s1 = b.use("forallxxinvp-xtovp", phi, x, prem=(prem[0],))
    s2 = b.use("exists-quant-rule", EVar(x), phi, x, prem=(s1,))
    s3 = b.axiom("existence", x=x)
    return b.mp(s3, s2)


@theorem("xinvpsipsi-dnd-xinvp-si-xinpsi", "MGc",
         stmt=lambda phi, psi, x: iff(member(x, And(phi, psi)),
                                      And(member(x, phi),
                                          member(x, psi))),
         extensions=_SINGLE)
def _in_and(b, phi, psi, x):
    """Membership distributes over conjunction, routed through the
    disjunctive form and the exclusion equivalences.

    The pairing row near the end takes both component equivalences
    facing the wrong way in the source; two symmetry steps put them
    right.
    """
    negs = Or(Not(phi), Not(psi))
    s1 = b.use("vpsipsi-demorgan", phi, psi)
    s2 = b.use("lemma-in-compat-dnd-vppsi", And(phi, psi),
               Not(negs), x, prem=(s1,))
    s3 = b.use("singletons-equiv-2-dnd", negs, x)
    s4 = b.use("sim-trans", member(x, And(phi, psi)),
               member(x, Not(negs)), Not(member(x, negs)),
               prem=(s2, s3))
    s5 = b.use("xinvpsaupsi-dnd-xinvpsauxinpsi", Not(phi), Not(psi),
               x)
    s6 = b.use("Gamma-dnd-cong-neg", member(x, negs),
               Or(member(x, Not(phi)), member(x, Not(psi))),
               prem=(s5,))
    s7 = b.use("sim-trans", member(x, And(phi, psi)),
               Not(member(x, negs)),
               Not(Or(member(x, Not(phi)), member(x, Not(psi)))),
               prem=(s4, s6))
    s8 = b.use("de-morgan-and-dnd", member(x, Not(phi)),
               member(x, Not(psi)))
    s8b = b.use("sim-symm",
                And(Not(member(x, Not(phi))),
                    Not(member(x, Not(psi)))),
                Not(Or(member(x, Not(phi)), member(x, Not(psi)))),
                prem=(s8,))
    s9 = b.use("sim-trans", member(x, And(phi, psi)),
               Not(Or(member(x, Not(phi)), member(x, Not(psi)))),
               And(Not(member(x, Not(phi))),
                   Not(member(x, Not(psi)))),
               prem=(s7, s8b))
    s10 = b.use("sim-symm", member(x, phi), Not(member(x, Not(phi))),
                prem=(b.use("singletons-equiv-2-negvp-dnd", phi, x),))
    s11 = b.use("sim-symm", member(x, psi), Not(member(x, Not(psi))),
                prem=(b.use("singletons-equiv-2-negvp-dnd", psi, x),))
    s12 = b.use("sim-pairs-and", Not(member(x, Not(phi))),
                member(x, phi), Not(member(x, Not(psi))),
                member(x, psi), prem=(s10, s11))
    return b.use("sim-trans", member(x, And(phi, psi)),
                 And(Not(member(x, Not(phi))),
                     Not(member(x, Not(psi)))),
                 And(member(x, phi), member(x, psi)),
                 prem=(s9, s12))


@theorem("xinvpsipsi-eqdef-xinvp-si-xinpsi", "MGc",
         stmt=lambda phi, psi, x: eqdef(member(x, And(phi, psi)),
                                        And(member(x, phi),
                                            member(x, psi))),
         extensions=_SINGLE)
def _in_and_eq(b, phi, psi, x):
    s1 = b.use("xinvpsipsi-dnd-xinvp-si-xinpsi", phi, psi, x)
    return b.use("Gamma-equal-iff-dnd→", member(x, And(phi, psi)),
                 And(member(x, phi), member(x, psi)), prem=(s1,))

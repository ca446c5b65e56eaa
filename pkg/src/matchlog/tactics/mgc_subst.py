"""Substitution toolkit of the definedness calculus.

Free substitution enters under an equality guard and is discharged
through specification; bound renaming travels through the
bounded-substitution theorem. The hypothesis-weakened propagation
schemes at the end relax the occurrence side conditions of the kernel
axioms to freeness.
"""

from __future__ import annotations

from ..subst import avoid_set, free_for, fresh, subb, subf
from ..syntax import (And, App, EVar, Exists, Forall, Implies, Not, Or,
                      eqdef, iff, occurs)
from .catalog import derived, theorem
from .congruence import (MGC_LABELS, MGC_RENAMES, dnd_walk,
                         guarded_subf_walk, subb_dnd)


def _combine(b, left, right, fwd, bwd):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→", left, right,
                 prem=(fwd, bwd))


def _fwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-l", left, right,
                 prem=prem)


def _bwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-r", left, right,
                 prem=prem)


def _first_free_swap(x, y, p):
    """Image of p under replacing its leftmost free occurrence of x
    with y, plus whether that occurrence sits clear of y-binders.

    p itself comes back (flag True) when x has no free occurrence.
    """
    if isinstance(p, EVar):
        if p.name == x:
            return EVar(y), True
        return p, True
    if isinstance(p, Not):
        q, ok = _first_free_swap(x, y, p.sub)
        return (p if q is p.sub else Not(q)), ok
    if isinstance(p, (Implies, And, Or, App)):
        cls = type(p)
        l, ok = _first_free_swap(x, y, p.left)
        if l is not p.left:
            return cls(l, p.right), ok
        r, ok = _first_free_swap(x, y, p.right)
        return (p if r is p.right else cls(p.left, r)), ok
    if isinstance(p, (Forall, Exists)):
        if p.var == x:
            return p, True
        q, ok = _first_free_swap(x, y, p.body)
        if q is p.body:
            return p, True
        return type(p)(p.var, q), ok and p.var != y
    return p, True


def _swap_chain(x, y, p):
    """Successive one-swap hops from p down to subf(x, y, p)."""
    out = []
    cur = p
    while True:
        nxt, _ = _first_free_swap(x, y, cur)
        if nxt is cur:
            return out
        out.append((cur, nxt))
        cur = nxt


@theorem("subf-one-occurence-x-y", "MGc",
         stmt=lambda phi, x, y: Implies(
             eqdef(EVar(x), EVar(y)),
             iff(phi, _first_free_swap(x, y, phi)[0])),
         conds=(("the replaced occurrence is clear of y-binders",
                 lambda phi, x, y: _first_free_swap(x, y, phi)[1]),))
def _subf_one(b, phi, x, y):
    """Replacing a single free occurrence of x with y under the guard
    that x and y are equal.

    The source quantifies over an arbitrary occurrence; registration
    pins the leftmost one, and interior choices come out of chaining
    this entry through the guarded transitivity rule. The guarded walk
    retraces the induction on the pattern, one congruence step per
    connective on the path to the occurrence.
    """
    return guarded_subf_walk(b, x, y, phi, _first_free_swap(x, y, phi)[0])


@theorem("subf-more-occurences-x-y", "MGc",
         stmt=lambda phi, x, y: Implies(eqdef(EVar(x), EVar(y)),
                                        iff(phi, subf(x, y, phi))),
         conds=(("x is free for y in phi",
                 lambda phi, x, y: free_for(x, y, phi)),))
def _subf_more(b, phi, x, y):
    """Induction on the number of replaced occurrences: each hop swaps
    one more occurrence and the guarded transitivity rule glues the
    hops. Registered at the instance replacing every free occurrence;
    proper subsets chain the one-occurrence entry the same way.
    """
    hops = _swap_chain(x, y, phi)
    if not hops:
        return guarded_subf_walk(b, x, y, phi, phi)
    guard = eqdef(EVar(x), EVar(y))
    acc = guarded_subf_walk(b, x, y, hops[0][0], hops[0][1])
    for a, c in hops[1:]:
        s = guarded_subf_walk(b, x, y, a, c)
        acc = b.use(
            "vp-to-psi-dnd-chi-vp-dnd-chi-to-gamma-implies-vp-to-psi-dnd-gamma",
            guard, phi, a, c, prem=(acc, s))
    return acc


@theorem("subf-x-y", "MGc",
         stmt=lambda phi, x, y: Implies(eqdef(EVar(x), EVar(y)),
                                        iff(phi, subf(x, y, phi))),
         conds=(("x is free for y in phi",
                 lambda phi, x, y: free_for(x, y, phi)),))
def _subf_all(b, phi, x, y):
    return b.use("subf-more-occurences-x-y", phi, x, y)


@theorem("forallxvp-subfxyvp-1", "MGc",
         stmt=lambda phi, x, y: Implies(Forall(x, phi), subf(x, y, phi)),
         conds=(("x and y are distinct", lambda phi, x, y: x != y),
                ("x does not occur bound in phi",
                 lambda phi, x, y: x not in phi.bve),
                ("x is free for y in phi",
                 lambda phi, x, y: free_for(x, y, phi)),))
def _spec_unbound(b, phi, x, y):
    """Specialization for an x that never occurs bound: the guard is
    discharged through the nonemptiness axiom, using that x is gone
    from the substitution image entirely.
    """
    sv = subf(x, y, phi)
    eq = eqdef(EVar(x), EVar(y))
    s1 = b.use("subf-x-y", phi, x, y)
    s2 = b.use("vp-to-psi-si-vp-to-chi-implies-vp-to-psi-si-chi←-l",
               eq, Implies(phi, sv), Implies(sv, phi), prem=(s1,))
    s3 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", eq, phi, sv,
               prem=(s2,))
    s4 = b.use("contraposition", eq, sv)
    s5 = b.syl(s3, s4)
    s6 = b.use("vp-ra-psi-ra-chi-forall-M", phi, Not(sv), Not(eq), x,
               prem=(s5,))
    s7 = b.use("contraposition", Forall(x, Not(sv)), Forall(x, Not(eq)))
    s8 = b.syl(s6, s7)
    s9 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", Forall(x, phi),
               Not(Forall(x, Not(eq))), Not(Forall(x, Not(sv))),
               prem=(s8,))
    s10 = b.axiom("axiom-exists-1", phi=eq, x=x)
    s11 = b.syl(s10, s9)
    s12 = b.axiom("monk-3", x=x, y=y)
    s13 = b.mp(s12, s11)
    s14 = b.axiom("monk-2", phi=Not(sv), x=x)
    s15 = b.use("rec-ax3-rule", Not(sv), Forall(x, Not(sv)), prem=(s14,))
    sn = b.use("negnegvp-dnd-vp", sv)
    s16 = _fwd(b, Not(Not(sv)), sv, (sn,))
    s17 = b.syl(s15, s16)
    return b.syl(s13, s17)


_RENAME_CONDS = (("x does not occur bound in phi",
                  lambda phi, x, y: x not in phi.bve),
                 ("y does not occur in phi",
                  lambda phi, x, y: not occurs(y, phi)))


@theorem("forallxvp-to-subfxyvp", "MGc",
         stmt=lambda phi, x, y: Implies(Forall(x, phi),
                                        Forall(y, subf(x, y, phi))),
         conds=_RENAME_CONDS)
def _rename_fwd(b, phi, x, y):
    if x == y:
        return b.use("vp-to-vp", Forall(x, phi))
    sv = subf(x, y, phi)
    s1 = b.use("forallxvp-subfxyvp-1", phi, x, y)
    s2 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", Forall(x, phi),
               sv, y, prem=(s1,))
    s3 = b.axiom("monk-2", phi=Forall(x, phi), x=y)
    return b.syl(s3, s2)


@theorem("subfxyvp-to-forallxvp", "MGc",
         stmt=lambda phi, x, y: Implies(Forall(y, subf(x, y, phi)),
                                        Forall(x, phi)),
         conds=_RENAME_CONDS)
def _rename_bwd(b, phi, x, y):
    """The forward direction applied to the image pattern; the two
    substitutions cancel because y was absent from phi.
    """
    if x == y:
        return b.use("vp-to-vp", Forall(x, phi))
    return b.use("forallxvp-to-subfxyvp", subf(x, y, phi), y, x)


@theorem("forallxvp-dns-subfxyvp", "MGc",
         stmt=lambda phi, x, y: iff(Forall(x, phi),
                                    Forall(y, subf(x, y, phi))),
         conds=_RENAME_CONDS)
def _rename_iff(b, phi, x, y):
    if x == y:
        return b.use("sim-refl", Forall(x, phi))
    s1 = b.use("forallxvp-to-subfxyvp", phi, x, y)
    s2 = b.use("subfxyvp-to-forallxvp", phi, x, y)
    return _combine(b, Forall(x, phi), Forall(y, subf(x, y, phi)),
                    s1, s2)


@theorem("thm-vp-dnd-subbxybvp", "MGc",
         stmt=lambda phi, x, y: iff(phi, subb(x, y, phi)),
         conds=(("y does not occur in phi",
                 lambda phi, x, y: not occurs(y, phi)),))
def _bounded_rename(b, phi, x, y):
    """Renaming every x-binder to an absent name is invisible up to
    equivalence; the walk mirrors the recursion of the rename itself,
    congruence steps outside the binders and the rename lemma at them.
    """
    return subb_dnd(b, x, y, phi, MGC_LABELS, MGC_RENAMES)


@theorem("forallxvp-subfxyvp", "MGc",
         stmt=lambda phi, x, y: Implies(Forall(x, phi), subf(x, y, phi)),
         conds=(("x and y are distinct", lambda phi, x, y: x != y),
                ("x is free for y in phi",
                 lambda phi, x, y: free_for(x, y, phi)),))
def _spec_distinct(b, phi, x, y):
    """Bound occurrences of x are detoured through a globally fresh
    name so the unbound-variable specialization applies; the outer
    bounded renames cancel on the way back.
    """
    z = fresh(x, avoid_set(phi) | {x, y})
    psi = subb(x, z, phi)
    chi = subf(x, y, psi)
    u1 = b.use("thm-vp-dnd-subbxybvp", phi, x, z)
    u2 = b.use("vp-ra-psi-forall-vp-dnd-forall-psi-M", phi, psi, x,
               prem=(u1,))
    u3 = b.use("forallxvp-subfxyvp-1", psi, x, y)
    u4 = b.use("thm-vp-dnd-subbxybvp", chi, z, x)
    s1 = _fwd(b, Forall(x, phi), Forall(x, psi), (u2,))
    s2 = b.syl(s1, u3)
    s3 = _fwd(b, chi, subb(z, x, chi), (u4,))
    return b.syl(s2, s3)


@theorem("forallxvp-subfxyvp-ynot", "MGc",
         stmt=lambda phi, x, y: Implies(Forall(x, phi), subf(x, y, phi)),
         conds=(("x and y are distinct", lambda phi, x, y: x != y),
                ("y does not occur in phi",
                 lambda phi, x, y: not occurs(y, phi)),))
def _spec_absent(b, phi, x, y):
    return b.use("forallxvp-subfxyvp", phi, x, y)


@theorem("forallxvp-subfxyvp-xfreey", "MGc",
         stmt=lambda phi, x, y: Implies(Forall(x, phi), subf(x, y, phi)),
         conds=(("x is free for y in phi",
                 lambda phi, x, y: free_for(x, y, phi)),))
def _universal_specification(b, phi, x, y):
    """Specification at an arbitrary admissible variable, including
    y equal to x; a fresh stepping stone removes the distinctness
    demands of the intermediate results.
    """
    z = fresh(x, avoid_set(phi) | {x, y})
    sv = subf(x, z, phi)
    s1 = b.use("forallxvp-subfxyvp-ynot", phi, x, z)
    s2 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", Forall(x, phi),
               sv, z, prem=(s1,))
    s3 = b.axiom("monk-2", phi=Forall(x, phi), x=z)
    s4 = b.syl(s3, s2)
    s6 = b.use("forallxvp-subfxyvp", sv, z, y)
    return b.syl(s4, s6)


@theorem("subfxyvp-existsxvp-xfreey", "MGc",
         stmt=lambda phi, x, y: Implies(subf(x, y, phi), Exists(x, phi)),
         conds=(("x is free for y in phi",
                 lambda phi, x, y: free_for(x, y, phi)),))
def _existential_specification(b, phi, x, y):
    sv = subf(x, y, phi)
    s1 = b.use("forallxvp-subfxyvp-xfreey", Not(phi), x, y)
    s3 = b.use("rec-ax3-rule", Forall(x, Not(phi)), Not(sv), prem=(s1,))
    sn = b.use("negnegvp-dnd-vp", sv)
    s4 = _bwd(b, Not(Not(sv)), sv, (sn,))
    s5 = b.syl(s4, s3)
    s6 = b.axiom("axiom-exists-2", phi=phi, x=x)
    return b.syl(s5, s6)


@theorem("forall-quant-x-M", "MGc",
         stmt=lambda phi, x: Implies(Forall(x, phi), phi))
def _forall_elim(b, phi, x):
    return b.use("forallxvp-subfxyvp-xfreey", phi, x, x)


@theorem("exists-quant-x-M", "MGc",
         stmt=lambda phi, x: Implies(phi, Exists(x, phi)))
def _exists_intro(b, phi, x):
    return b.use("subfxyvp-existsxvp-xfreey", phi, x, x)


@theorem("forall-vp-to-exists-vp-M", "MGc",
         stmt=lambda phi, x: Implies(Forall(x, phi), Exists(x, phi)))
def _forall_to_exists(b, phi, x):
    s1 = b.use("forall-quant-x-M", phi, x)
    s2 = b.use("exists-quant-x-M", phi, x)
    return b.syl(s1, s2)


@theorem("vp-dnd-forall-vp-M", "MGc",
         stmt=lambda phi, x: iff(phi, Forall(x, phi)),
         conds=(("x not free in phi", lambda phi, x: x not in phi.fve),))
def _vacuous_forall(b, phi, x):
    """A variable with no free occurrence quantifies away. Binder
    occurrences of x are first renamed off so the vacuous
    generalization axiom applies; the two rows extracting from that
    equivalence cite the specialization step in the source.
    """
    s1 = b.use("forall-quant-x-M", phi, x)
    y = fresh(x, avoid_set(phi) | {x})
    sb = subb(x, y, phi)
    s2 = b.use("thm-vp-dnd-subbxybvp", phi, x, y)
    s3 = b.use("Gamma-vp-psi-vp-si-psi←-r", Implies(phi, sb),
               Implies(sb, phi), prem=(s2,))
    s4 = b.use("vp-ra-psi-forall-vp-ra-forall-psi-M", sb, phi, x,
               prem=(s3,))
    s5 = b.axiom("monk-2", phi=sb, x=x)
    s6 = b.syl(s5, s4)
    s7 = b.use("Gamma-vp-psi-vp-si-psi←-l", Implies(phi, sb),
               Implies(sb, phi), prem=(s2,))
    s8 = b.syl(s7, s6)
    return b.use("Gamma-vp-psi-vp-si-psi→",
                 Implies(phi, Forall(x, phi)),
                 Implies(Forall(x, phi), phi), prem=(s8, s1))


@theorem("vp-dnd-exists-vp-M", "MGc",
         stmt=lambda phi, x: iff(phi, Exists(x, phi)),
         conds=(("x not free in phi", lambda phi, x: x not in phi.fve),))
def _vacuous_exists(b, phi, x):
    """Dual of the vacuous universal, through the negation
    characterization. The source's opening row cites the one-way
    specialization where its equivalence form is used, and the closing
    display lands transposed relative to the statement.
    """
    s0 = b.use("vp-dnd-forall-vp-M", Not(phi), x)
    s1 = b.use("sim-symm", Not(phi), Forall(x, Not(phi)), prem=(s0,))
    s2 = b.use("Gamma-dnd-cong-neg", Forall(x, Not(phi)), Not(phi),
               prem=(s1,))
    s3 = b.use("negnegvp-dnd-vp", phi)
    s4 = b.use("sim-trans", Not(Forall(x, Not(phi))), Not(Not(phi)),
               phi, prem=(s2, s3))
    s5 = b.use("existsxvp-dnd-negforallxngvp", phi, x)
    s6 = b.use("sim-trans", Exists(x, phi),
               Not(Forall(x, Not(phi))), phi, prem=(s5, s4))
    return b.use("sim-symm", Exists(x, phi), phi, prem=(s6,))


@theorem("forallxvptopsi-to-forallxvp", "MGc",
         stmt=lambda phi, psi, x: Implies(Forall(x, Implies(phi, psi)),
                                          Implies(phi, Forall(x, psi))),
         conds=(("x not free in phi",
                 lambda phi, psi, x: x not in phi.fve),))
def _forall_shift(b, phi, psi, x):
    s1 = b.axiom("monk-1", phi=phi, psi=psi, x=x)
    sv = b.use("vp-dnd-forall-vp-M", phi, x)
    s2 = _fwd(b, phi, Forall(x, phi), (sv,))
    s3 = b.use("vp-to-psi-imp-psi-to-chi-tto-vp-to-chi", phi,
               Forall(x, phi), Forall(x, psi), prem=(s2,))
    return b.syl(s1, s3)


@derived("forall-quant-rule", "MGc",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(phi, Forall(x, psi)),
         conds=(("x not free in phi",
                 lambda phi, psi, x: x not in phi.fve),))
def _forall_quant_rule(b, phi, psi, x, prem):
    s2 = b.rule("gen", prem[0], x=x)
    s3 = b.use("forallxvptopsi-to-forallxvp", phi, psi, x)
    return b.mp(s2, s3)


@derived("exists-quant-rule", "MGc",
         prem=lambda phi, psi, x: (Implies(phi, psi),),
         stmt=lambda phi, psi, x: Implies(Exists(x, phi), psi),
         conds=(("x not free in psi",
                 lambda phi, psi, x: x not in psi.fve),))
def _exists_quant_rule(b, phi, psi, x, prem):
    s2 = b.use("rec-ax3-rule", phi, psi, prem=prem)
    s3 = b.use("forall-quant-rule", Not(psi), Not(phi), x, prem=(s2,))
    s4 = b.use("rec-ax3-rule", Not(psi), Forall(x, Not(phi)),
               prem=(s3,))
    sn = b.use("negnegvp-dnd-vp", psi)
    s5 = _fwd(b, Not(Not(psi)), psi, (sn,))
    s6 = b.syl(s4, s5)
    s7 = b.axiom("axiom-exists-1", phi=phi, x=x)
    return b.syl(s7, s6)


@theorem("existsx-vp-si-psi-to-vp-si-existsxpsi", "MGc",
         stmt=lambda phi, psi, x: Implies(
             Exists(x, And(phi, psi)), And(phi, Exists(x, psi))),
         conds=(("x not free in phi",
                 lambda phi, psi, x: x not in phi.fve),))
def _exists_conj_out(b, phi, psi, x):
    sr = b.use("sim-refl", phi)
    s1 = _fwd(b, phi, phi, (sr,))
    s2 = b.use("exists-quant-x-M", psi, x)
    s3 = b.use("psi-to-vp-chi-to-gamma-vp-si-chi-to-psi-si-gamma",
               phi, phi, psi, Exists(x, psi), prem=(s1, s2))
    return b.use("exists-quant-rule", And(phi, psi),
                 And(phi, Exists(x, psi)), x, prem=(s3,))


@theorem("vp-si-existsxpsi-to-existsx-vp-si-psi", "MGc",
         stmt=lambda phi, psi, x: Implies(
             And(phi, Exists(x, psi)), Exists(x, And(phi, psi))),
         conds=(("x not free in phi",
                 lambda phi, psi, x: x not in phi.fve),))
def _exists_conj_in(b, phi, psi, x):
    tgt = Exists(x, And(phi, psi))
    s1 = b.use("exists-quant-x-M", And(phi, psi), x)
    s2 = b.use("vp-si-psi-implies-chi-perm", phi, psi, tgt, prem=(s1,))
    s3 = b.rule("exportation", s2)
    s4 = b.use("exists-quant-rule", psi, Implies(phi, tgt), x,
               prem=(s3,))
    s5 = b.rule("importation", s4)
    return b.use("vp-si-psi-implies-chi-perm", Exists(x, psi), phi,
                 tgt, prem=(s5,))


@theorem("vp-si-existsxpsi-dnd-existsx-vp-si-psi", "MGc",
         stmt=lambda phi, psi, x: iff(
             And(phi, Exists(x, psi)), Exists(x, And(phi, psi))),
         conds=(("x not free in phi",
                 lambda phi, psi, x: x not in phi.fve),))
def _exists_conj_iff(b, phi, psi, x):
    s1 = b.use("vp-si-existsxpsi-to-existsx-vp-si-psi", phi, psi, x)
    s2 = b.use("existsx-vp-si-psi-to-vp-si-existsxpsi", phi, psi, x)
    return _combine(b, And(phi, Exists(x, psi)),
                    Exists(x, And(phi, psi)), s1, s2)


@theorem("forallx-vptopsi-tto-existsxvp-to-psi", "MGc",
         stmt=lambda phi, psi, x: Implies(
             Forall(x, Implies(phi, psi)),
             Implies(Exists(x, phi), psi)),
         conds=(("x not free in psi",
                 lambda phi, psi, x: x not in psi.fve),))
def _forall_imp_exists(b, phi, psi, x):
    """The source's derivation generalizes over the consequent and
    concludes with the existential taken over the wrong operand; the
    stated form follows instead by specializing the universal premise
    and commuting antecedents, done here.
    """
    imp = Implies(phi, psi)
    allimp = Forall(x, imp)
    s1 = b.use("forall-quant-x-M", imp, x)
    s2 = b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", allimp, phi, psi,
               prem=(s1,))
    s3 = b.use("exists-quant-rule", phi, Implies(allimp, psi), x,
               prem=(s2,))
    return b.use("vp-to-psi-to-chi--psi-to-vp-to-chi", Exists(x, phi),
                 allimp, psi, prem=(s3,))


@theorem("forallxnvp-vp", "MGc",
         stmt=lambda phi, x, y: Implies(Forall(x, Forall(y, phi)), phi))
def _forall_prefix_elim(b, phi, x, y):
    """Registered at a two-binder prefix; forall_elim_chain below
    handles any length.
    """
    s2 = b.use("forall-quant-x-M", Forall(y, phi), x)
    s1 = b.use("forall-quant-x-M", phi, y)
    return b.syl(s2, s1)


def forall_elim_chain(b, phi, xs):
    """Prove forall xs phi -> phi for a prefix of binders, outermost
    first; an empty prefix degenerates to the identity implication."""
    if not xs:
        return b.use("vp-to-vp", phi)
    if len(xs) == 1:
        return b.use("forall-quant-x-M", phi, xs[0])
    inner = phi
    for v in reversed(xs[1:]):
        inner = Forall(v, inner)
    s1 = forall_elim_chain(b, phi, xs[1:])
    s2 = b.use("forall-quant-x-M", inner, xs[0])
    return b.syl(s2, s1)


@theorem("propagation-exists-1-H", "MGc",
         stmt=lambda phi, psi, x: Implies(
             App(Exists(x, phi), psi), Exists(x, App(phi, psi))),
         conds=(("x not free in psi",
                 lambda phi, psi, x: x not in psi.fve),))
def _prop_exists_1h(b, phi, psi, x):
    """Propagation with the occurrence side condition weakened to
    freeness: a psi carrying bound x is detoured through a renamed
    twin, the kernel schema fires there, and replacement carries the
    conclusion back.
    """
    if not occurs(x, psi):
        return b.axiom("propagation-exists-1", phi=phi, psi=psi, x=x)
    y = fresh(x, avoid_set(psi) | {x})
    delta = subb(x, y, psi)
    s1 = b.axiom("propagation-exists-1", phi=phi, psi=delta, x=x)
    s2 = b.use("thm-vp-dnd-subbxybvp", psi, x, y)
    goal = Implies(App(Exists(x, phi), psi), Exists(x, App(phi, psi)))
    got = Implies(App(Exists(x, phi), delta),
                  Exists(x, App(phi, delta)))
    s3 = dnd_walk(b, goal, got, {(psi, delta): s2}, MGC_LABELS)
    return b.use("vpdndpsi-imp-vp-iff-psi←", goal, got, prem=(s3, s1))


@theorem("propagation-exists-2-H", "MGc",
         stmt=lambda phi, psi, x: Implies(
             App(psi, Exists(x, phi)), Exists(x, App(psi, phi))),
         conds=(("x not free in psi",
                 lambda phi, psi, x: x not in psi.fve),))
def _prop_exists_2h(b, phi, psi, x):
    """Mirror of the first hypothesis-weakened propagation; the
    closing row is misnumbered in the source.
    """
    if not occurs(x, psi):
        return b.axiom("propagation-exists-2", phi=phi, psi=psi, x=x)
    y = fresh(x, avoid_set(psi) | {x})
    delta = subb(x, y, psi)
    s1 = b.axiom("propagation-exists-2", phi=phi, psi=delta, x=x)
    s2 = b.use("thm-vp-dnd-subbxybvp", psi, x, y)
    goal = Implies(App(psi, Exists(x, phi)), Exists(x, App(psi, phi)))
    got = Implies(App(delta, Exists(x, phi)),
                  Exists(x, App(delta, phi)))
    s3 = dnd_walk(b, goal, got, {(psi, delta): s2}, MGC_LABELS)
    return b.use("vpdndpsi-imp-vp-iff-psi←", goal, got, prem=(s3, s1))

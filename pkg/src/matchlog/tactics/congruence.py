"""Recursive equivalence chaining over pattern structure.

Not an entry module: the functions here stitch catalog entries into
congruence chains for entries and meta transformers that rewrite under
arbitrary pattern contexts. Each proof system that supports rewriting
exposes a label table naming its compatibility entries; the walkers are
generic over that table.
"""

from __future__ import annotations

from ..errors import MatchlogError
from ..subst import avoid_set, fresh, subb, subf
from ..syntax import (
    And, App, EVar, Exists, Forall, Implies, Not, Or, eqdef, iff, occurs,
)

GC_LABELS = {
    "refl": "sim-refl",
    "trans": "sim-trans",
    "neg": "Gamma-dnd-cong-neg",
    "to_left": "sim-pairs-to-left",
    "to_right": "sim-pairs-to-right",
    "or_left": "sim-pairs-or-left",
    "or_right": "sim-pairs-or-right",
    "and_left": "sim-pairs-and-left",
    "and_right": "sim-pairs-and-right",
    "forall": "vp-dnd-psi-forall-vp-dnd-forall-psi",
    "exists": "vp-dnd-psi-exists-vp-dnd-exists-psi",
    "app": "rule-iff-compat-in-app-Gc",
    "app_left": "rule-iff-compat-in-app-left-Gc",
    "app_right": "rule-iff-compat-in-app-right-Gc",
}

# same walkers, driven by the catalog entries of the definedness system
MGC_LABELS = {
    "refl": "sim-refl",
    "trans": "sim-trans",
    "neg": "Gamma-dnd-cong-neg",
    "to_left": "sim-pairs-to-left",
    "to_right": "sim-pairs-to-right",
    "or_left": "sim-pairs-or-left",
    "or_right": "sim-pairs-or-right",
    "and_left": "sim-pairs-and-left",
    "and_right": "sim-pairs-and-right",
    "forall": "vp-ra-psi-forall-vp-dnd-forall-psi-M",
    "exists": "vp-ra-psi-exists-vp-dnd-exists-psi-M",
    "app": "rule-iff-compat-in-app",
    "app_left": "rule-iff-compat-in-app-left",
    "app_right": "rule-iff-compat-in-app-right",
}

# equational congruence; no two-premise application entry exists, so
# _join falls back to chaining the one-sided ones through transitivity
EQ_LABELS = {
    "refl": "eq-refl",
    "trans": "eq-trans",
    "neg": "lemma-eq-cong-not",
    "to_left": "lemma-eq-cong-imp-1",
    "to_right": "lemma-eq-cong-imp-2",
    "or_left": "lemma-eq-cong-or-1",
    "or_right": "lemma-eq-cong-or-2",
    "and_left": "lemma-eq-cong-and-1",
    "and_right": "lemma-eq-cong-and-2",
    "forall": "lemma-eq-cong-forall",
    "exists": "lemma-eq-cong-exists",
    "app_left": "lemma-eq-cong-app-1",
    "app_right": "lemma-eq-cong-app-2",
}

_PAIR_KEYS = {
    Implies: ("to_left", "to_right"),
    Or: ("or_left", "or_right"),
    And: ("and_left", "and_right"),
}


def _join(b, cls, l, lp, r, rp, sl, sr, labels):
    """Chain cls(l, r) <-> cls(lp, rp) from child equivalences.

    sl proves l <-> lp and sr proves r <-> rp; either may be None when
    that child is unchanged, in which case the one-sided compatibility
    entry is enough and no transitivity step is spent.
    """
    if cls is App:
        if sl is None:
            return b.use(labels["app_right"], l, r, rp, prem=(sr,))
        if sr is None:
            return b.use(labels["app_left"], l, lp, r, prem=(sl,))
        if "app" in labels:
            return b.use(labels["app"], l, lp, r, rp, prem=(sl, sr))
        s1 = b.use(labels["app_left"], l, lp, r, prem=(sl,))
        s2 = b.use(labels["app_right"], lp, r, rp, prem=(sr,))
        return b.use(labels["trans"], App(l, r), App(lp, r), App(lp, rp),
                     prem=(s1, s2))
    kl, kr = _PAIR_KEYS[cls]
    if sl is None:
        return b.use(labels[kr], r, rp, l, prem=(sr,))
    if sr is None:
        return b.use(labels[kl], l, lp, r, prem=(sl,))
    s1 = b.use(labels[kl], l, lp, r, prem=(sl,))
    s2 = b.use(labels[kr], r, rp, lp, prem=(sr,))
    return b.use(labels["trans"], cls(l, r), cls(lp, r), cls(lp, rp),
                 prem=(s1, s2))


def dnd_walk(b, chi, theta, base, labels=GC_LABELS):
    """Prove chi <-> theta where theta differs from chi only at subterm
    pairs listed in base.

    base maps (old, new) pattern pairs to already-proved step indices
    for old <-> new. The two patterns must agree everywhere else,
    binders included.
    """
    if chi is theta:
        return b.use(labels["refl"], chi)
    hit = base.get((chi, theta))
    if hit is not None:
        return hit
    if type(chi) is not type(theta):
        raise MatchlogError(
            f"no equivalence path: {chi} vs {theta} differ at the root")
    if isinstance(chi, Not):
        s = dnd_walk(b, chi.sub, theta.sub, base, labels)
        return b.use(labels["neg"], chi.sub, theta.sub, prem=(s,))
    if isinstance(chi, (Implies, And, Or, App)):
        l, r = chi.left, chi.right
        lp, rp = theta.left, theta.right
        sl = None if l is lp else dnd_walk(b, l, lp, base, labels)
        sr = None if r is rp else dnd_walk(b, r, rp, base, labels)
        return _join(b, type(chi), l, lp, r, rp, sl, sr, labels)
    if isinstance(chi, (Forall, Exists)):
        if chi.var != theta.var:
            raise MatchlogError(
                f"no equivalence path: binder {chi.var} vs {theta.var}")
        key = "forall" if isinstance(chi, Forall) else "exists"
        s = dnd_walk(b, chi.body, theta.body, base, labels)
        return b.use(labels[key], chi.body, theta.body, chi.var,
                     prem=(s,))
    raise MatchlogError(f"no equivalence path: {chi} vs {theta}")


def rename_forall(b, x, y, body):
    """Prove forall x body <-> forall y subf(x, y, body) at the kernel
    level.

    Preconditions (not rechecked here): y is distinct from x, does not
    occur in body, and body has no x-binders. Under these the two
    substitution instances below are capture-free and cancel.
    """
    target = subf(x, y, body)
    s1 = b.axiom("forall-quantifier", phi=body, x=x, y=y)
    s2 = b.rule("forall-rule", s1, x=y)
    s3 = b.axiom("forall-quantifier", phi=target, x=y, y=x)
    s4 = b.rule("forall-rule", s3, x=x)
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→",
                 Forall(x, body), Forall(y, target), prem=(s2, s4))


def rename_exists(b, x, y, body):
    """Prove exists x body <-> exists y subf(x, y, body); same
    preconditions as rename_forall."""
    target = subf(x, y, body)
    s1 = b.axiom("exists-quantifier", phi=target, x=y, y=x)
    s2 = b.rule("exists-rule", s1, x=x)
    s3 = b.axiom("exists-quantifier", phi=body, x=x, y=y)
    s4 = b.rule("exists-rule", s3, x=y)
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→",
                 Exists(x, body), Exists(y, target), prem=(s2, s4))


GC_RENAMES = (rename_forall, rename_exists)


def subb_dnd(b, x, y, p, labels=GC_LABELS, renames=GC_RENAMES):
    """Prove p <-> subb(x, y, p) for y not occurring in p.

    Mirrors the recursion of subb itself: subterms without x-binders
    are reflexive leaves; at an x-binder the renamed body is handled
    first, then the binder is swapped with a rename step. renames is
    the (forall, exists) pair of binder-rename provers for the target
    system.
    """
    if x not in p.bve:
        return b.use(labels["refl"], p)
    if isinstance(p, Not):
        q = p.sub
        s = subb_dnd(b, x, y, q, labels, renames)
        return b.use(labels["neg"], q, subb(x, y, q), prem=(s,))
    if isinstance(p, (Implies, And, Or, App)):
        l, r = p.left, p.right
        lp, rp = subb(x, y, l), subb(x, y, r)
        sl = None if l is lp else subb_dnd(b, x, y, l, labels, renames)
        sr = None if r is rp else subb_dnd(b, x, y, r, labels, renames)
        return _join(b, type(p), l, lp, r, rp, sl, sr, labels)
    if isinstance(p, (Forall, Exists)):
        cls = Forall if isinstance(p, Forall) else Exists
        key = "forall" if cls is Forall else "exists"
        body = p.body
        bp = subb(x, y, body)
        if p.var != x:
            s = subb_dnd(b, x, y, body, labels, renames)
            return b.use(labels[key], body, bp, p.var, prem=(s,))
        rename = renames[0] if cls is Forall else renames[1]
        if body is bp:
            return rename(b, x, y, body)
        s1 = subb_dnd(b, x, y, body, labels, renames)
        s2 = b.use(labels[key], body, bp, x, prem=(s1,))
        s3 = rename(b, x, y, bp)
        return b.use(labels["trans"], p, cls(x, bp),
                     cls(y, subf(x, y, bp)), prem=(s2, s3))
    raise AssertionError(p)


def mgc_rename_forall(b, x, y, body):
    """Prove forall x body <-> forall y subf(x, y, body) without the
    substitution-shaped quantifier axioms.

    Preconditions as for rename_forall, except y may occur bound: the
    definedness system's binder-shift entry only tolerates a y that is
    absent outright, so a body with y-binders is detoured through a
    globally fresh name first (two strictly smaller subb_dnd rounds),
    then shifted cleanly.
    """
    if not occurs(y, body):
        return b.use("forallxvp-dns-subfxyvp", body, x, y)
    w = fresh("w", avoid_set(body) | {x, y})
    bw = subb(y, w, body)
    tp = subf(x, y, body)
    tw = subf(x, y, bw)
    if tw is not subb(y, w, tp):
        raise MatchlogError(
            f"rename detour out of step at {body} with {x}->{y}")
    s1 = subb_dnd(b, y, w, body, MGC_LABELS, MGC_RENAMES)
    s2 = b.use(MGC_LABELS["forall"], body, bw, x, prem=(s1,))
    s3 = b.use("forallxvp-dns-subfxyvp", bw, x, y)
    s4 = subb_dnd(b, y, w, tp, MGC_LABELS, MGC_RENAMES)
    s5 = b.use(MGC_LABELS["forall"], tp, tw, y, prem=(s4,))
    s6 = b.use("sim-symm", Forall(y, tp), Forall(y, tw), prem=(s5,))
    s7 = b.use("sim-trans", Forall(x, body), Forall(x, bw), Forall(y, tw),
               prem=(s2, s3))
    return b.use("sim-trans", Forall(x, body), Forall(y, tw),
                 Forall(y, tp), prem=(s7, s6))


def mgc_rename_exists(b, x, y, body):
    """Existential twin of mgc_rename_forall, routed through the
    negation-of-universal characterization."""
    tp = subf(x, y, body)
    nb = Not(body)
    s1 = mgc_rename_forall(b, x, y, nb)
    s2 = b.use("Gamma-dnd-cong-neg", Forall(x, nb), Forall(y, Not(tp)),
               prem=(s1,))
    s3 = b.use("existsxvp-dnd-negforallxngvp", body, x)
    s4 = b.use("existsxvp-dnd-negforallxngvp", tp, y)
    s5 = b.use("sim-trans", Exists(x, body), Not(Forall(x, nb)),
               Not(Forall(y, Not(tp))), prem=(s3, s2))
    s6 = b.use("sim-symm", Exists(y, tp), Not(Forall(y, Not(tp))),
               prem=(s4,))
    return b.use("sim-trans", Exists(x, body), Not(Forall(y, Not(tp))),
                 Exists(y, tp), prem=(s5, s6))


MGC_RENAMES = (mgc_rename_forall, mgc_rename_exists)


def free_swap_count(x, y, vp, psi):
    """How many free occurrences of x in vp are y in psi, when psi is vp
    with some subset of them replaced; None when it is not.

    Zero replacements (psi identical to vp) count as a legal subset.
    """
    if vp is psi:
        return 0
    if isinstance(vp, EVar) and vp.name == x and psi is EVar(y):
        return 1
    if type(vp) is not type(psi):
        return None
    if isinstance(vp, Not):
        return free_swap_count(x, y, vp.sub, psi.sub)
    if isinstance(vp, (Implies, And, Or, App)):
        nl = free_swap_count(x, y, vp.left, psi.left)
        nr = free_swap_count(x, y, vp.right, psi.right)
        return None if nl is None or nr is None else nl + nr
    if isinstance(vp, (Forall, Exists)):
        if vp.var != psi.var or vp.var == x:
            return None
        return free_swap_count(x, y, vp.body, psi.body)
    return None


def guarded_subf_walk(b, x, y, vp, psi, labels=MGC_LABELS):
    """Prove x-equals-y -> (vp <-> psi) where psi replaces free
    occurrences of x in vp with y.

    Untouched subtrees are lifted reflexively under the guard; each
    replaced occurrence bottoms out in the equality-elimination entry.
    Quantifier descent needs the binder away from both x and y, which
    the free-for hypothesis of every caller guarantees.
    """
    guard = eqdef(EVar(x), EVar(y))
    if vp is psi:
        s1 = b.use(labels["refl"], vp)
        s2 = b.use("vp-to-psi-to-vp", iff(vp, vp), guard)
        return b.mp(s1, s2)
    if isinstance(vp, EVar) and vp.name == x:
        return b.use("equal-imp-dnd", EVar(x), EVar(y))
    if isinstance(vp, Not):
        s1 = guarded_subf_walk(b, x, y, vp.sub, psi.sub, labels)
        s2 = b.use("vpdndpsi-neg", vp.sub, psi.sub)
        return b.syl(s1, s2)
    if isinstance(vp, (Implies, And, Or)):
        lift_l = {Implies: "vpdndpsi-to-r", Or: "vpdndpsi-sau-r",
                  And: "vpdndpsi-si-r"}[type(vp)]
        lift_r = {Implies: "vpdndpsi-to-l", Or: "vpdndpsi-sau-l",
                  And: "vpdndpsi-si-l"}[type(vp)]
        l, r = vp.left, vp.right
        lp, rp = psi.left, psi.right
        cls = type(vp)
        if r is rp:
            s1 = guarded_subf_walk(b, x, y, l, lp, labels)
            s2 = b.use(lift_l, l, lp, r)
            return b.syl(s1, s2)
        if l is lp:
            s1 = guarded_subf_walk(b, x, y, r, rp, labels)
            s2 = b.use(lift_r, r, rp, l)
            return b.syl(s1, s2)
        s1 = guarded_subf_walk(b, x, y, l, lp, labels)
        s2 = b.use(lift_l, l, lp, r)
        s3 = b.syl(s1, s2)
        s4 = guarded_subf_walk(b, x, y, r, rp, labels)
        s5 = b.use(lift_r, r, rp, lp)
        s6 = b.syl(s4, s5)
        return b.use(
            "vp-to-psi-dnd-chi-vp-dnd-chi-to-gamma-implies-vp-to-psi-dnd-gamma",
            guard, cls(l, r), cls(lp, r), cls(lp, rp), prem=(s3, s6))
    if isinstance(vp, App):
        l, r = vp.left, vp.right
        lp, rp = psi.left, psi.right
        if r is rp:
            s1 = guarded_subf_walk(b, x, y, l, lp, labels)
            return b.use("xeqytovpdndpsi-imp-xeqy-vpchidndpsichi",
                         l, lp, r, x, y, prem=(s1,))
        if l is lp:
            s1 = guarded_subf_walk(b, x, y, r, rp, labels)
            return b.use("xeqytovpdndpsi-imp-xeqy-chivpndchipsi",
                         r, rp, l, x, y, prem=(s1,))
        s1 = guarded_subf_walk(b, x, y, l, lp, labels)
        s2 = b.use("xeqytovpdndpsi-imp-xeqy-vpchidndpsichi",
                   l, lp, r, x, y, prem=(s1,))
        s3 = guarded_subf_walk(b, x, y, r, rp, labels)
        s4 = b.use("xeqytovpdndpsi-imp-xeqy-chivpndchipsi",
                   r, rp, lp, x, y, prem=(s3,))
        return b.use(
            "vp-to-psi-dnd-chi-vp-dnd-chi-to-gamma-implies-vp-to-psi-dnd-gamma",
            guard, App(l, r), App(lp, r), App(lp, rp), prem=(s2, s4))
    if isinstance(vp, (Forall, Exists)):
        lab = ("chi-vppsi-chi-forallxvppsi-dnd-M" if isinstance(vp, Forall)
               else "chi-vppsi-chi-existsxvppsi-dnd-M")
        s1 = guarded_subf_walk(b, x, y, vp.body, psi.body, labels)
        return b.use(lab, vp.body, psi.body, guard, vp.var, prem=(s1,))
    raise MatchlogError(f"no guarded path: {vp} vs {psi}")

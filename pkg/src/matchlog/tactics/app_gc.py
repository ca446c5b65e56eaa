"""Application congruence and the half-strength propagation lemmas.

The kernel propagation axioms demand that the bound variable not occur
in the carried pattern at all. The lemmas here weaken that to "not
free" by renaming the offending binders away, rewriting under the
bounded substitution equivalence, and transporting the axiom instance
back.
"""

from __future__ import annotations

from ..subst import avoid_set, fresh, subb
from ..syntax import App, Exists, Implies, iff, occurs
from .catalog import derived, theorem
from .congruence import dnd_walk, subb_dnd


def _fwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-l", left, right,
                 prem=prem)


def _bwd(b, left, right, prem):
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi←-r", left, right,
                 prem=prem)


@derived("rule-iff-compat-in-app-Gc", "Gc",
         prem=lambda phi, psi, chi, gamma: (iff(phi, psi),
                                            iff(chi, gamma)),
         stmt=lambda phi, psi, chi, gamma: iff(App(phi, chi),
                                               App(psi, gamma)))
def _app_pair(b, phi, psi, chi, gamma, prem):
    """Step nine extracts from the first assumption, restated directly
    above it; it does not feed on itself."""
    s2 = _fwd(b, phi, psi, (prem[0],))
    s3 = b.rule("framing-left", s2, chi=chi)
    s5 = _fwd(b, chi, gamma, (prem[1],))
    s6 = b.rule("framing-right", s5, chi=psi)
    s7 = b.syl(s3, s6)
    s9 = _bwd(b, phi, psi, (prem[0],))
    s10 = b.rule("framing-left", s9, chi=gamma)
    s11 = _bwd(b, chi, gamma, (prem[1],))
    s12 = b.rule("framing-right", s11, chi=phi)
    s13 = b.syl(s10, s12)
    return b.use("Gamma-vptopsi-psitovp-iff-vpdndpsi→",
                 App(phi, chi), App(psi, gamma), prem=(s7, s13))


@derived("rule-iff-compat-in-app-left-Gc", "Gc",
         prem=lambda phi, psi, chi: (iff(phi, psi),),
         stmt=lambda phi, psi, chi: iff(App(phi, chi), App(psi, chi)))
def _app_left(b, phi, psi, chi, prem):
    s = b.use("sim-refl", chi)
    return b.use("rule-iff-compat-in-app-Gc", phi, psi, chi, chi,
                 prem=(prem[0], s))


@derived("rule-iff-compat-in-app-right-Gc", "Gc",
         prem=lambda phi, chi, gamma: (iff(chi, gamma),),
         stmt=lambda phi, chi, gamma: iff(App(phi, chi), App(phi, gamma)))
def _app_right(b, phi, chi, gamma, prem):
    s = b.use("sim-refl", phi)
    return b.use("rule-iff-compat-in-app-Gc", phi, phi, chi, gamma,
                 prem=(s, prem[0]))


@theorem("thm-vp-dnd-subbxybvp-Gc", "Gc",
         stmt=lambda phi, x, y: iff(phi, subb(x, y, phi)),
         conds=(("y does not occur in phi",
                 lambda phi, x, y: not occurs(y, phi)),))
def _subb_equiv(b, phi, x, y):
    return subb_dnd(b, x, y, phi)


def _propagate(b, phi, psi, x, shape):
    # rename the bound x out of psi, take the axiom on the renamed copy,
    # rewrite psi to that copy everywhere, transport back
    y = fresh("y", avoid_set(psi) | {x})
    delta = subb(x, y, psi)
    s1 = b.axiom(shape, phi=phi, psi=delta, x=x)
    s2 = b.use("thm-vp-dnd-subbxybvp-Gc", psi, x, y)
    if shape == "propagation-exists-1":
        wanted = Implies(App(Exists(x, phi), psi),
                         Exists(x, App(phi, psi)))
        renamed = Implies(App(Exists(x, phi), delta),
                          Exists(x, App(phi, delta)))
    else:
        wanted = Implies(App(psi, Exists(x, phi)),
                         Exists(x, App(psi, phi)))
        renamed = Implies(App(delta, Exists(x, phi)),
                          Exists(x, App(delta, phi)))
    s3 = dnd_walk(b, wanted, renamed, {(psi, delta): s2})
    return b.use("vpdndpsi-imp-vp-iff-psi←", wanted, renamed,
                 prem=(s3, s1))


@theorem("propagation-exists-1-H-Gc", "Gc",
         stmt=lambda phi, psi, x: Implies(App(Exists(x, phi), psi),
                                          Exists(x, App(phi, psi))),
         conds=(("x not free in psi",
                 lambda phi, psi, x: x not in psi.fve),))
def _propagation_exists_1_h(b, phi, psi, x):
    return _propagate(b, phi, psi, x, "propagation-exists-1")


@theorem("propagation-exists-2-H-Gc", "Gc",
         stmt=lambda phi, psi, x: Implies(App(psi, Exists(x, phi)),
                                          Exists(x, App(psi, phi))),
         conds=(("x not free in psi",
                 lambda phi, psi, x: x not in psi.fve),))
def _propagation_exists_2_h(b, phi, psi, x):
    return _propagate(b, phi, psi, x, "propagation-exists-2")

"""Patterns, variable bookkeeping, occurrences, contexts, and the notation layer.

Patterns are immutable interned trees: structurally equal patterns are the
same object, so equality is (almost always) a pointer check, and per-node
caches (free variables, binder variables, hash, size) are computed once.
Structural equality is syntactic identity -- there is no implicit
alpha-equivalence anywhere in the package; renaming is an explicit operation
(see subst.subb).

Only one symbol has built-in meaning: ``def``, the definedness symbol.
Everything else (iff, ceil, floor, equality, membership) is notation that
expands eagerly at construction; the printer re-sugars on the way out.
"""

from __future__ import annotations

from typing import Iterator, Optional

Variable = str  # nonempty identifier; equality/ordering are the string's

DEF_SYMBOL = "def"

_EMPTY: frozenset = frozenset()

# Single global intern table: key -> node. Children are interned before
# parents, so keys hash and compare in O(1).
_intern: dict = {}


class Pattern:
    """Base class; concrete nodes below. Do not instantiate directly."""

    __slots__ = ("_hash", "fve", "bve", "size")

    _hash: int
    fve: frozenset        # free element variables
    bve: frozenset        # variables appearing as a quantifier binder
    size: int             # node count

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        # Interning makes equal patterns identical; anything constructed
        # through the public constructors is covered by the `is` check.
        return self is other

    def __ne__(self, other) -> bool:
        return self is not other

    def depth(self) -> int:
        match self:
            case Bot() | EVar() | Sym() | Hole():
                return 1
            case Not(p) | Forall(_, p) | Exists(_, p):
                return 1 + p.depth()
            case Implies(p, q) | And(p, q) | Or(p, q) | App(p, q):
                return 1 + max(p.depth(), q.depth())
        raise AssertionError(self)

    def children(self) -> tuple:
        match self:
            case Bot() | EVar() | Sym() | Hole():
                return ()
            case Not(p) | Forall(_, p) | Exists(_, p):
                return (p,)
            case Implies(p, q) | And(p, q) | Or(p, q) | App(p, q):
                return (p, q)
        raise AssertionError(self)

    def __repr__(self) -> str:
        return debug_str(self)


def _node(cls, key, *init_args):
    cached = _intern.get(key)
    if cached is None:
        cached = object.__new__(cls)
        cached._init(*init_args)
        cached._hash = hash(key)
        _intern[key] = cached
    return cached


class Bot(Pattern):
    __slots__ = ()
    __match_args__ = ()

    def __new__(cls):
        return _node(cls, (cls,))

    def _init(self):
        self.fve = _EMPTY
        self.bve = _EMPTY
        self.size = 1


class EVar(Pattern):
    __slots__ = ("name",)
    __match_args__ = ("name",)

    def __new__(cls, name: Variable):
        if not name:
            raise ValueError("variable name must be nonempty")
        return _node(cls, (cls, name), name)

    def _init(self, name):
        self.name = name
        self.fve = frozenset((name,))
        self.bve = _EMPTY
        self.size = 1


class Sym(Pattern):
    __slots__ = ("name",)
    __match_args__ = ("name",)

    def __new__(cls, name: str):
        if not name:
            raise ValueError("symbol name must be nonempty")
        return _node(cls, (cls, name), name)

    def _init(self, name):
        self.name = name
        self.fve = _EMPTY
        self.bve = _EMPTY
        self.size = 1


class Hole(Pattern):
    """Context hole. Only legal inside a Context skeleton."""

    __slots__ = ()
    __match_args__ = ()

    def __new__(cls):
        return _node(cls, (cls,))

    def _init(self):
        self.fve = _EMPTY
        self.bve = _EMPTY
        self.size = 1


class Not(Pattern):
    __slots__ = ("sub",)
    __match_args__ = ("sub",)

    def __new__(cls, sub: Pattern):
        return _node(cls, (cls, sub), sub)

    def _init(self, sub):
        self.sub = sub
        self.fve = sub.fve
        self.bve = sub.bve
        self.size = 1 + sub.size


class _Binary(Pattern):
    __slots__ = ("left", "right")
    __match_args__ = ("left", "right")

    def __new__(cls, left: Pattern, right: Pattern):
        return _node(cls, (cls, left, right), left, right)

    def _init(self, left, right):
        self.left = left
        self.right = right
        self.fve = left.fve | right.fve
        self.bve = left.bve | right.bve
        self.size = 1 + left.size + right.size


class Implies(_Binary):
    __slots__ = ()


class And(_Binary):
    __slots__ = ()


class Or(_Binary):
    __slots__ = ()


class App(_Binary):
    __slots__ = ()


class _Quant(Pattern):
    __slots__ = ("var", "body")
    __match_args__ = ("var", "body")

    def __new__(cls, var: Variable, body: Pattern):
        if not var:
            raise ValueError("binder name must be nonempty")
        return _node(cls, (cls, var, body), var, body)

    def _init(self, var, body):
        self.var = var
        self.body = body
        self.fve = body.fve - {var}
        # the binder itself counts as a bound occurrence
        self.bve = body.bve | {var}
        self.size = 1 + body.size


class Forall(_Quant):
    __slots__ = ()


class Exists(_Quant):
    __slots__ = ()


BOT = Bot()
HOLE = Hole()
DEF = Sym(DEF_SYMBOL)


# -- variable bookkeeping ----------------------------------------------------

def fve(p: Pattern) -> frozenset:
    """Free element variables."""
    return p.fve


def bve(p: Pattern) -> frozenset:
    """Variables occurring as a quantifier binder anywhere in p."""
    return p.bve


def occurs_free(x: Variable, p: Pattern) -> bool:
    return x in p.fve


def occurs_bound(x: Variable, p: Pattern) -> bool:
    # with the binder-counts-as-bound convention this is exactly bve
    return x in p.bve


def occurs(x: Variable, p: Pattern) -> bool:
    return x in p.fve or x in p.bve


def all_vars(p: Pattern) -> frozenset:
    return p.fve | p.bve


# -- notation layer ----------------------------------------------------------

NOTATION_TAGS = ("dnd", "ceil", "floor", "eqdef", "member")


def iff(a: Pattern, b: Pattern) -> Pattern:
    """a <-> b  ==  (a -> b) /\\ (b -> a)"""
    return And(Implies(a, b), Implies(b, a))


def ceil(p: Pattern) -> Pattern:
    """|^ p ^|  ==  def @ p"""
    return App(DEF, p)


def floor(p: Pattern) -> Pattern:
    """|_ p _|  ==  ! |^ ! p ^|"""
    return Not(App(DEF, Not(p)))


def eqdef(a: Pattern, b: Pattern) -> Pattern:
    """a = b  ==  |_ a <-> b _|"""
    return floor(iff(a, b))


def member(x: Variable, p: Pattern) -> Pattern:
    """x in p  ==  |^ x /\\ p ^|"""
    return App(DEF, And(EVar(x), p))


def expand(tag: str, *args) -> Pattern:
    """Build the expansion of a derived connective; arity-checked."""
    if tag == "dnd":
        if len(args) != 2:
            raise ValueError("dnd takes 2 arguments")
        return iff(args[0], args[1])
    if tag == "ceil":
        if len(args) != 1:
            raise ValueError("ceil takes 1 argument")
        return ceil(args[0])
    if tag == "floor":
        if len(args) != 1:
            raise ValueError("floor takes 1 argument")
        return floor(args[0])
    if tag == "eqdef":
        if len(args) != 2:
            raise ValueError("eqdef takes 2 arguments")
        return eqdef(args[0], args[1])
    if tag == "member":
        if len(args) != 2:
            raise ValueError("member takes 2 arguments")
        x = args[0]
        if isinstance(x, EVar):
            x = x.name
        if not isinstance(x, str):
            raise ValueError("member's first argument must be a variable")
        return member(x, args[1])
    raise ValueError(f"unknown notation tag {tag!r}")


def recognize(p: Pattern) -> Optional[tuple]:
    """Invert expand where the shape matches exactly.

    Preference order at a node: member before ceil (both are def
    applications), eqdef before floor (both are !def@!-shaped), so the
    printer folds the largest sugar first.
    """
    match p:
        case App(Sym(s), body) if s == DEF_SYMBOL:
            match body:
                case And(EVar(x), q):
                    return ("member", x, q)
            return ("ceil", body)
        case Not(App(Sym(s), Not(q))) if s == DEF_SYMBOL:
            match q:
                case And(Implies(a, b), Implies(b2, a2)) if a2 is a and b2 is b:
                    return ("eqdef", a, b)
            return ("floor", q)
        case And(Implies(a, b), Implies(b2, a2)) if a2 is a and b2 is b:
            return ("dnd", a, b)
    return None


# -- occurrence machinery ----------------------------------------------------
#
# A position is a path: tuple of child indices from the root. Occurrences of
# a pattern inside another are enumerated preorder (outermost first, left
# child before right child). Identical subtrees cannot nest, so occurrences
# never overlap and the enumeration is stable.

def occurrences(chi: Pattern, phi: Pattern) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def walk(p: Pattern, path: tuple[int, ...]):
        if p is phi:
            out.append(path)
            return
        for i, c in enumerate(p.children()):
            walk(c, path + (i,))

    walk(chi, ())
    return out


def subpattern_at(p: Pattern, path: tuple[int, ...]) -> Pattern:
    for i in path:
        p = p.children()[i]
    return p


def _rebuild(p: Pattern, i: int, child: Pattern) -> Pattern:
    match p:
        case Not(_):
            return Not(child)
        case Implies(a, b):
            return Implies(child, b) if i == 0 else Implies(a, child)
        case And(a, b):
            return And(child, b) if i == 0 else And(a, child)
        case Or(a, b):
            return Or(child, b) if i == 0 else Or(a, child)
        case App(a, b):
            return App(child, b) if i == 0 else App(a, child)
        case Forall(v, _):
            return Forall(v, child)
        case Exists(v, _):
            return Exists(v, child)
    raise AssertionError(p)


def replace_at(p: Pattern, path: tuple[int, ...], repl: Pattern) -> Pattern:
    if not path:
        return repl
    i = path[0]
    return _rebuild(p, i, replace_at(p.children()[i], path[1:], repl))


def replace_occurrences(chi: Pattern, phi: Pattern, psi: Pattern,
                        selection: set[int] | frozenset[int]) -> Pattern:
    """Replace the selected occurrences of phi in chi by psi (textual --
    capture is allowed; the replacement theorems quantify over arbitrary
    contexts)."""
    occ = occurrences(chi, phi)
    if not selection:
        raise ValueError("empty occurrence selection")
    bad = [i for i in selection if not (0 <= i < len(occ))]
    if bad:
        raise ValueError(
            f"occurrence index {bad[0]} out of range (found {len(occ)})")
    out = chi
    for i in sorted(selection):
        # paths are disjoint, so replacing one never shifts another
        out = replace_at(out, occ[i], psi)
    return out


# -- contexts ----------------------------------------------------------------

class Context:
    """A pattern-shaped tree with exactly one hole.

    apply() is textual hole substitution: capture is allowed. The predicate
    is_application_context holds iff the hole is reachable from the root
    through App nodes only.
    """

    __slots__ = ("skeleton", "path")

    def __init__(self, skeleton: Pattern):
        holes = occurrences(skeleton, HOLE)
        if len(holes) != 1:
            raise ValueError(f"context must have exactly one hole, found {len(holes)}")
        self.skeleton = skeleton
        self.path = holes[0]

    def __eq__(self, other):
        return isinstance(other, Context) and self.skeleton is other.skeleton

    def __hash__(self):
        return hash((Context, self.skeleton))

    def __repr__(self):
        return f"Context({debug_str(self.skeleton)})"

    def apply(self, phi: Pattern) -> Pattern:
        return replace_at(self.skeleton, self.path, phi)

    def is_application_context(self) -> bool:
        p = self.skeleton
        for i in self.path:
            if not isinstance(p, App):
                return False
            p = p.children()[i]
        return True

    def compose(self, inner: "Context") -> "Context":
        """C1.compose(C2) == C with C[p] = C1[C2[p]]."""
        return Context(self.apply(inner.skeleton))

    def is_hole(self) -> bool:
        return self.skeleton is HOLE


def apply_context(c: Context, phi: Pattern) -> Pattern:
    return c.apply(phi)


def is_application_context(c: Context) -> bool:
    return c.is_application_context()


# -- debug rendering ---------------------------------------------------------
# Compact unicode for reprs and error messages. The surface module owns the
# real (parseable) textual format.

def debug_str(p: Pattern) -> str:
    sug = recognize(p)
    if sug is not None:
        tag = sug[0]
        if tag == "member":
            return f"({sug[1]} ∈ {debug_str(sug[2])})"
        if tag == "ceil":
            return f"⌈{debug_str(sug[1])}⌉"
        if tag == "floor":
            return f"⌊{debug_str(sug[1])}⌋"
        if tag == "eqdef":
            return f"({debug_str(sug[1])} = {debug_str(sug[2])})"
        if tag == "dnd":
            return f"({debug_str(sug[1])} ↔ {debug_str(sug[2])})"
    match p:
        case Bot():
            return "⊥"
        case Hole():
            return "□"
        case EVar(x):
            return x
        case Sym(s):
            return f"'{s}"
        case Not(q):
            return f"¬{debug_str(q)}"
        case Implies(a, b):
            return f"({debug_str(a)} → {debug_str(b)})"
        case And(a, b):
            return f"({debug_str(a)} ∧ {debug_str(b)})"
        case Or(a, b):
            return f"({debug_str(a)} ∨ {debug_str(b)})"
        case App(a, b):
            return f"({debug_str(a)}·{debug_str(b)})"
        case Forall(v, q):
            return f"∀{v} {debug_str(q)}"
        case Exists(v, q):
            return f"∃{v} {debug_str(q)}"
    raise AssertionError(p)


def iter_subpatterns(p: Pattern) -> Iterator[Pattern]:
    """Preorder traversal (the occurrence enumeration order)."""
    yield p
    for c in p.children():
        yield from iter_subpatterns(c)

"""Finite powerset models and exhaustive validity checking.

Carriers have at most 64 elements and subsets are bitmasks, so evaluation
is exact set arithmetic. Validity enumerates every valuation over the
pattern's free variables.

Two engines compute the same answer. The reference engine evaluates one
valuation at a time, straight from the clauses. The grid engine packs the
whole valuation grid into a single big integer (one carrier-subset block
per grid point, one axis per variable name) and evaluates each connective
as a handful of wide bitwise operations; quantifiers fold along their
axis and re-broadcast. valid() uses the grid engine whenever the axis
count is small enough and the reference engine otherwise; the test suite
checks them against each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import MatchlogError
from .syntax import (
    And, App, Bot, DEF_SYMBOL, EVar, Exists, Forall, Implies, Not, Or,
    Pattern, Sym, Variable,
)

Valuation = dict[str, int]

# beyond this many distinct variable names the grid no longer pays off
_GRID_AXIS_LIMIT = 10


@dataclass
class Model:
    """Powerset model: carrier {0..size-1}, app pointwise, subsets as masks.

    app[i][j] is the subset produced by applying element i to element j.
    def_interp interprets the definedness symbol; any other symbol used
    by a pattern must appear in sym_interp.
    """
    size: int
    app: tuple
    def_interp: int
    sym_interp: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.size <= 64:
            raise MatchlogError(f"carrier size {self.size} out of range")

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def carrier(self) -> range:
        return range(self.size)

    def symbol(self, name: str) -> int:
        if name == DEF_SYMBOL:
            return self.def_interp
        try:
            return self.sym_interp[name]
        except KeyError:
            raise MatchlogError(f"model interprets no symbol {name!r}") \
                from None

    def satisfies_definedness(self) -> bool:
        """Applying def_interp to any singleton yields the full carrier."""
        for m in self.carrier:
            u = 0
            for d in _bits(self.def_interp):
                u |= self.app[d][m]
            if u != self.full:
                return False
        return True


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def eval_pattern(model: Model, valuation: Mapping[str, int],
                 p: Pattern) -> int:
    """One-valuation evaluation, the reference clause by clause."""
    full = model.full
    match p:
        case Bot():
            return 0
        case EVar(name):
            try:
                return 1 << valuation[name]
            except KeyError:
                raise MatchlogError(f"valuation misses {name!r}") from None
        case Sym(name):
            return model.symbol(name)
        case Not(sub):
            return full ^ eval_pattern(model, valuation, sub)
        case And(a, b):
            return (eval_pattern(model, valuation, a)
                    & eval_pattern(model, valuation, b))
        case Or(a, b):
            return (eval_pattern(model, valuation, a)
                    | eval_pattern(model, valuation, b))
        case Implies(a, b):
            return ((full ^ eval_pattern(model, valuation, a))
                    | eval_pattern(model, valuation, b))
        case App(a, b):
            av = eval_pattern(model, valuation, a)
            bv = eval_pattern(model, valuation, b)
            out = 0
            for i in _bits(av):
                row = model.app[i]
                for j in _bits(bv):
                    out |= row[j]
            return out
        case Exists(v, body):
            inner = dict(valuation)
            out = 0
            for m in model.carrier:
                inner[v] = m
                out |= eval_pattern(model, inner, body)
                if out == full:
                    break
            return out
        case Forall(v, body):
            inner = dict(valuation)
            out = full
            for m in model.carrier:
                inner[v] = m
                out &= eval_pattern(model, inner, body)
                if out == 0:
                    break
            return out
    raise MatchlogError(f"cannot evaluate {p!r}")


def valuations(model: Model, names: Sequence[str]) -> Iterator[Valuation]:
    for combo in product(model.carrier, repeat=len(names)):
        yield dict(zip(names, combo))


def _all_names(p: Pattern) -> list[str]:
    names: set[str] = set()

    def walk(q: Pattern):
        match q:
            case EVar(name):
                names.add(name)
            case Exists(v, body) | Forall(v, body):
                names.add(v)
                walk(body)
            case _:
                for c in q.children():
                    walk(c)

    walk(p)
    return sorted(names)


class _Grid:
    """All-valuations evaluator over one model.

    The grid has one axis per variable name; axis a has stride size**a
    blocks. Block t holds the subset computed at the valuation encoded by
    t's mixed-radix digits. Subpattern results are memoized, which the
    interned syntax makes a pointer lookup.
    """

    def __init__(self, model: Model, names: Sequence[str]):
        self.model = model
        n = model.size
        self.n = n
        self.axis = {name: i for i, name in enumerate(names)}
        self.blocks = n ** len(names)
        self.comb = ((1 << (n * self.blocks)) - 1) // ((1 << n) - 1)
        self.mask_all = self.comb * model.full
        self._axis_cache: dict[int, tuple[int, int, int]] = {}
        self._memo: dict[Pattern, int] = {}

    def _axis_parts(self, a: int) -> tuple[int, int, int]:
        """(variable grid, coordinate-zero mask, bit stride) for axis a."""
        try:
            return self._axis_cache[a]
        except KeyError:
            pass
        n = self.n
        stride = n ** a                       # blocks per coordinate step
        bitstride = n * stride
        inner = ((1 << bitstride) - 1) // ((1 << n) - 1)
        period = n * bitstride                # bits per full axis cycle
        reps = self.blocks // (n * stride)
        rep_comb = ((1 << (period * reps)) - 1) // ((1 << period) - 1)
        seg = 0
        for v in range(n):
            seg |= (inner << (v * bitstride)) * (1 << v)
        evar_grid = seg * rep_comb
        zero_mask = (inner * self.model.full) * rep_comb
        parts = (evar_grid, zero_mask, bitstride)
        self._axis_cache[a] = parts
        return parts

    def eval(self, p: Pattern) -> int:
        hit = self._memo.get(p)
        if hit is not None:
            return hit
        out = self._eval(p)
        self._memo[p] = out
        return out

    def _eval(self, p: Pattern) -> int:
        match p:
            case Bot():
                return 0
            case EVar(name):
                return self._axis_parts(self.axis[name])[0]
            case Sym(name):
                return self.model.symbol(name) * self.comb
            case Not(sub):
                return self.mask_all ^ self.eval(sub)
            case And(a, b):
                return self.eval(a) & self.eval(b)
            case Or(a, b):
                return self.eval(a) | self.eval(b)
            case Implies(a, b):
                return (self.mask_all ^ self.eval(a)) | self.eval(b)
            case App(a, b):
                return self._app(self.eval(a), self.eval(b))
            case Exists(v, body):
                return self._reduce(self.eval(body), self.axis[v], False)
            case Forall(v, body):
                return self._reduce(self.eval(body), self.axis[v], True)
        raise MatchlogError(f"cannot evaluate {p!r}")

    def _app(self, A: int, B: int) -> int:
        comb = self.comb
        app = self.model.app
        out = 0
        for i in range(self.n):
            Ai = (A >> i) & comb
            if not Ai:
                continue
            row = app[i]
            for j in range(self.n):
                Bj = (B >> j) & comb
                if not Bj:
                    continue
                sel = Ai & Bj
                if sel:
                    out |= sel * row[j]
        return out

    def _reduce(self, G: int, a: int, conj: bool) -> int:
        _, zero_mask, bitstride = self._axis_parts(a)
        acc = G
        if conj:
            for v in range(1, self.n):
                acc &= G >> (v * bitstride)
        else:
            for v in range(1, self.n):
                acc |= G >> (v * bitstride)
        acc &= zero_mask
        out = 0
        for v in range(self.n):
            out |= acc << (v * bitstride)
        return out


def valid(model: Model, p: Pattern, *, engine: str = "auto") -> bool:
    """True iff p evaluates to the full carrier under every valuation."""
    if engine not in ("auto", "grid", "reference"):
        raise MatchlogError(f"unknown engine {engine!r}")
    names = _all_names(p)
    if engine == "grid" or (engine == "auto"
                            and len(names) <= _GRID_AXIS_LIMIT):
        g = _Grid(model, names)
        return g.eval(p) == g.mask_all
    full = model.full
    for v in valuations(model, sorted(p.fve)):
        if eval_pattern(model, v, p) != full:
            return False
    return True


def consequence(models: Iterable[Model], hypotheses: Sequence[Pattern],
                conclusion: Pattern) -> bool:
    """Global consequence over a finite model set.

    In every supplied model where each hypothesis is valid, the
    conclusion must be valid too.
    """
    for m in models:
        if all(valid(m, h) for h in hypotheses) and not valid(m, conclusion):
            return False
    return True


def random_model(size: int, seed, definedness: bool = True,
                 symbols: Sequence[str] = ()) -> Model:
    """Seed-deterministic model with uniform app entries.

    When definedness is set, app rows reachable from def_interp are
    patched so def applied to each singleton covers the carrier. Symbol
    interpretations are seeded per name, so requesting extra symbols
    never perturbs the app table.
    """
    if size < 1:
        raise MatchlogError("carrier must be nonempty")
    if size > 64:
        raise MatchlogError("carrier size capped at 64")
    rng = random.Random(f"model|{seed}|{size}|{int(bool(definedness))}")
    nsub = 1 << size
    app = [[rng.randrange(nsub) for _ in range(size)] for _ in range(size)]
    def_interp = rng.randrange(1, nsub)
    if definedness:
        anchor = (def_interp & -def_interp).bit_length() - 1
        full = nsub - 1
        for m in range(size):
            u = 0
            for d in _bits(def_interp):
                u |= app[d][m]
            app[anchor][m] |= full ^ u
    sym_interp = {}
    for name in symbols:
        srng = random.Random(f"sym|{seed}|{size}|{name}")
        sym_interp[name] = srng.randrange(nsub)
    return Model(size, tuple(tuple(r) for r in app), def_interp, sym_interp)


def _sym_names(p: Pattern) -> set[str]:
    out = set()

    def walk(q: Pattern):
        if isinstance(q, Sym):
            if q.name != DEF_SYMBOL:
                out.add(q.name)
        else:
            for c in q.children():
                walk(c)

    walk(p)
    return out


def soundness_suite(system, n_models: int = 100, max_size: int = 3,
                    seed: int = 0, include_catalog: bool = True,
                    extra_statements: Mapping[str, Pattern] | None = None,
                    keep_records: bool = False) -> dict:
    """Check every schema and theorem of a system over sampled models.

    Axiom schemas and catalog theorems are canonically instantiated and
    must be valid in every sampled definedness model; rules are checked
    as validity preservation on their canonical premise instances. The
    report lists (label, model seed, verdict) failures and counts.
    """
    from .systems import canonical_assignment, instantiate

    statements: dict[str, Pattern] = {}
    for ax in system.axioms:
        asg = canonical_assignment(ax.pattern_slots, ax.var_slots)
        statements[ax.id] = instantiate(ax.template, asg)
    rule_insts = []
    for r in system.rules:
        asg = canonical_assignment(r.pattern_slots, r.var_slots)
        prem = tuple(instantiate(t, asg) for t in r.premises)
        rule_insts.append((r.id, prem, instantiate(r.conclusion, asg)))
    if include_catalog:
        from .tactics import canonical_statements
        for label, stmt in canonical_statements(system.id).items():
            statements[label] = stmt
    if extra_statements:
        statements.update(extra_statements)

    symbols = set()
    for stmt in statements.values():
        symbols |= _sym_names(stmt)
    for _, prem, concl in rule_insts:
        for q in (*prem, concl):
            symbols |= _sym_names(q)
    symbols = sorted(symbols)

    failures: list[tuple[str, int, str]] = []
    records: list[tuple[str, int, str]] = []
    checked = 0
    for i in range(n_models):
        model_seed = seed + i
        model = random_model(1 + i % max_size, model_seed, definedness=True,
                             symbols=symbols)
        for label, stmt in statements.items():
            ok = valid(model, stmt)
            checked += 1
            if keep_records:
                records.append((label, model_seed, "ok" if ok else "fail"))
            if not ok:
                failures.append((label, model_seed, "fail"))
        for rid, prem, concl in rule_insts:
            if all(valid(model, q) for q in prem) and not valid(model, concl):
                failures.append((f"rule:{rid}", model_seed, "fail"))
            checked += 1

    report = {
        "system": system.id,
        "models": n_models,
        "statements": sorted(statements),
        "rules": sorted(r for r, _, _ in rule_insts),
        "checked": checked,
        "failures": failures,
    }
    if keep_records:
        report["records"] = records
    return report

"""The derived-rule catalog: registry, manifest, proving entry points.

Every entry is registered by a decorator that declares its label, home
system, statement, and (for derived rules) premise shapes; the decorated
function builds the proof on a ProofBuilder by citing axioms, rules, and
earlier entries. apply_entry re-checks the built conclusion against the
declared statement on every use, so a transcription slip in one entry
surfaces at that entry, not three citations later.

The committed manifest file is the single source of truth for what the
catalog must contain; verify_manifest compares it against the registry
record by record.
"""

from __future__ import annotations

import importlib
import inspect
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from ..errors import MatchlogError, SideConditionError
from ..kernel import Proof, check_proof
from ..syntax import Pattern, Sym
from ..systems import ProofSystem, system
from .builder import ProofBuilder

_PATTERN_PARAMS = {"phi", "psi", "chi", "gamma", "theta", "delta",
                   "phip", "psip", "chip"}
_VAR_PARAMS = {"x", "y", "z", "w"}

# modules that register entries, imported on first catalog use
_ENTRY_MODULES = (
    "prop", "prop_rules", "order", "fo_gc", "app_gc", "p_basis",
    "mgc_fo", "mgc_def", "mgc_eq", "mgc_subst", "mgc_membership",
)

REGISTRY: dict[str, "CatalogEntry"] = {}
_loaded = False


def _ensure_loaded() -> None:
    global _loaded
    if _loaded:
        return
    _loaded = True
    for mod in _ENTRY_MODULES:
        importlib.import_module(f".{mod}", __package__)


@dataclass
class CatalogEntry:
    label: str
    system: str
    kind: str                                 # "theorem" | "derived-rule"
    pattern_params: tuple
    var_params: tuple
    params: tuple                             # declaration order
    stmt: Callable[..., Pattern]
    builder: Callable
    prem: Callable | None = None
    n_prem: int = 0
    conds: tuple = ()                         # (description, predicate)
    extensions: frozenset = frozenset()

    @property
    def arity(self) -> str:
        return "{};{};{}".format(",".join(self.pattern_params),
                                 ",".join(self.var_params), self.n_prem)

    def side_condition_text(self) -> str:
        parts = [f"ext:{e}" for e in sorted(self.extensions)]
        parts += [d for d, _ in self.conds]
        return " & ".join(parts) if parts else "-"

    def canonical_params(self) -> tuple:
        out = []
        npat = nvar = 0
        for name in self.params:
            if name in _PATTERN_PARAMS:
                out.append(Sym(f"p{npat}"))
                npat += 1
            else:
                out.append(f"v{nvar}")
                nvar += 1
        return tuple(out)

    def home_system(self) -> ProofSystem:
        s = system(self.system)
        if self.extensions:
            s = s.with_extensions(
                singletons="singletons" in self.extensions,
                existence="existence" in self.extensions)
        return s


def _classify(fn: Callable, label: str) -> tuple:
    names = list(inspect.signature(fn).parameters)
    pats, vars_ = [], []
    for n in names:
        if n in _PATTERN_PARAMS:
            pats.append(n)
        elif n in _VAR_PARAMS:
            vars_.append(n)
        else:
            raise MatchlogError(f"{label}: unknown parameter {n!r}")
    return tuple(pats), tuple(vars_), tuple(names)


def _register(entry: CatalogEntry) -> None:
    if entry.label in REGISTRY:
        raise MatchlogError(f"duplicate catalog label {entry.label!r}")
    REGISTRY[entry.label] = entry


def theorem(label: str, system_id: str, *, stmt: Callable,
            conds: Sequence = (), extensions: Sequence[str] = ()):
    def deco(fn):
        pats, vars_, params = _classify(stmt, label)
        _register(CatalogEntry(
            label, system_id, "theorem", pats, vars_, params, stmt, fn,
            conds=tuple(conds), extensions=frozenset(extensions)))
        return fn
    return deco


def derived(label: str, system_id: str, *, prem: Callable, stmt: Callable,
            conds: Sequence = (), extensions: Sequence[str] = ()):
    def deco(fn):
        pats, vars_, params = _classify(stmt, label)
        e = CatalogEntry(
            label, system_id, "derived-rule", pats, vars_, params, stmt,
            fn, prem=prem, conds=tuple(conds),
            extensions=frozenset(extensions))
        e.n_prem = len(prem(*e.canonical_params()))
        _register(e)
        return fn
    return deco


def entry(label: str) -> CatalogEntry:
    _ensure_loaded()
    try:
        return REGISTRY[label]
    except KeyError:
        raise MatchlogError(f"unknown catalog label {label!r}") from None


def labels(system_id: str | None = None) -> list[str]:
    _ensure_loaded()
    if system_id is None:
        return sorted(REGISTRY)
    return sorted(l for l, e in REGISTRY.items() if e.system == system_id)


def apply_entry(b: ProofBuilder, label: str, *params,
                prem: tuple = ()) -> int:
    """Run an entry's builder on b; returns the concluding step index."""
    e = entry(label)
    b.cited.add(label)
    if not e.extensions <= b.system.extensions:
        missing = ", ".join(sorted(e.extensions - b.system.extensions))
        raise SideConditionError(
            "extension-required",
            f"{label} needs extension(s): {missing}")
    for desc, pred in e.conds:
        if not pred(*params):
            raise SideConditionError(
                "entry-side-condition", f"{label}: needs {desc}")
    if e.kind == "derived-rule":
        shapes = e.prem(*params)
        if len(prem) != len(shapes):
            raise MatchlogError(
                f"{label} takes {len(shapes)} premises, got {len(prem)}")
        for want, k in zip(shapes, prem):
            got = b.conclusion(k)
            if got is not want:
                raise MatchlogError(
                    f"{label}: premise should be {want}, step proves {got}")
        idx = e.builder(b, *params, prem=tuple(prem))
    else:
        if prem:
            raise MatchlogError(f"{label} is a theorem, takes no premises")
        idx = e.builder(b, *params)
    want = e.stmt(*params)
    got = b.conclusion(idx)
    if got is not want:
        raise MatchlogError(
            f"{label}: built {got}, declared statement is {want}")
    return idx


def prove(label: str, *params) -> Proof:
    """Emit the checked proof of a theorem entry (empty hypothesis set)."""
    e = entry(label)
    if e.kind != "theorem":
        raise MatchlogError(f"{label} is a derived rule; use derive()")
    s = e.home_system()
    b = ProofBuilder(s)
    idx = apply_entry(b, label, *params)
    steps = tuple(b.steps[:idx + 1])
    check_proof(s, b.hypotheses, steps)
    return Proof(e.system, tuple(b.hypotheses), steps, e.extensions)


def derive(label: str, params: Sequence, premise_proofs: Sequence[Proof],
           ) -> Proof:
    """Splice premise proofs, run a derived-rule entry, re-check."""
    e = entry(label)
    if e.kind != "derived-rule":
        raise MatchlogError(f"{label} is a theorem; use prove()")
    s = e.home_system()
    hyps: list[Pattern] = []
    for pp in premise_proofs:
        for h in pp.hypotheses:
            if h not in hyps:
                hyps.append(h)
    b = ProofBuilder(s, hyps)
    prem = []
    for pp in premise_proofs:
        mapping = b.splice(pp.steps)
        prem.append(mapping[-1])
    idx = apply_entry(b, label, *params, prem=tuple(prem))
    steps = tuple(b.steps[:idx + 1])
    check_proof(s, b.hypotheses, steps)
    return Proof(e.system, tuple(b.hypotheses), steps, e.extensions)


def run_catalog(target: str | ProofSystem) -> dict:
    """Canonically instantiate, build, and kernel-check every entry.

    Entries gated behind extensions run only when the target carries the
    extension; pass system("MGc").with_extensions(...) to include them.
    """
    _ensure_loaded()
    s = system(target) if isinstance(target, str) else target
    checked = 0
    failed: list[tuple[str, str]] = []
    ran: list[str] = []
    cited: set[str] = set()
    t0 = time.perf_counter()
    for label in sorted(REGISTRY):
        e = REGISTRY[label]
        if e.system != s.id or not e.extensions <= s.extensions:
            continue
        ran.append(label)
        checked += 1
        try:
            params = e.canonical_params()
            b = ProofBuilder(s)
            if e.kind == "derived-rule":
                prem = tuple(b.hyp(q) for q in e.prem(*params))
                idx = apply_entry(b, label, *params, prem=prem)
            else:
                idx = apply_entry(b, label, *params)
            j = check_proof(s, b.hypotheses, b.steps[:idx + 1])
            cited |= b.cited
            if j.conclusion is not e.stmt(*params):
                failed.append((label, "conclusion mismatch"))
        except MatchlogError as err:
            failed.append((label, str(err)))
    return {
        "system": s.id,
        "extensions": sorted(s.extensions),
        "checked": checked,
        "failed": failed,
        "labels": ran,
        "cited": sorted(cited),
        "elapsed": time.perf_counter() - t0,
    }


def canonical_statements(system_id: str) -> dict[str, Pattern]:
    """Canonical conclusion of every theorem entry of a system."""
    _ensure_loaded()
    out = {}
    for label in sorted(REGISTRY):
        e = REGISTRY[label]
        if e.system == system_id and e.kind == "theorem":
            out[label] = e.stmt(*e.canonical_params())
    return out


# -- manifest ----------------------------------------------------------------

MANIFEST_PATH = Path(__file__).with_name("manifest.txt")


def registry_records() -> list[tuple[str, str, str, str, str]]:
    _ensure_loaded()
    return [(e.label, e.system, e.kind, e.arity, e.side_condition_text())
            for _, e in sorted(REGISTRY.items())]


def manifest_records(path: Path = MANIFEST_PATH) -> list[tuple]:
    records = []
    for line in path.read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise MatchlogError(f"bad manifest record: {line!r}")
        records.append(tuple(parts))
    return records


def write_manifest(path: Path = MANIFEST_PATH) -> None:
    lines = ["\t".join(r) for r in registry_records()]
    path.write_text("\n".join(lines) + "\n")


def verify_manifest(path: Path = MANIFEST_PATH) -> list[str]:
    """Differences between the committed manifest and the registry."""
    want = manifest_records(path)
    got = registry_records()
    problems = []
    wset, gset = set(want), set(got)
    for r in sorted(wset - gset):
        problems.append(f"manifest only: {r[0]}")
    for r in sorted(gset - wset):
        problems.append(f"registry only: {r[0]}")
    return problems

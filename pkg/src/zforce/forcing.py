"""Color change rules: derived sets, canonical force logs, chains, reversals.

Two rules are supported.  Under "standard", a black vertex u forces its
unique white neighbor.  Under "psd", forcing is evaluated per connected
component of the white subgraph: u forces w when w is u's only white
neighbor inside W_i united with the black set, for the component W_i
containing w.

The derived set is a unique fixpoint independent of force order; the
logged order is made canonical (smallest forcer, then smallest target,
components recomputed after every single force) so logs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import Graph, GraphError, VertexSet, components

RULES = ("standard", "psd")


def _check_rule(rule: str):
    if rule not in RULES:
        raise GraphError(f"unknown rule {rule!r}; expected one of {RULES}")


@dataclass(frozen=True)
class Force:
    """One application of a color change rule: forcer -> forced at `step`."""

    rule: str
    forcer: int
    forced: int
    step: int
    component: VertexSet | None = None  # white component of `forced`, psd only


@dataclass(frozen=True)
class ForceLog:
    initial: VertexSet
    rule: str
    forces: tuple[Force, ...]
    derived: VertexSet

    def is_complete(self) -> bool:
        return self.derived.mask == (1 << self.derived.n) - 1


@dataclass(frozen=True)
class ChainDecomposition:
    """Maximal forcing chains of a complete standard log (partition of V)."""

    chains: tuple[tuple[int, ...], ...]


def derived_set(g: Graph, initial: VertexSet, rule: str = "standard") -> ForceLog:
    """Run the rule to its fixpoint, recording the canonical force list."""
    _check_rule(rule)
    black = initial.mask
    full = (1 << g.n) - 1
    forces = []
    step = 1
    while black != full:
        hit = _first_force(g, black, rule)
        if hit is None:
            break
        u, w, comp = hit
        forces.append(
            Force(
                rule,
                u,
                w,
                step,
                VertexSet(g.n, comp) if rule == "psd" else None,
            )
        )
        black |= 1 << w
        step += 1
    return ForceLog(initial, rule, tuple(forces), VertexSet(g.n, black))


def _first_force(g: Graph, black: int, rule: str):
    """Smallest (forcer, target) valid force, or None at the fixpoint."""
    white = ((1 << g.n) - 1) & ~black
    if rule == "standard":
        m = black
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            t = g.adj[u] & white
            if t and t & (t - 1) == 0:
                return u, t.bit_length() - 1, None
        return None
    comps = components(g, VertexSet(g.n, white))
    best = None
    m = black
    while m:
        u = (m & -m).bit_length() - 1
        m &= m - 1
        for cs in comps:
            t = g.adj[u] & cs.mask
            if t and t & (t - 1) == 0:
                w = t.bit_length() - 1
                if best is None or w < best[1]:
                    best = (u, w, cs.mask)
        if best is not None:
            return best
    return None


def derived_mask(g: Graph, black: int, rule: str = "standard") -> int:
    """Fast fixpoint mask via the kernels (no log)."""
    _check_rule(rule)
    return kernels.closure(g.adj, g.n, black, rule)


def is_forcing_set(g: Graph, s: VertexSet, rule: str = "standard") -> bool:
    return derived_mask(g, s.mask, rule) == (1 << g.n) - 1


def chains(log: ForceLog) -> ChainDecomposition:
    """Maximal forcing chains of a complete standard-rule log."""
    if log.rule != "standard":
        raise GraphError("forcing chains are defined for the standard rule only")
    if not log.is_complete():
        raise GraphError("forcing chains require a complete log (derived = V)")
    succ = {}
    for f in log.forces:
        if f.forcer in succ:
            raise GraphError("corrupt log: a vertex forced twice")
        succ[f.forcer] = f.forced
    out = []
    for z in sorted(log.initial):
        chain = [z]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        out.append(tuple(chain))
    return ChainDecomposition(tuple(out))


def reversal(log: ForceLog) -> VertexSet:
    """Set of last vertices of the maximal chains; same size as the initial set."""
    decomp = chains(log)
    return VertexSet.of(log.initial.n, (c[-1] for c in decomp.chains))


def certificate(log: ForceLog, one_based: bool = True) -> str:
    """Line-oriented text certificate: rule and initial set, then one line
    `step u -> w [component]` per force (component for the psd rule only)."""
    off = 1 if one_based else 0
    lines = [
        f"rule {log.rule}",
        "initial " + " ".join(str(v + off) for v in sorted(log.initial)),
    ]
    for f in log.forces:
        line = f"{f.step} {f.forcer + off} -> {f.forced + off}"
        if f.component is not None:
            line += " [" + " ".join(str(v + off) for v in sorted(f.component)) + "]"
        lines.append(line)
    return "\n".join(lines)

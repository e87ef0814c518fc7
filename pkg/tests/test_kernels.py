"""Compiled and pure kernels agree; closures satisfy the rule definitions.

The oracle here recomputes derived sets with plain Python sets straight
from the two rule definitions, one force at a time, independently of the
batched bitmask kernels.
"""

import random
from itertools import combinations

import pytest

from zforce import Graph
from zforce.kernels import HAVE_COMPILED
from zforce import _kernels_py as kpy

if HAVE_COMPILED:
    from zforce import _kernels as kc


def random_graph(rng, n, p=0.5):
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# --- oracle: one force at a time, straight from the definitions ---


def oracle_closure(g: Graph, black: set, rule: str) -> set:
    black = set(black)
    while True:
        force = _any_valid_force(g, black, rule)
        if force is None:
            return black
        black.add(force)


def _any_valid_force(g: Graph, black, rule):
    whites = set(range(g.n)) - black
    if rule == "standard":
        for u in black:
            wn = [w for w in whites if g.has_edge(u, w)]
            if len(wn) == 1:
                return wn[0]
        return None
    comps = []
    rem = set(whites)
    while rem:
        comp = {min(rem)}
        stack = [min(rem)]
        while stack:
            v = stack.pop()
            for w in rem:
                if g.has_edge(v, w) and w not in comp:
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
        rem -= comp
    for u in black:
        for comp in comps:
            wn = [w for w in comp if g.has_edge(u, w)]
            if len(wn) == 1:
                return wn[0]
    return None


@pytest.mark.parametrize("rule", ["standard", "psd"])
def test_pure_kernel_matches_oracle(rule):
    rng = random.Random(17)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 9), rng.choice([0.2, 0.4, 0.7]))
        black = {v for v in range(g.n) if rng.random() < 0.3}
        mask = sum(1 << v for v in black)
        if rule == "standard":
            got = kpy.closure_standard(g.adj, g.n, mask)
        else:
            got = kpy.closure_psd(g.adj, g.n, mask)
        want = sum(1 << v for v in oracle_closure(g, black, rule))
        assert got == want


@pytest.mark.skipif(not HAVE_COMPILED, reason="extension not built")
class TestCompiledTwin:
    def test_closures_agree(self):
        rng = random.Random(23)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 14), rng.random())
            mask = rng.randrange(1 << g.n)
            assert kc.closure_standard(g.adj, g.n, mask) == \
                kpy.closure_standard(g.adj, g.n, mask)
            assert kc.closure_psd(g.adj, g.n, mask) == \
                kpy.closure_psd(g.adj, g.n, mask)

    def test_search_agrees_including_node_counts(self):
        rng = random.Random(29)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 9), rng.random())
            k = rng.randint(1, g.n)
            for psd in (False, True):
                assert kc.first_forcing_lex(g.adj, g.n, k, psd) == \
                    kpy.first_forcing_lex(g.adj, g.n, k, psd)
                assert kc.all_forcing_lex(g.adj, g.n, k, psd) == \
                    kpy.all_forcing_lex(g.adj, g.n, k, psd)

    def test_chunked_search_agrees(self):
        rng = random.Random(31)
        g = random_graph(rng, 9, 0.4)
        for start in ((0, 1, 2), (2, 4, 8), (0, 5, 6)):
            for count in (1, 7, 50):
                assert kc.first_forcing_lex(g.adj, g.n, 3, False, start, count) \
                    == kpy.first_forcing_lex(g.adj, g.n, 3, False, start, count)

    def test_compiled_rejects_oversized(self):
        with pytest.raises(ValueError):
            kc.closure_standard([0] * 65, 65, 0)


def test_large_orders_use_python_ints():
    # n > 64 falls back to the pure path transparently
    from zforce import family, zero_forcing_number

    g = family("path", [70])
    res = zero_forcing_number(g, "standard", limit=70)
    assert res.value == 1 and res.best.to_list() == [0]


@pytest.mark.skipif(not HAVE_COMPILED, reason="extension not built")
def test_single_word_boundary_order_64():
    from zforce import family

    g = family("path", [64])
    full = (1 << 64) - 1
    assert kc.closure_standard(g.adj, 64, 1 << 63) == full
    assert kc.closure_standard(g.adj, 64, 1 << 63) == \
        kpy.closure_standard(g.adj, 64, 1 << 63)
    c = family("cycle", [64])
    assert kc.closure_psd(c.adj, 64, 0b11) == kpy.closure_psd(c.adj, 64, 0b11) == full


@pytest.mark.parametrize("rule", ["standard", "psd"])
def test_monotonicity(rule):
    rng = random.Random(37)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), 0.35)
        s = rng.randrange(1 << g.n)
        extra = rng.randrange(1 << g.n)
        cs = kpy.closure_psd(g.adj, g.n, s) if rule == "psd" else \
            kpy.closure_standard(g.adj, g.n, s)
        ct = kpy.closure_psd(g.adj, g.n, s | extra) if rule == "psd" else \
            kpy.closure_standard(g.adj, g.n, s | extra)
        assert cs & ~ct == 0


def test_standard_closure_within_psd_closure():
    rng = random.Random(41)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), 0.35)
        s = rng.randrange(1 << g.n)
        assert kpy.closure_standard(g.adj, g.n, s) & \
            ~kpy.closure_psd(g.adj, g.n, s) == 0


def test_monotonicity_and_dominance_on_every_small_graph():
    # every isomorphism class up to order 7, a few nested pairs each
    from zforce.reproduce import _from_networkx
    from networkx.generators.atlas import graph_atlas_g

    rng = random.Random(53)
    for nxg in graph_atlas_g():
        if not 1 <= nxg.number_of_nodes() <= 7:
            continue
        g = _from_networkx(nxg)
        for _ in range(3):
            s = rng.randrange(1 << g.n)
            t = s | rng.randrange(1 << g.n)
            for clo in (kpy.closure_standard, kpy.closure_psd):
                assert clo(g.adj, g.n, s) & ~clo(g.adj, g.n, t) == 0
            assert kpy.closure_standard(g.adj, g.n, s) & \
                ~kpy.closure_psd(g.adj, g.n, s) == 0


@pytest.mark.parametrize("rule", ["standard", "psd"])
def test_fixpoint_soundness(rule):
    rng = random.Random(43)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 10), 0.4)
        s = rng.randrange(1 << g.n)
        derived = kpy.closure_psd(g.adj, g.n, s) if rule == "psd" else \
            kpy.closure_standard(g.adj, g.n, s)
        black = {v for v in range(g.n) if (derived >> v) & 1}
        assert _any_valid_force(g, black, rule) is None

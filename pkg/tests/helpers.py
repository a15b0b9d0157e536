"""Independent brute-force oracles shared by the test modules.

Everything here enumerates exhaustively and knows nothing about the pruned
engines or the linear-system lifting path it is used to check.
"""

from __future__ import annotations

import itertools

import numpy as np

from alphacirc import ChainRing, CodeSpec, generator_matrix, is_self_dual

Z2 = ChainRing(2, 1, 1)


def naive_min_weight(spec: CodeSpec, weight: str = "lee") -> int:
    """Minimum nonzero codeword weight by full message enumeration."""
    mod = spec.ring.size
    G = generator_matrix(spec)
    k, n = G.shape
    v = np.arange(mod)
    table = np.minimum(v, mod - v) if weight == "lee" else (v != 0).astype(int)
    best = None
    for msg in itertools.product(range(mod), repeat=k):
        if not any(msg):
            continue
        word = np.array(msg) @ G % mod
        w = int(table[word].sum())
        if best is None or w < best:
            best = w
    return best


def brute_force_lift_vectors(base: CodeSpec, ring: ChainRing) -> set[tuple]:
    """All self-dual lifts of a base spec, found by trying every vector of
    minimal-ideal perturbations.  Returns {(a, border)} keys."""
    from alphacirc.lifting import section_lift_spec

    spec0 = section_lift_spec(base, ring)
    ideal = [ring.ideal_embed(u) for u in range(ring.p)]
    mod = ring.size
    t = len(spec0.a) + (3 if spec0.border is not None else 0)
    found = set()
    for w in itertools.product(ideal, repeat=t):
        a = tuple((spec0.a[i] + w[i]) % mod for i in range(len(spec0.a)))
        border = None
        if spec0.border is not None:
            border = tuple((spec0.border[i] + w[len(spec0.a) + i]) % mod for i in range(3))
        cand = CodeSpec(base.kind, ring, base.k, spec0.alpha, a, border)
        if is_self_dual(cand):
            found.add((a, border))
    return found


def brute_force_preimages(base: CodeSpec, ring: ChainRing) -> set[tuple]:
    """All self-dual specs over R whose entrywise projection is the base-field
    spec (any preimage digits, not just minimal-ideal shifts)."""
    p, mod = ring.p, ring.size
    step = mod // p
    alpha = ring.alpha if ring.alpha is not None else 1

    def preimages(c):
        return [c + p * j for j in range(step)]

    t = len(base.a) + (3 if base.border is not None else 0)
    flat = list(base.a) + list(base.border or ())
    found = set()
    for choice in itertools.product(range(step), repeat=t):
        digits = [flat[i] + p * choice[i] for i in range(t)]
        a = tuple(digits[: len(base.a)])
        border = tuple(digits[len(base.a) :]) or None
        cand = CodeSpec(base.kind, ring, base.k, alpha, a, border)
        if is_self_dual(cand):
            found.add((a, border))
    return found


def self_dual_double_bases(k: int, p: int = 2, alpha: int = 1) -> list[tuple]:
    """All generating vectors of self-dual double circulant codes over F_p."""
    ring = ChainRing(p, 1, alpha)
    out = []
    for a in itertools.product(range(p), repeat=k):
        if is_self_dual(CodeSpec("double", ring, k, alpha, a)):
            out.append(a)
    return out


def self_dual_bordered_bases(k: int, p: int = 2) -> list[tuple]:
    """All (core, border) pairs of self-dual bordered circulant codes over F_p."""
    ring = ChainRing(p, 1, 1)
    out = []
    for core in itertools.product(range(p), repeat=k - 1):
        for border in itertools.product(range(p), repeat=3):
            if is_self_dual(CodeSpec("bordered", ring, k, 1, core, border)):
                out.append((core, border))
    return out

"""Monomial pairs acting on circulant generating vectors, orbit canonicalization,
and Lyndon-word enumeration.

A monomial matrix is S(sigma) D with S_{ij} = [i == sigma(j)] and D an
invertible diagonal.  Pairs (N, M) act on circulant matrices by
A -> N^{-1} A M; the generators used here (shifts, square-one scalars and
the substitution maps f(x) -> f((alpha x)^s)) all preserve alpha-circulant
structure, and under the restriction to orthogonal matrices they preserve
self-duality as well.  Canonical forms are computed by breadth-first orbit
closure over the generator set, which is tiny at the target sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

import numpy as np

from .chainring import ChainRing, ChainRingError
from .circulant import CircVec, cir, vec_from_matrix


@dataclass(frozen=True)
class MonomialMatrix:
    """S(sigma) D with permutation sigma of {0..k-1} and unit diagonal diag."""

    ring: ChainRing
    sigma: tuple[int, ...]
    diag: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.sigma)
        if sorted(self.sigma) != list(range(k)) or len(self.diag) != k:
            raise ValueError("sigma must be a permutation matching diag in length")
        for d in self.diag:
            if not self.ring.is_unit(d):
                raise ChainRingError(f"diagonal entry {d} is not a unit")

    @property
    def k(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, ring: ChainRing, k: int) -> "MonomialMatrix":
        return cls(ring, tuple(range(k)), (1,) * k)

    def to_dense(self) -> np.ndarray:
        mod = self.ring.size
        out = np.zeros((self.k, self.k), dtype=np.int64)
        for j in range(self.k):
            out[self.sigma[j], j] = self.diag[j] % mod
        return out

    def compose(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Matrix product self @ other."""
        mod = self.ring.size
        sigma = tuple(self.sigma[other.sigma[j]] for j in range(self.k))
        diag = tuple(self.diag[other.sigma[j]] * other.diag[j] % mod for j in range(self.k))
        return MonomialMatrix(self.ring, sigma, diag)

    def inverse(self) -> "MonomialMatrix":
        inv_sigma = [0] * self.k
        for j, i in enumerate(self.sigma):
            inv_sigma[i] = j
        diag = tuple(self.ring.inv(self.diag[inv_sigma[j]]) for j in range(self.k))
        return MonomialMatrix(self.ring, tuple(inv_sigma), diag)

    def is_orthogonal(self) -> bool:
        """M M^t = I_k, equivalent to every diagonal entry squaring to 1."""
        return all(d * d % self.ring.size == 1 for d in self.diag)


@dataclass(frozen=True)
class MonomialPair:
    """An element (N, M) of the group acting by A -> N^{-1} A M."""

    N: MonomialMatrix
    M: MonomialMatrix

    def act_matrix(self, A: np.ndarray) -> np.ndarray:
        mod = self.N.ring.size
        Ninv = self.N.inverse().to_dense()
        return Ninv @ np.asarray(A) @ self.M.to_dense() % mod

    def compose(self, other: "MonomialPair") -> "MonomialPair":
        return MonomialPair(self.N.compose(other.N), self.M.compose(other.M))


def act(pair: MonomialPair, a: CircVec) -> CircVec:
    """Generating vector of N^{-1} cir(a) M.

    Raises if the pair does not match a's dimensions or does not preserve
    alpha-circulant structure (i.e. is not a group element for this alpha).
    """
    if pair.N.k != a.k or pair.N.ring != a.ring:
        raise ValueError("monomial pair does not match the vector's algebra")
    return vec_from_matrix(pair.act_matrix(cir(a)), a.ring, a.alpha)


# --- generators -------------------------------------------------------------


def shift_right(a: CircVec) -> CircVec:
    """Image under (I, T_alpha): multiplication by x."""
    last = a.coeffs[-1] * a.alpha % a.ring.size
    return CircVec(a.ring, a.alpha, (last,) + a.coeffs[:-1])


def shift_left(a: CircVec) -> CircVec:
    """Image under (T_alpha, I): multiplication by alpha^{-1} x^{k-1}."""
    inv_alpha = a.ring.inv(a.alpha)
    first = a.coeffs[0] * inv_alpha % a.ring.size
    return CircVec(a.ring, a.alpha, a.coeffs[1:] + (first,))


def scale(a: CircVec, lam: int) -> CircVec:
    """Image under (I, lam I): scaling by the unit lam."""
    mod = a.ring.size
    return CircVec(a.ring, a.alpha, tuple(c * lam % mod for c in a.coeffs))


def _check_substitution_args(a_or_ring, k: int, alpha: int, s: int, mod: int) -> None:
    if gcd(s, k) != 1 or not 0 <= s < k:
        raise ValueError(f"s = {s} must be in [0, k) and coprime to k = {k}")
    # x -> (alpha x)^s respects x^k = alpha only when alpha^{s(k+1)-1} = 1
    if pow(alpha, s * (k + 1) - 1, mod) != 1:
        raise ValueError(
            f"substitution by s = {s} is not well defined for alpha = {alpha}, k = {k}"
        )


def substitute(a: CircVec, s: int) -> CircVec:
    """Closed form of the conjugation sending f(x) to f((alpha x)^s).

    Uses x^k = alpha, so the a_i term lands at position s*i mod k with an
    extra factor alpha^{s*i + floor(s*i / k)}.
    """
    k, mod = a.k, a.ring.size
    _check_substitution_args(a, k, a.alpha, s, mod)
    out = [0] * k
    for i, ai in enumerate(a.coeffs):
        out[s * i % k] = ai * pow(a.alpha, s * i + s * i // k, mod) % mod
    return CircVec(a.ring, a.alpha, tuple(out))


def s_map_pair(ring: ChainRing, k: int, alpha: int, s: int) -> MonomialPair:
    """The pair (M, M) with M = S(sigma) D realizing f(x) -> f((alpha x)^s).

    sigma(i) = s^{-1} i mod k and D_ii = alpha^{s sigma(i) + floor(s sigma(i) / k)},
    the unique monomial shape (up to a global square-one scalar) solving
    T M = M alpha^s T^s.  Requires alpha^2 = 1, gcd(s, k) = 1 and the
    substitution to be well defined; M is then orthogonal.
    """
    if alpha * alpha % ring.size != 1:
        raise ChainRingError(f"alpha = {alpha} must square to 1")
    _check_substitution_args(ring, k, alpha, s, ring.size)
    s_inv = pow(s, -1, k) if k > 1 else 0
    sigma = tuple(s_inv * i % k for i in range(k))
    diag = tuple(
        pow(alpha, s * sigma[i] + s * sigma[i] // k, ring.size) for i in range(k)
    )
    M = MonomialMatrix(ring, sigma, diag)
    return MonomialPair(M, M)


def type_shift_matrix(ring: ChainRing, k: int, alpha: int, j: int) -> MonomialMatrix:
    """Diagonal matrix diag(1, alpha^j, ..., alpha^{(k-1)j}).

    Conjugation by it turns an alpha^i-circulant into an alpha^{i-kj}-circulant;
    it is orthogonal whenever alpha^2 = 1.
    """
    if not ring.is_unit(alpha):
        raise ChainRingError(f"alpha = {alpha} is not a unit")
    if j < 0:
        raise ValueError("j must be non-negative")
    diag = tuple(pow(alpha, i * j, ring.size) for i in range(k))
    return MonomialMatrix(ring, tuple(range(k)), diag)


def shift_pair_right(ring: ChainRing, k: int, alpha: int) -> MonomialPair:
    from .circulant import t_alpha

    T = _monomial_from_dense(ring, t_alpha(ring, k, alpha))
    return MonomialPair(MonomialMatrix.identity(ring, k), T)


def shift_pair_left(ring: ChainRing, k: int, alpha: int) -> MonomialPair:
    from .circulant import t_alpha

    T = _monomial_from_dense(ring, t_alpha(ring, k, alpha))
    return MonomialPair(T, MonomialMatrix.identity(ring, k))


def scalar_pair(ring: ChainRing, k: int, lam: int) -> MonomialPair:
    I = MonomialMatrix.identity(ring, k)
    return MonomialPair(I, MonomialMatrix(ring, tuple(range(k)), (lam,) * k))


def _monomial_from_dense(ring: ChainRing, A: np.ndarray) -> MonomialMatrix:
    k = A.shape[0]
    sigma = [0] * k
    diag = [0] * k
    for j in range(k):
        col = np.flatnonzero(A[:, j])
        if len(col) != 1:
            raise ValueError("matrix is not monomial")
        sigma[j] = int(col[0])
        diag[j] = int(A[sigma[j], j])
    return MonomialMatrix(ring, tuple(sigma), tuple(diag))


def orbit_generators(
    ring: ChainRing, k: int, alpha: int
) -> list[Callable[[CircVec], CircVec]]:
    """Closed-form generator actions used for orbit closure.

    Restricted to pairs of orthogonal monomial matrices (scalars with
    lambda^2 = 1), so the generated subgroup preserves self-duality.
    """
    gens: list[Callable[[CircVec], CircVec]] = [shift_right, shift_left]
    for lam in ring.square_roots_of_one():
        if lam != 1:
            gens.append(lambda a, lam=lam: scale(a, lam))
    for s in range(1, k):
        if gcd(s, k) == 1 and pow(alpha, s * (k + 1) - 1, ring.size) == 1:
            gens.append(lambda a, s=s: substitute(a, s))
    return gens


def generator_pairs(ring: ChainRing, k: int, alpha: int) -> list[tuple[str, MonomialPair]]:
    """The same generator set as explicit monomial pairs, for oracle checks."""
    pairs = [
        ("shift_right", shift_pair_right(ring, k, alpha)),
        ("shift_left", shift_pair_left(ring, k, alpha)),
    ]
    for lam in ring.square_roots_of_one():
        if lam != 1:
            pairs.append((f"scale_{lam}", scalar_pair(ring, k, lam)))
    for s in range(1, k):
        if gcd(s, k) == 1 and pow(alpha, s * (k + 1) - 1, ring.size) == 1:
            pairs.append((f"s_map_{s}", s_map_pair(ring, k, alpha, s)))
    return pairs


def orbit(a: CircVec, gens: list[Callable[[CircVec], CircVec]] | None = None) -> set[tuple[int, ...]]:
    """Breadth-first closure of a under the generator actions."""
    if gens is None:
        gens = orbit_generators(a.ring, a.k, a.alpha)
    seen = {a.coeffs}
    frontier = [a]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = g(v)
                if w.coeffs not in seen:
                    seen.add(w.coeffs)
                    nxt.append(w)
        frontier = nxt
    return seen


def canonical_form(a: CircVec) -> CircVec:
    """Lexicographically least vector in the orbit of a (index 0 most significant)."""
    if a.alpha * a.alpha % a.ring.size != 1:
        raise ChainRingError("canonical forms require alpha^2 = 1")
    return CircVec(a.ring, a.alpha, min(orbit(a)))


def canonical_form_bordered(
    a: CircVec, border: tuple[int, int, int]
) -> tuple[tuple[int, ...], tuple[int, int, int]]:
    """Canonical (core, border) pair for bordered specs.

    Only border-preserving generators act: core shifts, substitution maps
    whose diagonal part is scalar, and simultaneous scaling of core and
    border by a square-one unit.
    """
    ring, k, mod = a.ring, a.k, a.ring.size
    if a.alpha * a.alpha % mod != 1:
        raise ChainRingError("canonical forms require alpha^2 = 1")
    gens: list[Callable[[tuple], tuple]] = [
        lambda st: (shift_right(CircVec(ring, a.alpha, st[0])).coeffs, st[1]),
        lambda st: (shift_left(CircVec(ring, a.alpha, st[0])).coeffs, st[1]),
    ]
    for s in range(1, max(k, 2)):
        if gcd(s, k) != 1 or pow(a.alpha, s * (k + 1) - 1, mod) != 1:
            continue
        if len(set(s_map_pair(ring, k, a.alpha, s).M.diag)) == 1:
            # scalar diagonal part only, so the border vectors survive
            gens.append(
                lambda st, s=s: (substitute(CircVec(ring, a.alpha, st[0]), s).coeffs, st[1])
            )
    for lam in ring.square_roots_of_one():
        if lam != 1:
            gens.append(
                lambda st, lam=lam: (
                    tuple(c * lam % mod for c in st[0]),
                    tuple(b * lam % mod for b in st[1]),
                )
            )
    start = (a.coeffs, tuple(border))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for st in frontier:
            for g in gens:
                w = g(st)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    best = min(seen, key=lambda st: st[0] + st[1])
    return best[0], best[1]


def lyndon_words(k: int, q: int) -> Iterator[tuple[int, ...]]:
    """Aperiodic necklace representatives of length k over {0..q-1}, in lex
    order, followed by the constant words (which also generate circulants).

    Uses Duval's iteration; for k = 1 the single letters already cover the
    constants.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    w = [0]
    while w:
        if len(w) == k:
            yield tuple(w)
        w = (w * (k // len(w) + 1))[:k]
        while w and w[-1] == q - 1:
            w.pop()
        if not w:
            break
        w[-1] += 1
    if k > 1:
        for c in range(q):
            yield (c,) * k

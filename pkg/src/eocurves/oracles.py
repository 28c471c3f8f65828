"""Independent brute-force oracles used to pin expected values in tests.

Everything here deliberately avoids the production code paths: one-vertex
maps are enumerated as raw pairings, Hurwitz numbers are counted from
transposition factorizations in the symmetric group, and orbifold Euler
characteristics come from Bernoulli numbers plus the puncture recursion.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterable, Sequence

Q = Fraction


# ---------------------------------------------------------------------------
# one-vertex maps by explicit pairings
# ---------------------------------------------------------------------------

def one_vertex_map_count(g: int, degree: int) -> int:
    """Arrowed one-vertex maps of genus g: pairings of the half-edges.

    Pairings of the cyclically ordered half-edges are in bijection with
    arrowed maps; the genus of a gluing comes from counting faces as the
    cycles of (rotation o involution).
    """
    if degree % 2 or degree <= 0:
        return 0
    m = degree // 2
    half_edges = list(range(degree))
    count = 0
    for pairing in _pairings(half_edges):
        eps = {}
        for a, b in pairing:
            eps[a] = b
            eps[b] = a
        faces = _cycle_count(lambda h: (eps[h] + 1) % degree, degree)
        genus2 = 2 - (1 - m + faces)
        if genus2 == 2 * g:
            count += 1
    return count


def _pairings(items: list[int]) -> Iterable[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for sub in _pairings(rest):
            yield [(first, items[i])] + sub


def _cycle_count(step, size: int) -> int:
    seen = [False] * size
    cycles = 0
    for start in range(size):
        if seen[start]:
            continue
        cycles += 1
        h = start
        while not seen[h]:
            seen[h] = True
            h = step(h)
    return cycles


def two_vertex_single_edge_count() -> int:
    """The (0,2,(1,1)) case by hand: one edge joining two labeled vertices."""
    return 1


# ---------------------------------------------------------------------------
# Hurwitz numbers by monodromy factorizations
# ---------------------------------------------------------------------------

def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def _cycle_type(p: tuple[int, ...]) -> tuple[int, ...]:
    n = len(p)
    seen = [False] * n
    lens = []
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        h = s
        while not seen[h]:
            seen[h] = True
            h = p[h]
            length += 1
        lens.append(length)
    return tuple(sorted(lens, reverse=True))


def _transitive(gens: Sequence[tuple[int, ...]], d: int) -> bool:
    parent = list(range(d))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for gperm in gens:
        for i in range(d):
            ra, rb = find(i), find(gperm[i])
            if ra != rb:
                parent[ra] = rb
    return len({find(i) for i in range(d)}) == 1


def hurwitz_by_factorizations(g: int, mu: Sequence[int]) -> Fraction:
    """Simple Hurwitz number from transposition factorizations (small d only).

    Counts pairs (sigma, tau_1..tau_r) with sigma of cycle type mu,
    tau_r...tau_1 sigma = id and transitive monodromy; divides by d! and
    converts from the pole-unlabeled normalization.
    """
    mu = tuple(sorted(mu, reverse=True))
    d = sum(mu)
    n = len(mu)
    r = 2 * g - 2 + n + d
    if r < 0:
        return Q(0)
    transpositions = []
    for i, j in combinations(range(d), 2):
        p = list(range(d))
        p[i], p[j] = j, i
        transpositions.append(tuple(p))
    total = 0
    for sigma in permutations(range(d)):
        if _cycle_type(sigma) != mu:
            continue
        for taus in product(transpositions, repeat=r):
            acc = sigma
            for tau in taus:
                acc = _compose(tau, acc)
            if acc != tuple(range(d)):
                continue
            if _transitive((sigma,) + taus, d):
                total += 1
    h_unlabeled = Q(total, factorial(d))
    aut = 1
    for v in set(mu):
        aut *= factorial(mu.count(v))
    return h_unlabeled * Q(aut, factorial(r))


def labeled_hurwitz_by_factorizations(g: int, mu: Sequence[int]) -> Fraction:
    """The pole-unlabeled, branch-point-labeled normalization directly."""
    mu = tuple(sorted(mu, reverse=True))
    r = 2 * g - 2 + len(mu) + sum(mu)
    aut = 1
    for v in set(mu):
        aut *= factorial(mu.count(v))
    return hurwitz_by_factorizations(g, mu) * Q(factorial(r), aut)


# ---------------------------------------------------------------------------
# orbifold Euler characteristics of moduli of pointed curves
# ---------------------------------------------------------------------------

def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (B_1 = -1/2), Akiyama-Tanigawa scheme."""
    if m == 1:
        return Q(-1, 2)
    b: list[Fraction] = []
    for j in range(m + 1):
        b.append(Q(1, j + 1))
        for k in range(j, 0, -1):
            b[k - 1] = k * (b[k - 1] - b[k])
    return b[0]


def moduli_euler_characteristic(g: int, n: int) -> Fraction:
    """Orbifold Euler characteristic of the moduli of genus-g n-pointed curves.

    Seeds: chi(0,3) = 1 and chi(g,1) = -B_{2g}/(2g); removing a point
    multiplies by the Euler characteristic 2 - 2g - n of the punctured
    surface.
    """
    if g == 0:
        if n < 3:
            raise ValueError("unstable")
        chi = Q(1)
        for k in range(3, n):
            chi *= 2 - k
        return chi
    if n < 1:
        raise ValueError("need at least one point")
    chi = -bernoulli(2 * g) / (2 * g)
    for k in range(1, n):
        chi *= 2 - 2 * g - k
    return chi


# ---------------------------------------------------------------------------
# symmetric-group identities
# ---------------------------------------------------------------------------

def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n, parts weakly decreasing."""
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return out


def burnside_dimension_square_sum(n: int) -> int:
    """sum over |mu| = n of (dim mu)^2, counted from raw permutations.

    Computed as |S_n| directly; serves as the oracle for the identity.
    """
    return factorial(n)

"""Shared fixtures and independent brute-force oracles for the test suite.

Everything here is deliberately naive: oracles recompute from definitions so
the library's faster paths are checked against something that cannot share
their bugs.
"""

from __future__ import annotations

from itertools import combinations

from mucat import FinitePoset, chain


# -- fixed posets ------------------------------------------------------------

def boolean_lattice(k: int) -> FinitePoset:
    """Subsets of {1..k} ordered by inclusion; elements are frozensets."""
    elems = [
        frozenset(c) for size in range(k + 1) for c in combinations(range(1, k + 1), size)
    ]
    pairs = [(a, b) for a in elems for b in elems if a <= b]
    return FinitePoset(elems, leq=pairs)


def divisor_poset(n: int) -> FinitePoset:
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    pairs = [(a, b) for a in divisors for b in divisors if b % a == 0]
    return FinitePoset(divisors, leq=pairs)


def fork_poset() -> FinitePoset:
    """Tuning fork: b < c < m with two incomparable prongs u, v above m."""
    return FinitePoset(
        ["b", "c", "m", "u", "v"],
        covers=[("b", "c"), ("c", "m"), ("m", "u"), ("m", "v")],
    )


def antichain(labels) -> FinitePoset:
    return FinitePoset(list(labels), covers=[])


# -- brute-force oracles -----------------------------------------------------

def bf_covers(p: FinitePoset) -> set:
    out = set()
    for x in p.elements:
        for y in p.elements:
            if p.lt(x, y) and not any(p.lt(x, z) and p.lt(z, y) for z in p.elements):
                out.add((x, y))
    return out


def bf_interval_elements(p: FinitePoset, x, y) -> set:
    return {z for z in p.elements if p.leq(x, z) and p.leq(z, y)}


def bf_is_lattice(p: FinitePoset) -> bool:
    for x in p.elements:
        for y in p.elements:
            uppers = [z for z in p.elements if p.leq(x, z) and p.leq(y, z)]
            least = [u for u in uppers if all(p.leq(u, v) for v in uppers)]
            lowers = [z for z in p.elements if p.leq(z, x) and p.leq(z, y)]
            greatest = [u for u in lowers if all(p.leq(v, u) for v in lowers)]
            if len(least) != 1 or len(greatest) != 1:
                return False
    return True


def classical_moebius(n: int) -> int:
    """Number-theoretic Möbius of n via trial-division factorization."""
    if n < 1:
        raise ValueError(n)
    primes = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            primes += 1
        else:
            d += 1
    if n > 1:
        primes += 1
    return -1 if primes % 2 else 1


def are_isomorphic(p: FinitePoset, q: FinitePoset) -> bool:
    """Order-isomorphism by backtracking search (small posets only)."""
    if len(p) != len(q):
        return False

    def profile(poset, x):
        return (len(poset.up_set(x)), len(poset.down_set(x)))

    if sorted(profile(p, x) for x in p.elements) != sorted(profile(q, y) for y in q.elements):
        return False
    px = list(p.elements)

    def extend(k, image):
        if k == len(px):
            return True
        x = px[k]
        for y in q.elements:
            if y in image.values() or profile(p, x) != profile(q, y):
                continue
            if all(
                p.leq(x, px[i]) == q.leq(y, image[px[i]])
                and p.leq(px[i], x) == q.leq(image[px[i]], y)
                for i in range(k)
            ):
                image[x] = y
                if extend(k + 1, image):
                    return True
                del image[x]
        return False

    return extend(0, {})


def is_total_order(p: FinitePoset) -> bool:
    return all(p.leq(x, y) or p.leq(y, x) for x in p.elements for y in p.elements)


CHAIN3 = chain([0, 1, 2])
B2 = boolean_lattice(2)

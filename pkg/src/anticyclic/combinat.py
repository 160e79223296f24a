"""Integer partitions, arithmetic functions and symmetric group characters.

Partitions are plain tuples of positive integers sorted weakly decreasing.
The enumeration order is reverse-lexicographic, (n) first and (1,...,1) last;
all serialized output in the package uses that order.
"""

from functools import lru_cache, reduce
from math import comb, factorial, gcd


def is_partition(lam) -> bool:
    """True if lam is a weakly decreasing tuple of positive integers."""
    return all(isinstance(p, int) and p >= 1 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n in reverse-lexicographic order.

    With max_part set, only partitions whose parts are all <= max_part.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(lam) -> dict:
    """Multiplicity view m_k = number of parts of lam equal to k."""
    m = {}
    for p in lam:
        m[p] = m.get(p, 0) + 1
    return m


def z_of(lam) -> int:
    """Centralizer order z = prod_k k^{m_k} m_k! of a cycle type."""
    z = 1
    for k, m in multiplicities(lam).items():
        z *= k**m * factorial(m)
    return z


def divisors(n: int) -> list:
    """Positive divisors of n in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def moebius(n: int) -> int:
    """Moebius function mu(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def totient(n: int) -> int:
    """Euler totient phi(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b)."""
    return comb(a, b)


def catalan(n: int) -> int:
    """Catalan number c_n = C(2n, n)/(n+1)."""
    return comb(2 * n, n) // (n + 1)


def fixed_point_count(k: int, lam) -> int:
    """Number of fixed points of the k-th power of a permutation of type lam.

    A cycle of length d becomes d fixed points in the k-th power iff d | k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return sum(d * m for d, m in multiplicities(lam).items() if k % d == 0)


@lru_cache(maxsize=None)
def char_value(lam, mu) -> int:
    """Irreducible character chi^lam of S_n on the class mu (|lam| = |mu|).

    Murnaghan-Nakayama recursion on beta-sets: removing a border strip of
    length t from lam means replacing one first-column hook length b by b-t;
    the sign is (-1)^(number of beta entries jumped over).
    """
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    if not mu:
        return 1
    t = mu[0]
    rest = mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        crossed = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_lam = tuple(
            p
            for j, x in enumerate(new_beta)
            if (p := x - (ell - 1 - j)) > 0
        )
        total += (-1) ** crossed * char_value(new_lam, rest)
    return total

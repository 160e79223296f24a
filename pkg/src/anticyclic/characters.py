"""Closed-form character series of the six operads, as truncated SymFunc values.

Two families live here.  The *_ac series encode the S_{n+1}-module structure
on an arity-n space (the anticyclic side: degree n+1 records arity n), and
the *_op series encode the plain S_n-module structure (degree n records
arity n).  The PreLie anticyclic series is a conjectured formula; everything
else is transcribed from closed expressions.
"""

from functools import lru_cache
from math import comb, factorial

from . import combinat
from .combinat import catalan
from .exact import QQ, rat_pow
from .symfunc import SymFunc, exp_series, powersum_log_series


@lru_cache(maxsize=None)
def ch_comm(max_degree: int) -> SymFunc:
    """exp(sum p_k/k) - 1; the degree-n part is the complete homogeneous h_n."""
    return exp_series(powersum_log_series(max_degree)) - SymFunc.one(max_degree)


@lru_cache(maxsize=None)
def ch_perm_ac(max_degree: int) -> SymFunc:
    """(p1 - 1) exp(sum p_k/k) + 1; degree-n part is p1 h_{n-1} - h_n."""
    N = max_degree
    E = exp_series(powersum_log_series(N))
    return (SymFunc.p(1, N) - SymFunc.one(N)) * E + SymFunc.one(N)


@lru_cache(maxsize=None)
def ch_assoc_cyc(max_degree: int) -> SymFunc:
    """sum_{n>=2} (1/n) sum_{d|n} phi(d) p_d^{n/d}."""
    terms = {}
    for n in range(2, max_degree + 1):
        for d in combinat.divisors(n):
            key = (d,) * (n // d)
            terms[key] = terms.get(key, QQ(0)) + QQ(combinat.totient(d), n)
    return SymFunc(terms, max_degree=max_degree)


@lru_cache(maxsize=None)
def ch_dias_ac(max_degree: int) -> SymFunc:
    """sum_{n>=2} (p1^n - (1/n) sum_{d|n} phi(d) p_d^{n/d})."""
    terms = {tuple([1] * n): QQ(1) for n in range(2, max_degree + 1)}
    return SymFunc(terms, max_degree=max_degree) - ch_assoc_cyc(max_degree)


@lru_cache(maxsize=None)
def ch_dend_ac(max_degree: int) -> SymFunc:
    """1 - p1 - sqrt(1-4p1) - sum_{n>=1} (1/2n) sum_{d|n} phi(d) C(2n/d,n/d) p_d^{n/d}."""
    from .symfunc import sqrt_series

    N = max_degree
    root = sqrt_series(SymFunc.one(N) - 4 * SymFunc.p(1, N))
    terms = {}
    for n in range(1, N + 1):
        for d in combinat.divisors(n):
            m = n // d
            key = (d,) * m
            terms[key] = terms.get(key, QQ(0)) + QQ(combinat.totient(d) * comb(2 * m, m), 2 * n)
    tail = SymFunc(terms, max_degree=N)
    return SymFunc.one(N) - SymFunc.p(1, N) - root - tail


@lru_cache(maxsize=None)
def ch_leib_ac(max_degree: int) -> SymFunc:
    """sum_{n>=2} (1/n) sum_{d|n} mu(d) p_d^{n/d}; the Lie-module series."""
    terms = {}
    for n in range(2, max_degree + 1):
        for d in combinat.divisors(n):
            key = (d,) * (n // d)
            terms[key] = terms.get(key, QQ(0)) + QQ(combinat.moebius(d), n)
    return SymFunc(terms, max_degree=max_degree)


@lru_cache(maxsize=None)
def ch_zinb_ac(max_degree: int) -> SymFunc:
    """Same as the Leib series with an extra (-1)^{n/d} twist on each term."""
    terms = {}
    for n in range(2, max_degree + 1):
        for d in combinat.divisors(n):
            m = n // d
            key = (d,) * m
            terms[key] = terms.get(key, QQ(0)) + QQ(combinat.moebius(d) * (-1) ** m, n)
    return SymFunc(terms, max_degree=max_degree)


@lru_cache(maxsize=None)
def ch_prelie_conj(max_degree: int) -> SymFunc:
    """Conjectured S_{n+1}-character series of the PreLie spaces.

    Sum over partitions lam with at least one part and m_1(lam) != 1 of

        (m_1-1)^(m_1-2) * prod_{k>=2} ((f_k-1)^{m_k} - k m_k (f_k-1)^{m_k-1})
        * p_lam / z_lam

    with f_k the fixed-point count of the k-th power.  Conventions for the
    boundary cases: empty product = 1, 0^0 = 1, and (-1)^(-2) = 1 (the
    m_1 = 0 case is an exact rational power with negative exponent).
    """
    terms = {}
    for n in range(1, max_degree + 1):
        for lam in combinat.partitions(n):
            mult = combinat.multiplicities(lam)
            m1 = mult.get(1, 0)
            if m1 == 1:
                continue
            if m1 == 0:
                coeff = rat_pow(-1, -2)
            else:
                coeff = rat_pow(m1 - 1, m1 - 2)
            for k, mk in mult.items():
                if k == 1:
                    continue
                fk = combinat.fixed_point_count(k, lam)
                base = fk - 1
                coeff = coeff * (rat_pow(base, mk) - k * mk * rat_pow(base, mk - 1))
            if coeff != 0:
                terms[lam] = coeff / combinat.z_of(lam)
    return SymFunc(terms, max_degree=max_degree)


@lru_cache(maxsize=None)
def ch_ops_plain(name: str, max_degree: int) -> SymFunc:
    """Plain S_n-character series for dias, dend, perm, leib, zinb.

    dias(n) is n copies of the regular representation (n * p1^n), dend(n) is
    c_n copies (c_n * p1^n), perm(n) is the permutation module (p1 h_{n-1}),
    and leib(n), zinb(n) are regular (p1^n).
    """
    N = max_degree
    ones = lambda n: tuple([1] * n)
    if name == "dias":
        return SymFunc({ones(n): n for n in range(1, N + 1)}, max_degree=N)
    if name == "dend":
        return SymFunc({ones(n): catalan(n) for n in range(1, N + 1)}, max_degree=N)
    if name in ("leib", "zinb"):
        return SymFunc({ones(n): 1 for n in range(1, N + 1)}, max_degree=N)
    if name == "perm":
        E = exp_series(powersum_log_series(N))
        return SymFunc.p(1, N) * E
    raise ValueError(f"unknown plain operad series: {name}")


@lru_cache(maxsize=None)
def ch_prelie_op(max_degree: int) -> SymFunc:
    """Plain PreLie series, from plethystic inversion of the Perm series.

    ch(perm) o suspension(ch(prelie)) = p1, so the series is recovered as
    the suspension of the plethystic inverse; its degree-n part has
    dimension n^{n-1} (rooted trees).
    """
    return ch_ops_plain("perm", max_degree).plethystic_inverse().suspension()


#: CLI-addressable names for every series.
SERIES = {
    "COMM": ch_comm,
    "ASSOC_CYC": ch_assoc_cyc,
    "PERM_AC": ch_perm_ac,
    "DIAS_AC": ch_dias_ac,
    "DEND_AC": ch_dend_ac,
    "LEIB_AC": ch_leib_ac,
    "ZINB_AC": ch_zinb_ac,
    "PRELIE_CONJ": ch_prelie_conj,
    "PRELIE_OP": ch_prelie_op,
    "DIAS_OP": lambda N: ch_ops_plain("dias", N),
    "DEND_OP": lambda N: ch_ops_plain("dend", N),
    "PERM_OP": lambda N: ch_ops_plain("perm", N),
    "LEIB_OP": lambda N: ch_ops_plain("leib", N),
    "ZINB_OP": lambda N: ch_ops_plain("zinb", N),
}


def series_by_name(name: str, max_degree: int) -> SymFunc:
    try:
        builder = SERIES[name.upper()]
    except KeyError:
        raise ValueError(f"unknown series name: {name!r}") from None
    return builder(max_degree)


def expected_dimension(name: str, n: int) -> int:
    """Textbook dimension of the arity-n space of the named operad."""
    name = name.lower()
    if name == "dias":
        return n
    if name == "dend":
        return catalan(n)
    if name == "perm":
        return n
    if name in ("leib", "zinb"):
        return factorial(n)
    if name == "prelie":
        return n ** (n - 1)
    raise ValueError(f"unknown operad: {name!r}")

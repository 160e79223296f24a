"""Graded symmetric functions over exact rationals in the power-sum basis.

A SymFunc is a finite map {partition: rational} together with a degree bound.
Terms above the bound are unknown rather than zero: binary operations truncate
to the smaller bound of their operands and never silently extend it.  The
constant term is stored under the empty partition ().

Instances are immutable and safe to share.
"""

from . import combinat
from .exact import QQ, parse_rat, rat_str

_ZERO = QQ(0)


def _merge(ka, kb):
    return tuple(sorted(ka + kb, reverse=True))


def _mul_terms(A: dict, B: dict, bound: int) -> dict:
    """Product of two term maps truncated at total degree <= bound."""
    if len(A) > len(B):
        A, B = B, A
    by_deg = {}
    for kb, cb in B.items():
        by_deg.setdefault(sum(kb), []).append((kb, cb))
    out = {}
    for ka, ca in A.items():
        limit = bound - sum(ka)
        if limit < 0:
            continue
        for db, items in by_deg.items():
            if db > limit:
                continue
            for kb, cb in items:
                key = _merge(ka, kb)
                c = out.get(key)
                out[key] = ca * cb if c is None else c + ca * cb
    return {k: c for k, c in out.items() if c != 0}


class SymFunc:
    """Truncated symmetric function in the power sums p_1, p_2, ..."""

    __slots__ = ("max_degree", "_terms", "_hash")

    def __init__(self, terms=None, *, max_degree: int):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        cleaned = {}
        if terms:
            for key, c in terms.items():
                key = tuple(key)
                if not combinat.is_partition(key):
                    raise ValueError(f"not a partition: {key!r}")
                if sum(key) > max_degree:
                    continue
                c = QQ(c)
                if c != 0:
                    cleaned[key] = c
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "_terms", cleaned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, max_degree: int) -> "SymFunc":
        return cls({}, max_degree=max_degree)

    @classmethod
    def one(cls, max_degree: int) -> "SymFunc":
        return cls({(): 1}, max_degree=max_degree)

    @classmethod
    def p(cls, k: int, max_degree: int) -> "SymFunc":
        """The power sum p_k."""
        if k < 1:
            raise ValueError("k must be positive")
        return cls({(k,): 1}, max_degree=max_degree)

    # -- basic accessors ---------------------------------------------------

    def coefficient(self, lam):
        return self._terms.get(tuple(lam), _ZERO)

    def items(self):
        """Terms sorted by (degree, reverse-lexicographic partition order)."""
        return sorted(
            self._terms.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0]))
        )

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self):
        return min((sum(k) for k in self._terms), default=None)

    def homogeneous_part(self, d: int) -> "SymFunc":
        if d > self.max_degree:
            raise ValueError("degree beyond the truncation bound")
        return SymFunc(
            {k: c for k, c in self._terms.items() if sum(k) == d},
            max_degree=self.max_degree,
        )

    def degrees(self):
        return sorted({sum(k) for k in self._terms})

    def truncate(self, bound: int) -> "SymFunc":
        if bound > self.max_degree:
            raise ValueError("truncate cannot extend the bound; use _retagged")
        return SymFunc(self._terms, max_degree=bound)

    def _retagged(self, bound: int) -> "SymFunc":
        """Re-tag with a larger bound.  Caller asserts the content is complete."""
        return SymFunc(self._terms, max_degree=bound)

    # -- ring structure ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.max_degree == other.max_degree and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.max_degree, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        bound = min(self.max_degree, other.max_degree)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, _ZERO) + c
        return SymFunc(out, max_degree=bound)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymFunc({k: -c for k, c in self._terms.items()}, max_degree=self.max_degree)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            bound = min(self.max_degree, other.max_degree)
            return SymFunc(_mul_terms(self._terms, other._terms, bound), max_degree=bound)
        c = QQ(other)
        return SymFunc({k: c * v for k, v in self._terms.items()}, max_degree=self.max_degree)

    def __rmul__(self, other):
        return self.__mul__(other)

    def same_terms(self, other, through: int | None = None) -> bool:
        """Compare coefficients, optionally only up to total degree `through`."""
        if through is None:
            through = min(self.max_degree, other.max_degree)
        a = {k: c for k, c in self._terms.items() if sum(k) <= through}
        b = {k: c for k, c in other._terms.items() if sum(k) <= through}
        return a == b

    # -- the operators of the calculus --------------------------------------

    def suspension(self) -> "SymFunc":
        """F -> -F(-p1, -p2, ...); an involution."""
        return SymFunc(
            {k: (c if len(k) % 2 else -c) for k, c in self._terms.items()},
            max_degree=self.max_degree,
        )

    def d_p1(self) -> "SymFunc":
        """Formal partial derivative with respect to p1; degree drops by one."""
        out = {}
        for k, c in self._terms.items():
            m1 = 0
            for p in reversed(k):
                if p != 1:
                    break
                m1 += 1
            if m1:
                out[k[:-1]] = out.get(k[:-1], _ZERO) + m1 * c
        return SymFunc(out, max_degree=max(self.max_degree - 1, 0))

    def reflection_tensor(self) -> "SymFunc":
        """Multiply the class-mu coefficient by (m_1(mu) - 1).

        At the trace level this tensors an S_m-module with the reflection
        representation (fixed points minus one); as an operator it is
        p1*d/dp1 - Id acting degree by degree.
        """
        out = {}
        for k, c in self._terms.items():
            m1 = sum(1 for p in k if p == 1)
            v = (m1 - 1) * c
            if v != 0:
                out[k] = v
        return SymFunc(out, max_degree=self.max_degree)

    def kronecker(self, other) -> "SymFunc":
        """Internal (Kronecker) product: p_lam * p_mu = delta z_lam p_lam."""
        bound = min(self.max_degree, other.max_degree)
        out = {}
        small, big = self._terms, other._terms
        if len(small) > len(big):
            small, big = big, small
        for k, c in small.items():
            c2 = big.get(k)
            if c2 is not None:
                out[k] = c * c2 * combinat.z_of(k)
        return SymFunc(out, max_degree=bound)

    def plethysm(self, g: "SymFunc") -> "SymFunc":
        """f o g; substitution p_k -> g(p_j -> p_jk), an algebra morphism in f.

        g must have zero constant term.
        """
        if g.coefficient(()) != 0:
            raise ValueError("plethysm requires zero constant term in g")
        bound = min(self.max_degree, g.max_degree)
        pk_cache = {}

        def pk_of(k):
            t = pk_cache.get(k)
            if t is None:
                t = {
                    tuple(k * part for part in key): c
                    for key, c in g._terms.items()
                    if k * sum(key) <= bound
                }
                pk_cache[k] = t
            return t

        suffix = {(): {(): QQ(1)}}

        def prod_of(lam):
            t = suffix.get(lam)
            if t is None:
                t = _mul_terms(pk_of(lam[0]), prod_of(lam[1:]), bound)
                suffix[lam] = t
            return t

        out = {}
        for lam, c in self._terms.items():
            if not lam:
                out[()] = out.get((), _ZERO) + c
                continue
            if sum(lam) > bound:
                continue
            for key, cc in prod_of(lam).items():
                v = out.get(key, _ZERO) + c * cc
                out[key] = v
        return SymFunc(out, max_degree=bound)

    def plethystic_inverse(self) -> "SymFunc":
        """g with f o g = g o f = p1 through the bound, degree by degree."""
        if self.coefficient(()) != 0:
            raise ValueError("plethystic inverse requires zero constant term")
        c1 = self.coefficient((1,))
        if c1 == 0:
            raise ValueError("plethystic inverse requires an invertible p1 term")
        bound = self.max_degree
        g = {(1,): 1 / c1}
        for d in range(2, bound + 1):
            h = self.truncate(d).plethysm(SymFunc(g, max_degree=d))
            for key, c in h._terms.items():
                if sum(key) == d:
                    g[key] = -c / c1
        return SymFunc(g, max_degree=bound)

    def legendre(self) -> "SymFunc":
        """Legendre transform: G with f o dG/dp1 + G = p1 dG/dp1.

        Computed as A = plethystic inverse of df/dp1, then G = p1*A - f o A.
        The postcondition dG/dp1 = A is re-verified; failure means a bug.
        """
        if self.coefficient(()) != 0 or self.coefficient((1,)) != 0:
            raise ValueError("Legendre transform needs no degree-0 or degree-1 term")
        if self.coefficient((1, 1)) == 0:
            raise ValueError("Legendre transform needs a nonzero p1^2 coefficient")
        bound = self.max_degree
        a = self.d_p1().plethystic_inverse()._retagged(bound)
        g = SymFunc.p(1, bound) * a - self.plethysm(a)
        if not g.d_p1().same_terms(a, through=bound - 1):
            raise ArithmeticError("Legendre consistency check dG/dp1 = A failed")
        return g

    # -- Schur side ---------------------------------------------------------

    def schur_expansion(self, n: int) -> dict:
        """Nonzero coefficients <f_n, s_lam> of the degree-n part of f."""
        mus = [(mu, self._terms[mu]) for mu in combinat.partitions(n) if mu in self._terms]
        out = {}
        for lam in combinat.partitions(n):
            val = _ZERO
            for mu, c in mus:
                val = val + c * combinat.char_value(lam, mu)
            if val != 0:
                out[lam] = val
        return out

    def is_schur_positive(self, n: int):
        """(ok, witnesses): ok iff every degree-n Schur coefficient is a
        non-negative integer; witnesses lists offending (lam, coeff) pairs."""
        bad = [
            (lam, c)
            for lam, c in sorted(self.schur_expansion(n).items(),
                                 key=lambda kv: tuple(-p for p in kv[0]))
            if c.denominator != 1 or c < 0
        ]
        return (not bad, bad)

    def trace_eval(self, mu):
        """Trace of a permutation of cycle type mu on the encoded module."""
        mu = tuple(mu)
        return self.coefficient(mu) * combinat.z_of(mu)

    # -- io -------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "terms": [[list(k), rat_str(c)] for k, c in self.items()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SymFunc":
        terms = {}
        for key, c in data["terms"]:
            terms[tuple(key)] = parse_rat(c)
        return cls(terms, max_degree=int(data["max_degree"]))

    def pretty(self) -> str:
        """Human-readable p-basis form, e.g. '1/2*p[1,1] - 1/2*p[2]'."""
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            mono = "p[%s]" % ",".join(map(str, k)) if k else "1"
            if c < 0:
                sign, c = " - ", -c
            else:
                sign = " + "
            body = mono if (c == 1 and k) else (rat_str(c) if not k else f"{rat_str(c)}*{mono}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == " - " else "") + first_body
        return text + "".join(s + b for s, b in parts[1:])

    def __repr__(self):
        return f"SymFunc({self.pretty()}, max_degree={self.max_degree})"


# -- truncated power series helpers ------------------------------------------


def powersum_log_series(max_degree: int) -> SymFunc:
    """The series p_1/1 + p_2/2 + ... + p_N/N."""
    return SymFunc({(k,): QQ(1, k) for k in range(1, max_degree + 1)},
                   max_degree=max_degree)


def exp_series(f: SymFunc) -> SymFunc:
    """exp(f) for f with zero constant term, truncated at f's bound."""
    if f.coefficient(()) != 0:
        raise ValueError("exp_series requires zero constant term")
    bound = f.max_degree
    out = SymFunc.one(bound)
    term = SymFunc.one(bound)
    for k in range(1, bound + 1):
        term = term * f * QQ(1, k)
        if term.is_zero():
            break
        out = out + term
    return out


def log1p_series(f: SymFunc) -> SymFunc:
    """log(1 + f) for f with zero constant term."""
    if f.coefficient(()) != 0:
        raise ValueError("log1p_series requires zero constant term")
    bound = f.max_degree
    out = SymFunc.zero(bound)
    power = SymFunc.one(bound)
    for k in range(1, bound + 1):
        power = power * f
        if power.is_zero():
            break
        out = out + power * QQ((-1) ** (k + 1), k)
    return out


def sqrt_series(s: SymFunc) -> SymFunc:
    """Square root of a series with constant term 1, solved degree by degree.

    The result is validated by squaring back; failure means a bug.
    """
    if s.coefficient(()) != 1:
        raise ValueError("sqrt_series requires constant term 1")
    bound = s.max_degree
    t = {(): QQ(1)}
    for d in range(1, bound + 1):
        sq = _mul_terms(t, t, d)
        for key, c in s._terms.items():
            if sum(key) != d:
                continue
            t[key] = t.get(key, _ZERO) + c / 2
        for key, c in sq.items():
            if sum(key) != d or c == 0:
                continue
            t[key] = t.get(key, _ZERO) - c / 2
        t = {k: c for k, c in t.items() if c != 0}
    result = SymFunc(t, max_degree=bound)
    if not (result * result).same_terms(s):
        raise ArithmeticError("sqrt_series consistency check failed")
    return result


def reciprocal_series(s: SymFunc) -> SymFunc:
    """1/s for a series with constant term 1, solved degree by degree."""
    if s.coefficient(()) != 1:
        raise ValueError("reciprocal_series requires constant term 1")
    bound = s.max_degree
    s_by_deg = {}
    for key, c in s._terms.items():
        d = sum(key)
        if d:
            s_by_deg.setdefault(d, {})[key] = c
    r = {(): QQ(1)}
    for d in range(1, bound + 1):
        # r_d = -sum_{i=1..d} s_i * r_{d-i}
        acc = {}
        for i, si in s_by_deg.items():
            if i > d:
                continue
            rpart = {k: c for k, c in r.items() if sum(k) == d - i}
            if not rpart:
                continue
            for key, c in _mul_terms(si, rpart, d).items():
                acc[key] = acc.get(key, _ZERO) + c
        for key, c in acc.items():
            if c != 0:
                r[key] = -c
    result = SymFunc(r, max_degree=bound)
    if not (result * s).same_terms(SymFunc.one(bound)):
        raise ArithmeticError("reciprocal_series consistency check failed")
    return result

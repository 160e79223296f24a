"""The non-symmetric operads Dias and Dend with their cyclic-group actions.

Dias(n) has the closed basis e^n_1..e^n_n with a three-case composition rule.
Dend(n) is realized as the quotient of the free binary two-generator space by
the three dendriform relations: monomials are reduced to a canonical echelon
basis (the rewrite-irreducible monomials, whose count must be the Catalan
number c_n) by confluent rewriting; every reduction step applies one relation
in one context, so reduced vectors are canonical coordinates in the quotient.

The cyclic-group generator tau_n on P(n) is built from the arity-2 generators
by the composition rules

    tau(a o_i b) = tau(a) o_{i-1} b          (2 <= i <= arity a)
    tau(a o_1 b) = -tau(b) o_l tau(a)        (l = arity b)

and is cross-checked against an independent oracle that rewrites the
invariant bilinear form, plus (for Dias) the closed companion-matrix form.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combinat import catalan
from .exact import QQ, rat_str
from .trees import (LEFT, RIGHT, all_trees, canonicalize, graft, is_leaf,
                    leaf_count, leaves, relabel, text)

DIAS, DEND, FREE2 = "dias", "dend", "free2"

#: default arity caps; Dend basis construction cost grows steeply past 8
DEFAULT_MAX_ARITY = {DIAS: 12, DEND: 8}


# ---------------------------------------------------------------------------
# Dias: closed-form basis
# ---------------------------------------------------------------------------


def dias_compose(m: int, n: int, i: int, k: int, l: int) -> int:
    """Index of e^n_m o_i e^l_k in the basis of Dias(n+l-1)."""
    if not (1 <= m <= n and 1 <= k <= l and 1 <= i <= n):
        raise ValueError("index out of range")
    if i == m:
        return m + k - 1
    if i < m:
        return m + l - 1
    return m


def word_to_dias(tree) -> int:
    """Basis index of a Dias-labelled monomial.

    Follow the side that is not crossed out (left at a LEFT node, right at a
    RIGHT node) until one variable survives; with canonical labels its label
    is its position, which is the index m of e^n_m.
    """
    node = tree
    while not is_leaf(node):
        node = node[1] if node[0] == LEFT else node[2]
    return node


def dias_monomial(n: int, m: int):
    """A monomial representative of e^n_m:
    x1 |- ... |- x_m -| ... -| x_n, right-nested."""
    if not 1 <= m <= n:
        raise ValueError("index out of range")
    t = n
    for j in range(n - 1, m - 1, -1):
        t = (LEFT, j, t)
    for j in range(m - 1, 0, -1):
        t = (RIGHT, j, t)
    return t


#: the five oriented Dias relation rewrites as (pattern side, replacement side)
DIAS_RELATIONS = (
    ((LEFT, "A", (RIGHT, "B", "C")), (LEFT, "A", (LEFT, "B", "C"))),
    ((LEFT, "A", (LEFT, "B", "C")), (LEFT, (LEFT, "A", "B"), "C")),
    ((RIGHT, "A", (LEFT, "B", "C")), (LEFT, (RIGHT, "A", "B"), "C")),
    ((RIGHT, "A", (RIGHT, "B", "C")), (RIGHT, (RIGHT, "A", "B"), "C")),
    ((RIGHT, (RIGHT, "A", "B"), "C"), (RIGHT, (LEFT, "A", "B"), "C")),
)


def match_pattern(node, pattern, bindings):
    if isinstance(pattern, str):
        bindings[pattern] = node
        return True
    if is_leaf(node) or node[0] != pattern[0]:
        return False
    return match_pattern(node[1], pattern[1], bindings) and match_pattern(
        node[2], pattern[2], bindings
    )


def build_pattern(pattern, bindings):
    if isinstance(pattern, str):
        return bindings[pattern]
    return (pattern[0], build_pattern(pattern[1], bindings),
            build_pattern(pattern[2], bindings))


def rewrite_at(tree, path, new_subtree_fn):
    """Apply new_subtree_fn to the subtree at path (tuple of 0/1 descents)."""
    if not path:
        return new_subtree_fn(tree)
    lab, l, r = tree
    if path[0] == 0:
        return (lab, rewrite_at(l, path[1:], new_subtree_fn), r)
    return (lab, l, rewrite_at(r, path[1:], new_subtree_fn))


def iter_node_paths(tree, path=()):
    if is_leaf(tree):
        return
    yield path
    yield from iter_node_paths(tree[1], path + (0,))
    yield from iter_node_paths(tree[2], path + (1,))


def subtree_at(tree, path):
    for step in path:
        tree = tree[1 + step]
    return tree


# ---------------------------------------------------------------------------
# Dend: rewriting to the canonical quotient basis
# ---------------------------------------------------------------------------


def _dend_rewrite_top(t):
    """One relation applied at the root; None when the root is not a redex."""
    lab, l, r = t
    if lab == LEFT and not is_leaf(l):
        a, b = l[1], l[2]
        if l[0] == LEFT:
            # (a < b) < c  ->  a < (b < c) + a < (b > c)
            return [(LEFT, a, (LEFT, b, t[2])), (LEFT, a, (RIGHT, b, t[2]))]
        # (a > b) < c  ->  a > (b < c)
        return [(RIGHT, a, (LEFT, b, t[2]))]
    if lab == RIGHT and not is_leaf(r) and r[0] == RIGHT:
        # a > (b > c)  ->  (a > b) > c + (a < b) > c
        b, c = r[1], r[2]
        return [(RIGHT, (RIGHT, l, b), c), (RIGHT, (LEFT, l, b), c)]
    return None


def _dend_rewrite_once(t):
    """First redex in preorder, rewritten; None when t is irreducible."""
    if is_leaf(t):
        return None
    res = _dend_rewrite_top(t)
    if res is not None:
        return res
    lab, l, r = t
    res = _dend_rewrite_once(l)
    if res is not None:
        return [(lab, x, r) for x in res]
    res = _dend_rewrite_once(r)
    if res is not None:
        return [(lab, l, x) for x in res]
    return None


def dend_relation_rows(n: int):
    """Every single-relation rewrite at arity n, as {monomial tree: coeff}.

    These rows span the arity-n component of the relation ideal; they all
    must reduce to zero in the quotient.
    """
    rows = []
    for t in all_trees(n):
        for path in iter_node_paths(t):
            sub = subtree_at(t, path)
            res = _dend_rewrite_top(sub)
            if res is None:
                continue
            row = {t: 1}
            for repl in res:
                full = rewrite_at(t, path, lambda _: repl)
                row[full] = row.get(full, 0) - 1
            rows.append({k: v for k, v in row.items() if v})
    return rows


class DendBasis:
    """Canonical basis of Dend(n): the rewrite-irreducible monomials, sorted
    by shape; the count must equal the Catalan number c_n."""

    def __init__(self, n: int):
        self.n = n
        monomials = all_trees(n)
        self.elements = tuple(t for t in monomials if _dend_rewrite_once(t) is None)
        if len(self.elements) != catalan(n):
            raise ArithmeticError(
                f"Dend({n}): {len(self.elements)} irreducible monomials, "
                f"expected c_{n} = {catalan(n)}; relation application is broken"
            )
        self.position = {t: j for j, t in enumerate(self.elements)}
        self._nf = {t: {j: 1} for j, t in enumerate(self.elements)}

    @property
    def dim(self) -> int:
        return len(self.elements)

    def nf(self, tree) -> dict:
        """Coordinates {basis position: int} of a monomial in the quotient."""
        memo = self._nf
        cached = memo.get(tree)
        if cached is not None:
            return cached
        in_progress = set()
        stack = [tree]
        while stack:
            t = stack[-1]
            if t in memo:
                stack.pop()
                continue
            rw = _dend_rewrite_once(t)
            if rw is None:
                memo[t] = {self.position[t]: 1}
                in_progress.discard(t)
                stack.pop()
                continue
            missing = [c for c in rw if c not in memo]
            if missing and t not in in_progress:
                in_progress.add(t)
                for c in missing:
                    if c in in_progress:
                        raise ArithmeticError("dendriform rewriting cycled")
                    stack.append(c)
                continue
            acc = {}
            for c in rw:
                for j, v in memo[c].items():
                    acc[j] = acc.get(j, 0) + v
            memo[t] = {j: v for j, v in acc.items() if v}
            in_progress.discard(t)
            stack.pop()
        return memo[tree]

    def nf_of_vector(self, vec: dict) -> dict:
        """Reduce a {tree: coeff} combination to basis coordinates."""
        out = {}
        for t, c in vec.items():
            for j, v in self.nf(t).items():
                w = out.get(j, 0) + c * v
                if w:
                    out[j] = w
                elif j in out:
                    del out[j]
        return out

    def element_text(self, j: int) -> str:
        return text(self.elements[j])


# ---------------------------------------------------------------------------
# tau matrices
# ---------------------------------------------------------------------------


_I64_LIMIT = 2**62


def _exact_matmul(a, b):
    """Exact integer matrix product; numpy int64 with an overflow guard."""
    d = a.shape[0]
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * d
    if bound < _I64_LIMIT:
        return a @ b
    # big-integer fallback, exact but slow
    ao = a.astype(object)
    bo = b.astype(object)
    return ao @ bo


class TauMatrix:
    """Exact integer matrix of the cyclic-group generator on P(n).

    Columns are the images of the basis vectors; the matrix has order n+1.
    """

    def __init__(self, arity: int, columns):
        self.arity = arity
        self.dim = len(columns)
        self.columns = [dict(col) for col in columns]
        self._np = None
        self._powers = None

    def entry(self, row: int, col: int) -> int:
        return self.columns[col].get(row, 0)

    def dense(self):
        return [[self.entry(r, c) for c in range(self.dim)] for r in range(self.dim)]

    def apply(self, vec: dict) -> dict:
        out = {}
        for v, c in vec.items():
            for u, m in self.columns[v].items():
                w = out.get(u, 0) + c * m
                if w:
                    out[u] = w
                elif u in out:
                    del out[u]
        return out

    def as_numpy(self):
        if self._np is None:
            self._np = np.array(self.dense(), dtype=np.int64)
        return self._np

    def power_dense(self, k: int):
        """Dense integer matrix of tau^k; powers are cached incrementally."""
        if self._powers is None:
            self._powers = [np.eye(self.dim, dtype=np.int64)]
        base = self.as_numpy()
        while len(self._powers) <= k:
            self._powers.append(_exact_matmul(self._powers[-1], base))
        return self._powers[k]

    def power_columns(self, k: int) -> list:
        """tau^k as sparse columns: list over v of {u: coeff}."""
        m = self.power_dense(k)
        cols = []
        for v in range(self.dim):
            cols.append({u: int(m[u, v]) for u in range(self.dim) if m[u, v]})
        return cols

    def trace_power(self, k: int) -> int:
        return int(np.trace(self.power_dense(k)))

    def order_is_arity_plus_one(self) -> bool:
        """tau^(n+1) = Id and no smaller positive power is required to be."""
        p = self.power_dense(self.arity + 1)
        return bool((p == np.eye(self.dim, dtype=np.int64)).all())

    def powers_sum_to_zero(self) -> bool:
        """Id + tau + ... + tau^n = 0 (the companion-matrix identity)."""
        acc = np.zeros((self.dim, self.dim), dtype=object)
        for k in range(self.arity + 1):
            acc = acc + self.power_dense(k)
        return not acc.any()

    def to_csv(self) -> str:
        return "\n".join(
            ",".join(rat_str(self.entry(r, c)) for c in range(self.dim))
            for r in range(self.dim)
        )


#: arity-2 generator images, as columns over the arity-2 basis
TAU2_COLUMNS = {
    # Dias basis order: e^2_1 (-|), e^2_2 (|-); tau(e1) = -e2, tau(e2) = e1 - e2
    DIAS: [{1: -1}, {0: 1, 1: -1}],
    # Dend basis order: x1<x2, x1>x2; tau(<) = -< - >, tau(>) = <
    DEND: [{0: -1, 1: -1}, {0: 1}],
}


def tau_generators(operad: str) -> TauMatrix:
    """The arity-2 tau matrix (arity 1 is multiplication by -1)."""
    return TauMatrix(2, TAU2_COLUMNS[operad])


# ---------------------------------------------------------------------------
# registry: bases, compositions, tau, built lazily and cached
# ---------------------------------------------------------------------------


class DendRegistry:
    """Lazily built Dend bases, compositions and tau matrices per arity."""

    def __init__(self, max_arity: int = DEFAULT_MAX_ARITY[DEND]):
        self.max_arity = max_arity
        self._bases = {}
        self._compose = {}
        self._tau = {}

    def basis(self, n: int) -> DendBasis:
        if n > self.max_arity:
            raise ValueError(f"Dend arity {n} above the configured cap {self.max_arity}")
        b = self._bases.get(n)
        if b is None:
            b = DendBasis(n)
            self._bases[n] = b
        return b

    def compose_basis(self, a: int, ja: int, i: int, b: int, jb: int) -> dict:
        """Coordinates of (basis_a[ja] o_i basis_b[jb]) in Dend(a+b-1)."""
        key = (a, ja, i, b, jb)
        res = self._compose.get(key)
        if res is None:
            t = graft(self.basis(a).elements[ja], i, self.basis(b).elements[jb])
            res = self.basis(a + b - 1).nf(t)
            self._compose[key] = res
        return res

    def tau(self, n: int, check: bool = False) -> TauMatrix:
        m = self._tau.get(n)
        if m is None or check:
            m = self._build_tau(n, check)
            self._tau[n] = m
        return m

    def _tau_image_by_cherry(self, M, take_second_cherry=False):
        """tau of one basis monomial via a cherry decomposition M = C o_j g."""
        n = leaf_count(M)
        basis = self.basis(n)
        prev = self.tau(n - 1)
        prev_basis = self.basis(n - 1)
        cherries = [
            p
            for p in iter_node_paths(M)
            if is_leaf(subtree_at(M, p)[1]) and is_leaf(subtree_at(M, p)[2])
        ]
        path = cherries[1 if take_second_cherry and len(cherries) > 1 else 0]
        node = subtree_at(M, path)
        gen = node[0]
        j = node[1]  # canonical labels: left leaf label = slot of the graft
        c_tree = canonicalize(rewrite_at(M, path, lambda _: 0))
        tau_c = prev.apply(prev_basis.nf(c_tree))
        out = {}
        if j >= 2:
            # tau(C o_j g) = tau(C) o_{j-1} g
            for jc, cc in tau_c.items():
                for u, v in self.compose_basis(n - 1, jc, j - 1, 2, gen).items():
                    out[u] = out.get(u, 0) + cc * v
        else:
            # tau(C o_1 g) = -tau(g) o_2 tau(C)
            for ig, cg in TAU2_COLUMNS[DEND][gen].items():
                for jc, cc in tau_c.items():
                    for u, v in self.compose_basis(2, ig, 2, n - 1, jc).items():
                        out[u] = out.get(u, 0) - cg * cc * v
        return {u: v for u, v in out.items() if v}

    def _build_tau(self, n: int, check: bool) -> TauMatrix:
        if n == 1:
            return TauMatrix(1, [{0: -1}])
        if n == 2:
            return tau_generators(DEND)
        basis = self.basis(n)
        cols = []
        for M in basis.elements:
            col = self._tau_image_by_cherry(M)
            if check:
                alt = self._tau_image_by_cherry(M, take_second_cherry=True)
                if alt != col:
                    raise ArithmeticError(
                        f"tau images disagree across decompositions of {text(M)}"
                    )
            cols.append(col)
        return TauMatrix(n, cols)


class DiasOperad:
    """Dias tau matrices from the generator recursion, plus the closed form."""

    def __init__(self, max_arity: int = DEFAULT_MAX_ARITY[DIAS]):
        self.max_arity = max_arity
        self._tau = {}

    def tau(self, n: int, check: bool = False) -> TauMatrix:
        if n > self.max_arity:
            raise ValueError(f"Dias arity {n} above the configured cap {self.max_arity}")
        m = self._tau.get(n)
        if m is None or check:
            m = self._build_tau(n, check)
            self._tau[n] = m
        return m

    def _build_tau(self, n: int, check: bool) -> TauMatrix:
        if n == 1:
            return TauMatrix(1, [{0: -1}])
        if n == 2:
            return tau_generators(DIAS)
        # e^n_1 = e^2_1 o_2 e^{n-1}_1 and e^n_m = e^2_2 o_2 e^{n-1}_{m-1};
        # slot 2 >= 2, so tau(gen o_2 e) = tau(gen) o_1 e.
        cols = []
        for m in range(1, n + 1):
            gen, inner = (0, 1) if m == 1 else (1, m - 1)
            col = {}
            for ig, cg in TAU2_COLUMNS[DIAS][gen].items():
                idx = dias_compose(ig + 1, 2, 1, inner, n - 1)
                col[idx - 1] = col.get(idx - 1, 0) + cg
            cols.append({u: v for u, v in col.items() if v})
        mat = TauMatrix(n, cols)
        if check:
            alt = self._build_tau_alt(n)
            if alt.columns != mat.columns:
                raise ArithmeticError(f"Dias tau_{n} disagrees across decompositions")
        return mat

    def _build_tau_alt(self, n: int) -> TauMatrix:
        """Second route through the o_1 rule: e^n_m = e^2_1 o_1 e^{n-1}_m for
        m < n, e^n_n = e^2_2 o_1 e^{n-1}_1; tau(a o_1 b) = -tau(b) o_l tau(a)."""
        prev = self.tau(n - 1)
        cols = []
        for m in range(1, n + 1):
            gen, inner = (0, m) if m < n else (1, 1)
            col = {}
            for jb, cb in prev.columns[inner - 1].items():
                for ig, cg in TAU2_COLUMNS[DIAS][gen].items():
                    idx = dias_compose(jb + 1, n - 1, n - 1, ig + 1, 2)
                    col[idx - 1] = col.get(idx - 1, 0) - cb * cg
            cols.append({u: v for u, v in col.items() if v})
        return TauMatrix(n, cols)


def dias_tau_closed_form(n: int) -> TauMatrix:
    """The stated closed form: tau(e^n_1) = -e^n_n,
    tau(e^n_m) = -e^n_n + e^n_{m-1} for m >= 2."""
    cols = []
    for m in range(1, n + 1):
        col = {n - 1: -1}
        if m >= 2:
            col[m - 2] = col.get(m - 2, 0) + 1
        cols.append(col)
    return TauMatrix(n, cols)


# ---------------------------------------------------------------------------
# invariant-form oracle for tau
# ---------------------------------------------------------------------------


def tau_from_form_tree(operad: str, t) -> dict:
    """tau of a monomial, computed by rewriting the invariant bilinear form.

    Rewrites <E(x1..xn), x_{n+1}> into a combination of <E'(x2..x_{n+1}), x1>
    using the two form rules of the operad plus antisymmetry, recursing into
    the block containing x1; returns {tree: coeff} with labels shifted back
    to 1..n.  Independent of the composition-rule recursion.
    """
    n = leaf_count(t)
    results = {}
    stack = [(1, t, n + 1)]
    guard = 0
    limit = 64 * 4 ** (n + 2)
    while stack:
        guard += 1
        if guard > limit:
            raise ArithmeticError("invariant-form rewriting exceeded its depth bound")
        c, P, Q = stack.pop()
        if Q == 1:
            key = relabel(P, -1)
            v = results.get(key, 0) + c
            if v:
                results[key] = v
            elif key in results:
                del results[key]
            continue
        if P == 1:
            stack.append((-c, Q, 1))
            continue
        if not is_leaf(P) and 1 in leaves(P):
            lab, A, B = P
            if operad == DIAS:
                if lab == LEFT:
                    # <A -| B, Q> = -<B |- Q, A>
                    stack.append((-c, (RIGHT, B, Q), A))
                else:
                    # <A |- B, Q> = <B -| Q, A> - <B |- Q, A>
                    stack.append((c, (LEFT, B, Q), A))
                    stack.append((-c, (RIGHT, B, Q), A))
            else:
                if lab == RIGHT:
                    # <A > B, Q> = <B < Q, A>
                    stack.append((c, (LEFT, B, Q), A))
                else:
                    # <A < B, Q> = -<B < Q, A> - <B > Q, A>
                    stack.append((-c, (LEFT, B, Q), A))
                    stack.append((-c, (RIGHT, B, Q), A))
        else:
            stack.append((-c, Q, P))
    return results


def tau_from_form_dias(n: int, m: int) -> dict:
    """Oracle image of e^n_m as {basis index (1-based): coeff}."""
    out = {}
    for tree, c in tau_from_form_tree(DIAS, dias_monomial(n, m)).items():
        idx = word_to_dias(tree)
        v = out.get(idx, 0) + c
        if v:
            out[idx] = v
        elif idx in out:
            del out[idx]
    return out


def tau_from_form_dend(registry: DendRegistry, n: int, j: int) -> dict:
    """Oracle image of Dend basis element j as {basis position: coeff}."""
    basis = registry.basis(n)
    return basis.nf_of_vector(tau_from_form_tree(DEND, basis.elements[j]))


def tau_form_agrees(operad: str, n: int, registry=None, dias_ops=None) -> bool:
    """Form-rule oracle vs composition-rule recursion on every basis element."""
    if operad == DIAS:
        mat = (dias_ops or DiasOperad()).tau(n)
        for m in range(1, n + 1):
            oracle = {u - 1: c for u, c in tau_from_form_dias(n, m).items()}
            if oracle != mat.columns[m - 1]:
                return False
        return True
    registry = registry or DendRegistry()
    mat = registry.tau(n)
    for j in range(registry.basis(n).dim):
        if tau_from_form_dend(registry, n, j) != mat.columns[j]:
            return False
    return True


def tau_char_poly_check(dias_ops: DiasOperad, n: int) -> bool:
    """Companion-matrix identities on Dias(n):
    sum_{k=0}^{n} tau^k = 0 and tau^{n+1} = Id."""
    mat = dias_ops.tau(n)
    return mat.powers_sum_to_zero() and mat.order_is_arity_plus_one()


# ---------------------------------------------------------------------------
# public linear-combination elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OperadElement:
    """Exact-rational combination of basis indices of a fixed operad space.

    Indices are 1-based: Dias(n) uses 1..n, Dend(n) uses 1..c_n in the
    canonical basis order, FREE2(n) indexes all monomials of the free
    two-generator space in shape order.
    """

    operad: str
    arity: int
    coeffs: tuple  # sorted tuple of (index, QQ)

    @classmethod
    def make(cls, operad, arity, coeffs: dict) -> "OperadElement":
        clean = tuple(sorted((i, QQ(c)) for i, c in coeffs.items() if c != 0))
        return cls(operad, arity, clean)

    def as_dict(self) -> dict:
        return dict(self.coeffs)


def unit(operad: str) -> OperadElement:
    return OperadElement.make(operad, 1, {1: 1})


def compose(a: OperadElement, i: int, b: OperadElement,
            registry: DendRegistry | None = None) -> OperadElement:
    """Bilinear o_i composition of operad elements."""
    if a.operad != b.operad:
        raise ValueError("operad tags differ")
    if not 1 <= i <= a.arity:
        raise ValueError("slot out of range")
    n = a.arity + b.arity - 1
    out = {}
    if a.operad == DIAS:
        for m, ca in a.coeffs:
            for k, cb in b.coeffs:
                idx = dias_compose(m, a.arity, i, k, b.arity)
                out[idx] = out.get(idx, QQ(0)) + ca * cb
    elif a.operad == DEND:
        registry = registry or _default_dend()
        for ja, ca in a.coeffs:
            for jb, cb in b.coeffs:
                for u, v in registry.compose_basis(a.arity, ja - 1, i, b.arity, jb - 1).items():
                    out[u + 1] = out.get(u + 1, QQ(0)) + ca * cb * v
    elif a.operad == FREE2:
        amons, bmons = all_trees(a.arity), all_trees(b.arity)
        pos = {t: j for j, t in enumerate(all_trees(n))}
        for ja, ca in a.coeffs:
            for jb, cb in b.coeffs:
                idx = pos[graft(amons[ja - 1], i, bmons[jb - 1])] + 1
                out[idx] = out.get(idx, QQ(0)) + ca * cb
    else:
        raise ValueError(f"unknown operad tag {a.operad!r}")
    return OperadElement.make(a.operad, n, out)


_DEFAULT_DEND = None
_DEFAULT_DIAS = None


def _default_dend() -> DendRegistry:
    global _DEFAULT_DEND
    if _DEFAULT_DEND is None:
        _DEFAULT_DEND = DendRegistry()
    return _DEFAULT_DEND


def _default_dias() -> DiasOperad:
    global _DEFAULT_DIAS
    if _DEFAULT_DIAS is None:
        _DEFAULT_DIAS = DiasOperad()
    return _DEFAULT_DIAS


def tau(operad: str, n: int, check: bool = False) -> TauMatrix:
    """The tau matrix on P(n) in the canonical basis (default registries)."""
    if operad == DIAS:
        return _default_dias().tau(n, check)
    if operad == DEND:
        return _default_dend().tau(n, check)
    raise ValueError(f"no tau for operad {operad!r}")


def basis_texts(operad: str, n: int) -> list:
    """Parenthesized text of each basis element, in matrix order."""
    if operad == DIAS:
        return [text(dias_monomial(n, m)) for m in range(1, n + 1)]
    if operad == DEND:
        b = _default_dend().basis(n)
        return [b.element_text(j) for j in range(b.dim)]
    raise ValueError(f"unknown operad {operad!r}")


def dend_dimension(n: int) -> int:
    return _default_dend().basis(n).dim


def tau_to_json_dict(operad: str, n: int) -> dict:
    """JSON export of tau_n with its basis; the Dend basis is the canonical
    rewrite/echelon basis, which is not claimed to match the classical
    planar-tree basis beyond arity 2 (its matrix may interest Tamari-lattice
    studies, but no such claim is asserted)."""
    m = tau(operad, n)
    return {
        "operad": operad,
        "arity": n,
        "dimension": m.dim,
        "basis": basis_texts(operad, n),
        "matrix": [[rat_str(m.entry(r, c)) for c in range(m.dim)] for r in range(m.dim)],
        "order": n + 1,
    }

"""Planar binary trees with two node colours: monomials of the free operads.

A tree is either an int (a leaf carrying its variable label) or a triple
(label, left, right) with label LEFT or RIGHT.  Basis monomials carry the
canonical labelling 1..n in left-to-right leaf order; the invariant-form
engine temporarily works with rotated labellings.
"""

from functools import lru_cache

LEFT, RIGHT = 0, 1

_LABEL_CHAR = {LEFT: "<", RIGHT: ">"}


def is_leaf(t) -> bool:
    return isinstance(t, int)


def leaf_count(t) -> int:
    if isinstance(t, int):
        return 1
    return leaf_count(t[1]) + leaf_count(t[2])


def leaves(t) -> list:
    """Leaf labels in left-to-right order."""
    if isinstance(t, int):
        return [t]
    return leaves(t[1]) + leaves(t[2])


def shape_key(t) -> str:
    """Label-free serialization; the canonical monomial sort key (LEFT < RIGHT)."""
    if isinstance(t, int):
        return "x"
    return "(" + _LABEL_CHAR[t[0]] + shape_key(t[1]) + shape_key(t[2]) + ")"


def text(t, symbols=_LABEL_CHAR) -> str:
    """Parenthesized text form with variables, e.g. '((x1<x2)>x3)'."""
    if isinstance(t, int):
        return f"x{t}"
    return "(" + text(t[1], symbols) + symbols[t[0]] + text(t[2], symbols) + ")"


def relabel(t, offset: int):
    """Shift every leaf label by offset."""
    if isinstance(t, int):
        return t + offset
    return (t[0], relabel(t[1], offset), relabel(t[2], offset))


def canonicalize(t):
    """Relabel leaves 1..n in left-to-right order, keeping the shape."""
    counter = [0]

    def go(node):
        if isinstance(node, int):
            counter[0] += 1
            return counter[0]
        return (node[0], go(node[1]), go(node[2]))

    return go(t)


def graft(t, i: int, s):
    """Substitute s into leaf slot i of t; both canonical, result canonical.

    Leaf labels of a canonical tree coincide with leaf positions, so the
    relabelling is arithmetic on labels.
    """
    ln = leaf_count(s)
    shifted = relabel(s, i - 1)

    def go(node):
        if isinstance(node, int):
            if node < i:
                return node
            if node == i:
                return shifted
            return node + ln - 1
        return (node[0], go(node[1]), go(node[2]))

    return go(t)


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple:
    """Every two-coloured planar binary tree with n canonical leaves,
    sorted by shape_key.  There are 2^(n-1) * catalan(n-1) of them."""
    if n < 1:
        raise ValueError("arity must be positive")
    if n == 1:
        return (1,)

    def shapes(a, offset):
        if a == 1:
            return [offset + 1]
        out = []
        for k in range(1, a):
            for l in shapes(k, offset):
                for r in shapes(a - k, offset + k):
                    out.append((LEFT, l, r))
                    out.append((RIGHT, l, r))
        return out

    return tuple(sorted(shapes(n, 0), key=shape_key))


class Monomial:
    """Public wrapper around a raw tree: one basis element of a free binary
    operad on two generators."""

    __slots__ = ("tree", "arity")

    def __init__(self, tree):
        self.tree = tree
        self.arity = leaf_count(tree)

    @classmethod
    def leaf(cls):
        return cls(1)

    @classmethod
    def node(cls, label, left: "Monomial", right: "Monomial") -> "Monomial":
        return cls(canonicalize((label, left.tree, right.tree)))

    def graft(self, i: int, other: "Monomial") -> "Monomial":
        if not 1 <= i <= self.arity:
            raise ValueError("slot out of range")
        return Monomial(graft(self.tree, i, other.tree))

    def text(self) -> str:
        return text(self.tree)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.tree == other.tree

    def __hash__(self):
        return hash(self.tree)

    def __repr__(self):
        return f"Monomial({self.text()})"

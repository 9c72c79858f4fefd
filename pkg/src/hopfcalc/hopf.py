"""Finite-dimensional Hopf algebras given by exact structure-constant tables.

Two families of concrete instances are provided: the function algebra of a
finite group on the delta basis, and the group algebra on the group basis.
Each algebra is stored densely (dimensions here are tiny), and the five
structure maps are linear extensions of per-basis tables.  ``dual_hopf``
transposes the tables; ``check_hopf_axioms`` re-proves every axiom by
exhaustion over basis elements, which suffices by multilinearity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .report import SuiteReport

ZERO = Fraction(0)
ONE = Fraction(1)


class HopfCalcError(ValueError):
    """Base class for all errors raised by this package."""


class NotAGroupError(HopfCalcError):
    pass


class AlgebraMismatchError(HopfCalcError):
    pass


# ---------------------------------------------------------------------------
# finite groups


class GroupTable:
    """A finite group as an order x order multiplication table of indices."""

    __slots__ = ("order", "mul", "identity", "inverse")

    def __init__(self, mul: Sequence[Sequence[int]]):
        order = len(mul)
        table = tuple(tuple(int(x) for x in row) for row in mul)
        if any(len(row) != order for row in table):
            raise NotAGroupError("not a group: table is not square")
        if any(x < 0 or x >= order for row in table for x in row):
            raise NotAGroupError("not a group: entry out of range")
        identity = None
        for e in range(order):
            if all(table[e][x] == x and table[x][e] == x for x in range(order)):
                identity = e
                break
        if identity is None:
            raise NotAGroupError("not a group: no identity")
        inverse = []
        for x in range(order):
            inv = next((y for y in range(order) if table[x][y] == identity), None)
            if inv is None or table[inv][x] != identity:
                raise NotAGroupError("not a group: missing inverse")
            inverse.append(inv)
        for a in range(order):
            for b in range(order):
                for c in range(order):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise NotAGroupError("not a group: not associative")
        self.order = order
        self.mul = table
        self.identity = identity
        self.inverse = tuple(inverse)

    @classmethod
    def cyclic(cls, n: int) -> "GroupTable":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def symmetric(cls, n: int) -> "GroupTable":
        """Symmetric group on ``n`` letters; elements are permutation tuples in
        lexicographic order, composed as (f*g)(x) = f(g(x))."""
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        mul = [
            [index[tuple(f[g[x]] for x in range(n))] for g in perms]
            for f in perms
        ]
        return cls(mul)

    def conjugate(self, t: int, x: int) -> int:
        """t^{-1} x t."""
        return self.mul[self.mul[self.inverse[t]][x]][t]

    def is_ad_invariant(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(self.conjugate(t, x) in s for x in s for t in range(self.order))

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupTable) and self.mul == other.mul

    def __hash__(self) -> int:
        return hash(self.mul)

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order})"


# ---------------------------------------------------------------------------
# elements and tensors


class Element:
    """Exact-coefficient vector over the basis of one Hopf algebra."""

    __slots__ = ("hopf", "coeffs")

    def __init__(self, hopf: "HopfData", coeffs: Iterable):
        self.hopf = hopf
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != hopf.dim:
            raise HopfCalcError("coefficient count does not match algebra dimension")

    def _require_same(self, other: "Element") -> None:
        if self.hopf is not other.hopf:
            raise AlgebraMismatchError("algebra mismatch")

    def __add__(self, other: "Element") -> "Element":
        self._require_same(other)
        return Element(self.hopf, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        self._require_same(other)
        return Element(self.hopf, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element(self.hopf, (-a for a in self.coeffs))

    def scale(self, q) -> "Element":
        q = Fraction(q)
        return Element(self.hopf, (q * a for a in self.coeffs))

    def __rmul__(self, q) -> "Element":
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Element):
            return self.hopf.multiply(self, other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c != 0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.hopf is other.hopf
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.hopf), self.coeffs))

    def __str__(self) -> str:
        from .fmt import format_element

        return format_element(self)

    __repr__ = __str__


@dataclass(frozen=True)
class TensorElement:
    """Canonical term list for an element of A (x) A (left-major order)."""

    terms: tuple[tuple[Fraction, int, int], ...]

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Fraction, int, int]]) -> "TensorElement":
        acc: dict[tuple[int, int], Fraction] = {}
        for c, l, r in terms:
            if c == 0:
                continue
            key = (l, r)
            acc[key] = acc.get(key, ZERO) + c
        return cls(tuple((c, l, r) for (l, r), c in sorted(acc.items()) if c != 0))

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return {(l, r): c for c, l, r in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({l}(x){r})" for c, l, r in self.terms)


def tensor_of(x: Element, y: Element) -> TensorElement:
    return TensorElement.from_terms(
        (cx * cy, i, j)
        for i, cx in enumerate(x.coeffs)
        if cx != 0
        for j, cy in enumerate(y.coeffs)
        if cy != 0
    )


# ---------------------------------------------------------------------------
# Hopf data


class HopfData:
    """Structure constants of a finite-dimensional Hopf algebra.

    * ``mult[i][j]`` -- coefficient vector of e_i e_j,
    * ``unit`` -- coefficient vector of 1,
    * ``comult[i]`` -- TensorElement for the coproduct of e_i,
    * ``counit[i]`` -- scalar,
    * ``antipode[i]`` -- coefficient vector of S(e_i).

    ``basis_names``/``basis_atom`` only affect printing.
    """

    __slots__ = (
        "dim",
        "mult_table",
        "unit_vec",
        "comult_table",
        "counit_vec",
        "antipode_table",
        "name",
        "basis_names",
        "basis_atom",
    )

    def __init__(
        self,
        dim: int,
        mult_table,
        unit_vec,
        comult_table,
        counit_vec,
        antipode_table,
        name: str = "",
        basis_names: Optional[Sequence[str]] = None,
        basis_atom: str = "e",
    ):
        self.dim = dim
        self.mult_table = tuple(
            tuple(tuple(Fraction(c) for c in cell) for cell in row) for row in mult_table
        )
        self.unit_vec = tuple(Fraction(c) for c in unit_vec)
        self.comult_table = tuple(comult_table)
        self.counit_vec = tuple(Fraction(c) for c in counit_vec)
        self.antipode_table = tuple(tuple(Fraction(c) for c in row) for row in antipode_table)
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(str(i) for i in range(dim))
        self.basis_atom = basis_atom

    # -- constructors of elements

    def basis(self, i: int) -> Element:
        return Element(self, (ONE if j == i else ZERO for j in range(self.dim)))

    def element(self, coeffs: Iterable) -> Element:
        return Element(self, coeffs)

    def zero(self) -> Element:
        return Element(self, (ZERO,) * self.dim)

    def one(self) -> Element:
        return Element(self, self.unit_vec)

    # -- structure maps (multilinear extension of the tables)

    def multiply(self, x: Element, y: Element) -> Element:
        if x.hopf is not self or y.hopf is not self:
            raise AlgebraMismatchError("algebra mismatch")
        acc = [ZERO] * self.dim
        for i, cx in enumerate(x.coeffs):
            if cx == 0:
                continue
            row = self.mult_table[i]
            for j, cy in enumerate(y.coeffs):
                if cy == 0:
                    continue
                cxy = cx * cy
                for k, c in enumerate(row[j]):
                    if c != 0:
                        acc[k] += cxy * c
        return Element(self, acc)

    def coproduct(self, x: Element) -> TensorElement:
        if x.hopf is not self:
            raise AlgebraMismatchError("algebra mismatch")
        terms = []
        for i, cx in enumerate(x.coeffs):
            if cx == 0:
                continue
            for c, l, r in self.comult_table[i].terms:
                terms.append((cx * c, l, r))
        return TensorElement.from_terms(terms)

    def counit(self, x: Element) -> Fraction:
        if x.hopf is not self:
            raise AlgebraMismatchError("algebra mismatch")
        return sum((c * e for c, e in zip(x.coeffs, self.counit_vec)), ZERO)

    def antipode(self, x: Element) -> Element:
        if x.hopf is not self:
            raise AlgebraMismatchError("algebra mismatch")
        acc = [ZERO] * self.dim
        for i, cx in enumerate(x.coeffs):
            if cx == 0:
                continue
            for j, c in enumerate(self.antipode_table[i]):
                if c != 0:
                    acc[j] += cx * c
        return Element(self, acc)

    def equal_tables(self, other: "HopfData") -> bool:
        return (
            self.dim == other.dim
            and self.mult_table == other.mult_table
            and self.unit_vec == other.unit_vec
            and tuple(t.terms for t in self.comult_table)
            == tuple(t.terms for t in other.comult_table)
            and self.counit_vec == other.counit_vec
            and self.antipode_table == other.antipode_table
        )

    def __repr__(self) -> str:
        return f"HopfData({self.name or 'unnamed'}, dim={self.dim})"


# module-level aliases matching the operation names

def multiply(x: Element, y: Element) -> Element:
    return x.hopf.multiply(x, y)


def coproduct(x: Element) -> TensorElement:
    return x.hopf.coproduct(x)


def counit(x: Element) -> Fraction:
    return x.hopf.counit(x)


def antipode(x: Element) -> Element:
    return x.hopf.antipode(x)


# ---------------------------------------------------------------------------
# constructors


def function_hopf(g: GroupTable, names: Optional[Sequence[str]] = None, name: str = "") -> HopfData:
    """Function algebra of a finite group on the delta basis e_x.

    e_x e_y = [x=y] e_x, 1 = sum_x e_x, coproduct of e_x lists the pairs with
    product x, the counit evaluates at the identity, and S(e_x) = e_{x^-1}.
    """
    n = g.order
    mult = [
        [
            tuple(ONE if (i == j and k == i) else ZERO for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    unit = (ONE,) * n
    comult = [
        TensorElement.from_terms(
            (ONE, y, z) for y in range(n) for z in range(n) if g.mul[y][z] == x
        )
        for x in range(n)
    ]
    counit_vec = tuple(ONE if x == g.identity else ZERO for x in range(n))
    antipode = [
        tuple(ONE if j == g.inverse[i] else ZERO for j in range(n)) for i in range(n)
    ]
    return HopfData(
        n, mult, unit, comult, counit_vec, antipode,
        name=name or "Fun(G)", basis_names=names, basis_atom="e",
    )


def group_hopf(g: GroupTable, names: Optional[Sequence[str]] = None, name: str = "") -> HopfData:
    """Group algebra kG: x*y = xy, group-likes, S(x) = x^-1."""
    n = g.order
    mult = [
        [tuple(ONE if k == g.mul[i][j] else ZERO for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    unit = tuple(ONE if x == g.identity else ZERO for x in range(n))
    comult = [TensorElement.from_terms([(ONE, x, x)]) for x in range(n)]
    counit_vec = (ONE,) * n
    antipode = [
        tuple(ONE if j == g.inverse[i] else ZERO for j in range(n)) for i in range(n)
    ]
    return HopfData(
        n, mult, unit, comult, counit_vec, antipode,
        name=name or "kG", basis_names=names, basis_atom="u",
    )


def dual_hopf(h: HopfData) -> HopfData:
    """Linear dual on the dual basis: all structure tables transposed."""
    n = h.dim
    comult_dicts = [t.as_dict() for t in h.comult_table]
    mult = [
        [
            tuple(comult_dicts[k].get((i, j), ZERO) for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    unit = h.counit_vec
    comult = [
        TensorElement.from_terms(
            (h.mult_table[j][k][i], j, k) for j in range(n) for k in range(n)
        )
        for i in range(n)
    ]
    counit_vec = h.unit_vec
    antipode = [tuple(h.antipode_table[j][i] for j in range(n)) for i in range(n)]
    atom = "u" if h.basis_atom == "e" else "e"
    return HopfData(
        n, mult, unit, comult, counit_vec, antipode,
        name=f"dual({h.name})" if h.name else "dual",
        basis_names=h.basis_names, basis_atom=atom,
    )


# ---------------------------------------------------------------------------
# axiom checking


def _tensor3(x: TensorElement, expand, side: str) -> dict[tuple[int, int, int], Fraction]:
    """Apply ``expand`` (basis index -> TensorElement) to one leg of x."""
    acc: dict[tuple[int, int, int], Fraction] = {}
    for c, l, r in x.terms:
        inner = expand(l if side == "left" else r)
        for c2, a, b in inner.terms:
            key = (a, b, r) if side == "left" else (l, a, b)
            acc[key] = acc.get(key, ZERO) + c * c2
    return {k: v for k, v in acc.items() if v != 0}


def check_hopf_axioms(h: HopfData) -> SuiteReport:
    """Verify all Hopf axioms by exhaustion over basis elements.

    Checking on basis elements suffices: every axiom is multilinear in its
    arguments.  One report case per axiom; a failing case names the first
    offending basis tuple.
    """
    rep = SuiteReport(f"hopf_axioms[{h.name}]")
    n = h.dim
    basis = [h.basis(i) for i in range(n)]
    one = h.one()

    def axiom(name: str, failures: list[str]) -> None:
        if failures:
            rep.record(name, failures[0], "expected equality", False)
        else:
            rep.record(name, "all basis instances", "ok", True)

    fails = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if (basis[i] * basis[j]) * basis[k] != basis[i] * (basis[j] * basis[k]):
                    fails.append(f"(e{i} e{j}) e{k}")
    axiom("associativity", fails)

    fails = [f"e{i}" for i in range(n) if one * basis[i] != basis[i] or basis[i] * one != basis[i]]
    axiom("unit law", fails)

    fails = []
    for i in range(n):
        lhs = _tensor3(h.coproduct(basis[i]), lambda t: h.comult_table[t], "left")
        rhs = _tensor3(h.coproduct(basis[i]), lambda t: h.comult_table[t], "right")
        if lhs != rhs:
            fails.append(f"e{i}")
    axiom("coassociativity", fails)

    fails = []
    for i in range(n):
        left = h.zero()
        right = h.zero()
        for c, l, r in h.comult_table[i].terms:
            left += (c * h.counit_vec[l]) * basis[r]
            right += (c * h.counit_vec[r]) * basis[l]
        if left != basis[i] or right != basis[i]:
            fails.append(f"e{i}")
    axiom("counit law", fails)

    def tensor_mult(a: TensorElement, b: TensorElement) -> TensorElement:
        terms = []
        for c1, l1, r1 in a.terms:
            for c2, l2, r2 in b.terms:
                prod_l = h.multiply(basis[l1], basis[l2])
                prod_r = h.multiply(basis[r1], basis[r2])
                for li, cl in enumerate(prod_l.coeffs):
                    if cl == 0:
                        continue
                    for ri, cr in enumerate(prod_r.coeffs):
                        if cr != 0:
                            terms.append((c1 * c2 * cl * cr, li, ri))
        return TensorElement.from_terms(terms)

    fails = []
    if h.coproduct(one) != tensor_of(one, one):
        fails.append("coproduct(1)")
    for i in range(n):
        for j in range(n):
            lhs = h.coproduct(basis[i] * basis[j])
            rhs = tensor_mult(h.comult_table[i], h.comult_table[j])
            if lhs != rhs:
                fails.append(f"coproduct(e{i} e{j})")
    axiom("coproduct is an algebra map", fails)

    fails = []
    if h.counit(one) != 1:
        fails.append("counit(1)")
    for i in range(n):
        for j in range(n):
            if h.counit(basis[i] * basis[j]) != h.counit(basis[i]) * h.counit(basis[j]):
                fails.append(f"counit(e{i} e{j})")
    axiom("counit is an algebra map", fails)

    fails = []
    for i in range(n):
        left = h.zero()
        right = h.zero()
        for c, l, r in h.comult_table[i].terms:
            left += c * (h.antipode(basis[l]) * basis[r])
            right += c * (basis[l] * h.antipode(basis[r]))
        want = h.counit_vec[i] * one
        if left != want or right != want:
            fails.append(f"e{i}")
    axiom("antipode axiom", fails)

    return rep


def tensor_terms(t: TensorElement):
    return t.terms

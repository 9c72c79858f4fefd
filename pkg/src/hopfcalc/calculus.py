"""Bicovariant first-order differential calculus data and its consistency
checker.

A calculus is a table triple (r, f, chi) over a paired Hopf algebra:
``r[i][j]`` lives in A, ``f[i][j]`` and ``chi[i]`` in A*.  The bimodule rule
moves functions through invariant one-forms, w^i a = (f^i_j |> a) w^j, and
the differential of a function is da = (chi_i |> a) w^i.  Functions are
always stored to the LEFT of invariant forms; the bimodule rule is the
rewrite that enforces this normal form.

``finite_group_calculus`` builds the calculus attached to an ad-invariant
subset S of a finite group: one form per element of S, chi_x = x - e,
f^x_x = x (group-like), and r^x_y the indicator of conjugators sending y
to x.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .duality import PairedHopf
from .hopf import Element, GroupTable, HopfCalcError, function_hopf, group_hopf
from .report import SuiteReport

ZERO = Fraction(0)
ONE = Fraction(1)


class CalculusError(HopfCalcError):
    pass


class OneForm:
    """Sum a_i w^i with functions written to the left of invariant forms."""

    __slots__ = ("fodc", "components")

    def __init__(self, fodc: "FodcData", components: Sequence[Element]):
        if len(components) != fodc.n:
            raise CalculusError("component count does not match calculus dimension")
        self.fodc = fodc
        self.components = tuple(components)

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.fodc, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.fodc, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "OneForm":
        return OneForm(self.fodc, [-a for a in self.components])

    def left_mul(self, a: Element) -> "OneForm":
        """a * (sum b_i w^i) = sum (a b_i) w^i."""
        return OneForm(self.fodc, [a * b for b in self.components])

    def right_mul(self, a: Element) -> "OneForm":
        """(sum b_i w^i) * a, commuting a through each invariant form."""
        out = [self.fodc.paired.alg.zero() for _ in range(self.fodc.n)]
        for i, b in enumerate(self.components):
            if b.is_zero:
                continue
            moved = self.fodc.omega_times_function(i, a)
            for j, c in enumerate(moved.components):
                out[j] += b * c
        return OneForm(self.fodc, out)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OneForm)
            and self.fodc is other.fodc
            and self.components == other.components
        )

    def __hash__(self):
        return hash((id(self.fodc), self.components))

    def __str__(self) -> str:
        parts = [
            f"({c}) * w[{i + 1}]" for i, c in enumerate(self.components) if not c.is_zero
        ]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


class FodcData:
    """Structure data of one bicovariant first-order calculus."""

    __slots__ = (
        "n",
        "paired",
        "r",
        "f",
        "chi",
        "omega_presentation",
        "group",
        "subset",
        "name",
        "_contexts",
    )

    def __init__(
        self,
        n: int,
        paired: PairedHopf,
        r: Sequence[Sequence[Element]],
        f: Sequence[Sequence[Element]],
        chi: Sequence[Element],
        omega_presentation: Sequence[Sequence[tuple[Element, Element]]],
        group: Optional[GroupTable] = None,
        subset: Optional[Sequence[int]] = None,
        name: str = "",
    ):
        self.n = n
        self.paired = paired
        self.r = tuple(tuple(row) for row in r)
        self.f = tuple(tuple(row) for row in f)
        self.chi = tuple(chi)
        self.omega_presentation = tuple(tuple(p) for p in omega_presentation)
        self.group = group
        self.subset = tuple(subset) if subset is not None else None
        self.name = name
        self._contexts = {}

    def omega_times_function(self, i: int, a: Element) -> OneForm:
        """w^i a = (f^i_j |> a) w^j."""
        p = self.paired
        return OneForm(self, [p.left_act(self.f[i][j], a) for j in range(self.n)])

    def differential(self, a: Element) -> OneForm:
        """da = (chi_i |> a) w^i."""
        p = self.paired
        return OneForm(self, [p.left_act(self.chi[i], a) for i in range(self.n)])

    def omega(self, i: int) -> OneForm:
        one = self.paired.alg.one()
        zero = self.paired.alg.zero()
        return OneForm(self, [one if j == i else zero for j in range(self.n)])

    def __repr__(self) -> str:
        return f"FodcData({self.name or 'unnamed'}, n={self.n})"


def omega_times_function(d: FodcData, i: int, a: Element) -> OneForm:
    return d.omega_times_function(i, a)


def differential(d: FodcData, a: Element) -> OneForm:
    return d.differential(a)


def check_consistency(d: FodcData) -> SuiteReport:
    """Verify the seven structure relations of the calculus exhaustively.

    1. coproduct of r:      Delta(r^i_j) = r^k_j (x) r^i_k
    2. coproduct of f:      Delta(f^i_j) = f^i_k (x) f^k_j
    3. bimodule exchange:   (f^j_i |> a) r^i_k = r^j_i (a <| f^i_k)
    4. counit of r and f:   eps(r^i_j) = eps(f^i_j) = delta^i_j
    5. coproduct of chi:    Delta(chi_i) = chi_j (x) f^j_i + 1 (x) chi_i
    6. right action of chi: a <| chi_i = (chi_j |> a) r^j_i
    7. counit of chi:       eps(chi_i) = 0
    """
    rep = SuiteReport("consistency")
    p = d.paired
    A, D = p.alg, p.dual
    n = d.n

    for i in range(n):
        for j in range(n):
            lhs = A.coproduct(d.r[i][j]).as_dict()
            rhs: dict[tuple[int, int], Fraction] = {}
            for k in range(n):
                for li, cl in enumerate(d.r[k][j].coeffs):
                    if cl == 0:
                        continue
                    for ri, cr in enumerate(d.r[i][k].coeffs):
                        if cr == 0:
                            continue
                        key = (li, ri)
                        rhs[key] = rhs.get(key, ZERO) + cl * cr
            rhs = {k: v for k, v in rhs.items() if v != 0}
            rep.record(f"coproduct of r[{i}][{j}]", lhs, rhs, lhs == rhs)

    for i in range(n):
        for j in range(n):
            lhs = D.coproduct(d.f[i][j]).as_dict()
            rhs = {}
            for k in range(n):
                for li, cl in enumerate(d.f[i][k].coeffs):
                    if cl == 0:
                        continue
                    for ri, cr in enumerate(d.f[k][j].coeffs):
                        if cr == 0:
                            continue
                        key = (li, ri)
                        rhs[key] = rhs.get(key, ZERO) + cl * cr
            rhs = {k: v for k, v in rhs.items() if v != 0}
            rep.record(f"coproduct of f[{i}][{j}]", lhs, rhs, lhs == rhs)

    for a_idx in range(A.dim):
        a = A.basis(a_idx)
        for j in range(n):
            for k in range(n):
                lhs = A.zero()
                rhs = A.zero()
                for i in range(n):
                    lhs += p.left_act(d.f[j][i], a) * d.r[i][k]
                    rhs += d.r[j][i] * p.right_act(a, d.f[i][k])
                rep.record(f"exchange a={a_idx},j={j},k={k}", lhs, rhs, lhs == rhs)

    for i in range(n):
        for j in range(n):
            want = ONE if i == j else ZERO
            rep.record(f"counit of r[{i}][{j}]", A.counit(d.r[i][j]), want,
                       A.counit(d.r[i][j]) == want)
            rep.record(f"counit of f[{i}][{j}]", D.counit(d.f[i][j]), want,
                       D.counit(d.f[i][j]) == want)

    one_dual = D.one()
    for i in range(n):
        lhs = D.coproduct(d.chi[i]).as_dict()
        rhs = {}
        for j in range(n):
            for li, cl in enumerate(d.chi[j].coeffs):
                if cl == 0:
                    continue
                for ri, cr in enumerate(d.f[j][i].coeffs):
                    if cr == 0:
                        continue
                    key = (li, ri)
                    rhs[key] = rhs.get(key, ZERO) + cl * cr
        for li, cl in enumerate(one_dual.coeffs):
            if cl == 0:
                continue
            for ri, cr in enumerate(d.chi[i].coeffs):
                if cr == 0:
                    continue
                key = (li, ri)
                rhs[key] = rhs.get(key, ZERO) + cl * cr
        rhs = {k: v for k, v in rhs.items() if v != 0}
        rep.record(f"coproduct of chi[{i}]", lhs, rhs, lhs == rhs)

    for a_idx in range(A.dim):
        a = A.basis(a_idx)
        for i in range(n):
            lhs = p.right_act(a, d.chi[i])
            rhs = A.zero()
            for j in range(n):
                rhs += p.left_act(d.chi[j], a) * d.r[j][i]
            rep.record(f"right chi a={a_idx},i={i}", lhs, rhs, lhs == rhs)

    for i in range(n):
        v = D.counit(d.chi[i])
        rep.record(f"counit of chi[{i}]", v, ZERO, v == 0)

    return rep


def finite_group_calculus(
    g: GroupTable,
    s: Sequence[int],
    names: Optional[Sequence[str]] = None,
    name: str = "",
) -> FodcData:
    """Calculus on the function algebra of ``g`` attached to the ad-invariant
    subset ``s`` (indices of non-identity elements, closed under conjugation).

    Basis form w^x per x in s; f^x_y = [x=y] x, chi_x = x - e,
    r^x_y = indicator of {t : t^-1 y t = x}, and w^x = sum_h e_h d e_{hx}.
    The construction is validated: the consistency checker must pass and the
    presentation must reproduce each w^x under the differential.
    """
    s = list(s)
    if not s:
        raise CalculusError("empty subset")
    if g.identity in s:
        raise CalculusError("identity in S")
    if len(set(s)) != len(s):
        raise CalculusError("duplicate subset entries")
    if not g.is_ad_invariant(s):
        raise CalculusError("not ad-invariant")

    A = function_hopf(g, names=names, name=f"Fun({name})" if name else "Fun(G)")
    paired = PairedHopf.canonical(A)
    D = paired.dual
    n = len(s)

    f = [[D.basis(s[i]) if i == j else D.zero() for j in range(n)] for i in range(n)]
    chi = [D.basis(s[i]) - D.basis(g.identity) for i in range(n)]
    r = [
        [
            A.element(
                [ONE if g.conjugate(t, s[j]) == s[i] else ZERO for t in range(g.order)]
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    presentation = [
        [(A.basis(h), A.basis(g.mul[h][s[i]])) for h in range(g.order)]
        for i in range(n)
    ]

    fodc = FodcData(
        n, paired, r, f, chi, presentation,
        group=g, subset=s, name=name,
    )

    rep = check_consistency(fodc)
    if not rep.passed:
        bad = rep.failures()[0]
        raise CalculusError(f"inconsistent calculus data: {bad.name}")
    for i in range(n):
        built = OneForm(fodc, [A.zero()] * n)
        for a, b in fodc.omega_presentation[i]:
            built += fodc.differential(b).left_mul(a)
        if built != fodc.omega(i):
            raise CalculusError(f"presentation does not reproduce w[{i + 1}]")
    return fodc

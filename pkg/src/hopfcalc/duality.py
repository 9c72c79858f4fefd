"""Dual pairing between a Hopf algebra and its dual, and the derived actions.

The left action x |> a = a_(1) <x, a_(2)> and the right action
a <| x = a_(2) <x, a_(1)> make A a module over A*.  ``act_on_dual`` is the
companion action of A on A*, h |-> h_(1) <h_(2), a>, and ``adjoint_act`` is
the left adjoint action h_(1) theta S(h_(2)) inside A*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hopf import Element, HopfData, dual_hopf, AlgebraMismatchError
from .linalg import Matrix
from .report import SuiteReport

ZERO = Fraction(0)


class PairingMismatchError(AlgebraMismatchError):
    pass


@dataclass(frozen=True)
class PairedHopf:
    """A Hopf algebra together with its dual and an explicit pairing matrix.

    ``pairing.at(i, j)`` is the value of the i-th dual basis vector on the
    j-th algebra basis vector; for duals built by ``dual_hopf`` this is the
    identity matrix, but it is kept explicit so non-matched dual bases can be
    plugged in without code changes.
    """

    alg: HopfData
    dual: HopfData
    pairing: Matrix

    @classmethod
    def canonical(cls, alg: HopfData) -> "PairedHopf":
        return cls(alg, dual_hopf(alg), Matrix.identity(alg.dim))

    def _check(self, x: Element, a: Element) -> None:
        if x.hopf is not self.dual or a.hopf is not self.alg:
            raise PairingMismatchError("pairing mismatch")

    def pair(self, x: Element, a: Element) -> Fraction:
        self._check(x, a)
        total = ZERO
        for i, cx in enumerate(x.coeffs):
            if cx == 0:
                continue
            for j, ca in enumerate(a.coeffs):
                if ca != 0:
                    total += cx * ca * self.pairing.at(i, j)
        return total

    def left_act(self, x: Element, a: Element) -> Element:
        """x |> a = a_(1) <x, a_(2)>."""
        self._check(x, a)
        acc = [ZERO] * self.alg.dim
        for c, l, r in self.alg.coproduct(a).terms:
            v = self.pair(x, self.alg.basis(r))
            if v != 0:
                acc[l] += c * v
        return Element(self.alg, acc)

    def right_act(self, a: Element, x: Element) -> Element:
        """a <| x = a_(2) <x, a_(1)>."""
        self._check(x, a)
        acc = [ZERO] * self.alg.dim
        for c, l, r in self.alg.coproduct(a).terms:
            v = self.pair(x, self.alg.basis(l))
            if v != 0:
                acc[r] += c * v
        return Element(self.alg, acc)

    def act_on_dual(self, a: Element, h: Element) -> Element:
        """a |> h = h_(1) <h_(2), a>."""
        self._check(h, a)
        acc = [ZERO] * self.dual.dim
        for c, l, r in self.dual.coproduct(h).terms:
            v = self.pair(self.dual.basis(r), a)
            if v != 0:
                acc[l] += c * v
        return Element(self.dual, acc)

    def adjoint_act(self, h: Element, theta: Element) -> Element:
        """h |> theta = h_(1) theta S(h_(2)) inside the dual algebra."""
        if h.hopf is not self.dual or theta.hopf is not self.dual:
            raise PairingMismatchError("pairing mismatch")
        out = self.dual.zero()
        for c, l, r in self.dual.coproduct(h).terms:
            out += c * (self.dual.basis(l) * theta * self.dual.antipode(self.dual.basis(r)))
        return out


def left_act(p: PairedHopf, x: Element, a: Element) -> Element:
    return p.left_act(x, a)


def right_act(p: PairedHopf, a: Element, x: Element) -> Element:
    return p.right_act(a, x)


def act_on_dual(p: PairedHopf, a: Element, h: Element) -> Element:
    return p.act_on_dual(a, h)


def adjoint_act(p: PairedHopf, h: Element, theta: Element) -> Element:
    return p.adjoint_act(h, theta)


def check_covariance(p: PairedHopf) -> SuiteReport:
    """Exhaustive covariance report for a paired Hopf algebra.

    Covers, over all basis tuples: the pairing's product/coproduct
    intertwining, the covariance rule x |> (ab) = (x_(1) |> a)(x_(2) |> b),
    the module property (xy) |> a = x |> (y |> a), and the counit identity
    eps(x |> a) = <x, a>.
    """
    rep = SuiteReport("covariance")
    A, D = p.alg, p.dual
    na, nd = A.dim, D.dim
    ab = [A.basis(i) for i in range(na)]
    db = [D.basis(i) for i in range(nd)]

    for i in range(nd):
        for j in range(nd):
            for k in range(na):
                lhs = p.pair(db[i] * db[j], ab[k])
                rhs = sum(
                    (
                        c * p.pair(db[i], ab[l]) * p.pair(db[j], ab[r])
                        for c, l, r in A.coproduct(ab[k]).terms
                    ),
                    ZERO,
                )
                rep.record(f"<xy,a> splits x={i},y={j},a={k}", lhs, rhs, lhs == rhs)
    for i in range(nd):
        for j in range(na):
            for k in range(na):
                lhs = p.pair(db[i], ab[j] * ab[k])
                rhs = sum(
                    (
                        c * p.pair(db[l], ab[j]) * p.pair(db[r], ab[k])
                        for c, l, r in D.coproduct(db[i]).terms
                    ),
                    ZERO,
                )
                rep.record(f"<x,ab> splits x={i},a={j},b={k}", lhs, rhs, lhs == rhs)

    for x in range(nd):
        for a in range(na):
            for b in range(na):
                lhs = p.left_act(db[x], ab[a] * ab[b])
                rhs = A.zero()
                for c, l, r in D.coproduct(db[x]).terms:
                    rhs += c * (p.left_act(db[l], ab[a]) * p.left_act(db[r], ab[b]))
                rep.record(f"x|>(ab) x={x},a={a},b={b}", lhs, rhs, lhs == rhs)

    for x in range(nd):
        for y in range(nd):
            for a in range(na):
                lhs = p.left_act(db[x] * db[y], ab[a])
                rhs = p.left_act(db[x], p.left_act(db[y], ab[a]))
                rep.record(f"(xy)|>a x={x},y={y},a={a}", lhs, rhs, lhs == rhs)

    for x in range(nd):
        for a in range(na):
            lhs = A.counit(p.left_act(db[x], ab[a]))
            rhs = p.pair(db[x], ab[a])
            rep.record(f"eps(x|>a) x={x},a={a}", lhs, rhs, lhs == rhs)

    return rep

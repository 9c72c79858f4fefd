"""The dual of the wedge algebra and the cross-product algebra built on it.

Dual elements are normal-ordered words h * gamma_{i_1} ... gamma_{i_k} with
h in the base dual algebra; the generators gamma_i are the degree-one duals
fixed by <gamma_i, a w^j> = eps(a) delta_i^j (and zero on every other
degree).  Products of duals are evaluated through the pairing recursion
<theta phi, rho> = <theta, rho_(1)> <phi, rho_(2)>; gamma-words are reduced
per degree to the words labelling the chosen exterior basis by an exact
linear solve against those pairings, so equality of duals is a term-list
comparison.

Cross-product elements keep all wedge-algebra factors to the LEFT of all
dual factors; the commutation rule theta rho = (theta_(1) |> rho) theta_(2)
is applied one generator at a time to restore that normal order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .calculus import CalculusError, FodcData
from .hopf import Element, HopfCalcError
from .linalg import Echelon, solve_in_span
from .wedge import GradedForm, WedgeAlgebra, Word, wedge_multiply

ZERO = Fraction(0)
ONE = Fraction(1)

Factor = tuple  # ('h', coeff tuple) or ('g', index)


class CrossAlgebra:
    """Shared context for dual and cross-product computations at one maxdeg."""

    def __init__(self, fodc: FodcData, maxdeg: int):
        self.fodc = fodc
        self.maxdeg = maxdeg
        self.wedge = WedgeAlgebra.for_calculus(fodc, maxdeg)
        dual_one = fodc.paired.dual.one()
        sup = dual_one.support()
        if len(sup) != 1 or dual_one.coeffs[sup[0]] != 1:
            raise CalculusError("dual unit is not a basis element")
        self.dual_one_index = sup[0]
        self._pair_cache: dict = {}
        self._act_cache: dict = {}
        self._move_h_cache: dict = {}
        self._dual_reduce_cache: dict[Word, tuple] = {}
        self._dual_rows: dict[int, list] = {}
        self._move_form_cache: dict = {}
        self._dual_mono_cache: dict = {}

    @classmethod
    def for_calculus(cls, fodc: FodcData, maxdeg: int) -> "CrossAlgebra":
        key = ("cross", maxdeg)
        ctx = fodc._contexts.get(key)
        if ctx is None:
            ctx = cls(fodc, maxdeg)
            fodc._contexts[key] = ctx
        return ctx

    # -- element constructors

    def gamma(self, i: int) -> "DualElement":
        if not 0 <= i < self.fodc.n:
            raise CalculusError("gamma index out of range")
        return DualElement(self, {(self.dual_one_index, (i,)): ONE})

    def dual_from_element(self, h: Element) -> "DualElement":
        if h.hopf is not self.fodc.paired.dual:
            raise HopfCalcError("algebra mismatch")
        return DualElement(self, {(t, ()): c for t, c in enumerate(h.coeffs) if c != 0})

    def dual_one(self) -> "DualElement":
        return DualElement(self, {(self.dual_one_index, ()): ONE})

    def cross_from_form(self, gf: GradedForm) -> "CrossElement":
        e = self.dual_one_index
        return CrossElement(self, {(a, w, e, ()): c for (a, w), c in gf.terms.items()})

    def cross_from_dual(self, de: "DualElement") -> "CrossElement":
        one = self.fodc.paired.alg.unit_vec
        terms: dict = {}
        for (h, w), c in de.terms.items():
            for x, cx in enumerate(one):
                if cx != 0:
                    terms[(x, (), h, w)] = c * cx
        return CrossElement(self, terms)

    def cross_from_element(self, a: Element) -> "CrossElement":
        return self.cross_from_form(GradedForm.from_element(self.wedge, a))

    def cross_one(self) -> "CrossElement":
        return self.cross_from_form(GradedForm.one(self.wedge))

    # -- pairing of generator sequences against wedge monomials

    def pair_factors(self, factors: tuple[Factor, ...], a_idx: int, word: Word) -> Fraction:
        """<f_1 f_2 ... f_k, e_a w^word> via the coproduct recursion."""
        n_gamma = sum(1 for f in factors if f[0] == "g")
        if n_gamma != len(word):
            return ZERO
        key = (factors, a_idx, word)
        hit = self._pair_cache.get(key)
        if hit is not None:
            return hit
        p = self.fodc.paired
        if not factors:
            out = p.alg.counit_vec[a_idx] if word == () else ZERO
        else:
            kind, payload = factors[0]
            rest = factors[1:]
            total = ZERO
            for (x, xi, y, yj), c in self.wedge.coproduct_monomial(a_idx, word).items():
                if kind == "h":
                    if xi != ():
                        continue
                    v0 = ZERO
                    for t, ct in enumerate(payload):
                        if ct != 0:
                            v0 += ct * p.pairing.at(t, x)
                else:
                    if len(xi) != 1 or xi[0] != payload:
                        continue
                    v0 = p.alg.counit_vec[x]
                if v0 == 0:
                    continue
                sub = self.pair_factors(rest, y, yj)
                if sub != 0:
                    total += c * v0 * sub
            out = total
        self._pair_cache[key] = out
        return out

    @staticmethod
    def monomial_factors(h_idx_coeffs, word: Word) -> tuple[Factor, ...]:
        return (("h", h_idx_coeffs),) + tuple(("g", i) for i in word)

    def _basis_factor(self, h_idx: int) -> Factor:
        dim = self.fodc.paired.dual.dim
        return ("h", tuple(ONE if t == h_idx else ZERO for t in range(dim)))

    # -- dual word reduction

    def _rows_for_degree(self, k: int):
        rows = self._dual_rows.get(k)
        if rows is None:
            words = self.wedge.basis.words[k]
            rows = []
            for wb in words:
                factors = tuple(("g", i) for i in wb)
                row = tuple(self._pair_invariant(factors, j) for j in words)
                rows.append(row)
            ech = Echelon()
            for r in rows:
                if not ech.add(r):
                    raise CalculusError(
                        "gamma-word pairing is degenerate; cannot reduce duals"
                    )
            self._dual_rows[k] = rows
        return rows

    def _pair_invariant(self, factors: tuple[Factor, ...], word: Word) -> Fraction:
        """<factors, 1 * w^word> with the unit expanded over the basis."""
        total = ZERO
        for x, cx in enumerate(self.fodc.paired.alg.unit_vec):
            if cx != 0:
                total += cx * self.pair_factors(factors, x, word)
        return total

    def reduce_dual_word(self, word: Word) -> tuple[tuple[Word, Fraction], ...]:
        """Express gamma_word in the gamma basis words of its degree."""
        word = tuple(word)
        k = len(word)
        if k == 0:
            return (((), ONE),)
        if k > self.maxdeg:
            return ()
        hit = self._dual_reduce_cache.get(word)
        if hit is not None:
            return hit
        words = self.wedge.basis.words[k]
        if not words:
            self._dual_reduce_cache[word] = ()
            return ()
        if word in self.wedge.basis.word_pos[k]:
            out = ((word, ONE),)
            self._dual_reduce_cache[word] = out
            return out
        rows = self._rows_for_degree(k)
        factors = tuple(("g", i) for i in word)
        target = tuple(self._pair_invariant(factors, j) for j in words)
        coeffs = solve_in_span(rows, target)
        if coeffs is None:
            raise CalculusError("gamma-word outside the span of basis words")
        out = tuple((wb, c) for wb, c in zip(words, coeffs) if c != 0)
        self._dual_reduce_cache[word] = out
        return out

    # -- actions on graded forms

    def act_factors(self, factors: tuple[Factor, ...], a_idx: int, word: Word) -> dict:
        """(factors) |> e_a w^word as form terms: the graded action
        (-1)^{q |rho_(1)|} rho_(1) <factors, rho_(2)> for dual degree q.

        The Koszul sign (odd functionals anticommute past odd left legs,
        plus the reversal sign q(q-1)/2 relating the graded pairing to the
        plain recursion used by ``pair_factors``) is what makes the action
        a module-algebra action compatible with the graded coproduct; the
        Cartan suite is its arbiter.
        """
        key = (factors, a_idx, word)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        n_gamma = sum(1 for f in factors if f[0] == "g")
        base_sign = -ONE if (n_gamma * (n_gamma - 1) // 2) % 2 else ONE
        out: dict[tuple[int, Word], Fraction] = {}
        for (x, xi, y, yj), c in self.wedge.coproduct_monomial(a_idx, word).items():
            if len(yj) != n_gamma:
                continue
            v = self.pair_factors(factors, y, yj)
            if v != 0:
                sign = -base_sign if (n_gamma * len(xi)) % 2 else base_sign
                k = (x, xi)
                val = out.get(k, ZERO) + sign * c * v
                if val == 0:
                    out.pop(k, None)
                else:
                    out[k] = val
        self._act_cache[key] = out
        return out

    # -- normal-ordering moves

    def move_h_through(self, word: Word, h: Element) -> tuple[tuple[Element, Word], ...]:
        """gamma_word * h = sum (r-moved h) gamma_word' (words keep length)."""
        key = (word, h.coeffs)
        hit = self._move_h_cache.get(key)
        if hit is not None:
            return hit
        if not word:
            out = ((h, ()),) if not h.is_zero else ()
        else:
            i = word[-1]
            rest = word[:-1]
            p = self.fodc.paired
            acc = []
            for j in range(self.fodc.n):
                hj = p.act_on_dual(self.fodc.r[j][i], h)
                if hj.is_zero:
                    continue
                for el, w2 in self.move_h_through(rest, hj):
                    acc.append((el, w2 + (j,)))
            out = tuple(acc)
        self._move_h_cache[key] = out
        return out

    def dual_mono_mul(self, g_idx: int, v: Word, h_idx: int, w: Word) -> dict:
        """(g gamma_v)(h gamma_w) as reduced dual terms."""
        key = (g_idx, v, h_idx, w)
        hit = self._dual_mono_cache.get(key)
        if hit is not None:
            return hit
        D = self.fodc.paired.dual
        out: dict[tuple[int, Word], Fraction] = {}
        if len(v) + len(w) <= self.maxdeg:
            for el, v2 in self.move_h_through(v, D.basis(h_idx)):
                hh = D.basis(g_idx) * el
                if hh.is_zero:
                    continue
                for bw, q in self.reduce_dual_word(v2 + w):
                    for t, ct in enumerate(hh.coeffs):
                        if ct != 0:
                            k = (t, bw)
                            val = out.get(k, ZERO) + q * ct
                            if val == 0:
                                out.pop(k, None)
                            else:
                                out[k] = val
        self._dual_mono_cache[key] = out
        return out

    def move_monomial_past_form(self, g_idx: int, v: Word, b_idx: int, word: Word) -> dict:
        """(g gamma_v) * (e_b w^word) normal ordered, as cross terms."""
        key = (g_idx, v, b_idx, word)
        hit = self._move_form_cache.get(key)
        if hit is not None:
            return hit
        D = self.fodc.paired.dual
        out: dict[tuple[int, Word, int, Word], Fraction] = {}
        if not v:
            for c, l, r in D.coproduct(D.basis(g_idx)).terms:
                act = self.act_factors((self._basis_factor(l),), b_idx, word)
                for (t, k), vv in act.items():
                    kk = (t, k, r, ())
                    val = out.get(kk, ZERO) + c * vv
                    if val == 0:
                        out.pop(kk, None)
                    else:
                        out[kk] = val
        else:
            i = v[-1]
            rest = v[:-1]
            # gamma_i rho = (-1)^{deg rho} rho gamma_i + sum_j (gamma_j |> rho) f^j_i
            pass_sign = -ONE if len(word) % 2 else ONE
            sub = self.move_monomial_past_form(g_idx, rest, b_idx, word)
            for (a2, i2, h2, w2), c in sub.items():
                if len(w2) + 1 > self.maxdeg:
                    continue
                for bw, q in self.reduce_dual_word(w2 + (i,)):
                    kk = (a2, i2, h2, bw)
                    val = out.get(kk, ZERO) + pass_sign * c * q
                    if val == 0:
                        out.pop(kk, None)
                    else:
                        out[kk] = val
            for j in range(self.fodc.n):
                gj_act = self.act_factors((("g", j),), b_idx, word)
                if not gj_act:
                    continue
                fji = self.fodc.f[j][i]
                if fji.is_zero:
                    continue
                for (t, k), vv in gj_act.items():
                    sub2 = self.move_monomial_past_form(g_idx, rest, t, k)
                    for (a2, i2, h2, w2), c2 in sub2.items():
                        # append f^j_i on the right of the dual part
                        for ft, fc in enumerate(fji.coeffs):
                            if fc == 0:
                                continue
                            tail = self.dual_mono_mul(h2, w2, ft, ())
                            for (t3, w3), c3 in tail.items():
                                kk = (a2, i2, t3, w3)
                                val = out.get(kk, ZERO) + vv * c2 * fc * c3
                                if val == 0:
                                    out.pop(kk, None)
                                else:
                                    out[kk] = val
        self._move_form_cache[key] = out
        return out


# ---------------------------------------------------------------------------
# element classes


class DualElement:
    """Canonical sum of normal-ordered dual monomials h * gamma_word."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: CrossAlgebra, terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def dual_degrees(self) -> set[int]:
        return {len(w) for (_, w) in self.terms}

    @property
    def is_vector_field(self) -> bool:
        return all(w == () for (_, w) in self.terms)

    def as_element(self) -> Element:
        """The base-dual element, defined only for dual degree zero."""
        D = self.ctx.fodc.paired.dual
        acc = [ZERO] * D.dim
        for (h, w), c in self.terms.items():
            if w != ():
                raise CalculusError("dual element has positive degree")
            acc[h] += c
        return D.element(acc)

    def _merge(self, other: "DualElement", sign: int) -> "DualElement":
        if self.ctx is not other.ctx:
            raise CalculusError("mixed cross contexts")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + sign * v
        return DualElement(self.ctx, out)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __neg__(self):
        return DualElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def scale(self, q) -> "DualElement":
        q = Fraction(q)
        return DualElement(self.ctx, {k: q * v for k, v in self.terms.items()})

    def __rmul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, DualElement):
            return dual_multiply(self, other)
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, DualElement)
            and self.ctx is other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.ctx), tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        from .fmt import format_cross_terms

        hopf = self.ctx.fodc.paired.alg
        one = hopf.unit_vec
        terms: dict = {}
        for (h, w), c in self.terms.items():
            for x, cx in enumerate(one):
                if cx != 0:
                    terms[(x, (), h, w)] = c * cx
        return format_cross_terms(terms, hopf, self.ctx.dual_one_index)

    __repr__ = __str__


class CrossElement:
    """Canonical normal-ordered element of the cross-product algebra."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: CrossAlgebra, terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def form_part(self) -> GradedForm:
        """The wedge-algebra part, defined when the dual tail is trivial."""
        e = self.ctx.dual_one_index
        terms: dict = {}
        for (a, w, h, dw), c in self.terms.items():
            if dw != () or h != e:
                raise CalculusError("element has a nontrivial dual part")
            terms[(a, w)] = terms.get((a, w), ZERO) + c
        return GradedForm(self.ctx.wedge, terms)

    def dual_part(self) -> DualElement:
        """The dual part, defined when the form part is the unit."""
        A = self.ctx.fodc.paired.alg
        by_tail: dict[tuple[int, Word], dict[int, Fraction]] = {}
        for (a, w, h, dw), c in self.terms.items():
            if w != ():
                raise CalculusError("element has a nontrivial form part")
            by_tail.setdefault((h, dw), {})[a] = c
        out: dict = {}
        for tail, coeffs in by_tail.items():
            scale = None
            for x, cx in enumerate(A.unit_vec):
                got = coeffs.get(x, ZERO)
                if cx == 0:
                    if got != 0:
                        raise CalculusError("element has a nontrivial form part")
                    continue
                s = got / cx
                if scale is None:
                    scale = s
                elif s != scale:
                    raise CalculusError("element has a nontrivial form part")
            if scale:
                out[tail] = scale
        return DualElement(self.ctx, out)

    def _merge(self, other: "CrossElement", sign: int) -> "CrossElement":
        if self.ctx is not other.ctx:
            raise CalculusError("mixed cross contexts")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + sign * v
        return CrossElement(self.ctx, out)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __neg__(self):
        return CrossElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def scale(self, q) -> "CrossElement":
        q = Fraction(q)
        return CrossElement(self.ctx, {k: q * v for k, v in self.terms.items()})

    def __rmul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, CrossElement):
            return cross_multiply(self, other)
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, CrossElement)
            and self.ctx is other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.ctx), tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        from .fmt import format_cross_terms

        return format_cross_terms(
            self.terms, self.ctx.fodc.paired.alg, self.ctx.dual_one_index
        )

    __repr__ = __str__


# ---------------------------------------------------------------------------
# operations


def pair(theta: DualElement, rho: GradedForm) -> Fraction:
    """<theta, rho>; degree-diagonal, zero across degrees."""
    ctx = theta.ctx
    if rho.ctx is not ctx.wedge:
        raise CalculusError("mixed cross contexts")
    total = ZERO
    for (h, w), c1 in theta.terms.items():
        factors = (ctx._basis_factor(h),) + tuple(("g", i) for i in w)
        for (a, fw), c2 in rho.terms.items():
            if len(fw) != len(w):
                continue
            v = ctx.pair_factors(factors, a, fw)
            if v != 0:
                total += c1 * c2 * v
    return total


def gamma_coproduct(ctx: CrossAlgebra, i: int) -> list[tuple[DualElement, DualElement]]:
    """Delta(gamma_i) = 1 (x) gamma_i + gamma_j (x) f^j_i as element pairs."""
    if not 0 <= i < ctx.fodc.n:
        raise CalculusError("gamma index out of range")
    out = [(ctx.dual_one(), ctx.gamma(i))]
    for j in range(ctx.fodc.n):
        fji = ctx.fodc.f[j][i]
        if not fji.is_zero:
            out.append((ctx.gamma(j), ctx.dual_from_element(fji)))
    return out


def dual_multiply(theta: DualElement, phi: DualElement) -> DualElement:
    if theta.ctx is not phi.ctx:
        raise CalculusError("mixed cross contexts")
    ctx = theta.ctx
    out: dict = {}
    for (g, v), c1 in theta.terms.items():
        for (h, w), c2 in phi.terms.items():
            prod = ctx.dual_mono_mul(g, v, h, w)
            c = c1 * c2
            for k, vv in prod.items():
                val = out.get(k, ZERO) + c * vv
                if val == 0:
                    out.pop(k, None)
                else:
                    out[k] = val
    return DualElement(ctx, out)


def cross_multiply(x: CrossElement, y: CrossElement) -> CrossElement:
    if x.ctx is not y.ctx:
        raise CalculusError("mixed cross contexts")
    ctx = x.ctx
    out: dict = {}
    for (a, wi, g, v), c1 in x.terms.items():
        for (b, wj, h, w), c2 in y.terms.items():
            c12 = c1 * c2
            mid = ctx.move_monomial_past_form(g, v, b, wj)
            for (b2, wj2, h2, w2), cm in mid.items():
                left = ctx.wedge.mono_mul(a, wi, b2, wj2)
                if not left:
                    continue
                right = ctx.dual_mono_mul(h2, w2, h, w)
                if not right:
                    continue
                c = c12 * cm
                for (t, k), vl in left.items():
                    for (t2, k2), vr in right.items():
                        kk = (t, k, t2, k2)
                        val = out.get(kk, ZERO) + c * vl * vr
                        if val == 0:
                            out.pop(kk, None)
                        else:
                            out[kk] = val
    return CrossElement(ctx, out)


def dual_act(theta: DualElement, rho: GradedForm) -> GradedForm:
    """theta |> rho = rho_(1) <theta, rho_(2)>."""
    ctx = theta.ctx
    if rho.ctx is not ctx.wedge:
        raise CalculusError("mixed cross contexts")
    out: dict = {}
    for (h, w), c1 in theta.terms.items():
        factors = (ctx._basis_factor(h),) + tuple(("g", i) for i in w)
        for (a, fw), c2 in rho.terms.items():
            for k, v in ctx.act_factors(factors, a, fw).items():
                val = out.get(k, ZERO) + c1 * c2 * v
                if val == 0:
                    out.pop(k, None)
                else:
                    out[k] = val
    return GradedForm(ctx.wedge, out)


def inner_derivation(ctx: CrossAlgebra, i: int, rho: GradedForm) -> GradedForm:
    """iota_i = gamma_i |>; drops form degree by exactly one."""
    return dual_act(ctx.gamma(i), rho)


LieOperand = Union[GradedForm, DualElement, CrossElement]


def _adjoint_on_dual(ctx: CrossAlgebra, h: Element, theta: DualElement) -> DualElement:
    D = ctx.fodc.paired.dual
    out = DualElement(ctx, {})
    for c, l, r in D.coproduct(h).terms:
        left = DualElement(ctx, {(l, ()): ONE})
        right = ctx.dual_from_element(D.antipode(D.basis(r)))
        out += dual_multiply(dual_multiply(left, theta), right).scale(c)
    return out


def lie_derivative(h, x: LieOperand) -> LieOperand:
    """L_h: coproduct-pairing action on forms, adjoint action on duals,
    extended to mixed elements through the coproduct of h.

    ``h`` may be a degree-zero DualElement or a base-dual Element.
    """
    if isinstance(h, Element):
        if isinstance(x, GradedForm):
            ctx = CrossAlgebra.for_calculus(x.ctx.fodc, x.ctx.maxdeg)
        else:
            ctx = x.ctx
        h = ctx.dual_from_element(h)
    if not isinstance(h, DualElement) or not h.is_vector_field:
        raise CalculusError("Lie derivative index must be a vector field")
    ctx = h.ctx
    helem = h.as_element()

    if isinstance(x, GradedForm):
        return dual_act(h, x)
    if isinstance(x, DualElement):
        return _adjoint_on_dual(ctx, helem, x)
    if isinstance(x, CrossElement):
        D = ctx.fodc.paired.dual
        out = CrossElement(ctx, {})
        for (a, wi, g, v), c in x.terms.items():
            theta = DualElement(ctx, {(g, v): ONE})
            for cc, l, r in D.coproduct(helem).terms:
                form_terms = ctx.act_factors((ctx._basis_factor(l),), a, wi)
                if not form_terms:
                    continue
                dual_res = _adjoint_on_dual(ctx, D.basis(r), theta)
                if dual_res.is_zero:
                    continue
                acc: dict = {}
                for (t, k), vf in form_terms.items():
                    for (t2, k2), vd in dual_res.terms.items():
                        kk = (t, k, t2, k2)
                        acc[kk] = acc.get(kk, ZERO) + vf * vd
                out += CrossElement(ctx, acc).scale(c * cc)
        return out
    raise CalculusError("unsupported Lie derivative operand")


def cross_act(x: CrossElement, rho: GradedForm) -> GradedForm:
    """Action of the cross algebra on the wedge algebra:
    (rho' theta) |> rho = rho' wedge (theta |> rho)."""
    ctx = x.ctx
    out = GradedForm.zero(ctx.wedge)
    for (a, wi, h, w), c in x.terms.items():
        theta = DualElement(ctx, {(h, w): ONE})
        acted = dual_act(theta, rho)
        if acted.is_zero:
            continue
        left = GradedForm.monomial(ctx.wedge, a, wi)
        out += wedge_multiply(left, acted).scale(c)
    return out

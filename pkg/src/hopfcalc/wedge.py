"""The graded wedge algebra of a bicovariant calculus.

Degree d > 1 is the quotient of invariant tensor words by the relations
generated in adjacent slots by ker(I - sigma), where sigma is the braiding
with entries <f^m_j, r^n_i> (row (m,n), column (i,j)).  A deterministic
basis of each quotient is chosen with ``complement_basis`` and every raw
word carries a precomputed reduction to that basis, so graded forms have a
unique normal form: sums of e_a w^I with I a basis word.

The graded coproduct extends the algebra coproduct and
Delta(w^i) = 1 (x) w^i + w^j (x) r^i_j multiplicatively, with the Koszul
sign (x (x) y)(u (x) v) = (-1)^{deg y deg u} xu (x) yv.  The exterior
derivative acts on monomials by the graded Leibniz rule, with d(w^i)
expanded from the presentation w^i = sum_k a_k d(b_k).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .calculus import CalculusError, FodcData, OneForm
from .hopf import Element
from .linalg import Matrix, complement_basis, invert, kernel_basis, span_basis
from .report import SuiteReport

ZERO = Fraction(0)
ONE = Fraction(1)

Word = tuple[int, ...]


class Braiding:
    """Braiding matrix on invariant 2-tensors, acting on word coordinates."""

    __slots__ = ("n", "sigma")

    def __init__(self, n: int, sigma: Matrix):
        self.n = n
        self.sigma = sigma

    def entry(self, m: int, n_: int, i: int, j: int) -> Fraction:
        return self.sigma.at(m * self.n + n_, i * self.n + j)


def compute_braiding(d: FodcData) -> Braiding:
    """sigma^{mn}_{ij} = <f^m_j, r^n_i> as an n^2 x n^2 exact matrix."""
    n = d.n
    p = d.paired
    entries = []
    for m in range(n):
        for n_ in range(n):
            for i in range(n):
                for j in range(n):
                    entries.append(p.pair(d.f[m][j], d.r[n_][i]))
    return Braiding(n, Matrix(n * n, n * n, entries))


def _word_to_index(word: Word, n: int) -> int:
    idx = 0
    for c in word:
        idx = idx * n + c
    return idx


def _index_to_word(idx: int, n: int, length: int) -> Word:
    out = []
    for _ in range(length):
        out.append(idx % n)
        idx //= n
    return tuple(reversed(out))


class ExteriorBasis:
    """Chosen basis words of each exterior power with raw-word reductions."""

    __slots__ = ("n", "maxdeg", "words", "word_pos", "reductions", "relation_bases")

    def __init__(self, n: int, maxdeg: int):
        self.n = n
        self.maxdeg = maxdeg
        self.words: list[list[Word]] = []
        self.word_pos: list[dict[Word, int]] = []
        # reductions[d][raw word] = ((basis word, coeff), ...)
        self.reductions: list[dict[Word, tuple[tuple[Word, Fraction], ...]]] = []
        self.relation_bases: list[list[tuple[Fraction, ...]]] = []

    @property
    def dims(self) -> list[int]:
        return [len(ws) for ws in self.words]

    def dim(self, degree: int) -> int:
        if degree < 0 or degree > self.maxdeg:
            return 0
        return len(self.words[degree])

    def reduce_word(self, word: Word) -> tuple[tuple[Word, Fraction], ...]:
        d = len(word)
        if d > self.maxdeg:
            return ()
        return self.reductions[d][word]


def build_exterior(d: FodcData, maxdeg: int, braiding: Braiding | None = None) -> ExteriorBasis:
    """Quotient bases and reduction tables for degrees 0..maxdeg."""
    if maxdeg < 1:
        raise CalculusError("maxdeg must be at least 1")
    n = d.n
    if braiding is None:
        braiding = compute_braiding(d)
    basis = ExteriorBasis(n, maxdeg)

    # degree 0 and 1 are free
    basis.words.append([()])
    basis.word_pos.append({(): 0})
    basis.reductions.append({(): (((), ONE),)})
    basis.relation_bases.append([])
    if maxdeg >= 1:
        ws = [(i,) for i in range(n)]
        basis.words.append(ws)
        basis.word_pos.append({w: k for k, w in enumerate(ws)})
        basis.reductions.append({w: ((w, ONE),) for w in ws})
        basis.relation_bases.append([])

    k2 = kernel_basis(Matrix.identity(n * n) - braiding.sigma)

    for deg in range(2, maxdeg + 1):
        size = n ** deg
        if deg == 2:
            gens: Iterable = k2
        else:
            gens = []
            for pos in range(deg - 1):
                left = n ** pos
                right = n ** (deg - 2 - pos)
                for kv in k2:
                    for li in range(left):
                        for ri in range(right):
                            v = [ZERO] * size
                            for two_idx, c in enumerate(kv):
                                if c != 0:
                                    v[(li * (n * n) + two_idx) * right + ri] = c
                            gens.append(v)
        rel_basis = span_basis(gens)
        chosen = complement_basis(rel_basis, size) if rel_basis else list(range(size))
        words = [_index_to_word(i, n, deg) for i in chosen]
        basis.words.append(words)
        basis.word_pos.append({w: k for k, w in enumerate(words)})
        basis.relation_bases.append([tuple(v) for v in rel_basis])

        reductions: dict[Word, tuple[tuple[Word, Fraction], ...]] = {}
        if not words:
            for idx in range(size):
                reductions[_index_to_word(idx, n, deg)] = ()
        else:
            # columns: relation basis then chosen unit vectors; the inverse
            # rows past the relations give each raw word's basis coordinates
            cols = list(rel_basis) + [
                tuple(ONE if t == c else ZERO for t in range(size)) for c in chosen
            ]
            mat = Matrix(size, size, (cols[j][i] for i in range(size) for j in range(size)))
            inv = invert(mat)
            offset = len(rel_basis)
            for idx in range(size):
                word = _index_to_word(idx, n, deg)
                terms = []
                for t, bw in enumerate(words):
                    coeff = inv.at(offset + t, idx)
                    if coeff != 0:
                        terms.append((bw, coeff))
                reductions[word] = tuple(terms)
        basis.reductions.append(reductions)
    return basis


# ---------------------------------------------------------------------------
# graded forms


class GradedForm:
    """Element of the wedge algebra: canonical sum of e_a w^I monomials."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "WedgeAlgebra", terms: dict[tuple[int, Word], Fraction]):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v != 0}

    # -- constructors

    @classmethod
    def zero(cls, ctx: "WedgeAlgebra") -> "GradedForm":
        return cls(ctx, {})

    @classmethod
    def from_element(cls, ctx: "WedgeAlgebra", a: Element) -> "GradedForm":
        return cls(ctx, {(i, ()): c for i, c in enumerate(a.coeffs) if c != 0})

    @classmethod
    def from_one_form(cls, ctx: "WedgeAlgebra", of: OneForm) -> "GradedForm":
        terms: dict[tuple[int, Word], Fraction] = {}
        for i, comp in enumerate(of.components):
            for t, c in enumerate(comp.coeffs):
                if c != 0:
                    terms[(t, (i,))] = terms.get((t, (i,)), ZERO) + c
        return cls(ctx, terms)

    @classmethod
    def word(cls, ctx: "WedgeAlgebra", word: Word) -> "GradedForm":
        """1 * w^word, reduced."""
        terms: dict[tuple[int, Word], Fraction] = {}
        for bw, q in ctx.basis.reduce_word(tuple(word)):
            for t, c in enumerate(ctx.fodc.paired.alg.unit_vec):
                if c != 0:
                    key = (t, bw)
                    terms[key] = terms.get(key, ZERO) + q * c
        return cls(ctx, terms)

    @classmethod
    def one(cls, ctx: "WedgeAlgebra") -> "GradedForm":
        return cls.from_element(ctx, ctx.fodc.paired.alg.one())

    @classmethod
    def monomial(cls, ctx: "WedgeAlgebra", a_idx: int, word: Word, coeff=ONE) -> "GradedForm":
        return cls(ctx, {(a_idx, tuple(word)): Fraction(coeff)})

    # -- structure

    def degrees(self) -> set[int]:
        return {len(w) for (_, w) in self.terms}

    def component(self, degree: int) -> "GradedForm":
        return GradedForm(
            self.ctx, {k: v for k, v in self.terms.items() if len(k[1]) == degree}
        )

    def degree0_element(self) -> Element:
        A = self.ctx.fodc.paired.alg
        acc = [ZERO] * A.dim
        for (a, w), c in self.terms.items():
            if w == ():
                acc[a] += c
        return A.element(acc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic

    def _merge(self, other: "GradedForm", sign: int) -> "GradedForm":
        if self.ctx is not other.ctx:
            raise CalculusError("mixed wedge contexts")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + sign * v
        return GradedForm(self.ctx, out)

    def __add__(self, other: "GradedForm") -> "GradedForm":
        return self._merge(other, 1)

    def __sub__(self, other: "GradedForm") -> "GradedForm":
        return self._merge(other, -1)

    def __neg__(self) -> "GradedForm":
        return GradedForm(self.ctx, {k: -v for k, v in self.terms.items()})

    def scale(self, q) -> "GradedForm":
        q = Fraction(q)
        return GradedForm(self.ctx, {k: q * v for k, v in self.terms.items()})

    def __rmul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, GradedForm):
            return wedge_multiply(self, other)
        return NotImplemented

    def d(self) -> "GradedForm":
        return exterior_derivative(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedForm)
            and self.ctx is other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.ctx), tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        from .fmt import format_cross_terms

        hopf = self.ctx.fodc.paired.alg
        ident = self.ctx.identity_dual_index
        cross_terms = {(a, w, ident, ()): c for (a, w), c in self.terms.items()}
        return format_cross_terms(cross_terms, hopf, ident)

    __repr__ = __str__


class WedgeAlgebra:
    """Wedge-algebra context: braiding, exterior basis, and operation caches."""

    def __init__(self, fodc: FodcData, maxdeg: int):
        self.fodc = fodc
        self.maxdeg = maxdeg
        self.braiding = compute_braiding(fodc)
        self.basis = build_exterior(fodc, maxdeg, self.braiding)
        self._pass_cache: dict[tuple[Word, tuple], tuple[tuple[Element, Word], ...]] = {}
        self._mono_cache: dict[tuple, dict[tuple[int, Word], Fraction]] = {}
        self._coprod_cache: dict[tuple[int, Word], dict] = {}
        self._dword_cache: dict[Word, GradedForm] = {}
        self._domega_cache: dict[int, GradedForm] = {}
        # the dual unit of the base Hopf pair, used only for printing
        dual_one = fodc.paired.dual.one()
        sup = dual_one.support()
        self.identity_dual_index = sup[0] if len(sup) == 1 else -1

    @classmethod
    def for_calculus(cls, fodc: FodcData, maxdeg: int) -> "WedgeAlgebra":
        key = ("wedge", maxdeg)
        ctx = fodc._contexts.get(key)
        if ctx is None:
            ctx = cls(fodc, maxdeg)
            fodc._contexts[key] = ctx
        return ctx

    # -- internal rewriting helpers

    def pass_function(self, word: Word, b: Element) -> tuple[tuple[Element, Word], ...]:
        """Rewrite w^word * b as a sum (function, raw word) with the function
        on the left; words keep their length."""
        key = (word, b.coeffs)
        hit = self._pass_cache.get(key)
        if hit is not None:
            return hit
        if not word:
            out = ((b, ()),) if not b.is_zero else ()
        else:
            i = word[-1]
            rest = word[:-1]
            acc: list[tuple[Element, Word]] = []
            p = self.fodc.paired
            for j in range(self.fodc.n):
                bj = p.left_act(self.fodc.f[i][j], b)
                if bj.is_zero:
                    continue
                for el, w2 in self.pass_function(rest, bj):
                    acc.append((el, w2 + (j,)))
            out = tuple(acc)
        self._pass_cache[key] = out
        return out

    def mono_mul(self, a_idx: int, wi: Word, b_idx: int, wj: Word) -> dict[tuple[int, Word], Fraction]:
        """(e_a w^I)(e_b w^J) as reduced canonical terms."""
        key = (a_idx, wi, b_idx, wj)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        out: dict[tuple[int, Word], Fraction] = {}
        total = len(wi) + len(wj)
        if total <= self.maxdeg:
            A = self.fodc.paired.alg
            for el, wi2 in self.pass_function(wi, A.basis(b_idx)):
                coeff_el = A.basis(a_idx) * el
                if coeff_el.is_zero:
                    continue
                for bw, q in self.basis.reduce_word(wi2 + wj):
                    for t, ct in enumerate(coeff_el.coeffs):
                        if ct != 0:
                            k = (t, bw)
                            val = out.get(k, ZERO) + q * ct
                            if val == 0:
                                out.pop(k, None)
                            else:
                                out[k] = val
        self._mono_cache[key] = out
        return out

    def append_word(self, gf: GradedForm, word: Word) -> GradedForm:
        """gf * (1 w^word): append letters on the right (nothing to commute)."""
        out: dict[tuple[int, Word], Fraction] = {}
        for (a, w), c in gf.terms.items():
            if len(w) + len(word) > self.maxdeg:
                continue
            for bw, q in self.basis.reduce_word(w + word):
                k = (a, bw)
                out[k] = out.get(k, ZERO) + c * q
        return GradedForm(self, out)

    def element_times(self, a: Element, gf: GradedForm) -> GradedForm:
        """a * gf: multiply the left coefficients."""
        A = self.fodc.paired.alg
        out: dict[tuple[int, Word], Fraction] = {}
        for (b, w), c in gf.terms.items():
            prod = a * A.basis(b)
            for t, ct in enumerate(prod.coeffs):
                if ct != 0:
                    k = (t, w)
                    out[k] = out.get(k, ZERO) + c * ct
        return GradedForm(self, out)

    def domega(self, i: int) -> GradedForm:
        """d(w^i) expanded from the presentation w^i = sum_k a_k d(b_k)."""
        hit = self._domega_cache.get(i)
        if hit is None:
            total = GradedForm.zero(self)
            for a, b in self.fodc.omega_presentation[i]:
                da = GradedForm.from_one_form(self, self.fodc.differential(a))
                db = GradedForm.from_one_form(self, self.fodc.differential(b))
                total += wedge_multiply(da, db)
            self._domega_cache[i] = hit = total
        return hit

    def dword(self, word: Word) -> GradedForm:
        """d(w^word) by the graded Leibniz rule."""
        hit = self._dword_cache.get(word)
        if hit is not None:
            return hit
        if not word:
            out = GradedForm.zero(self)
        elif len(word) == 1:
            out = self.domega(word[0])
        else:
            head, rest = word[0], word[1:]
            first = self.append_word(self.domega(head), rest)
            second = wedge_multiply(GradedForm.word(self, (head,)), self.dword(rest))
            out = first - second
        self._dword_cache[word] = out
        return out

    def coproduct_monomial(self, a_idx: int, word: Word) -> dict:
        """Graded coproduct of e_a w^word as {(x, I, y, J): coeff}."""
        key = (a_idx, word)
        hit = self._coprod_cache.get(key)
        if hit is not None:
            return hit
        A = self.fodc.paired.alg
        terms: dict[tuple[int, Word, int, Word], Fraction] = {
            (l, (), r, ()): c for c, l, r in A.coproduct(A.basis(a_idx)).terms
        }
        for i in word:
            nxt: dict[tuple[int, Word, int, Word], Fraction] = {}
            for (x, xi, y, yj), c in terms.items():
                # branch 1 (x) w^i: append on the right leg, no sign
                if len(yj) + 1 <= self.maxdeg:
                    for bw, q in self.basis.reduce_word(yj + (i,)):
                        k = (x, xi, y, bw)
                        nxt[k] = nxt.get(k, ZERO) + c * q
                # branch w^j (x) r^i_j: Koszul sign from moving w^j past the
                # right leg of the current term
                sign = -ONE if len(yj) % 2 else ONE
                if len(xi) + 1 > self.maxdeg:
                    continue
                for j in range(self.fodc.n):
                    rij = self.fodc.r[i][j]
                    if rij.is_zero:
                        continue
                    # right leg times the function r^i_j
                    racc: dict[tuple[int, Word], Fraction] = {}
                    for el, yj2 in self.pass_function(yj, rij):
                        prod = A.basis(y) * el
                        for bw, q in self.basis.reduce_word(yj2):
                            for t, ct in enumerate(prod.coeffs):
                                if ct != 0:
                                    k2 = (t, bw)
                                    racc[k2] = racc.get(k2, ZERO) + q * ct
                    if not racc:
                        continue
                    for lbw, lq in self.basis.reduce_word(xi + (j,)):
                        for (t, bw), rv in racc.items():
                            k = (x, lbw, t, bw)
                            val = nxt.get(k, ZERO) + sign * c * lq * rv
                            if val == 0:
                                nxt.pop(k, None)
                            else:
                                nxt[k] = val
            terms = {k: v for k, v in nxt.items() if v != 0}
        self._coprod_cache[key] = terms
        return terms


def wedge_multiply(x: GradedForm, y: GradedForm) -> GradedForm:
    if x.ctx is not y.ctx:
        raise CalculusError("mixed wedge contexts")
    ctx = x.ctx
    out: dict[tuple[int, Word], Fraction] = {}
    for (a, wi), ca in x.terms.items():
        for (b, wj), cb in y.terms.items():
            prod = ctx.mono_mul(a, wi, b, wj)
            if not prod:
                continue
            cab = ca * cb
            for k, v in prod.items():
                val = out.get(k, ZERO) + cab * v
                if val == 0:
                    out.pop(k, None)
                else:
                    out[k] = val
    return GradedForm(ctx, out)


def exterior_derivative(x: GradedForm) -> GradedForm:
    ctx = x.ctx
    total = GradedForm.zero(ctx)
    A = ctx.fodc.paired.alg
    for (a, w), c in x.terms.items():
        da = GradedForm.from_one_form(ctx, ctx.fodc.differential(A.basis(a)))
        part = ctx.append_word(da, w) + ctx.element_times(A.basis(a), ctx.dword(w))
        total += part.scale(c)
    return total


def graded_coproduct(x: GradedForm) -> "FormTensor":
    ctx = x.ctx
    acc: dict[tuple[int, Word, int, Word], Fraction] = {}
    for (a, w), c in x.terms.items():
        for k, v in ctx.coproduct_monomial(a, w).items():
            val = acc.get(k, ZERO) + c * v
            if val == 0:
                acc.pop(k, None)
            else:
                acc[k] = val
    return FormTensor(ctx, acc)


class FormTensor:
    """Canonical element of (wedge algebra) (x) (wedge algebra)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: WedgeAlgebra, terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormTensor)
            and self.ctx is other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.ctx), tuple(sorted(self.terms.items()))))

    def multiply(self, other: "FormTensor", use_koszul: bool = True) -> "FormTensor":
        ctx = self.ctx
        out: dict = {}
        for (x1, i1, y1, j1), c1 in self.terms.items():
            for (x2, i2, y2, j2), c2 in other.terms.items():
                sign = -ONE if (use_koszul and (len(j1) * len(i2)) % 2) else ONE
                left = ctx.mono_mul(x1, i1, x2, i2)
                if not left:
                    continue
                right = ctx.mono_mul(y1, j1, y2, j2)
                if not right:
                    continue
                c = sign * c1 * c2
                for (xl, il), vl in left.items():
                    for (yr, jr), vr in right.items():
                        k = (xl, il, yr, jr)
                        val = out.get(k, ZERO) + c * vl * vr
                        if val == 0:
                            out.pop(k, None)
                        else:
                            out[k] = val
        return FormTensor(ctx, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (x, i, y, j), c in sorted(self.terms.items()):
            parts.append(f"{c}*[e{x} w{list(i)}](x)[e{y} w{list(j)}]")
        return " + ".join(parts)


def _rec(rep: SuiteReport, name: str, lhs, rhs) -> bool:
    ok = lhs == rhs
    if ok:
        rep.record(name, "=", "=", True)
    else:
        rep.record(name, lhs, rhs, False)
    return ok


def check_graded_bialgebra(d: FodcData, maxdeg: int, use_koszul: bool = True) -> SuiteReport:
    """Coassociativity, counit law, counit multiplicativity, and the algebra-map
    property of the graded coproduct, on all basis monomials up to maxdeg."""
    ctx = WedgeAlgebra.for_calculus(d, maxdeg)
    rep = SuiteReport("graded_bialgebra")
    A = d.paired.alg
    monos = [
        (a, w)
        for deg in range(maxdeg + 1)
        for w in ctx.basis.words[deg]
        for a in range(A.dim)
    ]

    def eps(a_idx: int, w: Word) -> Fraction:
        return A.counit_vec[a_idx] if not w else ZERO

    for a, w in monos:
        t = ctx.coproduct_monomial(a, w)
        left: dict = {}
        right: dict = {}
        for (x, i, y, j), c in t.items():
            for (u, iu, v, iv), c2 in ctx.coproduct_monomial(x, i).items():
                k = (u, iu, v, iv, y, j)
                left[k] = left.get(k, ZERO) + c * c2
            for (u, iu, v, iv), c2 in ctx.coproduct_monomial(y, j).items():
                k = (x, i, u, iu, v, iv)
                right[k] = right.get(k, ZERO) + c * c2
        left = {k: v for k, v in left.items() if v != 0}
        right = {k: v for k, v in right.items() if v != 0}
        _rec(rep, f"coassociativity e{a} w{list(w)}", left, right)

        lcounit: dict = {}
        rcounit: dict = {}
        for (x, i, y, j), c in t.items():
            v = eps(x, i)
            if v != 0:
                k = (y, j)
                lcounit[k] = lcounit.get(k, ZERO) + c * v
            v = eps(y, j)
            if v != 0:
                k = (x, i)
                rcounit[k] = rcounit.get(k, ZERO) + c * v
        lcounit = {k: v for k, v in lcounit.items() if v != 0}
        rcounit = {k: v for k, v in rcounit.items() if v != 0}
        want = {(a, w): ONE}
        _rec(rep, f"counit law e{a} w{list(w)}", (lcounit, rcounit), (want, want))

    for a, wi in monos:
        for b, wj in monos:
            if len(wi) + len(wj) > maxdeg:
                continue
            prod = ctx.mono_mul(a, wi, b, wj)
            lhs_terms: dict = {}
            for (t, w), c in prod.items():
                for k, v in ctx.coproduct_monomial(t, w).items():
                    val = lhs_terms.get(k, ZERO) + c * v
                    if val == 0:
                        lhs_terms.pop(k, None)
                    else:
                        lhs_terms[k] = val
            lhs = FormTensor(ctx, lhs_terms)
            rhs = FormTensor(ctx, ctx.coproduct_monomial(a, wi)).multiply(
                FormTensor(ctx, ctx.coproduct_monomial(b, wj)), use_koszul=use_koszul
            )
            _rec(rep, f"coproduct multiplicative e{a} w{list(wi)} * e{b} w{list(wj)}", lhs, rhs)
            eps_prod = sum((c * eps(t, w) for (t, w), c in prod.items()), ZERO)
            rep.record(
                f"counit multiplicative e{a} w{list(wi)} * e{b} w{list(wj)}",
                eps_prod,
                eps(a, wi) * eps(b, wj),
                eps_prod == eps(a, wi) * eps(b, wj),
            )
    return rep

"""Calculus spec files, the expression language, and normalization.

Spec file format (sectioned, indentation-free)::

    [group]
    elements = e g
    e g
    g e
    [subset]
    generators = g
    [options]
    max_degree = 3

The table rows are whitespace-separated name lists, row i listing the
products (element_i * element_j).  ``[subset]`` names the ad-invariant set
that induces the calculus; ``[options]`` currently knows ``max_degree``
(default 3).

Expression grammar (recursive descent, single-token lookahead)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom | '(' expr ')' | 'd' '(' expr ')'
            | 'L' '(' expr ';' expr ')' | 'iota' '(' index ';' expr ')'
            | '<' expr ',' expr '>' | rational
    atom   := 'e' '[' name ']' | 'u' '[' name ']' | 'w' '[' index ']'
            | 'chi' '[' index ']' | 'gamma' '[' index ']'
            | 'f' '[' index ',' index ']'

Indices are 1-based in the surface syntax.  Evaluation normal-orders
through the cross-product operations; ``print_normal`` renders results in
the same grammar, and re-evaluating the printed form reproduces the value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .calculus import FodcData, finite_group_calculus
from .crossprod import (
    CrossAlgebra,
    CrossElement,
    cross_multiply,
    dual_act,
    inner_derivation,
    lie_derivative,
    pair,
)
from .fmt import format_cross_terms, format_scalar
from .hopf import GroupTable, HopfCalcError, NotAGroupError
from .wedge import GradedForm, exterior_derivative

Value = Union[Fraction, CrossElement]


class DslError(HopfCalcError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        if line:
            message = f"{line}:{col}: {message}"
        super().__init__(message)


class DslSyntaxError(DslError):
    pass


class DslNameError(DslError):
    pass


class DslTypeError(DslError):
    pass


class SpecError(HopfCalcError):
    pass


# ---------------------------------------------------------------------------
# calculus spec files


@dataclass(frozen=True)
class CalculusSpec:
    group: GroupTable
    names: tuple[str, ...]
    subset: tuple[int, ...]
    max_degree: int
    label: str = ""

    def build(self) -> FodcData:
        return finite_group_calculus(self.group, list(self.subset), names=self.names,
                                      name=self.label)


def parse_spec_text(text: str, label: str = "") -> CalculusSpec:
    section = None
    names: list[str] = []
    rows: list[list[str]] = []
    subset_names: list[str] = []
    options: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("group", "subset", "options"):
                raise SpecError(f"line {lineno}: unknown section [{section}]")
            continue
        if section is None:
            raise SpecError(f"line {lineno}: content before any section header")
        if "=" in line:
            key, _, value = line.partition("=")
            key = key.strip().lower()
            value = value.strip()
            if section == "group" and key == "elements":
                names = value.split()
            elif section == "subset" and key == "generators":
                subset_names = value.split()
            elif section == "options":
                options[key] = value
            else:
                raise SpecError(f"line {lineno}: unknown key '{key}' in [{section}]")
        else:
            if section != "group":
                raise SpecError(f"line {lineno}: unexpected table row in [{section}]")
            rows.append(line.split())

    if not names:
        raise SpecError("missing 'elements' line in [group]")
    if len(set(names)) != len(names):
        raise SpecError("duplicate element names")
    if len(rows) != len(names):
        raise SpecError(f"expected {len(names)} table rows, found {len(rows)}")
    index = {nm: i for i, nm in enumerate(names)}
    table = []
    for row in rows:
        if len(row) != len(names):
            raise SpecError("table row has the wrong length")
        for nm in row:
            if nm not in index:
                raise SpecError(f"unknown name '{nm}' in table")
        table.append([index[nm] for nm in row])
    try:
        group = GroupTable(table)
    except NotAGroupError as exc:
        raise SpecError(str(exc)) from exc

    if not subset_names:
        raise SpecError("missing 'generators' line in [subset]")
    for nm in subset_names:
        if nm not in index:
            raise SpecError(f"unknown name '{nm}' in subset")
    subset = tuple(index[nm] for nm in subset_names)
    if group.identity in subset:
        raise SpecError("identity in S")
    if not group.is_ad_invariant(subset):
        raise SpecError("not ad-invariant")

    max_degree = 3
    if "max_degree" in options:
        try:
            max_degree = int(options["max_degree"])
        except ValueError as exc:
            raise SpecError("max_degree must be an integer") from exc
        if max_degree < 1:
            raise SpecError("max_degree must be at least 1")
    return CalculusSpec(group, tuple(names), subset, max_degree, label=label)


def load_spec_file(path: str) -> CalculusSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec_text(fh.read(), label=path)


BUILTIN_SPECS = {
    "z2": """\
[group]
elements = e g
e g
g e
[subset]
generators = g
[options]
max_degree = 3
""",
    "z3": """\
[group]
elements = e c cc
e c cc
c cc e
cc e c
[subset]
generators = c cc
[options]
max_degree = 3
""",
    "s3": """\
[group]
elements = e t12 t13 t23 c123 c132
e t12 t13 t23 c123 c132
t12 e c132 c123 t23 t13
t13 c123 e c132 t12 t23
t23 c132 c123 e t13 t12
c123 t13 t23 t12 c132 e
c132 t23 t12 t13 e c123
[subset]
generators = t12 t13 t23
[options]
max_degree = 3
""",
}


def load_spec(ref: str) -> CalculusSpec:
    """Resolve ``builtin:NAME`` or a file path to a calculus spec."""
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        if name not in BUILTIN_SPECS:
            raise SpecError(f"unknown builtin calculus '{name}'")
        return parse_spec_text(BUILTIN_SPECS[name], label=name)
    return load_spec_file(ref)


# ---------------------------------------------------------------------------
# tokens


_SYMBOLS = ("(", ")", "[", "]", "<", ">", ",", ";", "*", "+", "-", "/")


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, symbol, EOF
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            out.append(Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise DslSyntaxError(f"unexpected character {ch!r}", line, col)
    out.append(Token("EOF", "", line, col))
    return out


# ---------------------------------------------------------------------------
# abstract syntax


@dataclass(frozen=True)
class Node:
    line: int
    col: int


@dataclass(frozen=True)
class Lit(Node):
    value: Fraction


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class Atom(Node):
    kind: str  # 'e', 'u', 'w', 'chi', 'gamma'
    name: str = ""
    index: int = 0


@dataclass(frozen=True)
class FAtom(Node):
    i: int
    j: int


@dataclass(frozen=True)
class BinOp(Node):
    op: str  # '+', '-', '*'
    left: Node
    right: Node


@dataclass(frozen=True)
class Diff(Node):
    arg: Node


@dataclass(frozen=True)
class Lie(Node):
    field: Node
    arg: Node


@dataclass(frozen=True)
class Iota(Node):
    index: int
    arg: Node


@dataclass(frozen=True)
class Pairing(Node):
    dual: Node
    form: Node


_ATOM_NAMES = {"e", "u", "w", "chi", "gamma", "f"}
_CALL_NAMES = {"d", "L", "iota"}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.cur
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        if self.cur.kind != kind:
            raise DslSyntaxError(
                f"expected {kind!r}, found {self.cur.text or 'end of input'!r}"
                f" (expected one of: {kind})",
                self.cur.line,
                self.cur.col,
            )
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.cur.kind != "EOF":
            raise DslSyntaxError(
                f"unexpected trailing input {self.cur.text!r}"
                " (expected one of: '+', '-', '*', end of input)",
                self.cur.line,
                self.cur.col,
            )
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.cur.kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            node = BinOp(op.line, op.col, op.kind, node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.cur.kind == "*":
            op = self.advance()
            rhs = self.factor()
            node = BinOp(op.line, op.col, "*", node, rhs)
        return node

    def _rational(self, negate: bool) -> Lit:
        tok = self.expect("INT")
        num = int(tok.text)
        den = 1
        if self.cur.kind == "/":
            self.advance()
            den = int(self.expect("INT").text)
            if den == 0:
                raise DslSyntaxError("zero denominator", tok.line, tok.col)
        value = Fraction(-num if negate else num, den)
        return Lit(tok.line, tok.col, value)

    def _index(self) -> int:
        tok = self.expect("INT")
        idx = int(tok.text)
        if idx < 1:
            raise DslSyntaxError("indices are 1-based", tok.line, tok.col)
        return idx

    def factor(self) -> Node:
        tok = self.cur
        if tok.kind == "INT":
            return self._rational(False)
        if tok.kind == "-":
            self.advance()
            if self.cur.kind == "INT":
                return self._rational(True)
            return Neg(tok.line, tok.col, self.factor())
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "<":
            self.advance()
            dual = self.expr()
            self.expect(",")
            form = self.expr()
            self.expect(">")
            return Pairing(tok.line, tok.col, dual, form)
        if tok.kind == "NAME":
            name = tok.text
            if name == "d":
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Diff(tok.line, tok.col, arg)
            if name == "L":
                self.advance()
                self.expect("(")
                field = self.expr()
                self.expect(";")
                arg = self.expr()
                self.expect(")")
                return Lie(tok.line, tok.col, field, arg)
            if name == "iota":
                self.advance()
                self.expect("(")
                idx = self._index()
                self.expect(";")
                arg = self.expr()
                self.expect(")")
                return Iota(tok.line, tok.col, idx, arg)
            if name in ("e", "u"):
                self.advance()
                self.expect("[")
                nm = self.expect("NAME").text
                self.expect("]")
                return Atom(tok.line, tok.col, name, name=nm)
            if name in ("w", "chi", "gamma"):
                self.advance()
                self.expect("[")
                idx = self._index()
                self.expect("]")
                return Atom(tok.line, tok.col, name, index=idx)
            if name == "f":
                self.advance()
                self.expect("[")
                i = self._index()
                self.expect(",")
                j = self._index()
                self.expect("]")
                return FAtom(tok.line, tok.col, i, j)
            raise DslNameError(f"unknown name '{name}'", tok.line, tok.col)
        raise DslSyntaxError(
            f"unexpected {tok.text or 'end of input'!r}"
            " (expected one of: atom, rational, '(', '<', 'd', 'L', 'iota')",
            tok.line,
            tok.col,
        )


def parse(text: str) -> Node:
    return _Parser(_tokenize(text)).parse()


# ---------------------------------------------------------------------------
# evaluation


class _Evaluator:
    def __init__(self, ctx: CrossAlgebra, names: tuple[str, ...]):
        self.ctx = ctx
        self.names = {nm: i for i, nm in enumerate(names)}

    def _name_index(self, node: Atom) -> int:
        idx = self.names.get(node.name)
        if idx is None:
            raise DslNameError(f"unknown name '{node.name}'", node.line, node.col)
        return idx

    def _check_index(self, node: Node, idx: int) -> int:
        if not 1 <= idx <= self.ctx.fodc.n:
            raise DslNameError(f"index {idx} out of range", node.line, node.col)
        return idx - 1

    def _as_form(self, v: Value, node: Node) -> GradedForm:
        if isinstance(v, Fraction):
            raise DslTypeError("expected forms, found a scalar", node.line, node.col)
        try:
            return v.form_part()
        except HopfCalcError as exc:
            raise DslTypeError(str(exc), node.line, node.col) from exc

    def _as_dual(self, v: Value, node: Node):
        if isinstance(v, Fraction):
            raise DslTypeError("expected a dual element, found a scalar", node.line, node.col)
        try:
            return v.dual_part()
        except HopfCalcError as exc:
            raise DslTypeError(str(exc), node.line, node.col) from exc

    def eval(self, node: Node) -> Value:
        ctx = self.ctx
        if isinstance(node, Lit):
            return node.value
        if isinstance(node, Neg):
            v = self.eval(node.arg)
            return -v if isinstance(v, Fraction) else v.scale(-1)
        if isinstance(node, Atom):
            if node.kind == "e":
                return ctx.cross_from_element(
                    ctx.fodc.paired.alg.basis(self._name_index(node))
                )
            if node.kind == "u":
                return ctx.cross_from_dual(
                    ctx.dual_from_element(
                        ctx.fodc.paired.dual.basis(self._name_index(node))
                    )
                )
            if node.kind == "w":
                i = self._check_index(node, node.index)
                return ctx.cross_from_form(GradedForm.word(ctx.wedge, (i,)))
            if node.kind == "chi":
                i = self._check_index(node, node.index)
                return ctx.cross_from_dual(ctx.dual_from_element(ctx.fodc.chi[i]))
            if node.kind == "gamma":
                i = self._check_index(node, node.index)
                return ctx.cross_from_dual(ctx.gamma(i))
        if isinstance(node, FAtom):
            i = self._check_index(node, node.i)
            j = self._check_index(node, node.j)
            return self.ctx.cross_from_dual(
                self.ctx.dual_from_element(self.ctx.fodc.f[i][j])
            )
        if isinstance(node, BinOp):
            lhs = self.eval(node.left)
            rhs = self.eval(node.right)
            if node.op == "*":
                if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
                    return lhs * rhs
                if isinstance(lhs, Fraction):
                    return rhs.scale(lhs)
                if isinstance(rhs, Fraction):
                    return lhs.scale(rhs)
                return cross_multiply(lhs, rhs)
            if isinstance(lhs, Fraction) != isinstance(rhs, Fraction):
                raise DslTypeError(
                    "cannot add a scalar and an algebra element", node.line, node.col
                )
            if node.op == "+":
                return lhs + rhs
            return lhs - rhs
        if isinstance(node, Diff):
            form = self._as_form(self.eval(node.arg), node)
            return self.ctx.cross_from_form(exterior_derivative(form))
        if isinstance(node, Lie):
            field = self._as_dual(self.eval(node.field), node)
            if not field.is_vector_field:
                raise DslTypeError(
                    "Lie derivative index must be a vector field", node.line, node.col
                )
            operand = self.eval(node.arg)
            if isinstance(operand, Fraction):
                raise DslTypeError(
                    "Lie derivative of a scalar", node.line, node.col
                )
            return lie_derivative(field, operand)
        if isinstance(node, Iota):
            i = self._check_index(node, node.index)
            form = self._as_form(self.eval(node.arg), node)
            return self.ctx.cross_from_form(inner_derivation(self.ctx, i, form))
        if isinstance(node, Pairing):
            dual = self._as_dual(self.eval(node.dual), node)
            form = self._as_form(self.eval(node.form), node)
            return pair(dual, form)
        raise DslTypeError("unsupported expression", node.line, node.col)


def evaluate(x: Node, calculus: FodcData, maxdeg: Optional[int] = None,
             names: Optional[tuple[str, ...]] = None) -> Value:
    """Evaluate an expression over a calculus; results are normal-ordered."""
    if maxdeg is None:
        maxdeg = 3
    ctx = CrossAlgebra.for_calculus(calculus, maxdeg)
    if names is None:
        names = calculus.paired.alg.basis_names
    return _Evaluator(ctx, tuple(names)).eval(x)


def print_normal(x) -> str:
    """Canonical rendering; parse + evaluate of the output reproduces x."""
    if isinstance(x, Fraction):
        return format_scalar(x)
    if isinstance(x, CrossElement):
        return format_cross_terms(
            x.terms, x.ctx.fodc.paired.alg, x.ctx.dual_one_index
        )
    if isinstance(x, GradedForm):
        return str(x)
    return str(x)


def evaluate_text(text: str, calculus: FodcData, maxdeg: Optional[int] = None) -> Value:
    return evaluate(parse(text), calculus, maxdeg=maxdeg)


def values_equal(a: Value, b: Value) -> bool:
    """Equality of evaluation results, identifying a scalar q with the
    cross-algebra element q * 1 (relevant when a zero element prints as 0)."""
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    if isinstance(a, Fraction):
        a, b = b, a
    if isinstance(b, Fraction):
        return a == a.ctx.cross_one().scale(b)
    return a == b

"""Parser and printer for the batch script language.

    stmt   := "let" ID "=" expr | cmd
    expr   := field | elem | form | symbol ("+" symbol)*
    field  := "GF(" int ")" ["(t)"] ("." ext)*
    ext    := "adj_sqrt(" elem ")" | "adj_as(" elem ")"
    form   := "Q[" elem "," elem "]" | "perp(" form {"," form} ")"
            | "scale(" elem "," form ")" | "pf<<" elem {"," elem} ";" elem "]]"
            | "bil<" elem {"," elem} ">"
    symbol := "[" elem "," elem ")"
    cmd    := ("arf"|"e2"|"split"|"inv"|"eq"|"transfer"|"frob"|"descend"|"verify"|"hyp"|"iso") args

Elements are rational expressions in t, w (generator of GF(2^k)), sqrt#i /
as#i (generator of the i-th extension step) and bound names.  One statement
per line; lines starting with '#' are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

ARG_KINDS = {
    "arf": ("form",),
    "e2": ("form",),
    "hyp": ("form",),
    "iso": ("form",),
    "descend": ("form",),
    "transfer": ("form", "bilinear"),
    "split": ("symbol", "class"),
    "inv": ("symbol", "class"),
    "frob": ("symbol", "class"),
    "eq": ("form", "symbol", "class"),
}
COMMANDS = ("arf", "e2", "split", "inv", "eq", "transfer", "frob", "descend", "verify", "hyp", "iso")
BUILTIN_NAMES = ("t", "w")
GEN_NAME = re.compile(r"(sqrt|as)#\d+$")


class ScriptError(Exception):
    """Syntax, binding or type error, with a (line, column) position."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {message}" if line else message)
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# AST; positions are excluded from equality so that parse(print(s)) == s


@dataclass(frozen=True)
class Node:
    pos: tuple[int, int] = field(default=(0, 0), compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Num(Node):
    value: int


@dataclass(frozen=True)
class Name(Node):
    id: str


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class FieldExpr(Node):
    order: int
    rational: bool
    steps: tuple[tuple[str, Node], ...] = ()


@dataclass(frozen=True)
class BlockForm(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Perp(Node):
    parts: tuple[Node, ...]


@dataclass(frozen=True)
class Scale(Node):
    factor: Node
    form: Node


@dataclass(frozen=True)
class PfisterExpr(Node):
    slots: tuple[Node, ...]
    last: Node


@dataclass(frozen=True)
class BilinearExpr(Node):
    entries: tuple[Node, ...]


@dataclass(frozen=True)
class SymbolExpr(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class ClassExpr(Node):
    symbols: tuple[Node, ...]


@dataclass(frozen=True)
class Let(Node):
    name: str
    expr: Node


@dataclass(frozen=True)
class Command(Node):
    verb: str
    args: tuple[Node, ...] = ()
    options: tuple[str, ...] = ()  # raw words, used by `verify`


@dataclass(frozen=True)
class Script(Node):
    statements: tuple[Node, ...]


# ---------------------------------------------------------------------------
# tokenizer

TOKEN = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<num>\d+)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*(?:\#\d+)?)
  | (?P<op><<|\]\]|[-+*/^()\[\],;.=<>])
    """,
    re.VERBOSE,
)


@dataclass
class Tok:
    kind: str
    text: str
    line: int
    col: int


def tokenize(line: str, lineno: int) -> list[Tok]:
    out, i = [], 0
    while i < len(line):
        m = TOKEN.match(line, i)
        if not m:
            raise ScriptError(f"unexpected character {line[i]!r}", lineno, i + 1)
        if m.lastgroup != "ws":
            out.append(Tok(m.lastgroup, m.group(), lineno, i + 1))
        i = m.end()
    out.append(Tok("eof", "", lineno, len(line) + 1))
    return out


# ---------------------------------------------------------------------------
# parser


ELEM = "elem"


class _Parser:
    def __init__(self, toks: list[Tok], kinds: dict[str, str]):
        self.toks = toks
        self.i = 0
        self.kinds = kinds

    @property
    def cur(self) -> Tok:
        return self.toks[self.i]

    def peek(self, k=1) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.cur
        return ScriptError(msg, tok.line, tok.col)

    def take(self, text=None, kind=None) -> Tok:
        tok = self.cur
        if text is not None and tok.text != text:
            raise self.error(f"expected {text!r}, found {tok.text or 'end of line'!r}")
        if kind is not None and tok.kind != kind:
            raise self.error(f"expected {kind}, found {tok.text or 'end of line'!r}")
        self.i += 1
        return tok

    def at(self, text) -> bool:
        return self.cur.text == text

    def pos(self):
        return (self.cur.line, self.cur.col)

    # expressions --------------------------------------------------------

    def expr(self) -> Node:
        tok = self.cur
        if tok.text == "GF" and self.peek().text == "(":
            return self.field()
        if tok.text in ("Q", "perp", "scale", "pf", "bil") and self.peek().text in ("[", "(", "<<", "<"):
            return self.form()
        if tok.text == "[":
            return self.symbol_sum()
        kind = self.kinds.get(tok.text) if tok.kind == "id" else None
        if kind in ("symbol", "class"):
            return self.symbol_sum()
        if kind in ("form", "bilinear", "field"):
            self.take()
            return Name(tok.text, pos=(tok.line, tok.col))
        return self.elem()

    def field(self) -> Node:
        pos = self.pos()
        self.take("GF")
        self.take("(")
        order = int(self.take(kind="num").text)
        if order < 2 or order & (order - 1):
            raise self.error(f"GF({order}): the order must be a power of 2")
        self.take(")")
        rational = False
        if self.at("(") and self.peek().text == "t":
            self.take("(")
            self.take("t")
            self.take(")")
            rational = True
        steps = []
        while self.at("."):
            self.take(".")
            tok = self.take(kind="id")
            if tok.text not in ("adj_sqrt", "adj_as"):
                raise self.error(f"unknown extension {tok.text!r}", tok)
            self.take("(")
            steps.append(("sqrt" if tok.text == "adj_sqrt" else "as", self.elem()))
            self.take(")")
        return FieldExpr(order, rational, tuple(steps), pos=pos)

    def form(self) -> Node:
        pos = self.pos()
        tok = self.take(kind="id")
        if tok.text == "Q":
            self.take("[")
            a = self.elem()
            self.take(",")
            b = self.elem()
            self.take("]")
            return BlockForm(a, b, pos=pos)
        if tok.text == "perp":
            self.take("(")
            parts = [self.form_arg()]
            while self.at(","):
                self.take(",")
                parts.append(self.form_arg())
            self.take(")")
            return Perp(tuple(parts), pos=pos)
        if tok.text == "scale":
            self.take("(")
            lam = self.elem()
            self.take(",")
            f = self.form_arg()
            self.take(")")
            return Scale(lam, f, pos=pos)
        if tok.text == "pf":
            self.take("<<")
            slots = [self.elem()]
            while self.at(","):
                self.take(",")
                slots.append(self.elem())
            self.take(";")
            last = self.elem()
            self.take("]]")
            return PfisterExpr(tuple(slots), last, pos=pos)
        if tok.text == "bil":
            self.take("<")
            entries = [self.elem()]
            while self.at(","):
                self.take(",")
                entries.append(self.elem())
            self.take(">")
            return BilinearExpr(tuple(entries), pos=pos)
        raise self.error(f"expected a form, found {tok.text!r}", tok)

    def form_arg(self) -> Node:
        tok = self.cur
        if tok.kind == "id" and tok.text not in ("Q", "perp", "scale", "pf", "bil"):
            self.take()
            self.check_kind(tok, ("form",))
            return Name(tok.text, pos=(tok.line, tok.col))
        return self.form()

    def symbol(self) -> Node:
        tok = self.cur
        if tok.kind == "id":
            self.take()
            self.check_kind(tok, ("symbol", "class"))
            return Name(tok.text, pos=(tok.line, tok.col))
        pos = self.pos()
        self.take("[")
        a = self.elem()
        self.take(",")
        b = self.elem()
        self.take(")")
        return SymbolExpr(a, b, pos=pos)

    def symbol_sum(self) -> Node:
        pos = self.pos()
        syms = [self.symbol()]
        while self.at("+"):
            self.take("+")
            syms.append(self.symbol())
        if len(syms) == 1 and isinstance(syms[0], SymbolExpr):
            return syms[0]
        return ClassExpr(tuple(syms), pos=pos)

    # element arithmetic: + - over * / over unary - over ^ -----------------

    def elem(self) -> Node:
        node = self.term()
        while self.cur.text in ("+", "-"):
            pos = self.pos()
            self.take()
            # characteristic 2: a - b = a + b
            node = BinOp("+", node, self.term(), pos=pos)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.cur.text in ("*", "/"):
            pos = self.pos()
            op = self.take().text
            node = BinOp(op, node, self.unary(), pos=pos)
        return node

    def unary(self) -> Node:
        if self.at("-"):
            pos = self.pos()
            self.take("-")
            return Neg(self.unary(), pos=pos)
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.at("^"):
            pos = self.pos()
            self.take("^")
            exp = self.take(kind="num")
            return BinOp("^", base, Num(int(exp.text), pos=(exp.line, exp.col)), pos=pos)
        return base

    def atom(self) -> Node:
        tok = self.cur
        if tok.kind == "num":
            self.take()
            return Num(int(tok.text), pos=(tok.line, tok.col))
        if tok.kind == "id":
            self.take()
            if tok.text not in BUILTIN_NAMES and not GEN_NAME.match(tok.text):
                self.check_kind(tok, (ELEM,))
            return Name(tok.text, pos=(tok.line, tok.col))
        if tok.text == "(":
            self.take("(")
            node = self.elem()
            self.take(")")
            return node
        raise self.error(f"expected an element, found {tok.text or 'end of line'!r}")

    def check_kind(self, tok: Tok, allowed):
        kind = self.kinds.get(tok.text)
        if kind is None:
            raise self.error(f"unbound name {tok.text!r}", tok)
        if kind not in allowed:
            want = " or ".join(allowed)
            raise self.error(f"type mismatch: {tok.text!r} is a {kind}, expected {want}", tok)


def _kind(node: Node, kinds) -> str:
    if isinstance(node, FieldExpr):
        return "field"
    if isinstance(node, (BlockForm, Perp, Scale, PfisterExpr)):
        return "form"
    if isinstance(node, BilinearExpr):
        return "bilinear"
    if isinstance(node, SymbolExpr):
        return "symbol"
    if isinstance(node, ClassExpr):
        return "class"
    if isinstance(node, Name) and node.id in kinds:
        return kinds[node.id]
    return ELEM


def parse(text: str) -> Script:
    statements = []
    kinds: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        offset = len(raw) - len(raw.lstrip())
        toks = tokenize(raw, lineno)
        p = _Parser(toks, kinds)
        first = p.cur
        pos = (lineno, offset + 1)
        if first.text == "let":
            p.take("let")
            name = p.take(kind="id")
            if name.text in BUILTIN_NAMES or name.text in COMMANDS or GEN_NAME.match(name.text):
                raise ScriptError(f"cannot rebind {name.text!r}", name.line, name.col)
            p.take("=")
            expr = p.expr()
            p.take(kind="eof")
            kinds[name.text] = _kind(expr, kinds)
            statements.append(Let(name.text, expr, pos=pos))
            continue
        if first.text not in COMMANDS:
            raise ScriptError(f"unknown command {first.text!r}", first.line, first.col)
        p.take()
        if first.text == "verify":
            words = raw[first.col - 1 + len("verify"):].split()
            if not words:
                raise ScriptError("verify needs a statement id", first.line, first.col)
            statements.append(Command("verify", (), tuple(words), pos=pos))
            continue
        args = [p.expr()]
        if first.text == "eq":
            p.take(",")
            args.append(p.expr())
        p.take(kind="eof")
        kinds_seen = [_kind(a, kinds) for a in args]
        for a, k in zip(args, kinds_seen):
            if k not in ARG_KINDS[first.text]:
                want = " or ".join(ARG_KINDS[first.text])
                raise ScriptError(f"type mismatch: {first.text} expects a {want}, got a {k}", *a.pos)
        if first.text == "eq" and (kinds_seen[0] == "form") != (kinds_seen[1] == "form"):
            raise ScriptError("type mismatch: eq compares two forms or two Brauer classes", *args[1].pos)
        statements.append(Command(first.text, tuple(args), pos=pos))
    return Script(tuple(statements))


# ---------------------------------------------------------------------------
# printer


_PREC = {"+": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def print_node(node: Node, prec: int = 0) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Neg):
        s = "-" + print_node(node.operand, _PREC["neg"])
        return f"({s})" if prec > _PREC["neg"] else s
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        if node.op == "^":
            s = f"{print_node(node.left, p + 1)}^{print_node(node.right)}"
        else:
            sep = " + " if node.op == "+" else node.op
            s = f"{print_node(node.left, p)}{sep}{print_node(node.right, p + 1)}"
        return f"({s})" if prec > p else s
    if isinstance(node, FieldExpr):
        s = f"GF({node.order})" + ("(t)" if node.rational else "")
        for kind, e in node.steps:
            s += f".adj_{kind}({print_node(e)})"
        return s
    if isinstance(node, BlockForm):
        return f"Q[{print_node(node.a)}, {print_node(node.b)}]"
    if isinstance(node, Perp):
        return "perp(" + ", ".join(print_node(f) for f in node.parts) + ")"
    if isinstance(node, Scale):
        return f"scale({print_node(node.factor)}, {print_node(node.form)})"
    if isinstance(node, PfisterExpr):
        return "pf<<" + ", ".join(print_node(e) for e in node.slots) + f"; {print_node(node.last)}]]"
    if isinstance(node, BilinearExpr):
        return "bil<" + ", ".join(print_node(e) for e in node.entries) + ">"
    if isinstance(node, SymbolExpr):
        return f"[{print_node(node.a)}, {print_node(node.b)})"
    if isinstance(node, ClassExpr):
        return " + ".join(print_node(s) for s in node.symbols)
    if isinstance(node, Let):
        return f"let {node.name} = {print_node(node.expr)}"
    if isinstance(node, Command):
        if node.verb == "verify":
            return "verify " + " ".join(node.options)
        return f"{node.verb} " + ", ".join(print_node(a) for a in node.args)
    if isinstance(node, Script):
        return "\n".join(print_node(s) for s in node.statements) + "\n"
    raise TypeError(f"cannot print {node!r}")

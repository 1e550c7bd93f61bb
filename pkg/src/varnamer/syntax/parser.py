"""Tolerant recursive-descent parser for a Java subset.

Statements and members outside the subset (lambdas, switch, anonymous classes,
labelled statements, ...) are not errors: the parser rewinds to the start of the
construct and skips to the next ``;`` or balanced ``}``, emitting an opaque node
that keeps its raw tokens. Only unbalanced braces at the top level abort.
"""

from __future__ import annotations

from typing import Optional

from .lexer import LITERAL_KINDS, LineIndex, Token, TokenKind, tokenize
from .nodes import (
    CompilationUnit, Kind, MethodView, Node, ParameterView,
)

PRIMITIVES = frozenset({"boolean", "byte", "char", "short", "int", "long", "float", "double", "void"})

MODIFIERS = frozenset({
    "public", "private", "protected", "static", "final", "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "default",
})

ASSIGNMENT_OPS = frozenset({"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="})

BINARY_PRECEDENCE = {
    "||": 1, "&&": 2, "|": 3, "^": 4, "&": 5, "==": 6, "!=": 6,
    "<": 7, ">": 7, "<=": 7, ">=": 7, "instanceof": 7,
    "<<": 8, ">>": 8, ">>>": 8, "+": 9, "-": 9, "*": 10, "/": 10, "%": 10,
}


class ParseError(Exception):
    """Raised inside the parser to trigger panic-mode recovery."""


class UnrecoverableInput(ValueError):
    """Input the parser refuses to process (unbalanced top-level braces)."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class _Parser:
    def __init__(self, source: str, tokens: list[Token]):
        self.source = source
        self.toks = tokens
        self.i = 0

    # -- token helpers -----------------------------------------------------

    def peek(self, k: int = 0) -> Optional[Token]:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def at_op(self, *texts: str, k: int = 0) -> bool:
        t = self.peek(k)
        return t is not None and t.is_op(*texts)

    def at_kw(self, *texts: str, k: int = 0) -> bool:
        t = self.peek(k)
        return t is not None and t.is_keyword(*texts)

    def at_ident(self, k: int = 0) -> bool:
        t = self.peek(k)
        return t is not None and t.kind is TokenKind.IDENT

    def advance(self) -> Token:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        self.i += 1
        return t

    def expect_op(self, text: str) -> Token:
        t = self.peek()
        if t is None or not t.is_op(text):
            raise ParseError(f"expected {text!r}, found {t.text if t else 'EOF'!r}")
        self.i += 1
        return t

    def expect_ident(self) -> Token:
        t = self.peek()
        if t is None or t.kind is not TokenKind.IDENT:
            raise ParseError(f"expected identifier, found {t.text if t else 'EOF'!r}")
        self.i += 1
        return t

    def make(self, kind: Kind, first: int, children=(), role: str = "") -> Node:
        last = self.i
        if last <= first:
            raise ParseError(f"empty {kind.value}")
        return Node(
            kind=kind,
            start=self.toks[first].start,
            end=self.toks[last - 1].end,
            first=first,
            last=last,
            source=self.source,
            children=[c for c in children if c is not None],
            role=role,
        )

    def leaf(self, kind: Kind, role: str = "") -> Node:
        first = self.i
        self.advance()
        return self.make(kind, first, role=role)

    def matching(self, idx: int) -> Optional[int]:
        """Index of the bracket closing the one at ``idx``."""
        open_t = self.toks[idx].text
        close_t = {"(": ")", "[": "]", "{": "}"}[open_t]
        depth = 0
        for j in range(idx, len(self.toks)):
            t = self.toks[j]
            if t.kind is TokenKind.OP:
                if t.text == open_t:
                    depth += 1
                elif t.text == close_t:
                    depth -= 1
                    if depth == 0:
                        return j
        return None

    # -- recovery ----------------------------------------------------------

    def skip_opaque(self, kind: Kind, role: str = "") -> Node:
        first = self.i
        head = self.peek()
        if head is not None and head.is_op("..."):
            self.i += 1
        else:
            braces = parens = 0
            while True:
                t = self.peek()
                if t is None:
                    break
                if t.is_op("}") and braces == 0:
                    if self.i == first:
                        self.i += 1
                    break
                self.i += 1
                if t.kind is not TokenKind.OP:
                    continue
                if t.text in ("(", "["):
                    parens += 1
                elif t.text in (")", "]"):
                    parens = max(0, parens - 1)
                elif t.text == "{":
                    braces += 1
                elif t.text == ";" and braces == 0 and parens == 0:
                    break
                elif t.text == "}":
                    braces -= 1
                    if braces == 0 and parens == 0 and not self._continues_after_block(first):
                        break
        node = self.make(kind, first, role=role)
        node.tokens = tuple(self.toks[first:self.i])
        return node

    def _continues_after_block(self, first: int) -> bool:
        nxt = self.peek()
        if nxt is None:
            return False
        if nxt.is_op(";", ")", ",", ".", "("):
            return True
        if nxt.is_keyword("else", "catch", "finally"):
            return True
        return nxt.is_keyword("while") and self.toks[first].is_keyword("do")

    # -- compilation unit and members ---------------------------------------

    def compilation_unit(self) -> Node:
        children = []
        while self.peek() is not None:
            if self.at_kw("package") or self.at_kw("import"):
                kind = Kind.PACKAGE_DECLARATION if self.at_kw("package") else Kind.IMPORT_DECLARATION
                first = self.i
                while self.peek() is not None and not self.at_op(";"):
                    self.i += 1
                if self.peek() is not None:
                    self.i += 1
                children.append(self.make(kind, first))
                continue
            member = self.member()
            if member is not None:
                children.append(member)
        if not self.toks:
            return Node(Kind.COMPILATION_UNIT, 0, len(self.source), 0, 0, self.source)
        root = self.make(Kind.COMPILATION_UNIT, 0, children)
        root.start, root.end = 0, len(self.source)
        return root

    def member(self) -> Optional[Node]:
        start = self.i
        try:
            return self._member()
        except ParseError:
            self.i = start
            return self.skip_opaque(Kind.OPAQUE_MEMBER)

    def modifiers(self) -> list[Node]:
        mods = []
        while True:
            t = self.peek()
            if t is None:
                break
            if t.is_op("@") and not self.at_kw("interface", k=1):
                first = self.i
                self.i += 1
                self.qualified_name()
                if self.at_op("("):
                    end = self.matching(self.i)
                    if end is None:
                        raise ParseError("unclosed annotation arguments")
                    self.i = end + 1
                mods.append(self.make(Kind.ANNOTATION, first))
            elif t.kind is TokenKind.KEYWORD and t.text in MODIFIERS and not (
                t.text == "default" and self.at_op(":", k=1)
            ):
                mods.append(self.leaf(Kind.MODIFIER))
            elif t.kind is TokenKind.IDENT and t.text in ("sealed", "non") and self.at_ident(1):
                mods.append(self.leaf(Kind.MODIFIER))
            else:
                break
        return mods

    def qualified_name(self) -> None:
        self.expect_ident()
        while self.at_op(".") and self.at_ident(1):
            self.i += 2

    def _member(self) -> Optional[Node]:
        if self.at_op(";"):
            self.i += 1
            return None
        first = self.i
        mods = self.modifiers()
        if self.at_op("{"):
            body = self.block()
            body.role = "body"
            return self.make(Kind.INITIALIZER, first, mods + [body])
        if (self.at_kw("class", "interface", "enum")
                or (self.at_op("@") and self.at_kw("interface", k=1))
                or (self.peek() is not None and self.peek().text == "record" and self.at_ident(1))):
            return self.type_declaration(first, mods)
        if self.at_op("<"):
            self.skip_angles()
        if self.at_ident() and self.at_op("(", k=1):
            # constructor
            name = self.leaf(Kind.SIMPLE_NAME, role="name")
            return self.method_rest(first, mods, None, name)
        type_node = self.type_(role="type")
        name_tok = self.peek()
        if name_tok is None or name_tok.kind is not TokenKind.IDENT:
            raise ParseError("expected member name")
        if self.at_op("(", k=1):
            type_node.role = "return_type"
            name = self.leaf(Kind.SIMPLE_NAME, role="name")
            return self.method_rest(first, mods, type_node, name)
        declarators = self.declarators()
        self.expect_op(";")
        return self.make(Kind.FIELD_DECLARATION, first, mods + [type_node] + declarators)

    def type_declaration(self, first: int, mods: list[Node]) -> Node:
        is_enum = self.at_kw("enum")
        # header up to the body brace is kept verbatim
        while self.peek() is not None and not self.at_op("{"):
            self.i += 1
        self.expect_op("{")
        members: list[Node] = []
        if is_enum:
            const_first = self.i
            braces = parens = 0
            while self.peek() is not None:
                t = self.peek()
                if t.is_op("}") and braces == 0:
                    break
                if t.is_op(";") and braces == 0 and parens == 0:
                    self.i += 1
                    break
                if t.is_op("{"):
                    braces += 1
                elif t.is_op("}"):
                    braces -= 1
                elif t.is_op("(", "["):
                    parens += 1
                elif t.is_op(")", "]"):
                    parens -= 1
                self.i += 1
            if self.i > const_first:
                opaque = self.make(Kind.OPAQUE_MEMBER, const_first)
                opaque.tokens = tuple(self.toks[const_first:self.i])
                members.append(opaque)
        while self.peek() is not None and not self.at_op("}"):
            m = self.member()
            if m is not None:
                members.append(m)
        self.expect_op("}")
        return self.make(Kind.TYPE_DECLARATION, first, mods + members)

    def skip_angles(self) -> None:
        depth = 0
        while True:
            t = self.advance()
            if t.is_op("<"):
                depth += 1
            elif t.is_op(">"):
                depth -= 1
                if depth == 0:
                    return

    def method_rest(self, first: int, mods: list[Node], ret: Optional[Node], name: Node) -> Node:
        params = self.parameters()
        while self.at_op("[") and self.at_op("]", k=1):
            self.i += 2
        throws: list[Node] = []
        if self.at_kw("throws"):
            self.i += 1
            throws.append(self.type_(role="throws"))
            while self.at_op(","):
                self.i += 1
                throws.append(self.type_(role="throws"))
        body = None
        if self.at_op("{"):
            body = self.block()
            body.role = "body"
        else:
            if self.at_kw("default"):
                while self.peek() is not None and not self.at_op(";"):
                    self.i += 1
            self.expect_op(";")
        return self.make(Kind.METHOD_DECLARATION, first, mods + [ret, name] + params + throws + [body])

    def parameters(self) -> list[Node]:
        self.expect_op("(")
        params = []
        while not self.at_op(")"):
            first = self.i
            mods = self.modifiers()
            type_node = self.type_(role="type")
            if self.at_op("..."):
                self.i += 1
                type_node.end = self.toks[self.i - 1].end
                type_node.last = self.i
            if self.at_kw("this"):
                self.i += 1
            else:
                name = self.leaf(Kind.SIMPLE_NAME, role="name") if self.at_ident() else None
                if name is None:
                    raise ParseError("expected parameter name")
                while self.at_op("[") and self.at_op("]", k=1):
                    self.i += 2
                params.append(self.make(Kind.PARAMETER, first, mods + [type_node, name], role="parameter"))
            if not self.at_op(","):
                break
            self.i += 1
        self.expect_op(")")
        return params

    # -- types -------------------------------------------------------------

    def type_(self, role: str = "type") -> Node:
        first = self.i
        self._type_tokens()
        return self.make(Kind.TYPE, first, role=role)

    def _type_tokens(self) -> None:
        while self.at_op("@"):
            self.i += 1
            self.qualified_name()
        t = self.peek()
        if t is None:
            raise ParseError("expected type")
        if t.kind is TokenKind.KEYWORD and t.text in PRIMITIVES:
            self.i += 1
        elif t.kind is TokenKind.IDENT:
            self.i += 1
            self._type_arguments()
            while self.at_op(".") and self.at_ident(1):
                self.i += 2
                self._type_arguments()
        else:
            raise ParseError(f"expected type, found {t.text!r}")
        while self.at_op("[") and self.at_op("]", k=1):
            self.i += 2

    def _type_arguments(self) -> None:
        if not self.at_op("<"):
            return
        self.i += 1
        if self.at_op(">"):
            self.i += 1
            return
        while True:
            if self.at_op("?"):
                self.i += 1
                if self.at_kw("extends", "super"):
                    self.i += 1
                    self._type_tokens()
            else:
                self._type_tokens()
            if self.at_op(","):
                self.i += 1
                continue
            self.expect_op(">")
            return

    # -- statements --------------------------------------------------------

    def block(self) -> Node:
        first = self.i
        self.expect_op("{")
        stmts = []
        while self.peek() is not None and not self.at_op("}"):
            stmts.append(self.statement())
        self.expect_op("}")
        return self.make(Kind.BLOCK, first, stmts)

    def statement(self, role: str = "") -> Node:
        start = self.i
        try:
            node = self._statement()
        except ParseError:
            self.i = start
            node = self.skip_opaque(Kind.OPAQUE_STATEMENT)
        node.role = role or node.role
        return node

    def _statement(self) -> Node:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        first = self.i
        if t.is_op("{"):
            return self.block()
        if t.is_op(";"):
            return self.leaf(Kind.EMPTY_STATEMENT)
        if t.kind is TokenKind.KEYWORD:
            handler = {
                "if": self.if_statement,
                "for": self.for_statement,
                "while": self.while_statement,
                "do": self.do_statement,
                "try": self.try_statement,
            }.get(t.text)
            if handler is not None:
                return handler()
            if t.text == "return":
                self.i += 1
                expr = None if self.at_op(";") else self.expression(role="expression")
                self.expect_op(";")
                return self.make(Kind.RETURN_STATEMENT, first, [expr])
            if t.text == "throw":
                self.i += 1
                expr = self.expression(role="expression")
                self.expect_op(";")
                return self.make(Kind.THROW_STATEMENT, first, [expr])
            if t.text in ("break", "continue"):
                self.i += 1
                if self.at_ident():
                    self.i += 1
                self.expect_op(";")
                return self.make(Kind.BREAK_STATEMENT if t.text == "break" else Kind.CONTINUE_STATEMENT, first)
        decl = self.try_local_declaration()
        if decl is not None:
            self.expect_op(";")
            decl.end = self.toks[self.i - 1].end
            decl.last = self.i
            return decl
        expr = self.expression(role="expression")
        self.expect_op(";")
        return self.make(Kind.EXPRESSION_STATEMENT, first, [expr])

    def try_local_declaration(self, allow_colon: bool = False) -> Optional[Node]:
        """Parse ``[mods] Type name ...`` if the tokens look like a declaration."""
        first = self.i
        try:
            mods = self.modifiers()
            type_node = self.type_(role="type")
        except ParseError:
            self.i = first
            return None
        follow = (("=", ";", ",", "[", ":") if allow_colon else ("=", ";", ",", "["))
        if not (self.at_ident() and self.at_op(*follow, k=1)):
            self.i = first
            return None
        if allow_colon and self.at_op(":", k=1):
            name = self.leaf(Kind.SIMPLE_NAME, role="name")
            return self.make(Kind.PARAMETER, first, mods + [type_node, name], role="variable")
        declarators = self.declarators()
        return self.make(Kind.LOCAL_VARIABLE_DECLARATION, first, mods + [type_node] + declarators)

    def declarators(self) -> list[Node]:
        out = []
        while True:
            first = self.i
            name = self.leaf(Kind.SIMPLE_NAME, role="name") if self.at_ident() else None
            if name is None:
                raise ParseError("expected variable name")
            while self.at_op("[") and self.at_op("]", k=1):
                self.i += 2
            init = None
            if self.at_op("="):
                self.i += 1
                init = self.array_initializer() if self.at_op("{") else self.expression()
                init.role = "initializer"
            out.append(self.make(Kind.VARIABLE_DECLARATOR, first, [name, init], role="declarator"))
            if not self.at_op(","):
                return out
            self.i += 1

    def paren_condition(self) -> Node:
        self.expect_op("(")
        cond = self.expression(role="condition")
        self.expect_op(")")
        return cond

    def if_statement(self) -> Node:
        first = self.i
        self.i += 1
        cond = self.paren_condition()
        then = self.statement(role="then")
        other = None
        if self.at_kw("else"):
            self.i += 1
            other = self.statement(role="else")
        return self.make(Kind.IF_STATEMENT, first, [cond, then, other])

    def while_statement(self) -> Node:
        first = self.i
        self.i += 1
        cond = self.paren_condition()
        body = self.statement(role="body")
        return self.make(Kind.WHILE_STATEMENT, first, [cond, body])

    def do_statement(self) -> Node:
        first = self.i
        self.i += 1
        body = self.statement(role="body")
        if not self.at_kw("while"):
            raise ParseError("expected while")
        self.i += 1
        cond = self.paren_condition()
        self.expect_op(";")
        return self.make(Kind.DO_STATEMENT, first, [body, cond])

    def for_statement(self) -> Node:
        first = self.i
        self.i += 1
        self.expect_op("(")
        var = self.try_local_declaration(allow_colon=True)
        if var is not None and var.kind is Kind.PARAMETER:
            self.expect_op(":")
            iterable = self.expression(role="iterable")
            self.expect_op(")")
            body = self.statement(role="body")
            return self.make(Kind.ENHANCED_FOR_STATEMENT, first, [var, iterable, body])
        parts: list[Node] = []
        if var is not None:
            var.role = "init"
            parts.append(var)
        else:
            while not self.at_op(";"):
                parts.append(self.expression(role="init"))
                if not self.at_op(","):
                    break
                self.i += 1
        self.expect_op(";")
        if not self.at_op(";"):
            parts.append(self.expression(role="condition"))
        self.expect_op(";")
        while not self.at_op(")"):
            parts.append(self.expression(role="update"))
            if not self.at_op(","):
                break
            self.i += 1
        self.expect_op(")")
        body = self.statement(role="body")
        return self.make(Kind.FOR_STATEMENT, first, parts + [body])

    def try_statement(self) -> Node:
        first = self.i
        self.i += 1
        children: list[Node] = []
        if self.at_op("("):
            self.i += 1
            while not self.at_op(")"):
                res = self.try_local_declaration()
                if res is None:
                    res = self.expression()
                res.role = "resource"
                children.append(res)
                if not self.at_op(";"):
                    break
                self.i += 1
            self.expect_op(")")
        body = self.block()
        body.role = "body"
        children.append(body)
        while self.at_kw("catch"):
            cfirst = self.i
            self.i += 1
            self.expect_op("(")
            pfirst = self.i
            mods = self.modifiers()
            tfirst = self.i
            self._type_tokens()
            while self.at_op("|"):
                self.i += 1
                self._type_tokens()
            type_node = self.make(Kind.TYPE, tfirst, role="type")
            name = self.leaf(Kind.SIMPLE_NAME, role="name") if self.at_ident() else None
            if name is None:
                raise ParseError("expected catch parameter")
            param = self.make(Kind.PARAMETER, pfirst, mods + [type_node, name], role="parameter")
            self.expect_op(")")
            cbody = self.block()
            cbody.role = "body"
            children.append(self.make(Kind.CATCH_CLAUSE, cfirst, [param, cbody], role="catch"))
        if self.at_kw("finally"):
            self.i += 1
            fin = self.block()
            fin.role = "finally"
            children.append(fin)
        return self.make(Kind.TRY_STATEMENT, first, children)

    # -- expressions -------------------------------------------------------

    def expression(self, role: str = "") -> Node:
        first = self.i
        lhs = self.conditional()
        t = self.peek()
        if t is not None and t.kind is TokenKind.OP and (t.text in ASSIGNMENT_OPS or self._glued_shift_assign()):
            if t.text not in ASSIGNMENT_OPS:
                self.i += 3 if self.at_op(">", k=2) else 2
            self.i += 1
            lhs.role = "left"
            rhs = self.expression(role="right")
            node = self.make(Kind.ASSIGNMENT, first, [lhs, rhs])
        else:
            node = lhs
        node.role = role or node.role
        return node

    def _glued_shift_assign(self) -> bool:
        # `> >=` / `> > >=` written without spaces
        t0, t1 = self.peek(), self.peek(1)
        if t0 is None or t1 is None or not t0.is_op(">") or t0.end != t1.start:
            return False
        if t1.is_op(">="):
            return True
        t2 = self.peek(2)
        return t1.is_op(">") and t2 is not None and t2.is_op(">=") and t1.end == t2.start

    def conditional(self) -> Node:
        first = self.i
        cond = self.binary(1)
        if not self.at_op("?"):
            return cond
        self.i += 1
        cond.role = "condition"
        then = self.expression(role="then")
        self.expect_op(":")
        other = self.conditional()
        other.role = "else"
        return self.make(Kind.CONDITIONAL_EXPRESSION, first, [cond, then, other])

    def binary_operator(self) -> Optional[tuple[str, int]]:
        t = self.peek()
        if t is None:
            return None
        if t.is_keyword("instanceof"):
            return "instanceof", 1
        if t.kind is not TokenKind.OP:
            return None
        if t.text == ">":
            n = 1
            while n < 3:
                nxt = self.peek(n)
                if nxt is not None and nxt.is_op(">") and nxt.start == self.toks[self.i + n - 1].end:
                    n += 1
                else:
                    break
            nxt = self.peek(n)
            if n > 1 and nxt is not None and nxt.is_op(">=") and nxt.start == self.toks[self.i + n - 1].end:
                return None  # glued shift-assignment
            return (">" * n, n) if n > 1 else (">", 1)
        if t.text in BINARY_PRECEDENCE:
            return t.text, 1
        return None

    def binary(self, min_prec: int) -> Node:
        first = self.i
        left = self.unary()
        while True:
            op = self.binary_operator()
            if op is None or BINARY_PRECEDENCE[op[0]] < min_prec:
                return left
            text, width = op
            self.i += width
            left.role = "left"
            if text == "instanceof":
                if self.at_kw("final"):
                    self.i += 1
                type_node = self.type_(role="type")
                pattern = self.leaf(Kind.SIMPLE_NAME, role="pattern") if self.at_ident() else None
                left = self.make(Kind.INSTANCEOF_EXPRESSION, first, [left, type_node, pattern])
                continue
            right = self.binary(BINARY_PRECEDENCE[text] + 1)
            right.role = "right"
            left = self.make(Kind.INFIX_EXPRESSION, first, [left, right])

    def unary(self) -> Node:
        first = self.i
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        if t.is_op("+", "-", "!", "~", "++", "--"):
            self.i += 1
            operand = self.unary()
            operand.role = "operand"
            return self.make(Kind.PREFIX_EXPRESSION, first, [operand])
        if t.is_op("("):
            cast = self.try_cast()
            if cast is not None:
                return cast
        node = self.postfix()
        return node

    def try_cast(self) -> Optional[Node]:
        first = self.i
        close = self.matching(self.i)
        if close is None:
            raise ParseError("unclosed parenthesis")
        after = self.toks[close + 1] if close + 1 < len(self.toks) else None
        if after is not None and after.is_op("->"):
            raise ParseError("lambda expressions are not supported")
        nxt = self.peek(1)
        if nxt is None:
            return None
        primitive = nxt.kind is TokenKind.KEYWORD and nxt.text in PRIMITIVES
        if not primitive and nxt.kind is not TokenKind.IDENT:
            return None
        self.i += 1
        try:
            type_node = self.type_(role="type")
            while self.at_op("&"):
                self.i += 1
                self._type_tokens()
                type_node.end, type_node.last = self.toks[self.i - 1].end, self.i
        except ParseError:
            self.i = first
            return None
        if self.i != close:
            self.i = first
            return None
        if after is None:
            self.i = first
            return None
        if not primitive:
            starts_operand = (
                after.kind in (TokenKind.IDENT, *LITERAL_KINDS)
                or after.is_op("(", "!", "~")
                or after.is_keyword("this", "super", "new")
            )
            if not starts_operand:
                self.i = first
                return None
        self.i = close + 1
        operand = self.unary()
        operand.role = "operand"
        return self.make(Kind.CAST, first, [type_node, operand])

    def postfix(self) -> Node:
        first = self.i
        node = self.primary()
        node = self.selectors(first, node)
        while self.at_op("++", "--"):
            self.i += 1
            node.role = "operand"
            node = self.make(Kind.POSTFIX_EXPRESSION, first, [node])
        return node

    def arguments(self) -> list[Node]:
        self.expect_op("(")
        args = []
        while not self.at_op(")"):
            args.append(self.expression(role="argument"))
            if not self.at_op(","):
                break
            self.i += 1
        self.expect_op(")")
        return args

    def primary(self) -> Node:
        first = self.i
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        if t.kind in LITERAL_KINDS:
            return self.leaf(Kind.LITERAL)
        if t.kind is TokenKind.IDENT:
            if self.at_op("->", k=1):
                raise ParseError("lambda expressions are not supported")
            name = self.leaf(Kind.SIMPLE_NAME)
            if self.at_op("("):
                name.role = "name"
                args = self.arguments()
                return self.make(Kind.METHOD_INVOCATION, first, [name] + args)
            return name
        if t.is_keyword("this", "super"):
            kind = Kind.THIS if t.text == "this" else Kind.SUPER
            node = self.leaf(kind)
            if self.at_op("("):
                # explicit constructor invocation
                node.role = "name"
                args = self.arguments()
                return self.make(Kind.METHOD_INVOCATION, first, [node] + args)
            return node
        if t.is_op("("):
            self.i += 1
            inner = self.expression(role="expression")
            self.expect_op(")")
            return self.make(Kind.PARENTHESIZED, first, [inner])
        if t.is_keyword("new"):
            return self.creation()
        if t.kind is TokenKind.KEYWORD and t.text in PRIMITIVES:
            type_node = self.type_(role="type")
            if self.at_op(".") and self.at_kw("class", k=1):
                self.i += 2
                return self.make(Kind.CLASS_LITERAL, first, [type_node])
            raise ParseError("unexpected primitive type")
        raise ParseError(f"unexpected token {t.text!r}")

    def creation(self) -> Node:
        first = self.i
        self.i += 1
        tfirst = self.i
        while self.at_op("@"):
            self.i += 1
            self.qualified_name()
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        if t.kind is TokenKind.KEYWORD and t.text in PRIMITIVES:
            self.i += 1
        else:
            self.expect_ident()
            self._type_arguments()
            while self.at_op(".") and self.at_ident(1):
                self.i += 2
                self._type_arguments()
        if self.at_op("["):
            dims: list[Node] = []
            while self.at_op("["):
                if self.at_op("]", k=1):
                    self.i += 2
                    continue
                self.i += 1
                dims.append(self.expression(role="dimension"))
                self.expect_op("]")
            type_node = self._trim_type(tfirst)
            init = self.array_initializer() if self.at_op("{") else None
            return self.make(Kind.ARRAY_CREATION, first, [type_node] + dims + [init])
        type_node = self.make(Kind.TYPE, tfirst, role="type")
        args = self.arguments()
        if self.at_op("{"):
            raise ParseError("anonymous classes are not supported")
        return self.make(Kind.OBJECT_CREATION, first, [type_node] + args)

    def _trim_type(self, tfirst: int) -> Node:
        """Element type of an array creation, excluding the dimension brackets."""
        j = tfirst
        while j < self.i and not self.toks[j].is_op("["):
            j += 1
        return Node(Kind.TYPE, self.toks[tfirst].start, self.toks[j - 1].end, tfirst, j,
                    self.source, role="type")

    def array_initializer(self) -> Node:
        first = self.i
        self.expect_op("{")
        elems = []
        while not self.at_op("}"):
            elem = self.array_initializer() if self.at_op("{") else self.expression()
            elem.role = "element"
            elems.append(elem)
            if not self.at_op(","):
                break
            self.i += 1
        self.expect_op("}")
        return self.make(Kind.ARRAY_INITIALIZER, first, elems)

    def selectors(self, first: int, node: Node) -> Node:
        while True:
            if self.at_op("."):
                nxt = self.peek(1)
                if nxt is None:
                    raise ParseError("unexpected end of input")
                if nxt.kind is TokenKind.IDENT:
                    self.i += 1
                    node.role = "receiver"
                    name = self.leaf(Kind.SIMPLE_NAME, role="name")
                    if self.at_op("("):
                        args = self.arguments()
                        node = self.make(Kind.METHOD_INVOCATION, first, [node, name] + args)
                    else:
                        node = self.make(Kind.FIELD_ACCESS, first, [node, name])
                    continue
                if nxt.is_keyword("class"):
                    self.i += 2
                    node = self._as_type(node)
                    node = self.make(Kind.CLASS_LITERAL, first, [node])
                    continue
                raise ParseError(f"unsupported selector .{nxt.text}")
            if self.at_op("["):
                if self.at_op("]", k=1):
                    # Foo[].class
                    while self.at_op("[") and self.at_op("]", k=1):
                        self.i += 2
                    if not (self.at_op(".") and self.at_kw("class", k=1)):
                        raise ParseError("expected .class")
                    tnode = Node(Kind.TYPE, node.start, self.toks[self.i - 1].end, node.first,
                                 self.i, self.source, role="type")
                    self.i += 2
                    node = self.make(Kind.CLASS_LITERAL, first, [tnode])
                    continue
                self.i += 1
                node.role = "array"
                index = self.expression(role="index")
                self.expect_op("]")
                node = self.make(Kind.ARRAY_ACCESS, first, [node, index])
                continue
            if self.at_op("::"):
                raise ParseError("method references are not supported")
            return node

    def _as_type(self, node: Node) -> Node:
        return Node(Kind.TYPE, node.start, node.end, node.first, node.last, self.source, role="type")


def _check_braces(tokens: list[Token], lines: LineIndex) -> None:
    stack: list[Token] = []
    for t in tokens:
        if t.is_op("{"):
            stack.append(t)
        elif t.is_op("}"):
            if not stack:
                line, col = lines.position(t.start)
                raise UnrecoverableInput("unmatched '}'", line, col)
            stack.pop()
    if stack:
        line, col = lines.position(stack[-1].start)
        raise UnrecoverableInput("unclosed '{'", line, col)


def _link(root: Node) -> None:
    for node in root.walk():
        for c in node.children:
            c.parent = node


def _method_views(root: Node) -> list[MethodView]:
    views = []
    for node in root.walk():
        if node.kind is not Kind.METHOD_DECLARATION:
            continue
        params = []
        for p in node.children_with("parameter"):
            params.append(ParameterView(p.child("name").text, p.child("type").text, p))
        ret = node.child("return_type")
        views.append(MethodView(
            name=node.child("name").text,
            parameters=params,
            return_type=ret.text if ret is not None else None,
            declaration=node,
            body=node.child("body"),
        ))
    return views


def parse_unit(source: str, path: str = "<memory>") -> CompilationUnit:
    """Parse Java source into a :class:`CompilationUnit`.

    Raises :class:`UnrecoverableInput` only for unbalanced braces.
    """
    tokens = tokenize(source)
    _check_braces(tokens, LineIndex(source))
    parser = _Parser(source, tokens)
    root = parser.compilation_unit()
    _link(root)
    return CompilationUnit(path=path, source=source, root=root, tokens=tokens,
                           methods=_method_views(root))


def parse_expression(source: str) -> Node:
    """Parse a standalone expression (handy for tests and the generation engine)."""
    tokens = tokenize(source)
    parser = _Parser(source, tokens)
    node = parser.expression()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at {parser.peek().text!r}")
    _link(node)
    return node


def dump_ast(node: Node, source_lines: Optional[LineIndex] = None, indent: int = 0) -> str:
    """Indented ``kind [line:col-line:col] role`` tree, one node per line."""
    lines = source_lines or LineIndex(node.source)
    out = []
    for child_depth, n in _walk_depth(node, indent):
        sl, sc = lines.position(n.start)
        el, ec = lines.position(max(n.start, n.end - 1))
        role = f" ({n.role})" if n.role else ""
        label = f" {n.text!r}" if not n.children and n.end - n.start <= 40 else ""
        out.append(f"{'  ' * child_depth}{n.kind.value} [{sl}:{sc}-{el}:{ec}]{role}{label}")
    return "\n".join(out)


def _walk_depth(node: Node, depth: int):
    yield depth, node
    for c in node.children:
        yield from _walk_depth(c, depth + 1)

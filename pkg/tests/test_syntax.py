from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from varnamer.syntax import (
    Kind, TokenKind, UnrecoverableInput, canonicalize_initialization, dump_ast, identifier_tokens,
    node_kind_multiset, parse_expression, parse_unit, split_subtokens, tokenize,
)


def test_dotidx_has_two_methods(dotidx_source):
    unit = parse_unit(dotidx_source)
    assert [m.name for m in unit.methods] == ["packageName", "simpleName"]
    for m in unit.methods:
        assert m.body is not None
        assert any(n is m.body for n in unit.root.walk())


def test_empty_input():
    unit = parse_unit("")
    assert unit.methods == []
    assert unit.root.kind is Kind.COMPILATION_UNIT


def test_lambda_statement_is_opaque_and_siblings_typed():
    src = """
    void run() {
        int total = 0;
        items.forEach(x -> System.out.println(x));
        total += 1;
        return;
    }
    """
    body = parse_unit(src).methods[0].body
    kinds = [c.kind for c in body.children]
    assert kinds == [Kind.LOCAL_VARIABLE_DECLARATION, Kind.OPAQUE_STATEMENT,
                     Kind.EXPRESSION_STATEMENT, Kind.RETURN_STATEMENT]
    opaque = body.children[1]
    assert opaque.children == []
    assert [t.text for t in opaque.tokens][:3] == ["items", ".", "forEach"]


def test_unbalanced_braces_reported_with_position():
    with pytest.raises(UnrecoverableInput) as info:
        parse_unit("class A {\n  void f() {\n}\n")
    assert (info.value.line, info.value.column) == (1, 9)


def test_full_class_parses():
    src = """
    package a.b;
    import java.util.*;
    @SuppressWarnings("x")
    public class Foo<T> extends Bar implements Baz {
        private static final int LIMIT = 10;
        public Foo(int n) { super(n); }
        @Override
        public <R> List<R> map(Map<String, List<T>> in, int... extra) throws IOException {
            for (int i = 0, j = 1; i < in.size(); i++) { j <<= 1; }
            for (String k : in.keySet()) { continue; }
            try (Reader r = open()) { r.read(); } catch (IOException | RuntimeException e) { throw e; }
            finally { close(); }
            do { x--; } while (x > 0 && !done);
            return (List<R>) cache.get(in.get("a") == null ? "b" : "c")[0];
        }
    }
    """
    unit = parse_unit(src)
    assert [m.name for m in unit.methods] == ["Foo", "map"]
    body = unit.methods[1].body
    assert all(c.kind is not Kind.OPAQUE_STATEMENT for c in body.children)
    assert unit.methods[1].parameters[0].type == "Map<String, List<T>>"


@pytest.mark.parametrize("ident, words", [
    ("dotIdx", ["dot", "idx"]),
    ("simpleName", ["simple", "name"]),
    ("HTTPResponse2xx", ["http", "response", "2", "xx"]),
    ("snake_case_name", ["snake", "case", "name"]),
    ("URL", ["url"]),
    ("parseXMLFile", ["parse", "xml", "file"]),
    ("", []),
])
def test_split_subtokens(ident, words):
    assert split_subtokens(ident) == words


@given(st.from_regex(r"[a-z]{1,12}", fullmatch=True))
def test_split_idempotent_on_lowercase_word(word):
    assert split_subtokens(word) == [word]


@given(st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,20}", fullmatch=True))
def test_subtokens_are_lowercase_alnum(ident):
    for w in split_subtokens(ident):
        assert w and w == w.lower() and w.isalnum()


@pytest.mark.parametrize("expr, idents", [
    ("exchange.getIn()", ["exchange", "getIn"]),
    ("0", []),
    ("name().lastIndexOf('.')", ["name", "lastIndexOf"]),
])
def test_identifier_tokens(expr, idents):
    assert identifier_tokens(parse_expression(expr)) == idents


def test_node_kind_multiset():
    leaf = parse_expression("x")
    assert node_kind_multiset(leaf) == Counter()
    ret = parse_unit("void f() { return x; }").methods[0].body.children[0]
    assert ret.kind is Kind.RETURN_STATEMENT
    assert node_kind_multiset(ret) == Counter({Kind.SIMPLE_NAME: 1})
    a = parse_unit("void f() { foo(a, 1); bar(b, 2); }").methods[0].body.children
    assert node_kind_multiset(a[0]) == node_kind_multiset(a[1])


def test_multiset_parent_contains_child(dotidx_source):
    root = parse_unit(dotidx_source).root
    for parent in root.walk():
        mp = node_kind_multiset(parent)
        for child in parent.children:
            need = node_kind_multiset(child) + Counter({child.kind: 1})
            assert not need - mp


def test_canonicalization():
    a = canonicalize_initialization("name().lastIndexOf( '.' )")
    assert a == canonicalize_initialization("name().lastIndexOf('.')")
    assert canonicalize_initialization("a+b") != canonicalize_initialization("b+a")
    assert canonicalize_initialization("new StringBuilder()") == "new StringBuilder ( )"


def _leaf_texts(node):
    if node.kind is Kind.OPAQUE_STATEMENT:
        return [t.text for t in node.tokens]
    if not node.children:
        return [t.text for t in tokenize(node.text)]
    out = []
    cursor = node.start
    for child in node.children:
        # punctuation owned directly by this node sits between its children
        out.extend(t.text for t in tokenize(node.source[cursor:child.start]))
        out.extend(_leaf_texts(child))
        cursor = child.end
    out.extend(t.text for t in tokenize(node.source[cursor:node.end]))
    return out


def _check_tree(root):
    for node in root.walk():
        assert node.text == node.source[node.start:node.end]
        prev_end = node.start
        for child in node.children:
            assert node.start <= child.start <= child.end <= node.end
            assert child.start >= prev_end
            prev_end = child.end


def test_round_trip_and_spans(dotidx_source):
    unit = parse_unit(dotidx_source)
    _check_tree(unit.root)
    assert _leaf_texts(unit.root) == [t.text for t in tokenize(dotidx_source)]


_STATEMENTS = st.sampled_from([
    "int a = b + c * 2;", "foo(bar, 1);", "if (x < 0) { y = 1; } else y = 2;",
    "for (int i = 0; i < n; i++) total += i;", "while (it.hasNext()) it.next();",
    "return (String) map.get(key);", "list.stream().map(v -> v * 2);", "x = y > z ? y : z;",
    "throw new IllegalStateException(\"bad\");", "String[] parts = s.split(\",\");",
    "obj.field.method()[i] = new int[3];", "@@@ garbage $$ ;", "a.b = c >> 2 >>> 1;",
])


@settings(max_examples=60, deadline=None)
@given(st.lists(_STATEMENTS, max_size=8))
def test_round_trip_property(stmts):
    src = "class K {\n void m(int n) {\n" + "\n".join(stmts) + "\n }\n}\n"
    unit = parse_unit(src)
    _check_tree(unit.root)
    assert _leaf_texts(unit.root) == [t.text for t in tokenize(src)]
    again = parse_unit(src)
    assert dump_ast(again.root) == dump_ast(unit.root)


@given(st.text(max_size=200))
def test_tokenizer_never_raises(text):
    toks = tokenize(text)
    assert all(t.kind in TokenKind for t in toks)


def test_dump_ast_format(dotidx_source):
    lines = dump_ast(parse_unit(dotidx_source).root).splitlines()
    assert lines[0].startswith("compilation-unit [1:1-")
    assert any("(name) 'packageName'" in line for line in lines)

import pytest
from hypothesis import given, strategies as st

import hypsolid as H
from hypsolid.terms import CapExceeded, ParseError, Var, app, var


def term_strategy(max_var=3):
    return st.recursive(
        st.integers(min_value=1, max_value=max_var).map(var),
        lambda inner: st.tuples(inner, inner).map(lambda pair: app("f", pair)),
        max_leaves=12,
    )


# --- signatures ---------------------------------------------------------


def test_parse_signature_single_binary(sig2):
    assert sig2.symbols == (("f", 2),)
    assert sig2.arity("f") == 2


def test_parse_signature_two_binary(sig22):
    assert sig22.symbols == (("f", 2), ("g", 2))


def test_parse_signature_comments_and_blank_lines():
    sig = H.parse_signature("# a comment\n\nf 2  # trailing\n")
    assert sig.symbols == (("f", 2),)


@pytest.mark.parametrize(
    "text",
    ["f 0", "f -1", "f 2\nf 3", "f", "f two", "f 2 extra"],
)
def test_parse_signature_rejects(text):
    with pytest.raises(ParseError):
        H.parse_signature(text)


# --- term parsing and printing ------------------------------------------


def test_parse_term_flat(sig2):
    assert H.parse_term("f(x,y)", sig2) == app("f", (var(1), var(2)))


def test_parse_term_nested(sig2):
    t = H.parse_term("f(f(x,y),z)", sig2)
    assert t == app("f", (app("f", (var(1), var(2))), var(3)))


def test_parse_term_numbered_and_aliases(sig2):
    assert H.parse_term("x1", sig2) == var(1)
    assert H.parse_term("w", sig2) == var(6)
    assert H.parse_term("x42", sig2) == var(42)
    assert H.parse_term("f(u, v)", sig2) == app("f", (var(4), var(5)))


@pytest.mark.parametrize(
    "text",
    ["f(x)", "f(x,y,z)", "g(x,y)", "f(x,q9)", "f(x,y))", "f(x,,y)", "x0", ""],
)
def test_parse_term_rejects(text, sig2):
    with pytest.raises(ParseError):
        H.parse_term(text, sig2)


def test_render_term_examples(sig2):
    assert H.render_term(app("f", (var(1), var(2)))) == "f(x1,x2)"
    assert H.render_term(var(1)) == "x1"
    t = H.parse_term("f(f(x,y),z)", sig2)
    assert H.render_term(t) == "f(f(x1,x2),x3)"


def test_parse_render_roundtrip_on_universe(sig2):
    for t in H.enumerate_terms(sig2, 3, 2):
        assert H.parse_term(H.render_term(t), sig2) == t


@given(term_strategy())
def test_parse_render_roundtrip_random(t):
    sig = H.parse_signature("f 2")
    assert H.parse_term(H.render_term(t), sig) == t


# --- metrics -------------------------------------------------------------


def test_metrics_variable():
    m = H.metrics(var(1))
    assert (m.depth, m.length, m.varset, m.varcount) == (0, 1, (1,), 1)


def test_metrics_flat(sig2):
    m = H.metrics(H.parse_term("f(x,y)", sig2))
    assert (m.depth, m.length, m.varset) == (1, 2, (1, 2))


def test_metrics_nested(sig2):
    m = H.metrics(H.parse_term("f(f(x,y),z)", sig2))
    assert (m.depth, m.length, m.varcount) == (2, 3, 3)


def _metrics_by_worklist(t):
    """Independent recomputation: explicit-stack traversal, no recursion."""
    depth = {}
    length = {}
    varset = {}
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Var):
            depth[node] = 0
            length[node] = 1
            varset[node] = frozenset((node.index,))
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children)
        else:
            depth[node] = 1 + max(depth[c] for c in node.children)
            length[node] = sum(length[c] for c in node.children)
            varset[node] = frozenset().union(*(varset[c] for c in node.children))
    return depth[t], length[t], tuple(sorted(varset[t]))


def test_metrics_agree_with_worklist(sig2):
    for t in H.enumerate_terms(sig2, 3, 2):
        m = H.metrics(t)
        assert (m.depth, m.length, m.varset) == _metrics_by_worklist(t)
        assert m.varcount == len(m.varset) <= m.length
        assert (m.depth == 0) == isinstance(t, Var)


# --- superposition -------------------------------------------------------


def test_superpose_projects_variables(sig2):
    t1 = H.parse_term("f(x,y)", sig2)
    t2 = var(3)
    assert H.superpose(var(1), [t1, t2]) == t1
    assert H.superpose(var(2), [t1, t2]) == t2


def test_superpose_renames(sig2):
    s = H.parse_term("f(x1,x2)", sig2)
    assert H.superpose(s, [var(2), var(3)]) == H.parse_term("f(x2,x3)", sig2)


def test_superpose_hand_expanded(sig2):
    # substituting into f(x2,x1) swaps the argument order
    s = H.parse_term("f(x2,x1)", sig2)
    out = H.superpose(s, [H.parse_term("f(x,y)", sig2), var(3)])
    assert out == H.parse_term("f(z,f(x,y))", sig2)


def test_superpose_index_out_of_range(sig2):
    with pytest.raises(ValueError):
        H.superpose(H.parse_term("f(x1,x3)", sig2), [var(1), var(2)])


def test_superpose_identity_substitution(sig2):
    identity_args = [var(1), var(2), var(3)]
    for t in H.enumerate_terms(sig2, 2, 3):
        assert H.superpose(t, identity_args) == t


@given(term_strategy(), st.lists(term_strategy(), min_size=3, max_size=3))
def test_superpose_depth_bound(s, args):
    out = H.superpose(s, args)
    assert out.depth <= s.depth + max(a.depth for a in args)


# --- enumeration ---------------------------------------------------------


def _count_universe(arities, max_depth, max_var):
    """Independent recurrence: |T(d)| = v + sum_i |T(d-1)|^{n_i}."""
    total = max_var
    for _ in range(max_depth):
        total = max_var + sum(total ** a for a in arities)
    return total


def test_enumerate_depth0(sig2):
    assert H.enumerate_terms(sig2, 0, 2) == [var(1), var(2)]


def test_enumerate_depth1_count(sig2):
    terms = H.enumerate_terms(sig2, 1, 2)
    assert len(terms) == 6 == _count_universe([2], 1, 2)
    assert len(set(terms)) == 6


def test_enumerate_depth2_onevar_matches_recurrence(sig2):
    terms = H.enumerate_terms(sig2, 2, 1)
    assert len(terms) == _count_universe([2], 2, 1) == 5


@pytest.mark.parametrize(
    "sig_text,depth,nvars",
    [("f 2", 3, 2), ("f 2", 2, 3), ("f 2\ng 2", 2, 2), ("f 3", 2, 2)],
)
def test_enumerate_matches_recurrence(sig_text, depth, nvars):
    sig = H.parse_signature(sig_text)
    terms = H.enumerate_terms(sig, depth, nvars)
    arities = [a for _, a in sig.symbols]
    assert len(terms) == _count_universe(arities, depth, nvars)
    assert len(set(terms)) == len(terms)


def test_enumerate_is_ordered_by_depth(sig2):
    terms = H.enumerate_terms(sig2, 2, 2)
    depths = [t.depth for t in terms]
    assert depths == sorted(depths)
    # deterministic prefix: variables, then the four depth-1 applications
    rendered = [H.render_term(t) for t in terms[:6]]
    assert rendered == ["x1", "x2", "f(x1,x1)", "f(x1,x2)", "f(x2,x1)", "f(x2,x2)"]


def test_enumerate_cap(sig2):
    with pytest.raises(CapExceeded):
        H.enumerate_terms(sig2, 4, 3, cap=10_000)

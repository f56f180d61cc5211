import itertools
from math import comb
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphkoszul import oracle
from graphkoszul.freealg import NcPolynomial, edge, vertex
from graphkoszul.graphs import enumerate_graphs, from_edge_list, named_family
from graphkoszul.groebner import (
    DegreeBoundError,
    complete,
    dim_vector,
    dump,
    leading_words,
    normal_form,
    normal_words,
    overlaps,
)
from graphkoszul.presentations import (
    b_presentation,
    bdual_handwritten,
    graph_alphabet,
    q_presentation,
    quadratic_dual,
)

GOLDEN = Path(__file__).parent / "golden"
P3 = from_edge_list(3, [(1, 2), (2, 3)])
K3 = named_family("complete", 3)


def show(word):
    return "*".join(map(str, word))


def test_overlap_suffix_prefix():
    (ov,) = overlaps("abc", "bcd")
    assert ov.word == tuple("abcd")
    assert ov.left1 + tuple("abc") + ov.right1 == ov.word
    assert ov.left2 + tuple("bcd") + ov.right2 == ov.word


def test_self_overlap_counted_once():
    assert [o.word for o in overlaps("aa", "aa")] == [tuple("aaa")]


def test_containment_and_disjoint():
    (ov,) = overlaps("abc", "b")
    assert (ov.left2, ov.right2) == (("a",), ("c",))
    ei, ejk = vertex(1, "e"), edge(3, 2, "e")
    ep, eqr = vertex(4, "e"), edge(5, 4, "e")
    assert overlaps((ei, ejk), (ep, eqr)) == []


def test_both_directions():
    words = {o.word for o in overlaps("ab", "ba")}
    assert words == {tuple("aba"), tuple("bab")}


def test_u_relation_reduces_to_zero():
    gb = complete(bdual_handwritten(from_edge_list(2, [(1, 2)])), bound=3)
    word = NcPolynomial.monomial((vertex(1, "e"), edge(2, 1, "e")))
    assert not normal_form(word, gb)


def test_normal_form_is_normal_and_linear():
    gb = complete(q_presentation(P3), bound=3)
    alphabet = graph_alphabet(P3)
    for w in itertools.product(alphabet, repeat=2):
        nf = normal_form(NcPolynomial.monomial(w), gb)
        assert normal_form(nf, gb) == nf
    x = NcPolynomial.monomial((vertex(3), vertex(1), vertex(2)))
    y = NcPolynomial.monomial((edge(3, 2), vertex(2), edge(2, 1)))
    assert normal_form(x + y.scale(3), gb) == normal_form(x, gb) + normal_form(y, gb).scale(3)


def test_relations_reduce_to_zero_in_every_context():
    pres = q_presentation(P3)
    gb = complete(pres, bound=3)
    for r in pres.relations:
        assert not normal_form(r, gb)
        for x in pres.alphabet:
            v = NcPolynomial.var(x)
            assert not normal_form(v * r, gb)
            assert not normal_form(r * v, gb)


def test_truncation_is_enforced():
    gb = complete(q_presentation(P3), bound=2)
    with pytest.raises(DegreeBoundError):
        normal_form(NcPolynomial.monomial((vertex(1),) * 3), gb)
    with pytest.raises(DegreeBoundError):
        normal_words(gb, 3)


def test_truncation_is_sound():
    # a basis completed to a smaller bound agrees with a larger one below it
    pres = q_presentation(K3)
    small, large = complete(pres, bound=3), complete(pres, bound=4)
    assert dim_vector(small, 3) == dim_vector(large, 3)


def test_q_path_degree_three():
    gb = complete(q_presentation(P3), bound=3)
    assert tuple(dim_vector(gb, 3).dims) == (1, 5, 20, 76)
    assert 125 - oracle.ideal_component_dim(q_presentation(P3), 3) == 76


def test_dim_vector_matches_oracles():
    for g in enumerate_graphs(4, no_isolated=True):
        for pres in (q_presentation(g), b_presentation(g), quadratic_dual(b_presentation(g))):
            D = 3
            dims = dim_vector(complete(pres, bound=D), D).dims
            assert dims == oracle.rank_dims(pres, D) == oracle.quotient_dims(pres, D), (g, pres.name)


def test_dual_of_path():
    gb = complete(bdual_handwritten(P3), bound=4)
    assert dim_vector(gb, 4).dims == (1, 5, 5, 1, 0)
    assert [show(w) for w in normal_words(gb, 3)] == ["e1*e2*e3"]


def test_exterior_algebra_has_ascending_normal_words():
    # vertex letters only, so the basis is the square-free ascending words
    for n in range(1, 5):
        gb = complete(bdual_handwritten(named_family("empty", n)), bound=n + 1)
        assert gb.max_degree() == 2
        dims = dim_vector(gb, n + 1).dims
        assert dims == tuple(comb(n, d) for d in range(n + 2))
    gb = complete(bdual_handwritten(named_family("empty", 3)), bound=3)
    assert [show(w) for w in normal_words(gb, 2)] == ["e1*e2", "e1*e3", "e2*e3"]


def test_tensor_embedding_of_path_dual_needs_cubic_elements():
    # ascending words e_a e_b e_c avoid every quadratic leading word, yet
    # e32*e1*e3 dies because e1 and e3 anticommute past the square-free edge letter
    gb = complete(bdual_handwritten(P3), bound=4)
    cubic = {show(max(p.terms, key=gb.order.key)) for p in gb.elements if max(p.degrees()) == 3}
    assert cubic == {"e32*e1*e3", "e32*e1*e2"}


def test_leading_words_of_path_dual_contain_families():
    gb = complete(bdual_handwritten(P3), bound=4)
    leads = {show(w) for w in leading_words(gb, 2)}
    # e_j e_jk for every incidence, e_ij e_jk with i > k for the adjacent pair
    assert {"e3*e32", "e2*e32", "e2*e21", "e1*e21", "e32*e21"} <= leads


def test_golden_gb_dumps():
    assert dump(complete(bdual_handwritten(P3), bound=4)) == _strip_dims(GOLDEN / "P3_bdual_gb4.txt")
    assert dump(complete(q_presentation(K3), bound=4)) == _strip_dims(GOLDEN / "K3_q_gb4.txt")


def _strip_dims(path):
    return "".join(line for line in path.read_text().splitlines(True) if not line.startswith("dims:"))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(graph_alphabet(P3)), min_size=3, max_size=3))
def test_normal_form_idempotent_on_random_words(word):
    gb = complete(q_presentation(P3), bound=3)
    nf = normal_form(NcPolynomial.monomial(tuple(word)), gb)
    assert normal_form(nf, gb) == nf
    words = set(normal_words(gb, 3))
    assert all(w in words for w in nf.terms)

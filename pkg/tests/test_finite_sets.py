import itertools

import pytest
from hypothesis import given, strategies as st

from continuum.errors import BudgetExceeded, DisjointnessViolation
from continuum.finite_sets import (
    Covering,
    FiniteSet,
    LAW_IDS,
    LawWitness,
    cardinal_add,
    cardinal_mul,
    cardinal_pow,
    covering_set,
    disjoint_union,
    make_set,
    product,
    tagged_union,
    verify_exponent_law,
)

labels = st.lists(st.sampled_from("abcdexyz01"), max_size=8)


# ---------------------------------------------------------------------------
# construction and unions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "raw, expected",
    [
        (["a", "b", "c"], ("a", "b", "c")),
        ([], ()),
        (["a", "a", "b"], ("a", "b")),
        (["b", "a", "b", "a"], ("b", "a")),
    ],
)
def test_make_set(raw, expected):
    assert make_set(raw).elements == expected


def test_finite_set_rejects_duplicates():
    with pytest.raises(ValueError):
        FiniteSet(("a", "a"))


@given(labels)
def test_make_set_keeps_first_occurrence_order(raw):
    result = make_set(raw).elements
    assert list(result) == sorted(set(raw), key=raw.index)


def test_disjoint_union_concatenates():
    assert disjoint_union(make_set("ab"), make_set("c")).elements == ("a", "b", "c")
    assert disjoint_union(make_set(""), make_set("x")).elements == ("x",)


def test_disjoint_union_rejects_overlap():
    with pytest.raises(DisjointnessViolation) as err:
        disjoint_union(make_set("a"), make_set("a"))
    assert err.value.common == ("a",)
    with pytest.raises(DisjointnessViolation) as err:
        disjoint_union(make_set("abc"), make_set("cda"))
    assert err.value.common == ("a", "c")


@given(labels, labels)
def test_disjoint_union_succeeds_iff_disjoint(left_raw, right_raw):
    left, right = make_set(left_raw), make_set(right_raw)
    overlapping = set(left.elements) & set(right.elements)
    if overlapping:
        with pytest.raises(DisjointnessViolation):
            disjoint_union(left, right)
    else:
        assert len(disjoint_union(left, right)) == len(left) + len(right)


def test_tagged_union_is_total():
    assert tagged_union(make_set("a"), make_set("a")).elements == ("L.a", "R.a")
    assert tagged_union(make_set("ab"), make_set("")).elements == ("L.a", "L.b")
    assert tagged_union(make_set(""), make_set("")).elements == ()


@given(labels, labels)
def test_tagged_union_size_always_adds(left_raw, right_raw):
    left, right = make_set(left_raw), make_set(right_raw)
    assert len(tagged_union(left, right)) == len(left) + len(right)


def test_product_enumeration_order():
    got = product(make_set("ab"), make_set("01")).elements
    assert got == ("(a,0)", "(a,1)", "(b,0)", "(b,1)")
    assert product(make_set("a"), make_set("")).elements == ()
    assert len(product(make_set("abc"), make_set("01"))) == 6


# ---------------------------------------------------------------------------
# covering sets
# ---------------------------------------------------------------------------

def test_covering_set_of_three_with_two():
    cs = covering_set(make_set("abc"), make_set("01"))
    words = [cov.word() for cov in cs]
    assert set(words) == {"000", "001", "010", "100", "011", "101", "110", "111"}
    assert words == sorted(words)  # lexicographic enumeration


def test_covering_set_empty_cases():
    assert len(covering_set(make_set(""), make_set("01"))) == 1
    assert covering_set(make_set(""), make_set("01")).coverings[0].assignment == ()
    assert len(covering_set(make_set("ab"), make_set(""))) == 0
    assert len(covering_set(make_set(""), make_set(""))) == 1


def test_covering_set_enumeration_is_stable():
    first = covering_set(make_set("abc"), make_set("012"))
    second = covering_set(make_set("abc"), make_set("012"))
    assert [c.assignment for c in first] == [c.assignment for c in second]


@given(st.integers(0, 5), st.integers(0, 3))
def test_covering_set_count_and_distinctness(n_size, m_size):
    domain = make_set(f"n{i}" for i in range(n_size))
    codomain = make_set(f"m{i}" for i in range(m_size))
    cs = covering_set(domain, codomain)
    assert len(cs) == m_size**n_size
    assert len({c.assignment for c in cs}) == len(cs)


def test_covering_lookup_and_validation():
    cs = covering_set(make_set("ab"), make_set("01"))
    cov = cs.coverings[1]
    assert cov("a") == "0" and cov("b") == "1"
    with pytest.raises(ValueError):
        Covering(make_set("ab"), make_set("01"), ("0",))
    with pytest.raises(ValueError):
        Covering(make_set("ab"), make_set("01"), ("0", "2"))


# ---------------------------------------------------------------------------
# cardinal arithmetic via enumeration
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("a, b, expected", [(2, 3, 5), (0, 7, 7), (4, 4, 8), (0, 0, 0)])
def test_cardinal_add(a, b, expected):
    assert cardinal_add(a, b) == expected


@pytest.mark.parametrize("a, b, expected", [(2, 3, 6), (5, 0, 0), (1, 9, 9)])
def test_cardinal_mul(a, b, expected):
    assert cardinal_mul(a, b) == expected


@pytest.mark.parametrize("a, b, expected", [(2, 3, 8), (7, 0, 1), (3, 2, 9), (0, 0, 1), (0, 2, 0)])
def test_cardinal_pow(a, b, expected):
    assert cardinal_pow(a, b) == expected


@given(st.integers(0, 30), st.integers(0, 30))
def test_cardinal_add_matches_integers(a, b):
    assert cardinal_add(a, b) == a + b


@given(st.integers(0, 20), st.integers(0, 20))
def test_cardinal_mul_matches_integers(a, b):
    assert cardinal_mul(a, b) == a * b


@given(st.integers(0, 4), st.integers(0, 5))
def test_cardinal_pow_matches_integers(a, b):
    assert cardinal_pow(a, b) == a**b


def test_cardinal_ops_reject_negatives():
    for op in (cardinal_add, cardinal_mul, cardinal_pow):
        with pytest.raises(ValueError):
            op(-1, 2)


# ---------------------------------------------------------------------------
# exponent laws
# ---------------------------------------------------------------------------

def _predicted_sides(law_id, a, b, c):
    if law_id == "ADD_EXP":
        return a**b * a**c, a ** (b + c)
    if law_id == "MUL_EXP":
        return a**c * b**c, (a * b) ** c
    return (a**b) ** c, a ** (b * c)


def test_add_exp_witness_size():
    witness = verify_exponent_law("ADD_EXP", 2, 2, 3)
    assert len(witness.left_set) == len(witness.right_set) == 32 == 2**5
    assert witness.is_bijection()


def test_curry_witness_size():
    witness = verify_exponent_law("CURRY", 2, 2, 2)
    assert len(witness.left_set) == 16 == 2 ** (2 * 2)
    assert witness.is_bijection()


@pytest.mark.parametrize("law_id", ["MUL_EXP", "CURRY"])
def test_empty_p_gives_singleton_witness(law_id):
    witness = verify_exponent_law(law_id, 3, 2, 0)
    assert len(witness.left_set) == len(witness.right_set) == 1
    assert witness.is_bijection()


@pytest.mark.parametrize("law_id", LAW_IDS)
@pytest.mark.parametrize("a, b, c", list(itertools.product(range(3), repeat=3)))
def test_laws_small_exhaustive(law_id, a, b, c):
    witness = verify_exponent_law(law_id, a, b, c)
    left, right = _predicted_sides(law_id, a, b, c)
    assert len(witness.left_set) == left
    assert len(witness.right_set) == right
    assert witness.is_bijection()


def test_unknown_law_rejected():
    with pytest.raises(ValueError):
        verify_exponent_law("POW_POW", 1, 1, 1)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        verify_exponent_law("CURRY", 10, 6, 6)
    with pytest.raises(BudgetExceeded):
        verify_exponent_law("ADD_EXP", 2, 2, 2, budget=5)


def test_law_witness_detects_bad_pairs():
    witness = verify_exponent_law("ADD_EXP", 2, 1, 1)
    broken = LawWitness(
        witness.law_id,
        witness.left_set,
        witness.right_set,
        witness.pairs[:-1] + (witness.pairs[0],),
    )
    assert not broken.is_bijection()

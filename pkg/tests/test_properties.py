"""Randomized algebraic laws, as stated in the module contracts."""

from hypothesis import given, settings
from hypothesis import strategies as st

from quiddity import (
    ID,
    K,
    TARGET_ID,
    apply_op_a,
    apply_op_b,
    check_equation,
    dissection_from_id_solution,
    eval_word,
    is_positive,
    minimal_presentation,
    minimality_criterion_ok,
    normalize_with_trace,
    positive_word_of_matrix,
    quiddity_of,
    reduce_word,
    replay_trace,
    reverse_word,
    rotate_word,
)

int_words = st.lists(st.integers(-10, 10), min_size=0, max_size=12).map(tuple)
positive_words = st.lists(st.integers(1, 9), min_size=1, max_size=10).map(tuple)


@given(int_words)
def test_eval_is_unimodular(word):
    assert eval_word(word).det() == 1


@given(positive_words.filter(lambda w: len(w) >= 2), st.data())
def test_op_a_preserves_eval(word, data):
    gap = data.draw(st.integers(1, len(word) - 1))
    assert eval_word(apply_op_a(word, gap)) == eval_word(word)


@given(positive_words, st.data())
def test_op_b_negates_eval(word, data):
    pos = data.draw(st.integers(1, len(word)))
    a_prime = data.draw(st.integers(1, word[pos - 1]))
    grown = apply_op_b(word, pos, a_prime)
    assert len(grown) == len(word) + 3
    assert eval_word(grown) == -eval_word(word)


@given(int_words)
def test_reduce_word_contract(word):
    reduced, sign, trace = reduce_word(word)
    target = eval_word(reduced) if sign == 1 else -eval_word(reduced)
    assert target == eval_word(word)
    assert all(e not in (0, 1) for e in reduced[1:-1])
    assert replay_trace(word, trace) == (reduced, sign)


@given(int_words)
def test_normalize_contract(word):
    positive, sign, trace = normalize_with_trace(word)
    assert is_positive(positive)
    target = eval_word(positive) if sign == 1 else -eval_word(positive)
    assert target == eval_word(word)
    assert replay_trace(word, trace) == (positive, sign)


@given(int_words, st.data())
def test_rotation_conjugation(word, data):
    k = data.draw(st.integers(0, len(word)))
    rotated, conj = rotate_word(word, k)
    assert eval_word(rotated) == conj * eval_word(word) * conj.inv()


@given(int_words)
def test_reversal_identity(word):
    assert eval_word(reverse_word(word)) == K * eval_word(word).inv() * K


@given(int_words)
def test_positive_word_of_matrix_postcondition(word):
    m = eval_word(word)
    positive, sign = positive_word_of_matrix(m)
    assert is_positive(positive)
    assert (eval_word(positive) if sign == 1 else -eval_word(positive)) == m


@settings(max_examples=60)
@given(int_words)
def test_minimal_presentation_postcondition(word):
    m = eval_word(word)
    minimal, sign = minimal_presentation(m)
    assert minimality_criterion_ok(minimal)
    assert (eval_word(minimal) if sign == 1 else -eval_word(minimal)) == m
    if word and is_positive(word) and m != ID and m != -ID:
        assert len(minimal) <= len(word)


op_scripts = st.lists(
    st.tuples(st.sampled_from(["a", "b"]), st.integers(0, 10 **6), st.integers(0, 10 **6)),
    min_size=0,
    max_size=4,
)


@settings(max_examples=80, deadline=None)
@given(op_scripts)
def test_random_id_solutions_round_trip(script):
    # grow a solution of the identity equation by random surgeries, then
    # rebuild it as a dissection and read the quiddity back
    word = (1, 1, 1)
    for kind, raw_pos, raw_split in script:
        n = len(word)
        if kind == "a":
            gap = 1 + raw_pos % n
            word = apply_op_a(word, gap, cyclic=gap == n)
        else:
            pos = 1 + raw_pos % n
            word = apply_op_b(word, pos, 1 + raw_split % word[pos - 1])
    assert check_equation(word, TARGET_ID) is not None
    assert quiddity_of(dissection_from_id_solution(word)) == word

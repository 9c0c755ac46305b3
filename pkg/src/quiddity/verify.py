"""One-shot verification suite: re-checks the library's theorems at desk scale.

Each check returns (name, ok, detail); the CLI prints one line per check.
Sizes scale with max_n so the default run stays fast.
"""

from __future__ import annotations

import random
from math import comb

from .dissections import (
    cc_triangulation_check,
    coiffee_from_t_solution,
    dissection_from_id_solution,
    echancree_from_s_solution,
    enumerate_dissections,
    quiddity_of,
    solution_from_dissection,
)
from .matrices import ID, K, S, T, T_INV, Mat2
from .render import RenderSpec, render
from .solvers import (
    TARGET_ID,
    TARGET_S,
    TARGET_T,
    check_equation,
    enumerate_solutions,
    generate_closure,
    matrix_order,
    minimal_presentation,
)
from .words import (
    eval_word,
    normalize_to_positive,
    reduce_word,
    reverse_word,
    rotate_word,
)

Check = tuple[str, bool, str]

SEEDS = {TARGET_ID.name: (1, 1, 1), TARGET_S.name: (1, 1, 2, 1, 1), TARGET_T.name: (1, 1, 2)}


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return name, bool(ok), detail


def check_generator_identities() -> Check:
    facts = [
        eval_word((1, 1, 1)) == -ID,
        eval_word((1, 1, 2, 1, 1)) == -S,
        eval_word((1, 1, 2)) == -T,
        eval_word((1, 2, 1, 1)) == -T_INV,
        eval_word((1, 2, 1, 2)) == -ID,
        eval_word((2, 1, 1)) == Mat2(-1, 0, 1, -1),
        eval_word((2, 1, 1)) not in (T, -T),
        eval_word(()) == ID,
    ]
    return _check("generator-identities", all(facts))


def check_s_small_n() -> Check:
    ok = all(not enumerate_solutions(n, TARGET_S, n + 2).solutions for n in (1, 2, 3, 4))
    at5 = enumerate_solutions(5, TARGET_S, 7)
    ok = ok and [(s.word, s.sign) for s in at5.solutions] == [((1, 1, 2, 1, 1), -1)]
    return _check("s-small-n-classification", ok)


def check_t_small_n() -> Check:
    ok = all(not enumerate_solutions(n, TARGET_T, n + 2).solutions for n in (1, 2))
    at3 = enumerate_solutions(3, TARGET_T, 5)
    ok = ok and [(s.word, s.sign) for s in at3.solutions] == [((1, 1, 2), -1)]
    at4 = enumerate_solutions(4, TARGET_T, 6)
    ok = ok and [(s.word, s.sign) for s in at4.solutions] == [
        ((1, 2, 1, 3), -1),
        ((2, 1, 2, 2), -1),
    ]
    return _check("t-small-n-classification", ok)


def check_closure_completeness(max_n: int) -> Check:
    for target in (TARGET_ID, TARGET_S, TARGET_T):
        seed = SEEDS[target.name]
        if len(seed) > max_n:
            continue
        seed_sign = check_equation(seed, target)
        closure = generate_closure(seed, max_n, target)
        for sol in closure.solutions:
            if sol.sign != seed_sign * (-1) ** sol.op_b_parity:
                return _check("closure-completeness", False, f"sign law at {sol.word}")
        for n in range(1, max_n + 1):
            grown = set(closure.words_of_length(n))
            brute = set(enumerate_solutions(n, target, n + 2).words())
            if grown != brute:
                return _check(
                    "closure-completeness",
                    False,
                    f"{target.name} at n={n}: closure {len(grown)} != brute {len(brute)}",
                )
    return _check("closure-completeness", True)


def check_contains_a_one(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        for word in enumerate_solutions(n, TARGET_ID, n + 2).words():
            if 1 not in word:
                return _check("contains-a-one", False, f"Id solution {word}")
        for word in enumerate_solutions(n, TARGET_S, n + 2).words():
            if 1 not in word[1:-1]:
                return _check("contains-a-one", False, f"S solution {word}")
        for word in enumerate_solutions(n, TARGET_T, n + 2).words():
            if 1 not in word:
                return _check("contains-a-one", False, f"T solution {word}")
    return _check("contains-a-one", True)


def check_reversal(max_n: int) -> Check:
    for n in range(1, max_n + 1):
        words = set(enumerate_solutions(n, TARGET_S, n + 2).words())
        if {reverse_word(w) for w in words} != words:
            return _check("reversal-closure", False, f"S solutions at n={n}")
    ok = check_equation((1, 1, 2), TARGET_T) == -1
    ok = ok and check_equation((2, 1, 1), TARGET_T) is None
    return _check("reversal-closure", ok)


def check_rotation_conjugation(samples: int, rng: random.Random) -> Check:
    for _ in range(samples):
        n = rng.randint(1, 10)
        word = tuple(rng.randint(1, 9) for _ in range(n))
        k = rng.randint(0, n)
        rotated, conj = rotate_word(word, k)
        if eval_word(rotated) != conj * eval_word(word) * conj.inv():
            return _check("rotation-conjugation", False, f"{word} at k={k}")
    return _check("rotation-conjugation", True, f"{samples} samples")


def check_minimal_presentations() -> Check:
    ok = minimal_presentation(S) == ((1, 1, 2, 1, 1), -1)
    ok = ok and minimal_presentation(T) == ((1, 1, 2), -1)
    ok = ok and all(
        not enumerate_solutions(k, TARGET_S, k + 2).solutions for k in (1, 2, 3, 4)
    )
    ok = ok and all(not enumerate_solutions(k, TARGET_T, k + 2).solutions for k in (1, 2))
    return _check("minimal-presentations", ok)


def check_round_trips(max_n: int) -> Check:
    for n in range(3, max_n + 1):
        for word in enumerate_solutions(n, TARGET_ID, n + 2).words():
            if quiddity_of(dissection_from_id_solution(word)) != word:
                return _check("bijection-round-trips", False, f"plain {word}")
        for word in enumerate_solutions(n, TARGET_S, n + 2).words():
            if quiddity_of(echancree_from_s_solution(word)) != word:
                return _check("bijection-round-trips", False, f"echancree {word}")
        for word in enumerate_solutions(n, TARGET_T, n + 2).words():
            if word[-1] >= 2:
                if quiddity_of(coiffee_from_t_solution(word)) != word:
                    return _check("bijection-round-trips", False, f"coiffee {word}")
            elif check_equation(word[:-1], TARGET_S) is None:
                return _check("bijection-round-trips", False, f"T prefix {word}")
    for vc in range(3, max_n + 2):
        for d in enumerate_dissections(vc, "plain"):
            solution_from_dissection(d)
    for vc in range(6, max_n + 2):
        for d in enumerate_dissections(vc, "echancree"):
            solution_from_dissection(d)
    for vc in range(5, max_n + 3):
        for d in enumerate_dissections(vc, "coiffee"):
            solution_from_dissection(d)
    return _check("bijection-round-trips", True)


def check_counting(max_n: int) -> Check:
    expect = {3: 1, 4: 2, 5: 5, 6: 15}
    for n, count in expect.items():
        if len(enumerate_solutions(n, TARGET_ID, n + 2).solutions) != count:
            return _check("counting-cross-checks", False, f"Id count at n={n}")
    if len(enumerate_solutions(6, TARGET_S, 8).solutions) != 4:
        return _check("counting-cross-checks", False, "S count at n=6")
    if len(enumerate_dissections(5, "plain")) != 5:
        return _check("counting-cross-checks", False, "pentagon dissection count")
    for n in range(4, min(max_n, 8) + 1):
        tris = [
            d
            for d in enumerate_dissections(n, "plain")
            if cc_triangulation_check(d).is_triangulation
        ]
        if len(tris) != catalan(n - 2):
            return _check("counting-cross-checks", False, f"Catalan at n={n}")
        cc_words = {
            w
            for w in enumerate_solutions(n, TARGET_ID, n + 2).words()
            if sum(w) == 3 * n - 6
        }
        if cc_words != {quiddity_of(d) for d in tris}:
            return _check("counting-cross-checks", False, f"CC filter at n={n}")
    return _check("counting-cross-checks", True)


def check_rewriting(samples: int, rng: random.Random) -> Check:
    for _ in range(samples):
        n = rng.randint(1, 12)
        word = tuple(rng.randint(-10, 10) for _ in range(n))
        reduced, sign, _ = reduce_word(word)
        if eval_word(word) != (eval_word(reduced) if sign == 1 else -eval_word(reduced)):
            return _check("rewriting-soundness", False, f"reduce {word}")
        if any(e in (0, 1) for e in reduced[1:-1]):
            return _check("rewriting-soundness", False, f"interior 0/1 in {reduced}")
        positive, psign = normalize_to_positive(word)
        if any(e < 1 for e in positive):
            return _check("rewriting-soundness", False, f"normalize {word}")
        if eval_word(word) != (
            eval_word(positive) if psign == 1 else -eval_word(positive)
        ):
            return _check("rewriting-soundness", False, f"normalize sign {word}")
    return _check("rewriting-soundness", True, f"{samples} samples")


def check_finite_order() -> Check:
    ok = matrix_order(S) == 4
    ok = ok and matrix_order(-ID) == 2
    ok = ok and matrix_order(T, cap=200) is None
    ok = ok and matrix_order(Mat2(1, -1, 1, 0)) == 6
    return _check("finite-order", ok)


def check_render_determinism() -> Check:
    fixtures = [
        dissection_from_id_solution((3, 1, 2, 2, 1)),
        dissection_from_id_solution((1, 1, 1, 1, 1, 1)),
        echancree_from_s_solution((1, 1, 2, 1, 1)),
        coiffee_from_t_solution((1, 1, 2)),
    ]
    for d in fixtures:
        for fmt in ("svg", "ascii"):
            spec = RenderSpec(format=fmt)
            if render(d, spec) != render(d, spec):
                return _check("render-determinism", False, f"{d.kind} {fmt}")
    return _check("render-determinism", True)


def run_suite(max_n: int = 6, samples: int = 2000, seed: int = 20260810) -> list[Check]:
    rng = random.Random(seed)
    return [
        check_generator_identities(),
        check_s_small_n(),
        check_t_small_n(),
        check_closure_completeness(max_n),
        check_contains_a_one(max_n),
        check_reversal(max_n),
        check_rotation_conjugation(samples, rng),
        check_minimal_presentations(),
        check_round_trips(max_n),
        check_counting(max_n),
        check_rewriting(samples, rng),
        check_finite_order(),
        check_render_determinism(),
    ]

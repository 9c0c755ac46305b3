"""Solvers for the equations M_n(a1..an) = +/-M over positive words.

``check_equation`` decides membership, ``enumerate_solutions`` is the
brute-force oracle (exhaustive over a stated entry bound),
``generate_closure`` grows solutions from a seed with the two surgeries,
and ``minimal_presentation`` computes the unique shortest positive word
of a matrix class in PSL(2,Z).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotASolutionError
from .matrices import ID, Mat2, S, T, parse_matrix
from .words import (
    Sign,
    Word,
    apply_op_a,
    apply_op_b,
    as_word,
    eval_word,
    is_positive,
    normalize_to_positive,
)


@dataclass(frozen=True)
class EquationTarget:
    """Right-hand side M of M_n(a) = +/-M; det must be 1."""

    matrix: Mat2
    name: str = "custom"

    def __post_init__(self):
        if self.matrix.det() != 1:
            raise ValueError(f"target must have det 1, got {self.matrix.text()}")


TARGET_ID = EquationTarget(ID, "Id")
TARGET_S = EquationTarget(S, "S")
TARGET_T = EquationTarget(T, "T")


def parse_target(text: str) -> EquationTarget:
    """Parse a CLI target spec: Id, S, T, or custom:a,b;c,d."""
    if text == "Id":
        return TARGET_ID
    if text == "S":
        return TARGET_S
    if text == "T":
        return TARGET_T
    if text.startswith("custom:"):
        return EquationTarget(parse_matrix(text[len("custom:") :]), "custom")
    raise ValueError(f"unknown target {text!r}; expected Id, S, T or custom:a,b;c,d")


@dataclass(frozen=True)
class Solution:
    """A positive word with eval_word(word) == sign * target."""

    word: Word
    sign: Sign
    op_b_parity: int | None = None


@dataclass(frozen=True)
class SolutionSet:
    """Solutions of one equation, sorted lexicographically by word.

    For enumerations ``n`` is the exact word length and ``bound`` the entry
    bound the search was exhaustive over (completeness is relative to it).
    For closures ``n`` is the maximum length and ``bound`` is None.
    """

    target: EquationTarget
    n: int
    bound: int | None
    solutions: tuple[Solution, ...] = field(default=())

    def __post_init__(self):
        words = [sol.word for sol in self.solutions]
        assert words == sorted(set(words)), "solutions must be sorted and unique"
        for sol in self.solutions:
            assert eval_word(sol.word) == (
                self.target.matrix if sol.sign == 1 else -self.target.matrix
            ), f"{sol.word} does not verify against {self.target.name}"

    def words(self) -> tuple[Word, ...]:
        return tuple(sol.word for sol in self.solutions)

    def words_of_length(self, n: int) -> tuple[Word, ...]:
        return tuple(sol.word for sol in self.solutions if len(sol.word) == n)


def check_equation(word: Word, target: EquationTarget) -> Sign | None:
    """+1 if the word evaluates to the target, -1 for its opposite, else None."""
    word = as_word(word)
    if not word:
        raise ValueError("check_equation needs a nonempty word")
    if not is_positive(word):
        raise ValueError(f"check_equation needs a positive word, got {word}")
    m = eval_word(word)
    if m == target.matrix:
        return 1
    if m == -target.matrix:
        return -1
    return None


@lru_cache(maxsize=None)
def _enumerate_words(n: int, target: Mat2, bound: int) -> tuple[tuple[Word, Sign], ...]:
    # Depth-first over prefixes carrying the partial product.  The partial
    # product after a1..ak is P_k = L(ak) * P_{k-1}; the final matrix has
    # bottom row equal to P_{n-1}'s top row, so the last letter is solved
    # for algebraically rather than looped over.  That is exact: at most
    # one letter can complete any given prefix for each sign.
    g = (target.a, target.b, target.c, target.d)
    ng = (-target.a, -target.b, -target.c, -target.d)
    out: list[tuple[Word, Sign]] = []
    word = [0] * n

    def finish(p: int, q: int, r: int, s: int) -> None:
        hits = []
        for (ta, tb, tc, td), sgn in ((g, 1), (ng, -1)):
            if (p, q) != (tc, td):
                continue
            if p != 0:
                a, rem = divmod(ta + r, p)
                if rem or a * q - s != tb:
                    continue
            else:
                a, rem = divmod(tb + s, q)
                if rem or -r != ta:
                    continue
            if 1 <= a <= bound:
                hits.append((a, sgn))
        for a, sgn in sorted(hits):
            word[n - 1] = a
            out.append((tuple(word), sgn))

    def walk(i: int, p: int, q: int, r: int, s: int) -> None:
        if i == n - 1:
            finish(p, q, r, s)
            return
        for a in range(1, bound + 1):
            word[i] = a
            walk(i + 1, a * p - r, a * q - s, p, q)

    walk(0, 1, 0, 0, 1)
    return tuple(out)


def enumerate_solutions(n: int, target: EquationTarget, bound: int | None = None) -> SolutionSet:
    """Exhaustively search all words in [1, bound]^n for solutions.

    The default bound is n, enough for the targets treated here (entries of
    a solution count faces of a dissection on at most n+2 vertices); pass a
    larger bound for sweeps.  Results are in lexicographic word order.
    """
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    if bound is None:
        bound = n
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    found = _enumerate_words(n, target.matrix, bound)
    sols = tuple(Solution(word, sign) for word, sign in found)
    return SolutionSet(target=target, n=n, bound=bound, solutions=sols)


def generate_closure(seed: Word, max_n: int, target: EquationTarget) -> SolutionSet:
    """Close a seed solution under ops (a) and (b), up to length max_n.

    Ops are tried at every position; results are kept when they still solve
    the equation.  Cyclic (a)-gaps are included only when the target is
    +/-Id, the one case where rotation preserves the equation.  Each
    solution records its op-(b) parity, and the sign law
    ``sign == seed_sign * (-1)^parity`` is asserted along the way.
    """
    seed = as_word(seed)
    seed_sign = check_equation(seed, target)
    if seed_sign is None:
        raise NotASolutionError(
            f"seed {seed} does not solve the {target.name} equation"
        )
    if max_n < len(seed):
        raise ValueError(f"max_n {max_n} is smaller than the seed length {len(seed)}")
    cyclic = target.matrix in (ID, -ID)

    parity: dict[Word, int] = {seed: 0}
    frontier = [seed]
    while frontier:
        fresh: list[Word] = []
        for w in frontier:
            n = len(w)
            children: list[tuple[Word, int]] = []
            if n + 1 <= max_n:
                last_gap = n if (cyclic and n >= 2) else n - 1
                for gap in range(1, last_gap + 1):
                    children.append((apply_op_a(w, gap, cyclic=gap == n), 0))
            if n + 3 <= max_n:
                for pos in range(1, n + 1):
                    for a_prime in range(1, w[pos - 1] + 1):
                        children.append((apply_op_b(w, pos, a_prime), 1))
            for child, b_step in children:
                sign = check_equation(child, target)
                if sign is None:
                    continue
                child_parity = (parity[w] + b_step) % 2
                assert sign == seed_sign * (-1) ** child_parity, (
                    f"sign law fails at {child}"
                )
                if child not in parity:
                    parity[child] = child_parity
                    fresh.append(child)
                else:
                    assert parity[child] == child_parity
        frontier = fresh

    sols = tuple(
        Solution(w, check_equation(w, target), parity[w]) for w in sorted(parity)
    )
    return SolutionSet(target=target, n=max_n, bound=None, solutions=sols)


def matrix_order(m: Mat2, cap: int = 100) -> int | None:
    """Smallest k <= cap with m^k == Id, or None if there is none."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    acc = m
    for k in range(1, cap + 1):
        if acc == ID:
            return k
        acc = acc * m
    return None


def _euclid_quotient(a: int, c: int) -> int:
    # Quotient with the remainder smallest in absolute value; ties go to
    # the nonnegative remainder.
    q1 = a // c
    r1 = a - q1 * c
    q2 = q1 + 1
    r2 = a - q2 * c
    if abs(r1) < abs(r2):
        return q1
    if abs(r2) < abs(r1):
        return q2
    return q1 if r1 >= 0 else q2


def positive_word_of_matrix(m: Mat2) -> tuple[Word, Sign]:
    """A positive word and sign with ``sign * eval_word(word) == m``.

    Euclidean division on the first column peels letters until the matrix
    is upper triangular (+/- a power of T); the leftover integer word is
    then made positive with normalize_to_positive.
    """
    if m.det() != 1:
        raise ValueError(f"matrix {m.text()} has det {m.det()}, expected 1")
    a, b, c, d = m.a, m.b, m.c, m.d
    quotients: list[int] = []
    while c != 0:
        q = _euclid_quotient(a, c)
        a, b, c, d = c, d, q * c - a, q * d - b
        quotients.append(q)
    # Now at [[a, b], [0, d]] with a*d == 1: either T^b or -T^-b.
    if a == 1:
        tail, sign = ((), 1) if b == 0 else ((0, b), -1)
    else:
        tail, sign = (0, -b), 1
    raw = tuple(tail) + tuple(reversed(quotients))
    positive, norm_sign = normalize_to_positive(raw)
    total = sign * norm_sign
    assert eval_word(positive) == (m if total == 1 else -m)
    return positive, total


def minimality_criterion_ok(word: Word) -> bool:
    """The shortest-word test: entries >= 2 except at the very ends.

    A positive word is the minimal presentation of its class exactly when
    at most two leading and two trailing entries are 1 and everything in
    between is >= 2; all-ones words qualify only up to length 2 (the empty
    word presents the identity class).
    """
    if not is_positive(word):
        return False
    k = len(word)
    front = 0
    while front < k and word[front] == 1:
        front += 1
    if front == k:
        return k <= 2
    back = 0
    while word[k - 1 - back] == 1:
        back += 1
    if front > 2 or back > 2:
        return False
    return all(e >= 2 for e in word[front : k - back])


def _core_all_ge2(n: Mat2) -> Word | None:
    # The unique word with every entry >= 2 evaluating exactly to n, found
    # by peeling ceiling quotients off the first column; None when no such
    # word exists.  The bottom-left entry strictly decreases, and staying
    # eligible forces each peeled letter to be >= 2.
    peeled: list[int] = []
    x = n
    while x != ID:
        if x.c <= 0 or x.a <= x.c:
            return None
        q = -(-x.a // x.c)
        peeled.append(q)
        x = Mat2(x.c, x.d, q * x.c - x.a, q * x.d - x.b)
    return tuple(reversed(peeled))


_END_BLOCKS: tuple[Word, ...] = ((), (1,), (1, 1))


def minimal_presentation(m: Mat2) -> tuple[Word, Sign]:
    """The unique shortest positive word with ``sign * eval_word(word) == m``.

    +/-Id get the empty word by convention.  Any minimal word is a run of
    at most two 1s, then a core with entries >= 2, then another such run;
    so all 9 end-block splits (for both signs) are tried, each with its
    unique ceiling-quotient core, and the shortest hit wins.  The output
    is certified by the eval identity and the minimality criterion.
    """
    if m == ID:
        return (), 1
    if m == -ID:
        return (), -1
    candidates: list[tuple[int, Word, Sign]] = []
    for front in _END_BLOCKS:
        for back in _END_BLOCKS:
            base = eval_word(back).inv() * m * eval_word(front).inv()
            for eps in (1, -1):
                core = _core_all_ge2(base if eps == 1 else -base)
                if core is None:
                    continue
                word = front + core + back
                candidates.append((len(word), word, eps))
    assert candidates, f"no end-block candidate for {m.text()}"
    shortest = min(length for length, _, _ in candidates)
    hits = {(word, eps) for length, word, eps in candidates if length == shortest}
    assert len(hits) == 1, f"minimal-length writing must be unique, got {hits}"
    word, sign = next(iter(hits))
    assert minimality_criterion_ok(word), f"{word} fails the minimality criterion"
    assert eval_word(word) == (m if sign == 1 else -m)
    return word, sign

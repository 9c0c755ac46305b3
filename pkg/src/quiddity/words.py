"""Words over the standard letters of SL(2,Z) and their surgeries.

A word ``(a1, ..., an)`` is a tuple of integers.  It evaluates to the
matrix product ``L(an) * ... * L(a1)`` where ``L(x) = [[x, -1], [1, 0]]``,
so the entry at position 1 is the rightmost factor.  Equivalently
``L(x) = T^x * S`` in terms of the generators.

All positions in public signatures are 1-based.  Words are immutable;
every operation returns a new tuple.  Text format is comma-separated
integers, ``1,1,2,1,1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import ID, Mat2

Word = tuple[int, ...]
Sign = int

# Positive spellings of the generators: each constant evaluates to minus
# the matrix it is named after (L(1)L(1)L(2)L(1)L(1) = -S and so on).
S_WORD: Word = (1, 1, 2, 1, 1)
T_WORD: Word = (1, 1, 2)
T_INV_WORD: Word = (1, 2, 1, 1)
NEG_ID_WORD: Word = (1, 1, 1)


def letter(x: int) -> Mat2:
    """The letter matrix L(x) = [[x, -1], [1, 0]]."""
    return Mat2(x, -1, 1, 0)


def as_word(entries) -> Word:
    return tuple(int(e) for e in entries)


def parse_word(text: str) -> Word:
    """Parse comma-separated integers; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"word entries must be integers: {text!r}") from None


def format_word(word: Word) -> str:
    return ",".join(str(e) for e in word)


def is_positive(word: Word) -> bool:
    return all(e >= 1 for e in word)


def _require_positive(word: Word, what: str) -> None:
    if not is_positive(word):
        raise ValueError(f"{what} requires a positive word, got {word}")


def eval_word(word: Word) -> Mat2:
    """Evaluate L(an) * ... * L(a1); the empty word gives the identity."""
    p, q, r, s = 1, 0, 0, 1
    for x in word:
        p, q, r, s = x * p - r, x * q - s, p, q
    return Mat2(p, q, r, s)


def apply_op_a(word: Word, gap: int, cyclic: bool = False) -> Word:
    """Insert a triangle move at a gap: ``..., ai+1, 1, ai+1 +1, ...``.

    Linear gaps ``1 <= gap <= n-1`` preserve the evaluated matrix exactly.
    With ``cyclic=True`` the wrap gap ``gap == n`` is also allowed (both end
    entries get incremented and the new 1 is appended); the result then
    evaluates to a conjugate of the original matrix, not necessarily the
    same one.
    """
    _require_positive(word, "op (a)")
    n = len(word)
    if gap == n and not cyclic:
        raise ValueError(f"gap {gap} wraps around; pass cyclic=True to allow it")
    if gap == n and cyclic:
        if n < 2:
            raise ValueError("cyclic gap needs a word of length >= 2")
        return (word[0] + 1,) + word[1 : n - 1] + (word[n - 1] + 1, 1)
    if not 1 <= gap <= n - 1:
        raise ValueError(f"gap {gap} out of range for word of length {n}")
    return word[: gap - 1] + (word[gap - 1] + 1, 1, word[gap] + 1) + word[gap + 1 :]


def apply_op_b(word: Word, pos: int, a_prime: int) -> Word:
    """Replace the entry at ``pos`` by ``a', 1, 1, a''`` with a'+a'' = a+1.

    The evaluated matrix is negated (the replaced block is a contiguous
    factor, so this holds at every position).
    """
    _require_positive(word, "op (b)")
    n = len(word)
    if not 1 <= pos <= n:
        raise ValueError(f"position {pos} out of range for word of length {n}")
    a = word[pos - 1]
    if not 1 <= a_prime <= a:
        raise ValueError(f"a' must be in [1, {a}], got {a_prime}")
    a_second = a + 1 - a_prime
    return word[: pos - 1] + (a_prime, 1, 1, a_second) + word[pos:]


@dataclass(frozen=True)
class RewriteStep:
    """One rewrite event: which rule fired, where, and its sign factor.

    ``rule`` is one of ``collapse-one``, ``collapse-zero``,
    ``splice-negative``; ``pos`` is the 1-based position in the word at
    the moment the rule fired.
    """

    rule: str
    pos: int
    sign: Sign


RewriteTrace = tuple[RewriteStep, ...]


def reduce_word(word: Word) -> tuple[Word, Sign, RewriteTrace]:
    """Collapse interior 1 and 0 entries until neither rule applies.

    Rules, applied at the lowest applicable interior position (zero checked
    before one at each position):

      (x, 1, y) -> (x-1, y-1)   sign unchanged
      (x, 0, y) -> (x+y)        sign negated

    Boundary entries (positions 1 and n) are never collapsed.  The output
    satisfies ``sign * eval_word(reduced) == eval_word(word)`` exactly.
    """
    w = list(word)
    sign = 1
    steps: list[RewriteStep] = []
    while True:
        hit = None
        for idx in range(1, len(w) - 1):
            if w[idx] == 0:
                hit = (idx, "collapse-zero")
                break
            if w[idx] == 1:
                hit = (idx, "collapse-one")
                break
        if hit is None:
            break
        idx, rule = hit
        if rule == "collapse-zero":
            w[idx - 1 : idx + 2] = [w[idx - 1] + w[idx + 1]]
            sign = -sign
            steps.append(RewriteStep(rule, idx + 1, -1))
        else:
            w[idx - 1 : idx + 2] = [w[idx - 1] - 1, w[idx + 1] - 1]
            steps.append(RewriteStep(rule, idx + 1, 1))
    return tuple(w), sign, tuple(steps)


def _splice_segment(entry: int) -> tuple[list[int], Sign]:
    # L(entry) = T^entry * S spelled with |entry| copies of the T^-1 word
    # after one S word; the sign factor is (-1)^(|entry| + 1).
    assert entry <= 0
    segment = list(S_WORD) + list(T_INV_WORD) * (-entry)
    factor = -1 if entry % 2 == 0 else 1
    return segment, factor


def normalize_with_trace(word: Word) -> tuple[Word, Sign, RewriteTrace]:
    """normalize_to_positive, with the rewrite trace kept."""
    w = list(word)
    sign = 1
    steps: list[RewriteStep] = []
    while True:
        bad = next((i for i, e in enumerate(w) if e <= 0), None)
        if bad is None:
            break
        if w[bad] == 0 and 0 < bad < len(w) - 1:
            merged = w[bad - 1] + w[bad + 1]
            w[bad - 1 : bad + 2] = [merged]
            sign = -sign
            steps.append(RewriteStep("collapse-zero", bad + 1, -1))
        else:
            segment, factor = _splice_segment(w[bad])
            w[bad : bad + 1] = segment
            sign *= factor
            steps.append(RewriteStep("splice-negative", bad + 1, factor))
    # One shortening pass, kept only if it stays positive.
    reduced, rsign, rsteps = reduce_word(tuple(w))
    if is_positive(reduced):
        return reduced, sign * rsign, tuple(steps) + rsteps
    return tuple(w), sign, tuple(steps)


def normalize_to_positive(word: Word) -> tuple[Word, Sign]:
    """Rewrite an arbitrary integer word to one with all entries >= 1.

    Interior zeros are merged away by the zero-collapse rule; remaining
    non-positive entries c are spliced one at a time using the generator
    spellings (L(c) = T^c S).  Returns (positive, sign) with
    ``sign * eval_word(positive) == eval_word(word)``; the result may be
    longer than the input.
    """
    positive, sign, _ = normalize_with_trace(word)
    return positive, sign


def replay_trace(word: Word, trace: RewriteTrace) -> tuple[Word, Sign]:
    """Re-apply a recorded trace to its input word.

    Each step is validated against the current word, so a replayed trace
    certifies the rewrite it came from.
    """
    w = list(word)
    sign = 1
    for step in trace:
        idx = step.pos - 1
        if not 0 <= idx < len(w):
            raise ValueError(f"trace step {step} out of range")
        if step.rule == "collapse-zero":
            if w[idx] != 0 or not 0 < idx < len(w) - 1:
                raise ValueError(f"trace step {step} does not match word {w}")
            w[idx - 1 : idx + 2] = [w[idx - 1] + w[idx + 1]]
        elif step.rule == "collapse-one":
            if w[idx] != 1 or not 0 < idx < len(w) - 1:
                raise ValueError(f"trace step {step} does not match word {w}")
            w[idx - 1 : idx + 2] = [w[idx - 1] - 1, w[idx + 1] - 1]
        elif step.rule == "splice-negative":
            if w[idx] > 0:
                raise ValueError(f"trace step {step} does not match word {w}")
            segment, factor = _splice_segment(w[idx])
            if factor != step.sign:
                raise ValueError(f"trace step {step} records the wrong sign")
            w[idx : idx + 1] = segment
        else:
            raise ValueError(f"unknown trace rule {step.rule!r}")
        sign *= step.sign
    return tuple(w), sign


def rotate_word(word: Word, k: int) -> tuple[Word, Mat2]:
    """Cyclic shift by k, with its conjugator.

    Returns ``(a_{k+1}, ..., an, a1, ..., ak)`` and ``C = eval_word(a1..ak)``;
    the rotated word evaluates to ``C * eval_word(word) * C^-1`` exactly.
    """
    n = len(word)
    if not 0 <= k <= n:
        raise ValueError(f"shift {k} out of range for word of length {n}")
    return word[k:] + word[:k], eval_word(word[:k])


def reverse_word(word: Word) -> Word:
    """Reversal ``(an, ..., a1)``; eval(rev) = K * eval(word)^-1 * K."""
    return word[::-1]

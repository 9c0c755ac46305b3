"""Convex-polygon dissections and their quiddities.

A dissection cuts a convex polygon by pairwise non-crossing diagonals.
Stored vertex labels are always 0..vertex_count-1 counterclockwise, so a
face's counterclockwise cycle is just its labels in ascending order and
faces are stored as sorted tuples.

Three kinds are modeled:

  plain      every face has size divisible by 3; quiddity entry i is the
             number of faces at vertex i, for every vertex.
  echancree  exactly one face is a quadrilateral, with exactly two polygon
             sides meeting at vertex 0 (the notch apex); other faces have
             size divisible by 3.  Quiddity entry i counts the 3-divisible
             faces at vertex i, i = 1..vertex_count-1; vertex 0 is excluded.
  coiffee    all faces 3-divisible; one exterior triangle carries weight -1
             and shares its inner side with a weight +1 triangle that has a
             polygon side.  In the conventional labeling the -1 triangle is
             {0, 1, vc-1} and its mate is {1, vc-2, vc-1}; quiddity entry i
             sums the face weights at vertex i, i = 1..vertex_count-2.  The
             excluded vertices 0 and vc-1 print as bullets; vc-1 is the
             vertex written "-1" in the usual description (see
             paper_labels).

Quiddities of valid dissections solve, respectively, the Id, S and T
equations; the constructors here realize the converse directions.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidDissectionError, NotASolutionError
from .solvers import (
    TARGET_ID,
    TARGET_S,
    TARGET_T,
    EquationTarget,
    check_equation,
)
from .words import Sign, Word, as_word

KINDS = ("plain", "echancree", "coiffee")

Face = tuple[int, ...]


@dataclass(frozen=True)
class Dissection:
    vertex_count: int
    diagonals: tuple[tuple[int, int], ...]
    kind: str = "plain"
    # (face_index, weight) pairs, face indices into faces_of(); coiffee only.
    weights: tuple[tuple[int, int], ...] = ()


def make_dissection(vertex_count, diagonals, kind="plain", weights=()) -> Dissection:
    """Normalize and build a Dissection value (no geometric validation here)."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    pairs = []
    for pair in diagonals:
        i, j = pair
        pairs.append((min(int(i), int(j)), max(int(i), int(j))))
    if len(set(pairs)) != len(pairs):
        raise ValueError(f"duplicate diagonals in {sorted(pairs)}")
    return Dissection(
        vertex_count=int(vertex_count),
        diagonals=tuple(sorted(pairs)),
        kind=kind,
        weights=tuple(sorted((int(i), int(w)) for i, w in weights)),
    )


def paper_labels(d: Dissection) -> dict[int, int]:
    """Map stored labels to the conventional labels of each kind.

    plain maps 0..n-1 to 1..n; echancree keeps labels (apex is 0); coiffee
    keeps 0..n and renames the last vertex to -1.
    """
    vc = d.vertex_count
    if d.kind == "plain":
        return {i: i + 1 for i in range(vc)}
    if d.kind == "echancree":
        return {i: i for i in range(vc)}
    labels = {i: i for i in range(vc - 1)}
    labels[vc - 1] = -1
    return labels


def _adjacent(i: int, j: int, vc: int) -> bool:
    return (i - j) % vc in (1, vc - 1)


def _cross(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    (a, b), (c, d) = d1, d2
    return (a < c < b < d) or (c < a < d < b)


def _geometry_violations(d: Dissection) -> list[str]:
    out = []
    vc = d.vertex_count
    if vc < 3:
        out.append(f"vertex-count-too-small:{vc}")
        return out
    for i, j in d.diagonals:
        if not (0 <= i < j < vc):
            out.append(f"diagonal-out-of-range:({i},{j})")
        elif _adjacent(i, j, vc):
            out.append(f"diagonal-joins-adjacent-vertices:({i},{j})")
    if out:
        return out
    for d1, d2 in itertools.combinations(d.diagonals, 2):
        if _cross(d1, d2):
            out.append(f"diagonals-cross:{d1}x{d2}")
    return out


def _split_faces(region: Face, diagonals: list[tuple[int, int]]) -> list[Face]:
    if not diagonals:
        return [region]
    a, b = diagonals[0]
    ia, ib = region.index(a), region.index(b)
    first = region[ia : ib + 1]
    second = region[ib:] + region[: ia + 1]
    rest1, rest2 = [], []
    for diag in diagonals[1:]:
        if diag[0] in first and diag[1] in first:
            rest1.append(diag)
        else:
            assert diag[0] in second and diag[1] in second, "crossing diagonal slipped in"
            rest2.append(diag)
    return _split_faces(first, rest1) + _split_faces(tuple(sorted(second)), rest2)


def faces_of(d: Dissection) -> list[Face]:
    """All faces as ascending (= counterclockwise) vertex tuples, sorted."""
    problems = _geometry_violations(d)
    if problems:
        raise InvalidDissectionError("; ".join(problems))
    faces = _split_faces(tuple(range(d.vertex_count)), list(d.diagonals))
    faces.sort()
    assert len(faces) == len(d.diagonals) + 1
    return faces


def _face_counts(vc: int, faces: list[Face]) -> list[int]:
    counts = [0] * vc
    for face in faces:
        for v in face:
            counts[v] += 1
    return counts


def validate(d: Dissection) -> list[str]:
    """All kind-specific violations, as stable descriptor strings.

    An empty list means the dissection is valid.  Violations are data, not
    errors; operations that need validity raise InvalidDissectionError.
    """
    out = _geometry_violations(d)
    if out:
        return out
    vc = d.vertex_count
    faces = _split_faces(tuple(range(vc)), list(d.diagonals))
    faces.sort()

    def boundary_sides(face: Face) -> list[tuple[int, int]]:
        cycle = list(face) + [face[0]]
        return [
            (cycle[i], cycle[i + 1])
            for i in range(len(face))
            if _adjacent(cycle[i], cycle[i + 1], vc)
        ]

    if d.kind == "plain":
        if d.weights:
            out.append("weights-unexpected")
        for face in faces:
            if len(face) % 3 != 0:
                out.append(f"face-size-not-3-divisible:{face}")
        return out

    if d.kind == "echancree":
        if d.weights:
            out.append("weights-unexpected")
        if vc < 6:
            out.append(f"vertex-count-too-small-for-echancree:{vc}")
        quads = [f for f in faces if len(f) == 4]
        for face in faces:
            if len(face) != 4 and len(face) % 3 != 0:
                out.append(f"face-size-not-3-divisible:{face}")
        if len(quads) != 1:
            out.append(f"quadrilateral-count:{len(quads)}")
            return out
        quad = quads[0]
        sides = boundary_sides(quad)
        if len(sides) != 2:
            out.append(f"quadrilateral-side-count:{len(sides)}")
        else:
            shared = set(sides[0]) & set(sides[1])
            if shared != {0}:
                out.append(f"quadrilateral-sides-not-meeting-at-apex:{sorted(shared)}")
        counted = range(1, vc)
        counts = _face_counts(vc, [f for f in faces if len(f) % 3 == 0])
        for v in counted:
            if counts[v] < 1:
                out.append(f"quiddity-entry-nonpositive:{v}")
        return out

    # coiffee
    if vc < 5:
        out.append(f"vertex-count-too-small-for-coiffee:{vc}")
        return out
    for face in faces:
        if len(face) % 3 != 0:
            out.append(f"face-size-not-3-divisible:{face}")
    minus = (0, 1, vc - 1)
    mate = (1, vc - 2, vc - 1)
    if minus not in faces:
        out.append("missing-weighted-triangle")
    if mate not in faces:
        out.append("missing-adjacent-plus-triangle")
    if out:
        return out
    counts = _face_counts(vc, faces)
    if counts[0] != 1:
        out.append(f"apex-vertex-on-several-faces:{counts[0]}")
    if counts[vc - 1] != 2:
        out.append(f"shared-vertex-face-count:{counts[vc - 1]}")
    wmap = dict(d.weights)
    expected = {i: (-1 if face == minus else 1) for i, face in enumerate(faces)}
    if wmap != expected:
        out.append("weights-mismatch")
    if not out:
        weighted = [0] * vc
        for i, face in enumerate(faces):
            for v in face:
                weighted[v] += expected[i]
        for v in range(1, vc - 1):
            if weighted[v] < 1:
                out.append(f"quiddity-entry-nonpositive:{v}")
    return out


def _require_valid(d: Dissection) -> list[Face]:
    problems = validate(d)
    if problems:
        raise InvalidDissectionError("; ".join(problems))
    return faces_of(d)


def quiddity_of(d: Dissection) -> Word:
    """Read the kind-specific quiddity off a valid dissection."""
    faces = _require_valid(d)
    vc = d.vertex_count
    if d.kind == "plain":
        return tuple(_face_counts(vc, faces))
    if d.kind == "echancree":
        counts = _face_counts(vc, [f for f in faces if len(f) % 3 == 0])
        return tuple(counts[1:])
    wmap = dict(d.weights)
    weighted = [0] * vc
    for i, face in enumerate(faces):
        for v in face:
            weighted[v] += wmap[i]
    return tuple(weighted[1 : vc - 1])


# --- constructions: from solutions to dissections -------------------------


def _fan_at(boundary: list[int], faces: list[list[int]], v: int) -> list[list[int]]:
    # Faces incident to v in counterclockwise order, from the face on the
    # boundary edge (v, next) around to the one on (prev, v).  Neighboring
    # fan faces share an edge at v, which is what the chaining uses.
    m = len(boundary)
    i = boundary.index(v)
    nxt, prv = boundary[(i + 1) % m], boundary[(i - 1) % m]
    by_successor = {}
    for face in faces:
        if v not in face:
            continue
        j = face.index(v)
        by_successor[face[(j + 1) % len(face)]] = face
    fan = []
    key = nxt
    while True:
        face = by_successor[key]
        fan.append(face)
        j = face.index(v)
        pred = face[(j - 1) % len(face)]
        if pred == prv:
            break
        key = pred
    assert len(fan) == sum(1 for f in faces if v in f)
    return fan


def _split_vertex(
    boundary: list[int],
    faces: list[list[int]],
    v: int,
    keep: int,
    give: int,
    n1: int,
    n2: int,
    c2: int,
) -> None:
    """Split v in two copies with two fresh vertices between them.

    The face fan at v is counted from the boundary-successor side; the
    first ``give - 1`` faces move to the new copy c2, the shared face gains
    the path v, n1, n2, c2, and the remaining ``keep - 1`` faces stay on v.
    """
    fan = _fan_at(boundary, faces, v)
    assert len(fan) == keep + give - 1
    for face in fan[: give - 1]:
        face[face.index(v)] = c2
    shared = fan[give - 1]
    j = shared.index(v)
    shared[j + 1 : j + 1] = [n1, n2, c2]


def _plain_construction(
    word: Word, ids: "itertools.count[int]"
) -> tuple[list[int], list[list[int]]]:
    # Returns (boundary, faces) over fresh integer ids, boundary listed
    # counterclockwise with boundary[i] carrying quiddity entry word[i].
    # Face cycles are kept in counterclockwise order throughout.
    n = len(word)
    if n == 3:
        assert word == (1, 1, 1), f"no plain dissection has quiddity {word}"
        tri = [next(ids), next(ids), next(ids)]
        return tri, [list(tri)]

    def at(p: int) -> int:
        return word[(p - 1) % n]

    for p in range(1, n + 1):
        if at(p) == 1 and at(p - 1) >= 2 and at(p + 1) >= 2:
            return _undo_triangle(word, p, ids)
        if n >= 6 and at(p) == 1 and at(p + 1) == 1:
            return _undo_double_insert(word, p, ids)
    raise AssertionError(f"no reduction applies to {word}; not an identity quiddity")


def _undo_triangle(word: Word, p: int, ids) -> tuple[list[int], list[list[int]]]:
    # Inverse of op (a): drop the 1 at position p, decrement its cyclic
    # neighbors, recurse, then glue the triangle back on.
    n = len(word)
    if p == 1:
        shorter = (word[1] - 1,) + word[2 : n - 1] + (word[n - 1] - 1,)
    elif p == n:
        shorter = (word[0] - 1,) + word[1 : n - 2] + (word[n - 2] - 1,)
    else:
        shorter = (
            word[: p - 2]
            + (word[p - 2] - 1, word[p] - 1)
            + word[p + 1 :]
        )
    boundary, faces = _plain_construction(shorter, ids)
    x = next(ids)
    if p == 1:
        faces.append([boundary[-1], x, boundary[0]])
        boundary = [x] + boundary
    elif p == n:
        faces.append([boundary[-1], x, boundary[0]])
        boundary = boundary + [x]
    else:
        faces.append([boundary[p - 2], x, boundary[p - 1]])
        boundary = boundary[: p - 1] + [x] + boundary[p - 1 :]
    return boundary, faces


def _undo_double_insert(word: Word, p: int, ids) -> tuple[list[int], list[list[int]]]:
    # Inverse of op (b): the pair of 1s at cyclic positions (p, p+1) came
    # from splitting one vertex; merge it back, recurse, then re-split.
    n = len(word)
    x = word[(p - 2) % n]
    y = word[(p + 1) % n]
    merged = x + y - 1
    if p == 1:
        shorter = (merged,) + word[3 : n - 1]
    elif p == n - 1:
        shorter = (merged,) + word[1 : n - 3]
    elif p == n:
        shorter = (merged,) + word[2 : n - 2]
    else:
        shorter = word[: p - 2] + (merged,) + word[p + 2 :]
    boundary, faces = _plain_construction(shorter, ids)
    n1, n2, c2 = next(ids), next(ids), next(ids)
    if p == 1:
        v = boundary[0]
        _split_vertex(boundary, faces, v, x, y, n1, n2, c2)
        boundary = [n1, n2, c2] + boundary[1:] + [v]
    elif p == n - 1:
        v = boundary[0]
        _split_vertex(boundary, faces, v, x, y, n1, n2, c2)
        boundary = [c2] + boundary[1:] + [v, n1, n2]
    elif p == n:
        v = boundary[0]
        _split_vertex(boundary, faces, v, x, y, n1, n2, c2)
        boundary = [n2, c2] + boundary[1:] + [v, n1]
    else:
        v = boundary[p - 2]
        _split_vertex(boundary, faces, v, x, y, n1, n2, c2)
        boundary = boundary[: p - 1] + [n1, n2, c2] + boundary[p - 1 :]
    return boundary, faces


def _finalize(
    boundary: list[int],
    faces: list[list[int]],
    kind: str,
    minus_face: set[int] | None = None,
) -> Dissection:
    vc = len(boundary)
    index = {v: i for i, v in enumerate(boundary)}
    face_tuples = sorted(tuple(sorted(index[v] for v in face)) for face in faces)
    diagonals = set()
    for face in face_tuples:
        cycle = list(face) + [face[0]]
        for i in range(len(face)):
            u, w = cycle[i], cycle[i + 1]
            if not _adjacent(u, w, vc):
                diagonals.add((min(u, w), max(u, w)))
    weights: tuple[tuple[int, int], ...] = ()
    if kind == "coiffee":
        minus = tuple(sorted(index[v] for v in minus_face))
        weights = tuple(
            (i, -1 if face == minus else 1) for i, face in enumerate(face_tuples)
        )
    return Dissection(vc, tuple(sorted(diagonals)), kind, weights)


def dissection_from_id_solution(word: Word) -> Dissection:
    """A plain dissection whose quiddity is exactly the given Id-solution.

    The word is peeled down to (1,1,1) by inverse surgeries (cyclic
    positions allowed, lowest position first) and the moves are replayed
    geometrically: op (a) glues a triangle on an edge, op (b) splits a
    vertex in two around a stretched face.  The output is one canonical
    representative; distinct dissections can share a quiddity.
    """
    word = as_word(word)
    if check_equation(word, TARGET_ID) is None:
        raise NotASolutionError(f"{word} does not solve the Id equation")
    boundary, faces = _plain_construction(word, itertools.count())
    d = _finalize(boundary, faces, "plain")
    assert quiddity_of(d) == word, "construction failed to reproduce the quiddity"
    return d


def echancree_from_s_solution(word: Word) -> Dissection:
    """The notched dissection of an S-solution (length >= 5).

    Builds the plain dissection of (a1+an, a2, ..., a_{n-1}), splits vertex
    1 so its first a1 faces and last an faces part ways, and caps the split
    with the quadrilateral whose apex becomes vertex 0.
    """
    word = as_word(word)
    if check_equation(word, TARGET_S) is None:
        raise NotASolutionError(f"{word} does not solve the S equation")
    n = len(word)
    assert n >= 5, "S-solutions have length >= 5"
    core = (word[0] + word[-1],) + word[1:-1]
    assert check_equation(core, TARGET_ID) is not None
    ids = itertools.count()
    boundary, faces = _plain_construction(core, ids)
    v1 = boundary[0]
    fan = _fan_at(boundary, faces, v1)
    assert len(fan) == word[0] + word[-1]
    a1 = word[0]
    before = fan[a1 - 1]
    j_vertex = before[(before.index(v1) - 1) % len(before)]
    after = fan[a1]
    assert after[(after.index(v1) + 1) % len(after)] == j_vertex
    w_id = next(ids)
    for face in fan[a1:]:
        face[face.index(v1)] = w_id
    apex = next(ids)
    faces.append([apex, v1, j_vertex, w_id])
    boundary = [apex] + boundary + [w_id]
    d = _finalize(boundary, faces, "echancree")
    assert quiddity_of(d) == word, "construction failed to reproduce the quiddity"
    return d


def coiffee_from_t_solution(word: Word) -> Dissection:
    """The capped dissection of a T-solution whose last entry is >= 2.

    Builds the plain dissection of (a1, ..., an - 1) and glues onto its
    wrap side a quadrilateral cut into the weight -1 triangle {0, 1, -1}
    and the weight +1 triangle {1, n, -1} (conventional labels; the stored
    label of -1 is vertex_count - 1).  T-solutions ending in 1 belong to
    the notched model of their prefix instead.
    """
    word = as_word(word)
    if check_equation(word, TARGET_T) is None:
        raise NotASolutionError(f"{word} does not solve the T equation")
    if word[-1] < 2:
        raise ValueError(
            f"{word} ends in 1; its prefix solves the S equation and gets a "
            "notched dissection instead"
        )
    core = word[:-1] + (word[-1] - 1,)
    assert check_equation(core, TARGET_ID) is not None
    ids = itertools.count()
    boundary, faces = _plain_construction(core, ids)
    v1, vn = boundary[0], boundary[-1]
    b_id, c_id = next(ids), next(ids)
    faces.append([b_id, v1, c_id])
    faces.append([v1, vn, c_id])
    boundary = [b_id] + boundary + [c_id]
    d = _finalize(boundary, faces, "coiffee", minus_face={b_id, v1, c_id})
    assert quiddity_of(d) == word, "construction failed to reproduce the quiddity"
    return d


def solution_from_dissection(d: Dissection) -> tuple[Word, EquationTarget, Sign]:
    """Quiddity of a valid dissection, with the equation it solves.

    plain quiddities solve the Id equation, notched ones the S equation,
    capped ones the T equation; a verification failure would falsify the
    correspondence and raises AssertionError.
    """
    _require_valid(d)
    word = quiddity_of(d)
    target = {"plain": TARGET_ID, "echancree": TARGET_S, "coiffee": TARGET_T}[d.kind]
    sign = check_equation(word, target)
    assert sign is not None, (
        f"quiddity {word} of a valid {d.kind} dissection does not solve "
        f"the {target.name} equation"
    )
    return word, target, sign


# --- exhaustive enumeration ------------------------------------------------

_ENUMERATION_LIMIT = 12


@lru_cache(maxsize=None)
def _noncrossing_families(vc: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    candidates = [
        (i, j)
        for i in range(vc)
        for j in range(i + 2, vc)
        if not (i == 0 and j == vc - 1)
    ]
    out: list[tuple[tuple[int, int], ...]] = []
    chosen: list[tuple[int, int]] = []

    def extend(start: int) -> None:
        out.append(tuple(chosen))
        for idx in range(start, len(candidates)):
            cand = candidates[idx]
            if all(not _cross(cand, have) for have in chosen):
                chosen.append(cand)
                extend(idx + 1)
                chosen.pop()

    extend(0)
    return tuple(out)


def enumerate_dissections(vertex_count: int, kind: str) -> list[Dissection]:
    """All valid dissections of the given kind, in a deterministic order.

    Exhaustive over non-crossing diagonal subsets (weights for the capped
    kind are forced by the structure).  Desk-scale only: vertex_count <= 12.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if vertex_count < 3:
        raise ValueError(f"vertex_count must be >= 3, got {vertex_count}")
    if vertex_count > _ENUMERATION_LIMIT:
        raise ValueError(
            f"vertex_count {vertex_count} exceeds the enumeration limit "
            f"{_ENUMERATION_LIMIT}"
        )
    out = []
    for family in _noncrossing_families(vertex_count):
        weights: tuple[tuple[int, int], ...] = ()
        if kind == "coiffee":
            cand = Dissection(vertex_count, family, "plain")
            if _geometry_violations(cand):
                continue
            faces = _split_faces(tuple(range(vertex_count)), list(family))
            faces.sort()
            minus = (0, 1, vertex_count - 1)
            if minus not in faces:
                continue
            weights = tuple(
                (i, -1 if face == minus else 1) for i, face in enumerate(faces)
            )
        d = Dissection(vertex_count, family, kind, weights)
        if not validate(d):
            out.append(d)
    out.sort(key=lambda d: (len(d.diagonals), d.diagonals))
    return out


# --- Conway-Coxeter sum rule ----------------------------------------------


@dataclass(frozen=True)
class CcReport:
    """Triangulation test and quiddity-sum bookkeeping for a plain kind."""

    is_triangulation: bool
    quiddity: Word
    quiddity_sum: int
    expected_sum: int

    @property
    def sum_matches(self) -> bool:
        return self.quiddity_sum == self.expected_sum


def cc_triangulation_check(d: Dissection) -> CcReport:
    """Check the triangulation sum rule: quiddity totals 3n-6.

    Works from the raw face counts, so it also reports on plain-kind
    dissections that fail the 3-divisibility constraint.
    """
    if d.kind != "plain":
        raise ValueError(f"triangulation check applies to plain dissections, got {d.kind}")
    faces = faces_of(d)
    counts = tuple(_face_counts(d.vertex_count, faces))
    return CcReport(
        is_triangulation=all(len(f) == 3 for f in faces),
        quiddity=counts,
        quiddity_sum=sum(counts),
        expected_sum=3 * d.vertex_count - 6,
    )


# --- text file format -------------------------------------------------------


def dissection_to_obj(d: Dissection) -> dict:
    return {
        "kind": d.kind,
        "vertex_count": d.vertex_count,
        "diagonals": [list(pair) for pair in d.diagonals],
        "weights": [list(pair) for pair in d.weights],
        "paper_labels": {str(k): v for k, v in paper_labels(d).items()},
    }


def dumps_dissection(d: Dissection) -> str:
    """Canonical text serialization; parse/serialize round-trips are byte-stable."""
    return json.dumps(dissection_to_obj(d), indent=2, sort_keys=True) + "\n"


def loads_dissection(text: str) -> Dissection:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"not a dissection file: {e}") from None
    if not isinstance(obj, dict):
        raise ValueError("not a dissection file: expected an object")
    missing = {"kind", "vertex_count", "diagonals", "weights", "paper_labels"} - set(obj)
    if missing:
        raise ValueError(f"dissection file is missing fields: {sorted(missing)}")
    d = make_dissection(obj["vertex_count"], obj["diagonals"], obj["kind"], obj["weights"])
    declared = {int(k): int(v) for k, v in obj["paper_labels"].items()}
    if declared != paper_labels(d):
        raise ValueError("paper_labels in file do not match the kind's convention")
    return d

"""Single-element coextension by element splitting.

Given a binary matroid M and a nonempty T inside its ground set, the
split appends to the canonical representation one row that indicates T
and one fresh unit column (default label "a").  The resulting matroid
contracts back to M by the new element, and every binary coextension by
a non-loop non-coloop element arises this way.

The classifiers place each circuit/cocircuit of the split matroid into
the structural classes that make that true, checking every defining
condition literally.  A set that fits no class (or fails a class's own
assertion) is returned as a violation record, never silently dropped:
this module exists to machine-check those classifications.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import _kernels as kern
from .errors import (EmptyT, InvalidArguments, LabelCollision,
                     LoopOrColoop, TContainsCocircuit, TheoremViolation,
                     UnknownLabel)
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid

CIRCUIT_TAGS = ("C1", "C2", "C3")
COCIRCUIT_TAGS = ("Q1", "Q2", "Q3", "Q4", "Q5")


@dataclass(frozen=True)
class ElementSplit:
    """Result bundle of one element splitting."""

    result: BinaryMatroid
    new_element: str
    t_set: frozenset[str]
    source_rank: int


@dataclass(frozen=True)
class CircuitClass:
    tag: str                               # C1 | C2 | C3
    members: tuple[frozenset[str], ...]


@dataclass(frozen=True)
class CocircuitClass:
    tag: str                               # Q1 | Q2 | Q3 | Q4 | Q5
    members: tuple[frozenset[str], ...]


@dataclass(frozen=True)
class ClassViolation:
    """A circuit/cocircuit of the split that fits no class."""

    elements: frozenset[str]
    attempted: str
    reason: str


@dataclass(frozen=True)
class CircuitClassification:
    classes: tuple[CircuitClass, ...]
    violations: tuple[ClassViolation, ...]

    def members(self, tag: str) -> tuple[frozenset[str], ...]:
        for cc in self.classes:
            if cc.tag == tag:
                return cc.members
        raise KeyError(tag)


@dataclass(frozen=True)
class CocircuitClassification:
    classes: tuple[CocircuitClass, ...]
    violations: tuple[ClassViolation, ...]
    overlaps: tuple[tuple[frozenset[str], tuple[str, ...]], ...]

    def members(self, tag: str) -> tuple[frozenset[str], ...]:
        for cc in self.classes:
            if cc.tag == tag:
                return cc.members
        raise KeyError(tag)


def split_matrix(m: Gf2Matrix, t_labels: Iterable[str],
                 new_label: str = "a") -> Gf2Matrix:
    """The raw construction on an arbitrary representation.

    Appends a row holding 1 exactly in the columns of T, then a fresh
    column with 1 only in that row.  Exposed separately so tests can
    apply it to row-equivalent matrices and confirm the matroid does
    not depend on the representative.
    """
    t_labels = frozenset(t_labels)
    if not t_labels:
        raise EmptyT("splitting set T must be nonempty")
    if new_label in m.col_labels:
        raise LabelCollision(f"label {new_label!r} already names a column")
    t_mask = m.mask_of(t_labels)          # raises UnknownLabel
    width = m.width
    rows = m.row_masks()
    rows.append(t_mask | (1 << width))
    return Gf2Matrix.from_masks(rows, m.col_labels + (new_label,))


def element_split(M: BinaryMatroid, T: Iterable[str],
                  new_label: str = "a") -> ElementSplit:
    """Coextension M'_T of M by one new element over T."""
    T = frozenset(T)
    built = split_matrix(M.matrix, T, new_label)
    result = BinaryMatroid(built, name=f"{M.name}+{new_label}")
    if result.rank != M.rank + 1:
        raise TheoremViolation(
            f"split of {M.name} changed rank by {result.rank - M.rank}, not 1")
    return ElementSplit(result=result, new_element=new_label,
                        t_set=T, source_rank=M.rank)


def coextension_roundtrip(N: BinaryMatroid,
                          a: str) -> tuple[frozenset[str], bool]:
    """Recover (T, equality check) from a coextension N by element a.

    Takes the first cocircuit of N containing a (deterministic order),
    sets T to it minus a, and checks element_split(N/a, T, a) equals N.
    """
    if a not in N.ground:
        raise UnknownLabel(f"{a!r} is not an element of {N.name}")
    if N.is_loop(a) or N.is_coloop(a):
        raise LoopOrColoop(f"{a!r} must be neither loop nor coloop")
    t_set: Optional[frozenset[str]] = None
    for q in N.cocircuits():
        if a in q:
            t_set = q - {a}
            break
    if t_set is None:                     # unreachable for a non-loop
        raise LoopOrColoop(f"no cocircuit of {N.name} contains {a!r}")
    base = N.contract(a)
    rebuilt = element_split(base, t_set, a)
    return t_set, rebuilt.result.equals(N)


def rank_via_formula(M: BinaryMatroid, T: Iterable[str], A: Iterable[str],
                     a_label: str = "a") -> int:
    """Rank of A inside the split matroid, by the three-case formula.

    Case 1: a in A         -> r(A - a) + 1.
    Case 2: a not in A, A carries a circuit with odd T-overlap -> r(A) + 1.
    Case 3: otherwise      -> r(A).
    """
    T = frozenset(T)
    if not T <= set(M.ground):
        raise UnknownLabel(f"T not inside the ground set of {M.name}")
    A = frozenset(A)
    extra = A - set(M.ground) - {a_label}
    if extra:
        raise UnknownLabel(f"unknown labels in A: {sorted(extra)}")
    base = A - {a_label}
    if a_label in A:
        return M.rank_of(base) + 1
    t_mask = M.element_mask(T)
    a_mask = M.element_mask(base)
    for c in M.circuit_bitmasks():
        if c & ~a_mask:
            continue
        if (c & t_mask).bit_count() & 1:
            return M.rank_of(base) + 1
    return M.rank_of(base)


# -- circuit classification ------------------------------------------------


def classify_circuits(M: BinaryMatroid, T: Iterable[str],
                      new_label: str = "a",
                      minimality_scan: bool = False) -> CircuitClassification:
    """Assign every circuit of the split matroid to C1 / C2 / C3.

    C2: contains the new element; the rest must be a circuit of M with
        odd T-overlap.
    C1: a circuit of M; its T-overlap must be even.
    C3: everything else; must be a disjoint union of two odd-overlap
        circuits of M containing no even-overlap circuit, and minimal
        among sets of that form.
    Classes are disjoint by construction (the three conditions cannot
    coincide), and every circuit that fails its class condition becomes
    a violation record.

    C3 minimality normally rides on the enumeration: a disjoint union
    of two circuits supports a null vector, so a proper subset of that
    shape would already contradict x being a circuit.  Passing
    minimality_scan=True re-verifies it literally by scanning all
    two-part unions inside x; quadratic in the odd circuits within x,
    so meant for small instances.
    """
    T = frozenset(T)
    if M.loops():
        raise InvalidArguments(
            f"{M.name} has loops; classification needs a loop-free matroid")
    split = element_split(M, T, new_label)
    N = split.result

    width = M.size
    abit = 1 << width                     # new column sits last
    t_mask = M.element_mask(T)

    circ_set = set(M.circuit_bitmasks())
    odd_sorted = sorted(c for c in circ_set if (c & t_mask).bit_count() & 1)
    even_sorted = sorted(c for c in circ_set
                         if not (c & t_mask).bit_count() & 1)

    c1, c2, c3 = [], [], []
    violations = []
    pending = []                          # C3 candidates, checked in batch
    for x in N.circuit_bitmasks():
        if x & abit:
            rest = x ^ abit
            if rest in circ_set and (rest & t_mask).bit_count() & 1:
                c2.append(N.labels_of(x))
            else:
                violations.append(ClassViolation(
                    N.labels_of(x), "C2",
                    "circuit through the new element whose remainder is "
                    "not an odd-overlap circuit of the base"))
        elif x in circ_set:
            if not (x & t_mask).bit_count() & 1:
                c1.append(N.labels_of(x))
            else:
                violations.append(ClassViolation(
                    N.labels_of(x), "C1",
                    "base circuit with odd T-overlap survived the split"))
        else:
            pending.append(x)

    splits = kern.find_xor_pair_many(pending, odd_sorted)
    inner_evens = kern.first_subset_many(pending, even_sorted)
    for x, two_part, inner_even in zip(pending, splits, inner_evens):
        labels = N.labels_of(x)
        if two_part == 0:
            violations.append(ClassViolation(
                labels, "C3",
                "no partition into two disjoint odd-overlap circuits"))
        elif inner_even:
            violations.append(ClassViolation(
                labels, "C3",
                "contains an even-overlap circuit of the base"))
        elif minimality_scan and not _family_minimal(x, odd_sorted,
                                                     even_sorted):
            violations.append(ClassViolation(
                labels, "C3",
                "union form is not minimal within its family"))
        else:
            c3.append(labels)

    classes = tuple(CircuitClass(tag, tuple(members))
                    for tag, members in (("C1", c1), ("C2", c2), ("C3", c3)))
    return CircuitClassification(classes=classes,
                                 violations=tuple(violations))


def _family_minimal(x: int, odd_sorted: list[int],
                    even_sorted: list[int]) -> bool:
    """No proper subset of x is itself an admissible two-part union."""
    odd_in_x = kern.filter_within(odd_sorted, x)
    for i, ca in enumerate(odd_in_x):
        for cb in odd_in_x[i + 1:]:
            if ca & cb:
                continue
            union = ca | cb
            if union != x and kern.first_subset(union, even_sorted) == 0:
                return False
    return True


# -- cocircuit classification ------------------------------------------------


def _disjoint_cover(target: int, candidates: list[int]) -> bool:
    """Does target split into >= 2 mutually disjoint candidate masks?

    candidates must already lie inside target.  Depth-first on the
    lowest uncovered bit; the partition must be exact.
    """

    def go(covered: int, count: int) -> bool:
        if covered == target:
            return count >= 2
        low = (target & ~covered) & -(target & ~covered)
        for c in candidates:
            if c & low and not c & covered:
                if go(covered | c, count + 1):
                    return True
        return False

    return go(0, 0)


def classify_cocircuits(M: BinaryMatroid, T: Iterable[str],
                        new_label: str = "a") -> CocircuitClassification:
    """Match every cocircuit of the split matroid to Q1..Q5.

    A cocircuit X of the split matroid that contains the new element
    determines Z = (X - new) symmetric-difference T, and Z is always a
    disjoint union of base cocircuits: the cocycle space of the split
    consists of the base cocycles plus their T-translates with the new
    element appended.  The classes read off the shape of Z:

    Q1: Z is one base cocircuit strictly containing T.
    Q2: X avoids the new element and is a cocircuit of the base.
    Q3: Z is one base cocircuit with partial T-overlap, and Z contains
        no D* - T for a base cocircuit D* strictly containing T.
    Q4: Z splits into >= 2 disjoint base cocircuits, each meeting T,
        same non-containment condition.
    Q5: Z is empty, i.e. X = T + new element.

    Requires that T contain no cocircuit of the base.  A cocircuit
    matching nothing (single-cocircuit Z missing T entirely, or a
    failed side condition) is returned as a violation; multiple
    matches would be recorded as overlaps.
    """
    T = frozenset(T)
    t_mask = M.element_mask(T)
    if not T:
        raise EmptyT("splitting set T must be nonempty")

    cocirc_masks = M.cocircuit_bitmasks()
    cocirc_set = set(cocirc_masks)
    for q in cocirc_masks:
        if q & ~t_mask == 0:
            raise TContainsCocircuit(
                f"T contains the cocircuit {sorted(M.labels_of(q))} of {M.name}")

    split = element_split(M, T, new_label)
    N = split.result
    width = M.size
    abit = 1 << width

    # D* - T for every base cocircuit strictly containing T: the shared
    # side condition of Q3 and Q4
    strip_t = [d & ~t_mask for d in cocirc_masks
               if t_mask & ~d == 0 and d != t_mask]
    meets_t = [c for c in cocirc_masks if c & t_mask]

    tagged: dict[str, list[frozenset[str]]] = {t: [] for t in COCIRCUIT_TAGS}
    violations = []
    overlaps = []
    for x in N.cocircuit_bitmasks():
        labels = N.labels_of(x)
        hits = []
        if x & abit:
            z = (x ^ abit) ^ t_mask
            if z == 0:
                hits.append("Q5")
            elif z in cocirc_set:
                ct = (z & t_mask).bit_count()
                if ct == len(T):
                    hits.append("Q1")
                elif ct >= 1 and kern.first_subset(z, strip_t) == 0:
                    hits.append("Q3")
            elif kern.first_subset(z, strip_t) == 0 \
                    and _disjoint_cover(z, kern.filter_within(meets_t, z)):
                hits.append("Q4")
        else:
            if x in cocirc_set:
                hits.append("Q2")
        if not hits:
            violations.append(ClassViolation(
                labels, "Q1..Q5", "matches no cocircuit class"))
            continue
        for tag in hits:
            tagged[tag].append(labels)
        if len(hits) > 1:
            overlaps.append((labels, tuple(hits)))

    classes = tuple(CocircuitClass(tag, tuple(tagged[tag]))
                    for tag in COCIRCUIT_TAGS)
    return CocircuitClassification(classes=classes,
                                   violations=tuple(violations),
                                   overlaps=tuple(overlaps))


def find_rank_law_counterexample(M: BinaryMatroid) -> Optional[frozenset[str]]:
    """First nonempty T (numeric mask order) where splitting does not
    raise the rank by exactly one; None when the law holds everywhere."""
    from . import _kernels as kern

    bad = kern.split_rank_law(M.matrix.row_masks(), M.size)
    if bad < 0:
        return None
    return M.labels_of(bad)

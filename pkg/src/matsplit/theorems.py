"""Executable forms of the splitting connectivity characterizations.

For an n-connected binary matroid M with |E| >= 2n-2 and |T| = n-1,
three statements rise and fall together:

  i.   the split matroid M'_T is n-connected;
  ii.  |Q| >= 2|Q cap T| for every cocircuit Q of M meeting T;
  iii. every (n-2)-subset A of the ground set leaves an odd-T-overlap
       circuit alive in its complement.

`verify_equivalence` sweeps every T of size n-1, evaluates all three
statements independently (plus the weaker sufficient condition for
n <= 4), and reports witnesses for each failure.  Rows where the
statements disagree would falsify the characterization; the sweep
reports them rather than raising, because producing legible violation
records is the point of the exercise.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from . import _kernels as kern
from .connectivity import is_n_connected
from .coextension import element_split
from .errors import InvalidArguments, NotNConnected, TheoremViolation
from .matroid import BinaryMatroid, SubsetWitness

WEAK_RANGE = (2, 3, 4)


@dataclass(frozen=True)
class VerificationReport:
    """One sweep row: every statement evaluated for a single T."""

    matroid_name: str
    n: int
    t_set: frozenset[str]
    stmt_i: bool
    stmt_ii: bool
    stmt_iii: bool
    weak: Optional[bool]
    witnesses: tuple[SubsetWitness, ...]

    @property
    def equivalent(self) -> bool:
        return self.stmt_i == self.stmt_ii == self.stmt_iii

    def to_record(self) -> dict:
        """JSON-ready dict with stable key order."""
        return {
            "matroid": self.matroid_name,
            "n": self.n,
            "t": sorted(self.t_set),
            "stmt_i": self.stmt_i,
            "stmt_ii": self.stmt_ii,
            "stmt_iii": self.stmt_iii,
            "weak": self.weak,
            "equivalent": self.equivalent,
            "witnesses": [
                {"kind": w.kind, "elements": sorted(w.elements)}
                for w in self.witnesses
            ],
        }


def _sorted_key(labels: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(labels))


def check_cocircuit_condition(
        M: BinaryMatroid,
        T: Iterable[str]) -> tuple[bool, Optional[frozenset[str]]]:
    """|Q| >= 2|Q cap T| for every cocircuit Q meeting T.

    Returns (verdict, first violating Q in the deterministic cocircuit
    order, or None).  Cocircuits missing T impose nothing.
    """
    T = frozenset(T)
    if not T:
        raise InvalidArguments("T must be nonempty")
    t_mask = M.element_mask(T)
    for q in M.cocircuit_bitmasks():
        overlap = (q & t_mask).bit_count()
        if overlap and q.bit_count() < 2 * overlap:
            return False, M.labels_of(q)
    return True, None


def check_circuit_condition(
        M: BinaryMatroid, T: Iterable[str],
        n: int) -> tuple[bool, Optional[frozenset[str]]]:
    """For every (n-2)-subset A there must be a circuit with odd
    T-overlap inside E - A; returns the first blocking A on failure.

    Subsets are tried in sorted-label order so the witness is stable.
    """
    T = frozenset(T)
    if len(T) != n - 1:
        raise InvalidArguments(f"|T| = {len(T)} but n-1 = {n - 1}")
    if M.size < 2 * n - 2:
        raise InvalidArguments(
            f"ground set of {M.size} below the 2n-2 = {2 * n - 2} minimum")
    t_mask = M.element_mask(T)
    odd = [c for c in M.circuit_bitmasks()
           if (c & t_mask).bit_count() & 1]
    full = (1 << M.size) - 1
    for combo in itertools.combinations(sorted(M.ground), n - 2):
        rest = full & ~M.element_mask(combo)
        if kern.first_subset(rest, odd) == 0:
            return False, frozenset(combo)
    return True, None


def check_weak_condition(M: BinaryMatroid, T: Iterable[str], n: int) -> bool:
    """Every cocircuit containing T has at least 2n-2 elements.

    A cheaper sufficient condition that only works for n in {2, 3, 4};
    vacuously true when no cocircuit contains T.
    """
    if n not in WEAK_RANGE:
        raise InvalidArguments(f"weak condition defined for n in {WEAK_RANGE}")
    T = frozenset(T)
    if len(T) != n - 1:
        raise InvalidArguments(f"|T| = {len(T)} but n-1 = {n - 1}")
    t_mask = M.element_mask(T)
    for q in M.cocircuit_bitmasks():
        if t_mask & ~q == 0 and q.bit_count() < 2 * n - 2:
            return False
    return True


def _split_witness(M: BinaryMatroid, T: frozenset[str], n: int,
                   new_label: str):
    """(stmt_i, separation witness) for one T."""
    split = element_split(M, T, new_label)
    N = split.result
    if is_n_connected(N, n):
        return True, None
    from .connectivity import find_k_separation

    for k in range(1, n):
        sep = find_k_separation(N, k)
        if sep is not None:
            return False, SubsetWitness(sep.side_a, "separating")
    return False, None                    # unreachable


def fresh_label(taken: Iterable[str], preferred: str = "a") -> str:
    taken = set(taken)
    if preferred not in taken:
        return preferred
    i = 0
    while f"{preferred}{i}" in taken:
        i += 1
    return f"{preferred}{i}"


def verify_equivalence(M: BinaryMatroid, n: int,
                       jobs: int = 1) -> list[VerificationReport]:
    """Full equivalence sweep over every T of size n-1.

    Preconditions are enforced, not assumed: M must be n-connected with
    at least 2n-2 elements, and the size bound of the supporting lemma
    (girth and cogirth >= n) is asserted once up front, which also makes
    the cocircuit-classification precondition automatic for every T.
    """
    if n < 2:
        raise InvalidArguments(f"n must be >= 2, got {n}")
    if M.size < 2 * n - 2:
        raise InvalidArguments(
            f"{M.name}: ground set {M.size} below the 2n-2 = {2 * n - 2} minimum")
    if not is_n_connected(M, n):
        raise NotNConnected(f"{M.name} is not {n}-connected; sweep refused")
    if M.girth() < n or M.cogirth() < n:
        raise TheoremViolation(
            f"{M.name}: n-connected with |E| >= 2n-2 must have girth and "
            f"cogirth >= {n}, got {M.girth()}/{M.cogirth()}")

    new_label = fresh_label(M.ground)
    t_sets = [frozenset(c)
              for c in itertools.combinations(sorted(M.ground), n - 1)]

    def row(T: frozenset[str]) -> VerificationReport:
        stmt_i, sep_witness = _split_witness(M, T, n, new_label)
        stmt_ii, bad_q = check_cocircuit_condition(M, T)
        stmt_iii, bad_a = check_circuit_condition(M, T, n)
        weak = check_weak_condition(M, T, n) if n in WEAK_RANGE else None
        witnesses = []
        if sep_witness is not None:
            witnesses.append(sep_witness)
        if bad_q is not None:
            witnesses.append(SubsetWitness(bad_q, "cocircuit"))
        if bad_a is not None:
            witnesses.append(SubsetWitness(bad_a, "blocking"))
        return VerificationReport(
            matroid_name=M.name, n=n, t_set=T,
            stmt_i=stmt_i, stmt_ii=stmt_ii, stmt_iii=stmt_iii,
            weak=weak, witnesses=tuple(witnesses))

    # warm the shared caches once before any parallel evaluation
    M.circuit_bitmasks()
    M.cocircuit_bitmasks()

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(row, t_sets))
    else:
        reports = [row(t) for t in t_sets]
    reports.sort(key=lambda r: _sorted_key(r.t_set))
    return reports

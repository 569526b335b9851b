"""Decompositions of the full type-A positive system into inversion sets.

A decomposition writes every positive root exactly once across a collection
of permutations' inversion sets.  This module verifies candidate
decompositions, tests irreducibility of single inversion sets (both by brute
force and structurally through the simple form), enumerates decompositions
exhaustively for small degrees, and counts them for large degrees with
recursive dynamic programs that never enumerate.

The structural counts deliberately share no code with :mod:`rootdec.genseries`:
the two routes validate each other in the test suite.  All counting here is
plain big-integer convolution on Python lists.

Counting families:

* ``A_IRREDUCIBLE`` - decompositions of the degree-n system into irreducible
  nonempty parts, unordered.
* ``A_MAXIMAL`` - decompositions into n-1 nonempty parts (each part then
  contains exactly one simple root); these are counted by Catalan numbers.
* ``A_TRIPLES`` - unordered triples of parts, identity parts allowed.
* ``BC_IRREDUCIBLE`` / ``BC_MAXIMAL`` / ``BC_TRIPLES`` - the same counts for
  the rank-n type-B/C positive system (computed here; the signed-permutation
  machinery lives in :mod:`rootdec.bcgroups`).
* ``SIMPLE_PAIRS_A`` - mirror pairs of simple permutations by degree.
* ``SIMPLE_PAIRS_BC`` - symmetric simple embeddings by rank, counting both
  members of each mirror pair.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .inflation import IDENTITY, REVERSAL, SIMPLE, simple_form
from .permcore import (
    Perm,
    Root,
    RootSubset,
    all_roots,
    check_permutation,
    format_permutation,
    identity,
    inversion_set,
    is_inversion_set,
    permutation_from_inversion_set,
    simple_roots,
)

__all__ = [
    "DEFAULT_COUNT_LIMIT",
    "DEFAULT_ENUMERATION_BOUND",
    "FAMILIES",
    "CountTable",
    "Decomposition",
    "VerifyResult",
    "count_structural",
    "enumerate_decompositions",
    "is_irreducible",
    "is_irreducible_structural",
    "merge",
    "verify_decomposition",
]

FAMILIES = (
    "A_IRREDUCIBLE",
    "A_MAXIMAL",
    "A_TRIPLES",
    "BC_IRREDUCIBLE",
    "BC_MAXIMAL",
    "BC_TRIPLES",
    "SIMPLE_PAIRS_A",
    "SIMPLE_PAIRS_BC",
)

DEFAULT_ENUMERATION_BOUND = 8
DEFAULT_COUNT_LIMIT = 64


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class Decomposition:
    """An unordered partition of the degree-n positive system into inversion sets.

    Parts are stored sorted lexicographically by one-line notation; identity
    parts may repeat (a multiset), nonidentity parts never can since their
    inversion sets would overlap.  Construction validates the partition
    property, so every instance is a genuine decomposition.
    """

    n: int
    parts: tuple[Perm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "parts", tuple(sorted(check_permutation(p) for p in self.parts))
        )
        covered: set[Root] = set()
        for part in self.parts:
            if len(part) != self.n:
                raise ValueError(
                    f"part {format_permutation(part)} has degree {len(part)},"
                    f" expected {self.n}"
                )
            for root in inversion_set(part):
                if root in covered:
                    raise ValueError(f"root {root} covered twice")
                covered.add(root)
        missing = len(all_roots(self.n)) - len(covered)
        if missing:
            raise ValueError(f"{missing} roots not covered")

    def __str__(self) -> str:
        return " | ".join(format_permutation(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of :func:`verify_decomposition` with a human-readable reason."""

    ok: bool
    detail: str

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CountTable:
    """Counts for one family at degrees/ranks 1..n_max.

    ``counts[i]`` is the value at n = i + 1; all values are nonnegative exact
    integers.
    """

    family: str
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        object.__setattr__(self, "counts", tuple(self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    def value(self, n: int) -> int:
        if not 1 <= n <= len(self.counts):
            raise ValueError(f"n={n} outside tabulated range 1..{len(self.counts)}")
        return self.counts[n - 1]

    def __getitem__(self, n: int) -> int:
        return self.value(n)

    def to_csv(self) -> str:
        lines = ["family,n,count"]
        lines.extend(f"{self.family},{n},{c}" for n, c in enumerate(self.counts, start=1))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verification and merging


def verify_decomposition(
    n: int, perms: Iterable[Perm], allow_identity: bool = True
) -> VerifyResult:
    """Check that the inversion sets of ``perms`` partition the positive system.

    Diagnostics name the lexicographically first overlapping or missing
    root; with ``allow_identity`` false an identity part is also rejected.
    A part of the wrong degree raises ValueError.

    >>> verify_decomposition(3, [(2, 1, 3), (2, 3, 1)]).ok
    True
    >>> verify_decomposition(3, [(2, 1, 3), (2, 1, 3)]).detail
    'root (1, 2) covered by parts 1 and 2'
    >>> verify_decomposition(3, [(2, 1, 3)]).detail
    'root (1, 3) not covered by any part'
    """
    parts = [check_permutation(p) for p in perms]
    for part in parts:
        if len(part) != n:
            raise ValueError(
                f"degree mismatch: expected {n}, got part"
                f" {format_permutation(part)} of degree {len(part)}"
            )
    covering: dict[Root, list[int]] = {}
    for k, part in enumerate(parts, start=1):
        for root in inversion_set(part):
            covering.setdefault(root, []).append(k)
    overlapped = sorted(root for root, ks in covering.items() if len(ks) > 1)
    if overlapped:
        root = overlapped[0]
        a, b = covering[root][:2]
        return VerifyResult(False, f"root {root} covered by parts {a} and {b}")
    for root in all_roots(n):
        if root not in covering:
            return VerifyResult(False, f"root {root} not covered by any part")
    if not allow_identity:
        for k, part in enumerate(parts, start=1):
            if part == identity(n):
                return VerifyResult(False, f"part {k} is the identity")
    return VerifyResult(True, f"valid decomposition of the degree-{n} positive system")


def merge(n: int, parts: Iterable[Perm]) -> Perm:
    """The permutation whose inversion set is the union of the parts' sets.

    The parts must come from one decomposition, so the union is again closed
    and co-closed; otherwise ValueError propagates from the reconstruction.

    >>> merge(3, [(2, 1, 3), (2, 3, 1)])
    (3, 2, 1)
    >>> merge(3, [])
    (1, 2, 3)
    """
    union: set[Root] = set()
    for part in parts:
        union.update(inversion_set(part))
    return permutation_from_inversion_set(RootSubset(n, union))


# ---------------------------------------------------------------------------
# irreducibility


def is_irreducible(sigma: Perm) -> bool:
    """Brute-force irreducibility: no split into two nonidentity inversion sets.

    This is the oracle form — it scans every permutation of the degree, so
    keep it to small degrees.  The identity is irreducible (its inversion
    set is empty, so every split is trivial).

    >>> is_irreducible((3, 1, 2))
    True
    >>> is_irreducible((3, 2, 1))
    False
    """
    sigma = check_permutation(sigma)
    n = len(sigma)
    inv = inversion_set(sigma).roots
    if not inv:
        return True
    for alpha in itertools.permutations(range(1, n + 1)):
        part = inversion_set(alpha).roots
        if not part or part == inv or not part <= inv:
            continue
        if is_inversion_set(RootSubset(n, inv - part)):
            return False
    return True


def is_irreducible_structural(sigma: Perm) -> bool:
    """Irreducibility through the simple form, equivalent to :func:`is_irreducible`.

    A nonidentity permutation is irreducible exactly when its simple form is

    * a simple skeleton of degree >= 4 with all parts identity, or
    * the two-block descending skeleton with both parts identity, or
    * an identity skeleton with exactly one nonidentity part, itself
      irreducible (recursively): the inversion set then sits inside one
      interval and splits there or not at all.

    >>> is_irreducible_structural((1, 3, 2, 4))
    True
    >>> [p for p in itertools.permutations((1, 2, 3)) if is_irreducible_structural(p)]
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)]
    """
    sigma = check_permutation(sigma)
    if sigma == identity(len(sigma)):
        return True
    form = simple_form(sigma)
    if form.skeleton_kind == SIMPLE:
        return all(part == identity(len(part)) for part in form.parts)
    if form.skeleton_kind == REVERSAL:
        return len(form.parts) == 2 and all(
            part == identity(len(part)) for part in form.parts
        )
    assert form.skeleton_kind == IDENTITY
    nontrivial = [part for part in form.parts if part != identity(len(part))]
    if len(nontrivial) != 1:
        return False
    return is_irreducible_structural(nontrivial[0])


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_decompositions(
    n: int,
    r: int | None = None,
    *,
    irreducible_only: bool = False,
    allow_identity: bool = False,
    maximal: bool = False,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> Iterator[Decomposition]:
    """Yield every decomposition satisfying the options, in canonical order.

    ``r`` fixes the part count (multiset size); identity parts only pad out
    a fixed ``r`` and only when ``allow_identity`` is set.  ``maximal``
    means r = n-1 nonempty parts, equivalently one simple root per part.
    Degrees above ``bound`` are refused up front, because enumeration scans
    all n! inversion sets.

    Each decomposition is found exactly once: every nonempty part contains a
    descent, hence a simple root, and distinct parts contain distinct ones;
    the search always branches on the part owning the smallest uncovered
    simple root.

    >>> [str(d) for d in enumerate_decompositions(3, irreducible_only=True)]
    ['1 3 2 | 3 1 2', '2 1 3 | 2 3 1']
    >>> sum(1 for _ in enumerate_decompositions(4, maximal=True))
    5
    >>> [str(d) for d in enumerate_decompositions(2, 3, allow_identity=True)]
    ['1 2 | 1 2 | 2 1']
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if n > bound:
        raise ValueError(f"degree {n} exceeds the brute-force bound {bound}")
    if r is not None and r < 0:
        raise ValueError(f"part count must be nonnegative, got {r}")
    if maximal:
        if r is not None and r != n - 1:
            raise ValueError(f"maximal decompositions of degree {n} have {n - 1} parts")
        r = n - 1
        if allow_identity:
            raise ValueError("maximal parts are nonempty; allow_identity does not apply")
    if allow_identity and r is None:
        raise ValueError("padding with identity parts needs a fixed part count r")

    roots = all_roots(n)
    if not roots:
        # degree 1: the empty positive system, decomposed by identity parts only
        if r is None:
            yield Decomposition(1, ())
        elif r == 0 or allow_identity:
            yield Decomposition(1, ((1,),) * r)
        return

    index = {root: k for k, root in enumerate(roots)}
    full = (1 << len(roots)) - 1
    simple_positions = [index[root] for root in simple_roots(n)]

    by_anchor: list[list[tuple[int, Perm]]] = [[] for _ in range(n - 1)]
    for perm in itertools.permutations(range(1, n + 1)):
        mask = 0
        for root in inversion_set(perm):
            mask |= 1 << index[root]
        if mask == 0:
            continue
        if irreducible_only and not is_irreducible_structural(perm):
            continue
        anchored = [k for k, p in enumerate(simple_positions) if (mask >> p) & 1]
        if maximal and len(anchored) != 1:
            continue
        by_anchor[anchored[0]].append((mask, perm))

    results: list[Decomposition] = []
    chosen: list[Perm] = []

    def descend(covered: int) -> None:
        anchor = next(
            (k for k, p in enumerate(simple_positions) if not (covered >> p) & 1),
            None,
        )
        if anchor is None:
            if covered != full:
                return
            parts = list(chosen)
            if r is not None:
                if len(parts) > r:
                    return
                if len(parts) < r:
                    if not allow_identity:
                        return
                    parts.extend([identity(n)] * (r - len(parts)))
            results.append(Decomposition(n, tuple(parts)))
            return
        if r is not None and len(chosen) >= r:
            return
        for mask, perm in by_anchor[anchor]:
            if mask & covered:
                continue
            chosen.append(perm)
            descend(covered | mask)
            chosen.pop()

    descend(0)
    results.sort(key=lambda d: d.parts)
    yield from results


# ---------------------------------------------------------------------------
# structural counting engine (no enumeration, no genseries)


def _convolve_at(f: list[int], g: list[int], k: int) -> int:
    return sum(f[i] * g[k - i] for i in range(k + 1))


def _census_arrays(n_max: int) -> dict[str, list[int]]:
    """Shared integer arrays: factorials, indecomposables, simple censuses.

    ``s[m]`` (mirror pairs of simple permutations, degree m) and ``s_bc[m]``
    (symmetric simple embeddings of rank m, both pair members) are extracted
    triangularly from their factorial-series identities; both extractions
    must end with an exact zero residue, which is asserted.
    """
    fact = [0] + [math.factorial(k) for k in range(1, n_max + 1)]

    # prefix-indecomposable permutation counts: (1 + F) * MI = F
    mi = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        mi[k] = fact[k] - sum(fact[j] * mi[k - j] for j in range(1, k))
    fmi = [0] + [_convolve_at(fact, mi, k) for k in range(1, n_max + 1)]

    # MI^2 / (1 - MI): permutations whose canonical form stacks >= 2
    # indecomposable intervals corner to corner
    mi2 = [_convolve_at(mi, mi, k) for k in range(n_max + 1)]
    mid = [0] * (n_max + 1)
    for k in range(n_max + 1):
        mid[k] = mi2[k] + sum(mi[j] * mid[k - j] for j in range(1, k + 1))

    # every permutation is exactly one of: trivial, an interval stack in one
    # of two orientations, or an inflation of a simple skeleton of degree
    # >= 4; skeletons come in mirror pairs, hence the exact halving
    waf = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        value = fact[k] - (1 if k == 1 else 0) - 2 * mid[k]
        assert value % 2 == 0, "simple-skeleton census must be even"
        waf[k] = value // 2

    fpow = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    fpow[0][0] = 1
    for m in range(1, n_max + 1):
        for k in range(n_max + 1):
            fpow[m][k] = _convolve_at(fpow[m - 1], fact, k)

    s = [0] * (n_max + 1)
    if n_max >= 2:
        s[2] = 1
    residue = waf[:]
    for m in range(4, n_max + 1):
        s[m] = residue[m]
        if s[m]:
            for k in range(m, n_max + 1):
                residue[k] -= s[m] * fpow[m][k]
    assert all(c == 0 for c in residue), "simple-pair extraction left a residue"

    # symmetric world: hb[k] = 2^k k! symmetric embeddings at rank k; the
    # symmetric-simple census composed with F satisfies
    #     (S of F) = 1 - 1/(1 + F(2x)) - 2 F/(1 + F)
    hb = [1] + [(2**k) * fact[k] for k in range(1, n_max + 1)]
    doubled = [0] + [(2**k) * fact[k] for k in range(1, n_max + 1)]
    recip_doubled = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        recip_doubled[k] = -sum(
            doubled[j] * recip_doubled[k - j] for j in range(1, k + 1)
        )
    recip_f = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        recip_f[k] = -sum(fact[j] * recip_f[k - j] for j in range(1, k + 1))
    sb_of_f = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        two_f_over = 2 * sum(fact[i] * recip_f[k - i] for i in range(1, k + 1))
        sb_of_f[k] = -recip_doubled[k] - two_f_over

    s_bc = [0] * (n_max + 1)
    residue = sb_of_f[:]
    for m in range(2, n_max + 1):
        s_bc[m] = residue[m]
        if s_bc[m]:
            for k in range(m, n_max + 1):
                residue[k] -= s_bc[m] * fpow[m][k]
    assert all(c == 0 for c in residue), "symmetric-simple extraction left a residue"
    assert n_max < 2 or (s_bc[1] == 0 and s_bc[2] == 2)

    return {
        "fact": fact,
        "fmi": fmi,
        "waf": waf,
        "s": s,
        "s_bc": s_bc,
        "hb": hb,
        "sb_of_f": sb_of_f,
    }


def _irreducible_counts(
    n_max: int, census: dict[str, list[int]]
) -> tuple[list[int], list[int]]:
    """Counts of decompositions into irreducible parts, types A and B/C.

    Type A solves a(x) = x + sum_m s_m a(x)^m coefficient by coefficient.
    In type B/C each layer contributes either a single type-A slot or a
    symmetric-simple skeleton whose slot fillings come in mirror pairs
    (hence the exact halving), and layers stack freely: b = X / (1 - X).
    """
    s, s_bc = census["s"], census["s_bc"]
    a = [0] * (n_max + 1)
    apow = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    apow[0][0] = 1
    if n_max >= 1:
        a[1] = 1
        apow[1][1] = 1
    for k in range(2, n_max + 1):
        # [x^k] a^m for m >= 2 involves only a_j with j < k, all known
        for m in range(2, k + 1):
            apow[m][k] = sum(apow[m - 1][i] * a[k - i] for i in range(m - 1, k))
        a[k] = sum(s[m] * apow[m][k] for m in range(2, k + 1))
        apow[1][k] = a[k]

    layer = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        paired = sum(s_bc[m] * apow[m][k] for m in range(2, k + 1))
        assert paired % 2 == 0, "symmetric skeleton fillings must pair up"
        layer[k] = a[k] + paired // 2
    b = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        b[k] = layer[k] + sum(layer[j] * b[k - j] for j in range(1, k))
    return a, b


def _catalan_counts(n_max: int) -> tuple[list[int], list[int]]:
    """Maximal-decomposition counts: type A (Catalan, shifted) and type B/C.

    ``cat_a[k]`` satisfies the classical convolution recursion; ``cat_b[k]``
    counts rank-k maximal decompositions via the part containing the end
    root, which either spans the center or leaves a smaller symmetric core.
    """
    cat_a = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        cat_a[k] = sum(cat_a[t - 1] * cat_a[k - t] for t in range(1, k + 1))
    cat_b = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        cat_b[k] = cat_b[k - 1] + 2 * sum(
            cat_a[k - j - 1] * cat_b[j] for j in range(k - 1)
        )
    return cat_a, cat_b


def _triples_counts(
    n_max: int, census: dict[str, list[int]]
) -> tuple[list[int], list[int]]:
    """Unordered-triple counts (identity parts allowed), types A and B/C.

    Both passes run the same shape of recursion: ``ordered`` counts ordered
    triples, ``anchored`` the subset whose distinguished part does not split
    off a leading interval, ``proper`` the ordered triples of nonidentity
    parts up to the 6 slot permutations.  Unordered counts follow exactly:
    triples containing an identity part are classified by the complementary
    pair, contributing the half-census terms.
    """
    fact, fmi, waf, s = census["fact"], census["fmi"], census["waf"], census["s"]
    s_bc, hb, sb_of_f = census["s_bc"], census["hb"], census["sb_of_f"]

    ordered = [0] * (n_max + 1)
    anchored = [0] * (n_max + 1)
    proper = [0] * (n_max + 1)
    triples_a = [0] * (n_max + 1)
    opow = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    opow[0][0] = 1
    if n_max >= 1:
        ordered[1] = anchored[1] = triples_a[1] = 1
        opow[1][1] = 1
    for k in range(2, n_max + 1):
        for m in range(2, k + 1):
            opow[m][k] = sum(opow[m - 1][i] * ordered[k - i] for i in range(m - 1, k))
        split_top = sum(anchored[i] * ordered[k - i] for i in range(1, k))
        case_two_blocks = split_top - 2 * fmi[k] + 1
        assert case_two_blocks % 2 == 0
        case_skeleton = sum(s[m] * opow[m][k] for m in range(4, k + 1)) - waf[k]
        proper[k] = case_two_blocks // 2 + case_skeleton
        ordered[k] = 6 * proper[k] + 3 * fact[k] - 3
        anchored[k] = ordered[k] - sum(ordered[i] * anchored[k - i] for i in range(1, k))
        triples_a[k] = proper[k] + fact[k] // 2
        assert ordered[k] == 6 * triples_a[k] - 3
        opow[1][k] = ordered[k]

    # symmetric pass, mirroring the type-A pass around the fixed center
    mib = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        mib[k] = hb[k] - sum(fact[j] * mib[k - j] for j in range(1, k + 1))
    fmib = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        fmib[k] = sum(fact[i] * mib[k - i] for i in range(1, k + 1))
    skel_center = [_convolve_at(sb_of_f, hb, k) for k in range(n_max + 1)]

    ordered_bc = [1] + [0] * n_max
    anchored_bc = [1] + [0] * n_max
    triples_bc = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        skeleton_conv = 0
        for j in range(2, k + 1):
            at_j = sum(s_bc[m] * opow[m][j] for m in range(2, j + 1))
            skeleton_conv += at_j * ordered_bc[k - j]
        split_top = sum(ordered[i] * anchored_bc[k - i] for i in range(1, k + 1))
        case_two_blocks = split_top - 2 * fmib[k] + 1
        assert case_two_blocks % 2 == 0
        case_skeleton = skeleton_conv - skel_center[k]
        assert case_skeleton % 2 == 0
        proper_bc = case_two_blocks // 2 + case_skeleton // 2
        ordered_bc[k] = 6 * proper_bc + 3 * hb[k] - 3
        anchored_bc[k] = ordered_bc[k] - sum(
            ordered[i] * anchored_bc[k - i] for i in range(1, k + 1)
        )
        triples_bc[k] = proper_bc + hb[k] // 2
        assert ordered_bc[k] == 6 * triples_bc[k] - 3
    return triples_a, triples_bc


def count_structural(
    family: str, n_max: int, *, limit: int = DEFAULT_COUNT_LIMIT
) -> CountTable:
    """Exact counts for one family at 1..n_max via the recursive classification.

    No brute force: every value comes from the dynamic programs above, so
    ``n_max`` may comfortably exceed anything enumerable.  Agrees with
    :func:`enumerate_decompositions` wherever both apply and with the
    :mod:`rootdec.genseries` coefficients everywhere.

    >>> count_structural("A_IRREDUCIBLE", 6).counts
    (1, 1, 2, 6, 23, 114)
    >>> count_structural("A_TRIPLES", 8)[8]
    104604
    >>> count_structural("A_MAXIMAL", 5)[5]
    14
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not 1 <= n_max <= limit:
        raise ValueError(f"n_max must be in 1..{limit}, got {n_max}")

    if family == "A_MAXIMAL":
        cat_a, _ = _catalan_counts(n_max)
        return CountTable(family, tuple(cat_a[n - 1] for n in range(1, n_max + 1)))
    if family == "BC_MAXIMAL":
        _, cat_b = _catalan_counts(n_max)
        return CountTable(family, tuple(cat_b[1 : n_max + 1]))

    census = _census_arrays(n_max)
    if family == "SIMPLE_PAIRS_A":
        return CountTable(family, tuple(census["s"][1 : n_max + 1]))
    if family == "SIMPLE_PAIRS_BC":
        return CountTable(family, tuple(census["s_bc"][1 : n_max + 1]))
    if family in ("A_IRREDUCIBLE", "BC_IRREDUCIBLE"):
        a, b = _irreducible_counts(n_max, census)
        values = a if family == "A_IRREDUCIBLE" else b
        return CountTable(family, tuple(values[1 : n_max + 1]))
    triples_a, triples_bc = _triples_counts(n_max, census)
    values = triples_a if family == "A_TRIPLES" else triples_bc
    return CountTable(family, tuple(values[1 : n_max + 1]))

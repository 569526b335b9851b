"""Signed permutations, symmetric embeddings, projections, and B/C counting."""

from __future__ import annotations

import itertools
import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootdec.bcgroups import (
    DIFF,
    SHORT,
    SUM,
    TYPE_B,
    TYPE_C,
    BCRoot,
    SignedPermutation,
    all_signed_permutations,
    ambient_degree,
    bc_compose,
    bc_identity,
    bc_inversion_set,
    bc_is_simple,
    bc_longest,
    bc_positive_roots,
    count_bc,
    embed_B,
    embed_C,
    fiber,
    from_symmetric_B,
    from_symmetric_C,
    is_symmetric,
    mirror_index,
    parse_signed_permutation,
    project_root_B,
    project_root_C,
    symmetric_inflate,
    verify_bc_decomposition,
)
from rootdec.decompose import count_structural, verify_decomposition
from rootdec.permcore import compose, inversion_set, longest

EMBED = {TYPE_B: embed_B, TYPE_C: embed_C}
UNEMBED = {TYPE_B: from_symmetric_B, TYPE_C: from_symmetric_C}


def embedded_inversions(sigma: SignedPermutation, family: str):
    return inversion_set(EMBED[family](sigma)).roots


# ---------------------------------------------------------------------------
# containers and parsing


def test_signed_permutation_validation():
    assert SignedPermutation((-2, 1)).n == 2
    with pytest.raises(ValueError, match="rank"):
        SignedPermutation(())
    with pytest.raises(ValueError, match="outside"):
        SignedPermutation((0, 1))
    with pytest.raises(ValueError, match="outside"):
        SignedPermutation((3, 1))
    with pytest.raises(ValueError, match="bijection"):
        SignedPermutation((1, -1))
    with pytest.raises(ValueError, match="integers"):
        SignedPermutation((True, 2))


def test_signed_permutation_round_trips_through_text():
    sigma = SignedPermutation((-2, 1, -3))
    assert str(sigma) == "-2 1 -3"
    assert parse_signed_permutation(str(sigma)) == sigma
    assert parse_signed_permutation("-2, 1") == SignedPermutation((-2, 1))
    with pytest.raises(ValueError, match="empty"):
        parse_signed_permutation("   ")
    with pytest.raises(ValueError, match="cannot parse"):
        parse_signed_permutation("1 x")


def test_bcroot_rendering():
    assert str(BCRoot(3, TYPE_B, DIFF, 1, 2)) == "e1-e2"
    assert str(BCRoot(3, TYPE_B, SUM, 1, 3)) == "e1+e3"
    assert str(BCRoot(3, TYPE_B, SHORT, 2)) == "e2"
    assert str(BCRoot(3, TYPE_C, SUM, 2, 2)) == "2e2"


def test_bcroot_validation():
    with pytest.raises(ValueError, match="family"):
        BCRoot(2, "D", DIFF, 1, 2)
    with pytest.raises(ValueError, match="kind"):
        BCRoot(2, TYPE_B, "LONG", 1, 2)
    with pytest.raises(ValueError, match="outside"):
        BCRoot(2, TYPE_B, DIFF, 0, 2)
    with pytest.raises(ValueError, match="outside"):
        BCRoot(2, TYPE_B, DIFF, 1, 3)
    with pytest.raises(ValueError, match="i < j"):
        BCRoot(2, TYPE_B, DIFF, 2, 2)
    with pytest.raises(ValueError, match="only in type C"):
        BCRoot(2, TYPE_B, SUM, 2, 2)
    with pytest.raises(ValueError, match="only in type B"):
        BCRoot(2, TYPE_C, SHORT, 1)
    with pytest.raises(ValueError, match="single index"):
        BCRoot(2, TYPE_B, SHORT, 1, 2)


def test_positive_root_counts_are_rank_squared():
    for family in (TYPE_B, TYPE_C):
        for n in range(1, 6):
            roots = bc_positive_roots(family, n)
            assert len(roots) == n * n
            assert len(set(roots)) == n * n


# ---------------------------------------------------------------------------
# embeddings


def test_embed_frozen_examples():
    assert embed_B(SignedPermutation((-1,))) == (3, 2, 1)
    assert embed_C(SignedPermutation((-1,))) == (2, 1)
    assert embed_B(SignedPermutation((2, -1))) == (2, 5, 3, 1, 4)


def test_embed_identity_and_longest():
    for n in range(1, 5):
        assert embed_B(bc_identity(n)) == tuple(range(1, 2 * n + 2))
        assert embed_C(bc_identity(n)) == tuple(range(1, 2 * n + 1))
        assert embed_B(bc_longest(n)) == longest(2 * n + 1)
        assert embed_C(bc_longest(n)) == longest(2 * n)


def test_is_symmetric_examples():
    assert is_symmetric((3, 2, 1))
    assert not is_symmetric((2, 1, 3))
    assert is_symmetric((2, 5, 3, 1, 4))
    assert is_symmetric((2, 1))
    assert not is_symmetric((1, 3, 4, 2))


def test_from_symmetric_validation():
    with pytest.raises(ValueError, match="odd degree"):
        from_symmetric_B((2, 1))
    with pytest.raises(ValueError, match="even degree"):
        from_symmetric_C((3, 2, 1))
    with pytest.raises(ValueError, match="not symmetric"):
        from_symmetric_B((2, 1, 3))
    with pytest.raises(ValueError, match="below"):
        from_symmetric_B((1,))


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
@pytest.mark.parametrize("n", range(1, 4))
def test_embedding_round_trip_exhaustive(family, n):
    seen = 0
    for sigma in all_signed_permutations(n):
        image = EMBED[family](sigma)
        assert is_symmetric(image)
        assert UNEMBED[family](image) == sigma
        seen += 1
    assert seen == 2**n * math.factorial(n)


def test_embedding_is_a_homomorphism():
    elements = list(all_signed_permutations(2))
    for a, b in itertools.product(elements, repeat=2):
        ab = bc_compose(a, b)
        assert embed_B(ab) == compose(embed_B(a), embed_B(b))
        assert embed_C(ab) == compose(embed_C(a), embed_C(b))


def test_bc_compose_rank_mismatch():
    with pytest.raises(ValueError, match="rank mismatch"):
        bc_compose(bc_identity(2), bc_identity(3))


def test_mirror_index_bounds():
    assert mirror_index(5, 1) == 5
    assert mirror_index(5, 3) == 3
    with pytest.raises(ValueError, match="outside"):
        mirror_index(5, 6)


# ---------------------------------------------------------------------------
# projection and fibers


def test_project_frozen_examples():
    assert project_root_B(2, (1, 4)) == BCRoot(2, TYPE_B, SUM, 1, 2)
    assert project_root_B(2, (1, 5)) == BCRoot(2, TYPE_B, SHORT, 1)
    assert project_root_B(2, (1, 2)) == BCRoot(2, TYPE_B, DIFF, 1, 2)
    assert project_root_B(2, (4, 5)) == BCRoot(2, TYPE_B, DIFF, 1, 2)
    assert project_root_B(2, (3, 4)) == BCRoot(2, TYPE_B, SHORT, 2)
    assert project_root_C(2, (2, 3)) == BCRoot(2, TYPE_C, SUM, 2, 2)
    assert project_root_C(2, (1, 3)) == BCRoot(2, TYPE_C, SUM, 1, 2)
    assert project_root_C(2, (3, 4)) == BCRoot(2, TYPE_C, DIFF, 1, 2)


def test_project_rejects_invalid_roots():
    with pytest.raises(ValueError, match="invalid"):
        project_root_B(2, (3, 3))
    with pytest.raises(ValueError, match="invalid"):
        project_root_C(2, (1, 5))


def test_fiber_sizes_and_bookkeeping():
    for n in range(1, 5):
        sizes_b = Counter()
        for gamma in bc_positive_roots(TYPE_B, n):
            sizes_b[len(fiber(TYPE_B, n, gamma))] += 1
        assert sizes_b[3] == n  # short roots
        assert sizes_b[2] == n * (n - 1)  # long roots, both signs
        assert 3 * n + 2 * n * (n - 1) == n * (2 * n + 1)

        sizes_c = Counter()
        for gamma in bc_positive_roots(TYPE_C, n):
            sizes_c[len(fiber(TYPE_C, n, gamma))] += 1
        assert sizes_c[1] == n  # doubled roots
        assert sizes_c[2] == n * (n - 1)
        assert n + 2 * n * (n - 1) == 2 * n * n - n


def test_fiber_frozen_example_and_validation():
    assert fiber(TYPE_B, 2, BCRoot(2, TYPE_B, SHORT, 1)) == ((1, 3), (1, 5), (3, 5))
    with pytest.raises(ValueError, match="not a positive root"):
        fiber(TYPE_B, 2, BCRoot(3, TYPE_B, SHORT, 3))


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
@pytest.mark.parametrize("n", range(1, 4))
def test_fibers_partition_the_ambient_system(family, n):
    degree = ambient_degree(family, n)
    covered = []
    for gamma in bc_positive_roots(family, n):
        covered.extend(fiber(family, n, gamma))
    assert sorted(covered) == sorted(
        (i, j) for i in range(1, degree) for j in range(i + 1, degree + 1)
    )


# ---------------------------------------------------------------------------
# inversion sets


def _acts_negatively(sigma: SignedPermutation, gamma: BCRoot) -> bool:
    """Direct definition: apply the signed permutation to the root vector."""
    vec = Counter()
    if gamma.kind == DIFF:
        vec[gamma.i] += 1
        vec[gamma.j] -= 1
    elif gamma.kind == SHORT:
        vec[gamma.i] += 1
    else:
        vec[gamma.i] += 1
        vec[gamma.j] += 1
    out = Counter()
    for idx, coeff in vec.items():
        v = sigma.images[idx - 1]
        out[abs(v)] += coeff * (1 if v > 0 else -1)
    first = min((k for k, c in out.items() if c), default=None)
    return first is not None and out[first] < 0


def test_bc_inversion_set_frozen_examples():
    assert bc_inversion_set(bc_identity(3), TYPE_B) == frozenset()
    assert {str(r) for r in bc_inversion_set(SignedPermutation((-1,)), TYPE_B)} == {"e1"}
    assert {str(r) for r in bc_inversion_set(SignedPermutation((-1, 2)), TYPE_C)} == {
        "2e1",
        "e1-e2",
        "e1+e2",
    }
    full = bc_inversion_set(bc_longest(3), TYPE_B)
    assert full == frozenset(bc_positive_roots(TYPE_B, 3))


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
@pytest.mark.parametrize("n", range(1, 4))
def test_bc_inversion_set_matches_direct_action(family, n):
    roots = bc_positive_roots(family, n)
    for sigma in all_signed_permutations(n):
        expected = {gamma for gamma in roots if _acts_negatively(sigma, gamma)}
        assert bc_inversion_set(sigma, family) == expected, sigma


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
@pytest.mark.parametrize("n", range(1, 4))
def test_fiber_consistency(family, n):
    # the embedded inversion set contains each fiber entirely or not at all
    fibers = [
        (gamma, set(fiber(family, n, gamma))) for gamma in bc_positive_roots(family, n)
    ]
    for sigma in all_signed_permutations(n):
        ambient = embedded_inversions(sigma, family)
        projected = bc_inversion_set(sigma, family)
        for gamma, fib in fibers:
            inside = fib & ambient
            assert not inside or inside == fib
            assert (gamma in projected) == (inside == fib)


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
@pytest.mark.parametrize("n", range(1, 4))
def test_mu_stability(family, n):
    # (i, j) inverted forces its mirrored partner (j', i') inverted
    degree = ambient_degree(family, n)
    for sigma in all_signed_permutations(n):
        ambient = embedded_inversions(sigma, family)
        for i, j in ambient:
            mu = (mirror_index(degree, j), mirror_index(degree, i))
            if mu[0] != mu[1]:
                assert (min(mu), max(mu)) in ambient


# ---------------------------------------------------------------------------
# decomposition verification


def test_verify_bc_frozen_examples():
    assert verify_bc_decomposition(TYPE_B, [SignedPermutation((-1,))])
    # two parts both containing the short root e1 overlap
    assert not verify_bc_decomposition(
        TYPE_B, [SignedPermutation((-1,)), SignedPermutation((-1,))]
    )


def test_verify_bc_validation():
    with pytest.raises(ValueError, match="rank mismatch"):
        verify_bc_decomposition(TYPE_B, [bc_identity(1), bc_identity(2)])
    with pytest.raises(ValueError, match="at least one"):
        verify_bc_decomposition(TYPE_B, [])
    with pytest.raises(ValueError, match="family"):
        verify_bc_decomposition("D", [bc_identity(1)])


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
@pytest.mark.parametrize("n", range(1, 5))
def test_complement_pairs_verify(family, n):
    w0 = bc_longest(n)
    sample = itertools.islice(all_signed_permutations(n), 0, None, max(1, n * n))
    for sigma in sample:
        assert verify_bc_decomposition(family, [sigma, bc_compose(w0, sigma)])


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
def test_verify_bc_equals_embedded_verification(family):
    n = 2
    elements = list(all_signed_permutations(n))
    degree = ambient_degree(family, n)
    for a, b in itertools.product(elements, repeat=2):
        direct = verify_bc_decomposition(family, [a, b])
        embedded = verify_decomposition(
            degree, [EMBED[family](a), EMBED[family](b)]
        ).ok
        assert direct == embedded


# ---------------------------------------------------------------------------
# simplicity


def test_bc_is_simple_frozen_examples():
    assert not bc_is_simple(SignedPermutation((-1,)), TYPE_B)
    assert bc_is_simple(SignedPermutation((2, -1)), TYPE_B)
    for n in range(1, 4):
        assert not bc_is_simple(bc_identity(n), TYPE_B)
    for n in range(2, 4):
        assert not bc_is_simple(bc_identity(n), TYPE_C)
    # rank-1 type C embeds with degree 2, which is vacuously simple under the
    # block convention; the censuses below only use ranks where it is silent
    assert bc_is_simple(bc_identity(1), TYPE_C)


def test_simple_census_matches_structural_table():
    table = count_structural("SIMPLE_PAIRS_BC", 4)
    for n in range(1, 5):
        census_b = sum(
            1 for s in all_signed_permutations(n) if bc_is_simple(s, TYPE_B)
        )
        assert census_b == table[n]
    for n in range(2, 5):
        census_c = sum(
            1 for s in all_signed_permutations(n) if bc_is_simple(s, TYPE_C)
        )
        assert census_c == table[n]


# ---------------------------------------------------------------------------
# symmetric inflation


def test_symmetric_inflate_frozen_example():
    sym = symmetric_inflate(TYPE_B, SignedPermutation((-1,)), [(1, 2)])
    assert sym == SignedPermutation((-2, -1))
    assert embed_B(sym) == (4, 5, 3, 1, 2)


def test_symmetric_inflate_all_identity_parts_blocks_the_skeleton():
    sym = symmetric_inflate(TYPE_B, SignedPermutation((-1,)), [(1, 2, 3)])
    assert sym == SignedPermutation((-3, -2, -1))
    assert embed_B(sym) == (5, 6, 7, 4, 1, 2, 3)


def test_symmetric_inflate_mirror_conjugation():
    sym = symmetric_inflate(TYPE_C, bc_identity(2), [(2, 1, 3), (1,)])
    image = embed_C(sym)
    assert image == (2, 1, 3, 4, 5, 6, 8, 7)
    # slot 1 carries (2,1,3); its mirror slot carries the conjugate (1,3,2)
    assert image[5:8] == (6, 8, 7)


def test_symmetric_inflate_with_center():
    sym = symmetric_inflate(
        TYPE_B,
        SignedPermutation((1,)),
        [(1, 2)],
        center_part=SignedPermutation((-1,)),
    )
    assert is_symmetric(embed_B(sym))
    assert sym.n == 2 + 1  # two from the part, one from the center
    # center negation sits at the middle coordinate
    assert sym.images[2] == -3 or sym.images == (1, 2, -3)


def test_symmetric_inflate_validation():
    with pytest.raises(ValueError, match="expected 2 parts"):
        symmetric_inflate(TYPE_B, bc_identity(2), [(1, 2)])
    with pytest.raises(ValueError, match="no center interval"):
        symmetric_inflate(
            TYPE_C, bc_identity(1), [(1, 2)], center_part=SignedPermutation((1,))
        )


@given(
    st.sampled_from((TYPE_B, TYPE_C)),
    st.lists(st.permutations((1, 2, 3)), min_size=1, max_size=3),
)
@settings(max_examples=80, deadline=None)
def test_symmetric_inflate_with_longest_skeleton_is_consistent(family, raw_parts):
    parts = [tuple(p) for p in raw_parts]
    skeleton = bc_longest(len(parts))
    sym = symmetric_inflate(family, skeleton, parts)
    assert sym.n == sum(len(p) for p in parts) + (0 if family == TYPE_C else 0)
    image = EMBED[family](sym)
    assert is_symmetric(image)
    # first part lands unshifted at the top of the value range, mirrored copy
    # lands at the bottom
    z1 = len(parts[0])
    degree = len(image)
    top = tuple(image[k] - (degree - z1) for k in range(z1))
    assert top == parts[0]


# ---------------------------------------------------------------------------
# brute counting oracle vs the structural tables


def _brute_family_counts(family: str, n: int) -> tuple[int, int, int]:
    """Exhaustive (irreducible, maximal, triples) counts in the B/C world."""
    roots = bc_positive_roots(family, n)
    index = {gamma: k for k, gamma in enumerate(roots)}
    full = (1 << len(roots)) - 1
    masks: dict[int, SignedPermutation] = {}
    for sigma in all_signed_permutations(n):
        mask = 0
        for gamma in bc_inversion_set(sigma, family):
            mask |= 1 << index[gamma]
        masks.setdefault(mask, sigma)
    nonzero = sorted(m for m in masks if m)
    mask_set = set(nonzero)

    def splittable(m: int) -> bool:
        sub = (m - 1) & m
        while sub:
            if sub in mask_set and (m ^ sub) in mask_set:
                return True
            sub = (sub - 1) & m
        return False

    irreducible_masks = {m for m in nonzero if not splittable(m)}

    if family == TYPE_B:
        simple_roots_bc = [BCRoot(n, family, DIFF, i, i + 1) for i in range(1, n)]
        simple_roots_bc.append(BCRoot(n, family, SHORT, n))
    else:
        simple_roots_bc = [BCRoot(n, family, DIFF, i, i + 1) for i in range(1, n)]
        simple_roots_bc.append(BCRoot(n, family, SUM, n, n))
    simple_bits = 0
    for gamma in simple_roots_bc:
        simple_bits |= 1 << index[gamma]

    def count(parts_pool: list[int], exact_r: int | None, allow_id: bool) -> int:
        found = 0

        def descend(covered: int, used: int) -> None:
            nonlocal found
            if covered == full:
                if exact_r is None or used == exact_r or (allow_id and used < exact_r):
                    found += 1
                return
            if exact_r is not None and used >= exact_r:
                return
            lowest = (~covered & full) & -(~covered & full)
            for m in parts_pool:
                if m & lowest and not (m & covered):
                    descend(covered | m, used + 1)

        descend(0, 0)
        return found

    irreducible = count(sorted(irreducible_masks), None, False)
    one_simple = [m for m in nonzero if bin(m & simple_bits).count("1") == 1]
    maximal = count(one_simple, n, False)
    triples = count(nonzero, 3, True)
    return irreducible, maximal, triples


@pytest.mark.parametrize("family", (TYPE_B, TYPE_C))
@pytest.mark.parametrize("n", range(1, 4))
def test_brute_counts_match_structural_tables(family, n):
    irreducible, maximal, triples = _brute_family_counts(family, n)
    assert irreducible == count_bc("BC_IRREDUCIBLE", n)[n]
    assert maximal == count_bc("BC_MAXIMAL", n)[n]
    assert triples == count_bc("BC_TRIPLES", n)[n]


# ---------------------------------------------------------------------------
# counting tables


def test_count_bc_frozen_examples():
    assert count_bc("BC_IRREDUCIBLE", 4)[4] == 100
    assert count_bc("BC_TRIPLES", 3)[3] == 33
    assert count_bc("BC_MAXIMAL", 2)[2] == 3
    assert count_bc("SIMPLE_PAIRS_BC", 5).counts == (0, 2, 10, 90, 966)


def test_count_bc_rejects_type_a_families():
    with pytest.raises(ValueError, match="B/C families"):
        count_bc("A_TRIPLES", 5)
    with pytest.raises(ValueError, match="B/C families"):
        count_bc("A_IRREDUCIBLE", 5)


def test_count_bc_matches_count_structural():
    for family in ("BC_IRREDUCIBLE", "BC_MAXIMAL", "BC_TRIPLES"):
        assert count_bc(family, 12).counts == count_structural(family, 12).counts


# ---------------------------------------------------------------------------
# randomized properties


@st.composite
def signed_permutations(draw, max_rank=5):
    n = draw(st.integers(min_value=1, max_value=max_rank))
    values = draw(st.permutations(tuple(range(1, n + 1))))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * v for s, v in zip(signs, values)))


@given(signed_permutations())
def test_random_round_trip_both_families(sigma):
    assert from_symmetric_B(embed_B(sigma)) == sigma
    assert from_symmetric_C(embed_C(sigma)) == sigma


@given(signed_permutations(max_rank=4), st.sampled_from((TYPE_B, TYPE_C)))
def test_random_complement_pair_verifies(sigma, family):
    w0 = bc_longest(sigma.n)
    assert verify_bc_decomposition(family, [sigma, bc_compose(w0, sigma)])


@given(signed_permutations(max_rank=4), st.sampled_from((TYPE_B, TYPE_C)))
def test_inversion_count_transports_through_fibers(sigma, family):
    # ambient inversion count = sum of fiber sizes over the B/C inversion set
    ambient = embedded_inversions(sigma, family)
    total = sum(
        len(fiber(family, sigma.n, gamma))
        for gamma in bc_inversion_set(sigma, family)
    )
    assert total == len(ambient)

from itertools import combinations
from math import comb

import pytest

from oddgray.flippable import (
    BRIDGE,
    Context,
    PATCH,
    QUAD,
    apply_context,
    canonical_witness,
    derivations,
    enumerate_tuples,
    fan,
)
from oddgray.spanning import (
    SpanningTree,
    TreeEntry,
    counting_tree,
    flat_tree,
    full_tree,
    mask_width,
    partition,
    steep_tree,
    tree_family,
    validate_tree,
)
from oddgray.words import Bits, EMPTY, enumerate_dyck

B = Bits.parse


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def entries_only(tuples):
    """Wrap bare tuples for validate_tree (derivations from the pool)."""
    return tuple(TreeEntry(t, derivations(t)[0]) for t in tuples)


# ---------------------------------------------------------------- partition


def test_partition_small():
    p = partition(2)
    assert p.flat == {B("1010")} and p.steep == {B("1100")}
    p = partition(3)
    assert p.steep == {B("110010")}
    assert p.flat == set(enumerate_dyck(3)) - {B("110010")}


def test_partition_is_prefix_split_for_k_at_least_4():
    for k in (4, 5, 6):
        p = partition(k)
        shifted = {B("10") + x for x in enumerate_dyck(k - 1)}
        assert p.flat == shifted
        assert p.steep == set(enumerate_dyck(k)) - shifted
        assert len(p.flat) == catalan(k - 1)


def test_partition_membership_anchors():
    for k in range(2, 10):
        p = partition(k)
        assert B("1010" + "10" * (k - 2)) in p.flat
        assert B("1100" + "10" * (k - 2)) in p.steep


def test_partition_rejects_tiny():
    with pytest.raises(ValueError):
        partition(1)


# ---------------------------------------------------------------- builders


def test_full_tree_3_is_the_published_pair():
    assert full_tree(3).tuple_set() == {fan().tuple(), BRIDGE.tuple()}


def test_steep_tree_4_literals():
    expected = {
        fan(B("10")).tuple(),
        PATCH.tuple(),
        apply_context(BRIDGE.tuple(), Context(B("1"), B("0"))),
        apply_context(fan().tuple(), Context(EMPTY, B("10"))),
    }
    assert steep_tree(4).tuple_set() == expected


def test_flat_tree_4_is_shifted_full_tree_3():
    ten = B("10")
    expected = {
        apply_context(fan().tuple(), Context(ten, EMPTY)),
        apply_context(BRIDGE.tuple(), Context(ten, EMPTY)),
    }
    assert flat_tree(4).tuple_set() == expected


def test_tuple_size_accounting():
    for k in range(3, 8):
        t = full_tree(k)
        assert sum(len(e.tup.members) - 1 for e in t.entries) == catalan(k) - 1


def test_trees_validate():
    for k in range(2, 9):
        full, flat, steep = tree_family(k)
        assert validate_tree(flat).passed, k
        assert validate_tree(steep).passed, k
        if k >= 3:
            assert validate_tree(full).passed, k


def test_tree_entries_carry_their_derivations():
    for k in (3, 4, 5, 6):
        for e in full_tree(k).entries:
            assert e.derivation.tuple() == e.tup


def test_tree_tuples_are_pool_members():
    for k in (3, 4, 5):
        pool = set(enumerate_tuples(k))
        for e in full_tree(k).entries:
            assert e.tup in pool


def test_full_tree_rejects_tiny():
    with pytest.raises(ValueError):
        full_tree(2)


# ---------------------------------------------------------------- validation


def test_validate_rejects_undersized():
    base = frozenset(enumerate_dyck(3))
    r = validate_tree(SpanningTree(base, entries_only([fan().tuple()])))
    assert not r.passed
    assert any("accounting" in f or "components" in f for f in r.failures)


def test_validate_rejects_overlapping_supports():
    base = frozenset(enumerate_dyck(3))
    r = validate_tree(SpanningTree(base, entries_only([fan().tuple(), QUAD.tuple()])))
    assert not r.passed
    assert any("share" in f for f in r.failures)


def test_validate_rejects_foreign_support():
    base = frozenset(enumerate_dyck(3)) - {B("101010")}
    r = validate_tree(SpanningTree(base, entries_only([BRIDGE.tuple()])))
    assert not r.passed
    assert any("base set" in f for f in r.failures)


def recursive_spanning(base, tuples):
    """Oracle: the block-splitting recursive definition of a spanning hypertree."""
    base = frozenset(base)
    tuples = list(tuples)
    if len(base) == 1:
        return tuples == []
    for i, t in enumerate(tuples):
        rest = tuples[:i] + tuples[i + 1 :]
        if not t.support <= base:
            continue
        # components of the incidence structure after removing t
        comp = {x: x for x in base}

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for r in rest:
            ws = list(r.support)
            for w in ws[1:]:
                ra, rb = find(ws[0]), find(w)
                if ra != rb:
                    comp[rb] = ra
        blocks = {}
        for x in base:
            blocks.setdefault(find(x), set()).add(x)
        roots = {find(w) for w in t.support}
        if len(roots) != len(t.support) or len(roots) != len(blocks):
            continue
        ok = True
        for root, block in blocks.items():
            sub = [r for r in rest if r.support <= block]
            others = [r for r in rest if r.support & block and not r.support <= block]
            if others or not recursive_spanning(block, sub):
                ok = False
                break
        if ok:
            return True
    return False


def test_validate_matches_recursive_definition_exhaustively():
    # validate_tree adds the mark condition on top of the structural
    # definition, so compare against (recursive oracle) and (no conflicts).
    from oddgray.flippable import conflict_violations

    pool3 = enumerate_tuples(3)
    base3 = frozenset(enumerate_dyck(3))
    for r in range(0, len(pool3) + 1):
        for sub in combinations(pool3, r):
            fast = validate_tree(SpanningTree(base3, entries_only(sub))).passed
            slow = recursive_spanning(base3, sub) and not conflict_violations(sub)
            assert fast == slow
    pool4 = enumerate_tuples(4)
    base4 = frozenset(enumerate_dyck(4))
    for r in (4, 5):
        for sub in combinations(pool4, r):
            fast = validate_tree(SpanningTree(base4, entries_only(sub))).passed
            slow = recursive_spanning(base4, sub) and not conflict_violations(sub)
            assert fast == slow


def test_builder_trees_match_recursive_definition():
    for k in (3, 4, 5):
        t = full_tree(k)
        assert recursive_spanning(t.base, [e.tup for e in t.entries])


def test_unique_conflict_free_tree_at_semilength_3():
    pool = enumerate_tuples(3)
    base = frozenset(enumerate_dyck(3))
    winners = [
        set(sub)
        for r in range(0, len(pool) + 1)
        for sub in combinations(pool, r)
        if validate_tree(SpanningTree(base, entries_only(sub))).passed
    ]
    assert winners == [{fan().tuple(), BRIDGE.tuple()}]


# ---------------------------------------------------------------- counting


def test_mask_width():
    assert mask_width(6) == 1
    assert mask_width(7) == 2
    assert mask_width(8) == 5
    with pytest.raises(ValueError):
        mask_width(5)


def test_counting_tree_mask_zero_is_the_plain_tree():
    assert counting_tree(6, 0).tuple_set() == full_tree(6).tuple_set()


def test_counting_tree_uses_alternate_connector():
    t = counting_tree(6, 1)
    connector = apply_context(fan(B("1100")).tuple(), Context(EMPTY, B("10")))
    assert connector in t.tuple_set()
    assert connector not in full_tree(6).tuple_set()


def test_counting_trees_distinct_and_valid():
    for k in (6, 7, 8):
        seen = set()
        for mask in range(1 << mask_width(k)):
            t = counting_tree(k, mask)
            if k < 8:
                assert validate_tree(t).passed
            seen.add(t.tuple_set())
        assert len(seen) == 1 << mask_width(k)


def test_counting_tree_rejects_bad_mask():
    with pytest.raises(ValueError):
        counting_tree(6, 2)
    with pytest.raises(ValueError):
        counting_tree(5, 0)


def test_tree_witnesses_edge_disjoint():
    for k in (3, 4, 5, 6):
        seen = set()
        for e in full_tree(k).entries:
            cycle = canonical_witness(e.tup)
            m = len(cycle)
            for i in range(m):
                edge = frozenset((cycle[i], cycle[(i + 1) % m]))
                assert edge not in seen
                seen.add(edge)


def test_tree_json_shape():
    payload = full_tree(3).to_json()
    assert sorted(payload) == ["base", "tuples"]
    assert payload["base"] == sorted(str(x) for x in enumerate_dyck(3))
    assert {m["word"] for t in payload["tuples"] for m in t["members"]} <= set(
        payload["base"]
    )
    for t in payload["tuples"]:
        assert set(t["derivation"]) == {"family", "inner", "prefix", "suffix"}

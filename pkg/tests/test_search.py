"""Exhaustive walks: frozen counts, guards, budgets, and theorem checks."""

from math import factorial

import pytest

from mdskit import (
    Code,
    Field,
    InvalidParameters,
    NotMds,
    SearchSpaceTooLarge,
    SearchSpec,
    ZeroWordAbsent,
    doubly_extended_rs,
    enumerate_mds,
    exists_mds,
    extended_rs_code,
    is_mds,
    sum_zero_code,
    verify_bounds,
    verify_distribution,
    verify_spectrum_theorems,
)


def test_spec_validation():
    with pytest.raises(InvalidParameters):
        SearchSpec(2, 3, 2)          # n < k
    with pytest.raises(InvalidParameters):
        SearchSpec(3, 2, 1)          # q < 2
    with pytest.raises(InvalidParameters):
        SearchSpec(3, 2, 2, mode="wander")
    with pytest.raises(InvalidParameters):
        SearchSpec(3, 2, 2, limit=0)
    with pytest.raises(InvalidParameters):
        SearchSpec(3, 2, 2, max_nodes=0)


@pytest.mark.parametrize("n,k,q,count", [
    (3, 2, 2, 1),
    (4, 3, 2, 1),
    (5, 4, 2, 1),
    (3, 2, 3, 4),   # order-3 Latin squares with a fixed corner
])
def test_frozen_counts_with_zero(n, k, q, count):
    result = enumerate_mds(SearchSpec(n, k, q, require_zero=True, mode="count"))
    assert result.count == count
    assert result.complete


@pytest.mark.parametrize("n,q", [(3, 2), (3, 3), (4, 3), (3, 4)])
def test_repetition_like_counts(n, q):
    # with zero fixed, each position assigns distinct nonzero symbols to
    # the q-1 remaining words, so the count is ((q-1)!)^(n-1)
    result = enumerate_mds(SearchSpec(n, 1, q, require_zero=True, mode="count"))
    assert result.count == factorial(q - 1) ** (n - 1)


def test_full_count_without_zero():
    # length-3 binary: the even-weight words and the odd-weight words
    result = enumerate_mds(SearchSpec(3, 2, 2, mode="count"))
    assert result.count == 2


def test_collect_returns_mds_codes():
    result = enumerate_mds(SearchSpec(3, 2, 3, require_zero=True, mode="collect"))
    assert len(result.codes) == 4
    for code in result.codes:
        assert isinstance(code, Code)
        assert (code.n, code.k, code.q) == (3, 2, 3)
        assert code.contains_zero()
        assert is_mds(code).is_mds
    assert len(set(result.codes)) == 4


def test_limit_stops_early():
    result = enumerate_mds(SearchSpec(3, 2, 3, require_zero=True,
                                      mode="collect", limit=2))
    assert len(result.codes) == 2
    assert not result.complete


def test_exists():
    assert exists_mds(3, 2, 3)
    assert exists_mds(4, 2, 3)
    assert exists_mds(4, 2, 5)
    assert exists_mds(5, 2, 4)
    assert not exists_mds(4, 2, 2)
    assert not exists_mds(5, 3, 2)


def test_exists_unresolved_budget_raises():
    with pytest.raises(SearchSpaceTooLarge):
        exists_mds(4, 2, 3, max_nodes=1)


def test_budget_stops_walk_honestly():
    result = enumerate_mds(SearchSpec(4, 2, 3, require_zero=True,
                                      mode="count", max_nodes=2))
    assert not result.complete


def test_guards():
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_mds(SearchSpec(12, 12, 3))          # q^k too big
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_mds(SearchSpec(13, 2, 2))           # n too long
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_mds(SearchSpec(12, 2, 5))           # q^n universe too big
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_mds(SearchSpec(9, 9, 3))            # candidate set too big
    # guards are configuration, not hard limits
    result = enumerate_mds(SearchSpec(3, 2, 2, max_words=4, max_length=3))
    assert result.count == 2
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_mds(SearchSpec(3, 2, 2, max_words=3))


def test_verify_bounds_binary_and_ternary():
    reports = verify_bounds(2, 4)
    assert len(reports) == 3  # k = 2, 3, 4
    assert all(r.passed for r in reports)
    reports = verify_bounds(3, 3)
    assert all(r.passed for r in reports)
    assert any("n > 4" in r.claim for r in reports)


def test_verify_spectrum_theorems():
    code = doubly_extended_rs(Field(4))
    reports = verify_spectrum_theorems(code)
    assert all(r.passed for r in reports)
    # n = q+k-1 with k, q > 2 carries the full-weight claim
    assert any("full-weight" in r.claim for r in reports)

    code = extended_rs_code(Field(3), 2)
    reports = verify_spectrum_theorems(code)
    assert all(r.passed for r in reports)
    assert not any("full-weight" in r.claim for r in reports)


def test_verify_spectrum_rejects():
    from mdskit import SP, apply_move
    code = extended_rs_code(Field(3), 2)
    with pytest.raises(ZeroWordAbsent):
        verify_spectrum_theorems(apply_move(code, SP(0, (1, 2, 0))))
    not_mds = Code(2, [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)])
    with pytest.raises(NotMds):
        verify_spectrum_theorems(not_mds)


def test_verify_distribution_in_and_out_of_regime():
    report = verify_distribution(doubly_extended_rs(Field(4)))
    assert report.passed and not report.out_of_regime

    report = verify_distribution(sum_zero_code(4, Field(2)))
    assert report.out_of_regime
    assert report.passed  # agrees empirically for the binary parity check

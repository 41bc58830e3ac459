import random
from itertools import combinations

import pytest

from genlink import (
    LinkInstance,
    Monomial,
    antidiagonal_divisor,
    chain_normal_form,
    odd_part_reduction,
    square_divisor,
    yvar,
)
from genlink.verify import _multichains


def test_antidiagonal_divisor_single_row():
    inst = LinkInstance(1, 4)
    for k in range(1, 5):
        assert antidiagonal_divisor(inst, (k,), ()) == k


def test_antidiagonal_divisor_exhaustive_small():
    for m, n in [(2, 3), (2, 4), (3, 4), (3, 5)]:
        inst = LinkInstance(m, n)
        for cols in inst.column_sets:
            for A in inst.selectors:
                j = antidiagonal_divisor(inst, cols, A)
                assert 1 <= j <= inst.g
                target = inst.antidiagonal_for_columns(cols) * inst.complement_monomial(A)
                assert inst.antidiagonal(j).divides(target)


def test_antidiagonal_divisor_smallest_columns():
    inst = LinkInstance(3, 5)
    j = antidiagonal_divisor(inst, (1, 2, 3), (2, 3))
    assert inst.antidiagonal(j).divides(
        inst.antidiagonal_for_columns((1, 2, 3)) * inst.complement_monomial((2, 3))
    )


# -- square divisors -------------------------------------------------------------


def test_square_divisor_r0_single_generator():
    inst = LinkInstance(2, 4)
    w = square_divisor(inst, (2,), ())
    assert w.case == "coprime_block" or w.case == "single_antidiagonal"
    assert w.delta == Monomial.of(yvar(2, 2)) * inst.antidiagonal(2)
    assert (w.delta ** 2).divides(w.gamma)


def test_square_divisor_interior_cell_47():
    w = square_divisor(LinkInstance(4, 7), (), ((2, 4, 5), (2, 5, 7), (2, 6, 7)))
    assert w.case == "interior_cell"
    assert w.cell == (2, 5)
    assert w.lo == 2
    assert w.hi == 3
    assert w.bridge == (2, 5, 6)


def test_square_divisor_all_antidiagonals_35():
    inst = LinkInstance(3, 5)
    w = square_divisor(inst, (1, 2, 3), ())
    assert w.case == "coprime_block"
    assert w.r == 1
    expected = Monomial.one()
    for j in (1, 2, 3):
        expected = expected * Monomial.of(yvar(j, j)) * inst.antidiagonal(j)
    assert w.delta == expected


def test_square_divisor_exhaustive_small_instances():
    for m, n in [(2, 3), (2, 4), (3, 4)]:
        inst = LinkInstance(m, n)
        for r in (0, 1):
            total = 2 * r + 1
            for a in range(min(total, inst.g) + 1):
                for diag in combinations(range(1, inst.g + 1), a):
                    for chain in _multichains(inst.selectors, total - a):
                        square_divisor(inst, diag, chain)


def test_square_divisor_sampled_35():
    inst = LinkInstance(3, 5)
    rng = random.Random(11)
    for _ in range(200):
        r = rng.randrange(3)
        total = 2 * r + 1
        a = rng.randrange(min(total, inst.g) + 1)
        diag = tuple(sorted(rng.sample(range(1, inst.g + 1), a)))
        chain = chain_normal_form(
            [inst.selectors[rng.randrange(len(inst.selectors))] for _ in range(total - a)]
        ) if total - a else ()
        w = square_divisor(inst, diag, chain)
        assert (w.delta ** 2).divides(w.gamma)


def test_square_divisor_sampled_47():
    inst = LinkInstance(4, 7)
    rng = random.Random(23)
    for _ in range(60):
        r = rng.randrange(3)
        total = 2 * r + 1
        a = rng.randrange(min(total, inst.g) + 1)
        diag = tuple(sorted(rng.sample(range(1, inst.g + 1), a)))
        chain = chain_normal_form(
            [inst.selectors[rng.randrange(len(inst.selectors))] for _ in range(total - a)]
        ) if total - a else ()
        w = square_divisor(inst, diag, chain)
        assert (w.delta ** 2).divides(w.gamma)


def test_square_divisor_input_validation():
    inst = LinkInstance(3, 5)
    with pytest.raises(ValueError):
        square_divisor(inst, (1, 2), ())  # even total
    with pytest.raises(ValueError):
        square_divisor(inst, (2, 1, 3), ())  # not increasing
    with pytest.raises(ValueError):
        square_divisor(inst, (), ((3, 4), (2, 5), (2, 3)))  # unsorted chain


def test_even_position_squares_divide_odd_chains():
    # chains of odd length 2r+1: the product over even positions, squared,
    # divides the full product
    rng = random.Random(5)
    for inst in (LinkInstance(3, 5), LinkInstance(4, 6)):
        for _ in range(250):
            r = rng.randrange(4)
            chain = chain_normal_form(
                [inst.selectors[rng.randrange(len(inst.selectors))] for _ in range(2 * r + 1)]
            )
            even = Monomial.one()
            for k in range(1, r + 1):
                even = even * inst.complement_monomial(chain[2 * k - 1])
            full = Monomial.one()
            for A in chain:
                full = full * inst.complement_monomial(A)
            assert (even ** 2).divides(full)


# -- odd part reduction ------------------------------------------------------------


def test_odd_part_all_multiplicity_one():
    inst = LinkInstance(2, 4)
    red = odd_part_reduction(inst, {1: 1, 2: 1}, {(2,): 1})
    assert red.square_root == Monomial.one()
    assert red.odd_part == red.product
    assert red.odd_count == 3


def test_odd_part_single_generator_cubed():
    inst = LinkInstance(2, 4)
    gen = Monomial.of(yvar(1, 1)) * inst.antidiagonal(1)
    red = odd_part_reduction(inst, {1: 3}, {})
    assert red.odd_part == gen
    assert red.square_root == gen
    assert red.product == gen ** 3


def test_odd_part_mixed_multiset():
    inst = LinkInstance(2, 4)
    red = odd_part_reduction(inst, {1: 2}, {(2,): 2, (3,): 1})
    assert red.odd_count == 1
    assert red.odd_part * red.square_root ** 2 == red.product


def test_odd_part_rejects_even_total():
    with pytest.raises(ValueError):
        odd_part_reduction(LinkInstance(2, 4), {1: 2}, {})

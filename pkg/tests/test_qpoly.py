import random

import pytest

from flatperm.qpoly import (IdentityViolation, QPoly, complete_h,
                            e_on_qints_closed_form, elementary_e,
                            h_on_qint_window_closed_form, nonadjacent_e_prime,
                            q_binomial, q_factorial, q_int)
from flatperm.qpoly import _mul_kronecker, _mul_schoolbook

Q = QPoly.q()
ONE = QPoly.one()


def test_ring_basics():
    assert (Q - 1) * (Q + 1) == Q**2 - 1
    assert (Q - 1) ** 0 == 1
    assert q_int(2) * q_int(3) == QPoly([1, 2, 2, 1])
    assert QPoly([1, 2]) + QPoly([0, -2, 5]) == QPoly([1, 0, 5])
    assert -QPoly([1, -2]) == QPoly([-1, 2])
    assert QPoly([0, 0]) == QPoly() == 0
    with pytest.raises(ValueError):
        Q ** -1


def test_canonical_form_strips_trailing_zeros():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0]).degree == -1
    assert QPoly([5]).degree == 0


def test_exact_div():
    assert (Q**2 - 1).exact_div(Q - 1) == Q + 1
    assert q_int(4).exact_div(q_int(2)) == QPoly([1, 0, 1])
    with pytest.raises(IdentityViolation):
        q_int(3).exact_div(q_int(2))
    with pytest.raises(IdentityViolation):
        QPoly([1, 1]).exact_div(QPoly([2]))  # quotient leaves the integers
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(QPoly())


def test_q_analogs():
    assert q_int(0) == 0
    assert q_int(1) == 1
    assert q_factorial(3) == q_int(1) * q_int(2) * q_int(3)
    assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert q_binomial(5, -1) == 0 and q_binomial(3, 4) == 0
    for n in range(1, 9):
        assert q_int(n).evaluate(0) == 1
        assert q_int(n).evaluate(1) == n
        # derivative of [n] at q=1 counts the inversions of a 2-subset
        assert q_int(n).derivative().evaluate(1) == n * (n - 1) // 2


def test_q_binomial_symmetry_and_value_at_one():
    import math
    for n in range(0, 11):
        for k in range(0, n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)
            assert q_binomial(n, k).evaluate(1) == math.comb(n, k)


def test_symmetric_function_examples():
    assert elementary_e(2, [Q, ONE, Q**2]) == Q + Q**2 + Q**3
    assert complete_h(2, [ONE, Q]) == QPoly([1, 1, 1])
    a, b, c = QPoly.monomial(1), QPoly.monomial(2), QPoly.monomial(3)
    assert nonadjacent_e_prime(2, [a, b, c]) == a * c


def test_symmetric_function_conventions():
    # s_0 = 1 everywhere; on the empty list s_j is 1 exactly at j = 1
    for fn in (elementary_e, complete_h, nonadjacent_e_prime):
        assert fn(0, [Q]) == 1
        assert fn(-1, [Q]) == 0
        assert fn(0, []) == 1
        assert fn(1, []) == 1
        assert fn(2, []) == 0


def test_e_prime_against_direct_enumeration():
    from itertools import combinations
    xs = [Q, ONE + Q, Q**2, QPoly([3]), Q + 2]
    for j in range(0, 4):
        direct = QPoly()
        for idx in combinations(range(len(xs)), j):
            if all(b - a >= 2 for a, b in zip(idx, idx[1:])):
                term = ONE
                for i in idx:
                    term = term * xs[i]
                direct = direct + term
        assert nonadjacent_e_prime(j, xs) == direct
    assert nonadjacent_e_prime(1, xs) == elementary_e(1, xs)


def test_elementary_generating_identity():
    """sum_j e_j(X) z^j equals the product of (1 + x z), as polynomials in z
    with QPoly coefficients, for every prefix of a size-6 list."""
    xs = [Q, ONE, Q**2, Q + 1, QPoly([2, 1]), Q**3]
    for m in range(len(xs) + 1):
        prefix = xs[:m]
        product = [ONE]  # coefficients of z^j
        for x in prefix:
            nxt = [QPoly()] * (len(product) + 1)
            for j, coeff in enumerate(product):
                nxt[j] = nxt[j] + coeff
                nxt[j + 1] = nxt[j + 1] + x * coeff
            product = nxt
        for j in range(m + 1):
            assert product[j] == elementary_e(j, prefix)


def test_complete_h_against_direct_enumeration():
    from itertools import combinations_with_replacement
    xs = [Q, ONE + Q, QPoly([2])]
    for j in range(0, 5):
        direct = QPoly()
        for idx in combinations_with_replacement(range(len(xs)), j):
            term = ONE
            for i in idx:
                term = term * xs[i]
            direct = direct + term
        assert complete_h(j, xs) == direct


def test_e_on_qints_closed_form():
    assert e_on_qints_closed_form(1, 5) == QPoly([2, 1])          # [1] + [2]
    assert e_on_qints_closed_form(2, 5) == QPoly([1, 1])          # [1] * [2]
    for k in range(3, 11):
        qints = [q_int(i) for i in range(1, k - 2)]
        for j in range(1, k - 2):
            assert e_on_qints_closed_form(j, k) == elementary_e(j, qints)


def test_h_on_qint_window_closed_form():
    assert h_on_qint_window_closed_form(1, 4, 2) == 1
    assert h_on_qint_window_closed_form(2, 4, 1) == QPoly([2, 1])
    for k in range(1, 11):
        for j in range(0, k):
            for n in range(0, 6):
                window = [q_int(n + i) for i in range(0, k - j)]
                assert h_on_qint_window_closed_form(j, k, n) \
                    == complete_h(j - 1, window)


def test_kronecker_matches_schoolbook():
    rng = random.Random(2024)
    for _ in range(150):
        a = tuple(rng.randrange(-10**9, 10**9) for _ in range(rng.randrange(1, 70)))
        b = tuple(rng.randrange(-10**30, 10**30) for _ in range(rng.randrange(1, 70)))
        assert _mul_kronecker(a, b) == _mul_schoolbook(a, b)


def test_evaluate_and_shift():
    p = QPoly([3, -1, 2])
    assert p.evaluate(2) == 3 - 2 + 8
    assert p.shifted(2) == QPoly([0, 0, 3, -1, 2])
    with pytest.raises(ValueError):
        p.shifted(-1)

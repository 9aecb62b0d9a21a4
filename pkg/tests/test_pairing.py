import pytest

from arithmetic import (ExtElement, GtElement, OpLedger, ddh_decide, distortion,
                        enumerate_points, gt_random, load_profile,
                        miller_loop, pair, pairing_ratio, tate_pairing)
from arithmetic.curve import lift
from utils import Drbg
from utils.errors import PairingError


def _tiny_twisted_point(tiny):
    # (6, 5i) has order 3 and lies outside E(F_11): 6^3 + 1 = 8 = (5i)^2
    ext = tiny.ext
    return tiny.point(ExtElement(ext, (6, 0)), ExtElement(ext, (0, 5)))


def test_symmetric_pairing_is_trivial_on_tiny(tiny):
    with OpLedger():
        assert pair(tiny.generator, tiny.generator).is_one()


def test_tate_pairing_is_non_degenerate_on_tiny(tiny):
    Q = _tiny_twisted_point(tiny)

    with OpLedger():
        value = tate_pairing(tiny.generator, Q)

    assert not value.is_one()
    assert value.in_subgroup()


def test_tate_bilinearity_exhaustive_on_tiny(tiny):
    P, Q = tiny.generator, _tiny_twisted_point(tiny)

    with OpLedger():
        base = tate_pairing(P, Q)
        for a in range(1, tiny.r):
            for b in range(1, tiny.r):
                assert tate_pairing(a * P, b * Q) == base ** (a * b)


def test_symmetric_pairing_non_degenerate_on_mini(mini):
    with OpLedger():
        assert not pair(mini.generator, mini.generator).is_one()


def test_bilinearity_exhaustive_on_mini(mini):
    g = mini.generator

    with OpLedger():
        base = pair(g, g)
        for a in range(1, mini.r):
            for b in range(1, mini.r):
                assert pair(a * g, b * g) == base ** (a * b)


def test_bilinearity_random_on_small(small, drbg):
    g = small.generator

    with OpLedger():
        base = pair(g, g)
        for _ in range(5):
            a, b = drbg.nonzero_below(small.r), drbg.nonzero_below(small.r)
            assert pair(a * g, b * g) == base ** (a * b)


def test_pairing_is_symmetric(mini):
    g = mini.generator

    with OpLedger():
        assert pair(2 * g, 3 * g) == pair(3 * g, 2 * g)


def test_infinity_pairs_to_one(mini):
    with OpLedger():
        assert pair(mini.infinity, mini.generator).is_one()


def test_pairing_counts_one_miller_loop_and_one_final_exp(mini, ledger):
    pair(mini.generator, 2 * mini.generator)

    assert ledger.top["Pairing"] == 1
    assert ledger.counters["MillerLoop"] == 1
    assert ledger.counters["FinalExp"] == 1


def test_ratio_equals_quotient_of_pairings(small):
    g = small.generator
    P1, Q1, P2, Q2 = 3 * g, 5 * g, 7 * g, 11 * g

    with OpLedger():
        assert pairing_ratio(P1, Q1, P2, Q2) == pair(P1, Q1) / pair(P2, Q2)


def test_ratio_shares_final_exponentiation_and_saves_products(small):
    g = small.generator
    P1, Q1, P2, Q2 = 3 * g, 5 * g, 7 * g, 11 * g

    with OpLedger() as two:
        pair(P1, Q1) / pair(P2, Q2)
    with OpLedger() as one:
        pairing_ratio(P1, Q1, P2, Q2)

    assert one.top["PairingRatio"] == 1
    assert one.counters["FinalExp"] == 1
    assert two.counters["FinalExp"] == 2
    assert one.counters["MulK"] + one.counters["SqK"] < \
        two.counters["MulK"] + two.counters["SqK"]


def test_miller_trace_records_every_iteration(small):
    trace = []

    with OpLedger():
        miller_loop(small.generator, small.generator, trace=trace)

    assert len(trace) == small.r.bit_length() - 1
    assert [entry.iteration for entry in trace] == list(range(len(trace)))
    assert all(entry.ops for entry in trace)


def test_first_argument_of_wrong_order_raises(mini):
    # (0, 1) has order 3
    with OpLedger():
        with pytest.raises(PairingError):
            pair(mini.point(0, 1), mini.generator)


def test_ddh_decider_exhaustive_on_mini(mini):
    g, r = mini.generator, mini.r

    with OpLedger():
        for a in range(r):
            for b in range(r):
                for c in range(r):
                    decided = ddh_decide(g, a * g, b * g, c * g)
                    assert decided == (c == a * b % r)


def test_gt_random_draws_subgroup_elements(mini, drbg):
    values = [gt_random(mini, drbg) for _ in range(10)]

    assert all(isinstance(v, GtElement) and v.in_subgroup() for v in values)
    assert not any(v.is_one() for v in values)


def test_miller_doubling_iteration_cost(small):
    # Arrange
    trace = []
    k = small.k

    # Act
    with OpLedger():
        miller_loop(small.generator, distortion(3 * small.generator),
                    trace=trace)

    # Assert
    doubling_only = [entry for entry in trace if entry.bit == 0]
    assert doubling_only
    for entry in doubling_only:
        assert entry.ops == {"MulK": 4, "SqK": 2, "Mul": 6 * k + 7, "Sq": 7}
    # the last iteration ends on a vertical line
    for entry in trace[:-1]:
        if entry.bit == 1:
            assert entry.ops["MulK"] == 8


def test_trace_counts_reach_the_enclosing_ledger(small):
    trace = []

    with OpLedger() as traced:
        miller_loop(small.generator, small.generator, trace=trace)
    with OpLedger() as plain:
        miller_loop(small.generator, small.generator)

    assert traced.counters == plain.counters
    assert traced.top == plain.top
    assert traced.top["MillerLoop"] == 1


def test_pairing_does_not_depend_on_the_auxiliary_point(small):
    P, Q = small.generator, distortion(5 * small.generator)

    with OpLedger():
        values = {tate_pairing(P, Q, rng=Drbg(seed)) for seed in range(4)}

    assert len(values) == 1


def test_ratio_of_a_pairing_with_itself_is_one(small):
    g = small.generator

    with OpLedger():
        assert pairing_ratio(3 * g, 7 * g, 3 * g, 7 * g).is_one()


def test_tate_pairing_matches_brute_force_divisor_function_on_tiny(tiny):
    # Arrange
    P, Q, p = tiny.generator, _tiny_twisted_point(tiny), tiny.p
    xp, yp = int(P.x), int(P.y)
    # lines y = a x + c meeting E at P with multiplicity 3: div = 3[P] - 3[O]
    lines = [(a, c) for a in range(p) for c in range(p)
             if (a * xp + c) % p == yp and
             all((x ** 3 + 1 - (a * x + c) ** 2 - (x - xp) ** 3) % p == 0
                 for x in range(p))]
    assert len(lines) == 1
    a, c = lines[0]

    def f(point):
        return point.y - (point.x * a + c)

    # Act / Assert
    checked = 0
    with OpLedger():
        expected = tate_pairing(P, Q)
        for R in enumerate_points(tiny):
            S = lift(R)
            QS = Q + S
            if R.is_infinity or QS.is_infinity:
                continue
            num, den = f(QS), f(S)
            if num.is_zero() or den.is_zero():
                continue
            value = (num / den) ** ((p ** 2 - 1) // tiny.r)
            assert GtElement(value, tiny.r) == expected
            checked += 1
    assert checked > 0


@pytest.mark.slow
def test_bilinearity_on_bench():
    bench = load_profile("bench")
    g = bench.generator
    rng = Drbg(31)

    with OpLedger():
        base = pair(g, g)
        for _ in range(3):
            a, b = rng.nonzero_below(bench.r), rng.nonzero_below(bench.r)
            assert pair(a * g, b * g) == base ** (a * b)
        assert not base.is_one()

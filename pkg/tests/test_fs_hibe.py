from copy import deepcopy
from unittest.mock import patch

import pytest

from arithmetic import OpLedger, gt_random
from processor import (ForwardSecureHibe, fs_decrypt, fs_derive, fs_encrypt,
                       fs_setup, fs_update)
from processor.fs_hibe import period_word
from utils import Drbg
from utils.errors import DelegationError, DepthError, PeriodError

ROOT = ("example.com",)
CHILD = ("example.com", "alice")
PERIODS_LOG = 3


@pytest.fixture
def root_bundle(mini):
    with OpLedger():
        return fs_setup(mini, v=2, periods_log=PERIODS_LOG, seed=11,
                        identity=ROOT)


def _message(params, seed):
    return gt_random(params.curve, Drbg(seed))


def test_every_period_decrypts_with_its_own_bundle(root_bundle):
    params, bundle = root_bundle

    with OpLedger():
        for period in range(1 << PERIODS_LOG):
            message = _message(params, period)
            ciphertext = fs_encrypt(params, period, ROOT, message, seed=period)

            assert bundle.period == period
            assert fs_decrypt(params, bundle, ciphertext) == message
            assert ForwardSecureHibe().key_is_valid(params, bundle)
            if period < (1 << PERIODS_LOG) - 1:
                bundle = fs_update(bundle, params, seed=period)


@pytest.mark.parametrize("period", range(1 << PERIODS_LOG))
def test_bundle_holds_leaf_and_right_siblings(period, root_bundle):
    params, bundle = root_bundle

    with OpLedger():
        for step in range(period):
            bundle = fs_update(bundle, params, seed=step)

    word = period_word(period, PERIODS_LOG)
    assert len(bundle.nodes) == 1 + word.count("0")
    assert word in bundle.nodes


def test_update_empties_the_old_bundle(root_bundle):
    params, bundle = root_bundle

    with OpLedger():
        successor = fs_update(bundle, params, seed=1)

    assert bundle.nodes == {}
    assert successor.period == 1
    with pytest.raises(PeriodError, match="consumed"):
        bundle.leaf


def test_old_bundle_cannot_decrypt_after_update(root_bundle):
    params, bundle = root_bundle

    with OpLedger():
        ciphertext = fs_encrypt(params, 0, ROOT, _message(params, 1), seed=2)
        fs_update(bundle, params, seed=3)

        with pytest.raises(PeriodError):
            fs_decrypt(params, bundle, ciphertext)


def test_last_period_has_no_successor(root_bundle):
    params, bundle = root_bundle

    with OpLedger():
        for step in range((1 << PERIODS_LOG) - 1):
            bundle = fs_update(bundle, params, seed=step)

        with pytest.raises(PeriodError, match="last"):
            fs_update(bundle, params, seed=99)


class TestDerive:
    def test_child_bundle_decrypts_and_updates(self, root_bundle):
        params, root = root_bundle

        with OpLedger():
            root = fs_update(root, params, seed=1)
            child = fs_derive(params, root, 1, CHILD, seed=2)
            message = _message(params, 4)
            ciphertext = fs_encrypt(params, 1, CHILD, message, seed=5)
            assert fs_decrypt(params, child, ciphertext) == message

            child = fs_update(child, params, seed=6)
            message = _message(params, 7)
            ciphertext = fs_encrypt(params, 2, CHILD, message, seed=8)
            assert fs_decrypt(params, child, ciphertext) == message

    def test_period_must_match_parent(self, root_bundle):
        params, root = root_bundle

        with OpLedger(), pytest.raises(PeriodError, match="period 0"):
            fs_derive(params, root, 3, CHILD, seed=1)

    def test_child_must_extend_parent(self, root_bundle):
        params, root = root_bundle

        with OpLedger(), pytest.raises(DelegationError, match="cannot derive"):
            fs_derive(params, root, 0, ("other.org", "alice"), seed=1)

    def test_extract_only_from_master_secret(self, root_bundle):
        params, root = root_bundle

        with OpLedger(), pytest.raises(DelegationError, match="derive"):
            ForwardSecureHibe().extract(params, root, CHILD, seed=1)


class TestPeriodChecks:
    def test_period_outside_tree(self, root_bundle):
        params, _ = root_bundle

        with OpLedger(), pytest.raises(PeriodError, match="outside"):
            fs_encrypt(params, 1 << PERIODS_LOG, ROOT, _message(params, 1),
                       seed=1)

    def test_zero_tree_depth(self, mini):
        with OpLedger(), pytest.raises(PeriodError, match=">= 1"):
            fs_setup(mini, v=1, periods_log=0, seed=1)

    def test_header_records_period_and_depth(self, root_bundle):
        params, _ = root_bundle

        with OpLedger():
            ciphertext = fs_encrypt(params, 5, CHILD, _message(params, 1),
                                    seed=2)

        assert ciphertext.header == {"depth": 2, "period": 5}


def test_forward_security_matrix_on_small(small):
    # Arrange
    periods = 1 << PERIODS_LOG
    with OpLedger():
        params, bundle = fs_setup(small, v=2, periods_log=PERIODS_LOG,
                                  seed=21, identity=ROOT)
        messages = [_message(params, 100 + j) for j in range(periods)]
        ciphertexts = [fs_encrypt(params, j, ROOT, messages[j], seed=j)
                       for j in range(periods)]

        for i in range(periods):
            # Act
            outcomes = [fs_decrypt(params, bundle, ciphertexts[j]) ==
                        messages[j] for j in range(periods)]

            # Assert
            assert outcomes == [j == i for j in range(periods)]
            for past in range(i):
                word = period_word(past, PERIODS_LOG)
                assert not any(word.startswith(w) for w in bundle.nodes)
            if i < periods - 1:
                bundle = fs_update(bundle, params, seed=i)


class TestBundleTails:
    def test_tail_covers_only_deeper_levels(self, root_bundle):
        params, root = root_bundle

        assert len(root.tail) == params.options["depth"] - root.level == 1
        assert len(root.time_tail) == root.level == 1

    def test_derive_moves_one_point_from_tail_to_time_tail(self, root_bundle):
        params, root = root_bundle

        with OpLedger():
            child = fs_derive(params, root, 0, CHILD, seed=3)

        assert child.tail == []
        assert child.time_tail == [*root.time_tail, root.tail[0]]

    def test_bundle_at_full_depth_cannot_derive(self, root_bundle):
        params, root = root_bundle

        with OpLedger():
            child = fs_derive(params, root, 0, CHILD, seed=3)

            with pytest.raises(DepthError, match="exceeds"):
                fs_derive(params, child, 0, (*CHILD, "laptop"), seed=4)


class TestUnseededExtension:
    def test_update_without_seed_is_reproducible(self, root_bundle):
        params, bundle = root_bundle

        with OpLedger(), patch.object(Drbg, "from_os",
                                      side_effect=AssertionError):
            first = fs_update(deepcopy(bundle), params)
            second = fs_update(deepcopy(bundle), params)
            message = _message(params, 3)
            ciphertext = fs_encrypt(params, 1, ROOT, message, seed=4)

            assert first == second
            assert fs_decrypt(params, first, ciphertext) == message

    def test_derive_without_seed_is_reproducible(self, root_bundle):
        params, root = root_bundle

        with OpLedger(), patch.object(Drbg, "from_os",
                                      side_effect=AssertionError):
            first = fs_derive(params, root, 0, CHILD)
            second = fs_derive(params, root, 0, CHILD)
            message = _message(params, 5)
            ciphertext = fs_encrypt(params, 0, CHILD, message, seed=6)

            assert first == second
            assert fs_decrypt(params, first, ciphertext) == message

from arithmetic import OpLedger, gt_random
from processor import our_decrypt, our_encrypt, our_extract, our_setup
from utils import Drbg


def test_functional_roundtrip(small):
    with OpLedger():
        params, msk = our_setup(small, seed=10)
        key = our_extract(params, msk, "carol@example.com", seed=2)
        message = gt_random(small, Drbg(1))
        ciphertext = our_encrypt(params, "carol@example.com", message, seed=3)

        assert our_decrypt(params, key, ciphertext) == message


def test_decrypt_uses_one_pairing_and_no_ratio(small):
    with OpLedger():
        params, msk = our_setup(small, seed=10)
        key = our_extract(params, msk, b"dave", seed=2)
        ciphertext = our_encrypt(params, b"dave", gt_random(small, Drbg(5)),
                                 seed=3)

    with OpLedger() as ledger:
        our_decrypt(params, key, ciphertext)

    assert ledger.top["Pairing"] == 1
    assert ledger.top["PairingRatio"] == 0


def test_ciphertext_is_one_point_and_one_gt_element(small):
    with OpLedger():
        params, _ = our_setup(small, seed=4)
        ciphertext = our_encrypt(params, b"erin", gt_random(small, Drbg(2)),
                                 seed=1)

    assert ciphertext.names == ("u", "c")
    assert ciphertext["u"].curve == small


def test_two_keys_of_one_identity_differ_but_both_decrypt(small):
    with OpLedger():
        params, msk = our_setup(small, seed=8)
        first = our_extract(params, msk, b"frank", seed=1)
        second = our_extract(params, msk, b"frank", seed=2)
        message = gt_random(small, Drbg(3))
        ciphertext = our_encrypt(params, b"frank", message, seed=4)

        assert first["r_id"] != second["r_id"]
        assert our_decrypt(params, first, ciphertext) == message
        assert our_decrypt(params, second, ciphertext) == message

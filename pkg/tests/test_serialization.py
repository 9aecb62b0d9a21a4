import pytest

from arithmetic import OpLedger
from processor import (ForwardSecureHibe, HibeKey, get_scheme, kem_encrypt)
from utils import Drbg
from utils.errors import ChecksumError, FormatError
from utils.serialization import (armor, dearmor, decode_record, dumps,
                                 encode_record, loads)


@pytest.fixture(scope="module")
def waters_material(mini):
    impl = get_scheme("waters")
    with OpLedger():
        params, msk = impl.setup(mini, 4)
        key = impl.extract(params, msk, b"alice", 1)
        ciphertext = impl.encrypt(params, b"alice",
                                  impl.random_message(params, Drbg(1)), 2)
    return params, msk, key, ciphertext


def test_key_material_survives_a_record(waters_material, mini):
    params, msk, key, ciphertext = waters_material

    assert loads(dumps(params)) == params
    assert loads(dumps(msk, mini)) == msk
    assert loads(dumps(key, mini)) == key
    assert loads(dumps(ciphertext, mini)) == ciphertext


def test_restored_key_still_decrypts(waters_material, mini):
    params, _, key, ciphertext = waters_material
    impl = get_scheme("waters")

    with OpLedger():
        restored = loads(dumps(key, mini))
        expected = impl.decrypt(params, key, ciphertext)

        assert impl.decrypt(loads(dumps(params)), restored, ciphertext) == \
            expected


def test_hierarchical_key_keeps_its_type(mini):
    impl = get_scheme("our-hibe")
    with OpLedger():
        params, msk = impl.setup(mini, 2, depth=2)
        key = impl.extract(params, msk, ("a", "b"), 1)

    restored = loads(dumps(key, mini))

    assert isinstance(restored, HibeKey)
    assert restored.identity == key.identity
    assert restored.tail == key.tail


def test_fs_bundle_and_kem_records(mini):
    impl = ForwardSecureHibe()
    with OpLedger():
        params, msk = impl.setup(mini, 3, depth=1, periods_log=2)
        bundle = impl.extract(params, msk, ("root",), 1)
        kem = kem_encrypt("fs-hibe", params, ("root",), b"payload", seed=5,
                          period=0)

    assert loads(dumps(bundle, mini)) == bundle
    assert loads(dumps(kem, mini)) == kem


def test_objects_without_curve_need_one(waters_material):
    _, msk, _, _ = waters_material

    with pytest.raises(FormatError, match="needs the curve"):
        dumps(msk)


def test_unsupported_values_are_refused(mini):
    with pytest.raises(FormatError, match="booleans"):
        encode_record("master", "bf", mini, {"flag": True})
    with pytest.raises(FormatError, match="cannot serialize"):
        dumps(object(), mini)


class TestCorruption:
    def test_truncated_record(self, waters_material):
        data = dumps(waters_material[0])

        with pytest.raises(ChecksumError):
            loads(data[:-7])

    def test_flipped_byte(self, waters_material):
        data = bytearray(dumps(waters_material[0]))
        data[20] ^= 0xFF

        with pytest.raises(ChecksumError, match="checksum"):
            decode_record(bytes(data))

    def test_foreign_bytes(self):
        with pytest.raises(FormatError, match="not an IBTK record"):
            loads(b"PK\x03\x04 certainly a zip file")


class TestArmor:
    def test_round_trip_and_line_width(self, waters_material):
        data = dumps(waters_material[0])

        text = armor(data, label="params")

        lines = text.splitlines()
        assert lines[0] == "-----BEGIN IBE TOOLKIT PARAMS-----"
        assert lines[-1] == "-----END IBE TOOLKIT PARAMS-----"
        assert all(len(line) <= 64 for line in lines[1:-1])
        assert dearmor(text) == data

    def test_mismatched_labels(self):
        text = "-----BEGIN IBE TOOLKIT KEY-----\n00\n" \
               "-----END IBE TOOLKIT MASTER-----\n"

        with pytest.raises(FormatError, match="labels differ"):
            dearmor(text)

    def test_missing_armor_lines(self):
        with pytest.raises(FormatError, match="missing armor"):
            dearmor("00ff")

    def test_bad_hex(self):
        text = "-----BEGIN IBE TOOLKIT KEY-----\nzz\n" \
               "-----END IBE TOOLKIT KEY-----\n"

        with pytest.raises(FormatError, match="bad armor body"):
            dearmor(text)

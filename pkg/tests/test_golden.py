import pytest

from arithmetic import OpLedger
from processor import ForwardSecureHibe, get_scheme
from user_interface import REPORT_TABLES, build_table, frame_to_csv
from utils.serialization import dumps


@pytest.mark.parametrize("name", REPORT_TABLES)
def test_table_csv_is_pinned(name, golden):
    result = build_table(name)

    golden(f"{name}.csv", frame_to_csv(result.frame).encode("utf-8"))


@pytest.mark.parametrize("scheme", ["bf", "waters", "our-ibe"])
def test_params_record_is_pinned(scheme, mini, golden):
    with OpLedger():
        params, _ = get_scheme(scheme).setup(mini, 2024)

    golden(f"{scheme}-params-mini.ibk", dumps(params))


def test_hibe_key_record_is_pinned(mini, golden):
    impl = get_scheme("our-hibe")
    with OpLedger():
        params, msk = impl.setup(mini, 2024, depth=2)
        key = impl.extract(params, msk, ("example.com", "alice"), 1)

    golden("our-hibe-key-mini.ibk", dumps(key, mini))


def test_fs_bundle_record_is_pinned(mini, golden):
    impl = ForwardSecureHibe()
    with OpLedger():
        params, msk = impl.setup(mini, 2024, depth=1, periods_log=2)
        bundle = impl.update(params, impl.extract(params, msk, ("root",), 1),
                             seed=2)

    golden("fs-hibe-bundle-mini.ibk", dumps(bundle, mini))

from unittest.mock import patch

import pytest

from arithmetic import (OpLedger, distortion, ec_add, ec_double, ec_scalar_mul,
                        enumerate_points, load_profile, naf, random_point,
                        read_param_file, write_param_file)
from arithmetic.curve import (ProjectivePoint, double_and_add, in_subgroup,
                              projective_add, projective_double)
from arithmetic.profiles import RECIPES, generate_profile
from utils.config import DEFAULT_DATA_DIR, ENV_PIN_PROFILES, load_settings
from utils.errors import CurveMismatchError, NotOnCurveError, ProfileError


def test_tiny_profile_values(tiny):
    assert (tiny.p, tiny.r, tiny.cof, tiny.k) == (11, 3, 4, 2)
    assert len(enumerate_points(tiny)) == 12


def test_mini_group_order_is_cof_times_r(mini):
    assert len(enumerate_points(mini)) == mini.cof * mini.r == 60


def test_point_off_curve_raises(tiny):
    with pytest.raises(NotOnCurveError):
        tiny.point(1, 1)


def test_group_law_on_tiny_by_enumeration(tiny):
    points = enumerate_points(tiny)

    with OpLedger():
        for P in points:
            assert (P + (-P)).is_infinity
            assert P + tiny.infinity == P
            for Q in points:
                S = P + Q
                assert S.on_curve()
                assert S == Q + P


def test_scalar_mul_matches_double_and_add(mini, drbg):
    with OpLedger():
        for _ in range(25):
            P = random_point(mini, drbg)
            d = drbg.randbelow(200)
            assert ec_scalar_mul(d, P) == double_and_add(d, P)
            assert ec_scalar_mul(-d, P) == -double_and_add(d, P)


def test_generator_has_order_r(tiny, mini):
    with OpLedger():
        for curve in (tiny, mini):
            assert in_subgroup(curve.generator)
            assert not curve.generator.is_infinity


@pytest.mark.parametrize("d", [0, 1, 7, 29, 255, 1 << 20, 123456789])
def test_naf_is_non_adjacent_and_exact(d):
    digits = naf(d)

    assert sum(digit << i for i, digit in enumerate(digits)) == d
    assert all(not (a and b) for a, b in zip(digits, digits[1:]))


def test_scalar_mul_counts_naf_shape(small, ledger):
    # Arrange
    d = 0b1011011
    digits = naf(d)

    # Act
    ec_scalar_mul(d, small.generator)

    # Assert
    assert ledger.top["ScalarMul"] == 1
    assert ledger.top["ECDBL"] == 0
    assert ledger.counters["ECDBL"] == len(digits) - 1
    assert ledger.counters["ECADD"] == sum(1 for x in digits if x) - 1


def test_affine_add_and_double_count_one_each(mini, ledger):
    P = mini.generator

    ec_double(P)
    ec_add(P, ec_double(P))

    assert ledger.top["ECDBL"] == 2
    assert ledger.top["ECADD"] == 1


def test_points_on_different_curves_do_not_mix(tiny, mini):
    with pytest.raises(CurveMismatchError):
        ec_add(tiny.generator, mini.generator)


def test_distortion_leaves_base_field(mini):
    with OpLedger():
        image = distortion(mini.generator)

    assert image.over_extension
    assert image.on_curve()


def test_param_file_round_trip_is_exact(tmp_path, mini):
    path = tmp_path / "copy.param"

    write_param_file(mini, path)
    loaded = read_param_file(path)

    assert loaded == mini


def test_tampered_param_file_is_rejected(tmp_path, tiny):
    path = tmp_path / "bad.param"
    write_param_file(tiny, path)
    path.write_text(path.read_text().replace("r=3", "r=5"))

    with pytest.raises(ProfileError):
        read_param_file(path)


def test_unknown_profile_name_raises():
    with pytest.raises(ProfileError, match="unknown profile"):
        load_profile("no-such-profile")


class TestProfilePinning:
    @pytest.mark.parametrize("name", [
        "tiny", "mini", "small", pytest.param("bench", marks=pytest.mark.slow)])
    def test_checked_in_profile_matches_its_recipe(self, name):
        # Arrange
        path = DEFAULT_DATA_DIR / "curves" / f"{name}.param"

        # Act
        shipped = read_param_file(path)

        # Assert
        assert shipped == generate_profile(RECIPES[name])

    def test_mini_generator_is_twelve_times_the_first_point(self):
        shipped = read_param_file(DEFAULT_DATA_DIR / "curves" / "mini.param")

        assert (shipped.gx, shipped.gy) == (18, 13)

    def test_unpinned_load_writes_nothing(self, tmp_path):
        curve = load_profile("mini", data_dir=tmp_path, pin=False)

        assert curve.p == 59
        assert not (tmp_path / "curves" / "mini.param").exists()

    def test_pinned_load_writes_the_param_file(self, tmp_path):
        (tmp_path / "curves").mkdir()

        curve = load_profile("mini", data_dir=tmp_path, pin=True)

        assert read_param_file(tmp_path / "curves" / "mini.param") == curve

    def test_failed_pin_raises(self, tmp_path):
        with patch("arithmetic.profiles.write_param_file",
                   side_effect=OSError("read-only")):
            with pytest.raises(ProfileError, match="could not pin"):
                load_profile("tiny", data_dir=tmp_path, pin=True)

    def test_pinning_switch_reads_the_environment(self, monkeypatch):
        monkeypatch.setenv(ENV_PIN_PROFILES, "1")

        assert load_settings().pin_profiles
        assert not load_settings(pin_profiles=False).pin_profiles


def _projective(P, z):
    return ProjectivePoint(P.curve, P.x * z, P.y * z, P.x * 0 + z)


def test_projective_add_costs_twelve_mul_two_sq(small):
    # Arrange
    with OpLedger():
        P = small.generator
        Q = ec_scalar_mul(5, P)
        expected = ec_add(P, Q)
    left, right = _projective(P, 3), _projective(Q, 7)

    # Act
    with OpLedger() as ledger:
        total = projective_add(left, right)

    # Assert
    assert ledger.top["ECADD"] == 1
    assert ledger.counters["Mul"] == 12
    assert ledger.counters["Sq"] == 2
    assert ledger.counters["Inv"] == 0
    with OpLedger():
        assert total.to_affine() == expected


def test_projective_double_costs_seven_mul_five_sq(small):
    with OpLedger():
        P = ec_scalar_mul(11, small.generator)
        expected = ec_double(P)
    start = _projective(P, 5)

    with OpLedger() as ledger:
        doubled = projective_double(start)

    assert ledger.top["ECDBL"] == 1
    assert ledger.counters["Mul"] == 7
    assert ledger.counters["Sq"] == 5
    with OpLedger():
        assert doubled.to_affine() == expected


def test_scalar_mul_inclusive_counts_follow_the_formula_costs(small, ledger):
    # Arrange
    d = (1 << 63) + 0x5DEECE66D

    # Act
    ec_scalar_mul(d, small.generator)

    # Assert
    doubles, adds = ledger.counters["ECDBL"], ledger.counters["ECADD"]
    assert ledger.counters["Mul"] == 7 * doubles + 12 * adds + 2
    assert ledger.counters["Sq"] == 5 * doubles + 2 * adds
    assert ledger.counters["Inv"] == 1


def test_naf_addition_density_is_one_third(drbg):
    # Arrange
    bits = 160
    scalars = [drbg.randbits(bits) | (1 << (bits - 1)) for _ in range(1000)]

    # Act
    adds = [sum(1 for digit in naf(d) if digit) - 1 for d in scalars]

    # Assert
    mean = sum(adds) / len(adds)
    assert mean == pytest.approx((bits - 1) / 3, rel=0.05)

#include <doctest.h>

#include <cmath>
#include <random>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"
#include "ccqed/mode_field.hpp"

using namespace ccqed;

TEST_CASE("single-photon amplitude value and scaling") {
  // sqrt(hbar / (2 eps0 omega V)) for omega = 6.283e11 rad/s, V = 3.4e-9 m^3,
  // re-keyed by hand: 5.27991e-14 V s / m
  const double a0 = mode_amplitude(6.283e11, 3.4e-9);
  CHECK(a0 == doctest::Approx(5.27991e-14).epsilon(1e-5));

  CHECK(mode_amplitude(6.283e11, 4.0 * 3.4e-9) ==
        doctest::Approx(0.5 * a0).epsilon(1e-12));
  CHECK(mode_amplitude(4.0 * 6.283e11, 3.4e-9) ==
        doctest::Approx(0.5 * a0).epsilon(1e-12));

  CHECK_THROWS_AS((void)mode_amplitude(0.0, 1.0), DomainError);
  CHECK_THROWS_AS((void)mode_amplitude(1.0, -1.0), DomainError);
}

TEST_CASE("mode profile at the antinode and at a quarter wavelength") {
  for (const Handedness h : {Handedness::right, Handedness::left}) {
    const auto v0 = mode_profile(0.0, 12.3, h);
    CHECK(v0[0] == 1.0);
    CHECK(v0[1] == 0.0);
    CHECK(v0[2] == 0.0);
  }
  const double k = 2.0;
  const double quarter = M_PI / 2.0 / k;
  const auto vr = mode_profile(quarter, k, Handedness::right);
  CHECK(std::abs(vr[0]) < 1e-12);
  CHECK(vr[1] == doctest::Approx(-1.0).epsilon(1e-15));
  const auto vl = mode_profile(quarter, k, Handedness::left);
  CHECK(vl[1] == doctest::Approx(+1.0).epsilon(1e-15));
}

TEST_CASE("mode profile is a unit vector everywhere, with no nodes") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uz(-10.0, 10.0);
  const double k = 5.0;
  for (int i = 0; i < 1000; ++i) {
    const auto v = mode_profile(uz(rng), k, Handedness::right);
    CHECK(std::abs(std::hypot(v[0], v[1]) - 1.0) <= 1e-14);
  }
}

TEST_CASE("mode profile is periodic and handedness-reflected") {
  const double k = 3.0;
  const double period = 2.0 * M_PI / k;
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uz(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double z = uz(rng);
    const auto a = mode_profile(z, k, Handedness::right);
    const auto b = mode_profile(z + period, k, Handedness::right);
    CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-12));
    CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-12));

    const auto l = mode_profile(z, k, Handedness::left);
    CHECK(a[0] == l[0]);
    CHECK(a[1] == -l[1]);
  }
}

TEST_CASE("cavity mode derived quantities") {
  const CavityMode mode(2.0 * M_PI * 1.0e11, Handedness::right, 3.4e-9);
  CHECK(mode.wavenumber() ==
        doctest::Approx(2.0 * M_PI * 1.0e11 / 299792458.0).epsilon(1e-15));
  CHECK(mode.wavelength() ==
        doctest::Approx(299792458.0 / 1.0e11).epsilon(1e-12));
  CHECK(mode.amplitude() ==
        doctest::Approx(mode_amplitude(mode.omega(), 3.4e-9)).epsilon(1e-15));
  CHECK_THROWS_AS(CavityMode(1e11, Handedness::left, 0.0), DomainError);
  CHECK_THROWS_AS(CavityMode(-1e11, Handedness::left, 1.0), DomainError);
}

TEST_CASE("field snapshots oscillate in quadrature") {
  const CavityMode mode(2.0 * M_PI * 1.0e11, Handedness::right, 3.4e-9);
  const double period = 2.0 * M_PI / mode.omega();
  std::vector<double> grid;
  for (int i = 0; i < 64; ++i) grid.push_back(i * mode.wavelength() / 64.0);

  SUBCASE("E vanishes exactly at t = 0, B is at its maximum") {
    const auto snap = field_snapshot(mode, grid, 0.0, FieldNormalisation::unit);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(snap.e_field[i][0] == 0.0);
      CHECK(snap.e_field[i][1] == 0.0);
      CHECK(std::hypot(snap.b_field[i][0], snap.b_field[i][1]) ==
            doctest::Approx(1.0 / 299792458.0).epsilon(1e-12));
    }
  }

  SUBCASE("B vanishes at a quarter period, E is at its maximum") {
    const auto snap =
        field_snapshot(mode, grid, 0.25 * period, FieldNormalisation::unit);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(std::hypot(snap.b_field[i][0], snap.b_field[i][1]) <=
            1e-14 / 299792458.0);
      CHECK(std::hypot(snap.e_field[i][0], snap.e_field[i][1]) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("E and B stay parallel to the shared profile") {
    const auto snap =
        field_snapshot(mode, grid, 0.4 * period, FieldNormalisation::unit);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double cross = snap.e_field[i][0] * snap.b_field[i][1] -
                           snap.e_field[i][1] * snap.b_field[i][0];
      CHECK(std::abs(cross) <= 1e-15);
      CHECK(snap.e_field[i][2] == 0.0);
      CHECK(snap.b_field[i][2] == 0.0);
    }
  }
}

TEST_CASE("single-photon normalisation carries the physical amplitudes") {
  const CavityMode mode(2.0 * M_PI * 1.0e11, Handedness::left, 3.4e-9);
  const double period = 2.0 * M_PI / mode.omega();
  const std::vector<double> grid = {0.0, 1e-4, 5e-4};

  const auto at_quarter =
      field_snapshot(mode, grid, 0.25 * period, FieldNormalisation::single_photon);
  const auto at_zero =
      field_snapshot(mode, grid, 0.0, FieldNormalisation::single_photon);
  const double e_amp = mode.omega() * mode.amplitude();
  const double b_amp = mode.wavenumber() * mode.amplitude();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::hypot(at_quarter.e_field[i][0], at_quarter.e_field[i][1]) ==
          doctest::Approx(e_amp).epsilon(1e-12));
    CHECK(std::hypot(at_zero.b_field[i][0], at_zero.b_field[i][1]) ==
          doctest::Approx(b_amp).epsilon(1e-12));
  }
  // E and c B amplitudes coincide
  CHECK(e_amp == doctest::Approx(b_amp * 299792458.0).epsilon(1e-14));
}

TEST_CASE("field snapshot rejects an empty grid") {
  const CavityMode mode(1e12, Handedness::right, 1e-9);
  CHECK_THROWS_AS(
      (void)field_snapshot(mode, {}, 0.0, FieldNormalisation::unit),
      UsageError);
}

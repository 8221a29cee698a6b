#include <doctest.h>

#include <random>

#include "qfc/errors.hpp"
#include "qfc/quaternion.hpp"
#include "qfc/random.hpp"
#include "test_helpers.hpp"

using qfc::Frame;
using qfc::ImaginaryUnit;
using qfc::Quaternion;
using qfc::SphereClass;
using testing_oracles::oracle_mul;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();
}  // namespace

TEST_CASE("product: defining relations") {
  CHECK((qi * qj - qk).norm() == 0.0);
  CHECK((qj * qk - qi).norm() == 0.0);
  CHECK((qk * qi - qj).norm() == 0.0);
  CHECK((qi * qi + Quaternion(1.0)).norm() == 0.0);
  CHECK(((Quaternion(1) + qi) * (Quaternion(1) - qi) - Quaternion(2.0)).norm() ==
        0.0);
}

TEST_CASE("product: expansion against the table oracle") {
  const Quaternion p = Quaternion(1) + qi + qj;
  const Quaternion q = Quaternion(2) - qk;
  const Quaternion via_oracle = oracle_mul(p, q);
  // Frozen from the oracle: (1+i+j)(2-k) = 2 + i + 3j - k. The reversed
  // product differs, which is worth pinning down as well.
  CHECK((via_oracle - Quaternion{2, 1, 3, -1}).norm() == 0.0);
  CHECK((p * q - via_oracle).norm() == 0.0);
  CHECK((q * p - Quaternion{2, 3, 1, -1}).norm() == 0.0);
  CHECK((q * p - oracle_mul(q, p)).norm() == 0.0);
}

TEST_CASE("product properties over random pairs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const Quaternion p = qfc::random_quaternion(rng);
    const Quaternion q = qfc::random_quaternion(rng);
    CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) < 1e-12);
    CHECK((p * q - oracle_mul(p, q)).norm() < 1e-14);
    CHECK(((p * q).conj() - q.conj() * p.conj()).norm() < 1e-14);
    CHECK((p.conj().conj() - p).norm() == 0.0);
  }
}

TEST_CASE("inverse") {
  CHECK((qfc::inverse(qi) + qi).norm() == 0.0);
  CHECK((qfc::inverse(Quaternion(2.0)) - Quaternion(0.5)).norm() == 0.0);
  const Quaternion q{1, 1, 1, 1};
  CHECK((qfc::inverse(q) - Quaternion{0.25, -0.25, -0.25, -0.25}).norm() <
        1e-15);
  CHECK((q * qfc::inverse(q) - Quaternion(1.0)).norm() < 1e-15);
  CHECK((qfc::inverse(q) * q - Quaternion(1.0)).norm() < 1e-15);
  CHECK_THROWS_AS((void)qfc::inverse(Quaternion()), std::domain_error);
}

TEST_CASE("slice membership is commutation with the axis") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion m = qfc::random_unit_imaginary(rng);
    const Quaternion in_slice = Quaternion(u(rng)) + m * u(rng);
    CHECK((in_slice * m - m * in_slice).norm() < 1e-14);
  }
  // Two anticommuting axes only share the reals: a nonreal slice element
  // of one axis fails to commute with the other.
  const Quaternion q = Quaternion(0.5) + qi * 2.0;
  CHECK((q * qj - qj * q).norm() == doctest::Approx(4.0));
}

TEST_CASE("frame decomposition") {
  const Frame std_fr = Frame::standard();
  SUBCASE("standard basis coordinates") {
    const auto c = qfc::frame_decompose(Quaternion{3, 2, -1, 5}, std_fr);
    CHECK(c[0] == 3.0);
    CHECK(c[1] == 2.0);
    CHECK(c[2] == -1.0);
    CHECK(c[3] == 5.0);
  }
  SUBCASE("axis decomposes as (0,1,0,0) in any frame") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const Frame fr = qfc::random_frame(rng);
      const auto c = qfc::frame_decompose(fr.m(), fr);
      CHECK(std::abs(c[0]) < 1e-14);
      CHECK(std::abs(c[1] - 1.0) < 1e-14);
      CHECK(std::abs(c[2]) < 1e-14);
      CHECK(std::abs(c[3]) < 1e-14);
    }
  }
  SUBCASE("coordinates in the (j, k) frame match the linear-system oracle") {
    const Frame fr(ImaginaryUnit::j(), ImaginaryUnit::k());
    CHECK((fr.mn() - qi).norm() == 0.0);
    const Quaternion q{1, 1, 1, 1};
    const auto direct = qfc::frame_decompose(q, fr);
    const auto solved = testing_oracles::oracle_frame_solve(q, fr);
    for (int t = 0; t < 4; ++t) {
      CHECK(direct[t] == doctest::Approx(solved[t]).epsilon(1e-12));
      CHECK(direct[t] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("recomposition round trip in random frames") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      const Frame fr = qfc::random_frame(rng);
      const Quaternion q = qfc::random_quaternion(rng, 2.0);
      const Quaternion back = qfc::frame_recompose(qfc::frame_decompose(q, fr), fr);
      CHECK((q - back).norm() < 1e-12);
      const auto solved = testing_oracles::oracle_frame_solve(q, fr);
      const auto direct = qfc::frame_decompose(q, fr);
      for (int t = 0; t < 4; ++t) CHECK(std::abs(direct[t] - solved[t]) < 1e-12);
    }
  }
}

TEST_CASE("sphere classes") {
  CHECK(qfc::sphere_class_of(Quaternion(1) + qi) == SphereClass{1.0, 1.0});
  CHECK(qfc::sphere_class_of(Quaternion(2.0)) == SphereClass{2.0, 0.0});
  // The whole imaginary unit sphere is one similarity class.
  CHECK(qfc::sphere_class_of(qi).contains(qj, 1e-14));
  CHECK(qfc::sphere_class_of(qi).contains(qk, 1e-14));
  // Near-real snap.
  CHECK(qfc::sphere_class_of(Quaternion{1.0, 1e-13, 0, 0}).rad == 0.0);
}

TEST_CASE("circularization") {
  using qfc::circularize;
  CHECK(circularize({Quaternion(2.0)}) ==
        std::vector<SphereClass>{SphereClass{2.0, 0.0}});
  CHECK(circularize({Quaternion(1) + qi}) ==
        std::vector<SphereClass>{SphereClass{1.0, 1.0}});
  std::mt19937_64 rng(3);
  const Quaternion m = qfc::random_unit_imaginary(rng);
  const auto sphere = circularize({m});
  REQUIRE(sphere.size() == 1);
  CHECK(sphere[0].distance(SphereClass{0.0, 1.0}) < 1e-14);
  // Conjugate slice points sweep the same class once.
  const Quaternion z = Quaternion(0.5) + qi * 0.25;
  CHECK(circularize({z, z.conj()}).size() == 1);
}

TEST_CASE("sphere class sampling") {
  SUBCASE("degenerate class repeats the real point") {
    const auto samples = qfc::sample_sphere_class(SphereClass{2.0, 0.0}, 5);
    REQUIRE(samples.size() == 5);
    for (const Quaternion& s : samples) CHECK((s - Quaternion(2.0)).norm() == 0.0);
  }
  SUBCASE("the first six samples of the unit sphere walk the signed axes") {
    const auto samples = qfc::sample_sphere_class(SphereClass{0.0, 1.0}, 6);
    REQUIRE(samples.size() == 6);
    for (const Quaternion& expected : {qi, -qi, qj, -qj, qk, -qk}) {
      bool hit = false;
      for (const Quaternion& s : samples) hit = hit || (s - expected).norm() < 1e-15;
      CHECK(hit);
    }
  }
  SUBCASE("samples stay in class") {
    const SphereClass cls{1.0, 1.0};
    for (const Quaternion& s : qfc::sample_sphere_class(cls, 40)) {
      CHECK(cls.contains(s, 1e-12));
      CHECK(std::abs((s - Quaternion(1.0)).norm() - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS((void)qfc::sample_sphere_class(SphereClass{0, 1}, 0),
                  qfc::PreconditionError);
}

TEST_CASE("axis and frame validation") {
  CHECK_THROWS_AS(ImaginaryUnit(Quaternion(1.0)), qfc::PreconditionError);
  CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0.5, 1, 0, 0}), qfc::PreconditionError);
  CHECK((ImaginaryUnit(qi * 3.0).value() - qi).norm() == 0.0);
  // i and (i+j)/sqrt2 do not anticommute.
  CHECK_THROWS_AS(Frame(ImaginaryUnit::i(), ImaginaryUnit(qi + qj)),
                  qfc::PreconditionError);
  const Frame fr = Frame::standard();
  CHECK((fr.mn() - qk).norm() == 0.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "lacuna/alpha.hpp"
#include "lacuna/verify.hpp"

using namespace lacuna;

namespace {

CyclotomicNumber sqrt2_in(unsigned conductor) {
  return lift_conductor(root_of_unity(8, 1) + root_of_unity(8, 7), conductor);
}

}  // namespace

TEST_CASE("prop_main hand-checked cases") {
  CyclotomicNumber z = sqrt2_in(8);
  CHECK(verify_prop_main(0, 0, 2, z).pass);
  CHECK(verify_prop_main(1, 0, 2, z).pass);

  CyclotomicNumber one_plus_i = CyclotomicNumber::one(4) + root_of_unity(4, 1);
  CHECK(verify_prop_main(1, 0, 2, one_plus_i).pass);
}

TEST_CASE("prop_main original exponent fails at the witness case") {
  CyclotomicNumber z = sqrt2_in(8);
  VerificationReport original = verify_prop_main(0, 1, 2, z, /*original_exponent=*/true);
  CHECK(!original.pass);
  CHECK(original.erratum);
  VerificationReport corrected = verify_prop_main(0, 1, 2, z);
  CHECK(corrected.pass);
}

TEST_CASE("prop_main randomized battery") {
  auto reports = verify_prop_main_random(50, 20240);
  REQUIRE(reports.size() == 50);
  for (const VerificationReport& r : reports) CHECK(r.pass);
}

TEST_CASE("two-interval variants") {
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(verify_two_interval(n, TwoIntervalVariant::sqrt2).pass);
    CHECK(verify_two_interval(n, TwoIntervalVariant::inv_sqrt2).pass);
    CHECK(verify_two_interval(n, TwoIntervalVariant::three_over_sqrt2).pass);
  }
}

TEST_CASE("inverse variant sign is fixed by the oracle") {
  for (std::size_t n : {0ul, 1ul}) {
    VerificationReport original =
        verify_two_interval(n, TwoIntervalVariant::inv_sqrt2, /*original_sign=*/true);
    CHECK(!original.pass);
    CHECK(original.erratum);
  }
}

TEST_CASE("four-interval identity") {
  for (std::size_t n = 0; n <= 10; ++n) CHECK(verify_four_interval(n).pass);
}

TEST_CASE("12-gap identity") {
  auto reports = verify_ramanujan12(8);
  REQUIRE(reports.size() == 9);
  for (const VerificationReport& r : reports) CHECK(r.pass);
}

TEST_CASE("generalized-order two-interval identity") {
  for (long a : {-2L, -1L, 0L, 1L, 2L, 3L})
    for (std::size_t n = 0; n <= 4; ++n) CHECK(verify_norlund_two_interval(n, a).pass);
}

TEST_CASE("polynomial-extension identity") {
  CHECK(verify_bernoulli_poly_ext(0, 2, 0, CyclotomicNumber::zero(4)).pass);
  CHECK(verify_bernoulli_poly_ext(1, 2, 1,
                                  CyclotomicNumber::from_rational(Rational(1, 3), 4))
            .pass);
  CHECK(verify_bernoulli_poly_ext(0, 6, 0, root_of_unity(24, 1)).pass);
  CHECK(verify_bernoulli_poly_ext(1, 3, 0, root_of_unity(6, 1)).pass);
}

TEST_CASE("series form of the general identity") {
  CHECK(verify_general_lacunary(1, 20).pass);
  CHECK(verify_general_lacunary(2, 24).pass);
  CHECK(verify_general_lacunary(6, 36).pass);
}

TEST_CASE("sign-vector polynomial identity") {
  CHECK(verify_polynomial_identity(2, 0, 0, CyclotomicNumber::zero(4)).pass);
  CHECK(verify_polynomial_identity(2, 1, 1, CyclotomicNumber::one(4)).pass);
  CHECK(verify_polynomial_identity(3, 1, 0, root_of_unity(6, 1)).pass);
}

TEST_CASE("polynomial identity specializes to the sign sum") {
  // at w = 0, p = 0 the right side is exactly the sign-vector sum
  VerificationReport r = verify_polynomial_identity(2, 0, 0, CyclotomicNumber::zero(4));
  CHECK(r.pass);
  CHECK(alpha_signsum(2, 0) == alpha_series(2, 0).values[0]);
}

TEST_CASE("moment cancellation") {
  auto reports = verify_moment_cancellation(30);
  REQUIRE(reports.size() == 30);
  for (const VerificationReport& r : reports) CHECK(r.pass);
}

TEST_CASE("uniform-product series") {
  CHECK(verify_b_sequence(36).pass);
  CHECK_THROWS_AS(verify_b_sequence(35), std::invalid_argument);
}

TEST_CASE("6-gap binomial identity") {
  auto reports = verify_lehmer(20);
  REQUIRE(reports.size() == 21);
  for (const VerificationReport& r : reports) CHECK(r.pass);
}

TEST_CASE("multisection identity battery") {
  VerificationReport r = verify_multisection(100, 20240);
  CHECK(r.pass);
}

TEST_CASE("report serialization") {
  VerificationReport r = verify_four_interval(2);
  nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["identity"] == "four_interval");
  CHECK(j["status"] == "pass");
  CHECK(j["residual_is_zero"] == true);
  CHECK(j["erratum"] == false);
  CHECK(j.contains("millis"));
}

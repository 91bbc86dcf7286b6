#include <doctest.h>

#include <random>

#include "ekrw/thresholds.hpp"

using namespace ekrw;

TEST_CASE("beta bracket for (2,3) pins the quadratic root") {
  // (1-x)^2 = x has the root (3-sqrt(5))/2 = 0.38196601125...
  BetaBracket b = beta(2, 3, parse_rational("1e-9"));
  CHECK(b.hi - b.lo <= parse_rational("1e-9"));
  CHECK(b.lo < parse_rational("0.38196601126"));
  CHECK(b.hi > parse_rational("0.38196601125"));
  // Sign change across the bracket is the root certificate.
  CHECK(beta_poly_sign(2, 3, b.lo) > 0);
  CHECK(beta_poly_sign(2, 3, b.hi) < 0);
}

TEST_CASE("beta brackets stay inside (1/(t+1), 1/2)") {
  for (int t = 2; t <= 10; ++t)
    for (int d = 3; d <= 6; ++d) {
      BetaBracket b = beta(t, d, Rational(1, 1000000));
      CHECK(b.lo > Rational(1, t + 1));
      CHECK(b.hi < Rational(1, 2));
      CHECK(beta_poly_sign(t, d, b.lo) > 0);
      CHECK(beta_poly_sign(t, d, b.hi) < 0);
    }
  CHECK_THROWS(beta(1, 3, Rational(1, 1000)));
  CHECK_THROWS(beta(2, 2, Rational(1, 1000)));
  CHECK_THROWS(beta(2, 3, Rational(0)));
}

TEST_CASE("lemma33 formulations agree on a random grid") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    long t = 1 + static_cast<long>(rng() % 4);
    long d = 2 + static_cast<long>(rng() % 4);
    long k = t + d - 2 + static_cast<long>(rng() % 40);
    long n = k + 1 + static_cast<long>(rng() % 300);
    // lemma33_holds throws if the two formulations ever disagree.
    CHECK_NOTHROW(lemma33_holds(n, k, t, d));
    CHECK(lemma33_holds(n, k, t, d) == lemma33_product_holds(n, k, t, d));
  }
}

TEST_CASE("lemma33 known instances") {
  // k/n = 0.2 sits below the (2,3) threshold: the star side dominates.
  CHECK(lemma33_holds(200, 40, 2, 3));
  // k/n = 1/2 sits above it; scaled up the comparison flips.
  CHECK(!lemma33_holds(1200, 600, 2, 3));
  CHECK_THROWS(lemma33_holds(10, 11, 2, 3));
}

TEST_CASE("scan_n0 finds a verified tail") {
  ScanResult r = scan_n0(Rational(1, 5), 2, 3, 10000);
  REQUIRE(r.found);
  CHECK(r.checked > 0);
  // Every scan point at or above the reported n0 passes.
  for (long n = r.n0 + (5 - r.n0 % 5) % 5; n <= 10000; n += 5)
    if (n / 5 >= 2 + 3 - 2 && n > n / 5) CHECK(lemma33_holds(n, n / 5, 2, 3));

  // 2/5 < beta(2,4) (which is about 0.43), so a tail exists here too.
  BetaBracket b = beta(2, 4, Rational(1, 1000000));
  CHECK(Rational(2, 5) < b.lo);
  ScanResult r2 = scan_n0(Rational(2, 5), 2, 4, 10000);
  CHECK(r2.found);

  CHECK_THROWS(scan_n0(Rational(1, 2), 2, 3, 1000));
  CHECK_THROWS(scan_n0(Rational(3, 5), 2, 3, 1000));
}

TEST_CASE("trivially intersecting threshold") {
  CHECK(trivially_intersecting(5, 4, 3));    // 10 < 12
  CHECK(!trivially_intersecting(11, 7, 3));  // 22 >= 21
  CHECK(!trivially_intersecting(6, 4, 3));   // boundary: 12 < 12 fails
  CHECK_THROWS(trivially_intersecting(4, 5, 3));
}

TEST_CASE("range classification spot checks") {
  {
    RangeClassification c = classify_range(40, 7, 3, 1);
    CHECK(c[TheoremRange::NontrivialDWise].applies);  // 40 > 2.5 * 6
    CHECK(c[TheoremRange::NontrivialDWise].bound);
  }
  {
    RangeClassification c = classify_range(11, 7, 3, 1);
    CHECK(!c[TheoremRange::NontrivialDWise].applies);  // 11 <= 15
  }
  {
    RangeClassification c = classify_range(22, 7, 2, 2);
    // (t+1)(k-t+1) = 18 < 22 and k = 7 > 2t+1 = 5: the large-k branch.
    bool either = c[TheoremRange::NontrivialTSmallK].applies ||
                  c[TheoremRange::NontrivialTLargeK].applies;
    CHECK(either);
    CHECK(c[TheoremRange::NontrivialTLargeK].applies);
    CHECK(!c[TheoremRange::NontrivialTSmallK].applies);
  }
  {
    // d-wise t-intersecting star bound: n > (t+d-1)(k-t-d+3).
    RangeClassification c = classify_range(50, 7, 3, 2);
    CHECK(c[TheoremRange::DWiseTStar].applies);
    CHECK(*c[TheoremRange::DWiseTStar].bound == binomial(48, 5));
  }
  {
    // The theorem ids are the stable wire keys.
    CHECK(theorem_range_id(TheoremRange::NontrivialDWise) == "Thm1.4");
    CHECK(theorem_range_id(TheoremRange::NontrivialTSmallK) == "Thm1.6(i)");
    CHECK(theorem_range_id(TheoremRange::TIntersectingWeak) == "Thm3.2");
  }
}

TEST_CASE("two-sided window is consistent whenever it applies") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    long t = 1 + static_cast<long>(rng() % 5);
    long k = t + static_cast<long>(rng() % 20);
    long n = k + 1 + static_cast<long>(rng() % 80);
    long d = 2 + static_cast<long>(rng() % 3);
    RangeClassification c = classify_range(n, k, d, t);
    const TheoremStatus& window = c[TheoremRange::CompleteIntersection];
    if (window.applies) {
      REQUIRE(window.window_hi);
      CHECK(window.threshold < *window.window_hi);
    }
  }
}

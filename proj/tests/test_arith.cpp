#include <doctest.h>

#include <numeric>
#include <set>

#include "ssk3/arith.hpp"

using namespace ssk3;
using namespace ssk3::arith;

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(66) == 20);
  CHECK(euler_phi(38) == 18);
  CHECK(euler_phi(97) == 96);
  // brute-force cross-check
  for (u64 n = 1; n <= 120; ++n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++count;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<i64>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<i64>{1, 1});
  CHECK(cyclotomic_poly(6) == std::vector<i64>{1, -1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<i64>{1, 0, -1, 0, 1});
  // first index with a coefficient outside {-1, 0, 1}
  auto c105 = cyclotomic_poly(105);
  CHECK(c105[7] == -2);

  for (u64 n = 1; n <= 200; ++n) {
    CHECK(cyclotomic_poly(n).size() == euler_phi(n) + 1);
  }

  // product over divisors reconstitutes T^n - 1
  for (u64 n : {12ull, 36ull, 105ull}) {
    std::vector<i64> prod{1};
    for (u64 d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      auto f = cyclotomic_poly(d);
      std::vector<i64> next(prod.size() + f.size() - 1, 0);
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
      prod = std::move(next);
    }
    std::vector<i64> expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("admissible complex indices") {
  CHECK(admissible_complex_indices(1) == std::vector<u64>{1, 2});
  CHECK(admissible_complex_indices(2) == std::vector<u64>{1, 2, 3, 4, 6});
  auto all = admissible_complex_indices(20);
  CHECK(all.back() == 66);
  CHECK(euler_phi(66) == 20);
}

TEST_CASE("neg one exponent") {
  CHECK(neg_one_exponent(37, 38) == 1u);
  CHECK(neg_one_exponent(27, 38) == 3u);
  CHECK_FALSE(neg_one_exponent(7, 38).has_value());  // ord(7 mod 38) = 3, odd
  CHECK_THROWS_AS(neg_one_exponent(19, 38), std::invalid_argument);
  CHECK(neg_one_exponent(3, 38) == 9u);
}

TEST_CASE("classification") {
  auto c = classify_reduction(38, 31);
  CHECK(c.kind == ReductionKind::Supersingular);
  CHECK(c.artin == 3);
  CHECK(classify_reduction(38, 7).kind == ReductionKind::FiniteHeight);
  CHECK(classify_reduction(38, 19).kind == ReductionKind::Invalid);
}

TEST_CASE("residue classes, frozen order-38 lists") {
  CHECK(residue_classes_for_artin(38, 3) == std::vector<u64>{27, 31});
  CHECK(residue_classes_for_artin(38, 1) == std::vector<u64>{37});
  // independent oracle: first k with r^k = -1 mod 38, scanning all units
  std::vector<u64> nine;
  for (u64 r = 1; r < 38; ++r) {
    if (std::gcd(r, 38ull) != 1) continue;
    u64 x = 1;
    for (unsigned k = 1; k <= 38; ++k) {
      x = x * r % 38;
      if (x == 37) {
        if (k == 9) nine.push_back(r);
        break;
      }
      if (x == 1) break;
    }
  }
  CHECK(residue_classes_for_artin(38, 9) == nine);
  CHECK(nine == std::vector<u64>{3, 13, 15, 21, 29, 33});
}

TEST_CASE("order-38 erratum is reported") {
  auto part = residue_partition(38);
  REQUIRE(part.errata.size() == 1);
  const auto& e = part.errata[0];
  CHECK(e.m == 9);
  CHECK(e.computed == std::vector<u64>{3, 13, 15, 21, 29, 33});
  CHECK(e.published == std::vector<u64>{3, 13, 15, 19, 29, 33});
  CHECK(e.note.find("19") != std::string::npos);
}

TEST_CASE("residue partition covers Z/N") {
  for (u64 N : {5ull, 12ull, 38ull, 66ull}) {
    auto part = residue_partition(N);
    std::set<u64> seen;
    u64 total = 0;
    for (const auto& [m, rs] : part.classes) {
      (void)m;
      for (u64 r : rs) {
        CHECK(seen.insert(r).second);
        ++total;
      }
    }
    for (u64 r : part.finite_height) {
      CHECK(seen.insert(r).second);
      ++total;
    }
    for (u64 r : part.non_units) {
      CHECK(seen.insert(r).second);
      ++total;
    }
    CHECK(total == N - 1);  // every nonzero residue classified exactly once
  }
}

TEST_CASE("neg one exponent pins the multiplicative order") {
  for (u64 N : {5ull, 13ull, 38ull, 35ull}) {
    for (u64 r = 2; r < N; ++r) {
      if (std::gcd(r, N) != 1) continue;
      auto m = neg_one_exponent(r, N);
      if (m && N > 2) CHECK(mult_order_mod(r, N) == 2ull * *m);
    }
  }
}

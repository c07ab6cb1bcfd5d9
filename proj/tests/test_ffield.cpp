#include <doctest.h>

#include <algorithm>
#include <random>

#include "ssk3/ffield.hpp"

using namespace ssk3;
using namespace ssk3::ffield;

namespace {

FieldElement sample(const FieldCtxPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ctx->order() - 1);
  return ctx->element(dist(rng));
}

// Independent oracle: smallest monic quadratic over F_p with no root,
// scanning coefficient vectors in base-p code order.
std::vector<u64> smallest_irreducible_quadratic(u64 p) {
  for (u64 code = 0; code < p * p; ++code) {
    u64 c0 = code % p, c1 = code / p;
    bool has_root = false;
    for (u64 x = 0; x < p && !has_root; ++x) {
      if ((x * x + c1 * x + c0) % p == 0) has_root = true;
    }
    if (!has_root) return {c0, c1, 1};
  }
  return {};
}

}  // namespace

TEST_CASE("canonical modulus is deterministic and minimal") {
  auto f5 = FieldCtx::create(5, 1);
  CHECK(f5->modulus() == std::vector<u64>{0, 1});  // T

  auto f25 = FieldCtx::create(5, 2);
  CHECK(f25->modulus() == smallest_irreducible_quadratic(5));
  CHECK(f25->modulus() == std::vector<u64>{2, 0, 1});  // T^2 + 2

  auto f49 = FieldCtx::create(7, 2);
  CHECK(f49->modulus() == smallest_irreducible_quadratic(7));

  // identical inputs always give the identical modulus
  CHECK(FieldCtx::create(5, 4)->modulus() == FieldCtx::create(5, 4)->modulus());
}

TEST_CASE("context construction rejects bad parameters") {
  CHECK_THROWS_AS(FieldCtx::create(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::create(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::create(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::create(5, 0), std::invalid_argument);
  CHECK_THROWS(FieldCtx::create(5, 100));  // p^d out of range

  FieldOptions allow;
  allow.allow_small_characteristic = true;
  CHECK(FieldCtx::create(3, 1, allow)->p() == 3);
}

TEST_CASE("prime field arithmetic") {
  auto f5 = FieldCtx::create(5, 1);
  CHECK(f5->from_int(2).inv() == f5->from_int(3));
  CHECK(f5->from_int(2).pow(4) == f5->one());
  CHECK((f5->from_int(2) + f5->from_int(4)) == f5->from_int(1));
  CHECK_THROWS_AS(f5->zero().inv(), std::invalid_argument);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20260810);
  for (auto [p, d] : {std::pair<u64, unsigned>{5, 2}, {7, 3}, {11, 2}}) {
    auto ctx = FieldCtx::create(p, d);
    for (int it = 0; it < 60; ++it) {
      auto a = sample(ctx, rng), b = sample(ctx, rng), c = sample(ctx, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == ctx->zero());
      if (!a.is_zero()) CHECK(a * a.inv() == ctx->one());
    }
  }
}

TEST_CASE("elements from distinct fields never mix") {
  auto f25 = FieldCtx::create(5, 2);
  auto f49 = FieldCtx::create(7, 2);
  CHECK_THROWS_AS(f25->one() + f49->one(), std::invalid_argument);
  // same (p, d): interoperable even as distinct objects
  auto f25b = FieldCtx::create(5, 2);
  CHECK(f25->one() + f25b->one() == f25->from_int(2));
}

TEST_CASE("frobenius") {
  std::mt19937_64 rng(7);
  auto ctx = FieldCtx::create(5, 2);
  FieldElement theta = ctx->element(5);  // the power-basis generator T

  CHECK(frobenius(theta, 1) == theta.pow(5));

  for (i64 e : {-3, -1, 0, 1, 2, 5}) {
    CHECK(frobenius(ctx->from_int(3), e) == ctx->from_int(3));  // prime subfield fixed
  }
  for (int it = 0; it < 40; ++it) {
    auto x = sample(ctx, rng), y = sample(ctx, rng);
    CHECK(frobenius(frobenius(x, 1), -1) == x);
    CHECK(frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1));
    CHECK(frobenius(x * y, 1) == frobenius(x, 1) * frobenius(y, 1));
    CHECK(frobenius(x, static_cast<i64>(ctx->degree())) == x);
  }

  auto big = FieldCtx::create(7, 4);
  for (int it = 0; it < 20; ++it) {
    auto x = sample(big, rng);
    CHECK(frobenius(x, 1) == x.pow(7));
    CHECK(frobenius(x, -1) == x.pow(static_cast<i64>(pow_mod(7, 3, (1ull << 62)))));
    CHECK(frobenius(x, 4) == x);
  }
}

TEST_CASE("multiplicative order") {
  auto f5 = FieldCtx::create(5, 1);
  CHECK(mult_order(f5->one()) == 1);
  CHECK(mult_order(f5->from_int(2)) == 4);
  CHECK_THROWS_AS(mult_order(f5->zero()), std::invalid_argument);

  auto f25 = FieldCtx::create(5, 2);
  CHECK(mult_order(f25->generator()) == 24);
  for (u64 code = 1; code < 25; ++code) {
    CHECK(24 % mult_order(f25->element(code)) == 0);
  }
}

TEST_CASE("roots of unity") {
  auto f25 = FieldCtx::create(5, 2);
  for (u64 n : {1ull, 2ull, 3ull, 4ull, 6ull, 8ull, 12ull, 24ull}) {
    CHECK(mult_order(root_of_unity(f25, n)) == n);
  }
  CHECK_THROWS_AS(root_of_unity(f25, 5), std::invalid_argument);

  auto f5 = FieldCtx::create(5, 1);
  CHECK_THROWS_AS(root_of_unity(f5, 3), std::invalid_argument);

  auto f625 = FieldCtx::create(5, 4);
  CHECK(mult_order(root_of_unity(f625, 26)) == 26);  // 624 = 26 * 24
  CHECK_THROWS_AS(root_of_unity(f625, 626), std::invalid_argument);

  // determinism
  CHECK(root_of_unity(f625, 26) == root_of_unity(FieldCtx::create(5, 4), 26));
}

TEST_CASE("polynomial roots, frozen small cases") {
  auto f5 = FieldCtx::create(5, 1);
  auto poly = [&](std::vector<u64> c) {
    std::vector<FieldElement> v;
    for (u64 x : c) v.push_back(f5->from_int(x));
    return v;
  };
  auto codes = [](const std::vector<FieldElement>& roots) {
    std::vector<u64> v;
    for (const auto& r : roots) v.push_back(r.encode());
    return v;
  };

  CHECK(codes(poly_roots(poly({4, 0, 1}))) == std::vector<u64>{1, 4});  // T^2 - 1
  CHECK(codes(poly_roots(poly({1, 0, 1}))) == std::vector<u64>{2, 3});  // T^2 + 1
  CHECK(poly_roots(poly({3, 0, 1})).empty());                           // T^2 - 2
  CHECK(codes(poly_roots(poly({4, 4, 1}))) == std::vector<u64>{3});     // (T+2)^2
  CHECK_THROWS_AS(poly_roots(poly({})), std::invalid_argument);
  CHECK_THROWS_AS(poly_roots(poly({3})), std::invalid_argument);
}

TEST_CASE("polynomial roots agree between scan and gcd routes") {
  std::mt19937_64 rng(99);
  FieldOptions force_gcd;
  force_gcd.root_scan_threshold = 1;  // never scan
  auto scan_ctx = FieldCtx::create(5, 2);
  auto gcd_ctx = FieldCtx::create(5, 2, force_gcd);

  for (int it = 0; it < 25; ++it) {
    auto a = sample(scan_ctx, rng), b = sample(scan_ctx, rng), c = sample(scan_ctx, rng);
    // (T - a)(T - b)(T - c)
    std::vector<FieldElement> f{-(a * b * c), a * b + a * c + b * c, -(a + b + c), scan_ctx->one()};
    auto roots = poly_roots(f);
    std::vector<u64> expect{a.encode(), b.encode(), c.encode()};
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    std::vector<u64> got;
    for (const auto& r : roots) got.push_back(r.encode());
    CHECK(got == expect);

    std::vector<FieldElement> f2;
    for (const auto& x : f) f2.push_back(gcd_ctx->from_coeffs(x.coeffs()));
    auto roots2 = poly_roots(f2);
    std::vector<u64> got2;
    for (const auto& r : roots2) got2.push_back(r.encode());
    CHECK(got2 == expect);
  }
}

TEST_CASE("element codes round trip") {
  auto ctx = FieldCtx::create(7, 3);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    std::uniform_int_distribution<u64> dist(0, ctx->order() - 1);
    u64 code = dist(rng);
    CHECK(ctx->element(code).encode() == code);
  }
  CHECK_THROWS_AS(ctx->element(ctx->order()), std::invalid_argument);
}

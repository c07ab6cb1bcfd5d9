#include <doctest.h>

#include <random>

#include "ssk3/latred.hpp"

using namespace ssk3;
using namespace ssk3::latred;

namespace {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMat r(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

IntMat identity(size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

TEST_CASE("smith normal form, frozen cases") {
  auto id = smith_normal_form(identity(3));
  CHECK(id.d == identity(3));

  auto two = smith_normal_form({{2, 0}, {0, 2}});
  CHECK(two.d == IntMat{{2, 0}, {0, 2}});

  auto u = smith_normal_form({{0, 1}, {1, 0}});
  CHECK(u.d == IntMat{{1, 0}, {0, 1}});  // unimodular, trivial quotient
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<i64> dist(-5, 5);
  for (int it = 0; it < 120; ++it) {
    size_t n = 2 + static_cast<size_t>(rng() % 3);
    IntMat m(n, IntVec(n));
    for (auto& row : m)
      for (auto& x : row) x = dist(rng);
    auto s = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
    CHECK(std::abs(det_int(s.u)) == 1);
    CHECK(std::abs(det_int(s.v)) == 1);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j) CHECK(s.d[i][j] == 0);
    for (size_t i = 0; i + 1 < n; ++i) {
      CHECK(s.d[i][i] >= 0);
      if (s.d[i + 1][i + 1] != 0) {
        REQUIRE(s.d[i][i] != 0);
        CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
      }
    }
    i64 dm = det_int(m);
    if (dm != 0) {
      i64 prod = 1;
      for (size_t i = 0; i < n; ++i) prod *= s.d[i][i];
      CHECK(prod == std::abs(dm) * (prod < 0 ? -1 : 1));
      CHECK(std::abs(prod) == std::abs(dm));
    }
  }
}

TEST_CASE("discriminant groups of the corpus") {
  auto a1 = disc_group(named_lattice("A1"));
  REQUIRE(a1.orders == std::vector<i64>{2});
  CHECK(a1.pairing[0][0] == Frac(1, 2));  // -1/2 mod 1

  CHECK(disc_group(named_lattice("U")).orders.empty());
  CHECK(disc_group(named_lattice("E8")).orders.empty());
  CHECK(std::abs(named_lattice("E8").det()) == 1);

  auto two = disc_group(named_lattice("diag(2,-2)"));
  CHECK(two.orders == std::vector<i64>{2, 2});

  auto ua1 = disc_group(named_lattice("U+A1"));
  CHECK(ua1.orders == std::vector<i64>{2});

  for (const auto& key : named_lattice_keys()) {
    auto L = named_lattice(key);
    CHECK(disc_group(L).size() == static_cast<u64>(std::abs(L.det())));
  }
}

TEST_CASE("reflections, frozen cases") {
  auto a1 = named_lattice("A1");
  CHECK(reflect_minus2(a1, {1}) == IntMat{{-1}});

  auto a1p = named_lattice("A1+");
  CHECK(reflect_plus2(a1p, {1}) == IntMat{{-1}});

  auto u = named_lattice("U");
  auto s = reflect_minus2(u, {1, -1});  // v = e - f, norm -2
  CHECK(mat_mul(s, {{1}, {0}}) == IntMat{{0}, {1}});  // swaps e and f
  CHECK(mat_mul(s, {{0}, {1}}) == IntMat{{1}, {0}});

  auto ua1 = named_lattice("U+A1");
  auto t = reflect_plus2(ua1, {1, 1, 0});  // u = e + f, norm +2
  CHECK(mat_mul(t, {{1}, {0}, {0}}) == IntMat{{0}, {-1}, {0}});
  CHECK(preserves_gram(ua1, t));
  // t_u(u) = -u
  CHECK(mat_mul(t, {{1}, {1}, {0}}) == IntMat{{-1}, {-1}, {0}});

  CHECK_THROWS_AS(reflect_minus2(u, {1, 1}), std::invalid_argument);  // norm +2
  CHECK_THROWS_AS(reflect_plus2(u, {1, -1}), std::invalid_argument);  // norm -2
}

TEST_CASE("every corpus reflection is a gram-preserving involution, trivial on the discriminant") {
  for (const auto& key : named_lattice_keys()) {
    auto L = named_lattice(key);
    for (i64 norm : {i64{-2}, i64{2}}) {
      for (const auto& v : vectors_of_norm(L, norm, 2)) {
        IntMat R = norm == -2 ? reflect_minus2(L, v) : reflect_plus2(L, v);
        CHECK(preserves_gram(L, R));
        CHECK(mat_mul(R, R) == identity(L.rank));
        CHECK(disc_action_is_identity(L, R));
      }
    }
  }
}

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(IntegralLattice::from_gram({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(IntegralLattice::from_gram({{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK(named_lattice("U").is_even());
  CHECK_FALSE(IntegralLattice::from_gram({{1}}).is_even());
  CHECK_THROWS_AS(named_lattice("Z9"), std::invalid_argument);
}

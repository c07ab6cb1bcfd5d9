#include <doctest.h>

#include <numeric>
#include "ssk3/oracle.hpp"

using namespace ssk3;
using namespace ssk3::ffield;
using namespace ssk3::discform;
using namespace ssk3::charspace;
using namespace ssk3::oracle;

namespace {

CharSubspace special_at(u64 p, unsigned sigma) {
  return CharSubspace::special(DiscSpace::build(p, sigma));
}

}  // namespace

TEST_CASE("identity and negation are always admissible") {
  auto K = special_at(5, 1);
  auto one = K.space()->work()->one();
  auto id = build_eigen_isometry(K, one);
  CHECK(id.admissible());
  CHECK(id.matrix == fmatrix::FMatrix::identity(K.space()->work(), 2));

  auto neg = build_eigen_isometry(K, -one);
  CHECK(neg.admissible());
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      if (i == j)
        CHECK(neg.matrix.at(i, j) == -one);
      else
        CHECK(neg.matrix.at(i, j).is_zero());
    }
  CHECK_THROWS_AS(build_eigen_isometry(K, K.space()->work()->zero()), std::invalid_argument);
}

TEST_CASE("oracle matches the divisor criterion on special subspaces") {
  for (auto [p, sigma] : {std::pair<u64, unsigned>{5, 1}, {7, 1}, {11, 1}, {5, 2}}) {
    auto K = special_at(p, sigma);
    auto r = enumerate_index(K);
    auto c = strata::nonsymplectic_index(p, sigma, K.zero_pattern());
    CHECK(r.index == c.index);
    CHECK(r.index == checked_pow(p, sigma, 1ull << 62) + 1);
    CHECK(r.index % 2 == 0);
    CHECK(r.modulus % r.index == 0);
    // negation sits at exponent n/2
    bool has_neg = false;
    for (u64 j : r.kept_exponents) has_neg = has_neg || j == r.modulus / 2;
    CHECK(has_neg);
  }
}

TEST_CASE("oracle at sigma = 3, p = 5") {
  auto K = special_at(5, 3);
  auto r = enumerate_index(K);
  CHECK(r.index == 126);
  CHECK(r.index == strata::nonsymplectic_index(5, 3, K.zero_pattern()).index);
}

TEST_CASE("kept eigenvalues satisfy the order relations and act by xi^-1 on v_(sigma+1)") {
  for (auto [p, sigma] : {std::pair<u64, unsigned>{5, 1}, {5, 2}, {7, 1}}) {
    auto K = special_at(p, sigma);
    auto r = enumerate_index(K);
    auto zeta = root_of_unity(K.space()->work(), r.modulus);
    for (u64 j : r.kept_exponents) {
      auto xi = zeta.pow(static_cast<i64>(j));
      auto cons = eigenvalue_constraints(xi, sigma);
      CHECK(cons.n == (j == 0 ? 1 : r.modulus / std::gcd(r.modulus, j)));
      if (cons.m >= 1) {
        CHECK(mult_order_mod(p, cons.n) == 2 * cons.m);
        CHECK(pow_mod(p, cons.m, cons.n) == cons.n - 1);
        CHECK(sigma % cons.m == 0);
        CHECK((sigma / cons.m) % 2 == 1);
      }
      auto iso = build_eigen_isometry(K, xi);
      const auto& vs1 = K.distinguished_basis()[sigma];
      auto img = K.space()->vector(iso.matrix.mul_vec(vs1.coords()));
      CHECK(img == xi.inv() * vs1);
    }
  }
}

TEST_CASE("eigenvalue constraints, boundary cases") {
  auto space = DiscSpace::build(5, 2);
  auto one = space->work()->one();
  auto c1 = eigenvalue_constraints(one, 2);
  CHECK(c1.m == 0);
  CHECK(c1.n == 1);
  auto cneg = eigenvalue_constraints(-one, 2);
  CHECK(cneg.m == 0);
  CHECK(cneg.n == 2);
  auto c26 = eigenvalue_constraints(root_of_unity(space->work(), 26), 2);
  CHECK(c26.m == 2);
  CHECK(c26.n == 26);
  // an eigenvalue outside the admissible locus
  CHECK_THROWS_AS(eigenvalue_constraints(space->work()->generator(), 2), std::invalid_argument);
}

TEST_CASE("budget limit") {
  auto K = special_at(5, 2);
  CHECK_THROWS_AS(enumerate_index(K, 10), BudgetError);
}

TEST_CASE("oracle over an enlarged working field") {
  DiscOptions opts;
  opts.working_degree = 8;
  auto K = CharSubspace::special(DiscSpace::build(5, 2, opts));
  CHECK(enumerate_index(K).index == 26);
  for (const auto& a : K.a_vector()) CHECK(a.is_zero());
}

TEST_CASE("non-admissible eigenvalues fail exactly the orthogonality flag on a generic subspace") {
  DiscOptions opts;
  opts.working_degree = 8;
  auto space = DiscSpace::build(5, 2, opts);
  std::vector<FieldElement> c;
  for (u64 code : {325ull, 34500ull, 6425ull, 22225ull}) c.push_back(space->work()->element(code));
  ExtVector v1 = space->vector(c);
  ExtVector v2 = frob_semilinear(v1, -1);
  auto K = CharSubspace::from_basis(
      space, fmatrix::FMatrix::from_rows(space->work(), {v1.coords(), v2.coords()}));
  REQUIRE_FALSE(K.a_vector()[0].is_zero());

  auto r = enumerate_index(K);
  CHECK(r.index == 2);  // the generic stratum
  CHECK(r.index == strata::nonsymplectic_index(5, 2, K.zero_pattern()).index);

  auto zeta = root_of_unity(space->work(), 26);
  auto iso = build_eigen_isometry(K, zeta);
  CHECK_FALSE(iso.orthogonal);  // a_1 != 0 rules the primitive eigenvalue out
  CHECK(iso.preserves_subspace);
}

#include <doctest.h>

#include <random>

#include "ssk3/fmatrix.hpp"

using namespace ssk3;
using namespace ssk3::ffield;
using namespace ssk3::fmatrix;

namespace {

FMatrix random_matrix(const FieldCtxPtr& ctx, size_t r, size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ctx->order() - 1);
  FMatrix m(ctx, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = ctx->element(dist(rng));
  return m;
}

}  // namespace

TEST_CASE("inverse and identity") {
  auto ctx = FieldCtx::create(5, 2);
  std::mt19937_64 rng(11);
  int inverted = 0;
  for (int it = 0; it < 30; ++it) {
    FMatrix m = random_matrix(ctx, 4, 4, rng);
    auto inv = m.inverse();
    if (!inv) continue;
    ++inverted;
    CHECK(m * *inv == FMatrix::identity(ctx, 4));
    CHECK(*inv * m == FMatrix::identity(ctx, 4));
  }
  CHECK(inverted > 10);
}

TEST_CASE("rank-nullity") {
  auto ctx = FieldCtx::create(5, 2);
  std::mt19937_64 rng(12);
  for (int it = 0; it < 30; ++it) {
    FMatrix m = random_matrix(ctx, 3, 5, rng);
    FMatrix k = m.kernel();
    CHECK(m.rank() + k.rows() == 5);
    for (size_t i = 0; i < k.rows(); ++i) {
      auto img = m.mul_vec(k.row(i));
      for (const auto& x : img) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("row space intersection dimensions") {
  auto ctx = FieldCtx::create(5, 1);
  std::mt19937_64 rng(13);
  for (int it = 0; it < 40; ++it) {
    FMatrix a = random_matrix(ctx, 2, 4, rng).row_space();
    FMatrix b = random_matrix(ctx, 2, 4, rng).row_space();
    FMatrix both = FMatrix::vstack(a, b);
    FMatrix meet = FMatrix::intersect_row_spaces(a, b);
    CHECK(meet.rows() + both.rank() == a.rows() + b.rows());
    // intersection is contained in both row spaces
    for (size_t i = 0; i < meet.rows(); ++i) {
      FMatrix one_row(ctx, 1, 4);
      one_row.set_row(0, meet.row(i));
      CHECK(FMatrix::vstack(a, one_row).rank() == a.rank());
      CHECK(FMatrix::vstack(b, one_row).rank() == b.rank());
    }
  }
  FMatrix a = random_matrix(ctx, 2, 4, rng).row_space();
  CHECK(FMatrix::intersect_row_spaces(a, a).rank() == a.rank());
}

TEST_CASE("frobenius map is entrywise") {
  auto ctx = FieldCtx::create(5, 2);
  std::mt19937_64 rng(14);
  FMatrix m = random_matrix(ctx, 3, 3, rng);
  FMatrix f = m.frobenius_map(1);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(f.at(i, j) == frobenius(m.at(i, j), 1));
}

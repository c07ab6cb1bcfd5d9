#include <doctest.h>

#include <random>

#include "ssk3/strata.hpp"

using namespace ssk3;
using namespace ssk3::strata;

TEST_CASE("admissible m") {
  CHECK(admissible_m(9, ZeroPattern::all_zero(9)) == std::vector<unsigned>{1, 3, 9});
  CHECK(admissible_m(4, ZeroPattern::all_zero(4)) == std::vector<unsigned>{4});
  CHECK(admissible_m(2, ZeroPattern::parse(2, "1")).empty());
  CHECK(admissible_m(1, ZeroPattern::all_zero(1)) == std::vector<unsigned>{1});
  CHECK(admissible_m(6, ZeroPattern::all_zero(6)) == std::vector<unsigned>{2, 6});
  // a nonzero slot at 4 permits 2m in {2, 4}
  CHECK(admissible_m(6, ZeroPattern::parse(6, "0,0,0,1,0")) == std::vector<unsigned>{2});
  CHECK(admissible_m(6, ZeroPattern::parse(6, "0,1,0,0,0")).empty());
}

TEST_CASE("nonsymplectic index, frozen values") {
  CHECK(nonsymplectic_index(5, 1, ZeroPattern::all_zero(1)).index == 6);
  CHECK(nonsymplectic_index(5, 2, ZeroPattern::parse(2, "1")).index == 2);
  CHECK(nonsymplectic_index(5, 2, ZeroPattern::parse(2, "0")).index == 26);
  CHECK(nonsymplectic_index(5, 10, ZeroPattern::all_zero(10)).index == 9765626);
  CHECK(nonsymplectic_index(7, 3, ZeroPattern::all_zero(3)).index == 344);
  CHECK_THROWS_AS(nonsymplectic_index(4, 1, ZeroPattern::all_zero(1)), std::invalid_argument);
}

TEST_CASE("stratum dimensions") {
  CHECK(stratum_dimension(9, 1) == 4);
  CHECK(stratum_dimension(9, 3) == 1);
  CHECK(stratum_dimension(10, 2) == 2);
  CHECK(stratum_dimension(2, 0) == 1);
  CHECK(stratum_dimension(1, 1) == 0);
  CHECK_THROWS_AS(stratum_dimension(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(stratum_dimension(9, 2), std::invalid_argument);
}

namespace {

struct Row {
  unsigned sigma;
  std::vector<std::pair<std::string, std::string>> entries;  // (index, family)
};

// The classification table, frozen: one entry per stratum, ascending index.
const std::vector<Row> kExpected = {
    {1, {{"p+1", "unique"}}},
    {2, {{"2", "generic"}, {"p^2+1", "unique"}}},
    {3, {{"2", "generic"}, {"p+1", "1 dimensional"}, {"p^3+1", "unique"}}},
    {4, {{"2", "generic"}, {"p^4+1", "unique"}}},
    {5, {{"2", "generic"}, {"p+1", "2 dimensional"}, {"p^5+1", "unique"}}},
    {6, {{"2", "generic"}, {"p^2+1", "1 dimensional"}, {"p^6+1", "unique"}}},
    {7, {{"2", "generic"}, {"p+1", "3 dimensional"}, {"p^7+1", "unique"}}},
    {8, {{"2", "generic"}, {"p^8+1", "unique"}}},
    {9,
     {{"2", "generic"},
      {"p+1", "4 dimensional"},
      {"p^3+1", "1 dimensional"},
      {"p^9+1", "unique"}}},
    {10, {{"2", "generic"}, {"p^2+1", "2 dimensional"}, {"p^10+1", "unique"}}},
};

}  // namespace

TEST_CASE("symbolic table matches the frozen classification") {
  auto table = table1(std::nullopt);
  REQUIRE(table.size() == 10);
  for (size_t r = 0; r < 10; ++r) {
    CHECK(table[r].first == kExpected[r].sigma);
    REQUIRE(table[r].second.size() == kExpected[r].entries.size());
    for (size_t s = 0; s < kExpected[r].entries.size(); ++s) {
      CHECK(table[r].second[s].index_symbolic == kExpected[r].entries[s].first);
      CHECK(table[r].second[s].label == kExpected[r].entries[s].second);
      CHECK_FALSE(table[r].second[s].index.has_value());
    }
  }
}

TEST_CASE("numeric table substitutes p") {
  auto table = table1(5);
  CHECK(table[0].second[0].index == 6);
  CHECK(table[1].second[1].index == 26);
  CHECK(table[9].second[2].index == 9765626);
  CHECK_THROWS_AS(table1(4), std::invalid_argument);
}

TEST_CASE("index divides p^sigma + 1 and is even") {
  for (u64 p : {5ull, 7ull, 11ull}) {
    for (unsigned sigma = 1; sigma <= 10; ++sigma) {
      u64 top = checked_pow(p, sigma, 1ull << 62) + 1;
      for (const auto& s : strata_for(sigma, p)) {
        CHECK(*s.index % 2 == 0);
        CHECK(top % *s.index == 0);
      }
    }
  }
}

TEST_CASE("coarsening a pattern never decreases the index") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    unsigned sigma = 1 + static_cast<unsigned>(rng() % 10);
    ZeroPattern pat = ZeroPattern::all_zero(sigma);
    for (size_t i = 0; i + 1 < sigma; ++i) pat.nonzero[i] = rng() % 2;
    ZeroPattern coarser = pat;
    for (size_t i = 0; i + 1 < sigma; ++i)
      if (coarser.nonzero[i] && rng() % 2) coarser.nonzero[i] = false;
    CHECK(nonsymplectic_index(5, sigma, coarser).index >= nonsymplectic_index(5, sigma, pat).index);
  }
}

TEST_CASE("pattern parsing") {
  CHECK(ZeroPattern::parse(3, "0,1").nonzero == std::vector<bool>{false, true});
  CHECK(ZeroPattern::parse(1, "").nonzero.empty());
  CHECK_THROWS_AS(ZeroPattern::parse(3, "0"), std::invalid_argument);
  CHECK_THROWS_AS(ZeroPattern::parse(3, "0,2"), std::invalid_argument);
  CHECK_THROWS_AS(ZeroPattern::parse(2, "1,1"), std::invalid_argument);
  CHECK(ZeroPattern::parse(3, "0,1").to_csv() == "0,1");
}

TEST_CASE("text rendering is stable") {
  std::string text = render_table_text(table1(std::nullopt));
  CHECK(text.find("sigma | index  | family") == 0);
  CHECK(text.find("1     | p+1    | unique") != std::string::npos);
  CHECK(text.find("10    | 2      | generic") != std::string::npos);
  CHECK(text.find("      | p^10+1 | unique") != std::string::npos);
}

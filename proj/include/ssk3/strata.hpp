#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssk3/common.hpp"

namespace ssk3::strata {

/// Which of the moduli coordinates a_1 .. a_(sigma-1) vanish.
struct ZeroPattern {
  unsigned sigma = 1;
  /// slot i-1 corresponds to a_i; true means a_i != 0
  std::vector<bool> nonzero;

  static ZeroPattern all_zero(unsigned sigma);
  /// Comma list of 0/1 flags, one per slot ("0,1,0"); 1 means nonzero.
  static ZeroPattern parse(unsigned sigma, const std::string& csv);
  bool is_all_zero() const;
  std::string to_csv() const;

  friend bool operator==(const ZeroPattern& a, const ZeroPattern& b) = default;
};

struct Stratum {
  unsigned m = 0;  // 0 encodes the order-2 locus with no slot constraints
  unsigned dimension = 0;
  std::string label;            // "generic" | "unique" | "<d> dimensional"
  std::string index_symbolic;   // "2" | "p+1" | "p^m+1"
  std::optional<u64> index;     // present when p is numeric
};

struct IndexResult {
  u64 p = 0;
  unsigned sigma = 1;
  unsigned m = 0;  // the largest admissible m, 0 for the generic case
  u64 index = 2;
  std::string provenance;  // "criterion" | "oracle"
};

/// All m >= 1 with m | sigma, sigma/m odd, and every nonzero slot index a
/// multiple of 2m. Ascending.
std::vector<unsigned> admissible_m(unsigned sigma, const ZeroPattern& pattern);

/// p^m + 1 for the largest admissible m, else 2.
IndexResult nonsymplectic_index(u64 p, unsigned sigma, const ZeroPattern& pattern);

/// Moduli dimension of the locus attached to m: floor((sigma-1)/(2m)) for
/// m >= 1 and sigma-1 for m = 0. Throws for inadmissible m.
unsigned stratum_dimension(unsigned sigma, unsigned m);

/// The strata of one sigma row, ascending index; symbolic when p is absent.
std::vector<Stratum> strata_for(unsigned sigma, std::optional<u64> p);

using Table = std::vector<std::pair<unsigned, std::vector<Stratum>>>;

/// Rows sigma = 1..10.
Table table1(std::optional<u64> p);

/// Aligned text rendering (sigma | index | family).
std::string render_table_text(const Table& table);

}  // namespace ssk3::strata

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssk3/common.hpp"

namespace ssk3::arith {

u64 euler_phi(u64 n);

/// Coefficients of the n-th cyclotomic polynomial, ascending, computed by
/// recursive division of T^n - 1.
std::vector<i64> cyclotomic_poly(u64 n);

/// All N >= 1 with euler_phi(N) <= rank_bound, ascending.
std::vector<u64> admissible_complex_indices(u64 rank_bound);

/// Least m >= 1 with p^m = -1 mod N, or nothing when -1 is not a power of p.
/// Requires gcd(p, N) = 1.
std::optional<unsigned> neg_one_exponent(u64 p, u64 N);

enum class ReductionKind { Supersingular, FiniteHeight, Invalid };

struct ReductionClass {
  u64 N = 0;
  u64 p = 0;
  ReductionKind kind = ReductionKind::Invalid;
  unsigned artin = 0;  // meaningful for Supersingular only
};

/// Invalid when p shares a factor with N; Supersingular(m) when
/// neg_one_exponent yields m; FiniteHeight otherwise.
ReductionClass classify_reduction(u64 N, u64 p);

/// All residues r mod N, coprime to N, with neg_one_exponent(r, N) = m.
std::vector<u64> residue_classes_for_artin(u64 N, unsigned m);

/// A residue list from an earlier published table, kept for cross-checks.
struct PublishedList {
  u64 N;
  unsigned m;
  std::vector<u64> residues;
};

const std::vector<PublishedList>& published_residue_lists();

struct Erratum {
  u64 N;
  unsigned m;
  std::vector<u64> computed;
  std::vector<u64> published;
  std::string note;
};

struct ResiduePartition {
  u64 N = 0;
  std::vector<std::pair<unsigned, std::vector<u64>>> classes;  // by ascending m
  std::vector<u64> finite_height;
  std::vector<u64> non_units;
  std::vector<Erratum> errata;
};

/// Full decomposition of Z/N by reduction type, with cross-checks against
/// the published lists where available.
ResiduePartition residue_partition(u64 N);

}  // namespace ssk3::arith

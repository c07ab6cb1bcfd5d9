#pragma once

#include <string>
#include <vector>

#include "ssk3/common.hpp"

namespace ssk3::latred {

using IntMat = std::vector<std::vector<i64>>;
using IntVec = std::vector<i64>;

struct IntegralLattice {
  unsigned rank = 0;
  IntMat gram;

  /// Validates symmetry and nonzero determinant.
  static IntegralLattice from_gram(IntMat gram);
  bool is_even() const;
  i64 det() const;
};

/// Fraction-free determinant (Bareiss).
i64 det_int(const IntMat& m);

struct SmithResult {
  IntMat d;  // diagonal, non-negative, divisibility chain
  IntMat u;  // unimodular
  IntMat v;  // unimodular, u * m * v = d
};

SmithResult smith_normal_form(const IntMat& m);

/// Reduced fraction with positive denominator.
struct Frac {
  i64 num = 0;
  i64 den = 1;

  Frac() = default;
  Frac(i64 n, i64 d);
  Frac operator+(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  /// Representative in [0, 1).
  Frac mod_one() const;
  bool is_integral() const { return den == 1; }
  friend bool operator==(const Frac& a, const Frac& b) = default;
};

struct DiscGroup {
  /// Cyclic factor orders d_1 | d_2 | ..., each > 1.
  std::vector<i64> orders;
  /// Generators as rational coordinate vectors in the lattice basis.
  std::vector<std::vector<Frac>> gens;
  /// Pairing values b(g_i, g_j) reduced into [0, 1).
  std::vector<std::vector<Frac>> pairing;

  u64 size() const;
};

DiscGroup disc_group(const IntegralLattice& L);

/// w -> w + (v.w) v for a vector of norm -2. Gram-preserving involution.
IntMat reflect_minus2(const IntegralLattice& L, const IntVec& v);

/// w -> w - (w.u) u for a vector of norm +2.
IntMat reflect_plus2(const IntegralLattice& L, const IntVec& u);

bool preserves_gram(const IntegralLattice& L, const IntMat& R);

/// Whether the isometry acts as the identity on the discriminant group.
bool disc_action_is_identity(const IntegralLattice& L, const IntMat& R);

/// All nonzero vectors with coordinates in [-bound, bound] of given norm.
std::vector<IntVec> vectors_of_norm(const IntegralLattice& L, i64 norm, i64 bound);

/// Small registry of named Gram matrices used by the test corpus.
IntegralLattice named_lattice(const std::string& key);
std::vector<std::string> named_lattice_keys();

}  // namespace ssk3::latred

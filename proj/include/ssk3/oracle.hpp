#pragma once

#include "ssk3/charspace.hpp"

namespace ssk3::oracle {

using charspace::CharSubspace;
using discform::ExtVector;
using ffield::FieldElement;
using fmatrix::FMatrix;

/// The linear operator sending v_i to the (1-i)-th Frobenius power of a
/// fixed eigenvalue times v_i, expressed in the rational basis, with its
/// admissibility flags evaluated.
struct EigenIsometry {
  FieldElement xi;
  FMatrix matrix;            // action in the rational basis over the working field
  bool orthogonal = false;   // preserves the pairing
  bool rational = false;     // commutes with the semilinear Frobenius
  bool preserves_subspace = false;

  bool admissible() const { return orthogonal && rational && preserves_subspace; }
};

/// Builds the diagonal-in-the-distinguished-basis operator for xi != 0 and
/// evaluates all three flags.
EigenIsometry build_eigen_isometry(const CharSubspace& K, const FieldElement& xi);

struct OracleResult {
  u64 index = 0;                   // order of the admissible set
  u64 modulus = 0;                 // p^sigma + 1, the eigenvalue range scanned
  std::vector<u64> kept_exponents; // exponents of the scanned generator that passed
  std::vector<u64> kept_orders;    // multiplicative orders of the kept eigenvalues
};

/// Scans every eigenvalue in the group of (p^sigma + 1)-th roots of unity,
/// keeps the admissible ones, verifies they form a subgroup, and returns
/// its order. This recomputes the non-symplectic index from pairings alone,
/// independently of the divisor criterion.
OracleResult enumerate_index(const CharSubspace& K, u64 budget = 1u << 20);

struct EigenvalueConstraints {
  unsigned m = 0;  // least m >= 0 with F^(-m)(xi) = xi^(-1)
  u64 n = 1;       // multiplicative order of xi
};

/// Computes (m, n) for an eigenvalue and cross-checks the arithmetic
/// relations that hold for m >= 1: ord_n(p) = 2m and n | p^m + 1.
EigenvalueConstraints eigenvalue_constraints(const FieldElement& xi, unsigned sigma);

}  // namespace ssk3::oracle

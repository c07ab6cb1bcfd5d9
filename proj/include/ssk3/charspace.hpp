#pragma once

#include <optional>

#include "ssk3/discform.hpp"
#include "ssk3/strata.hpp"

namespace ssk3::charspace {

using discform::DiscSpacePtr;
using discform::ExtVector;
using ffield::FieldElement;
using fmatrix::FMatrix;

/// Outcome of checking a sigma-row basis matrix against the defining
/// conditions. Each flag is evaluated independently.
struct CharReport {
  bool isotropic = false;       // the row space pairs to zero with itself
  bool characteristic = false;  // K + f(K) has dimension sigma + 1
  bool line = false;            // the intersection of f^i K, i < sigma, is a line
  bool strict = false;          // the 2*sigma translates of that line span everything
  std::optional<ExtVector> line_generator;  // present when line holds, leading coefficient 1

  bool all() const { return isotropic && characteristic && line && strict; }
};

/// Evaluates the conditions for the row space of basis (sigma x 2*sigma).
/// Throws on a rank-deficient basis.
CharReport verify_characteristic(const DiscSpacePtr& space, const FMatrix& basis);

/// The moduli coordinates of a subspace: the raw pairing values a_i and the
/// canonical representative of their orbit under rescalings of the line
/// generator by (p^sigma + 1)-th roots of unity.
struct Psi {
  std::vector<FieldElement> a;
  std::vector<FieldElement> canonical;
};

/// Exponent e(i) with a_i -> xi^e(i) * a_i when the line generator is
/// rescaled by xi of order dividing n = p^sigma + 1 (returned mod n).
u64 psi_twist_exponent(u64 p, unsigned sigma, unsigned i, u64 n);

/// Lexicographically least point of the rescaling orbit of an a-vector;
/// equal canonical vectors mean equal moduli points.
std::vector<FieldElement> canonical_moduli(const DiscSpacePtr& space,
                                           const std::vector<FieldElement>& a);

/// A strictly characteristic sigma-dimensional subspace, stored with its
/// distinguished basis v_1 .. v_(2*sigma) (v_(i+1) = f^(-1)(v_i), pairing
/// b(v_1, v_(sigma+1)) normalized to 1) and cached moduli coordinates.
/// Every constructor re-verifies all defining conditions and fails fast.
///
/// Sources normalize the crystalline-side construction these subspaces
/// model in slightly different ways; nothing here depends on that choice —
/// only on the four conditions verify_characteristic checks.
class CharSubspace {
 public:
  /// Builds from any sigma-row matrix spanning the subspace.
  static CharSubspace from_basis(const DiscSpacePtr& space, const FMatrix& basis);

  /// The subspace with all moduli coordinates zero, built from the
  /// eigenline of the multiplication-by-theta matrix in the trace model.
  static CharSubspace special(const DiscSpacePtr& space);

  const DiscSpacePtr& space() const { return space_; }
  /// Canonical (RREF) basis of the subspace, sigma x 2*sigma.
  const FMatrix& basis() const { return basis_; }
  const std::vector<ExtVector>& distinguished_basis() const { return vbasis_; }
  const std::vector<FieldElement>& a_vector() const { return avec_; }

  /// Pairing matrix in the distinguished basis; asserts the block shape
  /// [[0, A], [A^T, 0]] with A unipotent upper triangular and
  /// A[j][j+i] the (1-j)-th Frobenius power of a_i.
  FMatrix gram_in_vbasis() const;

  Psi psi() const;
  strata::ZeroPattern zero_pattern() const;

 private:
  CharSubspace(DiscSpacePtr space, FMatrix basis, std::vector<ExtVector> vbasis,
               std::vector<FieldElement> avec);

  DiscSpacePtr space_;
  FMatrix basis_;
  std::vector<ExtVector> vbasis_;
  std::vector<FieldElement> avec_;
};

/// Slot-wise zero test of an a-vector.
strata::ZeroPattern zero_pattern(unsigned sigma, const std::vector<FieldElement>& a);

struct SearchOptions {
  u64 seed = 0;
  /// Candidate steps (line generators examined) before giving up.
  u64 budget = 1ull << 26;
  unsigned max_sigma = 2;
};

/// Code-indexed square roots: entry s is the smallest code of an element
/// whose square has code s, or ~0 when s is not a square.
std::vector<u64> build_sqrt_table(const ffield::FieldCtxPtr& ctx);

/// Roots of c2 x^2 + c1 x + c0 (degree >= 1) through the table; agrees
/// with poly_roots on the same polynomial but costs O(1) field operations.
std::vector<FieldElement> quadratic_roots(const FieldElement& c0, const FieldElement& c1,
                                          const FieldElement& c2, const std::vector<u64>& sqrt_table);

/// Scans line generators (1, x_2, ..., x_(2*sigma)) for a subspace whose
/// moduli coordinates match the requested zero pattern. Isotropy conditions
/// are solved one coordinate at a time through poly_roots where univariate.
/// Exhausting the candidate space yields an empty result; exceeding the
/// budget throws.
std::optional<CharSubspace> search_subspace(const DiscSpacePtr& space,
                                            const strata::ZeroPattern& pattern,
                                            SearchOptions opts = {});

}  // namespace ssk3::charspace

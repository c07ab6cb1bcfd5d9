#pragma once

#include <memory>
#include <vector>

#include "ssk3/ffield.hpp"
#include "ssk3/fmatrix.hpp"

namespace ssk3::discform {

using ffield::FieldCtxPtr;
using ffield::FieldElement;
using fmatrix::FMatrix;

struct DiscOptions {
  /// Working extension degree D with 2*sigma | D; 0 means D = 2*sigma.
  unsigned working_degree = 0;
  /// Cap on the number of vectors (or subspaces) an exhaustive scan may visit.
  u64 enumeration_budget = 1ull << 24;
  /// Cap on p^(2*sigma) for the scalar scan inside basis normalization.
  u64 normalization_budget = 1ull << 24;
  bool allow_small_characteristic = false;
};

class DiscSpace;
using DiscSpacePtr = std::shared_ptr<const DiscSpace>;

/// A vector of the extended space: coordinates over the working field in the
/// rational (F_p) basis of a DiscSpace.
class ExtVector {
 public:
  ExtVector(DiscSpacePtr space, std::vector<FieldElement> coords);

  const DiscSpacePtr& space() const { return space_; }
  const std::vector<FieldElement>& coords() const { return c_; }
  const FieldElement& operator[](size_t i) const { return c_[i]; }
  bool is_zero() const;

  friend ExtVector operator+(const ExtVector& a, const ExtVector& b);
  friend ExtVector operator-(const ExtVector& a, const ExtVector& b);
  friend ExtVector operator*(const FieldElement& s, const ExtVector& v);
  friend bool operator==(const ExtVector& a, const ExtVector& b);
  friend bool operator!=(const ExtVector& a, const ExtVector& b);

 private:
  DiscSpacePtr space_;
  std::vector<FieldElement> c_;
};

/// The 2*sigma dimensional quadratic space over F_p of non-split type,
/// realized on the underlying set GF(p^(2*sigma)) with the pairing
/// b(x, y) = Tr(lambda * x * y^(p^sigma)) for a scalar lambda fixed in the
/// degree-sigma subfield. The multiplicative group of norm-one elements
/// then acts by isometries, and non-splitness is certified by counting
/// isotropic vectors rather than assumed.
class DiscSpace : public std::enable_shared_from_this<DiscSpace> {
 public:
  static DiscSpacePtr build(u64 p, unsigned sigma, DiscOptions opts = {});

  u64 p() const { return p_; }
  unsigned sigma() const { return sigma_; }
  unsigned dim() const { return 2 * sigma_; }
  unsigned working_degree() const { return work_->degree(); }
  const DiscOptions& options() const { return opts_; }

  /// GF(p^D), home of all vector coordinates.
  const FieldCtxPtr& work() const { return work_; }
  /// GF(p^(2*sigma)), the model field the Gram matrix is computed in.
  const FieldCtxPtr& model() const { return model_; }

  /// Gram matrix over F_p, entries as residues.
  const std::vector<std::vector<u64>>& gram() const { return gram_; }
  /// The same Gram matrix with entries lifted to the working field.
  const FMatrix& gram_work() const { return gram_work_; }
  const FieldElement& lambda() const { return lambda_; }

  ExtVector vector(std::vector<FieldElement> coords) const;
  ExtVector rational_vector(const std::vector<u64>& residues) const;
  ExtVector basis_vector(unsigned i) const;
  ExtVector zero_vector() const;

  /// Matrix over F_p of multiplication by a model-field element, acting on
  /// the underlying set in the power basis.
  std::vector<std::vector<u64>> mult_matrix(const FieldElement& z) const;

 private:
  DiscSpace(u64 p, unsigned sigma, FieldCtxPtr model, FieldCtxPtr work, DiscOptions opts,
            FieldElement lambda, std::vector<std::vector<u64>> gram, FMatrix gram_work);

  u64 p_;
  unsigned sigma_;
  FieldCtxPtr model_;
  FieldCtxPtr work_;
  DiscOptions opts_;
  FieldElement lambda_;
  std::vector<std::vector<u64>> gram_;
  FMatrix gram_work_;
};

/// b(u, w) = u^T * Gram * w over the working field.
FieldElement bilinear(const ExtVector& u, const ExtVector& w);

/// Coordinatewise p^e-power map (semilinear; fixes rational vectors).
ExtVector frob_semilinear(const ExtVector& x, i64 e);

/// Exact number of x in F_p^(2*sigma) with b(x, x) = 0, the zero vector
/// included. Requires p^(2*sigma) within the enumeration budget.
u64 isotropic_vector_count(const DiscSpace& space);

/// Expected count for the non-split type: p^(2s-1) - p^s + p^(s-1).
u64 non_split_isotropic_count(u64 p, unsigned sigma);

/// Exhaustive scan over echelon forms of dim-dimensional F_p subspaces.
bool has_totally_isotropic_subspace(const DiscSpace& space, unsigned dim);

/// Number of dim-dimensional subspaces of F_p^n (Gaussian binomial),
/// throwing std::overflow_error past 2^62.
u64 subspace_count(u64 p, unsigned n, unsigned dim);

}  // namespace ssk3::discform

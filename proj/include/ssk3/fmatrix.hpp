#pragma once

#include <optional>
#include <vector>

#include "ssk3/ffield.hpp"

namespace ssk3::fmatrix {

using ffield::FieldCtxPtr;
using ffield::FieldElement;

/// Dense matrix over a single field context, row major.
class FMatrix {
 public:
  FMatrix(FieldCtxPtr ctx, size_t rows, size_t cols);
  static FMatrix identity(const FieldCtxPtr& ctx, size_t n);
  static FMatrix from_rows(const FieldCtxPtr& ctx, const std::vector<std::vector<FieldElement>>& rows);

  const FieldCtxPtr& ctx() const { return ctx_; }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }

  FieldElement& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const FieldElement& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  std::vector<FieldElement> row(size_t i) const;
  void set_row(size_t i, const std::vector<FieldElement>& v);

  FMatrix transpose() const;
  FMatrix operator*(const FMatrix& o) const;
  std::vector<FieldElement> mul_vec(const std::vector<FieldElement>& v) const;
  bool operator==(const FMatrix& o) const;

  /// Entrywise p^e-power map.
  FMatrix frobenius_map(i64 e) const;

  /// Reduced row echelon form (deterministic: topmost nonzero pivot per column).
  FMatrix rref() const;
  size_t rank() const;
  /// Basis of {x : M x = 0}, one solution per row, in canonical order.
  FMatrix kernel() const;
  std::optional<FMatrix> inverse() const;
  /// Canonical basis (RREF rows) of the row space.
  FMatrix row_space() const;

  static FMatrix vstack(const FMatrix& top, const FMatrix& bottom);
  /// Canonical basis of rowspace(a) ∩ rowspace(b) (Zassenhaus).
  static FMatrix intersect_row_spaces(const FMatrix& a, const FMatrix& b);

 private:
  FieldCtxPtr ctx_;
  size_t r_, c_;
  std::vector<FieldElement> a_;
};

}  // namespace ssk3::fmatrix
